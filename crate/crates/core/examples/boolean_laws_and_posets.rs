//! Set-algebra laws on a small universe, then divisibility as a partial
//! order and residues as an equivalence relation.

use multispace::foundations::{
    check_boolean_laws, equivalence_classes, hasse_edges, poset_check, poset_extremes, relation_from_labels,
};
use multispace::{BinaryRelation, FiniteUniverse};

fn main() -> multispace::Result<()> {
    let u = FiniteUniverse::new(["a", "b", "c", "d"])?;
    let laws = check_boolean_laws(&u)?;
    println!("{} subsets of a 4-element universe", laws.subsets);
    for l in &laws.laws {
        println!("  {:<24} {}", l.law.label(), if l.holds { "holds" } else { "fails" });
    }

    let nums: Vec<String> = (1..=12).map(|n| n.to_string()).collect();
    let divides = BinaryRelation::from_predicate(FiniteUniverse::new(&nums)?, |a, b| (b + 1) % (a + 1) == 0);
    println!("\ndivisibility on 1..12 is a poset: {}", poset_check(&divides).is_poset());
    let ext = poset_extremes(&divides)?;
    let show = |xs: &[usize]| xs.iter().map(|&x| nums[x].as_str()).collect::<Vec<_>>().join(" ");
    println!("  minimal: {}", show(&ext.minimal));
    println!("  maximal: {}", show(&ext.maximal));
    let covers: Vec<String> = hasse_edges(&divides)
        .into_iter()
        .map(|(a, b)| format!("{}<{}", nums[a], nums[b]))
        .collect();
    println!("  covering pairs: {}", covers.join(" "));

    let mod3 = relation_from_labels(FiniteUniverse::new(&nums)?, |x| (x + 1) % 3);
    let p = equivalence_classes(&mod3)?;
    println!("\nresidues mod 3 split 1..12 into {} classes:", p.classes.len());
    for c in &p.classes {
        println!("  {{{}}}", show(c));
    }
    Ok(())
}
