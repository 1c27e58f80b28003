//! Building multi-spaces by gluing: a fan of new elements around a base
//! group, cyclic groups with a shared identity and a partition of Z_n.

use multispace::constructions::{fan_extension, group_union, groups, partition_cyclic, zn_add, NewPairPolicy};
use multispace::multigroup::is_multigroup;
use multispace::FiniteUniverse;

fn summary(title: &str, ms: &multispace::MultiSpace) -> multispace::Result<()> {
    let report = is_multigroup(ms)?;
    println!("{title}: {} elements, multi-group {}", ms.element_union().len(), report.holds);
    for c in ms.components() {
        println!("  {:<4} {}", c.name(), ms.render_set(c.carrier()));
    }
    Ok(())
}

fn main() -> multispace::Result<()> {
    let z3 = groups::cyclic(3);
    let base = z3.table("o");
    let new: Vec<String> = (1..=2).map(|i| format!("h{i}")).collect();
    let absorbing = fan_extension(&FiniteUniverse::numbered(3), &base, &new, &NewPairPolicy::Absorb)?;
    summary("Z3 fanned by two absorbing elements", &absorbing)?;
    let partial = fan_extension(&FiniteUniverse::numbered(3), &base, &new, &NewPairPolicy::UndefinedFill)?;
    summary("Z3 fanned by two inert elements", &partial)?;

    let shared = group_union(&[groups::cyclic(4), groups::cyclic(6)], true, "+")?;
    summary("Z4 and Z6 sharing their identity", &shared)?;

    let symbols = FiniteUniverse::numbered(6);
    let split = partition_cyclic(&symbols, &zn_add(6), &[vec![0, 2, 4], vec![0, 1, 3, 5]], &[0])?;
    summary("Z6 split into two blocks around 0", &split)?;
    Ok(())
}
