//! Maximal normal series of multi-groups: every chain through a union of
//! groups, and the cosets of a sub-multi-group.

use multispace::constructions::{group_union, groups};
use multispace::multigroup::{coset_partition, maximal_normal_series, SubsetView};

fn main() -> multispace::Result<()> {
    for g in [groups::cyclic(12), groups::abelian(&[2, 6]), groups::dihedral(4), groups::alternating(4)] {
        let label = g.label().to_string();
        let ms = group_union(&[g], false, "+")?;
        let s = maximal_normal_series(&ms, &["+1".to_string()])?;
        println!("{label}: {} maximal chains, lengths {:?}", s.chain_count, s.lengths);
    }

    let ms = group_union(&[groups::cyclic(4), groups::cyclic(6)], true, "+")?;
    let s = maximal_normal_series(&ms, &["+1".to_string(), "+2".to_string()])?;
    println!("\nZ4 and Z6 sharing an identity, reduced in that order:");
    println!("  {} chains, lengths {:?}", s.chain_count, s.lengths);
    if let Some(chain) = s.chains.first() {
        for (level, op) in chain.levels.iter().zip(std::iter::once("").chain(chain.step_ops.iter().map(String::as_str))) {
            println!("  {op:>3} {}", ms.render_set(level));
        }
    }

    let sub = SubsetView::spanning(&ms, ms.universe().lookup_all(&["e", "g1_2", "g2_3"])?)?;
    let cosets = coset_partition(&ms, &sub)?;
    println!("\ncosets of {}:", ms.render_set(sub.elements()));
    for c in &cosets.partition {
        println!("  {} ↦ {}", ms.name_of(c.representative), ms.render_set(&c.elements));
    }
    Ok(())
}
