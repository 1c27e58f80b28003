//! Multi-ideal chains and idempotent decompositions of Z_n.

use multispace::constructions::{ring_union, zn_ring};
use multispace::multiring::{decompose_artin, idempotents, is_multiring, multiideal_chain};

fn main() -> multispace::Result<()> {
    for n in [6, 10, 12] {
        let ms = zn_ring(n)?;
        let name = format!("Z{n}");
        let e = idempotents(&ms, &name)?;
        let chains = multiideal_chain(&ms, &[name.clone()])?;
        println!("{name}: idempotents {}", ms.render_set(&e.elements));
        println!("  {} maximal ideal chains, lengths {:?}", chains.chain_count, chains.lengths);
        let d = decompose_artin(&ms)?;
        for c in &d.components {
            let pieces: Vec<String> = c.pieces.iter().map(|p| ms.render_set(&p.elements)).collect();
            println!("  {name} = {}", pieces.join(" ⊕ "));
        }
        println!("  verified: {}", d.verified());
    }

    let ms = ring_union(&[4, 6], true)?;
    let report = is_multiring(&ms)?;
    println!("\nZ4 and Z6 sharing their zero form a multi-ring: {}", report.holds);
    Ok(())
}
