//! Automorphisms of disjoint unions of cyclic groups, with and without
//! permission to swap the named operations.

use multispace::constructions::disjoint_cyclic_union;
use multispace::{automorphisms, AutomorphismOptions};

fn main() -> multispace::Result<()> {
    println!("{:>3} {:>3} {:>14} {:>14}", "m", "k", "fixed ops", "permuted ops");
    for (m, k) in [(2, 2), (3, 2), (3, 3), (4, 2), (5, 2)] {
        let ms = disjoint_cyclic_union(&vec![m; k])?;
        let fixed = automorphisms(&ms, AutomorphismOptions { permute_ops: false })?;
        let free = automorphisms(&ms, AutomorphismOptions { permute_ops: true })?;
        println!("{m:>3} {k:>3} {:>14} {:>14}", fixed.len(), free.len());
    }

    let ms = disjoint_cyclic_union(&[3, 3])?;
    let aut = automorphisms(&ms, AutomorphismOptions { permute_ops: true })?;
    println!("\nthe {} automorphisms of Z3 ⊔ Z3:", aut.len());
    for map in &aut.maps {
        let images: Vec<String> = aut
            .union
            .iter()
            .zip(map)
            .map(|(&x, &y)| format!("{}→{}", ms.name_of(x), ms.name_of(y)))
            .collect();
        println!("  {}", images.join(" "));
    }
    Ok(())
}
