//! Multi-vector spaces over GF(p): greedy bases, and where the
//! inclusion-exclusion count of dimensions stops matching them.

use multispace::multivector::{additive_formula_check, dim_formula, greedy_basis, AmbientSpace, MultiVectorSpace};

fn space(p: u32, n: usize, comps: &[(&str, &[&[u32]])]) -> multispace::Result<MultiVectorSpace> {
    let comps = comps
        .iter()
        .map(|(name, gens)| (name.to_string(), gens.iter().map(|g| g.to_vec()).collect()))
        .collect();
    MultiVectorSpace::new(AmbientSpace::new(p, n)?, comps)
}

fn show(title: &str, ms: &MultiVectorSpace) -> multispace::Result<()> {
    let d = dim_formula(ms)?;
    println!("{title}");
    println!("  greedy basis {:?}", greedy_basis(ms));
    println!("  inclusion-exclusion {} vs basis size {}{}", d.formula_value, d.greedy_value, if d.agree { "" } else { "  (disagree)" });
    Ok(())
}

fn main() -> multispace::Result<()> {
    let planes = space(2, 3, &[("V1", &[&[1, 0, 0], &[0, 1, 0]]), ("V2", &[&[0, 1, 0], &[0, 0, 1]])])?;
    show("two planes in GF(2)^3", &planes)?;

    let lines = space(2, 2, &[("L1", &[&[1, 0]]), ("L2", &[&[0, 1]]), ("L3", &[&[1, 1]])])?;
    show("three lines in GF(2)^2", &lines)?;

    let v1 = space(3, 3, &[("V1", &[&[1, 0, 0], &[0, 1, 0]])])?;
    let v2 = space(3, 3, &[("V2", &[&[0, 1, 0], &[0, 0, 1]])])?;
    let a = additive_formula_check(&v1, &v2)?;
    println!("two planes in GF(3)^3");
    println!(
        "  dim V1 {} + dim V2 {} = dim union {} + dim intersection {}: {}",
        a.dim_v1, a.dim_v2, a.dim_union, a.dim_intersection, a.holds
    );
    Ok(())
}
