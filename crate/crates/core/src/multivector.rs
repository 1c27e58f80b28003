//! Multi-vector spaces realized as unions of subspaces of one ambient
//! space `GF(p)^n`; all component operations agree with the ambient ones.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{check_size, Error, Result};

pub type Vector = Vec<u32>;

/// Ambient spaces are enumerated explicitly, so `p^n` is capped.
pub const AMBIENT_LIMIT: usize = 1 << 16;
pub const DIM_FORMULA_LIMIT: usize = 5;
/// Cap on `p^k` scalar tuples scanned by the dependence search.
pub const SCALAR_SCAN_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AmbientSpace {
    p: u32,
    n: usize,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl AmbientSpace {
    pub fn new(p: u32, n: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        let size = (p as usize).checked_pow(n as u32).unwrap_or(usize::MAX);
        check_size("ambient space", size, AMBIENT_LIMIT)?;
        Ok(AmbientSpace { p, n })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> Vector {
        vec![0; self.n]
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = self.zero();
        v[i] = 1;
        v
    }

    pub fn check(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.n || v.iter().any(|&c| c >= self.p) {
            return Err(Error::Input(format!(
                "{v:?} is not a vector of GF({})^{}",
                self.p, self.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vector {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn scale(&self, k: u32, a: &[u32]) -> Vector {
        a.iter().map(|x| k * x % self.p).collect()
    }

    fn inv(&self, a: u32) -> u32 {
        let (mut base, mut e, mut acc) = (a as u64, self.p as u64 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        acc as u32
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self, vectors: &[Vector]) -> usize {
        let mut rows: Vec<Vector> = vectors.to_vec();
        let mut rank = 0;
        for col in 0..self.n {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = self.inv(rows[rank][col]);
            rows[rank] = self.scale(inv, &rows[rank]);
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let f = self.p - rows[r][col];
                    let scaled = self.scale(f, &rows[rank]);
                    rows[r] = self.add(&rows[r], &scaled);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Every linear combination of `gens`.
    pub fn span(&self, gens: &[Vector]) -> BTreeSet<Vector> {
        let mut set = BTreeSet::from([self.zero()]);
        for g in gens {
            let mut next = set.clone();
            for v in &set {
                for k in 1..self.p {
                    next.insert(self.add(v, &self.scale(k, g)));
                }
            }
            set = next;
        }
        set
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VectorComponent {
    pub name: String,
    pub generators: Vec<Vector>,
    pub vectors: BTreeSet<Vector>,
    /// Nominal operation labels; they act as the ambient operations.
    pub add_label: String,
    pub scalar_label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiVectorSpace {
    ambient: AmbientSpace,
    components: Vec<VectorComponent>,
}

impl MultiVectorSpace {
    /// Each component is the span of its generators; component `i` gets the
    /// operation labels `+{i}` and `.{i}`.
    pub fn new(ambient: AmbientSpace, generators: Vec<(String, Vec<Vector>)>) -> Result<Self> {
        let mut components = Vec::with_capacity(generators.len());
        for (i, (name, gens)) in generators.into_iter().enumerate() {
            for g in &gens {
                ambient.check(g)?;
            }
            if components.iter().any(|c: &VectorComponent| c.name == name) {
                return Err(Error::Input(format!("component `{name}` declared twice")));
            }
            components.push(VectorComponent {
                name,
                vectors: ambient.span(&gens),
                generators: gens,
                add_label: format!("+{}", i + 1),
                scalar_label: format!(".{}", i + 1),
            });
        }
        Ok(MultiVectorSpace { ambient, components })
    }

    pub fn ambient(&self) -> &AmbientSpace {
        &self.ambient
    }

    pub fn components(&self) -> &[VectorComponent] {
        &self.components
    }

    pub fn union(&self) -> BTreeSet<Vector> {
        self.components.iter().flat_map(|c| c.vectors.iter().cloned()).collect()
    }

    pub fn in_union(&self, v: &[u32]) -> bool {
        self.components.iter().any(|c| c.vectors.contains(v))
    }

    /// `α₁·a₁ +̇ α₂·a₂ +̇ …` folded left to right; undefined when an operand
    /// lies outside every component.
    pub fn eval_combination(&self, scalars: &[u32], vectors: &[Vector]) -> Option<Vector> {
        if vectors.iter().any(|v| !self.in_union(v)) {
            return None;
        }
        Some(
            scalars
                .iter()
                .zip(vectors)
                .fold(self.ambient.zero(), |acc, (&k, v)| {
                    self.ambient.add(&acc, &self.ambient.scale(k, v))
                }),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Independence {
    /// Every chain exists and only the zero tuple gives the zero vector.
    AllChainsDefined,
    /// The chains do not exist.
    ChainsUndefined,
    /// Lexicographically least non-zero scalar tuple giving zero.
    Dependent(Vec<u32>),
}

impl Independence {
    pub fn is_independent(&self) -> bool {
        !matches!(self, Independence::Dependent(_))
    }
}

/// Exhaustive scan of all `p^k` scalar tuples in lexicographic order.
pub fn linearly_independent(vectors: &[Vector], ms: &MultiVectorSpace) -> Result<Independence> {
    for v in vectors {
        ms.ambient.check(v)?;
    }
    let p = ms.ambient.p as usize;
    let tuples = p.checked_pow(vectors.len() as u32).unwrap_or(usize::MAX);
    check_size("scalar tuple scan", tuples, SCALAR_SCAN_LIMIT)?;
    if vectors.iter().any(|v| !ms.in_union(v)) {
        return Ok(Independence::ChainsUndefined);
    }
    let zero = ms.ambient.zero();
    let k = vectors.len();
    let mut scalars = vec![0u32; k];
    for t in 1..tuples {
        let mut rest = t;
        for slot in scalars.iter_mut().rev() {
            *slot = (rest % p) as u32;
            rest /= p;
        }
        if ms.eval_combination(&scalars, vectors).as_ref() == Some(&zero) {
            return Ok(Independence::Dependent(scalars));
        }
    }
    Ok(Independence::AllChainsDefined)
}

/// Union of the components' own bases, each reduced from its generators.
pub fn component_bases(ms: &MultiVectorSpace) -> Vec<Vector> {
    let mut out = Vec::new();
    for c in &ms.components {
        let mut basis: Vec<Vector> = Vec::new();
        for g in &c.generators {
            let mut trial = basis.clone();
            trial.push(g.clone());
            if ms.ambient.rank(&trial) == trial.len() {
                basis = trial;
            }
        }
        for b in basis {
            if !out.contains(&b) {
                out.push(b);
            }
        }
    }
    out
}

/// Starts from `delta` and drops vectors in order while what remains still
/// spans the union and the set is still dependent.
pub fn greedy_reduce(ms: &MultiVectorSpace, mut delta: Vec<Vector>) -> Vec<Vector> {
    let a = &ms.ambient;
    let target = a.rank(&delta);
    let mut i = 0;
    while i < delta.len() {
        if a.rank(&delta) == delta.len() {
            break;
        }
        let mut without = delta.clone();
        without.remove(i);
        if a.rank(&without) == target {
            delta = without;
        } else {
            i += 1;
        }
    }
    delta
}

pub fn greedy_basis(ms: &MultiVectorSpace) -> Vec<Vector> {
    greedy_reduce(ms, component_bases(ms))
}

/// Greedy reduction from a randomly ordered starting set.
pub fn greedy_basis_shuffled<R: Rng>(ms: &MultiVectorSpace, rng: &mut R) -> Vec<Vector> {
    let mut delta = component_bases(ms);
    delta.shuffle(rng);
    greedy_reduce(ms, delta)
}

/// Grows an independent set by scanning the union in random order.
pub fn maximal_independent_subset<R: Rng>(ms: &MultiVectorSpace, rng: &mut R) -> Vec<Vector> {
    let mut pool: Vec<Vector> = ms.union().into_iter().collect();
    pool.shuffle(rng);
    let mut chosen: Vec<Vector> = Vec::new();
    for v in pool {
        chosen.push(v);
        if ms.ambient.rank(&chosen) < chosen.len() {
            chosen.pop();
        }
    }
    chosen
}

/// Every union vector is a combination of `basis`.
pub fn spans_union(ms: &MultiVectorSpace, basis: &[Vector]) -> bool {
    let span = ms.ambient.span(basis);
    ms.union().iter().all(|v| span.contains(v))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubspaceVerdict {
    pub holds: bool,
    /// `(a, b, α)` with `α·a +̇ b` outside the subset.
    pub witness: Option<(Vector, Vector, u32)>,
}

/// Closure of `α·a +̇ b` inside each parent component, against the
/// componentwise test that each intersection is a subspace (its size is
/// `p^rank`).
pub fn is_multivector_subspace(sub: &[BTreeSet<Vector>], parent: &MultiVectorSpace) -> Result<SubspaceVerdict> {
    let a = &parent.ambient;
    let set: BTreeSet<Vector> = sub.iter().flatten().cloned().collect();
    if let Some(v) = set.iter().find(|v| !parent.in_union(v)) {
        return Err(Error::Input(format!("{v:?} is not in the parent union")));
    }
    let mut witness = None;
    'comps: for c in &parent.components {
        let inside: Vec<&Vector> = set.iter().filter(|v| c.vectors.contains(*v)).collect();
        for x in &inside {
            for y in &inside {
                for k in 0..a.p {
                    let r = a.add(&a.scale(k, x), y);
                    if !set.contains(&r) {
                        witness = Some(((*x).clone(), (*y).clone(), k));
                        break 'comps;
                    }
                }
            }
        }
    }
    let componentwise = parent.components.iter().all(|c| {
        let inside: Vec<Vector> = set.iter().filter(|v| c.vectors.contains(*v)).cloned().collect();
        inside.is_empty() || inside.len() == (a.p as usize).pow(a.rank(&inside) as u32)
    });
    if componentwise != witness.is_none() {
        return Err(Error::Consistency(
            "closure and componentwise subspace tests disagree".into(),
        ));
    }
    Ok(SubspaceVerdict {
        holds: componentwise,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimReport {
    pub formula_value: i64,
    pub greedy_value: usize,
    pub agree: bool,
    /// `(indices, dim ∩)` for every non-empty index subset.
    pub terms: Vec<(Vec<usize>, usize)>,
}

/// Inclusion–exclusion over the dimensions of all intersections, beside the
/// greedy basis size. For three or more components the two can differ.
pub fn dim_formula(ms: &MultiVectorSpace) -> Result<DimReport> {
    let k = ms.components.len();
    check_size("component count", k, DIM_FORMULA_LIMIT)?;
    let mut formula = 0i64;
    let mut terms = Vec::new();
    for mask in 1u32..1 << k {
        let idx: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let mut inter = ms.components[idx[0]].vectors.clone();
        for &i in &idx[1..] {
            inter = inter.intersection(&ms.components[i].vectors).cloned().collect();
        }
        let d = ms.ambient.rank(&inter.into_iter().collect::<Vec<_>>());
        let sign = if idx.len() % 2 == 1 { 1 } else { -1 };
        formula += sign * d as i64;
        terms.push((idx, d));
    }
    let greedy = greedy_basis(ms).len();
    Ok(DimReport {
        formula_value: formula,
        greedy_value: greedy,
        agree: formula == greedy as i64,
        terms,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdditiveReport {
    pub dim_v1: usize,
    pub dim_v2: usize,
    pub dim_union: usize,
    pub dim_intersection: usize,
    pub holds: bool,
}

/// `dim(V₁ ∪ V₂) = dim V₁ + dim V₂ − dim(V₁ ∩ V₂)` with every dimension a
/// greedy basis size; the intersection has components `V₁ᵢ ∩ V₂ⱼ`.
pub fn additive_formula_check(v1: &MultiVectorSpace, v2: &MultiVectorSpace) -> Result<AdditiveReport> {
    if v1.ambient != v2.ambient {
        return Err(Error::Shape("the two spaces have different ambients".into()));
    }
    let a = v1.ambient;
    let basis_of = |set: &BTreeSet<Vector>| -> Vec<Vector> {
        let mut b: Vec<Vector> = Vec::new();
        for v in set {
            b.push(v.clone());
            if a.rank(&b) < b.len() {
                b.pop();
            }
        }
        b
    };
    let both: Vec<(String, Vec<Vector>)> = v1
        .components
        .iter()
        .chain(&v2.components)
        .enumerate()
        .map(|(i, c)| (format!("U{}", i + 1), c.generators.clone()))
        .collect();
    let union = MultiVectorSpace::new(a, both)?;
    let mut inter = Vec::new();
    for c1 in &v1.components {
        for c2 in &v2.components {
            let set: BTreeSet<Vector> = c1.vectors.intersection(&c2.vectors).cloned().collect();
            inter.push((format!("I{}", inter.len() + 1), basis_of(&set)));
        }
    }
    let inter = MultiVectorSpace::new(a, inter)?;
    let (d1, d2) = (greedy_basis(v1).len(), greedy_basis(v2).len());
    let (du, di) = (greedy_basis(&union).len(), greedy_basis(&inter).len());
    Ok(AdditiveReport {
        dim_v1: d1,
        dim_v2: d2,
        dim_union: du,
        dim_intersection: di,
        holds: du + di == d1 + d2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(p: u32, n: usize, comps: Vec<Vec<Vector>>) -> MultiVectorSpace {
        let a = AmbientSpace::new(p, n).unwrap();
        MultiVectorSpace::new(
            a,
            comps.into_iter().enumerate().map(|(i, g)| (format!("V{}", i + 1), g)).collect(),
        )
        .unwrap()
    }

    fn three_lines() -> MultiVectorSpace {
        space(2, 2, vec![vec![vec![1, 0]], vec![vec![0, 1]], vec![vec![1, 1]]])
    }

    #[test]
    fn rank_and_span() {
        let a = AmbientSpace::new(3, 3).unwrap();
        assert_eq!(a.rank(&[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]]), 2);
        assert_eq!(a.span(&[vec![1, 0, 0], vec![0, 1, 0]]).len(), 9);
        assert!(AmbientSpace::new(4, 2).is_err());
    }

    #[test]
    fn independence() {
        let ms = space(2, 3, vec![vec![vec![1, 0, 0], vec![0, 1, 0]]]);
        let r = linearly_independent(&[vec![1, 0, 0], vec![0, 1, 0]], &ms).unwrap();
        assert_eq!(r, Independence::AllChainsDefined);
        let lines = three_lines();
        let r = linearly_independent(&[vec![1, 0], vec![0, 1], vec![1, 1]], &lines).unwrap();
        assert_eq!(r, Independence::Dependent(vec![1, 1, 1]));
        assert!(linearly_independent(&[], &lines).unwrap().is_independent());
        let r = linearly_independent(&[vec![0, 0, 1]], &ms).unwrap();
        assert_eq!(r, Independence::ChainsUndefined);
    }

    #[test]
    fn bases() {
        let two = space(2, 2, vec![vec![vec![1, 0]], vec![vec![0, 1]]]);
        assert_eq!(greedy_basis(&two), vec![vec![1, 0], vec![0, 1]]);
        let lines = three_lines();
        let b = greedy_basis(&lines);
        assert_eq!(b.len(), 2);
        assert!(spans_union(&lines, &b));
        let one = space(3, 3, vec![vec![vec![1, 1, 0], vec![0, 1, 1]]]);
        assert_eq!(greedy_basis(&one).len(), 2);
    }

    #[test]
    fn subspaces() {
        let plane = space(2, 3, vec![vec![vec![1, 0, 0], vec![0, 1, 0]]]);
        let zero = BTreeSet::from([vec![0, 0, 0]]);
        assert!(is_multivector_subspace(&[zero], &plane).unwrap().holds);
        let line = BTreeSet::from([vec![0, 0, 0], vec![1, 0, 0]]);
        assert!(is_multivector_subspace(&[line], &plane).unwrap().holds);
        let broken = BTreeSet::from([vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0]]);
        let v = is_multivector_subspace(&[broken], &plane).unwrap();
        assert!(!v.holds && v.witness.is_some());
    }

    #[test]
    fn dimension_formula() {
        let two_planes = space(2, 3, vec![
            vec![vec![1, 0, 0], vec![0, 1, 0]],
            vec![vec![0, 1, 0], vec![0, 0, 1]],
        ]);
        let r = dim_formula(&two_planes).unwrap();
        assert_eq!((r.formula_value, r.greedy_value, r.agree), (3, 3, true));
        let r = dim_formula(&three_lines()).unwrap();
        assert_eq!((r.formula_value, r.greedy_value, r.agree), (3, 2, false));
    }

    #[test]
    fn additive() {
        let a = space(3, 3, vec![vec![vec![1, 0, 0], vec![0, 1, 0]]]);
        let b = space(3, 3, vec![vec![vec![0, 1, 0], vec![0, 0, 1]]]);
        let r = additive_formula_check(&a, &b).unwrap();
        assert_eq!((r.dim_v1, r.dim_v2, r.dim_intersection, r.dim_union), (2, 2, 1, 3));
        assert!(r.holds);
        assert!(additive_formula_check(&a, &a).unwrap().holds);
        let l1 = space(2, 3, vec![vec![vec![1, 0, 0]]]);
        let l2 = space(2, 3, vec![vec![vec![0, 1, 0]]]);
        let r = additive_formula_check(&l1, &l2).unwrap();
        assert_eq!((r.dim_union, r.dim_intersection), (2, 0));
    }
}
