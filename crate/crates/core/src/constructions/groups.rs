//! Cayley tables of small groups, indexed `0..order` with the identity at 0.

use crate::algebra::table::OpTable;
use crate::Elem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGroup {
    label: String,
    order: usize,
    mul: Vec<usize>,
}

impl CayleyGroup {
    fn from_fn(label: impl Into<String>, order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mul = (0..order * order).map(|k| f(k / order, k % order)).collect();
        CayleyGroup {
            label: label.into(),
            order,
            mul,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn identity(&self) -> usize {
        (0..self.order)
            .find(|&e| (0..self.order).all(|x| self.mul(e, x) == x))
            .expect("group has an identity")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Table over a universe of exactly `order` elements.
    pub fn table(&self, op: &str) -> OpTable {
        let elems: Vec<Elem> = (0..self.order).collect();
        self.table_on(op, self.order, &elems)
    }

    /// Table whose local element `i` is the universe element `elems[i]`.
    pub fn table_on(&self, op: &str, universe_len: usize, elems: &[Elem]) -> OpTable {
        assert_eq!(elems.len(), self.order, "one universe element per group element");
        let mut domain: Vec<(Elem, usize)> = elems.iter().copied().zip(0..).collect();
        domain.sort_unstable();
        let entries = domain
            .iter()
            .flat_map(|&(_, a)| domain.iter().map(move |&(_, b)| (a, b)))
            .map(|(a, b)| Some(elems[self.mul(a, b)]))
            .collect();
        OpTable::new(op, universe_len, domain.iter().map(|d| d.0).collect(), entries)
            .expect("well-formed Cayley table")
    }
}

pub fn cyclic(n: usize) -> CayleyGroup {
    assert!(n >= 1);
    CayleyGroup::from_fn(format!("Z{n}"), n, |a, b| (a + b) % n)
}

pub fn direct_product(g: &CayleyGroup, h: &CayleyGroup) -> CayleyGroup {
    let m = h.order;
    CayleyGroup::from_fn(format!("{}x{}", g.label, h.label), g.order * m, |a, b| {
        g.mul(a / m, b / m) * m + h.mul(a % m, b % m)
    })
}

/// Product of cyclic groups of the given orders.
pub fn abelian(factors: &[usize]) -> CayleyGroup {
    let mut g = cyclic(factors.first().copied().unwrap_or(1));
    for &f in factors.iter().skip(1) {
        g = direct_product(&g, &cyclic(f));
    }
    if factors.len() > 1 {
        g.label = factors.iter().map(|f| format!("Z{f}")).collect::<Vec<_>>().join("x");
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// Permutation group on the given permutations, composed as `(p∘q)(i) = p(q(i))`.
fn permutation_group(label: String, perms: Vec<Vec<usize>>) -> CayleyGroup {
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    CayleyGroup::from_fn(label, perms.len(), |a, b| {
        let c: Vec<usize> = perms[b].iter().map(|&i| perms[a][i]).collect();
        index(&c)
    })
}

pub fn symmetric(n: usize) -> CayleyGroup {
    permutation_group(format!("S{n}"), permutations(n))
}

pub fn alternating(n: usize) -> CayleyGroup {
    let perms = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    permutation_group(format!("A{n}"), perms)
}

/// Symmetries of the regular n-gon, order 2n; `r^i s^j` is `i + n·j`.
pub fn dihedral(n: usize) -> CayleyGroup {
    CayleyGroup::from_fn(format!("D{n}"), 2 * n, |a, b| {
        let (i1, j1) = (a % n, a / n);
        let (i2, j2) = (b % n, b / n);
        let i = if j1 == 0 { i1 + i2 } else { i1 + n - i2 } % n;
        i + n * (j1 ^ j2)
    })
}

/// Dicyclic group of order 4m: `a^{2m} = 1`, `x² = a^m`, `x a x⁻¹ = a⁻¹`;
/// `a^i x^j` is `i + 2m·j`.
pub fn dicyclic(m: usize) -> CayleyGroup {
    let n = 2 * m;
    let label = if m == 2 { "Q8".to_string() } else { format!("Dic{m}") };
    CayleyGroup::from_fn(label, 2 * n, |a, b| {
        let (i1, j1) = (a % n, a / n);
        let (i2, j2) = (b % n, b / n);
        match (j1, j2) {
            (0, _) => (i1 + i2) % n + n * j2,
            (_, 0) => (i1 + n - i2) % n + n,
            _ => (i1 + n - i2 + m) % n,
        }
    })
}

/// One representative of every isomorphism class of groups of order ≤ 8.
pub fn groups_up_to_order_8() -> Vec<CayleyGroup> {
    let mut out: Vec<CayleyGroup> = (1..=8).map(cyclic).collect();
    out.push(abelian(&[2, 2]));
    out.push(abelian(&[2, 4]));
    out.push(abelian(&[2, 2, 2]));
    out.push(symmetric(3));
    out.push(dihedral(4));
    out.push(dicyclic(2));
    out
}

/// One representative of every isomorphism class of groups of order ≤ 12.
pub fn groups_up_to_order_12() -> Vec<CayleyGroup> {
    let mut out = groups_up_to_order_8();
    out.extend((9..=12).map(cyclic));
    out.push(abelian(&[3, 3]));
    out.push(dihedral(5));
    out.push(abelian(&[2, 6]));
    out.push(alternating(4));
    out.push(dihedral(6));
    out.push(dicyclic(3));
    out
}

/// Looks a group up by label: `Z{n}` for any `n ≥ 1`, otherwise a member of
/// the order-12 corpus.
pub fn by_label(label: &str) -> Option<CayleyGroup> {
    if let Some(n) = label.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
        return (n >= 1).then(|| cyclic(n));
    }
    groups_up_to_order_12().into_iter().find(|g| g.label() == label)
}

/// Invariant-factor decompositions of every abelian group of order ≤ 16.
pub fn abelian_factorizations_up_to_16() -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1..=16).map(|n| vec![n]).collect();
    out.extend([
        vec![2, 2],
        vec![2, 4],
        vec![2, 2, 2],
        vec![3, 3],
        vec![2, 6],
        vec![2, 8],
        vec![4, 4],
        vec![2, 2, 4],
        vec![2, 2, 2, 2],
    ]);
    out.sort_by_key(|f| (f.iter().product::<usize>(), f.len()));
    out
}
