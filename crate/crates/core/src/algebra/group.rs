use std::collections::BTreeSet;

use crate::algebra::table::{classify_table, OpTable};
use crate::error::{check_size, Error, Result};
use crate::Elem;

/// Subsets of a group view, one bit per local element.
pub type Mask = u128;

pub const GROUP_VIEW_LIMIT: usize = 128;

pub fn popcount(m: Mask) -> usize {
    m.count_ones() as usize
}

pub fn bits(m: Mask) -> impl Iterator<Item = usize> {
    (0..GROUP_VIEW_LIMIT).filter(move |i| m >> i & 1 == 1)
}

/// A finite group carved out of an operation table, re-indexed locally so
/// subsets fit in a bitmask.
#[derive(Debug, Clone)]
pub struct GroupView {
    elems: Vec<Elem>,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupView {
    pub fn new(t: &OpTable, carrier: &[Elem]) -> Result<Self> {
        check_size("group", carrier.len(), GROUP_VIEW_LIMIT)?;
        let restricted = t.restrict(carrier)?;
        let class = classify_table(&restricted)?;
        if !class.kind.is_group() {
            return Err(Error::Contract(format!(
                "`{}` restricted to its carrier is a {}, not a group",
                t.name(),
                class.kind
            )));
        }
        let elems = restricted.domain().to_vec();
        let n = elems.len();
        let local = |x: Elem| elems.binary_search(&x).expect("closed table");
        let mut mul = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = local(restricted.apply(elems[i], elems[j]).expect("total"));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] == x))
            .expect("group has a unit");
        let inverse = (0..n)
            .map(|x| (0..n).find(|&y| mul[x * n + y] == identity).expect("group inverse"))
            .collect();
        Ok(GroupView {
            elems,
            mul,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn identity(&self) -> Elem {
        self.elems[self.identity]
    }

    pub fn identity_local(&self) -> usize {
        self.identity
    }

    pub fn local(&self, x: Elem) -> Option<usize> {
        self.elems.binary_search(&x).ok()
    }

    pub fn global(&self, i: usize) -> Elem {
        self.elems[i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn full(&self) -> Mask {
        if self.order() == GROUP_VIEW_LIMIT {
            Mask::MAX
        } else {
            (1 << self.order()) - 1
        }
    }

    pub fn trivial(&self) -> Mask {
        1 << self.identity
    }

    /// Local mask of the universe elements in `set` that belong to the group.
    pub fn mask_of<'a, I: IntoIterator<Item = &'a Elem>>(&self, set: I) -> Mask {
        set.into_iter()
            .filter_map(|&x| self.local(x))
            .fold(0, |m, i| m | 1 << i)
    }

    pub fn elems_of(&self, m: Mask) -> Vec<Elem> {
        bits(m).map(|i| self.elems[i]).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != self.identity {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    /// Subgroup generated by the elements of `gens`.
    pub fn closure(&self, gens: Mask) -> Mask {
        let mut set = gens | self.trivial();
        let g: Vec<usize> = bits(gens).collect();
        let mut frontier: Vec<usize> = bits(set).collect();
        while let Some(a) = frontier.pop() {
            for &b in &g {
                let c = self.mul(a, b);
                if set >> c & 1 == 0 {
                    set |= 1 << c;
                    frontier.push(c);
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, m: Mask) -> bool {
        m >> self.identity & 1 == 1
            && bits(m).all(|a| m >> self.inv(a) & 1 == 1 && bits(m).all(|b| m >> self.mul(a, b) & 1 == 1))
    }

    /// `n` is normal in `h`: `g n g⁻¹ ⊆ n` for every `g ∈ h`.
    pub fn is_normal_in(&self, n: Mask, h: Mask) -> bool {
        bits(h).all(|g| {
            bits(n).all(|x| {
                let c = self.mul(self.mul(g, x), self.inv(g));
                n >> c & 1 == 1
            })
        })
    }

    /// First `(g, x)` with `g x g⁻¹ ∉ n`.
    pub fn normality_witness(&self, n: Mask, h: Mask) -> Option<(usize, usize)> {
        bits(h).find_map(|g| {
            bits(n)
                .find(|&x| n >> self.mul(self.mul(g, x), self.inv(g)) & 1 == 0)
                .map(|x| (g, x))
        })
    }

    /// All subgroups, found as joins of cyclic subgroups; sorted by size then
    /// mask.
    pub fn subgroups(&self) -> Vec<Mask> {
        self.subgroups_within(self.full())
    }

    pub fn subgroups_within(&self, h: Mask) -> Vec<Mask> {
        let cyclics: BTreeSet<Mask> = bits(h).map(|a| self.closure(1 << a)).collect();
        let mut found: BTreeSet<Mask> = BTreeSet::new();
        found.insert(self.trivial());
        let mut frontier = vec![self.trivial()];
        while let Some(s) = frontier.pop() {
            for &c in &cyclics {
                if c & !s != 0 {
                    let joined = self.closure(s | c);
                    if found.insert(joined) {
                        frontier.push(joined);
                    }
                }
            }
        }
        let mut out: Vec<Mask> = found.into_iter().collect();
        out.sort_by_key(|&m| (popcount(m), m));
        out
    }

    /// Proper normal subgroups of the subgroup `h` that are maximal among
    /// such, so `h/n` is simple.
    pub fn maximal_normal_subgroups(&self, h: Mask) -> Vec<Mask> {
        let normal: Vec<Mask> = self
            .subgroups_within(h)
            .into_iter()
            .filter(|&n| n != h && self.is_normal_in(n, h))
            .collect();
        normal
            .iter()
            .copied()
            .filter(|&n| !normal.iter().any(|&m| m != n && m & n == n))
            .collect()
    }
}

/// Ω(n): number of prime factors counted with multiplicity.
pub fn prime_factor_count(mut n: usize) -> usize {
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            n /= p;
            count += 1;
        }
        p += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::groups;

    #[test]
    fn cyclic_subgroups() {
        let z6 = groups::cyclic(6);
        let g = GroupView::new(&z6.table("+"), &(0..6).collect::<Vec<_>>()).unwrap();
        let orders: Vec<usize> = g.subgroups().into_iter().map(popcount).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert_eq!(g.element_order(1), 6);
        assert_eq!(g.element_order(2), 3);
        let maxn: Vec<usize> = g.maximal_normal_subgroups(g.full()).into_iter().map(popcount).collect();
        assert_eq!(maxn, vec![2, 3]);
    }

    #[test]
    fn s3_has_a_unique_maximal_normal_subgroup() {
        let s3 = groups::symmetric(3);
        let g = GroupView::new(&s3.table("o"), &(0..6).collect::<Vec<_>>()).unwrap();
        assert_eq!(g.subgroups().len(), 6);
        let maxn = g.maximal_normal_subgroups(g.full());
        assert_eq!(maxn.len(), 1);
        assert_eq!(popcount(maxn[0]), 3);
    }

    #[test]
    fn rejects_non_groups() {
        let t = OpTable::from_fn("max", 3, vec![0, 1, 2], |x, y| Some(x.max(y))).unwrap();
        assert!(GroupView::new(&t, &[0, 1, 2]).is_err());
    }

    #[test]
    fn omega() {
        assert_eq!(prime_factor_count(1), 0);
        assert_eq!(prime_factor_count(8), 3);
        assert_eq!(prime_factor_count(12), 3);
        assert_eq!(prime_factor_count(7), 1);
    }
}
