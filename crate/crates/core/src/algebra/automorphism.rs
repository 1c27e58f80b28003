use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::space::MultiSpace;
use crate::algebra::table::OpTable;
use crate::error::{check_size, Result};
use crate::Elem;

pub const AUTOMORPHISM_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AutomorphismOptions {
    /// Also accept `σ` that carries operation `×_i` onto another operation
    /// `×_π(i)`; with this off every named operation is preserved.
    pub permute_ops: bool,
}

/// Distinct element permutations found by the search, each stored as a full
/// map over the universe (identity off the element union).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Automorphisms {
    pub union: Vec<Elem>,
    pub maps: Vec<Vec<Elem>>,
    pub permute_ops: bool,
}

impl Automorphisms {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn contains_identity(&self) -> bool {
        self.maps
            .iter()
            .any(|m| m.iter().enumerate().all(|(i, &x)| i == x))
    }

    pub fn closed_under_composition(&self) -> bool {
        let set: BTreeSet<&Vec<Elem>> = self.maps.iter().collect();
        self.maps.iter().all(|a| {
            self.maps.iter().all(|b| {
                let c: Vec<Elem> = b.iter().map(|&x| a[x]).collect();
                set.contains(&c)
            })
        })
    }

    pub fn closed_under_inverse(&self) -> bool {
        let set: BTreeSet<&Vec<Elem>> = self.maps.iter().collect();
        self.maps.iter().all(|a| {
            let mut inv = vec![0; a.len()];
            for (i, &x) in a.iter().enumerate() {
                inv[x] = i;
            }
            set.contains(&inv)
        })
    }
}

type Fingerprint = Vec<(bool, usize, usize, bool, bool, bool, usize, usize)>;

fn fingerprint_under(t: &OpTable, x: Elem, union: &[Elem]) -> (bool, usize, usize, bool, bool, bool, usize, usize) {
    let row = union.iter().filter(|&&y| t.is_defined(x, y)).count();
    let col = union.iter().filter(|&&y| t.is_defined(y, x)).count();
    let left_unit = t.in_domain(x) && union.iter().all(|&y| !t.in_domain(y) || t.apply(x, y) == Some(y));
    let right_unit = t.in_domain(x) && union.iter().all(|&y| !t.in_domain(y) || t.apply(y, x) == Some(y));
    let idempotent = t.apply(x, x) == Some(x);
    // Shape of the right-power sequence x, x∘x, (x∘x)∘x, ...
    let mut seen = vec![x];
    let (len, back) = loop {
        match t.apply(*seen.last().expect("non-empty"), x) {
            None => break (seen.len(), 0),
            Some(p) => {
                if let Some(pos) = seen.iter().position(|&s| s == p) {
                    break (seen.len(), seen.len() - pos);
                }
                seen.push(p);
            }
        }
    };
    (t.in_domain(x), row, col, left_unit, right_unit, idempotent, len, back)
}

fn op_permutations(ms: &MultiSpace, union: &[Elem], allow: bool) -> Vec<Vec<usize>> {
    let n = ms.ops().len();
    if !allow {
        return vec![(0..n).collect()];
    }
    let sig: Vec<(usize, usize)> = ms
        .ops()
        .iter()
        .map(|t| {
            let dom = union.iter().filter(|&&x| t.in_domain(x)).count();
            let defined = union
                .iter()
                .flat_map(|&x| union.iter().map(move |&y| (x, y)))
                .filter(|&(x, y)| t.is_defined(x, y))
                .count();
            (dom, defined)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        sig: &[(usize, usize)],
        cur: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = cur.len();
        if i == sig.len() {
            out.push(cur.clone());
            return;
        }
        for j in 0..sig.len() {
            if !used[j] && sig[j] == sig[i] {
                used[j] = true;
                cur.push(j);
                rec(sig, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    rec(&sig, &mut cur, &mut used, &mut out);
    out
}

struct Search<'a> {
    ops: &'a [OpTable],
    pi: &'a [usize],
    union: &'a [Elem],
    candidates: Vec<Vec<usize>>,
    sigma: Vec<Option<Elem>>,
    used: Vec<bool>,
    found: &'a mut BTreeSet<Vec<Elem>>,
    universe_len: usize,
}

impl Search<'_> {
    /// Images of a product: `σ(c)` if `c` is already mapped, `c` itself off
    /// the union, `None` while still unknown.
    fn image(&self, c: Elem) -> Option<Option<Elem>> {
        if self.union.binary_search(&c).is_ok() {
            self.sigma[c].map(Some)
        } else {
            Some(Some(c))
        }
    }

    fn consistent(&self, assigned: &[Elem]) -> bool {
        let x = *assigned.last().expect("non-empty");
        for &y in assigned {
            for (a, b) in [(x, y), (y, x)] {
                let (sa, sb) = (self.sigma[a].expect("assigned"), self.sigma[b].expect("assigned"));
                for (i, t) in self.ops.iter().enumerate() {
                    let target = &self.ops[self.pi[i]];
                    match (t.apply(a, b), target.apply(sa, sb)) {
                        (None, None) => {}
                        (Some(c), Some(d)) => {
                            if let Some(Some(img)) = self.image(c) {
                                if img != d {
                                    return false;
                                }
                            }
                        }
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize) {
        if depth == self.union.len() {
            if self.consistent_full() {
                let mut map: Vec<Elem> = (0..self.universe_len).collect();
                for &x in self.union {
                    map[x] = self.sigma[x].expect("complete");
                }
                self.found.insert(map);
            }
            return;
        }
        let x = self.union[depth];
        for ci in 0..self.candidates[depth].len() {
            let img = self.candidates[depth][ci];
            if self.used[img] {
                continue;
            }
            self.used[img] = true;
            self.sigma[x] = Some(img);
            if self.consistent(&self.union[..=depth]) {
                self.run(depth + 1);
            }
            self.sigma[x] = None;
            self.used[img] = false;
        }
    }

    fn consistent_full(&self) -> bool {
        self.union.iter().all(|&a| {
            self.union.iter().all(|&b| {
                let (sa, sb) = (self.sigma[a].expect("complete"), self.sigma[b].expect("complete"));
                self.ops.iter().enumerate().all(|(i, t)| {
                    let target = &self.ops[self.pi[i]];
                    match (t.apply(a, b), target.apply(sa, sb)) {
                        (None, None) => true,
                        (Some(c), Some(d)) => self.image(c) == Some(Some(d)),
                        _ => false,
                    }
                })
            })
        })
    }
}

/// All bijections `σ` of the element union with `σ(x×y) = σ(x)×'σ(y)` for
/// every operation and every defined product, where `×'` is `×` itself or,
/// with [`AutomorphismOptions::permute_ops`], its image under an operation
/// permutation. Defined pairs must map to defined pairs and undefined to
/// undefined. Output is sorted and duplicate-free.
pub fn automorphisms(ms: &MultiSpace, opts: AutomorphismOptions) -> Result<Automorphisms> {
    let union = ms.element_union();
    check_size("element union", union.len(), AUTOMORPHISM_LIMIT)?;
    let ops = ms.ops();
    let prints: Vec<Fingerprint> = union
        .iter()
        .map(|&x| ops.iter().map(|t| fingerprint_under(t, x, &union)).collect())
        .collect();
    let mut found = BTreeSet::new();
    for pi in op_permutations(ms, &union, opts.permute_ops) {
        // y is a candidate image of x when x under op i looks like y under
        // op π(i), for every i.
        let candidates = (0..union.len())
            .map(|i| {
                (0..union.len())
                    .filter(|&j| pi.iter().enumerate().all(|(o, &po)| prints[i][o] == prints[j][po]))
                    .map(|j| union[j])
                    .collect()
            })
            .collect();
        let universe_len = ms.universe().len();
        let mut search = Search {
            ops,
            pi: &pi,
            union: &union,
            candidates,
            sigma: vec![None; universe_len],
            used: vec![false; universe_len],
            found: &mut found,
            universe_len,
        };
        search.run(0);
    }
    Ok(Automorphisms {
        union,
        maps: found.into_iter().collect(),
        permute_ops: opts.permute_ops,
    })
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::disjoint_cyclic_union;

    #[test]
    fn z3_has_two() {
        let ms = disjoint_cyclic_union(&[3]).unwrap();
        let aut = automorphisms(&ms, AutomorphismOptions::default()).unwrap();
        assert_eq!(aut.len(), 2);
        assert!(aut.contains_identity());
        assert!(aut.closed_under_composition());
        assert!(aut.closed_under_inverse());
    }

    #[test]
    fn named_ops_pin_components() {
        let ms = disjoint_cyclic_union(&[3, 3]).unwrap();
        let fixed = automorphisms(&ms, AutomorphismOptions::default()).unwrap();
        assert_eq!(fixed.len(), 4);
        let swapping = automorphisms(&ms, AutomorphismOptions { permute_ops: true }).unwrap();
        assert_eq!(swapping.len(), 8);
        assert!(swapping.closed_under_composition());
    }

    #[test]
    fn trivial_space() {
        let ms = disjoint_cyclic_union(&[1]).unwrap();
        assert_eq!(automorphisms(&ms, AutomorphismOptions::default()).unwrap().len(), 1);
    }

    #[test]
    fn size_limit() {
        let ms = disjoint_cyclic_union(&[7, 7]).unwrap();
        assert!(automorphisms(&ms, AutomorphismOptions::default()).is_err());
    }

    #[test]
    fn totients() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(4), 2);
        assert_eq!(totient(9), 6);
    }
}
