//! Random instance generators and brute-force oracles shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use multispace::constructions::{group_union, groups, CayleyGroup};
use multispace::multigroup::SubsetView;
use multispace::multimetric::{MappingTable, MetricTable, MultiMetricSpace, Q};
use multispace::multivector::{AmbientSpace, MultiVectorSpace, Vector};
use multispace::{Elem, GroupView, MultiSpace};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn labels(n: usize, prefix: &str) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Shortest-path distances on a complete graph with random positive
/// rational edge weights, which always form a metric.
pub fn random_metric<R: Rng>(rng: &mut R, points: Vec<String>) -> MetricTable {
    let n = points.len();
    let mut d = vec![vec![Q::from_integer(0); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let w = Q::new(rng.gen_range(1..=9), rng.gen_range(1..=4));
            d[i][j] = w;
            d[j][i] = w;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    MetricTable::new(points, d).expect("square")
}

/// Axioms re-checked from the raw grid.
pub fn is_metric(t: &MetricTable) -> bool {
    let g = t.grid();
    let n = g.len();
    let zero = Q::from_integer(0);
    (0..n).all(|i| {
        (0..n).all(|j| {
            g[i][j] >= zero
                && (g[i][j] == zero) == (i == j)
                && g[i][j] == g[j][i]
                && (0..n).all(|k| g[i][k] <= g[i][j] + g[j][k])
        })
    })
}

/// `m` components of 1 to 4 points drawn from a small shared pool.
pub fn random_multimetric<R: Rng>(rng: &mut R, m: usize) -> MultiMetricSpace {
    let pool = labels(2 * m + 2, "p");
    let comps = (0..m)
        .map(|i| {
            let size = rng.gen_range(1..=4);
            let pts: Vec<String> = pool.choose_multiple(rng, size).cloned().collect();
            (format!("M{}", i + 1), random_metric(rng, pts))
        })
        .collect();
    MultiMetricSpace::new(comps).expect("metrics")
}

pub fn random_mapping<R: Rng>(rng: &mut R, ms: &MultiMetricSpace) -> MappingTable {
    let n = ms.points().len();
    MappingTable::new(ms, (0..n).map(|_| rng.gen_range(0..n)).collect()).expect("in range")
}

pub fn random_vector<R: Rng>(rng: &mut R, p: u32, n: usize) -> Vector {
    (0..n).map(|_| rng.gen_range(0..p)).collect()
}

pub fn random_vector_space<R: Rng>(rng: &mut R, p: u32, n: usize, k: usize) -> MultiVectorSpace {
    let comps = (0..k)
        .map(|i| {
            let gens = rng.gen_range(1..=n);
            (format!("V{}", i + 1), (0..gens).map(|_| random_vector(rng, p, n)).collect())
        })
        .collect();
    MultiVectorSpace::new(AmbientSpace::new(p, n).expect("prime"), comps).expect("valid")
}

/// Euler's totient by counting coprime residues.
pub fn phi(m: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=m).filter(|&k| gcd(k, m) == 1).count()
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Prime factors with multiplicity, by trial division.
pub fn omega(mut n: usize) -> usize {
    let mut c = 0;
    for p in 2..=n {
        while n % p == 0 {
            n /= p;
            c += 1;
        }
    }
    c
}

/// Groups of order at most 8 from the corpus, chosen at random.
pub fn random_small_group<R: Rng>(rng: &mut R) -> CayleyGroup {
    groups::groups_up_to_order_8()
        .into_iter()
        .filter(|g| g.order() >= 2)
        .collect::<Vec<_>>()
        .choose(rng)
        .expect("non-empty")
        .clone()
}

/// A multi-group of one to three small groups (union at most 16) and a
/// sub-multi-group made of one random subgroup per component.
pub fn random_multigroup_with_sub<R: Rng>(rng: &mut R) -> (MultiSpace, SubsetView) {
    loop {
        let k = rng.gen_range(1..=3);
        let shared = rng.gen_bool(0.5);
        let gs: Vec<CayleyGroup> = (0..k).map(|_| random_small_group(rng)).collect();
        let size: usize = gs.iter().map(|g| g.order()).sum::<usize>() - if shared { k - 1 } else { 0 };
        if size > 16 {
            continue;
        }
        let ms = group_union(&gs, shared, "x").expect("union");
        let mut elems: BTreeSet<Elem> = BTreeSet::new();
        for c in ms.components() {
            let t = ms.op(c.single_op().expect("single")).expect("op");
            let view = GroupView::new(t, c.carrier()).expect("group");
            let subs = view.subgroups();
            let pick = *subs.choose(rng).expect("trivial subgroup");
            elems.extend(view.elems_of(pick));
        }
        let sub = SubsetView::spanning(&ms, elems.into_iter().collect()).expect("subset");
        return (ms, sub);
    }
}
