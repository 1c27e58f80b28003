mod common;

use std::collections::BTreeSet;

use multispace::multimetric::{
    analyze_sequence, combine_metrics, fixed_points, is_contraction, r_disk, CombineOutcome, Combinator,
    SequenceSpec, Tail, Q,
};
use multispace::multivector::{
    dim_formula, greedy_basis, is_multivector_subspace, linearly_independent, spans_union, Vector,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn field() -> impl Strategy<Value = (u32, usize)> {
    prop_oneof![Just((2u32, 3usize)), Just((2, 4)), Just((3, 2)), Just((3, 3)), Just((5, 2))]
}

/// Every vector reachable from `gens` by repeated addition and scaling,
/// computed without the library.
fn closure(p: u32, n: usize, gens: &[Vector]) -> BTreeSet<Vector> {
    let mut set: BTreeSet<Vector> = BTreeSet::from([vec![0; n]]);
    loop {
        let mut next = set.clone();
        for a in &set {
            for g in gens {
                for k in 0..p {
                    next.insert(a.iter().zip(g).map(|(x, y)| (x + k * y) % p).collect());
                }
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn greedy_basis_is_independent_spanning_and_of_full_rank(seed in any::<u64>(), (p, n) in field(), k in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = random_vector_space(&mut rng, p, n, k);
        let basis = greedy_basis(&ms);
        prop_assert!(linearly_independent(&basis, &ms).unwrap().is_independent());
        prop_assert!(spans_union(&ms, &basis));
        let union: Vec<Vector> = ms.union().into_iter().collect();
        prop_assert_eq!(basis.len(), ms.ambient().rank(&union));
    }

    #[test]
    fn single_component_dimension_is_its_rank(seed in any::<u64>(), (p, n) in field()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = random_vector_space(&mut rng, p, n, 1);
        let d = dim_formula(&ms).unwrap();
        let span = closure(p, n, &ms.components()[0].generators);
        // |span| = p^dim
        let dim = (0..=n).find(|&e| (p as usize).pow(e as u32) == span.len()).unwrap();
        prop_assert!(d.agree);
        prop_assert_eq!(d.greedy_value, dim);
        prop_assert_eq!(d.formula_value, dim as i64);
    }

    #[test]
    fn spans_inside_one_component_are_subspaces(seed in any::<u64>(), (p, n) in field()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = random_vector_space(&mut rng, p, n, 1);
        let gens = &ms.components()[0].generators;
        let chosen: Vec<Vector> = gens.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        let sub = closure(p, n, &chosen);
        prop_assert!(is_multivector_subspace(&[sub], &ms).unwrap().holds);
    }

    #[test]
    fn subspaces_stay_subspaces_under_intersection(seed in any::<u64>(), (p, n) in field(), k in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = random_vector_space(&mut rng, p, n, k);
        let pick = |rng: &mut ChaCha8Rng| -> Vec<BTreeSet<Vector>> {
            ms.components()
                .iter()
                .map(|c| {
                    let vs: Vec<Vector> = c.vectors.iter().cloned().collect();
                    let chosen: Vec<Vector> = vs.choose_multiple(rng, 2).cloned().collect();
                    closure(p, n, &chosen)
                })
                .collect()
        };
        let s = pick(&mut rng);
        let t = pick(&mut rng);
        let vs = is_multivector_subspace(&s, &ms).unwrap().holds;
        let vt = is_multivector_subspace(&t, &ms).unwrap().holds;
        let s_all: BTreeSet<Vector> = s.into_iter().flatten().collect();
        let t_all: BTreeSet<Vector> = t.into_iter().flatten().collect();
        let both: BTreeSet<Vector> = s_all.intersection(&t_all).cloned().collect();
        let vb = is_multivector_subspace(&[both], &ms).unwrap().holds;
        prop_assert!(!(vs && vt) || vb);
    }

    #[test]
    fn combined_metrics_are_metrics(seed in any::<u64>(), size in 1usize..=6, m in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = labels(size, "q");
        let metrics: Vec<_> = (0..m).map(|_| random_metric(&mut rng, pts.clone())).collect();
        let weights = (0..m).map(|_| Q::new(rng.gen_range(1..=4), rng.gen_range(1..=4))).collect();
        for f in [Combinator::Sum, Combinator::WeightedSum(weights), Combinator::Bounded, Combinator::Max] {
            match combine_metrics(&metrics, &f).unwrap() {
                CombineOutcome::Combined(t, None) => prop_assert!(is_metric(&t)),
                other => prop_assert!(false, "{:?} gave {:?}", f, other),
            }
        }
    }

    #[test]
    fn disks_contain_their_centre_and_grow_with_radius(seed in any::<u64>(), m in 1usize..=4, num in 1i64..20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = random_multimetric(&mut rng, m);
        let r = Q::new(num, 4);
        for x in 0..ms.points().len() {
            let small = r_disk(&ms, x, r).unwrap();
            let big = r_disk(&ms, x, r * 2).unwrap();
            prop_assert!(small.contains(&x));
            prop_assert!(small.is_subset(&big));
        }
    }

    #[test]
    fn convergent_sequences_are_cauchy_with_the_tail_as_limit(seed in any::<u64>(), m in 1usize..=3, period in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = random_multimetric(&mut rng, m);
        let pts = ms.points().to_vec();
        let prefix: Vec<String> = (0..rng.gen_range(0..4)).map(|_| pts.choose(&mut rng).unwrap().clone()).collect();
        let cycle: Vec<String> = (0..period).map(|_| pts.choose(&mut rng).unwrap().clone()).collect();
        let tail = if period == 1 {
            Tail::Constant { point: cycle[0].clone() }
        } else {
            Tail::Periodic { points: cycle.clone() }
        };
        let rep = analyze_sequence(&ms, &SequenceSpec { prefix, tail }).unwrap();
        let constant = cycle.iter().all(|x| *x == cycle[0]);
        prop_assert_eq!(rep.convergent, constant);
        if rep.convergent {
            prop_assert!(rep.cauchy);
            prop_assert_eq!(rep.limit.as_deref(), Some(cycle[0].as_str()));
        }
    }

    #[test]
    fn strict_contractions_have_at_most_one_fixed_point_per_component(seed in any::<u64>(), m in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ms = random_multimetric(&mut rng, m);
        let t = random_mapping(&mut rng, &ms);
        let f = fixed_points(&ms, &t, true);
        if is_contraction(&ms, &t, true).verdict {
            prop_assert!(f.count <= m);
        }
        // A point is fixed exactly when the map sends it to itself.
        let direct = (0..ms.points().len()).filter(|&x| t.apply(x) == x).count();
        prop_assert_eq!(f.count, direct);
    }
}
