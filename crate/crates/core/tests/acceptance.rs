//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Criteria whose stated target contradicts an exhaustive computation are
//! listed with the reason as expected failures: they still run in full and
//! print FAIL, but only an unexpected result (a new failure, or an expected
//! one that starts passing) makes this target exit non-zero.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use multispace::constructions::{
    disjoint_cyclic_union, enumerate_latin_squares, example_squares, factorial_product, group_union, groups,
    latin_multispace, zn_ring, LatinSquare,
};
use multispace::format::parse;
use multispace::multigroup::{coset_partition, is_submultigroup, maximal_normal_series, SubsetView};
use multispace::multimetric::{combine_metrics, fixed_points, is_contraction, CombineOutcome, Combinator, Q};
use multispace::multiring::{decompose_artin, is_multiideal, is_submultiring, multiideal_chain};
use multispace::multivector::{
    dim_formula, greedy_basis, greedy_basis_shuffled, linearly_independent, maximal_independent_subset,
    spans_union,
};
use multispace::{
    automorphisms, eval_chain, find_inverses, find_units, is_faithful, AutomorphismOptions, Elem, ExprChain,
    FiniteUniverse, MultiSpace, OpTable, Side,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
    /// Why the stated target is expected to fail.
    expected_failure: Option<&'static str>,
}

fn named(ms: &MultiSpace, name: &str) -> Elem {
    ms.universe().lookup(name).expect("symbol")
}

fn worked_example() -> Outcome {
    let ms = latin_multispace(&FiniteUniverse::new(["1", "2", "3"]).unwrap(), &example_squares()).unwrap();
    let eval = |toks: &[&str]| eval_chain(&ms, &ExprChain::from_tokens(&ms, toks).unwrap()).unwrap();
    let a = eval(&["1", "x1", "2", "x2", "3"]);
    let b = eval(&["2", "x1", "3", "x2", "2"]);
    let name = |x: Option<Elem>| x.map_or("undefined".to_string(), |x| ms.name_of(x).to_string());
    let pass = a == Some(named(&ms, "2")) && b == Some(named(&ms, "3"));
    outcome(
        pass,
        format!("1 x1 2 x2 3 = {} (target 2), 2 x1 3 x2 2 = {} (target 3)", name(a), name(b)),
    )
}

fn latin_counts() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, want) in [(2usize, 2usize), (3, 12), (4, 576)] {
        let count = enumerate_latin_squares(n).unwrap().len();
        let bound = factorial_product(n);
        ok &= count == want && count as u128 >= bound && (n != 3 || count as u128 == bound);
        parts.push(format!("n={n}: {count} (bound {bound})"));
    }
    outcome(ok, parts.join(", "))
}

fn latin_table(sq: &LatinSquare) -> OpTable {
    let n = sq.side();
    OpTable::from_fn("x", n, (0..n).collect(), |r, c| Some(sq.get(r, c))).unwrap()
}

fn unit_inverse_uniqueness() -> Outcome {
    let mut tables: Vec<OpTable> = groups::groups_up_to_order_8().iter().map(|g| g.table("o")).collect();
    for n in 1..=4 {
        tables.extend(enumerate_latin_squares(n).unwrap().iter().map(latin_table));
    }
    let mut checked = 0;
    let mut bad = 0;
    for t in &tables {
        if !is_faithful(t, Side::Left).faithful && !is_faithful(t, Side::Right).faithful {
            continue;
        }
        checked += 1;
        let u = find_units(t);
        let mut ok = u.left.len() <= 1 && u.right.len() <= 1;
        if let Some(e) = u.unit {
            ok &= find_inverses(t, e)
                .unwrap()
                .iter()
                .all(|s| s.left.len() <= 1 && s.right.len() <= 1);
        }
        if !ok {
            bad += 1;
        }
    }
    outcome(bad == 0 && checked == tables.len(), format!("{checked} faithful tables, {bad} with a repeated unit or inverse"))
}

fn coset_partitions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut genuine = 0;
    let mut overlapping_raw = 0;
    let trials = 60;
    for _ in 0..trials {
        let (ms, sub) = random_multigroup_with_sub(&mut rng);
        assert!(is_submultigroup(&ms, &sub).unwrap().holds);
        let rep = coset_partition(&ms, &sub).unwrap();
        if !rep.pairwise_disjoint {
            overlapping_raw += 1;
        }
        // Each block must be the coset of its representative, and the
        // blocks must tile the union exactly.
        let tables: Vec<&OpTable> = sub.ops().iter().map(|o| ms.op(o).unwrap()).collect();
        let coset_of = |x: Elem| -> BTreeSet<Elem> {
            sub.elements()
                .iter()
                .flat_map(|&h| tables.iter().filter_map(move |t| t.apply(x, h)))
                .collect()
        };
        let mut seen: BTreeSet<Elem> = BTreeSet::new();
        let mut ok = true;
        for c in &rep.partition {
            let block: BTreeSet<Elem> = c.elements.iter().copied().collect();
            ok &= !block.is_empty() && block == coset_of(c.representative);
            ok &= block.iter().all(|&x| seen.insert(x));
        }
        ok &= seen == ms.element_union().into_iter().collect();
        if ok {
            genuine += 1;
        }
    }
    outcome(
        genuine == trials,
        format!("{genuine}/{trials} genuine partitions ({overlapping_raw} instances with overlapping raw cosets)"),
    )
}

fn series_invariance() -> Outcome {
    let factorizations = groups::abelian_factorizations_up_to_16();
    let all: Vec<_> = factorizations.iter().map(|f| groups::abelian(f)).collect();
    let mut single_ok = 0;
    for g in &all {
        let ms = group_union(std::slice::from_ref(g), false, "+").unwrap();
        let s = maximal_normal_series(&ms, &["+1".to_string()]).unwrap();
        if s.length() == Some(omega(g.order())) {
            single_ok += 1;
        }
    }
    let mut pairs = 0;
    let mut pairs_ok = 0;
    for a in &all {
        for b in &all {
            if a.order() + b.order() - 1 > 24 || a.order() < 2 || b.order() < 2 {
                continue;
            }
            pairs += 1;
            let ms = group_union(&[a.clone(), b.clone()], true, "+").unwrap();
            let s = maximal_normal_series(&ms, &["+1".to_string(), "+2".to_string()]).unwrap();
            if s.constant_length() && s.chains.iter().all(|c| c.strictly_decreasing()) {
                pairs_ok += 1;
            }
        }
    }
    outcome(
        single_ok == all.len() && pairs_ok == pairs,
        format!(
            "{single_ok}/{} abelian groups with length Ω(|G|); {pairs_ok}/{pairs} two-component unions with constant length",
            all.len()
        ),
    )
}

/// Additive subgroup of `Z_n` absorbing multiplication, decided directly.
fn is_zn_ideal(n: usize, s: &BTreeSet<usize>) -> bool {
    s.contains(&0)
        && s.iter().all(|&a| s.iter().all(|&b| s.contains(&((a + b) % n))))
        && s.iter().all(|&a| s.contains(&((n - a) % n)))
        && s.iter().all(|&a| (0..n).all(|r| s.contains(&(r * a % n))))
}

fn multi_ideals() -> Outcome {
    let mut instances = 0;
    let mut mismatches = 0;
    for n in 1..=12usize {
        let ms = zn_ring(n).unwrap();
        for mask in 1u32..1 << n {
            let elems: Vec<Elem> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let sub = SubsetView::spanning(&ms, elems.clone()).unwrap();
            // Both verifiers cross-check two criteria internally and error
            // on disagreement; the direct oracle is a third opinion.
            let ideal = is_multiideal(&ms, &sub).unwrap().holds;
            is_submultiring(&ms, &sub).unwrap();
            instances += 1;
            if ideal != is_zn_ideal(n, &elems.iter().copied().collect()) {
                mismatches += 1;
            }
        }
    }
    let z6 = multiideal_chain(&zn_ring(6).unwrap(), &["Z6".to_string()]).unwrap();
    let chains_ok = z6.chain_count == 2 && z6.lengths == BTreeSet::from([2]);
    outcome(
        mismatches == 0 && chains_ok,
        format!(
            "{instances} subsets, {mismatches} disagreements; Z6 has {} maximal chains with lengths {:?}",
            z6.chain_count, z6.lengths
        ),
    )
}

fn decompositions() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (n, want) in [(6usize, vec![vec![0, 3], vec![0, 2, 4]]), (12, vec![vec![0, 4, 8], vec![0, 3, 6, 9]])] {
        let ms = zn_ring(n).unwrap();
        let d = decompose_artin(&ms).unwrap();
        let c = &d.components[0];
        let pieces: Vec<Vec<Elem>> = c.pieces.iter().map(|p| p.elements.clone()).collect();
        // Every residue must be exactly one sum a + b over the two pieces.
        let unique = (0..n).all(|r| {
            pieces[0]
                .iter()
                .flat_map(|&a| pieces[1].iter().map(move |&b| (a + b) % n))
                .filter(|&s| s == r)
                .count()
                == 1
        });
        ok &= pieces == want && unique && c.reconstruction_exact && d.verified();
        parts.push(format!("Z{n} = {:?}", pieces));
    }
    outcome(ok, parts.join("; "))
}

fn basis_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut instances = 0;
    let mut stable = 0;
    for (p, n) in [(2u32, 4usize), (3, 3)] {
        for _ in 0..20 {
            let k = rng.gen_range(1..=4);
            let ms = random_vector_space(&mut rng, p, n, k);
            instances += 1;
            let base = greedy_basis(&ms);
            let mut sizes = BTreeSet::from([base.len()]);
            let mut ok = linearly_independent(&base, &ms).unwrap().is_independent() && spans_union(&ms, &base);
            for _ in 0..20 {
                let b = greedy_basis_shuffled(&ms, &mut rng);
                let m = maximal_independent_subset(&ms, &mut rng);
                ok &= linearly_independent(&b, &ms).unwrap().is_independent() && spans_union(&ms, &b);
                sizes.insert(b.len());
                sizes.insert(m.len());
            }
            if ok && sizes.len() == 1 {
                stable += 1;
            }
        }
    }
    outcome(stable == instances, format!("{stable}/{instances} instances with one basis size over 20 orders"))
}

fn dimension_formula() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut agree = 0;
    let trials = 100;
    for i in 0..trials {
        let (p, n) = if i % 2 == 0 { (2, 4) } else { (3, 3) };
        let ms = random_vector_space(&mut rng, p, n, 1 + i % 2);
        if dim_formula(&ms).unwrap().agree {
            agree += 1;
        }
    }
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/three_lines.mspace.json")).unwrap();
    let lines = parse(&text).unwrap().multivector().unwrap();
    let d = dim_formula(&lines).unwrap();
    let fixture_ok = d.formula_value == 3 && d.greedy_value == 2 && !d.agree;
    outcome(
        agree == trials && fixture_ok,
        format!(
            "{agree}/{trials} k<=2 instances agree; three lines: formula {}, greedy {}, flagged {}",
            d.formula_value, d.greedy_value, !d.agree
        ),
    )
}

fn metric_combinators() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let trials = 120;
    let mut valid = 0;
    for _ in 0..trials {
        let size = rng.gen_range(2..=8);
        let m = rng.gen_range(1..=3);
        let pts = labels(size, "p");
        let metrics: Vec<_> = (0..m).map(|_| random_metric(&mut rng, pts.clone())).collect();
        let weights = (0..m).map(|_| Q::new(rng.gen_range(1..=5), rng.gen_range(1..=3))).collect();
        let all = [Combinator::Sum, Combinator::WeightedSum(weights), Combinator::Bounded, Combinator::Max];
        let ok = all.iter().all(|f| match combine_metrics(&metrics, f).unwrap() {
            CombineOutcome::Combined(t, None) => is_metric(&t),
            _ => false,
        });
        if ok {
            valid += 1;
        }
    }
    outcome(valid == trials, format!("{valid}/{trials} instances valid under all four combinators"))
}

fn fixed_point_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let target = 120;
    let (mut accepted, mut in_bound, mut orbits_ok, mut attempts) = (0, 0, 0, 0);
    let (mut zero, mut above) = (0, 0);
    while accepted < target && attempts < 100_000 {
        attempts += 1;
        let m = rng.gen_range(1..=4);
        let ms = random_multimetric(&mut rng, m);
        let t = random_mapping(&mut rng, &ms);
        if !is_contraction(&ms, &t, false).verdict {
            continue;
        }
        accepted += 1;
        let f = fixed_points(&ms, &t, false);
        if (1..=m).contains(&f.count) {
            in_bound += 1;
        } else if f.count == 0 {
            zero += 1;
        } else {
            above += 1;
        }
        if f.orbits_ok {
            orbits_ok += 1;
        }
    }
    outcome(
        accepted == target && in_bound == target && orbits_ok == target,
        format!(
            "{accepted} contractions: {in_bound} with count in [1, m] ({zero} with none, {above} above m), {orbits_ok} with every orbit stabilizing"
        ),
    )
}

fn automorphism_pattern() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (m, k) in [(2usize, 2usize), (3, 2), (3, 3), (4, 2)] {
        let ms = disjoint_cyclic_union(&vec![m; k]).unwrap();
        let aut = automorphisms(&ms, AutomorphismOptions { permute_ops: true }).unwrap();
        let want = phi(m).pow(k as u32) * factorial(k);
        ok &= aut.len() == want;
        parts.push(format!("(m={m}, k={k}): {} vs {want}", aut.len()));
    }
    outcome(ok, parts.join(", "))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            name: "worked-example fidelity",
            budget: Duration::from_secs(1),
            run: worked_example,
            expected_failure: Some(
                "the two example tables give 2 x1 3 x2 2 = 2 (2 x1 3 = 1, then 1 x2 2 = 2), not the stated 3",
            ),
        },
        Criterion { name: "latin-square bound", budget: Duration::from_secs(10), run: latin_counts, expected_failure: None },
        Criterion {
            name: "unit/inverse uniqueness",
            budget: Duration::from_secs(30),
            run: unit_inverse_uniqueness,
            expected_failure: None,
        },
        Criterion { name: "coset partition", budget: Duration::from_secs(60), run: coset_partitions, expected_failure: None },
        Criterion {
            name: "series-length invariance",
            budget: Duration::from_secs(120),
            run: series_invariance,
            expected_failure: None,
        },
        Criterion { name: "multi-ideal machinery", budget: Duration::from_secs(60), run: multi_ideals, expected_failure: None },
        Criterion { name: "decomposition", budget: Duration::from_secs(5), run: decompositions, expected_failure: None },
        Criterion { name: "basis invariance", budget: Duration::from_secs(60), run: basis_invariance, expected_failure: None },
        Criterion { name: "dimension formula", budget: Duration::from_secs(10), run: dimension_formula, expected_failure: None },
        Criterion { name: "metric combinators", budget: Duration::from_secs(30), run: metric_combinators, expected_failure: None },
        Criterion {
            name: "fixed-point bound",
            budget: Duration::from_secs(60),
            run: fixed_point_bound,
            expected_failure: Some(
                "a contraction between one pair of components says nothing about the rest of the map, so counts of 0 and above m occur",
            ),
        },
        Criterion {
            name: "automorphism pattern",
            budget: Duration::from_secs(60),
            run: automorphism_pattern,
            expected_failure: None,
        },
    ];
    let mut unexpected = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = (c.run)();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed <= c.budget;
        let status = if pass { "PASS" } else { "FAIL" };
        let timing = format!("{:.2}s of {}s", elapsed.as_secs_f64(), c.budget.as_secs());
        println!("{status} [{:>2}] {} ({timing}): {}", i + 1, c.name, out.detail);
        match (pass, c.expected_failure) {
            (false, Some(why)) => println!("       expected failure: {why}"),
            (true, Some(_)) => {
                println!("       unexpected pass of a criterion listed as an expected failure");
                unexpected += 1;
            }
            (false, None) => unexpected += 1,
            (true, None) => {}
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected result(s)");
        ExitCode::FAILURE
    }
}
