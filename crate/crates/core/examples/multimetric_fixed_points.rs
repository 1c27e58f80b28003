//! Multi-metric spaces: disks, combined metrics, and the fixed points of
//! self-maps that contract between components.

use multispace::multimetric::{
    combine_metrics, fixed_points, is_contraction, r_disk, CombineOutcome, Combinator, MappingTable, MetricTable,
    MultiMetricSpace, Q,
};

fn main() -> multispace::Result<()> {
    let labels = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let m1 = MetricTable::from_fn(labels(&["a", "b", "c"]), |i, j| Q::from((i as i64 - j as i64).abs()))?;
    let m2 = MetricTable::from_fn(labels(&["c", "d", "e"]), |i, j| if i == j { Q::from(0) } else { Q::new(1, 2) })?;
    let ms = MultiMetricSpace::new(vec![("M1".into(), m1.clone()), ("M2".into(), m2)])?;

    let c = ms.index_of("c")?;
    for r in [Q::new(1, 2), Q::from(1)] {
        println!("disk of radius {r} around c: {:?}", ms.label_set(&r_disk(&ms, c, r)?));
    }

    let line = MetricTable::line(&[0, 2, 5]);
    let grid = MetricTable::from_fn(line.points().to_vec(), |i, j| Q::from(((i + j) % 3 != 0 && i != j) as i64 + (i != j) as i64))?;
    let combinators = [
        ("sum", Combinator::Sum),
        ("max", Combinator::Max),
        ("bounded", Combinator::Bounded),
        ("weighted 1/2, 3", Combinator::WeightedSum(vec![Q::new(1, 2), Q::from(3)])),
    ];
    for (name, f) in combinators {
        match combine_metrics(&[line.clone(), grid.clone()], &f)? {
            CombineOutcome::Combined(t, violation) => {
                let row: Vec<String> = t.grid()[0].iter().map(Q::to_string).collect();
                println!("{name}: distances from the first point [{}], metric {}", row.join(", "), violation.is_none())
            }
            CombineOutcome::Rejected(r) => println!("{name}: rejected ({r:?})"),
        }
    }

    let collapse = MappingTable::from_pairs(&ms, &[("a", "a"), ("b", "a"), ("c", "a"), ("d", "e"), ("e", "e")])?;
    let swap = MappingTable::from_pairs(&ms, &[("a", "d"), ("b", "d"), ("c", "d"), ("d", "b"), ("e", "b")])?;
    for (name, t) in [("collapse", collapse), ("swap", swap)] {
        let k = is_contraction(&ms, &t, false);
        let f = fixed_points(&ms, &t, false);
        println!(
            "{name}: contraction {}, fixed points {:?}, within one per component {:?}",
            k.verdict,
            ms.label_set(&f.points),
            f.bound_ok
        );
    }
    Ok(())
}
