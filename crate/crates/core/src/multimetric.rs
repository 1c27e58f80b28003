//! Finite multi-metric spaces with exact rational distances.

use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = Ratio<i64>;

/// A metric on an ordered list of labelled points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricTable {
    points: Vec<String>,
    d: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum MetricViolation {
    Negative { x: String, y: String },
    Definiteness { x: String, y: String },
    Symmetry { x: String, y: String },
    Triangle { x: String, y: String, z: String },
}

impl MetricTable {
    /// Checks the shape only; use [`validate_metric`] for the axioms.
    pub fn new(points: Vec<String>, d: Vec<Vec<Q>>) -> Result<Self> {
        let n = points.len();
        if d.len() != n || d.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("distance grid is not {n}×{n}")));
        }
        let unique: BTreeSet<&String> = points.iter().collect();
        if unique.len() != n {
            return Err(Error::Input("metric table repeats a point".into()));
        }
        Ok(MetricTable { points, d })
    }

    pub fn from_fn(points: Vec<String>, f: impl Fn(usize, usize) -> Q) -> Result<Self> {
        let n = points.len();
        let d = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Self::new(points, d)
    }

    /// `|x − y|` on integer points, labelled by their values.
    pub fn line(values: &[i64]) -> Self {
        let points = values.iter().map(|v| v.to_string()).collect();
        Self::from_fn(points, |i, j| Q::from_integer((values[i] - values[j]).abs()))
            .expect("square by construction")
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    pub fn dist(&self, i: usize, j: usize) -> Q {
        self.d[i][j]
    }

    pub fn grid(&self) -> &[Vec<Q>] {
        &self.d
    }
}

/// All three axioms, exhaustively; the first violation found is returned.
pub fn validate_metric(t: &MetricTable) -> Option<MetricViolation> {
    let n = t.len();
    let p = |i: usize| t.points[i].clone();
    for i in 0..n {
        for j in 0..n {
            let d = t.d[i][j];
            if d < Q::zero() {
                return Some(MetricViolation::Negative { x: p(i), y: p(j) });
            }
            if (d == Q::zero()) != (i == j) {
                return Some(MetricViolation::Definiteness { x: p(i), y: p(j) });
            }
            if d != t.d[j][i] {
                return Some(MetricViolation::Symmetry { x: p(i), y: p(j) });
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if t.d[i][j] + t.d[j][k] < t.d[i][k] {
                    return Some(MetricViolation::Triangle { x: p(i), y: p(j), z: p(k) });
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "weights", rename_all = "snake_case")]
pub enum Combinator {
    Sum,
    WeightedSum(Vec<Q>),
    /// `Σ ρᵢ / (1 + ρᵢ)`.
    Bounded,
    Max,
}

impl Combinator {
    pub fn apply(&self, xs: &[Q]) -> Q {
        match self {
            Combinator::Sum => xs.iter().sum(),
            Combinator::WeightedSum(w) => xs.iter().zip(w).map(|(x, w)| x * w).sum(),
            Combinator::Bounded => xs.iter().map(|x| x / (Q::one() + x)).sum(),
            Combinator::Max => xs.iter().copied().max().unwrap_or_else(Q::zero),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    Monotone,
    ZeroOnlyAtZero,
    Subadditive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CombinatorRejection {
    pub hypothesis: Hypothesis,
    pub x: Vec<Q>,
    pub y: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CombineOutcome {
    /// The combined table and the verdict of validating it.
    Combined(MetricTable, Option<MetricViolation>),
    Rejected(CombinatorRejection),
}

/// Applies `f` pointwise to `m` metrics on one point set, after checking the
/// combinator's monotonicity, zero and subadditivity hypotheses on every
/// pair of distance vectors drawn from the tables. The check is a sample,
/// not a proof.
pub fn combine_metrics(metrics: &[MetricTable], f: &Combinator) -> Result<CombineOutcome> {
    let first = metrics
        .first()
        .ok_or_else(|| Error::Input("no metrics to combine".into()))?;
    if metrics.iter().any(|t| t.points != first.points) {
        return Err(Error::Shape("metrics are on different point sets".into()));
    }
    if let Combinator::WeightedSum(w) = f {
        if w.len() != metrics.len() {
            return Err(Error::Shape(format!(
                "{} weights for {} metrics",
                w.len(),
                metrics.len()
            )));
        }
    }
    let n = first.len();
    let vec_at = |i: usize, j: usize| -> Vec<Q> { metrics.iter().map(|t| t.d[i][j]).collect() };
    // Table vectors plus their single-coordinate projections.
    let mut samples: BTreeSet<Vec<Q>> = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            let v = vec_at(i, j);
            for k in 0..v.len() {
                let mut axis = vec![Q::zero(); v.len()];
                axis[k] = v[k];
                samples.insert(axis);
            }
            samples.insert(v);
        }
    }
    let reject = |hypothesis, x: &Vec<Q>, y: &Vec<Q>| {
        Ok(CombineOutcome::Rejected(CombinatorRejection {
            hypothesis,
            x: x.clone(),
            y: y.clone(),
        }))
    };
    for x in &samples {
        if f.apply(x) == Q::zero() && x.iter().any(|v| !v.is_zero()) {
            return reject(Hypothesis::ZeroOnlyAtZero, x, x);
        }
        for y in &samples {
            let dominates = x.iter().zip(y).all(|(a, b)| a >= b);
            if dominates && f.apply(x) < f.apply(y) {
                return reject(Hypothesis::Monotone, x, y);
            }
            let sum: Vec<Q> = x.iter().zip(y).map(|(a, b)| a + b).collect();
            if f.apply(x) + f.apply(y) < f.apply(&sum) {
                return reject(Hypothesis::Subadditive, x, y);
            }
        }
    }
    let table = MetricTable::from_fn(first.points.clone(), |i, j| f.apply(&vec_at(i, j)))?;
    let verdict = validate_metric(&table);
    Ok(CombineOutcome::Combined(table, verdict))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricComponent {
    pub name: String,
    pub table: MetricTable,
    /// Global index of each local point.
    members: Vec<usize>,
}

impl MetricComponent {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn local(&self, x: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == x)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(&x)
    }
}

/// Components share points by label; the union is kept in first-appearance
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiMetricSpace {
    points: Vec<String>,
    components: Vec<MetricComponent>,
}

impl MultiMetricSpace {
    pub fn new(components: Vec<(String, MetricTable)>) -> Result<Self> {
        let mut points: Vec<String> = Vec::new();
        let mut out = Vec::with_capacity(components.len());
        for (name, table) in components {
            if let Some(v) = validate_metric(&table) {
                return Err(Error::Contract(format!("component `{name}` is not a metric: {v:?}")));
            }
            if out.iter().any(|c: &MetricComponent| c.name == name) {
                return Err(Error::Input(format!("component `{name}` declared twice")));
            }
            let members = table
                .points
                .iter()
                .map(|p| match points.iter().position(|q| q == p) {
                    Some(i) => i,
                    None => {
                        points.push(p.clone());
                        points.len() - 1
                    }
                })
                .collect();
            out.push(MetricComponent { name, table, members });
        }
        Ok(MultiMetricSpace {
            points,
            components: out,
        })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn components(&self) -> &[MetricComponent] {
        &self.components
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// `ρₖ(x, y)` when both points lie in component `k`.
    pub fn dist_in(&self, k: usize, x: usize, y: usize) -> Option<Q> {
        let c = &self.components[k];
        Some(c.table.dist(c.local(x)?, c.local(y)?))
    }

    pub fn label_set(&self, set: &BTreeSet<usize>) -> Vec<String> {
        set.iter().map(|&i| self.points[i].clone()).collect()
    }
}

/// `B(x, R)`: points within `R` of `x` in at least one shared component.
pub fn r_disk(ms: &MultiMetricSpace, x: usize, r: Q) -> Result<BTreeSet<usize>> {
    if x >= ms.points.len() {
        return Err(Error::Input(format!("point index {x} out of range")));
    }
    if r <= Q::zero() {
        return Err(Error::Input("disk radius must be positive".into()));
    }
    Ok((0..ms.points.len())
        .filter(|&y| (0..ms.components.len()).any(|k| ms.dist_in(k, y, x).is_some_and(|d| d < r)))
        .collect())
}

/// Intersection of the closed disks `{y : ρₖ(y, xₙ) ≤ Rₙ}` (again
/// existential over components).
pub fn nested_disk_intersection(ms: &MultiMetricSpace, disks: &[(usize, Q)]) -> BTreeSet<usize> {
    let mut acc: BTreeSet<usize> = (0..ms.points.len()).collect();
    for &(x, r) in disks {
        acc.retain(|&y| (0..ms.components.len()).any(|k| ms.dist_in(k, y, x).is_some_and(|d| d <= r)));
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tail {
    Constant { point: String },
    Periodic { points: Vec<String> },
}

/// A finitely presented sequence: an explicit prefix, then a tail repeated
/// forever.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceSpec {
    pub prefix: Vec<String>,
    pub tail: Tail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub convergent: bool,
    pub limit: Option<String>,
    pub cauchy: bool,
    /// First component containing the whole tail, when it converges.
    pub tail_component: Option<usize>,
}

pub fn analyze_sequence(ms: &MultiMetricSpace, seq: &SequenceSpec) -> Result<SequenceReport> {
    for p in &seq.prefix {
        ms.index_of(p)?;
    }
    let cycle: Vec<usize> = match &seq.tail {
        Tail::Constant { point } => vec![ms.index_of(point)?],
        Tail::Periodic { points } if points.is_empty() => {
            return Err(Error::Input("periodic tail is empty".into()));
        }
        Tail::Periodic { points } => points.iter().map(|p| ms.index_of(p)).collect::<Result<_>>()?,
    };
    // The tail repeats forever, so it converges iff it is constant, and then
    // it lies in any component holding that point.
    let constant = cycle.iter().all(|&x| x == cycle[0]);
    let tail_component = if constant {
        ms.components.iter().position(|c| c.contains(cycle[0]))
    } else {
        None
    };
    let convergent = tail_component.is_some();
    // Cauchy: every tail pair must eventually be closer than any ε in some
    // shared component, so each pair's best distance has to be zero.
    let cauchy = cycle.iter().all(|&x| {
        cycle.iter().all(|&y| {
            (0..ms.components.len())
                .filter_map(|k| ms.dist_in(k, x, y))
                .min()
                .is_some_and(|d| d.is_zero())
        })
    });
    Ok(SequenceReport {
        convergent,
        limit: convergent.then(|| ms.points[cycle[0]].clone()),
        cauchy,
        tail_component,
    })
}

/// A self-map of the point union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingTable {
    image: Vec<usize>,
}

impl MappingTable {
    pub fn new(ms: &MultiMetricSpace, image: Vec<usize>) -> Result<Self> {
        if image.len() != ms.points.len() || image.iter().any(|&y| y >= ms.points.len()) {
            return Err(Error::Shape("mapping must send every point into the union".into()));
        }
        Ok(MappingTable { image })
    }

    /// From `(x, Tx)` label pairs covering every point once.
    pub fn from_pairs<S: AsRef<str>>(ms: &MultiMetricSpace, pairs: &[(S, S)]) -> Result<Self> {
        let mut image = vec![None; ms.points.len()];
        for (x, y) in pairs {
            let (x, y) = (ms.index_of(x.as_ref())?, ms.index_of(y.as_ref())?);
            if image[x].replace(y).is_some() {
                return Err(Error::Input(format!("point `{}` mapped twice", ms.points[x])));
            }
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, y)| y.ok_or_else(|| Error::Input(format!("point `{}` has no image", ms.points[i]))))
            .collect::<Result<_>>()?;
        Ok(MappingTable { image })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentRatio {
    pub from: usize,
    pub to: usize,
    /// `max ρⱼ(Tx, Ty) / ρᵢ(x, y)` over distinct `x, y ∈ Mᵢ`; zero when `Mᵢ`
    /// has a single point.
    pub alpha: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionReport {
    pub verdict: bool,
    pub strict: bool,
    /// Smallest ratio among the pairs that count towards the verdict.
    pub alpha: Option<Q>,
    /// Every `(i, j)` with `T(Mᵢ) ⊆ Mⱼ`.
    pub component_map: Vec<ComponentRatio>,
}

/// Existential reading: some `(i, j)` with `|Mᵢ| ≥ 2`, `T(Mᵢ) ⊆ Mⱼ` and ratio
/// below 1. Strict reading: every component maps into some component with
/// ratio below 1.
pub fn is_contraction(ms: &MultiMetricSpace, t: &MappingTable, strict: bool) -> ContractionReport {
    let mut map = Vec::new();
    for (i, ci) in ms.components.iter().enumerate() {
        for (j, cj) in ms.components.iter().enumerate() {
            if !ci.members.iter().all(|&x| cj.contains(t.apply(x))) {
                continue;
            }
            let mut alpha = Q::zero();
            for (a, &x) in ci.members.iter().enumerate() {
                for (b, &y) in ci.members.iter().enumerate().skip(a + 1) {
                    let num = ms.dist_in(j, t.apply(x), t.apply(y)).expect("image inside Mj");
                    alpha = alpha.max(num / ci.table.dist(a, b));
                }
            }
            map.push(ComponentRatio { from: i, to: j, alpha });
        }
    }
    let best_from = |i: usize| map.iter().filter(|r| r.from == i).map(|r| r.alpha).min();
    let (verdict, alpha) = if strict {
        let per: Vec<Option<Q>> = (0..ms.components.len()).map(best_from).collect();
        let ok = !per.is_empty() && per.iter().all(|a| a.is_some_and(|a| a < Q::one()));
        (ok, per.into_iter().flatten().max())
    } else {
        let alpha = map
            .iter()
            .filter(|r| ms.components[r.from].members.len() >= 2)
            .map(|r| r.alpha)
            .min();
        (alpha.is_some_and(|a| a < Q::one()), alpha)
    };
    ContractionReport {
        verdict,
        strict,
        alpha,
        component_map: map,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub seed: usize,
    /// Fixed point reached within `|union|` steps.
    pub stabilizes_at: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub points: BTreeSet<usize>,
    pub count: usize,
    pub components: usize,
    pub contraction: bool,
    /// `1 ≤ count ≤ m`; only asserted when `contraction` holds.
    pub bound_ok: Option<bool>,
    pub orbits: Vec<Orbit>,
    pub orbits_ok: bool,
}

/// Enumerates `{x : Tx = x}` and iterates `xₙ₊₁ = Txₙ` from every point.
pub fn fixed_points(ms: &MultiMetricSpace, t: &MappingTable, strict: bool) -> FixedPointReport {
    let n = ms.points.len();
    let points: BTreeSet<usize> = (0..n).filter(|&x| t.apply(x) == x).collect();
    let orbits: Vec<Orbit> = (0..n)
        .map(|seed| {
            let mut x = seed;
            for _ in 0..n {
                if t.apply(x) == x {
                    break;
                }
                x = t.apply(x);
            }
            Orbit {
                seed,
                stabilizes_at: (t.apply(x) == x).then_some(x),
            }
        })
        .collect();
    let contraction = is_contraction(ms, t, strict).verdict;
    let count = points.len();
    let m = ms.components.len();
    FixedPointReport {
        count,
        components: m,
        contraction,
        bound_ok: contraction.then_some((1..=m).contains(&count)),
        orbits_ok: orbits
            .iter()
            .all(|o| o.stabilizes_at.is_some_and(|z| points.contains(&z))),
        orbits,
        points,
    }
}
