//! Multi-rings: verification, sub-multi-rings, multi-ideals, ideal chains,
//! idempotents and directed-sum decomposition.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::group::{bits, popcount, GroupView, Mask};
use crate::algebra::space::{Component, MultiSpace};
use crate::algebra::table::{associativity_witness, OpTable, TableKind};
use crate::error::{check_size, Error, Result};
use crate::multigroup::{
    check_orientation, component_kind, run_stages, ChainKind, SeriesReport, Stage, SubsetView,
    SERIES_UNION_LIMIT,
};
use crate::Elem;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RingFailure {
    /// The addition restricted to the carrier is not an abelian group.
    Additive(Option<TableKind>),
    /// The multiplication is not total and closed on the carrier.
    MultiplicationNotClosed,
    MultiplicationNotAssociative(Elem, Elem, Elem),
    NotDistributive(Elem, Elem, Elem),
}

/// First reason `(carrier; add, mul)` fails to be a ring.
pub fn ring_failure(add: &OpTable, mul: &OpTable, carrier: &[Elem]) -> Option<RingFailure> {
    let (kind, _) = component_kind(add, carrier);
    if kind != Some(TableKind::AbelianGroup) {
        return Some(RingFailure::Additive(kind));
    }
    let closed = carrier.iter().all(|&x| {
        carrier
            .iter()
            .all(|&y| mul.apply(x, y).is_some_and(|z| carrier.binary_search(&z).is_ok()))
    });
    if !closed {
        return Some(RingFailure::MultiplicationNotClosed);
    }
    let m = mul.restrict(carrier).expect("carrier in domain");
    if let Some((x, y, z)) = associativity_witness(&m) {
        return Some(RingFailure::MultiplicationNotAssociative(x, y, z));
    }
    let a = |x, y| add.apply(x, y).expect("total");
    let p = |x, y| mul.apply(x, y).expect("total");
    for &x in carrier {
        for &y in carrier {
            for &z in carrier {
                if p(x, a(y, z)) != a(p(x, y), p(x, z)) || p(a(y, z), x) != a(p(y, x), p(z, x)) {
                    return Some(RingFailure::NotDistributive(x, y, z));
                }
            }
        }
    }
    None
}

/// A finite ring re-indexed locally; subsets are masks over the carrier.
#[derive(Debug, Clone)]
pub struct RingView {
    add: GroupView,
    mul: Vec<usize>,
}

impl RingView {
    pub fn new(add: &OpTable, mul: &OpTable, carrier: &[Elem]) -> Result<Self> {
        if let Some(f) = ring_failure(add, mul, carrier) {
            return Err(Error::Contract(format!("not a ring: {f:?}")));
        }
        let add = GroupView::new(add, carrier)?;
        let n = add.order();
        let mut table = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let z = mul.apply(add.global(i), add.global(j)).expect("ring");
                table[i * n + j] = add.local(z).expect("closed");
            }
        }
        Ok(RingView { add, mul: table })
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &GroupView {
        &self.add
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn zero(&self) -> usize {
        self.add.identity_local()
    }

    pub fn one(&self) -> Option<usize> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn full(&self) -> Mask {
        self.add.full()
    }

    pub fn global(&self, i: usize) -> Elem {
        self.add.global(i)
    }

    pub fn elems_of(&self, m: Mask) -> Vec<Elem> {
        self.add.elems_of(m)
    }

    pub fn mask_of<'a, I: IntoIterator<Item = &'a Elem>>(&self, set: I) -> Mask {
        self.add.mask_of(set)
    }

    fn closed_mul(&self, m: Mask) -> bool {
        bits(m).all(|a| bits(m).all(|b| m >> self.mul(a, b) & 1 == 1))
    }

    pub fn is_subring(&self, m: Mask) -> bool {
        self.add.is_subgroup(m) && self.closed_mul(m)
    }

    /// `n` is an ideal of the subring `h`.
    pub fn is_ideal_of(&self, n: Mask, h: Mask) -> bool {
        n & !h == 0
            && self.add.is_subgroup(n)
            && bits(h).all(|r| {
                bits(n).all(|a| n >> self.mul(r, a) & 1 == 1 && n >> self.mul(a, r) & 1 == 1)
            })
    }

    pub fn ideals_within(&self, h: Mask) -> Vec<Mask> {
        self.add
            .subgroups_within(h)
            .into_iter()
            .filter(|&n| self.is_ideal_of(n, h))
            .collect()
    }

    /// Proper ideals of the subring `h` maximal among proper ideals.
    pub fn maximal_ideals_of(&self, h: Mask) -> Vec<Mask> {
        let proper: Vec<Mask> = self.ideals_within(h).into_iter().filter(|&n| n != h).collect();
        proper
            .iter()
            .copied()
            .filter(|&n| !proper.iter().any(|&m| m != n && m & n == n))
            .collect()
    }

    pub fn is_field(&self) -> bool {
        let n = self.order();
        let Some(one) = self.one() else { return false };
        let z = self.zero();
        n >= 2
            && (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
            && (0..n).filter(|&a| a != z).all(|a| (0..n).any(|b| self.mul(a, b) == one))
    }

    pub fn zero_divisor(&self) -> Option<(usize, usize)> {
        let n = self.order();
        let z = self.zero();
        (0..n)
            .filter(|&a| a != z)
            .flat_map(|a| (0..n).filter(move |&b| b != z).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) == z)
    }
}

fn ring_of<'a>(ms: &'a MultiSpace, c: &Component) -> (&'a OpTable, &'a OpTable) {
    let (a, m) = c.double_ops().expect("double");
    (ms.op(a).expect("validated"), ms.op(m).expect("validated"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingVerdict {
    pub component: String,
    pub failure: Option<RingFailure>,
    pub field: bool,
    /// Non-zero `(a, b)` with `a × b = 0`; recorded, not a failure.
    pub zero_divisors: Option<(Elem, Elem)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossLaw {
    pub outer: String,
    pub inner: String,
    pub law: &'static str,
    pub witness: (Elem, Elem, Elem),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiringReport {
    pub holds: bool,
    pub multi_field: bool,
    pub components: Vec<RingVerdict>,
    pub cross_failures: Vec<CrossLaw>,
    pub completed: bool,
    pub completeness_witness: Option<(Elem, Elem)>,
}

type Law = fn(&OpTable, &OpTable, &OpTable, &OpTable, Elem, Elem, Elem) -> Option<bool>;

// Each law returns Some(holds) when every product in it exists.
const CROSS_LAWS: [(&str, Law); 4] = [
    ("additive associativity", |ai, _, aj, _, x, y, z| {
        Some(aj.apply(ai.apply(x, y)?, z)? == ai.apply(x, aj.apply(y, z)?)?)
    }),
    ("multiplicative associativity", |_, mi, _, mj, x, y, z| {
        Some(mj.apply(mi.apply(x, y)?, z)? == mi.apply(x, mj.apply(y, z)?)?)
    }),
    ("left distributivity", |_, mi, aj, _, x, y, z| {
        Some(mi.apply(x, aj.apply(y, z)?)? == aj.apply(mi.apply(x, y)?, mi.apply(x, z)?)?)
    }),
    ("right distributivity", |_, mi, aj, _, x, y, z| {
        Some(mi.apply(aj.apply(y, z)?, x)? == aj.apply(mi.apply(y, x)?, mi.apply(z, x)?)?)
    }),
];

/// Each component must be a ring; for distinct components `i ≠ j` the mixed
/// associativity and distributivity laws must hold wherever every product
/// exists. Completeness and zero divisors are reported, not required.
pub fn is_multiring(ms: &MultiSpace) -> Result<MultiringReport> {
    if !ms.all_double() {
        return Err(Error::WrongStructure(
            "multi-rings need double-operation components".into(),
        ));
    }
    let components: Vec<RingVerdict> = ms
        .components()
        .iter()
        .map(|c| {
            let (add, mul) = ring_of(ms, c);
            let failure = ring_failure(add, mul, c.carrier());
            let view = failure.is_none().then(|| RingView::new(add, mul, c.carrier()).expect("ring"));
            RingVerdict {
                component: c.name().to_string(),
                field: view.as_ref().is_some_and(RingView::is_field),
                zero_divisors: view
                    .as_ref()
                    .and_then(|v| v.zero_divisor().map(|(a, b)| (v.global(a), v.global(b)))),
                failure,
            }
        })
        .collect();
    let union = ms.element_union();
    let mut cross_failures = Vec::new();
    for ci in ms.components() {
        for cj in ms.components() {
            if ci.name() == cj.name() {
                continue;
            }
            let (ai, mi) = ring_of(ms, ci);
            let (aj, mj) = ring_of(ms, cj);
            for (label, law) in CROSS_LAWS {
                let bad = union.iter().find_map(|&x| {
                    union.iter().find_map(|&y| {
                        union
                            .iter()
                            .find(|&&z| law(ai, mi, aj, mj, x, y, z) == Some(false))
                            .map(|&z| (x, y, z))
                    })
                });
                if let Some(witness) = bad {
                    cross_failures.push(CrossLaw {
                        outer: ci.name().to_string(),
                        inner: cj.name().to_string(),
                        law: label,
                        witness,
                    });
                }
            }
        }
    }
    let completeness_witness = ms.completeness_witness();
    Ok(MultiringReport {
        holds: components.iter().all(|c| c.failure.is_none()) && cross_failures.is_empty(),
        multi_field: components.iter().all(|c| c.field),
        components,
        cross_failures,
        completed: completeness_witness.is_none(),
        completeness_witness,
    })
}

fn require_multiring(ms: &MultiSpace) -> Result<()> {
    if is_multiring(ms)?.holds {
        Ok(())
    } else {
        Err(Error::Contract("the space is not a multi-ring".into()))
    }
}

fn views(ms: &MultiSpace) -> Result<Vec<(&Component, RingView)>> {
    ms.components()
        .iter()
        .map(|c| {
            let (a, m) = ring_of(ms, c);
            Ok((c, RingView::new(a, m, c.carrier())?))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubringVerdict {
    pub holds: bool,
    pub failing_component: Option<String>,
    pub closure_witness: Option<(Elem, Elem, String)>,
}

fn closure_witness(ms: &MultiSpace, sub: &SubsetView, ops: &[&str]) -> Result<Option<(Elem, Elem, String)>> {
    for op in ops {
        let t = ms.op(op)?;
        for &x in sub.elements() {
            for &y in sub.elements() {
                if t.apply(x, y).is_some_and(|z| !sub.contains(z)) {
                    return Ok(Some((x, y, op.to_string())));
                }
            }
        }
    }
    Ok(None)
}

fn view_ops(sub: &SubsetView) -> Vec<&str> {
    sub.ops().iter().map(String::as_str).collect()
}

/// Componentwise (`sub ∩ R_k` a subring or empty) against direct closure
/// under every operation of the view. The empty subset is never a
/// sub-multi-ring.
pub fn is_submultiring(ms: &MultiSpace, sub: &SubsetView) -> Result<SubringVerdict> {
    require_multiring(ms)?;
    let mut failing_component = None;
    for (c, v) in views(ms)? {
        let m = v.mask_of(sub.elements());
        if m != 0 && !v.is_subring(m) {
            failing_component = Some(c.name().to_string());
            break;
        }
    }
    let witness = closure_witness(ms, sub, &view_ops(sub))?;
    let nonempty = !sub.elements().is_empty();
    let a = failing_component.is_none() && nonempty;
    let b = witness.is_none() && nonempty;
    if a != b {
        return Err(Error::Consistency(format!(
            "componentwise subring test says {a}, closure test says {b}"
        )));
    }
    Ok(SubringVerdict {
        holds: a,
        failing_component,
        closure_witness: witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealVerdict {
    pub holds: bool,
    pub failing_component: Option<String>,
    /// `(r, a, op)` with `r × a` or `a × r` outside the subset.
    pub absorption_witness: Option<(Elem, Elem, String)>,
    pub closure_witness: Option<(Elem, Elem, String)>,
}

/// Componentwise ideal test against the direct one: additive closure plus
/// absorption of every defined `r × a` and `a × r`.
pub fn is_multiideal(ms: &MultiSpace, sub: &SubsetView) -> Result<IdealVerdict> {
    require_multiring(ms)?;
    let mut failing_component = None;
    for (c, v) in views(ms)? {
        let m = v.mask_of(sub.elements());
        if m != 0 && !v.is_ideal_of(m, v.full()) {
            failing_component = Some(c.name().to_string());
            break;
        }
    }
    let mut adds = Vec::new();
    let mut muls = Vec::new();
    for c in ms.components() {
        let (a, m) = c.double_ops().expect("double");
        if sub.ops().iter().any(|o| o == a || o == m) {
            adds.push(a);
            muls.push(m);
        }
    }
    let closure = closure_witness(ms, sub, &adds)?;
    let union = ms.element_union();
    let mut absorption_witness = None;
    'outer: for op in &muls {
        let t = ms.op(op)?;
        for &r in &union {
            for &a in sub.elements() {
                let escapes = |v: Option<Elem>| v.is_some_and(|z| !sub.contains(z));
                if escapes(t.apply(r, a)) || escapes(t.apply(a, r)) {
                    absorption_witness = Some((r, a, op.to_string()));
                    break 'outer;
                }
            }
        }
    }
    let nonempty = !sub.elements().is_empty();
    let a = failing_component.is_none() && nonempty;
    let b = closure.is_none() && absorption_witness.is_none() && nonempty;
    if a != b {
        return Err(Error::Consistency(format!(
            "componentwise ideal test says {a}, direct test says {b}"
        )));
    }
    Ok(IdealVerdict {
        holds: a,
        failing_component,
        absorption_witness,
        closure_witness: closure,
    })
}

struct IdealStage {
    view: RingView,
    label: String,
}

impl Stage for IdealStage {
    fn op_label(&self) -> String {
        self.label.clone()
    }
    fn start(&self) -> Mask {
        self.view.full()
    }
    fn is_bottom(&self, m: Mask) -> bool {
        popcount(m) <= 1
    }
    fn maximal_below(&self, m: Mask) -> Vec<Mask> {
        self.view.maximal_ideals_of(m)
    }
    fn elems_of(&self, m: Mask) -> Vec<Elem> {
        self.view.elems_of(m)
    }
}

fn component_for<'a>(ms: &'a MultiSpace, name: &str) -> Result<&'a Component> {
    ms.component_of_op(name)
        .or_else(|| ms.component(name))
        .ok_or_else(|| Error::UnknownOperation(name.to_string()))
}

/// Maximal multi-ideal chains: each oriented double operation (named by
/// either of its operations, or by its component) descends through maximal
/// ideals of its ring in turn.
pub fn multiideal_chain(ms: &MultiSpace, orientation: &[String]) -> Result<SeriesReport> {
    require_multiring(ms)?;
    let union = ms.element_union();
    check_size("element union", union.len(), SERIES_UNION_LIMIT)?;
    let comps = orientation
        .iter()
        .map(|o| component_for(ms, o))
        .collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = comps
        .iter()
        .map(|c| c.double_ops().expect("double").0.to_string())
        .collect();
    check_orientation(ms, &names)?;
    let stages = comps
        .iter()
        .map(|c| {
            let (a, m) = ring_of(ms, c);
            Ok(Box::new(IdealStage {
                view: RingView::new(a, m, c.carrier())?,
                label: format!("({},{})", a.name(), m.name()),
            }) as Box<dyn Stage>)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(run_stages(ChainKind::IdealChain, &union, &stages, orientation.to_vec()))
}

/// Each level meets every component in an ideal of the ring the previous
/// level cuts out of that component.
pub fn chain_step_is_ideal(ms: &MultiSpace, prev: &[Elem], next: &[Elem]) -> Result<bool> {
    for (_, v) in views(ms)? {
        let (p, n) = (v.mask_of(prev), v.mask_of(next));
        if p != 0 && v.is_subring(p) && !v.is_ideal_of(n, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArtinReport {
    pub artin: bool,
    /// Ideal-chain lengths under the declaration-order orientation, when the
    /// union is small enough to enumerate.
    pub chain_lengths: Option<BTreeSet<usize>>,
}

/// Every finite ring is Artin, so for finite multi-rings this always holds;
/// the chain lengths are reported alongside.
pub fn is_artin(ms: &MultiSpace) -> Result<ArtinReport> {
    require_multiring(ms)?;
    let orientation: Vec<String> = ms.components().iter().map(|c| c.name().to_string()).collect();
    let chain_lengths = if ms.element_union().len() <= SERIES_UNION_LIMIT {
        Some(multiideal_chain(ms, &orientation)?.lengths)
    } else {
        None
    };
    Ok(ArtinReport {
        artin: true,
        chain_lengths,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentSet {
    pub component: String,
    pub elements: Vec<Elem>,
    /// `products[i][j] = e_i × e_j`.
    pub products: Vec<Vec<Elem>>,
    /// Families of at least two non-zero, pairwise orthogonal idempotents.
    pub orthogonal_families: Vec<Vec<Elem>>,
    /// Orthogonal families of non-zero idempotents summing to the unit.
    pub unit_decompositions: Vec<Vec<Elem>>,
    pub zero: Elem,
    pub one: Option<Elem>,
}

fn subsets_of(items: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (1u64..1 << items.len()).map(move |bitsel| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| bitsel >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect()
    })
}

pub fn idempotents(ms: &MultiSpace, component: &str) -> Result<IdempotentSet> {
    let c = ms
        .component(component)
        .ok_or_else(|| Error::Input(format!("no component `{component}`")))?;
    if c.double_ops().is_none() {
        return Err(Error::WrongStructure(format!("`{component}` has a single operation")));
    }
    let (add, mul) = ring_of(ms, c);
    let v = RingView::new(add, mul, c.carrier())?;
    let n = v.order();
    let local: Vec<usize> = (0..n).filter(|&e| v.mul(e, e) == e).collect();
    if local.len() > 20 {
        return Err(Error::SizeLimit {
            what: "idempotent set",
            limit: 20,
            actual: local.len(),
        });
    }
    let z = v.zero();
    let nonzero: Vec<usize> = local.iter().copied().filter(|&e| e != z).collect();
    let orthogonal = |f: &[usize]| {
        f.iter()
            .all(|&a| f.iter().all(|&b| a == b || v.mul(a, b) == z))
    };
    let sum = |f: &[usize]| f.iter().fold(z, |acc, &e| v.additive().mul(acc, e));
    let mut orthogonal_families = Vec::new();
    let mut unit_decompositions = Vec::new();
    for f in subsets_of(&nonzero) {
        if !orthogonal(&f) {
            continue;
        }
        let g: Vec<Elem> = f.iter().map(|&i| v.global(i)).collect();
        if Some(sum(&f)) == v.one() {
            unit_decompositions.push(g.clone());
        }
        if f.len() >= 2 {
            orthogonal_families.push(g);
        }
    }
    Ok(IdempotentSet {
        component: component.to_string(),
        elements: local.iter().map(|&i| v.global(i)).collect(),
        products: local
            .iter()
            .map(|&a| local.iter().map(|&b| v.global(v.mul(a, b))).collect())
            .collect(),
        orthogonal_families,
        unit_decompositions,
        zero: v.global(z),
        one: v.one().map(|o| v.global(o)),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub idempotent: Elem,
    /// `R × e`.
    pub right: Vec<Elem>,
    /// `e × R`.
    pub left: Vec<Elem>,
    pub elements: Vec<Elem>,
    pub is_ideal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDecomposition {
    pub component: String,
    pub idempotents: Vec<Elem>,
    pub pieces: Vec<Piece>,
    /// Pieces pairwise meet only in the zero.
    pub zero_intersections: bool,
    /// Every element is exactly one sum of one element from each piece.
    pub unique_sums: bool,
    /// `r = Σ_j r × e_j` for every `r`.
    pub reconstruction_exact: bool,
    /// `R × e = e × R` for every piece.
    pub two_sided_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub components: Vec<ComponentDecomposition>,
}

impl Decomposition {
    pub fn verified(&self) -> bool {
        self.components.iter().all(|c| {
            c.zero_intersections
                && c.unique_sums
                && c.reconstruction_exact
                && c.pieces.iter().all(|p| p.is_ideal)
        })
    }
}

/// Splits each unital component along its finest orthogonal idempotent
/// family summing to the unit: `R = ⊕_j (R × e_j) ∪ (e_j × R)`.
pub fn decompose_artin(ms: &MultiSpace) -> Result<Decomposition> {
    require_multiring(ms)?;
    let mut out = Vec::new();
    for (c, v) in views(ms)? {
        if v.one().is_none() {
            return Err(Error::Contract(format!(
                "component `{}` has no multiplicative unit",
                c.name()
            )));
        }
        let idem = idempotents(ms, c.name())?;
        let family = idem
            .unit_decompositions
            .iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
            .expect("the unit alone is a decomposition")
            .clone();
        let n = v.order();
        let local: Vec<usize> = family.iter().map(|&e| v.additive().local(e).expect("in ring")).collect();
        let pieces: Vec<(Piece, Mask)> = local
            .iter()
            .map(|&e| {
                let right: Mask = (0..n).fold(0, |m, r| m | 1 << v.mul(r, e));
                let left: Mask = (0..n).fold(0, |m, r| m | 1 << v.mul(e, r));
                let both = right | left;
                (
                    Piece {
                        idempotent: v.global(e),
                        right: v.elems_of(right),
                        left: v.elems_of(left),
                        elements: v.elems_of(both),
                        is_ideal: v.is_ideal_of(both, v.full()),
                    },
                    both,
                )
            })
            .collect();
        let zero = 1 << v.zero();
        let zero_intersections = pieces.iter().enumerate().all(|(i, (_, a))| {
            pieces[i + 1..].iter().all(|(_, b)| a & b == zero)
        });
        let mut counts = vec![0usize; n];
        let mut sums = vec![v.zero()];
        for (_, m) in &pieces {
            sums = sums
                .iter()
                .flat_map(|&s| bits(*m).map(move |p| (s, p)))
                .map(|(s, p)| v.additive().mul(s, p))
                .collect();
        }
        for s in sums {
            counts[s] += 1;
        }
        let unique_sums = counts.iter().all(|&k| k == 1);
        let reconstruction_exact = (0..n).all(|r| {
            local.iter().fold(v.zero(), |acc, &e| v.additive().mul(acc, v.mul(r, e))) == r
        });
        out.push(ComponentDecomposition {
            component: c.name().to_string(),
            idempotents: family,
            two_sided_agree: pieces.iter().all(|(p, _)| p.left == p.right),
            pieces: pieces.into_iter().map(|(p, _)| p).collect(),
            zero_intersections,
            unique_sums,
            reconstruction_exact,
        });
    }
    Ok(Decomposition { components: out })
}
