//! Multi-groups: verification, sub-multi-groups, cosets, normality and
//! maximal normal series under an oriented operation sequence.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::group::{popcount, prime_factor_count, GroupView, Mask};
use crate::algebra::space::MultiSpace;
use crate::algebra::table::{classify_table, find_inverses, find_units, ClassWitness, OpTable, TableKind};
use crate::error::{check_size, Error, Result};
use crate::Elem;

pub const SERIES_UNION_LIMIT: usize = 24;
/// Chains listed explicitly; lengths are always computed over all chains.
pub const CHAIN_LISTING_CAP: usize = 256;

/// A subset of a multi-space's element union together with the operations
/// it is considered under.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetView {
    elements: Vec<Elem>,
    ops: Vec<String>,
}

impl SubsetView {
    pub fn new(ms: &MultiSpace, mut elements: Vec<Elem>, ops: Vec<String>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let union = ms.element_union();
        if let Some(&x) = elements.iter().find(|x| union.binary_search(x).is_err()) {
            return Err(Error::Input(format!(
                "`{}` is not in any component",
                ms.name_of(x)
            )));
        }
        for op in &ops {
            ms.op(op)?;
        }
        Ok(SubsetView { elements, ops })
    }

    /// Under the operations of every component the subset meets.
    pub fn spanning(ms: &MultiSpace, elements: Vec<Elem>) -> Result<Self> {
        let mut ops = Vec::new();
        for c in ms.components() {
            if elements.iter().any(|&x| c.contains(x)) {
                for op in c.ops().names() {
                    if !ops.iter().any(|o| o == op) {
                        ops.push(op.to_string());
                    }
                }
            }
        }
        Self::new(ms, elements, ops)
    }

    pub fn whole(ms: &MultiSpace) -> Self {
        let ops = ms.ops().iter().map(|o| o.name().to_string()).collect();
        SubsetView {
            elements: ms.element_union(),
            ops,
        }
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn ops(&self) -> &[String] {
        &self.ops
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    pub component: String,
    pub op: String,
    /// `None` when the operation is not total and closed on the carrier.
    pub kind: Option<TableKind>,
    pub failures: Vec<ClassWitness>,
}

impl ComponentVerdict {
    pub fn is_group(&self) -> bool {
        self.kind.is_some_and(TableKind::is_group)
    }
}

/// Which operation of a pair distributes over the other, if either does.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairLaw {
    pub first: String,
    pub second: String,
    /// `Some((outer, inner))`: `outer` distributes over `inner`.
    pub holds: Option<(String, String)>,
    /// First failing `(x, y, z)` for `first` over `second` when neither holds.
    pub witness: Option<(Elem, Elem, Elem)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultigroupReport {
    pub holds: bool,
    pub components: Vec<ComponentVerdict>,
    pub completed: bool,
    pub completeness_witness: Option<(Elem, Elem)>,
    pub distribution: Vec<PairLaw>,
}

pub(crate) fn component_kind(t: &OpTable, carrier: &[Elem]) -> (Option<TableKind>, Vec<ClassWitness>) {
    match t.restrict(carrier).and_then(|r| classify_table(&r)) {
        Ok(c) => (Some(c.kind), c.failures),
        Err(_) => (None, Vec::new()),
    }
}

/// First `(x, y, z)` over `union` where all of `y∘z`, `x×(y∘z)`, `x×y`,
/// `x×z`, `(x×y)∘(x×z)` exist and differ, or the right-hand analogue fails.
pub fn distribution_witness(outer: &OpTable, inner: &OpTable, union: &[Elem]) -> Option<(Elem, Elem, Elem)> {
    for &x in union {
        for &y in union {
            for &z in union {
                let Some(yz) = inner.apply(y, z) else { continue };
                let left = (|| {
                    let l = outer.apply(x, yz)?;
                    let r = inner.apply(outer.apply(x, y)?, outer.apply(x, z)?)?;
                    Some(l != r)
                })();
                let right = (|| {
                    let l = outer.apply(yz, x)?;
                    let r = inner.apply(outer.apply(y, x)?, outer.apply(z, x)?)?;
                    Some(l != r)
                })();
                if left == Some(true) || right == Some(true) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Components must be groups and every pair of distinct operations must
/// satisfy the distribution law in at least one orientation wherever all
/// products exist. Completeness is reported alongside but not required.
pub fn is_multigroup(ms: &MultiSpace) -> Result<MultigroupReport> {
    if !ms.all_single() {
        return Err(Error::WrongStructure(
            "multi-groups need single-operation components".into(),
        ));
    }
    let components: Vec<ComponentVerdict> = ms
        .components()
        .iter()
        .map(|c| {
            let op = c.single_op().expect("single");
            let (kind, failures) = component_kind(ms.op(op).expect("validated"), c.carrier());
            ComponentVerdict {
                component: c.name().to_string(),
                op: op.to_string(),
                kind,
                failures,
            }
        })
        .collect();
    let union = ms.element_union();
    let ops = ms.ops();
    let mut distribution = Vec::new();
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            let (a, b) = (&ops[i], &ops[j]);
            let forward = distribution_witness(a, b, &union);
            let holds = if forward.is_none() {
                Some((a.name().to_string(), b.name().to_string()))
            } else if distribution_witness(b, a, &union).is_none() {
                Some((b.name().to_string(), a.name().to_string()))
            } else {
                None
            };
            distribution.push(PairLaw {
                first: a.name().to_string(),
                second: b.name().to_string(),
                witness: if holds.is_none() { forward } else { None },
                holds,
            });
        }
    }
    let completeness_witness = ms.completeness_witness();
    Ok(MultigroupReport {
        holds: components.iter().all(ComponentVerdict::is_group)
            && distribution.iter().all(|p| p.holds.is_some()),
        components,
        completed: completeness_witness.is_none(),
        completeness_witness,
        distribution,
    })
}

fn require_multigroup(ms: &MultiSpace) -> Result<()> {
    let report = is_multigroup(ms)?;
    if report.holds {
        Ok(())
    } else {
        Err(Error::Contract("the space is not a multi-group".into()))
    }
}

fn op_of_component<'a>(ms: &'a MultiSpace, c: &crate::algebra::space::Component) -> &'a OpTable {
    ms.op(c.single_op().expect("single")).expect("validated")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubmultigroupVerdict {
    pub holds: bool,
    /// Component whose intersection fails to be a subgroup.
    pub failing_component: Option<String>,
    /// `(x, y, op)` with `x op y` defined but outside the subset.
    pub closure_witness: Option<(Elem, Elem, String)>,
}

/// Decided twice: componentwise (each `sub ∩ G_k` a subgroup or empty) and
/// by closure under every operation of the view. The two must agree. The
/// empty subset is never a sub-multi-group.
pub fn is_submultigroup(ms: &MultiSpace, sub: &SubsetView) -> Result<SubmultigroupVerdict> {
    require_multigroup(ms)?;
    let mut failing_component = None;
    for c in ms.components() {
        let inter: Vec<Elem> = sub.elements().iter().copied().filter(|&x| c.contains(x)).collect();
        if inter.is_empty() {
            continue;
        }
        let t = op_of_component(ms, c);
        let g = GroupView::new(t, c.carrier())?;
        if !g.is_subgroup(g.mask_of(&inter)) {
            failing_component = Some(c.name().to_string());
            break;
        }
    }
    let mut closure_witness = None;
    'ops: for op in sub.ops() {
        let t = ms.op(op)?;
        for &x in sub.elements() {
            for &y in sub.elements() {
                if let Some(z) = t.apply(x, y) {
                    if !sub.contains(z) {
                        closure_witness = Some((x, y, op.clone()));
                        break 'ops;
                    }
                }
            }
        }
    }
    let nonempty = !sub.elements().is_empty();
    let a = failing_component.is_none() && nonempty;
    let b = closure_witness.is_none() && nonempty;
    if a != b {
        return Err(Error::Consistency(format!(
            "componentwise test says {a}, closure test says {b}"
        )));
    }
    Ok(SubmultigroupVerdict {
        holds: a,
        failing_component,
        closure_witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coset {
    pub representative: Elem,
    pub elements: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetReport {
    /// Distinct sets `xH̃` over the element union, by first representative.
    pub cosets: Vec<Coset>,
    /// Whether those distinct cosets are already pairwise disjoint.
    pub pairwise_disjoint: bool,
    /// A representation set `T` whose cosets partition the union.
    pub partition: Vec<Coset>,
}

/// `xH̃ = {x × h : h ∈ H̃, × an operation of H̃, defined}` for every `x`,
/// then a choice of representatives whose cosets tile the element union.
///
/// For several operations the raw cosets can overlap without coinciding,
/// so the tiling is found by exact-cover search over the distinct cosets.
pub fn coset_partition(ms: &MultiSpace, sub: &SubsetView) -> Result<CosetReport> {
    if !is_submultigroup(ms, sub)?.holds {
        return Err(Error::Contract("the subset is not a sub-multi-group".into()));
    }
    let union = ms.element_union();
    let tables = sub.ops().iter().map(|o| ms.op(o)).collect::<Result<Vec<_>>>()?;
    let mut cosets: Vec<Coset> = Vec::new();
    for &x in &union {
        let set: BTreeSet<Elem> = tables
            .iter()
            .flat_map(|t| sub.elements().iter().filter_map(move |&h| t.apply(x, h)))
            .collect();
        if set.is_empty() {
            return Err(Error::Contract(format!(
                "`{}` meets no operation of the subset, so its coset is empty",
                ms.name_of(x)
            )));
        }
        let elements: Vec<Elem> = set.into_iter().collect();
        if !cosets.iter().any(|c| c.elements == elements) {
            cosets.push(Coset {
                representative: x,
                elements,
            });
        }
    }
    let pairwise_disjoint = cosets.iter().enumerate().all(|(i, a)| {
        cosets[i + 1..]
            .iter()
            .all(|b| a.elements.iter().all(|x| b.elements.binary_search(x).is_err()))
    });
    let chosen = exact_cover(&union, &cosets).ok_or_else(|| {
        Error::Contract("no choice of representatives partitions the union".into())
    })?;
    Ok(CosetReport {
        partition: chosen.into_iter().map(|i| cosets[i].clone()).collect(),
        cosets,
        pairwise_disjoint,
    })
}

fn exact_cover(universe: &[Elem], sets: &[Coset]) -> Option<Vec<usize>> {
    fn rec(uncovered: &mut BTreeSet<Elem>, sets: &[Coset], chosen: &mut Vec<usize>) -> bool {
        let Some(&first) = uncovered.iter().next() else {
            return true;
        };
        for (i, s) in sets.iter().enumerate() {
            if s.elements.binary_search(&first).is_ok() && s.elements.iter().all(|x| uncovered.contains(x)) {
                for x in &s.elements {
                    uncovered.remove(x);
                }
                chosen.push(i);
                if rec(uncovered, sets, chosen) {
                    return true;
                }
                chosen.pop();
                uncovered.extend(s.elements.iter().copied());
            }
        }
        false
    }
    let mut uncovered: BTreeSet<Elem> = universe.iter().copied().collect();
    let mut chosen = Vec::new();
    rec(&mut uncovered, sets, &mut chosen).then(|| {
        chosen.sort_by_key(|&i| sets[i].representative);
        chosen
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LagrangeReport {
    pub order: usize,
    pub subgroup_orders: BTreeSet<usize>,
    pub subgroup_count: usize,
    pub all_divide: bool,
}

pub fn lagrange_check(t: &OpTable) -> Result<LagrangeReport> {
    let g = GroupView::new(t, t.domain())?;
    let subs = g.subgroups();
    let subgroup_orders: BTreeSet<usize> = subs.iter().map(|&m| popcount(m)).collect();
    Ok(LagrangeReport {
        order: g.order(),
        all_divide: subgroup_orders.iter().all(|&h| g.order() % h == 0),
        subgroup_count: subs.len(),
        subgroup_orders,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalityVerdict {
    pub holds: bool,
    /// `(g, h, op)` with `g × h × g⁻¹` outside the subset.
    pub witness: Option<(Elem, Elem, String)>,
    pub failing_component: Option<String>,
}

/// Direct conjugation test over every operation of the view, checked
/// against the componentwise criterion.
pub fn is_normal(ms: &MultiSpace, sub: &SubsetView) -> Result<NormalityVerdict> {
    if !is_submultigroup(ms, sub)?.holds {
        return Err(Error::Contract("the subset is not a sub-multi-group".into()));
    }
    let mut witness = None;
    'ops: for op in sub.ops() {
        let t = ms.op(op)?;
        let Some(unit) = find_units(t).unit else { continue };
        let inverses = find_inverses(t, unit)?;
        for (g, inv) in t.domain().iter().zip(&inverses) {
            let Some(g_inv) = inv.inverse else { continue };
            for &h in sub.elements() {
                let conj = t.apply(*g, h).and_then(|gh| t.apply(gh, g_inv));
                if let Some(c) = conj {
                    if !sub.contains(c) {
                        witness = Some((*g, h, op.clone()));
                        break 'ops;
                    }
                }
            }
        }
    }
    let mut failing_component = None;
    for c in ms.components() {
        let inter: Vec<Elem> = sub.elements().iter().copied().filter(|&x| c.contains(x)).collect();
        if inter.is_empty() || !sub.ops().iter().any(|o| Some(o.as_str()) == c.single_op()) {
            continue;
        }
        let g = GroupView::new(op_of_component(ms, c), c.carrier())?;
        if !g.is_normal_in(g.mask_of(&inter), g.full()) {
            failing_component = Some(c.name().to_string());
            break;
        }
    }
    if witness.is_none() != failing_component.is_none() {
        return Err(Error::Consistency(
            "direct conjugation and componentwise normality disagree".into(),
        ));
    }
    Ok(NormalityVerdict {
        holds: witness.is_none(),
        witness,
        failing_component,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainKind {
    NormalSeries,
    IdealChain,
}

/// Strictly decreasing levels; `step_ops[i]` labels the step from level `i`
/// to level `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesChain {
    pub kind: ChainKind,
    pub levels: Vec<Vec<Elem>>,
    pub step_ops: Vec<String>,
}

impl SeriesChain {
    pub fn len(&self) -> usize {
        self.step_ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.step_ops.is_empty()
    }

    pub fn strictly_decreasing(&self) -> bool {
        self.levels.windows(2).all(|w| {
            w[1].len() < w[0].len() && w[1].iter().all(|x| w[0].binary_search(x).is_ok())
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesReport {
    pub orientation: Vec<String>,
    /// Lengths over every maximal chain, not just the listed ones.
    pub lengths: BTreeSet<usize>,
    pub chain_count: u128,
    pub chains: Vec<SeriesChain>,
    /// More chains exist than are listed.
    pub truncated: bool,
}

impl SeriesReport {
    pub fn constant_length(&self) -> bool {
        self.lengths.len() == 1
    }

    pub fn length(&self) -> Option<usize> {
        self.constant_length().then(|| *self.lengths.iter().next().expect("one length"))
    }
}

/// One oriented stage: a substructure of one component and its maximal
/// proper "next" substructures.
pub(crate) trait Stage {
    fn op_label(&self) -> String;
    fn start(&self) -> Mask;
    fn is_bottom(&self, m: Mask) -> bool;
    fn maximal_below(&self, m: Mask) -> Vec<Mask>;
    fn elems_of(&self, m: Mask) -> Vec<Elem>;
}

struct NormalStage {
    view: GroupView,
    op: String,
}

impl Stage for NormalStage {
    fn op_label(&self) -> String {
        self.op.clone()
    }
    fn start(&self) -> Mask {
        self.view.full()
    }
    fn is_bottom(&self, m: Mask) -> bool {
        popcount(m) <= 1
    }
    fn maximal_below(&self, m: Mask) -> Vec<Mask> {
        self.view.maximal_normal_subgroups(m)
    }
    fn elems_of(&self, m: Mask) -> Vec<Elem> {
        self.view.elems_of(m)
    }
}

/// Shared driver: stage `k` descends from its start to its bottom, removing
/// `H \ N` from the running level at each step, then hands over to `k + 1`.
pub(crate) fn run_stages(
    kind: ChainKind,
    union: &[Elem],
    stages: &[Box<dyn Stage + '_>],
    orientation: Vec<String>,
) -> SeriesReport {
    type Memo = BTreeMap<(usize, Mask), (BTreeSet<usize>, u128)>;
    fn lengths(stages: &[Box<dyn Stage + '_>], k: usize, m: Mask, memo: &mut Memo) -> (BTreeSet<usize>, u128) {
        if k == stages.len() {
            return (BTreeSet::from([0]), 1);
        }
        if let Some(hit) = memo.get(&(k, m)) {
            return hit.clone();
        }
        let out = if stages[k].is_bottom(m) {
            let next = if k + 1 < stages.len() { stages[k + 1].start() } else { 0 };
            lengths(stages, k + 1, next, memo)
        } else {
            let mut set = BTreeSet::new();
            let mut count = 0u128;
            for n in stages[k].maximal_below(m) {
                let (ls, c) = lengths(stages, k, n, memo);
                set.extend(ls.into_iter().map(|l| l + 1));
                count = count.saturating_add(c);
            }
            (set, count)
        };
        memo.insert((k, m), out.clone());
        out
    }

    struct Walk<'s, 'a> {
        stages: &'s [Box<dyn Stage + 'a>],
        kind: ChainKind,
        levels: Vec<Vec<Elem>>,
        ops: Vec<String>,
        out: Vec<SeriesChain>,
        truncated: bool,
    }
    impl Walk<'_, '_> {
        fn go(&mut self, k: usize, m: Mask) {
            if self.out.len() >= CHAIN_LISTING_CAP {
                self.truncated = true;
                return;
            }
            if k == self.stages.len() {
                self.out.push(SeriesChain {
                    kind: self.kind,
                    levels: self.levels.clone(),
                    step_ops: self.ops.clone(),
                });
                return;
            }
            let stage = &self.stages[k];
            if stage.is_bottom(m) {
                let next = if k + 1 < self.stages.len() { self.stages[k + 1].start() } else { 0 };
                self.go(k + 1, next);
                return;
            }
            let current: BTreeSet<Elem> = stage.elems_of(m).into_iter().collect();
            for n in stage.maximal_below(m) {
                let keep: BTreeSet<Elem> = stage.elems_of(n).into_iter().collect();
                let level: Vec<Elem> = self
                    .levels
                    .last()
                    .expect("initial level")
                    .iter()
                    .copied()
                    .filter(|x| !current.contains(x) || keep.contains(x))
                    .collect();
                self.levels.push(level);
                self.ops.push(stage.op_label());
                self.go(k, n);
                self.levels.pop();
                self.ops.pop();
            }
        }
    }

    let first = stages.first().map_or(0, |s| s.start());
    let mut memo = Memo::new();
    let (lengths, chain_count) = lengths(stages, 0, first, &mut memo);
    let mut walk = Walk {
        stages,
        kind,
        levels: vec![union.to_vec()],
        ops: Vec::new(),
        out: Vec::new(),
        truncated: false,
    };
    walk.go(0, first);
    SeriesReport {
        orientation,
        lengths,
        chain_count,
        chains: walk.out,
        truncated: walk.truncated || chain_count > CHAIN_LISTING_CAP as u128,
    }
}

pub(crate) fn check_orientation(ms: &MultiSpace, orientation: &[String]) -> Result<()> {
    for (i, op) in orientation.iter().enumerate() {
        ms.op(op)?;
        if orientation[..i].contains(op) {
            return Err(Error::Input(format!("operation `{op}` repeated in the orientation")));
        }
    }
    Ok(())
}

/// Every maximal chain built by descending through maximal normal subgroups
/// of each oriented component in turn, the next level being
/// `G̃ \ (H \ N)` for the current subgroup `H` and chosen `N`.
pub fn maximal_normal_series(ms: &MultiSpace, orientation: &[String]) -> Result<SeriesReport> {
    require_multigroup(ms)?;
    check_orientation(ms, orientation)?;
    let union = ms.element_union();
    check_size("element union", union.len(), SERIES_UNION_LIMIT)?;
    let stages = orientation
        .iter()
        .map(|op| {
            let c = ms
                .component_of_op(op)
                .ok_or_else(|| Error::Input(format!("operation `{op}` belongs to no component")))?;
            Ok(Box::new(NormalStage {
                view: GroupView::new(ms.op(op)?, c.carrier())?,
                op: op.clone(),
            }) as Box<dyn Stage>)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(run_stages(ChainKind::NormalSeries, &union, &stages, orientation.to_vec()))
}

/// Composition series of a single group table.
pub fn composition_series(t: &OpTable) -> Result<SeriesReport> {
    check_size("group", t.domain().len(), SERIES_UNION_LIMIT)?;
    let stage = NormalStage {
        view: GroupView::new(t, t.domain())?,
        op: t.name().to_string(),
    };
    let stages: Vec<Box<dyn Stage>> = vec![Box::new(stage)];
    Ok(run_stages(
        ChainKind::NormalSeries,
        t.domain(),
        &stages,
        vec![t.name().to_string()],
    ))
}

/// Number of prime factors of `|G|`, the composition length of any
/// abelian group of that order.
pub fn abelian_series_length(order: usize) -> usize {
    prime_factor_count(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{self, groups, latin_multispace};
    use crate::foundations::FiniteUniverse;

    fn single(g: &groups::CayleyGroup) -> MultiSpace {
        constructions::group_union(std::slice::from_ref(g), false, "x").unwrap()
    }

    #[test]
    fn verifier() {
        assert!(is_multigroup(&single(&groups::cyclic(4))).unwrap().holds);
        let shared = constructions::group_union(&[groups::cyclic(4), groups::cyclic(2)], true, "x").unwrap();
        let r = is_multigroup(&shared).unwrap();
        assert!(r.holds);
        assert!(!r.completed);
        let s = FiniteUniverse::new(["1", "2", "3"]).unwrap();
        let latin = latin_multispace(&s, &constructions::example_squares()).unwrap();
        let r = is_multigroup(&latin).unwrap();
        assert!(!r.holds);
        assert!(matches!(r.components[1].failures[0], ClassWitness::NotAssociative(..)));
        assert!(is_multigroup(&constructions::zn_ring(3).unwrap()).is_err());
    }

    #[test]
    fn subgroups_of_two_z6() {
        let ms = constructions::disjoint_cyclic_union(&[6, 6]).unwrap();
        let u = ms.universe();
        let names = ["g1_0", "g1_2", "g1_4", "g2_0", "g2_2", "g2_4"];
        let sub = SubsetView::spanning(&ms, u.lookup_all(&names).unwrap()).unwrap();
        assert!(is_submultigroup(&ms, &sub).unwrap().holds);
        let bad = SubsetView::spanning(&ms, u.lookup_all(&["g1_1", "g1_2"]).unwrap()).unwrap();
        let v = is_submultigroup(&ms, &bad).unwrap();
        assert!(!v.holds);
        assert!(v.closure_witness.is_some());
        assert!(is_submultigroup(&ms, &SubsetView::whole(&ms)).unwrap().holds);
    }

    #[test]
    fn cosets() {
        let ms = single(&groups::cyclic(6));
        let sub = SubsetView::spanning(&ms, vec![0, 3]).unwrap();
        let r = coset_partition(&ms, &sub).unwrap();
        assert_eq!(r.partition.len(), 3);
        assert!(r.pairwise_disjoint);
        let whole = coset_partition(&ms, &SubsetView::whole(&ms)).unwrap();
        assert_eq!(whole.partition.len(), 1);

        let shared = constructions::group_union(&[groups::cyclic(4), groups::cyclic(6)], true, "x").unwrap();
        let u = shared.universe();
        let sub = SubsetView::spanning(&shared, u.lookup_all(&["e", "g1_2", "g2_2", "g2_4"]).unwrap()).unwrap();
        let r = coset_partition(&shared, &sub).unwrap();
        let mut covered: Vec<Elem> = r.partition.iter().flat_map(|c| c.elements.clone()).collect();
        covered.sort_unstable();
        assert_eq!(covered, shared.element_union());
        assert!(!r.pairwise_disjoint);
    }

    #[test]
    fn lagrange() {
        let r = lagrange_check(&groups::cyclic(6).table("+")).unwrap();
        assert_eq!(r.subgroup_orders, BTreeSet::from([1, 2, 3, 6]));
        assert!(r.all_divide);
        assert_eq!(lagrange_check(&groups::cyclic(5).table("+")).unwrap().subgroup_orders, BTreeSet::from([1, 5]));
        assert_eq!(lagrange_check(&groups::cyclic(1).table("+")).unwrap().subgroup_orders, BTreeSet::from([1]));
    }

    #[test]
    fn normality() {
        let ms = single(&groups::symmetric(3));
        let t = ms.op("x1").unwrap();
        let transposition = (1..6).find(|&a| t.apply(a, a) == Some(0)).unwrap();
        let sub = SubsetView::spanning(&ms, vec![0, transposition]).unwrap();
        let v = is_normal(&ms, &sub).unwrap();
        assert!(!v.holds);
        assert!(v.witness.is_some());
        assert!(is_normal(&ms, &SubsetView::spanning(&ms, vec![0]).unwrap()).unwrap().holds);
        let ab = single(&groups::cyclic(6));
        assert!(is_normal(&ab, &SubsetView::spanning(&ab, vec![0, 2, 4]).unwrap()).unwrap().holds);
    }

    #[test]
    fn series() {
        let z8 = single(&groups::cyclic(8));
        let r = maximal_normal_series(&z8, &["x1".into()]).unwrap();
        assert_eq!(r.length(), Some(3));
        assert!(r.chains.iter().all(SeriesChain::strictly_decreasing));
        let s3 = composition_series(&groups::symmetric(3).table("o")).unwrap();
        assert_eq!(s3.length(), Some(2));
        let shared = constructions::group_union(&[groups::cyclic(4), groups::cyclic(2)], true, "x").unwrap();
        let r = maximal_normal_series(&shared, &["x1".into(), "x2".into()]).unwrap();
        assert_eq!(r.length(), Some(3));
        assert_eq!(r.chains[0].levels.last().unwrap(), &vec![0]);
        assert_eq!(composition_series(&groups::cyclic(12).table("+")).unwrap().length(), Some(3));
        assert_eq!(composition_series(&groups::cyclic(7).table("+")).unwrap().length(), Some(1));
        assert_eq!(composition_series(&groups::cyclic(1).table("+")).unwrap().length(), Some(0));
    }
}
