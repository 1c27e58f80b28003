//! Finite set machinery: universes, Boolean-law verification over power
//! sets, partial orders, equivalence classes and neutrosophic unions.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_size, Error, Result};

/// Largest universe whose power set `check_boolean_laws` will enumerate.
pub const BOOLEAN_LAW_LIMIT: usize = 6;

/// An ordered list of distinct symbol names. The order fixes element indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FiniteUniverse {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl FiniteUniverse {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut u = FiniteUniverse::default();
        for name in names {
            u.push(name.into())?;
        }
        Ok(u)
    }

    /// Universe `{0, 1, ..., n-1}` with decimal names.
    pub fn numbered(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string())).expect("numbers are distinct")
    }

    pub fn push(&mut self, name: String) -> Result<usize> {
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateElement(name));
        }
        let idx = self.names.len();
        self.index.insert(name.clone(), idx);
        self.names.push(name);
        Ok(idx)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn lookup_all<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names.iter().map(|n| self.lookup(n.as_ref())).collect()
    }

    pub fn render_set<'a, I: IntoIterator<Item = &'a usize>>(&self, set: I) -> String {
        let parts: Vec<&str> = set.into_iter().map(|&i| self.name(i)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

// ---------------------------------------------------------------------------
// Boolean algebra of subsets
// ---------------------------------------------------------------------------

/// The seven laws satisfied by the subsets of a set under union, intersection
/// and complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BooleanLaw {
    Idempotent,
    Commutative,
    Associative,
    Absorption,
    Distributive,
    UniversalBound,
    Complement,
}

impl BooleanLaw {
    pub const ALL: [BooleanLaw; 7] = [
        BooleanLaw::Idempotent,
        BooleanLaw::Commutative,
        BooleanLaw::Associative,
        BooleanLaw::Absorption,
        BooleanLaw::Distributive,
        BooleanLaw::UniversalBound,
        BooleanLaw::Complement,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BooleanLaw::Idempotent => "L1 idempotent",
            BooleanLaw::Commutative => "L2 commutative",
            BooleanLaw::Associative => "L3 associative",
            BooleanLaw::Absorption => "L4 absorption",
            BooleanLaw::Distributive => "L5 distributive",
            BooleanLaw::UniversalBound => "L6 universal bound",
            BooleanLaw::Complement => "L7 complement",
        }
    }

    /// Evaluates the law on subsets given as bitmasks of a universe whose
    /// full set is `omega`. Laws of lower arity ignore the trailing arguments.
    pub fn holds_on(self, omega: u64, u: u64, v: u64, w: u64) -> bool {
        let comp = |x: u64| omega & !x;
        match self {
            BooleanLaw::Idempotent => (u | u) == u && (u & u) == u,
            BooleanLaw::Commutative => (u | v) == (v | u) && (u & v) == (v & u),
            BooleanLaw::Associative => {
                (u | (v | w)) == ((u | v) | w) && (u & (v & w)) == ((u & v) & w)
            }
            BooleanLaw::Absorption => (u & (u | v)) == u && (u | (u & v)) == u,
            BooleanLaw::Distributive => {
                (u | (v & w)) == ((u | v) & (u | w)) && (u & (v | w)) == ((u & v) | (u & w))
            }
            BooleanLaw::UniversalBound => {
                (0 & u) == 0 && (0 | u) == u && (omega & u) == u && (omega | u) == omega
            }
            BooleanLaw::Complement => (u & comp(u)) == 0 && (u | comp(u)) == omega,
        }
    }

    fn arity(self) -> usize {
        match self {
            BooleanLaw::Idempotent | BooleanLaw::UniversalBound | BooleanLaw::Complement => 1,
            BooleanLaw::Commutative | BooleanLaw::Absorption => 2,
            BooleanLaw::Associative | BooleanLaw::Distributive => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: BooleanLaw,
    pub holds: bool,
    /// Subsets (as element index lists) on which the law failed.
    pub witness: Option<[Vec<usize>; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub universe_size: usize,
    pub subsets: usize,
    pub laws: Vec<LawResult>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.holds)
    }
}

fn mask_elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Exhaustively checks L1–L7 over every tuple of subsets of `universe`.
pub fn check_boolean_laws(universe: &FiniteUniverse) -> Result<LawReport> {
    check_size("universe", universe.len(), BOOLEAN_LAW_LIMIT)?;
    let n = universe.len();
    let omega: u64 = (1u64 << n) - 1;
    let subsets = 1u64 << n;
    let mut laws = Vec::with_capacity(7);
    for law in BooleanLaw::ALL {
        let (vs, ws) = match law.arity() {
            1 => (1, 1),
            2 => (subsets, 1),
            _ => (subsets, subsets),
        };
        let mut witness = None;
        'search: for u in 0..subsets {
            for v in 0..vs {
                for w in 0..ws {
                    if !law.holds_on(omega, u, v, w) {
                        witness = Some([mask_elements(u), mask_elements(v), mask_elements(w)]);
                        break 'search;
                    }
                }
            }
        }
        laws.push(LawResult {
            law,
            holds: witness.is_none(),
            witness,
        });
    }
    Ok(LawReport {
        universe_size: n,
        subsets: subsets as usize,
        laws,
    })
}

// ---------------------------------------------------------------------------
// Relations, posets and equivalences
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    universe: FiniteUniverse,
    pairs: BTreeSet<(usize, usize)>,
}

impl BinaryRelation {
    pub fn new(universe: FiniteUniverse, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let pairs: BTreeSet<_> = pairs.into_iter().collect();
        if let Some(&(a, b)) = pairs
            .iter()
            .find(|&&(a, b)| a >= universe.len() || b >= universe.len())
        {
            return Err(Error::Input(format!(
                "pair ({a},{b}) outside a universe of size {}",
                universe.len()
            )));
        }
        Ok(BinaryRelation { universe, pairs })
    }

    /// Builds the relation `{(x, y) : related(x, y)}`.
    pub fn from_predicate(universe: FiniteUniverse, related: impl Fn(usize, usize) -> bool) -> Self {
        let n = universe.len();
        let pairs = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| related(a, b))
            .collect();
        BinaryRelation { universe, pairs }
    }

    pub fn from_names(universe: FiniteUniverse, pairs: &[(&str, &str)]) -> Result<Self> {
        let idx = pairs
            .iter()
            .map(|(a, b)| Ok((universe.lookup(a)?, universe.lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, idx)
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.pairs
    }

    pub fn relates(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    fn first_non_reflexive(&self) -> Option<usize> {
        (0..self.universe.len()).find(|&a| !self.relates(a, a))
    }

    fn first_non_transitive(&self) -> Option<(usize, usize, usize)> {
        for &(a, b) in &self.pairs {
            for &(_, c) in self.pairs.range((b, 0)..=(b, usize::MAX)) {
                if !self.relates(a, c) {
                    return Some((a, b, c));
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RelationLaw {
    Reflexive,
    Antisymmetric,
    Symmetric,
    Transitive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PosetVerdict {
    Poset { total: bool },
    NotPoset { law: RelationLaw, witness: Vec<usize> },
}

impl PosetVerdict {
    pub fn is_poset(&self) -> bool {
        matches!(self, PosetVerdict::Poset { .. })
    }
}

pub fn poset_check(rel: &BinaryRelation) -> PosetVerdict {
    if let Some(a) = rel.first_non_reflexive() {
        return PosetVerdict::NotPoset {
            law: RelationLaw::Reflexive,
            witness: vec![a],
        };
    }
    if let Some(&(a, b)) = rel
        .pairs
        .iter()
        .find(|&&(a, b)| a != b && rel.relates(b, a))
    {
        return PosetVerdict::NotPoset {
            law: RelationLaw::Antisymmetric,
            witness: vec![a, b],
        };
    }
    if let Some((a, b, c)) = rel.first_non_transitive() {
        return PosetVerdict::NotPoset {
            law: RelationLaw::Transitive,
            witness: vec![a, b, c],
        };
    }
    let n = rel.universe.len();
    let total = (0..n).all(|a| (0..n).all(|b| rel.relates(a, b) || rel.relates(b, a)));
    PosetVerdict::Poset { total }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extremes {
    pub maximal: Vec<usize>,
    pub minimal: Vec<usize>,
}

/// Maximal and minimal elements of a finite poset. Both are non-empty
/// whenever the universe is.
pub fn poset_extremes(rel: &BinaryRelation) -> Result<Extremes> {
    if let PosetVerdict::NotPoset { law, .. } = poset_check(rel) {
        return Err(Error::Contract(format!("relation is not a partial order ({law:?} fails)")));
    }
    if rel.universe.is_empty() {
        return Err(Error::Contract("poset extremes need a non-empty universe".into()));
    }
    let n = rel.universe.len();
    let maximal = (0..n)
        .filter(|&a| (0..n).all(|x| x == a || !rel.relates(a, x)))
        .collect();
    let minimal = (0..n)
        .filter(|&a| (0..n).all(|x| x == a || !rel.relates(x, a)))
        .collect();
    Ok(Extremes { maximal, minimal })
}

/// Covering pairs of a partial order (its transitive reduction without loops).
pub fn hasse_edges(rel: &BinaryRelation) -> Vec<(usize, usize)> {
    rel.pairs
        .iter()
        .copied()
        .filter(|&(a, b)| a != b)
        .filter(|&(a, b)| {
            !(0..rel.universe.len())
                .any(|c| c != a && c != b && rel.relates(a, c) && rel.relates(c, b))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
    /// Common class size, when every class has the same size.
    pub uniform_size: Option<usize>,
    /// `|classes| == |universe| / size`, asserted only for uniform partitions.
    pub quotient_check: Option<bool>,
}

pub fn equivalence_violation(rel: &BinaryRelation) -> Option<(RelationLaw, Vec<usize>)> {
    if let Some(a) = rel.first_non_reflexive() {
        return Some((RelationLaw::Reflexive, vec![a]));
    }
    if let Some(&(a, b)) = rel.pairs.iter().find(|&&(a, b)| !rel.relates(b, a)) {
        return Some((RelationLaw::Symmetric, vec![a, b]));
    }
    rel.first_non_transitive()
        .map(|(a, b, c)| (RelationLaw::Transitive, vec![a, b, c]))
}

pub fn equivalence_classes(rel: &BinaryRelation) -> Result<Partition> {
    if let Some((law, witness)) = equivalence_violation(rel) {
        return Err(Error::Contract(format!(
            "relation is not an equivalence: {law:?} fails at {}",
            rel.universe.render_set(&witness)
        )));
    }
    let n = rel.universe.len();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x].is_some() {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&y| rel.relates(x, y)).collect();
        for &y in &class {
            class_of[y] = Some(classes.len());
        }
        classes.push(class);
    }
    let uniform_size = match classes.first() {
        Some(first) if classes.iter().all(|c| c.len() == first.len()) => Some(first.len()),
        _ => None,
    };
    let quotient_check = uniform_size.map(|s| classes.len() * s == n && classes.len() == n / s);
    Ok(Partition {
        classes,
        uniform_size,
        quotient_check,
    })
}

// ---------------------------------------------------------------------------
// Neutrosophic unions
// ---------------------------------------------------------------------------

/// A subset of the universe with truth, indeterminacy and falsity values for
/// each of its elements, listed in carrier order.
#[derive(Debug, Clone, PartialEq)]
pub struct NeutrosophicComponent {
    carrier: Vec<usize>,
    truth: Vec<f64>,
    indeterminacy: Vec<f64>,
    falsity: Vec<f64>,
}

impl NeutrosophicComponent {
    pub fn new(
        carrier: Vec<usize>,
        truth: Vec<f64>,
        indeterminacy: Vec<f64>,
        falsity: Vec<f64>,
    ) -> Result<Self> {
        let n = carrier.len();
        if truth.len() != n || indeterminacy.len() != n || falsity.len() != n {
            return Err(Error::Shape("one (T, I, F) triple per carrier element".into()));
        }
        let in_unit = |v: &f64| (0.0..=1.0).contains(v);
        if !truth.iter().chain(&indeterminacy).chain(&falsity).all(in_unit) {
            return Err(Error::Input("membership values must lie in [0,1]".into()));
        }
        Ok(NeutrosophicComponent {
            carrier,
            truth,
            indeterminacy,
            falsity,
        })
    }

    /// Every element gets the same `(t, i, f)` triple.
    pub fn constant(carrier: Vec<usize>, t: f64, i: f64, f: f64) -> Result<Self> {
        let n = carrier.len();
        Self::new(carrier, vec![t; n], vec![i; n], vec![f; n])
    }

    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    fn all_triples(&self, t: f64, i: f64, f: f64) -> bool {
        self.truth.iter().all(|&x| x == t)
            && self.indeterminacy.iter().all(|&x| x == i)
            && self.falsity.iter().all(|&x| x == f)
    }

    fn is_true(&self) -> bool {
        self.all_triples(1.0, 0.0, 0.0)
    }

    fn is_false(&self) -> bool {
        self.all_triples(0.0, 0.0, 1.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NeutrosophicCase {
    /// Every part is fully true: the plain union.
    PlainUnion,
    /// Every part is fully false: the complement of the union.
    ComplementOfUnion,
    /// True parts united with the complement of the union of false parts.
    Split { true_parts: Vec<usize>, false_parts: Vec<usize> },
    /// No abstract-set equivalent.
    General,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnionClassification {
    pub case: NeutrosophicCase,
    pub abstract_set: Option<BTreeSet<usize>>,
}

pub fn neutrosophic_union(
    universe: &FiniteUniverse,
    parts: &[NeutrosophicComponent],
) -> Result<UnionClassification> {
    if parts.is_empty() {
        return Err(Error::Input("a neutrosophic union needs at least one part".into()));
    }
    if let Some(&bad) = parts
        .iter()
        .flat_map(|p| &p.carrier)
        .find(|&&x| x >= universe.len())
    {
        return Err(Error::Input(format!("element index {bad} outside the universe")));
    }
    let union_of = |ids: &[usize]| -> BTreeSet<usize> {
        ids.iter()
            .flat_map(|&i| parts[i].carrier.iter().copied())
            .collect()
    };
    let complement = |s: &BTreeSet<usize>| -> BTreeSet<usize> {
        (0..universe.len()).filter(|x| !s.contains(x)).collect()
    };
    let true_parts: Vec<usize> = (0..parts.len()).filter(|&i| parts[i].is_true()).collect();
    let false_parts: Vec<usize> = (0..parts.len()).filter(|&i| parts[i].is_false()).collect();
    if true_parts.len() + false_parts.len() < parts.len() {
        return Ok(UnionClassification {
            case: NeutrosophicCase::General,
            abstract_set: None,
        });
    }
    let (case, set) = if false_parts.is_empty() {
        (NeutrosophicCase::PlainUnion, union_of(&true_parts))
    } else if true_parts.is_empty() {
        (
            NeutrosophicCase::ComplementOfUnion,
            complement(&union_of(&false_parts)),
        )
    } else {
        let mut set = union_of(&true_parts);
        set.extend(complement(&union_of(&false_parts)));
        (
            NeutrosophicCase::Split {
                true_parts,
                false_parts,
            },
            set,
        )
    };
    Ok(UnionClassification {
        case,
        abstract_set: Some(set),
    })
}

/// Inclusion–exclusion valuation of a union of `components`, where the value
/// of an intersection is the product of the members' values when the
/// intersection is non-empty and zero otherwise.
pub fn valuate_union(values: &[f64], components: &[BTreeSet<usize>]) -> Result<f64> {
    if values.len() != components.len() {
        return Err(Error::Shape("one value per component".into()));
    }
    if !values.iter().all(|v| (0.0..=1.0).contains(v)) {
        return Err(Error::Input("component values must lie in [0,1]".into()));
    }
    check_size("component list", components.len(), 20)?;
    let k = components.len();
    let mut total = 0.0;
    for subset in 1u32..(1u32 << k) {
        let members: Vec<usize> = (0..k).filter(|i| subset >> i & 1 == 1).collect();
        let mut inter: BTreeSet<usize> = components[members[0]].clone();
        for &m in &members[1..] {
            inter = inter.intersection(&components[m]).copied().collect();
        }
        if inter.is_empty() {
            continue;
        }
        let term: f64 = members.iter().map(|&m| values[m]).product();
        if members.len() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Boolean laws over {} subsets of a {}-element universe:",
            self.subsets, self.universe_size
        )?;
        for law in &self.laws {
            writeln!(f, "  {:<20} {}", law.law.label(), if law.holds { "pass" } else { "FAIL" })?;
        }
        Ok(())
    }
}

/// Groups elements by class index; handy for building equivalences.
pub fn relation_from_labels(universe: FiniteUniverse, label: impl Fn(usize) -> usize) -> BinaryRelation {
    let labels: BTreeMap<usize, usize> = (0..universe.len()).map(|i| (i, label(i))).collect();
    BinaryRelation::from_predicate(universe, |a, b| labels[&a] == labels[&b])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> FiniteUniverse {
        FiniteUniverse::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn boolean_laws_hold_on_small_universes() {
        let report = check_boolean_laws(&abc()).unwrap();
        assert_eq!(report.subsets, 8);
        assert!(report.all_pass());
        let empty = check_boolean_laws(&FiniteUniverse::default()).unwrap();
        assert_eq!(empty.subsets, 1);
        assert!(empty.all_pass());
    }

    #[test]
    fn distributivity_on_named_subsets() {
        // U={a}, V={b}, W={a,b} in {a,b}
        assert!(BooleanLaw::Distributive.holds_on(0b11, 0b01, 0b10, 0b11));
        // complement taken against too small an omega leaves U ∪ Ū ≠ Ω
        assert!(!BooleanLaw::Complement.holds_on(0b11, 0b100, 0, 0));
    }

    #[test]
    fn boolean_laws_reject_large_universe() {
        let u = FiniteUniverse::numbered(7);
        assert!(matches!(check_boolean_laws(&u), Err(Error::SizeLimit { limit: 6, .. })));
    }

    fn divisibility() -> BinaryRelation {
        let vals = [1, 2, 3, 6];
        let u = FiniteUniverse::new(vals.iter().map(|v| v.to_string())).unwrap();
        BinaryRelation::from_predicate(u, |a, b| vals[b] % vals[a] == 0)
    }

    #[test]
    fn divisibility_is_a_partial_order() {
        let rel = divisibility();
        assert_eq!(poset_check(&rel), PosetVerdict::Poset { total: false });
        let ext = poset_extremes(&rel).unwrap();
        assert_eq!(ext.maximal, vec![3]); // 6
        assert_eq!(ext.minimal, vec![0]); // 1
        let hasse = hasse_edges(&rel);
        assert_eq!(hasse, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn chain_and_antichain_extremes() {
        let chain = BinaryRelation::from_predicate(FiniteUniverse::numbered(3), |a, b| a <= b);
        assert_eq!(poset_check(&chain), PosetVerdict::Poset { total: true });
        let ext = poset_extremes(&chain).unwrap();
        assert_eq!((ext.maximal, ext.minimal), (vec![2], vec![0]));

        let anti = BinaryRelation::from_predicate(abc(), |a, b| a == b);
        let ext = poset_extremes(&anti).unwrap();
        assert_eq!(ext.maximal, vec![0, 1, 2]);
        assert_eq!(ext.minimal, vec![0, 1, 2]);
    }

    #[test]
    fn antisymmetry_witness() {
        let rel = BinaryRelation::from_names(
            abc(),
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "a")],
        )
        .unwrap();
        assert_eq!(
            poset_check(&rel),
            PosetVerdict::NotPoset {
                law: RelationLaw::Antisymmetric,
                witness: vec![0, 1]
            }
        );
        assert!(poset_extremes(&rel).is_err());
    }

    #[test]
    fn congruence_mod_three() {
        let rel = relation_from_labels(FiniteUniverse::numbered(12), |x| x % 3);
        let p = equivalence_classes(&rel).unwrap();
        assert_eq!(p.classes.len(), 3);
        assert_eq!(p.uniform_size, Some(4));
        assert_eq!(p.quotient_check, Some(true));
        assert_eq!(p.classes[1], vec![1, 4, 7, 10]);
    }

    #[test]
    fn identity_and_full_relations() {
        let id = BinaryRelation::from_predicate(abc(), |a, b| a == b);
        assert_eq!(equivalence_classes(&id).unwrap().classes.len(), 3);
        let full = BinaryRelation::from_predicate(abc(), |_, _| true);
        let p = equivalence_classes(&full).unwrap();
        assert_eq!(p.classes, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn non_uniform_partition_skips_quotient_check() {
        let rel = relation_from_labels(abc(), |x| usize::from(x == 0));
        let p = equivalence_classes(&rel).unwrap();
        assert_eq!(p.uniform_size, None);
        assert_eq!(p.quotient_check, None);
    }

    #[test]
    fn non_equivalence_is_rejected() {
        let rel = BinaryRelation::from_predicate(abc(), |a, b| a <= b);
        let err = equivalence_classes(&rel).unwrap_err();
        assert!(err.to_string().contains("Symmetric"));
    }

    #[test]
    fn neutrosophic_cases() {
        let u = FiniteUniverse::numbered(5);
        let a = |c: Vec<usize>, t, i, f| NeutrosophicComponent::constant(c, t, i, f).unwrap();
        let plain = neutrosophic_union(&u, &[a(vec![0, 1], 1.0, 0.0, 0.0), a(vec![1, 2], 1.0, 0.0, 0.0)])
            .unwrap();
        assert_eq!(plain.case, NeutrosophicCase::PlainUnion);
        assert_eq!(plain.abstract_set, Some([0, 1, 2].into()));

        let comp = neutrosophic_union(&u, &[a(vec![0, 1], 0.0, 0.0, 1.0), a(vec![1, 2], 0.0, 0.0, 1.0)])
            .unwrap();
        assert_eq!(comp.case, NeutrosophicCase::ComplementOfUnion);
        assert_eq!(comp.abstract_set, Some([3, 4].into()));

        let split = neutrosophic_union(&u, &[a(vec![0], 1.0, 0.0, 0.0), a(vec![0, 1, 2], 0.0, 0.0, 1.0)])
            .unwrap();
        assert_eq!(split.abstract_set, Some([0, 3, 4].into()));

        let general = neutrosophic_union(&u, &[a(vec![0, 1], 0.5, 0.0, 0.0)]).unwrap();
        assert_eq!(general.case, NeutrosophicCase::General);
        assert_eq!(general.abstract_set, None);
    }

    #[test]
    fn membership_values_are_bounded() {
        assert!(NeutrosophicComponent::constant(vec![0], 1.5, 0.0, 0.0).is_err());
        assert!(neutrosophic_union(&FiniteUniverse::numbered(1), &[]).is_err());
    }

    #[test]
    fn union_valuation() {
        let a: BTreeSet<usize> = [0, 1].into();
        let b: BTreeSet<usize> = [1, 2].into();
        let c: BTreeSet<usize> = [3].into();
        let overlap = valuate_union(&[0.5, 0.5], &[a.clone(), b.clone()]).unwrap();
        assert!((overlap - (1.0 - 0.5 * 0.5)).abs() < 1e-12);
        let absorbing = valuate_union(&[1.0, 0.3], &[a.clone(), b]).unwrap();
        assert!((absorbing - 1.0).abs() < 1e-12);
        let disjoint = valuate_union(&[0.5, 0.5], &[a, c]).unwrap();
        assert!((disjoint - 1.0).abs() < 1e-12);
    }
}
