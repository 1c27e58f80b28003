use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::Elem;

/// A partial binary operation on a subset (the domain) of an interned
/// universe. Undefined entries are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTable {
    name: String,
    domain: Vec<Elem>,
    // universe index -> row/column position in `entries`
    slot: Vec<Option<usize>>,
    entries: Vec<Option<Elem>>,
}

impl OpTable {
    /// `entries` is row-major over `domain × domain`.
    pub fn new(
        name: impl Into<String>,
        universe_len: usize,
        domain: Vec<Elem>,
        entries: Vec<Option<Elem>>,
    ) -> Result<Self> {
        let name = name.into();
        if domain.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Input(format!(
                "operation `{name}`: domain must be sorted and duplicate-free"
            )));
        }
        if let Some(&bad) = domain.iter().find(|&&d| d >= universe_len) {
            return Err(Error::Input(format!(
                "operation `{name}`: domain index {bad} outside the universe"
            )));
        }
        if entries.len() != domain.len() * domain.len() {
            return Err(Error::Shape(format!(
                "operation `{name}`: expected {} entries, found {}",
                domain.len() * domain.len(),
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().flatten().find(|&&e| e >= universe_len) {
            return Err(Error::Input(format!(
                "operation `{name}`: entry {bad} outside the universe"
            )));
        }
        let mut slot = vec![None; universe_len];
        for (pos, &d) in domain.iter().enumerate() {
            slot[d] = Some(pos);
        }
        Ok(OpTable {
            name,
            domain,
            slot,
            entries,
        })
    }

    /// Tabulates `f` over `domain × domain`. `domain` is sorted first.
    pub fn from_fn(
        name: impl Into<String>,
        universe_len: usize,
        mut domain: Vec<Elem>,
        f: impl Fn(Elem, Elem) -> Option<Elem>,
    ) -> Result<Self> {
        domain.sort_unstable();
        domain.dedup();
        let entries = domain
            .iter()
            .flat_map(|&x| domain.iter().map(move |&y| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        Self::new(name, universe_len, domain, entries)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn universe_len(&self) -> usize {
        self.slot.len()
    }

    pub fn domain(&self) -> &[Elem] {
        &self.domain
    }

    pub fn in_domain(&self, x: Elem) -> bool {
        self.slot.get(x).is_some_and(|s| s.is_some())
    }

    pub fn apply(&self, x: Elem, y: Elem) -> Option<Elem> {
        let i = (*self.slot.get(x)?)?;
        let j = (*self.slot.get(y)?)?;
        self.entries[i * self.domain.len() + j]
    }

    pub fn is_defined(&self, x: Elem, y: Elem) -> bool {
        self.apply(x, y).is_some()
    }

    pub fn entries(&self) -> &[Option<Elem>] {
        &self.entries
    }

    pub fn row(&self, x: Elem) -> Vec<Option<Elem>> {
        self.domain.iter().map(|&y| self.apply(x, y)).collect()
    }

    pub fn column(&self, y: Elem) -> Vec<Option<Elem>> {
        self.domain.iter().map(|&x| self.apply(x, y)).collect()
    }

    /// Every entry defined.
    pub fn is_total(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    /// Every defined entry lies back in the domain.
    pub fn is_closed(&self) -> bool {
        self.entries.iter().flatten().all(|&e| self.in_domain(e))
    }

    pub fn defined_count(&self) -> usize {
        self.entries.iter().flatten().count()
    }

    /// Same operation restricted to `carrier ⊆ domain`.
    pub fn restrict(&self, carrier: &[Elem]) -> Result<OpTable> {
        if let Some(&bad) = carrier.iter().find(|&&c| !self.in_domain(c)) {
            return Err(Error::Contract(format!(
                "element {bad} is outside the domain of `{}`",
                self.name
            )));
        }
        OpTable::from_fn(self.name.clone(), self.universe_len(), carrier.to_vec(), |x, y| {
            self.apply(x, y)
        })
    }
}

// ---------------------------------------------------------------------------
// Units and inverses
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Units {
    pub left: Vec<Elem>,
    pub right: Vec<Elem>,
    /// Two-sided unit; when both a left and a right unit exist they coincide.
    pub unit: Option<Elem>,
}

/// Scans the domain for left units (`e∘x = x` for every `x`) and right units.
pub fn find_units(t: &OpTable) -> Units {
    let dom = t.domain();
    let left: Vec<Elem> = dom
        .iter()
        .copied()
        .filter(|&e| dom.iter().all(|&x| t.apply(e, x) == Some(x)))
        .collect();
    let right: Vec<Elem> = dom
        .iter()
        .copied()
        .filter(|&e| dom.iter().all(|&x| t.apply(x, e) == Some(x)))
        .collect();
    // 1^l = 1^l × 1^r = 1^r, so any left unit equals any right unit.
    let unit = match (left.first(), right.first()) {
        (Some(&l), Some(&r)) => {
            debug_assert_eq!(l, r);
            Some(l)
        }
        _ => None,
    };
    Units { left, right, unit }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InverseSets {
    pub element: Elem,
    /// `y` with `y∘x = unit`.
    pub left: Vec<Elem>,
    /// `y` with `x∘y = unit`.
    pub right: Vec<Elem>,
    pub inverse: Option<Elem>,
}

pub fn find_inverses(t: &OpTable, unit: Elem) -> Result<Vec<InverseSets>> {
    let dom = t.domain();
    let is_unit = t.in_domain(unit)
        && dom
            .iter()
            .all(|&x| t.apply(unit, x) == Some(x) && t.apply(x, unit) == Some(x));
    if !is_unit {
        return Err(Error::Contract(format!(
            "element {unit} is not a two-sided unit of `{}`",
            t.name()
        )));
    }
    Ok(dom
        .iter()
        .map(|&x| {
            let left: Vec<Elem> = dom
                .iter()
                .copied()
                .filter(|&y| t.apply(y, x) == Some(unit))
                .collect();
            let right: Vec<Elem> = dom
                .iter()
                .copied()
                .filter(|&y| t.apply(x, y) == Some(unit))
                .collect();
            let inverse = left.iter().copied().find(|y| right.contains(y));
            InverseSets {
                element: x,
                left,
                right,
                inverse,
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Faithfulness {
    pub faithful: bool,
    /// Two distinct elements inducing the same translation map.
    pub witness: Option<(Elem, Elem)>,
}

/// Whether `g ↦ (a ↦ g∘a)` (left) or `g ↦ (a ↦ a∘g)` (right) is injective.
pub fn is_faithful(t: &OpTable, side: Side) -> Faithfulness {
    let dom = t.domain();
    let maps: Vec<Vec<Option<Elem>>> = dom
        .iter()
        .map(|&g| match side {
            Side::Left => t.row(g),
            Side::Right => t.column(g),
        })
        .collect();
    for i in 0..dom.len() {
        for j in i + 1..dom.len() {
            if maps[i] == maps[j] {
                return Faithfulness {
                    faithful: false,
                    witness: Some((dom[i], dom[j])),
                };
            }
        }
    }
    Faithfulness {
        faithful: true,
        witness: None,
    }
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TableKind {
    Magma,
    Semigroup,
    AbelianSemigroup,
    Group,
    AbelianGroup,
}

impl TableKind {
    pub fn is_group(self) -> bool {
        matches!(self, TableKind::Group | TableKind::AbelianGroup)
    }

    pub fn label(self) -> &'static str {
        match self {
            TableKind::Magma => "magma",
            TableKind::Semigroup => "semigroup",
            TableKind::AbelianSemigroup => "abelian_semigroup",
            TableKind::Group => "group",
            TableKind::AbelianGroup => "abelian_group",
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Why a stronger label was refused.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ClassWitness {
    NotAssociative(Elem, Elem, Elem),
    NoUnit,
    NoInverse(Elem),
    NotCommutative(Elem, Elem),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: TableKind,
    pub failures: Vec<ClassWitness>,
}

/// First `(x, y, z)` in domain order with `(x∘y)∘z ≠ x∘(y∘z)`; both sides
/// must be defined for the triple to count.
pub fn associativity_witness(t: &OpTable) -> Option<(Elem, Elem, Elem)> {
    let dom = t.domain();
    for &x in dom {
        for &y in dom {
            let Some(xy) = t.apply(x, y) else { continue };
            for &z in dom {
                let Some(yz) = t.apply(y, z) else { continue };
                let (Some(l), Some(r)) = (t.apply(xy, z), t.apply(x, yz)) else {
                    continue;
                };
                if l != r {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub fn commutativity_witness(t: &OpTable) -> Option<(Elem, Elem)> {
    let dom = t.domain();
    dom.iter()
        .enumerate()
        .flat_map(|(i, &x)| dom[i + 1..].iter().map(move |&y| (x, y)))
        .find(|&(x, y)| t.apply(x, y) != t.apply(y, x))
}

/// Strongest label among magma, semigroup, abelian semigroup, group and
/// abelian group, by exhaustive pair and triple enumeration.
pub fn classify_table(t: &OpTable) -> Result<Classification> {
    if !t.is_total() || !t.is_closed() {
        return Err(Error::Contract(format!(
            "`{}` is not a total closed operation on its domain",
            t.name()
        )));
    }
    let mut failures = Vec::new();
    if let Some((x, y, z)) = associativity_witness(t) {
        failures.push(ClassWitness::NotAssociative(x, y, z));
        return Ok(Classification {
            kind: TableKind::Magma,
            failures,
        });
    }
    let commutative = match commutativity_witness(t) {
        Some((x, y)) => {
            failures.push(ClassWitness::NotCommutative(x, y));
            false
        }
        None => true,
    };
    let group = match find_units(t).unit {
        None => {
            failures.push(ClassWitness::NoUnit);
            false
        }
        Some(e) => {
            let inv = find_inverses(t, e)?;
            match inv.iter().find(|s| s.inverse.is_none()) {
                Some(s) => {
                    failures.push(ClassWitness::NoInverse(s.element));
                    false
                }
                None => true,
            }
        }
    };
    let kind = match (group, commutative) {
        (true, true) => TableKind::AbelianGroup,
        (true, false) => TableKind::Group,
        (false, true) => TableKind::AbelianSemigroup,
        (false, false) => TableKind::Semigroup,
    };
    Ok(Classification { kind, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mod_table(name: &str, n: usize, f: impl Fn(usize, usize) -> usize) -> OpTable {
        OpTable::from_fn(name, n, (0..n).collect(), |x, y| Some(f(x, y) % n)).unwrap()
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(OpTable::new("o", 2, vec![1, 0], vec![None; 4]).is_err());
        assert!(OpTable::new("o", 2, vec![0, 1], vec![None; 3]).is_err());
        assert!(OpTable::new("o", 2, vec![0, 1], vec![Some(5), None, None, None]).is_err());
    }

    #[test]
    fn partial_entries_are_values() {
        let t = OpTable::new("o", 3, vec![0, 1], vec![Some(0), None, Some(1), Some(2)]).unwrap();
        assert_eq!(t.apply(0, 0), Some(0));
        assert_eq!(t.apply(0, 1), None);
        assert_eq!(t.apply(2, 0), None); // 2 outside the domain
        assert!(!t.is_total());
        assert!(!t.is_closed());
    }

    #[test]
    fn units_of_cyclic_tables() {
        let z3 = mod_table("+", 3, |x, y| x + y);
        let u = find_units(&z3);
        assert_eq!((u.left, u.right, u.unit), (vec![0], vec![0], Some(0)));
        let z4 = mod_table("*", 4, |x, y| x * y);
        assert_eq!(find_units(&z4).unit, Some(1));
    }

    #[test]
    fn left_projection_has_only_left_units() {
        // x∘y := y on {a, b}
        let t = OpTable::from_fn("p", 2, vec![0, 1], |_, y| Some(y)).unwrap();
        let u = find_units(&t);
        assert_eq!(u.left, vec![0, 1]);
        assert!(u.right.is_empty());
        assert_eq!(u.unit, None);
        assert!(!is_faithful(&t, Side::Left).faithful);
    }

    #[test]
    fn inverses() {
        let z4 = mod_table("+", 4, |x, y| x + y);
        let inv = find_inverses(&z4, 0).unwrap();
        assert_eq!(inv[1].inverse, Some(3));
        assert_eq!(inv[0].inverse, Some(0));

        let z6 = mod_table("*", 6, |x, y| x * y);
        let inv = find_inverses(&z6, 1).unwrap();
        assert!(inv[2].left.is_empty() && inv[2].right.is_empty());
        assert_eq!(inv[1].inverse, Some(1));
        assert!(find_inverses(&z6, 2).is_err());
    }

    #[test]
    fn faithfulness() {
        let z5 = mod_table("+", 5, |x, y| x + y);
        assert!(is_faithful(&z5, Side::Left).faithful);
        assert!(is_faithful(&z5, Side::Right).faithful);
        let constant = OpTable::from_fn("c", 2, vec![0, 1], |_, _| Some(0)).unwrap();
        assert_eq!(
            is_faithful(&constant, Side::Left),
            Faithfulness {
                faithful: false,
                witness: Some((0, 1))
            }
        );
    }

    #[test]
    fn classification_ladder() {
        let z4 = mod_table("+", 4, |x, y| x + y);
        assert_eq!(classify_table(&z4).unwrap().kind, TableKind::AbelianGroup);

        // max on {0,1,2}: commutative, associative, unit 0, no inverses
        let max = mod_table("max", 3, |x, y| x.max(y));
        let c = classify_table(&max).unwrap();
        assert_eq!(c.kind, TableKind::AbelianSemigroup);
        assert_eq!(c.failures, vec![ClassWitness::NoInverse(1)]);

        // x∘y := x is associative, non-commutative, and has no two-sided unit
        let left_zero = OpTable::from_fn("l", 3, vec![0, 1, 2], |x, _| Some(x)).unwrap();
        assert_eq!(classify_table(&left_zero).unwrap().kind, TableKind::Semigroup);

        // x∘y := x - y mod 3 is not associative
        let sub = mod_table("-", 3, |x, y| x + 3 - y);
        assert!(matches!(
            classify_table(&sub).unwrap().failures[0],
            ClassWitness::NotAssociative(..)
        ));
    }

    #[test]
    fn classification_needs_total_tables() {
        let t = OpTable::new("o", 2, vec![0, 1], vec![Some(0), None, Some(1), Some(0)]).unwrap();
        assert!(classify_table(&t).is_err());
    }
}
