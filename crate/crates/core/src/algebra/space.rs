use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::table::{find_units, OpTable};
use crate::error::{Error, Result};
use crate::foundations::FiniteUniverse;
use crate::Elem;

/// The operations a component carries: one law, or an additive and a
/// multiplicative law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Operations {
    Single(String),
    Double { add: String, mul: String },
}

impl Operations {
    pub fn names(&self) -> Vec<&str> {
        match self {
            Operations::Single(op) => vec![op],
            Operations::Double { add, mul } => vec![add, mul],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    name: String,
    carrier: Vec<Elem>,
    ops: Operations,
}

impl Component {
    pub fn new(name: impl Into<String>, mut carrier: Vec<Elem>, ops: Operations) -> Self {
        carrier.sort_unstable();
        carrier.dedup();
        Component {
            name: name.into(),
            carrier,
            ops,
        }
    }

    pub fn single(name: impl Into<String>, carrier: Vec<Elem>, op: impl Into<String>) -> Self {
        Self::new(name, carrier, Operations::Single(op.into()))
    }

    pub fn double(
        name: impl Into<String>,
        carrier: Vec<Elem>,
        add: impl Into<String>,
        mul: impl Into<String>,
    ) -> Self {
        Self::new(
            name,
            carrier,
            Operations::Double {
                add: add.into(),
                mul: mul.into(),
            },
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &[Elem] {
        &self.carrier
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.carrier.binary_search(&x).is_ok()
    }

    pub fn ops(&self) -> &Operations {
        &self.ops
    }

    /// The law of a single-operation component.
    pub fn single_op(&self) -> Option<&str> {
        match &self.ops {
            Operations::Single(op) => Some(op),
            Operations::Double { .. } => None,
        }
    }

    pub fn double_ops(&self) -> Option<(&str, &str)> {
        match &self.ops {
            Operations::Single(_) => None,
            Operations::Double { add, mul } => Some((add, mul)),
        }
    }
}

/// A universe with named components, each bound to its operations by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSpace {
    universe: FiniteUniverse,
    components: Vec<Component>,
    ops: Vec<OpTable>,
}

impl MultiSpace {
    pub fn new(universe: FiniteUniverse, ops: Vec<OpTable>, components: Vec<Component>) -> Result<Self> {
        for (i, op) in ops.iter().enumerate() {
            if ops[..i].iter().any(|o| o.name() == op.name()) {
                return Err(Error::Input(format!("operation `{}` declared twice", op.name())));
            }
            if op.universe_len() != universe.len() {
                return Err(Error::Shape(format!(
                    "operation `{}` was built for a universe of {} elements, not {}",
                    op.name(),
                    op.universe_len(),
                    universe.len()
                )));
            }
        }
        for (i, c) in components.iter().enumerate() {
            if components[..i].iter().any(|o| o.name == c.name) {
                return Err(Error::Input(format!("component `{}` declared twice", c.name)));
            }
            if let Some(&bad) = c.carrier.iter().find(|&&x| x >= universe.len()) {
                return Err(Error::Input(format!(
                    "component `{}` holds index {bad} outside the universe",
                    c.name
                )));
            }
            for name in c.ops.names() {
                let op = ops
                    .iter()
                    .find(|o| o.name() == name)
                    .ok_or_else(|| Error::UnknownOperation(name.to_string()))?;
                if let Some(&x) = c.carrier.iter().find(|&&x| !op.in_domain(x)) {
                    return Err(Error::Contract(format!(
                        "operation `{name}` is not defined on `{}` of component `{}`",
                        universe.name(x),
                        c.name
                    )));
                }
            }
        }
        Ok(MultiSpace {
            universe,
            components,
            ops,
        })
    }

    pub fn universe(&self) -> &FiniteUniverse {
        &self.universe
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn ops(&self) -> &[OpTable] {
        &self.ops
    }

    pub fn op(&self, name: &str) -> Result<&OpTable> {
        self.ops
            .iter()
            .find(|o| o.name() == name)
            .ok_or_else(|| Error::UnknownOperation(name.to_string()))
    }

    pub fn component(&self, name: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.name == name)
    }

    /// Component whose single law, or additive/multiplicative law, is `op`.
    pub fn component_of_op(&self, op: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.ops.names().contains(&op))
    }

    /// Union of all carriers, sorted.
    pub fn element_union(&self) -> Vec<Elem> {
        let set: BTreeSet<Elem> = self
            .components
            .iter()
            .flat_map(|c| c.carrier.iter().copied())
            .collect();
        set.into_iter().collect()
    }

    /// First pair of the element union on which no operation is defined.
    pub fn completeness_witness(&self) -> Option<(Elem, Elem)> {
        let union = self.element_union();
        for &x in &union {
            for &y in &union {
                if !self.ops.iter().any(|o| o.is_defined(x, y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Every pair of the element union has a product under some operation.
    pub fn is_completed(&self) -> bool {
        self.completeness_witness().is_none()
    }

    pub fn all_single(&self) -> bool {
        self.components.iter().all(|c| c.single_op().is_some())
    }

    pub fn all_double(&self) -> bool {
        self.components.iter().all(|c| c.double_ops().is_some())
    }

    pub fn name_of(&self, x: Elem) -> &str {
        self.universe.name(x)
    }

    pub fn render_set<'a, I: IntoIterator<Item = &'a Elem>>(&self, set: I) -> String {
        self.universe.render_set(set)
    }
}

/// `x₁ ∘₁ x₂ ∘₂ … xₙ`, evaluated left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprChain {
    operands: Vec<Elem>,
    ops: Vec<String>,
}

impl ExprChain {
    pub fn new(operands: Vec<Elem>, ops: Vec<String>) -> Result<Self> {
        if operands.is_empty() || ops.len() + 1 != operands.len() {
            return Err(Error::Shape(format!(
                "a chain of {} operands needs {} operations, found {}",
                operands.len(),
                operands.len().saturating_sub(1),
                ops.len()
            )));
        }
        Ok(ExprChain { operands, ops })
    }

    /// Parses alternating element and operation names, e.g. `["1","x1","2"]`.
    pub fn from_tokens<S: AsRef<str>>(ms: &MultiSpace, tokens: &[S]) -> Result<Self> {
        let mut operands = Vec::new();
        let mut ops = Vec::new();
        for (i, tok) in tokens.iter().enumerate() {
            let tok = tok.as_ref();
            if i % 2 == 0 {
                operands.push(ms.universe().lookup(tok)?);
            } else {
                ops.push(tok.to_string());
            }
        }
        Self::new(operands, ops)
    }

    pub fn operands(&self) -> &[Elem] {
        &self.operands
    }

    pub fn ops(&self) -> &[String] {
        &self.ops
    }
}

/// Left fold of the chain. `Ok(None)` is the UNDEFINED outcome; unknown
/// operation names are errors.
pub fn eval_chain(ms: &MultiSpace, chain: &ExprChain) -> Result<Option<Elem>> {
    let tables = chain
        .ops
        .iter()
        .map(|name| ms.op(name))
        .collect::<Result<Vec<_>>>()?;
    let mut acc = chain.operands[0];
    for (op, &rhs) in tables.iter().zip(&chain.operands[1..]) {
        match op.apply(acc, rhs) {
            Some(v) => acc = v,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub op: String,
    pub x: Elem,
}

/// Every `(∘, x)` with `a ∘ x = b`, operations in declaration order.
pub fn solve_equation(ms: &MultiSpace, a: Elem, b: Elem) -> Vec<Solution> {
    ms.ops()
        .iter()
        .flat_map(|op| {
            op.domain()
                .iter()
                .copied()
                .filter(move |&x| op.apply(a, x) == Some(b))
                .map(move |x| Solution {
                    op: op.name().to_string(),
                    x,
                })
        })
        .collect()
}

/// Operations whose tables have a two-sided unit; these admit at most one
/// solution of `a∘x = b` when they are left-faithful groups.
pub fn unital_ops(ms: &MultiSpace) -> Vec<&str> {
    ms.ops()
        .iter()
        .filter(|op| find_units(op).unit.is_some())
        .map(|op| op.name())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Term {
    Hole,
    Elem(Elem),
}

/// A chain with one or more occurrences of the unknown and a right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    terms: Vec<Term>,
    ops: Vec<String>,
    rhs: Elem,
}

impl Equation {
    pub fn new(terms: Vec<Term>, ops: Vec<String>, rhs: Elem) -> Result<Self> {
        if terms.is_empty() || ops.len() + 1 != terms.len() {
            return Err(Error::Shape("an equation chain needs one operation between terms".into()));
        }
        if !terms.contains(&Term::Hole) {
            return Err(Error::Input("an equation needs an unknown".into()));
        }
        Ok(Equation { terms, ops, rhs })
    }

    fn substitute(&self, x: Elem) -> ExprChain {
        let operands = self
            .terms
            .iter()
            .map(|t| match *t {
                Term::Hole => x,
                Term::Elem(e) => e,
            })
            .collect();
        ExprChain {
            operands,
            ops: self.ops.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SystemSolution {
    pub per_equation: Vec<BTreeSet<Elem>>,
    pub common: BTreeSet<Elem>,
}

/// Solves each equation by substituting every universe element for the
/// unknown, then intersects.
pub fn solve_system(ms: &MultiSpace, eqs: &[Equation]) -> Result<SystemSolution> {
    let mut per_equation = Vec::with_capacity(eqs.len());
    for eq in eqs {
        let mut sols = BTreeSet::new();
        for x in 0..ms.universe().len() {
            if eval_chain(ms, &eq.substitute(x))? == Some(eq.rhs) {
                sols.insert(x);
            }
        }
        per_equation.push(sols);
    }
    let common = match per_equation.split_first() {
        None => (0..ms.universe().len()).collect(),
        Some((first, rest)) => rest.iter().fold(first.clone(), |acc, s| {
            acc.intersection(s).copied().collect()
        }),
    };
    Ok(SystemSolution {
        per_equation,
        common,
    })
}
