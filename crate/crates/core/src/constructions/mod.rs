//! Builders for the standard multi-spaces: Latin-square spaces, disjoint
//! cyclic unions, fan extensions, partition-cyclic spaces, and the small
//! group and ring corpora used throughout the tests.

pub mod groups;
mod latin;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use groups::CayleyGroup;
pub use latin::{
    enumerate_latin_squares, factorial_product, gen_latin_squares, latin_violation, LatinSquare,
    LATIN_ENUMERATION_LIMIT,
};

use crate::algebra::space::{Component, MultiSpace};
use crate::algebra::table::{classify_table, OpTable};
use crate::error::{Error, Result};
use crate::foundations::FiniteUniverse;
use crate::Elem;

/// One component per square, all on the full symbol set; square `i` becomes
/// operation `x{i}` on component `L{i}`.
pub fn latin_multispace(symbols: &FiniteUniverse, squares: &[LatinSquare]) -> Result<MultiSpace> {
    let n = symbols.len();
    let mut ops = Vec::with_capacity(squares.len());
    let mut components = Vec::with_capacity(squares.len());
    for (i, sq) in squares.iter().enumerate() {
        if sq.side() != n {
            return Err(Error::Shape(format!(
                "square {} has side {}, but there are {n} symbols",
                i + 1,
                sq.side()
            )));
        }
        let op = format!("x{}", i + 1);
        ops.push(OpTable::from_fn(op.clone(), n, (0..n).collect(), |r, c| Some(sq.get(r, c)))?);
        components.push(Component::single(format!("L{}", i + 1), (0..n).collect(), op));
    }
    MultiSpace::new(symbols.clone(), ops, components)
}

/// Groups placed side by side. With `shared_identity` every identity is the
/// single symbol `e`; otherwise the carriers are disjoint. Component `G{i}`
/// carries `{op_prefix}{i}`.
pub fn group_union(groups: &[CayleyGroup], shared_identity: bool, op_prefix: &str) -> Result<MultiSpace> {
    let mut universe = FiniteUniverse::new(Vec::<String>::new())?;
    let shared = if shared_identity && !groups.is_empty() {
        Some(universe.push("e".into())?)
    } else {
        None
    };
    let mut carriers = Vec::with_capacity(groups.len());
    for (i, g) in groups.iter().enumerate() {
        let id = g.identity();
        let mut elems = Vec::with_capacity(g.order());
        for j in 0..g.order() {
            let x = match shared {
                Some(e) if j == id => e,
                _ => universe.push(format!("g{}_{j}", i + 1))?,
            };
            elems.push(x);
        }
        carriers.push(elems);
    }
    let n = universe.len();
    let mut ops = Vec::new();
    let mut components = Vec::new();
    for (i, (g, elems)) in groups.iter().zip(&carriers).enumerate() {
        let op = format!("{op_prefix}{}", i + 1);
        ops.push(g.table_on(&op, n, elems));
        components.push(Component::single(format!("G{}", i + 1), elems.clone(), op));
    }
    MultiSpace::new(universe, ops, components)
}

/// Cyclic groups of the given orders on disjoint carriers, each under its
/// own addition `+{i}`.
pub fn disjoint_cyclic_union(orders: &[usize]) -> Result<MultiSpace> {
    if let Some(&bad) = orders.iter().find(|&&m| m == 0) {
        return Err(Error::Input(format!("cyclic order {bad} must be at least 1")));
    }
    let groups: Vec<CayleyGroup> = orders.iter().map(|&m| groups::cyclic(m)).collect();
    group_union(&groups, false, "+")
}

/// Values of the products involving a new element `h` in one fan operation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitFill {
    /// `h × y` for `y` running over the base carrier then `h`.
    pub row: Vec<Option<Elem>>,
    /// `y × h` for `y` running over the base carrier.
    pub col: Vec<Option<Elem>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NewPairPolicy {
    /// Every product with a new element is undefined.
    UndefinedFill,
    /// `h × x = x × h = h × h = h`.
    Absorb,
    /// One fill per new element, indices into the extended universe.
    Explicit(Vec<ExplicitFill>),
}

fn extend_universe(universe: &FiniteUniverse, new_elems: &[String]) -> Result<(FiniteUniverse, Vec<Elem>)> {
    let mut u = universe.clone();
    let mut idx = Vec::with_capacity(new_elems.len());
    for s in new_elems {
        if universe.index_of(s).is_some() {
            return Err(Error::Input(format!("new symbol `{s}` already belongs to the base")));
        }
        idx.push(u.push(s.clone())?);
    }
    Ok((u, idx))
}

fn fan_op(
    name: String,
    base: &OpTable,
    n: usize,
    h: Elem,
    fill: Option<&ExplicitFill>,
    absorb: bool,
) -> Result<OpTable> {
    let carrier = base.domain();
    let mut domain = carrier.to_vec();
    domain.push(h);
    let explicit = |x: Elem, y: Elem| -> Result<Option<Elem>> {
        let f = fill.expect("explicit policy");
        let pos = |v: Elem| {
            if v == h {
                carrier.len()
            } else {
                carrier.binary_search(&v).expect("carrier element")
            }
        };
        let cell = if x == h { f.row.get(pos(y)) } else { f.col.get(pos(x)) };
        cell.copied()
            .ok_or_else(|| Error::Shape(format!("explicit fill for `{name}` is too short")))
    };
    let mut table = Vec::with_capacity(domain.len() * domain.len());
    for &x in &domain {
        for &y in &domain {
            let v = if x != h && y != h {
                base.apply(x, y)
            } else if fill.is_some() {
                explicit(x, y)?
            } else if absorb {
                Some(h)
            } else {
                None
            };
            table.push(v);
        }
    }
    OpTable::from_fn(name, n, domain.clone(), |x, y| {
        let i = domain.iter().position(|&d| d == x).expect("domain");
        let j = domain.iter().position(|&d| d == y).expect("domain");
        table[i * domain.len() + j]
    })
}

fn fan_fills(policy: &NewPairPolicy, count: usize) -> Result<Vec<Option<&ExplicitFill>>> {
    match policy {
        NewPairPolicy::Explicit(fills) if fills.len() != count => Err(Error::Shape(format!(
            "{} explicit fills for {count} new elements",
            fills.len()
        ))),
        NewPairPolicy::Explicit(fills) => Ok(fills.iter().map(Some).collect()),
        _ => Ok(vec![None; count]),
    }
}

/// Extends a group table by one fresh element per new operation: component
/// `F{i}` is `G ∪ {h_i}` under `x{i}`, which agrees with the base on `G × G`.
pub fn fan_extension(
    universe: &FiniteUniverse,
    base: &OpTable,
    new_elems: &[String],
    policy: &NewPairPolicy,
) -> Result<MultiSpace> {
    if !base.is_total() || !classify_table(base)?.kind.is_group() {
        return Err(Error::Contract(format!("`{}` is not a group table", base.name())));
    }
    let (u, hs) = extend_universe(universe, new_elems)?;
    let fills = fan_fills(policy, hs.len())?;
    let absorb = matches!(policy, NewPairPolicy::Absorb);
    let base = widen(base, u.len())?;
    let mut ops = Vec::new();
    let mut components = Vec::new();
    for (i, (&h, fill)) in hs.iter().zip(fills).enumerate() {
        let op = format!("x{}", i + 1);
        let t = fan_op(op.clone(), &base, u.len(), h, fill, absorb)?;
        components.push(Component::single(format!("F{}", i + 1), t.domain().to_vec(), op));
        ops.push(t);
    }
    MultiSpace::new(u, ops, components)
}

/// Ring-like fan: each new element gets a double operation `(+{i}, *{i})`
/// agreeing with the base ring on its carrier. The policy applies to both.
pub fn fan_extension_ring(
    universe: &FiniteUniverse,
    add: &OpTable,
    mul: &OpTable,
    new_elems: &[String],
    policy: &NewPairPolicy,
) -> Result<MultiSpace> {
    if add.domain() != mul.domain() {
        return Err(Error::Shape("addition and multiplication domains differ".into()));
    }
    let (u, hs) = extend_universe(universe, new_elems)?;
    let fills = fan_fills(policy, hs.len())?;
    let absorb = matches!(policy, NewPairPolicy::Absorb);
    let (add, mul) = (widen(add, u.len())?, widen(mul, u.len())?);
    let mut ops = Vec::new();
    let mut components = Vec::new();
    for (i, (&h, fill)) in hs.iter().zip(fills).enumerate() {
        let (a, m) = (format!("+{}", i + 1), format!("*{}", i + 1));
        let ta = fan_op(a.clone(), &add, u.len(), h, fill, absorb)?;
        let tm = fan_op(m.clone(), &mul, u.len(), h, fill, absorb)?;
        components.push(Component::double(format!("F{}", i + 1), ta.domain().to_vec(), a, m));
        ops.push(ta);
        ops.push(tm);
    }
    MultiSpace::new(u, ops, components)
}

/// Same table over a larger universe.
fn widen(t: &OpTable, universe_len: usize) -> Result<OpTable> {
    OpTable::from_fn(t.name(), universe_len, t.domain().to_vec(), |x, y| t.apply(x, y))
}

/// Blocks listed in generation order `g_{k1}, …, g_{kl}` each become the
/// cyclic group generated by `g_{k1}` (operation `x{k}`, component `B{k}`);
/// the ambient table is added as operation `o` on component `S`.
pub fn partition_cyclic(
    symbols: &FiniteUniverse,
    ambient: &OpTable,
    blocks: &[Vec<Elem>],
    core: &[Elem],
) -> Result<MultiSpace> {
    let n = symbols.len();
    let all: Vec<Elem> = (0..n).collect();
    if ambient.domain() != all.as_slice() || !ambient.is_total() || !ambient.is_closed() {
        return Err(Error::Contract("the ambient operation must be total on all symbols".into()));
    }
    if blocks.is_empty() {
        return Err(Error::Partition("at least one block is required".into()));
    }
    let core: BTreeSet<Elem> = core.iter().copied().collect();
    let sets: Vec<BTreeSet<Elem>> = blocks.iter().map(|b| b.iter().copied().collect()).collect();
    for (k, (b, s)) in blocks.iter().zip(&sets).enumerate() {
        if s.len() != b.len() || b.is_empty() {
            return Err(Error::Partition(format!("block {} is empty or repeats an element", k + 1)));
        }
        if !core.is_subset(s) {
            return Err(Error::Partition(format!("block {} does not contain the core", k + 1)));
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].intersection(&sets[j]).copied().collect::<BTreeSet<_>>() != core {
                return Err(Error::Partition(format!(
                    "blocks {} and {} meet outside the core",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let covered: BTreeSet<Elem> = sets.iter().flatten().copied().collect();
    if covered.len() != n {
        return Err(Error::Partition("the blocks do not cover every symbol".into()));
    }
    let mut ops = Vec::new();
    let mut components = Vec::new();
    for (k, block) in blocks.iter().enumerate() {
        let l = block.len();
        let pos = |x: Elem| block.iter().position(|&b| b == x).expect("block element");
        // g_a × g_b = g_{a+b} with 1-based indices wrapping at l, so
        // g_j × g_1 = g_{j+1} and g_l is the identity.
        let op = format!("x{}", k + 1);
        ops.push(OpTable::from_fn(op.clone(), n, block.clone(), |x, y| {
            Some(block[(pos(x) + pos(y) + 1) % l])
        })?);
        components.push(Component::single(format!("B{}", k + 1), block.clone(), op));
    }
    ops.push(ambient.clone().renamed("o"));
    components.push(Component::single("S", all, "o"));
    MultiSpace::new(symbols.clone(), ops, components)
}

pub fn zn_add(n: usize) -> OpTable {
    OpTable::from_fn("+", n, (0..n).collect(), |x, y| Some((x + y) % n)).expect("valid table")
}

pub fn zn_mul(n: usize) -> OpTable {
    OpTable::from_fn("*", n, (0..n).collect(), |x, y| Some(x * y % n)).expect("valid table")
}

/// `Z_n` with `+` and `*` as one double-operation component named `Z{n}`.
pub fn zn_ring(n: usize) -> Result<MultiSpace> {
    if n == 0 {
        return Err(Error::Input("Z_0 is not finite".into()));
    }
    let u = FiniteUniverse::numbered(n);
    MultiSpace::new(
        u,
        vec![zn_add(n), zn_mul(n)],
        vec![Component::double(format!("Z{n}"), (0..n).collect(), "+", "*")],
    )
}

/// Residue rings side by side with operations `(+{i}, *{i})`. With
/// `shared_zero` every zero is the single symbol `0`.
pub fn ring_union(orders: &[usize], shared_zero: bool) -> Result<MultiSpace> {
    let mut universe = FiniteUniverse::new(Vec::<String>::new())?;
    let zero = if shared_zero { Some(universe.push("0".into())?) } else { None };
    let mut carriers = Vec::new();
    for (i, &m) in orders.iter().enumerate() {
        if m == 0 {
            return Err(Error::Input("Z_0 is not finite".into()));
        }
        let elems = (0..m)
            .map(|j| match zero {
                Some(z) if j == 0 => Ok(z),
                _ => universe.push(format!("r{}_{j}", i + 1)),
            })
            .collect::<Result<Vec<_>>>()?;
        carriers.push(elems);
    }
    let n = universe.len();
    let mut ops = Vec::new();
    let mut components = Vec::new();
    for (i, (&m, elems)) in orders.iter().zip(&carriers).enumerate() {
        let local = |x: Elem| elems.iter().position(|&e| e == x).expect("carrier");
        let (a, p) = (format!("+{}", i + 1), format!("*{}", i + 1));
        ops.push(OpTable::from_fn(a.clone(), n, elems.clone(), |x, y| Some(elems[(local(x) + local(y)) % m]))?);
        ops.push(OpTable::from_fn(p.clone(), n, elems.clone(), |x, y| Some(elems[local(x) * local(y) % m]))?);
        components.push(Component::double(format!("R{}", i + 1), elems.clone(), a, p));
    }
    MultiSpace::new(universe, ops, components)
}

/// The two squares of the worked three-symbol example.
pub fn example_squares() -> [LatinSquare; 2] {
    [
        LatinSquare::new(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).expect("Latin"),
        LatinSquare::new(vec![vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]]).expect("Latin"),
    ]
}
