//! JSON documents for structures, metric spaces, mappings, sequences and
//! construction recipes.
//!
//! Undefined products are `null`, rationals are `[numerator, denominator]`
//! pairs, and elements are referred to by name. [`render`] is canonical:
//! rendering a parsed canonical file reproduces it byte for byte.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::space::{Component, MultiSpace, Operations};
use crate::algebra::table::OpTable;
use crate::constructions::{
    self, fan_extension, fan_extension_ring, gen_latin_squares, groups, latin_multispace, partition_cyclic,
    NewPairPolicy,
};
use crate::error::{Error, Result};
use crate::foundations::FiniteUniverse;
use crate::multimetric::{MappingTable, MetricTable, MultiMetricSpace, SequenceSpec, Q};
use crate::multivector::{AmbientSpace, MultiVectorSpace, Vector};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub format_version: String,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Multispace(StructureBody),
    Multivector(VectorBody),
    Multimetric(MetricBody),
    Mapping(MappingBody),
    Sequence(SequenceSpec),
    Latin(LatinRecipe),
    Fan(FanRecipe),
    CyclicUnion(CyclicUnionRecipe),
    PartitionCyclic(PartitionRecipe),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::Multispace(_) => "multispace",
            Body::Multivector(_) => "multivector",
            Body::Multimetric(_) => "multimetric",
            Body::Mapping(_) => "mapping",
            Body::Sequence(_) => "sequence",
            Body::Latin(_) => "latin",
            Body::Fan(_) => "fan",
            Body::CyclicUnion(_) => "cyclic_union",
            Body::PartitionCyclic(_) => "partition_cyclic",
        }
    }
}

impl Document {
    pub fn new(body: Body) -> Self {
        Document {
            format_version: FORMAT_VERSION.to_string(),
            body,
        }
    }

    /// The structure a multispace file or recipe describes.
    pub fn multispace(&self) -> Result<MultiSpace> {
        match &self.body {
            Body::Multispace(s) => s.to_space(),
            Body::Latin(r) => Recipe::Latin(r.clone()).build(),
            Body::Fan(r) => Recipe::Fan(r.clone()).build(),
            Body::CyclicUnion(r) => Recipe::CyclicUnion(r.clone()).build(),
            Body::PartitionCyclic(r) => Recipe::PartitionCyclic(r.clone()).build(),
            other => Err(wrong_kind("a multispace", other)),
        }
    }

    pub fn multivector(&self) -> Result<MultiVectorSpace> {
        match &self.body {
            Body::Multivector(v) => v.to_space(),
            other => Err(wrong_kind("a multivector space", other)),
        }
    }

    pub fn multimetric(&self) -> Result<MultiMetricSpace> {
        match &self.body {
            Body::Multimetric(m) => m.to_space(),
            other => Err(wrong_kind("a multimetric space", other)),
        }
    }
}

fn wrong_kind(wanted: &str, got: &Body) -> Error {
    Error::WrongStructure(format!("expected {wanted} file, found kind `{}`", got.kind()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationEntry {
    pub name: String,
    pub domain: Vec<String>,
    /// Rows over `domain × domain`; `null` where undefined.
    pub table: Vec<Vec<Option<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub name: String,
    pub carrier: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub op: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureBody {
    pub universe: Vec<String>,
    pub operations: Vec<OperationEntry>,
    pub components: Vec<ComponentEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<Recipe>,
}

impl StructureBody {
    pub fn from_space(ms: &MultiSpace, recipe: Option<Recipe>) -> Self {
        let name = |x: usize| ms.name_of(x).to_string();
        let operations = ms
            .ops()
            .iter()
            .map(|t| OperationEntry {
                name: t.name().to_string(),
                domain: t.domain().iter().map(|&x| name(x)).collect(),
                table: t
                    .domain()
                    .iter()
                    .map(|&x| t.domain().iter().map(|&y| t.apply(x, y).map(name)).collect())
                    .collect(),
            })
            .collect();
        let components = ms
            .components()
            .iter()
            .map(|c| {
                let (op, add, mul) = match c.ops() {
                    Operations::Single(op) => (Some(op.clone()), None, None),
                    Operations::Double { add, mul } => (None, Some(add.clone()), Some(mul.clone())),
                };
                ComponentEntry {
                    name: c.name().to_string(),
                    carrier: c.carrier().iter().map(|&x| name(x)).collect(),
                    op,
                    add,
                    mul,
                }
            })
            .collect();
        StructureBody {
            universe: ms.universe().names().to_vec(),
            operations,
            components,
            recipe,
        }
    }

    pub fn to_space(&self) -> Result<MultiSpace> {
        let u = FiniteUniverse::new(self.universe.iter().cloned())?;
        let mut ops = Vec::with_capacity(self.operations.len());
        for o in &self.operations {
            let mut domain = u.lookup_all(&o.domain)?;
            if o.table.len() != domain.len() || o.table.iter().any(|r| r.len() != domain.len()) {
                return Err(Error::Shape(format!(
                    "operation `{}` needs a {1}×{1} table",
                    o.name,
                    domain.len()
                )));
            }
            let mut entries = Vec::with_capacity(domain.len() * domain.len());
            for row in &o.table {
                for cell in row {
                    entries.push(cell.as_deref().map(|c| u.lookup(c)).transpose()?);
                }
            }
            // Tables are stored in file order; the library wants sorted rows.
            let order = {
                let mut idx: Vec<usize> = (0..domain.len()).collect();
                idx.sort_by_key(|&i| domain[i]);
                idx
            };
            let k = domain.len();
            let sorted = order
                .iter()
                .flat_map(|&i| order.iter().map(move |&j| (i, j)))
                .map(|(i, j)| entries[i * k + j])
                .collect();
            domain.sort_unstable();
            ops.push(OpTable::new(o.name.clone(), u.len(), domain, sorted)?);
        }
        let mut components = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let carrier = u.lookup_all(&c.carrier)?;
            let ops = match (&c.op, &c.add, &c.mul) {
                (Some(op), None, None) => Operations::Single(op.clone()),
                (None, Some(add), Some(mul)) => Operations::Double {
                    add: add.clone(),
                    mul: mul.clone(),
                },
                _ => {
                    return Err(Error::Input(format!(
                        "component `{}` needs either `op` or both `add` and `mul`",
                        c.name
                    )))
                }
            };
            components.push(Component::new(c.name.clone(), carrier, ops));
        }
        MultiSpace::new(u, ops, components)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recipe {
    Latin(LatinRecipe),
    Fan(FanRecipe),
    CyclicUnion(CyclicUnionRecipe),
    PartitionCyclic(PartitionRecipe),
}

/// `k` random Latin squares on the symbols `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatinRecipe {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
}

/// A group (or with `ring`, the residue ring `Z_n`) extended by `n` fresh
/// elements `h1, …, hn`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanRecipe {
    pub base: String,
    pub n: usize,
    pub policy: NewPairPolicy,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub ring: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicUnionRecipe {
    pub orders: Vec<usize>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub shared_identity: bool,
}

/// Blocks of the named ambient group's elements `0..order`, listed in
/// generation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionRecipe {
    pub ambient: String,
    pub blocks: Vec<Vec<String>>,
    pub core: Vec<String>,
}

fn group(label: &str) -> Result<groups::CayleyGroup> {
    groups::by_label(label).ok_or_else(|| Error::Input(format!("unknown group `{label}`")))
}

impl Recipe {
    pub fn build(&self) -> Result<MultiSpace> {
        match self {
            Recipe::Latin(r) => {
                let symbols = FiniteUniverse::new((1..=r.n).map(|s| s.to_string()))?;
                latin_multispace(&symbols, &gen_latin_squares(r.n, r.k, r.seed)?)
            }
            Recipe::Fan(r) => {
                let hs: Vec<String> = (1..=r.n).map(|i| format!("h{i}")).collect();
                if r.ring {
                    let m = r
                        .base
                        .strip_prefix('Z')
                        .and_then(|m| m.parse::<usize>().ok())
                        .filter(|&m| m >= 1)
                        .ok_or_else(|| Error::Input(format!("ring fans need a base Z_n, not `{}`", r.base)))?;
                    let u = FiniteUniverse::numbered(m);
                    fan_extension_ring(&u, &constructions::zn_add(m), &constructions::zn_mul(m), &hs, &r.policy)
                } else {
                    let g = group(&r.base)?;
                    let u = FiniteUniverse::numbered(g.order());
                    fan_extension(&u, &g.table("o"), &hs, &r.policy)
                }
            }
            Recipe::CyclicUnion(r) => {
                if r.orders.iter().any(|&m| m == 0) {
                    return Err(Error::Input("cyclic orders must be at least 1".into()));
                }
                let gs: Vec<_> = r.orders.iter().map(|&m| groups::cyclic(m)).collect();
                constructions::group_union(&gs, r.shared_identity, "+")
            }
            Recipe::PartitionCyclic(r) => {
                let g = group(&r.ambient)?;
                let u = FiniteUniverse::numbered(g.order());
                let blocks = r.blocks.iter().map(|b| u.lookup_all(b)).collect::<Result<Vec<_>>>()?;
                partition_cyclic(&u, &g.table("o"), &blocks, &u.lookup_all(&r.core)?)
            }
        }
    }

    pub fn into_body(self) -> Body {
        match self {
            Recipe::Latin(r) => Body::Latin(r),
            Recipe::Fan(r) => Body::Fan(r),
            Recipe::CyclicUnion(r) => Body::CyclicUnion(r),
            Recipe::PartitionCyclic(r) => Body::PartitionCyclic(r),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorEntry {
    pub name: String,
    /// Rows of the generator matrix over `GF(p)`.
    pub generators: Vec<Vector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorBody {
    pub p: u32,
    pub n: usize,
    pub components: Vec<VectorEntry>,
}

impl VectorBody {
    pub fn from_space(ms: &MultiVectorSpace) -> Self {
        VectorBody {
            p: ms.ambient().p(),
            n: ms.ambient().dim(),
            components: ms
                .components()
                .iter()
                .map(|c| VectorEntry {
                    name: c.name.clone(),
                    generators: c.generators.clone(),
                })
                .collect(),
        }
    }

    pub fn to_space(&self) -> Result<MultiVectorSpace> {
        MultiVectorSpace::new(
            AmbientSpace::new(self.p, self.n)?,
            self.components.iter().map(|c| (c.name.clone(), c.generators.clone())).collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricEntry {
    pub name: String,
    pub points: Vec<String>,
    pub distances: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricBody {
    pub components: Vec<MetricEntry>,
}

impl MetricBody {
    pub fn from_space(ms: &MultiMetricSpace) -> Self {
        MetricBody {
            components: ms
                .components()
                .iter()
                .map(|c| MetricEntry {
                    name: c.name.clone(),
                    points: c.table.points().to_vec(),
                    distances: c.table.grid().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_space(&self) -> Result<MultiMetricSpace> {
        let comps = self
            .components
            .iter()
            .map(|c| Ok((c.name.clone(), MetricTable::new(c.points.clone(), c.distances.clone())?)))
            .collect::<Result<Vec<_>>>()?;
        MultiMetricSpace::new(comps)
    }
}

/// `T` as `[x, Tx]` label pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappingBody {
    pub map: Vec<(String, String)>,
}

impl MappingBody {
    pub fn from_table(ms: &MultiMetricSpace, t: &MappingTable) -> Self {
        let p = ms.points();
        MappingBody {
            map: t.image().iter().enumerate().map(|(x, &y)| (p[x].clone(), p[y].clone())).collect(),
        }
    }

    pub fn to_table(&self, ms: &MultiMetricSpace) -> Result<MappingTable> {
        MappingTable::from_pairs(ms, &self.map)
    }
}

/// Parses a document; errors carry the line and column.
pub fn parse(text: &str) -> Result<Document> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::Parse(format!(
            "unsupported format_version `{}` (expected `{FORMAT_VERSION}`)",
            doc.format_version
        )));
    }
    Ok(doc)
}

/// Canonical text: two-space indentation, with arrays of scalars and arrays
/// of arrays of scalars kept on one line.
pub fn render(doc: &Document) -> String {
    let value = serde_json::to_value(doc).expect("documents serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

pub fn render_value<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("reports serialize");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(xs) => xs.iter().all(|x| is_scalar(x) || matches!(x, Value::Array(ys) if ys.iter().all(is_scalar))),
        _ => false,
    }
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Array(_) if is_flat(v) => out.push_str(&serde_json::to_string(v).expect("json").replace(",", ", ")),
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("json"));
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("json")),
    }
}
