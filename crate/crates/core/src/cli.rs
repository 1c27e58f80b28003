//! The `mspace` command line: `check`, `construct` and `analyze`.
//!
//! Exit codes: 0 when the verdict holds (or an analysis completes), 1 when it
//! fails or a prerequisite verifier rejects the input, 2 on input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::automorphism::{automorphisms, AutomorphismOptions};
use crate::algebra::space::MultiSpace;
use crate::algebra::table::{classify_table, ClassWitness};
use crate::constructions::NewPairPolicy;
use crate::error::{Error, Result};
use crate::format::{
    parse, render, Body, CyclicUnionRecipe, Document, FanRecipe, LatinRecipe, PartitionRecipe, Recipe,
    StructureBody,
};
use crate::multigroup::{coset_partition, is_multigroup, maximal_normal_series, SeriesReport, SubsetView};
use crate::multimetric::{analyze_sequence, fixed_points, is_contraction, MultiMetricSpace};
use crate::multiring::{decompose_artin, is_multiring, multiideal_chain};
use crate::multivector::{dim_formula, greedy_basis, MultiVectorSpace};
use crate::Elem;

#[derive(Debug, Parser)]
#[command(name = "mspace", version, about = "Verify, build and analyze finite multi-spaces")]
pub struct Cli {
    /// Print the machine-readable report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized constructions.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a structure verifier on a file.
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Level::Auto)]
        level: Level,
    },
    /// Build a structure and write it as a `.mspace.json` file.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Output path; stdout when absent.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Run an analysis on a file.
    Analyze {
        #[command(subcommand)]
        what: AnalyzeKind,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Auto,
    Multispace,
    Multigroup,
    Multiring,
    Multivector,
    Multimetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    UndefinedFill,
    Absorb,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// `k` random Latin squares of side `n` (uses `--seed`).
    Latin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// A group extended by `n` fresh elements, one per operation.
    Fan {
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = PolicyArg::UndefinedFill)]
        policy: PolicyArg,
        /// Treat `base` as the residue ring `Z_n` and extend both operations.
        #[arg(long)]
        ring: bool,
    },
    /// Cyclic groups side by side.
    #[command(name = "cyclic_union", alias = "cyclic-union")]
    CyclicUnion {
        #[arg(long, value_delimiter = ',', required = true)]
        orders: Vec<usize>,
        #[arg(long)]
        shared_identity: bool,
    },
    /// Blocks of a group, each made cyclic in generation order.
    #[command(name = "partition_cyclic", alias = "partition-cyclic")]
    PartitionCyclic {
        #[arg(long)]
        ambient: String,
        /// One block per flag, elements comma separated.
        #[arg(long = "block", required = true)]
        blocks: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        core: Vec<String>,
    },
}

#[derive(Debug, Args)]
pub struct Oriented {
    pub path: PathBuf,
    /// Operation (or component) names in processing order; declaration
    /// order when absent.
    #[arg(long, value_delimiter = ',')]
    pub orientation: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeKind {
    /// Cosets of a sub-multi-group and a partitioning representation set.
    Cosets {
        path: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sub: Vec<String>,
        /// Operations of the sub-multi-group; those of the components it
        /// meets when absent.
        #[arg(long, value_delimiter = ',')]
        ops: Vec<String>,
    },
    /// Maximal normal series under an orientation.
    Series(Oriented),
    /// Maximal multi-ideal chains under an orientation.
    #[command(name = "ideal-chain")]
    IdealChain(Oriented),
    /// Direct-sum decomposition along orthogonal idempotents.
    Decompose { path: PathBuf },
    /// Dimension by inclusion–exclusion and by greedy basis.
    Dim { path: PathBuf },
    /// Automorphisms of a multi-space.
    Automorphisms {
        path: PathBuf,
        /// Also allow operations to be permuted among themselves.
        #[arg(long)]
        permute_ops: bool,
    },
    /// Fixed points of a mapping on a multi-metric space.
    #[command(name = "fixed-point")]
    FixedPoint {
        path: PathBuf,
        #[arg(long)]
        mapping: PathBuf,
        /// Require every component to contract, not just one.
        #[arg(long)]
        strict: bool,
    },
    /// Convergence of a finitely presented sequence.
    Sequence {
        path: PathBuf,
        #[arg(long)]
        sequence: PathBuf,
    },
}

/// A verdict with its text and machine forms.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub holds: bool,
    pub lines: Vec<String>,
    pub data: Map<String, Value>,
    /// File contents produced by `construct`.
    pub output: Option<String>,
}

impl Report {
    fn new(command: impl Into<String>, holds: bool) -> Self {
        Report {
            command: command.into(),
            holds,
            lines: Vec::new(),
            data: Map::new(),
            output: None,
        }
    }

    fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    fn put(&mut self, k: &str, v: Value) -> &mut Self {
        self.data.insert(k.to_string(), v);
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.holds {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "holds": self.holds,
            "exit_code": self.exit_code(),
            "data": Value::Object(self.data.clone()),
        })
    }

    pub fn to_text(&self) -> String {
        let verdict = if self.holds { "holds" } else { "fails" };
        let mut s = format!("{}: {verdict}\n", self.command);
        for l in &self.lines {
            s.push_str("  ");
            s.push_str(l);
            s.push('\n');
        }
        s
    }
}

/// Verifier rejections exit 1; anything else about the input exits 2.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Contract(_) | Error::WrongStructure(_) => 1,
        _ => 2,
    }
}

fn read_doc(path: &Path) -> Result<Document> {
    let text = fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn names(ms: &MultiSpace, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| ms.name_of(x).to_string()).collect()
}

fn set(ms: &MultiSpace, xs: &[Elem]) -> String {
    format!("{{{}}}", names(ms, xs).join(", "))
}

fn lookup_set(ms: &MultiSpace, xs: &[String]) -> Result<Vec<Elem>> {
    let mut v = ms.universe().lookup_all(xs)?;
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

fn witness_text(ms: &MultiSpace, w: &ClassWitness) -> String {
    let n = |x: Elem| ms.name_of(x).to_string();
    match w {
        ClassWitness::NotAssociative(x, y, z) => format!("associativity fails at ({}, {}, {})", n(*x), n(*y), n(*z)),
        ClassWitness::NoUnit => "no unit".into(),
        ClassWitness::NoInverse(x) => format!("{} has no inverse", n(*x)),
        ClassWitness::NotCommutative(x, y) => format!("{} and {} do not commute", n(*x), n(*y)),
    }
}

fn witness_json(ms: &MultiSpace, w: &ClassWitness) -> Value {
    let n = |x: Elem| ms.name_of(x).to_string();
    match w {
        ClassWitness::NotAssociative(x, y, z) => json!({"not_associative": [n(*x), n(*y), n(*z)]}),
        ClassWitness::NoUnit => json!("no_unit"),
        ClassWitness::NoInverse(x) => json!({"no_inverse": n(*x)}),
        ClassWitness::NotCommutative(x, y) => json!({"not_commutative": [n(*x), n(*y)]}),
    }
}

fn completeness(ms: &MultiSpace, r: &mut Report, witness: Option<(Elem, Elem)>) {
    match witness {
        None => r.line("completed: every pair has a defined product"),
        Some((x, y)) => r.line(format!(
            "not completed: no operation defines {} with {}",
            ms.name_of(x),
            ms.name_of(y)
        )),
    };
    r.put("completed", json!(witness.is_none()));
    r.put("completeness_witness", json!(witness.map(|(x, y)| names(ms, &[x, y]))));
}

fn check_multispace(ms: &MultiSpace) -> Result<Report> {
    let mut r = Report::new("check multispace", true);
    let mut ops = Vec::new();
    for t in ms.ops() {
        let c = classify_table(t)?;
        r.line(format!("operation {}: {} on {} elements", t.name(), c.kind, t.domain().len()));
        ops.push(json!({"op": t.name(), "kind": c.kind.label(), "domain_size": t.domain().len()}));
    }
    r.put("operations", Value::Array(ops));
    completeness(ms, &mut r, ms.completeness_witness());
    Ok(r)
}

fn check_multigroup(ms: &MultiSpace) -> Result<Report> {
    let rep = is_multigroup(ms)?;
    let mut r = Report::new("check multigroup", rep.holds);
    let mut comps = Vec::new();
    for c in &rep.components {
        let kind = c.kind.map_or("partial".to_string(), |k| k.to_string());
        let mut line = format!("component {} ({}): {kind}", c.component, c.op);
        let fails: Vec<String> = c.failures.iter().map(|w| witness_text(ms, w)).collect();
        if !c.is_group() && !fails.is_empty() {
            line.push_str("; ");
            line.push_str(&fails.join("; "));
        }
        r.line(line);
        comps.push(json!({
            "component": c.component,
            "op": c.op,
            "kind": c.kind.map(|k| k.label()),
            "failures": c.failures.iter().map(|w| witness_json(ms, w)).collect::<Vec<_>>(),
        }));
    }
    let mut laws = Vec::new();
    for p in &rep.distribution {
        match (&p.holds, p.witness) {
            (Some((o, i)), _) => r.line(format!("{o} distributes over {i}")),
            (None, Some((x, y, z))) => r.line(format!(
                "{} and {} distribute in neither order; first failure at ({}, {}, {})",
                p.first,
                p.second,
                ms.name_of(x),
                ms.name_of(y),
                ms.name_of(z)
            )),
            (None, None) => r.line(format!("{} and {} distribute in neither order", p.first, p.second)),
        };
        laws.push(json!({
            "first": p.first,
            "second": p.second,
            "holds": p.holds,
            "witness": p.witness.map(|(x, y, z)| names(ms, &[x, y, z])),
        }));
    }
    r.put("components", Value::Array(comps)).put("distribution", Value::Array(laws));
    completeness(ms, &mut r, rep.completeness_witness);
    Ok(r)
}

fn check_multiring(ms: &MultiSpace) -> Result<Report> {
    let rep = is_multiring(ms)?;
    let mut r = Report::new("check multiring", rep.holds);
    let mut comps = Vec::new();
    for c in &rep.components {
        let status = match &c.failure {
            None if c.field => "field".to_string(),
            None => "ring".to_string(),
            Some(f) => format!("not a ring ({f:?})"),
        };
        let mut line = format!("component {}: {status}", c.component);
        if let Some((a, b)) = c.zero_divisors {
            line.push_str(&format!("; zero divisors {} × {}", ms.name_of(a), ms.name_of(b)));
        }
        r.line(line);
        comps.push(json!({
            "component": c.component,
            "failure": c.failure.as_ref().map(|f| format!("{f:?}")),
            "field": c.field,
            "zero_divisors": c.zero_divisors.map(|(a, b)| names(ms, &[a, b])),
        }));
    }
    let mut cross = Vec::new();
    for f in &rep.cross_failures {
        let (x, y, z) = f.witness;
        r.line(format!(
            "{} fails for ({}, {}) at ({}, {}, {})",
            f.law,
            f.outer,
            f.inner,
            ms.name_of(x),
            ms.name_of(y),
            ms.name_of(z)
        ));
        cross.push(json!({"law": f.law, "outer": f.outer, "inner": f.inner, "witness": names(ms, &[x, y, z])}));
    }
    r.line(format!("multi-field: {}", rep.multi_field));
    r.put("components", Value::Array(comps))
        .put("cross_failures", Value::Array(cross))
        .put("multi_field", json!(rep.multi_field));
    completeness(ms, &mut r, rep.completeness_witness);
    Ok(r)
}

fn vectors_text(vs: &[Vec<u32>]) -> String {
    let items: Vec<String> = vs
        .iter()
        .map(|v| format!("({})", v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("{{{}}}", items.join(", "))
}

fn check_multivector(ms: &MultiVectorSpace) -> Result<Report> {
    let a = ms.ambient();
    let mut r = Report::new("check multivector", true);
    r.line(format!("ambient GF({})^{}", a.p(), a.dim()));
    let mut comps = Vec::new();
    for c in ms.components() {
        let dim = a.rank(&c.generators);
        r.line(format!("component {}: subspace of dimension {dim}, {} vectors", c.name, c.vectors.len()));
        comps.push(json!({"component": c.name, "dim": dim, "size": c.vectors.len()}));
    }
    let basis = greedy_basis(ms);
    r.line(format!("greedy basis {} of size {}", vectors_text(&basis), basis.len()));
    r.put("p", json!(a.p()))
        .put("n", json!(a.dim()))
        .put("components", Value::Array(comps))
        .put("basis", json!(basis))
        .put("dim", json!(basis.len()));
    Ok(r)
}

fn check_multimetric(ms: &MultiMetricSpace) -> Report {
    let mut r = Report::new("check multimetric", true);
    let mut comps = Vec::new();
    for c in ms.components() {
        r.line(format!("component {}: metric on {} points", c.name, c.table.len()));
        comps.push(json!({"component": c.name, "points": c.table.points()}));
    }
    r.line(format!("union of {} points", ms.points().len()));
    r.put("components", Value::Array(comps)).put("union_size", json!(ms.points().len()));
    r
}

fn cmd_check(path: &Path, level: Level) -> Result<Report> {
    let doc = read_doc(path)?;
    let level = match (level, &doc.body) {
        (Level::Auto, Body::Multivector(_)) => Level::Multivector,
        (Level::Auto, Body::Multimetric(_)) => Level::Multimetric,
        (Level::Auto, _) => {
            let ms = doc.multispace()?;
            if ms.all_double() {
                Level::Multiring
            } else if ms.all_single() {
                Level::Multigroup
            } else {
                Level::Multispace
            }
        }
        (l, _) => l,
    };
    match level {
        Level::Multivector => check_multivector(&doc.multivector()?),
        Level::Multimetric => Ok(check_multimetric(&doc.multimetric()?)),
        Level::Multispace => check_multispace(&doc.multispace()?),
        Level::Multigroup => check_multigroup(&doc.multispace()?),
        Level::Multiring | Level::Auto => check_multiring(&doc.multispace()?),
    }
}

fn cmd_construct(kind: &ConstructKind, seed: u64) -> Result<Report> {
    let recipe = match kind {
        ConstructKind::Latin { n, k } => Recipe::Latin(LatinRecipe { n: *n, k: *k, seed }),
        ConstructKind::Fan { base, n, policy, ring } => Recipe::Fan(FanRecipe {
            base: base.clone(),
            n: *n,
            policy: match policy {
                PolicyArg::UndefinedFill => NewPairPolicy::UndefinedFill,
                PolicyArg::Absorb => NewPairPolicy::Absorb,
            },
            ring: *ring,
        }),
        ConstructKind::CyclicUnion { orders, shared_identity } => Recipe::CyclicUnion(CyclicUnionRecipe {
            orders: orders.clone(),
            shared_identity: *shared_identity,
        }),
        ConstructKind::PartitionCyclic { ambient, blocks, core } => Recipe::PartitionCyclic(PartitionRecipe {
            ambient: ambient.clone(),
            blocks: blocks
                .iter()
                .map(|b| b.split(',').map(|s| s.trim().to_string()).collect())
                .collect(),
            core: core.clone(),
        }),
    };
    let ms = recipe
        .build()
        .map_err(|e| Error::Input(format!("construction failed: {e}")))?;
    let kind_name = recipe.clone().into_body().kind();
    let doc = Document::new(Body::Multispace(StructureBody::from_space(&ms, Some(recipe))));
    let mut r = Report::new(format!("construct {kind_name}"), true);
    r.line(format!(
        "{} elements, {} operations, {} components",
        ms.universe().len(),
        ms.ops().len(),
        ms.components().len()
    ));
    r.put("elements", json!(ms.universe().len()))
        .put("operations", json!(ms.ops().len()))
        .put("components", json!(ms.components().len()));
    r.output = Some(render(&doc));
    Ok(r)
}

fn series_report(ms: &MultiSpace, name: &str, s: &SeriesReport) -> Report {
    let mut r = Report::new(name, true);
    let lengths: Vec<usize> = s.lengths.iter().copied().collect();
    r.line(format!("orientation {}", s.orientation.join(", ")));
    r.line(format!(
        "{} maximal chains, lengths {:?}{}",
        s.chain_count,
        lengths,
        if s.constant_length() { " (constant)" } else { "" }
    ));
    let mut chains = Vec::new();
    for c in &s.chains {
        let levels: Vec<String> = c.levels.iter().map(|l| set(ms, l)).collect();
        r.line(format!("length {}: {}", c.len(), levels.join(" > ")));
        chains.push(json!({
            "length": c.len(),
            "levels": c.levels.iter().map(|l| names(ms, l)).collect::<Vec<_>>(),
            "step_ops": c.step_ops,
        }));
    }
    if s.truncated {
        r.line(format!("listing truncated to {} chains", s.chains.len()));
    }
    r.put("orientation", json!(s.orientation))
        .put("chain_count", u64::try_from(s.chain_count).map_or_else(|_| json!(s.chain_count.to_string()), |c| json!(c)))
        .put("lengths", json!(lengths))
        .put("constant_length", json!(s.constant_length()))
        .put("chains", Value::Array(chains))
        .put("truncated", json!(s.truncated));
    r
}

fn default_orientation(ms: &MultiSpace, given: &[String], by_component: bool) -> Vec<String> {
    if !given.is_empty() {
        given.to_vec()
    } else if by_component {
        ms.components().iter().map(|c| c.name().to_string()).collect()
    } else {
        ms.ops().iter().map(|t| t.name().to_string()).collect()
    }
}

fn cmd_analyze(what: &AnalyzeKind) -> Result<Report> {
    match what {
        AnalyzeKind::Cosets { path, sub, ops } => {
            let ms = read_doc(path)?.multispace()?;
            let elems = lookup_set(&ms, sub)?;
            let view = if ops.is_empty() {
                SubsetView::spanning(&ms, elems)?
            } else {
                SubsetView::new(&ms, elems, ops.clone())?
            };
            let rep = coset_partition(&ms, &view)?;
            let mut r = Report::new("analyze cosets", true);
            r.line(format!("sub-multi-group {} under {}", set(&ms, view.elements()), view.ops().join(", ")));
            r.line(format!(
                "{} distinct cosets, pairwise disjoint: {}",
                rep.cosets.len(),
                rep.pairwise_disjoint
            ));
            let mut part = Vec::new();
            for c in &rep.partition {
                r.line(format!("{} H = {}", ms.name_of(c.representative), set(&ms, &c.elements)));
                part.push(json!({"representative": ms.name_of(c.representative), "elements": names(&ms, &c.elements)}));
            }
            r.put("distinct_cosets", json!(rep.cosets.len()))
                .put("pairwise_disjoint", json!(rep.pairwise_disjoint))
                .put("partition", Value::Array(part));
            Ok(r)
        }
        AnalyzeKind::Series(o) => {
            let ms = read_doc(&o.path)?.multispace()?;
            let orientation = default_orientation(&ms, &o.orientation, false);
            let s = maximal_normal_series(&ms, &orientation)?;
            Ok(series_report(&ms, "analyze series", &s))
        }
        AnalyzeKind::IdealChain(o) => {
            let ms = read_doc(&o.path)?.multispace()?;
            let orientation = default_orientation(&ms, &o.orientation, true);
            let s = multiideal_chain(&ms, &orientation)?;
            Ok(series_report(&ms, "analyze ideal-chain", &s))
        }
        AnalyzeKind::Decompose { path } => {
            let ms = read_doc(path)?.multispace()?;
            let d = decompose_artin(&ms)?;
            let mut r = Report::new("analyze decompose", d.verified());
            let mut comps = Vec::new();
            for c in &d.components {
                let pieces: Vec<String> = c.pieces.iter().map(|p| set(&ms, &p.elements)).collect();
                r.line(format!("{} = {}", c.component, pieces.join(" ⊕ ")));
                r.line(format!(
                    "idempotents {}; zero intersections {}, unique sums {}, exact reconstruction {}",
                    set(&ms, &c.idempotents),
                    c.zero_intersections,
                    c.unique_sums,
                    c.reconstruction_exact
                ));
                comps.push(json!({
                    "component": c.component,
                    "idempotents": names(&ms, &c.idempotents),
                    "pieces": c.pieces.iter().map(|p| names(&ms, &p.elements)).collect::<Vec<_>>(),
                    "zero_intersections": c.zero_intersections,
                    "unique_sums": c.unique_sums,
                    "reconstruction_exact": c.reconstruction_exact,
                    "two_sided_agree": c.two_sided_agree,
                }));
            }
            r.put("components", Value::Array(comps)).put("verified", json!(d.verified()));
            Ok(r)
        }
        AnalyzeKind::Dim { path } => {
            let ms = read_doc(path)?.multivector()?;
            let d = dim_formula(&ms)?;
            let mut r = Report::new("analyze dim", d.agree);
            r.line(format!("inclusion-exclusion: {}", d.formula_value));
            r.line(format!("greedy basis size: {}", d.greedy_value));
            r.line(if d.agree {
                "the two counts agree".to_string()
            } else {
                "the two counts disagree (flagged)".to_string()
            });
            r.put("formula_value", json!(d.formula_value))
                .put("greedy_value", json!(d.greedy_value))
                .put("agree", json!(d.agree))
                .put("terms", json!(d.terms));
            Ok(r)
        }
        AnalyzeKind::Automorphisms { path, permute_ops } => {
            let ms = read_doc(path)?.multispace()?;
            let aut = automorphisms(&ms, AutomorphismOptions { permute_ops: *permute_ops })?;
            let mut r = Report::new("analyze automorphisms", true);
            r.line(format!(
                "{} automorphisms over {} elements{}",
                aut.len(),
                aut.union.len(),
                if *permute_ops { " (operations may be permuted)" } else { "" }
            ));
            r.line(format!(
                "identity present {}, closed under composition {}, closed under inverse {}",
                aut.contains_identity(),
                aut.closed_under_composition(),
                aut.closed_under_inverse()
            ));
            let maps: Vec<Value> = aut
                .maps
                .iter()
                .map(|m| {
                    Value::Object(
                        aut.union
                            .iter()
                            .map(|&x| (ms.name_of(x).to_string(), json!(ms.name_of(m[x]))))
                            .collect(),
                    )
                })
                .collect();
            r.put("count", json!(aut.len()))
                .put("union_size", json!(aut.union.len()))
                .put("permute_ops", json!(permute_ops))
                .put("maps", Value::Array(maps));
            Ok(r)
        }
        AnalyzeKind::FixedPoint { path, mapping, strict } => {
            let ms = read_doc(path)?.multimetric()?;
            let Body::Mapping(m) = read_doc(mapping)?.body else {
                return Err(Error::WrongStructure(format!("{} is not a mapping file", mapping.display())));
            };
            let t = m.to_table(&ms)?;
            let c = is_contraction(&ms, &t, *strict);
            let f = fixed_points(&ms, &t, *strict);
            let p = ms.points();
            let fixed: Vec<String> = f.points.iter().map(|&x| p[x].clone()).collect();
            let mut r = Report::new("analyze fixed-point", f.bound_ok != Some(false));
            r.line(format!(
                "contraction ({} reading): {}{}",
                if *strict { "strict" } else { "existential" },
                c.verdict,
                c.alpha.map(|a| format!(", alpha {a}")).unwrap_or_default()
            ));
            r.line(format!("{} fixed points {{{}}} over {} components", f.count, fixed.join(", "), f.components));
            match f.bound_ok {
                Some(ok) => r.line(format!("bound 1 <= count <= {}: {ok}", f.components)),
                None => r.line("bound not asserted: the map is not a contraction"),
            };
            r.line(format!("every orbit stabilizes at a fixed point: {}", f.orbits_ok));
            let ratios: Vec<Value> = c
                .component_map
                .iter()
                .map(|cr| {
                    json!({
                        "from": ms.components()[cr.from].name,
                        "to": ms.components()[cr.to].name,
                        "alpha": cr.alpha,
                    })
                })
                .collect();
            r.put("contraction", json!(c.verdict))
                .put("strict", json!(strict))
                .put("alpha", json!(c.alpha))
                .put("component_map", Value::Array(ratios))
                .put("fixed_points", json!(fixed))
                .put("count", json!(f.count))
                .put("components", json!(f.components))
                .put("bound_ok", json!(f.bound_ok))
                .put("orbits_ok", json!(f.orbits_ok));
            Ok(r)
        }
        AnalyzeKind::Sequence { path, sequence } => {
            let ms = read_doc(path)?.multimetric()?;
            let Body::Sequence(seq) = read_doc(sequence)?.body else {
                return Err(Error::WrongStructure(format!("{} is not a sequence file", sequence.display())));
            };
            let s = analyze_sequence(&ms, &seq)?;
            let tail = s.tail_component.map(|k| ms.components()[k].name.clone());
            let mut r = Report::new("analyze sequence", true);
            r.line(format!(
                "convergent: {}{}",
                s.convergent,
                s.limit.as_ref().map(|l| format!(", limit {l}")).unwrap_or_default()
            ));
            r.line(format!("cauchy: {}", s.cauchy));
            if let Some(t) = &tail {
                r.line(format!("tail lies in component {t}"));
            }
            r.put("convergent", json!(s.convergent))
                .put("limit", json!(s.limit))
                .put("cauchy", json!(s.cauchy))
                .put("tail_component", json!(tail));
            Ok(r)
        }
    }
}

/// Runs one parsed invocation.
pub fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Check { path, level } => cmd_check(path, *level),
        Command::Construct { kind, .. } => cmd_construct(kind, cli.seed),
        Command::Analyze { what } => cmd_analyze(what),
    }
}

// A closed pipe downstream is not an error worth reporting.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

/// Full program behaviour; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            if let (Some(text), Command::Construct { out, .. }) = (&report.output, &cli.command) {
                match out {
                    Some(p) => {
                        if let Err(e) = fs::write(p, text) {
                            eprintln!("error: {}: {e}", p.display());
                            return 2;
                        }
                    }
                    None => {
                        emit(text);
                        return report.exit_code();
                    }
                }
            }
            if cli.json {
                emit(&format!("{}\n", serde_json::to_string_pretty(&report.to_json()).expect("json")));
            } else {
                emit(&report.to_text());
            }
            report.exit_code()
        }
        Err(e) => {
            let code = error_exit_code(&e);
            if cli.json {
                emit(&format!("{}\n", json!({"error": e.to_string(), "exit_code": code})));
            } else {
                eprintln!("error: {e}");
            }
            code
        }
    }
}
