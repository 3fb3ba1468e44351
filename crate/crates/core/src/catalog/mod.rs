//! The permutation representation graphs printed in the literature on string
//! C-groups of symmetric and alternating groups, with their stated facts.
//!
//! Fixed graphs ship as DSL files, families as label-pattern generators; a JSON
//! manifest lists the claims. [`verify_entry`] replays every claim through the
//! core operations and reports one line per claim.

mod families;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fracture::{find_splits, fracture_graph, is_two_fracture_selection, two_fracture_graph};
use crate::group::GroupKind;
use crate::reps::{sggi_of, Edge, PermRepGraph};
use crate::sggi::{CChecker, CVerdict, Sggi};

pub use families::Params;
use families::FAMILIES;

static GRAPHS: &[(&str, &str)] = &[
    ("IPF.1", include_str!("../../catalog/graphs/IPF.1.graph")),
    ("IPF.2", include_str!("../../catalog/graphs/IPF.2.graph")),
    ("IPF.3", include_str!("../../catalog/graphs/IPF.3.graph")),
    ("IPF.4", include_str!("../../catalog/graphs/IPF.4.graph")),
    ("IPF.5a", include_str!("../../catalog/graphs/IPF.5a.graph")),
    ("IPF.5b", include_str!("../../catalog/graphs/IPF.5b.graph")),
    ("IPF.6a", include_str!("../../catalog/graphs/IPF.6a.graph")),
    ("IPF.6b", include_str!("../../catalog/graphs/IPF.6b.graph")),
    ("IPF.7", include_str!("../../catalog/graphs/IPF.7.graph")),
    ("IPF.8", include_str!("../../catalog/graphs/IPF.8.graph")),
    ("IPF.9", include_str!("../../catalog/graphs/IPF.9.graph")),
    ("T2.1", include_str!("../../catalog/graphs/T2.1.graph")),
    ("T2.2", include_str!("../../catalog/graphs/T2.2.graph")),
    ("T2.3", include_str!("../../catalog/graphs/T2.3.graph")),
    ("T2.4", include_str!("../../catalog/graphs/T2.4.graph")),
    ("T2.5", include_str!("../../catalog/graphs/T2.5.graph")),
    ("T2.6", include_str!("../../catalog/graphs/T2.6.graph")),
    ("T2.7", include_str!("../../catalog/graphs/T2.7.graph")),
    ("T2.8", include_str!("../../catalog/graphs/T2.8.graph")),
    ("T2.9", include_str!("../../catalog/graphs/T2.9.graph")),
    ("T3.2", include_str!("../../catalog/graphs/T3.2.graph")),
    ("T3.3", include_str!("../../catalog/graphs/T3.3.graph")),
    ("T3.4", include_str!("../../catalog/graphs/T3.4.graph")),
    ("T3.5", include_str!("../../catalog/graphs/T3.5.graph")),
    ("T4.1", include_str!("../../catalog/graphs/T4.1.graph")),
    ("T4.2", include_str!("../../catalog/graphs/T4.2.graph")),
    ("T4.3", include_str!("../../catalog/graphs/T4.3.graph")),
    ("T4.4", include_str!("../../catalog/graphs/T4.4.graph")),
    ("T4.5", include_str!("../../catalog/graphs/T4.5.graph")),
    ("T4.6", include_str!("../../catalog/graphs/T4.6.graph")),
    ("T4.7", include_str!("../../catalog/graphs/T4.7.graph")),
    ("T4.8", include_str!("../../catalog/graphs/T4.8.graph")),
    ("T5.10", include_str!("../../catalog/graphs/T5.10.graph")),
    ("T5.12", include_str!("../../catalog/graphs/T5.12.graph")),
    ("T5.14", include_str!("../../catalog/graphs/T5.14.graph")),
    ("T5.15", include_str!("../../catalog/graphs/T5.15.graph")),
    ("T5.3", include_str!("../../catalog/graphs/T5.3.graph")),
    ("T5.4", include_str!("../../catalog/graphs/T5.4.graph")),
    ("T5.5", include_str!("../../catalog/graphs/T5.5.graph")),
    ("T5.6", include_str!("../../catalog/graphs/T5.6.graph")),
    ("T5.7", include_str!("../../catalog/graphs/T5.7.graph")),
    ("T5.8", include_str!("../../catalog/graphs/T5.8.graph")),
    ("T5.9", include_str!("../../catalog/graphs/T5.9.graph")),
];

static MANIFEST: &str = include_str!("../../catalog/manifest.json");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("missing parameter {0}")]
    MissingParam(String),
    #[error("parameters out of range (allowed: {0})")]
    OutOfRange(String),
    #[error("unexpected parameter {0}")]
    UnexpectedParam(String),
    #[error("malformed catalog reference {0:?}")]
    BadReference(String),
    #[error("bad pattern: {0}")]
    BadPattern(String),
    #[error("graph could not be built: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupClaim {
    Symmetric,
    Alternating,
    AlternatingOrSymmetric,
    /// neither symmetric nor alternating on the graph's points
    Other,
}

/// A machine-checkable statement about an entry. Label sets index the
/// generators; `G_J` below means the subgroup generated without the labels in `J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Claim {
    Degree { value: usize },
    Rank { value: usize },
    StringC { value: bool },
    Group { value: GroupClaim },
    Order { value: u64 },
    Transitive { value: bool },
    Primitive { value: bool },
    /// `|G_without|`
    ParabolicOrder { without: Vec<usize>, value: u64 },
    /// `|G_a ∩ G_b|`
    IntersectionOrder { a: Vec<usize>, b: Vec<usize>, value: u64 },
    FractureGraph { value: bool },
    TwoFracture { value: bool },
    /// the solid (non-dashed) edges form a 2-fracture graph
    TwoFractureSelection,
    /// some split is not perfect
    NonPerfectSplit,
}

fn labels(ls: &[usize]) -> String {
    let v: Vec<String> = ls.iter().map(|x| x.to_string()).collect();
    v.join(",")
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Degree { .. } => f.write_str("degree"),
            Claim::Rank { .. } => f.write_str("rank"),
            Claim::StringC { .. } => f.write_str("string C-group"),
            Claim::Group { .. } => f.write_str("group"),
            Claim::Order { .. } => f.write_str("order"),
            Claim::Transitive { .. } => f.write_str("transitive"),
            Claim::Primitive { .. } => f.write_str("primitive"),
            Claim::ParabolicOrder { without, .. } => write!(f, "|G_{{{}}}|", labels(without)),
            Claim::IntersectionOrder { a, b, .. } => write!(f, "|G_{{{}}} ∩ G_{{{}}}|", labels(a), labels(b)),
            Claim::FractureGraph { .. } => f.write_str("fracture graph"),
            Claim::TwoFracture { .. } => f.write_str("2-fracture graph"),
            Claim::TwoFractureSelection => f.write_str("solid edges form a 2-fracture graph"),
            Claim::NonPerfectSplit => f.write_str("split that is not perfect"),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
struct ManifestEntry {
    id: String,
    #[serde(default)]
    claims: Vec<Claim>,
    /// 1-based `[u, v, label]`
    #[serde(default)]
    dashed: Vec<[usize; 3]>,
    #[serde(default)]
    informational: bool,
    #[serde(default)]
    notes: Option<String>,
}

#[derive(Debug, Deserialize)]
struct Manifest {
    entries: Vec<ManifestEntry>,
}

fn manifest() -> &'static [ManifestEntry] {
    static M: OnceLock<Vec<ManifestEntry>> = OnceLock::new();
    M.get_or_init(|| serde_json::from_str::<Manifest>(MANIFEST).expect("bundled manifest parses").entries)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    /// base id plus parameters, e.g. `T5.11@n=13`
    pub id: String,
    pub graph: PermRepGraph,
    pub dashed: Vec<Edge>,
    pub claims: Vec<Claim>,
    /// claims are recorded but never count as failures
    pub informational: bool,
    pub notes: Option<String>,
}

impl CatalogEntry {
    pub fn sggi(&self) -> Result<Sggi, CatalogError> {
        sggi_of(&self.graph).map_err(|e| CatalogError::Invalid(e.to_string()))
    }

    /// Edges not drawn dashed.
    pub fn solid_edges(&self) -> Vec<Edge> {
        self.graph.edges().iter().filter(|e| !self.dashed.contains(e)).copied().collect()
    }
}

/// Base ids in manifest order.
pub fn ids() -> Vec<&'static str> {
    manifest().iter().map(|e| e.id.as_str()).collect()
}

pub fn is_family(id: &str) -> bool {
    FAMILIES.iter().any(|f| f.id == id)
}

/// Parameter names and the allowed range of a family.
pub fn family_range(id: &str) -> Option<(&'static [&'static str], &'static str)> {
    FAMILIES.iter().find(|f| f.id == id).map(|f| (f.params, f.range))
}

fn format_id(id: &str, params: &Params) -> String {
    if params.is_empty() {
        return id.to_string();
    }
    let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{id}@{}", ps.join(","))
}

pub fn instantiate(id: &str, params: &Params) -> Result<CatalogEntry, CatalogError> {
    let m = manifest().iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))?;
    let mut claims = m.claims.clone();
    let (graph, dashed, full_id) = if let Some(fam) = FAMILIES.iter().find(|f| f.id == id) {
        if let Some(k) = params.keys().find(|k| !fam.params.contains(&k.as_str())) {
            return Err(CatalogError::UnexpectedParam(k.clone()));
        }
        let built = (fam.generate)(params)?;
        claims.splice(0..0, built.claims);
        (built.graph, built.dashed, format_id(id, params))
    } else {
        if let Some(k) = params.keys().next() {
            return Err(CatalogError::UnexpectedParam(k.clone()));
        }
        let text = GRAPHS.iter().find(|(g, _)| *g == id).map(|(_, t)| *t).expect("every fixed entry has a graph file");
        let graph = PermRepGraph::parse_dsl(text).map_err(|e| CatalogError::Invalid(e.to_string()))?;
        let dashed = m.dashed.iter().map(|&[u, v, l]| Edge::new(u - 1, v - 1, l)).collect();
        (graph, dashed, id.to_string())
    };
    Ok(CatalogEntry { id: full_id, graph, dashed, claims, informational: m.informational, notes: m.notes.clone() })
}

/// Parses `ID` or `ID@k=v,k=v` and instantiates it.
pub fn resolve(reference: &str) -> Result<CatalogEntry, CatalogError> {
    let bad = || CatalogError::BadReference(reference.to_string());
    let (id, rest) = match reference.split_once('@') {
        Some((id, rest)) => (id, Some(rest)),
        None => (reference, None),
    };
    let mut params = Params::new();
    if let Some(rest) = rest {
        for kv in rest.split(',') {
            let (k, v) = kv.split_once('=').ok_or_else(bad)?;
            let v: usize = v.trim().parse().map_err(|_| bad())?;
            params.insert(k.trim().to_string(), v);
        }
    }
    instantiate(id.trim(), &params)
}

/// Every entry whose base id matches the shell-style `pattern`; families are
/// instantiated at their sample parameters.
pub fn expand(pattern: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let pat = glob::Pattern::new(pattern).map_err(|e| CatalogError::BadPattern(e.to_string()))?;
    let mut out = Vec::new();
    for id in ids().into_iter().filter(|id| pat.matches(id)) {
        match FAMILIES.iter().find(|f| f.id == id) {
            Some(fam) => {
                for p in (fam.samples)() {
                    out.push(instantiate(id, &p)?);
                }
            }
            None => out.push(instantiate(id, &Params::new())?),
        }
    }
    Ok(out)
}

pub fn all_entries() -> Vec<CatalogEntry> {
    expand("*").expect("bundled catalog instantiates")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimLine {
    pub claim: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
    pub informational: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub id: String,
    /// `None` when the graph is a valid permutation representation graph
    pub invalid: Option<String>,
    pub lines: Vec<ClaimLine>,
    pub notes: Option<String>,
}

impl EntryReport {
    /// Valid graph and every non-informational claim confirmed.
    pub fn passed(&self) -> bool {
        self.invalid.is_none() && self.lines.iter().all(|l| l.ok || l.informational)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimLine> {
        self.lines.iter().filter(|l| !l.ok && !l.informational)
    }
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        writeln!(f, "{} {status}", self.id)?;
        if let Some(e) = &self.invalid {
            writeln!(f, "  invalid graph: {e}")?;
        }
        for l in &self.lines {
            let mark = match (l.ok, l.informational) {
                (true, _) => "ok  ",
                (false, true) => "info",
                (false, false) => "FAIL",
            };
            writeln!(f, "  [{mark}] {}: expected {}, got {}", l.claim, l.expected, l.actual)?;
        }
        if let Some(n) = &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

fn verdict_text(v: &CVerdict) -> String {
    match v {
        CVerdict::True => "true".into(),
        CVerdict::False { witness } => format!("false ({witness})"),
        CVerdict::Indeterminate { cap } => format!("indeterminate (cap {cap})"),
    }
}

fn group_matches(claim: GroupClaim, kind: GroupKind, n: usize) -> bool {
    match claim {
        GroupClaim::Symmetric => kind == GroupKind::Symmetric(n),
        GroupClaim::Alternating => kind == GroupKind::Alternating(n),
        GroupClaim::AlternatingOrSymmetric => kind == GroupKind::Symmetric(n) || kind == GroupKind::Alternating(n),
        GroupClaim::Other => kind == GroupKind::Other,
    }
}

fn check_claim(e: &CatalogEntry, s: &Sggi, claim: &Claim, checker: &CChecker) -> (String, String, bool) {
    let n = s.degree();
    let id = || s.group().identify();
    let order_of = |without: &[usize]| s.subgroup_without(without).order();
    match claim {
        Claim::Degree { value } => (value.to_string(), n.to_string(), *value == n),
        Claim::Rank { value } => (value.to_string(), s.rank().to_string(), *value == s.rank()),
        Claim::StringC { value } => {
            let v = checker.check(s);
            let ok = if *value { v.is_true() } else { v.is_false() };
            (value.to_string(), verdict_text(&v), ok)
        }
        Claim::Group { value } => {
            let g = id();
            (format!("{value:?}"), format!("{} of order {}", g.kind, g.order), group_matches(*value, g.kind, n))
        }
        Claim::Order { value } => {
            let o = s.group().order();
            (value.to_string(), o.to_string(), *value as u128 == o)
        }
        Claim::Transitive { value } => {
            let t = s.group().is_transitive();
            (value.to_string(), t.to_string(), *value == t)
        }
        Claim::Primitive { value } => {
            let p = s.group().is_primitive();
            let shown = p.map(|b| b.to_string()).unwrap_or_else(|| "n/a (intransitive)".into());
            (value.to_string(), shown, p == Some(*value))
        }
        Claim::ParabolicOrder { without, value } => {
            let o = order_of(without);
            (value.to_string(), o.to_string(), *value as u128 == o)
        }
        Claim::IntersectionOrder { a, b, value } => {
            let ga = s.subgroup_without(a);
            let gb = s.subgroup_without(b);
            match ga.intersection_order(&gb, checker.cap()) {
                Ok(o) => (value.to_string(), o.to_string(), *value as u128 == o),
                Err(err) => (value.to_string(), err.to_string(), false),
            }
        }
        Claim::FractureGraph { value } => {
            let has = fracture_graph(s).is_some();
            (value.to_string(), has.to_string(), *value == has)
        }
        Claim::TwoFracture { value } => {
            let has = two_fracture_graph(s).is_some();
            (value.to_string(), has.to_string(), *value == has)
        }
        Claim::TwoFractureSelection => {
            let solid = e.solid_edges();
            let ok = is_two_fracture_selection(s, &solid);
            ("true".into(), format!("{ok} ({} solid edges)", solid.len()), ok)
        }
        Claim::NonPerfectSplit => {
            let splits = find_splits(s);
            let ok = splits.iter().any(|sp| !sp.perfect);
            let labels: Vec<String> =
                splits.iter().map(|sp| format!("{}{}", sp.label, if sp.perfect { "" } else { "*" })).collect();
            ("true".into(), format!("splits [{}] (* = not perfect)", labels.join(" ")), ok)
        }
    }
}

/// Checks every claim of `e`. Failures are report lines, never errors.
pub fn verify_entry(e: &CatalogEntry, checker: &CChecker) -> EntryReport {
    let mut report = EntryReport { id: e.id.clone(), invalid: None, lines: Vec::new(), notes: e.notes.clone() };
    let s = match e.sggi() {
        Ok(s) => s,
        Err(err) => {
            report.invalid = Some(err.to_string());
            return report;
        }
    };
    for claim in &e.claims {
        let (expected, actual, ok) = check_claim(e, &s, claim, checker);
        report.lines.push(ClaimLine { claim: claim.to_string(), expected, actual, ok, informational: e.informational });
    }
    report
}

/// Verifies every entry matching `pattern`, in parallel, in catalog order.
pub fn verify_matching(pattern: &str, checker: &CChecker) -> Result<Vec<EntryReport>, CatalogError> {
    use rayon::prelude::*;
    let entries = expand(pattern)?;
    Ok(entries.par_iter().map(|e| verify_entry(e, checker)).collect())
}

/// Builds a parameter map from `(name, value)` pairs.
pub fn params(pairs: &[(&str, usize)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>()
}
