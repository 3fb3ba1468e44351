use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use stringc::catalog::{self, CatalogEntry};
use stringc::classify::{self, ClassifyConfig, ClassificationResult};
use stringc::extend::{rd_extend, sesqui_extend};
use stringc::fracture::{find_splits, fracture_graph, two_fracture_graph};
use stringc::group::{GroupKind, DEFAULT_CAP};
use stringc::reps::{graph_of, sggi_of};
use stringc::sggi::{CChecker, CVerdict, Witness};
use stringc::{Perm, PermRepGraph, Sggi};

const EXIT_INVALID: u8 = 1;
const EXIT_INDETERMINATE: u8 = 2;

#[derive(Parser)]
#[command(name = "stringc", version, about = "String C-group representations of permutation groups")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Config {
    /// Largest group order enumerated directly when intersecting subgroups
    #[arg(long, global = true, env = "STRINGC_CAP", default_value_t = DEFAULT_CAP)]
    cap: u128,
    /// Largest degree the classifier accepts
    #[arg(long, global = true, env = "STRINGC_MAX_DEGREE", default_value_t = 9)]
    max_degree: usize,
    /// Classifier worker threads (default: all cores)
    #[arg(long, global = true, env = "STRINGC_WORKERS")]
    workers: Option<usize>,
    /// Print JSON instead of text
    #[arg(long, global = true, env = "STRINGC_JSON")]
    json: bool,
    /// Rerun classification with one worker and require identical output
    #[arg(long, global = true, env = "STRINGC_SEED_CHECK")]
    seed_check: bool,
}

impl Config {
    fn to_json(&self) -> Value {
        json!({
            "intersection_cap": self.cap,
            "max_degree": self.max_degree,
            "workers": self.workers,
            "output": if self.json { "json" } else { "text" },
        })
    }

    fn classify(&self) -> ClassifyConfig {
        ClassifyConfig { cap: self.cap, max_degree: self.max_degree, workers: self.workers, ..Default::default() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Verify an sggi or graph file, or a catalog entry given as `catalog:ID`
    Verify { input: String },
    /// Enumerate string C-groups of S_n of rank r up to isomorphism and duality
    Classify { n: usize, r: usize },
    /// Number of string C-groups of S_n of rank n - kappa
    Sigma { n: usize, kappa: usize },
    /// Transform an sggi and print the result in sggi text form
    Extend {
        input: String,
        /// Rank-and-degree extension at a perfect split
        #[arg(long, conflicts_with_all = ["sesqui", "dual"])]
        split: Option<usize>,
        /// Sesqui-extension of generator K by --tau
        #[arg(long, requires = "tau", conflicts_with = "dual")]
        sesqui: Option<usize>,
        /// Involution in cycle notation; its largest point sets the new degree
        #[arg(long)]
        tau: Option<String>,
        /// Reverse the generators
        #[arg(long)]
        dual: bool,
    },
    /// Print the permutation representation graph in DOT
    ExportDot { input: String },
    /// Verify every catalog entry whose id matches the pattern
    CatalogVerify {
        #[arg(default_value = "*")]
        pattern: String,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

fn invalid(msg: impl ToString) -> Failure {
    Failure { code: EXIT_INVALID, msg: msg.to_string() }
}

type Outcome = Result<u8, Failure>;

/// An input file or catalog reference, as an sggi plus the catalog entry if any.
fn load(input: &str) -> Result<(Sggi, Option<CatalogEntry>), Failure> {
    if let Some(id) = input.strip_prefix("catalog:") {
        let e = catalog::resolve(id).map_err(invalid)?;
        let s = e.sggi().map_err(invalid)?;
        return Ok((s, Some(e)));
    }
    let text = fs::read_to_string(Path::new(input)).map_err(|e| invalid(format!("{input}: {e}")))?;
    parse_text(&text).map(|s| (s, None))
}

/// Graph DSL when the text has `edge` lines, sggi text otherwise.
fn parse_text(text: &str) -> Result<Sggi, Failure> {
    let is_graph = text.lines().any(|l| l.trim_start().starts_with("edge"));
    if is_graph {
        let g = PermRepGraph::parse_dsl(text).map_err(invalid)?;
        sggi_of(&g).map_err(invalid)
    } else {
        Sggi::parse(text).map_err(invalid)
    }
}

fn group_name(s: &Sggi, kind: GroupKind, order: u128) -> String {
    match kind {
        GroupKind::Symmetric(m) => format!("S_{m}"),
        GroupKind::Alternating(m) => format!("A_{m}"),
        GroupKind::Other if s.rank() == 2 && order > 4 => format!("D_{}", order / 2),
        GroupKind::Other => "other".into(),
    }
}

/// `G_J` names the subgroup generated without the labels in `J`.
fn parabolic_name(labels: &[usize], r: usize) -> String {
    let missing: Vec<String> = (0..r).filter(|i| !labels.contains(i)).map(|i| i.to_string()).collect();
    match missing.len() {
        0 => "G".into(),
        1 => format!("G_{}", missing[0]),
        _ => format!("G_{{{}}}", missing.join(",")),
    }
}

fn witness_text(w: &Witness, r: usize) -> String {
    let both: Vec<usize> = w.j.iter().filter(|x| w.k.contains(x)).copied().collect();
    format!(
        "|{}∩{}|={} vs |{}|={}",
        parabolic_name(&w.j, r),
        parabolic_name(&w.k, r),
        w.intersection_order,
        parabolic_name(&both, r),
        w.expected_order
    )
}

fn verify(cfg: &Config, input: &str) -> Outcome {
    let (s, entry) = load(input)?;
    let checker = CChecker::new(cfg.cap);
    let verdict = checker.check(&s);
    let g = s.group();
    let ident = g.identify();
    let name = group_name(&s, ident.kind, ident.order);
    let splits = find_splits(&s);
    let fracture = fracture_graph(&s).is_some();
    let two_fracture = two_fracture_graph(&s).is_some();
    let report = entry.as_ref().map(|e| catalog::verify_entry(e, &checker));
    let code = if matches!(verdict, CVerdict::Indeterminate { .. }) { EXIT_INDETERMINATE } else { 0 };

    if cfg.json {
        let out = json!({
            "config": cfg.to_json(),
            "input": input,
            "degree": s.degree(),
            "rank": s.rank(),
            "sggi": s.gens().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "schlafli": s.schlafli().ok(),
            "group": { "name": name, "identity": ident },
            "string_c": verdict,
            "splits": splits.iter().map(|sp| sp.to_json()).collect::<Vec<_>>(),
            "fracture_graph": fracture,
            "two_fracture_graph": two_fracture,
            "catalog": report,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
        return Ok(code);
    }

    println!("input: {input}");
    println!("sggi: valid, degree {}, rank {}", s.degree(), s.rank());
    if let Ok(t) = s.schlafli() {
        let t: Vec<String> = t.iter().map(|x| x.to_string()).collect();
        println!("type: ({})", t.join(","));
    }
    let prim = match ident.primitive {
        Some(true) => ", primitive",
        Some(false) => ", imprimitive",
        None => "",
    };
    let trans = if ident.transitive { "transitive" } else { "intransitive" };
    println!("group: {name} ({}), order {}, {trans}{prim}", ident.kind, ident.order);
    match &verdict {
        CVerdict::False { witness } => {
            println!("string C-group: false; witness orders {}", witness_text(witness, s.rank()))
        }
        v => println!("string C-group: {v}"),
    }
    if splits.is_empty() {
        println!("splits: none");
    }
    for sp in &splits {
        let kind = if sp.perfect { "perfect" } else { "not perfect" };
        println!("split: label {} at {{{},{}}}, {kind}", sp.label, sp.a + 1, sp.b + 1);
    }
    println!("fracture graph: {}", if fracture { "yes" } else { "no" });
    println!("2-fracture graph: {}", if two_fracture { "yes" } else { "no" });
    if let Some(rep) = report {
        print!("{rep}");
    }
    Ok(code)
}

fn run_classify(cfg: &Config, n: usize, r: usize) -> Result<ClassificationResult, Failure> {
    classify::enumerate(n, r, &cfg.classify()).map_err(invalid)
}

fn classify_cmd(cfg: &Config, n: usize, r: usize) -> Outcome {
    let res = run_classify(cfg, n, r)?;
    let mut out = res.to_json();
    out["config"] = cfg.to_json();
    if cfg.seed_check {
        let single = Config { workers: Some(1), ..cfg.clone() };
        let again = run_classify(&single, n, r)?;
        if again.to_json() != res.to_json() {
            return Err(invalid("seed check failed: one-worker run differs"));
        }
        out["seed_check"] = json!("identical");
    }
    let code = if res.stats.indeterminate > 0 { EXIT_INDETERMINATE } else { 0 };
    if cfg.json {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("S_{n} rank {r}: {} classes{}", res.count, if res.complete { "" } else { " (incomplete)" });
        if n == 6 {
            println!("up to conjugacy and duality only: {}", res.stats.inner_count);
        }
        for (k, s) in res.representatives.iter().enumerate() {
            let t: Vec<String> = s.schlafli().unwrap_or_default().iter().map(|x| x.to_string()).collect();
            let g: Vec<String> = s.gens().iter().map(|p| p.to_string()).collect();
            println!("{:>3}: type ({}) {}", k + 1, t.join(","), g.join(" "));
        }
        if cfg.seed_check {
            println!("seed check: identical");
        }
    }
    Ok(code)
}

fn sigma_cmd(cfg: &Config, n: usize, kappa: usize) -> Outcome {
    let count = classify::sigma(n, kappa, &cfg.classify()).map_err(invalid)?;
    if cfg.json {
        let out = json!({ "config": cfg.to_json(), "n": n, "kappa": kappa, "rank": n.checked_sub(kappa), "count": count });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("{count}");
    }
    Ok(0)
}

fn extend_cmd(
    cfg: &Config,
    input: &str,
    split: Option<usize>,
    sesqui: Option<usize>,
    tau: Option<&str>,
    dual: bool,
) -> Outcome {
    let (s, _) = load(input)?;
    let (out, info) = if let Some(i) = split {
        let e = rd_extend(&s, i).map_err(invalid)?;
        (e.result, json!({ "operation": "split", "label": i, "new_point": e.new_point + 1 }))
    } else if let Some(k) = sesqui {
        let text = tau.ok_or_else(|| invalid("--sesqui needs --tau"))?;
        let m = text.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()).max().unwrap_or(0);
        let t = Perm::parse(text, m.max(s.degree())).map_err(invalid)?;
        let res = sesqui_extend(&s, k, &t).map_err(invalid)?;
        let info = json!({
            "operation": "sesqui",
            "generator": k,
            "tau": res.tau.to_string(),
            "kind": res.kind,
            "base_order": res.base_order,
            "extended_order": res.extended_order,
        });
        (res.extended, info)
    } else if dual {
        (s.dual(), json!({ "operation": "dual" }))
    } else {
        return Err(invalid("choose one of --split, --sesqui, --dual"));
    };
    if cfg.json {
        let j = json!({
            "config": cfg.to_json(),
            "extension": info,
            "sggi": out.gens().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "degree": out.degree(),
        });
        println!("{}", serde_json::to_string_pretty(&j).unwrap());
    } else {
        print!("{}", out.to_text());
    }
    Ok(0)
}

fn export_dot(input: &str) -> Outcome {
    let (s, entry) = load(input)?;
    let g = entry.map(|e| e.graph).unwrap_or_else(|| graph_of(&s));
    print!("{}", g.to_dot());
    Ok(0)
}

fn catalog_verify(cfg: &Config, pattern: &str) -> Outcome {
    let checker = CChecker::new(cfg.cap);
    let reports = catalog::verify_matching(pattern, &checker).map_err(invalid)?;
    if reports.is_empty() {
        return Err(invalid(format!("no catalog entry matches {pattern:?}")));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let indeterminate = reports.iter().any(|r| r.lines.iter().any(|l| l.actual.starts_with("indeterminate")));
    if cfg.json {
        let out = json!({ "config": cfg.to_json(), "entries": reports, "failed": failed });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        for r in &reports {
            print!("{r}");
        }
        println!("{} entries, {} passed, {failed} failed", reports.len(), reports.len() - failed);
    }
    Ok(if indeterminate {
        EXIT_INDETERMINATE
    } else if failed > 0 {
        EXIT_INVALID
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = &cli.config;
    let outcome = match &cli.command {
        Command::Verify { input } => verify(cfg, input),
        Command::Classify { n, r } => classify_cmd(cfg, *n, *r),
        Command::Sigma { n, kappa } => sigma_cmd(cfg, *n, *kappa),
        Command::Extend { input, split, sesqui, tau, dual } => {
            extend_cmd(cfg, input, *split, *sesqui, tau.as_deref(), *dual)
        }
        Command::ExportDot { input } => export_dot(input),
        Command::CatalogVerify { pattern } => catalog_verify(cfg, pattern),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
