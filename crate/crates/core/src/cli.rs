//! Command-line front end. [`run`] returns the rendered output and exit code
//! so it can be driven from tests; `main` only prints.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::format::AlgebraFile;
use crate::algebra::{Algebra, AlgebraError, DEFAULT_MAX_DEGREE};
use crate::bounds::{
    best_v_search, full_report, syzygy_type_with, Analysis, AnalysisOptions, BoundReport, BoundsError, SearchMode,
    SyzygyTypeCertificate, DEFAULT_SUBSET_LIMIT, DEFAULT_SYZYGY_DEPTH,
};
use crate::fixtures;
use crate::modules::{minimal_resolution, proj_dimension, PdResult, Rep, DEFAULT_ISO_TRIALS, DEFAULT_PD_CUTOFF};
use crate::torsion::SimpleSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_ADMISSIBLE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "derdim", version, about = "Homological invariants and derived-dimension bounds for bound quiver algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Algebra file, or the name of a bundled fixture
    file: String,
    /// Syzygy iterations before a projective dimension is reported as a lower bound
    #[arg(long, default_value_t = DEFAULT_PD_CUTOFF)]
    cutoff: usize,
    /// Syzygy depth searched for periodicity certificates and resolutions
    #[arg(long, default_value_t = DEFAULT_SYZYGY_DEPTH)]
    depth: usize,
    /// Seed for the randomized isomorphism tests
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest path length tried when certifying admissibility
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: usize,
    /// Emit a JSON document instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, Loewy length, global dimension, and pd/id of each simple
    Analyze(Common),
    /// Every bound for one set V of simples
    Bounds {
        #[command(flatten)]
        common: Common,
        /// `none`, `all`, or a comma-separated list of 1-based vertices
        #[arg(long)]
        simples: String,
    },
    /// Rank all sets V of simples by their best bound
    Search {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = DEFAULT_SUBSET_LIMIT)]
        subset_limit: usize,
        /// Hill-climb instead of failing when the vertex count exceeds the subset limit
        #[arg(long)]
        greedy: bool,
        /// Print every row instead of the best ten
        #[arg(long)]
        all: bool,
    },
    /// Minimal projective resolution of a simple `S<i>` or projective `P<i>`
    Resolve {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        module: String,
    },
    /// Certificate for finite syzygy type of the top of the algebra
    SyzygyType(Common),
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Outcome {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs the tool on an argument vector (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_USAGE, text),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => Outcome::ok(out),
        Err(f) => f,
    }
}

fn load(common: &Common) -> Result<Arc<Algebra>, Outcome> {
    let path = std::path::Path::new(&common.file);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Outcome::fail(EXIT_USAGE, format!("{}: {e}", common.file)))?
    } else if let Some(src) = fixtures::source(&common.file) {
        src.to_string()
    } else {
        return Err(Outcome::fail(
            EXIT_USAGE,
            format!("{}: no such file or bundled fixture (fixtures: {})", common.file, fixtures::NAMES.join(", ")),
        ));
    };
    let file = AlgebraFile::parse(&text).map_err(|e| Outcome::fail(EXIT_USAGE, format!("{}: {e}", common.file)))?;
    match file.build(common.max_degree) {
        Ok(a) => Ok(Arc::new(a)),
        Err(e @ AlgebraError::AdmissibilityNotCertified { .. }) => {
            Err(Outcome::fail(EXIT_NOT_ADMISSIBLE, format!("{}: {e}", common.file)))
        }
        Err(e) => Err(Outcome::fail(EXIT_USAGE, format!("{}: {e}", common.file))),
    }
}

fn options(common: &Common) -> AnalysisOptions {
    AnalysisOptions {
        cutoff: common.cutoff.max(1),
        depth: common.depth.max(1),
        trials: DEFAULT_ISO_TRIALS,
        seed: common.seed,
    }
}

/// `none`, `all`, or `i,j,k` (1-based).
pub fn parse_simples(spec: &str, n: usize) -> Result<SimpleSet, String> {
    match spec.trim() {
        "none" => Ok(SimpleSet::empty(n)),
        "all" => Ok(SimpleSet::all(n)),
        list => {
            let labels = list
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| format!("bad vertex `{}` in --simples", s.trim())))
                .collect::<Result<Vec<_>, _>>()?;
            SimpleSet::from_labels(n, &labels).map_err(|e| format!("--simples: {e}"))
        }
    }
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report documents serialize");
    s.push('\n');
    s
}

fn dispatch(cmd: Command) -> Result<String, Outcome> {
    match cmd {
        Command::Analyze(c) => {
            let alg = load(&c)?;
            let an = Analysis::new(&alg, options(&c));
            Ok(if c.json { json(&AnalyzeDoc::new(&an)) } else { render_analyze(&c.file, &an) })
        }
        Command::Bounds { common, simples } => {
            let alg = load(&common)?;
            let v = parse_simples(&simples, alg.vertex_count()).map_err(|e| Outcome::fail(EXIT_USAGE, e))?;
            let an = Analysis::new(&alg, options(&common));
            let report = full_report(&an, &v);
            Ok(if common.json { json(&ReportDocument::new(&report)) } else { render_report(&report) })
        }
        Command::Search {
            common,
            subset_limit,
            greedy,
            all,
        } => {
            let alg = load(&common)?;
            let n = alg.vertex_count();
            if n > subset_limit && !greedy {
                return Err(Outcome::fail(
                    EXIT_RESOURCE,
                    BoundsError::ResourceLimit {
                        vertices: n,
                        limit: subset_limit,
                    }
                    .to_string(),
                ));
            }
            let an = Analysis::new(&alg, options(&common));
            let (mode, mut rows) = best_v_search(&an, subset_limit, greedy)
                .map_err(|e| Outcome::fail(EXIT_RESOURCE, e.to_string()))?;
            if !all {
                rows.truncate(10);
            }
            let doc = SearchDoc {
                mode: match mode {
                    SearchMode::Exhaustive => "exhaustive",
                    SearchMode::Greedy => "greedy",
                },
                rows: rows
                    .iter()
                    .map(|r| SearchRowDoc {
                        v_set: r.v.labels(),
                        min_bound: r.min_bound,
                        layer_length: r.layer_length,
                        pd_v: PdDoc::from(r.pd_v),
                    })
                    .collect(),
            };
            Ok(if common.json { json(&doc) } else { render_search(&doc) })
        }
        Command::Resolve { common, module } => {
            let alg = load(&common)?;
            let m = parse_module(&module, &alg).map_err(|e| Outcome::fail(EXIT_USAGE, e))?;
            let opts = options(&common);
            let covers = minimal_resolution(&m, common.depth);
            let pd = proj_dimension(&m, &opts.pd());
            let doc = ResolveDoc {
                module: module.clone(),
                dims: m.dims().to_vec(),
                terms: covers
                    .iter()
                    .enumerate()
                    .map(|(i, c)| TermDoc {
                        degree: i,
                        dims: c.module.dims().to_vec(),
                        generators: c.multiplicities(alg.vertex_count()),
                    })
                    .collect(),
                pd: PdDoc::from(pd),
            };
            Ok(if common.json { json(&doc) } else { render_resolve(&doc) })
        }
        Command::SyzygyType(c) => {
            let alg = load(&c)?;
            let opts = options(&c).pd();
            let gl = crate::modules::global_dimension(&alg, &opts).0;
            let cert = syzygy_type_with(&alg, gl, c.depth.max(1), &opts);
            let doc = CertDoc::from(&cert);
            Ok(if c.json {
                json(&doc)
            } else {
                format!("syzygy type  {cert}\n")
            })
        }
    }
}

fn parse_module(token: &str, alg: &Arc<Algebra>) -> Result<Rep, String> {
    let n = alg.vertex_count();
    let bad = || format!("--module expects S<i> or P<i> with 1 <= i <= {n}, got `{token}`");
    let (kind, idx) = token.split_at(token.char_indices().nth(1).map(|(i, _)| i).unwrap_or(token.len()));
    let i: usize = idx.parse().map_err(|_| bad())?;
    if i == 0 || i > n {
        return Err(bad());
    }
    match kind {
        "S" | "s" => Ok(Rep::simple(alg, i - 1)),
        "P" | "p" => Ok(Rep::projective(alg, i - 1)),
        _ => Err(bad()),
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct PdDoc {
    pub tag: &'static str,
    pub value: Option<i64>,
}

impl From<PdResult> for PdDoc {
    fn from(r: PdResult) -> Self {
        match r {
            PdResult::Finite { value } => PdDoc {
                tag: "finite",
                value: Some(value),
            },
            PdResult::InfiniteCertified { .. } => PdDoc {
                tag: "infinite",
                value: None,
            },
            PdResult::AtLeast { .. } => PdDoc {
                tag: "at_least_cutoff",
                value: None,
            },
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CertDoc {
    pub tag: &'static str,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub depth: Option<usize>,
}

impl From<&SyzygyTypeCertificate> for CertDoc {
    fn from(c: &SyzygyTypeCertificate) -> Self {
        let none = CertDoc {
            tag: "",
            a: None,
            b: None,
            depth: None,
        };
        match c {
            SyzygyTypeCertificate::GldimFinite(_) => CertDoc {
                tag: "gldim_finite",
                ..none
            },
            SyzygyTypeCertificate::Periodic { a, b, .. } => CertDoc {
                tag: "periodic",
                a: Some(*a),
                b: Some(*b),
                ..none
            },
            SyzygyTypeCertificate::Unknown { depth } => CertDoc {
                tag: "unknown",
                depth: Some(*depth),
                ..none
            },
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub loewy_length: usize,
    pub gldim: PdDoc,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct BoundDoc {
    pub name: &'static str,
    pub applicable: &'static str,
    pub value: Option<i64>,
    pub reason: Option<String>,
}

/// Machine-readable bound report.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ReportDocument {
    pub algebra: AlgebraDoc,
    pub v_set: Vec<usize>,
    pub pd_v: PdDoc,
    pub id_v: PdDoc,
    pub layer_length: usize,
    pub syzygy_certificate: CertDoc,
    pub cosyzygy_certificate: CertDoc,
    pub cutoff: usize,
    pub bounds: Vec<BoundDoc>,
    pub min_bound: Option<i64>,
}

impl ReportDocument {
    pub fn new(r: &BoundReport) -> Self {
        ReportDocument {
            algebra: AlgebraDoc {
                dim: r.dim,
                loewy_length: r.loewy_length,
                gldim: r.gldim.into(),
            },
            v_set: r.v.labels(),
            pd_v: r.pd_v.into(),
            id_v: r.id_v.into(),
            layer_length: r.layer_length,
            syzygy_certificate: (&r.syzygy).into(),
            cosyzygy_certificate: (&r.cosyzygy).into(),
            cutoff: r.cutoff,
            bounds: r
                .entries
                .iter()
                .map(|e| BoundDoc {
                    name: e.name,
                    applicable: e.applicable.tag(),
                    value: e.value,
                    reason: e.applicable.reason().map(str::to_string),
                })
                .collect(),
            min_bound: r.min_bound,
        }
    }
}

#[derive(Serialize, Debug)]
struct SimpleDoc {
    vertex: usize,
    pd: PdDoc,
    id: PdDoc,
}

#[derive(Serialize, Debug)]
struct AnalyzeDoc {
    algebra: AlgebraDoc,
    field: u32,
    vertices: usize,
    simples: Vec<SimpleDoc>,
    syzygy_certificate: CertDoc,
}

impl AnalyzeDoc {
    fn new(an: &Analysis) -> Self {
        AnalyzeDoc {
            algebra: AlgebraDoc {
                dim: an.algebra.dim(),
                loewy_length: an.loewy_length(),
                gldim: an.gldim.into(),
            },
            field: an.algebra.modulus(),
            vertices: an.algebra.vertex_count(),
            simples: (0..an.algebra.vertex_count())
                .map(|i| SimpleDoc {
                    vertex: i + 1,
                    pd: an.pd_simple[i].into(),
                    id: an.id_simple[i].into(),
                })
                .collect(),
            syzygy_certificate: (&an.syzygy).into(),
        }
    }
}

#[derive(Serialize, Debug)]
struct SearchRowDoc {
    v_set: Vec<usize>,
    min_bound: Option<i64>,
    layer_length: usize,
    pd_v: PdDoc,
}

#[derive(Serialize, Debug)]
struct SearchDoc {
    mode: &'static str,
    rows: Vec<SearchRowDoc>,
}

#[derive(Serialize, Debug)]
struct TermDoc {
    degree: usize,
    dims: Vec<usize>,
    generators: Vec<usize>,
}

#[derive(Serialize, Debug)]
struct ResolveDoc {
    module: String,
    dims: Vec<usize>,
    terms: Vec<TermDoc>,
    pd: PdDoc,
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn dims(d: &[usize]) -> String {
    let parts: Vec<String> = d.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn render_analyze(name: &str, an: &Analysis) -> String {
    let a = &an.algebra;
    let mut s = String::new();
    let _ = writeln!(s, "algebra        {name}");
    let _ = writeln!(s, "field          GF({})", a.modulus());
    let _ = writeln!(s, "vertices       {}", a.vertex_count());
    let _ = writeln!(s, "arrows         {}", a.quiver().arrows().len());
    let _ = writeln!(s, "dimension      {}", a.dim());
    let _ = writeln!(s, "loewy length   {}", a.loewy_length());
    let _ = writeln!(s, "gldim          {}", an.gldim);
    let _ = writeln!(s, "syzygy type    {}", an.syzygy);
    let _ = writeln!(s);
    let _ = writeln!(s, "{:<8}{:<24}id S", "vertex", "pd S");
    for i in 0..a.vertex_count() {
        let _ = writeln!(s, "{:<8}{:<24}{}", i + 1, an.pd_simple[i].to_string(), an.id_simple[i]);
    }
    s
}

fn render_report(r: &BoundReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "V               {}", r.v);
    let _ = writeln!(s, "dimension       {}", r.dim);
    let _ = writeln!(s, "loewy length    {}", r.loewy_length);
    let _ = writeln!(s, "gldim           {}", r.gldim);
    let _ = writeln!(s, "pd V            {}", r.pd_v);
    let _ = writeln!(s, "id V            {}", r.id_v);
    let _ = writeln!(s, "layer length    {}", r.layer_length);
    let _ = writeln!(s, "syzygy type     {}", r.syzygy);
    let _ = writeln!(s, "cosyzygy type   {}", r.cosyzygy);
    let _ = writeln!(s);
    let _ = writeln!(s, "{:<18}{:<24}{:<12}{:<7}reason", "bound", "formula", "applicable", "value");
    for e in &r.entries {
        let _ = writeln!(
            s,
            "{:<18}{:<24}{:<12}{:<7}{}",
            e.name,
            e.formula,
            e.applicable.tag(),
            opt(e.value),
            e.applicable.reason().unwrap_or("")
        );
    }
    let _ = writeln!(s);
    let _ = writeln!(s, "min bound       {}", opt(r.min_bound));
    s
}

fn render_search(doc: &SearchDoc) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "search: {}", doc.mode);
    let _ = writeln!(s, "{:<28}{:<8}{:<8}pd V", "V", "bound", "ll");
    for r in &doc.rows {
        let labels: Vec<String> = r.v_set.iter().map(usize::to_string).collect();
        let pd = opt(r.pd_v.value);
        let _ = writeln!(
            s,
            "{:<28}{:<8}{:<8}{}",
            format!("{{{}}}", labels.join(",")),
            opt(r.min_bound),
            r.layer_length,
            if r.pd_v.value.is_some() { pd } else { r.pd_v.tag.to_string() }
        );
    }
    s
}

fn render_resolve(doc: &ResolveDoc) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "module {} {}", doc.module, dims(&doc.dims));
    for t in &doc.terms {
        let gens: Vec<String> = t
            .generators
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(v, &m)| if m == 1 { format!("P{}", v + 1) } else { format!("P{}^{m}", v + 1) })
            .collect();
        let _ = writeln!(s, "P_{:<4}{:<28}{}", t.degree, dims(&t.dims), gens.join(" + "));
    }
    let pd = match (doc.pd.tag, doc.pd.value) {
        (_, Some(v)) => v.to_string(),
        (tag, None) => tag.to_string(),
    };
    let _ = writeln!(s, "pd {pd}");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simples_flag() {
        assert_eq!(parse_simples("none", 3).unwrap(), SimpleSet::empty(3));
        assert_eq!(parse_simples("all", 3).unwrap(), SimpleSet::all(3));
        assert_eq!(parse_simples("1, 3", 3).unwrap().labels(), vec![1, 3]);
        assert!(parse_simples("4", 3).is_err());
        assert!(parse_simples("x", 3).is_err());
        assert!(parse_simples("", 3).is_err());
    }

    #[test]
    fn module_tokens() {
        let a = fixtures::load("a2");
        assert_eq!(parse_module("S1", &a).unwrap().dims(), &[1, 0]);
        assert_eq!(parse_module("P1", &a).unwrap().dims(), &[1, 1]);
        assert!(parse_module("S3", &a).is_err());
        assert!(parse_module("Q1", &a).is_err());
        assert!(parse_module("", &a).is_err());
    }

    #[test]
    fn help_exits_zero_and_bad_flags_exit_one() {
        assert_eq!(run(["derdim", "--help"]).code, 0);
        assert_eq!(run(["derdim", "analyze"]).code, 1);
        assert_eq!(run(["derdim", "analyze", "a2", "--bogus"]).code, 1);
    }
}
