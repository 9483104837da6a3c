//! Command-line orchestration: argument model, validation, dispatch and
//! rendering. Every command produces one JSON document
//! `{schema, command, claims, data}`; the text form is rendered from it.

pub mod cache;

use cache::Cache;
use clap::{Parser, Subcommand, ValueEnum};
use pentagon_core::certificate::{self, class_infos, mapping, SHAPES};
use pentagon_core::counts::{self, multipartite_c5, turan_density_c5, zykov_k5_density};
use pentagon_core::flags::checks::{chain_identity, pair_defect_decay};
use pentagon_core::graph::{enumerate_graphs, graph6, PartSizes, MAX_ENUM_ORDER};
use pentagon_core::oracle::max_c5;
use pentagon_core::report::{render_text, CertificateReport, ClaimResult, Status, Witness};
use pentagon_core::symbolic::fmt_q;
use pentagon_core::Exec;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::time::Instant;

/// Class counts on 0..=8 vertices.
const CLASS_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pentagon_core::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Graph6,
}

#[derive(Debug, Parser)]
#[command(name = "pentagon", version, about = "Exact verification of the pentagon-density certificate")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Cache directory (default: $PENTAGON_CACHE_DIR, then the user cache dir).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// All isomorphism classes on N vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    #[command(subcommand)]
    Verify(VerifyCmd),
    #[command(subcommand)]
    Count(CountCmd),
    /// Exhaustive maximum pentagon count among K_R-free graphs on N vertices.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid: usize,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    #[command(subcommand)]
    Reconstruct(ReconstructCmd),
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Clone, Debug, Subcommand)]
pub enum VerifyCmd {
    /// The certificate for k >= 4.
    Certificate {
        #[arg(long, default_value_t = 1000)]
        k_max: u64,
    },
    /// The certificate for k = 3.
    #[command(name = "certificate-k3")]
    CertificateK3,
    TightSet,
    #[command(name = "claim-3.10")]
    Claim310 {
        #[arg(long, default_value_t = 1000)]
        k_max: u64,
    },
    #[command(name = "claim-4.5")]
    Claim45 {
        #[arg(long, default_value_t = 1000)]
        k_max: u64,
    },
    #[command(name = "claim-4.7")]
    Claim47 {
        #[arg(long, default_value_t = 1000)]
        k_max: u64,
    },
    /// Flag-calculus identities on small hosts and defect decay on Turán hosts.
    ChainIdentity {
        #[arg(long, default_value_t = 3)]
        max_type: usize,
        #[arg(long, default_value_t = 4)]
        max_flag: usize,
        #[arg(long, default_value_t = 6)]
        max_host: usize,
    },
}

#[derive(Clone, Debug, Subcommand)]
pub enum CountCmd {
    Turan {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
    Multipartite {
        /// Part sizes, e.g. 2,2,2.
        #[arg(long)]
        parts: PartSizes,
    },
    Zykov {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Clone, Debug, Subcommand)]
pub enum ReconstructCmd {
    Mapping,
}

#[derive(Clone, Debug, Subcommand)]
pub enum ReportCmd {
    /// Everything, in order.
    All {
        #[arg(long, default_value_t = 1000)]
        k_max: u64,
    },
}

/// A validated run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub cache: Option<Cache>,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        validate(&cli.command)?;
        if cli.threads == Some(0) {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        let cache = if cli.no_cache {
            None
        } else {
            cli.cache_dir.or_else(Cache::default_dir).map(Cache::new)
        };
        Ok(RunConfig {
            command: cli.command,
            format: cli.format,
            cache,
            threads: cli.threads,
        })
    }
}

fn validate(c: &Command) -> Result<(), CliError> {
    let usage = |m: String| Err(CliError::Usage(m));
    let k_max = |k: u64| if k < 4 { usage(format!("--k-max must be at least 4, got {k}")) } else { Ok(()) };
    match c {
        Command::Enumerate { n } if *n > MAX_ENUM_ORDER => usage(format!("--n must be at most {MAX_ENUM_ORDER}, got {n}")),
        Command::Oracle { n, .. } if *n > MAX_ENUM_ORDER => usage(format!("--n must be at most {MAX_ENUM_ORDER}, got {n}")),
        Command::Oracle { forbid, .. } if *forbid < 2 => usage(format!("--forbid must be at least 2, got {forbid}")),
        Command::Verify(VerifyCmd::Certificate { k_max: k } | VerifyCmd::Claim310 { k_max: k })
        | Command::Verify(VerifyCmd::Claim45 { k_max: k } | VerifyCmd::Claim47 { k_max: k })
        | Command::Report(ReportCmd::All { k_max: k }) => k_max(*k),
        Command::Verify(VerifyCmd::ChainIdentity { max_type, max_flag, max_host }) => {
            if *max_type > 3 || *max_flag > 6 || *max_host > 8 || max_flag <= max_type {
                usage("chain identity needs max-type <= 3 < ... max-flag <= 6, max-host <= 8".into())
            } else {
                Ok(())
            }
        }
        Command::Count(CountCmd::Turan { k, n } | CountCmd::Zykov { k, n }) => {
            if *k == 0 || *n < 5 {
                usage(format!("need k >= 1 and n >= 5, got k = {k}, n = {n}"))
            } else {
                Ok(())
            }
        }
        _ => Ok(()),
    }
}

/// A finished command: the JSON document and its verdict.
#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub passed: bool,
}

impl Output {
    fn new(report: CertificateReport, data: Value) -> Self {
        let passed = report.passed();
        let mut json = report.to_json();
        json["data"] = data;
        Output { json, passed }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializes") + "\n",
            Format::Text => render_document(&self.json),
        }
    }
}

/// Text rendering of a command document.
pub fn render_document(json: &Value) -> String {
    let mut out = render_text(json);
    if let Some(Value::Object(data)) = json.get("data") {
        for (k, v) in data {
            match v {
                Value::Array(items) if items.iter().all(Value::is_string) => {
                    out += &format!("{k}:\n");
                    for s in items {
                        out += &format!("  {}\n", s.as_str().unwrap_or_default());
                    }
                }
                Value::String(s) => out += &format!("{k}: {s}\n"),
                other => out += &format!("{k}: {other}\n"),
            }
        }
    }
    out
}

fn pass(id: &str, summary: String, witnesses: Vec<Witness>) -> ClaimResult {
    ClaimResult::timed(id, || (Status::Pass, summary, witnesses))
}

fn cached(cfg: &RunConfig, op: &str, args: Value, f: impl FnOnce() -> Value) -> Value {
    match &cfg.cache {
        Some(c) => c.get_or_compute(op, &args, f).0,
        None => f(),
    }
}

/// Runs one command.
pub fn dispatch(cfg: &RunConfig) -> Result<Output, CliError> {
    let exec = Exec::default();
    match &cfg.command {
        Command::Enumerate { n } => {
            let n = *n;
            let graphs = cached(cfg, "enumerate", json!({ "n": n }), || {
                let g = enumerate_graphs(n).expect("validated order");
                json!(g.iter().map(|c| graph6::encode(c.graph())).collect::<Vec<_>>())
            });
            let count = graphs.as_array().map_or(0, Vec::len);
            let mut r = CertificateReport::new(format!("enumerate --n {n}"));
            r.push(ClaimResult::timed("enumerate.count", || {
                (
                    Status::from_bool(count == CLASS_COUNTS[n]),
                    format!("{count} isomorphism classes on {n} vertices"),
                    vec![Witness::new("expected", CLASS_COUNTS[n])],
                )
            }));
            Ok(Output::new(r, json!({ "n": n, "count": count, "graphs": graphs })))
        }
        Command::Verify(v) => verify(v, exec),
        Command::Count(c) => count(c),
        Command::Oracle { n, forbid, emit } => {
            let rec = max_c5(*n, *forbid, exec)?;
            let mut r = CertificateReport::new(format!("oracle --n {n} --forbid {forbid}"));
            r.push(ClaimResult::timed("oracle.turan-bound", || {
                (
                    Status::from_bool(rec.max_count >= rec.turan_count),
                    format!("max {} over {} K{forbid}-free classes (Turán graph: {})", rec.max_count, rec.classes_scanned, rec.turan_count),
                    vec![
                        Witness::new("Turán graph among maximizers", rec.is_turan_among_argmax),
                        Witness::new("unique maximizer", rec.turan_unique),
                    ],
                )
            }));
            let mut data = serde_json::to_value(&rec).expect("serializes");
            if emit.is_none() {
                data.as_object_mut().expect("record").remove("argmax");
            }
            Ok(Output::new(r, data))
        }
        Command::Reconstruct(ReconstructCmd::Mapping) => {
            let doc = cached(cfg, "reconstruct-mapping", json!({}), || reconstruct_document().expect("mapping"));
            let report: CertificateReport = serde_json::from_value(doc.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(Output::new(report, doc["data"].clone()))
        }
        Command::Report(ReportCmd::All { k_max }) => {
            let mut all = CertificateReport::new(format!("report all --k-max {k_max}"));
            let mut commands = vec![
                Command::Enumerate { n: 5 },
                Command::Reconstruct(ReconstructCmd::Mapping),
                Command::Verify(VerifyCmd::Certificate { k_max: *k_max }),
                Command::Verify(VerifyCmd::CertificateK3),
                Command::Verify(VerifyCmd::TightSet),
                Command::Verify(VerifyCmd::Claim310 { k_max: *k_max }),
                Command::Verify(VerifyCmd::Claim45 { k_max: *k_max }),
                Command::Verify(VerifyCmd::Claim47 { k_max: *k_max }),
                Command::Verify(VerifyCmd::ChainIdentity { max_type: 3, max_flag: 4, max_host: 6 }),
                Command::Count(CountCmd::Multipartite { parts: "2,2,2".parse()? }),
                Command::Count(CountCmd::Multipartite { parts: "2,2,2,2".parse()? }),
            ];
            commands.extend((3..=5).map(|k| Command::Oracle { n: 7, forbid: k + 1, emit: None }));
            let mut data = serde_json::Map::new();
            for c in commands {
                let sub = RunConfig { command: c, ..cfg.clone() };
                let out = dispatch(&sub)?;
                let report: CertificateReport =
                    serde_json::from_value(out.json.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
                data.insert(report.command.clone(), if report.passed() { "pass".into() } else { "fail".into() });
                all.extend(report);
            }
            Ok(Output::new(all, Value::Object(data)))
        }
    }
}

fn verify(v: &VerifyCmd, exec: Exec) -> Result<Output, CliError> {
    let report = match v {
        VerifyCmd::Certificate { k_max } => {
            let mut r = certificate::verify_main(*k_max, exec)?;
            r.command = format!("verify certificate --k-max {k_max}");
            r
        }
        VerifyCmd::CertificateK3 => certificate::verify_k3()?,
        VerifyCmd::TightSet => certificate::tight_set_characterization()?,
        VerifyCmd::Claim310 { k_max } => counts::claim_3_10_expansion(*k_max, exec),
        VerifyCmd::Claim45 { k_max } => counts::claim_4_5_check(*k_max, exec),
        VerifyCmd::Claim47 { k_max } => counts::claim_4_7_check(*k_max, exec),
        VerifyCmd::ChainIdentity { max_type, max_flag, max_host } => {
            let mut r = CertificateReport::new("verify chain-identity");
            let start = Instant::now();
            let chain = chain_identity(*max_type, *max_flag, *max_host, exec)?;
            let chain_ms = start.elapsed().as_millis() as u64;
            r.push(ClaimResult::timed("flags.chain-identity", || {
                (
                    Status::from_bool(chain.passed()),
                    format!(
                        "{} identities on {} hosts (types <= {max_type}, flags <= {max_flag}, hosts <= {max_host} vertices)",
                        chain.identities, chain.hosts
                    ),
                    chain.failures.iter().take(5).map(|f| Witness::new("mismatch", f)).collect(),
                )
            }));
            r.claims[0].elapsed_ms = chain_ms;
            let start = Instant::now();
            let decay = pair_defect_decay(3, &[6, 9, 12, 15], (*max_flag).min(4), exec)?;
            let decay_ms = start.elapsed().as_millis() as u64;
            r.push(ClaimResult::timed("flags.pair-decay", || {
                (
                    Status::from_bool(decay.rows.iter().all(|x| x.within_bound)),
                    "pair-density defect <= 4/n on labelled T3(n) hosts".into(),
                    decay.rows.iter().map(|x| Witness::new(format!("n = {}", x.n), format!("{} <= {}", x.max_gap, x.bound))).collect(),
                )
            }));
            r.claims[1].elapsed_ms = decay_ms;
            r
        }
    };
    Ok(Output::new(report, json!({})))
}

fn count(c: &CountCmd) -> Result<Output, CliError> {
    let (cmd, results) = match c {
        CountCmd::Multipartite { parts } => (format!("count multipartite --parts {parts}"), vec![multipartite_c5(parts)]),
        CountCmd::Turan { k, n } => {
            let p = PartSizes::turan(*k, *n)?;
            (format!("count turan --k {k} --n {n}"), vec![multipartite_c5(&p), turan_density_c5(*k, *n)?])
        }
        CountCmd::Zykov { k, n } => {
            let (d, limit) = zykov_k5_density(*k, *n)?;
            let lim = counts::CountFormulaResult {
                quantity: format!("limit of d(K5, T_{k}(n))"),
                value: limit,
                brute_force: None,
            };
            (format!("count zykov --k {k} --n {n}"), vec![d, lim])
        }
    };
    let mut r = CertificateReport::new(cmd);
    for res in &results {
        r.push(ClaimResult::timed("count.agrees", || {
            let summary = format!("{} = {}", res.quantity, fmt_q(&res.value));
            match &res.brute_force {
                Some(b) => (Status::from_bool(res.agrees()), summary, vec![Witness::new("brute force", fmt_q(b))]),
                None => (Status::Pass, summary, vec![]),
            }
        }));
    }
    let data = json!({
        "results": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        "value": fmt_q(&results[0].value),
    });
    Ok(Output::new(r, data))
}

/// The `reconstruct mapping` document (cached as a whole).
fn reconstruct_document() -> Result<Value, CliError> {
    let rec = mapping()?;
    let m = rec.primary();
    let mut r = CertificateReport::new("reconstruct mapping");
    r.push(pass(
        "mapping.pinned",
        "index 33 = K5, 31 = K_{2,2,1}, 32 = K5 minus an edge".into(),
        [31, 32, 33].iter().map(|&i| Witness::new(format!("index {i}"), graph6::encode(&m.classes[i].graph()))).collect(),
    ));
    r.push(ClaimResult::timed("mapping.squares", || {
        let strict = rec.strict_solutions();
        let mut w: Vec<Witness> = rec
            .searches
            .iter()
            .map(|s| Witness::new(format!("{} candidates", s.square), s.candidates))
            .collect();
        for (j, (nw, bad)) in &rec.nearest {
            w.push(Witness::new(format!("nearest {}", SHAPES[j - 1].name), nw.describe()));
            w.push(Witness::new(format!("{} disagrees at", SHAPES[j - 1].name), format!("{bad:?}")));
        }
        w.push(Witness::new("bijections satisfying the other constraints", rec.relaxed_solutions()));
        (
            Status::from_bool(strict >= 1),
            format!("{strict} bijections satisfy every constraint"),
            w,
        )
    }));
    let classes: Vec<Value> = (0..m.classes.len())
        .map(|i| {
            let info = m.info(i);
            json!({
                "index": i,
                "graph6": graph6::encode(&info.key.graph()),
                "c5": info.c5,
                "multipartite": info.multipartite,
                "has_k4": info.has_k4,
            })
        })
        .collect();
    let witnesses: Vec<String> = m.witnesses.iter().flatten().map(|w| w.describe()).collect();
    let mut doc = r.to_json();
    doc["data"] = json!({
        "classes": classes,
        "witnesses": witnesses,
        "strict_solutions": rec.strict_solutions().to_string(),
        "relaxed_solutions": rec.relaxed_solutions().to_string(),
        "known_classes": class_infos().len(),
    });
    Ok(doc)
}

/// Parses, validates, runs and prints; returns the process exit code.
pub fn run(args: impl IntoIterator<Item = std::ffi::OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let cfg = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Some(t) = cfg.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("warning: thread pool already configured: {e}");
        }
    }
    match dispatch(&cfg) {
        Ok(out) => {
            print!("{}", out.render(cfg.format));
            out.exit_code()
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
