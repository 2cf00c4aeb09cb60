//! `bracketforge` command-line front end.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use bracketforge_core::corpus::{
    bundled_all, bundled_knot, bundled_reference_jones, parse_corpus, render_corpus, CorpusEntry,
};
use bracketforge_core::families::{CableSpec, Family, PretzelSpec, RationalSpec, WhiteheadSpec};
use bracketforge_core::harness::{
    audit, compute_invariants, corpus_items, family_grid, render, AuditOptions, Budget, Invariants, Report,
    ReportFormat, ResultCache,
};
use bracketforge_core::skeleton::{dot_bundle, skeleton_report, SkeletonReport};
use bracketforge_core::Diagram;

#[derive(Debug, Parser)]
#[command(
    name = "bracketforge",
    version,
    about = "Kauffman brackets, Jones polynomials and nonalternating skeletons of knot diagrams"
)]
struct Cli {
    /// Worker threads; defaults to one per CPU.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// PD corpus file; the bundled prime knots through ten crossings by default.
    #[arg(long)]
    corpus: Option<PathBuf>,

    /// Crossing ceiling for the state-sum oracle.
    #[arg(long, default_value_t = 12)]
    limit: usize,

    /// JSON-lines invariant cache; defaults to `<corpus>.cache.jsonl` next to a corpus file.
    #[arg(long)]
    cache: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long)]
    no_cache: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-diagram invariants.
    Invariants {
        #[command(flatten)]
        input: Input,
        /// json, csv or text.
        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
    /// Skeleton, Lando graphs, bounds and certificate per diagram, as JSON.
    Skeleton {
        /// Corpus file (same as --corpus).
        file: Option<PathBuf>,
        #[command(flatten)]
        input: Input,
        /// Write `<name>.dot` files with G, L_A and L_B into this directory.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate a family member in PD corpus format.
    Generate {
        #[command(subcommand)]
        family: GenerateCmd,
        /// Record name; derived from the parameters by default.
        #[arg(long, global = true)]
        name: Option<String>,
    },
    /// Check every registered claim against a corpus and/or the family grid.
    Audit {
        #[command(flatten)]
        input: Input,
        /// Also audit the standard family grid.
        #[arg(long)]
        families: bool,
        /// Audit only the family grid.
        #[arg(long, conflicts_with = "corpus")]
        families_only: bool,
        /// Comma-separated claim ids; all claims by default.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// json, csv or text.
        #[arg(long, default_value = "json")]
        format: ReportFormat,
        /// Omit the generation time, for byte-stable output.
        #[arg(long)]
        no_timestamp: bool,
        /// Write the report here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Re-render a JSON audit report.
    Report {
        file: PathBuf,
        /// json, csv or text.
        #[arg(long, default_value = "text")]
        format: ReportFormat,
        /// Keep only these claim ids.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Omit the generation time, for byte-stable output.
        #[arg(long)]
        no_timestamp: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GenerateCmd {
    /// Pretzel knot P(c_1, ..., c_n).
    Pretzel {
        #[arg(short, long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        c: Vec<i64>,
    },
    /// Rational knot C(a_1, ..., a_n).
    Rational {
        #[arg(short, long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<i64>,
    },
    /// Whitehead double of a companion.
    Whitehead {
        /// Bundled knot name (suffix `*` for the mirror) or a corpus file.
        #[arg(long)]
        companion: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        twists: i64,
        /// Put the clasp the other way round.
        #[arg(long)]
        negative_clasp: bool,
    },
    /// n-strand cable with m clasp blocks.
    Cable {
        #[arg(long)]
        companion: String,
        #[arg(short, default_value_t = 2)]
        n: usize,
        #[arg(short, default_value_t = 1, allow_negative_numbers = true)]
        m: i64,
    },
}

fn load_corpus(path: &Option<PathBuf>) -> Result<(Vec<CorpusEntry>, String)> {
    match path {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            let entries = parse_corpus(&text).with_context(|| format!("parsing {}", p.display()))?;
            Ok((entries, p.display().to_string()))
        }
        None => Ok((bundled_all(), "bundled".to_string())),
    }
}

fn open_cache(input: &Input) -> Result<Option<ResultCache>> {
    if input.no_cache {
        return Ok(None);
    }
    let path = match (&input.cache, &input.corpus) {
        (Some(p), _) => p.clone(),
        (None, Some(c)) => {
            let mut name = c.as_os_str().to_owned();
            name.push(".cache.jsonl");
            PathBuf::from(name)
        }
        (None, None) => return Ok(None),
    };
    Ok(Some(ResultCache::open(&path).with_context(|| format!("opening cache {}", path.display()))?))
}

fn companion(spec: &str) -> Result<(String, Diagram)> {
    let (base, mirror) = match spec.strip_suffix('*') {
        Some(b) => (b, true),
        None => (spec, false),
    };
    let d = if let Some(d) = bundled_knot(base) {
        d
    } else if Path::new(base).exists() {
        let text = fs::read_to_string(base)?;
        let entries = parse_corpus(&text)?;
        match entries.into_iter().next() {
            Some(e) => e.diagram,
            None => bail!("{base} holds no diagram"),
        }
    } else {
        bail!("no bundled knot or file named {base}");
    };
    Ok((spec.to_string(), if mirror { d.mirror() } else { d }))
}

#[derive(Serialize)]
struct Named<'a, T> {
    name: &'a str,
    #[serde(flatten)]
    value: T,
}

fn invariants_cmd(input: &Input, format: ReportFormat) -> Result<ExitCode> {
    let (entries, _) = load_corpus(&input.corpus)?;
    let budget = Budget { oracle_limit: input.limit, ..Default::default() };
    let mut cache = open_cache(input)?;
    let keys: Vec<String> =
        entries.iter().map(|e| bracketforge_core::harness::cache_key(&e.diagram, &budget)).collect();
    let hits: Vec<Option<Invariants>> = keys.iter().map(|k| cache.as_ref().and_then(|c| c.get(k).cloned())).collect();
    let computed: Vec<(Invariants, bool)> = entries
        .par_iter()
        .zip(hits.into_par_iter())
        .map(|(e, hit)| match hit {
            Some(inv) => (inv, false),
            None => (compute_invariants(&e.diagram, &budget), true),
        })
        .collect();
    if let Some(c) = cache.as_mut() {
        for ((inv, fresh), key) in computed.iter().zip(&keys) {
            if *fresh {
                c.insert(key.clone(), inv.clone());
            }
        }
        c.flush()?;
    }
    let mut out = std::io::stdout().lock();
    match format {
        ReportFormat::Json => {
            let rows: Vec<Named<&Invariants>> =
                entries.iter().zip(&computed).map(|(e, (inv, _))| Named { name: &e.name, value: inv }).collect();
            serde_json::to_writer_pretty(&mut out, &rows)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["name", "crossings", "writhe", "o", "u", "alternating", "s_a", "s_b", "jones", "span"])?;
            for (e, (inv, _)) in entries.iter().zip(&computed) {
                w.write_record([
                    e.name.clone(),
                    inv.crossings.to_string(),
                    inv.writhe.map(|w| w.to_string()).unwrap_or_default(),
                    inv.o_length.to_string(),
                    inv.u_length.to_string(),
                    inv.alternating.to_string(),
                    inv.s_a.to_string(),
                    inv.s_b.to_string(),
                    inv.jones.as_ref().map(|j| j.to_string()).unwrap_or_default(),
                    inv.jones_span.map(|s| s.to_string()).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        ReportFormat::Text => {
            for (e, (inv, _)) in entries.iter().zip(&computed) {
                let jones = inv.jones.as_ref().map_or_else(|| "(over budget)".to_string(), |j| j.to_string());
                writeln!(out, "{}: c={} o={} V={}", e.name, inv.crossings, inv.o_length, jones)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn skeleton_cmd(file: &Option<PathBuf>, input: &Input, dot: &Option<PathBuf>) -> Result<ExitCode> {
    let (entries, _) = load_corpus(if file.is_some() { file } else { &input.corpus })?;
    let reports: Vec<Result<SkeletonReport, String>> =
        entries.par_iter().map(|e| skeleton_report(&e.diagram).map_err(|err| err.to_string())).collect();
    #[derive(Serialize)]
    #[serde(untagged)]
    enum Row<'a> {
        Ok(&'a SkeletonReport),
        Err { error: &'a str },
    }
    let rows: Vec<Named<Row>> = entries
        .iter()
        .zip(&reports)
        .map(|(e, r)| Named {
            name: &e.name,
            value: match r {
                Ok(rep) => Row::Ok(rep),
                Err(msg) => Row::Err { error: msg },
            },
        })
        .collect();
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &rows)?;
    writeln!(out)?;
    if let Some(dir) = dot {
        fs::create_dir_all(dir)?;
        for e in &entries {
            if let Ok(text) = dot_bundle(&e.diagram) {
                fs::write(dir.join(format!("{}.dot", e.name)), text)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn generate_cmd(cmd: &GenerateCmd, name: &Option<String>) -> Result<ExitCode> {
    let (default_name, about, family) = match cmd {
        GenerateCmd::Pretzel { c } => {
            let s = PretzelSpec::new(c.clone());
            (s.to_string(), format!("pretzel {s}"), Family::Pretzel(s))
        }
        GenerateCmd::Rational { a } => {
            let s = RationalSpec::new(a.clone());
            (s.to_string(), format!("rational {s}"), Family::Rational(s))
        }
        GenerateCmd::Whitehead { companion: c, twists, negative_clasp } => {
            let (cname, d) = companion(c)?;
            let f = Family::Whitehead(WhiteheadSpec { companion: d, twists: *twists, clasp_positive: !negative_clasp });
            (format!("W({cname},{twists})"), format!("whitehead double of {cname}, {}", f.parameters()), f)
        }
        GenerateCmd::Cable { companion: c, n, m } => {
            let (cname, d) = companion(c)?;
            let f = Family::Cable(CableSpec { companion: d, n: *n, m: *m });
            (format!("Cable({cname},{n},{m})"), format!("cable of {cname}, {}", f.parameters()), f)
        }
    };
    let d = family.generate()?;
    let label = name.clone().unwrap_or(default_name);
    let mut out = std::io::stdout().lock();
    writeln!(out, "# generated: {about}; {} crossings", d.crossing_count())?;
    write!(out, "{}", render_corpus([(label.as_str(), &d)]))?;
    Ok(ExitCode::SUCCESS)
}

fn emit(report: &Report, format: ReportFormat, output: &Option<PathBuf>) -> Result<ExitCode> {
    let text = render(report, format)?;
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(if report.has_failure() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

#[allow(clippy::too_many_arguments)]
fn audit_cmd(
    input: &Input,
    families: bool,
    families_only: bool,
    claims: &[String],
    format: ReportFormat,
    no_timestamp: bool,
    output: &Option<PathBuf>,
) -> Result<ExitCode> {
    let known: Vec<&str> = bracketforge_core::harness::claim_ids().collect();
    if let Some(bad) = claims.iter().find(|c| !known.contains(&c.as_str())) {
        bail!("unknown claim id {bad:?}");
    }
    let mut items = Vec::new();
    if !families_only {
        let (entries, source) = load_corpus(&input.corpus)?;
        items.extend(corpus_items(&entries, &source, &bundled_reference_jones()));
    }
    if families || families_only {
        items.extend(family_grid()?);
    }
    let opts =
        AuditOptions { budget: Budget { oracle_limit: input.limit, ..Default::default() }, claims: claims.to_vec() };
    let mut cache = open_cache(input)?;
    let records = audit(&items, &opts, cache.as_mut());
    if let Some(c) = cache.as_mut() {
        c.flush()?;
    }
    emit(&Report::new(records, !no_timestamp), format, output)
}

fn report_cmd(file: &Path, format: ReportFormat, claims: &[String], no_timestamp: bool) -> Result<ExitCode> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let old: Report = serde_json::from_str(&text).with_context(|| format!("parsing {}", file.display()))?;
    let mut records = old.records;
    if !claims.is_empty() {
        for r in &mut records {
            r.claims.retain(|c| claims.contains(&c.claim));
        }
    }
    let mut report = Report::new(records, false);
    report.generated_unix = if no_timestamp { None } else { old.generated_unix };
    emit(&report, format, &None)
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global().context("configuring worker threads")?;
    }
    match &cli.command {
        Command::Invariants { input, format } => invariants_cmd(input, *format),
        Command::Skeleton { file, input, dot } => skeleton_cmd(file, input, dot),
        Command::Generate { family, name } => generate_cmd(family, name),
        Command::Audit { input, families, families_only, claims, format, no_timestamp, output } => {
            audit_cmd(input, *families, *families_only, claims, *format, *no_timestamp, output)
        }
        Command::Report { file, format, claims, no_timestamp } => report_cmd(file, *format, claims, *no_timestamp),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
