//! The `gci` command line: validate city data, derive energy indicators, run queries
//! and the competency suite.

mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use gci_core::indicators::{self, builtin_definitions, derive_all, MissingPolicy};
use gci_core::ontology::{self, builtin_schema, instances_of, ClassExpression, Severity, Violation};
use gci_core::query::{self, check_expected, competency_suite, execute, parse_query};
use gci_core::store::{parse_into, parse_prefixes, serialize_turtle, Graph, GraphBuilder, Iri, PrefixMap, Term};

pub use output::{DeriveReport, SuiteEntry, ValidateReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_FINDINGS: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Name of the variable pointing at an extra prefix file.
pub const PREFIX_ENV: &str = "GCI_PREFIXES";

#[derive(Debug, Parser)]
#[command(name = "gci", version, about = "Validate city energy data and derive ISO 37120 energy indicators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check instance data against the schema and for internal consistency.
    Validate {
        #[command(flatten)]
        run: RunArgs,
        /// Also fail (exit 2) on consistency findings.
        #[arg(long)]
        strict: bool,
    },
    /// Derive indicators for a city.
    Derive {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated ids such as 7.1,7.3, or `all`.
        #[arg(long, short = 'i', default_value = "all")]
        indicators: String,
        /// Leave out members whose data is missing instead of failing.
        #[arg(long)]
        skip_missing: bool,
    },
    /// Run a query from a file or given inline.
    Query {
        #[command(flatten)]
        run: RunArgs,
        /// Query file (.gq).
        #[arg(long, short = 'q', conflicts_with = "expr", required_unless_present = "expr")]
        query_file: Option<PathBuf>,
        /// Query text.
        #[arg(long, short = 'e')]
        expr: Option<String>,
    },
    /// Run the competency question suite.
    Suite {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Schema operations.
    Schema {
        #[command(subcommand)]
        action: SchemaAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum SchemaAction {
    /// Print the built-in schema as Turtle.
    Dump,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Turtle files to load.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// City IRI or prefixed name, e.g. gn:6167865.
    #[arg(long)]
    pub city: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// Everything a command needs once arguments are parsed.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input_paths: Vec<PathBuf>,
    pub city: Option<String>,
    pub format: Format,
    pub skip_missing: bool,
    pub strict_exit: bool,
    /// Extra prefix file, normally taken from `GCI_PREFIXES`.
    pub prefix_file: Option<PathBuf>,
}

impl RunConfig {
    fn new(run: RunArgs, prefix_file: Option<PathBuf>) -> Self {
        RunConfig {
            input_paths: run.inputs,
            city: run.city,
            format: run.format,
            skip_missing: false,
            strict_exit: false,
            prefix_file,
        }
    }
}

/// A command's exit code and the text it prints on stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: stderr.into() }
    }
}

/// Parses arguments and runs the command, writing to the given streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let outcome = match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli, std::env::var_os(PREFIX_ENV).map(PathBuf::from)),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() { Outcome::fail(code, text) } else { Outcome::ok(code, text) }
        }
    };
    let written = out.write_all(outcome.stdout.as_bytes()).and_then(|_| err.write_all(outcome.stderr.as_bytes()));
    if written.is_err() {
        return EXIT_INTERNAL;
    }
    outcome.code
}

pub fn dispatch(cli: Cli, prefix_file: Option<PathBuf>) -> Outcome {
    match cli.command {
        Command::Validate { run, strict } => {
            cmd_validate(&RunConfig { strict_exit: strict, ..RunConfig::new(run, prefix_file) })
        }
        Command::Derive { run, indicators, skip_missing } => {
            cmd_derive(&RunConfig { skip_missing, ..RunConfig::new(run, prefix_file) }, &indicators)
        }
        Command::Query { run, query_file, expr } => {
            let cfg = RunConfig::new(run, prefix_file);
            let text = match (query_file, expr) {
                (Some(path), _) => match std::fs::read_to_string(&path) {
                    Ok(t) => t,
                    Err(e) => return Outcome::fail(EXIT_INPUT, format!("{}: {e}\n", path.display())),
                },
                (None, Some(text)) => text,
                (None, None) => return Outcome::fail(EXIT_USAGE, "a query is required\n"),
            };
            cmd_query(&cfg, &text)
        }
        Command::Suite { run } => cmd_suite(&RunConfig::new(run, prefix_file)),
        Command::Schema { action: SchemaAction::Dump } => {
            Outcome::ok(EXIT_OK, serialize_turtle(&ontology::schema_graph(builtin_schema())))
        }
    }
}

/// Default prefixes plus the optional prefix file.
pub fn base_prefixes(prefix_file: Option<&Path>) -> anyhow::Result<PrefixMap> {
    let mut pm = PrefixMap::default();
    if let Some(path) = prefix_file {
        let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
        let extra = parse_prefixes(&text).with_context(|| path.display().to_string())?;
        pm.extend(&extra);
    }
    Ok(pm)
}

/// Loads every input into one graph.
pub fn load(cfg: &RunConfig) -> anyhow::Result<Graph> {
    let mut builder = GraphBuilder::new(base_prefixes(cfg.prefix_file.as_deref())?);
    for path in &cfg.input_paths {
        let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
        parse_into(&text, &mut builder).with_context(|| path.display().to_string())?;
    }
    Ok(builder.freeze())
}

/// `--city` as given, or the only city in the graph.
fn resolve_city(g: &Graph, city: Option<&str>) -> Result<Iri, String> {
    match city {
        Some(text) => {
            let text = text.trim();
            let bare = text.strip_prefix('<').and_then(|t| t.strip_suffix('>'));
            match bare {
                Some(iri) => Iri::new(iri).map_err(|e| e.to_string()),
                None if text.contains("://") => Iri::new(text).map_err(|e| e.to_string()),
                None => g.prefixes().expand_curie(text).ok_or_else(|| format!("cannot resolve city {text:?}")),
            }
        }
        None => {
            let cities = cities(g);
            match cities.as_slice() {
                [one] => Ok(one.clone()),
                [] => Err("no city in the data; pass --city".into()),
                _ => Err(format!("{} cities in the data; pass --city", cities.len())),
            }
        }
    }
}

fn cities(g: &Graph) -> Vec<Iri> {
    instances_of(g, builtin_schema(), &ClassExpression::Named(indicators::city_class()))
        .into_iter()
        .filter_map(|t| t.as_iri().cloned())
        .collect()
}

pub fn cmd_validate(cfg: &RunConfig) -> Outcome {
    let g = match load(cfg) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("{e:#}\n")),
    };
    let city = match &cfg.city {
        Some(_) => match resolve_city(&g, cfg.city.as_deref()) {
            Ok(c) => Some(c),
            Err(e) => return Outcome::fail(EXIT_USAGE, format!("{e}\n")),
        },
        None => None,
    };
    let violations = validation_findings(&g, city.as_ref());
    let report = ValidateReport::new(&g, &violations);
    let cd = violations.iter().any(|v| v.severity == Severity::CD);
    let ci = violations.iter().any(|v| v.severity == Severity::CI);
    let code = if cd || (cfg.strict_exit && ci) { EXIT_FINDINGS } else { EXIT_OK };
    render(cfg.format, code, &report, || report.table(), || report.csv())
}

/// Violations found in `g`, as `validate` reports them.
pub fn validation_findings(g: &Graph, city: Option<&Iri>) -> Vec<Violation> {
    let s = builtin_schema();
    let mut out = ontology::validate_graph(g, s);
    let targets = city.map_or_else(|| cities(g), |c| vec![c.clone()]);
    for c in &targets {
        out.extend(indicators::check_internal_consistency(g, s, c));
    }
    out.sort();
    out.dedup();
    out
}

pub fn cmd_derive(cfg: &RunConfig, ids: &str) -> Outcome {
    let defs = builtin_definitions();
    let wanted: Vec<&str> = if ids.trim() == "all" {
        defs.keys().copied().collect()
    } else {
        ids.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
    };
    if wanted.is_empty() {
        return Outcome::fail(EXIT_USAGE, "no indicators given\n");
    }
    if let Some(bad) = wanted.iter().find(|id| !defs.contains_key(*id)) {
        let known: Vec<&str> = defs.keys().copied().collect();
        return Outcome::fail(EXIT_USAGE, format!("unknown indicator {bad:?} (known: {})\n", known.join(", ")));
    }
    let g = match load(cfg) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("{e:#}\n")),
    };
    let city = match resolve_city(&g, cfg.city.as_deref()) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("{e}\n")),
    };
    let chosen: Vec<_> = wanted.iter().map(|id| &defs[id]).collect();
    let policy = if cfg.skip_missing { MissingPolicy::Skip } else { MissingPolicy::Strict };
    let results = derive_all(&g, builtin_schema(), &chosen, &city, policy);
    let report = DeriveReport::new(&g, &city, &results);
    let code = if report.failures.is_empty() { EXIT_OK } else { EXIT_FINDINGS };
    render(cfg.format, code, &report, || report.table(), || report.csv())
}

pub fn cmd_query(cfg: &RunConfig, text: &str) -> Outcome {
    let g = match load(cfg) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("{e:#}\n")),
    };
    let q = match parse_query(text, g.prefixes()) {
        Ok(q) => q,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("{e}\n")),
    };
    match execute(&g, builtin_schema(), &q) {
        Ok(table) => {
            let report = table.report(g.prefixes());
            render(cfg.format, EXIT_OK, &report, || table.render(g.prefixes()), || output::table_csv(&report))
        }
        Err(e) => Outcome::fail(EXIT_FINDINGS, format!("{e}\n")),
    }
}

pub fn cmd_suite(cfg: &RunConfig) -> Outcome {
    let g = match load(cfg) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("{e:#}\n")),
    };
    let entries: Vec<SuiteEntry> = competency_suite()
        .into_iter()
        .map(|c| {
            let result = parse_query(c.text, g.prefixes())
                .map_err(|e| e.to_string())
                .and_then(|q| execute(&g, builtin_schema(), &q).map_err(|e| e.to_string()));
            let (status, detail, rows) = match (&result, &c.expected) {
                (Err(e), _) => ("error", e.clone(), Vec::new()),
                (Ok(t), Some(expected)) => match check_expected(g.prefixes(), t, expected) {
                    Ok(()) => ("pass", String::new(), t.report(g.prefixes()).rows),
                    Err(e) => ("fail", e, t.report(g.prefixes()).rows),
                },
                (Ok(t), None) => ("ran", String::new(), t.report(g.prefixes()).rows),
            };
            SuiteEntry { id: c.id, kind: c.kind, question: c.question, status, detail, rows }
        })
        .collect();
    let failed = entries.iter().any(|e| e.status == "fail" || e.status == "error");
    let code = if failed { EXIT_FINDINGS } else { EXIT_OK };
    render(cfg.format, code, &entries, || output::suite_table(&entries), || output::suite_csv(&entries))
}

fn render<T: serde::Serialize>(
    format: Format,
    code: i32,
    value: &T,
    table: impl FnOnce() -> String,
    csv: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let text = match format {
        Format::Table => Ok(table()),
        Format::Json => serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| e.to_string()),
        Format::Csv => csv(),
    };
    match text {
        Ok(t) => Outcome::ok(code, t),
        Err(e) => Outcome::fail(EXIT_INTERNAL, format!("{e}\n")),
    }
}

/// Used by `Term`-keyed reports.
pub(crate) fn show(g: &Graph, t: &Term) -> String {
    query::cell_text(g.prefixes(), t)
}
