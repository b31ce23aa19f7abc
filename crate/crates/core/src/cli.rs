//! Command-line front end.
//!
//! ```text
//! a11y-indicator score [--catalog PATH] [--weights PATH] [--format table|json|tsv] [--ascii]
//!                      --page REPORT... [--page REPORT...] [--manifest PATH]
//! a11y-indicator explain --frame NAME [same input flags]
//! a11y-indicator fixtures --seed N --kind KIND --count N --out DIR
//! ```
//!
//! Exit status: 0 on success, 1 on a data error, 2 on a usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use rayon::prelude::*;
use serde::Serialize;

use crate::belief::MassFunction;
use crate::engine::{score_page, trace_frame, AccessLevel, FrameDecision, PageScore};
use crate::fixture::{generate_fixture, FixtureKind};
use crate::report::{parse_report_with, AssessorReport, UnknownCriterionPolicy};
use crate::wcag::{default_weights, CriterionCatalog, Scope, WeightConfig, WeightOverrides};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "a11y-indicator",
    version,
    about = "Fuse accessibility assessor reports into per-deficiency indicators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score pages and print one row of decisions per page
    Score {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        /// Use ASCII arrows (v \ - / ^) instead of Unicode
        #[arg(long)]
        ascii: bool,
    },
    /// Print every intermediate value for one frame
    Explain {
        #[command(flatten)]
        input: InputArgs,
        /// visual, hearing, motor, cognitive or global
        #[arg(long, value_parser = parse_scope)]
        frame: Scope,
        /// Use ASCII arrows (v \ - / ^) instead of Unicode
        #[arg(long)]
        ascii: bool,
    },
    /// Write synthetic assessor reports
    Fixtures {
        /// First seed; further files use consecutive seeds
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// balanced, error-heavy or potential-heavy
        #[arg(long, value_parser = parse_kind)]
        kind: FixtureKind,
        #[arg(long, default_value_t = 1)]
        count: u64,
        /// Output directory, created if missing
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Criterion catalog (JSON); defaults to the bundled WCAG 2.0 catalog
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Weight and threshold overrides (JSON)
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Reports for one page; repeat the flag for each page
    #[arg(long = "page", value_name = "REPORT", num_args = 1.., action = clap::ArgAction::Append)]
    pages: Vec<PathBuf>,
    /// `pages` split per flag occurrence, filled from the raw matches.
    #[arg(skip)]
    page_groups: Vec<Vec<PathBuf>>,
    /// JSON array of page groups, each an array of report paths relative to the manifest
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Reject reports naming criteria missing from the catalog
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Tsv,
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse::<Scope>().map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> Result<FixtureKind, String> {
    s.parse()
}

/// Everything `score` and `explain` need, resolved from the flags.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub catalog: CriterionCatalog,
    pub weights: WeightConfig,
    pub pages: Vec<Vec<PathBuf>>,
    pub output_format: OutputFormat,
    pub ascii: bool,
    pub unknown_criteria: UnknownCriterionPolicy,
}

impl RunConfig {
    /// Bundled catalog, default weights, table output.
    pub fn new(pages: Vec<Vec<PathBuf>>) -> Self {
        Self {
            catalog: CriterionCatalog::wcag20(),
            weights: default_weights(),
            pages,
            output_format: OutputFormat::Table,
            ascii: false,
            unknown_criteria: UnknownCriterionPolicy::default(),
        }
    }

    fn from_input(
        input: InputArgs,
        output_format: OutputFormat,
        ascii: bool,
    ) -> Result<Self, String> {
        let (catalog, catalog_overrides) = match &input.catalog {
            Some(path) => CriterionCatalog::from_json(&read(path)?)
                .map_err(|e| format!("{}: {e}", path.display()))?,
            None => (CriterionCatalog::wcag20(), WeightOverrides::default()),
        };
        let mut weights = default_weights()
            .with_overrides(&catalog_overrides)
            .map_err(|e| e.to_string())?;
        if let Some(path) = &input.weights {
            let overrides = WeightOverrides::from_json(&read(path)?)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            weights = weights
                .with_overrides(&overrides)
                .map_err(|e| format!("{}: {e}", path.display()))?;
        }
        let mut pages = input.page_groups;
        if let Some(path) = &input.manifest {
            pages.extend(read_manifest(path)?);
        }
        Ok(Self {
            catalog,
            weights,
            pages,
            output_format,
            ascii,
            unknown_criteria: if input.strict {
                UnknownCriterionPolicy::Reject
            } else {
                UnknownCriterionPolicy::SkipWithWarning
            },
        })
    }

    fn glyph(&self, level: AccessLevel) -> char {
        if self.ascii {
            level.ascii_glyph()
        } else {
            level.glyph()
        }
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_manifest(path: &Path) -> Result<Vec<Vec<PathBuf>>, String> {
    let groups: Vec<Vec<PathBuf>> =
        serde_json::from_str(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    let base = path.parent().unwrap_or(Path::new(""));
    Ok(groups
        .into_iter()
        .map(|g| g.into_iter().map(|p| base.join(p)).collect())
        .collect())
}

/// Parses command-line arguments (including the program name) and runs the
/// selected subcommand, returning the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let parsed = Cli::command()
        .try_get_matches_from(args)
        .and_then(|matches| {
            let mut cli = Cli::from_arg_matches(&matches)?;
            let groups = matches
                .subcommand()
                .and_then(|(_, sub)| sub.try_get_occurrences::<PathBuf>("pages").ok().flatten())
                .map(|occ| occ.map(|g| g.cloned().collect()).collect())
                .unwrap_or_default();
            if let Command::Score { input, .. } | Command::Explain { input, .. } = &mut cli.command
            {
                input.page_groups = groups;
            }
            Ok(cli)
        });
    let cli = match parsed {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };

    match cli.command {
        Command::Score {
            input,
            format,
            ascii,
        } => match RunConfig::from_input(input, format, ascii) {
            Ok(config) if config.pages.is_empty() => no_pages(err),
            Ok(config) => cmd_score(&config, out, err),
            Err(msg) => data_error(err, &msg),
        },
        Command::Explain {
            input,
            frame,
            ascii,
        } => match RunConfig::from_input(input, OutputFormat::Table, ascii) {
            Ok(config) if config.pages.is_empty() => no_pages(err),
            Ok(config) => cmd_explain(&config, frame, out, err),
            Err(msg) => data_error(err, &msg),
        },
        Command::Fixtures {
            seed,
            kind,
            count,
            out: dir,
        } => cmd_fixtures(seed, kind, count, &dir, out, err),
    }
}

fn no_pages(err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: no input reports (use --page or --manifest)");
    EXIT_USAGE
}

fn data_error(err: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_DATA
}

struct LoadedPage {
    reports: Vec<AssessorReport>,
    warnings: Vec<String>,
}

fn load_page(config: &RunConfig, paths: &[PathBuf]) -> Result<LoadedPage, String> {
    let mut reports = Vec::with_capacity(paths.len());
    let mut warnings = Vec::new();
    for path in paths {
        let parsed = parse_report_with(&read(path)?, &config.catalog, config.unknown_criteria)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        warnings.extend(
            parsed
                .skipped
                .iter()
                .map(|id| format!("{}: skipped unknown criterion {id:?}", path.display())),
        );
        reports.push(parsed.report);
    }
    Ok(LoadedPage { reports, warnings })
}

fn describe(paths: &[PathBuf]) -> String {
    paths
        .iter()
        .map(|p| p.display().to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Scores every page group and writes the result in the configured format.
///
/// Pages are scored in parallel; output keeps input order.
pub fn cmd_score(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let results: Vec<(Vec<String>, Result<PageScore, String>)> = config
        .pages
        .par_iter()
        .map(|paths| match load_page(config, paths) {
            Ok(page) => {
                let scored = score_page(&page.reports, &config.catalog, &config.weights)
                    .map_err(|e| format!("page [{}]: {e}", describe(paths)));
                (page.warnings, scored)
            }
            Err(msg) => (Vec::new(), Err(msg)),
        })
        .collect();

    let mut status = EXIT_OK;
    let mut scored = Vec::new();
    for (warnings, result) in results {
        for w in warnings {
            let _ = writeln!(err, "warning: {w}");
        }
        match result {
            Ok(page) => scored.push(page),
            Err(msg) => {
                let _ = writeln!(err, "error: {msg}");
                status = EXIT_DATA;
            }
        }
    }

    let rendered = match config.output_format {
        OutputFormat::Table => render_table(config, &scored),
        OutputFormat::Tsv => render_tsv(&scored),
        OutputFormat::Json => render_json(config, &scored),
    };
    if out.write_all(rendered.as_bytes()).is_err() {
        return EXIT_DATA;
    }
    status
}

fn cell(config: &RunConfig, f: &FrameDecision) -> String {
    format!("{:.3} {}", f.decision, config.glyph(f.level))
}

pub fn render_table(config: &RunConfig, pages: &[PageScore]) -> String {
    let url_width = pages
        .iter()
        .map(|p| p.url.chars().count())
        .max()
        .unwrap_or(0)
        .max(3);
    let mut text = String::new();
    let mut line = format!("{:<url_width$}", "URL");
    for scope in Scope::ALL {
        let _ = write!(line, "  {:<9}", scope.title());
    }
    text.push_str(line.trim_end());
    text.push('\n');
    for page in pages {
        let mut line = format!("{:<url_width$}", page.url);
        for f in &page.frames {
            let _ = write!(line, "  {:<9}", cell(config, f));
        }
        text.push_str(line.trim_end());
        text.push('\n');
    }
    text
}

pub fn render_tsv(pages: &[PageScore]) -> String {
    let mut text = String::from("url");
    for scope in Scope::ALL {
        let _ = write!(text, "\t{0}\t{0}_level", scope.key());
    }
    text.push('\n');
    for page in pages {
        text.push_str(&page.url);
        for f in &page.frames {
            let _ = write!(text, "\t{:.3}\t{}", f.decision, f.level.key());
        }
        text.push('\n');
    }
    text
}

#[derive(Serialize)]
struct PageJson<'a> {
    url: &'a str,
    frames: IndexMap<&'static str, FrameJson<'a>>,
}

#[derive(Serialize)]
struct FrameJson<'a> {
    decision: f64,
    level: &'static str,
    glyph: String,
    mass: &'a MassFunction,
    per_source: &'a IndexMap<String, MassFunction>,
}

/// One JSON document per page, one page per line.
pub fn render_json(config: &RunConfig, pages: &[PageScore]) -> String {
    let mut text = String::new();
    for page in pages {
        let doc = PageJson {
            url: &page.url,
            frames: page
                .frames
                .iter()
                .map(|f| {
                    (
                        f.scope.key(),
                        FrameJson {
                            decision: f.decision,
                            level: f.level.key(),
                            glyph: config.glyph(f.level).to_string(),
                            mass: &f.fused,
                            per_source: &f.per_source,
                        },
                    )
                })
                .collect(),
        };
        text.push_str(&serde_json::to_string(&doc).expect("page serializes"));
        text.push('\n');
    }
    text
}

fn fmt_mass(m: &MassFunction, with_conflict: bool) -> String {
    let mut s = format!(
        "m(Ac)={:.6}  m(NotAc)={:.6}  m(Omega)={:.6}",
        m.ac(),
        m.nac(),
        m.omega()
    );
    if with_conflict {
        let _ = write!(s, "  m(empty)={:.6}", m.empty());
    }
    s
}

/// Writes the full computation trace of `scope` for every page.
pub fn cmd_explain(
    config: &RunConfig,
    scope: Scope,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut status = EXIT_OK;
    let mut text = String::new();
    for paths in &config.pages {
        let page = match load_page(config, paths) {
            Ok(page) => page,
            Err(msg) => {
                let _ = writeln!(err, "error: {msg}");
                status = EXIT_DATA;
                continue;
            }
        };
        for w in &page.warnings {
            let _ = writeln!(err, "warning: {w}");
        }
        let trace = match trace_frame(&page.reports, scope, &config.catalog, &config.weights) {
            Ok(trace) => trace,
            Err(e) => {
                let _ = writeln!(err, "error: page [{}]: {e}", describe(paths));
                status = EXIT_DATA;
                continue;
            }
        };

        let _ = writeln!(text, "page {}", page.reports[0].url());
        let _ = writeln!(text, "frame {}", scope.title());
        for (source, report) in trace.sources.iter().zip(&page.reports) {
            let t = &source.terms;
            let e = &source.estimate;
            let _ = writeln!(
                text,
                "source {} (total tests {}, delta {:.3})",
                source.name,
                report.total_tests(),
                source.delta
            );
            let _ = writeln!(
                text,
                "  E(Ac)    = {:.6} / {:.0} = {:.6}",
                t.ac_num, t.ac_den, e.e_ac
            );
            let _ = writeln!(
                text,
                "  E(NotAc) = {:.6} / {:.0} = {:.6}",
                t.nac_num, t.nac_den, e.e_nac
            );
            let _ = writeln!(
                text,
                "  E(Omega) = {:.6} / {:.0} = {:.6}",
                t.omega_num, t.omega_den, e.e_omega
            );
            let _ = writeln!(text, "  mass       {}", fmt_mass(&source.mass, false));
            let _ = writeln!(text, "  discounted {}", fmt_mass(&source.discounted, false));
        }
        let _ = writeln!(text, "fused {}", fmt_mass(&trace.fused, true));
        match trace.decision() {
            Ok(d) => match crate::engine::discretize(d, &config.weights) {
                Ok(level) => {
                    let _ = writeln!(
                        text,
                        "decision D={d:.6} level {} {}",
                        level.label(),
                        config.glyph(level)
                    );
                }
                Err(e) => {
                    let _ = writeln!(text, "decision unavailable: {e}");
                    status = EXIT_DATA;
                }
            },
            Err(e) => {
                let _ = writeln!(text, "decision unavailable: {e}");
                let _ = writeln!(err, "error: page [{}]: {e}", describe(paths));
                status = EXIT_DATA;
            }
        }
    }
    if out.write_all(text.as_bytes()).is_err() {
        return EXIT_DATA;
    }
    status
}

/// Writes `count` fixtures named `<kind>-<seed>.json` for consecutive seeds.
pub fn cmd_fixtures(
    seed: u64,
    kind: FixtureKind,
    count: u64,
    out_dir: &Path,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    if let Err(e) = fs::create_dir_all(out_dir) {
        return data_error(err, &format!("{}: {e}", out_dir.display()));
    }
    for s in seed..seed.saturating_add(count) {
        let path = out_dir.join(format!("{kind}-{s:04}.json"));
        if let Err(e) = fs::write(&path, generate_fixture(s, kind)) {
            return data_error(err, &format!("{}: {e}", path.display()));
        }
        let _ = writeln!(out, "{}", path.display());
    }
    EXIT_OK
}
