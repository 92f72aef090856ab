//! The `colorlie` command line: argument parsing, commands and report output.
//!
//! [`run`] executes one invocation in-process and returns what would be
//! written to stdout and stderr together with the exit code.

pub mod format;
pub mod report;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use colorlie::color::ColorAlgebra;
use colorlie::gradings::{induce_grading, is_coarsening, standard_grading, validate_grading, Grading};
use colorlie::lie::{self, catalog, DiamondClass, LieAlgebra, DEFAULT_SEED};
use colorlie::pairings::{scheunert_sigma, Cocycle};
use colorlie::pbw::check_scheunert_iso;
use colorlie::{corpus, GroupHom, GroupSpec};
use rayon::prelude::*;
use serde_json::{json, Value};

use format::{emit_algebra_file, parse_algebra_file, parse_cocycle, AlgebraFile, FormatError};
use report::{Report, Verdict};

#[derive(Debug, Parser)]
#[command(name = "colorlie", version, about = "Exact computations with Lie color algebras")]
pub struct Cli {
    /// Emit one JSON report per line instead of the human format.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for the randomized index cross-check.
    #[arg(long, global = true, env = "COLORLIE_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Process several input files in parallel; output order is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,

    /// Include wall-clock timings in reports.
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the color axioms (and the grading section, if present).
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Twist by a cocycle: `trivial`, `scheunert` or a pairing file.
    Twist {
        file: PathBuf,
        #[arg(long)]
        sigma: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Twist into a Lie superalgebra.
    Superize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Index of an ordinary Lie algebra.
    Index {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Dimensions of the descending central series.
    Lcs {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Split off the central abelian direct factor.
    Strip {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Decide the diamond property of the enveloping algebra.
    Diamond {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Check the enveloping-algebra twist isomorphism up to a degree bound.
    PbwCheck {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value = "scheunert")]
        sigma: String,
    },
    #[command(subcommand)]
    Grading(GradingCommand),
    /// Print a catalog or corpus algebra as a file.
    Catalog {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GradingCommand {
    /// Check the grading section of each file.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Push the grading forward along a homomorphism.
    Induce {
        file: PathBuf,
        /// Images of the generators, one row per generator: `"1,0;0,1"`.
        #[arg(long)]
        hom: String,
        /// Target group as `free=<r> torsion=<...>`; defaults to a free group.
        #[arg(long)]
        target: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Whether the first file's grading is a coarsening of the second's.
    Coarsen { coarse: PathBuf, fine: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{}:{}: {}", .source.line, .source.column, .source.message)]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Core(#[from] colorlie::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

/// A finished command: its report and, for commands that produce an algebra
/// file, the emitted text.
struct Done {
    report: Report,
    payload: Option<String>,
}

impl Done {
    fn report(report: Report) -> Self {
        Self { report, payload: None }
    }
}

struct Ctx {
    seed: u64,
    parallel: bool,
    timings: bool,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let ctx = Ctx { seed: cli.seed, parallel: cli.parallel, timings: cli.timings };
    let (name, results) = dispatch(&cli.command, &ctx);
    let mut out = Outcome { code: 0, stdout: String::new(), stderr: String::new() };
    for (file, result) in results {
        let done = match result {
            Ok(d) => d,
            Err(e) => {
                let msg = e.to_string();
                out.stderr.push_str(&format!("error: {msg}\n"));
                Done::report(Report::error(name, file.as_deref(), &msg))
            }
        };
        out.code = out.code.max(done.report.verdict.exit_code());
        if cli.json {
            let line = serde_json::to_string(&done.report.to_json()).expect("reports serialize");
            out.stdout.push_str(&line);
            out.stdout.push('\n');
        } else if done.report.verdict == Verdict::Error {
            continue;
        } else if let Some(text) = done.payload {
            out.stdout.push_str(&text);
        } else {
            if !out.stdout.is_empty() {
                out.stdout.push('\n');
            }
            out.stdout.push_str(&done.report.render_human());
        }
    }
    out
}

type Item = (Option<String>, CliResult<Done>);

fn per_file<F>(ctx: &Ctx, files: &[PathBuf], f: F) -> Vec<Item>
where
    F: Fn(&Path) -> CliResult<Done> + Sync,
{
    let one = |p: &PathBuf| {
        let start = Instant::now();
        let result = f(p).map(|mut d| {
            if ctx.timings {
                d.report.timings.get_or_insert_with(Default::default).insert("total_ms".into(), ms(start));
            }
            d
        });
        (Some(p.display().to_string()), result)
    };
    if ctx.parallel {
        files.par_iter().map(one).collect()
    } else {
        files.iter().map(one).collect()
    }
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn dispatch(cmd: &Command, ctx: &Ctx) -> (&'static str, Vec<Item>) {
    match cmd {
        Command::Verify { files } => ("verify", per_file(ctx, files, cmd_verify)),
        Command::Twist { file, sigma, output } => (
            "twist",
            per_file(ctx, std::slice::from_ref(file), |p| cmd_twist(p, sigma, output.as_deref())),
        ),
        Command::Superize { file, output } => (
            "superize",
            per_file(ctx, std::slice::from_ref(file), |p| cmd_superize(p, output.as_deref())),
        ),
        Command::Index { files } => ("index", per_file(ctx, files, |p| cmd_index(p, ctx.seed))),
        Command::Lcs { files } => ("lcs", per_file(ctx, files, cmd_lcs)),
        Command::Strip { files } => ("strip", per_file(ctx, files, cmd_strip)),
        Command::Diamond { files } => ("diamond", per_file(ctx, files, |p| cmd_diamond(p, ctx.seed))),
        Command::PbwCheck { files, max_degree, sigma } => (
            "pbw-check",
            per_file(ctx, files, |p| cmd_pbw_check(p, *max_degree, sigma, ctx)),
        ),
        Command::Grading(GradingCommand::Verify { files }) => {
            ("grading verify", per_file(ctx, files, cmd_grading_verify))
        }
        Command::Grading(GradingCommand::Induce { file, hom, target, output }) => (
            "grading induce",
            per_file(ctx, std::slice::from_ref(file), |p| {
                cmd_grading_induce(p, hom, target.as_deref(), output.as_deref())
            }),
        ),
        Command::Grading(GradingCommand::Coarsen { coarse, fine }) => (
            "grading coarsen",
            per_file(ctx, std::slice::from_ref(coarse), |p| cmd_grading_coarsen(p, fine)),
        ),
        Command::Catalog { name, output } => {
            let start = Instant::now();
            let result = cmd_catalog(name, output.as_deref()).map(|mut d| {
                if ctx.timings {
                    d.report.timings = Some([("total_ms".to_string(), ms(start))].into());
                }
                d
            });
            ("catalog", vec![(None, result)])
        }
    }
}

// ---------------------------------------------------------------------------
// helpers

fn load(path: &Path) -> CliResult<AlgebraFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_algebra_file(&text).map_err(|source| CliError::Format { path: path.display().to_string(), source })
}

fn write_output(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn file_name(p: &Path) -> String {
    p.display().to_string()
}

/// The algebra as an ordinary Lie algebra; requires a trivial commutation factor on its degrees.
fn ordinary(l: &ColorAlgebra) -> CliResult<LieAlgebra> {
    let n = l.dim();
    if let Some((i, j)) = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| !l.eps(i, j).is_one()) {
        return Err(CliError::Usage(format!(
            "command needs an ordinary Lie algebra, but eps(|e{}|, |e{}|) = {}",
            i + 1,
            j + 1,
            l.eps(i, j)
        )));
    }
    Ok(LieAlgebra::new(l.table().clone())?)
}

fn resolve_sigma(spec: &str, l: &ColorAlgebra) -> CliResult<Cocycle> {
    match spec {
        "trivial" => Ok(Cocycle::trivial(l.group().clone(), Arc::clone(l.field()))),
        "scheunert" => Ok(scheunert_sigma(l.epsilon())?),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|source| CliError::Io { path: path.to_string(), source })?;
            parse_cocycle(&text, l.group(), l.field())
                .map_err(|source| CliError::Format { path: path.to_string(), source })
        }
    }
}

fn emit(algebra: ColorAlgebra, grading: Option<Grading>) -> String {
    emit_algebra_file(&AlgebraFile { algebra, grading })
}

/// Writes to `output` when given; otherwise the text becomes the command's primary output.
fn finish_with_text(mut report: Report, text: String, output: Option<&Path>) -> CliResult<Done> {
    if let Value::Object(map) = &mut report.evidence {
        map.insert("algebra".into(), Value::String(text.clone()));
    }
    match output {
        Some(p) => {
            write_output(p, &text)?;
            if let Value::Object(map) = &mut report.evidence {
                map.insert("written_to".into(), Value::String(file_name(p)));
            }
            Ok(Done::report(report))
        }
        None => Ok(Done { report, payload: Some(text) }),
    }
}

// ---------------------------------------------------------------------------
// commands

fn cmd_verify(path: &Path) -> CliResult<Done> {
    let af = load(path)?;
    let l = &af.algebra;
    let rep = l.validate()?;
    let mut witness = rep.violations.first().map(|v| json!(v.witness())).unwrap_or(Value::Null);
    let mut evidence = json!({
        "dim": l.dim(),
        "group": l.group().to_string(),
        "violation_count": rep.violations.len(),
        "violations": rep.violations.iter().take(20).map(|v| v.to_string()).collect::<Vec<_>>(),
    });
    let mut ok = rep.is_ok();
    if let Some(g) = &af.grading {
        let gr = validate_grading(g)?;
        if witness.is_null() {
            witness = gr.violations.first().map(|v| json!(v.witness())).unwrap_or(Value::Null);
        }
        evidence["grading"] = json!({
            "group": g.group().to_string(),
            "valid": gr.is_ok(),
            "violations": gr.violations.iter().take(20).map(|v| v.to_string()).collect::<Vec<_>>(),
        });
        ok &= gr.is_ok();
    }
    let mut r = Report::new("verify", Some(&file_name(path)), Verdict::from_bool(ok, Verdict::Valid, Verdict::Invalid));
    r.witness = witness;
    r.evidence = evidence;
    Ok(Done::report(r))
}

fn cmd_twist(path: &Path, sigma: &str, output: Option<&Path>) -> CliResult<Done> {
    let af = load(path)?;
    let l = &af.algebra;
    let s = resolve_sigma(sigma, l)?;
    let twisted = l.twist(&s)?;
    let valid = twisted.validate()?.is_ok();
    // a grading section only survives when the structure constants are unchanged
    let keep = twisted.table() == l.table();
    let mut r = Report::new("twist", Some(&file_name(path)), Verdict::from_bool(valid, Verdict::Valid, Verdict::Invalid));
    r.witness = report::pairing_table(s.as_bicharacter());
    r.evidence = json!({
        "sigma": report::pairing_table(s.as_bicharacter()),
        "epsilon_before": report::pairing_table(l.epsilon().as_bicharacter()),
        "epsilon_after": report::pairing_table(twisted.epsilon().as_bicharacter()),
        "grading_kept": af.grading.is_none() || keep,
    });
    let grading = if keep { af.grading } else { None };
    finish_with_text(r, emit(twisted, grading), output)
}

fn cmd_superize(path: &Path, output: Option<&Path>) -> CliResult<Done> {
    let af = load(path)?;
    let l = &af.algebra;
    let sup = l.superize()?;
    let parts = sup.algebra.parity_parts()?;
    let mut r = Report::new("superize", Some(&file_name(path)), Verdict::Info);
    r.witness = report::pairing_table(sup.sigma.as_bicharacter());
    r.evidence = json!({
        "sigma": report::pairing_table(sup.sigma.as_bicharacter()),
        "epsilon_before": report::pairing_table(l.epsilon().as_bicharacter()),
        "epsilon_after": report::pairing_table(sup.algebra.epsilon().as_bicharacter()),
        "is_super": sup.algebra.epsilon().is_super(),
        "even": parts.even.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "odd": parts.odd.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "series_before": report::series(&l.descending_central_series()),
        "series_after": report::series(&sup.algebra.descending_central_series()),
    });
    finish_with_text(r, emit(sup.algebra, None), output)
}

fn cmd_index(path: &Path, seed: u64) -> CliResult<Done> {
    let af = load(path)?;
    let g = ordinary(&af.algebra)?;
    let idx = lie::lie_index(&g, seed)?;
    let mut r = Report::new("index", Some(&file_name(path)), Verdict::Info);
    r.agreement = Some(idx.trial_ranks.iter().all(|&t| t == idx.generic_rank));
    r.evidence = report::index(&idx);
    Ok(Done::report(r))
}

fn cmd_lcs(path: &Path) -> CliResult<Done> {
    let af = load(path)?;
    let s = af.algebra.descending_central_series();
    let mut r = Report::new("lcs", Some(&file_name(path)), Verdict::Info);
    r.evidence = json!({ "dims": s.dims, "nilpotent": s.is_nilpotent() });
    Ok(Done::report(r))
}

fn cmd_strip(path: &Path) -> CliResult<Done> {
    let af = load(path)?;
    let g = ordinary(&af.algebra)?;
    let st = lie::strip_central_abelian_factor(&g)?;
    let mut r = Report::new("strip", Some(&file_name(path)), Verdict::Info);
    r.witness = report::vectors(&st.factor);
    r.evidence = json!({
        "factor_dim": st.factor.len(),
        "factor": report::vectors(&st.factor),
        "complement": report::vectors(&st.complement),
        "reduced_dim": st.reduced.dim(),
        "reduced": emit(st.reduced.as_color(), None),
    });
    Ok(Done::report(r))
}

fn cmd_diamond(path: &Path, seed: u64) -> CliResult<Done> {
    let af = load(path)?;
    let l = &af.algebra;
    if let Some(v) = l.validate()?.violations.first() {
        return Err(CliError::Usage(format!("{}: not a Lie color algebra: {v}", file_name(path))));
    }
    let series = l.descending_central_series();
    if !series.is_nilpotent() {
        return Err(CliError::Usage(format!(
            "{}: Theorem requires nilpotent L (central series dims {:?})",
            file_name(path),
            series.dims
        )));
    }
    let sup = l.superize()?;
    let parts = sup.algebra.parity_parts()?;
    let even = LieAlgebra::from_color_even(&sup.algebra)?;
    let v = lie::diamond_check(&even, seed)?;
    let ev = &v.evidence;
    let mut r = Report::new(
        "diamond",
        Some(&file_name(path)),
        Verdict::from_bool(v.holds, Verdict::Holds, Verdict::DoesNotHold),
    );
    r.classification = Some(v.classification.name().to_string());
    r.agreement = Some(ev.structural == ev.index.almost_maximal);
    r.witness = match &v.classification {
        DiamondClass::CodimOneAbelianIdeal(basis) => report::vectors(basis),
        _ => Value::Null,
    };
    r.evidence = json!({
        "sigma": report::pairing_table(sup.sigma.as_bicharacter()),
        "super_epsilon": report::pairing_table(sup.algebra.epsilon().as_bicharacter()),
        "series": series.dims,
        "even_basis": parts.even.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "even_dim": even.dim(),
        "even_series": even.central_series().dims,
        "factor_dim": ev.factor_dim,
        "stripped_dim": v.stripped_dim,
        "stripped_series": ev.series_dims,
        "structural_route": ev.structural,
        "index_route": report::index(&ev.index),
    });
    Ok(Done::report(r))
}

fn cmd_pbw_check(path: &Path, d: usize, sigma: &str, ctx: &Ctx) -> CliResult<Done> {
    let af = load(path)?;
    let l = &af.algebra;
    let s = resolve_sigma(sigma, l)?;
    let start = Instant::now();
    let rep = check_scheunert_iso(l, &s, d, ctx.parallel)?;
    let runtime = ms(start);
    let mut r = Report::new(
        "pbw-check",
        Some(&file_name(path)),
        Verdict::from_bool(rep.passed(), Verdict::Passed, Verdict::Failed),
    );
    r.witness = match &rep.mismatch {
        Some((u, v)) => json!([u.to_string(), v.to_string()]),
        None => Value::Null,
    };
    r.evidence = json!({
        "degree_bound": rep.degree_bound,
        "pairs_checked": rep.pairs_checked,
        "sigma": report::pairing_table(s.as_bicharacter()),
    });
    if ctx.timings {
        r.timings = Some([("iso_check_ms".to_string(), runtime)].into());
    }
    Ok(Done::report(r))
}

fn require_grading(af: AlgebraFile, path: &Path) -> CliResult<(ColorAlgebra, Grading)> {
    match af.grading {
        Some(g) => Ok((af.algebra, g)),
        None => Err(CliError::Usage(format!("{}: no grading section", file_name(path)))),
    }
}

fn cmd_grading_verify(path: &Path) -> CliResult<Done> {
    let (_, g) = require_grading(load(path)?, path)?;
    let rep = validate_grading(&g)?;
    let mut r = Report::new(
        "grading verify",
        Some(&file_name(path)),
        Verdict::from_bool(rep.is_ok(), Verdict::Valid, Verdict::Invalid),
    );
    r.witness = rep.violations.first().map(|v| json!(v.witness())).unwrap_or(Value::Null);
    r.evidence = json!({
        "group": g.group().to_string(),
        "degrees": g.degrees().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "violation_count": rep.violations.len(),
        "violations": rep.violations.iter().take(20).map(|v| v.to_string()).collect::<Vec<_>>(),
    });
    Ok(Done::report(r))
}

/// Rows separated by `;`, entries by `,`.
pub fn parse_hom_rows(text: &str) -> Result<Vec<Vec<i64>>, String> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|c| c.trim().parse::<i64>().map_err(|_| format!("bad homomorphism entry `{}`", c.trim())))
                .collect()
        })
        .collect()
}

fn cmd_grading_induce(path: &Path, hom: &str, target: Option<&str>, output: Option<&Path>) -> CliResult<Done> {
    let (l, g) = require_grading(load(path)?, path)?;
    let rows = parse_hom_rows(hom).map_err(CliError::Usage)?;
    let target = match target {
        Some(t) => t.parse::<GroupSpec>()?,
        None => GroupSpec::free(rows.first().map_or(0, Vec::len)),
    };
    let alpha = GroupHom::from_rows(g.group().clone(), target, rows.clone())?;
    let induced = induce_grading(&g, &alpha)?;
    let coarser = is_coarsening(&induced, &g)?;
    let valid = validate_grading(&induced)?.is_ok();
    let mut r = Report::new(
        "grading induce",
        Some(&file_name(path)),
        Verdict::from_bool(coarser && valid, Verdict::Passed, Verdict::Failed),
    );
    r.evidence = json!({
        "hom": rows,
        "target": induced.group().to_string(),
        "degrees": induced.degrees().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "coarsening": coarser,
        "valid": valid,
    });
    if let Some(p) = output {
        write_output(p, &emit(l, Some(induced)))?;
        r.evidence["written_to"] = Value::String(file_name(p));
    }
    Ok(Done::report(r))
}

fn cmd_grading_coarsen(coarse: &Path, fine: &Path) -> CliResult<Done> {
    let (_, a) = require_grading(load(coarse)?, coarse)?;
    let (_, b) = require_grading(load(fine)?, fine)?;
    let holds = is_coarsening(&a, &b)?;
    let mut r = Report::new(
        "grading coarsen",
        Some(&file_name(coarse)),
        Verdict::from_bool(holds, Verdict::Holds, Verdict::DoesNotHold),
    );
    r.evidence = json!({
        "fine": file_name(fine),
        "coarse_classes": a.classes().len(),
        "fine_classes": b.classes().len(),
    });
    Ok(Done::report(r))
}

fn cmd_catalog(name: &str, output: Option<&Path>) -> CliResult<Done> {
    let corpus_entry = corpus::valid_color_algebras()
        .into_iter()
        .chain(corpus::color_mutants().into_iter().map(|(n, l, _)| (n, l)))
        .find(|(n, _)| *n == name)
        .map(|(_, l)| l);
    let (algebra, grading) = match corpus_entry {
        Some(l) => (l, None),
        None => {
            let g = catalog::by_name(name)?;
            (g.as_color(), standard_grading(name).ok())
        }
    };
    let mut r = Report::new("catalog", None, Verdict::Info);
    r.classification = Some(name.to_string());
    r.evidence = json!({ "dim": algebra.dim(), "group": algebra.group().to_string() });
    finish_with_text(r, emit(algebra, grading), output)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_rows() {
        assert_eq!(parse_hom_rows("1,0; 0,1").unwrap(), vec![vec![1, 0], vec![0, 1]]);
        assert!(parse_hom_rows("1,x").is_err());
    }

    #[test]
    fn catalog_round_trips() {
        for name in ["L5", "l6", "filiform(5)", "color_heisenberg", "n4"] {
            let out = run(["colorlie", "catalog", name]);
            assert_eq!(out.code, 0, "{name}: {}", out.stderr);
            let f = parse_algebra_file(&out.stdout).unwrap();
            assert_eq!(emit_algebra_file(&f), out.stdout);
        }
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        let out = run(["colorlie", "frobnicate"]);
        assert_eq!(out.code, 2);
        assert!(!out.stderr.is_empty());
    }
}
