//! The `qgr` command line. [`run`] does everything except touching the
//! process: it takes the arguments and the `QGR_PATH_CAP` value and returns
//! the exit code with both output streams.
//!
//! Exit codes: 0 success, 1 I/O, 2 parse or usage error, 3 resource limit,
//! 4 sink/source present, 5 wrong deletion vertex, 6 window or tail
//! problem, 7 other invalid input, 8 a failed Leavitt verification.

use std::fmt::Write as _;
use std::path::{Path as FsPath, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{QgrError, Result};
use crate::graded::GradedRepresentation;
use crate::leavitt::{strongly_graded_certificate, ArrowSection, LeavittAlgebra};
use crate::linalg::json_int;
use crate::quiver::{
    core, parse_quiver, path_counts, torsion_classification, veronese, Quiver, DEFAULT_PATH_CAP,
};
use crate::series::{char_poly, hilbert_series};
use crate::tower::{bratteli, morita_equivalent_stationary, K0Class, K0Group, MoritaVerdict, Positivity};

/// Largest `--levels` accepted by `bratteli`.
pub const MAX_LEVELS: u32 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "qgr", version, about = "Invariants of finite quivers")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Comma-separated vertex names fixing the vertex order.
    #[arg(long, global = true, value_delimiter = ',')]
    vertex_order: Option<Vec<String>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Counts, sinks, sources, acyclicity and the torsion split.
    Info { quiver: PathBuf },
    /// Stationary Bratteli diagram of S(Q).
    Bratteli {
        quiver: PathBuf,
        #[arg(long)]
        levels: u32,
    },
    /// Iterated sink and source deletion.
    Core { quiver: PathBuf },
    /// Veronese quiver: arrows are the paths of length m.
    Veronese {
        quiver: PathBuf,
        #[arg(short = 'm')]
        m: u32,
    },
    /// Hilbert series of the path algebra.
    Hilbert {
        quiver: PathBuf,
        /// Also print the coefficients of degrees 0..=N.
        #[arg(long)]
        expand: Option<usize>,
    },
    /// Equality or positivity in K₀; classes are written `v1,v2,...@level`.
    K0 {
        quiver: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], conflicts_with = "positive", allow_hyphen_values = true)]
        equal: Option<Vec<String>>,
        #[arg(long, requires = "max_iter", allow_hyphen_values = true)]
        positive: Option<String>,
        #[arg(long)]
        max_iter: Option<u32>,
    },
    /// Check the anti-isomorphism between degree 0 of L(Q) and S(Q), levels 0..=N.
    LeavittVerify {
        quiver: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Sufficient Morita check for two stationary diagrams.
    Morita { a: PathBuf, b: PathBuf },
    /// Tail decomposition and K₀ class of a graded representation.
    ModuleClass {
        quiver: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        level: i64,
    },
}

/// Resolved settings for one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub format: Format,
    pub path_cap: usize,
    pub max_levels: u32,
    pub vertex_order: Option<Vec<String>>,
}

/// What a run produced.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, S>(args: I, path_cap_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stderr: text, ..Outcome::default() }
            } else {
                Outcome { code: 0, stdout: text, ..Outcome::default() }
            };
        }
    };
    let result = config(&cli, path_cap_env).and_then(|cfg| dispatch(&cli.command, &cfg));
    match result {
        Ok((stdout, code, stderr)) => Outcome { code, stdout, stderr },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("qgr: {e}\n"),
        },
    }
}

fn config(cli: &Cli, path_cap_env: Option<&str>) -> Result<Config> {
    let path_cap = match path_cap_env {
        None => DEFAULT_PATH_CAP,
        Some(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => return Err(QgrError::parse("QGR_PATH_CAP", format!("expected a positive integer, got {s:?}"))),
        },
    };
    Ok(Config {
        format: cli.format,
        path_cap,
        max_levels: MAX_LEVELS,
        vertex_order: cli.vertex_order.clone(),
    })
}

fn load(path: &FsPath, cfg: &Config) -> Result<Quiver> {
    let text = std::fs::read_to_string(path)?;
    let q = parse_quiver(&text).map_err(|e| match e {
        QgrError::Parse { location, message } => QgrError::Parse {
            location: format!("{}: {location}", path.display()),
            message,
        },
        other => other,
    })?;
    match &cfg.vertex_order {
        Some(order) => q.with_vertex_order(order),
        None => Ok(q),
    }
}

fn render(cfg: &Config, text: String, json: Value, dot: Option<String>) -> Result<String> {
    match cfg.format {
        Format::Text => Ok(text),
        Format::Json => Ok(serde_json::to_string_pretty(&json).expect("json") + "\n"),
        Format::Dot => dot.ok_or_else(|| {
            QgrError::parse("--format", "dot output exists for info, bratteli, core and veronese")
        }),
    }
}

fn names(q: &Quiver, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| q.vertex_name(v).to_string()).collect()
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "(none)".into()
    } else {
        items.join(" ")
    }
}

fn dispatch(cmd: &Command, cfg: &Config) -> Result<(String, i32, String)> {
    let out = match cmd {
        Command::Info { quiver } => info(&load(quiver, cfg)?, cfg)?,
        Command::Bratteli { quiver, levels } => {
            if *levels > cfg.max_levels {
                return Err(QgrError::limit("Bratteli levels", levels, cfg.max_levels));
            }
            let d = bratteli(&load(quiver, cfg)?, *levels);
            render(cfg, d.to_string(), d.to_json_value(), Some(d.to_dot()))?
        }
        Command::Core { quiver } => quiver_out(&core(&load(quiver, cfg)?), cfg)?,
        Command::Veronese { quiver, m } => {
            if *m == 0 {
                return Err(QgrError::InvalidInput("-m must be at least 1".into()));
            }
            quiver_out(&veronese(&load(quiver, cfg)?, *m, cfg.path_cap)?, cfg)?
        }
        Command::Hilbert { quiver, expand } => hilbert(&load(quiver, cfg)?, *expand, cfg)?,
        Command::K0 { quiver, equal, positive, max_iter } => {
            k0(&load(quiver, cfg)?, equal.as_deref(), positive.as_deref(), *max_iter, cfg)?
        }
        Command::LeavittVerify { quiver, n } => return leavitt_verify(&load(quiver, cfg)?, *n, cfg),
        Command::Morita { a, b } => morita(&load(a, cfg)?, &load(b, cfg)?, cfg)?,
        Command::ModuleClass { quiver, module, level } => {
            return module_class(&load(quiver, cfg)?, module, *level, cfg)
        }
    };
    Ok((out, 0, String::new()))
}

fn info(q: &Quiver, cfg: &Config) -> Result<String> {
    let t = torsion_classification(q);
    let (sinks, sources) = (names(q, &q.sinks()), names(q, &q.sources()));
    let mut text = String::new();
    writeln!(text, "vertices: {}", q.vertex_count()).unwrap();
    writeln!(text, "arrows: {}", q.arrow_count()).unwrap();
    writeln!(text, "sinks: {}", list(&sinks)).unwrap();
    writeln!(text, "sources: {}", list(&sources)).unwrap();
    writeln!(text, "acyclic: {}", q.is_acyclic()).unwrap();
    writeln!(text, "finite-start vertices (I0): {}", list(&names(q, &t.finite_start_vertices))).unwrap();
    writeln!(text, "infinite vertices (Iinf): {}", list(&names(q, &t.infinite_vertices))).unwrap();
    writeln!(
        text,
        "infinite subquiver: {} vertices, {} arrows",
        t.infinite_subquiver.vertex_count(),
        t.infinite_subquiver.arrow_count()
    )
    .unwrap();
    let json = json!({
        "vertices": q.vertex_count(),
        "arrows": q.arrow_count(),
        "sinks": sinks,
        "sources": sources,
        "acyclic": q.is_acyclic(),
        "torsion": t.to_json_value(q),
    });
    render(cfg, text, json, Some(q.to_dot()))
}

fn quiver_out(q: &Quiver, cfg: &Config) -> Result<String> {
    let json = serde_json::to_value(q.to_file()).expect("quiver serializes");
    render(cfg, q.to_string(), json, Some(q.to_dot()))
}

fn hilbert(q: &Quiver, expand: Option<usize>, cfg: &Config) -> Result<String> {
    let h = hilbert_series(q);
    let mut text = h.to_string();
    let mut json = h.to_json_value();
    let cp = char_poly(&q.incidence_matrix());
    writeln!(text, "det(xI - C) = {}", cp.render("x")).unwrap();
    json["char_poly"] = Value::Array(cp.coeffs().iter().map(json_int).collect());
    if let Some(n) = expand {
        let rows = h.expand(n);
        for (k, row) in rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(text, "t^{k}: {}", cells.join(" ")).unwrap();
        }
        json["expansion"] = rows
            .iter()
            .map(|r| Value::Array(r.iter().map(json_int).collect()))
            .collect();
    }
    render(cfg, text, json, None)
}

/// `1,-1@0` → vector (1, −1) at level 0.
pub fn parse_class(g: &K0Group, s: &str) -> Result<K0Class> {
    let err = |m: &str| QgrError::parse(format!("class {s:?}"), m.to_string());
    let (vec, level) = s.split_once('@').ok_or_else(|| err("expected v1,v2,...@level"))?;
    let level: usize = level.trim().parse().map_err(|_| err("level must be a non-negative integer"))?;
    let entries = if vec.trim().is_empty() {
        Vec::new()
    } else {
        vec.split(',')
            .map(|x| x.trim().parse::<BigInt>().map_err(|_| err("entries must be integers")))
            .collect::<Result<Vec<_>>>()?
    };
    g.class(entries, level).map_err(|e| err(&e.to_string()))
}

fn k0(
    q: &Quiver,
    equal: Option<&[String]>,
    positive: Option<&str>,
    max_iter: Option<u32>,
    cfg: &Config,
) -> Result<String> {
    let g = K0Group::new(q);
    match (equal, positive) {
        (Some([x, y]), None) => {
            let (a, b) = (parse_class(&g, x)?, parse_class(&g, y)?);
            let eq = g.equal(&a, &b);
            let text = format!("{a} = {b}: {eq}\n");
            render(cfg, text, json!({"x": a.to_string(), "y": b.to_string(), "equal": eq}), None)
        }
        (None, Some(x)) => {
            let a = parse_class(&g, x)?;
            let k = max_iter.expect("clap requires --max-iter");
            let (text, json) = match g.positive(&a, k) {
                Positivity::Positive { steps } => (
                    format!("{a}: positive (C^{steps} v >= 0)\n"),
                    json!({"class": a.to_string(), "result": "positive", "steps": steps}),
                ),
                Positivity::NotPositiveYet(m) => (
                    format!("{a}: not positive within {m} steps (undecided)\n"),
                    json!({"class": a.to_string(), "result": "not_positive_yet", "max_iter": m}),
                ),
            };
            render(cfg, text, json, None)
        }
        _ => Err(QgrError::parse("k0", "give either --equal X Y or --positive X --max-iter K")),
    }
}

fn leavitt_verify(q: &Quiver, n_max: usize, cfg: &Config) -> Result<(String, i32, String)> {
    let total: BigInt = path_counts(q, n_max as u32 + 1).iter().sum();
    if total > BigInt::from(cfg.path_cap) {
        return Err(QgrError::limit(format!("paths of length {}", n_max + 1), total, cfg.path_cap));
    }
    let l = LeavittAlgebra::new(q)?;
    let mut text = String::new();
    let mut levels = Vec::new();
    let mut ok = true;
    for n in 0..=n_max {
        let r = l.verify_phi(n)?;
        ok &= r.verified();
        writeln!(text, "{r}").unwrap();
        levels.push(r.to_json_value());
    }
    let mut section_json = Value::Null;
    if !q.is_empty() {
        let s = ArrowSection::first_incoming(q)?;
        let r = l.verify_section_identities(&s)?;
        ok &= r.verified();
        writeln!(text, "t+ t- = 1: {}", r.plus_minus_is_one).unwrap();
        writeln!(
            text,
            "t- t+ idempotent: {} (equal to 1: {})",
            r.minus_plus_idempotent, r.minus_plus_is_one
        )
        .unwrap();
        section_json = json!({
            "plus_minus_is_one": r.plus_minus_is_one,
            "minus_plus_idempotent": r.minus_plus_idempotent,
            "minus_plus_is_one": r.minus_plus_is_one,
        });
    }
    let cert = strongly_graded_certificate(q)?;
    ok &= cert.verified();
    writeln!(
        text,
        "strong grading: sum a* a = 1: {}; t+ t- = 1: {}",
        cert.ghost_sum_is_one, cert.plus_minus_is_one
    )
    .unwrap();
    let shown = cert.to_json_value(&l)?;
    for key in ["t_plus", "t_minus"] {
        writeln!(text, "  {key} = {}", shown[key].as_str().unwrap_or("")).unwrap();
    }
    let pairs: Vec<String> = shown["ghost_pairs"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|p| format!("[{} {}]", p[0].as_str().unwrap_or(""), p[1].as_str().unwrap_or("")))
        .collect();
    writeln!(text, "  degree -1/+1 pairs: {}", pairs.join(" ")).unwrap();
    let json = json!({
        "levels": levels,
        "section": section_json,
        "certificate": shown,
        "verified": ok,
    });
    if ok {
        Ok((render(cfg, text, json, None)?, 0, String::new()))
    } else {
        Ok((render(cfg, text, json, None)?, 8, "qgr: verification failed\n".into()))
    }
}

fn morita(a: &Quiver, b: &Quiver, cfg: &Config) -> Result<String> {
    match morita_equivalent_stationary(a, b)? {
        MoritaVerdict::Equivalent { permutation } => {
            let pairs: Vec<(String, String)> = permutation
                .iter()
                .enumerate()
                .map(|(i, &j)| (a.vertex_name(i).to_string(), b.vertex_name(j).to_string()))
                .collect();
            let shown: Vec<String> = pairs.iter().map(|(x, y)| format!("{x}->{y}")).collect();
            let text = format!("equivalent (vertex map {})\n", shown.join(", "));
            let map: serde_json::Map<String, Value> =
                pairs.into_iter().map(|(x, y)| (x, Value::String(y))).collect();
            render(cfg, text, json!({"verdict": "equivalent", "permutation": map}), None)
        }
        MoritaVerdict::Unknown => render(
            cfg,
            "unknown (no vertex permutation conjugates the incidence matrices; this does not rule out Morita equivalence)\n".into(),
            json!({"verdict": "unknown"}),
            None,
        ),
    }
}

fn module_class(q: &Quiver, module: &FsPath, n: i64, cfg: &Config) -> Result<(String, i32, String)> {
    let text = std::fs::read_to_string(module)?;
    let m = GradedRepresentation::from_json(q, &text).map_err(|e| match e {
        QgrError::Parse { location, message } => QgrError::Parse {
            location: format!("{}: {location}", module.display()),
            message,
        },
        other => other,
    })?;
    let t = m.tail_decomposition(n)?;
    let mult: serde_json::Map<String, Value> = q
        .vertices()
        .iter()
        .zip(&t.multiplicities)
        .map(|(v, &k)| (v.clone(), json!(k)))
        .collect();
    let shown: Vec<String> = t.multiplicities.iter().map(ToString::to_string).collect();
    let mut out = format!("tail at degree {n}: multiplicities ({})\nverified: {}\n", shown.join(","), t.verified);
    let class = if t.verified { Some(m.qgr_class(n)?) } else { None };
    let mut zero = Value::Null;
    if let Some(c) = &class {
        let z = K0Group::new(q).is_zero(c);
        writeln!(out, "class: {c}\nzero in K0: {z}").unwrap();
        zero = json!(z);
    }
    let json = json!({
        "degree": n,
        "multiplicities": mult,
        "verified": t.verified,
        "class": class.as_ref().map(ToString::to_string),
        "zero": zero,
    });
    let out = render(cfg, out, json, None)?;
    if t.verified {
        Ok((out, 0, String::new()))
    } else {
        let e = QgrError::UnverifiedTail(n);
        Ok((out, e.exit_code(), format!("qgr: {e}\n")))
    }
}
