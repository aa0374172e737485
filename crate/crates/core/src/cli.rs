//! Command-line front end. The binary is a thin wrapper around [`main_with`].

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classify::{analyze_pencil, CurveHints};
use crate::corpus;
use crate::error::{Error, Result};
use crate::families::{classic, fe_q, fz2_q, Family, Parametrization};
use crate::implicit::{implicitize, implicitize_search, verify_on_curve};
use crate::linalg::RankMode;
use crate::local::parse_local_list;
use crate::poly::{BinaryForm, Poly, Rat};
use crate::report::{analyze, check_resources, report_from_profile, AnalyzeOptions, CurveReport, InputEcho};
use crate::sweep;

#[derive(Parser, Debug)]
#[command(name = "curvelab", version, about = "Jacobian syzygies and deformations of plane curves")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Rank computation mode (sweep defaults to probabilistic, everything else to certified).
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,
    /// Seed for the probabilistic prime generator.
    #[arg(long, global = true, env = "CURVELAB_SEED")]
    pub seed: Option<u64>,
    /// Print JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Lift the certified-mode degree limit.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Certified,
    Probabilistic,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Fz1,
    Fz2,
    Fe,
    Classic,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyze a homogeneous polynomial.
    Analyze {
        poly: String,
        /// Local singularity types, e.g. "A_2,A_2,T(4,5)" or "D4,A_1x7".
        #[arg(long)]
        local: Option<String>,
        /// Assert that the curve is irreducible (enables extra degree checks).
        #[arg(long)]
        irreducible: bool,
        /// Assert that the curve has only nodes.
        #[arg(long)]
        nodal: bool,
    },
    /// Print a family member, optionally analyzed against its predicted invariants.
    Family {
        kind: FamilyKind,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Classical curve name: C4, C5, C5' or C5''.
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        analyze: bool,
    },
    /// Check predicted invariants over a parameter range, e.g. `sweep fz1 d=5..9`.
    Sweep { kind: FamilyKind, range: String },
    /// Analyze the members `f + t h` of a pencil.
    Pencil {
        f: String,
        h: String,
        /// Comma-separated rational values of t.
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Implicit equation of a parametrization by three binary forms in s, t.
    Implicitize {
        a: String,
        b: String,
        c: String,
        /// Degree of the relation; searched upward when omitted.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        analyze: bool,
    },
    /// Invariants of quasi-homogeneous germs, e.g. "T(5,6)" or "A_2,E6".
    Local { types: String },
    /// Run the regression corpus.
    Corpus {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

/// What a command produced: text for stdout and the process exit code.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

impl GlobalOpts {
    fn mode(&self, default: ModeArg) -> RankMode {
        match self.mode.unwrap_or(default) {
            ModeArg::Certified => RankMode::Certified,
            ModeArg::Probabilistic => RankMode::Probabilistic { seed: self.seed.unwrap_or_else(rand::random) },
        }
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(value).expect("serializable");
            s.push('\n');
            s
        } else {
            text()
        }
    }
}

/// Parse arguments, run, print, and return the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Analyze { poly, local, irreducible, nodal } => {
            let f = Poly::parse(poly)?;
            let opts = AnalyzeOptions {
                mode: g.mode(ModeArg::Certified),
                local_types: local.as_deref().map(parse_local_list).transpose()?,
                hints: CurveHints { irreducible: irreducible.then_some(true), nodal: nodal.then_some(true) },
                force: g.force,
            };
            let report = analyze(InputEcho::Poly { text: poly.clone() }, &f, &opts)?;
            Ok(report_outcome(g, &report))
        }
        Command::Family { kind, d, a, k, name, analyze } => family(g, *kind, *d, *a, *k, name.as_deref(), *analyze),
        Command::Sweep { kind, range } => run_sweep(g, *kind, range),
        Command::Pencil { f, h, t } => pencil(g, f, h, t),
        Command::Implicitize { a, b, c, degree, analyze } => run_implicitize(g, [a, b, c], *degree, *analyze),
        Command::Local { types } => {
            let list = parse_local_list(types)?;
            let text = || {
                let mut s = format!("{:<10} {:>4} {:>6} {:>5} {:>8}\n", "type", "mu", "tau_es", "m_es", "modality");
                for t in &list {
                    let _ = writeln!(s, "{:<10} {:>4} {:>6} {:>5} {:>8}", t.name(), t.mu, t.tau_es, t.m_es, t.modality);
                }
                s
            };
            Ok(Outcome::ok(if list.len() == 1 { g.emit(&list[0], text) } else { g.emit(&list, text) }))
        }
        Command::Corpus { filter, dir } => {
            let dir = dir.clone().unwrap_or_else(corpus::default_dir);
            let entries = corpus::load_dir(&dir)?;
            let selected = corpus::filter(&entries, filter.as_deref());
            let results = corpus::run(&selected, g.mode(ModeArg::Certified));
            let summary = corpus::Summary::of(&results);
            let stdout = g.emit(&json!({ "summary": summary, "results": results }), || corpus::render(&results));
            Ok(Outcome { stdout, code: if summary.ok() { 0 } else { 1 } })
        }
    }
}

/// A printed report; `mdr = 0` still prints but exits with that error's code.
fn report_outcome(g: &GlobalOpts, report: &CurveReport) -> Outcome {
    let stdout = g.emit(report, || report.render());
    let code = if report.class.is_none() { Error::MdrZero.exit_code() } else { 0 };
    Outcome { stdout, code }
}

fn require(v: Option<usize>, flag: &str, kind: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("{kind} needs --{flag}")))
}

fn family(
    g: &GlobalOpts,
    kind: FamilyKind,
    d: Option<usize>,
    a: Option<usize>,
    k: Option<usize>,
    name: Option<&str>,
    run_analysis: bool,
) -> Result<Outcome> {
    let fam = match kind {
        FamilyKind::Fz1 => Family::FZ1 { d: require(d, "d", "fz1")?, a: require(a, "a", "fz1")? },
        FamilyKind::Fz2 => Family::FZ2 { k: require(k, "k", "fz2")? },
        FamilyKind::Fe => Family::FE { k: require(k, "k", "fe")? },
        FamilyKind::Classic => Family::Classic {
            name: name.ok_or_else(|| Error::InvalidParameter("classic needs --name".into()))?.parse()?,
        },
    };
    let spec = fam.spec()?;
    let param = fam.parametrization()?;
    let form = match fam {
        Family::FZ2 { k } => Some(fz2_q(k)?),
        Family::FE { k } => Some(fe_q(k)?),
        _ => None,
    };
    let printed = match fam {
        Family::Classic { name } => classic(name).printed,
        _ => None,
    };
    let equation = match fam {
        Family::FZ1 { .. } => Some(fam.curve()?),
        _ => None,
    };

    let mut text = format!("family       {fam}\ndegree       {}\n", fam.degree());
    if let Some(q) = &form {
        let _ = writeln!(text, "form         {q}");
    }
    if let Some(p) = &param {
        let _ = writeln!(text, "param        {p}");
    }
    if let Some(f) = &printed {
        let _ = writeln!(text, "printed      {f}");
    }
    if let Some(f) = &equation {
        let _ = writeln!(text, "equation     {f}");
    }
    let _ = writeln!(
        text,
        "predicted    {} mdr {} tau {}",
        spec.expected.class, spec.expected.mdr, spec.expected.tau
    );
    let mut value = json!({
        "family": fam,
        "degree": fam.degree(),
        "expected": spec.expected,
        "form": form.as_ref().map(ToString::to_string),
        "parametrization": param.as_ref().map(ToString::to_string),
        "printed": printed.as_ref().map(ToString::to_string),
        "equation": equation.as_ref().map(ToString::to_string),
    });

    let mut code = 0;
    if run_analysis {
        let opts = AnalyzeOptions {
            mode: g.mode(ModeArg::Certified),
            hints: CurveHints { irreducible: Some(true), nodal: None },
            force: g.force,
            ..Default::default()
        };
        check_resources(fam.degree(), opts.mode, opts.force)?;
        let f = fam.curve()?;
        let mut report = analyze(InputEcho::Family { spec: fam.to_string() }, &f, &opts)?;
        report.check_against(&spec);
        let pass = report.conjecture.as_ref().is_some_and(|c| c.pass);
        code = if pass { 0 } else { 1 };
        let _ = write!(text, "\n{}", report.render());
        value["report"] = serde_json::to_value(&report).expect("serializable");
    }
    Ok(Outcome { stdout: g.emit(&value, || text), code })
}

/// `5..9`, `d=5..9`, `k=4` or `4..=5`.
pub fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidParameter(format!("bad range `{s}`"));
    let body = match s.split_once('=') {
        Some((name, rest)) if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphabetic()) => rest,
        _ => s,
    };
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match body.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.trim_start_matches('='))?),
        None => {
            let n = num(body)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn run_sweep(g: &GlobalOpts, kind: FamilyKind, range: &str) -> Result<Outcome> {
    let (lo, hi) = parse_range(range)?;
    let name = match kind {
        FamilyKind::Fz1 => "fz1",
        FamilyKind::Fz2 => "fz2",
        FamilyKind::Fe => "fe",
        FamilyKind::Classic => return Err(Error::InvalidParameter("sweep covers fz1, fz2 and fe".into())),
    };
    let members = sweep::family_range(name, lo, hi)?;
    let rows = sweep::sweep(&members, g.mode(ModeArg::Probabilistic), g.force);
    let code = if sweep::all_pass(&rows) { 0 } else { 1 };
    Ok(Outcome { stdout: g.emit(&rows, || sweep::render(&rows)), code })
}

#[derive(Serialize)]
struct PencilOut {
    t: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<CurveReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn pencil(g: &GlobalOpts, f: &str, h: &str, t: &str) -> Result<Outcome> {
    let (fp, hp) = (Poly::parse(f)?, Poly::parse(h)?);
    let ts = t
        .split(',')
        .map(|x| x.trim().parse::<Rat>().map_err(|_| Error::InvalidParameter(format!("bad value of t `{x}`"))))
        .collect::<Result<Vec<_>>>()?;
    let d = fp.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let mode = g.mode(ModeArg::Certified);
    check_resources(d, mode, g.force)?;
    let opts = AnalyzeOptions { mode, force: g.force, ..Default::default() };
    let rows: Vec<PencilOut> = analyze_pencil(&fp, &hp, &ts, mode)?
        .into_iter()
        .map(|row| {
            let ft = &fp + &hp.scale(&row.t);
            let report = row.result.and_then(|(p, _)| {
                report_from_profile(InputEcho::Poly { text: ft.to_string() }, &ft, &p, &opts, Instant::now())
            });
            match report {
                Ok(r) => PencilOut { t: row.t.to_string(), report: Some(r), error: None },
                Err(e) => PencilOut { t: row.t.to_string(), report: None, error: Some(e.to_string()) },
            }
        })
        .collect();
    let text = || {
        let mut s = format!("{:<8} {:<16} {:>4} {:>5} {:>3}\n", "t", "class", "mdr", "tau", "nu");
        for r in &rows {
            match (&r.report, &r.error) {
                (Some(rep), _) => {
                    let class = rep.class.as_ref().map_or("-".to_string(), ToString::to_string);
                    let _ = writeln!(s, "{:<8} {:<16} {:>4} {:>5} {:>3}", r.t, class, rep.mdr, rep.tau, rep.nu);
                }
                (None, Some(e)) => {
                    let _ = writeln!(s, "{:<8} error: {e}", r.t);
                }
                (None, None) => unreachable!(),
            }
        }
        s
    };
    Ok(Outcome::ok(g.emit(&rows, text)))
}

fn run_implicitize(g: &GlobalOpts, forms: [&String; 3], degree: Option<usize>, run_analysis: bool) -> Result<Outcome> {
    let [a, b, c] = forms.map(|s| BinaryForm::parse(s));
    let param = Parametrization::new(a?, b?, c?)?;
    let r = match degree {
        Some(n) => implicitize(&param, n)?,
        None => implicitize_search(&param)?,
    };
    let n = r.f.homogeneous_degree().unwrap_or(0);
    let mut text = format!(
        "param        {param}\nequation     {}\ndegree       {n}\nkernel dim   {}\nverified     {}\n",
        r.f,
        r.kernel_dim,
        verify_on_curve(&r.f, &param)
    );
    let mut value = json!({
        "parametrization": param.to_string(),
        "equation": r.f.to_string(),
        "degree": n,
        "kernel_dim": r.kernel_dim,
        "verified": verify_on_curve(&r.f, &param),
    });
    let mut code = 0;
    if run_analysis {
        let opts = AnalyzeOptions { mode: g.mode(ModeArg::Certified), force: g.force, ..Default::default() };
        let report = analyze(InputEcho::Parametrization { text: param.to_string() }, &r.f, &opts)?;
        code = report_outcome(g, &report).code;
        let _ = write!(text, "\n{}", report.render());
        value["report"] = serde_json::to_value(&report).expect("serializable");
    }
    Ok(Outcome { stdout: g.emit(&value, || text), code })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("5..9").unwrap(), (5, 9));
        assert_eq!(parse_range("d=5..9").unwrap(), (5, 9));
        assert_eq!(parse_range("k=4").unwrap(), (4, 4));
        assert_eq!(parse_range("4..=5").unwrap(), (4, 5));
        assert!(parse_range("9..5").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn argument_parsing() {
        let cli = Cli::try_parse_from(["curvelab", "family", "fz1", "--d", "6", "--a", "3", "--analyze", "--json"]).unwrap();
        assert!(cli.global.json);
        assert!(matches!(cli.command, Command::Family { kind: FamilyKind::Fz1, d: Some(6), a: Some(3), analyze: true, .. }));
        let cli = Cli::try_parse_from(["curvelab", "--mode", "probabilistic", "--seed", "5", "local", "T(5,6)"]).unwrap();
        assert_eq!(cli.global.mode(ModeArg::Certified), RankMode::Probabilistic { seed: 5 });
        assert!(Cli::try_parse_from(["curvelab", "frobnicate"]).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(main_with(["curvelab", "analyze", "x^2*y^2"]), 3);
        assert_eq!(main_with(["curvelab", "analyze", "x^2+"]), 2);
        assert_eq!(main_with(["curvelab", "analyze", "x^3+y^3"]), 5);
        assert_eq!(main_with(["curvelab", "analyze", "y^5+x^4*z", "--local", "A_2"]), 4);
        assert_eq!(main_with(["curvelab", "local", "T(4,5)"]), 0);
    }
}
