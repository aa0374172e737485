//! Regression corpus: checked-in entries with expected values addressed by
//! JSON pointers into the computed output.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{rigidity_case_check, CurveHints};
use crate::error::{Error, Result};
use crate::families::{classic, fe_q, fz2_q, ClassicName, Family};
use crate::implicit::{implicitize, verify_on_curve};
use crate::jacobian::profile;
use crate::linalg::RankMode;
use crate::local::{named_type, parse_local_list};
use crate::poly::{Poly, Rat};
use crate::report::{analyze, AnalyzeOptions, InputEcho};

/// Where an expected value comes from. `EXTERNAL` values come from other
/// software and are shown but never gate a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[allow(clippy::upper_case_acronyms)]
pub enum OracleTag {
    PAPER,
    DERIVED,
    EXTERNAL,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicSource {
    Param,
    Printed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    Fz2Q,
    FeQ,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CorpusInput {
    Curve {
        poly: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        local: Option<String>,
        #[serde(default)]
        hints: CurveHints,
    },
    Pencil {
        f: String,
        h: String,
        t: String,
    },
    Family {
        family: Family,
    },
    Classic {
        name: ClassicName,
        source: ClassicSource,
    },
    Germ {
        name: String,
    },
    Form {
        which: FormKind,
        k: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    pub anchor: String,
    pub oracle: OracleTag,
    pub input: CorpusInput,
    /// JSON pointer into the output -> expected value.
    pub expected: BTreeMap<String, Value>,
    /// Pointers whose observed values are displayed but not asserted.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub record: Vec<String>,
}

/// The corpus shipped with the crate.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Load every `*.json` file in `dir` (each holds an array of entries),
/// sorted by id.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", dir.display()));
    let mut entries = Vec::new();
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    for path in paths {
        let text = std::fs::read_to_string(&path).map_err(io)?;
        let mut batch: Vec<CorpusEntry> = serde_json::from_str(&text)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        entries.append(&mut batch);
    }
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    if let Some(w) = entries.windows(2).find(|w| w[0].id == w[1].id) {
        return Err(Error::Io(format!("duplicate corpus id {}", w[0].id)));
    }
    Ok(entries)
}

pub fn filter<'a>(entries: &'a [CorpusEntry], pattern: Option<&str>) -> Vec<&'a CorpusEntry> {
    entries
        .iter()
        .filter(|e| pattern.is_none_or(|p| e.id.contains(p) || e.anchor.contains(p)))
        .collect()
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

/// The report, plus the rigidity case for nearly free curves.
fn analyze_poly(input: InputEcho, f: &Poly, opts: &AnalyzeOptions) -> Result<Value> {
    let report = analyze(input, f, opts)?;
    let mut v = to_value(&report);
    if report.class.as_ref().is_some_and(|c| c.kind == "NearlyFree") {
        v["rigidity"] = to_value(&rigidity_case_check(&profile(f, opts.mode)?)?);
    }
    Ok(v)
}

/// Compute the output object for one input.
pub fn evaluate(input: &CorpusInput, mode: RankMode) -> Result<Value> {
    let opts = AnalyzeOptions { mode, ..Default::default() };
    match input {
        CorpusInput::Curve { poly, local, hints } => {
            let f = Poly::parse(poly)?;
            let local_types = local.as_deref().map(parse_local_list).transpose()?;
            let opts = AnalyzeOptions { local_types, hints: *hints, ..opts };
            analyze_poly(InputEcho::Poly { text: poly.clone() }, &f, &opts)
        }
        CorpusInput::Pencil { f, h, t } => {
            let t: Rat = t.parse().map_err(|_| Error::InvalidParameter(format!("bad pencil value {t}")))?;
            let g = &Poly::parse(f)? + &Poly::parse(h)?.scale(&t);
            analyze_poly(InputEcho::Poly { text: g.to_string() }, &g, &opts)
        }
        CorpusInput::Family { family } => {
            let spec = family.spec()?;
            let f = family.curve()?;
            let opts = AnalyzeOptions { hints: CurveHints { irreducible: Some(true), nodal: None }, ..opts };
            let mut r = analyze(InputEcho::Family { spec: family.to_string() }, &f, &opts)?;
            r.check_against(&spec);
            let mut v = to_value(&r);
            if let Some(p) = family.parametrization()? {
                v["parametrization"] = json!(p.to_string());
            }
            Ok(v)
        }
        CorpusInput::Classic { name, source } => {
            let c = classic(*name);
            let hints = CurveHints { irreducible: Some(true), nodal: None };
            let opts = AnalyzeOptions { hints, ..opts };
            match source {
                ClassicSource::Param => {
                    let r = implicitize(&c.param, name.degree())?;
                    let mut v = analyze_poly(InputEcho::Parametrization { text: c.param.to_string() }, &r.f, &opts)?;
                    v["kernel_dim"] = json!(r.kernel_dim);
                    v["verified"] = json!(verify_on_curve(&r.f, &c.param));
                    Ok(v)
                }
                ClassicSource::Printed => {
                    let f = c
                        .printed
                        .ok_or_else(|| Error::InvalidParameter(format!("{name} has no printed equation")))?;
                    let mut v = analyze_poly(InputEcho::Poly { text: f.to_string() }, &f, &opts)?;
                    v["on_curve"] = json!(verify_on_curve(&f, &c.param));
                    Ok(v)
                }
            }
        }
        CorpusInput::Germ { name } => Ok(to_value(&named_type(name)?)),
        CorpusInput::Form { which, k } => {
            let q = match which {
                FormKind::Fz2Q => fz2_q(*k)?,
                FormKind::FeQ => fe_q(*k)?,
            };
            Ok(json!({
                "form": q.to_string(),
                "degree": q.degree(),
                "coeffs": q.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            }))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    Error,
    /// External oracle: displayed only.
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Mismatch {
    pub pointer: String,
    pub expected: Value,
    pub observed: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryResult {
    pub id: String,
    pub anchor: String,
    pub oracle: OracleTag,
    pub status: Status,
    pub mismatches: Vec<Mismatch>,
    pub records: BTreeMap<String, Option<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Full computed output.
    #[serde(skip)]
    pub output: Option<Value>,
    pub micros: u64,
}

impl EntryResult {
    pub fn gates(&self) -> bool {
        self.oracle != OracleTag::EXTERNAL
    }
}

pub fn run_entry(entry: &CorpusEntry, mode: RankMode) -> EntryResult {
    let started = Instant::now();
    let outcome = evaluate(&entry.input, mode);
    let mut result = EntryResult {
        id: entry.id.clone(),
        anchor: entry.anchor.clone(),
        oracle: entry.oracle,
        status: Status::Pass,
        mismatches: Vec::new(),
        records: BTreeMap::new(),
        error: None,
        output: None,
        micros: 0,
    };
    match outcome {
        Err(e) => {
            result.status = if entry.oracle == OracleTag::EXTERNAL { Status::Info } else { Status::Error };
            result.error = Some(e.to_string());
        }
        Ok(v) => {
            for (ptr, want) in &entry.expected {
                let got = v.pointer(ptr).cloned();
                if got.as_ref() != Some(want) {
                    result.mismatches.push(Mismatch { pointer: ptr.clone(), expected: want.clone(), observed: got });
                }
            }
            for ptr in &entry.record {
                result.records.insert(ptr.clone(), v.pointer(ptr).cloned());
            }
            result.status = match (entry.oracle, result.mismatches.is_empty()) {
                (OracleTag::EXTERNAL, _) => Status::Info,
                (_, true) => Status::Pass,
                (_, false) => Status::Fail,
            };
            result.output = Some(v);
        }
    }
    result.micros = started.elapsed().as_micros() as u64;
    result
}

/// Run entries in parallel; results come back in input order.
pub fn run(entries: &[&CorpusEntry], mode: RankMode) -> Vec<EntryResult> {
    entries.par_iter().map(|e| run_entry(e, mode)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub asserted: usize,
    pub passed: usize,
    pub informational: usize,
}

impl Summary {
    pub fn of(results: &[EntryResult]) -> Self {
        Summary {
            total: results.len(),
            asserted: results.iter().filter(|r| r.gates()).count(),
            passed: results.iter().filter(|r| r.status == Status::Pass).count(),
            informational: results.iter().filter(|r| !r.gates()).count(),
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.asserted
    }
}

/// One line per entry plus details of failures.
pub fn render(results: &[EntryResult]) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    for r in results {
        let _ = writeln!(s, "{:<5} {:<40} {:<9} {}", r.status, r.id, format!("{:?}", r.oracle), r.anchor);
        for m in &r.mismatches {
            let obs = m.observed.as_ref().map_or("<absent>".to_string(), Value::to_string);
            let _ = writeln!(s, "        {}: expected {}, observed {obs}", m.pointer, m.expected);
        }
        for (ptr, v) in &r.records {
            let obs = v.as_ref().map_or("<absent>".to_string(), Value::to_string);
            let _ = writeln!(s, "        {ptr} = {obs} (recorded)");
        }
        if let Some(e) = &r.error {
            let _ = writeln!(s, "        error: {e}");
        }
    }
    let sum = Summary::of(results);
    let _ = writeln!(
        s,
        "{} / {} asserted entries pass ({} informational)",
        sum.passed, sum.asserted, sum.informational
    );
    s
}
