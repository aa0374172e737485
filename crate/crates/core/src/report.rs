//! The serializable per-curve report.

use std::fmt::{self, Write as _};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::classify::{
    classify, degree_bound_flags, deformation_report, CurveClass, CurveHints, DeformationReport, Flag,
};
use crate::error::{Error, Result};
use crate::families::{Expected, FamilySpec};
use crate::jacobian::{profile, JacobianProfile};
use crate::linalg::RankMode;
use crate::local::TpqSing;
use crate::poly::Poly;

pub const SCHEMA: u32 = 1;

/// Largest degree accepted in certified mode without `force`.
pub const CERTIFIED_MAX_DEGREE: usize = 12;
/// Largest degree accepted in probabilistic mode.
pub const PROBABILISTIC_MAX_DEGREE: usize = 18;

/// Refuse curves whose elimination would be too expensive.
pub fn check_resources(d: usize, mode: RankMode, force: bool) -> Result<()> {
    match mode {
        RankMode::Certified if d > CERTIFIED_MAX_DEGREE && !force => Err(Error::ResourceLimit(format!(
            "certified mode is limited to d <= {CERTIFIED_MAX_DEGREE} (d = {d}); use --force or probabilistic mode"
        ))),
        RankMode::Probabilistic { .. } if d > PROBABILISTIC_MAX_DEGREE => Err(Error::ResourceLimit(format!(
            "probabilistic mode is limited to d <= {PROBABILISTIC_MAX_DEGREE} (d = {d})"
        ))),
        _ => Ok(()),
    }
}

/// What the report was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum InputEcho {
    Poly { text: String },
    Parametrization { text: String },
    Family { spec: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub kind: String,
    pub exponents: Option<[usize; 2]>,
}

impl From<&CurveClass> for ClassSummary {
    fn from(c: &CurveClass) -> Self {
        ClassSummary { kind: c.kind().to_string(), exponents: c.exponents().map(|(a, b)| [a, b]) }
    }
}

impl fmt::Display for ClassSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponents {
            Some([a, b]) => write!(f, "{}({a},{b})", self.kind),
            None => f.write_str(&self.kind),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub micros: u64,
}

/// Comparison of a family member against its predicted invariants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureCheck {
    pub family: String,
    pub expected: Expected,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub schema: u32,
    pub input: InputEcho,
    /// The polynomial analyzed, in canonical form.
    pub equation: String,
    pub degree: usize,
    pub mdr: usize,
    pub sigma: Option<usize>,
    pub nu: usize,
    pub tau: usize,
    pub hilb_table: Vec<usize>,
    pub n_table: Vec<usize>,
    pub ar_table: Vec<usize>,
    pub class: Option<ClassSummary>,
    pub deformation: Option<DeformationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub local_types: Option<Vec<String>>,
    pub flags: Vec<Flag>,
    pub mode: String,
    pub probabilistic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureCheck>,
    pub timing: Timing,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub mode: RankMode,
    pub local_types: Option<Vec<TpqSing>>,
    pub hints: CurveHints,
    pub force: bool,
}

impl CurveReport {
    pub fn class(&self) -> Option<&ClassSummary> {
        self.class.as_ref()
    }

    pub fn is_free(&self) -> bool {
        self.class.as_ref().is_some_and(|c| c.kind == "Free")
    }

    /// Attach the comparison with a family prediction.
    pub fn check_against(&mut self, spec: &FamilySpec) {
        let e = spec.expected;
        let class = ClassSummary::from(&e.class);
        let pass = self.degree == e.degree
            && self.mdr == e.mdr
            && self.tau == e.tau
            && self.class.as_ref() == Some(&class);
        self.conjecture = Some(ConjectureCheck { family: spec.family.to_string(), expected: e, pass });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Io(e.to_string()))
    }

    /// Human-readable table.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let w = &mut s;
        let _ = writeln!(w, "curve        {}", self.equation);
        let _ = writeln!(w, "degree       {}", self.degree);
        let _ = writeln!(w, "mode         {}", self.mode);
        let _ = writeln!(w, "tau          {}", self.tau);
        let _ = writeln!(w, "mdr          {}", self.mdr);
        let _ = writeln!(w, "nu           {}", self.nu);
        let sigma = self.sigma.map_or("-".to_string(), |s| s.to_string());
        let _ = writeln!(w, "sigma        {sigma}");
        let class = self.class.as_ref().map_or("-".to_string(), ToString::to_string);
        let _ = writeln!(w, "class        {class}");
        let _ = writeln!(w, "hilb         {:?}", self.hilb_table);
        let _ = writeln!(w, "n(f)         {:?}", self.n_table);
        let _ = writeln!(w, "ar(f)        {:?}", self.ar_table);
        if let Some(locals) = &self.local_types {
            let _ = writeln!(w, "local types  {}", locals.join(", "));
        }
        match &self.deformation {
            Some(d) => {
                let _ = writeln!(w, "ea tangent   {}", d.ea_tangent_dim);
                let _ = writeln!(w, "orbit dim    {}", d.orbit_dim);
                let _ = writeln!(w, "expected dim {}", d.expected_dim);
                let _ = writeln!(w, "h1           {}", d.h1);
                let _ = writeln!(w, "unobstructed {}", d.unobstructed);
                let _ = writeln!(w, "ea-rigid     {}", d.ea_rigid);
                if let (Some(lo), Some(hi)) = (d.es_lower, d.es_upper) {
                    let tight = if d.es_tight == Some(true) { " (upper bound attained)" } else { "" };
                    let _ = writeln!(w, "es tangent   [{lo}, {hi}]{tight}");
                }
            }
            None => {
                let _ = writeln!(w, "deformation  omitted (mdr = 0)");
            }
        }
        for f in &self.flags {
            let mark = if f.consistent { "ok" } else { "INCONSISTENT" };
            let _ = writeln!(w, "flag         {} [{mark}] {}", f.code, f.message);
        }
        if let Some(c) = &self.conjecture {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(
                w,
                "prediction   {}: mdr {}, tau {}, {} -> {verdict}",
                c.family,
                c.expected.mdr,
                c.expected.tau,
                ClassSummary::from(&c.expected.class)
            );
        }
        let _ = writeln!(w, "time         {:.3} s", self.timing.micros as f64 / 1e6);
        s
    }
}

fn mode_fields(mode: RankMode) -> (String, bool, Option<u64>) {
    match mode {
        RankMode::Certified => ("certified".into(), false, None),
        RankMode::Probabilistic { seed } => ("probabilistic".into(), true, Some(seed)),
    }
}

/// Assemble a report from an already computed profile.
pub fn report_from_profile(
    input: InputEcho,
    f: &Poly,
    p: &JacobianProfile,
    opts: &AnalyzeOptions,
    started: Instant,
) -> Result<CurveReport> {
    let (class, deformation, flags) = match classify(p) {
        Ok(class) => {
            let deformation = deformation_report(p, opts.local_types.as_deref())?;
            let flags = degree_bound_flags(p, &class, &opts.hints);
            (Some(ClassSummary::from(&class)), Some(deformation), flags)
        }
        Err(Error::MdrZero) => (None, None, Vec::new()),
        Err(e) => return Err(e),
    };
    let (mode, probabilistic, seed) = mode_fields(p.mode);
    Ok(CurveReport {
        schema: SCHEMA,
        input,
        equation: f.to_string(),
        degree: p.d,
        mdr: p.mdr,
        sigma: p.sigma,
        nu: p.nu,
        tau: p.tau,
        hilb_table: p.hilb.clone(),
        n_table: p.n_table.clone(),
        ar_table: p.ar_table.clone(),
        class,
        deformation,
        local_types: opts
            .local_types
            .as_ref()
            .map(|l| l.iter().map(TpqSing::name).collect()),
        flags,
        mode,
        probabilistic,
        seed,
        conjecture: None,
        timing: Timing { micros: started.elapsed().as_micros() as u64 },
    })
}

/// Profile, classify and analyze `f`.
///
/// Curves with `mdr = 0` yield a report without class and deformation
/// sections; callers decide how to signal that.
pub fn analyze(input: InputEcho, f: &Poly, opts: &AnalyzeOptions) -> Result<CurveReport> {
    let started = Instant::now();
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    check_resources(d, opts.mode, opts.force)?;
    let p = profile(f, opts.mode)?;
    report_from_profile(input, f, &p, opts, started)
}
