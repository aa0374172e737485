//! Free / nearly free classification and the numerical deformation theory
//! of a curve read off its Jacobian profile.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jacobian::{profile, JacobianProfile};
use crate::linalg::RankMode;
use crate::local::TpqSing;
use crate::poly::{Poly, Rat};

/// `dim PGL(3)`.
pub const DIM_G: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CurveClass {
    Free { d1: usize, d2: usize },
    NearlyFree { d1: usize, d2: usize },
    Neither { nu: usize },
}

impl CurveClass {
    pub fn kind(&self) -> &'static str {
        match self {
            CurveClass::Free { .. } => "Free",
            CurveClass::NearlyFree { .. } => "NearlyFree",
            CurveClass::Neither { .. } => "Neither",
        }
    }

    pub fn exponents(&self) -> Option<(usize, usize)> {
        match *self {
            CurveClass::Free { d1, d2 } | CurveClass::NearlyFree { d1, d2 } => Some((d1, d2)),
            CurveClass::Neither { .. } => None,
        }
    }

    pub fn is_free(&self) -> bool {
        matches!(self, CurveClass::Free { .. })
    }

    pub fn is_nearly_free(&self) -> bool {
        matches!(self, CurveClass::NearlyFree { .. })
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveClass::Free { d1, d2 } => write!(f, "Free({d1},{d2})"),
            CurveClass::NearlyFree { d1, d2 } => write!(f, "NearlyFree({d1},{d2})"),
            CurveClass::Neither { nu } => write!(f, "Neither(nu={nu})"),
        }
    }
}

/// Classify by `nu`, checking the closed-form Tjurina number of free and
/// nearly free curves.
pub fn classify(p: &JacobianProfile) -> Result<CurveClass> {
    if p.mdr == 0 {
        return Err(Error::MdrZero);
    }
    let (d, d1) = (p.d as i64, p.mdr as i64);
    let (class, formula) = match p.nu {
        0 => {
            let d2 = d - 1 - d1;
            (CurveClass::Free { d1: p.mdr, d2: d2 as usize }, (d - 1).pow(2) - d1 * d2)
        }
        1 => {
            let d2 = d - d1;
            (
                CurveClass::NearlyFree { d1: p.mdr, d2: d2 as usize },
                (d - 1).pow(2) - d1 * (d2 - 1) - 1,
            )
        }
        nu => return Ok(CurveClass::Neither { nu }),
    };
    if formula != p.tau as i64 {
        return Err(Error::TauFormulaMismatch { class: class.kind(), tau: p.tau, formula });
    }
    Ok(class)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationReport {
    pub ea_tangent_dim: usize,
    pub orbit_dim: usize,
    /// `d(d+3)/2 - tau`; may be negative for very singular curves.
    pub expected_dim: i64,
    pub h1: usize,
    pub unobstructed: bool,
    pub ea_rigid: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub es_lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub es_upper: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m_es_total: Option<usize>,
    /// Whether `dim T V^es` equals `es_upper` (the unobstructed case).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub es_tight: Option<bool>,
}

/// Deformation quantities of a curve with `mdr >= 1`.
///
/// With `local_types`, the declared germs must account for the whole
/// Tjurina number, and equisingular bounds are added.
pub fn deformation_report(
    p: &JacobianProfile,
    local_types: Option<&[TpqSing]>,
) -> Result<DeformationReport> {
    if p.mdr == 0 {
        return Err(Error::MdrZero);
    }
    let d = p.d;
    let ar1 = p.ar_at(1);
    let n_d = p.n_at(d);
    let orbit_dim = DIM_G
        .checked_sub(ar1)
        .ok_or_else(|| Error::Invariant(format!("ar(f)_1 = {ar1} exceeds 8")))?;
    let h1 = if d >= 5 { p.ar_at(d - 5) } else { 0 };
    let unobstructed = h1 == 0;
    if unobstructed != (p.mdr + 4 >= d) {
        return Err(Error::Invariant("h1 = 0 disagrees with mdr >= d-4".into()));
    }
    let ea_tangent_dim = orbit_dim + n_d;
    let mut report = DeformationReport {
        ea_tangent_dim,
        orbit_dim,
        expected_dim: (d * (d + 3) / 2) as i64 - p.tau as i64,
        h1,
        unobstructed,
        ea_rigid: n_d == 0,
        es_lower: None,
        es_upper: None,
        m_es_total: None,
        es_tight: None,
    };
    if let Some(locals) = local_types {
        let local: usize = locals.iter().map(TpqSing::tau).sum();
        if local != p.tau {
            return Err(Error::TauBudgetMismatch { local, global: p.tau });
        }
        let m: usize = locals.iter().map(|g| g.m_es).sum();
        report.es_lower = Some(ea_tangent_dim);
        report.es_upper = Some(ea_tangent_dim + m);
        report.m_es_total = Some(m);
        report.es_tight = Some(unobstructed);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityVerdict {
    /// `n(f)_d = 0`.
    pub rigid: bool,
    /// The case of the nearly free criterion that applies, if any.
    pub case: Option<String>,
    /// Whether the criterion and the computed `n(f)_d` agree.
    pub consistent: bool,
}

/// Check the nearly free ea-rigidity criterion: `n(f)_d = 0` iff `mdr >= 4`,
/// or `mdr = 2` and `d = 4`, or `mdr = 1` and `d` is 2 or 3.
pub fn rigidity_case_check(p: &JacobianProfile) -> Result<RigidityVerdict> {
    let class = classify(p)?;
    if !class.is_nearly_free() {
        return Err(Error::InvalidParameter(format!(
            "rigidity criterion applies to nearly free curves, not {class}"
        )));
    }
    let (m, d) = (p.mdr, p.d);
    let case = if m >= 4 {
        Some("i")
    } else if m == 2 && d == 4 {
        Some("ii")
    } else if m == 1 && (d == 2 || d == 3) {
        Some("iii")
    } else {
        None
    };
    let rigid = p.n_at(d) == 0;
    Ok(RigidityVerdict {
        rigid,
        case: case.map(String::from),
        consistent: rigid == case.is_some(),
    })
}

/// One member `f + t h` of a pencil.
#[derive(Clone, Debug)]
pub struct PencilRow {
    pub t: Rat,
    pub result: Result<(JacobianProfile, CurveClass)>,
}

/// Profile and classify `f + t h` for each `t`.
pub fn analyze_pencil(f: &Poly, h: &Poly, t_values: &[Rat], mode: RankMode) -> Result<Vec<PencilRow>> {
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if !h.is_zero() {
        let e = h.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if e != d {
            return Err(Error::DegreeMismatch { expected: d, found: e });
        }
    }
    Ok(t_values
        .par_iter()
        .map(|t| {
            let ft = f + &h.scale(t);
            let result = profile(&ft, mode).and_then(|p| classify(&p).map(|c| (p, c)));
            PencilRow { t: t.clone(), result }
        })
        .collect())
}

/// Optional facts about a curve that cannot be read off its profile.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveHints {
    pub irreducible: Option<bool>,
    pub nodal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub code: String,
    pub message: String,
    pub consistent: bool,
}

impl Flag {
    fn new(code: &str, consistent: bool, message: String) -> Self {
        Flag { code: code.into(), message, consistent }
    }
}

/// Degree and mdr bounds that must hold for smooth, free, nearly free or
/// nodal curves. A flag is emitted whenever its premise holds; an
/// inconsistent flag signals a contradiction.
pub fn degree_bound_flags(p: &JacobianProfile, class: &CurveClass, hints: &CurveHints) -> Vec<Flag> {
    let (d, mdr) = (p.d, p.mdr);
    let unobstructed = mdr + 4 >= d;
    let mut flags = Vec::new();
    if class.is_free() && unobstructed {
        flags.push(Flag::new(
            "free-unobstructed-degree",
            d <= 7,
            format!("free and unobstructed requires d <= 7 (d = {d})"),
        ));
    }
    if class.is_nearly_free() && unobstructed {
        flags.push(Flag::new(
            "nearly-free-unobstructed-degree",
            d <= 8,
            format!("nearly free and unobstructed requires d <= 8 (d = {d})"),
        ));
    }
    if mdr > 0 && d <= 5 {
        flags.push(Flag::new(
            "low-degree-unobstructed",
            unobstructed,
            format!("d <= 5 with mdr > 0 forces unobstructed (mdr = {mdr})"),
        ));
    }
    if hints.nodal == Some(true) {
        flags.push(Flag::new(
            "nodal-mdr",
            mdr + 2 >= d,
            format!("nodal curves have mdr >= d-2 (mdr = {mdr}, d = {d})"),
        ));
    }
    if class.is_free() && hints.irreducible == Some(true) {
        flags.push(Flag::new(
            "free-irreducible-mdr",
            mdr >= 2,
            format!("irreducible free curves have mdr >= 2 (mdr = {mdr})"),
        ));
        if d <= 6 {
            flags.push(Flag::new(
                "free-irreducible-unobstructed",
                unobstructed,
                format!("irreducible free curves of degree <= 6 are unobstructed (d = {d})"),
            ));
        }
    }
    flags
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::{named_type, parse_local_list};

    const C: RankMode = RankMode::Certified;

    fn prof(s: &str) -> JacobianProfile {
        profile(&Poly::parse(s).unwrap(), C).unwrap()
    }

    #[test]
    fn classic_quartic_and_quintic() {
        let c4 = prof("x^2*y^2+y^2*z^2+x^2*z^2-2*x*y*z*(x+y+z)");
        assert_eq!(classify(&c4).unwrap(), CurveClass::NearlyFree { d1: 2, d2: 2 });
        assert_eq!(c4.tau, 6);
        let c5 = prof("9*x*y^4-4*y^5-24*x^2*y^2*z+48*x*y^3*z-16*y^4*z+16*x^3*z^2");
        assert_eq!(classify(&c5).unwrap(), CurveClass::Free { d1: 2, d2: 2 });
        assert_eq!(c5.tau, 12);
    }

    #[test]
    fn unicuspidal_deformations() {
        let p = prof("y^5+x^4*z");
        assert_eq!(classify(&p).unwrap(), CurveClass::NearlyFree { d1: 1, d2: 4 });
        let r = deformation_report(&p, Some(&[named_type("T(4,5)").unwrap()])).unwrap();
        assert_eq!(r.ea_tangent_dim, 8);
        assert_eq!(r.expected_dim, 8);
        assert_eq!((r.es_lower, r.es_upper, r.es_tight), (Some(8), Some(9), Some(true)));

        let p = prof("y^6+x^5*z");
        let r = deformation_report(&p, Some(&[named_type("T(5,6)").unwrap()])).unwrap();
        assert_eq!(r.ea_tangent_dim, 8);
        assert_eq!((r.es_lower, r.es_upper, r.es_tight), (Some(8), Some(11), Some(false)));
        assert!(!r.unobstructed);
    }

    #[test]
    fn tau_budget() {
        let p = prof("y^5+x^4*z");
        let err = deformation_report(&p, Some(&[named_type("A_2").unwrap()])).unwrap_err();
        assert_eq!(err, Error::TauBudgetMismatch { local: 2, global: 12 });
        let lines = prof("x*y*z*(x+y+z)");
        assert!(deformation_report(&lines, Some(&parse_local_list("A_1×6").unwrap())).is_ok());
    }

    #[test]
    fn rigidity_cases() {
        let v = rigidity_case_check(&prof("x^2+y^2+z^2")).unwrap();
        assert!(v.rigid && v.consistent);
        assert_eq!(v.case.as_deref(), Some("iii"));
        let p = prof("y^4-x*z^3");
        assert_eq!((p.ar_at(1), p.n_at(4)), (1, 1));
        let v = rigidity_case_check(&p).unwrap();
        assert!(!v.rigid && v.consistent);
        let p = prof("y^4-x*z^3-y^3*z");
        assert_eq!(p.mdr, 2);
        let v = rigidity_case_check(&p).unwrap();
        assert_eq!(v.case.as_deref(), Some("ii"));
        assert!(v.rigid && v.consistent);
        assert!(rigidity_case_check(&prof("x*y*z")).is_err());
    }

    #[test]
    fn mdr_zero_is_refused() {
        let p = prof("x*y*(x+y)");
        assert_eq!(classify(&p), Err(Error::MdrZero));
        assert_eq!(deformation_report(&p, None), Err(Error::MdrZero));
    }

    #[test]
    fn pencils() {
        let f = Poly::parse("y^5+x^4*z").unwrap();
        let ts = [Rat::from_integer(0.into()), Rat::from_integer(1.into())];
        let rows = analyze_pencil(&f, &Poly::parse("x^3*y^2").unwrap(), &ts, C).unwrap();
        let (p0, c0) = rows[0].result.as_ref().unwrap();
        assert_eq!(p0, &profile(&f, C).unwrap());
        assert!(c0.is_nearly_free());
        let (p1, c1) = rows[1].result.as_ref().unwrap();
        assert_eq!((c1, p1.tau), (&CurveClass::Free { d1: 2, d2: 2 }, 12));
        let bad = analyze_pencil(&Poly::parse("x^2*y^2").unwrap(), &Poly::parse("z^4").unwrap(), &ts, C).unwrap();
        assert!(matches!(bad[0].result, Err(Error::NonReducedCurve { .. })));
        assert!(bad[1].result.is_ok());
        assert!(analyze_pencil(&f, &Poly::parse("x^2").unwrap(), &ts, C).is_err());
    }

    #[test]
    fn bound_flags() {
        let p = prof("x*y*z");
        let c = classify(&p).unwrap();
        let flags = degree_bound_flags(&p, &c, &CurveHints { irreducible: Some(false), nodal: None });
        assert!(flags.iter().all(|f| f.code != "free-irreducible-mdr"));
        let p = prof("x*y*z*(x+y+z)");
        let c = classify(&p).unwrap();
        let flags = degree_bound_flags(&p, &c, &CurveHints { irreducible: Some(false), nodal: Some(true) });
        let nodal = flags.iter().find(|f| f.code == "nodal-mdr").unwrap();
        assert!(nodal.consistent);
        assert!(flags.iter().all(|f| f.consistent));
    }

    #[test]
    fn free_degree_nine_unobstructed_is_flagged() {
        let fake = JacobianProfile { d: 9, mdr: 5, ..prof("x*y*z") };
        let flags = degree_bound_flags(&fake, &CurveClass::Free { d1: 5, d2: 3 }, &CurveHints::default());
        assert!(flags.iter().any(|f| f.code == "free-unobstructed-degree" && !f.consistent));
    }
}
