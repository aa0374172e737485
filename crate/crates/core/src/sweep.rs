//! Sweeps over family members comparing observed and predicted invariants.

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::jacobian::profile;
use crate::linalg::RankMode;
use crate::report::check_resources;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    PASS,
    FAIL,
    SKIPPED,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: String,
    pub degree: usize,
    pub predicted_d1: usize,
    pub observed_mdr: Option<usize>,
    pub predicted_tau: usize,
    pub observed_tau: Option<usize>,
    pub free: Option<bool>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Members of one family with parameter in `from..=to` (`d` for FZ1, where
/// every admissible `a` is included; `k` otherwise).
pub fn family_range(kind: &str, from: usize, to: usize) -> Result<Vec<Family>> {
    let mut out = Vec::new();
    for n in from..=to {
        match kind.to_ascii_lowercase().as_str() {
            "fz1" => out.extend(Family::fz1_all(n)),
            "fz2" => out.push(Family::FZ2 { k: n }),
            "fe" => out.push(Family::FE { k: n }),
            other => return Err(Error::InvalidParameter(format!("unknown family {other}"))),
        }
    }
    for f in &out {
        f.validate()?;
    }
    Ok(out)
}

/// Evaluate one member; resource refusals become `SKIPPED` rows.
pub fn sweep_one(family: Family, mode: RankMode, force: bool) -> SweepRow {
    let degree = family.degree();
    let (predicted_d1, predicted_tau) = match family.spec() {
        Ok(s) => (s.expected.mdr, s.expected.tau),
        Err(e) => return row_error(family, degree, 0, 0, Verdict::FAIL, e),
    };
    if let Err(e) = check_resources(degree, mode, force) {
        return row_error(family, degree, predicted_d1, predicted_tau, Verdict::SKIPPED, e);
    }
    let result = family.curve().and_then(|f| profile(&f, mode));
    match result {
        Err(e) => row_error(family, degree, predicted_d1, predicted_tau, Verdict::FAIL, e),
        Ok(p) => {
            let free = p.nu == 0 && p.mdr > 0;
            let pass = free && p.mdr == predicted_d1 && p.tau == predicted_tau && p.d == degree;
            SweepRow {
                family: family.to_string(),
                degree,
                predicted_d1,
                observed_mdr: Some(p.mdr),
                predicted_tau,
                observed_tau: Some(p.tau),
                free: Some(free),
                verdict: if pass { Verdict::PASS } else { Verdict::FAIL },
                note: None,
            }
        }
    }
}

fn row_error(family: Family, degree: usize, d1: usize, tau: usize, verdict: Verdict, e: Error) -> SweepRow {
    SweepRow {
        family: family.to_string(),
        degree,
        predicted_d1: d1,
        observed_mdr: None,
        predicted_tau: tau,
        observed_tau: None,
        free: None,
        verdict,
        note: Some(e.to_string()),
    }
}

/// Evaluate all members in parallel; rows keep the input order.
pub fn sweep(families: &[Family], mode: RankMode, force: bool) -> Vec<SweepRow> {
    families.par_iter().map(|&f| sweep_one(f, mode, force)).collect()
}

/// Whether every non-skipped row passed.
pub fn all_pass(rows: &[SweepRow]) -> bool {
    rows.iter().all(|r| r.verdict != Verdict::FAIL)
}

pub fn render(rows: &[SweepRow]) -> String {
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    let mut s = String::new();
    let _ = writeln!(s, "{:<16} {:>3} {:>8} {:>8} {:>8} {:>8} {:>5}  verdict", "family", "d", "d1 pred", "mdr obs", "tau pred", "tau obs", "free");
    for r in rows {
        let free = r.free.map_or("-".to_string(), |b| b.to_string());
        let _ = writeln!(
            s,
            "{:<16} {:>3} {:>8} {:>8} {:>8} {:>8} {:>5}  {}",
            r.family,
            r.degree,
            r.predicted_d1,
            opt(r.observed_mdr),
            r.predicted_tau,
            opt(r.observed_tau),
            free,
            r.verdict
        );
        if let Some(n) = &r.note {
            let _ = writeln!(s, "    {n}");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let fams = family_range("fz1", 5, 6).unwrap();
        assert_eq!(fams.len(), 3);
        let rows = sweep(&fams, RankMode::Probabilistic { seed: 9 }, false);
        assert!(rows.iter().all(|r| r.verdict == Verdict::PASS), "{}", render(&rows));
        assert_eq!(rows[0].family, "FZ1(d=5,a=2)");
    }

    #[test]
    fn oversized_members_are_skipped() {
        let row = sweep_one(Family::FZ2 { k: 8 }, RankMode::Certified, false);
        assert_eq!(row.verdict, Verdict::SKIPPED);
        assert!(all_pass(&[row]));
        assert!(family_range("fz3", 1, 2).is_err());
        assert!(family_range("fe", 4, 4).is_err());
    }
}
