//! Weighted-homogeneous plane germs `T(p, q): u^p + v^q = 0`.
//!
//! The equisingular ideal of `T(p, q)` is generated by `u^(p-1)`, `v^(q-1)`
//! and the monomials `u^a v^b` with `aq + bp >= pq`, so `tau_es` counts the
//! monomials strictly below that staircase.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TpqSing {
    pub p: usize,
    pub q: usize,
    pub mu: usize,
    pub tau_es: usize,
    pub m_es: usize,
    pub modality: usize,
}

impl TpqSing {
    /// Tjurina number; equal to `mu` for quasi-homogeneous germs.
    pub fn tau(&self) -> usize {
        self.mu
    }

    /// `A_n`, `D_4` and `E_6`.
    pub fn is_simple(&self) -> bool {
        self.p == 2 || (self.p == 3 && self.q <= 4)
    }

    /// Conventional name: `A_n`, `D4`, `E6`, otherwise `T(p,q)`.
    pub fn name(&self) -> String {
        match (self.p, self.q) {
            (2, q) => format!("A_{}", q - 1),
            (3, 3) => "D4".into(),
            (3, 4) => "E6".into(),
            (p, q) => format!("T({p},{q})"),
        }
    }
}

impl fmt::Display for TpqSing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn tpq_invariants(p: usize, q: usize) -> Result<TpqSing> {
    if p < 2 || q < p {
        return Err(Error::InvalidParameter(format!(
            "T(p,q) needs 2 <= p <= q, got ({p},{q})"
        )));
    }
    let mu = (p - 1) * (q - 1);
    let tau_es = (0..=p - 2)
        .map(|a| (0..=q - 2).filter(|&b| a * q + b * p < p * q).count())
        .sum::<usize>();
    let m_es = mu - tau_es;
    Ok(TpqSing { p, q, mu, tau_es, m_es, modality: m_es })
}

/// Resolve `A_n`, `D4`, `E6` or `T(p,q)`.
pub fn named_type(name: &str) -> Result<TpqSing> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    let unsupported = || Error::UnsupportedGermType(name.to_string());
    let num = |t: &str| t.parse::<usize>().map_err(|_| unsupported());
    if let Some(n) = s.strip_prefix("A_").or_else(|| s.strip_prefix('A')) {
        let n = num(n)?;
        if n == 0 {
            return Err(unsupported());
        }
        return tpq_invariants(2, n + 1);
    }
    match s.as_str() {
        "D4" | "D_4" => return tpq_invariants(3, 3),
        "E6" | "E_6" => return tpq_invariants(3, 4),
        _ => {}
    }
    if let Some(inner) = s.strip_prefix("T(").and_then(|r| r.strip_suffix(')')) {
        let (a, b) = inner.split_once(',').ok_or_else(unsupported)?;
        return tpq_invariants(num(a)?, num(b)?);
    }
    Err(unsupported())
}

/// Parse a comma-separated germ list; an entry may carry a repetition
/// suffix such as `A_1×7` or `A_1*7`.
pub fn parse_local_list(text: &str) -> Result<Vec<TpqSing>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    let mut pieces = Vec::new();
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                pieces.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&text[start..]);
    for piece in pieces.into_iter().map(str::trim).filter(|p| !p.is_empty()) {
        let (base, count) = match piece.rsplit_once(['×', '*', 'x']) {
            Some((b, n)) if !b.is_empty() && n.trim().chars().all(|c| c.is_ascii_digit()) && !n.trim().is_empty() => {
                (b.trim(), n.trim().parse::<usize>().map_err(|_| Error::UnsupportedGermType(piece.into()))?)
            }
            _ => (piece, 1),
        };
        let germ = named_type(base)?;
        out.extend(std::iter::repeat_n(germ, count));
    }
    Ok(out)
}

impl FromStr for TpqSing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        named_type(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Standard monomials of the ideal generated by `u^(p-1)`, `v^(q-1)`
    /// and the monomials `u^a v^b` with `aq + bp >= pq`, by explicit
    /// enumeration of minimal generators and divisibility tests.
    fn staircase_count(p: usize, q: usize) -> usize {
        let mut gens: BTreeSet<(usize, usize)> = BTreeSet::new();
        gens.insert((p - 1, 0));
        gens.insert((0, q - 1));
        for a in 0..=p {
            for b in 0..=q {
                if a * q + b * p >= p * q {
                    gens.insert((a, b));
                }
            }
        }
        let in_ideal = |a: usize, b: usize| gens.iter().any(|&(ga, gb)| ga <= a && gb <= b);
        let mut count = 0;
        for a in 0..2 * p {
            for b in 0..2 * q {
                if !in_ideal(a, b) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn tabulated_germs() {
        let t = tpq_invariants(4, 5).unwrap();
        assert_eq!((t.mu, t.tau_es, t.m_es), (12, 11, 1));
        let t = tpq_invariants(5, 6).unwrap();
        assert_eq!((t.mu, t.tau_es, t.m_es), (20, 17, 3));
        let t = tpq_invariants(2, 3).unwrap();
        assert_eq!((t.mu, t.m_es), (2, 0));
    }

    #[test]
    fn staircase_agrees_with_closed_form() {
        for p in 2..=12 {
            for q in p..=12 {
                assert_eq!(tpq_invariants(p, q).unwrap().tau_es, staircase_count(p, q), "T({p},{q})");
            }
        }
    }

    #[test]
    fn simple_germs_have_no_modality() {
        for n in 1..=20 {
            assert_eq!(named_type(&format!("A_{n}")).unwrap().m_es, 0);
        }
        assert_eq!(named_type("D4").unwrap().m_es, 0);
        assert_eq!(named_type("E6").unwrap().m_es, 0);
    }

    #[test]
    fn tau_es_monotone_in_q() {
        for p in 2..=10 {
            let mut last = 0;
            for q in p..=20 {
                let t = tpq_invariants(p, q).unwrap().tau_es;
                assert!(t >= last);
                last = t;
            }
        }
    }

    #[test]
    fn names() {
        assert_eq!(named_type("A_1").unwrap().mu, 1);
        assert_eq!(named_type("D4").unwrap().mu, 4);
        assert_eq!(named_type("T(4,5)").unwrap().name(), "T(4,5)");
        assert_eq!(named_type("T(2,5)").unwrap().name(), "A_4");
        for bad in ["E7", "E8", "D5", "D_6", "A_0", "T(5,4)", "Q"] {
            assert!(named_type(bad).is_err(), "{bad}");
        }
        assert!(matches!(named_type("E7"), Err(Error::UnsupportedGermType(_))));
    }

    #[test]
    fn local_lists_with_repetition() {
        let l = parse_local_list("D4,D4,D4,A_1×7").unwrap();
        assert_eq!(l.len(), 10);
        assert_eq!(l.iter().map(TpqSing::tau).sum::<usize>(), 19);
        assert_eq!(parse_local_list("A_2, T(4,5)").unwrap().len(), 2);
        assert_eq!(parse_local_list("A_1*3").unwrap().len(), 3);
    }
}
