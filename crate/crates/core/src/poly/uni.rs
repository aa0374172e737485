use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{parse_poly, Monomial, Poly, Rat};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` multiplies `t^i`.
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * t^n`.
    pub fn monomial(n: usize, c: Rat) -> Self {
        let mut v = vec![Rat::zero(); n + 1];
        v[n] = c;
        Self::new(v)
    }

    /// `t`.
    pub fn t() -> Self {
        Self::monomial(1, Rat::one())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = UniPoly::one();
        for _ in 0..n {
            result = &result * self;
        }
        result
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Coefficients of `p(t + c)`, i.e. the Taylor coefficients of `p` at `c`.
    pub fn shift(&self, c: &Rat) -> Self {
        // Horner in the shifted variable.
        let lin = UniPoly::new(vec![c.clone(), Rat::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(), |acc, a| &(&acc * &lin) + &UniPoly::constant(a.clone()))
    }

    /// `t^n p(1/t)`; requires `n >= deg p`.
    pub fn reverse(&self, n: usize) -> Result<Self> {
        let deg = self.degree().unwrap_or(0);
        if deg > n {
            return Err(Error::HomogenizeDegree { requested: n, actual: deg });
        }
        let mut v = vec![Rat::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[n - i] = c.clone();
        }
        Ok(Self::new(v))
    }

    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((UniPoly::zero(), self.clone()));
        };
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let q = &rem[i + dd] / &lc;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Exact quotient; a nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("remainder {r}")));
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(lc) => a.scale(&lc.recip()),
            None => a,
        }
    }

    /// As a polynomial in the first coordinate slot.
    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(i as u32, 0, 0), c.clone())),
        )
    }

    pub fn from_poly(p: &Poly) -> Result<Self> {
        let mut v = Vec::new();
        for (m, c) in p.terms() {
            if m.0[1] != 0 || m.0[2] != 0 {
                return Err(Error::InvalidParameter("not univariate".into()));
            }
            let i = m.0[0] as usize;
            if v.len() <= i {
                v.resize(i + 1, Rat::zero());
            }
            v[i] = c.clone();
        }
        Ok(Self::new(v))
    }

    pub fn parse(text: &str, var: &str) -> Result<Self> {
        Self::from_poly(&parse_poly(text, &[var])?)
    }

    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(Poly, [&'a str; 1]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.display_with(&self.1).fmt(f)
            }
        }
        D(self.to_poly(), [var])
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("t").fmt(f)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> UniPoly {
        UniPoly::parse(s, "t").unwrap()
    }

    #[test]
    fn exact_division_by_square() {
        let q = u("3*t^4-4*t^3+1").exact_div(&u("(t-1)^2")).unwrap();
        assert_eq!(q, u("3*t^2+2*t+1"));
        assert!(u("t^2+1").exact_div(&u("t-1")).is_err());
    }

    #[test]
    fn reverse_is_t_power_times_reciprocal() {
        let x5 = UniPoly::parse("-u^6+u^5+u^4", "u").unwrap();
        assert_eq!(x5.reverse(6).unwrap(), u("t^2+t-1"));
        assert!(x5.reverse(5).is_err());
    }

    #[test]
    fn shift_gives_taylor_coefficients() {
        let p = u("t^3-3*t+2");
        let s = p.shift(&Rat::one());
        // (t+1)^3 - 3(t+1) + 2 = t^3 + 3t^2
        assert_eq!(s, u("t^3+3*t^2"));
    }

    #[test]
    fn gcd_is_monic() {
        let g = u("2*t^2-2").gcd(&u("3*t^2-6*t+3"));
        assert_eq!(g, u("t-1"));
        assert_eq!(u("t").gcd(&u("t+1")), UniPoly::one());
    }

    #[test]
    fn eval_and_derivative() {
        let g = u("3*t-4");
        assert_eq!(g.eval(&Rat::one()), Rat::from_integer((-1).into()));
        assert_eq!(g.derivative(), u("3"));
    }
}
