use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::{parse_poly, Monomial, Poly, Rat, UniPoly};
use crate::error::{Error, Result};

/// Homogeneous polynomial of degree `n` in `(s, t)`; `coeffs[i]`
/// multiplies `s^(n-i) t^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs n+1 coefficients");
        BinaryForm { degree: coeffs.len() - 1, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![Rat::zero(); degree + 1])
    }

    /// `c * s^i t^j`.
    pub fn monomial(i: usize, j: usize, c: Rat) -> Self {
        let mut f = Self::zero(i + j);
        f.coeffs[j] = c;
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::new(vec![Rat::from_integer(1.into())]);
        for _ in 0..n {
            result = &result * self;
        }
        result
    }

    /// Set `s = 1`, giving a polynomial in `t`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// `s^n q(t/s)` for a polynomial `q` in `t` with `deg q <= n`.
    pub fn homogenize(q: &UniPoly, n: usize) -> Result<Self> {
        let deg = q.degree().unwrap_or(0);
        if deg > n {
            return Err(Error::HomogenizeDegree { requested: n, actual: deg });
        }
        Ok(Self::new((0..=n).map(|i| q.coeff(i)).collect()))
    }

    /// Exact division by `s^k`.
    pub fn div_s_pow(&self, k: usize) -> Result<Self> {
        if k > self.degree || self.coeffs[self.degree + 1 - k..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("form not divisible by s^{k}")));
        }
        Ok(Self::new(self.coeffs[..=self.degree - k].to_vec()))
    }

    /// Whether the forms have no common factor (no common zero on P^1).
    pub fn coprime(forms: &[&BinaryForm]) -> bool {
        // a common factor s shows up as a vanishing t^n coefficient
        if forms.iter().all(|f| f.coeffs[f.degree].is_zero()) {
            return false;
        }
        let g = forms
            .iter()
            .fold(UniPoly::zero(), |g, f| g.gcd(&f.dehomogenize()));
        g.degree() == Some(0)
    }

    /// As a polynomial with `s` in the `x` slot and `t` in the `y` slot.
    pub fn to_poly(&self) -> Poly {
        let n = self.degree as u32;
        Poly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(n - i as u32, i as u32, 0), c.clone())),
        )
    }

    /// Read back a homogeneous polynomial in the `x`/`y` slots.
    pub fn from_poly(p: &Poly, degree: usize) -> Result<Self> {
        let mut f = Self::zero(degree);
        for (m, c) in p.terms() {
            if m.0[2] != 0 || m.degree() != degree {
                return Err(Error::NotHomogeneous);
            }
            f.coeffs[m.0[1] as usize] = c.clone();
        }
        Ok(f)
    }

    /// Parse with variables `s, t`; the degree is read off the input.
    pub fn parse(text: &str) -> Result<Self> {
        let p = parse_poly(text, &["s", "t"])?;
        let d = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        Self::from_poly(&p, d)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_poly().display_with(&["s", "t"]).fmt(f)
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm[{}]({self})", self.degree)
    }
}

impl Add for &BinaryForm {
    type Output = BinaryForm;
    fn add(self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        BinaryForm::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &BinaryForm {
    type Output = BinaryForm;
    fn sub(self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, rhs.degree, "subtracting forms of different degree");
        BinaryForm::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;
    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        let mut v = vec![Rat::zero(); self.degree + rhs.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        BinaryForm::new(v)
    }
}
