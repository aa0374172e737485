//! Exact rational polynomials.
//!
//! [`Poly`] is a sparse polynomial in the three projective coordinates
//! `x, y, z`; [`UniPoly`] and [`BinaryForm`] carry the one-variable and
//! binary-form objects used by the curve-family constructions. All
//! coefficients are exact rationals.

mod binary;
mod parse;
mod uni;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use binary::BinaryForm;
pub use parse::{parse_expr, parse_poly};
pub use uni::UniPoly;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Default names of the three projective coordinates.
pub const XYZ: [&str; 3] = ["x", "y", "z"];

/// Exponent vector `x^a y^b z^c`.
///
/// Ordered graded-lexicographically with `x > y > z`, so the largest
/// monomial of a polynomial is its leading term.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| {
            Monomial([
                other.0[0] - self.0[0],
                other.0[1] - self.0[1],
                other.0[2] - self.0[2],
            ])
        })
    }

    fn write_with(&self, f: &mut fmt::Formatter<'_>, names: &[&str]) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x, y, z` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn term(m: Monomial, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// The `i`-th coordinate (0 = x, 1 = y, 2 = z).
    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), Rat::one())
    }

    pub fn x() -> Self {
        Self::var(0)
    }
    pub fn y() -> Self {
        Self::var(1)
    }
    pub fn z() -> Self {
        Self::var(2)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` if every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Whether `i`-th variable occurs.
    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.0[i] -= 1;
            out.add_term(dm, c * BigInt::from(e));
        }
        out
    }

    /// `[f_x, f_y, f_z]`.
    pub fn gradient(&self) -> [Poly; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    /// Checks `x f_x + y f_y + z f_z = d f` for homogeneous `f` of degree `d`.
    pub fn euler_check(&self) -> bool {
        let Some(d) = self.homogeneous_degree() else {
            return self.is_zero();
        };
        let [fx, fy, fz] = self.gradient();
        let lhs = &(&(&Poly::x() * &fx) + &(&Poly::y() * &fy)) + &(&Poly::z() * &fz);
        lhs == self.scale(&int(d as i64))
    }

    /// Substitute polynomials for `x, y, z`.
    pub fn substitute(&self, images: [&Poly; 3]) -> Poly {
        let mut cache: [Vec<Poly>; 3] = [vec![Poly::one()], vec![Poly::one()], vec![Poly::one()]];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for i in 0..3 {
                let e = m.0[i] as usize;
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap() * images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e];
            }
            out = &out + &t;
        }
        out
    }

    /// Substitute univariate polynomials for `x, y, z`.
    pub fn eval_uni(&self, images: [&UniPoly; 3]) -> UniPoly {
        let mut out = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (e, img) in m.0.iter().zip(images) {
                if *e > 0 {
                    t = &t * &img.pow(*e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Set variable `i` to 1.
    pub fn dehomogenize(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut k = *m;
            k.0[i] = 0;
            out.add_term(k, c.clone());
        }
        out
    }

    /// Homogenize to degree `degree` using variable `i`. Variable `i`
    /// must not occur in `self`.
    pub fn homogenize(&self, i: usize, degree: usize) -> Result<Poly> {
        let actual = self.degree().unwrap_or(0);
        if actual > degree {
            return Err(Error::HomogenizeDegree { requested: degree, actual });
        }
        if self.uses_var(i) {
            return Err(Error::InvalidParameter(format!(
                "homogenizing variable {} already occurs",
                XYZ[i]
            )));
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut k = *m;
            k.0[i] = (degree - m.degree()) as u32;
            out.add_term(k, c.clone());
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`; errors when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (lm, lc) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let (lm, lc) = (*lm, lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let Some(q) = lm.quotient_of(m) else {
                return Err(Error::InexactDivision(format!(
                    "leading term of remainder not divisible ({} terms left)",
                    rem.len()
                )));
            };
            let qc = c / &lc;
            rem = &rem - &divisor.mul_monomial(&q).scale(&qc);
            quot.add_term(q, qc);
        }
        Ok(quot)
    }

    /// Multiply through so that all coefficients are coprime integers with a
    /// positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        let Some((_, lc)) = self.leading_term() else {
            return Poly::zero();
        };
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut s = Rat::new(den, num);
        if lc.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            Some((_, lc)) => self.scale(&lc.recip()),
            None => Poly::zero(),
        }
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }

    pub fn parse(text: &str) -> Result<Poly> {
        parse_poly(text, &XYZ)
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [&'a str],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.write_with(f, self.names)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&XYZ).fmt(f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rat::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Poly { terms: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::str::FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Poly> {
        Poly::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn grlex_order() {
        let mut ms = vec![
            Monomial::new(0, 0, 2),
            Monomial::new(1, 0, 0),
            Monomial::new(0, 1, 1),
            Monomial::new(2, 0, 0),
            Monomial::new(1, 1, 0),
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                Monomial::new(1, 0, 0),
                Monomial::new(0, 0, 2),
                Monomial::new(0, 1, 1),
                Monomial::new(1, 1, 0),
                Monomial::new(2, 0, 0),
            ]
        );
    }

    #[test]
    fn partials_of_unicuspidal_quintic() {
        let f = p("y^5+x^4*z");
        assert_eq!(f.partial(0), p("4*x^3*z"));
        assert_eq!(f.partial(1), p("5*y^4"));
        assert_eq!(f.partial(2), p("x^4"));
    }

    #[test]
    fn euler_relation() {
        for s in ["y^5+x^4*z", "x*y*z", "x^9+z*(x*z^3+y^4)^2"] {
            assert!(p(s).euler_check(), "{s}");
        }
    }

    #[test]
    fn dehomogenize_and_back() {
        let f = p("y^5+x^4*z");
        let g = f.dehomogenize(2);
        assert_eq!(g, p("y^5+x^4"));
        assert_eq!(g.homogenize(2, 5).unwrap(), f);
        assert!(matches!(
            g.homogenize(2, 4),
            Err(Error::HomogenizeDegree { requested: 4, actual: 5 })
        ));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("x^2").exact_div(&p("x")).unwrap(), p("x"));
        let f = p("x^3-y^3");
        assert_eq!(f.exact_div(&p("x-y")).unwrap(), p("x^2+x*y+y^2"));
        assert!(matches!(p("x^2+1").exact_div(&p("x")), Err(Error::InexactDivision(_))));
        assert!(matches!(p("x").exact_div(&Poly::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_is_grlex_descending() {
        let f = p("x^2*y^2+y^2*z^2+x^2*z^2-2*x*y*z*(x+y+z)");
        assert_eq!(f.len(), 6);
        assert_eq!(
            f.to_string(),
            "x^2*y^2-2*x^2*y*z+x^2*z^2-2*x*y^2*z-2*x*y*z^2+y^2*z^2"
        );
        assert_eq!(p("36/11*x*y^3-1").to_string(), "36/11*x*y^3-1");
    }

    #[test]
    fn primitive_clears_denominators() {
        let f = p("1/2*x^2-3/4*y^2");
        assert_eq!(f.primitive(), p("2*x^2-3*y^2"));
        assert_eq!(p("-2*x+4*y").primitive(), p("x-2*y"));
    }

    #[test]
    fn substitute_linear_change() {
        let f = p("x^2-y*z");
        let g = f.substitute([&p("x+y"), &p("y"), &p("z")]);
        assert_eq!(g, p("x^2+2*x*y+y^2-y*z"));
    }
}
