//! Tricuspidal rational curves: the three infinite series FZ1, FZ2, FE and
//! the classical quartic and quintics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::classify::CurveClass;
use crate::error::{Error, Result};
use crate::linalg::{solve_linear, ExactMatrix, RankMode};
use crate::poly::{int, rat, BinaryForm, Monomial, Poly, Rat, UniPoly};

/// A rational map `(s : t) -> (A : B : C)` by binary forms of equal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    pub a: BinaryForm,
    pub b: BinaryForm,
    pub c: BinaryForm,
}

impl Parametrization {
    /// Checks equal degrees, absence of base points and that the image is
    /// not a point.
    pub fn new(a: BinaryForm, b: BinaryForm, c: BinaryForm) -> Result<Self> {
        let n = a.degree();
        for f in [&b, &c] {
            if f.degree() != n {
                return Err(Error::DegreeMismatch { expected: n, found: f.degree() });
            }
        }
        if !BinaryForm::coprime(&[&a, &b, &c]) {
            return Err(Error::BasePoints);
        }
        let rows: Vec<Vec<Rat>> = [&a, &b, &c].iter().map(|f| f.coeffs().to_vec()).collect();
        if ExactMatrix::from_rows(rows).rank(RankMode::Certified)? < 2 {
            return Err(Error::InvalidParameter("components are proportional".into()));
        }
        Ok(Parametrization { a, b, c })
    }

    pub fn degree(&self) -> usize {
        self.a.degree()
    }

    pub fn components(&self) -> [&BinaryForm; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// `f(A, B, C)` as a binary form of degree `deg f * deg self`.
    pub fn pull_back(&self, f: &Poly) -> Result<BinaryForm> {
        let e = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let [a, b, c] = self.components().map(BinaryForm::to_poly);
        BinaryForm::from_poly(&f.substitute([&a, &b, &c]), e * self.degree())
    }

    /// Image under the linear substitution `(s, t) -> (p s + q t, r s + u t)`.
    pub fn reparametrize(&self, m: [[Rat; 2]; 2]) -> Result<Self> {
        let s = Poly::from_terms([(Monomial::new(1, 0, 0), m[0][0].clone()), (Monomial::new(0, 1, 0), m[0][1].clone())]);
        let t = Poly::from_terms([(Monomial::new(1, 0, 0), m[1][0].clone()), (Monomial::new(0, 1, 0), m[1][1].clone())]);
        let z = Poly::zero();
        let n = self.degree();
        let map = |f: &BinaryForm| BinaryForm::from_poly(&f.to_poly().substitute([&s, &t, &z]), n);
        Parametrization::new(map(&self.a)?, map(&self.b)?, map(&self.c)?)
    }
}

impl fmt::Display for Parametrization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.a, self.b, self.c)
    }
}

fn form(text: &str) -> BinaryForm {
    BinaryForm::parse(text).expect("built-in form")
}

fn falling_factorial(x: &Rat, k: usize) -> Rat {
    (0..k).fold(Rat::one(), |acc, i| acc * (x - int(i as i64)))
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `h(t) = sum_{k <= d-3} a_k/k! (t-1)^k` with `a_k` the falling factorial of `a - 1/2`.
pub fn fz1_h(d: usize, a: usize) -> UniPoly {
    let a1 = int(a as i64) - rat(1, 2);
    let t1 = UniPoly::t().shift(&int(-1));
    (0..=d - 3).fold(UniPoly::zero(), |acc, k| {
        let c = falling_factorial(&a1, k) / Rat::from_integer(factorial(k));
        &acc + &t1.pow(k as u32).scale(&c)
    })
}

fn check_fz1(d: usize, a: usize) -> Result<usize> {
    let b = (d as i64) - 2 - a as i64;
    if d < 5 || b < 1 || b > a as i64 {
        return Err(Error::InvalidParameter(format!(
            "FZ1 needs d >= 5 and 1 <= b = d-2-a <= a, got d = {d}, a = {a}"
        )));
    }
    Ok(b as usize)
}

/// The FZ1 curve of degree `d` with cusp parameter `a`.
pub fn fz1_curve(d: usize, a: usize) -> Result<Poly> {
    let b = check_fz1(d, a)?;
    let h = fz1_h(d, a);
    // g(x, y) = y^(d-3) h(x/y)
    let g = Poly::from_terms(
        (0..=d - 3).map(|i| (Monomial::new(i as u32, (d - 3 - i) as u32, 0), h.coeff(i))),
    );
    let (x, y) = (Poly::x(), Poly::y());
    let xy = &x - &y;
    let base = xy.pow(d as u32 - 2);
    let inner = &base - &(&(&x * &y) * &g);
    let lead = Poly::term(Monomial::new(2 * a as u32 + 1, 2 * b as u32 + 1, 0), int(1));
    let num = &lead - &inner.pow(2);
    let affine = num.exact_div(&base)?;
    if affine.degree() != Some(d) {
        return Err(Error::Invariant(format!("FZ1 affine equation has degree {:?}", affine.degree())));
    }
    affine.homogenize(2, d)
}

fn check_k(k: usize, min: usize, family: &str) -> Result<()> {
    if k < min {
        return Err(Error::InvalidParameter(format!("{family} needs k >= {min}, got {k}")));
    }
    Ok(())
}

/// Taylor coefficients of `p` at `c` of orders `lo..=hi`.
fn taylor(p: &UniPoly, c: i64, lo: usize, hi: usize) -> Vec<Rat> {
    let shifted = p.shift(&int(c));
    (lo..=hi).map(|i| shifted.coeff(i)).collect()
}

/// The binary form `q_k` of degree `2k-6` in the FZ2 parametrization.
pub fn fz2_q(k: usize) -> Result<BinaryForm> {
    check_k(k, 4, "FZ2")?;
    let t = UniPoly::t();
    let t3 = t.pow(3);
    let w = UniPoly::from_ints(&[2, -3, 0, 1]); // t^3 - 3t + 2 = (t-1)^2 (t+2)
    let mut basis: Vec<UniPoly> = Vec::new();
    if k >= 5 {
        for i in 0..=k - 5 {
            basis.push(&t3.pow(i as u32) * &w.pow((k - 5 - i) as u32));
        }
    }
    for j in 0..=2 * k - 7 {
        basis.push(t.pow((3 * (k - 4) + j) as u32));
    }
    let n = basis.len();
    debug_assert_eq!(n, 3 * k - 10);
    let cols: Vec<Vec<Rat>> = basis
        .iter()
        .map(|p| {
            let mut col = Vec::new();
            if k >= 5 {
                col.extend(taylor(p, -2, 0, k - 5));
                col.extend(taylor(p, 1, 0, 2 * k - 9));
            }
            let at1 = taylor(p, 1, 2 * k - 8, 2 * k - 7);
            col.push(at1[0].clone());
            col.push(&at1[1] * int(3) - &at1[0] * int(k as i64 - 4));
            col
        })
        .collect();
    let m = ExactMatrix::from_columns(&cols, n);
    let mut rhs = vec![Rat::zero(); n - 2];
    let three = BigInt::from(3);
    rhs.push(-Rat::from_integer(three.pow(k as u32 - 4)));
    rhs.push(Rat::from_integer(three.pow(k as u32 - 2)));
    let sol = solve_linear(&m, &rhs)?;
    let a = basis
        .iter()
        .zip(&sol)
        .fold(UniPoly::zero(), |acc, (p, c)| &acc + &p.scale(c));
    let h = a.exact_div(&w.pow(k as u32 - 4))?;
    if h.eval(&int(1)) != int(-1) || h.derivative().eval(&int(1)) != int(3) {
        return Err(Error::Invariant("FZ2 normalization of h fails".into()));
    }
    let q1 = (&(&t3 * &h) + &UniPoly::one()).exact_div(&UniPoly::from_ints(&[1, -2, 1]))?;
    BinaryForm::homogenize(&q1, 2 * k - 6)
}

/// `(s^(2k-4) t^3 : s^(2k-4) (s-t)^2 (2s+t) : t^3 (s-t)^2 q_k)`, degree `2k-1`.
pub fn fz2_param(k: usize) -> Result<Parametrization> {
    let q = fz2_q(k)?;
    let one = int(1);
    let s_pow = BinaryForm::monomial(2 * k - 4, 0, one.clone());
    let t3 = BinaryForm::monomial(0, 3, one);
    let st2 = form("s-t").pow(2);
    Parametrization::new(
        &s_pow * &t3,
        &(&s_pow * &st2) * &form("2*s+t"),
        &(&t3 * &st2) * &q,
    )
    .map_err(internal)
}

fn internal(e: Error) -> Error {
    match e {
        Error::BasePoints => Error::Invariant("family parametrization has base points".into()),
        e => e,
    }
}

/// `X_k(u)` from `X_4 = 2u^2 - u^3` and `X_{k+1} = u^4 (X_k(u) - X_k(1)) / (u - 1)`.
pub fn fe_x(k: usize) -> Result<UniPoly> {
    check_k(k, 4, "FE recursion")?;
    let u4 = UniPoly::monomial(4, int(1));
    let u_minus_1 = UniPoly::from_ints(&[-1, 1]);
    let mut x = UniPoly::from_ints(&[0, 0, 2, -1]);
    for _ in 4..k {
        let x1 = x.eval(&int(1));
        x = (&u4 * &(&x - &UniPoly::constant(x1))).exact_div(&u_minus_1)?;
    }
    if x.degree() != Some(3 * (k - 3)) {
        return Err(Error::Invariant(format!("deg X_{k} = {:?}", x.degree())));
    }
    if k >= 5 && (0..4).any(|i| !x.coeff(i).is_zero()) {
        return Err(Error::InexactDivision(format!("X_{k} is not divisible by u^4")));
    }
    Ok(x)
}

/// The binary form `q~_k` of degree `3k-13` in the FE parametrization.
pub fn fe_q(k: usize) -> Result<BinaryForm> {
    check_k(k, 5, "FE")?;
    let n = 3 * (k - 3);
    let y = fe_x(k)?.reverse(n)?;
    BinaryForm::homogenize(&y, n)?.div_s_pow(4)
}

/// `(t^(3k-6) (t-s) : s^8 q~_k : s^4 t^(3k-9))`, degree `3k-5`.
pub fn fe_param(k: usize) -> Result<Parametrization> {
    let q = fe_q(k)?;
    let one = int(1);
    Parametrization::new(
        &BinaryForm::monomial(0, 3 * k - 6, one.clone()) * &form("t-s"),
        &BinaryForm::monomial(8, 0, one.clone()) * &q,
        BinaryForm::monomial(4, 3 * k - 9, one),
    )
    .map_err(internal)
}

/// The classical curves with at least three cusps in degree 4 and 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassicName {
    C4,
    C5,
    C5p,
    C5pp,
}

impl ClassicName {
    pub const ALL: [ClassicName; 4] = [ClassicName::C4, ClassicName::C5, ClassicName::C5p, ClassicName::C5pp];

    pub fn degree(self) -> usize {
        if self == ClassicName::C4 {
            4
        } else {
            5
        }
    }
}

impl fmt::Display for ClassicName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicName::C4 => "C4",
            ClassicName::C5 => "C5",
            ClassicName::C5p => "C5'",
            ClassicName::C5pp => "C5''",
        })
    }
}

impl FromStr for ClassicName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "C4" => ClassicName::C4,
            "C5" => ClassicName::C5,
            "C5'" | "C5p" => ClassicName::C5p,
            "C5''" | "C5pp" => ClassicName::C5pp,
            other => return Err(Error::InvalidParameter(format!("unknown classic curve {other}"))),
        })
    }
}

/// A classical parametrization, with its printed equation where one exists.
pub struct Classic {
    pub name: ClassicName,
    pub param: Parametrization,
    pub printed: Option<Poly>,
}

pub fn classic(name: ClassicName) -> Classic {
    let (a, b, c, printed) = match name {
        ClassicName::C4 => (
            "s^3*t-1/2*s^4",
            "s^2*t^2",
            "t^4-2*s*t^3",
            Some("x^2*y^2+y^2*z^2+x^2*z^2-2*x*y*z*(x+y+z)"),
        ),
        ClassicName::C5 => (
            "s^4*t-1/2*s^5",
            "s^3*t^2",
            "-3/2*s*t^4+t^5",
            Some("9*x*y^4-4*y^5-24*x^2*y^2*z+48*x*y^3*z-16*y^4*z+16*x^3*z^2"),
        ),
        ClassicName::C5p => (
            "s^4*t-s^5",
            "s^2*t^3-5/32*s^5",
            "-125/128*s^5-25/16*s^3*t^2-5*s*t^4+t^5",
            None,
        ),
        ClassicName::C5pp => (
            "s^4*t",
            "s^2*t^3-s^5",
            "t^5+2*s^3*t^2",
            Some("-27*x^5+2*x^2*y^3-18*x^3*y*z+y^4*z-2*x*y^2*z^2+x^2*z^3"),
        ),
    };
    Classic {
        name,
        param: Parametrization::new(form(a), form(b), form(c)).expect("classical parametrization"),
        printed: printed.map(|p| Poly::parse(p).expect("printed equation")),
    }
}

/// One member of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Family {
    FZ1 { d: usize, a: usize },
    FZ2 { k: usize },
    FE { k: usize },
    Classic { name: ClassicName },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::FZ1 { d, a } => write!(f, "FZ1(d={d},a={a})"),
            Family::FZ2 { k } => write!(f, "FZ2(k={k})"),
            Family::FE { k } => write!(f, "FE(k={k})"),
            Family::Classic { name } => write!(f, "{name}"),
        }
    }
}

/// Predicted invariants of a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub degree: usize,
    pub mdr: usize,
    pub tau: usize,
    pub class: CurveClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub expected: Expected,
}

impl Family {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Family::FZ1 { d, a } => check_fz1(d, a).map(|_| ()),
            Family::FZ2 { k } => check_k(k, 4, "FZ2"),
            Family::FE { k } => check_k(k, 5, "FE"),
            Family::Classic { .. } => Ok(()),
        }
    }

    pub fn degree(&self) -> usize {
        match *self {
            Family::FZ1 { d, .. } => d,
            Family::FZ2 { k } => 2 * k - 1,
            Family::FE { k } => 3 * k - 5,
            Family::Classic { name } => name.degree(),
        }
    }

    pub fn spec(&self) -> Result<FamilySpec> {
        self.validate()?;
        let degree = self.degree();
        let free = |mdr: usize| CurveClass::Free { d1: mdr, d2: degree - 1 - mdr };
        let expected = match *self {
            Family::FZ1 { d, .. } => Expected { degree, mdr: 2, tau: d * d - 4 * d + 7, class: free(2) },
            Family::FZ2 { k } => Expected { degree, mdr: k - 1, tau: 3 * (k - 1) * (k - 1), class: free(k - 1) },
            Family::FE { k } => Expected {
                degree,
                mdr: k - 1,
                tau: 7 * (k - 2) * (k - 2) + 3 - k,
                class: free(k - 1),
            },
            Family::Classic { name: ClassicName::C4 } => {
                Expected { degree, mdr: 2, tau: 6, class: CurveClass::NearlyFree { d1: 2, d2: 2 } }
            }
            Family::Classic { .. } => Expected { degree, mdr: 2, tau: 12, class: free(2) },
        };
        Ok(FamilySpec { family: *self, expected })
    }

    /// The parametrization, when the family is given by one.
    pub fn parametrization(&self) -> Result<Option<Parametrization>> {
        self.validate()?;
        Ok(match *self {
            Family::FZ1 { .. } => None,
            Family::FZ2 { k } => Some(fz2_param(k)?),
            Family::FE { k } => Some(fe_param(k)?),
            Family::Classic { name } => Some(classic(name).param),
        })
    }

    /// The defining equation: constructed directly for FZ1, implicitized otherwise.
    pub fn curve(&self) -> Result<Poly> {
        match (*self, self.parametrization()?) {
            (Family::FZ1 { d, a }, _) => fz1_curve(d, a),
            (_, Some(p)) => Ok(crate::implicit::implicitize(&p, self.degree())?.f),
            (_, None) => unreachable!("only FZ1 lacks a parametrization"),
        }
    }

    /// All valid `a` for FZ1 curves of degree `d`.
    pub fn fz1_all(d: usize) -> Vec<Family> {
        ((d - 1) / 2..=d.saturating_sub(3))
            .filter(|&a| check_fz1(d, a).is_ok())
            .map(|a| Family::FZ1 { d, a })
            .collect()
    }
}
