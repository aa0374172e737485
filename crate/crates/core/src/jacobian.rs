//! Graded invariants of the Jacobian ideal of a reduced plane curve.
//!
//! For `f` homogeneous of degree `d` with Jacobian ideal `J_f = (f_x, f_y, f_z)`:
//!
//! * `hilb_k = dim (S/J_f)_k`,
//! * `ar(f)_m = dim AR(f)_m`, the syzygies `a f_x + b f_y + c f_z = 0` of degree `m`,
//! * `n(f)_k = dim (I_f/J_f)_k` where `I_f` is the saturation of `J_f`.
//!
//! Everything reduces to per-degree linear algebra. The saturation is
//! computed top-down: `N(f)` vanishes above `T = 3d-6`, so `(I_f)_k = (J_f)_k`
//! for `k >= 3d-5`, and below that `(I_f)_k = {g : x g, y g, z g in (I_f)_{k+1}}`.
//! Each degree is described by a set of linear functionals on `S_k` whose
//! common kernel is `(I_f)_k`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{DegreeBasis, Engine, IntegerEngine, ModEngine, RankMode};
use crate::poly::{Monomial, Poly, Rat};

/// The complete graded invariant record of one curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacobianProfile {
    pub d: usize,
    /// `T = 3d - 6`.
    pub t: usize,
    /// `dim M(f)_k` for `0 <= k <= 3d-4`.
    pub hilb: Vec<usize>,
    /// `n(f)_k` for `0 <= k <= T`.
    pub n_table: Vec<usize>,
    /// `ar(f)_m` for `0 <= m <= 2d`.
    pub ar_table: Vec<usize>,
    pub mdr: usize,
    /// Least `k` with `n(f)_k != 0`; absent for free curves.
    pub sigma: Option<usize>,
    pub nu: usize,
    pub tau: usize,
    pub mode: RankMode,
}

impl JacobianProfile {
    /// `dim M(f)_k` for any `k`; stable at `tau` from `3d-5` on.
    pub fn hilb_at(&self, k: usize) -> usize {
        self.hilb.get(k).copied().unwrap_or(self.tau)
    }

    /// `n(f)_k`, zero outside `[0, T]`.
    pub fn n_at(&self, k: usize) -> usize {
        self.n_table.get(k).copied().unwrap_or(0)
    }

    /// `ar(f)_m` from the identity `ar_m = 3 dim S_m - dim S_{m+d-1} + hilb_{m+d-1}`.
    pub fn ar_at(&self, m: usize) -> usize {
        ar_from_hilb(self.d, m, self.hilb_at(m + self.d - 1))
    }

    /// Check every structural invariant of the record.
    pub fn verify(&self) -> Result<()> {
        let d = self.d;
        let fail = |msg: String| Err(Error::Invariant(msg));
        if self.hilb.len() != 3 * d - 3 || self.n_table.len() != self.t + 1 {
            return fail("table lengths".into());
        }
        if self.hilb[3 * d - 5] != self.tau || self.hilb[3 * d - 4] != self.tau {
            return fail("Hilbert function does not stabilize at tau".into());
        }
        for k in 0..=self.t {
            if self.n_table[k] != self.n_table[self.t - k] {
                return fail(format!("self-duality fails: n_{k} != n_{}", self.t - k));
            }
        }
        match self.sigma {
            None => {
                if self.n_table.iter().any(|&n| n != 0) {
                    return fail("sigma absent but N(f) nonzero".into());
                }
            }
            Some(s) => {
                for k in 0..=self.t {
                    let inside = k >= s && k + s <= self.t;
                    if inside != (self.n_table[k] != 0) {
                        return fail(format!("N(f) support is not [sigma, T - sigma] at {k}"));
                    }
                }
            }
        }
        for (m, &ar) in self.ar_table.iter().enumerate() {
            if ar != self.ar_at(m) {
                return fail(format!("ar identity fails at m = {m}"));
            }
            if m > 0 && ar < self.ar_table[m - 1] {
                return fail(format!("ar(f) decreases at m = {m}"));
            }
        }
        if self.ar_table.get(self.mdr).is_none_or(|&a| a == 0)
            || self.ar_table[..self.mdr].iter().any(|&a| a != 0)
        {
            return fail("mdr is not the first nonzero ar(f)_m".into());
        }
        Ok(())
    }
}

/// `3 dim S_m - dim S_{m+d-1} + hilb_{m+d-1}`.
pub fn ar_from_hilb(d: usize, m: usize, hilb_md1: usize) -> usize {
    (3 * DegreeBasis::dim(m) + hilb_md1)
        .checked_sub(DegreeBasis::dim(m + d - 1))
        .expect("ar identity gives a negative dimension")
}

type IntPoly = Vec<(Monomial, BigInt)>;

/// Integer partial derivatives of the primitive form of `f`.
fn integer_gradient(f: &Poly) -> [IntPoly; 3] {
    let fp = f.primitive();
    fp.gradient().map(|g| {
        g.terms()
            .map(|(m, c)| {
                debug_assert!(c.is_integer());
                (*m, c.to_integer())
            })
            .collect()
    })
}

fn validate(f: &Poly) -> Result<usize> {
    let d = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    Ok(d)
}

/// Per-curve linear algebra over one back end.
pub(crate) struct Graded<'a, E: Engine> {
    engine: &'a E,
    d: usize,
    grads: [Vec<(Monomial, E::Elem)>; 3],
}

impl<'a, E: Engine> Graded<'a, E> {
    fn new(engine: &'a E, f: &Poly) -> Result<Self> {
        let d = validate(f)?;
        let grads = integer_gradient(f).map(|g| {
            g.into_iter()
                .map(|(m, c)| (m, engine.reduce(&c)))
                .filter(|(_, c)| !engine.is_zero(c))
                .collect()
        });
        Ok(Graded { engine, d, grads })
    }

    /// Rows `mu * f_v` over `S_k`, for `v = x, y, z` and `mu` in `S_{k-d+1}`
    /// (generator-major, monomials in canonical order).
    fn jacobian_rows(&self, k: usize) -> Vec<Vec<E::Elem>> {
        let Some(m) = (k + 1).checked_sub(self.d) else {
            return Vec::new();
        };
        let ncols = DegreeBasis::dim(k);
        let mult = DegreeBasis::new(m);
        let mut rows = Vec::with_capacity(3 * mult.len());
        for g in &self.grads {
            for mu in &mult.monomials {
                let mut row = vec![self.engine.zero(); ncols];
                for (t, c) in g {
                    row[DegreeBasis::index(&t.mul(mu))] = c.clone();
                }
                rows.push(row);
            }
        }
        rows
    }

    fn hilb(&self, k: usize) -> usize {
        let rows = self.jacobian_rows(k);
        DegreeBasis::dim(k) - self.engine.rank(rows, DegreeBasis::dim(k))
    }

    /// Functionals on `S_k` whose common kernel is `(J_f)_k`.
    fn annihilator(&self, k: usize) -> Vec<Vec<E::Elem>> {
        let rows = self.jacobian_rows(k);
        let ncols = DegreeBasis::dim(k);
        if rows.is_empty() {
            return identity(self.engine, ncols);
        }
        self.engine.kernel(rows, ncols)
    }

    /// Functionals on `S_k` whose common kernel is `{g : mu g in span ker(upper) for all mu}`
    /// for `upper` functionals on `S_{k+step}`, `mu` ranging over monomials of degree `step`.
    fn pull_back(&self, upper: &[Vec<E::Elem>], k: usize, step: usize) -> Vec<Vec<E::Elem>> {
        let basis = DegreeBasis::new(k);
        let mults = DegreeBasis::new(step);
        let mut rows = Vec::with_capacity(upper.len() * mults.len());
        for lam in upper {
            for mu in &mults.monomials {
                let row: Vec<E::Elem> = basis
                    .monomials
                    .iter()
                    .map(|nu| lam[DegreeBasis::index(&nu.mul(mu))].clone())
                    .collect();
                if row.iter().any(|a| !self.engine.is_zero(a)) {
                    rows.push(row);
                }
            }
        }
        rows
    }

    /// Saturation descent: functionals cutting out `(I_f)_k` for every
    /// `0 <= k <= 3d-5`, indexed by degree.
    fn saturation_functionals(&self) -> Vec<Vec<Vec<E::Elem>>> {
        let top = 3 * self.d - 5;
        let mut out = vec![Vec::new(); top + 1];
        out[top] = self.annihilator(top);
        for k in (0..top).rev() {
            let rows = self.pull_back(&out[k + 1], k, 1);
            out[k] = if rows.is_empty() {
                rows
            } else {
                self.engine.row_basis(rows, DegreeBasis::dim(k))
            };
        }
        out
    }

    fn raw(&self) -> RawTables {
        let d = self.d;
        let hilb: Vec<usize> = (0..=3 * d - 4).map(|k| self.hilb(k)).collect();
        let sat = self.saturation_functionals();
        let n_table = (0..=3 * d - 6)
            .map(|k| {
                hilb[k]
                    .checked_sub(sat[k].len())
                    .expect("I_f contains J_f")
            })
            .collect();
        RawTables { hilb, n_table }
    }
}

fn identity<E: Engine>(engine: &E, n: usize) -> Vec<Vec<E::Elem>> {
    (0..n)
        .map(|i| {
            let mut r = vec![engine.zero(); n];
            r[i] = engine.reduce(&BigInt::from(1));
            r
        })
        .collect()
}

#[derive(Debug, PartialEq, Eq)]
struct RawTables {
    hilb: Vec<usize>,
    n_table: Vec<usize>,
}

/// Run `job` once in certified mode, or with each of the two primes in
/// probabilistic mode, requiring identical results.
fn in_mode<T: PartialEq>(
    mode: RankMode,
    cert: impl FnOnce(&IntegerEngine) -> Result<T>,
    modular: impl Fn(&ModEngine) -> Result<T>,
    summary: impl Fn(&T) -> usize,
) -> Result<T> {
    match mode.primes() {
        None => cert(&IntegerEngine),
        Some([p, q]) => {
            let a = modular(&ModEngine { p })?;
            let b = modular(&ModEngine { p: q })?;
            if a != b {
                return Err(Error::PrimeDisagreement(summary(&a), summary(&b)));
            }
            Ok(a)
        }
    }
}

/// `dim M(f)_k = dim S_k - dim (J_f)_k`.
pub fn hilb_mj(f: &Poly, k: usize, mode: RankMode) -> Result<usize> {
    in_mode(
        mode,
        |e| Ok(Graded::new(e, f)?.hilb(k)),
        |e| Ok(Graded::new(e, f)?.hilb(k)),
        |&h| h,
    )
}

/// Total Tjurina number: the stable value of the Hilbert function.
pub fn tau(f: &Poly, mode: RankMode) -> Result<usize> {
    let d = validate(f)?;
    let a = hilb_mj(f, 3 * d - 5, mode)?;
    let b = hilb_mj(f, 3 * d - 4, mode)?;
    if a != b {
        return Err(Error::NonReducedCurve { at_3d5: a, at_3d4: b });
    }
    Ok(a)
}

/// Rows of the syzygy map `S_m^3 -> S_{m+d-1}` with one column per
/// generator multiple (rows indexed by monomials of degree `m+d-1`).
fn syzygy_matrix(f: &Poly, m: usize) -> Result<(usize, Vec<Vec<BigInt>>)> {
    let d = validate(f)?;
    let grads = integer_gradient(f);
    let target = DegreeBasis::dim(m + d - 1);
    let mult = DegreeBasis::new(m);
    let ncols = 3 * mult.len();
    let mut rows = vec![vec![BigInt::zero(); ncols]; target];
    for (gi, g) in grads.iter().enumerate() {
        for (j, mu) in mult.monomials.iter().enumerate() {
            for (t, c) in g {
                rows[DegreeBasis::index(&t.mul(mu))][gi * mult.len() + j] = c.clone();
            }
        }
    }
    Ok((ncols, rows))
}

/// `ar(f)_m = dim AR(f)_m`, the kernel dimension of `S_m^3 -> S_{m+d-1}`.
///
/// In certified mode this is the size of an explicit kernel basis; in
/// probabilistic mode it is `3 dim S_m` minus a modular rank.
pub fn ar_dim(f: &Poly, m: usize, mode: RankMode) -> Result<usize> {
    let (ncols, rows) = syzygy_matrix(f, m)?;
    match mode {
        RankMode::Certified => Ok(IntegerEngine.kernel(rows, ncols).len()),
        RankMode::Probabilistic { .. } => {
            Ok(ncols - crate::linalg::rank_of_integer_rows(rows, ncols, mode)?)
        }
    }
}

/// An exact basis of `AR(f)_m` as triples `(a, b, c)`.
pub fn ar_basis(f: &Poly, m: usize) -> Result<Vec<[Poly; 3]>> {
    let (ncols, rows) = syzygy_matrix(f, m)?;
    let mult = DegreeBasis::new(m);
    let n = mult.len();
    Ok(IntegerEngine
        .kernel(rows, ncols)
        .into_iter()
        .map(|v| {
            let part = |i: usize| {
                let coords: Vec<Rat> = v[i * n..(i + 1) * n]
                    .iter()
                    .cloned()
                    .map(Rat::from_integer)
                    .collect();
                mult.poly(&coords)
            };
            [part(0), part(1), part(2)]
        })
        .collect())
}

/// Checks `a f_x + b f_y + c f_z = 0`.
pub fn is_syzygy(f: &Poly, triple: &[Poly; 3]) -> bool {
    let [fx, fy, fz] = f.gradient();
    (&(&(&triple[0] * &fx) + &(&triple[1] * &fy)) + &(&triple[2] * &fz)).is_zero()
}

/// Minimal degree of a Jacobian syzygy.
pub fn mdr(f: &Poly, mode: RankMode) -> Result<usize> {
    let d = validate(f)?;
    for m in 0..d {
        if ar_dim(f, m, mode)? > 0 {
            return Ok(m);
        }
    }
    // (f_y, -f_x, 0) has degree d-1
    Err(Error::Invariant("no syzygy of degree <= d-1".into()))
}

/// A graded piece `(I_f)_k` of the saturation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationSlice {
    pub degree: usize,
    pub dim: usize,
    /// Exact basis (certified mode only).
    pub basis: Option<Vec<Poly>>,
}

impl SaturationSlice {
    pub fn contains(&self, g: &Poly) -> Option<bool> {
        let basis = self.basis.as_ref()?;
        let mut rows: Vec<Poly> = basis.clone();
        let before = crate::linalg::span_dim(&rows, self.degree, RankMode::Certified).ok()?;
        rows.push(g.clone());
        let after = crate::linalg::span_dim(&rows, self.degree, RankMode::Certified).ok()?;
        Some(before == after)
    }
}

fn slice_from_functionals<E: Engine>(
    engine: &E,
    functionals: Vec<Vec<E::Elem>>,
    k: usize,
    lift: impl Fn(&E::Elem) -> Option<BigInt>,
) -> SaturationSlice {
    let n = DegreeBasis::dim(k);
    let ker = if functionals.is_empty() {
        identity(engine, n)
    } else {
        engine.kernel(functionals, n)
    };
    let dim = ker.len();
    let basis = DegreeBasis::new(k);
    let polys: Option<Vec<Poly>> = ker
        .iter()
        .map(|v| {
            let coords: Option<Vec<Rat>> = v.iter().map(|a| lift(a).map(Rat::from_integer)).collect();
            coords.map(|c| basis.poly(&c))
        })
        .collect();
    SaturationSlice { degree: k, dim, basis: polys }
}

/// `(I_f)_k` via the top-down saturation descent.
pub fn saturation_slice(f: &Poly, k: usize, mode: RankMode) -> Result<SaturationSlice> {
    let d = validate(f)?;
    if k > 3 * d - 4 {
        return Err(Error::InvalidParameter(format!("saturation degree {k} > 3d-4")));
    }
    in_mode(
        mode,
        |e| {
            let g = Graded::new(e, f)?;
            let funcs = if k == 3 * d - 4 {
                g.annihilator(k)
            } else {
                g.saturation_functionals().swap_remove(k)
            };
            Ok(slice_from_functionals(e, funcs, k, |a| Some(a.clone())))
        },
        |e| {
            let g = Graded::new(e, f)?;
            let funcs = if k == 3 * d - 4 {
                g.annihilator(k)
            } else {
                g.saturation_functionals().swap_remove(k)
            };
            let mut s = slice_from_functionals(e, funcs, k, |_| None);
            s.basis = None;
            Ok(s)
        },
        |s| s.dim,
    )
}

/// `(I_f)_k` by the single-shot condition `mu g in (J_f)_{k+N}` for all
/// monomials `mu` of degree `N` (certified). `N` defaults to `max(1, 3d-5-k)`.
pub fn saturation_slice_direct(f: &Poly, k: usize, n: Option<usize>) -> Result<SaturationSlice> {
    let d = validate(f)?;
    let step = n.unwrap_or_else(|| (3 * d - 5).saturating_sub(k).max(1));
    let g = Graded::new(&IntegerEngine, f)?;
    let upper = g.annihilator(k + step);
    let funcs = g.pull_back(&upper, k, step);
    Ok(slice_from_functionals(&IntegerEngine, funcs, k, |a| Some(a.clone())))
}

/// `n(f)_k = dim (I_f)_k - dim (J_f)_k`.
pub fn n_dim(f: &Poly, k: usize, mode: RankMode) -> Result<usize> {
    let d = validate(f)?;
    if k > 3 * d - 6 {
        return Ok(0);
    }
    let sat = saturation_slice(f, k, mode)?;
    let j = DegreeBasis::dim(k) - hilb_mj(f, k, mode)?;
    Ok(sat.dim - j)
}

/// Compute the full profile.
///
/// Non-reduced input is detected by the Hilbert function failing to
/// stabilize. Curves with `mdr = 0` get a profile; deformation analysis
/// refuses them downstream.
pub fn profile(f: &Poly, mode: RankMode) -> Result<JacobianProfile> {
    let d = validate(f)?;
    let raw = in_mode(
        mode,
        |e| Ok(Graded::new(e, f)?.raw()),
        |e| Ok(Graded::new(e, f)?.raw()),
        |r| r.hilb.iter().sum::<usize>() + r.n_table.iter().sum::<usize>(),
    )?;
    let (a, b) = (raw.hilb[3 * d - 5], raw.hilb[3 * d - 4]);
    if a != b {
        return Err(Error::NonReducedCurve { at_3d5: a, at_3d4: b });
    }
    let tau = a;
    let hilb_at = |k: usize| raw.hilb.get(k).copied().unwrap_or(tau);
    let ar_table: Vec<usize> = (0..=2 * d).map(|m| ar_from_hilb(d, m, hilb_at(m + d - 1))).collect();
    let mdr = ar_table
        .iter()
        .position(|&a| a > 0)
        .ok_or_else(|| Error::Invariant("no syzygy up to degree 2d".into()))?;
    let sigma = raw.n_table.iter().position(|&n| n != 0);
    let nu = raw.n_table.iter().copied().max().unwrap_or(0);
    let p = JacobianProfile {
        d,
        t: 3 * d - 6,
        hilb: raw.hilb,
        n_table: raw.n_table,
        ar_table,
        mdr,
        sigma,
        nu,
        tau,
        mode,
    };
    p.verify()?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    const C: RankMode = RankMode::Certified;

    /// Membership in `(J_f)_k` by a rank comparison.
    fn in_jacobian(f: &Poly, g: &Poly) -> bool {
        let k = g.homogeneous_degree().unwrap();
        let d = f.homogeneous_degree().unwrap();
        let mut gens: Vec<Poly> = Vec::new();
        for fv in f.gradient() {
            for mu in DegreeBasis::new(k + 1 - d).monomials {
                gens.push(fv.mul_monomial(&mu));
            }
        }
        let before = crate::linalg::span_dim(&gens, k, C).unwrap();
        gens.push(g.clone());
        before == crate::linalg::span_dim(&gens, k, C).unwrap()
    }
    const P: RankMode = RankMode::Probabilistic { seed: 3 };

    #[test]
    fn conic() {
        let f = p("x^2+y^2+z^2");
        assert_eq!(hilb_mj(&f, 0, C).unwrap(), 1);
        assert_eq!(hilb_mj(&f, 1, C).unwrap(), 0);
        let pr = profile(&f, C).unwrap();
        assert_eq!((pr.d, pr.mdr, pr.tau, pr.nu, pr.sigma), (2, 1, 0, 1, Some(0)));
        assert_eq!(pr.ar_at(1), 3);
        let s = saturation_slice(&f, 1, C).unwrap();
        assert_eq!(s.dim, 3);
    }

    #[test]
    fn triangle() {
        let f = p("x*y*z");
        assert_eq!(hilb_mj(&f, 4, C).unwrap(), 3);
        assert_eq!(ar_dim(&f, 1, C).unwrap(), 2);
        let pr = profile(&f, C).unwrap();
        assert_eq!((pr.mdr, pr.tau, pr.nu), (1, 3, 0));
        assert_eq!(pr.sigma, None);
    }

    #[test]
    fn unicuspidal_quintic() {
        let f = p("y^5+x^4*z");
        assert_eq!(hilb_mj(&f, 9, C).unwrap(), 12);
        assert_eq!(tau(&f, C).unwrap(), 12);
        assert_eq!(mdr(&f, C).unwrap(), 1);
        assert_eq!(n_dim(&f, 5, C).unwrap(), 1);
        let s3 = saturation_slice(&f, 3, C).unwrap();
        assert_eq!(s3.contains(&p("x^3")), Some(true));
        assert_eq!(s3.contains(&p("y^3")), Some(false));
        let s5 = saturation_slice(&f, 5, C).unwrap();
        assert_eq!(s5.contains(&p("x^3*y^2")), Some(true));
        let pr = profile(&f, C).unwrap();
        assert_eq!((pr.mdr, pr.tau, pr.sigma, pr.nu), (1, 12, Some(3), 1));
        assert_eq!(pr.n_at(5), 1);
    }

    #[test]
    fn unicuspidal_sextic() {
        let f = p("y^6+x^5*z");
        assert_eq!(tau(&f, C).unwrap(), 20);
        let s4 = saturation_slice(&f, 4, C).unwrap();
        assert_eq!(s4.contains(&p("x^4")), Some(true));
        assert_eq!(n_dim(&f, 6, C).unwrap(), 1);
        let s6 = saturation_slice(&f, 6, C).unwrap();
        assert_eq!(s6.contains(&p("x^4*y^2")), Some(true));
        assert!(!in_jacobian(&f, &p("x^4*y^2")));
        assert!(in_jacobian(&f, &p("x^4*y*z")));
    }

    #[test]
    fn non_reduced_is_detected() {
        assert!(matches!(profile(&p("x^2*y^2"), C), Err(Error::NonReducedCurve { .. })));
        assert!(matches!(tau(&p("x^2*y^2"), C), Err(Error::NonReducedCurve { .. })));
        assert!(matches!(profile(&p("x^2*(y^2-x*z)"), P), Err(Error::NonReducedCurve { .. })));
    }

    #[test]
    fn invalid_input() {
        assert_eq!(profile(&p("x+y^2"), C), Err(Error::NotHomogeneous));
        assert_eq!(profile(&p("x+y"), C), Err(Error::DegreeTooSmall(1)));
    }

    #[test]
    fn concurrent_lines_have_mdr_zero() {
        let pr = profile(&p("x*y*(x+y)"), C).unwrap();
        assert_eq!(pr.mdr, 0);
        assert_eq!(pr.tau, 4);
    }

    #[test]
    fn syzygy_basis_is_exact() {
        let f = p("x*y*z");
        let b = ar_basis(&f, 1).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|t| is_syzygy(&f, t)));
    }

    #[test]
    fn modes_agree_on_small_curves() {
        for s in ["x^2*y+z^3", "y^4-x*z^3", "x*y*z*(x+y+z)", "y^5+x^4*z"] {
            let f = p(s);
            let a = profile(&f, C).unwrap();
            let mut b = profile(&f, P).unwrap();
            b.mode = C;
            assert_eq!(a, b, "{s}");
        }
    }

    #[test]
    fn direct_saturation_matches_descent() {
        let f = p("y^5+x^4*z");
        for k in 0..=9 {
            let a = saturation_slice(&f, k, C).unwrap();
            let b = saturation_slice_direct(&f, k, None).unwrap();
            assert_eq!(a.dim, b.dim, "k = {k}");
        }
    }
}
