//! Exact linear algebra on graded pieces `S_k` of `Q[x,y,z]`.
//!
//! Two interchangeable back ends implement [`Engine`]:
//! [`IntegerEngine`] (certified, fraction-free elimination over `Z`) and
//! [`ModEngine`] (elimination modulo a random 61-62 bit prime). Callers in
//! probabilistic mode run the same computation with two independent primes
//! and require agreement.

pub mod integer;
pub mod modp;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rat};

/// How ranks are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum RankMode {
    /// Exact fraction-free elimination over the integers.
    #[default]
    Certified,
    /// Rank modulo two random primes in `(2^60, 2^62)` drawn from a
    /// generator seeded with `seed`; results must agree.
    Probabilistic { seed: u64 },
}

impl RankMode {
    pub fn is_probabilistic(&self) -> bool {
        matches!(self, RankMode::Probabilistic { .. })
    }

    /// The two distinct primes used in probabilistic mode.
    pub fn primes(&self) -> Option<[u64; 2]> {
        let RankMode::Probabilistic { seed } = *self else {
            return None;
        };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let p = modp::random_prime(&mut rng);
        let mut q = modp::random_prime(&mut rng);
        while q == p {
            q = modp::random_prime(&mut rng);
        }
        Some([p, q])
    }
}

impl fmt::Display for RankMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankMode::Certified => f.write_str("certified"),
            RankMode::Probabilistic { seed } => write!(f, "probabilistic(seed={seed})"),
        }
    }
}

/// All monomials of total degree `k`, in descending graded-lex order
/// (`x^k` first, `z^k` last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBasis {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
}

impl DegreeBasis {
    pub fn new(k: usize) -> Self {
        let mut monomials = Vec::with_capacity(Self::dim(k));
        for a in (0..=k).rev() {
            for b in (0..=k - a).rev() {
                monomials.push(Monomial::new(a as u32, b as u32, (k - a - b) as u32));
            }
        }
        DegreeBasis { degree: k, monomials }
    }

    /// `dim S_k = (k+1)(k+2)/2`.
    pub fn dim(k: usize) -> usize {
        (k + 1) * (k + 2) / 2
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Position of a degree-`k` monomial.
    #[inline]
    pub fn index(m: &Monomial) -> usize {
        let k = m.degree();
        let a = m.0[0] as usize;
        (k - a) * (k - a + 1) / 2 + m.0[2] as usize
    }

    /// Coefficient vector of a homogeneous polynomial of this degree.
    pub fn coords(&self, p: &Poly) -> Result<Vec<Rat>> {
        let mut v = vec![Rat::zero(); self.len()];
        for (m, c) in p.terms() {
            if m.degree() != self.degree {
                return Err(Error::DegreeMismatch { expected: self.degree, found: m.degree() });
            }
            v[Self::index(m)] = c.clone();
        }
        Ok(v)
    }

    pub fn poly(&self, coords: &[Rat]) -> Poly {
        Poly::from_terms(self.monomials.iter().copied().zip(coords.iter().cloned()))
    }
}

/// A linear-algebra back end over some field.
pub trait Engine: Sync {
    type Elem: Clone + Send + Sync + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn reduce(&self, a: &BigInt) -> Self::Elem;
    fn rank(&self, rows: Vec<Vec<Self::Elem>>, ncols: usize) -> usize;
    /// Basis of `{v : rows * v = 0}`.
    fn kernel(&self, rows: Vec<Vec<Self::Elem>>, ncols: usize) -> Vec<Vec<Self::Elem>>;
    /// Independent rows spanning the row space.
    fn row_basis(&self, rows: Vec<Vec<Self::Elem>>, ncols: usize) -> Vec<Vec<Self::Elem>>;
}

/// Certified back end: fraction-free elimination over `Z`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntegerEngine;

impl Engine for IntegerEngine {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn reduce(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
    fn rank(&self, rows: Vec<Vec<BigInt>>, ncols: usize) -> usize {
        let sparse = rows.iter().map(|r| integer::dense_to_sparse(r)).collect();
        integer::echelon(sparse, ncols, false).rank()
    }
    fn kernel(&self, rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
        let sparse = rows.iter().map(|r| integer::dense_to_sparse(r)).collect();
        integer::kernel(sparse, ncols)
    }
    fn row_basis(&self, rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<Vec<BigInt>> {
        let sparse = rows.iter().map(|r| integer::dense_to_sparse(r)).collect();
        integer::echelon(sparse, ncols, false)
            .rows
            .iter()
            .map(|r| integer::sparse_to_dense(r, ncols))
            .collect()
    }
}

/// Elimination modulo the prime `p`.
#[derive(Clone, Copy, Debug)]
pub struct ModEngine {
    pub p: u64,
}

impl Engine for ModEngine {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn reduce(&self, a: &BigInt) -> u64 {
        modp::reduce_int(a, self.p)
    }
    fn rank(&self, rows: Vec<Vec<u64>>, ncols: usize) -> usize {
        modp::rank(rows, ncols, self.p)
    }
    fn kernel(&self, rows: Vec<Vec<u64>>, ncols: usize) -> Vec<Vec<u64>> {
        modp::kernel(rows, ncols, self.p)
    }
    fn row_basis(&self, mut rows: Vec<Vec<u64>>, ncols: usize) -> Vec<Vec<u64>> {
        modp::rref(&mut rows, ncols, self.p);
        rows
    }
}

/// Scale a rational row to a primitive integer row.
pub fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in row {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = row.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, a| g.gcd(a));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|a| a / &g).collect()
    }
}

/// Dense rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

/// Result of [`nullspace`]: an exact basis in certified mode, the
/// dimension only in probabilistic mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub dim: usize,
    pub basis: Option<Vec<Vec<Rat>>>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        ExactMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// Column `j` is `columns[j]`; every column has length `nrows`.
    pub fn from_columns(columns: &[Vec<Rat>], nrows: usize) -> Self {
        let mut m = Self::zeros(nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| integer_row(self.row(i))).collect()
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn rank(&self, mode: RankMode) -> Result<usize> {
        rank_of_integer_rows(self.integer_rows(), self.cols, mode)
    }

    pub fn nullspace(&self, mode: RankMode) -> Result<Kernel> {
        match mode {
            RankMode::Certified => {
                let k = IntegerEngine.kernel(self.integer_rows(), self.cols);
                let basis: Vec<Vec<Rat>> = k
                    .into_iter()
                    .map(|v| v.into_iter().map(Rat::from_integer).collect())
                    .collect();
                Ok(Kernel { dim: basis.len(), basis: Some(basis) })
            }
            RankMode::Probabilistic { .. } => {
                let r = self.rank(mode)?;
                Ok(Kernel { dim: self.cols - r, basis: None })
            }
        }
    }
}

/// Rank of integer rows in the given mode.
pub fn rank_of_integer_rows(rows: Vec<Vec<BigInt>>, ncols: usize, mode: RankMode) -> Result<usize> {
    match mode.primes() {
        None => Ok(IntegerEngine.rank(rows, ncols)),
        Some([p, q]) => {
            let reduce = |e: ModEngine| -> usize {
                let m = rows
                    .iter()
                    .map(|r| r.iter().map(|a| e.reduce(a)).collect())
                    .collect();
                e.rank(m, ncols)
            };
            let (a, b) = (reduce(ModEngine { p }), reduce(ModEngine { p: q }));
            if a != b {
                return Err(Error::PrimeDisagreement(a, b));
            }
            Ok(a)
        }
    }
}

/// Dimension of the span of homogeneous degree-`k` polynomials in `S_k`.
pub fn span_dim(vectors: &[Poly], k: usize, mode: RankMode) -> Result<usize> {
    let basis = DegreeBasis::new(k);
    let rows = vectors
        .iter()
        .map(|p| basis.coords(p).map(|v| integer_row(&v)))
        .collect::<Result<Vec<_>>>()?;
    rank_of_integer_rows(rows, basis.len(), mode)
}

/// Kernel of a matrix.
pub fn nullspace(m: &ExactMatrix, mode: RankMode) -> Result<Kernel> {
    m.nullspace(mode)
}

/// The unique solution of `a x = b`.
pub fn solve_linear(a: &ExactMatrix, b: &[Rat]) -> Result<Vec<Rat>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let n = a.cols();
    let mut aug = ExactMatrix::zeros(a.rows(), n + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, -bi.clone());
    }
    let ra = a.rank(RankMode::Certified)?;
    let raug = aug.rank(RankMode::Certified)?;
    if ra != raug {
        return Err(Error::Inconsistent);
    }
    if ra < n {
        return Err(Error::Underdetermined(n - ra));
    }
    let k = aug.nullspace(RankMode::Certified)?.basis.expect("certified basis");
    debug_assert_eq!(k.len(), 1);
    let v = &k[0];
    let last = v[n].clone();
    Ok(v[..n].iter().map(|x| x / &last).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    const MODES: [RankMode; 2] = [RankMode::Certified, RankMode::Probabilistic { seed: 11 }];

    #[test]
    fn degree_basis_dimensions_and_index() {
        for k in 0..=60 {
            let b = DegreeBasis::new(k);
            assert_eq!(b.len(), (k + 1) * (k + 2) / 2);
            if k <= 12 {
                for (i, m) in b.monomials.iter().enumerate() {
                    assert_eq!(DegreeBasis::index(m), i);
                }
                let mut sorted = b.monomials.clone();
                sorted.sort_by(|a, b| b.cmp(a));
                assert_eq!(sorted, b.monomials);
            }
        }
    }

    #[test]
    fn span_dims() {
        for mode in MODES {
            assert_eq!(span_dim(&[p("x"), p("y"), p("z")], 1, mode).unwrap(), 3);
            assert_eq!(span_dim(&[], 4, mode).unwrap(), 0);
            let gens = [p("y*z"), p("x*z"), p("x*y")];
            let prods: Vec<Poly> = gens
                .iter()
                .flat_map(|g| ["x", "y", "z"].map(|v| g * &p(v)))
                .collect();
            assert_eq!(prods.len(), 9);
            assert_eq!(span_dim(&prods, 3, mode).unwrap(), 7);
        }
        assert!(matches!(
            span_dim(&[p("x^2")], 1, RankMode::Certified),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn conic_syzygy_kernel() {
        // (a,b,c) in S_1^3 -> 2xa + 2yb + 2zc in S_2
        let grads = [p("2*x"), p("2*y"), p("2*z")];
        let b1 = DegreeBasis::new(1);
        let b2 = DegreeBasis::new(2);
        let mut cols = Vec::new();
        for g in &grads {
            for m in &b1.monomials {
                cols.push(b2.coords(&g.mul_monomial(m)).unwrap());
            }
        }
        let mat = ExactMatrix::from_columns(&cols, b2.len());
        for mode in MODES {
            assert_eq!(mat.nullspace(mode).unwrap().dim, 3);
        }
        let basis = mat.nullspace(RankMode::Certified).unwrap().basis.unwrap();
        for v in &basis {
            assert!(mat.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn trivial_kernels() {
        assert_eq!(ExactMatrix::identity(3).nullspace(RankMode::Certified).unwrap().dim, 0);
        assert_eq!(ExactMatrix::zeros(1, 1).nullspace(RankMode::Certified).unwrap().dim, 1);
        let k = ExactMatrix::zeros(1, 1).nullspace(RankMode::Probabilistic { seed: 1 }).unwrap();
        assert_eq!(k, Kernel { dim: 1, basis: None });
    }

    #[test]
    fn solve_small_systems() {
        let a = ExactMatrix::from_rows(vec![vec![int(2)]]);
        assert_eq!(solve_linear(&a, &[int(4)]).unwrap(), vec![int(2)]);
        let a = ExactMatrix::from_rows(vec![vec![int(1)], vec![int(1)]]);
        assert_eq!(solve_linear(&a, &[int(0), int(1)]), Err(Error::Inconsistent));
        let a = ExactMatrix::from_rows(vec![vec![int(1), int(1)]]);
        assert_eq!(solve_linear(&a, &[int(1)]), Err(Error::Underdetermined(1)));
    }

    #[test]
    fn probabilistic_primes_are_reproducible() {
        let m = RankMode::Probabilistic { seed: 42 };
        assert_eq!(m.primes(), m.primes());
        let [p, q] = m.primes().unwrap();
        assert_ne!(p, q);
        assert_ne!(m.primes(), RankMode::Probabilistic { seed: 43 }.primes());
    }
}
