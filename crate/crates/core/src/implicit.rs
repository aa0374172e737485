//! Implicit equations of rational parametrizations by a kernel computation.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::families::Parametrization;
use crate::linalg::{integer_row, DegreeBasis, Engine, IntegerEngine};
use crate::poly::{BinaryForm, Poly, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitResult {
    /// Leading coefficient 1 in the canonical order.
    pub f: Poly,
    pub kernel_dim: usize,
}

/// Kernel of `f -> f(A, B, C)` on `S_n`, as polynomials.
fn relations(p: &Parametrization, n: usize) -> Vec<Poly> {
    let basis = DegreeBasis::new(n);
    let comps = p.components();
    let powers: Vec<Vec<BinaryForm>> = comps
        .iter()
        .map(|f| {
            let mut v = vec![BinaryForm::new(vec![Rat::from_integer(1.into())])];
            for i in 0..n {
                let next = &v[i] * f;
                v.push(next);
            }
            v
        })
        .collect();
    let images: Vec<BinaryForm> = basis
        .monomials
        .iter()
        .map(|m| {
            let [a, b, c] = m.0.map(|e| e as usize);
            &(&powers[0][a] * &powers[1][b]) * &powers[2][c]
        })
        .collect();
    let neq = n * p.degree() + 1;
    // one row per coefficient of the image, one column per monomial
    let rows: Vec<_> = (0..neq)
        .map(|i| integer_row(&images.iter().map(|f| f.coeffs()[i].clone()).collect::<Vec<_>>()))
        .filter(|r| r.iter().any(|a| !a.is_zero()))
        .collect();
    IntegerEngine
        .kernel(rows, basis.len())
        .into_iter()
        .map(|v| basis.poly(&v.into_iter().map(Rat::from_integer).collect::<Vec<_>>()))
        .collect()
}

/// The unique degree-`n` relation among the components.
pub fn implicitize(p: &Parametrization, n: usize) -> Result<ImplicitResult> {
    let ker = relations(p, n);
    match ker.len() {
        0 => Err(Error::KernelDimZero(n)),
        1 => {
            let f = ker[0].monic();
            if !verify_on_curve(&f, p) {
                return Err(Error::Invariant("implicit equation does not vanish on the curve".into()));
            }
            Ok(ImplicitResult { f, kernel_dim: 1 })
        }
        dim => Err(Error::KernelDimHigh { degree: n, dim }),
    }
}

/// Try `n = 1, 2, ...` up to the degree of the forms.
pub fn implicitize_search(p: &Parametrization) -> Result<ImplicitResult> {
    for n in 1..=p.degree() {
        match implicitize(p, n) {
            Err(Error::KernelDimZero(_)) => continue,
            other => return other,
        }
    }
    Err(Error::KernelDimZero(p.degree()))
}

/// Whether `f(A, B, C)` vanishes identically.
pub fn verify_on_curve(f: &Poly, p: &Parametrization) -> bool {
    p.pull_back(f).is_ok_and(|g| g.is_zero())
}
