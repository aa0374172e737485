//! Fraction-free elimination over the integers.
//!
//! Rows are sparse, sorted by column. Elimination never leaves `Z`: a row
//! is updated as `(p/g) * row - (a/g) * pivot_row` and then divided by its
//! content, so entries stay primitive. [`bareiss_rank`] is the classical
//! dense Bareiss recurrence, kept as an independent route for checking.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type SparseRow = Vec<(usize, BigInt)>;

/// Echelon form produced by [`echelon`].
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Vec<SparseRow>,
    /// Pivot column of each row in `rows`, strictly increasing.
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn dense_to_sparse(row: &[BigInt]) -> SparseRow {
    row.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(j, v)| (j, v.clone()))
        .collect()
}

pub fn sparse_to_dense(row: &SparseRow, ncols: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); ncols];
    for (j, a) in row {
        v[*j] = a.clone();
    }
    v
}

fn make_primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, a) in row.iter() {
        g = g.gcd(a);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, a) in row.iter_mut() {
        *a /= &g;
    }
}

/// `mr * row - mp * piv`, dropping cancelled entries.
fn combine(row: &SparseRow, mr: &BigInt, piv: &SparseRow, mp: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, &row[i].1 * mr));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&piv[j].1 * mp)));
            j += 1;
        } else {
            let v = &row[i].1 * mr - &piv[j].1 * mp;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry(row: &SparseRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|k| &row[k].1)
}

/// Eliminate the pivot column of `piv` (pivot value `p`) from `row`.
fn reduce_by(row: &SparseRow, piv: &SparseRow, col: usize) -> SparseRow {
    let Some(a) = entry(row, col) else {
        return row.clone();
    };
    let p = entry(piv, col).expect("pivot entry");
    let g = p.gcd(a);
    let mut out = combine(row, &(p / &g), piv, &(a / &g));
    make_primitive(&mut out);
    out
}

fn cost(row: &SparseRow) -> (usize, u64) {
    (row.len(), row.iter().map(|(_, a)| a.bits()).max().unwrap_or(0))
}

/// Row echelon form. With `reduced`, pivot columns are also cleared above
/// each pivot (fraction-free Gauss-Jordan).
pub fn echelon(rows: Vec<SparseRow>, ncols: usize, reduced: bool) -> Echelon {
    let mut active: Vec<SparseRow> = rows
        .into_iter()
        .filter(|r| !r.is_empty())
        .map(|mut r| {
            make_primitive(&mut r);
            r
        })
        .collect();
    let mut out_rows: Vec<SparseRow> = Vec::new();
    let mut pivots = Vec::new();
    while !active.is_empty() {
        // leading column over all active rows
        let col = active.iter().map(|r| r[0].0).min().unwrap();
        let mut best: Option<usize> = None;
        for (i, r) in active.iter().enumerate() {
            if r[0].0 == col && best.is_none_or(|b| cost(r) < cost(&active[b])) {
                best = Some(i);
            }
        }
        let piv = active.swap_remove(best.unwrap());
        let mut next = Vec::with_capacity(active.len());
        for r in active {
            if r[0].0 == col {
                let nr = reduce_by(&r, &piv, col);
                if !nr.is_empty() {
                    next.push(nr);
                }
            } else {
                next.push(r);
            }
        }
        active = next;
        out_rows.push(piv);
        pivots.push(col);
    }
    if reduced {
        for k in (0..out_rows.len()).rev() {
            let (head, tail) = out_rows.split_at_mut(k);
            let piv = &tail[0];
            for r in head.iter_mut() {
                if entry(r, pivots[k]).is_some() {
                    *r = reduce_by(r, piv, pivots[k]);
                }
            }
        }
    }
    Echelon { rows: out_rows, pivots, ncols }
}

/// Basis of the right kernel `{v : M v = 0}` as primitive integer vectors,
/// one per non-pivot column.
pub fn kernel(rows: Vec<SparseRow>, ncols: usize) -> Vec<Vec<BigInt>> {
    let ech = echelon(rows, ncols, true);
    let mut is_pivot = vec![false; ncols];
    for &c in &ech.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        // v[free] = L, v[pivot_r] = -L * row_r[free] / p_r with L = lcm of p_r
        let mut l = BigInt::one();
        for r in &ech.rows {
            if entry(r, free).is_some() {
                l = l.lcm(&r[0].1);
            }
        }
        let mut v = vec![BigInt::zero(); ncols];
        v[free] = l.clone();
        for (r, &pc) in ech.rows.iter().zip(&ech.pivots) {
            if let Some(a) = entry(r, free) {
                v[pc] = -(&l / &r[0].1) * a;
            }
        }
        let mut g = BigInt::zero();
        for a in &v {
            g = g.gcd(a);
        }
        if !g.is_zero() && !g.is_one() {
            for a in v.iter_mut() {
                *a /= &g;
            }
        }
        basis.push(v);
    }
    basis
}

/// Rank by the dense Bareiss recurrence `m[i][j] = (p m[i][j] - m[i][k] m[k][j]) / p_prev`.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let piv_row = &top[r];
        let pv = &piv_row[c];
        for row in bottom.iter_mut() {
            let a = row[c].clone();
            for j in c + 1..ncols {
                let v = pv * &row[j] - &a * &piv_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pv.clone();
        r += 1;
    }
    r
}

/// Make the first nonzero entry positive.
pub fn normalize_sign(v: &mut [BigInt]) {
    if v.iter().find(|a| !a.is_zero()).is_some_and(|a| a.is_negative()) {
        for a in v.iter_mut() {
            *a = -&*a;
        }
    }
}
