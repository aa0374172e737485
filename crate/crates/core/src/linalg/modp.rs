//! Dense elimination modulo a word-size prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniformly drawn prime in `(2^60, 2^62)`.
pub fn random_prime<R: Rng>(rng: &mut R) -> u64 {
    loop {
        let c = rng.gen_range((1u64 << 60) + 1..(1u64 << 62)) | 1;
        if is_prime(c) {
            return c;
        }
    }
}

pub fn reduce_int(a: &BigInt, p: u64) -> u64 {
    a.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// In-place Gauss-Jordan; returns pivot columns. Rows are reordered so that
/// the first `rank` rows are the reduced pivot rows (pivot entry 1).
pub fn rref(rows: &mut Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r][c..].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let (before, rest) = rows.split_at_mut(r);
        let (piv, after) = rest.split_first_mut().unwrap();
        for row in before.iter_mut().chain(after.iter_mut()) {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let na = p - a;
            for j in c..ncols {
                if piv[j] != 0 {
                    row[j] = (row[j] + mul_mod(na, piv[j], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Forward elimination only; returns the rank.
pub fn rank(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> usize {
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r][c..].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let (top, bottom) = rows.split_at_mut(r + 1);
        let piv = &top[r];
        for row in bottom.iter_mut() {
            let a = row[c];
            if a == 0 {
                continue;
            }
            let na = p - a;
            for j in c..ncols {
                if piv[j] != 0 {
                    row[j] = (row[j] + mul_mod(na, piv[j], p)) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Right-kernel basis from reduced rows.
pub fn kernel(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let pivots = rref(&mut rows, ncols, p);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u64; ncols];
            v[free] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (p - row[free]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        // Carmichael number
        assert!(!is_prime(561));
        assert!(is_prime((1u64 << 61) - 1));
    }

    #[test]
    fn drawn_primes_are_in_range() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let p = random_prime(&mut rng);
            assert!(p > 1 << 60 && p < 1 << 62);
            assert!(is_prime(p));
        }
    }

    #[test]
    fn rank_and_kernel_mod_p() {
        let p = (1u64 << 61) - 1;
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(rows.clone(), 3, p), 2);
        let k = kernel(rows.clone(), 3, p);
        assert_eq!(k.len(), 1);
        for row in &rows {
            let dot = row.iter().zip(&k[0]).fold(0u64, |acc, (a, b)| (acc + mul_mod(*a, *b, p)) % p);
            assert_eq!(dot, 0);
        }
    }
}
