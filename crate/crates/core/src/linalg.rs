//! Exact matrix rank: dense elimination modulo a prime, or fraction-free
//! Bareiss elimination over the integers (rank over the rationals).

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// `0` selects the rationals; otherwise a prime below `2^32`.
pub fn check_characteristic(p: u64) -> Result<()> {
    if p == 0 || (p < 1 << 32 && is_prime(p)) {
        Ok(())
    } else {
        Err(Error::BadCharacteristic(p))
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank over `F_p` by Gaussian elimination with row pivoting.
pub fn rank_mod_p(m: &Matrix, p: u64) -> Result<usize> {
    if p == 0 {
        return Err(Error::BadCharacteristic(p));
    }
    check_characteristic(p)?;
    let pi = p as i64;
    let mut a: Vec<u64> = m.data.iter().map(|&v| v.rem_euclid(pi) as u64).collect();
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if piv != rank {
            for k in 0..cols {
                a.swap(piv * cols + k, rank * cols + k);
            }
        }
        let inv = pow_mod(a[rank * cols + c], p - 2, p);
        for r in rank + 1..rows {
            let f = a[r * cols + c] * inv % p;
            if f == 0 {
                continue;
            }
            for k in c..cols {
                let sub = f * a[rank * cols + k] % p;
                a[r * cols + k] = (a[r * cols + k] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Ok(rank)
}

/// Rank over `Q` by Bareiss elimination; every division is exact.
pub fn rank_rational(m: &Matrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| m.row(r).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(piv, rank);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Dispatches on the characteristic (`0` for the rationals).
pub fn rank(m: &Matrix, characteristic: u64) -> Result<usize> {
    if characteristic == 0 {
        Ok(rank_rational(m))
    } else {
        rank_mod_p(m, characteristic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_ranks() {
        let m = Matrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank_rational(&m), 1);
        assert_eq!(rank_mod_p(&m, 7), Ok(1));
        let m = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(rank_rational(&m), 2);
        assert_eq!(rank_mod_p(&m, 3), Ok(1));
        assert_eq!(rank_rational(&Matrix::zeros(0, 4)), 0);
        assert_eq!(rank_mod_p(&Matrix::zeros(3, 0), 5), Ok(0));
    }

    #[test]
    fn characteristic_checks() {
        assert!(check_characteristic(0).is_ok());
        assert!(check_characteristic(65_537).is_ok());
        assert!(check_characteristic(1_000_003).is_ok());
        assert_eq!(check_characteristic(12), Err(Error::BadCharacteristic(12)));
        assert!(rank_mod_p(&Matrix::zeros(1, 1), 1).is_err());
    }

    #[test]
    fn bareiss_agrees_with_large_prime() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(0..7);
            let cols = rng.gen_range(0..7);
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            let m = if rows == 0 { Matrix::zeros(0, cols) } else { Matrix::from_rows(&data) };
            assert_eq!(Ok(rank_rational(&m)), rank_mod_p(&m, 1_000_003), "{m:?}");
        }
    }
}
