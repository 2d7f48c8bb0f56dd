//! Exact linear algebra over the rationals and over prime fields.
//!
//! Differentials are stored as sparse columns with `BigRational` entries.
//! Ranks over Q are computed by fraction-free (Bareiss) elimination on an
//! integer copy of the matrix — rows are scaled by their denominator lcm
//! first, which leaves the rank unchanged. An i128 fast path covers the
//! typical case; any overflow falls back to arbitrary precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Sparse column-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Q)>>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> SparseMat {
        SparseMat { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, Q)] {
        &self.columns[j]
    }

    /// Adds `value` to entry (row, col).
    pub fn add_entry(&mut self, row: usize, col: usize, value: Q) {
        assert!(row < self.rows && col < self.cols);
        if value.is_zero() {
            return;
        }
        let column = &mut self.columns[col];
        match column.binary_search_by_key(&row, |&(r, _)| r) {
            Ok(i) => {
                column[i].1 += value;
                if column[i].1.is_zero() {
                    column.remove(i);
                }
            }
            Err(i) => column.insert(i, (row, value)),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> Q {
        match self.columns[col].binary_search_by_key(&row, |&(r, _)| r) {
            Ok(i) => self.columns[col][i].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    /// True iff `self ∘ other` is the zero matrix.
    pub fn composes_to_zero_with(&self, other: &SparseMat) -> bool {
        assert_eq!(self.cols, other.rows);
        for col in &other.columns {
            let mut acc: std::collections::BTreeMap<usize, Q> = Default::default();
            for &(mid, ref v) in col {
                for &(row, ref w) in &self.columns[mid] {
                    let slot = acc.entry(row).or_insert_with(Q::zero);
                    *slot += v * w;
                }
            }
            if acc.values().any(|v| !v.is_zero()) {
                return false;
            }
        }
        true
    }

    /// Integer matrix with the same rank: each row scaled by its denominator
    /// lcm. Row-major, dense.
    fn to_integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut lcms = vec![BigInt::one(); self.rows];
        for col in &self.columns {
            for &(r, ref v) in col {
                lcms[r] = lcms[r].lcm(v.denom());
            }
        }
        let mut dense = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(r, ref v) in col {
                dense[r][j] = v.numer() * (&lcms[r] / v.denom());
            }
        }
        dense
    }

    /// Exact rank over Q.
    pub fn rank_rational(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let dense = self.to_integer_rows();
        if let Some(small) = to_i128(&dense) {
            if let Some(rank) = bareiss_rank_i128(small) {
                return rank;
            }
        }
        bareiss_rank_big(dense)
    }

    /// Rank over F_p. Fails if p divides a denominator.
    pub fn rank_mod_p(&self, p: u64) -> Result<usize> {
        assert!(p >= 2 && p < 1 << 31);
        let mut dense = vec![vec![0u64; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(r, ref v) in col {
                let num = mod_big(v.numer(), p);
                let den = mod_big(v.denom(), p);
                if den == 0 {
                    return Err(Error::BadCharacteristic { p });
                }
                dense[r][j] = num * mod_inverse(den, p) % p;
            }
        }
        Ok(gauss_rank_mod_p(dense, p))
    }
}

fn mod_big(x: &BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    let m = x.mod_floor(&BigInt::from(p));
    m.to_u64().expect("reduced residue fits")
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: p is prime in all call sites.
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn gauss_rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] % p != 0) else { continue };
        m.swap(rank, pivot);
        let inv = mod_inverse(m[rank][col] % p, p);
        for r in rank + 1..rows {
            if m[r][col] % p == 0 {
                continue;
            }
            let factor = (m[r][col] as u128 * inv as u128 % p as u128) as u64;
            for c in col..cols {
                let sub = factor as u128 * m[rank][c] as u128 % p as u128;
                m[r][c] = ((m[r][c] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn to_i128(dense: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    use num_traits::ToPrimitive;
    dense
        .iter()
        .map(|row| row.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>())
        .collect()
}

/// One-step Bareiss elimination over i128; None on (potential) overflow.
fn bareiss_rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = m[0].len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows)
            .filter(|&r| m[r][col] != 0)
            .min_by_key(|&r| m[r][col].unsigned_abs());
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            if m[r][col] == 0 {
                for c in col + 1..cols {
                    if m[r][c] == 0 {
                        continue;
                    }
                    let num = m[rank][col].checked_mul(m[r][c])?;
                    debug_assert_eq!(num % prev, 0, "Bareiss division is exact");
                    m[r][c] = num / prev;
                }
            } else {
                for c in col + 1..cols {
                    let a = m[rank][col].checked_mul(m[r][c])?;
                    let b = m[r][col].checked_mul(m[rank][c])?;
                    let num = a.checked_sub(b)?;
                    debug_assert_eq!(num % prev, 0, "Bareiss division is exact");
                    m[r][c] = num / prev;
                }
                m[r][col] = 0;
            }
        }
        prev = m[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].abs());
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                for c in col + 1..cols {
                    if m[r][c].is_zero() {
                        continue;
                    }
                    let num = &m[rank][col] * &m[r][c];
                    debug_assert!((&num % &prev).is_zero());
                    m[r][c] = num / &prev;
                }
            } else {
                for c in col + 1..cols {
                    let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                    debug_assert!((&num % &prev).is_zero());
                    m[r][c] = num / &prev;
                }
                m[r][col] = BigInt::zero();
            }
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseMat {
        let mut m = SparseMat::zero(rows, cols);
        for &(r, c, v) in entries {
            m.add_entry(r, c, q_int(v));
        }
        m
    }

    #[test]
    fn simple_ranks() {
        let m = mat(2, 2, &[(0, 0, 1), (1, 1, 1)]);
        assert_eq!(m.rank_rational(), 2);
        let m = mat(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)]);
        assert_eq!(m.rank_rational(), 1);
        assert_eq!(SparseMat::zero(3, 5).rank_rational(), 0);
    }

    #[test]
    fn rank_with_rational_entries() {
        let mut m = SparseMat::zero(2, 2);
        m.add_entry(0, 0, Q::new(BigInt::from(1), BigInt::from(2)));
        m.add_entry(1, 1, Q::new(BigInt::from(3), BigInt::from(7)));
        assert_eq!(m.rank_rational(), 2);
        assert_eq!(m.rank_mod_p(5).unwrap(), 2);
        assert!(m.rank_mod_p(7).is_err());
    }

    #[test]
    fn rank_agrees_mod_p_on_random_sign_matrices() {
        let mut rng = crate::random::seeded_rng(1);
        use rand::Rng;
        for _ in 0..30 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..8);
            let mut m = SparseMat::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    let v: i64 = rng.gen_range(-1..=1);
                    m.add_entry(r, c, q_int(v));
                }
            }
            let rq = m.rank_rational();
            // Sign matrices this small have unimodular-bounded minors; any
            // disagreement with a large prime is a bug, not torsion.
            assert_eq!(rq, m.rank_mod_p(1_000_003).unwrap());
        }
    }

    #[test]
    fn mod_two_sees_torsion_style_drop() {
        let m = mat(1, 1, &[(0, 0, 2)]);
        assert_eq!(m.rank_rational(), 1);
        assert_eq!(m.rank_mod_p(2).unwrap(), 0);
    }

    #[test]
    fn composition_check() {
        let d0 = mat(2, 1, &[(0, 0, 1), (1, 0, 1)]);
        let d1 = mat(1, 2, &[(0, 0, 1), (0, 1, -1)]);
        assert!(d1.composes_to_zero_with(&d0));
        let bad = mat(1, 2, &[(0, 0, 1), (0, 1, 1)]);
        assert!(!bad.composes_to_zero_with(&d0));
    }
}
