//! Fraction-free (Bareiss) row echelon form over an integral domain.
//!
//! After eliminating with pivot `p_k`, every remaining entry is a minor of the
//! row-permuted input, so the division by the previous pivot is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::MultiPoly;

pub(crate) trait Domain: Clone {
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    /// Pivot preference; smaller is better.
    fn weight(&self) -> u64;
}

impl Domain for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(Zero::is_zero(&r), "inexact Bareiss division");
        q
    }
    fn weight(&self) -> u64 {
        self.abs().bits()
    }
}

impl Domain for MultiPoly {
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        MultiPoly::sub(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        MultiPoly::div_exact(self, other).expect("inexact Bareiss division")
    }
    fn weight(&self) -> u64 {
        self.num_terms() as u64
    }
}

/// Echelonizes `rows` in place; returns the pivot columns. Rows past the rank
/// are left zero.
pub(crate) fn echelonize<T: Domain>(rows: &mut [Vec<T>], cols: usize) -> Vec<usize> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut prev: Option<T> = None;
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m)
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].weight())
        else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            if factor.is_zero() {
                // a <- p * a / prev keeps every entry a minor
                for entry in &mut row[c + 1..cols] {
                    if entry.is_zero() {
                        continue;
                    }
                    let num = pivot.mul(entry);
                    *entry = match &prev {
                        Some(d) => num.div_exact(d),
                        None => num,
                    };
                }
                continue;
            }
            for j in c + 1..cols {
                let num = pivot.mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                row[j] = match &prev {
                    Some(d) if !num.is_zero() => num.div_exact(d),
                    _ => num,
                };
            }
            row[c] = factor.sub(&factor);
        }
        prev = Some(pivot);
        pivots.push(c);
        r += 1;
    }
    pivots
}
