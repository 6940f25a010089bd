//! Null spaces of large sparse rational systems.
//!
//! Row selection runs modulo a fixed prime: rows that are independent mod `p`
//! are independent over the rationals, so a full modular rank certifies an
//! empty kernel outright. Otherwise the kernel of the selected rows is
//! computed exactly and checked against every row; a failed check falls back
//! to exact elimination over all rows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::kernel_from_rref;
use super::rational::Rational;

/// Sparse row as `(column, value)` pairs; zero values are ignored.
pub type SparseRow = Vec<(usize, Rational)>;

const PRIME: u64 = (1 << 61) - 1;

trait Field: Clone {
    fn vanishes(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for Rational {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Fp(u64);

impl Fp {
    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn from_bigint(n: &BigInt) -> Fp {
        let r = n.mod_floor(&BigInt::from(PRIME));
        Fp(r.to_u64().expect("reduced below the modulus"))
    }

    fn from_rational(q: &Rational) -> Option<Fp> {
        let den = Fp::from_bigint(q.denom());
        (den.0 != 0).then(|| Fp::from_bigint(q.numer()).mul(&den.inv()))
    }
}

impl Field for Fp {
    fn vanishes(&self) -> bool {
        self.0 == 0
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(((u128::from(self.0) * u128::from(other.0)) % u128::from(PRIME)) as u64)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp(if self.0 >= other.0 {
            self.0 - other.0
        } else {
            self.0 + PRIME - other.0
        })
    }
    fn neg(&self) -> Self {
        Fp(0).sub(self)
    }
    fn inv(&self) -> Self {
        self.pow(PRIME - 2)
    }
}

/// Row echelon form kept as normalized pivot rows keyed by pivot column.
struct Echelon<F> {
    pivots: BTreeMap<usize, Vec<(usize, F)>>,
}

impl<F: Field> Echelon<F> {
    fn new() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` by the current pivots; returns true if it was independent.
    fn insert(&mut self, row: impl IntoIterator<Item = (usize, F)>) -> bool {
        let mut acc: BTreeMap<usize, F> = row.into_iter().filter(|(_, v)| !v.vanishes()).collect();
        loop {
            let Some((&c, lead)) = acc.iter().next() else {
                return false;
            };
            let lead = lead.clone();
            match self.pivots.get(&c) {
                Some(prow) => {
                    for (j, pv) in prow {
                        let delta = lead.mul(pv);
                        match acc.get_mut(j) {
                            Some(x) => {
                                *x = x.sub(&delta);
                                if x.vanishes() {
                                    acc.remove(j);
                                }
                            }
                            None => {
                                acc.insert(*j, delta.neg());
                            }
                        }
                    }
                }
                None => {
                    let inv = lead.inv();
                    let normalized = acc.into_iter().map(|(j, v)| (j, v.mul(&inv))).collect();
                    self.pivots.insert(c, normalized);
                    return true;
                }
            }
        }
    }
}

impl Echelon<Rational> {
    /// Reduced echelon rows (dense), obtained by back substitution.
    fn reduced(&self, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut done: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
        for (&c, row) in self.pivots.iter().rev() {
            let mut dense = vec![Rational::zero(); cols];
            for (j, v) in row {
                dense[*j] = v.clone();
            }
            for (&pc, prow) in &done {
                let f = dense[pc].clone();
                if f.is_zero() {
                    continue;
                }
                for (x, y) in dense.iter_mut().zip(prow) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            debug_assert!(dense[c].is_one());
            done.insert(c, dense);
        }
        let pivots: Vec<usize> = done.keys().copied().collect();
        (done.into_values().collect(), pivots)
    }
}

fn annihilates(row: &SparseRow, v: &[Rational]) -> bool {
    row.iter()
        .filter(|(j, x)| !x.is_zero() && !v[*j].is_zero())
        .map(|(j, x)| x * &v[*j])
        .sum::<Rational>()
        .is_zero()
}

fn exact_kernel<'a>(cols: usize, rows: impl Iterator<Item = &'a SparseRow>) -> Vec<Vec<Rational>> {
    let mut ech = Echelon::<Rational>::new();
    for row in rows {
        if ech.rank() == cols {
            break;
        }
        ech.insert(row.iter().cloned());
    }
    let (reduced, pivots) = ech.reduced(cols);
    kernel_from_rref(&reduced, &pivots, cols)
}

/// Kernel basis of the system given by sparse `rows` over `cols` unknowns,
/// normalized exactly like [`RatMatrix::kernel_basis`](super::RatMatrix::kernel_basis).
pub fn sparse_kernel(cols: usize, rows: &[SparseRow]) -> Vec<Vec<Rational>> {
    let mut modular = Echelon::<Fp>::new();
    let mut selected = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        if modular.rank() == cols {
            break;
        }
        let reduced: Option<Vec<(usize, Fp)>> =
            row.iter().map(|(j, q)| Fp::from_rational(q).map(|f| (*j, f))).collect();
        // a denominator divisible by the prime: leave the row to the exact check
        let Some(reduced) = reduced else { continue };
        if modular.insert(reduced) {
            selected.push(idx);
        }
    }
    if modular.rank() == cols {
        return Vec::new();
    }
    let candidate = exact_kernel(cols, selected.iter().map(|&i| &rows[i]));
    if candidate.iter().all(|v| rows.iter().all(|row| annihilates(row, v))) {
        return candidate;
    }
    exact_kernel(cols, rows.iter())
}
