use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bareiss;
use super::matrix::RatMatrix;
use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Number of random evaluation points used for the generic rank.
pub const SAMPLE_COUNT: usize = 5;
/// Sample coordinates are drawn uniformly from `1..=SAMPLE_MAX`.
pub const SAMPLE_MAX: u64 = 1 << 20;
/// Matrices with both sides at most this size are confirmed symbolically.
pub const SYMBOLIC_LIMIT: usize = 12;

/// Dense matrix of multivariate polynomials sharing one variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    data: Vec<MultiPoly>,
}

/// Outcome of the randomized rank computation with its certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericRank {
    pub rank: usize,
    /// Numeric ranks at each sampled point, in sampling order.
    pub sampled: Vec<usize>,
    /// Rank from fraction-free elimination over the polynomial ring, when run.
    pub symbolic: Option<usize>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            data: vec![MultiPoly::zero(nvars); rows * cols],
        }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(Error::LengthMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            if let Some(p) = row.iter().find(|p| p.nvars() != nvars) {
                return Err(Error::LengthMismatch {
                    expected: nvars,
                    got: p.nvars(),
                });
            }
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            nvars,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: MultiPoly) {
        assert_eq!(p.nvars(), self.nvars);
        self.data[i * self.cols + j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(MultiPoly::is_zero)
    }

    /// Substitutes `point` into every entry.
    pub fn evaluate(&self, point: &[Rational]) -> Result<RatMatrix> {
        let rows = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).evaluate(point))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if self.rows == 0 {
            return Ok(RatMatrix::zeros(0, self.cols));
        }
        RatMatrix::from_rows(rows)
    }

    /// Rank over the rational function field by fraction-free elimination in
    /// the polynomial ring.
    pub fn symbolic_rank(&self) -> usize {
        let mut rows: Vec<Vec<MultiPoly>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        bareiss::echelonize(&mut rows, self.cols).len()
    }

    /// Seeded evaluation points with coordinates in `1..=SAMPLE_MAX`.
    pub fn sample_points(nvars: usize, seed: u64, count: usize) -> Vec<Vec<Rational>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                (0..nvars)
                    .map(|_| Rational::from_integer(rng.gen_range(1..=SAMPLE_MAX).into()))
                    .collect()
            })
            .collect()
    }

    /// Generic rank: maximum exact rank over `SAMPLE_COUNT` seeded points,
    /// confirmed symbolically when the matrix is at most `SYMBOLIC_LIMIT` on
    /// each side. The symbolic result wins if the two disagree.
    pub fn generic_rank_detail(&self, seed: u64) -> GenericRank {
        let sampled: Vec<usize> = Self::sample_points(self.nvars, seed, SAMPLE_COUNT)
            .iter()
            .map(|pt| self.evaluate(pt).expect("point arity matches").rank())
            .collect();
        let numeric = sampled.iter().copied().max().unwrap_or(0);
        let symbolic = (self.rows <= SYMBOLIC_LIMIT && self.cols <= SYMBOLIC_LIMIT).then(|| self.symbolic_rank());
        GenericRank {
            rank: symbolic.unwrap_or(numeric),
            sampled,
            symbolic,
        }
    }

    pub fn rank_generic(&self, seed: u64) -> usize {
        self.generic_rank_detail(seed).rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    #[test]
    fn two_by_two_antisymmetric() {
        let x = MultiPoly::var(1, 0);
        let m = PolyMatrix::from_rows(
            1,
            vec![vec![MultiPoly::zero(1), x.clone()], vec![x.neg(), MultiPoly::zero(1)]],
        )
        .unwrap();
        let r = m.generic_rank_detail(0);
        assert_eq!(r.rank, 2);
        assert_eq!(r.symbolic, Some(2));
        assert!(r.sampled.iter().all(|&s| s == 2));
    }

    #[test]
    fn zero_matrix_rank() {
        assert_eq!(PolyMatrix::zeros(3, 3, 2).rank_generic(7), 0);
    }

    #[test]
    fn degenerate_point_loses_rank() {
        let x = MultiPoly::var(2, 0);
        let m = PolyMatrix::from_rows(2, vec![vec![x.clone()]]).unwrap();
        assert_eq!(m.evaluate(&[int(0), int(1)]).unwrap().rank(), 0);
        assert_eq!(m.rank_generic(1), 1);
    }

    #[test]
    fn samples_are_seeded() {
        let a = PolyMatrix::sample_points(3, 42, 5);
        assert_eq!(a, PolyMatrix::sample_points(3, 42, 5));
        assert_ne!(a, PolyMatrix::sample_points(3, 43, 5));
        assert!(a.iter().flatten().all(|x| *x >= int(1) && *x <= int(1 << 20)));
    }
}
