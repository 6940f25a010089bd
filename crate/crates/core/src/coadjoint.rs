//! Lie–Poisson structure on the dual space: coadjoint orbit ranks, the index
//! and isotropy subalgebras.
//!
//! Convention: `Π_ij(ξ) = ξ([e_i, e_j]) = Σ_k c_ij^k ξ_k`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{GenericRank, MultiPoly, PolyMatrix, RatMatrix, Rational};
use crate::lie::{LieAlgebra, Subspace};

/// The structure matrix `Π(ξ)` of the Lie–Poisson bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonMatrix(PolyMatrix);

impl PoissonMatrix {
    pub fn of(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let mut m = PolyMatrix::zeros(n, n, n);
        for (i, j, coeffs) in g.brackets() {
            let mut p = MultiPoly::zero(n);
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    p = p.add(&MultiPoly::var(n, k).scale(c));
                }
            }
            m.set(j, i, p.neg());
            m.set(i, j, p);
        }
        PoissonMatrix(m)
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        self.0.get(i, j)
    }

    pub fn as_poly_matrix(&self) -> &PolyMatrix {
        &self.0
    }

    pub fn evaluate(&self, xi: &[Rational]) -> Result<RatMatrix> {
        self.0.evaluate(xi)
    }

    pub fn generic_rank(&self, seed: u64) -> GenericRank {
        self.0.generic_rank_detail(seed)
    }
}

/// `Π(ξ)` at a point, assembled directly from the structure constants.
pub fn poisson_at(g: &LieAlgebra, xi: &[Rational]) -> Result<RatMatrix> {
    let n = g.dim();
    if xi.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: xi.len(),
        });
    }
    let mut m = RatMatrix::zeros(n, n);
    for (i, j, coeffs) in g.brackets() {
        let v: Rational = coeffs
            .iter()
            .zip(xi)
            .filter(|(c, x)| !c.is_zero() && !x.is_zero())
            .map(|(c, x)| c * x)
            .sum();
        m[(j, i)] = -v.clone();
        m[(i, j)] = v;
    }
    Ok(m)
}

/// Coadjoint data at a single point of `g*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSample {
    pub point: Vec<Rational>,
    /// Dimension of the coadjoint orbit through `point`.
    pub rank: usize,
    /// Isotropy subalgebra `g(ξ) = ker Π(ξ)`.
    pub isotropy: Subspace,
}

impl OrbitSample {
    pub fn is_open(&self) -> bool {
        self.isotropy.is_zero()
    }
}

pub fn orbit_rank_at(g: &LieAlgebra, xi: &[Rational]) -> Result<OrbitSample> {
    let pi = poisson_at(g, xi)?;
    let kernel = pi.kernel_basis();
    let isotropy = Subspace::span(g.dim(), kernel)?;
    Ok(OrbitSample {
        point: xi.to_vec(),
        rank: g.dim() - isotropy.dim(),
        isotropy,
    })
}

pub fn generic_rank(g: &LieAlgebra, seed: u64) -> GenericRank {
    PoissonMatrix::of(g).generic_rank(seed)
}

/// `dim g − generic rank of Π`.
pub fn index(g: &LieAlgebra, seed: u64) -> usize {
    g.dim() - generic_rank(g, seed).rank
}

/// Open coadjoint orbits exist iff the index is zero.
pub fn has_open_orbits(g: &LieAlgebra, seed: u64) -> bool {
    index(g, seed) == 0
}

/// `[g(ξ), g(ξ)] = 0`.
pub fn isotropy_abelian_at(g: &LieAlgebra, xi: &[Rational]) -> Result<bool> {
    let sample = orbit_rank_at(g, xi)?;
    Ok(g.is_abelian_subspace(&sample.isotropy))
}
