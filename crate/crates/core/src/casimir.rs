//! Polynomial Casimir functions of the Lie–Poisson structure.
//!
//! A polynomial `c` on `g*` is a Casimir iff `Σ_j Π_ij(ξ) ∂c/∂ξ_j ≡ 0` for
//! every `i`. Since `Π` is linear in `ξ`, the condition splits by homogeneous
//! degree, and each degree is a sparse linear system in the monomial
//! coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coadjoint::{poisson_at, PoissonMatrix};
use crate::error::{Error, Result};
use crate::exactalg::{sparse_kernel, Monomial, MultiPoly, Rational, SparseRow};
use crate::lie::LieAlgebra;

/// Default degree bound for Casimir searches.
pub const DEFAULT_DEGREE: u32 = 4;

/// Number of random points used by [`spot_check`] inside the verdict.
pub const SPOT_CHECK_POINTS: usize = 50;

/// Polynomial Casimirs without constant term up to `degree_bound`, in graded
/// reduced echelon form (degree ascending; within a degree, leading monomials
/// in descending lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirBasis {
    pub degree_bound: u32,
    pub basis: Vec<MultiPoly>,
}

impl CasimirBasis {
    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    /// Elements of exact total degree `k`.
    pub fn of_degree(&self, k: u32) -> impl Iterator<Item = &MultiPoly> {
        self.basis.iter().filter(move |p| p.degree() == i64::from(k))
    }
}

/// Coefficient system for homogeneous Casimirs of degree `k`: unknowns are
/// the coefficients of `monomials`, one equation per `(i, output monomial)`.
fn homogeneous_system(g: &LieAlgebra, monomials: &[Monomial]) -> Vec<SparseRow> {
    let column: BTreeMap<&Monomial, usize> = monomials.iter().enumerate().map(|(c, m)| (m, c)).collect();
    let mut equations: BTreeMap<(usize, Monomial), BTreeMap<usize, Rational>> = BTreeMap::new();
    for (i, j, coeffs) in g.brackets() {
        // Π_ij = Σ_l c_ij^l ξ_l and Π_ji = -Π_ij
        for (row, var, sign) in [(i, j, Rational::one()), (j, i, -Rational::one())] {
            for m in monomials {
                let e = m.exponents()[var];
                if e == 0 {
                    continue;
                }
                let col = column[m];
                for (l, c) in coeffs.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut out = m.exponents().to_vec();
                    out[var] -= 1;
                    out[l] += 1;
                    let entry = equations
                        .entry((row, Monomial(out)))
                        .or_default()
                        .entry(col)
                        .or_insert_with(Rational::zero);
                    *entry += c * &sign * Rational::from_integer(e.into());
                }
            }
        }
    }
    equations
        .into_values()
        .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect::<SparseRow>())
        .filter(|r| !r.is_empty())
        .collect()
}

/// Basis of polynomial Casimirs with zero constant term and degree at most
/// `degree_bound`.
pub fn polynomial_casimirs(g: &LieAlgebra, degree_bound: u32) -> CasimirBasis {
    let n = g.dim();
    let mut basis = Vec::new();
    for k in 1..=degree_bound {
        let monomials = Monomial::all_of_degree(n, k);
        let rows = homogeneous_system(g, &monomials);
        for v in sparse_kernel(monomials.len(), &rows) {
            let p = MultiPoly::from_terms(
                n,
                monomials
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(m, c)| (m.exponents().to_vec(), c)),
            )
            .expect("monomial arity");
            basis.push(p);
        }
    }
    CasimirBasis { degree_bound, basis }
}

/// True iff `Π·∇c` vanishes identically, by direct polynomial arithmetic.
pub fn verify_casimir(g: &LieAlgebra, c: &MultiPoly) -> Result<bool> {
    let n = g.dim();
    if c.nvars() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: c.nvars(),
        });
    }
    let pi = PoissonMatrix::of(g);
    let grad: Vec<MultiPoly> = (0..n).map(|j| c.partial_derivative(j)).collect::<Result<_>>()?;
    Ok((0..n).all(|i| {
        (0..n)
            .fold(MultiPoly::zero(n), |acc, j| acc.add(&pi.entry(i, j).mul(&grad[j])))
            .is_zero()
    }))
}

/// Evaluates `(Π(ξ)·∇c(ξ))_i` exactly at `points` seeded random rational
/// points `ξ`, each with a random component `i`; true if all vanish.
pub fn spot_check(g: &LieAlgebra, c: &MultiPoly, seed: u64, points: usize) -> Result<bool> {
    let n = g.dim();
    if c.nvars() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: c.nvars(),
        });
    }
    if n == 0 {
        return Ok(true);
    }
    let grad: Vec<MultiPoly> = (0..n).map(|j| c.partial_derivative(j)).collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..points {
        let xi: Vec<Rational> = (0..n)
            .map(|_| Rational::new(rng.gen_range(-1000i64..=1000).into(), rng.gen_range(1i64..=97).into()))
            .collect();
        let i = rng.gen_range(0..n);
        let pi = poisson_at(g, &xi)?;
        let mut total = Rational::zero();
        for (j, dj) in grad.iter().enumerate() {
            if !pi[(i, j)].is_zero() {
                total += &pi[(i, j)] * dj.evaluate(&xi)?;
            }
        }
        if !total.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the Casimir constancy check on the polynomial slice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CasimirVerdict {
    /// No nonconstant polynomial Casimir of degree at most `degree_bound`.
    AllConstantUpTo { degree_bound: u32 },
    /// The first echelon basis element is returned as the witness.
    NonconstantFound {
        degree_bound: u32,
        #[serde(serialize_with = "serialize_poly")]
        witness: MultiPoly,
    },
}

fn serialize_poly<S: serde::Serializer>(p: &MultiPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.to_term_list().serialize(s)
}

impl CasimirVerdict {
    pub fn all_constant(&self) -> bool {
        matches!(self, CasimirVerdict::AllConstantUpTo { .. })
    }

    pub fn degree_bound(&self) -> u32 {
        match self {
            CasimirVerdict::AllConstantUpTo { degree_bound }
            | CasimirVerdict::NonconstantFound { degree_bound, .. } => *degree_bound,
        }
    }
}

/// Computes the degree-bounded Casimir basis and re-checks every element
/// symbolically and at `SPOT_CHECK_POINTS` seeded points.
pub fn casimirs_constant_verdict(g: &LieAlgebra, degree_bound: u32, seed: u64) -> CasimirVerdict {
    let basis = polynomial_casimirs(g, degree_bound);
    verdict_from_basis(g, &basis, seed)
}

pub(crate) fn verdict_from_basis(g: &LieAlgebra, basis: &CasimirBasis, seed: u64) -> CasimirVerdict {
    for c in &basis.basis {
        assert!(
            verify_casimir(g, c).unwrap_or(false) && spot_check(g, c, seed, SPOT_CHECK_POINTS).unwrap_or(false),
            "Casimir solver returned a non-Casimir: {c}"
        );
    }
    match basis.basis.first() {
        None => CasimirVerdict::AllConstantUpTo {
            degree_bound: basis.degree_bound,
        },
        Some(w) => CasimirVerdict::NonconstantFound {
            degree_bound: basis.degree_bound,
            witness: w.clone(),
        },
    }
}
