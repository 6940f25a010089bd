//! Named algebras: Heisenberg algebras, the affine algebras of the real and
//! complex line, and the family `h_{2n+1} ⋊ R·B` built from a matrix `A` and a
//! scalar `c`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{int, RatMatrix, Rational};
use crate::lie::{LieAlgebra, LinMap, Subspace};

/// Names accepted by [`CatalogEntry`] front ends, in listing order.
pub const NAMES: [&str; 5] = ["heisenberg", "aff_real", "aff_complex", "exF", "abelian_extension"];

/// Rational value standing in for a symbolic irrational `θ` inside `A`. Only
/// the spectral analysis depends on `θ`, and it reads the tag instead.
pub fn irrational_placeholder() -> Rational {
    Rational::new(3.into(), 2.into())
}

/// How `θ` entered the template `A = diag(J, θJ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaTag {
    Rational(Rational),
    SymbolicIrrational(String),
}

impl ThetaTag {
    /// The rational value stored inside `A`.
    pub fn stored_value(&self) -> Rational {
        match self {
            ThetaTag::Rational(q) => q.clone(),
            ThetaTag::SymbolicIrrational(_) => irrational_placeholder(),
        }
    }
}

/// Parameters of `h_{2n+1} ⋊ R·B` with `B = diag(c, A, c·I_n − Aᵀ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExFParams {
    n: usize,
    a: RatMatrix,
    c: Rational,
    theta: Option<ThetaTag>,
}

impl ExFParams {
    pub fn new(a: RatMatrix, c: Rational) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        if a.rows() == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        Ok(ExFParams {
            n: a.rows(),
            a,
            c,
            theta: None,
        })
    }

    /// `n = 4`, `A = diag(J, θJ)` with `J = [[0, 1], [-1, 0]]`.
    pub fn template(theta: ThetaTag, c: Rational) -> Self {
        let a = theta_template(&theta.stored_value());
        ExFParams {
            n: 4,
            a,
            c,
            theta: Some(theta),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &RatMatrix {
        &self.a
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn theta(&self) -> Option<&ThetaTag> {
        self.theta.as_ref()
    }
}

/// `J = [[0, 1], [-1, 0]]`.
pub fn j_block() -> RatMatrix {
    RatMatrix::from_i64(&[&[0, 1], &[-1, 0]])
}

/// `diag(J, θJ)`.
pub fn theta_template(theta: &Rational) -> RatMatrix {
    let j = j_block();
    RatMatrix::block_diag(&[&j, &j.scale(theta)])
}

fn indexed_labels(prefix: &str, range: std::ops::Range<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn unit(n: usize, k: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[k] = Rational::one();
    v
}

/// `h_{2n+1}` with basis `e0, …, e2n` and `[e_j, e_{n+j}] = e0`.
pub fn heisenberg(n: usize) -> Result<LieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("heisenberg requires n >= 1".into()));
    }
    let dim = 2 * n + 1;
    LieAlgebra::new(indexed_labels("e", 0..dim), (1..=n).map(|j| (j, n + j, unit(dim, 0))))
}

/// Lie algebra of `R ⋊ R⁺`: basis `(e0, e1)`, `[e1, e0] = e0`.
pub fn aff_real() -> LieAlgebra {
    LieAlgebra::new(indexed_labels("e", 0..2), [(0, 1, vec![int(-1), int(0)])]).expect("aff(R) satisfies Jacobi")
}

/// Realified Lie algebra of `C ⋊ C^×` on the basis `(b1, b2, a1, a2)`:
/// `[a1, b1] = b1`, `[a1, b2] = b2`, `[a2, b1] = b2`, `[a2, b2] = -b1`.
pub fn aff_complex() -> LieAlgebra {
    let labels = ["b1", "b2", "a1", "a2"].map(String::from).to_vec();
    let v = |x: [i64; 4]| x.iter().map(|&k| int(k)).collect::<Vec<_>>();
    LieAlgebra::new(
        labels,
        [
            (0, 2, v([-1, 0, 0, 0])), // [b1, a1] = -b1
            (1, 2, v([0, -1, 0, 0])), // [b2, a1] = -b2
            (0, 3, v([0, -1, 0, 0])), // [b1, a2] = -b2
            (1, 3, v([1, 0, 0, 0])),  // [b2, a2] = b1
        ],
    )
    .expect("aff(C) satisfies Jacobi")
}

/// `B = diag(c, A, c·I_n − Aᵀ)` on `(e0; e1..en; e_{n+1}..e_{2n})`.
pub fn exf_derivation(p: &ExFParams) -> LinMap {
    let n = p.n;
    let c_block = RatMatrix::diagonal(std::slice::from_ref(&p.c));
    let dual = RatMatrix::identity(n)
        .scale(&p.c)
        .sub(&p.a.transpose())
        .expect("square blocks");
    LinMap::new(RatMatrix::block_diag(&[&c_block, &p.a, &dual])).expect("square")
}

/// `h_{2n+1} ⋊ R·B`, the new basis element labelled `B` (index `2n+1`).
pub fn exf_algebra(p: &ExFParams) -> Result<LieAlgebra> {
    heisenberg(p.n)?.semidirect_sum(&exf_derivation(p), "B")
}

/// The dimension-10 instance with `A = diag(J, θJ)`.
pub fn exf_template_instance(theta: ThetaTag, c: Rational) -> (LieAlgebra, ExFParams) {
    let params = ExFParams::template(theta, c);
    let g = exf_algebra(&params).expect("B is always a derivation");
    (g, params)
}

/// The abelian ideal `p = span{e0, e_{n+1}, …, e_{2n}}` of the exF algebra.
pub fn exf_abelian_ideal(n: usize) -> Subspace {
    let mut idx = vec![0];
    idx.extend(n + 1..=2 * n);
    Subspace::coordinate(2 * n + 2, &idx)
}

/// A catalog member together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogEntry {
    Heisenberg(usize),
    AffReal,
    AffComplex,
    ExF(ExFParams),
    /// `θ` records how a template matrix was built, for the spectral test.
    AbelianExtension {
        a: RatMatrix,
        theta: Option<ThetaTag>,
    },
}

impl CatalogEntry {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogEntry::Heisenberg(_) => NAMES[0],
            CatalogEntry::AffReal => NAMES[1],
            CatalogEntry::AffComplex => NAMES[2],
            CatalogEntry::ExF(_) => NAMES[3],
            CatalogEntry::AbelianExtension { .. } => NAMES[4],
        }
    }

    pub fn build(&self) -> Result<LieAlgebra> {
        match self {
            CatalogEntry::Heisenberg(n) => heisenberg(*n),
            CatalogEntry::AffReal => Ok(aff_real()),
            CatalogEntry::AffComplex => Ok(aff_complex()),
            CatalogEntry::ExF(p) => exf_algebra(p),
            CatalogEntry::AbelianExtension { a, .. } => abelian_extension(a),
        }
    }
}

/// `R^n ⋊_A R` with basis `(e1, …, en, t)` and `[t, x] = A x`.
pub fn abelian_extension(a: &RatMatrix) -> Result<LieAlgebra> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let base = LieAlgebra::abelian(indexed_labels("e", 1..a.rows() + 1));
    base.semidirect_sum(&LinMap::new(a.clone())?, "t")
}
