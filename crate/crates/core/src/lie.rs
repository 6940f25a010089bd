//! Lie algebras given by structure constants, their subspaces and linear maps.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactalg::{format_rational, rref, RatMatrix, Rational};

/// Finite-dimensional Lie algebra over the rationals.
///
/// Brackets are stored only for basis pairs `i < j`, so antisymmetry holds by
/// construction. The Jacobi identity is checked by [`LieAlgebra::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    /// `[e_i, e_j]` for `i < j`, nonzero brackets only.
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

/// Subspace of `Q^n` held in reduced row echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

/// Square matrix acting on basis coordinates (`x ↦ M x`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap(RatMatrix);

impl LinMap {
    pub fn new(matrix: RatMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(LinMap(matrix))
    }

    pub fn zero(n: usize) -> Self {
        LinMap(RatMatrix::zeros(n, n))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        self.0.mul_vec(v)
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::from_integer(1.into());
    v
}

fn axpy(acc: &mut [Rational], k: &Rational, v: &[Rational]) {
    if k.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += k * b;
        }
    }
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

impl Subspace {
    /// Span of `vectors` in `Q^ambient`.
    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::LengthMismatch {
                expected: ambient,
                got: v.len(),
            });
        }
        let (basis, pivots) = rref(vectors, ambient);
        Ok(Subspace { ambient, basis, pivots })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, &(0..ambient).collect::<Vec<_>>())
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Self::span(ambient, indices.iter().map(|&i| unit(ambient, i)).collect())
            .expect("unit vectors have the ambient length")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the echelon basis so that `v` vanishes on every pivot
    /// coordinate. The result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let k = -out[p].clone();
            axpy(&mut out, &k, b);
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient && is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, vs).expect("same ambient dimension")
    }
}

impl LieAlgebra {
    /// Builds an algebra and verifies the Jacobi identity.
    ///
    /// `brackets` holds `(i, j, [e_i, e_j])` with `i < j`; each pair may appear
    /// at most once and omitted pairs bracket to zero.
    pub fn new<I>(labels: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let g = Self::new_unchecked(labels, brackets)?;
        if let Some(&(i, j, k)) = g.jacobi_violations().first() {
            return Err(Error::Jacobi(i, j, k));
        }
        Ok(g)
    }

    /// Like [`LieAlgebra::new`] but without the Jacobi check.
    pub fn new_unchecked<I>(labels: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let n = labels.len();
        let mut map = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (i, j, coeffs) in brackets {
            let fail = |reason: &str| Error::BracketIndex {
                i,
                j,
                reason: reason.to_string(),
            };
            if i >= j {
                return Err(fail("requires i < j"));
            }
            if j >= n {
                return Err(fail("index exceeds the dimension"));
            }
            if coeffs.len() != n {
                return Err(fail("coefficient vector has the wrong length"));
            }
            if !seen.insert((i, j)) {
                return Err(fail("duplicate record"));
            }
            if !is_zero_vec(&coeffs) {
                map.insert((i, j), coeffs);
            }
        }
        Ok(LieAlgebra { labels, brackets: map })
    }

    /// Abelian algebra with the given basis labels.
    pub fn abelian(labels: Vec<String>) -> Self {
        LieAlgebra {
            labels,
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Nonzero brackets `[e_i, e_j]`, `i < j`, in index order.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &[Rational])> {
        self.brackets.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    /// Structure constant `c_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets.get(&(i, j)).map_or_else(Rational::zero, |v| v[k].clone()),
            std::cmp::Ordering::Greater => -self.constant(j, i, k),
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self
                .brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![Rational::zero(); n]),
            std::cmp::Ordering::Greater => self.bracket_basis(j, i).into_iter().map(|x| -x).collect(),
            std::cmp::Ordering::Equal => vec![Rational::zero(); n],
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let mut out = vec![Rational::zero(); n];
        for (&(i, j), c) in &self.brackets {
            let k = &x[i] * &y[j] - &x[j] * &y[i];
            axpy(&mut out, &k, c);
        }
        Ok(out)
    }

    fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        self.bracket(x, y).expect("vectors of the algebra's dimension")
    }

    /// Matrix of `ad(x) = [x, ·]`.
    pub fn ad(&self, x: &[Rational]) -> Result<RatMatrix> {
        let n = self.dim();
        let cols = (0..n)
            .map(|j| self.bracket(x, &unit(n, j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RatMatrix::from_rows(cols)?.transpose())
    }

    /// The `n² × n` matrix stacking `ad(e_0), …, ad(e_{n-1})`; its kernel is
    /// the center.
    pub fn stacked_adjoint(&self) -> RatMatrix {
        let n = self.dim();
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            let ad = self.ad(&unit(n, i)).expect("unit vector");
            rows.extend(ad.to_rows());
        }
        if rows.is_empty() {
            return RatMatrix::zeros(0, n);
        }
        RatMatrix::from_rows(rows).expect("rectangular")
    }

    /// Basis triples `i < j < k` on which the Jacobi identity fails.
    pub fn jacobi_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let eij = self.bracket_basis(i, j);
                for k in j + 1..n {
                    let ejk = self.bracket_basis(j, k);
                    let eki = self.bracket_basis(k, i);
                    let mut sum = self.bracket_unchecked(&eij, &unit(n, k));
                    for (a, b) in sum.iter_mut().zip(self.bracket_unchecked(&ejk, &unit(n, i))) {
                        *a += b;
                    }
                    for (a, b) in sum.iter_mut().zip(self.bracket_unchecked(&eki, &unit(n, j))) {
                        *a += b;
                    }
                    if !is_zero_vec(&sum) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    /// `[S, T]` for subspaces `S`, `T`.
    pub fn bracket_subspaces(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in s.basis() {
            for y in t.basis() {
                let v = self.bracket_unchecked(x, y);
                if !is_zero_vec(&v) {
                    vs.push(v);
                }
            }
        }
        Subspace::span(self.dim(), vs).expect("bracket vectors have the algebra dimension")
    }

    /// `[g, g]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let vs = self.brackets.values().cloned().collect();
        Subspace::span(n, vs).expect("structure constant vectors")
    }

    /// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …`, ending at the first repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.descending_series(|g, prev| g.bracket_subspaces(prev, prev))
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`, ending at the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        self.descending_series(move |g, prev| g.bracket_subspaces(&full, prev))
    }

    fn descending_series(&self, step: impl Fn(&Self, &Subspace) -> Subspace) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().expect("nonempty");
            let next = step(self, last);
            if next == *last {
                return series;
            }
            let done = next.is_zero();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let kernel = self.stacked_adjoint().kernel_basis();
        Subspace::span(n, kernel).expect("kernel vectors have the algebra dimension")
    }

    /// True iff `D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]` for all `i < j`.
    pub fn is_derivation(&self, d: &LinMap) -> Result<bool> {
        Ok(self.derivation_defect(d)?.is_none())
    }

    /// First pair `(i, j)` where the Leibniz rule fails.
    pub fn derivation_defect(&self, d: &LinMap) -> Result<Option<(usize, usize)>> {
        let n = self.dim();
        if d.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "map of size {} on an algebra of dimension {n}",
                d.dim()
            )));
        }
        let images: Vec<Vec<Rational>> = (0..n).map(|i| d.apply(&unit(n, i))).collect::<Result<_>>()?;
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.apply(&self.bracket_basis(i, j))?;
                let mut rhs = self.bracket_unchecked(&images[i], &unit(n, j));
                for (a, b) in rhs.iter_mut().zip(self.bracket_unchecked(&unit(n, i), &images[j])) {
                    *a += b;
                }
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// `g ⋊ R·D`: appends a basis element `label` with `[e_D, x] = D x`.
    pub fn semidirect_sum(&self, d: &LinMap, label: &str) -> Result<LieAlgebra> {
        if let Some((i, j)) = self.derivation_defect(d)? {
            return Err(Error::NotDerivation(format!(
                "Leibniz rule fails on ({}, {})",
                self.labels[i], self.labels[j]
            )));
        }
        Ok(self.semidirect_sum_unchecked(d, label))
    }

    /// Semidirect sum without the derivation check; the result may violate
    /// the Jacobi identity.
    pub fn semidirect_sum_unchecked(&self, d: &LinMap, label: &str) -> LieAlgebra {
        let n = self.dim();
        assert_eq!(d.dim(), n, "map dimension");
        let mut brackets: BTreeMap<(usize, usize), Vec<Rational>> = self
            .brackets
            .iter()
            .map(|(&k, v)| {
                let mut w = v.clone();
                w.push(Rational::zero());
                (k, w)
            })
            .collect();
        for i in 0..n {
            // [e_i, e_D] = -D e_i
            let mut col: Vec<Rational> = d.matrix().column(i).into_iter().map(|x| -x).collect();
            if is_zero_vec(&col) {
                continue;
            }
            col.push(Rational::zero());
            brackets.insert((i, n), col);
        }
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        LieAlgebra { labels, brackets }
    }

    /// `[g, S] ⊆ S`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim()
            && (0..self.dim()).all(|i| {
                let e = unit(self.dim(), i);
                s.basis().iter().all(|v| s.contains(&self.bracket_unchecked(&e, v)))
            })
    }

    /// `[S, S] = 0`.
    pub fn is_abelian_subspace(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim() && self.bracket_subspaces(s, s).is_zero()
    }

    /// Quotient by an ideal.
    ///
    /// The induced basis consists of the standard basis vectors at the
    /// non-pivot positions of `S`, in index order. Returns the quotient and
    /// the projection matrix (`dim g/S × dim g`).
    pub fn quotient(&self, s: &Subspace) -> Result<(LieAlgebra, RatMatrix)> {
        if !self.is_ideal(s) {
            return Err(Error::NotIdeal);
        }
        let n = self.dim();
        let complement: Vec<usize> = (0..n).filter(|i| !s.pivots().contains(i)).collect();
        let project = |v: &[Rational]| -> Vec<Rational> {
            let r = s.reduce(v);
            complement.iter().map(|&k| r[k].clone()).collect()
        };
        let mut brackets = Vec::new();
        for (a, &i) in complement.iter().enumerate() {
            for (b, &j) in complement.iter().enumerate().skip(a + 1) {
                let v = project(&self.bracket_basis(i, j));
                if !is_zero_vec(&v) {
                    brackets.push((a, b, v));
                }
            }
        }
        let labels = complement.iter().map(|&k| self.labels[k].clone()).collect();
        let q = LieAlgebra::new(labels, brackets)?;
        let proj_cols: Vec<Vec<Rational>> = (0..n).map(|k| project(&unit(n, k))).collect();
        let projection = if complement.is_empty() {
            RatMatrix::zeros(0, n)
        } else {
            RatMatrix::from_rows(proj_cols)?.transpose()
        };
        Ok((q, projection))
    }

    /// Same dimension and identical structure constants; labels ignored.
    pub fn structurally_eq(&self, other: &LieAlgebra) -> bool {
        self.dim() == other.dim() && self.brackets == other.brackets
    }

    /// SHA-256 over the dimension and nonzero structure constants, hex encoded.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("dim {}\n", self.dim()));
        for (&(i, j), v) in &self.brackets {
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    h.update(format!("{i} {j} {k} {}\n", format_rational(c)));
                }
            }
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn h3() -> LieAlgebra {
        LieAlgebra::new(labels(3), [(1, 2, ints(&[1, 0, 0]))]).unwrap()
    }

    fn aff() -> LieAlgebra {
        // [e1, e0] = e0
        LieAlgebra::new(labels(2), [(0, 1, ints(&[-1, 0]))]).unwrap()
    }

    fn so3() -> LieAlgebra {
        LieAlgebra::new(
            labels(3),
            [
                (0, 1, ints(&[0, 0, 1])),
                (1, 2, ints(&[1, 0, 0])),
                (0, 2, ints(&[0, -1, 0])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn brackets() {
        let g = h3();
        assert_eq!(
            g.bracket(&ints(&[0, 1, 0]), &ints(&[0, 0, 1])).unwrap(),
            ints(&[1, 0, 0])
        );
        let x = vec![rat(1, 2), int(-3), int(7)];
        assert!(is_zero_vec(&g.bracket(&x, &x).unwrap()));
        assert_eq!(aff().bracket(&ints(&[0, 1]), &ints(&[1, 0])).unwrap(), ints(&[1, 0]));
        assert!(g.bracket(&ints(&[1, 0]), &ints(&[1, 0, 0])).is_err());
    }

    #[test]
    fn record_validation() {
        let bad = |i, j| LieAlgebra::new(labels(3), [(i, j, ints(&[1, 0, 0]))]);
        assert!(matches!(bad(1, 1), Err(Error::BracketIndex { .. })));
        assert!(matches!(bad(2, 1), Err(Error::BracketIndex { .. })));
        assert!(matches!(bad(0, 3), Err(Error::BracketIndex { .. })));
        let dup = LieAlgebra::new(labels(3), [(0, 1, ints(&[0, 0, 1])), (0, 1, ints(&[0, 0, 1]))]);
        assert!(dup.is_err());
    }

    #[test]
    fn jacobi_failure_is_reported() {
        // so(3) with one constant perturbed
        let r = LieAlgebra::new(
            labels(3),
            [
                (0, 1, ints(&[0, 0, 1])),
                (1, 2, ints(&[2, 0, 0])),
                (0, 2, ints(&[1, -1, 0])),
            ],
        );
        assert_eq!(r, Err(Error::Jacobi(0, 1, 2)));
    }

    #[test]
    fn derived_objects() {
        let g = h3();
        assert_eq!(g.derived_subalgebra(), Subspace::coordinate(3, &[0]));
        assert_eq!(
            g.derived_series(),
            vec![Subspace::full(3), Subspace::coordinate(3, &[0]), Subspace::zero(3)]
        );
        assert!(g.is_solvable() && g.is_nilpotent());
        assert!(LieAlgebra::abelian(labels(3)).derived_subalgebra().is_zero());

        let s = so3();
        assert_eq!(s.derived_series(), vec![Subspace::full(3)]);
        assert!(!s.is_solvable());

        let a = aff();
        assert!(a.is_solvable());
        assert!(!a.is_nilpotent());
        let lcs = a.lower_central_series();
        assert_eq!(lcs.last().unwrap(), &Subspace::coordinate(2, &[0]));
    }

    #[test]
    fn centers() {
        assert_eq!(h3().center(), Subspace::coordinate(3, &[0]));
        assert!(aff().center().is_zero());
        assert_eq!(LieAlgebra::abelian(labels(2)).center(), Subspace::full(2));
    }

    #[test]
    fn derivations() {
        let g = h3();
        let b = LinMap::new(RatMatrix::diagonal(&ints(&[5, 2, 3]))).unwrap();
        let b_bad = LinMap::new(RatMatrix::diagonal(&ints(&[5, 2, 7]))).unwrap();
        assert!(g.is_derivation(&b).unwrap());
        assert!(!g.is_derivation(&b_bad).unwrap());
        assert!(g.is_derivation(&LinMap::zero(3)).unwrap());
        assert!(g.is_derivation(&LinMap::zero(2)).is_err());
        assert!(matches!(g.semidirect_sum(&b_bad, "B"), Err(Error::NotDerivation(_))));

        let ext = g.semidirect_sum(&b, "B").unwrap();
        assert_eq!(ext.dim(), 4);
        let eb = ints(&[0, 0, 0, 1]);
        for (i, k) in [(0, 5), (1, 2), (2, 3)] {
            let mut e = vec![int(0); 4];
            e[i] = int(1);
            let mut want = vec![int(0); 4];
            want[i] = int(k);
            assert_eq!(ext.bracket(&eb, &e).unwrap(), want);
        }
        assert!(ext.jacobi_violations().is_empty());
        assert!(ext.center().is_zero());

        let broken = g.semidirect_sum_unchecked(&b_bad, "B");
        assert!(broken.jacobi_violations().contains(&(1, 2, 3)));
    }

    #[test]
    fn direct_factor() {
        let g = h3().semidirect_sum(&LinMap::zero(3), "z").unwrap();
        assert_eq!(g.center(), Subspace::coordinate(4, &[0, 3]));
    }

    #[test]
    fn ideals_and_quotients() {
        let g = h3();
        assert!(!g.is_ideal(&Subspace::coordinate(3, &[1])));
        assert!(g.is_ideal(&Subspace::full(3)));
        let (q, proj) = g.quotient(&Subspace::coordinate(3, &[0])).unwrap();
        assert!(q.is_abelian());
        assert_eq!(q.dim(), 2);
        assert_eq!(proj, RatMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1]]));
        let (same, _) = g.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(same, g);
        assert_eq!(g.quotient(&Subspace::coordinate(3, &[1])).unwrap_err(), Error::NotIdeal);
    }

    #[test]
    fn subspace_canonical_form() {
        let a = Subspace::span(2, vec![ints(&[2, 4]), ints(&[1, 2])]).unwrap();
        let b = Subspace::span(2, vec![vec![rat(1, 3), rat(2, 3)]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
        assert!(a.contains(&ints(&[-1, -2])));
        assert!(!a.contains(&ints(&[1, 0])));
    }

    #[test]
    fn fingerprint_tracks_constants_only() {
        let mut relabeled = h3();
        relabeled.labels = vec!["z".into(), "p".into(), "q".into()];
        assert_eq!(h3().fingerprint(), relabeled.fingerprint());
        assert_ne!(h3().fingerprint(), aff().fingerprint());
    }
}
