//! Purely imaginary spectrum of a rational matrix `A` and the closedness of
//! the additive group `S_A ⊂ R` generated by the imaginary parts of its purely
//! imaginary eigenvalues. A non-closed `S_A` obstructs type I for
//! `R^n ⋊_A R`, and hence for any group that has it as a quotient.
//!
//! Eigenvalues `±iβ` are found without factoring: `e(t) = gcd(p(t), p(-t))`
//! keeps the roots whose negatives are also roots, `e(t) = t^{2k} f(t²)`, and
//! the positive real roots of `h(s) = f(-s)` are exactly the squares `β²`.

mod roots;
mod upoly;

use num_traits::{One, Zero};
use serde::Serialize;

pub use roots::{isolation_width, positive_roots, to_f64, RealRoot, SturmSequence};
pub use upoly::UPoly;

use crate::catalog::{ExFParams, ThetaTag};
use crate::error::{Error, Result};
use crate::exactalg::{format_rational, is_rational_square, RatMatrix, Rational};

/// `det(t·I − A)` by the Faddeev–LeVerrier recurrence.
pub fn characteristic_polynomial(a: &RatMatrix) -> Result<UPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let identity = RatMatrix::identity(n);
    let mut m = RatMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
        m = a.mul(&m)?.add(&identity.scale(&coeffs[n - k + 1]))?;
        let am = a.mul(&m)?;
        coeffs[n - k] = -am.trace() / Rational::from_integer(k.into());
    }
    Ok(UPoly::new(coeffs))
}

/// Evaluates `p(A)` by Horner's rule.
pub fn evaluate_at_matrix(p: &UPoly, a: &RatMatrix) -> Result<RatMatrix> {
    let n = a.rows();
    let identity = RatMatrix::identity(n);
    let mut acc = RatMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = a.mul(&acc)?.add(&identity.scale(c))?;
    }
    Ok(acc)
}

/// A value `s = β² > 0` with its multiplicity as an eigenvalue `iβ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ImagSquare {
    pub value: RealRoot,
    pub multiplicity: usize,
}

/// The squares `β²` of the imaginary parts of the purely imaginary nonzero
/// eigenvalues of a monic rational polynomial, in increasing order.
pub fn purely_imaginary_part_squares(p: &UPoly) -> Vec<ImagSquare> {
    if p.degree() < 1 {
        return Vec::new();
    }
    let e = p.gcd(&p.reflect());
    let (_, stripped) = e.strip_t_powers();
    let f = stripped
        .even_part_in_square()
        .expect("gcd(p(t), p(-t)) without zero roots is even");
    let h = f.reflect();
    let mut out = Vec::new();
    for (factor, multiplicity) in h.square_free_decomposition() {
        for value in positive_roots(&factor) {
            out.push(ImagSquare { value, multiplicity });
        }
    }
    if h.degree() > 0 {
        let radical = h.div_exact(&h.gcd(&h.derivative()));
        debug_assert_eq!(out.len(), SturmSequence::new(&radical).count_above(&Rational::zero()));
    }
    out.sort_by(|a, b| a.value.approx().total_cmp(&b.value.approx()));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Closedness {
    Closed,
    NotClosed,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Confidence {
    Exact,
    Numeric { tolerance: f64 },
}

/// Closedness of the group generated by the `β = √s`.
///
/// A symbolic irrational `θ` (template `diag(J, θJ)`, `S_A = ⟨1, θ⟩`) is not
/// closed. Otherwise the group is closed iff every ratio `s_i / s_j` is the
/// square of a rational, which is decidable when all `s` are rational.
pub fn sa_closedness(squares: &[ImagSquare], theta: Option<&ThetaTag>) -> (Closedness, Confidence) {
    if let Some(ThetaTag::SymbolicIrrational(_)) = theta {
        return (Closedness::NotClosed, Confidence::Exact);
    }
    if squares.len() <= 1 {
        return (Closedness::Closed, Confidence::Exact);
    }
    let exact: Option<Vec<&Rational>> = squares
        .iter()
        .map(|s| match &s.value {
            RealRoot::Exact(q) => Some(q),
            RealRoot::Isolated { .. } => None,
        })
        .collect();
    match exact {
        Some(values) => {
            let base = values[0];
            let closed = values.iter().skip(1).all(|s| is_rational_square(&(*s / base)));
            let verdict = if closed {
                Closedness::Closed
            } else {
                Closedness::NotClosed
            };
            (verdict, Confidence::Exact)
        }
        None => (
            Closedness::Unknown,
            Confidence::Numeric {
                tolerance: to_f64(&isolation_width()),
            },
        ),
    }
}

/// Symbolic description of `β = √s`.
fn generator_text(root: &RealRoot) -> String {
    match root {
        RealRoot::Exact(q) => {
            if is_rational_square(q) {
                let num = q.numer().sqrt();
                let den = q.denom().sqrt();
                format_rational(&Rational::new(num, den))
            } else {
                format!("sqrt({})", format_rational(q))
            }
        }
        RealRoot::Isolated { lo, hi, factor } => format!(
            "sqrt(s) for the root s of {} in ({}, {}] (~{:.12})",
            factor.to_string().replace('t', "s"),
            format_rational(lo),
            format_rational(hi),
            root.approx().sqrt()
        ),
    }
}

/// Spectral data for `A` and the resulting type I obstruction.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub char_poly: UPoly,
    pub imag_part_squares: Vec<ImagSquare>,
    /// Positive square roots of the squares, one per distinct value.
    pub sa_generators: Vec<String>,
    pub closedness: Closedness,
    pub confidence: Confidence,
    pub type1_obstruction: bool,
    pub theta: Option<ThetaTag>,
    pub note: String,
}

pub fn spectral_report(a: &RatMatrix, theta: Option<&ThetaTag>) -> Result<SpectralReport> {
    let char_poly = characteristic_polynomial(a)?;
    let squares = purely_imaginary_part_squares(&char_poly);
    let (closedness, confidence) = sa_closedness(&squares, theta);
    let mut sa_generators: Vec<String> = match theta {
        Some(ThetaTag::SymbolicIrrational(name)) => vec!["1".into(), name.clone()],
        _ => squares.iter().map(|s| generator_text(&s.value)).collect(),
    };
    sa_generators.dedup();
    let type1_obstruction = closedness == Closedness::NotClosed;
    let note = match closedness {
        Closedness::NotClosed => "S_A is not closed in R, so R^n ⋊_A R is not type I".to_string(),
        Closedness::Closed => "S_A is closed: no type I obstruction found from the quotient R^n ⋊_A R".to_string(),
        Closedness::Unknown => {
            "S_A closedness undecided: irrational generator ratios are only known numerically".to_string()
        }
    };
    Ok(SpectralReport {
        char_poly,
        imag_part_squares: squares,
        sa_generators,
        closedness,
        confidence,
        type1_obstruction,
        theta: theta.cloned(),
        note,
    })
}

/// Spectral obstruction for a member of the exF family.
pub fn type_one_obstruction(params: &ExFParams) -> SpectralReport {
    let mut report = spectral_report(params.a(), params.theta()).expect("A is square");
    if report.type1_obstruction {
        report.note.push_str(
            "; it is the quotient of the exF algebra by the abelian ideal spanned by e0 and e_{n+1..2n}, \
             so the simply connected exF group is not type I either",
        );
    }
    report
}

impl Serialize for UPoly {
    /// Serialized as its display string, e.g. `"t^2 + 1"`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Serialize for RealRoot {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            RealRoot::Exact(q) => {
                let mut st = s.serialize_struct("RealRoot", 2)?;
                st.serialize_field("kind", "exact")?;
                st.serialize_field("value", &format_rational(q))?;
                st.end()
            }
            RealRoot::Isolated { lo, hi, factor } => {
                let mut st = s.serialize_struct("RealRoot", 5)?;
                st.serialize_field("kind", "isolated")?;
                st.serialize_field("lo", &format_rational(lo))?;
                st.serialize_field("hi", &format_rational(hi))?;
                st.serialize_field("factor", factor)?;
                st.serialize_field("approx", &self.approx())?;
                st.end()
            }
        }
    }
}

impl Serialize for ImagSquare {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ImagSquare", 2)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

impl Serialize for ThetaTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ThetaTag", 2)?;
        match self {
            ThetaTag::Rational(q) => {
                st.serialize_field("kind", "rational")?;
                st.serialize_field("value", &format_rational(q))?;
            }
            ThetaTag::SymbolicIrrational(name) => {
                st.serialize_field("kind", "symbolic_irrational")?;
                st.serialize_field("value", name)?;
            }
        }
        st.end()
    }
}

impl SpectralReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(ThetaTag::SymbolicIrrational(name)) = &self.theta {
            out.push_str(&format!(
                "theta: symbolic irrational {name}; A stores the placeholder {}, so the values below are placeholders\n",
                format_rational(&crate::catalog::irrational_placeholder())
            ));
        }
        out.push_str(&format!("characteristic polynomial: {}\n", self.char_poly));
        if self.imag_part_squares.is_empty() {
            out.push_str("purely imaginary eigenvalues: none\n");
        }
        for sq in &self.imag_part_squares {
            let value = match &sq.value {
                RealRoot::Exact(q) => format_rational(q),
                RealRoot::Isolated { lo, hi, .. } => {
                    format!(
                        "in ({}, {}] ~{:.12}",
                        format_rational(lo),
                        format_rational(hi),
                        sq.value.approx()
                    )
                }
            };
            out.push_str(&format!("beta^2 = {value} (multiplicity {})\n", sq.multiplicity));
        }
        out.push_str(&format!("S_A generators: {{{}}}\n", self.sa_generators.join(", ")));
        let closedness = match self.closedness {
            Closedness::Closed => "closed",
            Closedness::NotClosed => "not_closed",
            Closedness::Unknown => "unknown",
        };
        let confidence = match self.confidence {
            Confidence::Exact => "exact".to_string(),
            Confidence::Numeric { tolerance } => format!("numeric (tolerance {tolerance:e})"),
        };
        out.push_str(&format!("S_A closedness: {closedness} ({confidence})\n"));
        out.push_str(&format!("type I obstruction: {}\n", self.type1_obstruction));
        out.push_str(&format!("note: {}\n", self.note));
        out
    }
}

impl Serialize for SpectralReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SpectralReport", 8)?;
        st.serialize_field("char_poly", &self.char_poly)?;
        st.serialize_field("imag_part_squares", &self.imag_part_squares)?;
        st.serialize_field("sa_generators", &self.sa_generators)?;
        st.serialize_field("closedness", &self.closedness)?;
        st.serialize_field("confidence", &self.confidence)?;
        st.serialize_field("type1_obstruction", &self.type1_obstruction)?;
        st.serialize_field("theta", &self.theta)?;
        st.serialize_field("note", &self.note)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{j_block, theta_template};
    use crate::exactalg::{int, rat};

    fn exact(values: &[(Rational, usize)]) -> Vec<ImagSquare> {
        values
            .iter()
            .map(|(v, m)| ImagSquare {
                value: RealRoot::Exact(v.clone()),
                multiplicity: *m,
            })
            .collect()
    }

    #[test]
    fn char_polys() {
        assert_eq!(
            characteristic_polynomial(&j_block()).unwrap(),
            UPoly::from_i64(&[1, 0, 1])
        );
        let want = UPoly::from_i64(&[1, 0, 1]).mul(&UPoly::new(vec![rat(1, 4), int(0), int(1)]));
        assert_eq!(characteristic_polynomial(&theta_template(&rat(1, 2))).unwrap(), want);
        assert_eq!(
            characteristic_polynomial(&RatMatrix::zeros(2, 2)).unwrap(),
            UPoly::from_i64(&[0, 0, 1])
        );
        assert!(characteristic_polynomial(&RatMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn imaginary_squares() {
        assert_eq!(
            purely_imaginary_part_squares(&UPoly::from_i64(&[1, 0, 1])),
            exact(&[(int(1), 1)])
        );
        let p = UPoly::from_i64(&[1, 0, 1]).mul(&UPoly::new(vec![rat(1, 4), int(0), int(1)]));
        assert_eq!(purely_imaginary_part_squares(&p), exact(&[(rat(1, 4), 1), (int(1), 1)]));
        let real = UPoly::from_i64(&[-3, 1]).mul(&UPoly::from_i64(&[2, 1]));
        assert!(purely_imaginary_part_squares(&real).is_empty());
    }

    #[test]
    fn real_pairs_and_zero_eigenvalues_are_ignored() {
        // t² (t² - 4)(t² + 9): eigenvalues 0, 0, ±2, ±3i
        let p = UPoly::from_i64(&[0, 0, 1])
            .mul(&UPoly::from_i64(&[-4, 0, 1]))
            .mul(&UPoly::from_i64(&[9, 0, 1]));
        assert_eq!(purely_imaginary_part_squares(&p), exact(&[(int(9), 1)]));
    }

    #[test]
    fn multiplicities() {
        // (t² + 1)² (t - 5)
        let q = UPoly::from_i64(&[1, 0, 1]);
        let p = q.mul(&q).mul(&UPoly::from_i64(&[-5, 1]));
        assert_eq!(purely_imaginary_part_squares(&p), exact(&[(int(1), 2)]));
    }

    #[test]
    fn quartets_off_the_axes_are_ignored() {
        // eigenvalues ±1±i: (t² - 2t + 2)(t² + 2t + 2) = t⁴ + 4
        assert!(purely_imaginary_part_squares(&UPoly::from_i64(&[4, 0, 0, 0, 1])).is_empty());
    }

    #[test]
    fn irrational_squares_are_isolated() {
        // t⁴ + 3t² + 1: s² - 3s + 1, s = (3 ± √5)/2
        let sq = purely_imaginary_part_squares(&UPoly::from_i64(&[1, 0, 3, 0, 1]));
        assert_eq!(sq.len(), 2);
        assert!(sq.iter().all(|s| !s.value.is_exact()));
        let want = [(3.0 - 5f64.sqrt()) / 2.0, (3.0 + 5f64.sqrt()) / 2.0];
        for (s, w) in sq.iter().zip(want) {
            assert!((s.value.approx() - w).abs() < 1e-9);
        }
        let (c, conf) = sa_closedness(&sq, None);
        assert_eq!(c, Closedness::Unknown);
        assert!(matches!(conf, Confidence::Numeric { .. }));
    }

    #[test]
    fn closedness() {
        assert_eq!(
            sa_closedness(&exact(&[(int(1), 1), (rat(1, 4), 1)]), None),
            (Closedness::Closed, Confidence::Exact)
        );
        assert_eq!(
            sa_closedness(&exact(&[(int(1), 1), (int(2), 1)]), None),
            (Closedness::NotClosed, Confidence::Exact)
        );
        assert_eq!(sa_closedness(&[], None), (Closedness::Closed, Confidence::Exact));
        let tag = ThetaTag::SymbolicIrrational("sqrt2".into());
        assert_eq!(
            sa_closedness(&exact(&[(int(1), 1), (rat(9, 4), 1)]), Some(&tag)),
            (Closedness::NotClosed, Confidence::Exact)
        );
    }

    #[test]
    fn obstruction_reports() {
        let sym = ExFParams::template(ThetaTag::SymbolicIrrational("sqrt2".into()), int(1));
        let r = type_one_obstruction(&sym);
        assert!(r.type1_obstruction);
        assert_eq!(r.closedness, Closedness::NotClosed);
        assert_eq!(r.sa_generators, vec!["1".to_string(), "sqrt2".to_string()]);

        let rat_theta = ExFParams::template(ThetaTag::Rational(rat(22, 7)), int(1));
        let r = type_one_obstruction(&rat_theta);
        assert!(!r.type1_obstruction);
        assert_eq!(r.closedness, Closedness::Closed);
        assert_eq!(r.sa_generators, vec!["1".to_string(), "22/7".to_string()]);

        let plain = ExFParams::new(RatMatrix::from_i64(&[&[2]]), int(1)).unwrap();
        let r = type_one_obstruction(&plain);
        assert!(r.imag_part_squares.is_empty());
        assert_eq!(r.closedness, Closedness::Closed);
        assert!(!r.type1_obstruction);
    }

    #[test]
    fn cayley_hamilton_small() {
        let a = RatMatrix::from_rows(vec![
            vec![rat(1, 2), int(3), int(0)],
            vec![int(-1), int(0), rat(2, 5)],
            vec![int(4), int(1), int(-2)],
        ])
        .unwrap();
        let p = characteristic_polynomial(&a).unwrap();
        assert!(evaluate_at_matrix(&p, &a).unwrap().is_zero());
    }
}
