//! Sturm sequences and exact isolation of positive real roots.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::upoly::UPoly;
use crate::exactalg::Rational;

/// Canonical Sturm chain `p, p', -rem(p, p'), …`.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<UPoly>,
}

impl SturmSequence {
    pub fn new(p: &UPoly) -> Self {
        let mut chain = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            let r = chain.last().expect("nonempty").rem(&next);
            chain.push(next);
            next = r.scale(&-Rational::one());
        }
        SturmSequence { chain }
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|q| q.sign_at(x)))
    }

    pub fn variations_at_infinity(&self) -> usize {
        Self::variations(self.chain.iter().map(|q| q.lead().cmp(&Rational::zero())))
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }

    /// Number of distinct real roots in `(lo, ∞)`.
    pub fn count_above(&self, lo: &Rational) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at_infinity())
    }
}

/// A positive real root, exact when rational.
#[derive(Debug, Clone, PartialEq)]
pub enum RealRoot {
    Exact(Rational),
    /// Irrational root of `factor` in `(lo, hi]`.
    Isolated {
        lo: Rational,
        hi: Rational,
        factor: UPoly,
    },
}

impl RealRoot {
    pub fn approx(&self) -> f64 {
        match self {
            RealRoot::Exact(q) => to_f64(q),
            RealRoot::Isolated { lo, hi, .. } => (to_f64(lo) + to_f64(hi)) / 2.0,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RealRoot::Exact(_))
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
}

/// Cauchy bound: every root has absolute value below `1 + max |a_i / a_n|`.
fn root_bound(p: &UPoly) -> Rational {
    let lead = p.lead();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| (c / &lead).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::one()
}

/// Interval width at which irrational roots are reported.
pub fn isolation_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 40)
}

/// Positive real roots of a square-free polynomial `p` with `p(0) ≠ 0`, in
/// increasing order. Rational roots are found exactly: a rational root of
/// the primitive integer form has a denominator dividing the leading
/// coefficient `a`, so once an isolating interval is shorter than `1/a` the
/// only candidate is `m/a` for the single integer `m` inside it.
pub fn positive_roots(p: &UPoly) -> Vec<RealRoot> {
    if p.degree() < 1 {
        return Vec::new();
    }
    assert!(!p.eval(&Rational::zero()).is_zero(), "p(0) must be nonzero");
    let sturm = SturmSequence::new(p);
    let lead_int = Rational::from_integer(p.primitive_integer().last().cloned().expect("nonzero polynomial"));
    let mut intervals = Vec::new();
    let mut stack = vec![(Rational::zero(), root_bound(p))];
    while let Some((lo, hi)) = stack.pop() {
        match sturm.count(&lo, &hi) {
            0 => {}
            1 => intervals.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    intervals.sort_by(|a, b| a.0.cmp(&b.0));
    intervals
        .into_iter()
        .map(|(lo, hi)| classify(p, &sturm, &lead_int, lo, hi))
        .collect()
}

fn bisect(sturm: &SturmSequence, lo: &mut Rational, hi: &mut Rational) {
    let mid = (&*lo + &*hi) / Rational::from_integer(2.into());
    if sturm.count(lo, &mid) == 1 {
        *hi = mid;
    } else {
        *lo = mid;
    }
}

fn classify(p: &UPoly, sturm: &SturmSequence, lead: &Rational, mut lo: Rational, mut hi: Rational) -> RealRoot {
    let unit = lead.recip();
    while &hi - &lo >= unit {
        bisect(sturm, &mut lo, &mut hi);
    }
    // the only integer m with m/a in (lo, hi] is floor(a*hi)
    let m = (&hi * lead).floor();
    let candidate = m / lead;
    if candidate > lo && candidate <= hi && p.eval(&candidate).is_zero() {
        return RealRoot::Exact(candidate);
    }
    let width = isolation_width();
    while &hi - &lo > width {
        bisect(sturm, &mut lo, &mut hi);
    }
    RealRoot::Isolated {
        lo,
        hi,
        factor: p.monic(),
    }
}
