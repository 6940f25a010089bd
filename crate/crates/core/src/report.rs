//! Aggregated analysis of an algebra: structural predicates, coadjoint
//! index, Casimir verdict, optional spectral obstruction, and a checklist of
//! necessary conditions for the regular representation of the simply
//! connected group to be a factor representation.
//!
//! Operator-algebraic conclusions are never computed; they appear as notes
//! attached to the computed data that triggers them.

use serde::Serialize;

use crate::casimir::{casimirs_constant_verdict, CasimirVerdict, DEFAULT_DEGREE};
use crate::catalog::CatalogEntry;
use crate::coadjoint::generic_rank;
use crate::error::Result;
use crate::exactalg::MultiPoly;
use crate::lie::LieAlgebra;
use crate::spectral::{spectral_report, type_one_obstruction, SpectralReport};

/// Hypothesis of the factor criterion that the tool cannot decide.
pub const QUASI_ORBIT_CAVEAT: &str = "open dense quasi-orbit hypothesis not decidable by this tool";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Pass,
    Fail,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChecklistItem {
    pub condition: String,
    pub verdict: Check,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Overall {
    #[serde(rename = "frobenius_type_I")]
    FrobeniusTypeI,
    FactorCandidate,
    NotFactor,
    Inconclusive,
}

impl Overall {
    pub fn as_str(&self) -> &'static str {
        match self {
            Overall::FrobeniusTypeI => "frobenius_type_I",
            Overall::FactorCandidate => "factor_candidate",
            Overall::NotFactor => "not_factor",
            Overall::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    pub name: String,
    pub degree: u32,
    pub seed: u64,
    /// Catalog provenance; enables orbit-count notes and the spectral test.
    pub entry: Option<CatalogEntry>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            name: "algebra".into(),
            degree: DEFAULT_DEGREE,
            seed: 0,
            entry: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub fingerprint: String,
    pub seed: u64,
    pub solvable: bool,
    pub nilpotent: bool,
    pub center_dim: usize,
    pub generic_rank: usize,
    pub index: usize,
    pub frobenius: bool,
    pub casimir_verdict: CasimirVerdict,
    pub parity_note: Option<String>,
    pub factor_checklist: Vec<ChecklistItem>,
    pub spectral: Option<SpectralReport>,
    pub overall: Overall,
    pub notes: Vec<String>,
}

fn item(condition: &str, verdict: Check, detail: String) -> ChecklistItem {
    ChecklistItem {
        condition: condition.into(),
        verdict,
        detail,
    }
}

fn pass_fail(ok: bool) -> Check {
    if ok {
        Check::Pass
    } else {
        Check::Fail
    }
}

fn witness_text(v: &CasimirVerdict, g: &LieAlgebra) -> String {
    match v {
        CasimirVerdict::AllConstantUpTo { degree_bound } => {
            format!("no nonconstant polynomial Casimir of degree <= {degree_bound}")
        }
        CasimirVerdict::NonconstantFound { degree_bound, witness } => format!(
            "nonconstant Casimir {} (search degree <= {degree_bound}, dim {})",
            witness,
            g.dim()
        ),
    }
}

/// Checklist built from already computed data, in the fixed order
/// center, Casimir, index, quasi-orbit.
fn checklist_from(g: &LieAlgebra, center_dim: usize, casimir: &CasimirVerdict, index: usize) -> Vec<ChecklistItem> {
    vec![
        item(
            "center is trivial",
            pass_fail(center_dim == 0),
            format!("center dimension {center_dim}"),
        ),
        item(
            "every polynomial Casimir up to the degree bound is constant",
            pass_fail(casimir.all_constant()),
            witness_text(casimir, g),
        ),
        item(
            "index >= 1",
            pass_fail(index >= 1),
            if index == 0 {
                "index 0: open coadjoint orbits exist and their number is even, so the regular \
                 representation is not a factor (literature, not computed)"
                    .into()
            } else {
                format!("index {index}")
            },
        ),
        item(
            "open dense coadjoint quasi-orbit",
            Check::Unknown,
            QUASI_ORBIT_CAVEAT.into(),
        ),
    ]
}

/// Necessary conditions for the regular representation to be a factor.
pub fn factoriality_checklist(g: &LieAlgebra, degree: u32, seed: u64) -> Vec<ChecklistItem> {
    let casimir = casimirs_constant_verdict(g, degree, seed);
    let index = g.dim() - generic_rank(g, seed).rank;
    checklist_from(g, g.center().dim(), &casimir, index)
}

fn parity_note(entry: Option<&CatalogEntry>, index: usize) -> Option<String> {
    use num_traits::Zero;
    match entry {
        Some(CatalogEntry::ExF(p)) if !p.c().is_zero() => {
            Some("has two open coadjoint orbits (literature, not computed)".into())
        }
        Some(CatalogEntry::AffReal) => {
            Some("has two open coadjoint orbits, the half-planes xi0 > 0 and xi0 < 0 (literature, not computed)".into())
        }
        _ if index == 0 => {
            Some("the number of simply connected open coadjoint orbits is even (literature, not computed)".into())
        }
        _ => None,
    }
}

fn overall_verdict(solvable: bool, checklist: &[ChecklistItem]) -> Overall {
    if !solvable {
        return Overall::Inconclusive;
    }
    let failed = |k: usize| checklist[k].verdict == Check::Fail;
    if failed(2) {
        Overall::FrobeniusTypeI
    } else if failed(0) || failed(1) {
        Overall::NotFactor
    } else {
        Overall::FactorCandidate
    }
}

fn literature_notes(overall: Overall, spectral: Option<&SpectralReport>) -> Vec<String> {
    let obstruction = spectral.is_some_and(|s| s.type1_obstruction);
    let mut notes = Vec::new();
    match overall {
        Overall::FrobeniusTypeI => {
            notes.push(
                "the regular representation generates a type I von Neumann algebra (literature, not computed)".into(),
            );
            notes.push(
                "the standard hyperfinite type II_infinity conclusion applies only when the regular \
                 representation is a factor, which is excluded here (literature, not computed)"
                    .into(),
            );
            if obstruction {
                notes.push("the group itself is not type I, while its group von Neumann algebra is type I".into());
            }
        }
        Overall::FactorCandidate => {
            notes.push(format!("necessary conditions pass; {QUASI_ORBIT_CAVEAT}"));
            notes.push(
                "if the regular representation is a factor, it is the standard hyperfinite type II_infinity \
                 factor and C*(G) is primitive (literature, not computed)"
                    .into(),
            );
        }
        Overall::NotFactor => {
            notes.push("a necessary condition fails: the regular representation is not a factor".into());
        }
        Overall::Inconclusive => {
            notes.push("the algebra is not solvable; the solvable-group criteria do not apply".into());
        }
    }
    notes
}

/// Runs every analysis. Deterministic for fixed `options`.
pub fn analyze(g: &LieAlgebra, options: &AnalysisOptions) -> Result<AnalysisReport> {
    let solvable = g.is_solvable();
    let center_dim = g.center().dim();
    let rank = generic_rank(g, options.seed).rank;
    let index = g.dim() - rank;
    let casimir_verdict = casimirs_constant_verdict(g, options.degree, options.seed);
    let factor_checklist = checklist_from(g, center_dim, &casimir_verdict, index);
    let spectral = match &options.entry {
        Some(CatalogEntry::ExF(p)) => Some(type_one_obstruction(p)),
        Some(CatalogEntry::AbelianExtension { a, theta }) => Some(spectral_report(a, theta.as_ref())?),
        _ => None,
    };
    let overall = overall_verdict(solvable, &factor_checklist);
    Ok(AnalysisReport {
        name: options.name.clone(),
        dim: g.dim(),
        basis: g.labels().to_vec(),
        fingerprint: g.fingerprint(),
        seed: options.seed,
        solvable,
        nilpotent: g.is_nilpotent(),
        center_dim,
        generic_rank: rank,
        index,
        frobenius: index == 0,
        parity_note: parity_note(options.entry.as_ref(), index),
        notes: literature_notes(overall, spectral.as_ref()),
        casimir_verdict,
        factor_checklist,
        spectral,
        overall,
    })
}

impl AnalysisReport {
    /// Pretty-printed JSON with a fixed field order.
    pub fn to_machine(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("algebra: {} (dim {})", self.name, self.dim));
        line(format!("basis: {}", self.basis.join(", ")));
        line(format!("fingerprint: {}", self.fingerprint));
        line(format!("solvable: {}", self.solvable));
        line(format!("nilpotent: {}", self.nilpotent));
        line(format!("center dimension: {}", self.center_dim));
        line(format!("generic rank of Pi: {}", self.generic_rank));
        line(format!("index: {}", self.index));
        line(format!("frobenius: {}", self.frobenius));
        let casimir = match &self.casimir_verdict {
            CasimirVerdict::AllConstantUpTo { degree_bound } => format!("all constant up to degree {degree_bound}"),
            CasimirVerdict::NonconstantFound { degree_bound, witness } => {
                format!(
                    "nonconstant found up to degree {degree_bound}: {}",
                    labelled(witness, &self.basis)
                )
            }
        };
        line(format!("casimirs: {casimir}"));
        if let Some(p) = &self.parity_note {
            line(format!("orbit note: {p}"));
        }
        line("factor checklist:".into());
        for c in &self.factor_checklist {
            let v = match c.verdict {
                Check::Pass => "pass",
                Check::Fail => "fail",
                Check::Unknown => "unknown",
            };
            line(format!("  [{v}] {}: {}", c.condition, c.detail));
        }
        if let Some(s) = &self.spectral {
            line("spectral:".into());
            for l in s.render_text().lines() {
                line(format!("  {l}"));
            }
        }
        line(format!("overall: {}", self.overall.as_str()));
        for n in &self.notes {
            line(format!("note: {n}"));
        }
        out
    }
}

/// Writes `ξi` as `ξ[label]` unless the labels are the default `e0, e1, …`.
fn labelled(p: &MultiPoly, labels: &[String]) -> String {
    let mut s = p.to_string();
    if labels.iter().enumerate().all(|(i, l)| *l == format!("e{i}")) {
        return s;
    }
    // highest index first so that ξ1 does not clobber ξ10
    for (i, label) in labels.iter().enumerate().rev() {
        s = s.replace(&format!("ξ{i}"), &format!("ξ[{label}]"));
    }
    s
}
