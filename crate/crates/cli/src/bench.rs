//! Succinctness benchmark: measured lengths of every translation family by
//! arity, each checked against its length bound and, where the domain is
//! small enough, against the defined property itself.

use serde::{Deserialize, Serialize};
use teamlogic::dimension::{succinctness_certificate, MAX_CERTIFICATE_ARITY};
use teamlogic::semantics::joint_domain;
use teamlogic::translate::{parity_exp, parity_poly, translate, Parity, TranslationMode};
use teamlogic::{
    check_signature, denotation, Atom, AtomKind, Connective, Domain, Formula, Signature, TeamFamily,
    MAX_DENOTATION_PROPS,
};

use crate::error::CliError;

pub const SCHEMA: u32 = 1;

/// Constant of the polynomial bounds `length <= FACTOR * len(1) * n^d`.
pub const POLY_FACTOR: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BenchReport {
    pub schema: u32,
    pub max_arity: usize,
    pub rows: Vec<BenchRow>,
    pub certificates: Vec<CertificateRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BenchRow {
    pub property: String,
    /// The defined team property, e.g. `dep` or `~dep`.
    pub target: String,
    /// Connectives the formula may use.
    pub connectives: String,
    /// Classification of the family: `poly` or `exp`.
    pub result: String,
    pub atom_arity: usize,
    pub mode: String,
    pub formula_length: usize,
    pub formula_width: usize,
    /// Whether the formula stays within `connectives`.
    pub in_signature: bool,
    /// True only when the denotations were compared on every team.
    pub equivalence_checked: bool,
    /// Outcome of that comparison; absent when it did not run.
    pub equivalent: Option<bool>,
    pub bound_claim: String,
    pub bound_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateRow {
    pub atom: String,
    pub arity: usize,
    pub max_teams: u128,
    pub enumerated: bool,
    pub implied_min_length: u128,
}

impl BenchReport {
    /// Every row holds its bound, stays in its signature and, where
    /// checked, defines its property.
    pub fn all_hold(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.bound_holds && r.in_signature && r.equivalent != Some(false))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Growth {
    /// `length <= factor * len(1) * n^degree`.
    Poly { degree: u32, factor: usize },
    /// `length >= 2^n`.
    Exp,
}

fn vars(prefix: &str, n: usize) -> Vec<Formula> {
    (1..=n).map(|i| Formula::prop(format!("{prefix}{i}"))).collect()
}

struct AtomFamily {
    property: &'static str,
    /// Shape used for the `exp` rows and for the `poly` rows.
    exp_shape: fn(usize) -> Atom,
    poly_shape: fn(usize) -> Atom,
    degree: u32,
    /// Whether the negation formula also exists with strict splits only.
    strict_negation: bool,
}

fn families() -> Vec<AtomFamily> {
    vec![
        AtomFamily {
            property: "Dependence",
            exp_shape: |n| Atom::dep(vars("p", n), vars("q", 1)).unwrap(),
            poly_shape: |n| Atom::dep(vars("p", n), vars("q", 1)).unwrap(),
            degree: 1,
            strict_negation: true,
        },
        AtomFamily {
            property: "Independence",
            exp_shape: |n| Atom::perp(vars("p", n), vars("q", n)).unwrap(),
            poly_shape: |n| Atom::perp_cond(vars("p", n), vars("r", n), vars("q", n)).unwrap(),
            degree: 3,
            strict_negation: false,
        },
        AtomFamily {
            property: "Inclusion",
            exp_shape: |n| Atom::inc(vars("p", n), vars("q", n)).unwrap(),
            poly_shape: |n| Atom::inc(vars("p", n), vars("q", n)).unwrap(),
            degree: 2,
            strict_negation: false,
        },
        AtomFamily {
            property: "Exclusion",
            exp_shape: |n| Atom::excl(vars("p", n), vars("q", n)).unwrap(),
            poly_shape: |n| Atom::excl(vars("p", n), vars("q", n)).unwrap(),
            degree: 2,
            strict_negation: true,
        },
        AtomFamily {
            property: "Anonymity",
            exp_shape: |n| Atom::ups(vars("p", n), vars("q", 1)).unwrap(),
            poly_shape: |n| Atom::ups(vars("p", n), vars("q", 1)).unwrap(),
            degree: 1,
            strict_negation: false,
        },
    ]
}

fn sig(names: &[Connective]) -> Signature {
    Signature::new(names)
}

fn sig_text(s: &Signature) -> String {
    s.connectives()
        .map(|c| match c {
            Connective::Not => "~",
            Connective::And => "∧",
            Connective::BoolOr => "⊽",
            Connective::Or => "∨",
            Connective::StrictOr => "∨̇",
            Connective::CoAnd => "⩓",
            Connective::StrictCoAnd => "⩓̇",
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn mode_signature(mode: TranslationMode) -> Signature {
    use Connective::*;
    let split = if mode.is_strict() { StrictOr } else { Or };
    match mode {
        TranslationMode::PolyFullLax | TranslationMode::PolyFullStrict => sig(&[And, Not, split]),
        _ => sig(&[And, BoolOr, split]),
    }
}

/// A row before the bound is evaluated.
struct Measured {
    property: &'static str,
    target: String,
    signature: Signature,
    growth: Growth,
    arity: usize,
    mode: String,
    formula: Formula,
    expected: Option<Expected>,
}

enum Expected {
    Atom { atom: Atom, negated: bool },
    Parity { domain: Domain, odd: bool },
}

fn check_equivalence(f: &Formula, expected: &Expected) -> Result<bool, CliError> {
    match expected {
        Expected::Atom { atom, negated } => {
            let d = joint_domain(&[&Formula::Atom(atom.clone())], Some(0))?;
            let want = denotation(&Formula::Atom(atom.clone()), &d)?;
            let want = if *negated { want.complement() } else { want };
            Ok(denotation(f, &d)?.family() == want.family())
        }
        Expected::Parity { domain, odd } => {
            let points = domain.assignment_count() as u32;
            let want = TeamFamily::from_fn(points, |t| (t.count_ones() % 2 == 1) == *odd);
            Ok(denotation(f, domain)?.family() == &want)
        }
    }
}

fn expected_props(expected: &Expected) -> usize {
    match expected {
        Expected::Atom { atom, .. } => Formula::Atom(atom.clone()).props().len(),
        Expected::Parity { domain, .. } => domain.len(),
    }
}

fn measure(max_arity: usize) -> Result<Vec<Measured>, CliError> {
    use Connective::*;
    let mut out = Vec::new();
    for fam in families() {
        let neg_modes: &[TranslationMode] = if fam.strict_negation {
            &[TranslationMode::PolyNegLax, TranslationMode::PolyNegStrict]
        } else {
            &[TranslationMode::PolyNegLax]
        };
        let groups: [(&[TranslationMode], bool, Growth); 3] = [
            (
                neg_modes,
                true,
                Growth::Poly {
                    degree: fam.degree,
                    factor: POLY_FACTOR,
                },
            ),
            (&[TranslationMode::ExpLax, TranslationMode::ExpStrict], false, Growth::Exp),
            (
                &[TranslationMode::PolyFullLax, TranslationMode::PolyFullStrict],
                false,
                Growth::Poly {
                    degree: fam.degree,
                    factor: POLY_FACTOR,
                },
            ),
        ];
        for (modes, negated, growth) in groups {
            for &mode in modes {
                for n in 1..=max_arity {
                    let atom = match growth {
                        Growth::Exp => (fam.exp_shape)(n),
                        Growth::Poly { .. } => (fam.poly_shape)(n),
                    };
                    let kw = atom.kind().keyword();
                    out.push(Measured {
                        property: fam.property,
                        target: if negated { format!("~{kw}") } else { kw.to_string() },
                        signature: mode_signature(mode),
                        growth,
                        arity: n,
                        mode: mode.name().to_string(),
                        formula: translate(&atom, mode)?,
                        expected: Some(Expected::Atom { atom, negated }),
                    });
                }
            }
        }
    }
    let parity_domain = |n: usize| Domain::new((1..=n).map(|i| format!("p{i}")));
    for (parity, target) in [(Parity::Even, "~parity"), (Parity::Odd, "parity")] {
        for n in 1..=max_arity {
            let domain = parity_domain(n)?;
            out.push(Measured {
                property: "Parity",
                target: target.into(),
                signature: sig(&[And, BoolOr, Or, StrictOr]),
                growth: Growth::Exp,
                arity: n,
                mode: format!("PARITY_EXP_{}", if parity == Parity::Odd { "ODD" } else { "EVEN" }),
                formula: parity_exp(&domain, parity)?,
                expected: Some(Expected::Parity {
                    domain,
                    odd: parity == Parity::Odd,
                }),
            });
        }
    }
    for n in 1..=max_arity {
        let domain = parity_domain(n)?;
        let formula = match parity_poly(&domain) {
            Ok(f) => f,
            Err(teamlogic::Error::Capacity { .. }) => break,
            Err(e) => return Err(e.into()),
        };
        out.push(Measured {
            property: "Parity",
            target: "parity".into(),
            // ⊽ abbreviates ~(~a ∧ ~b) here
            signature: sig(&[And, Not, BoolOr, StrictOr]).with_atoms(&[AtomKind::Dependence]),
            growth: Growth::Poly { degree: 2, factor: 1 },
            arity: n,
            mode: "PARITY_POLY".into(),
            formula,
            expected: Some(Expected::Parity { domain, odd: true }),
        });
    }
    Ok(out)
}

/// Runs the benchmark for arities `1..=max_arity`. Denotations are compared
/// when `check` is set and the property lives on at most four propositions.
pub fn run_bench(max_arity: usize, check: bool) -> Result<BenchReport, CliError> {
    if max_arity == 0 {
        return Err(CliError::Usage("--max-arity must be at least 1".into()));
    }
    let measured = measure(max_arity)?;
    let mut rows = Vec::with_capacity(measured.len());
    for m in &measured {
        let length = m.formula.length();
        let (claim, holds) = match m.growth {
            Growth::Exp => {
                let bound = 1usize << m.arity;
                (format!("length >= 2^n = {bound}"), length >= bound)
            }
            Growth::Poly { degree, factor } => {
                let first = measured
                    .iter()
                    .find(|o| o.arity == 1 && o.mode == m.mode && o.property == m.property && o.target == m.target)
                    .map(|o| o.formula.length())
                    .unwrap_or(length);
                let bound = factor * first * m.arity.pow(degree);
                (
                    format!("length <= {factor}*{first}*n^{degree} = {bound}"),
                    length <= bound,
                )
            }
        };
        let equivalent = match &m.expected {
            Some(e) if check && expected_props(e) <= MAX_DENOTATION_PROPS => Some(check_equivalence(&m.formula, e)?),
            _ => None,
        };
        rows.push(BenchRow {
            property: m.property.into(),
            target: m.target.clone(),
            connectives: sig_text(&m.signature),
            result: match m.growth {
                Growth::Exp => "exp",
                Growth::Poly { .. } => "poly",
            }
            .into(),
            atom_arity: m.arity,
            mode: m.mode.clone(),
            formula_length: length,
            formula_width: m.formula.width(),
            in_signature: check_signature(&m.formula, &m.signature),
            equivalence_checked: equivalent.is_some(),
            equivalent,
            bound_claim: claim,
            bound_holds: holds,
        });
    }
    let mut certificates = Vec::new();
    for kind in [AtomKind::Dependence, AtomKind::Exclusion] {
        for n in 1..=max_arity.min(MAX_CERTIFICATE_ARITY) {
            let c = succinctness_certificate(kind, n)?;
            certificates.push(CertificateRow {
                atom: kind.keyword().into(),
                arity: n,
                max_teams: c.max_teams,
                enumerated: c.enumerated,
                implied_min_length: c.implied_min_length,
            });
        }
    }
    Ok(BenchReport {
        schema: SCHEMA,
        max_arity,
        rows,
        certificates,
    })
}
