//! Formula generators: atom translations, negated atoms, parity formulas,
//! relaxation and the `⊽`-distribution normal form.

pub mod sugar;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::domain::Domain;
use crate::error::Error;
use crate::formula::{Atom, AtomKind, BinOp, Formula};
use sugar::{e, hook, iff, ne, niff, one_flat};

/// Target fragment of an atom translation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TranslationMode {
    /// Exponential formula over `{∧, ⊽, ∨}`.
    ExpLax,
    /// Exponential formula over `{∧, ⊽, ∨̇}`.
    ExpStrict,
    /// Polynomial formula for the negated atom over `{∧, ⊽, ∨}`.
    PolyNegLax,
    /// Polynomial formula for the negated atom over `{∧, ⊽, ∨̇}`.
    PolyNegStrict,
    /// Polynomial formula over `{~, ∧, ∨}`.
    PolyFullLax,
    /// Polynomial formula over `{~, ∧, ∨̇}`.
    PolyFullStrict,
}

impl TranslationMode {
    pub const ALL: [TranslationMode; 6] = [
        TranslationMode::ExpLax,
        TranslationMode::ExpStrict,
        TranslationMode::PolyNegLax,
        TranslationMode::PolyNegStrict,
        TranslationMode::PolyFullLax,
        TranslationMode::PolyFullStrict,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TranslationMode::ExpLax => "EXP_LAX",
            TranslationMode::ExpStrict => "EXP_STRICT",
            TranslationMode::PolyNegLax => "POLYNEG_LAX",
            TranslationMode::PolyNegStrict => "POLYNEG_STRICT",
            TranslationMode::PolyFullLax => "POLY_FULL_LAX",
            TranslationMode::PolyFullStrict => "POLY_FULL_STRICT",
        }
    }

    pub fn is_strict(self) -> bool {
        matches!(
            self,
            TranslationMode::ExpStrict
                | TranslationMode::PolyNegStrict
                | TranslationMode::PolyFullStrict
        )
    }

    /// Whether the output defines the negation of the atom.
    pub fn is_negated(self) -> bool {
        matches!(
            self,
            TranslationMode::PolyNegLax | TranslationMode::PolyNegStrict
        )
    }
}

impl fmt::Display for TranslationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TranslationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TranslationMode::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(alloc::format!("unknown mode `{s}`")))
    }
}

/// Right-nested binary combination; `empty` for no parts.
fn fold_right(parts: Vec<Formula>, op: BinOp, empty: Formula) -> Formula {
    let mut iter = parts.into_iter().rev();
    match iter.next() {
        None => empty,
        Some(last) => iter.fold(last, |acc, f| Formula::bin(op, f, acc)),
    }
}

/// `⋀`, with `⊤` for no parts.
pub fn big_and(parts: Vec<Formula>) -> Formula {
    fold_right(parts, BinOp::And, Formula::top())
}

/// `⋁` over lax splits, with `⊥` for no parts.
pub fn big_or(parts: Vec<Formula>) -> Formula {
    fold_right(parts, BinOp::Or, Formula::bot())
}

/// `⋁` over strict splits, with `⊥` for no parts.
pub fn big_strict_or(parts: Vec<Formula>) -> Formula {
    fold_right(parts, BinOp::StrictOr, Formula::bot())
}

/// Boolean `⋁`, with `~⊤` for no parts.
pub fn big_bor(parts: Vec<Formula>) -> Formula {
    fold_right(parts, BinOp::BoolOr, Formula::not(Formula::top()))
}

/// The tuples `{⊤,⊥}^n` in binary counting order, `⊥` as 0 and the first
/// component most significant.
pub fn constant_tuples(n: usize) -> Vec<Vec<Formula>> {
    (0..1usize << n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i >> (n - 1 - j) & 1 == 1 {
                        Formula::top()
                    } else {
                        Formula::bot()
                    }
                })
                .collect()
        })
        .collect()
}

fn both_values() -> [Formula; 2] {
    [Formula::bot(), Formula::top()]
}

/// A formula and its dual.
fn signed(f: &Formula) -> Result<[Formula; 2], Error> {
    Ok([f.clone(), f.dual()?])
}

/// `∨` everywhere replaced by `∨̇`.
pub fn strictify(f: &Formula) -> Formula {
    f.map_ops(&|op| if op == BinOp::Or { BinOp::StrictOr } else { op })
}

/// Replaces strict splits and co-splits by their lax versions.
pub fn relax(f: &Formula) -> Formula {
    f.map_ops(&|op| match op {
        BinOp::StrictOr => BinOp::Or,
        BinOp::StrictCoAnd => BinOp::CoAnd,
        op => op,
    })
}

/// Rewrites `ψ ⊽ θ` as `~(~ψ ∧ ~θ)` throughout.
pub fn eliminate_bor(f: &Formula) -> Formula {
    match f {
        Formula::Lit(_) | Formula::Atom(_) => f.clone(),
        Formula::Not(g) => Formula::Not(alloc::boxed::Box::new(eliminate_bor(g))),
        Formula::Bin(BinOp::BoolOr, l, r) => Formula::not_simplified(Formula::and(
            Formula::not_simplified(eliminate_bor(l)),
            Formula::not_simplified(eliminate_bor(r)),
        )),
        Formula::Bin(op, l, r) => Formula::bin(*op, eliminate_bor(l), eliminate_bor(r)),
    }
}

/// `θ=(α⃗;β⃗;γ)`: on teams where `α⃗` is constant over the `γ`-part, every
/// `α⃗`-value of the `γ`-part equals every `β⃗`-value of the `¬γ`-part.
pub fn theta_eq(alpha: &[Formula], beta: &[Formula], gamma: &Formula) -> Result<Formula, Error> {
    check_tuples(alpha, beta)?;
    let not_gamma = gamma.dual()?;
    let parts = alpha
        .iter()
        .zip(beta)
        .map(|(a, b)| {
            let options = both_values()
                .into_iter()
                .map(|l| {
                    let l = [l];
                    Ok(Formula::or(
                        Formula::and(gamma.clone(), iff(core::slice::from_ref(a), &l)?),
                        Formula::and(not_gamma.clone(), iff(core::slice::from_ref(b), &l)?),
                    ))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(big_bor(options))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(big_and(parts))
}

/// `θ≠(α⃗;β⃗;γ)`: on teams where `α⃗` is constant over the `γ`-part, that
/// value differs from every `β⃗`-value of the `¬γ`-part (and the `γ`-part is
/// nonempty).
pub fn theta_neq(alpha: &[Formula], beta: &[Formula], gamma: &Formula) -> Result<Formula, Error> {
    check_tuples(alpha, beta)?;
    let not_gamma = gamma.dual()?;
    let parts = alpha
        .iter()
        .zip(beta)
        .map(|(a, b)| {
            let options = both_values()
                .into_iter()
                .map(|l| {
                    let l = [l];
                    Ok(Formula::or(
                        Formula::and(gamma.clone(), iff(core::slice::from_ref(a), &l)?),
                        Formula::and(not_gamma.clone(), niff(core::slice::from_ref(b), &l)?),
                    ))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Formula::and(e(gamma.clone()), big_bor(options)))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(big_or(parts))
}

/// Replacement for `θ≠` in the strict-split fragment with `~`.
fn theta_neq_strict(alpha: &[Formula], beta: &[Formula], gamma: &Formula) -> Result<Formula, Error> {
    let inner = Formula::and(
        e(gamma.clone()),
        Formula::and(e(gamma.dual()?), theta_eq(alpha, beta, gamma)?),
    );
    Ok(Formula::bor(
        gamma.clone(),
        Formula::not(Formula::strict_or(Formula::top(), inner)),
    ))
}

fn check_tuples(alpha: &[Formula], beta: &[Formula]) -> Result<(), Error> {
    if alpha.len() != beta.len() {
        return Err(Error::Arity(alloc::format!(
            "tuples of lengths {} and {} differ",
            alpha.len(),
            beta.len()
        )));
    }
    for f in alpha.iter().chain(beta) {
        if !f.is_pure() {
            return Err(Error::NotPure(f.to_string()));
        }
    }
    Ok(())
}

/// The exponential translation of an atom.
pub fn translate_exp(atom: &Atom, mode: TranslationMode) -> Result<Formula, Error> {
    let lax = match mode {
        TranslationMode::ExpLax | TranslationMode::ExpStrict => exp_lax(atom)?,
        _ => return Err(unsupported(atom, mode)),
    };
    Ok(if mode.is_strict() { strictify(&lax) } else { lax })
}

fn unsupported(atom: &Atom, mode: TranslationMode) -> Error {
    Error::Unsupported(alloc::format!("{} in mode {mode}", atom.kind().keyword()))
}

fn exp_lax(atom: &Atom) -> Result<Formula, Error> {
    let alpha = atom.alpha();
    let beta = atom.beta();
    Ok(match atom.kind() {
        AtomKind::Dependence => {
            let constant = beta
                .iter()
                .map(|b| Ok(Formula::bor(b.clone(), b.dual()?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let constant = big_and(constant);
            let parts = constant_tuples(alpha.len())
                .iter()
                .map(|c| Ok(Formula::and(iff(alpha, c)?, constant.clone())))
                .collect::<Result<Vec<_>, Error>>()?;
            big_or(parts)
        }
        AtomKind::Independence => independence_exp(alpha, beta)?,
        AtomKind::CondIndependence => {
            let cond = atom.cond();
            let inner = independence_exp(alpha, beta)?;
            let parts = constant_tuples(cond.len())
                .iter()
                .map(|c| Ok(Formula::and(iff(cond, c)?, inner.clone())))
                .collect::<Result<Vec<_>, Error>>()?;
            big_or(parts)
        }
        AtomKind::Inclusion => {
            let parts = constant_tuples(alpha.len())
                .iter()
                .map(|c| Ok(Formula::bor(niff(alpha, c)?, e(iff(beta, c)?))))
                .collect::<Result<Vec<_>, Error>>()?;
            big_and(parts)
        }
        AtomKind::Exclusion => {
            let parts = constant_tuples(alpha.len())
                .iter()
                .map(|c| Ok(Formula::bor(niff(alpha, c)?, niff(beta, c)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            big_and(parts)
        }
        AtomKind::Anonymity => {
            let varied = beta
                .iter()
                .map(|b| Ok(Formula::and(e(b.clone()), e(b.dual()?))))
                .collect::<Result<Vec<_>, Error>>()?;
            // the `⊥` option lets the part for an absent α⃗-value be empty
            let varied = Formula::bor(big_bor(varied), Formula::bot());
            let parts = constant_tuples(alpha.len())
                .iter()
                .map(|c| Ok(Formula::and(iff(alpha, c)?, varied.clone())))
                .collect::<Result<Vec<_>, Error>>()?;
            big_or(parts)
        }
    })
}

fn independence_exp(alpha: &[Formula], beta: &[Formula]) -> Result<Formula, Error> {
    let mut parts = Vec::new();
    for c in constant_tuples(alpha.len()) {
        for d in constant_tuples(beta.len()) {
            let both = Formula::and(iff(alpha, &c)?, iff(beta, &d)?);
            parts.push(Formula::bor(
                niff(alpha, &c)?,
                Formula::bor(niff(beta, &d)?, e(both)),
            ));
        }
    }
    Ok(big_and(parts))
}

/// A polynomial formula equivalent to the negation of the atom.
///
/// General anonymity (more than one right-hand component) is written as
/// `~⋁ᵢ ~φ(α⃗;βᵢ)` over lax splits; see [`translate_polyneg_anonymity`].
pub fn translate_polyneg(atom: &Atom, mode: TranslationMode) -> Result<Formula, Error> {
    match mode {
        TranslationMode::PolyNegLax => negation_core(atom, false, false),
        TranslationMode::PolyNegStrict => match atom.kind() {
            AtomKind::Dependence | AtomKind::Exclusion => {
                Ok(strictify(&negation_core(atom, false, false)?))
            }
            _ => Err(unsupported(atom, mode)),
        },
        _ => Err(unsupported(atom, mode)),
    }
}

/// Negated anonymity decomposed into unary atoms, over lax splits or, with
/// `strict`, over strict splits.
pub fn translate_polyneg_anonymity(atom: &Atom, strict: bool) -> Result<Formula, Error> {
    if atom.kind() != AtomKind::Anonymity {
        return Err(Error::Unsupported(String::from("not an anonymity atom")));
    }
    anonymity_negation(atom, strict, false)
}

/// A polynomial formula with `~` equivalent to the atom.
pub fn translate_polyfull(atom: &Atom, mode: TranslationMode) -> Result<Formula, Error> {
    match mode {
        TranslationMode::PolyFullLax => Ok(Formula::not_simplified(eliminate_bor(
            &negation_core(atom, false, false)?,
        ))),
        TranslationMode::PolyFullStrict => Ok(Formula::not_simplified(eliminate_bor(
            &strictify(&negation_core(atom, true, true)?),
        ))),
        _ => Err(unsupported(atom, mode)),
    }
}

/// Dispatches on the mode family.
pub fn translate(atom: &Atom, mode: TranslationMode) -> Result<Formula, Error> {
    match mode {
        TranslationMode::ExpLax | TranslationMode::ExpStrict => translate_exp(atom, mode),
        TranslationMode::PolyNegLax | TranslationMode::PolyNegStrict => {
            translate_polyneg(atom, mode)
        }
        TranslationMode::PolyFullLax | TranslationMode::PolyFullStrict => {
            translate_polyfull(atom, mode)
        }
    }
}

/// The formula for `~atom`, built with lax splits. `strict_theta` swaps in
/// the `θ≠` replacement for the strict fragment; `strict_decomposition`
/// selects the strict-split form for general anonymity.
fn negation_core(atom: &Atom, strict_theta: bool, strict_decomposition: bool) -> Result<Formula, Error> {
    let alpha = atom.alpha();
    let beta = atom.beta();
    let neq = |a: &[Formula], b: &[Formula], g: &Formula| {
        if strict_theta {
            theta_neq_strict(a, b, g)
        } else {
            theta_neq(a, b, g)
        }
    };
    Ok(match atom.kind() {
        AtomKind::Dependence => {
            let constant = alpha
                .iter()
                .map(|a| Ok(Formula::bor(a.clone(), a.dual()?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let varied = beta
                .iter()
                .map(|b| Ok(Formula::and(e(b.clone()), e(b.dual()?))))
                .collect::<Result<Vec<_>, Error>>()?;
            Formula::or(Formula::top(), Formula::and(big_and(constant), big_bor(varied)))
        }
        AtomKind::Exclusion => {
            let mut parts = Vec::new();
            for a in alpha {
                for gamma in signed(a)? {
                    let body = Formula::and(
                        e(gamma.dual()?),
                        Formula::and(
                            hook(gamma.clone(), one_flat(alpha)?, false)?,
                            theta_eq(alpha, beta, &gamma)?,
                        ),
                    );
                    parts.push(Formula::or(Formula::top(), body));
                }
            }
            Formula::bor(e(iff(alpha, beta)?), big_bor(parts))
        }
        AtomKind::Inclusion => {
            let mut parts = Vec::new();
            for (a, b) in alpha.iter().zip(beta) {
                for gamma in signed(b)? {
                    let differs = niff(core::slice::from_ref(a), core::slice::from_ref(b))?;
                    let pivot = hook(gamma.clone(), Formula::and(differs, one_flat(alpha)?), false)?;
                    parts.push(Formula::or(
                        gamma.clone(),
                        Formula::and(pivot, neq(alpha, beta, &gamma)?),
                    ));
                }
            }
            big_bor(parts)
        }
        AtomKind::CondIndependence => {
            let cond = atom.cond();
            let alpha_cond: Vec<Formula> = alpha.iter().chain(cond).cloned().collect();
            let mut parts = Vec::new();
            for a in alpha {
                for delta in signed(a)? {
                    for b in beta {
                        for eps in signed(b)? {
                            let either = Formula::or(delta.clone(), eps.clone());
                            let witnesses = Formula::or(
                                Formula::and(delta.dual()?, neq(&alpha_cond, &alpha_cond, &eps)?),
                                Formula::and(eps.dual()?, neq(beta, beta, &delta)?),
                            );
                            let body = Formula::and(
                                witnesses,
                                Formula::and(
                                    e(delta.clone()),
                                    Formula::and(
                                        e(eps.clone()),
                                        hook(either.clone(), one_flat(cond)?, false)?,
                                    ),
                                ),
                            );
                            parts.push(Formula::or(either, body));
                        }
                    }
                }
            }
            big_bor(parts)
        }
        AtomKind::Independence => {
            let as_cond = Atom::perp_cond(alpha.to_vec(), Vec::new(), beta.to_vec())?;
            negation_core(&as_cond, strict_theta, strict_decomposition)?
        }
        AtomKind::Anonymity => anonymity_negation(atom, strict_decomposition, strict_theta)?,
    })
}

/// `~(α⃗ Υ β)` for a single right-hand formula.
fn unary_anonymity_negation(alpha: &[Formula], beta: &Formula, strict_theta: bool) -> Result<Formula, Error> {
    let mut parts = Vec::new();
    for gamma in signed(beta)? {
        let neq = if strict_theta {
            theta_neq_strict(alpha, alpha, &gamma)?
        } else {
            theta_neq(alpha, alpha, &gamma)?
        };
        parts.push(Formula::or(
            gamma.clone(),
            Formula::and(hook(gamma, one_flat(alpha)?, false)?, neq),
        ));
    }
    Ok(big_bor(parts))
}

fn anonymity_negation(atom: &Atom, strict: bool, strict_theta: bool) -> Result<Formula, Error> {
    let alpha = atom.alpha();
    if let [beta] = atom.beta() {
        return unary_anonymity_negation(alpha, beta, strict_theta);
    }
    let parts = atom
        .beta()
        .iter()
        .map(|b| Ok(Formula::not_simplified(unary_anonymity_negation(alpha, b, strict_theta)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    let union = if strict {
        big_strict_or(parts)
    } else {
        big_or(parts)
    };
    Ok(Formula::not_simplified(union))
}

/// `⋁ᵢ α⃗ Υ βᵢ` over lax splits and over strict splits.
pub fn anonymity_split_forms(atom: &Atom) -> Result<(Formula, Formula), Error> {
    if atom.kind() != AtomKind::Anonymity {
        return Err(Error::Unsupported(String::from("not an anonymity atom")));
    }
    let unary = atom
        .beta()
        .iter()
        .map(|b| Atom::ups(atom.alpha().to_vec(), alloc::vec![b.clone()]).map(Formula::Atom))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((big_or(unary.clone()), big_strict_or(unary)))
}

/// Odd-size teams, with `~` nested linearly deep and quadratic length.
pub fn parity_poly(d: &Domain) -> Result<Formula, Error> {
    d.check_denotation_capacity()?;
    let props: Vec<Formula> = d.props().iter().map(Formula::prop).collect();
    let one = sugar::one(&props)?;
    let mut phi = one.clone();
    for p in d.props().iter().rev() {
        let dep_p = Formula::Atom(Atom::dep(Vec::new(), alloc::vec![Formula::prop(p)])?);
        let left = Formula::bor(
            one.clone(),
            Formula::and(
                Formula::not(dep_p.clone()),
                Formula::strict_or(one.clone(), dep_p.clone()),
            ),
        );
        let right = Formula::and(dep_p, Formula::not(phi));
        phi = Formula::strict_or(one.clone(), Formula::not(Formula::strict_or(left, right)));
    }
    Ok(phi)
}

/// Cardinality parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Even- or odd-size teams, exponential length, over `{∧, ⊽, ∨}`.
pub fn parity_exp(d: &Domain, parity: Parity) -> Result<Formula, Error> {
    d.check_denotation_capacity()?;
    let mut even = Formula::bot();
    let mut odd = ne();
    for p in d.props().iter().rev() {
        let split = |x: &Formula, y: &Formula| {
            Formula::or(
                Formula::and(Formula::prop(p), x.clone()),
                Formula::and(Formula::neg_prop(p), y.clone()),
            )
        };
        let next_even = Formula::bor(split(&odd, &odd), split(&even, &even));
        let next_odd = Formula::bor(split(&odd, &even), split(&even, &odd));
        even = next_even;
        odd = next_odd;
    }
    Ok(match parity {
        Parity::Even => even,
        Parity::Odd => odd,
    })
}

/// Distributes `⊽` outward: formulas `ψᵢ` without `⊽` with `f ≡ ψ₁ ⊽ … ⊽ ψₙ`.
pub fn bor_normal_form(f: &Formula) -> Result<Vec<Formula>, Error> {
    match f {
        Formula::Lit(_) | Formula::Atom(_) => Ok(alloc::vec![f.clone()]),
        Formula::Bin(BinOp::BoolOr, l, r) => {
            let mut out = bor_normal_form(l)?;
            out.extend(bor_normal_form(r)?);
            Ok(out)
        }
        Formula::Bin(op @ (BinOp::And | BinOp::Or | BinOp::StrictOr), l, r) => {
            let left = bor_normal_form(l)?;
            let right = bor_normal_form(r)?;
            let mut out = Vec::with_capacity(left.len() * right.len());
            for x in &left {
                for y in &right {
                    out.push(Formula::bin(*op, x.clone(), y.clone()));
                }
            }
            Ok(out)
        }
        f => Err(Error::Signature(alloc::format!(
            "expected a formula over (v), /\\, \\/, \\./: {f}"
        ))),
    }
}

#[cfg(test)]
mod tests;
