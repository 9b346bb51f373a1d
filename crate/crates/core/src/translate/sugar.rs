//! Defined abbreviations.

use alloc::vec::Vec;

use super::big_and;
use crate::error::Error;
use crate::formula::{Atom, Formula, LitBase, Literal};

/// `NE ≔ ~⊥`: the team is nonempty.
pub fn ne() -> Formula {
    Formula::Lit(Literal::new(LitBase::Bot, true))
}

/// `E α ≔ ⊤ ∨ (NE ∧ α)`: some member satisfies `α`.
pub fn e(alpha: Formula) -> Formula {
    Formula::or(Formula::top(), Formula::and(ne(), alpha))
}

/// `α ↪ φ ≔ ¬α ∨ (α ∧ φ)`: the members satisfying `α` form a team that
/// satisfies `φ`. With `strict`, the split is strict.
pub fn hook(alpha: Formula, phi: Formula, strict: bool) -> Result<Formula, Error> {
    let neg = alpha.dual()?;
    let rest = Formula::and(alpha, phi);
    Ok(if strict {
        Formula::strict_or(neg, rest)
    } else {
        Formula::or(neg, rest)
    })
}

/// `α⃗ ↔ β⃗ ≔ ⋀ᵢ ((αᵢ ∧ βᵢ) ∨ (¬αᵢ ∧ ¬βᵢ))`.
pub fn iff(alpha: &[Formula], beta: &[Formula]) -> Result<Formula, Error> {
    if alpha.len() != beta.len() {
        return Err(Error::Arity(alloc::format!(
            "cannot compare tuples of lengths {} and {}",
            alpha.len(),
            beta.len()
        )));
    }
    let parts = alpha
        .iter()
        .zip(beta)
        .map(|(a, b)| {
            Ok(Formula::or(
                Formula::and(a.clone(), b.clone()),
                Formula::and(a.dual()?, b.dual()?),
            ))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(big_and(parts))
}

/// `α⃗ ↮ β⃗ ≔ ¬(α⃗ ↔ β⃗)`, with the negation pushed inward.
pub fn niff(alpha: &[Formula], beta: &[Formula]) -> Result<Formula, Error> {
    iff(alpha, beta)?.dual()
}

/// `𝟏_α ≔ ~⊥ ∧ ⋀ᵢ dep(;αᵢ)`: the team is nonempty and constant on `α⃗`.
pub fn one(alpha: &[Formula]) -> Result<Formula, Error> {
    let deps = alpha
        .iter()
        .map(|a| Atom::dep(Vec::new(), alloc::vec![a.clone()]).map(Formula::Atom))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Formula::and(ne(), big_and(deps)))
}

/// [`one`] with each constancy atom written as `αᵢ ⊽ ¬αᵢ`, so that the
/// result stays atom-free.
pub fn one_flat(alpha: &[Formula]) -> Result<Formula, Error> {
    let parts = alpha
        .iter()
        .map(|a| Ok(Formula::bor(a.clone(), a.dual()?)))
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Formula::and(ne(), big_and(parts)))
}
