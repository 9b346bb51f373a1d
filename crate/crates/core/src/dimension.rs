//! Generators of downward-interval form, their dimension, and the
//! maximal-team counts behind the succinctness lower bounds.
//!
//! A generator is a set of pairs `(S, U)` with `S ⊆ U`; it generates a
//! formula when the formula holds in exactly the teams `T` with
//! `S ⊆ T ⊆ U` for some pair. Its dimension is the number of distinct `U`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::atoms::{maximal_teams, pure_value, witness_domain};
use crate::domain::{full_mask, Domain};
use crate::error::Error;
use crate::formula::{Atom, AtomKind, BinOp, Formula, Literal};
use crate::semantics::denotation;
use crate::translate::relax;

/// Largest number of pairs a generator may grow to during construction.
pub const MAX_GENERATOR_PAIRS: usize = 1 << 16;

/// A set of `(lower, upper)` team masks over a domain, with `lower ⊆ upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    domain: Domain,
    pairs: BTreeSet<(u32, u32)>,
}

impl Generator {
    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.pairs.iter().copied()
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Number of distinct upper bounds.
    pub fn dim(&self) -> usize {
        self.pairs.iter().map(|&(_, u)| u).collect::<BTreeSet<_>>().len()
    }

    /// Whether some pair brackets the team mask `t`.
    pub fn generates(&self, t: u32) -> bool {
        self.pairs.iter().any(|&(s, u)| s & !t == 0 && t & !u == 0)
    }

    /// Whether the generator matches the denotation of `f` over its domain.
    pub fn is_generator_of(&self, f: &Formula) -> Result<bool, Error> {
        let den = denotation(f, &self.domain)?;
        Ok((0..den.family().universe()).all(|t| den.contains_mask(t) == self.generates(t)))
    }

    fn from_pairs(domain: &Domain, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Generator, Error> {
        let pairs: BTreeSet<(u32, u32)> = pairs.into_iter().filter(|&(s, u)| s & !u == 0).collect();
        if pairs.len() > MAX_GENERATOR_PAIRS {
            return Err(Error::SearchLimit(format!(
                "generator exceeds {MAX_GENERATOR_PAIRS} pairs"
            )));
        }
        Ok(Generator {
            domain: domain.clone(),
            pairs,
        })
    }
}

/// Builds a generator for `f` over `d` inductively: flat literals give
/// `(∅, U)`, negated literals `({s}, full)`, `∧` meets the pairs, `∨`
/// joins them and `⊽` takes the union.
///
/// Strict disjunctions are accepted when relaxing them leaves the
/// denotation over `d` unchanged; the relaxed formula is then generated.
pub fn generator_for(f: &Formula, d: &Domain) -> Result<Generator, Error> {
    d.check_team_capacity()?;
    for p in f.props() {
        if !d.contains(&p) {
            return Err(Error::DomainMismatch(p));
        }
    }
    let g = if f.occ_strict() > 0 {
        let lax = relax(f);
        if denotation(f, d)?.family() != denotation(&lax, d)?.family() {
            return Err(Error::Signature(format!(
                "{f} differs from its relaxation, so no generator is built"
            )));
        }
        lax
    } else {
        f.clone()
    };
    build(&g, d)
}

fn build(f: &Formula, d: &Domain) -> Result<Generator, Error> {
    match f {
        Formula::Lit(l) => literal_generator(l, d),
        Formula::Bin(op, l, r) => {
            let (gl, gr) = (build(l, d)?, build(r, d)?);
            match op {
                BinOp::BoolOr => Generator::from_pairs(d, gl.pairs().chain(gr.pairs())),
                BinOp::And => Generator::from_pairs(d, cross(&gl, &gr, |u1, u2| u1 & u2)),
                BinOp::Or => Generator::from_pairs(d, cross(&gl, &gr, |u1, u2| u1 | u2)),
                op => Err(Error::Signature(format!(
                    "no generator rule for `{}`",
                    op.symbol()
                ))),
            }
        }
        Formula::Not(_) => Err(Error::Signature(format!(
            "no generator rule for `~` outside literals in {f}"
        ))),
        Formula::Atom(_) => Err(Error::Signature(format!("no generator rule for the atom {f}"))),
    }
}

fn cross(gl: &Generator, gr: &Generator, upper: impl Fn(u32, u32) -> u32) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(gl.len() * gr.len());
    for (s1, u1) in gl.pairs() {
        for (s2, u2) in gr.pairs() {
            out.push((s1 | s2, upper(u1, u2)));
        }
    }
    out
}

fn literal_generator(l: &Literal, d: &Domain) -> Result<Generator, Error> {
    let base = Formula::Lit(Literal::new(l.base.clone(), false));
    let mut sat = 0u32;
    for s in 0..d.assignment_count() as u32 {
        if pure_value(&base, d, s)? {
            sat |= 1 << s;
        }
    }
    let full = full_mask(d.len());
    if l.strong {
        // some member falsifies the flat literal
        let falsifying = full & !sat;
        Generator::from_pairs(d, crate::domain::bits(falsifying).map(|s| (1 << s, full)))
    } else {
        Generator::from_pairs(d, [(0, sat)])
    }
}

/// The dimension of the constructed generator, checked against
/// `2^{occ⊽(f)}`.
pub fn dim_upper_bound(f: &Formula, d: &Domain) -> Result<usize, Error> {
    let dim = generator_for(f, d)?.dim();
    let bound = 1usize.checked_shl(f.occ_bor() as u32).unwrap_or(usize::MAX);
    if dim > bound {
        return Err(Error::Unsupported(format!(
            "generator dimension {dim} exceeds 2^{} for {f}",
            f.occ_bor()
        )));
    }
    Ok(dim)
}

/// Number of maximal teams satisfying `f` over `d`, a lower bound for the
/// size of any generator.
pub fn dim_lower_bound_by_maximal_teams(f: &Formula, d: &Domain) -> Result<usize, Error> {
    Ok(maximal_teams(f, d)?.len())
}

/// Largest `n` accepted by [`succinctness_certificate`].
pub const MAX_CERTIFICATE_ARITY: usize = 6;

/// Lower bound on the length of formulas of the existential fragment
/// expressing a dependence or exclusion atom of arity `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccinctnessCertificate {
    pub atom: AtomKind,
    pub arity: usize,
    /// Number of maximal teams of the atom.
    pub max_teams: u128,
    /// Whether `max_teams` was counted by enumeration (otherwise it is the
    /// closed form).
    pub enumerated: bool,
    pub implied_min_length: u128,
}

/// The atom `dep(p1..pn; q1)` or `excl(p1..pn; q1..qn)` and its domain.
pub fn certificate_atom(kind: AtomKind, n: usize) -> Result<(Atom, Domain), Error> {
    let props = |prefix: &str, count: usize| -> Vec<Formula> {
        (1..=count).map(|i| Formula::prop(format!("{prefix}{i}"))).collect()
    };
    match kind {
        AtomKind::Dependence => Ok((Atom::dep(props("p", n), props("q", 1))?, witness_domain(n, 1)?)),
        AtomKind::Exclusion => Ok((Atom::excl(props("p", n), props("q", n))?, witness_domain(n, n)?)),
        other => Err(Error::Unsupported(format!(
            "no succinctness certificate for {}",
            other.keyword()
        ))),
    }
}

/// Counts the maximal teams of the atom (by enumeration when the domain
/// fits, by closed form otherwise) and derives the length bound `2^n`:
/// a generator of a formula of length `ℓ` has at most `2^ℓ` upper bounds,
/// and for exclusion the two degenerate ones are never maximal.
pub fn succinctness_certificate(kind: AtomKind, n: usize) -> Result<SuccinctnessCertificate, Error> {
    if n > MAX_CERTIFICATE_ARITY {
        return Err(Error::Capacity {
            what: "certificate",
            props: n,
            max: MAX_CERTIFICATE_ARITY,
        });
    }
    let (atom, domain) = certificate_atom(kind, n)?;
    let closed = match kind {
        AtomKind::Dependence => 1u128 << (1u32 << n),
        _ => (1u128 << (1u32 << n)) - 2,
    };
    let (max_teams, enumerated) = if domain.len() <= crate::domain::MAX_DENOTATION_PROPS {
        let count = dim_lower_bound_by_maximal_teams(&Formula::Atom(atom), &domain)? as u128;
        (count, true)
    } else {
        (closed, false)
    };
    let offset = if kind == AtomKind::Dependence { 0 } else { 2 };
    let implied_min_length = ceil_log2(max_teams + offset) as u128;
    Ok(SuccinctnessCertificate {
        atom: kind,
        arity: n,
        max_teams,
        enumerated,
        implied_min_length,
    })
}

fn ceil_log2(x: u128) -> u32 {
    if x <= 1 {
        0
    } else {
        128 - (x - 1).leading_zeros()
    }
}
