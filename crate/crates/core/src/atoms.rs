//! Dependency atoms: direct semantics, maximal teams and the witness teams
//! used for density lower bounds.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::domain::{Domain, Team};
use crate::error::Error;
use crate::formula::{Atom, AtomKind, BinOp, Formula, LitBase};
use crate::semantics::denotation;

/// Value of a purely propositional formula at an assignment.
pub fn pure_value(f: &Formula, domain: &Domain, assignment: u32) -> Result<bool, Error> {
    match f {
        Formula::Lit(l) if !l.strong => Ok(match &l.base {
            LitBase::Top => true,
            LitBase::Bot => false,
            LitBase::Pos(p) => assignment >> prop_index(domain, p)? & 1 == 1,
            LitBase::Neg(p) => assignment >> prop_index(domain, p)? & 1 == 0,
        }),
        Formula::Bin(BinOp::And, l, r) => {
            Ok(pure_value(l, domain, assignment)? && pure_value(r, domain, assignment)?)
        }
        Formula::Bin(BinOp::Or, l, r) => {
            Ok(pure_value(l, domain, assignment)? || pure_value(r, domain, assignment)?)
        }
        f => Err(Error::NotPure(format!("{f}"))),
    }
}

fn prop_index(domain: &Domain, p: &str) -> Result<usize, Error> {
    domain
        .index_of(p)
        .ok_or_else(|| Error::DomainMismatch(String::from(p)))
}

/// Values of a tuple at an assignment, packed as bits (component `i` at bit `i`).
fn tuple_code(tuple: &[Formula], domain: &Domain, assignment: u32) -> Result<u64, Error> {
    if tuple.len() > 64 {
        return Err(Error::Arity(format!("tuple of length {} is too long", tuple.len())));
    }
    let mut code = 0u64;
    for (i, f) in tuple.iter().enumerate() {
        code |= u64::from(pure_value(f, domain, assignment)?) << i;
    }
    Ok(code)
}

/// The values `(s(α), s(γ), s(β))` of an atom's tuples at one assignment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Row {
    pub a: u64,
    pub c: u64,
    pub b: u64,
}

pub(crate) fn row(atom: &Atom, domain: &Domain, assignment: u32) -> Result<Row, Error> {
    Ok(Row {
        a: tuple_code(atom.alpha(), domain, assignment)?,
        c: tuple_code(atom.cond(), domain, assignment)?,
        b: tuple_code(atom.beta(), domain, assignment)?,
    })
}

/// Whether the team whose members have the given rows satisfies an atom of
/// kind `kind`. The rows are reordered.
pub(crate) fn holds(kind: AtomKind, rows: &mut [Row]) -> bool {
    match kind {
        AtomKind::Dependence => {
            rows.sort_unstable_by_key(|r| (r.a, r.b));
            rows.windows(2).all(|w| w[0].a != w[1].a || w[0].b == w[1].b)
        }
        AtomKind::Independence => independent(rows),
        AtomKind::CondIndependence => {
            rows.sort_unstable_by_key(|r| r.c);
            rows.chunk_by_mut(|x, y| x.c == y.c).all(independent)
        }
        AtomKind::Inclusion | AtomKind::Exclusion => {
            let mut bs: Vec<u64> = rows.iter().map(|r| r.b).collect();
            bs.sort_unstable();
            let inside = |r: &Row| bs.binary_search(&r.a).is_ok();
            if kind == AtomKind::Inclusion {
                rows.iter().all(inside)
            } else {
                !rows.iter().any(inside)
            }
        }
        AtomKind::Anonymity => {
            rows.sort_unstable_by_key(|r| (r.a, r.b));
            rows.chunk_by(|x, y| x.a == y.a)
                .all(|group| group.iter().any(|r| r.b != group[0].b))
        }
    }
}

/// `|{(a,b)}| = |{a}| · |{b}|`.
fn independent(rows: &mut [Row]) -> bool {
    rows.sort_unstable_by_key(|r| (r.a, r.b));
    let mut pairs = 0usize;
    let mut alphas = 0usize;
    for (i, r) in rows.iter().enumerate() {
        if i == 0 || rows[i - 1].a != r.a {
            alphas += 1;
            pairs += 1;
        } else if rows[i - 1].b != r.b {
            pairs += 1;
        }
    }
    let mut bs: Vec<u64> = rows.iter().map(|r| r.b).collect();
    bs.sort_unstable();
    bs.dedup();
    pairs == alphas * bs.len()
}

/// Direct evaluation of an atom on a team.
pub fn eval_atom(atom: &Atom, team: &Team) -> Result<bool, Error> {
    let mut rows = team
        .assignments()
        .map(|s| row(atom, team.domain(), s.0))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(holds(atom.kind(), &mut rows))
}

/// All `⊆`-maximal teams over `d` satisfying `f`.
pub fn maximal_teams(f: &Formula, d: &Domain) -> Result<Vec<Team>, Error> {
    let den = denotation(f, d)?;
    den.family()
        .maximal()
        .into_iter()
        .map(|m| Team::new(d.clone(), m))
        .collect()
}

/// The witness constructions of the density lower bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// A team of size `2^n - [2^n - k]_m` for the property `|T| ≡ k mod m`.
    CardinalityMod { k: usize },
    /// A team of size `k` for the property `|T| = k`.
    Cardinality { k: usize },
    /// The cycle team for `p⃗ ⊆ q⃗`.
    Inclusion,
    /// The full team for `p⃗ ⊥ q⃗`.
    Independence,
    /// The full team for `p⃗ Υ q`.
    Anonymity,
}

/// `p1..pn` followed by `q1..qm`.
pub fn witness_domain(n: usize, m: usize) -> Result<Domain, Error> {
    let ps = (1..=n).map(|i| format!("p{i}"));
    let qs = (1..=m).map(|i| format!("q{i}"));
    Domain::new(ps.chain(qs))
}

/// The witness team of `kind` over `p1..pn` (and `q`s where the property
/// needs them). `m` is the modulus for [`WitnessKind::CardinalityMod`] and the
/// arity of `q⃗` for independence; inclusion uses `n` `q`s, anonymity one.
pub fn witness_team(kind: WitnessKind, n: usize, m: usize) -> Result<Team, Error> {
    match kind {
        WitnessKind::CardinalityMod { k } => {
            let size = 1usize << n;
            if m == 0 || m > size || k >= m {
                return Err(Error::Arity(String::from("need m <= 2^n and k < m")));
            }
            let target = size - (size - k) % m;
            let d = witness_domain(n, 0)?;
            Team::from_assignments(d, 0..target as u32)
        }
        WitnessKind::Cardinality { k } => {
            if k > 1 << n {
                return Err(Error::Arity(String::from("need k <= 2^n")));
            }
            let d = witness_domain(n, 0)?;
            Team::from_assignments(d, 0..k as u32)
        }
        WitnessKind::Inclusion => {
            let d = witness_domain(n, n)?;
            d.check_team_capacity()?;
            let size = 1u32 << n;
            let encode = |v: u32, offset: usize| {
                (0..n).fold(0u32, |acc, j| acc | (v >> (n - 1 - j) & 1) << (offset + j))
            };
            let members = (0..size).map(|i| encode(i, 0) | encode((i + 1) % size, n));
            Team::from_assignments(d, members)
        }
        WitnessKind::Independence => Team::full(witness_domain(n, m)?),
        WitnessKind::Anonymity => Team::full(witness_domain(n, 1)?),
    }
}

/// The atom a witness team belongs to, if any.
pub fn witness_atom(kind: WitnessKind, n: usize, m: usize) -> Result<Option<Atom>, Error> {
    let props = |prefix: &str, count: usize| -> Vec<Formula> {
        (1..=count).map(|i| Formula::prop(format!("{prefix}{i}"))).collect()
    };
    Ok(match kind {
        WitnessKind::Inclusion => Some(Atom::inc(props("p", n), props("q", n))?),
        WitnessKind::Independence => Some(Atom::perp(props("p", n), props("q", m))?),
        WitnessKind::Anonymity => Some(Atom::ups(props("p", n), props("q", 1))?),
        _ => None,
    })
}
