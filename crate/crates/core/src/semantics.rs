//! Team semantics: evaluation, denotations, equivalence and closure checks.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::atoms::{self, Row};
use crate::domain::{bits, Domain, Team, MAX_DENOTATION_PROPS};
use crate::error::Error;
use crate::family::TeamFamily;
use crate::formula::{BinOp, Formula, Literal};

/// Largest team on which split connectives are evaluated directly.
pub const MAX_SPLIT_TEAM: usize = 16;

/// The set of teams over a domain that satisfy a formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Denotation {
    domain: Domain,
    family: TeamFamily,
}

impl Denotation {
    pub fn new(domain: Domain, family: TeamFamily) -> Result<Self, Error> {
        domain.check_denotation_capacity()?;
        if family.points() != 1 << domain.len() {
            return Err(Error::MemberOutOfRange);
        }
        Ok(Denotation { domain, family })
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn family(&self) -> &TeamFamily {
        &self.family
    }

    /// Whether the team with membership mask `t` satisfies the formula.
    pub fn contains_mask(&self, t: u32) -> bool {
        self.family.contains(t)
    }

    pub fn contains(&self, team: &Team) -> bool {
        team.domain() == &self.domain && self.family.contains(team.mask())
    }

    /// Membership masks of the satisfying teams, in increasing order.
    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.family.iter()
    }

    pub fn count(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn complement(&self) -> Denotation {
        Denotation {
            domain: self.domain.clone(),
            family: self.family.complement(),
        }
    }
}

/// Bottom-up evaluator over the subteams of a fixed list of assignments.
struct Engine<'f> {
    domain: Domain,
    points: Vec<u32>,
    memo: BTreeMap<&'f Formula, Rc<TeamFamily>>,
}

impl<'f> Engine<'f> {
    fn new(domain: Domain, points: Vec<u32>) -> Self {
        Engine {
            domain,
            points,
            memo: BTreeMap::new(),
        }
    }

    fn k(&self) -> u32 {
        self.points.len() as u32
    }

    fn family(&mut self, f: &'f Formula) -> Result<Rc<TeamFamily>, Error> {
        if let Some(known) = self.memo.get(f) {
            return Ok(known.clone());
        }
        let fam = match f {
            Formula::Lit(l) => self.literal(l)?,
            Formula::Not(g) => self.family(g)?.complement(),
            Formula::Bin(op, l, r) => {
                let a = self.family(l)?;
                let b = self.family(r)?;
                match op {
                    BinOp::And => a.intersection(&b),
                    BinOp::BoolOr => a.union(&b),
                    BinOp::Or => a.union_product(&b),
                    BinOp::StrictOr => a.disjoint_product(&b),
                    BinOp::CoAnd => a.complement().union_product(&b.complement()).complement(),
                    BinOp::StrictCoAnd => {
                        a.complement().disjoint_product(&b.complement()).complement()
                    }
                }
            }
            Formula::Atom(atom) => {
                let rows = self
                    .points
                    .iter()
                    .map(|&s| atoms::row(atom, &self.domain, s))
                    .collect::<Result<Vec<Row>, _>>()?;
                let mut buf = Vec::with_capacity(rows.len());
                TeamFamily::from_fn(self.k(), |t| {
                    buf.clear();
                    buf.extend(bits(t).map(|i| rows[i as usize]));
                    atoms::holds(atom.kind(), &mut buf)
                })
            }
        };
        let fam = Rc::new(fam);
        self.memo.insert(f, fam.clone());
        Ok(fam)
    }

    fn literal(&self, l: &Literal) -> Result<TeamFamily, Error> {
        let base = Formula::Lit(Literal::new(l.base.clone(), false));
        let mut mask = 0u32;
        for (i, &s) in self.points.iter().enumerate() {
            if atoms::pure_value(&base, &self.domain, s)? {
                mask |= 1 << i;
            }
        }
        let down = TeamFamily::downset(self.k(), mask);
        Ok(if l.strong { down.complement() } else { down })
    }
}

fn check_props(f: &Formula, d: &Domain) -> Result<(), Error> {
    match f.props().into_iter().find(|p| !d.contains(p)) {
        Some(p) => Err(Error::DomainMismatch(p)),
        None => Ok(()),
    }
}

/// Whether `team` satisfies `f`.
pub fn eval(f: &Formula, team: &Team) -> Result<bool, Error> {
    check_props(f, team.domain())?;
    if !f.has_splits() {
        return eval_direct(f, team);
    }
    if team.len() > MAX_SPLIT_TEAM {
        return Err(Error::TeamTooLarge {
            size: team.len(),
            max: MAX_SPLIT_TEAM,
        });
    }
    let points: Vec<u32> = bits(team.mask()).collect();
    let k = points.len() as u32;
    let mut engine = Engine::new(team.domain().clone(), points);
    Ok(engine.family(f)?.contains((1u32 << k) - 1))
}

/// Evaluation of split-free formulas without materialising subteams.
fn eval_direct(f: &Formula, team: &Team) -> Result<bool, Error> {
    match f {
        Formula::Lit(l) => {
            let base = Formula::Lit(Literal::new(l.base.clone(), false));
            let mut all = true;
            for s in team.assignments() {
                all &= atoms::pure_value(&base, team.domain(), s.0)?;
            }
            Ok(all != l.strong)
        }
        Formula::Not(g) => Ok(!eval_direct(g, team)?),
        Formula::Bin(BinOp::And, l, r) => Ok(eval_direct(l, team)? && eval_direct(r, team)?),
        Formula::Bin(BinOp::BoolOr, l, r) => Ok(eval_direct(l, team)? || eval_direct(r, team)?),
        Formula::Bin(..) => eval(f, team),
        Formula::Atom(a) => atoms::eval_atom(a, team),
    }
}

/// All teams over `d` that satisfy `f`.
pub fn denotation(f: &Formula, d: &Domain) -> Result<Denotation, Error> {
    d.check_denotation_capacity()?;
    check_props(f, d)?;
    let points: Vec<u32> = (0..d.assignment_count() as u32).collect();
    let mut engine = Engine::new(d.clone(), points);
    let family = (*engine.family(f)?).clone();
    Ok(Denotation {
        domain: d.clone(),
        family,
    })
}

/// The sorted propositions of `fs` followed by `extra` fresh ones. Without an
/// explicit count, one fresh proposition per strict split is added, as far as
/// capacity allows.
pub fn joint_domain(fs: &[&Formula], extra: Option<usize>) -> Result<Domain, Error> {
    let mut props: Vec<String> = Vec::new();
    for f in fs {
        props.extend(f.props());
    }
    props.sort();
    props.dedup();
    let base = Domain::new(props)?;
    let extra = match extra {
        Some(n) => n,
        None => {
            let wanted: usize = fs.iter().map(|f| f.occ_strict()).sum();
            wanted.min(MAX_DENOTATION_PROPS.saturating_sub(base.len()))
        }
    };
    let d = base.with_fresh(extra);
    d.check_denotation_capacity()?;
    Ok(d)
}

/// Equal denotations over the joint domain of `f` and `g`.
pub fn equivalent(f: &Formula, g: &Formula, extra: Option<usize>) -> Result<bool, Error> {
    let d = joint_domain(&[f, g], extra)?;
    Ok(denotation(f, &d)? == denotation(g, &d)?)
}

/// Inclusion of denotations over the joint domain of `f` and `g`.
pub fn entails(f: &Formula, g: &Formula, extra: Option<usize>) -> Result<bool, Error> {
    let d = joint_domain(&[f, g], extra)?;
    Ok(denotation(f, &d)?
        .family()
        .is_subset(denotation(g, &d)?.family()))
}

/// Some team over `d` (possibly the empty one) satisfies `f`.
pub fn satisfiable(f: &Formula, d: &Domain) -> Result<bool, Error> {
    Ok(!denotation(f, d)?.is_empty())
}

pub fn project(t: &Team, sub: &Domain) -> Result<Team, Error> {
    t.project(sub)
}

pub fn expand(t: &Team, sup: &Domain) -> Result<Team, Error> {
    t.expand(sup)
}

/// Closure properties of a formula over a domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    /// Closed under unions of nonempty families of satisfying teams.
    pub union_closed: bool,
    pub downward_closed: bool,
    pub upward_closed: bool,
    pub empty_team: bool,
    /// Checked pointwise: a team satisfies iff all its singletons do.
    pub flat: bool,
}

pub fn closure_report(f: &Formula, d: &Domain) -> Result<ClosureReport, Error> {
    let den = denotation(f, d)?;
    let fam = den.family();
    let singleton_ok = |s: u32| fam.contains(1 << s);
    let flat = (0..fam.universe()).all(|t| fam.contains(t) == bits(t).all(singleton_ok));
    Ok(ClosureReport {
        union_closed: fam.union_product(fam).is_subset(fam),
        downward_closed: fam.is_downward_closed(),
        upward_closed: fam.is_upward_closed(),
        empty_team: fam.contains(0),
        flat,
    })
}

/// Whether satisfaction of `f` depends only on the projection to its own
/// propositions, checked on `extra` fresh propositions.
pub fn is_local(f: &Formula, extra: usize) -> Result<bool, Error> {
    let base = joint_domain(&[f], Some(0))?;
    let ext = base.with_fresh(extra);
    ext.check_denotation_capacity()?;
    let small = denotation(f, &base)?;
    let large = denotation(f, &ext)?;
    let low = (1u32 << base.len()) - 1;
    Ok((0..large.family().universe()).all(|t| {
        let projected = bits(t).fold(0u32, |acc, s| acc | 1 << (s & low));
        large.contains_mask(t) == small.contains_mask(projected)
    }))
}

/// Renders a denotation as the list of its teams, for diagnostics.
pub fn describe(den: &Denotation) -> String {
    let mut out = String::new();
    for t in den.masks() {
        let team = Team::new(den.domain().clone(), t).expect("mask in range");
        out.push('{');
        out.push_str(&team.bitstrings().join(","));
        out.push('}');
    }
    if out.is_empty() {
        out = "none".to_string();
    }
    out
}
