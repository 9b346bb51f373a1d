//! Domains, assignments and teams.
//!
//! An assignment over a domain of `n` propositions is identified with an
//! index in `0..2^n`: bit `j` of the index holds the value of `props[j]`.
//! A team is a bitmask over those indices.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// Largest domain on which teams can be represented.
pub const MAX_TEAM_PROPS: usize = 5;
/// Largest domain on which whole denotations (sets of teams) are materialised.
pub const MAX_DENOTATION_PROPS: usize = 4;

const RESERVED: &[&str] = &[
    "top", "bot", "dep", "perp", "perpc", "inc", "excl", "ups", "hook", "iff",
];

/// Whether `name` can be used as a proposition.
pub fn is_valid_prop_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && !RESERVED.contains(&name)
}

/// An ordered set of proposition names.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domain {
    props: Arc<[String]>,
}

impl Domain {
    pub fn new<I, S>(props: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let props: Vec<String> = props.into_iter().map(Into::into).collect();
        for (i, p) in props.iter().enumerate() {
            if !is_valid_prop_name(p) {
                return Err(Error::InvalidProp(p.clone()));
            }
            if props[..i].contains(p) {
                return Err(Error::DuplicateProp(p.clone()));
            }
        }
        Ok(Domain {
            props: props.into(),
        })
    }

    pub fn empty() -> Self {
        Domain {
            props: Arc::from(Vec::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.props.len()
    }

    pub fn is_empty(&self) -> bool {
        self.props.is_empty()
    }

    pub fn props(&self) -> &[String] {
        &self.props
    }

    pub fn index_of(&self, prop: &str) -> Option<usize> {
        self.props.iter().position(|p| p == prop)
    }

    pub fn contains(&self, prop: &str) -> bool {
        self.index_of(prop).is_some()
    }

    /// Every proposition of `self` occurs in `other` (order ignored).
    pub fn is_subdomain_of(&self, other: &Domain) -> bool {
        self.props.iter().all(|p| other.contains(p))
    }

    /// Number of assignments, `2^n`.
    pub fn assignment_count(&self) -> usize {
        1usize << self.len()
    }

    /// `self` followed by `count` fresh names not already in use.
    pub fn with_fresh(&self, count: usize) -> Domain {
        let mut props: Vec<String> = self.props.to_vec();
        let mut i = 0;
        while props.len() < self.len() + count {
            let name = alloc::format!("x{i}");
            if !props.contains(&name) {
                props.push(name);
            }
            i += 1;
        }
        Domain {
            props: props.into(),
        }
    }

    pub(crate) fn check_team_capacity(&self) -> Result<(), Error> {
        if self.len() > MAX_TEAM_PROPS {
            Err(Error::Capacity {
                what: "team",
                props: self.len(),
                max: MAX_TEAM_PROPS,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_denotation_capacity(&self) -> Result<(), Error> {
        if self.len() > MAX_DENOTATION_PROPS {
            Err(Error::Capacity {
                what: "denotation",
                props: self.len(),
                max: MAX_DENOTATION_PROPS,
            })
        } else {
            Ok(())
        }
    }

    /// Renders assignment `index` as a bitstring in domain order.
    pub fn bitstring(&self, index: u32) -> String {
        (0..self.len())
            .map(|j| if index >> j & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Parses a bitstring in domain order into an assignment index.
    pub fn parse_bitstring(&self, text: &str) -> Result<u32, Error> {
        if text.len() != self.len() {
            return Err(Error::BadAssignment(text.to_string()));
        }
        let mut index = 0u32;
        for (j, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => index |= 1 << j,
                _ => return Err(Error::BadAssignment(text.to_string())),
            }
        }
        Ok(index)
    }
}

impl fmt::Debug for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.props.iter()).finish()
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.props.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(p)?;
        }
        Ok(())
    }
}

/// A single assignment, stored as its index over some domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(pub u32);

impl Assignment {
    /// Value of the `j`-th proposition of the domain.
    pub fn value(self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }
}

/// Mask with the low `2^n` bits set: all assignments of an `n`-prop domain.
pub(crate) fn full_mask(n: usize) -> u32 {
    let size = 1u32 << n;
    if size >= 32 {
        u32::MAX
    } else {
        (1u32 << size) - 1
    }
}

/// A set of assignments over a domain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Team {
    domain: Domain,
    members: u32,
}

impl Team {
    pub fn new(domain: Domain, members: u32) -> Result<Self, Error> {
        domain.check_team_capacity()?;
        if members & !full_mask(domain.len()) != 0 {
            return Err(Error::MemberOutOfRange);
        }
        Ok(Team { domain, members })
    }

    pub fn empty(domain: Domain) -> Result<Self, Error> {
        Team::new(domain, 0)
    }

    pub fn full(domain: Domain) -> Result<Self, Error> {
        let mask = full_mask(domain.len());
        Team::new(domain, mask)
    }

    pub fn from_assignments<I>(domain: Domain, assignments: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = u32>,
    {
        domain.check_team_capacity()?;
        let mut members = 0u32;
        for a in assignments {
            if (a as usize) >= domain.assignment_count() {
                return Err(Error::MemberOutOfRange);
            }
            members |= 1 << a;
        }
        Ok(Team { domain, members })
    }

    /// Builds a team from bitstrings in domain order.
    pub fn from_bitstrings<'a, I>(domain: Domain, rows: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let indices = rows
            .into_iter()
            .map(|r| domain.parse_bitstring(r))
            .collect::<Result<Vec<_>, _>>()?;
        Team::from_assignments(domain, indices)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn mask(&self) -> u32 {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn contains(&self, a: Assignment) -> bool {
        a.0 < 32 && self.members >> a.0 & 1 == 1
    }

    /// Member assignments in increasing index order.
    pub fn assignments(&self) -> impl Iterator<Item = Assignment> + '_ {
        bits(self.members).map(Assignment)
    }

    pub fn is_subteam_of(&self, other: &Team) -> bool {
        self.members & !other.members == 0
    }

    pub fn with_members(&self, members: u32) -> Result<Team, Error> {
        Team::new(self.domain.clone(), members)
    }

    /// Restriction of every member to the propositions of `sub`.
    pub fn project(&self, sub: &Domain) -> Result<Team, Error> {
        let map = prop_map(sub, &self.domain)?;
        let members = bits(self.members)
            .map(|a| 1u32 << restrict(a, &map))
            .fold(0, |acc, b| acc | b);
        Team::new(sub.clone(), members)
    }

    /// All assignments over `sup` whose restriction to this team's domain
    /// is a member.
    pub fn expand(&self, sup: &Domain) -> Result<Team, Error> {
        sup.check_team_capacity()?;
        let map = prop_map(&self.domain, sup)?;
        let members = (0..sup.assignment_count() as u32)
            .filter(|&a| self.members >> restrict(a, &map) & 1 == 1)
            .fold(0, |acc, a| acc | 1 << a);
        Team::new(sup.clone(), members)
    }

    /// Renders the members as bitstrings.
    pub fn bitstrings(&self) -> Vec<String> {
        self.assignments()
            .map(|a| self.domain.bitstring(a.0))
            .collect()
    }
}

impl fmt::Debug for Team {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Team{:?}{{", self.domain)?;
        for (i, row) in self.bitstrings().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(row)?;
        }
        f.write_str("}")
    }
}

/// Set bit positions of a mask, low to high.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = u32> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros();
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// For each prop of `sub`, its position in `sup`.
fn prop_map(sub: &Domain, sup: &Domain) -> Result<Vec<usize>, Error> {
    sub.props()
        .iter()
        .map(|p| {
            sup.index_of(p)
                .ok_or_else(|| Error::DomainMismatch(p.clone()))
        })
        .collect()
}

/// Assignment index over `sup` restricted to the sub-domain described by `map`.
fn restrict(a: u32, map: &[usize]) -> u32 {
    map.iter()
        .enumerate()
        .fold(0, |acc, (i, &j)| acc | (a >> j & 1) << i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pq() -> Domain {
        Domain::new(["p", "q"]).unwrap()
    }

    #[test]
    fn bitstrings_round_trip() {
        let d = pq();
        for a in 0..4 {
            assert_eq!(d.parse_bitstring(&d.bitstring(a)).unwrap(), a);
        }
        // char j is props[j]
        assert_eq!(d.parse_bitstring("10").unwrap(), 1);
        assert_eq!(d.parse_bitstring("01").unwrap(), 2);
    }

    #[test]
    fn rejects_bad_domains() {
        assert!(Domain::new(["p", "p"]).is_err());
        assert!(Domain::new(["top"]).is_err());
        assert!(Domain::new(["P"]).is_err());
        assert!(Team::full(Domain::new(["a", "b", "c", "d", "e", "f"]).unwrap()).is_err());
    }

    #[test]
    fn projection_examples() {
        let d = pq();
        let p = Domain::new(["p"]).unwrap();
        let t = Team::from_bitstrings(d.clone(), ["00", "01"]).unwrap();
        assert_eq!(t.project(&p).unwrap().bitstrings(), vec!["0"]);
        assert!(Team::empty(d.clone()).unwrap().project(&p).unwrap().is_empty());
        assert_eq!(
            Team::full(d.clone()).unwrap().project(&p).unwrap(),
            Team::full(p.clone()).unwrap()
        );
    }

    #[test]
    fn expansion_examples() {
        let d = pq();
        let p = Domain::new(["p"]).unwrap();
        let t = Team::from_bitstrings(p.clone(), ["1"]).unwrap();
        assert_eq!(t.expand(&d).unwrap().bitstrings(), vec!["10", "11"]);
        assert!(Team::empty(p.clone()).unwrap().expand(&d).unwrap().is_empty());
        assert_eq!(
            Team::full(p.clone()).unwrap().expand(&d).unwrap(),
            Team::full(d.clone()).unwrap()
        );
        for m in 0..16 {
            let t = Team::new(d.clone(), m).unwrap();
            let q = Domain::new(["q", "p", "r"]).unwrap();
            assert_eq!(t.expand(&q).unwrap().project(&d).unwrap(), t);
        }
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let d = Domain::new(["x0", "p"]).unwrap();
        assert_eq!(d.with_fresh(2).props(), &["x0", "p", "x1", "x2"]);
    }
}
