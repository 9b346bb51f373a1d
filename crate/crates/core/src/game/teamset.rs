//! Fixed-size sets of teams over domains of at most three propositions.

use alloc::vec::Vec;
use core::fmt;

use crate::domain::bits;

/// Largest domain the game and the synthesiser work on.
pub const MAX_GAME_PROPS: usize = 3;

const WORDS: usize = 4;

/// A set of team masks below 256, i.e. teams over at most three propositions.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TeamSet([u64; WORDS]);

impl fmt::Debug for TeamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl TeamSet {
    pub const EMPTY: TeamSet = TeamSet([0; WORDS]);

    /// All teams over `assignments` assignments.
    pub fn all(assignments: u32) -> TeamSet {
        let mut s = TeamSet::EMPTY;
        let teams = 1u32 << assignments;
        for (i, w) in s.0.iter_mut().enumerate() {
            let lo = i as u32 * 64;
            if teams >= lo + 64 {
                *w = u64::MAX;
            } else if teams > lo {
                *w = (1u64 << (teams - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(t: u32) -> TeamSet {
        let mut s = TeamSet::EMPTY;
        s.insert(t);
        s
    }

    pub fn from_teams(teams: impl IntoIterator<Item = u32>) -> TeamSet {
        let mut s = TeamSet::EMPTY;
        for t in teams {
            s.insert(t);
        }
        s
    }

    /// All subteams of `t`.
    pub fn downset(t: u32) -> TeamSet {
        let mut s = TeamSet::EMPTY;
        for sub in submasks(t) {
            s.insert(sub);
        }
        s
    }

    pub fn contains(&self, t: u32) -> bool {
        t < 256 && self.0[t as usize / 64] >> (t % 64) & 1 == 1
    }

    pub fn insert(&mut self, t: u32) {
        assert!(t < 256, "team mask {t} outside the game capacity");
        self.0[t as usize / 64] |= 1 << (t % 64);
    }

    pub fn remove(&mut self, t: u32) {
        if t < 256 {
            self.0[t as usize / 64] &= !(1 << (t % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == [0; WORDS]
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros();
                    w &= w - 1;
                    Some(i as u32 * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn union(&self, o: &TeamSet) -> TeamSet {
        self.zip(o, |a, b| a | b)
    }

    pub fn intersection(&self, o: &TeamSet) -> TeamSet {
        self.zip(o, |a, b| a & b)
    }

    pub fn difference(&self, o: &TeamSet) -> TeamSet {
        self.zip(o, |a, b| a & !b)
    }

    pub fn intersects(&self, o: &TeamSet) -> bool {
        !self.intersection(o).is_empty()
    }

    pub fn is_subset(&self, o: &TeamSet) -> bool {
        self.difference(o).is_empty()
    }

    /// Complement relative to all teams over `assignments` assignments.
    pub fn complement(&self, assignments: u32) -> TeamSet {
        TeamSet::all(assignments).difference(self)
    }

    fn zip(&self, o: &TeamSet, f: impl Fn(u64, u64) -> u64) -> TeamSet {
        let mut out = [0; WORDS];
        for (i, w) in out.iter_mut().enumerate() {
            *w = f(self.0[i], o.0[i]);
        }
        TeamSet(out)
    }

    fn shl(&self, by: u32) -> TeamSet {
        let words = (by / 64) as usize;
        let bits = by % 64;
        let mut out = [0u64; WORDS];
        for i in (words..WORDS).rev() {
            let src = i - words;
            out[i] = self.0[src] << bits;
            if bits > 0 && src > 0 {
                out[i] |= self.0[src - 1] >> (64 - bits);
            }
        }
        TeamSet(out)
    }

    /// `{S ∪ U | S ∈ self, U ∈ other}`.
    pub fn union_product(&self, other: &TeamSet) -> TeamSet {
        self.product(other, false)
    }

    /// `{S ∪ U | S ∈ self, U ∈ other, S ∩ U = ∅}`.
    pub fn disjoint_product(&self, other: &TeamSet) -> TeamSet {
        self.product(other, true)
    }

    fn product(&self, other: &TeamSet, disjoint: bool) -> TeamSet {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.is_empty() {
            return TeamSet::EMPTY;
        }
        let mut out = TeamSet::EMPTY;
        for s in small.iter() {
            let mut r = *large;
            for a in bits(s) {
                let m = &MEMBER_MASKS[a as usize];
                let moved = r.difference(m).shl(1 << a);
                r = if disjoint { moved } else { r.intersection(m).union(&moved) };
            }
            out = out.union(&r);
        }
        out
    }
}

/// For each assignment `a < 8`, the teams containing `a`.
const MEMBER_MASKS: [TeamSet; 8] = {
    let mut out = [TeamSet([0; WORDS]); 8];
    let mut a = 0;
    while a < 8 {
        let mut t = 0u32;
        while t < 256 {
            if t >> a & 1 == 1 {
                out[a].0[(t / 64) as usize] |= 1 << (t % 64);
            }
            t += 1;
        }
        a += 1;
    }
    out
};

/// Submasks of `mask`, from `mask` down to 0.
pub fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::TeamFamily;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn to_family(s: &TeamSet, points: u32) -> TeamFamily {
        TeamFamily::from_members(points, s.iter())
    }

    #[test]
    fn products_match_family_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for points in [1u32, 2, 4, 8] {
            let teams = 1u32 << points;
            for _ in 0..20 {
                let a = TeamSet::from_teams((0..teams).filter(|_| rng.gen_bool(0.2)));
                let b = TeamSet::from_teams((0..teams).filter(|_| rng.gen_bool(0.2)));
                let (fa, fb) = (to_family(&a, points), to_family(&b, points));
                assert_eq!(to_family(&a.union_product(&b), points), fa.union_product(&fb));
                assert_eq!(to_family(&a.disjoint_product(&b), points), fa.disjoint_product(&fb));
            }
        }
    }

    #[test]
    fn basics() {
        assert_eq!(TeamSet::all(2).len(), 4);
        assert_eq!(TeamSet::all(8).len(), 256);
        assert_eq!(TeamSet::downset(0b101).to_vec(), [0, 1, 4, 5]);
        assert_eq!(TeamSet::all(2).complement(2), TeamSet::EMPTY);
        assert_eq!(submasks(0b11).collect::<Vec<_>>(), [3, 2, 1, 0]);
        assert!(MEMBER_MASKS[0].contains(255) && !MEMBER_MASKS[1].contains(253));
    }
}
