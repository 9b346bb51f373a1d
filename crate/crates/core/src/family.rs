//! Sets of teams over a fixed list of points, as bitsets over `2^k` masks.
//!
//! Split connectives reduce to two set products: the union product
//! `{S ∪ U}` (lax splits) and the disjoint-union product (strict splits).

use alloc::vec;
use alloc::vec::Vec;

/// A set of subsets of `{0, .., k-1}`, where `k` is the number of points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TeamFamily {
    points: u32,
    words: Vec<u64>,
}

impl core::fmt::Debug for TeamFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

fn word_count(points: u32) -> usize {
    (1usize << points).div_ceil(64)
}

impl TeamFamily {
    pub fn empty(points: u32) -> Self {
        TeamFamily {
            points,
            words: vec![0; word_count(points)],
        }
    }

    pub fn full(points: u32) -> Self {
        let mut f = TeamFamily {
            points,
            words: vec![u64::MAX; word_count(points)],
        };
        f.trim();
        f
    }

    pub fn from_fn(points: u32, mut pred: impl FnMut(u32) -> bool) -> Self {
        let mut f = TeamFamily::empty(points);
        for t in 0..f.universe() {
            if pred(t) {
                f.insert(t);
            }
        }
        f
    }

    /// All subsets of `mask`.
    pub fn downset(points: u32, mask: u32) -> Self {
        let mut f = TeamFamily::empty(points);
        let mut s = mask;
        loop {
            f.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & mask;
        }
        f
    }

    fn trim(&mut self) {
        let size = 1usize << self.points;
        if size < 64 {
            self.words[0] &= (1u64 << size) - 1;
        }
    }

    /// Number of points `k`; members are masks below `2^k`.
    pub fn points(&self) -> u32 {
        self.points
    }

    /// Number of possible members, `2^k`.
    pub fn universe(&self) -> u32 {
        1u32 << self.points
    }

    pub fn contains(&self, t: u32) -> bool {
        (t as usize) < (1usize << self.points) && self.words[t as usize / 64] >> (t % 64) & 1 == 1
    }

    pub fn insert(&mut self, t: u32) {
        self.words[t as usize / 64] |= 1 << (t % 64);
    }

    pub fn remove(&mut self, t: u32) {
        self.words[t as usize / 64] &= !(1 << (t % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
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

    pub fn complement(&self) -> Self {
        let mut f = TeamFamily {
            points: self.points,
            words: self.words.iter().map(|w| !w).collect(),
        };
        f.trim();
        f
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.points, other.points);
        TeamFamily {
            points: self.points,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.points, other.points);
        TeamFamily {
            points: self.points,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_downward_closed(&self) -> bool {
        self.iter()
            .all(|t| (0..self.points).all(|i| t >> i & 1 == 0 || self.contains(t & !(1 << i))))
    }

    pub fn is_upward_closed(&self) -> bool {
        self.iter()
            .all(|t| (0..self.points).all(|i| t >> i & 1 == 1 || self.contains(t | 1 << i)))
    }

    /// Members with no proper superset in the family.
    pub fn maximal(&self) -> Vec<u32> {
        // above[t]: some member contains t
        let mut above: Vec<bool> = (0..self.universe()).map(|t| self.contains(t)).collect();
        for i in 0..self.points {
            let bit = 1usize << i;
            for t in 0..above.len() {
                if t & bit == 0 && above[t | bit] {
                    above[t] = true;
                }
            }
        }
        self.iter()
            .filter(|&t| (0..self.points).all(|i| t >> i & 1 == 1 || !above[(t | 1 << i) as usize]))
            .collect()
    }

    fn counts(&self) -> Vec<u64> {
        let mut v = vec![0u64; 1 << self.points];
        for t in self.iter() {
            v[t as usize] = 1;
        }
        v
    }

    /// `{S ∪ U | S ∈ self, U ∈ other}`.
    pub fn union_product(&self, other: &Self) -> Self {
        let k = self.points;
        if self.is_empty() || other.is_empty() {
            return TeamFamily::empty(k);
        }
        if (self.len() as u64) * (other.len() as u64) <= (k as u64 + 1) << k {
            let mut out = TeamFamily::empty(k);
            let right: Vec<u32> = other.iter().collect();
            for s in self.iter() {
                for &u in &right {
                    out.insert(s | u);
                }
            }
            return out;
        }
        let mut a = self.counts();
        let mut b = other.counts();
        zeta(&mut a, k);
        zeta(&mut b, k);
        for (x, y) in a.iter_mut().zip(&b) {
            *x = x.wrapping_mul(*y);
        }
        mobius(&mut a, k);
        TeamFamily::from_fn(k, |t| a[t as usize] != 0)
    }

    /// `{S ∪ U | S ∈ self, U ∈ other, S ∩ U = ∅}`.
    pub fn disjoint_product(&self, other: &Self) -> Self {
        let k = self.points;
        if self.is_empty() || other.is_empty() {
            return TeamFamily::empty(k);
        }
        let dense = ((k as u64 + 1) * (k as u64 + 1)) << k;
        if (self.len() as u64) * (other.len() as u64) <= dense {
            let mut out = TeamFamily::empty(k);
            let right: Vec<u32> = other.iter().collect();
            for s in self.iter() {
                for &u in &right {
                    if s & u == 0 {
                        out.insert(s | u);
                    }
                }
            }
            return out;
        }
        if self.is_downward_closed() || other.is_downward_closed() {
            return self.union_product(other);
        }
        let size = 1usize << k;
        let ranked = |f: &TeamFamily| {
            let mut r = vec![vec![0u64; size]; k as usize + 1];
            for t in f.iter() {
                r[t.count_ones() as usize][t as usize] = 1;
            }
            for row in r.iter_mut() {
                zeta(row, k);
            }
            r
        };
        let a = ranked(self);
        let b = ranked(other);
        let mut out = TeamFamily::empty(k);
        let mut h = vec![0u64; size];
        for r in 0..=k as usize {
            for (t, slot) in h.iter_mut().enumerate() {
                let mut acc = 0u64;
                for i in 0..=r {
                    acc = acc.wrapping_add(a[i][t].wrapping_mul(b[r - i][t]));
                }
                *slot = acc;
            }
            mobius(&mut h, k);
            for (t, &v) in h.iter().enumerate() {
                if v != 0 && (t as u32).count_ones() as usize == r {
                    out.insert(t as u32);
                }
            }
        }
        out
    }

    /// The family with exactly the given members.
    pub fn from_members(points: u32, members: impl IntoIterator<Item = u32>) -> Self {
        let mut f = TeamFamily::empty(points);
        for t in members {
            f.insert(t);
        }
        f
    }
}

/// Subset-sum transform: `v[t] ← Σ_{s ⊆ t} v[s]`, modulo `2^64`.
fn zeta(v: &mut [u64], k: u32) {
    for i in 0..k {
        let bit = 1usize << i;
        for t in 0..v.len() {
            if t & bit != 0 {
                v[t] = v[t].wrapping_add(v[t ^ bit]);
            }
        }
    }
}

/// Inverse of [`zeta`].
fn mobius(v: &mut [u64], k: u32) {
    for i in 0..k {
        let bit = 1usize << i;
        for t in 0..v.len() {
            if t & bit != 0 {
                v[t] = v[t].wrapping_sub(v[t ^ bit]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_family(rng: &mut ChaCha8Rng, k: u32, density: f64) -> TeamFamily {
        TeamFamily::from_fn(k, |_| rng.gen_bool(density))
    }

    fn naive(a: &TeamFamily, b: &TeamFamily, strict: bool) -> TeamFamily {
        let mut out = TeamFamily::empty(a.points());
        for s in a.iter() {
            for u in b.iter() {
                if !strict || s & u == 0 {
                    out.insert(s | u);
                }
            }
        }
        out
    }

    #[test]
    fn products_match_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 0..9 {
            for density in [0.05, 0.3, 0.9] {
                let a = random_family(&mut rng, k, density);
                let b = random_family(&mut rng, k, density);
                assert_eq!(a.union_product(&b), naive(&a, &b, false));
                assert_eq!(a.disjoint_product(&b), naive(&a, &b, true));
            }
        }
    }

    #[test]
    fn dense_paths_match_naive() {
        // large enough to leave the direct enumeration path
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3 {
            let a = random_family(&mut rng, 10, 0.5);
            let b = random_family(&mut rng, 10, 0.5);
            assert_eq!(a.union_product(&b), naive(&a, &b, false));
            assert_eq!(a.disjoint_product(&b), naive(&a, &b, true));
        }
    }

    #[test]
    fn maximal_members() {
        let f = TeamFamily::from_members(3, [0b001, 0b011, 0b100, 0b101]);
        assert_eq!(f.maximal(), alloc::vec![0b011, 0b101]);
        let g = TeamFamily::from_members(3, [0b000, 0b111]);
        assert_eq!(g.maximal(), alloc::vec![0b111]);
    }

    #[test]
    fn closure_checks() {
        assert!(TeamFamily::downset(3, 0b101).is_downward_closed());
        assert!(TeamFamily::full(3).is_upward_closed());
        assert!(!TeamFamily::from_members(2, [0b11]).is_downward_closed());
    }
}
