//! Exact game solving by memoised alternating search.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use super::synth::Synthesis;
use super::{
    chosen_halves, density, density_applies, split_choice_count, split_choices, splits, subsets,
    subteams, Game, Move, Position, StrategyTree, TeamSet, TeamSplit,
};
use crate::error::Error;
use crate::formula::BinOp;

/// Search limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of positions expanded before giving up.
    pub node_limit: u64,
    /// Largest number of raw candidates for a splitting move (split choices
    /// times `first` sets) before the synthesis lattice is used instead.
    pub raw_budget: u64,
    /// Whether splitting moves may fall back to the synthesis lattice.
    pub lattice_fallback: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_limit: 2_000_000,
            raw_budget: 1 << 12,
            lattice_fallback: true,
        }
    }
}

/// Why D wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DCertificate {
    /// A team on both sides; D keeps it shared until the literal move.
    SharedTeam(u32),
    /// The resource is below the density of the position.
    Density { density: usize },
    /// The search found no winning move for S.
    ExhaustedSearch { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    S(StrategyTree),
    D(DCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub s_wins: bool,
    pub solution: Solution,
    /// Positions expanded.
    pub nodes: u64,
}

/// Decides the game from `pos` and extracts a strategy or certificate.
pub fn solve(game: &Game, pos: &Position, options: SolveOptions) -> Result<SolveReport, Error> {
    game.check_position(pos)?;
    let mut search = Search::new(game, options);
    let s_wins = search.wins(pos.k, pos.a, pos.b)?;
    let solution = if s_wins {
        Solution::S(search.strategy(pos.k, pos.a, pos.b)?)
    } else if let Some(t) = pos.shared_team() {
        Solution::D(DCertificate::SharedTeam(t))
    } else if density_applies(game.signature()) && pos.k < density(&pos.a, &pos.b) {
        Solution::D(DCertificate::Density {
            density: density(&pos.a, &pos.b),
        })
    } else {
        Solution::D(DCertificate::ExhaustedSearch {
            nodes: search.nodes,
        })
    };
    Ok(SolveReport {
        s_wins,
        solution,
        nodes: search.nodes,
    })
}

/// Known results for one pair `(𝔸, 𝔹)`: S loses for every `k <= lose_upto`
/// and wins for every `k >= win_from`.
#[derive(Clone, Copy)]
struct Bounds {
    lose_upto: usize,
    win_from: usize,
}

pub(crate) struct Search<'g> {
    game: &'g Game,
    options: SolveOptions,
    memo: BTreeMap<(TeamSet, TeamSet), Bounds>,
    lattice: Option<Synthesis<'g>>,
    nodes: u64,
}

impl<'g> Search<'g> {
    pub(crate) fn new(game: &'g Game, options: SolveOptions) -> Search<'g> {
        Search {
            game,
            options,
            memo: BTreeMap::new(),
            lattice: None,
            nodes: 0,
        }
    }

    pub(crate) fn wins(&mut self, k: usize, a: TeamSet, b: TeamSet) -> Result<bool, Error> {
        if k == 0 || a.intersects(&b) {
            return Ok(false);
        }
        let bounds = self.memo.get(&(a, b)).copied().unwrap_or(Bounds {
            lose_upto: 0,
            win_from: usize::MAX,
        });
        if k <= bounds.lose_upto {
            return Ok(false);
        }
        if k >= bounds.win_from {
            return Ok(true);
        }
        let won = self.find_move(k, a, b)?.is_some();
        let entry = self.memo.entry((a, b)).or_insert(bounds);
        if won {
            entry.win_from = entry.win_from.min(k);
        } else {
            entry.lose_upto = entry.lose_upto.max(k);
        }
        Ok(won)
    }

    fn tick(&mut self) -> Result<(), Error> {
        self.nodes += 1;
        if self.nodes > self.options.node_limit {
            return Err(Error::SearchLimit(format!(
                "more than {} positions expanded",
                self.options.node_limit
            )));
        }
        Ok(())
    }

    /// A move after which S wins whatever D chooses.
    pub(crate) fn find_move(&mut self, k: usize, a: TeamSet, b: TeamSet) -> Result<Option<Move>, Error> {
        self.tick()?;
        if let Some(l) = self.game.separating_literal(&a, &b) {
            return Ok(Some(Move::Literal(l.clone())));
        }
        if k < 2 {
            return Ok(None);
        }
        let ops: Vec<BinOp> = self.game.signature().bin_ops().collect();
        for op in ops {
            let found = match op {
                BinOp::BoolOr => self.cover_move(k, a, b, true)?,
                BinOp::And => self.cover_move(k, a, b, false)?,
                op => self.split_move(k, a, b, op)?,
            };
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// `⊽` (`on_a`) or `∧` moves: a partition of one side.
    fn cover_move(&mut self, k: usize, a: TeamSet, b: TeamSet, on_a: bool) -> Result<Option<Move>, Error> {
        let side = if on_a { a } else { b };
        for k1 in 1..k {
            let k2 = k - k1;
            for left in subsets(&side) {
                let right = side.difference(&left);
                let (p1, p2) = if on_a {
                    ((left, b), (right, b))
                } else {
                    ((a, left), (a, right))
                };
                if self.wins(k1, p1.0, p1.1)? && self.wins(k2, p2.0, p2.1)? {
                    return Ok(Some(if on_a {
                        Move::BoolOr { left, right, k1, k2 }
                    } else {
                        Move::And { left, right, k1, k2 }
                    }));
                }
            }
        }
        Ok(None)
    }

    fn split_move(&mut self, k: usize, a: TeamSet, b: TeamSet, op: BinOp) -> Result<Option<Move>, Error> {
        let strict = op.is_strict();
        let dual = matches!(op, BinOp::CoAnd | BinOp::StrictCoAnd);
        // for co-splits S splits the B side and chooses on the A side; the
        // search runs on the swapped position and swaps the results back
        let (split_side, choice_side) = if dual { (b, a) } else { (a, b) };
        let sub = subteams(&choice_side);
        let raw = split_choice_count(&split_side, strict)
            .saturating_mul(1u64.checked_shl(sub.len() as u32).unwrap_or(u64::MAX));
        if raw > self.options.raw_budget && self.options.lattice_fallback {
            return self.lattice_split_move(k, a, b, op);
        }
        let mut seen = BTreeSet::new();
        for choice in split_choices(&split_side, strict) {
            let s1 = TeamSet::from_teams(choice.iter().map(|s| s.left));
            let s2 = TeamSet::from_teams(choice.iter().map(|s| s.right));
            if !seen.insert((s1, s2)) {
                continue;
            }
            // `first` must avoid s1 (else a shared team on side 1) and must
            // contain every first half whose second half lies in s2
            let mut forced = TeamSet::EMPTY;
            for t in choice_side.iter() {
                for (l, r) in splits(t, strict) {
                    if s2.contains(r) {
                        forced.insert(l);
                    }
                }
            }
            if forced.intersects(&s1) {
                continue;
            }
            let free = sub.difference(&forced).difference(&s1);
            for extra in subsets(&free) {
                let first = forced.union(&extra);
                let (c1, c2) = chosen_halves(&choice_side, &first, strict);
                for k1 in 1..k {
                    let k2 = k - k1;
                    let (p1, p2) = if dual {
                        ((c1, s1), (c2, s2))
                    } else {
                        ((s1, c1), (s2, c2))
                    };
                    if self.wins(k1, p1.0, p1.1)? && self.wins(k2, p2.0, p2.1)? {
                        return Ok(Some(Move::Split {
                            op,
                            splits: choice,
                            first,
                            k1,
                            k2,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Splitting move through pairs of synthesised denotations.
    fn lattice_split_move(&mut self, k: usize, a: TeamSet, b: TeamSet, op: BinOp) -> Result<Option<Move>, Error> {
        let strict = op.is_strict();
        let dual = matches!(op, BinOp::CoAnd | BinOp::StrictCoAnd);
        let mut lattice = match self.lattice.take() {
            Some(l) => l,
            None => Synthesis::new(self.game)?,
        };
        lattice.extend_to(k - 1, self.options.node_limit)?;
        let found = self.lattice_pairs(&lattice, k, a, b, op, strict, dual);
        self.lattice = Some(lattice);
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn lattice_pairs(
        &mut self,
        lattice: &Synthesis<'g>,
        k: usize,
        a: TeamSet,
        b: TeamSet,
        op: BinOp,
        strict: bool,
        dual: bool,
    ) -> Result<Option<Move>, Error> {
        for k1 in 1..k {
            let k2 = k - k1;
            let left: Vec<TeamSet> = lattice.families_upto(k1).collect();
            let right: Vec<TeamSet> = lattice.families_upto(k2).collect();
            for d1 in &left {
                for d2 in &right {
                    self.tick()?;
                    let den = lattice.combine(op, d1, d2);
                    if !Game::separates(&den, &a, &b) {
                        continue;
                    }
                    let mv = if dual {
                        // split every B team into halves outside d1 and d2
                        let splits = pick_splits(&b, strict, |l, r| !d1.contains(l) && !d2.contains(r));
                        let first = subteams(&a).intersection(d1);
                        Move::Split { op, splits, first, k1, k2 }
                    } else {
                        let splits = pick_splits(&a, strict, |l, r| d1.contains(l) && d2.contains(r));
                        let first = subteams(&b).difference(d1);
                        Move::Split { op, splits, first, k1, k2 }
                    };
                    return Ok(Some(mv));
                }
            }
        }
        Ok(None)
    }

    /// A winning strategy tree; requires `wins(k, a, b)`.
    pub(crate) fn strategy(&mut self, k: usize, a: TeamSet, b: TeamSet) -> Result<StrategyTree, Error> {
        let mv = self
            .find_move(k, a, b)?
            .ok_or_else(|| Error::Game("no winning move from this position".into()))?;
        if let Move::Literal(l) = mv {
            return Ok(StrategyTree::Leaf(l));
        }
        let next = super::successors(self.game, &Position::new(k, a, b), &mv)?;
        let c1 = self.strategy(next[0].k, next[0].a, next[0].b)?;
        let c2 = self.strategy(next[1].k, next[1].a, next[1].b)?;
        Ok(StrategyTree::Node {
            mv,
            children: Box::new([c1, c2]),
        })
    }
}

/// One split per team of `side` accepted by `ok`.
fn pick_splits(side: &TeamSet, strict: bool, ok: impl Fn(u32, u32) -> bool) -> Vec<TeamSplit> {
    side.iter()
        .map(|t| {
            let (left, right) = splits(t, strict)
                .find(|&(l, r)| ok(l, r))
                .expect("denotation pair covers the team");
            TeamSplit { team: t, left, right }
        })
        .collect()
}
