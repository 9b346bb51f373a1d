//! The formula-size game: positions, moves, an exact solver with strategy
//! extraction, Delilah's certified strategies, density, and a bottom-up
//! minimal-width synthesiser used as an independent oracle.

mod delilah;
mod solve;
mod strategy;
mod synth;
pub mod teamset;

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use crate::domain::{bits, Domain, Team};
use crate::error::Error;
use crate::formula::{BinOp, Connective, Formula, Literal, Signature};
use crate::semantics::denotation;

pub use delilah::{delilah_choice, delilah_mode, DelilahMode};
pub use solve::{solve, DCertificate, Solution, SolveOptions, SolveReport};
pub use strategy::{formula_to_strategy, strategy_to_formula, verify_strategy, StrategyTree};
pub use synth::{min_separating_width, Synthesis, WidthResult};
pub use teamset::{submasks, TeamSet, MAX_GAME_PROPS};

/// The fixed parts of a game: domain, signature and the literal alphabet.
#[derive(Clone, Debug)]
pub struct Game {
    domain: Domain,
    sig: Signature,
    literals: Vec<(Literal, TeamSet)>,
}

impl Game {
    /// Rejects domains above [`MAX_GAME_PROPS`] and signatures with `~`.
    pub fn new(domain: Domain, sig: Signature) -> Result<Game, Error> {
        if domain.len() > MAX_GAME_PROPS {
            return Err(Error::Capacity {
                what: "game",
                props: domain.len(),
                max: MAX_GAME_PROPS,
            });
        }
        if sig.contains(Connective::Not) {
            return Err(Error::Unsupported(
                "the game has no move for ~ outside literals".into(),
            ));
        }
        let mut game = Game {
            domain,
            sig,
            literals: Vec::new(),
        };
        for l in Literal::alphabet(game.domain.props()) {
            let den = game.denote(&Formula::Lit(l.clone()))?;
            game.literals.push((l, den));
        }
        Ok(game)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// Number of assignments, i.e. the points of every team.
    pub fn assignments(&self) -> u32 {
        1 << self.domain.len()
    }

    /// All teams over the domain.
    pub fn all_teams(&self) -> TeamSet {
        TeamSet::all(self.assignments())
    }

    /// The literal alphabet with the teams satisfying each literal.
    pub fn literals(&self) -> &[(Literal, TeamSet)] {
        &self.literals
    }

    /// The teams satisfying `f`.
    pub fn denote(&self, f: &Formula) -> Result<TeamSet, Error> {
        let den = denotation(f, &self.domain)?;
        Ok(TeamSet::from_teams(den.masks()))
    }

    /// Converts teams over the game's domain into a set of masks.
    pub fn team_set(&self, teams: &[Team]) -> Result<TeamSet, Error> {
        let mut out = TeamSet::EMPTY;
        for t in teams {
            if t.domain() != &self.domain {
                return Err(Error::DomainMismatch(format!("{}", t.domain())));
            }
            out.insert(t.mask());
        }
        Ok(out)
    }

    pub fn teams(&self, set: &TeamSet) -> Vec<Team> {
        set.iter()
            .map(|t| Team::new(self.domain.clone(), t).expect("mask within the game domain"))
            .collect()
    }

    /// Whether the formula with satisfying teams `den` separates `a` from `b`.
    pub fn separates(den: &TeamSet, a: &TeamSet, b: &TeamSet) -> bool {
        a.is_subset(den) && !b.intersects(den)
    }

    /// The first literal of the alphabet separating `a` from `b`.
    pub fn separating_literal(&self, a: &TeamSet, b: &TeamSet) -> Option<&Literal> {
        self.literals
            .iter()
            .find(|(_, den)| Game::separates(den, a, b))
            .map(|(l, _)| l)
    }

    fn check_position(&self, pos: &Position) -> Result<(), Error> {
        let all = self.all_teams();
        if pos.a.is_subset(&all) && pos.b.is_subset(&all) {
            Ok(())
        } else {
            Err(Error::MemberOutOfRange)
        }
    }
}

/// A game position `(k, 𝔸, 𝔹)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub k: usize,
    pub a: TeamSet,
    pub b: TeamSet,
}

impl Position {
    pub fn new(k: usize, a: TeamSet, b: TeamSet) -> Position {
        Position { k, a, b }
    }

    /// Smallest team on both sides, if any.
    pub fn shared_team(&self) -> Option<u32> {
        self.a.intersection(&self.b).iter().next()
    }
}

/// How one team is split by S in a splitting move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TeamSplit {
    pub team: u32,
    pub left: u32,
    pub right: u32,
}

/// A move of S.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Literal(Literal),
    /// `⊽`: `𝔸` is covered by `left ∪ right`.
    BoolOr {
        left: TeamSet,
        right: TeamSet,
        k1: usize,
        k2: usize,
    },
    /// `∧`: `𝔹` is covered by `left ∪ right`.
    And {
        left: TeamSet,
        right: TeamSet,
        k1: usize,
        k2: usize,
    },
    /// A splitting move for `∨`, `∨̇`, `⩓` or `⩓̇`.
    ///
    /// For `∨`/`∨̇`, `splits` gives one split per team of `𝔸`, and every
    /// split `(B₁, B₂)` of a team of `𝔹` is sent to side 1 exactly when
    /// `B₁ ∈ first`. For `⩓`/`⩓̇` the roles of `𝔸` and `𝔹` are swapped.
    Split {
        op: BinOp,
        splits: Vec<TeamSplit>,
        first: TeamSet,
        k1: usize,
        k2: usize,
    },
}

impl Move {
    /// The connective the move stands for; `None` for literal moves.
    pub fn op(&self) -> Option<BinOp> {
        match self {
            Move::Literal(_) => None,
            Move::BoolOr { .. } => Some(BinOp::BoolOr),
            Move::And { .. } => Some(BinOp::And),
            Move::Split { op, .. } => Some(*op),
        }
    }

    pub fn resources(&self) -> Option<(usize, usize)> {
        match self {
            Move::Literal(_) => None,
            Move::BoolOr { k1, k2, .. } | Move::And { k1, k2, .. } | Move::Split { k1, k2, .. } => {
                Some((*k1, *k2))
            }
        }
    }
}

/// The two players.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    S,
    D,
}

/// Result of applying a move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Continue(Position),
    Winner(Player),
}

/// Whether `(left, right)` is a split of `team`, strict if asked.
pub fn is_split(team: u32, left: u32, right: u32, strict: bool) -> bool {
    left | right == team && (!strict || left & right == 0)
}

/// All splits of a team: lax splits `(T₁, T₂)` with `T₁ ∪ T₂ = T`, or strict
/// ones with `T₁ ∩ T₂ = ∅` as well.
pub fn splits(team: u32, strict: bool) -> impl Iterator<Item = (u32, u32)> {
    submasks(team).flat_map(move |left| {
        let rest = team & !left;
        let extra = if strict { 0 } else { left };
        submasks(extra).map(move |s| (left, rest | s))
    })
}

/// The two sides of the choice-function half of a splitting move: every
/// split of a team in `side` whose first half lies in `first` contributes
/// that half to side 1, every other split its second half to side 2.
pub fn chosen_halves(side: &TeamSet, first: &TeamSet, strict: bool) -> (TeamSet, TeamSet) {
    let mut one = TeamSet::EMPTY;
    let mut two = TeamSet::EMPTY;
    for t in side.iter() {
        for (l, r) in splits(t, strict) {
            if first.contains(l) {
                one.insert(l);
            } else {
                two.insert(r);
            }
        }
    }
    (one, two)
}

/// All subteams of teams in `side`.
pub fn subteams(side: &TeamSet) -> TeamSet {
    side.iter()
        .fold(TeamSet::EMPTY, |acc, t| acc.union(&TeamSet::downset(t)))
}

fn is_split_op(op: BinOp) -> bool {
    matches!(
        op,
        BinOp::Or | BinOp::StrictOr | BinOp::CoAnd | BinOp::StrictCoAnd
    )
}

/// The two successor positions of a connective move (before D chooses).
pub fn successors(game: &Game, pos: &Position, mv: &Move) -> Result<[Position; 2], Error> {
    game.check_position(pos)?;
    let (k1, k2) = mv
        .resources()
        .ok_or_else(|| Error::Game("a literal move has no successors".into()))?;
    let op = mv.op().expect("connective move");
    if !game.sig.contains_op(op) {
        return Err(Error::Game(format!("`{}` is not in the signature", op.symbol())));
    }
    if k1 == 0 || k2 == 0 || k1 + k2 != pos.k {
        return Err(Error::Game(format!(
            "resources {k1} + {k2} do not split k = {}",
            pos.k
        )));
    }
    match mv {
        Move::Literal(_) => unreachable!(),
        Move::BoolOr { left, right, .. } => {
            if left.union(right) != pos.a {
                return Err(Error::Game("the two parts must cover the A side".into()));
            }
            Ok([
                Position::new(k1, *left, pos.b),
                Position::new(k2, *right, pos.b),
            ])
        }
        Move::And { left, right, .. } => {
            if left.union(right) != pos.b {
                return Err(Error::Game("the two parts must cover the B side".into()));
            }
            Ok([
                Position::new(k1, pos.a, *left),
                Position::new(k2, pos.a, *right),
            ])
        }
        Move::Split {
            op, splits, first, ..
        } => {
            if !is_split_op(*op) {
                return Err(Error::Game(format!("`{}` is not a splitting connective", op.symbol())));
            }
            let strict = op.is_strict();
            let dual = matches!(op, BinOp::CoAnd | BinOp::StrictCoAnd);
            let (split_side, choice_side) = if dual { (pos.b, pos.a) } else { (pos.a, pos.b) };
            let (s1, s2) = split_parts(&split_side, splits, strict)?;
            let (c1, c2) = chosen_halves(&choice_side, first, strict);
            Ok(if dual {
                [Position::new(k1, c1, s1), Position::new(k2, c2, s2)]
            } else {
                [Position::new(k1, s1, c1), Position::new(k2, s2, c2)]
            })
        }
    }
}

/// The sides `{T₁}` and `{T₂}` of one chosen split per team of `side`.
fn split_parts(side: &TeamSet, splits: &[TeamSplit], strict: bool) -> Result<(TeamSet, TeamSet), Error> {
    let mut seen = TeamSet::EMPTY;
    let mut one = TeamSet::EMPTY;
    let mut two = TeamSet::EMPTY;
    for s in splits {
        if !side.contains(s.team) || seen.contains(s.team) {
            return Err(Error::Game(format!("unexpected or repeated split of team {}", s.team)));
        }
        if !is_split(s.team, s.left, s.right, strict) {
            return Err(Error::Game(format!("({}, {}) is not a split of {}", s.left, s.right, s.team)));
        }
        seen.insert(s.team);
        one.insert(s.left);
        two.insert(s.right);
    }
    if seen != *side {
        return Err(Error::Game("every team on the split side needs a split".into()));
    }
    Ok((one, two))
}

/// Plays `mv` and lets D pick successor `choice` (1 or 2).
pub fn apply_move(game: &Game, pos: &Position, mv: &Move, choice: usize) -> Result<Outcome, Error> {
    if pos.k == 0 {
        return Ok(Outcome::Winner(Player::D));
    }
    if let Move::Literal(l) = mv {
        let (_, den) = game
            .literals
            .iter()
            .find(|(x, _)| x == l)
            .ok_or_else(|| Error::Game(format!("literal {l} is not over the domain")))?;
        let winner = if Game::separates(den, &pos.a, &pos.b) {
            Player::S
        } else {
            Player::D
        };
        return Ok(Outcome::Winner(winner));
    }
    if !(1..=2).contains(&choice) {
        return Err(Error::Game(format!("D must choose 1 or 2, not {choice}")));
    }
    let next = successors(game, pos, mv)?;
    Ok(Outcome::Continue(next[choice - 1]))
}

/// Subsets of a team set, as sets.
pub(crate) fn subsets(set: &TeamSet) -> impl Iterator<Item = TeamSet> {
    let members = set.to_vec();
    assert!(members.len() < 32, "too many teams to enumerate subsets");
    (0u32..1 << members.len()).map(move |m| TeamSet::from_teams(bits(m).map(|i| members[i as usize])))
}

/// S's moves from `pos` in a canonical complete form: literal moves,
/// partitions for `⊽` and `∧`, and for splitting moves every choice of one
/// split per team combined with every `first` set of subteams.
pub fn legal_moves<'g>(game: &'g Game, pos: &Position) -> Box<dyn Iterator<Item = Move> + 'g> {
    let lits = game.literals.iter().map(|(l, _)| Move::Literal(l.clone()));
    if pos.k < 2 {
        return Box::new(lits);
    }
    let pos = *pos;
    let ops = game.sig.bin_ops().collect::<Vec<_>>();
    let connective = ops.into_iter().flat_map(move |op| -> Box<dyn Iterator<Item = Move>> {
        let ks = (1..pos.k).map(move |k1| (k1, pos.k - k1));
        match op {
            BinOp::BoolOr => Box::new(ks.flat_map(move |(k1, k2)| {
                subsets(&pos.a).map(move |left| Move::BoolOr {
                    left,
                    right: pos.a.difference(&left),
                    k1,
                    k2,
                })
            })),
            BinOp::And => Box::new(ks.flat_map(move |(k1, k2)| {
                subsets(&pos.b).map(move |left| Move::And {
                    left,
                    right: pos.b.difference(&left),
                    k1,
                    k2,
                })
            })),
            op => {
                let dual = matches!(op, BinOp::CoAnd | BinOp::StrictCoAnd);
                let (split_side, choice_side) = if dual { (pos.b, pos.a) } else { (pos.a, pos.b) };
                let sub = subteams(&choice_side);
                Box::new(ks.flat_map(move |(k1, k2)| {
                    split_choices(&split_side, op.is_strict()).flat_map(move |splits| {
                        subsets(&sub).map(move |first| Move::Split {
                            op,
                            splits: splits.clone(),
                            first,
                            k1,
                            k2,
                        })
                    })
                }))
            }
        }
    });
    Box::new(lits.chain(connective))
}

/// Every way of picking one split per team of `side` (odometer order).
pub(crate) fn split_choices(side: &TeamSet, strict: bool) -> impl Iterator<Item = Vec<TeamSplit>> {
    let options: Vec<Vec<TeamSplit>> = side
        .iter()
        .map(|t| {
            splits(t, strict)
                .map(|(left, right)| TeamSplit { team: t, left, right })
                .collect()
        })
        .collect();
    let mut counter = alloc::vec![0usize; options.len()];
    let mut done = false;
    core::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = counter.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        done = true;
        for (c, o) in counter.iter_mut().zip(&options) {
            *c += 1;
            if *c < o.len() {
                done = false;
                break;
            }
            *c = 0;
        }
        Some(current)
    })
}

/// Number of ways to pick one split per team of `side`, saturating.
pub(crate) fn split_choice_count(side: &TeamSet, strict: bool) -> u64 {
    side.iter().fold(1u64, |acc, t| {
        let n = t.count_ones();
        let per = if strict { 1u64 << n } else { 3u64.saturating_pow(n) };
        acc.saturating_mul(per)
    })
}

/// Teams obtained from `t` by removing exactly one member.
pub fn neighbours(t: &Team) -> Vec<Team> {
    bits(t.mask())
        .map(|s| t.with_members(t.mask() & !(1 << s)).expect("subteam"))
        .collect()
}

/// `N(A, 𝔹)`: neighbours of the team mask `a` that lie in `b`.
pub fn neighbour_count(a: u32, b: &TeamSet) -> usize {
    bits(a).filter(|&s| b.contains(a & !(1 << s))).count()
}

/// `D(𝔸, 𝔹) = max_{A ∈ 𝔸} N(A, 𝔹)`, and 0 for empty `𝔸`.
pub fn density(a: &TeamSet, b: &TeamSet) -> usize {
    a.iter().map(|t| neighbour_count(t, b)).max().unwrap_or(0)
}

/// Whether the signature only has connectives of the existential fragment
/// without co-splits, where density bounds D's resource.
pub fn density_applies(sig: &Signature) -> bool {
    sig.connectives()
        .all(|c| matches!(c, Connective::And | Connective::BoolOr | Connective::Or | Connective::StrictOr))
}
