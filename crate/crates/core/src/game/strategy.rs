//! Strategy trees for S and their correspondence with separating formulas.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use super::{
    apply_move, is_split, splits, subteams, successors, Game, Move, Outcome, Player, Position,
    TeamSet, TeamSplit,
};
use crate::error::Error;
use crate::formula::{BinOp, Formula};

/// A strategy for S: a literal move, or a connective move with the
/// strategies for both of D's choices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategyTree {
    Leaf(crate::formula::Literal),
    Node {
        mv: Move,
        children: Box<[StrategyTree; 2]>,
    },
}

impl StrategyTree {
    /// Number of literal leaves.
    pub fn leaves(&self) -> usize {
        match self {
            StrategyTree::Leaf(_) => 1,
            StrategyTree::Node { children, .. } => children[0].leaves() + children[1].leaves(),
        }
    }
}

/// The formula built by a strategy: literal leaves, and each connective
/// move becomes its connective.
pub fn strategy_to_formula(tree: &StrategyTree) -> Result<Formula, Error> {
    match tree {
        StrategyTree::Leaf(l) => Ok(Formula::Lit(l.clone())),
        StrategyTree::Node { mv, children } => {
            let op = mv
                .op()
                .ok_or_else(|| Error::Game("literal move inside a strategy node".into()))?;
            Ok(Formula::bin(
                op,
                strategy_to_formula(&children[0])?,
                strategy_to_formula(&children[1])?,
            ))
        }
    }
}

/// Replays the strategy against both choices of D at every node.
pub fn verify_strategy(game: &Game, pos: &Position, tree: &StrategyTree) -> Result<bool, Error> {
    match tree {
        StrategyTree::Leaf(l) => Ok(
            apply_move(game, pos, &Move::Literal(l.clone()), 1)? == Outcome::Winner(Player::S),
        ),
        StrategyTree::Node { mv, children } => {
            if pos.k < 2 || matches!(mv, Move::Literal(_)) {
                return Ok(false);
            }
            for (choice, child) in children.iter().enumerate() {
                match apply_move(game, pos, mv, choice + 1) {
                    Ok(Outcome::Continue(next)) => {
                        if !verify_strategy(game, &next, child)? {
                            return Ok(false);
                        }
                    }
                    Ok(Outcome::Winner(Player::S)) => {}
                    Ok(Outcome::Winner(Player::D)) | Err(Error::Game(_)) => return Ok(false),
                    Err(e) => return Err(e),
                }
            }
            Ok(true)
        }
    }
}

/// The strategy that follows the structure of a separating formula.
pub fn formula_to_strategy(game: &Game, f: &Formula, pos: &Position) -> Result<StrategyTree, Error> {
    if f.width() > pos.k {
        return Err(Error::Game(format!(
            "formula width {} exceeds the resource {}",
            f.width(),
            pos.k
        )));
    }
    let den = game.denote(f)?;
    if !Game::separates(&den, &pos.a, &pos.b) {
        return Err(Error::Game(format!("{f} does not separate the position")));
    }
    build(game, f, pos)
}

fn build(game: &Game, f: &Formula, pos: &Position) -> Result<StrategyTree, Error> {
    let (op, l, r) = match f {
        Formula::Lit(l) => return Ok(StrategyTree::Leaf(l.clone())),
        Formula::Bin(op, l, r) => (*op, l.as_ref(), r.as_ref()),
        _ => {
            return Err(Error::Game(format!(
                "{f} is not built from literals and binary connectives"
            )))
        }
    };
    if !game.signature().contains_op(op) {
        return Err(Error::Signature(format!("`{}` is not in the game signature", op.symbol())));
    }
    let dl = game.denote(l)?;
    let dr = game.denote(r)?;
    let k1 = l.width();
    let k2 = pos.k - k1;
    let strict = op.is_strict();
    let mv = match op {
        BinOp::BoolOr => Move::BoolOr {
            left: pos.a.intersection(&dl),
            right: pos.a.intersection(&dr),
            k1,
            k2,
        },
        BinOp::And => Move::And {
            left: pos.b.difference(&dl),
            right: pos.b.difference(&dr),
            k1,
            k2,
        },
        BinOp::Or | BinOp::StrictOr => Move::Split {
            op,
            splits: choose_splits(&pos.a, strict, |x, y| dl.contains(x) && dr.contains(y))?,
            first: subteams(&pos.b).difference(&dl),
            k1,
            k2,
        },
        BinOp::CoAnd | BinOp::StrictCoAnd => Move::Split {
            op,
            splits: choose_splits(&pos.b, strict, |x, y| !dl.contains(x) && !dr.contains(y))?,
            first: subteams(&pos.a).intersection(&dl),
            k1,
            k2,
        },
    };
    let next = successors(game, pos, &mv)?;
    let c1 = build(game, l, &next[0])?;
    let c2 = build(game, r, &next[1])?;
    Ok(StrategyTree::Node {
        mv,
        children: Box::new([c1, c2]),
    })
}

fn choose_splits(side: &TeamSet, strict: bool, ok: impl Fn(u32, u32) -> bool) -> Result<Vec<TeamSplit>, Error> {
    side.iter()
        .map(|t| {
            splits(t, strict)
                .find(|&(x, y)| ok(x, y))
                .map(|(left, right)| {
                    debug_assert!(is_split(t, left, right, strict));
                    TeamSplit { team: t, left, right }
                })
                .ok_or_else(|| Error::Game(format!("no suitable split of team {t}")))
        })
        .collect()
}
