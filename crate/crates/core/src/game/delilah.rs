//! Certified strategies for D.

use alloc::format;

use super::{density, density_applies, successors, Game, Move, Position};
use crate::error::Error;

/// Why D can hold a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DelilahMode {
    /// The team is on both sides; D keeps some team shared forever.
    SameTeam(u32),
    /// The resource is below the density, and the signature keeps it so.
    Density,
}

/// The mode in which D wins from `pos`, if one applies.
pub fn delilah_mode(game: &Game, pos: &Position) -> Option<DelilahMode> {
    if let Some(t) = pos.shared_team() {
        return Some(DelilahMode::SameTeam(t));
    }
    if density_applies(game.signature()) && pos.k < density(&pos.a, &pos.b) {
        return Some(DelilahMode::Density);
    }
    None
}

/// D's answer (1 or 2) to `mv` from a position where [`delilah_mode`]
/// applies; `None` for literal moves, which D wins outright.
pub fn delilah_choice(game: &Game, pos: &Position, mv: &Move) -> Result<Option<usize>, Error> {
    if matches!(mv, Move::Literal(_)) {
        return Ok(None);
    }
    let mode = delilah_mode(game, pos)
        .ok_or_else(|| Error::Game("D has no certified strategy from this position".into()))?;
    let next = successors(game, pos, mv)?;
    if let Some(i) = next.iter().position(|p| p.shared_team().is_some()) {
        return Ok(Some(i + 1));
    }
    match mode {
        DelilahMode::SameTeam(t) => Err(Error::Game(format!(
            "no successor keeps a shared team although team {t} is shared"
        ))),
        DelilahMode::Density => next
            .iter()
            .position(|p| p.k < density(&p.a, &p.b))
            .map(|i| Some(i + 1))
            .ok_or_else(|| Error::Game("no successor keeps the resource below the density".into())),
    }
}
