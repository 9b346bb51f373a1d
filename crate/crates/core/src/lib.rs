//! Propositional team logic.
//!
//! Formulas are evaluated on teams (sets of assignments) over small
//! domains. Beyond the evaluator the crate provides the translations of
//! dependency atoms into plain team-logic formulas, the formula-size game
//! with strategy extraction, a bottom-up minimal-width synthesiser, and the
//! density and upper-dimension lower-bound tools.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod atoms;
pub mod dimension;
pub mod domain;
mod error;
pub mod family;
pub mod formula;
pub mod game;
pub mod parse;
pub mod semantics;
pub mod translate;

pub use domain::{Assignment, Domain, Team, MAX_DENOTATION_PROPS, MAX_TEAM_PROPS};
pub use error::Error;
pub use family::TeamFamily;
pub use formula::{check_signature, Atom, AtomKind, BinOp, Connective, Formula, LitBase, Literal, Signature};
pub use parse::parse;
pub use semantics::{denotation, eval, Denotation};
