//! JSON form of game results.
//!
//! A dump records the game (domain, signature, resource, both sides) and
//! its winner. When S wins it holds the strategy tree: inner nodes are
//! `{"move", "k1", "k2", "children"}` plus the move data, leaves are
//! `{"literal"}`. Teams are lists of bitstrings in domain order.
//!
//! Move data by kind:
//! * `bor`: `left`, `right`, the two covering parts of the left side.
//! * `and`: `left`, `right`, the two covering parts of the right side.
//! * `or`, `strict_or`, `co_and`, `strict_co_and`: `splits`, one
//!   `{team, left, right}` per team split by S, and `first`, the halves
//!   of the other side's splits that are sent to the first successor.
//!
//! When D wins the dump holds a certificate instead.

use serde::{Deserialize, Serialize};
use teamlogic::game::{
    solve, verify_strategy, DCertificate, Game, Move, Position, Solution, SolveOptions, SolveReport,
    StrategyTree, TeamSet, TeamSplit,
};
use teamlogic::{parse, BinOp, Domain, Formula, Signature, Team};

use crate::error::CliError;

pub const SCHEMA: u32 = 1;

type Rows = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameDump {
    pub schema: u32,
    pub domain: Vec<String>,
    pub signature: String,
    pub k: usize,
    pub a: Vec<Rows>,
    pub b: Vec<Rows>,
    /// `"S"` or `"D"`.
    pub winner: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategy: Option<NodeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NodeJson {
    Leaf {
        literal: String,
    },
    Node {
        #[serde(rename = "move")]
        mv: String,
        k1: usize,
        k2: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        left: Option<Vec<Rows>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        right: Option<Vec<Rows>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        splits: Option<Vec<SplitJson>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        first: Option<Vec<Rows>>,
        children: Vec<NodeJson>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitJson {
    pub team: Rows,
    pub left: Rows,
    pub right: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum CertificateJson {
    /// A team on both sides.
    SharedTeam { team: Rows },
    /// The resource is below the density.
    Density { density: usize },
    /// Exhaustive search found no winning move for S.
    ExhaustedSearch { nodes: u64 },
}

fn move_name(op: BinOp) -> &'static str {
    match op {
        BinOp::BoolOr => "bor",
        BinOp::And => "and",
        BinOp::Or => "or",
        BinOp::StrictOr => "strict_or",
        BinOp::CoAnd => "co_and",
        BinOp::StrictCoAnd => "strict_co_and",
    }
}

fn move_op(name: &str) -> Option<BinOp> {
    BinOp::ALL.into_iter().find(|op| move_name(*op) == name)
}

fn rows(d: &Domain, mask: u32) -> Rows {
    Team::new(d.clone(), mask).expect("mask within domain").bitstrings()
}

fn set_rows(d: &Domain, set: &TeamSet) -> Vec<Rows> {
    set.iter().map(|t| rows(d, t)).collect()
}

fn parse_rows(d: &Domain, r: &Rows) -> Result<u32, CliError> {
    Ok(Team::from_bitstrings(d.clone(), r.iter().map(String::as_str))?.mask())
}

fn parse_set(d: &Domain, set: &[Rows]) -> Result<TeamSet, CliError> {
    set.iter()
        .map(|r| parse_rows(d, r))
        .collect::<Result<Vec<_>, _>>()
        .map(TeamSet::from_teams)
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Usage(format!("malformed strategy: {}", msg.into()))
}

pub fn tree_to_json(d: &Domain, tree: &StrategyTree) -> NodeJson {
    match tree {
        StrategyTree::Leaf(l) => NodeJson::Leaf {
            literal: l.to_string(),
        },
        StrategyTree::Node { mv, children } => {
            let (k1, k2) = mv.resources().expect("connective move");
            let mut node = NodeJson::Node {
                mv: move_name(mv.op().expect("connective move")).into(),
                k1,
                k2,
                left: None,
                right: None,
                splits: None,
                first: None,
                children: children.iter().map(|c| tree_to_json(d, c)).collect(),
            };
            if let NodeJson::Node {
                left,
                right,
                splits,
                first,
                ..
            } = &mut node
            {
                match mv {
                    Move::BoolOr { left: l, right: r, .. } | Move::And { left: l, right: r, .. } => {
                        *left = Some(set_rows(d, l));
                        *right = Some(set_rows(d, r));
                    }
                    Move::Split { splits: s, first: f, .. } => {
                        *splits = Some(
                            s.iter()
                                .map(|s| SplitJson {
                                    team: rows(d, s.team),
                                    left: rows(d, s.left),
                                    right: rows(d, s.right),
                                })
                                .collect(),
                        );
                        *first = Some(set_rows(d, f));
                    }
                    Move::Literal(_) => unreachable!("literal moves are leaves"),
                }
            }
            node
        }
    }
}

pub fn tree_from_json(d: &Domain, node: &NodeJson) -> Result<StrategyTree, CliError> {
    match node {
        NodeJson::Leaf { literal } => match parse(literal)? {
            Formula::Lit(l) => Ok(StrategyTree::Leaf(l)),
            other => Err(bad(format!("`{other}` is not a literal"))),
        },
        NodeJson::Node {
            mv,
            k1,
            k2,
            left,
            right,
            splits,
            first,
            children,
        } => {
            let op = move_op(mv).ok_or_else(|| bad(format!("unknown move `{mv}`")))?;
            let (k1, k2) = (*k1, *k2);
            let need = |x: &Option<Vec<Rows>>, name: &str| {
                x.as_deref()
                    .ok_or_else(|| bad(format!("`{mv}` node without `{name}`")))
                    .and_then(|x| parse_set(d, x))
            };
            let mv = match op {
                BinOp::BoolOr | BinOp::And => {
                    let (left, right) = (need(left, "left")?, need(right, "right")?);
                    if op == BinOp::BoolOr {
                        Move::BoolOr { left, right, k1, k2 }
                    } else {
                        Move::And { left, right, k1, k2 }
                    }
                }
                _ => {
                    let splits = splits
                        .as_ref()
                        .ok_or_else(|| bad(format!("`{mv}` node without `splits`")))?
                        .iter()
                        .map(|s| {
                            Ok(TeamSplit {
                                team: parse_rows(d, &s.team)?,
                                left: parse_rows(d, &s.left)?,
                                right: parse_rows(d, &s.right)?,
                            })
                        })
                        .collect::<Result<Vec<_>, CliError>>()?;
                    Move::Split {
                        op,
                        splits,
                        first: need(first, "first")?,
                        k1,
                        k2,
                    }
                }
            };
            let [c1, c2] = children.as_slice() else {
                return Err(bad("a node needs exactly two children"));
            };
            Ok(StrategyTree::Node {
                mv,
                children: Box::new([tree_from_json(d, c1)?, tree_from_json(d, c2)?]),
            })
        }
    }
}

/// The dump of a solved game.
pub fn game_dump(game: &Game, pos: &Position, report: &SolveReport) -> GameDump {
    let d = game.domain();
    let (strategy, certificate) = match &report.solution {
        Solution::S(tree) => (Some(tree_to_json(d, tree)), None),
        Solution::D(c) => (
            None,
            Some(match c {
                DCertificate::SharedTeam(t) => CertificateJson::SharedTeam { team: rows(d, *t) },
                DCertificate::Density { density } => CertificateJson::Density { density: *density },
                DCertificate::ExhaustedSearch { nodes } => CertificateJson::ExhaustedSearch { nodes: *nodes },
            }),
        ),
    };
    GameDump {
        schema: SCHEMA,
        domain: d.props().to_vec(),
        signature: game.signature().to_string(),
        k: pos.k,
        a: set_rows(d, &pos.a),
        b: set_rows(d, &pos.b),
        winner: if report.s_wins { "S" } else { "D" }.into(),
        strategy,
        certificate,
    }
}

/// Outcome of replaying a dump.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    pub winner: String,
    /// Whether the recorded strategy or certificate holds up.
    pub confirmed: bool,
    pub detail: String,
}

/// Checks a dump: an S strategy is replayed against both choices of D at
/// every node; a D certificate is checked directly, and an exhausted-search
/// certificate by solving the game again.
pub fn replay(dump: &GameDump) -> Result<Replay, CliError> {
    if dump.schema != SCHEMA {
        return Err(bad(format!("unsupported schema {}", dump.schema)));
    }
    let d = Domain::new(dump.domain.iter().cloned())?;
    let game = Game::new(d.clone(), Signature::parse(&dump.signature)?)?;
    let pos = Position::new(dump.k, parse_set(&d, &dump.a)?, parse_set(&d, &dump.b)?);
    let (confirmed, detail) = match (dump.winner.as_str(), &dump.strategy, &dump.certificate) {
        ("S", Some(node), _) => {
            let tree = tree_from_json(&d, node)?;
            let formula = teamlogic::game::strategy_to_formula(&tree)?;
            let ok = verify_strategy(&game, &pos, &tree)?;
            (ok, format!("strategy for {formula}"))
        }
        ("D", _, Some(cert)) => match cert {
            CertificateJson::SharedTeam { team } => {
                let t = parse_rows(&d, team)?;
                (pos.a.contains(t) && pos.b.contains(t), "shared team".into())
            }
            CertificateJson::Density { density } => {
                let actual = teamlogic::game::density(&pos.a, &pos.b);
                let applies = teamlogic::game::density_applies(game.signature());
                (applies && actual == *density && pos.k < actual, format!("density {actual}"))
            }
            CertificateJson::ExhaustedSearch { .. } => {
                let report = solve(&game, &pos, SolveOptions::default())?;
                (!report.s_wins, "search repeated".into())
            }
        },
        _ => return Err(bad("winner without a matching strategy or certificate")),
    };
    Ok(Replay {
        winner: dump.winner.clone(),
        confirmed,
        detail,
    })
}
