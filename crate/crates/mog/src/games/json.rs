//! JSON wire format for games, potentials, mixed profiles and point sets.
//!
//! Numbers may be JSON integers or strings `"p/q"` for exact rationals.
//! Game files round-trip structurally; result emitters write rationals as
//! strings only, so downstream parsers never see floats.

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{MogError, Result};
use crate::games::{Game, GraphicalGame, NormalFormGame, PotentialAnnotation, SymmetricGame};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::vector::Point;
use crate::{PayoffVector, VectorSet};

/// A rational on the wire: an integer or a `"p/q"` string. Floats are
/// rejected by construction.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    pub fn to_rat(&self) -> Result<Rat> {
        match self {
            Num::Int(v) => Ok(Rat::from_integer((*v).into())),
            Num::Str(s) => parse_rat(s),
        }
    }

    pub fn from_rat(r: &Rat) -> Num {
        if r.denom().is_one() {
            if let Some(v) = r.numer().to_i64() {
                return Num::Int(v);
            }
        }
        Num::Str(format_rat(r))
    }
}

fn vector_to_nums(v: &PayoffVector) -> Vec<Num> {
    v.iter().map(Num::from_rat).collect()
}

fn nums_to_vector(nums: &[Num]) -> Result<PayoffVector> {
    let cs = nums.iter().map(|n| n.to_rat()).collect::<Result<Vec<_>>>()?;
    Ok(Point::new(cs))
}

#[derive(Serialize, Deserialize)]
struct SymEntry {
    action: usize,
    config: Vec<usize>,
    payoff: Vec<Num>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum GameFile {
    Normal {
        n: usize,
        d: usize,
        actions: Vec<usize>,
        payoffs: Vec<Vec<Vec<Num>>>,
    },
    Symmetric {
        n: usize,
        alpha: usize,
        d: usize,
        table: Vec<SymEntry>,
    },
    Graphical {
        n: usize,
        d: usize,
        actions: Vec<usize>,
        scopes: Vec<Vec<usize>>,
        tables: Vec<Vec<Vec<Num>>>,
    },
    Potential {
        d: usize,
        actions: Vec<usize>,
        phi: Vec<Vec<Num>>,
    },
}

fn bad_json(err: serde_json::Error) -> MogError {
    MogError::MalformedGame(format!("invalid JSON: {err}"))
}

/// Serializes a game to its canonical pretty-printed JSON document.
pub fn game_to_json(game: &Game) -> String {
    let file = match game {
        Game::Normal(g) => GameFile::Normal {
            n: g.n(),
            d: g.d(),
            actions: g.actions().to_vec(),
            payoffs: g
                .payoff_tables()
                .iter()
                .map(|table| table.iter().map(vector_to_nums).collect())
                .collect(),
        },
        Game::Symmetric(g) => GameFile::Symmetric {
            n: g.n(),
            alpha: g.alpha(),
            d: g.d(),
            table: g
                .entries()
                .map(|((action, config), payoff)| SymEntry {
                    action: *action,
                    config: config.clone(),
                    payoff: vector_to_nums(payoff),
                })
                .collect(),
        },
        Game::Graphical(g) => GameFile::Graphical {
            n: g.n(),
            d: g.d(),
            actions: g.actions().to_vec(),
            scopes: g.scopes().to_vec(),
            tables: g
                .tables()
                .iter()
                .map(|table| table.iter().map(vector_to_nums).collect())
                .collect(),
        },
    };
    let mut text = serde_json::to_string_pretty(&file).expect("game serialization");
    text.push('\n');
    text
}

/// Parses a game file of any playable kind. A `"potential"` document is a
/// sidecar, not a game, and is rejected here.
pub fn game_from_json(text: &str) -> Result<Game> {
    let file: GameFile = serde_json::from_str(text).map_err(bad_json)?;
    match file {
        GameFile::Normal {
            n,
            d,
            actions,
            payoffs,
        } => {
            if actions.len() != n {
                return Err(MogError::MalformedGame(format!(
                    "n = {n} but {} action counts",
                    actions.len()
                )));
            }
            let payoffs = payoffs
                .iter()
                .map(|table| table.iter().map(|v| nums_to_vector(v)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(Game::Normal(NormalFormGame::new(actions, d, payoffs)?))
        }
        GameFile::Symmetric { n, alpha, d, table } => {
            let entries = table
                .into_iter()
                .map(|e| Ok((e.action, e.config, nums_to_vector(&e.payoff)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(Game::Symmetric(SymmetricGame::new(n, alpha, d, entries)?))
        }
        GameFile::Graphical {
            n,
            d,
            actions,
            scopes,
            tables,
        } => {
            if actions.len() != n {
                return Err(MogError::MalformedGame(format!(
                    "n = {n} but {} action counts",
                    actions.len()
                )));
            }
            let tables = tables
                .iter()
                .map(|table| table.iter().map(|v| nums_to_vector(v)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(Game::Graphical(GraphicalGame::new(actions, d, scopes, tables)?))
        }
        GameFile::Potential { .. } => Err(MogError::MalformedGame(
            "a potential sidecar is not a playable game; load it with the potential reader".into(),
        )),
    }
}

pub fn potential_to_json(phi: &PotentialAnnotation) -> String {
    let file = GameFile::Potential {
        d: phi.d(),
        actions: phi.actions().to_vec(),
        phi: phi.values().iter().map(vector_to_nums).collect(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("potential serialization");
    text.push('\n');
    text
}

pub fn potential_from_json(text: &str) -> Result<PotentialAnnotation> {
    let file: GameFile = serde_json::from_str(text).map_err(bad_json)?;
    match file {
        GameFile::Potential { d, actions, phi } => {
            let phi = phi
                .iter()
                .map(|v| nums_to_vector(v))
                .collect::<Result<Vec<_>>>()?;
            PotentialAnnotation::new(actions, d, phi)
        }
        _ => Err(MogError::MalformedGame(
            "expected a potential sidecar document".into(),
        )),
    }
}

#[derive(Serialize, Deserialize)]
struct MixedProfileFile {
    profile: Vec<Vec<Num>>,
}

/// Parses `{"profile":[[num...]...]}` into per-agent probability rows.
pub fn mixed_profile_from_json(text: &str) -> Result<Vec<Vec<Rat>>> {
    let file: MixedProfileFile = serde_json::from_str(text).map_err(bad_json)?;
    file.profile
        .iter()
        .map(|row| row.iter().map(|n| n.to_rat()).collect())
        .collect()
}

/// Parses a bare JSON array of vectors (`[[num...]...]`).
pub fn points_from_json(text: &str) -> Result<Vec<PayoffVector>> {
    let raw: Vec<Vec<Num>> = serde_json::from_str(text).map_err(bad_json)?;
    raw.iter().map(|v| nums_to_vector(v)).collect()
}

/// Emits a point set as arrays of `"p/q"` strings, the form used by every
/// result file.
pub fn points_to_json_value(points: &VectorSet) -> serde_json::Value {
    serde_json::Value::Array(
        points
            .iter()
            .map(|p| {
                serde_json::Value::Array(
                    p.iter()
                        .map(|c| serde_json::Value::String(format_rat(c)))
                        .collect(),
                )
            })
            .collect(),
    )
}
