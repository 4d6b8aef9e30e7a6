//! JSON game documents.
//!
//! ```json
//! {
//!   "players": ["A", "B", "C"],
//!   "quota": "4",
//!   "weights": ["3", "2", "1"],
//!   "metadata": { "label": "example", "date": "2021-05-14" }
//! }
//! ```
//!
//! Numbers are strings holding an integer, a `p/q` fraction or a finite
//! decimal. Bare JSON integers are accepted as well; JSON floats are not.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::rational::{parse_rational, RationalParseError};
use crate::games::{GameError, VotingGame, WeightedMajorityGame};
use crate::Rational;

/// A number kept in its source text until the document is validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberText(pub String);

impl From<&Rational> for NumberText {
    fn from(r: &Rational) -> Self {
        NumberText(r.to_string())
    }
}

impl Serialize for NumberText {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for NumberText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct NumberVisitor;

        impl Visitor<'_> for NumberVisitor {
            type Value = NumberText;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str(
                    "a number written as a string (\"70\", \"3/2\", \"0.25\") or an integer",
                )
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<NumberText, E> {
                Ok(NumberText(v.to_string()))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<NumberText, E> {
                Ok(NumberText(v.to_string()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<NumberText, E> {
                Ok(NumberText(v.to_string()))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<NumberText, E> {
                Err(E::custom(format!(
                    "floating-point literal {v} is not exact; write it as a string"
                )))
            }
        }

        d.deserialize_any(NumberVisitor)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub date: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    /// Display names; when omitted players are named `1..n`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub players: Vec<String>,
    pub quota: NumberText,
    pub weights: Vec<NumberText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid game document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {source}")]
    Number {
        field: String,
        #[source]
        source: RationalParseError,
    },
    #[error("{players} player names but {weights} weights")]
    LengthMismatch { players: usize, weights: usize },
    #[error("{field}: {source}")]
    Game {
        field: String,
        #[source]
        source: GameError,
    },
}

/// A validated game together with its player names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGame {
    pub game: WeightedMajorityGame,
    pub names: Vec<String>,
    pub metadata: Option<Metadata>,
}

impl NamedGame {
    pub fn label(&self) -> Option<&str> {
        self.metadata.as_ref()?.label.as_deref()
    }

    pub fn to_document(&self) -> GameDocument {
        GameDocument {
            players: self.names.clone(),
            quota: self.game.quota().into(),
            weights: self.game.weights().iter().map(NumberText::from).collect(),
            metadata: self.metadata.clone(),
        }
    }
}

fn number(field: String, text: &NumberText) -> Result<Rational, DocumentError> {
    parse_rational(&text.0).map_err(|source| DocumentError::Number { field, source })
}

fn game_field(err: &GameError) -> String {
    match err {
        GameError::NegativeWeight { player, .. } => format!("weights[{player}]"),
        GameError::TooManyPlayers(_) => "weights".to_string(),
        _ => "quota".to_string(),
    }
}

impl GameDocument {
    pub fn validate(&self) -> Result<NamedGame, DocumentError> {
        if !self.players.is_empty() && self.players.len() != self.weights.len() {
            return Err(DocumentError::LengthMismatch {
                players: self.players.len(),
                weights: self.weights.len(),
            });
        }
        let quota = number("quota".to_string(), &self.quota)?;
        let weights = self
            .weights
            .iter()
            .enumerate()
            .map(|(i, w)| number(format!("weights[{i}]"), w))
            .collect::<Result<Vec<_>, _>>()?;
        let game =
            WeightedMajorityGame::new(quota, weights).map_err(|source| DocumentError::Game {
                field: game_field(&source),
                source,
            })?;
        let names = if self.players.is_empty() {
            (1..=game.n_players()).map(|i| i.to_string()).collect()
        } else {
            self.players.clone()
        };
        Ok(NamedGame {
            game,
            names,
            metadata: self.metadata.clone(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// Parses and validates a JSON game document.
pub fn parse_game(text: &str) -> Result<NamedGame, DocumentError> {
    let doc: GameDocument = serde_json::from_str(text)?;
    doc.validate()
}
