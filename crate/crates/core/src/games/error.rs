use thiserror::Error;

use super::Coalition;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("quota must be positive, got {0}")]
    NonPositiveQuota(Rational),
    #[error("player {player} has negative weight {weight}")]
    NegativeWeight { player: usize, weight: Rational },
    #[error("grand coalition loses: total weight {total} is below quota {quota}")]
    GrandCoalitionLoses {
        total: Box<Rational>,
        quota: Box<Rational>,
    },
    #[error("{0} players exceeds the 64-player cap")]
    TooManyPlayers(usize),
    #[error("player {player} is out of range for a {n_players}-player game")]
    PlayerOutOfRange { player: usize, n_players: usize },
    #[error("coalition {coalition} is out of range for a {n_players}-player game")]
    CoalitionOutOfRange {
        coalition: Coalition,
        n_players: usize,
    },
    #[error("expected two distinct players, got {0} twice")]
    SamePlayer(usize),
    #[error("coalition must be non-empty")]
    EmptyCoalition,
    #[error("player count mismatch: {expected} vs {found}")]
    PlayerCountMismatch { expected: usize, found: usize },
    #[error("minimal winning coalitions must form an antichain, but {0} is contained in {1}")]
    NotAntichain(Coalition, Coalition),
    #[error("a simple game needs at least one winning coalition")]
    NoWinningCoalition,
}
