use std::fmt;

use super::{Coalition, GameError, VotingGame, MAX_PLAYERS};

/// A monotone simple game, stored as its antichain of minimal winning
/// coalitions in canonical order (cardinality, then bit value). Two games
/// with the same winning coalitions are equal as values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGame {
    n_players: usize,
    mwc: Vec<Coalition>,
}

impl SimpleGame {
    /// Builds a game from an antichain. Duplicates are collapsed; a pair of
    /// comparable coalitions is rejected.
    pub fn new<I>(n_players: usize, mwc: I) -> Result<Self, GameError>
    where
        I: IntoIterator<Item = Coalition>,
    {
        let mut mwc: Vec<Coalition> = mwc.into_iter().collect();
        validate_members(n_players, &mwc)?;
        mwc.sort_unstable();
        mwc.dedup();
        for (k, &a) in mwc.iter().enumerate() {
            if let Some(&b) = mwc[k + 1..].iter().find(|&&b| a.is_subset_of(b)) {
                return Err(GameError::NotAntichain(a, b));
            }
        }
        Ok(Self { n_players, mwc })
    }

    /// Builds the game whose winning coalitions are the supersets of any of
    /// `generators`, reducing them to their minimal elements.
    pub fn from_winning<I>(n_players: usize, generators: I) -> Result<Self, GameError>
    where
        I: IntoIterator<Item = Coalition>,
    {
        let gens: Vec<Coalition> = generators.into_iter().collect();
        validate_members(n_players, &gens)?;
        Ok(Self {
            n_players,
            mwc: minimal_elements(gens),
        })
    }

    /// Unanimity game `u_S`: the only minimal winning coalition is `S`.
    pub fn unanimity(n_players: usize, coalition: Coalition) -> Result<Self, GameError> {
        if coalition.is_empty() {
            return Err(GameError::EmptyCoalition);
        }
        Self::new(n_players, [coalition])
    }

    /// Assumes `mwc` is already a canonical antichain.
    pub(crate) fn from_canonical(n_players: usize, mwc: Vec<Coalition>) -> Self {
        debug_assert!(is_canonical_antichain(&mwc));
        Self { n_players, mwc }
    }

    pub fn mwc(&self) -> &[Coalition] {
        &self.mwc
    }

    /// `M_i(v)`: minimal winning coalitions containing `player`.
    pub fn mwc_of(&self, player: usize) -> impl Iterator<Item = Coalition> + '_ {
        self.mwc.iter().copied().filter(move |s| s.contains(player))
    }

    /// `|M_i(v)|` for every player.
    pub fn membership_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n_players];
        for s in &self.mwc {
            for p in s.members() {
                counts[p] += 1;
            }
        }
        counts
    }

    /// `v ∨ v'`: winning when winning in either game.
    pub fn union(&self, other: &Self) -> Result<Self, GameError> {
        self.check_same_players(other)?;
        let gens = self.mwc.iter().chain(other.mwc.iter()).copied();
        Ok(Self {
            n_players: self.n_players,
            mwc: minimal_elements(gens.collect()),
        })
    }

    /// `v ∧ v'`: winning when winning in both games.
    pub fn intersection(&self, other: &Self) -> Result<Self, GameError> {
        self.check_same_players(other)?;
        let gens = self
            .mwc
            .iter()
            .flat_map(|&a| other.mwc.iter().map(move |&b| a | b));
        Ok(Self {
            n_players: self.n_players,
            mwc: minimal_elements(gens.collect()),
        })
    }

    /// Mergeable: no minimal winning coalition of one game contains or is
    /// contained in one of the other.
    pub fn is_mergeable_with(&self, other: &Self) -> Result<bool, GameError> {
        self.check_same_players(other)?;
        Ok(self
            .mwc
            .iter()
            .all(|&a| other.mwc.iter().all(|&b| !a.comparable(b))))
    }

    fn check_same_players(&self, other: &Self) -> Result<(), GameError> {
        if self.n_players != other.n_players {
            return Err(GameError::PlayerCountMismatch {
                expected: self.n_players,
                found: other.n_players,
            });
        }
        Ok(())
    }
}

impl VotingGame for SimpleGame {
    fn n_players(&self) -> usize {
        self.n_players
    }

    fn wins(&self, coalition: Coalition) -> bool {
        self.mwc.iter().any(|m| m.is_subset_of(coalition))
    }

    fn simple_game(&self) -> &SimpleGame {
        self
    }
}

impl fmt::Display for SimpleGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M = {{")?;
        for (k, s) in self.mwc.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}} over {} players", self.n_players)
    }
}

impl fmt::Debug for SimpleGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn validate_members(n_players: usize, coalitions: &[Coalition]) -> Result<(), GameError> {
    if n_players > MAX_PLAYERS {
        return Err(GameError::TooManyPlayers(n_players));
    }
    if coalitions.is_empty() {
        return Err(GameError::NoWinningCoalition);
    }
    for &s in coalitions {
        if s.is_empty() {
            return Err(GameError::EmptyCoalition);
        }
        if s.span() > n_players {
            return Err(GameError::CoalitionOutOfRange {
                coalition: s,
                n_players,
            });
        }
    }
    Ok(())
}

/// Minimal elements under inclusion, in canonical order.
pub(crate) fn minimal_elements(mut sets: Vec<Coalition>) -> Vec<Coalition> {
    sets.sort_unstable();
    sets.dedup();
    let mut out: Vec<Coalition> = Vec::with_capacity(sets.len());
    // canonical order puts every proper subset before its supersets
    for s in sets {
        if !out.iter().any(|m| m.is_subset_of(s)) {
            out.push(s);
        }
    }
    out
}

pub(crate) fn is_canonical_antichain(mwc: &[Coalition]) -> bool {
    mwc.windows(2).all(|w| w[0] < w[1])
        && mwc
            .iter()
            .enumerate()
            .all(|(k, a)| mwc[k + 1..].iter().all(|b| !a.comparable(*b)))
}
