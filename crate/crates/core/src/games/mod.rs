//! Coalitions, simple games and weighted majority games, with the
//! structural predicates the power indices are built on: winning and
//! minimal winning coalitions, swings, null players and symmetric players.

mod coalition;
mod error;
mod simple;
mod weighted;

pub use coalition::{Coalition, Members, Subsets, MAX_PLAYERS};
pub use error::GameError;
pub use simple::SimpleGame;
pub use weighted::WeightedMajorityGame;

pub(crate) use weighted::Scaled;

/// `η_i(v)`: the coalitions `S ⊆ N∖{i}` that lose but win once `i` joins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwingSet {
    pub player: usize,
    /// Canonically ordered.
    pub swings: Vec<Coalition>,
}

impl SwingSet {
    pub fn len(&self) -> usize {
        self.swings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swings.is_empty()
    }
}

/// Common interface of [`SimpleGame`] and [`WeightedMajorityGame`].
pub trait VotingGame {
    fn n_players(&self) -> usize;

    /// Winning test without range checking.
    fn wins(&self, coalition: Coalition) -> bool;

    /// The game's minimal winning coalitions.
    fn simple_game(&self) -> &SimpleGame;

    fn grand_coalition(&self) -> Coalition {
        Coalition::grand(self.n_players())
    }

    fn check_player(&self, player: usize) -> Result<(), GameError> {
        if player >= self.n_players() {
            return Err(GameError::PlayerOutOfRange {
                player,
                n_players: self.n_players(),
            });
        }
        Ok(())
    }

    fn check_coalition(&self, coalition: Coalition) -> Result<(), GameError> {
        if coalition.span() > self.n_players() {
            return Err(GameError::CoalitionOutOfRange {
                coalition,
                n_players: self.n_players(),
            });
        }
        Ok(())
    }

    fn is_winning(&self, coalition: Coalition) -> Result<bool, GameError> {
        self.check_coalition(coalition)?;
        Ok(self.wins(coalition))
    }

    fn swings(&self, player: usize) -> Result<SwingSet, GameError> {
        self.check_player(player)?;
        let rest = self.grand_coalition().without(player);
        let mut swings: Vec<Coalition> = rest
            .subsets()
            .filter(|&s| !self.wins(s) && self.wins(s.with(player)))
            .collect();
        swings.sort_unstable();
        Ok(SwingSet { player, swings })
    }

    /// Number of swings of `player` of each size: entry `k` counts swings
    /// `S` with `|S| = k`.
    fn swing_counts_by_size(&self, player: usize) -> Result<Vec<u128>, GameError> {
        self.check_player(player)?;
        let n = self.n_players();
        let mut counts = vec![0u128; n];
        for s in self.grand_coalition().without(player).subsets() {
            if !self.wins(s) && self.wins(s.with(player)) {
                counts[s.len()] += 1;
            }
        }
        Ok(counts)
    }

    /// A null player belongs to no minimal winning coalition.
    fn is_null_player(&self, player: usize) -> Result<bool, GameError> {
        self.check_player(player)?;
        Ok(self.simple_game().mwc_of(player).next().is_none())
    }

    fn null_players(&self) -> Vec<usize> {
        let counts = self.simple_game().membership_counts();
        (0..self.n_players()).filter(|&i| counts[i] == 0).collect()
    }

    /// Symmetric players: for every losing `S ⊆ N∖{i,j}`, `S ∪ {i}` wins
    /// iff `S ∪ {j}` wins. For a monotone game this is the same as the
    /// transposition of `i` and `j` mapping the minimal winning coalitions
    /// onto themselves, which is what is checked here.
    fn are_symmetric(&self, i: usize, j: usize) -> Result<bool, GameError> {
        self.check_player(i)?;
        self.check_player(j)?;
        if i == j {
            return Err(GameError::SamePlayer(i));
        }
        let mwc = self.simple_game().mwc();
        let mut swapped: Vec<Coalition> = mwc.iter().map(|&s| transpose(s, i, j)).collect();
        swapped.sort_unstable();
        Ok(swapped == mwc)
    }

    /// All pairs `i < j` of symmetric players.
    fn symmetric_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n_players();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.are_symmetric(i, j).unwrap_or(false))
            .collect()
    }
}

fn transpose(s: Coalition, i: usize, j: usize) -> Coalition {
    match (s.contains(i), s.contains(j)) {
        (true, false) => s.without(i).with(j),
        (false, true) => s.without(j).with(i),
        _ => s,
    }
}
