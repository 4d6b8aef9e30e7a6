//! WM-union of weighted majority games and the four-condition
//! WM-mergeability test.
//!
//! The WM-union of `[q^1; w^1], ..., [q^p; w^p]` takes the smallest quota
//! and the componentwise largest weights. A family is WM-mergeable when
//!
//! 1. all quotas are equal,
//! 2. each player has at most one distinct nonzero weight across games,
//! 3. every proper coalition losing in all games still loses with the
//!    maximal weights against the minimal quota,
//! 4. the union has as many minimal winning coalitions as the games
//!    together.
//!
//! Under these conditions the minimal winning coalitions of the union are
//! the disjoint union of those of the components.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::games::{Coalition, GameError, VotingGame, WeightedMajorityGame};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("merging needs at least two games, got {0}")]
    FewerThanTwoGames(usize),
    #[error("games are not WM-mergeable: {0}")]
    NotMergeable(Box<MergeabilityReport>),
}

/// Per-condition outcome of [`check_wm_mergeability`]. Every condition is
/// evaluated even when an earlier one fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeabilityReport {
    /// Condition 1.
    pub equal_quotas: bool,
    /// Condition 2: players with two different nonzero weights. Empty iff
    /// the condition holds.
    pub weight_conflicts: Vec<usize>,
    /// Condition 3: the first proper coalition (numeric order) that loses in
    /// every game but reaches the minimal quota with maximal weights.
    pub losing_counterexample: Option<Coalition>,
    /// Condition 4: `|M(union)|`.
    pub union_mwc_count: usize,
    /// Condition 4: `Σ_k |M(game_k)|`.
    pub component_mwc_total: usize,
    pub union: WeightedMajorityGame,
}

impl MergeabilityReport {
    pub fn quotas_equal(&self) -> bool {
        self.equal_quotas
    }

    pub fn weights_compatible(&self) -> bool {
        self.weight_conflicts.is_empty()
    }

    pub fn losing_preserved(&self) -> bool {
        self.losing_counterexample.is_none()
    }

    pub fn mwc_count_matches(&self) -> bool {
        self.union_mwc_count == self.component_mwc_total
    }

    /// Conjunction of the four conditions.
    pub fn is_mergeable(&self) -> bool {
        self.quotas_equal()
            && self.weights_compatible()
            && self.losing_preserved()
            && self.mwc_count_matches()
    }

    /// The four condition flags in order.
    pub fn conditions(&self) -> [bool; 4] {
        [
            self.quotas_equal(),
            self.weights_compatible(),
            self.losing_preserved(),
            self.mwc_count_matches(),
        ]
    }
}

impl fmt::Display for MergeabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "yes" } else { "no" };
        write!(f, "equal quotas: {}", mark(self.quotas_equal()))?;
        write!(
            f,
            "; compatible weights: {}",
            mark(self.weights_compatible())
        )?;
        if !self.weights_compatible() {
            let players: Vec<String> = self
                .weight_conflicts
                .iter()
                .map(|p| (p + 1).to_string())
                .collect();
            write!(f, " (players {})", players.join(","))?;
        }
        write!(f, "; losing preserved: {}", mark(self.losing_preserved()))?;
        if let Some(s) = self.losing_counterexample {
            write!(f, " (counterexample {s})")?;
        }
        write!(
            f,
            "; MWC count: {} vs {} ({})",
            self.union_mwc_count,
            self.component_mwc_total,
            mark(self.mwc_count_matches())
        )
    }
}

fn check_family(games: &[WeightedMajorityGame]) -> Result<usize, MergeError> {
    if games.len() < 2 {
        return Err(MergeError::FewerThanTwoGames(games.len()));
    }
    let n = games[0].n_players();
    if let Some(g) = games.iter().find(|g| g.n_players() != n) {
        return Err(GameError::PlayerCountMismatch {
            expected: n,
            found: g.n_players(),
        }
        .into());
    }
    Ok(n)
}

/// `[min_k q^k; max_k w^k]`.
pub fn wm_union(games: &[WeightedMajorityGame]) -> Result<WeightedMajorityGame, MergeError> {
    let n = check_family(games)?;
    let quota = games
        .iter()
        .map(|g| g.quota())
        .min()
        .expect("family is non-empty")
        .clone();
    let weights = (0..n)
        .map(|i| {
            games
                .iter()
                .map(|g| &g.weights()[i])
                .max()
                .expect("family is non-empty")
                .clone()
        })
        .collect();
    // max weights dominate every component, so the grand coalition still wins
    Ok(WeightedMajorityGame::new(quota, weights)?)
}

pub fn check_wm_mergeability(
    games: &[WeightedMajorityGame],
) -> Result<MergeabilityReport, MergeError> {
    let n = check_family(games)?;
    let union = wm_union(games)?;

    let equal_quotas = games.iter().all(|g| g.quota() == games[0].quota());

    let weight_conflicts = (0..n)
        .filter(|&i| {
            let mut nonzero = games
                .iter()
                .map(|g| &g.weights()[i])
                .filter(|w| !w.is_zero());
            match nonzero.next() {
                Some(first) => nonzero.any(|w| w != first),
                None => false,
            }
        })
        .collect();

    let losing_counterexample = losing_violation(games, n);

    let union_mwc_count = union.minimal_winning_coalitions().mwc().len();
    let component_mwc_total = games
        .iter()
        .map(|g| g.minimal_winning_coalitions().mwc().len())
        .sum();

    Ok(MergeabilityReport {
        equal_quotas,
        weight_conflicts,
        losing_counterexample,
        union_mwc_count,
        component_mwc_total,
        union,
    })
}

/// The WM-union of a WM-mergeable family.
pub fn merged_game(games: &[WeightedMajorityGame]) -> Result<WeightedMajorityGame, MergeError> {
    let report = check_wm_mergeability(games)?;
    if !report.is_mergeable() {
        return Err(MergeError::NotMergeable(Box::new(report)));
    }
    Ok(report.union)
}

/// Splits a game into one game per group of minimal winning coalitions.
/// Game `g` keeps the weight of every player appearing in a coalition of
/// group `g`, and of every null player; other weights become zero.
///
/// `groups` holds indices into `game.minimal_winning_coalitions().mwc()`.
/// The resulting family is not guaranteed to be WM-mergeable for arbitrary
/// groupings; with singleton groups (see [`single_coalition_decomposition`])
/// it always is.
pub fn decompose_by_groups(
    game: &WeightedMajorityGame,
    groups: &[Vec<usize>],
) -> Result<Vec<WeightedMajorityGame>, GameError> {
    let mwc = game.minimal_winning_coalitions().mwc();
    let nulls: Coalition = game.null_players().into_iter().collect();
    groups
        .iter()
        .map(|group| {
            let keep = group.iter().fold(nulls, |acc, &k| acc | mwc[k]);
            let weights = game
                .weights()
                .iter()
                .enumerate()
                .map(|(i, w)| {
                    if keep.contains(i) {
                        w.clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            WeightedMajorityGame::new(game.quota().clone(), weights)
        })
        .collect()
}

/// One game per minimal winning coalition `S_k`, each having `{S_k}` as its
/// only minimal winning coalition; their WM-union is the original game.
pub fn single_coalition_decomposition(
    game: &WeightedMajorityGame,
) -> Result<Vec<WeightedMajorityGame>, GameError> {
    let m = game.minimal_winning_coalitions().mwc().len();
    let groups: Vec<Vec<usize>> = (0..m).map(|k| vec![k]).collect();
    decompose_by_groups(game, &groups)
}

fn losing_violation(games: &[WeightedMajorityGame], n: usize) -> Option<Coalition> {
    let lcm = games
        .iter()
        .flat_map(|g| g.weights().iter().chain(std::iter::once(g.quota())))
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let lift = |r: &Rational| r.numer() * (&lcm / r.denom());
    let quotas: Vec<BigInt> = games.iter().map(|g| lift(g.quota())).collect();
    let weights: Vec<Vec<BigInt>> = games
        .iter()
        .map(|g| g.weights().iter().map(lift).collect())
        .collect();
    let max_total: BigInt = (0..n)
        .map(|i| weights.iter().map(|w| &w[i]).max().unwrap().clone())
        .sum();
    if max_total.to_u128().is_some() {
        let small = |v: &BigInt| v.to_u128().expect("bounded by the maximal total");
        let quotas: Vec<u128> = quotas.iter().map(small).collect();
        let weights: Vec<Vec<u128>> = weights
            .iter()
            .map(|w| w.iter().map(small).collect())
            .collect();
        first_losing_violation(&quotas, &weights, n)
    } else {
        first_losing_violation(&quotas, &weights, n)
    }
}

fn first_losing_violation<T>(quotas: &[T], weights: &[Vec<T>], n: usize) -> Option<Coalition>
where
    T: Clone + Ord + Zero + for<'a> std::ops::AddAssign<&'a T>,
{
    let max_w: Vec<T> = (0..n)
        .map(|i| weights.iter().map(|w| &w[i]).max().unwrap().clone())
        .collect();
    let min_q = quotas.iter().min().unwrap();
    let grand = Coalition::grand(n);
    let sum = |w: &[T], s: Coalition| {
        let mut acc = T::zero();
        for p in s.members() {
            acc += &w[p];
        }
        acc
    };
    grand.subsets().filter(|&s| s != grand).find(|&s| {
        sum(&max_w, s) >= *min_q && weights.iter().zip(quotas).all(|(w, q)| sum(w, s) < *q)
    })
}
