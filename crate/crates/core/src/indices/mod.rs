//! Exact power indices.
//!
//! Shapley-Shubik, Banzhaf, Deegan-Packel and Public Good depend only on the
//! induced simple game. Colomer-Martínez and HCM read the weight vector as
//! well, so they take a [`WeightedMajorityGame`] and never infer weights
//! from a bare [`SimpleGame`].

pub mod counting;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::games::{SimpleGame, VotingGame, WeightedMajorityGame};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("{0} needs a weighted majority game")]
    WeightsRequired(IndexKind),
    #[error("no player has a swing")]
    AllZeroSwings,
    #[error("weights are too large for the counting backend")]
    CountingTableTooLarge,
    #[error("unknown power index {0:?}")]
    UnknownIndex(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IndexKind {
    ShapleyShubik,
    /// Normalized Banzhaf (raw values via [`banzhaf`] with `normalized = false`).
    Banzhaf,
    DeeganPackel,
    PublicGood,
    ColomerMartinez,
    Hcm,
}

impl IndexKind {
    pub const ALL: [IndexKind; 6] = [
        IndexKind::ShapleyShubik,
        IndexKind::Banzhaf,
        IndexKind::DeeganPackel,
        IndexKind::PublicGood,
        IndexKind::ColomerMartinez,
        IndexKind::Hcm,
    ];

    pub fn code(self) -> &'static str {
        match self {
            IndexKind::ShapleyShubik => "ss",
            IndexKind::Banzhaf => "bz",
            IndexKind::DeeganPackel => "dp",
            IndexKind::PublicGood => "pg",
            IndexKind::ColomerMartinez => "cm",
            IndexKind::Hcm => "hcm",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            IndexKind::ShapleyShubik => "SS",
            IndexKind::Banzhaf => "BZ",
            IndexKind::DeeganPackel => "DP",
            IndexKind::PublicGood => "PG",
            IndexKind::ColomerMartinez => "CM",
            IndexKind::Hcm => "HCM",
        }
    }

    pub fn requires_weights(self) -> bool {
        matches!(self, IndexKind::ColomerMartinez | IndexKind::Hcm)
    }

    /// Computes this index on a weighted game. Shapley-Shubik and Banzhaf
    /// use the counting backend when the integer weights are small enough.
    pub fn compute(self, game: &WeightedMajorityGame) -> PowerIndexVector {
        match self {
            IndexKind::ShapleyShubik => match counting::swing_profile(game) {
                Ok(profile) => shapley_shubik_from_profile(&profile),
                Err(_) => shapley_shubik(game),
            },
            IndexKind::Banzhaf => {
                let profile =
                    counting::swing_profile(game).unwrap_or_else(|_| enumerated_profile(game));
                banzhaf_from_profile(&profile, true)
                    .expect("a valid game has a player with a swing")
            }
            IndexKind::DeeganPackel => deegan_packel(game),
            IndexKind::PublicGood => public_good(game),
            IndexKind::ColomerMartinez => colomer_martinez(game),
            IndexKind::Hcm => hcm(game),
        }
    }

    /// Computes this index on a simple game; fails for the weight-based
    /// indices.
    pub fn compute_simple(self, game: &SimpleGame) -> Result<PowerIndexVector, IndexError> {
        match self {
            IndexKind::ShapleyShubik => Ok(shapley_shubik(game)),
            IndexKind::Banzhaf => banzhaf(game, true),
            IndexKind::DeeganPackel => Ok(deegan_packel(game)),
            IndexKind::PublicGood => Ok(public_good(game)),
            IndexKind::ColomerMartinez | IndexKind::Hcm => Err(IndexError::WeightsRequired(self)),
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for IndexKind {
    type Err = IndexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        IndexKind::ALL
            .into_iter()
            .find(|k| k.code() == lower)
            .ok_or_else(|| IndexError::UnknownIndex(s.to_string()))
    }
}

/// An exact power allocation, one entry per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerIndexVector {
    pub kind: IndexKind,
    pub values: Vec<Rational>,
}

impl PowerIndexVector {
    fn efficient(kind: IndexKind, values: Vec<Rational>) -> Self {
        let v = Self { kind, values };
        debug_assert!(v.is_efficient(), "{kind} must sum to 1, got {}", v.total());
        v
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn is_efficient(&self) -> bool {
        self.total().is_one()
    }
}

impl std::ops::Index<usize> for PowerIndexVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.values[i]
    }
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        f[k] = &f[k - 1] * k;
    }
    f
}

fn enumerated_profile<G: VotingGame + ?Sized>(game: &G) -> Vec<Vec<u128>> {
    (0..game.n_players())
        .map(|i| game.swing_counts_by_size(i).expect("player in range"))
        .collect()
}

/// A swing `S` of size `k` contributes `k! (n - k - 1)! / n!`, i.e. the
/// probability that exactly the members of `S` precede `i` in a uniformly
/// random ordering.
fn shapley_shubik_from_profile(profile: &[Vec<u128>]) -> PowerIndexVector {
    let n = profile.len();
    let fact = factorials(n);
    let values = profile
        .iter()
        .map(|counts| {
            let num: BigInt = counts
                .iter()
                .enumerate()
                .map(|(k, &c)| BigInt::from(c) * &fact[k] * &fact[n - k - 1])
                .sum();
            Rational::new(num, fact[n].clone())
        })
        .collect();
    PowerIndexVector::efficient(IndexKind::ShapleyShubik, values)
}

fn banzhaf_from_profile(
    profile: &[Vec<u128>],
    normalized: bool,
) -> Result<PowerIndexVector, IndexError> {
    let n = profile.len();
    let swings: Vec<BigInt> = profile
        .iter()
        .map(|c| BigInt::from(c.iter().sum::<u128>()))
        .collect();
    if normalized {
        let total: BigInt = swings.iter().sum();
        if total.is_zero() {
            return Err(IndexError::AllZeroSwings);
        }
        let values = swings
            .into_iter()
            .map(|s| Rational::new(s, total.clone()))
            .collect();
        Ok(PowerIndexVector::efficient(IndexKind::Banzhaf, values))
    } else {
        let den = BigInt::one() << (n - 1);
        let values = swings
            .into_iter()
            .map(|s| Rational::new(s, den.clone()))
            .collect();
        Ok(PowerIndexVector {
            kind: IndexKind::Banzhaf,
            values,
        })
    }
}

/// Shapley-Shubik index by summing over each player's swings.
pub fn shapley_shubik<G: VotingGame + ?Sized>(game: &G) -> PowerIndexVector {
    shapley_shubik_from_profile(&enumerated_profile(game))
}

/// Shapley-Shubik index of a weighted game through the counting backend.
pub fn shapley_shubik_counting(
    game: &WeightedMajorityGame,
) -> Result<PowerIndexVector, IndexError> {
    counting::swing_profile(game).map(|p| shapley_shubik_from_profile(&p))
}

/// Banzhaf index: `|η_i| / 2^(n-1)` raw, or swing counts over their total
/// when `normalized`.
pub fn banzhaf<G: VotingGame + ?Sized>(
    game: &G,
    normalized: bool,
) -> Result<PowerIndexVector, IndexError> {
    banzhaf_from_profile(&enumerated_profile(game), normalized)
}

/// `DP_i = (1/|M|) Σ_{S ∈ M_i} 1/|S|`.
pub fn deegan_packel<G: VotingGame + ?Sized>(game: &G) -> PowerIndexVector {
    let simple = game.simple_game();
    let m = simple.mwc().len();
    let values = (0..game.n_players())
        .map(|i| {
            simple
                .mwc_of(i)
                .map(|s| ratio(1, s.len()))
                .sum::<Rational>()
                / ratio(m, 1)
        })
        .collect();
    PowerIndexVector::efficient(IndexKind::DeeganPackel, values)
}

/// `PG_i = |M_i| / Σ_j |M_j|`.
pub fn public_good<G: VotingGame + ?Sized>(game: &G) -> PowerIndexVector {
    let counts = game.simple_game().membership_counts();
    let total: usize = counts.iter().sum();
    let values = counts.into_iter().map(|c| ratio(c, total)).collect();
    PowerIndexVector::efficient(IndexKind::PublicGood, values)
}

/// `CM_i = (1/|M|) Σ_{S ∈ M_i} w_i / w_S`.
pub fn colomer_martinez(game: &WeightedMajorityGame) -> PowerIndexVector {
    let simple = game.minimal_winning_coalitions();
    let m = ratio(simple.mwc().len(), 1);
    let values = (0..game.n_players())
        .map(|i| {
            simple
                .mwc_of(i)
                .map(|s| game.weight_share(i, s))
                .sum::<Rational>()
                / &m
        })
        .collect();
    PowerIndexVector::efficient(IndexKind::ColomerMartinez, values)
}

/// `HCM_i = |M_i| w_i / Σ_j |M_j| w_j`.
pub fn hcm(game: &WeightedMajorityGame) -> PowerIndexVector {
    let counts = game.minimal_winning_coalitions().membership_counts();
    let scores: Vec<Rational> = counts
        .iter()
        .zip(game.weights())
        .map(|(&c, w)| w * ratio(c, 1))
        .collect();
    // Σ_S w_S over minimal winning coalitions, at least |M| q > 0
    let total: Rational = scores.iter().sum();
    let values = scores.into_iter().map(|s| s / &total).collect();
    PowerIndexVector::efficient(IndexKind::Hcm, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::Coalition;

    fn g(q: i64, w: &[i64]) -> WeightedMajorityGame {
        WeightedMajorityGame::from_integers(q, w).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn qs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(n, d)| q(n, d)).collect()
    }

    #[test]
    fn shapley_shubik_may_2021() {
        let may = g(70, &[49, 27, 18, 18, 12, 13]);
        let expected = qs(&[(2, 5), (1, 5), (1, 10), (1, 10), (1, 10), (1, 10)]);
        assert_eq!(shapley_shubik(&may).values, expected);
        assert_eq!(IndexKind::ShapleyShubik.compute(&may).values, expected);
    }

    #[test]
    fn shapley_shubik_june_2021() {
        let jun = g(70, &[48, 25, 25, 16, 14, 9]);
        let expected = qs(&[(7, 15), (1, 6), (1, 6), (1, 15), (1, 15), (1, 15)]);
        assert_eq!(shapley_shubik(&jun).values, expected);
        assert_eq!(shapley_shubik_counting(&jun).unwrap().values, expected);
    }

    #[test]
    fn shapley_shubik_unanimity_is_uniform() {
        for n in 1..=6 {
            let u = SimpleGame::unanimity(n, Coalition::grand(n)).unwrap();
            assert_eq!(shapley_shubik(&u).values, vec![q(1, n as i64); n]);
        }
    }

    #[test]
    fn banzhaf_values() {
        let dictator = SimpleGame::unanimity(2, Coalition::singleton(0)).unwrap();
        assert_eq!(
            banzhaf(&dictator, true).unwrap().values,
            qs(&[(1, 1), (0, 1)])
        );
        let x = g(51, &[50, 46, 4, 1]);
        assert_eq!(
            banzhaf(&x, false).unwrap().values,
            qs(&[(6, 8), (2, 8), (2, 8), (2, 8)])
        );
        assert_eq!(
            banzhaf(&x, true).unwrap().values,
            qs(&[(1, 2), (1, 6), (1, 6), (1, 6)])
        );
        assert_eq!(
            IndexKind::Banzhaf.compute(&x).values,
            qs(&[(1, 2), (1, 6), (1, 6), (1, 6)])
        );
    }

    #[test]
    fn deegan_packel_values() {
        let may = g(70, &[49, 27, 18, 18, 12, 13]);
        assert_eq!(
            deegan_packel(&may).values,
            qs(&[(5, 22), (3, 22), (7, 44), (7, 44), (7, 44), (7, 44)])
        );
        assert_eq!(
            deegan_packel(&g(4, &[3, 2, 1])).values,
            qs(&[(1, 2), (1, 4), (1, 4)])
        );
        let u = SimpleGame::unanimity(4, Coalition::from_players([0, 2, 3])).unwrap();
        assert_eq!(
            deegan_packel(&u).values,
            qs(&[(1, 3), (0, 1), (1, 3), (1, 3)])
        );
    }

    #[test]
    fn public_good_values() {
        let may = g(70, &[49, 27, 18, 18, 12, 13]);
        assert_eq!(
            public_good(&may).values,
            qs(&[(7, 36), (5, 36), (6, 36), (6, 36), (6, 36), (6, 36)])
        );
        let jun = g(70, &[48, 25, 25, 16, 14, 9]);
        assert_eq!(
            public_good(&jun).values,
            qs(&[(5, 25), (4, 25), (4, 25), (4, 25), (4, 25), (4, 25)])
        );
        let u = SimpleGame::unanimity(3, Coalition::from_players([1, 2])).unwrap();
        assert_eq!(public_good(&u).values, qs(&[(0, 1), (1, 2), (1, 2)]));
    }

    #[test]
    fn colomer_martinez_values() {
        let x = g(51, &[50, 46, 4, 1]);
        let quarter = q(1, 4);
        let expected = vec![
            &quarter * (q(50, 96) + q(50, 54) + q(50, 51)),
            &quarter * (q(46, 96) + q(46, 51)),
            &quarter * (q(4, 54) + q(4, 51)),
            &quarter * (q(1, 51) + q(1, 51)),
        ];
        assert_eq!(colomer_martinez(&x).values, expected);
        assert_eq!(
            colomer_martinez(&g(4, &[3, 2, 0])).values,
            qs(&[(3, 5), (2, 5), (0, 1)])
        );
        assert_eq!(
            colomer_martinez(&g(7, &[3, 4, 1])).values,
            qs(&[(3, 7), (4, 7), (0, 1)])
        );
    }

    #[test]
    fn hcm_values() {
        let x = g(51, &[50, 46, 4, 1]);
        assert_eq!(
            hcm(&x).values,
            qs(&[(150, 252), (92, 252), (8, 252), (2, 252)])
        );
        assert_eq!(hcm(&g(4, &[3, 2, 1])).values, qs(&[(6, 9), (2, 9), (1, 9)]));
        let equal = g(2, &[1, 1, 1]);
        assert_eq!(hcm(&equal).values, public_good(&equal).values);
    }

    #[test]
    fn weight_indices_refuse_simple_games() {
        let u = SimpleGame::unanimity(2, Coalition::grand(2)).unwrap();
        assert_eq!(
            IndexKind::ColomerMartinez.compute_simple(&u),
            Err(IndexError::WeightsRequired(IndexKind::ColomerMartinez))
        );
        assert!(IndexKind::ShapleyShubik.compute_simple(&u).is_ok());
    }

    #[test]
    fn parses_codes() {
        assert_eq!("HCM".parse::<IndexKind>().unwrap(), IndexKind::Hcm);
        assert!("barua".parse::<IndexKind>().is_err());
    }
}
