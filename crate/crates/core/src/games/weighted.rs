use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{AddAssign, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Coalition, GameError, SimpleGame, VotingGame, MAX_PLAYERS};
use crate::Rational;

/// A weighted majority game `[q; w_1, ..., w_n]`: a coalition wins iff its
/// total weight reaches the quota.
///
/// Quota and weights are exact rationals. Internally the game also keeps an
/// integer form (everything multiplied by the common denominator) so that
/// coalition tests are integer additions.
#[derive(Clone)]
pub struct WeightedMajorityGame {
    quota: Rational,
    weights: Vec<Rational>,
    scaled: Scaled,
    mwc: OnceLock<SimpleGame>,
}

#[derive(Clone, Debug)]
pub(crate) enum Scaled {
    Small { quota: u128, weights: Vec<u128> },
    Big { quota: BigInt, weights: Vec<BigInt> },
}

impl WeightedMajorityGame {
    pub fn new(quota: Rational, weights: Vec<Rational>) -> Result<Self, GameError> {
        if !quota.is_positive() {
            return Err(GameError::NonPositiveQuota(quota));
        }
        if weights.len() > MAX_PLAYERS {
            return Err(GameError::TooManyPlayers(weights.len()));
        }
        if let Some((player, w)) = weights.iter().enumerate().find(|(_, w)| w.is_negative()) {
            return Err(GameError::NegativeWeight {
                player,
                weight: w.clone(),
            });
        }
        let total: Rational = weights.iter().sum();
        if total < quota {
            return Err(GameError::GrandCoalitionLoses {
                total: Box::new(total),
                quota: Box::new(quota),
            });
        }
        let scaled = Scaled::new(&quota, &weights);
        Ok(Self {
            quota,
            weights,
            scaled,
            mwc: OnceLock::new(),
        })
    }

    /// Convenience constructor for integral games such as `[51; 50,46,4,1]`.
    pub fn from_integers(quota: i64, weights: &[i64]) -> Result<Self, GameError> {
        Self::new(
            Rational::from_integer(quota.into()),
            weights
                .iter()
                .map(|&w| Rational::from_integer(w.into()))
                .collect(),
        )
    }

    pub fn quota(&self) -> &Rational {
        &self.quota
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, player: usize) -> Result<&Rational, GameError> {
        self.check_player(player)?;
        Ok(&self.weights[player])
    }

    /// `w_S`; zero for the empty coalition.
    pub fn coalition_weight(&self, coalition: Coalition) -> Result<Rational, GameError> {
        self.check_coalition(coalition)?;
        Ok(coalition.members().map(|p| &self.weights[p]).sum())
    }

    /// `M(q; w)` as the induced simple game. Computed once and cached.
    pub fn minimal_winning_coalitions(&self) -> &SimpleGame {
        self.mwc.get_or_init(|| {
            let n = self.n_players();
            let mwc = match &self.scaled {
                Scaled::Small { quota, weights } => enumerate_mwc(weights, quota),
                Scaled::Big { quota, weights } => enumerate_mwc(weights, quota),
            };
            SimpleGame::from_canonical(n, mwc)
        })
    }

    /// `w_i / w_S` for `i ∈ S`, computed on the integer form.
    pub(crate) fn weight_share(&self, player: usize, coalition: Coalition) -> Rational {
        let (num, den) = match &self.scaled {
            Scaled::Small { weights, .. } => (
                BigInt::from(weights[player]),
                BigInt::from(coalition.members().map(|p| weights[p]).sum::<u128>()),
            ),
            Scaled::Big { weights, .. } => (
                weights[player].clone(),
                coalition.members().map(|p| &weights[p]).sum(),
            ),
        };
        Rational::new(num, den)
    }

    pub(crate) fn scaled(&self) -> &Scaled {
        &self.scaled
    }

    /// Same game with quota and weights multiplied by `factor > 0`.
    pub fn scaled_by(&self, factor: &Rational) -> Result<Self, GameError> {
        Self::new(
            &self.quota * factor,
            self.weights.iter().map(|w| w * factor).collect(),
        )
    }
}

impl Scaled {
    fn new(quota: &Rational, weights: &[Rational]) -> Self {
        let lcm = weights
            .iter()
            .chain(std::iter::once(quota))
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let lift = |r: &Rational| r.numer() * (&lcm / r.denom());
        let quota = lift(quota);
        let weights: Vec<BigInt> = weights.iter().map(lift).collect();
        let total: BigInt = weights.iter().sum();
        if total.to_u128().is_some() {
            Scaled::Small {
                quota: quota.to_u128().expect("quota is at most the total weight"),
                weights: weights.iter().map(|w| w.to_u128().unwrap()).collect(),
            }
        } else {
            Scaled::Big { quota, weights }
        }
    }

    fn wins(&self, coalition: Coalition) -> bool {
        match self {
            Scaled::Small { quota, weights } => {
                coalition.members().map(|p| weights[p]).sum::<u128>() >= *quota
            }
            Scaled::Big { quota, weights } => {
                coalition.members().map(|p| &weights[p]).sum::<BigInt>() >= *quota
            }
        }
    }
}

/// Depth-first search over players in decreasing weight order. A branch is
/// cut as soon as the running sum reaches the quota (no superset can be
/// minimal) or the remaining players cannot reach it. On reaching the quota
/// the last player added has the smallest weight in the coalition, so the
/// coalition is minimal iff dropping that player loses.
fn enumerate_mwc<T>(weights: &[T], quota: &T) -> Vec<Coalition>
where
    T: Clone + Ord + Zero + for<'a> AddAssign<&'a T>,
    for<'a> &'a T: Sub<&'a T, Output = T>,
{
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
    let mut suffix = vec![T::zero(); order.len() + 1];
    for k in (0..order.len()).rev() {
        let mut s = suffix[k + 1].clone();
        s += &weights[order[k]];
        suffix[k] = s;
    }

    struct Search<'a, T> {
        weights: &'a [T],
        quota: &'a T,
        order: Vec<usize>,
        suffix: Vec<T>,
        out: Vec<Coalition>,
    }

    impl<T> Search<'_, T>
    where
        T: Clone + Ord + Zero + for<'a> AddAssign<&'a T>,
        for<'a> &'a T: Sub<&'a T, Output = T>,
    {
        fn visit(&mut self, k: usize, sum: &T, set: Coalition, last: Option<usize>) {
            if sum >= self.quota {
                let last = last.expect("quota is positive, so a winning set is non-empty");
                if &(sum - &self.weights[last]) < self.quota {
                    self.out.push(set);
                }
                return;
            }
            if k == self.order.len() {
                return;
            }
            let mut reach = sum.clone();
            reach += &self.suffix[k];
            if &reach < self.quota {
                return;
            }
            let p = self.order[k];
            if self.weights[p].is_zero() {
                return;
            }
            let mut with = sum.clone();
            with += &self.weights[p];
            self.visit(k + 1, &with, set.with(p), Some(p));
            self.visit(k + 1, sum, set, last);
        }
    }

    let mut search = Search {
        weights,
        quota,
        order,
        suffix,
        out: Vec::new(),
    };
    search.visit(0, &T::zero(), Coalition::empty(), None);
    let mut out = search.out;
    out.sort_unstable();
    out
}

impl VotingGame for WeightedMajorityGame {
    fn n_players(&self) -> usize {
        self.weights.len()
    }

    fn wins(&self, coalition: Coalition) -> bool {
        self.scaled.wins(coalition)
    }

    fn simple_game(&self) -> &SimpleGame {
        self.minimal_winning_coalitions()
    }
}

impl PartialEq for WeightedMajorityGame {
    fn eq(&self, other: &Self) -> bool {
        self.quota == other.quota && self.weights == other.weights
    }
}

impl Eq for WeightedMajorityGame {}

impl Hash for WeightedMajorityGame {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.quota.hash(state);
        self.weights.hash(state);
    }
}

impl fmt::Display for WeightedMajorityGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};", self.quota)?;
        for (k, w) in self.weights.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for WeightedMajorityGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(players: &[usize]) -> Coalition {
        players.iter().map(|p| p - 1).collect()
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn construction_errors() {
        assert!(WeightedMajorityGame::from_integers(51, &[50, 46, 4, 1]).is_ok());
        assert!(WeightedMajorityGame::from_integers(1, &[1]).is_ok());
        assert!(matches!(
            WeightedMajorityGame::from_integers(5, &[1, 1, 1]),
            Err(GameError::GrandCoalitionLoses { .. })
        ));
        assert_eq!(
            WeightedMajorityGame::from_integers(0, &[1]).unwrap_err(),
            GameError::NonPositiveQuota(r(0))
        );
        assert_eq!(
            WeightedMajorityGame::from_integers(1, &[2, -1]).unwrap_err(),
            GameError::NegativeWeight {
                player: 1,
                weight: r(-1)
            }
        );
        assert_eq!(
            WeightedMajorityGame::from_integers(1, &[1; 65]).unwrap_err(),
            GameError::TooManyPlayers(65)
        );
        assert!(WeightedMajorityGame::from_integers(1, &[1; 64]).is_ok());
    }

    #[test]
    fn coalition_weights() {
        let g = WeightedMajorityGame::from_integers(51, &[50, 46, 4, 1]).unwrap();
        assert_eq!(g.coalition_weight(c(&[1, 2])).unwrap(), r(96));
        assert_eq!(g.coalition_weight(Coalition::empty()).unwrap(), r(0));
        assert!(matches!(
            g.coalition_weight(c(&[5])),
            Err(GameError::CoalitionOutOfRange { .. })
        ));
        let may = WeightedMajorityGame::from_integers(70, &[49, 27, 18, 18, 12, 13]).unwrap();
        assert_eq!(may.coalition_weight(c(&[2, 3, 4, 6])).unwrap(), r(76));
    }

    #[test]
    fn winning_is_exact_threshold() {
        let g = WeightedMajorityGame::from_integers(51, &[50, 46, 4, 1]).unwrap();
        assert!(g.is_winning(c(&[1, 4])).unwrap());
        assert!(!g.is_winning(c(&[3, 4])).unwrap());
    }

    #[test]
    fn rational_weights_are_scaled_exactly() {
        // [1/2; 1/3, 1/4, 1/6]: {1,2} = 7/12 wins, {1,3} = 1/2 wins, {2,3} = 5/12 loses
        let g = WeightedMajorityGame::new(
            Rational::new(1.into(), 2.into()),
            vec![
                Rational::new(1.into(), 3.into()),
                Rational::new(1.into(), 4.into()),
                Rational::new(1.into(), 6.into()),
            ],
        )
        .unwrap();
        assert_eq!(
            g.minimal_winning_coalitions().mwc(),
            &[c(&[1, 2]), c(&[1, 3])]
        );
    }

    #[test]
    fn huge_weights_use_big_integers() {
        let big = Rational::from_integer(BigInt::from(u128::MAX));
        let g =
            WeightedMajorityGame::new(big.clone(), vec![big.clone(), big.clone(), r(1)]).unwrap();
        assert!(matches!(g.scaled(), Scaled::Big { .. }));
        assert_eq!(g.minimal_winning_coalitions().mwc(), &[c(&[1]), c(&[2])]);
        assert!(g.is_null_player(2).unwrap());
    }

    #[test]
    fn worked_example_mwc_sets() {
        let g = WeightedMajorityGame::from_integers(51, &[50, 46, 4, 1]).unwrap();
        assert_eq!(
            g.minimal_winning_coalitions().mwc(),
            &[c(&[1, 2]), c(&[1, 3]), c(&[1, 4]), c(&[2, 3, 4])]
        );
        let g = WeightedMajorityGame::from_integers(4, &[3, 2, 1]).unwrap();
        assert_eq!(
            g.minimal_winning_coalitions().mwc(),
            &[c(&[1, 2]), c(&[1, 3])]
        );
    }

    #[test]
    fn zero_weight_players_are_never_minimal() {
        let g = WeightedMajorityGame::from_integers(4, &[3, 2, 0]).unwrap();
        assert_eq!(g.minimal_winning_coalitions().mwc(), &[c(&[1, 2])]);
    }

    #[test]
    fn display_uses_bracket_notation() {
        let g = WeightedMajorityGame::from_integers(4, &[3, 2, 1]).unwrap();
        assert_eq!(g.to_string(), "[4;3,2,1]");
    }
}
