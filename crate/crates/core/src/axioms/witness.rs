use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::{AxiomError, IndexFunction};
use crate::games::{SimpleGame, WeightedMajorityGame};
use crate::indices::{colomer_martinez, hcm, IndexError, IndexKind};
use crate::Rational;

/// Indices used to show that each axiom of the CM and HCM characterizations
/// is independent of the other three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// `2 · CM`.
    ScaledCm,
    /// `2 · HCM`.
    ScaledHcm,
    /// `(1/3, 1/3, 1/3)` on `[4;2,2,1]`, CM elsewhere.
    NpPatchCm,
    /// `(1/3, 1/3, 1/3)` on `[4;2,2,1]`, HCM elsewhere.
    NpPatchHcm,
    /// `(1, 0, 0)` on `[4;2,2,1]`, HCM elsewhere.
    SymwPatchHcm,
}

impl WitnessKind {
    pub const ALL: [WitnessKind; 5] = [
        WitnessKind::ScaledCm,
        WitnessKind::ScaledHcm,
        WitnessKind::NpPatchCm,
        WitnessKind::NpPatchHcm,
        WitnessKind::SymwPatchHcm,
    ];

    pub fn code(self) -> &'static str {
        match self {
            WitnessKind::ScaledCm => "scaled_cm",
            WitnessKind::ScaledHcm => "scaled_hcm",
            WitnessKind::NpPatchCm => "np_patch_cm",
            WitnessKind::NpPatchHcm => "np_patch_hcm",
            WitnessKind::SymwPatchHcm => "symw_patch_hcm",
        }
    }
}

impl FromStr for WitnessKind {
    type Err = AxiomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase().replace('-', "_");
        WitnessKind::ALL
            .into_iter()
            .find(|k| k.code() == lower)
            .ok_or_else(|| AxiomError::UnknownKind(s.to_string()))
    }
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessIndex {
    pub kind: WitnessKind,
}

pub fn witness_index(kind: WitnessKind) -> WitnessIndex {
    WitnessIndex { kind }
}

/// Matched by exact representation, so `[8;4,4,2]` is not patched.
fn is_patched_game(game: &WeightedMajorityGame) -> bool {
    let int = |n: i64| Rational::from_integer(n.into());
    *game.quota() == int(4) && game.weights() == [int(2), int(2), int(1)]
}

impl IndexFunction<WeightedMajorityGame> for WitnessIndex {
    fn name(&self) -> String {
        self.kind.code().to_string()
    }

    fn allocate(&self, game: &WeightedMajorityGame) -> Result<Vec<Rational>, IndexError> {
        let two = Rational::from_integer(2.into());
        let third = Rational::new(1.into(), 3.into());
        Ok(match self.kind {
            WitnessKind::ScaledCm => colomer_martinez(game)
                .values
                .into_iter()
                .map(|v| v * &two)
                .collect(),
            WitnessKind::ScaledHcm => hcm(game).values.into_iter().map(|v| v * &two).collect(),
            WitnessKind::NpPatchCm if is_patched_game(game) => vec![third; 3],
            WitnessKind::NpPatchCm => colomer_martinez(game).values,
            WitnessKind::NpPatchHcm if is_patched_game(game) => vec![third; 3],
            WitnessKind::NpPatchHcm => hcm(game).values,
            WitnessKind::SymwPatchHcm if is_patched_game(game) => {
                vec![Rational::one(), Rational::zero(), Rational::zero()]
            }
            WitnessKind::SymwPatchHcm => hcm(game).values,
        })
    }
}

/// Any index the axiom suites can be run against, addressed by its code
/// (`ss`, `cm`, `np_patch_hcm`, ...).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnyIndex {
    Standard(IndexKind),
    Witness(WitnessIndex),
}

impl AnyIndex {
    pub fn code(&self) -> &'static str {
        match self {
            AnyIndex::Standard(k) => k.code(),
            AnyIndex::Witness(w) => w.kind.code(),
        }
    }

    pub fn weighted(&self) -> &dyn IndexFunction<WeightedMajorityGame> {
        match self {
            AnyIndex::Standard(k) => k,
            AnyIndex::Witness(w) => w,
        }
    }

    /// The index on simple games, when it is defined there.
    pub fn simple(&self) -> Option<&dyn IndexFunction<SimpleGame>> {
        match self {
            AnyIndex::Standard(k) if !k.requires_weights() => Some(k),
            _ => None,
        }
    }
}

impl FromStr for AnyIndex {
    type Err = AxiomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(k) = s.parse::<IndexKind>() {
            return Ok(AnyIndex::Standard(k));
        }
        s.parse::<WitnessKind>()
            .map(|kind| AnyIndex::Witness(WitnessIndex { kind }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(q: i64, w: &[i64]) -> WeightedMajorityGame {
        WeightedMajorityGame::from_integers(q, w).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn scaled_doubles() {
        let x = g(51, &[50, 46, 4, 1]);
        let cm = colomer_martinez(&x).values;
        let doubled = witness_index(WitnessKind::ScaledCm).allocate(&x).unwrap();
        assert_eq!(doubled, cm.iter().map(|v| v * q(2, 1)).collect::<Vec<_>>());
    }

    #[test]
    fn patches_apply_to_exact_representation_only() {
        let f = witness_index(WitnessKind::NpPatchCm);
        assert_eq!(f.allocate(&g(4, &[2, 2, 1])).unwrap(), vec![q(1, 3); 3]);
        assert_eq!(
            f.allocate(&g(4, &[3, 2, 0])).unwrap(),
            vec![q(3, 5), q(2, 5), q(0, 1)]
        );
        assert_eq!(
            f.allocate(&g(8, &[4, 4, 2])).unwrap(),
            colomer_martinez(&g(8, &[4, 4, 2])).values
        );
        let s = witness_index(WitnessKind::SymwPatchHcm);
        assert_eq!(
            s.allocate(&g(4, &[2, 2, 1])).unwrap(),
            vec![q(1, 1), q(0, 1), q(0, 1)]
        );
    }

    #[test]
    fn parses_any_index() {
        assert_eq!(
            "cm".parse::<AnyIndex>().unwrap(),
            AnyIndex::Standard(IndexKind::ColomerMartinez)
        );
        assert_eq!(
            "np-patch-hcm".parse::<AnyIndex>().unwrap(),
            AnyIndex::Witness(witness_index(WitnessKind::NpPatchHcm))
        );
        assert_eq!(
            "bogus".parse::<WitnessKind>(),
            Err(AxiomError::UnknownKind("bogus".into()))
        );
        assert!("cm".parse::<AnyIndex>().unwrap().simple().is_none());
        assert!("ss".parse::<AnyIndex>().unwrap().simple().is_some());
    }
}
