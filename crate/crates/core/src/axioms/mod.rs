//! Executable versions of the power-index axioms.
//!
//! Each `check_*` function evaluates one axiom for one input (a game, a
//! pair of simple games, or a WM-mergeable family) and returns an
//! [`AxiomVerdict`]. Equalities are exact; a failed check carries the
//! offending players and the two sides of the equation that differed.
//! Sampling many inputs is the job of [`suite`].

pub mod suite;
mod witness;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::games::{GameError, SimpleGame, VotingGame, WeightedMajorityGame};
use crate::indices::{IndexError, IndexKind};
use crate::merging::{check_wm_mergeability, MergeError, MergeabilityReport};
use crate::Rational;

pub use witness::{witness_index, AnyIndex, WitnessIndex, WitnessKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Merge(#[from] MergeError),
    #[error("the two simple games are not mergeable")]
    NotMergeable,
    #[error("the family is not WM-mergeable: {0}")]
    NotWmMergeable(Box<MergeabilityReport>),
    #[error("weighted symmetry needs exactly one minimal winning coalition, found {0}")]
    NotUnanimityLike(usize),
    #[error("unknown index or witness {0:?}")]
    UnknownKind(String),
    #[error("index returned {found} values for a {expected}-player game")]
    WrongLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Efficiency,
    NullPlayer,
    Symmetry,
    Transfer,
    DpMergeability,
    PgMergeability,
    WeightedSymmetry,
    DpWeightedMergeability,
    HcmWeightedMergeability,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::Efficiency,
        Axiom::NullPlayer,
        Axiom::Symmetry,
        Axiom::Transfer,
        Axiom::DpMergeability,
        Axiom::PgMergeability,
        Axiom::WeightedSymmetry,
        Axiom::DpWeightedMergeability,
        Axiom::HcmWeightedMergeability,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Axiom::Efficiency => "EFF",
            Axiom::NullPlayer => "NP",
            Axiom::Symmetry => "SYM",
            Axiom::Transfer => "TRA",
            Axiom::DpMergeability => "DPM",
            Axiom::PgMergeability => "PGM",
            Axiom::WeightedSymmetry => "SYMw",
            Axiom::DpWeightedMergeability => "DPMw",
            Axiom::HcmWeightedMergeability => "HCMw",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Axiom {
    type Err = AxiomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.code().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| AxiomError::UnknownKind(s.to_string()))
    }
}

/// Counterexample attached to a failed verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// The game(s) involved, rendered.
    pub games: Vec<String>,
    /// Players involved (0-based); empty when the whole vector is compared.
    pub players: Vec<usize>,
    /// What the axiom requires.
    pub expected: Vec<Rational>,
    /// What the index produced.
    pub actual: Vec<Rational>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "on {}", self.games.join(" & "))?;
        if !self.players.is_empty() {
            let p: Vec<String> = self.players.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, " players {}", p.join(","))?;
        }
        write!(
            f,
            ": expected ({}) got ({})",
            join(&self.expected),
            join(&self.actual)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    /// Present iff the axiom fails.
    pub witness: Option<Witness>,
}

impl AxiomVerdict {
    fn pass(axiom: Axiom) -> Self {
        Self {
            axiom,
            witness: None,
        }
    }

    fn fail(axiom: Axiom, witness: Witness) -> Self {
        Self {
            axiom,
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// A power index as seen by the axiom checks: a deterministic map from a
/// game to one rational per player.
pub trait IndexFunction<G: ?Sized> {
    fn name(&self) -> String;

    fn allocate(&self, game: &G) -> Result<Vec<Rational>, IndexError>;
}

impl IndexFunction<WeightedMajorityGame> for IndexKind {
    fn name(&self) -> String {
        self.label().to_string()
    }

    fn allocate(&self, game: &WeightedMajorityGame) -> Result<Vec<Rational>, IndexError> {
        Ok(self.compute(game).values)
    }
}

impl IndexFunction<SimpleGame> for IndexKind {
    fn name(&self) -> String {
        self.label().to_string()
    }

    fn allocate(&self, game: &SimpleGame) -> Result<Vec<Rational>, IndexError> {
        Ok(self.compute_simple(game)?.values)
    }
}

fn evaluate<G, F>(f: &F, game: &G) -> Result<Vec<Rational>, AxiomError>
where
    G: VotingGame + ?Sized,
    F: IndexFunction<G> + ?Sized,
{
    let values = f.allocate(game)?;
    if values.len() != game.n_players() {
        return Err(AxiomError::WrongLength {
            expected: game.n_players(),
            found: values.len(),
        });
    }
    Ok(values)
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

fn count(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn zeros(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

/// EFF: `Σ_i f_i = 1`.
pub fn check_eff<G, F>(f: &F, game: &G) -> Result<AxiomVerdict, AxiomError>
where
    G: VotingGame + fmt::Display + ?Sized,
    F: IndexFunction<G> + ?Sized,
{
    let values = evaluate(f, game)?;
    let total: Rational = values.iter().sum();
    Ok(if total.is_one() {
        AxiomVerdict::pass(Axiom::Efficiency)
    } else {
        AxiomVerdict::fail(
            Axiom::Efficiency,
            Witness {
                games: vec![game.to_string()],
                players: Vec::new(),
                expected: vec![Rational::one()],
                actual: vec![total],
            },
        )
    })
}

/// NP: `f_i = 0` for every null player `i`.
pub fn check_np<G, F>(f: &F, game: &G) -> Result<AxiomVerdict, AxiomError>
where
    G: VotingGame + fmt::Display + ?Sized,
    F: IndexFunction<G> + ?Sized,
{
    let values = evaluate(f, game)?;
    Ok(
        match game
            .null_players()
            .into_iter()
            .find(|&i| !values[i].is_zero())
        {
            None => AxiomVerdict::pass(Axiom::NullPlayer),
            Some(i) => AxiomVerdict::fail(
                Axiom::NullPlayer,
                Witness {
                    games: vec![game.to_string()],
                    players: vec![i],
                    expected: vec![Rational::zero()],
                    actual: vec![values[i].clone()],
                },
            ),
        },
    )
}

/// SYM: `f_i = f_j` for every pair of symmetric players.
pub fn check_sym<G, F>(f: &F, game: &G) -> Result<AxiomVerdict, AxiomError>
where
    G: VotingGame + fmt::Display + ?Sized,
    F: IndexFunction<G> + ?Sized,
{
    let values = evaluate(f, game)?;
    Ok(
        match game
            .symmetric_pairs()
            .into_iter()
            .find(|&(i, j)| values[i] != values[j])
        {
            None => AxiomVerdict::pass(Axiom::Symmetry),
            Some((i, j)) => AxiomVerdict::fail(
                Axiom::Symmetry,
                Witness {
                    games: vec![game.to_string()],
                    players: vec![i, j],
                    expected: vec![values[i].clone()],
                    actual: vec![values[j].clone()],
                },
            ),
        },
    )
}

fn vector_verdict(
    axiom: Axiom,
    games: Vec<String>,
    expected: Vec<Rational>,
    actual: Vec<Rational>,
) -> AxiomVerdict {
    if expected == actual {
        AxiomVerdict::pass(axiom)
    } else {
        AxiomVerdict::fail(
            axiom,
            Witness {
                games,
                players: Vec::new(),
                expected,
                actual,
            },
        )
    }
}

/// TRA: `f(v ∧ v') + f(v ∨ v') = f(v) + f(v')`. The witness compares the
/// right-hand side (expected) with the left-hand side (actual).
pub fn check_tra<F>(f: &F, v: &SimpleGame, w: &SimpleGame) -> Result<AxiomVerdict, AxiomError>
where
    F: IndexFunction<SimpleGame> + ?Sized,
{
    let meet = v.intersection(w)?;
    let join = v.union(w)?;
    let lhs = add(&evaluate(f, &meet)?, &evaluate(f, &join)?);
    let rhs = add(&evaluate(f, v)?, &evaluate(f, w)?);
    Ok(vector_verdict(
        Axiom::Transfer,
        vec![v.to_string(), w.to_string()],
        rhs,
        lhs,
    ))
}

fn mergeable_union(v: &SimpleGame, w: &SimpleGame) -> Result<SimpleGame, AxiomError> {
    if !v.is_mergeable_with(w)? {
        return Err(AxiomError::NotMergeable);
    }
    Ok(v.union(w)?)
}

/// DPM: `f(v ∨ v') = (|M(v)| f(v) + |M(v')| f(v')) / |M(v ∨ v')|` for
/// mergeable `v`, `v'`.
pub fn check_dpm<F>(f: &F, v: &SimpleGame, w: &SimpleGame) -> Result<AxiomVerdict, AxiomError>
where
    F: IndexFunction<SimpleGame> + ?Sized,
{
    let join = mergeable_union(v, w)?;
    let rhs = add(
        &scale(&evaluate(f, v)?, &count(v.mwc().len())),
        &scale(&evaluate(f, w)?, &count(w.mwc().len())),
    );
    let rhs = scale(&rhs, &count(join.mwc().len()).recip());
    Ok(vector_verdict(
        Axiom::DpMergeability,
        vec![v.to_string(), w.to_string()],
        rhs,
        evaluate(f, &join)?,
    ))
}

/// PGM: like DPM with `Σ_i |M_i(·)|` in place of `|M(·)|`.
pub fn check_pgm<F>(f: &F, v: &SimpleGame, w: &SimpleGame) -> Result<AxiomVerdict, AxiomError>
where
    F: IndexFunction<SimpleGame> + ?Sized,
{
    let join = mergeable_union(v, w)?;
    let weight = |g: &SimpleGame| count(g.membership_counts().iter().sum());
    let rhs = add(
        &scale(&evaluate(f, v)?, &weight(v)),
        &scale(&evaluate(f, w)?, &weight(w)),
    );
    let rhs = scale(&rhs, &weight(&join).recip());
    Ok(vector_verdict(
        Axiom::PgMergeability,
        vec![v.to_string(), w.to_string()],
        rhs,
        evaluate(f, &join)?,
    ))
}

/// SYMw on a game with a single minimal winning coalition `S`:
/// `f_i / f_j = w_i / w_j` for `i, j ∈ S`, checked as
/// `f_i · w_j = f_j · w_i`. A member with zero power and zero weight is
/// skipped (both ratios are 0/0).
pub fn check_symw<F>(f: &F, game: &WeightedMajorityGame) -> Result<AxiomVerdict, AxiomError>
where
    F: IndexFunction<WeightedMajorityGame> + ?Sized,
{
    let mwc = game.minimal_winning_coalitions().mwc();
    if mwc.len() != 1 {
        return Err(AxiomError::NotUnanimityLike(mwc.len()));
    }
    let values = evaluate(f, game)?;
    let w = game.weights();
    let members: Vec<usize> = mwc[0]
        .members()
        .filter(|&p| !(values[p].is_zero() && w[p].is_zero()))
        .collect();
    for (k, &i) in members.iter().enumerate() {
        for &j in &members[k + 1..] {
            let lhs = &values[i] * &w[j];
            let rhs = &values[j] * &w[i];
            if lhs != rhs {
                return Ok(AxiomVerdict::fail(
                    Axiom::WeightedSymmetry,
                    Witness {
                        games: vec![game.to_string()],
                        players: vec![i, j],
                        expected: vec![rhs],
                        actual: vec![lhs],
                    },
                ));
            }
        }
    }
    Ok(AxiomVerdict::pass(Axiom::WeightedSymmetry))
}

fn mergeable_family(games: &[WeightedMajorityGame]) -> Result<WeightedMajorityGame, AxiomError> {
    let report = check_wm_mergeability(games)?;
    if !report.is_mergeable() {
        return Err(AxiomError::NotWmMergeable(Box::new(report)));
    }
    Ok(report.union)
}

/// DPMw: `f(union) = Σ_k |M^k| f(game_k) / |M(union)|` on a WM-mergeable
/// family. The witness compares the weighted average (expected) with
/// `f(union)` (actual).
pub fn check_dpmw<F>(f: &F, games: &[WeightedMajorityGame]) -> Result<AxiomVerdict, AxiomError>
where
    F: IndexFunction<WeightedMajorityGame> + ?Sized,
{
    let union = mergeable_family(games)?;
    let n = union.n_players();
    let mut rhs = zeros(n);
    for g in games {
        let m = count(g.minimal_winning_coalitions().mwc().len());
        rhs = add(&rhs, &scale(&evaluate(f, g)?, &m));
    }
    let m = count(union.minimal_winning_coalitions().mwc().len());
    let rhs = scale(&rhs, &m.recip());
    Ok(vector_verdict(
        Axiom::DpWeightedMergeability,
        games.iter().map(ToString::to_string).collect(),
        rhs,
        evaluate(f, &union)?,
    ))
}

/// `Σ_i |M_i| w_i`, equivalently `Σ_{S ∈ M} w_S`.
fn hcm_mass(game: &WeightedMajorityGame) -> Rational {
    game.minimal_winning_coalitions()
        .membership_counts()
        .iter()
        .zip(game.weights())
        .map(|(&c, w)| w * count(c))
        .sum()
}

/// HCMw: `f(union) = Σ_k f(game_k) Σ_i |M_i^k| w_i^k / Σ_i |M_i(union)| w_i`.
pub fn check_hcmw<F>(f: &F, games: &[WeightedMajorityGame]) -> Result<AxiomVerdict, AxiomError>
where
    F: IndexFunction<WeightedMajorityGame> + ?Sized,
{
    let union = mergeable_family(games)?;
    let n = union.n_players();
    let mut rhs = zeros(n);
    for g in games {
        rhs = add(&rhs, &scale(&evaluate(f, g)?, &hcm_mass(g)));
    }
    let rhs = scale(&rhs, &hcm_mass(&union).recip());
    Ok(vector_verdict(
        Axiom::HcmWeightedMergeability,
        games.iter().map(ToString::to_string).collect(),
        rhs,
        evaluate(f, &union)?,
    ))
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

    fn sg(n: usize, mwc: &[&[usize]]) -> SimpleGame {
        SimpleGame::new(
            n,
            mwc.iter()
                .map(|s| s.iter().map(|p| p - 1).collect::<Coalition>()),
        )
        .unwrap()
    }

    #[test]
    fn efficiency() {
        let x = g(51, &[50, 46, 4, 1]);
        assert!(check_eff(&IndexKind::ColomerMartinez, &x).unwrap().holds());
        let doubled = witness_index(WitnessKind::ScaledCm);
        let v = check_eff(&doubled, &x).unwrap();
        assert_eq!(v.witness.unwrap().actual, vec![q(2, 1)]);
    }

    #[test]
    fn null_player() {
        let x = g(4, &[2, 2, 1]);
        assert!(check_np(&IndexKind::ColomerMartinez, &x).unwrap().holds());
        let v = check_np(&witness_index(WitnessKind::NpPatchCm), &x).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.players, vec![2]);
        assert_eq!(w.actual, vec![q(1, 3)]);
        let no_nulls = g(51, &[50, 46, 4, 1]);
        assert!(check_np(&IndexKind::PublicGood, &no_nulls).unwrap().holds());
    }

    #[test]
    fn symmetry() {
        let may = g(70, &[49, 27, 18, 18, 12, 13]);
        assert!(check_sym(&IndexKind::DeeganPackel, &may).unwrap().holds());
        let v = check_sym(&IndexKind::ColomerMartinez, &may).unwrap();
        assert!(!v.holds());
        // no symmetric pair at all
        let x = g(7, &[5, 4, 3, 2, 1]);
        assert!(x.symmetric_pairs().is_empty());
        assert!(check_sym(&witness_index(WitnessKind::ScaledHcm), &x)
            .unwrap()
            .holds());
    }

    #[test]
    fn transfer() {
        let v = sg(3, &[&[1, 2]]);
        let w = sg(3, &[&[1, 3]]);
        assert!(check_tra(&IndexKind::ShapleyShubik, &v, &w)
            .unwrap()
            .holds());
        assert!(check_tra(&IndexKind::DeeganPackel, &v, &v).unwrap().holds());
        assert!(!check_tra(&IndexKind::DeeganPackel, &v, &w).unwrap().holds());
        assert!(matches!(
            check_tra(&IndexKind::ColomerMartinez, &v, &w),
            Err(AxiomError::Index(IndexError::WeightsRequired(_)))
        ));
    }

    #[test]
    fn simple_mergeability_axioms() {
        let v = sg(5, &[&[1, 2], &[1, 3]]);
        let w = sg(5, &[&[3, 4], &[3, 5], &[4, 5]]);
        assert!(check_dpm(&IndexKind::DeeganPackel, &v, &w).unwrap().holds());
        assert!(check_pgm(&IndexKind::PublicGood, &v, &w).unwrap().holds());
        // both games have average coalition size 2, so the two averages coincide here
        assert!(check_dpm(&IndexKind::PublicGood, &v, &w).unwrap().holds());
        let a = sg(5, &[&[1, 2]]);
        let b = sg(5, &[&[3, 4, 5]]);
        assert!(!check_dpm(&IndexKind::PublicGood, &a, &b).unwrap().holds());
        assert!(!check_pgm(&IndexKind::DeeganPackel, &a, &b).unwrap().holds());
        assert_eq!(
            check_dpm(&IndexKind::DeeganPackel, &v, &v),
            Err(AxiomError::NotMergeable)
        );
    }

    #[test]
    fn weighted_symmetry() {
        let x = g(4, &[2, 2, 1]);
        assert!(check_symw(&IndexKind::ColomerMartinez, &x).unwrap().holds());
        let v = check_symw(&witness_index(WitnessKind::SymwPatchHcm), &x).unwrap();
        assert!(!v.holds());
        assert!(check_symw(&IndexKind::Hcm, &g(4, &[3, 2, 0]))
            .unwrap()
            .holds());
        assert!(!check_symw(&IndexKind::DeeganPackel, &g(4, &[3, 2, 0]))
            .unwrap()
            .holds());
        assert_eq!(
            check_symw(&IndexKind::Hcm, &g(4, &[3, 2, 1])),
            Err(AxiomError::NotUnanimityLike(2))
        );
    }

    #[test]
    fn weighted_mergeability_axioms() {
        let fam = [g(4, &[3, 2, 0]), g(4, &[3, 0, 1])];
        assert!(check_dpmw(&IndexKind::ColomerMartinez, &fam)
            .unwrap()
            .holds());
        assert!(check_dpmw(&IndexKind::DeeganPackel, &fam).unwrap().holds());
        let v = check_dpmw(&IndexKind::Hcm, &fam).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w.actual, vec![q(6, 9), q(2, 9), q(1, 9)]);
        assert_eq!(w.expected, vec![q(27, 40), q(8, 40), q(5, 40)]);
        assert!(check_hcmw(&IndexKind::Hcm, &fam).unwrap().holds());
        assert!(!check_hcmw(&IndexKind::ColomerMartinez, &fam)
            .unwrap()
            .holds());
        assert!(matches!(
            check_dpmw(&IndexKind::Hcm, &[g(5, &[1, 2, 3]), g(6, &[1, 4, 5])]),
            Err(AxiomError::NotWmMergeable(_))
        ));
    }

    #[test]
    fn axiom_codes_round_trip() {
        for a in Axiom::ALL {
            assert_eq!(a.code().parse::<Axiom>().unwrap(), a);
        }
    }
}
