//! Axiom suites run over fixture sets: the worked-example fixtures bundled with
//! the crate, user-supplied games, and seeded random samples. A suite
//! reports sampled evidence only; a pass is not a proof.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::{
    check_dpm, check_dpmw, check_eff, check_hcmw, check_np, check_pgm, check_sym, check_symw,
    check_tra, AnyIndex, Axiom, AxiomError, AxiomVerdict, Witness,
};
use crate::games::{Coalition, SimpleGame, VotingGame, WeightedMajorityGame};
use crate::merging::{check_wm_mergeability, single_coalition_decomposition};
use crate::sampling;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// EFF, NP, SYMw, DPMw (characterizes CM).
    Thm1,
    /// EFF, NP, SYMw, HCMw (characterizes HCM).
    Thm2,
    /// EFF, NP, SYM, TRA, DPM, PGM.
    Classic,
}

impl Suite {
    pub fn axioms(self) -> &'static [Axiom] {
        match self {
            Suite::Thm1 => &[
                Axiom::Efficiency,
                Axiom::NullPlayer,
                Axiom::WeightedSymmetry,
                Axiom::DpWeightedMergeability,
            ],
            Suite::Thm2 => &[
                Axiom::Efficiency,
                Axiom::NullPlayer,
                Axiom::WeightedSymmetry,
                Axiom::HcmWeightedMergeability,
            ],
            Suite::Classic => &[
                Axiom::Efficiency,
                Axiom::NullPlayer,
                Axiom::Symmetry,
                Axiom::Transfer,
                Axiom::DpMergeability,
                Axiom::PgMergeability,
            ],
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Classic => "classic",
        }
    }
}

impl FromStr for Suite {
    type Err = AxiomError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "thm1" => Ok(Suite::Thm1),
            "thm2" => Ok(Suite::Thm2),
            "classic" => Ok(Suite::Classic),
            _ => Err(AxiomError::UnknownKind(s.to_string())),
        }
    }
}

/// Inputs for each axiom family.
#[derive(Debug, Clone, Default)]
pub struct Fixtures {
    /// EFF, NP and SYM.
    pub games: Vec<WeightedMajorityGame>,
    /// SYMw; every game has exactly one minimal winning coalition.
    pub single_mwc_games: Vec<WeightedMajorityGame>,
    /// DPMw and HCMw; every family is WM-mergeable.
    pub families: Vec<Vec<WeightedMajorityGame>>,
    /// EFF, NP and SYM for indices defined on simple games.
    pub simple_games: Vec<SimpleGame>,
    /// TRA.
    pub simple_pairs: Vec<(SimpleGame, SimpleGame)>,
    /// DPM and PGM; every pair is mergeable.
    pub mergeable_pairs: Vec<(SimpleGame, SimpleGame)>,
}

/// Simple pairs are only formed for games this small (TRA on SS and BZ
/// enumerates all coalitions).
const PAIR_MAX_PLAYERS: usize = 10;

impl Fixtures {
    /// Derives every fixture category from a list of weighted games:
    /// single-coalition decompositions supply SYMw games and mergeable
    /// families, WM-mergeable pairs among the games are added as families,
    /// and the induced simple games supply TRA/DPM/PGM pairs.
    pub fn from_games(games: Vec<WeightedMajorityGame>) -> Self {
        let mut fx = Fixtures::default();
        for g in &games {
            let m = g.minimal_winning_coalitions().mwc().len();
            if m == 1 {
                push_unique(&mut fx.single_mwc_games, g.clone());
            } else if let Ok(parts) = single_coalition_decomposition(g) {
                for p in &parts {
                    push_unique(&mut fx.single_mwc_games, p.clone());
                }
                fx.families.push(parts);
            }
        }
        for (k, a) in games.iter().enumerate() {
            for b in &games[k + 1..] {
                if a.n_players() != b.n_players() {
                    continue;
                }
                let pair = vec![a.clone(), b.clone()];
                if check_wm_mergeability(&pair).is_ok_and(|r| r.is_mergeable()) {
                    fx.families.push(pair);
                }
            }
        }

        let mut simple: Vec<SimpleGame> = Vec::new();
        for g in &games {
            push_unique(&mut simple, g.minimal_winning_coalitions().clone());
        }
        for (k, a) in simple.iter().enumerate() {
            if a.n_players() > PAIR_MAX_PLAYERS {
                continue;
            }
            for b in &simple[k..] {
                if a.n_players() == b.n_players() {
                    fx.simple_pairs.push((a.clone(), b.clone()));
                    if a.is_mergeable_with(b).unwrap_or(false) {
                        fx.mergeable_pairs.push((a.clone(), b.clone()));
                    }
                }
            }
            if let Some((first, rest)) = a.mwc().split_first() {
                if !rest.is_empty() {
                    let n = a.n_players();
                    let left = SimpleGame::new(n, [*first]).expect("single coalition");
                    let right = SimpleGame::new(n, rest.iter().copied()).expect("sub-antichain");
                    fx.mergeable_pairs.push((left, right));
                }
            }
        }
        fx.simple_games = simple;
        fx.games = games;
        fx
    }

    /// Worked examples from the literature on weighted majority games,
    /// including the six Ecuador National Assembly compositions of 2021.
    pub fn builtin() -> Self {
        let mut fx = Self::from_games(builtin_games());
        // a mergeable pair whose union is not a weighted majority game
        let c = |v: &[usize]| -> Coalition { v.iter().map(|p| p - 1).collect() };
        let v = SimpleGame::new(5, [c(&[1, 2]), c(&[1, 3])]).unwrap();
        let w = SimpleGame::new(5, [c(&[3, 4]), c(&[3, 5]), c(&[4, 5])]).unwrap();
        fx.simple_pairs.push((v.clone(), w.clone()));
        fx.mergeable_pairs.push((v, w));
        fx
    }

    /// Seeded random fixtures: `samples` games, single-MWC games, simple
    /// pairs and mergeable simple pairs, plus `samples / 4` (at least one)
    /// WM-mergeable families. Weighted games have at most 8 players, simple
    /// pairs at most 6.
    pub fn random(seed: u64, samples: usize) -> Self {
        let mut rng = sampling::seeded(seed);
        let mut fx = Fixtures::default();
        for _ in 0..samples {
            fx.games.push(sampling::weighted_game(&mut rng, 8, 20));
            fx.single_mwc_games
                .push(sampling::single_mwc_game(&mut rng, 8, 20));
            let n = rng.gen_range(1..=6);
            let pair = (
                sampling::simple_game(&mut rng, n),
                sampling::simple_game(&mut rng, n),
            );
            fx.simple_games.push(pair.0.clone());
            fx.simple_pairs.push(pair);
            let n = rng.gen_range(2..=6);
            fx.mergeable_pairs
                .push(sampling::mergeable_simple_pair(&mut rng, n));
        }
        for _ in 0..(samples / 4).max(1) {
            fx.families
                .push(sampling::mergeable_family(&mut rng, 8, 20));
        }
        fx
    }

    pub fn extend(&mut self, other: Fixtures) {
        self.games.extend(other.games);
        self.single_mwc_games.extend(other.single_mwc_games);
        self.families.extend(other.families);
        self.simple_games.extend(other.simple_games);
        self.simple_pairs.extend(other.simple_pairs);
        self.mergeable_pairs.extend(other.mergeable_pairs);
    }
}

fn push_unique<T: PartialEq>(v: &mut Vec<T>, x: T) {
    if !v.contains(&x) {
        v.push(x);
    }
}

/// The named games of the bundled fixture set.
pub fn builtin_games() -> Vec<WeightedMajorityGame> {
    let g = |q: i64, w: &[i64]| WeightedMajorityGame::from_integers(q, w).unwrap();
    vec![
        g(51, &[50, 46, 4, 1]),
        g(4, &[2, 2, 1]),
        g(4, &[3, 2, 0]),
        g(4, &[3, 0, 1]),
        g(4, &[3, 2, 1]),
        g(4, &[0, 2, 3]),
        g(5, &[1, 2, 3]),
        g(6, &[1, 4, 5]),
        g(5, &[1, 4, 5]),
        g(13, &[8, 6, 5, 1, 0]),
        g(15, &[1, 2, 5, 10, 10]),
        g(2, &[1, 1, 1]),
        g(70, &[49, 27, 18, 18, 12, 13]),
        g(70, &[48, 25, 25, 16, 14, 9]),
        g(70, &[47, 24, 25, 16, 14, 11]),
        g(70, &[47, 25, 25, 14, 14, 12]),
        g(70, &[47, 25, 26, 14, 14, 11]),
        g(70, &[47, 25, 28, 14, 14, 9]),
    ]
}

/// Outcome of one axiom over a fixture category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSummary {
    pub axiom: Axiom,
    /// False when the index is not defined on the inputs the axiom needs
    /// (e.g. TRA for an index that requires weights).
    pub applicable: bool,
    /// Inputs checked before stopping (all of them when the axiom held).
    pub checked: usize,
    /// First counterexample found.
    pub failure: Option<Witness>,
}

impl AxiomSummary {
    pub fn holds(&self) -> bool {
        self.applicable && self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub index: String,
    pub suite: Suite,
    pub summaries: Vec<AxiomSummary>,
}

impl SuiteReport {
    pub fn summary(&self, axiom: Axiom) -> Option<&AxiomSummary> {
        self.summaries.iter().find(|s| s.axiom == axiom)
    }

    /// Axioms that were applicable and failed.
    pub fn failed(&self) -> Vec<Axiom> {
        self.summaries
            .iter()
            .filter(|s| s.applicable && s.failure.is_some())
            .map(|s| s.axiom)
            .collect()
    }

    pub fn all_hold(&self) -> bool {
        self.summaries.iter().all(AxiomSummary::holds)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "index {} / suite {}", self.index, self.suite.code())?;
        for s in &self.summaries {
            match (&s.failure, s.applicable) {
                (_, false) => writeln!(f, "  {:<5} n/a", s.axiom.code())?,
                (None, true) => {
                    writeln!(f, "  {:<5} holds ({} checked)", s.axiom.code(), s.checked)?
                }
                (Some(w), true) => writeln!(
                    f,
                    "  {:<5} FAILS after {} checked: {w}",
                    s.axiom.code(),
                    s.checked
                )?,
            }
        }
        Ok(())
    }
}

fn summarize<I, T, F>(axiom: Axiom, inputs: I, mut check: F) -> Result<AxiomSummary, AxiomError>
where
    I: IntoIterator<Item = T>,
    F: FnMut(T) -> Result<AxiomVerdict, AxiomError>,
{
    let mut checked = 0;
    for input in inputs {
        checked += 1;
        let verdict = check(input)?;
        if let Some(w) = verdict.witness {
            return Ok(AxiomSummary {
                axiom,
                applicable: true,
                checked,
                failure: Some(w),
            });
        }
    }
    Ok(AxiomSummary {
        axiom,
        applicable: true,
        checked,
        failure: None,
    })
}

fn not_applicable(axiom: Axiom) -> AxiomSummary {
    AxiomSummary {
        axiom,
        applicable: false,
        checked: 0,
        failure: None,
    }
}

/// Runs a single axiom for `index` over the matching fixture category.
/// EFF, NP and SYM use the weighted games, and the simple games too when
/// the index is defined on simple games.
pub fn run_axiom(
    index: &AnyIndex,
    axiom: Axiom,
    fixtures: &Fixtures,
) -> Result<AxiomSummary, AxiomError> {
    let weighted = index.weighted();
    let simple = index.simple();
    let simple_games: &[SimpleGame] = if simple.is_some() {
        &fixtures.simple_games
    } else {
        &[]
    };
    match axiom {
        Axiom::Efficiency | Axiom::NullPlayer | Axiom::Symmetry => {
            let on_weighted = |g: &WeightedMajorityGame| match axiom {
                Axiom::Efficiency => check_eff(weighted, g),
                Axiom::NullPlayer => check_np(weighted, g),
                _ => check_sym(weighted, g),
            };
            let first = summarize(axiom, &fixtures.games, on_weighted)?;
            if first.failure.is_some() || simple.is_none() {
                return Ok(first);
            }
            let f = simple.expect("checked above");
            let on_simple = |g: &SimpleGame| match axiom {
                Axiom::Efficiency => check_eff(f, g),
                Axiom::NullPlayer => check_np(f, g),
                _ => check_sym(f, g),
            };
            let mut second = summarize(axiom, simple_games, on_simple)?;
            second.checked += first.checked;
            Ok(second)
        }
        Axiom::Transfer | Axiom::DpMergeability | Axiom::PgMergeability => {
            let Some(f) = simple else {
                return Ok(not_applicable(axiom));
            };
            match axiom {
                Axiom::Transfer => {
                    summarize(axiom, &fixtures.simple_pairs, |(v, w)| check_tra(f, v, w))
                }
                Axiom::DpMergeability => summarize(axiom, &fixtures.mergeable_pairs, |(v, w)| {
                    check_dpm(f, v, w)
                }),
                _ => summarize(axiom, &fixtures.mergeable_pairs, |(v, w)| {
                    check_pgm(f, v, w)
                }),
            }
        }
        Axiom::WeightedSymmetry => summarize(axiom, &fixtures.single_mwc_games, |g| {
            check_symw(weighted, g)
        }),
        Axiom::DpWeightedMergeability => {
            summarize(axiom, &fixtures.families, |fam| check_dpmw(weighted, fam))
        }
        Axiom::HcmWeightedMergeability => {
            summarize(axiom, &fixtures.families, |fam| check_hcmw(weighted, fam))
        }
    }
}

pub fn run_suite(
    index: &AnyIndex,
    suite: Suite,
    fixtures: &Fixtures,
) -> Result<SuiteReport, AxiomError> {
    let summaries = suite
        .axioms()
        .iter()
        .map(|&a| run_axiom(index, a, fixtures))
        .collect::<Result<_, _>>()?;
    Ok(SuiteReport {
        index: index.code().to_string(),
        suite,
        summaries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(index: &str, suite: Suite) -> SuiteReport {
        run_suite(&index.parse().unwrap(), suite, &Fixtures::builtin()).unwrap()
    }

    #[test]
    fn builtin_fixtures_are_well_formed() {
        let fx = Fixtures::builtin();
        assert!(fx
            .single_mwc_games
            .iter()
            .all(|g| g.minimal_winning_coalitions().mwc().len() == 1));
        assert!(fx
            .families
            .iter()
            .all(|f| check_wm_mergeability(f).unwrap().is_mergeable()));
        assert!(fx
            .mergeable_pairs
            .iter()
            .all(|(v, w)| v.is_mergeable_with(w).unwrap()));
        let example3 = vec![
            WeightedMajorityGame::from_integers(4, &[3, 2, 0]).unwrap(),
            WeightedMajorityGame::from_integers(4, &[3, 0, 1]).unwrap(),
        ];
        assert!(fx.families.contains(&example3));
    }

    #[test]
    fn characterized_indices_pass_their_suites() {
        assert!(report("cm", Suite::Thm1).all_hold());
        assert!(report("hcm", Suite::Thm2).all_hold());
    }

    #[test]
    fn classic_indices_fail_where_expected() {
        assert_eq!(
            report("dp", Suite::Classic).failed(),
            vec![Axiom::Transfer, Axiom::PgMergeability]
        );
        let cm = report("cm", Suite::Classic);
        assert_eq!(cm.failed(), vec![Axiom::Symmetry]);
        assert!(!cm.summary(Axiom::Transfer).unwrap().applicable);
    }
}
