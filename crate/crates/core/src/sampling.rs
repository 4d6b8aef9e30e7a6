//! Seeded random generators for games and game families, used for the
//! sampled axiom checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::games::{Coalition, SimpleGame, WeightedMajorityGame};
use crate::merging::{check_wm_mergeability, decompose_by_groups, single_coalition_decomposition};

/// Deterministic generator for a given seed.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A weighted game with `1..=max_players` players and integer weights in
/// `0..=max_weight`; the quota is drawn from `1..=w_N`.
pub fn weighted_game<R: Rng + ?Sized>(
    rng: &mut R,
    max_players: usize,
    max_weight: i64,
) -> WeightedMajorityGame {
    let n = rng.gen_range(1..=max_players);
    let mut weights: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max_weight)).collect();
    if weights.iter().all(|&w| w == 0) {
        let i = rng.gen_range(0..n);
        weights[i] = rng.gen_range(1..=max_weight.max(1));
    }
    let total: i64 = weights.iter().sum();
    let quota = rng.gen_range(1..=total);
    WeightedMajorityGame::from_integers(quota, &weights).expect("quota within total weight")
}

/// A weighted game with exactly one minimal winning coalition. Players
/// outside it share less weight than the lightest member, so no other
/// coalition reaches the quota.
pub fn single_mwc_game<R: Rng + ?Sized>(
    rng: &mut R,
    max_players: usize,
    max_weight: i64,
) -> WeightedMajorityGame {
    let n = rng.gen_range(1..=max_players);
    let mut members: Coalition = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
    if members.is_empty() {
        members = Coalition::singleton(rng.gen_range(0..n));
    }
    let mut weights = vec![0i64; n];
    for p in members.members() {
        weights[p] = rng.gen_range(1..=max_weight.max(1));
    }
    let lightest = members.members().map(|p| weights[p]).min().unwrap();
    let mut budget = lightest - 1;
    for (p, weight) in weights.iter_mut().enumerate() {
        if !members.contains(p) && budget > 0 {
            *weight = rng.gen_range(0..=budget);
            budget -= *weight;
        }
    }
    let quota: i64 = members.members().map(|p| weights[p]).sum();
    WeightedMajorityGame::from_integers(quota, &weights).expect("members reach their own weight")
}

/// A game in which every player has the same positive weight.
pub fn equal_weight_game<R: Rng + ?Sized>(
    rng: &mut R,
    max_players: usize,
    max_weight: i64,
) -> WeightedMajorityGame {
    let n = rng.gen_range(1..=max_players);
    let w = rng.gen_range(1..=max_weight.max(1));
    let quota = rng.gen_range(1..=w * n as i64);
    WeightedMajorityGame::from_integers(quota, &vec![w; n]).expect("quota within total weight")
}

/// A simple game on exactly `n` players generated by up to four random
/// non-empty coalitions.
pub fn simple_game<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SimpleGame {
    let k = rng.gen_range(1..=4);
    let gens: Vec<Coalition> = (0..k).map(|_| nonempty_coalition(rng, n)).collect();
    SimpleGame::from_winning(n, gens).expect("generators are in range")
}

/// Two mergeable simple games on `n ≥ 2` players, obtained by splitting a
/// random antichain with at least two members.
pub fn mergeable_simple_pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (SimpleGame, SimpleGame) {
    assert!(n >= 2, "a two-member antichain needs two players");
    loop {
        let k = rng.gen_range(2..=5);
        let gens: Vec<Coalition> = (0..k).map(|_| nonempty_coalition(rng, n)).collect();
        let mut anti = SimpleGame::from_winning(n, gens)
            .expect("generators are in range")
            .mwc()
            .to_vec();
        if anti.len() < 2 {
            continue;
        }
        anti.shuffle(rng);
        let cut = rng.gen_range(1..anti.len());
        let left = SimpleGame::new(n, anti[..cut].iter().copied()).expect("sub-antichain");
        let right = SimpleGame::new(n, anti[cut..].iter().copied()).expect("sub-antichain");
        return (left, right);
    }
}

/// A WM-mergeable family built by splitting a random game's minimal winning
/// coalitions into groups. Groupings that break mergeability fall back to
/// one game per coalition.
pub fn mergeable_family<R: Rng + ?Sized>(
    rng: &mut R,
    max_players: usize,
    max_weight: i64,
) -> Vec<WeightedMajorityGame> {
    let max_players = max_players.max(2);
    loop {
        let game = weighted_game(rng, max_players, max_weight);
        let m = game.minimal_winning_coalitions().mwc().len();
        if m < 2 {
            continue;
        }
        let n_groups = rng.gen_range(2..=m);
        let mut idx: Vec<usize> = (0..m).collect();
        idx.shuffle(rng);
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); n_groups];
        for (k, i) in idx.into_iter().enumerate() {
            let g = if k < n_groups {
                k
            } else {
                rng.gen_range(0..n_groups)
            };
            groups[g].push(i);
        }
        let family = decompose_by_groups(&game, &groups).expect("decomposition keeps the quota");
        if check_wm_mergeability(&family).is_ok_and(|r| r.is_mergeable()) {
            return family;
        }
        return single_coalition_decomposition(&game).expect("decomposition keeps the quota");
    }
}

fn nonempty_coalition<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Coalition {
    let bits = rng.gen_range(1..=Coalition::grand(n).bits());
    Coalition::from_bits(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::VotingGame;

    #[test]
    fn generators_are_deterministic() {
        let a: Vec<_> = (0..5)
            .map(|_| weighted_game(&mut seeded(7), 8, 20))
            .collect();
        let b: Vec<_> = (0..5)
            .map(|_| weighted_game(&mut seeded(7), 8, 20))
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn single_mwc_games_have_one_coalition() {
        let mut rng = seeded(1);
        for _ in 0..200 {
            let g = single_mwc_game(&mut rng, 8, 30);
            assert_eq!(g.minimal_winning_coalitions().mwc().len(), 1, "{g}");
        }
    }

    #[test]
    fn mergeable_pairs_are_mergeable() {
        let mut rng = seeded(2);
        for _ in 0..100 {
            let n = rng.gen_range(2..=6);
            let (v, w) = mergeable_simple_pair(&mut rng, n);
            assert!(v.is_mergeable_with(&w).unwrap());
            assert_eq!(v.n_players(), n);
        }
    }

    #[test]
    fn families_are_mergeable() {
        let mut rng = seeded(3);
        for _ in 0..50 {
            let fam = mergeable_family(&mut rng, 8, 20);
            assert!(fam.len() >= 2);
            assert!(check_wm_mergeability(&fam).unwrap().is_mergeable());
        }
    }
}
