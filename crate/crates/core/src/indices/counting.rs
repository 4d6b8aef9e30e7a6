//! Swing counting for weighted games by dynamic programming over
//! (coalition size, coalition weight) tallies.
//!
//! The table counts subsets of all players with a given size and integer
//! weight below the quota. The tally for `N∖{i}` is recovered from the full
//! table by peeling player `i` off again, so each player costs one pass
//! instead of a full rebuild.

use crate::games::{Scaled, VotingGame, WeightedMajorityGame};

use super::IndexError;

/// Upper bound on `(n + 1) * quota` table cells.
pub const MAX_TABLE_CELLS: u128 = 1 << 22;

/// Swing counts by size for every player: `result[i][k]` is the number of
/// swings `S` of player `i` with `|S| = k`.
pub fn swing_profile(game: &WeightedMajorityGame) -> Result<Vec<Vec<u128>>, IndexError> {
    let (quota, weights) = match game.scaled() {
        Scaled::Small { quota, weights } => (*quota, weights),
        Scaled::Big { .. } => return Err(IndexError::CountingTableTooLarge),
    };
    let n = game.n_players();
    let cells = (n as u128 + 1).saturating_mul(quota);
    if cells > MAX_TABLE_CELLS {
        return Err(IndexError::CountingTableTooLarge);
    }
    let q = quota as usize;
    let at = |k: usize, w: usize| k * q + w;

    let mut full = vec![0u128; (n + 1) * q];
    full[at(0, 0)] = 1;
    for (p, &wp) in weights.iter().enumerate() {
        let wp = wp as usize;
        for k in (0..=p).rev() {
            for w in (0..q.saturating_sub(wp)).rev() {
                let c = full[at(k, w)];
                if c != 0 {
                    full[at(k + 1, w + wp)] += c;
                }
            }
        }
    }

    let mut without = vec![0u128; (n + 1) * q];
    let mut profile = Vec::with_capacity(n);
    for &wi in weights.iter() {
        let wi = wi as usize;
        for k in 0..n {
            for w in 0..q {
                let mut c = full[at(k, w)];
                if k >= 1 && w >= wi {
                    c -= without[at(k - 1, w - wi)];
                }
                without[at(k, w)] = c;
            }
        }
        let lo = q.saturating_sub(wi);
        let counts: Vec<u128> = (0..n)
            .map(|k| {
                if wi == 0 {
                    0
                } else {
                    (lo..q).map(|w| without[at(k, w)]).sum()
                }
            })
            .collect();
        profile.push(counts);
    }
    Ok(profile)
}
