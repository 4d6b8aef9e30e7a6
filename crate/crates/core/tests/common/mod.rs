//! Reference implementations used as test oracles. They work from the
//! definitions directly and share no code with the library's algorithms.

#![allow(dead_code)]

use num_traits::ToPrimitive;
use wmpower::{Coalition, Rational, VotingGame, WeightedMajorityGame};

fn integer_form(g: &WeightedMajorityGame) -> (i64, Vec<i64>) {
    let int = |x: &Rational| {
        assert!(x.is_integer(), "oracle needs integer weights");
        x.to_integer().to_i64().unwrap()
    };
    (int(g.quota()), g.weights().iter().map(int).collect())
}

fn weight_wins(quota: i64, w: &[i64], bits: u64) -> bool {
    let total: i64 = (0..w.len())
        .filter(|i| bits >> i & 1 == 1)
        .map(|i| w[i])
        .sum();
    total >= quota
}

/// Shapley-Shubik: share of the n! orderings in which each player is pivotal.
pub fn ss_by_permutations(g: &WeightedMajorityGame) -> Vec<Rational> {
    let (quota, w) = integer_form(g);
    let n = w.len();
    let mut pivots = vec![0i64; n];
    let mut order: Vec<usize> = (0..n).collect();
    let mut total = 0i64;
    permute(&mut order, 0, &mut |perm| {
        total += 1;
        let mut acc = 0;
        for &p in perm {
            acc += w[p];
            if acc >= quota {
                pivots[p] += 1;
                break;
            }
        }
    });
    pivots
        .iter()
        .map(|&c| Rational::new(c.into(), total.into()))
        .collect()
}

fn permute(v: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        visit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, visit);
        v.swap(k, i);
    }
}

/// Winning coalitions none of whose proper subsets win, by checking all
/// 2^n coalitions against the weights. Sorted by (size, bits).
pub fn mwc_brute_force(g: &WeightedMajorityGame) -> Vec<Coalition> {
    let (quota, w) = integer_form(g);
    let n = w.len();
    let winning: Vec<u64> = (0u64..1 << n)
        .filter(|&s| weight_wins(quota, &w, s))
        .collect();
    let mut out: Vec<u64> = winning
        .iter()
        .copied()
        .filter(|&s| !winning.iter().any(|&t| t != s && t & s == t))
        .collect();
    out.sort_by_key(|&s| (s.count_ones(), s));
    out.into_iter().map(Coalition::from_bits).collect()
}

/// Players `i` and `j` are symmetric when `S ∪ {i}` and `S ∪ {j}` have the
/// same outcome for every `S` containing neither.
pub fn symmetric_by_definition<G: VotingGame>(g: &G, i: usize, j: usize) -> bool {
    let rest = Coalition::grand(g.n_players()).without(i).without(j);
    rest.subsets()
        .all(|s| g.wins(s.with(i)) == g.wins(s.with(j)))
}
