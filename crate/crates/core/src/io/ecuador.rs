//! Bench compositions of the National Assembly of Ecuador during 2021.
//! 137 seats, simple-majority quota 70; minority MPs form one `IND` bloc.

use super::document::{parse_game, NamedGame};

pub const PERIODS: [&str; 6] = ["may21", "jun21", "jul21", "oct12", "oct26", "dec21"];

const DOCUMENTS: [&str; 6] = [
    include_str!("../../data/ecuador/may21.json"),
    include_str!("../../data/ecuador/jun21.json"),
    include_str!("../../data/ecuador/jul21.json"),
    include_str!("../../data/ecuador/oct12.json"),
    include_str!("../../data/ecuador/oct26.json"),
    include_str!("../../data/ecuador/dec21.json"),
];

/// Raw JSON document of a period.
pub fn document_text(period: &str) -> Option<&'static str> {
    PERIODS
        .iter()
        .position(|p| *p == period)
        .map(|i| DOCUMENTS[i])
}

pub fn period(period: &str) -> Option<NamedGame> {
    document_text(period).map(|t| parse_game(t).expect("bundled documents are valid"))
}

/// All periods in chronological order.
pub fn all() -> Vec<(&'static str, NamedGame)> {
    PERIODS
        .iter()
        .map(|p| (*p, period(p).expect("listed period")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::games::VotingGame;
    use crate::Rational;

    #[test]
    fn compositions() {
        let all = all();
        assert_eq!(all.len(), 6);
        for (p, g) in &all {
            let total: Rational = g.game.weights().iter().sum();
            assert_eq!(total, Rational::from_integer(137.into()), "{p}");
            assert_eq!(*g.game.quota(), Rational::from_integer(70.into()));
            assert!(g.game.null_players().is_empty());
        }
        assert_eq!(all[0].1.game.to_string(), "[70;49,27,18,18,12,13]");
        assert_eq!(all[5].1.game.to_string(), "[70;47,25,28,14,14,9]");
        assert_eq!(all[1].1.names[2], "BAN");
        assert!(period("jan22").is_none());
    }
}
