//! Predicate vocabularies. Three nested-ish languages of increasing economy:
//! `L0` is the full descriptive vocabulary, `L1` drops the two most specific
//! predicates (`suit_representation`, `distribution`), and `L2` is a compact
//! core built around counts and comparators.

use std::fmt;

use crate::ParseError;

/// Every predicate a rule body may mention. Board vulnerability is exposed as
/// the two booleans `ns_vulnerable` / `ew_vulnerable`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PredicateId {
    SuitRepresentation,
    Distribution,
    Nb,
    Hcp,
    Semibalanced,
    Unbalanced,
    Balanced,
    NsVulnerable,
    EwVulnerable,
    Lteq,
    Gteq,
    LongestSuit,
    ShortestSuit,
    Major,
    Minor,
    Nbs,
}

impl PredicateId {
    pub fn name(self) -> &'static str {
        match self {
            PredicateId::SuitRepresentation => "suit_representation",
            PredicateId::Distribution => "distribution",
            PredicateId::Nb => "nb",
            PredicateId::Hcp => "hcp",
            PredicateId::Semibalanced => "semibalanced",
            PredicateId::Unbalanced => "unbalanced",
            PredicateId::Balanced => "balanced",
            PredicateId::NsVulnerable => "ns_vulnerable",
            PredicateId::EwVulnerable => "ew_vulnerable",
            PredicateId::Lteq => "lteq",
            PredicateId::Gteq => "gteq",
            PredicateId::LongestSuit => "longest_suit",
            PredicateId::ShortestSuit => "shortest_suit",
            PredicateId::Major => "major",
            PredicateId::Minor => "minor",
            PredicateId::Nbs => "nbs",
        }
    }

    pub fn from_name(s: &str) -> Result<PredicateId, ParseError> {
        use PredicateId::*;
        let all = [
            SuitRepresentation,
            Distribution,
            Nb,
            Hcp,
            Semibalanced,
            Unbalanced,
            Balanced,
            NsVulnerable,
            EwVulnerable,
            Lteq,
            Gteq,
            LongestSuit,
            ShortestSuit,
            Major,
            Minor,
            Nbs,
        ];
        all.into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| ParseError::BadLabel(s.to_string()))
    }
}

impl fmt::Display for PredicateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named predicate vocabulary.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LanguageId {
    L0,
    L1,
    L2,
}

const L0: &[PredicateId] = &[
    PredicateId::SuitRepresentation,
    PredicateId::Distribution,
    PredicateId::Nb,
    PredicateId::Hcp,
    PredicateId::Semibalanced,
    PredicateId::Unbalanced,
    PredicateId::Balanced,
    PredicateId::NsVulnerable,
    PredicateId::EwVulnerable,
    PredicateId::Lteq,
    PredicateId::Gteq,
    PredicateId::LongestSuit,
    PredicateId::ShortestSuit,
    PredicateId::Major,
    PredicateId::Minor,
];

const L1: &[PredicateId] = &[
    PredicateId::Nb,
    PredicateId::Hcp,
    PredicateId::Semibalanced,
    PredicateId::Unbalanced,
    PredicateId::Balanced,
    PredicateId::NsVulnerable,
    PredicateId::EwVulnerable,
    PredicateId::Lteq,
    PredicateId::Gteq,
    PredicateId::LongestSuit,
    PredicateId::ShortestSuit,
    PredicateId::Major,
    PredicateId::Minor,
];

const L2: &[PredicateId] = &[
    PredicateId::Distribution,
    PredicateId::Nb,
    PredicateId::Hcp,
    PredicateId::Lteq,
    PredicateId::Gteq,
    PredicateId::Nbs,
];

impl LanguageId {
    pub fn predicates(self) -> &'static [PredicateId] {
        match self {
            LanguageId::L0 => L0,
            LanguageId::L1 => L1,
            LanguageId::L2 => L2,
        }
    }

    pub fn contains(self, p: PredicateId) -> bool {
        self.predicates().contains(&p)
    }

    pub fn name(self) -> &'static str {
        match self {
            LanguageId::L0 => "L0",
            LanguageId::L1 => "L1",
            LanguageId::L2 => "L2",
        }
    }

    pub fn from_name(s: &str) -> Result<LanguageId, ParseError> {
        match s {
            "L0" | "l0" => Ok(LanguageId::L0),
            "L1" | "l1" => Ok(LanguageId::L1),
            "L2" | "l2" => Ok(LanguageId::L2),
            _ => Err(ParseError::BadLabel(s.to_string())),
        }
    }
}

impl fmt::Display for LanguageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l1_is_l0_minus_the_two_specific_predicates() {
        let l0: Vec<_> = LanguageId::L0.predicates().to_vec();
        let l1: Vec<_> = LanguageId::L1.predicates().to_vec();
        let dropped: Vec<_> = l0.iter().filter(|p| !l1.contains(p)).collect();
        assert_eq!(
            dropped,
            vec![&PredicateId::SuitRepresentation, &PredicateId::Distribution]
        );
        assert!(l1.iter().all(|p| l0.contains(p)));
    }

    #[test]
    fn l2_membership() {
        for p in [
            PredicateId::Distribution,
            PredicateId::Nb,
            PredicateId::Hcp,
            PredicateId::Lteq,
            PredicateId::Gteq,
            PredicateId::Nbs,
        ] {
            assert!(LanguageId::L2.contains(p));
        }
        assert_eq!(LanguageId::L2.predicates().len(), 6);
        assert!(!LanguageId::L2.contains(PredicateId::Balanced));
        assert!(!LanguageId::L0.contains(PredicateId::Nbs));
        assert!(!LanguageId::L1.contains(PredicateId::Nbs));
    }

    #[test]
    fn predicate_names_roundtrip() {
        for &p in LanguageId::L0.predicates() {
            assert_eq!(PredicateId::from_name(p.name()).unwrap(), p);
        }
        assert_eq!(PredicateId::from_name("nbs").unwrap(), PredicateId::Nbs);
    }
}
