//! Hand-description predicates: high-card points, suit lengths, distribution
//! shape, honour representation, and balance classes. These are the primitives
//! every rule language in the workspace is built from.

use std::fmt;
use std::str::FromStr;

use crate::{Hand, ParseError, Rank, Suit};

/// High-card points of a hand (A=4, K=3, Q=2, J=1).
pub fn hcp(hand: &Hand) -> u8 {
    Suit::ALL
        .iter()
        .map(|&s| hand.suit_ranks(s).iter().map(|r| r.hcp()).sum::<u8>())
        .sum()
}

/// Number of cards held in `suit`.
pub fn nb(hand: &Hand, suit: Suit) -> u8 {
    hand.suit_len(suit)
}

/// Number of spades held; shorthand for `nb(hand, Spades)`.
pub fn nbs(hand: &Hand) -> u8 {
    hand.suit_len(Suit::Spades)
}

/// Suit lengths sorted descending, e.g. `[7,3,2,1]`.
///
/// The four entries always sum to 13.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistributionPattern([u8; 4]);

impl DistributionPattern {
    pub fn new(lengths: [u8; 4]) -> Result<DistributionPattern, ParseError> {
        let mut sorted = lengths;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted != lengths || lengths.iter().map(|&l| l as u32).sum::<u32>() != 13 {
            return Err(ParseError::BadPattern(format!("{lengths:?}")));
        }
        Ok(DistributionPattern(lengths))
    }

    pub fn lengths(self) -> [u8; 4] {
        self.0
    }

    /// Length of the k-th longest suit (k = 0 for the longest).
    pub fn nth(self, k: usize) -> u8 {
        self.0[k]
    }
}

impl fmt::Display for DistributionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl fmt::Debug for DistributionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for DistributionPattern {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<DistributionPattern, ParseError> {
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| ParseError::BadPattern(s.to_string()))?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(ParseError::BadPattern(s.to_string()));
        }
        let mut lengths = [0u8; 4];
        for (i, p) in parts.iter().enumerate() {
            lengths[i] = p.parse().map_err(|_| ParseError::BadPattern(s.to_string()))?;
        }
        DistributionPattern::new(lengths)
    }
}

/// Distribution of a hand: suit lengths sorted descending.
pub fn distribution(hand: &Hand) -> DistributionPattern {
    let mut lengths = [0u8; 4];
    for (i, &s) in Suit::ALL.iter().enumerate() {
        lengths[i] = hand.suit_len(s);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    DistributionPattern(lengths)
}

/// Honours above ten held in one suit, plus the suit's length.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SuitRepresentation {
    /// Honours (J, Q, K, A) held, descending.
    pub honors: Vec<Rank>,
    /// Total cards held in the suit.
    pub count: u8,
}

/// Honour cards above ten in `suit`, with the suit length.
pub fn suit_representation(hand: &Hand, suit: Suit) -> SuitRepresentation {
    let mut honors: Vec<Rank> = hand
        .suit_ranks(suit)
        .into_iter()
        .filter(|r| r.is_honor())
        .collect();
    honors.sort_unstable_by(|a, b| b.cmp(a));
    SuitRepresentation { honors, count: hand.suit_len(suit) }
}

/// Shape classes over distribution patterns.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BalanceClass {
    Balanced,
    Semibalanced,
    Unbalanced,
}

/// Balance class of a hand: balanced is 4333/4432/5332, semibalanced is
/// 5422/6322, anything else is unbalanced.
pub fn balance_class(hand: &Hand) -> BalanceClass {
    match distribution(hand).lengths() {
        [4, 3, 3, 3] | [4, 4, 3, 2] | [5, 3, 3, 2] => BalanceClass::Balanced,
        [5, 4, 2, 2] | [6, 3, 2, 2] => BalanceClass::Semibalanced,
        _ => BalanceClass::Unbalanced,
    }
}

/// Longest suit, ties broken toward the higher-ranked suit.
pub fn longest_suit(hand: &Hand) -> Suit {
    *Suit::ALL
        .iter()
        .max_by_key(|&&s| (hand.suit_len(s), s))
        .unwrap()
}

/// Shortest suit, ties broken toward the higher-ranked suit.
pub fn shortest_suit(hand: &Hand) -> Suit {
    *Suit::ALL
        .iter()
        .min_by_key(|&&s| (hand.suit_len(s), std::cmp::Reverse(s)))
        .unwrap()
}

/// Numeric comparison predicates, named to match rule text.
pub fn gteq(a: u8, b: u8) -> bool {
    a >= b
}

pub fn lteq(a: u8, b: u8) -> bool {
    a <= b
}
