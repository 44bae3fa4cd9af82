use std::fmt;
use std::str::FromStr;

use crate::{Card, ParseError, Rank, Suit};

/// A 13-card bridge hand, stored as a 52-bit set (bit = `Card::index`).
///
/// Text form is suit-major dotted notation, spades first, ranks descending,
/// `T` for ten: `AKJ8752.7.J863.5`. Voids are empty groups. `10` is accepted
/// on input as an alternative spelling of `T`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hand(u64);

pub(crate) const DECK_MASK: u64 = (1 << 52) - 1;

impl Hand {
    pub const SIZE: usize = 13;

    /// Builds a hand from exactly 13 distinct cards.
    pub fn from_cards(cards: &[Card]) -> Result<Hand, ParseError> {
        let mut bits = 0u64;
        for c in cards {
            let b = 1u64 << c.index();
            if bits & b != 0 {
                return Err(ParseError::DuplicateCard(c.to_string()));
            }
            bits |= b;
        }
        if cards.len() != Hand::SIZE {
            return Err(ParseError::CardCount(cards.len()));
        }
        Ok(Hand(bits))
    }

    /// Builds a hand from a 52-bit set with exactly 13 bits.
    pub fn from_bits(bits: u64) -> Result<Hand, ParseError> {
        if bits & !DECK_MASK != 0 || bits.count_ones() != Hand::SIZE as u32 {
            return Err(ParseError::CardCount(bits.count_ones() as usize));
        }
        Ok(Hand(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, card: Card) -> bool {
        self.0 & (1 << card.index()) != 0
    }

    /// The 13-bit rank mask of one suit (bit 0 = two, bit 12 = ace).
    pub fn suit_mask(self, suit: Suit) -> u16 {
        ((self.0 >> (suit.index() * 13)) & 0x1FFF) as u16
    }

    pub fn suit_len(self, suit: Suit) -> u8 {
        self.suit_mask(suit).count_ones() as u8
    }

    /// Cards in display order: spades, hearts, diamonds, clubs, each descending.
    pub fn cards(self) -> Vec<Card> {
        let mut out = Vec::with_capacity(Hand::SIZE);
        for suit in Suit::ALL.iter().rev() {
            let mut ranks: Vec<Rank> = self.suit_ranks(*suit);
            ranks.sort_unstable_by(|a, b| b.cmp(a));
            out.extend(ranks.into_iter().map(|r| Card::new(*suit, r)));
        }
        out
    }

    /// Ranks held in a suit, unordered.
    pub fn suit_ranks(self, suit: Suit) -> Vec<Rank> {
        let mask = self.suit_mask(suit);
        (0..13)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| Rank::new(i + 2).unwrap())
            .collect()
    }

    /// High-card points of the whole hand (A=4, K=3, Q=2, J=1).
    pub fn hcp(self) -> u8 {
        Suit::ALL
            .iter()
            .flat_map(|&s| self.suit_ranks(s))
            .map(Rank::hcp)
            .sum()
    }

    /// Suit lengths sorted longest first, the suit-blind shape of the hand.
    pub fn sorted_lengths(self) -> [u8; 4] {
        let mut lens = Suit::ALL.map(|s| self.suit_len(s));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl FromStr for Hand {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Hand, ParseError> {
        let groups: Vec<&str> = s.split('.').collect();
        if groups.len() != 4 {
            return Err(ParseError::SuitGroupCount(groups.len()));
        }
        let mut cards = Vec::with_capacity(Hand::SIZE);
        // Groups run spades down to clubs.
        for (gi, group) in groups.iter().enumerate() {
            let suit = Suit::from_index(3 - gi);
            let mut chars = group.chars().peekable();
            while let Some(c) = chars.next() {
                let rank = if c == '1' {
                    match chars.next() {
                        Some('0') => Rank::TEN,
                        _ => return Err(ParseError::InvalidRank('1')),
                    }
                } else {
                    Rank::from_char(c).ok_or(ParseError::InvalidRank(c))?
                };
                cards.push(Card::new(suit, rank));
            }
        }
        // Report duplicates before a wrong count so "1 card twice" is not
        // masked as a count error.
        let mut bits = 0u64;
        for c in &cards {
            let b = 1u64 << c.index();
            if bits & b != 0 {
                return Err(ParseError::DuplicateCard(c.to_string()));
            }
            bits |= b;
        }
        if cards.len() != Hand::SIZE {
            return Err(ParseError::CardCount(cards.len()));
        }
        Ok(Hand(bits))
    }
}

impl fmt::Display for Hand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (gi, suit) in Suit::ALL.iter().rev().enumerate() {
            if gi > 0 {
                f.write_str(".")?;
            }
            let mut ranks = self.suit_ranks(*suit);
            ranks.sort_unstable_by(|a, b| b.cmp(a));
            for r in ranks {
                write!(f, "{r}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Hand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
