use std::fmt;

use crate::ParseError;

/// The four suits, ordered clubs < diamonds < hearts < spades.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum Suit {
    Clubs = 0,
    Diamonds = 1,
    Hearts = 2,
    Spades = 3,
}

impl Suit {
    /// All suits in ascending order.
    pub const ALL: [Suit; 4] = [Suit::Clubs, Suit::Diamonds, Suit::Hearts, Suit::Spades];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Suit {
        Suit::ALL[i]
    }

    /// Upper-case letter used in hand and contract notation.
    pub fn letter(self) -> char {
        match self {
            Suit::Clubs => 'C',
            Suit::Diamonds => 'D',
            Suit::Hearts => 'H',
            Suit::Spades => 'S',
        }
    }

    /// Lower-case singular name used as a constant in rule text.
    pub fn name(self) -> &'static str {
        match self {
            Suit::Clubs => "club",
            Suit::Diamonds => "diamond",
            Suit::Hearts => "heart",
            Suit::Spades => "spade",
        }
    }

    pub fn from_name(s: &str) -> Result<Suit, ParseError> {
        match s {
            "club" => Ok(Suit::Clubs),
            "diamond" => Ok(Suit::Diamonds),
            "heart" => Ok(Suit::Hearts),
            "spade" => Ok(Suit::Spades),
            _ => Err(ParseError::InvalidSuit(s.to_string())),
        }
    }

    pub fn is_major(self) -> bool {
        matches!(self, Suit::Hearts | Suit::Spades)
    }

    pub fn is_minor(self) -> bool {
        !self.is_major()
    }
}

impl fmt::Display for Suit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Card rank, 2..=14 with ace high (J=11, Q=12, K=13, A=14).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(u8);

impl Rank {
    pub const TWO: Rank = Rank(2);
    pub const TEN: Rank = Rank(10);
    pub const JACK: Rank = Rank(11);
    pub const QUEEN: Rank = Rank(12);
    pub const KING: Rank = Rank(13);
    pub const ACE: Rank = Rank(14);

    pub fn new(value: u8) -> Option<Rank> {
        (2..=14).contains(&value).then_some(Rank(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// High-card points: A=4, K=3, Q=2, J=1, else 0.
    pub fn hcp(self) -> u8 {
        match self.0 {
            14 => 4,
            13 => 3,
            12 => 2,
            11 => 1,
            _ => 0,
        }
    }

    /// Honour above ten (J, Q, K, or A).
    pub fn is_honor(self) -> bool {
        self.0 > 10
    }

    /// Parses a single rank character; ten is `T` (the two-character "10"
    /// form is handled by the hand parser).
    pub fn from_char(c: char) -> Option<Rank> {
        match c {
            'A' | 'a' => Some(Rank::ACE),
            'K' | 'k' => Some(Rank::KING),
            'Q' | 'q' => Some(Rank::QUEEN),
            'J' | 'j' => Some(Rank::JACK),
            'T' | 't' => Some(Rank::TEN),
            '2'..='9' => Some(Rank(c as u8 - b'0')),
            _ => None,
        }
    }

    /// Single-character notation, `T` for ten.
    pub fn to_char(self) -> char {
        match self.0 {
            14 => 'A',
            13 => 'K',
            12 => 'Q',
            11 => 'J',
            10 => 'T',
            n => (b'0' + n) as char,
        }
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Debug for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// One of the 52 cards.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Card {
    pub suit: Suit,
    pub rank: Rank,
}

impl Card {
    pub fn new(suit: Suit, rank: Rank) -> Card {
        Card { suit, rank }
    }

    /// Dense index 0..52: suit-major, rank-minor (club two = 0, spade ace = 51).
    pub fn index(self) -> usize {
        self.suit.index() * 13 + (self.rank.value() - 2) as usize
    }

    pub fn from_index(i: usize) -> Card {
        debug_assert!(i < 52);
        Card {
            suit: Suit::from_index(i / 13),
            rank: Rank::new((i % 13) as u8 + 2).unwrap(),
        }
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.suit.letter(), self.rank)
    }
}

impl fmt::Debug for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suit_order_is_clubs_to_spades() {
        assert!(Suit::Clubs < Suit::Diamonds);
        assert!(Suit::Diamonds < Suit::Hearts);
        assert!(Suit::Hearts < Suit::Spades);
    }

    #[test]
    fn rank_hcp_values() {
        assert_eq!(Rank::ACE.hcp(), 4);
        assert_eq!(Rank::KING.hcp(), 3);
        assert_eq!(Rank::QUEEN.hcp(), 2);
        assert_eq!(Rank::JACK.hcp(), 1);
        assert_eq!(Rank::TEN.hcp(), 0);
        assert_eq!(Rank::TWO.hcp(), 0);
    }

    #[test]
    fn card_index_roundtrip() {
        for i in 0..52 {
            assert_eq!(Card::from_index(i).index(), i);
        }
        assert_eq!(Card::new(Suit::Clubs, Rank::TWO).index(), 0);
        assert_eq!(Card::new(Suit::Spades, Rank::ACE).index(), 51);
    }

    #[test]
    fn rank_char_roundtrip() {
        for v in 2..=14 {
            let r = Rank::new(v).unwrap();
            assert_eq!(Rank::from_char(r.to_char()), Some(r));
        }
        assert_eq!(Rank::from_char('x'), None);
    }
}
