use std::fmt;

use crate::{ParseError, Seat, Suit};

/// Contract denomination: a trump suit or notrump.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum Strain {
    Clubs = 0,
    Diamonds = 1,
    Hearts = 2,
    Spades = 3,
    NoTrump = 4,
}

impl Strain {
    pub const ALL: [Strain; 5] = [
        Strain::Clubs,
        Strain::Diamonds,
        Strain::Hearts,
        Strain::Spades,
        Strain::NoTrump,
    ];

    pub fn trump(self) -> Option<Suit> {
        match self {
            Strain::Clubs => Some(Suit::Clubs),
            Strain::Diamonds => Some(Suit::Diamonds),
            Strain::Hearts => Some(Suit::Hearts),
            Strain::Spades => Some(Suit::Spades),
            Strain::NoTrump => None,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Strain::Clubs => "C",
            Strain::Diamonds => "D",
            Strain::Hearts => "H",
            Strain::Spades => "S",
            Strain::NoTrump => "NT",
        }
    }

    pub fn from_token(s: &str) -> Result<Strain, ParseError> {
        match s.to_ascii_uppercase().as_str() {
            "C" => Ok(Strain::Clubs),
            "D" => Ok(Strain::Diamonds),
            "H" => Ok(Strain::Hearts),
            "S" => Ok(Strain::Spades),
            "N" | "NT" => Ok(Strain::NoTrump),
            _ => Err(ParseError::InvalidStrain(s.to_string())),
        }
    }
}

impl fmt::Display for Strain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Doubling state of a contract.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
#[repr(u8)]
pub enum Doubling {
    #[default]
    Undoubled = 0,
    Doubled = 1,
    Redoubled = 2,
}

impl Doubling {
    pub fn token(self) -> &'static str {
        match self {
            Doubling::Undoubled => "",
            Doubling::Doubled => "X",
            Doubling::Redoubled => "XX",
        }
    }

    /// Trick-score multiplier: 1, 2, or 4.
    pub fn factor(self) -> i32 {
        match self {
            Doubling::Undoubled => 1,
            Doubling::Doubled => 2,
            Doubling::Redoubled => 4,
        }
    }
}

/// A contract: level 1..=7, strain, doubling, and declarer.
///
/// Orders by (level, strain, doubling, declarer), which gives club-to-notrump
/// order within a level.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Contract {
    pub level: u8,
    pub strain: Strain,
    pub doubling: Doubling,
    pub declarer: Seat,
}

impl Contract {
    pub fn new(level: u8, strain: Strain, doubling: Doubling, declarer: Seat) -> Result<Contract, ParseError> {
        if !(1..=7).contains(&level) {
            return Err(ParseError::BadLevel(level));
        }
        Ok(Contract { level, strain, doubling, declarer })
    }

    /// Tricks the declaring side must take: 6 + level.
    pub fn required_tricks(self) -> u8 {
        6 + self.level
    }

    /// The defender on declarer's left, who makes the opening lead.
    pub fn opening_leader(self) -> Seat {
        self.declarer.next()
    }
}

impl fmt::Display for Contract {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}{} {}",
            self.level,
            self.strain,
            self.doubling.token(),
            self.declarer.letter()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_bounds() {
        assert!(Contract::new(0, Strain::Clubs, Doubling::Undoubled, Seat::North).is_err());
        assert!(Contract::new(8, Strain::Clubs, Doubling::Undoubled, Seat::North).is_err());
        let c = Contract::new(4, Strain::Spades, Doubling::Doubled, Seat::West).unwrap();
        assert_eq!(c.required_tricks(), 10);
        assert_eq!(c.opening_leader(), Seat::North);
        assert_eq!(c.to_string(), "4SX W");
    }

    #[test]
    fn strain_tokens() {
        assert_eq!(Strain::from_token("nt").unwrap(), Strain::NoTrump);
        assert_eq!(Strain::from_token("s").unwrap(), Strain::Spades);
        assert_eq!(Strain::NoTrump.trump(), None);
        assert_eq!(Strain::Hearts.trump(), Some(Suit::Hearts));
    }
}
