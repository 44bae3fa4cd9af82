use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::hand::DECK_MASK;
use crate::{Hand, ParseError, Vulnerability};

/// Table seats in clockwise play order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum Seat {
    North = 0,
    East = 1,
    South = 2,
    West = 3,
}

impl Seat {
    pub const ALL: [Seat; 4] = [Seat::North, Seat::East, Seat::South, Seat::West];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Seat {
        Seat::ALL[i & 3]
    }

    pub fn letter(self) -> char {
        match self {
            Seat::North => 'N',
            Seat::East => 'E',
            Seat::South => 'S',
            Seat::West => 'W',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Seat::North => "north",
            Seat::East => "east",
            Seat::South => "south",
            Seat::West => "west",
        }
    }

    pub fn from_name(s: &str) -> Result<Seat, ParseError> {
        match s.to_ascii_lowercase().as_str() {
            "n" | "north" => Ok(Seat::North),
            "e" | "east" => Ok(Seat::East),
            "s" | "south" => Ok(Seat::South),
            "w" | "west" => Ok(Seat::West),
            _ => Err(ParseError::InvalidSeat(s.to_string())),
        }
    }

    /// Next seat clockwise (the player to this seat's left).
    pub fn next(self) -> Seat {
        Seat::from_index(self.index() + 1)
    }

    pub fn partner(self) -> Seat {
        Seat::from_index(self.index() + 2)
    }

    pub fn side(self) -> Side {
        match self {
            Seat::North | Seat::South => Side::NorthSouth,
            Seat::East | Seat::West => Side::EastWest,
        }
    }
}

/// A partnership.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Side {
    NorthSouth,
    EastWest,
}

impl Side {
    pub fn opponent(self) -> Side {
        match self {
            Side::NorthSouth => Side::EastWest,
            Side::EastWest => Side::NorthSouth,
        }
    }
}

/// A full deal: four 13-card hands partitioning the deck, plus vulnerability.
///
/// Text form is one line: `<vul> N:<hand> E:<hand> S:<hand> W:<hand>`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Deal {
    hands: [Hand; 4],
    pub vul: Vulnerability,
}

impl Deal {
    /// Builds a deal, checking that the four hands cover all 52 cards exactly once.
    pub fn new(hands: [Hand; 4], vul: Vulnerability) -> Result<Deal, ParseError> {
        let union = hands.iter().fold(0u64, |acc, h| acc | h.bits());
        if union != DECK_MASK {
            return Err(ParseError::NotAPartition);
        }
        Ok(Deal { hands, vul })
    }

    pub fn hand(&self, seat: Seat) -> Hand {
        self.hands[seat.index()]
    }

    pub fn hands(&self) -> &[Hand; 4] {
        &self.hands
    }
}

impl Index<Seat> for Deal {
    type Output = Hand;

    fn index(&self, seat: Seat) -> &Hand {
        &self.hands[seat.index()]
    }
}

impl FromStr for Deal {
    type Err = ParseError;

    fn from_str(line: &str) -> Result<Deal, ParseError> {
        let mut parts = line.split_whitespace();
        let vul_tok = parts
            .next()
            .ok_or_else(|| ParseError::MalformedDealLine(line.to_string()))?;
        let vul = Vulnerability::from_code(vul_tok)?;
        let mut hands = [None; 4];
        for part in parts {
            let (seat_tok, hand_tok) = part
                .split_once(':')
                .ok_or_else(|| ParseError::MalformedDealLine(line.to_string()))?;
            let seat = Seat::from_name(seat_tok)?;
            if hands[seat.index()].is_some() {
                return Err(ParseError::MalformedDealLine(line.to_string()));
            }
            hands[seat.index()] = Some(hand_tok.parse::<Hand>()?);
        }
        let hands = [
            hands[0].ok_or_else(|| ParseError::MalformedDealLine(line.to_string()))?,
            hands[1].ok_or_else(|| ParseError::MalformedDealLine(line.to_string()))?,
            hands[2].ok_or_else(|| ParseError::MalformedDealLine(line.to_string()))?,
            hands[3].ok_or_else(|| ParseError::MalformedDealLine(line.to_string()))?,
        ];
        Deal::new(hands, vul)
    }
}

impl fmt::Display for Deal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} N:{} E:{} S:{} W:{}",
            self.vul,
            self.hand(Seat::North),
            self.hand(Seat::East),
            self.hand(Seat::South),
            self.hand(Seat::West),
        )
    }
}

/// Parses a deal file: one deal per line, `#` comment lines and blank lines skipped.
pub fn parse_deal_file(text: &str) -> Result<Vec<Deal>, ParseError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(Deal::from_str)
        .collect()
}

/// Formats deals one per line, with optional leading `#` comment lines.
pub fn format_deal_file(deals: &[Deal], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for d in deals {
        out.push_str(&d.to_string());
        out.push('\n');
    }
    out
}
