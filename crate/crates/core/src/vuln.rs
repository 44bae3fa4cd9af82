use std::fmt;

use crate::{ParseError, Side};

/// Board vulnerability. One-letter codes follow common deal-file usage:
/// `o` none, `n` North-South only, `e` East-West only, `b` both.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum Vulnerability {
    Neither = 0,
    NsOnly = 1,
    EwOnly = 2,
    Both = 3,
}

impl Vulnerability {
    pub const ALL: [Vulnerability; 4] = [
        Vulnerability::Neither,
        Vulnerability::NsOnly,
        Vulnerability::EwOnly,
        Vulnerability::Both,
    ];

    pub fn code(self) -> char {
        match self {
            Vulnerability::Neither => 'o',
            Vulnerability::NsOnly => 'n',
            Vulnerability::EwOnly => 'e',
            Vulnerability::Both => 'b',
        }
    }

    pub fn from_code(s: &str) -> Result<Vulnerability, ParseError> {
        match s {
            "o" => Ok(Vulnerability::Neither),
            "n" => Ok(Vulnerability::NsOnly),
            "e" => Ok(Vulnerability::EwOnly),
            "b" => Ok(Vulnerability::Both),
            _ => Err(ParseError::InvalidVulnerability(s.to_string())),
        }
    }

    pub fn is_vulnerable(self, side: Side) -> bool {
        match side {
            Side::NorthSouth => matches!(self, Vulnerability::NsOnly | Vulnerability::Both),
            Side::EastWest => matches!(self, Vulnerability::EwOnly | Vulnerability::Both),
        }
    }

    /// Numeric code used in the flat attribute encoding.
    pub fn flat_code(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Vulnerability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}
