//! Learning instances: a South hand in the fixed auction context (West deals
//! and opens 4♠, two passes follow) together with the decision label.

use std::fmt;

use crate::{Hand, ParseError, Seat, Vulnerability};

/// Final decision assigned to an example.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Pass,
    Bid,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::Pass => "pass",
            Label::Bid => "bid",
        }
    }

    pub fn from_str(s: &str) -> Result<Label, ParseError> {
        match s {
            "pass" => Ok(Label::Pass),
            "bid" => Ok(Label::Bid),
            _ => Err(ParseError::BadLabel(s.to_string())),
        }
    }

    /// Numeric code used in the flat attribute encoding (pass=0, bid=1).
    pub fn flat_code(self) -> u8 {
        match self {
            Label::Pass => 0,
            Label::Bid => 1,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Three-way labelling outcome; `Unknown` examples are dropped from datasets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LabelOutcome {
    Pass,
    Bid,
    Unknown,
}

impl LabelOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            LabelOutcome::Pass => "pass",
            LabelOutcome::Bid => "bid",
            LabelOutcome::Unknown => "unknown",
        }
    }

    pub fn to_label(self) -> Option<Label> {
        match self {
            LabelOutcome::Pass => Some(Label::Pass),
            LabelOutcome::Bid => Some(Label::Bid),
            LabelOutcome::Unknown => None,
        }
    }
}

/// One labelled decision instance.
///
/// Seat position and dealer are fixed by the auction under study and carried
/// as constants rather than per-example data.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabeledExample {
    pub south: Hand,
    pub vul: Vulnerability,
    pub label: Label,
    /// Originating sample file, empty for synthetic examples.
    pub source: String,
}

impl LabeledExample {
    /// South speaks fourth in the auction.
    pub const POSITION: u8 = 4;
    /// West is always the dealer (and the 4♠ opener).
    pub const DEALER: Seat = Seat::West;

    pub fn new(south: Hand, vul: Vulnerability, label: Label) -> LabeledExample {
        LabeledExample { south, vul, label, source: String::new() }
    }
}

/// An ordered collection of labelled examples (no unknowns).
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Dataset {
    pub examples: Vec<LabeledExample>,
}

impl Dataset {
    pub fn new(examples: Vec<LabeledExample>) -> Dataset {
        Dataset { examples }
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn n_bid(&self) -> usize {
        self.examples.iter().filter(|e| e.label == Label::Bid).count()
    }

    pub fn n_pass(&self) -> usize {
        self.len() - self.n_bid()
    }

    pub fn bid_ratio(&self) -> f64 {
        if self.is_empty() {
            0.0
        } else {
            self.n_bid() as f64 / self.len() as f64
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_roundtrip() {
        assert_eq!(Label::from_str("bid").unwrap(), Label::Bid);
        assert_eq!(Label::from_str("pass").unwrap(), Label::Pass);
        assert!(Label::from_str("unknown").is_err());
        assert_eq!(Label::Pass.flat_code(), 0);
        assert_eq!(Label::Bid.flat_code(), 1);
    }

    #[test]
    fn outcome_to_label() {
        assert_eq!(LabelOutcome::Bid.to_label(), Some(Label::Bid));
        assert_eq!(LabelOutcome::Unknown.to_label(), None);
    }

    #[test]
    fn dataset_counts() {
        let south: Hand = "Q94.KT652.95.KT3".parse().unwrap();
        let mk = |l| LabeledExample::new(south, Vulnerability::NsOnly, l);
        let d = Dataset::new(vec![mk(Label::Bid), mk(Label::Pass), mk(Label::Pass)]);
        assert_eq!(d.n_bid(), 1);
        assert_eq!(d.n_pass(), 2);
        assert!((d.bid_ratio() - 1.0 / 3.0).abs() < 1e-12);
    }
}
