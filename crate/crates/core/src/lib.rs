//! Domain model for contract-bridge decision datasets: cards, hands, deals,
//! contracts, vulnerability, and the predicate vocabulary used to describe a
//! single hand (HCP, suit lengths, distribution shape, honour representation).
//!
//! Everything here is pure data and functions — no I/O, no randomness — so the
//! generator, solver, labeler, and learners can all share one vocabulary.

mod card;
mod contract;
mod deal;
mod error;
pub mod example;
pub mod flat;
mod hand;
pub mod language;
pub mod predicates;
mod vuln;

pub use card::{Card, Rank, Suit};
pub use contract::{Contract, Doubling, Strain};
pub use deal::{format_deal_file, parse_deal_file, Deal, Seat, Side};
pub use error::ParseError;
pub use example::{Dataset, Label, LabelOutcome, LabeledExample};
pub use hand::Hand;
pub use vuln::Vulnerability;
