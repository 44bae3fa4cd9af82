//! Turns scored sample files into a labelled dataset.
//!
//! Each sample file fixes a South hand and varies the other three hands over
//! its boards. Given double-dummy score tables for those boards, this crate
//! decides whether South should bid on over 4♠ doubled or defend, writes the
//! decided examples out as a CSV dataset, and renders them as ground facts
//! for the rule learner.

pub mod csv;
pub mod facts;
pub mod label;

pub use csv::{dataset_from_csv, dataset_to_csv, DatasetCsvError, DATASET_HEADER};
pub use facts::{dataset_to_facts, decision_fact, derived_facts, hand_term, rank_atom};
pub use label::{
    build_dataset, label_south, FileTables, LabelError, LabelSummary, DEFAULT_THRESHOLD,
};
