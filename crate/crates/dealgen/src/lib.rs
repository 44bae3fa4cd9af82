//! Constrained deal generation.
//!
//! This crate answers "give me boards where the auction starts 4♠–double"
//! without any card play: bidding rules are boolean [`ConstraintExpr`]
//! predicates over a deal, and deals are drawn by rejection sampling from
//! the uniform distribution over deck partitions.
//!
//! The pieces:
//!
//! - [`constraint`]: the predicate language and its evaluator.
//! - [`presets`]: the shipped rules — West preempt rules `R2`/`R5` over the
//!   shared base `C0_default`, and North double rules `Cp0`–`Cp3`.
//! - [`rules_file`]: JSON (`"v1"`) files defining further rules.
//! - [`generate`]: the sampler, plus the fixed-South resampler that builds
//!   [`SampleFile`]s of boards differing only outside the South hand.
//! - [`report`]: per-rule satisfaction counts over a generated batch.

pub mod constraint;
pub mod generate;
pub mod presets;
pub mod report;
pub mod rules_file;
pub mod sample;

pub use constraint::{
    eval_constraint, sorted_lengths, CmpOp, ConstraintExpr, HonorSet, LengthBound,
};
pub use generate::{
    candidate_deal, generate_deals, generate_deals_with_floor, resample_fixed_south,
    resample_fixed_south_with_floor, GenError, Generated, VulPolicy, DEFAULT_FLOOR,
};
pub use presets::{preset, presets, RulePreset};
pub use report::{rule_satisfaction_report, RuleCount, RuleReport};
pub use rules_file::{load_rules, LoadedRules, RuleFileError};
pub use sample::{SampleError, SampleFile};
