//! JSON rule files, schema version `"v1"`.
//!
//! A rule file names constraints and optionally designates one acceptance
//! expression for generation:
//!
//! ```json
//! {
//!   "version": "v1",
//!   "rules": [
//!     { "name": "base", "expr": { "and": [
//!       { "suit_len_cmp": { "seat": "west", "suit": "spade", "op": ">=", "k": 7 } },
//!       { "hcp_cmp": { "seat": "west", "op": "<=", "k": 10 } }
//!     ] } },
//!     { "name": "preempt", "expr": { "and": [
//!       { "rule": "base" },
//!       { "vuln_is": "n" },
//!       { "honor_count_cmp": { "seat": "west", "suit": "spade", "set": "AKQJ", "op": "=", "k": 2 } },
//!       { "dist_equals": { "seat": "west", "pattern": [7, 3, 2, 1] } }
//!     ] } }
//!   ],
//!   "accept": { "rule": "preempt" }
//! }
//! ```
//!
//! Node tags mirror the [`ConstraintExpr`] variants in snake case, plus
//! `"rule"` for a reference to an earlier rule by name. References resolve
//! against the built-in presets first, so `{"rule": "R2"}` works out of the
//! box; a file rule that reuses a preset's name shadows it for later
//! references. Seats and suits use their lower-case names (`"west"`,
//! `"spade"`), vulnerabilities the one-letter deal-file codes, and
//! `dist_template` bounds index the descending-sorted suit lengths.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use bridge_core::{Seat, Suit, Vulnerability};

use crate::constraint::{CmpOp, ConstraintExpr, HonorSet, LengthBound};
use crate::presets::{presets, RulePreset};

#[derive(Error, Debug)]
pub enum RuleFileError {
    #[error("rule file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported rule-file version {0:?} (expected \"v1\")")]
    Version(String),
    #[error("rule {rule:?}: unknown rule reference {name:?}")]
    UnknownRule { rule: String, name: String },
    #[error("rule {rule:?}: invalid seat {value:?}")]
    BadSeat { rule: String, value: String },
    #[error("rule {rule:?}: invalid suit {value:?}")]
    BadSuit { rule: String, value: String },
    #[error("rule {rule:?}: invalid vulnerability code {value:?}")]
    BadVul { rule: String, value: String },
    #[error("rule {rule:?}: invalid comparison operator {value:?}")]
    BadOp { rule: String, value: String },
    #[error("rule {rule:?}: invalid honour set {value:?}")]
    BadHonorSet { rule: String, value: String },
    #[error("rule {rule:?}: {k} is out of range for {what}")]
    BadBound {
        rule: String,
        what: &'static str,
        k: u8,
    },
    #[error("rule {rule:?}: pattern {pattern:?} must be four descending lengths summing to 13")]
    BadPattern { rule: String, pattern: Vec<u8> },
    #[error("rule {rule:?}: sorted-length index {index} is out of range (0..=3)")]
    BadIndex { rule: String, index: usize },
}

/// Rules defined by a file, in file order, with the optional acceptance
/// expression. References are already resolved: the exprs are
/// self-contained.
#[derive(Clone, Debug)]
pub struct LoadedRules {
    pub rules: Vec<RulePreset>,
    pub accept: Option<ConstraintExpr>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct RuleFileV1 {
    version: String,
    rules: Vec<NamedNode>,
    #[serde(default)]
    accept: Option<Node>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct NamedNode {
    name: String,
    expr: Node,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum Node {
    SuitLenCmp {
        seat: String,
        suit: String,
        op: String,
        k: u8,
    },
    HonorCountCmp {
        seat: String,
        suit: String,
        set: String,
        op: String,
        k: u8,
    },
    HcpCmp {
        seat: String,
        op: String,
        k: u8,
    },
    DistEquals {
        seat: String,
        pattern: Vec<u8>,
    },
    DistTemplate {
        seat: String,
        sorted: Vec<BoundNode>,
    },
    VulnIs(String),
    Not(Box<Node>),
    And(Vec<Node>),
    Or(Vec<Node>),
    Rule(String),
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct BoundNode {
    index: usize,
    op: String,
    k: u8,
}

/// Parses and resolves a `"v1"` rule file.
pub fn load_rules(text: &str) -> Result<LoadedRules, RuleFileError> {
    let file: RuleFileV1 = serde_json::from_str(text)?;
    if file.version != "v1" {
        return Err(RuleFileError::Version(file.version));
    }
    let mut env = presets();
    let mut rules = Vec::with_capacity(file.rules.len());
    for named in &file.rules {
        let expr = resolve(&named.expr, &env, &named.name)?;
        let preset = RulePreset::new(&named.name, expr);
        match env.iter_mut().find(|p| p.name == named.name) {
            Some(slot) => *slot = preset.clone(),
            None => env.push(preset.clone()),
        }
        rules.push(preset);
    }
    let accept = match file.accept {
        Some(node) => Some(resolve(&node, &env, "accept")?),
        None => None,
    };
    Ok(LoadedRules { rules, accept })
}

fn resolve(node: &Node, env: &[RulePreset], rule: &str) -> Result<ConstraintExpr, RuleFileError> {
    let bound = |what, k, max| {
        if k > max {
            Err(RuleFileError::BadBound {
                rule: rule.to_string(),
                what,
                k,
            })
        } else {
            Ok(k)
        }
    };
    match node {
        Node::SuitLenCmp { seat, suit, op, k } => Ok(ConstraintExpr::SuitLenCmp {
            seat: parse_seat(seat, rule)?,
            suit: parse_suit(suit, rule)?,
            op: parse_op(op, rule)?,
            k: bound("a suit length", *k, 13)?,
        }),
        Node::HonorCountCmp {
            seat,
            suit,
            set,
            op,
            k,
        } => {
            let honor_set =
                HonorSet::from_chars(set).ok_or_else(|| RuleFileError::BadHonorSet {
                    rule: rule.to_string(),
                    value: set.clone(),
                })?;
            let max = honor_set.rank_mask().count_ones() as u8;
            Ok(ConstraintExpr::HonorCountCmp {
                seat: parse_seat(seat, rule)?,
                suit: parse_suit(suit, rule)?,
                set: honor_set,
                op: parse_op(op, rule)?,
                k: bound("the honour-set size", *k, max)?,
            })
        }
        Node::HcpCmp { seat, op, k } => Ok(ConstraintExpr::HcpCmp {
            seat: parse_seat(seat, rule)?,
            op: parse_op(op, rule)?,
            k: bound("high-card points", *k, 37)?,
        }),
        Node::DistEquals { seat, pattern } => {
            let bad = || RuleFileError::BadPattern {
                rule: rule.to_string(),
                pattern: pattern.clone(),
            };
            let four: [u8; 4] = pattern.as_slice().try_into().map_err(|_| bad())?;
            let descending = four.windows(2).all(|w| w[0] >= w[1]);
            if !descending || four.iter().map(|&l| l as u32).sum::<u32>() != 13 {
                return Err(bad());
            }
            Ok(ConstraintExpr::DistEquals {
                seat: parse_seat(seat, rule)?,
                pattern: four,
            })
        }
        Node::DistTemplate { seat, sorted } => {
            let mut bounds = Vec::with_capacity(sorted.len());
            for b in sorted {
                if b.index > 3 {
                    return Err(RuleFileError::BadIndex {
                        rule: rule.to_string(),
                        index: b.index,
                    });
                }
                bounds.push(LengthBound {
                    index: b.index,
                    op: parse_op(&b.op, rule)?,
                    k: bound("a suit length", b.k, 13)?,
                });
            }
            Ok(ConstraintExpr::DistTemplate {
                seat: parse_seat(seat, rule)?,
                sorted: bounds,
            })
        }
        Node::VulnIs(code) => Ok(ConstraintExpr::VulnIs(
            Vulnerability::from_code(code).map_err(|_| RuleFileError::BadVul {
                rule: rule.to_string(),
                value: code.clone(),
            })?,
        )),
        Node::Not(inner) => Ok(ConstraintExpr::Not(Box::new(resolve(inner, env, rule)?))),
        Node::And(children) => Ok(ConstraintExpr::And(
            children
                .iter()
                .map(|c| resolve(c, env, rule))
                .collect::<Result<_, _>>()?,
        )),
        Node::Or(children) => Ok(ConstraintExpr::Or(
            children
                .iter()
                .map(|c| resolve(c, env, rule))
                .collect::<Result<_, _>>()?,
        )),
        Node::Rule(name) => env
            .iter()
            .find(|p| p.name == *name)
            .map(|p| p.expr.clone())
            .ok_or_else(|| RuleFileError::UnknownRule {
                rule: rule.to_string(),
                name: name.clone(),
            }),
    }
}

fn parse_seat(s: &str, rule: &str) -> Result<Seat, RuleFileError> {
    Seat::from_name(s).map_err(|_| RuleFileError::BadSeat {
        rule: rule.to_string(),
        value: s.to_string(),
    })
}

fn parse_suit(s: &str, rule: &str) -> Result<Suit, RuleFileError> {
    Suit::from_name(&s.to_ascii_lowercase()).map_err(|_| RuleFileError::BadSuit {
        rule: rule.to_string(),
        value: s.to_string(),
    })
}

fn parse_op(s: &str, rule: &str) -> Result<CmpOp, RuleFileError> {
    CmpOp::from_token(s).ok_or_else(|| RuleFileError::BadOp {
        rule: rule.to_string(),
        value: s.to_string(),
    })
}
