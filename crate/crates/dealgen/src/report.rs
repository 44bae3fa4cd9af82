//! Per-rule satisfaction counts over a batch of deals.

use std::fmt;

use bridge_core::Deal;

use crate::constraint::eval_constraint;
use crate::presets::RulePreset;

/// How often one rule was satisfied. `percent` is relative to the deals
/// matching at least one rule in the report, so overlapping rules may sum
/// past 100%.
#[derive(Clone, PartialEq, Debug)]
pub struct RuleCount {
    pub name: String,
    pub count: usize,
    pub percent: f64,
}

#[derive(Clone, PartialEq, Debug)]
pub struct RuleReport {
    pub rules: Vec<RuleCount>,
    /// Deals satisfying at least one of the rules.
    pub matched: usize,
    pub total: usize,
}

/// Counts, for each named rule, how many deals satisfy it; percentages are
/// relative to the deals satisfying at least one rule.
pub fn rule_satisfaction_report(rules: &[RulePreset], deals: &[Deal]) -> RuleReport {
    let matched = deals
        .iter()
        .filter(|d| rules.iter().any(|r| eval_constraint(&r.expr, d)))
        .count();
    let rows = rules
        .iter()
        .map(|r| {
            let count = deals.iter().filter(|d| eval_constraint(&r.expr, d)).count();
            let percent = if matched == 0 {
                0.0
            } else {
                100.0 * count as f64 / matched as f64
            };
            RuleCount {
                name: r.name.clone(),
                count,
                percent,
            }
        })
        .collect();
    RuleReport {
        rules: rows,
        matched,
        total: deals.len(),
    }
}

impl fmt::Display for RuleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{}: {} ({:.1}%)", r.name, r.count, r.percent)?;
        }
        write!(f, "matched {} of {} deals", self.matched, self.total)
    }
}
