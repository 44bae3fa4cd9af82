//! Built-in bidding-rule presets.
//!
//! Two families ship. The `R` rules describe West hands that preempt 4♠:
//! each one conjoins the common base `C0_default` (seven-plus spades, at
//! most 10 HCP), a vulnerability condition, and a shape/honour condition.
//! The `Cp` rules describe North hands that double: `Cp0` is a safety shape
//! shared by every double rule, and `Cp1`–`Cp3` are alternative strength
//! conditions, so "North doubles" is `Cp0 ∧ (Cp1 ∨ Cp2 ∨ Cp3)`.
//!
//! Only two of the preempt rules are published in full; users supply
//! further variants — including a different base hand type — through the
//! JSON rule-file format in [`crate::rules_file`].

use bridge_core::{Seat, Suit, Vulnerability};

use crate::constraint::{CmpOp, ConstraintExpr, HonorSet, LengthBound};

/// A named constraint, as listed in reports and rule files.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RulePreset {
    pub name: String,
    pub expr: ConstraintExpr,
}

impl RulePreset {
    pub fn new(name: &str, expr: ConstraintExpr) -> RulePreset {
        RulePreset {
            name: name.to_string(),
            expr,
        }
    }
}

fn len(seat: Seat, suit: Suit, op: CmpOp, k: u8) -> ConstraintExpr {
    ConstraintExpr::SuitLenCmp { seat, suit, op, k }
}

fn hcp(seat: Seat, op: CmpOp, k: u8) -> ConstraintExpr {
    ConstraintExpr::HcpCmp { seat, op, k }
}

fn top_spades(seat: Seat, k: u8) -> ConstraintExpr {
    ConstraintExpr::HonorCountCmp {
        seat,
        suit: Suit::Spades,
        set: HonorSet::AKQJ,
        op: CmpOp::Eq,
        k,
    }
}

/// Base condition every preempt rule shares: West holds at least seven
/// spades and at most 10 HCP.
pub fn c0_default() -> ConstraintExpr {
    ConstraintExpr::And(vec![
        len(Seat::West, Suit::Spades, CmpOp::Ge, 7),
        hcp(Seat::West, CmpOp::Le, 10),
    ])
}

/// Preempt rule R2: base hand, North-South vulnerable only, singleton
/// heart, exactly two of the top four spades, and a 7-3-2-1 pattern.
pub fn r2() -> ConstraintExpr {
    ConstraintExpr::And(vec![
        c0_default(),
        ConstraintExpr::VulnIs(Vulnerability::NsOnly),
        len(Seat::West, Suit::Hearts, CmpOp::Eq, 1),
        top_spades(Seat::West, 2),
        ConstraintExpr::DistEquals {
            seat: Seat::West,
            pattern: [7, 3, 2, 1],
        },
    ])
}

/// Preempt rule R5: base hand, North-South vulnerable only, a four-card
/// minor, exactly two of the top four spades, and a second suit of four or
/// more cards beside the seven-card spade suit.
pub fn r5() -> ConstraintExpr {
    ConstraintExpr::And(vec![
        c0_default(),
        ConstraintExpr::VulnIs(Vulnerability::NsOnly),
        ConstraintExpr::Or(vec![
            len(Seat::West, Suit::Clubs, CmpOp::Ge, 4),
            len(Seat::West, Suit::Diamonds, CmpOp::Ge, 4),
        ]),
        top_spades(Seat::West, 2),
        ConstraintExpr::DistTemplate {
            seat: Seat::West,
            sorted: vec![
                LengthBound {
                    index: 0,
                    op: CmpOp::Eq,
                    k: 7,
                },
                LengthBound {
                    index: 1,
                    op: CmpOp::Ge,
                    k: 4,
                },
            ],
        },
    ])
}

/// Double-rule base shape Cp0: none of North's non-spade suits is longer
/// than five cards, and at most one of them is exactly five long.
pub fn cp0() -> ConstraintExpr {
    let five = |suit| len(Seat::North, suit, CmpOp::Eq, 5);
    ConstraintExpr::And(vec![
        len(Seat::North, Suit::Hearts, CmpOp::Le, 5),
        len(Seat::North, Suit::Diamonds, CmpOp::Le, 5),
        len(Seat::North, Suit::Clubs, CmpOp::Le, 5),
        ConstraintExpr::Not(Box::new(ConstraintExpr::Or(vec![
            ConstraintExpr::And(vec![five(Suit::Hearts), five(Suit::Diamonds)]),
            ConstraintExpr::And(vec![five(Suit::Hearts), five(Suit::Clubs)]),
            ConstraintExpr::And(vec![five(Suit::Diamonds), five(Suit::Clubs)]),
        ]))),
    ])
}

/// Double strength Cp1: an opening hand (13+ HCP) with at most one spade.
pub fn cp1() -> ConstraintExpr {
    ConstraintExpr::And(vec![
        hcp(Seat::North, CmpOp::Ge, 13),
        len(Seat::North, Suit::Spades, CmpOp::Le, 1),
    ])
}

/// Double strength Cp2: a strong hand (16+ HCP) with exactly two spades
/// and at least three cards in every other suit.
pub fn cp2() -> ConstraintExpr {
    ConstraintExpr::And(vec![
        hcp(Seat::North, CmpOp::Ge, 16),
        len(Seat::North, Suit::Spades, CmpOp::Eq, 2),
        len(Seat::North, Suit::Hearts, CmpOp::Ge, 3),
        len(Seat::North, Suit::Diamonds, CmpOp::Ge, 3),
        len(Seat::North, Suit::Clubs, CmpOp::Ge, 3),
    ])
}

/// Double strength Cp3: any 20+ HCP hand.
pub fn cp3() -> ConstraintExpr {
    hcp(Seat::North, CmpOp::Ge, 20)
}

/// West preempts by some shipped rule: R2 ∨ R5.
pub fn four_spades_any() -> ConstraintExpr {
    ConstraintExpr::Or(vec![r2(), r5()])
}

/// North doubles by some shipped rule: Cp0 ∧ (Cp1 ∨ Cp2 ∨ Cp3).
pub fn double_any() -> ConstraintExpr {
    ConstraintExpr::And(vec![
        cp0(),
        ConstraintExpr::Or(vec![cp1(), cp2(), cp3()]),
    ])
}

/// The default board filter: West preempts and North doubles, leaving
/// South with the pass-or-bid decision the dataset is about.
pub fn default_accept() -> ConstraintExpr {
    ConstraintExpr::And(vec![four_spades_any(), double_any()])
}

/// All built-in presets, by name. Rule files see these as a pre-populated
/// environment and may reuse or shadow them.
pub fn presets() -> Vec<RulePreset> {
    vec![
        RulePreset::new("C0_default", c0_default()),
        RulePreset::new("R2", r2()),
        RulePreset::new("R5", r5()),
        RulePreset::new("Cp0", cp0()),
        RulePreset::new("Cp1", cp1()),
        RulePreset::new("Cp2", cp2()),
        RulePreset::new("Cp3", cp3()),
        RulePreset::new("four_spades_any", four_spades_any()),
        RulePreset::new("double_any", double_any()),
        RulePreset::new("default_accept", default_accept()),
    ]
}

/// Looks up a built-in preset by name.
pub fn preset(name: &str) -> Option<ConstraintExpr> {
    presets().into_iter().find(|p| p.name == name).map(|p| p.expr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraint::eval_constraint;
    use bridge_core::Deal;

    const EXAMPLE_1: &str =
        "n N:6.AQ93.KQT42.A94 E:T3.J84.A7.QJ8762 S:Q94.KT652.95.KT3 W:AKJ8752.7.J863.5";
    const EXAMPLE_2: &str =
        "n N:J2.AJ73.AKT6.AJ9 E:7.Q98.QJ74.Q7652 S:Q94.KT652.95.KT3 W:AKT8653.4.832.84";

    fn deal(line: &str) -> Deal {
        line.parse().unwrap()
    }

    #[test]
    fn base_rule_accepts_both_examples() {
        assert!(eval_constraint(&c0_default(), &deal(EXAMPLE_1)));
        assert!(eval_constraint(&c0_default(), &deal(EXAMPLE_2)));
    }

    #[test]
    fn r2_matches_second_example_only() {
        // Second board's West: 7=1=3=2 with ♠AK, NS vulnerable — an R2 hand.
        // First board's West holds three top spades and a 7=1=4=1 pattern,
        // so neither shipped preempt rule claims it.
        assert!(eval_constraint(&r2(), &deal(EXAMPLE_2)));
        assert!(!eval_constraint(&r2(), &deal(EXAMPLE_1)));
        assert!(!eval_constraint(&r5(), &deal(EXAMPLE_1)));
        assert!(!eval_constraint(&r5(), &deal(EXAMPLE_2)));
    }

    #[test]
    fn r2_requires_the_vulnerability() {
        let flipped = EXAMPLE_2.replacen("n ", "e ", 1);
        assert!(!eval_constraint(&r2(), &deal(&flipped)));
    }

    #[test]
    fn double_rules_on_example_norths() {
        // First board's North: 1=4=5=3, 15 HCP — opening strength, short
        // spades. Second board's North: 2=4=4=3, 18 HCP — the stronger type.
        let d1 = deal(EXAMPLE_1);
        let d2 = deal(EXAMPLE_2);
        assert!(eval_constraint(&cp0(), &d1));
        assert!(eval_constraint(&cp1(), &d1));
        assert!(!eval_constraint(&cp2(), &d1));
        assert!(!eval_constraint(&cp3(), &d1));
        assert!(eval_constraint(&double_any(), &d1));

        assert!(eval_constraint(&cp0(), &d2));
        assert!(!eval_constraint(&cp1(), &d2));
        assert!(eval_constraint(&cp2(), &d2));
        assert!(!eval_constraint(&cp3(), &d2));
        assert!(eval_constraint(&double_any(), &d2));
    }

    #[test]
    fn cp0_rejects_twin_five_card_suits() {
        // North 0=5=5=3: two five-card side suits.
        let twin = "o N:.AQ983.KQT42.A94 E:T63.J4.A7.QJ8762 S:Q94.KT652.95.KT3 W:AKJ8752.7.J863.5";
        let d: Deal = twin.parse().unwrap();
        assert!(!eval_constraint(&cp0(), &d));
    }

    #[test]
    fn default_filter_keeps_second_example() {
        assert!(eval_constraint(&default_accept(), &deal(EXAMPLE_2)));
        assert!(!eval_constraint(&default_accept(), &deal(EXAMPLE_1)));
    }

    #[test]
    fn preset_lookup_by_name() {
        assert_eq!(preset("R2"), Some(r2()));
        assert_eq!(preset("Cp3"), Some(cp3()));
        assert_eq!(preset("unknown"), None);
        let names: Vec<String> = presets().into_iter().map(|p| p.name).collect();
        for required in ["C0_default", "R2", "R5", "Cp0", "Cp1", "Cp2", "Cp3"] {
            assert!(names.iter().any(|n| n == required));
        }
    }
}
