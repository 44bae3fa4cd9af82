//! Boolean constraints over deals.
//!
//! A [`ConstraintExpr`] is a small predicate tree: comparison atoms about one
//! hand (suit length, honour count, high-card points, distribution shape) or
//! the board vulnerability, combined with `Not`/`And`/`Or`. Evaluation is
//! pure — the same deal always yields the same boolean — which is what lets
//! the rejection sampler re-check its own output and parallelise per
//! candidate.

use bridge_core::{Deal, Hand, Rank, Seat, Suit, Vulnerability};

/// Comparison operator used by all numeric atoms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CmpOp {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl CmpOp {
    pub fn holds(self, lhs: u8, rhs: u8) -> bool {
        match self {
            CmpOp::Lt => lhs < rhs,
            CmpOp::Le => lhs <= rhs,
            CmpOp::Eq => lhs == rhs,
            CmpOp::Ge => lhs >= rhs,
            CmpOp::Gt => lhs > rhs,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            CmpOp::Lt => "<",
            CmpOp::Le => "<=",
            CmpOp::Eq => "=",
            CmpOp::Ge => ">=",
            CmpOp::Gt => ">",
        }
    }

    pub fn from_token(s: &str) -> Option<CmpOp> {
        match s {
            "<" => Some(CmpOp::Lt),
            "<=" => Some(CmpOp::Le),
            "=" | "==" => Some(CmpOp::Eq),
            ">=" => Some(CmpOp::Ge),
            ">" => Some(CmpOp::Gt),
            _ => None,
        }
    }
}

/// A set of ranks counted by the honour atom, e.g. `{A, K, Q, J}`.
///
/// Stored as a rank mask in the same bit layout as [`Hand::suit_mask`]
/// (bit `i` = rank `i + 2`), so membership intersects directly with a
/// hand's holding in a suit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HonorSet(u16);

impl HonorSet {
    /// Aces through jacks — the set behind "n cards among A, K, Q, J".
    pub const AKQJ: HonorSet = HonorSet(0b1_1110 << 8);

    pub fn from_ranks(ranks: &[Rank]) -> HonorSet {
        HonorSet(
            ranks
                .iter()
                .fold(0u16, |m, r| m | 1 << (r.value() - 2)),
        )
    }

    /// Parses rank characters, e.g. `"AKQJ"` or `"AKQJT"`.
    pub fn from_chars(s: &str) -> Option<HonorSet> {
        let mut mask = 0u16;
        for c in s.chars() {
            mask |= 1 << (Rank::from_char(c)?.value() - 2);
        }
        Some(HonorSet(mask))
    }

    pub fn rank_mask(self) -> u16 {
        self.0
    }

    pub fn to_chars(self) -> String {
        (0..13)
            .rev()
            .filter(|i| self.0 & (1 << i) != 0)
            .map(|i| Rank::new(i + 2).unwrap().to_char())
            .collect()
    }
}

/// One bound on the descending-sorted suit lengths of a hand, used by
/// `DistTemplate`: `index` 0 is the longest suit, 3 the shortest.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LengthBound {
    pub index: usize,
    pub op: CmpOp,
    pub k: u8,
}

/// Predicate tree over a deal.
///
/// `And([])` is true and `Or([])` is false, so connectives fold the usual
/// identities. Distribution atoms look at suit lengths sorted descending —
/// `DistEquals` against a fixed pattern such as `[7, 3, 2, 1]`,
/// `DistTemplate` against per-position bounds such as "longest = 7 and
/// second-longest ≥ 4".
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConstraintExpr {
    SuitLenCmp {
        seat: Seat,
        suit: Suit,
        op: CmpOp,
        k: u8,
    },
    HonorCountCmp {
        seat: Seat,
        suit: Suit,
        set: HonorSet,
        op: CmpOp,
        k: u8,
    },
    HcpCmp {
        seat: Seat,
        op: CmpOp,
        k: u8,
    },
    DistEquals {
        seat: Seat,
        pattern: [u8; 4],
    },
    DistTemplate {
        seat: Seat,
        sorted: Vec<LengthBound>,
    },
    VulnIs(Vulnerability),
    Not(Box<ConstraintExpr>),
    And(Vec<ConstraintExpr>),
    Or(Vec<ConstraintExpr>),
}

/// Suit lengths of a hand, sorted longest first.
pub fn sorted_lengths(hand: Hand) -> [u8; 4] {
    let mut lens = [
        hand.suit_len(Suit::Spades),
        hand.suit_len(Suit::Hearts),
        hand.suit_len(Suit::Diamonds),
        hand.suit_len(Suit::Clubs),
    ];
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// Evaluates a constraint against a deal.
pub fn eval_constraint(expr: &ConstraintExpr, deal: &Deal) -> bool {
    match expr {
        ConstraintExpr::SuitLenCmp { seat, suit, op, k } => {
            op.holds(deal.hand(*seat).suit_len(*suit), *k)
        }
        ConstraintExpr::HonorCountCmp {
            seat,
            suit,
            set,
            op,
            k,
        } => {
            let held = deal.hand(*seat).suit_mask(*suit) & set.rank_mask();
            op.holds(held.count_ones() as u8, *k)
        }
        ConstraintExpr::HcpCmp { seat, op, k } => op.holds(deal.hand(*seat).hcp(), *k),
        ConstraintExpr::DistEquals { seat, pattern } => {
            sorted_lengths(deal.hand(*seat)) == *pattern
        }
        ConstraintExpr::DistTemplate { seat, sorted } => {
            let lens = sorted_lengths(deal.hand(*seat));
            sorted.iter().all(|b| b.op.holds(lens[b.index], b.k))
        }
        ConstraintExpr::VulnIs(v) => deal.vul == *v,
        ConstraintExpr::Not(inner) => !eval_constraint(inner, deal),
        ConstraintExpr::And(children) => children.iter().all(|c| eval_constraint(c, deal)),
        ConstraintExpr::Or(children) => children.iter().any(|c| eval_constraint(c, deal)),
    }
}
