//! Flat propositional encoding of examples: 54 numeric attributes per row —
//! vulnerability code, class code, then 13 rank slots per suit (clubs,
//! diamonds, hearts, spades), ranks descending and zero-padded.

use crate::{LabeledExample, Suit};

/// Number of attributes per encoded row.
pub const FLAT_WIDTH: usize = 54;

/// Encodes one example as 54 values: `[vul, class, clubs…, diamonds…,
/// hearts…, spades…]`. Rank slots hold the numeric rank (2..=14 with ace 14)
/// descending, padded with zeros to 13 per suit.
pub fn flat_encode(example: &LabeledExample) -> [u8; FLAT_WIDTH] {
    let mut row = [0u8; FLAT_WIDTH];
    row[0] = example.vul.flat_code();
    row[1] = example.label.flat_code();
    for (si, &suit) in Suit::ALL.iter().enumerate() {
        let mut ranks = example.south.suit_ranks(suit);
        ranks.sort_unstable_by(|a, b| b.cmp(a));
        for (ri, rank) in ranks.iter().enumerate() {
            row[2 + si * 13 + ri] = rank.value();
        }
    }
    row
}

/// Header names for the 54 columns.
pub fn flat_header() -> Vec<String> {
    let mut cols = vec!["vul".to_string(), "class".to_string()];
    for suit in Suit::ALL {
        for i in 1..=13 {
            cols.push(format!("{}_{i}", suit.name()));
        }
    }
    cols
}

/// Renders examples as a CSV table with the 54-column header.
pub fn flat_to_csv(examples: &[LabeledExample]) -> String {
    let mut out = flat_header().join(",");
    out.push('\n');
    for e in examples {
        let row = flat_encode(e);
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Hand, Label, Vulnerability};

    fn example() -> LabeledExample {
        let south: Hand = "Q94.KT652.95.KT3".parse().unwrap();
        LabeledExample::new(south, Vulnerability::NsOnly, Label::Pass)
    }

    #[test]
    fn encodes_club_slots_descending_and_zero_padded() {
        let row = flat_encode(&example());
        // KT3 of clubs: 13, 10, 3, then zeros.
        assert_eq!(&row[2..15], &[13, 10, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn encodes_context_codes() {
        let row = flat_encode(&example());
        assert_eq!(row[0], 1); // North-South vulnerable
        assert_eq!(row[1], 0); // pass
    }

    #[test]
    fn nonzero_count_is_thirteen_cards_plus_context() {
        let row = flat_encode(&example());
        let nonzero = row.iter().filter(|&&v| v != 0).count();
        // 13 rank slots plus the vul code; the class code is 0 for pass.
        assert_eq!(nonzero, 14);
    }

    #[test]
    fn csv_has_54_columns() {
        let csv = flat_to_csv(&[example()]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap().split(',').count(), FLAT_WIDTH);
        assert_eq!(lines.next().unwrap().split(',').count(), FLAT_WIDTH);
        assert_eq!(flat_header()[2], "club_1");
        assert_eq!(flat_header()[53], "spade_13");
    }
}
