//! Sample files: a batch of boards that all share one South hand and one
//! vulnerability, differing only in how the other 39 cards are split.
//!
//! On disk a sample file is an ordinary deal file (one board per line); the
//! shared South hand and vulnerability are implied by the boards themselves
//! and re-validated when reading. Files in a sample directory are named
//! `south_<index>.deals`.

use bridge_core::{format_deal_file, parse_deal_file, Deal, Hand, ParseError, Seat, Vulnerability};
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum SampleError {
    #[error("sample file has no boards")]
    Empty,
    #[error("board {0} does not share the first board's South hand")]
    MixedSouth(usize),
    #[error("board {0} does not share the first board's vulnerability")]
    MixedVul(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Boards sharing a South hand, with board 0 as the reference.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SampleFile {
    pub south: Hand,
    pub vul: Vulnerability,
    pub boards: Vec<Deal>,
}

impl SampleFile {
    /// Wraps boards into a sample file, checking they agree on South and
    /// vulnerability.
    pub fn new(boards: Vec<Deal>) -> Result<SampleFile, SampleError> {
        let first = boards.first().ok_or(SampleError::Empty)?;
        let south = first.hand(Seat::South);
        let vul = first.vul;
        for (i, b) in boards.iter().enumerate().skip(1) {
            if b.hand(Seat::South) != south {
                return Err(SampleError::MixedSouth(i));
            }
            if b.vul != vul {
                return Err(SampleError::MixedVul(i));
            }
        }
        Ok(SampleFile { south, vul, boards })
    }

    /// Conventional file name of the sample with the given index.
    pub fn file_name(index: usize) -> String {
        format!("south_{index}.deals")
    }

    pub fn len(&self) -> usize {
        self.boards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boards.is_empty()
    }

    pub fn to_text(&self) -> String {
        format_deal_file(&self.boards, &[])
    }

    pub fn from_text(text: &str) -> Result<SampleFile, SampleError> {
        SampleFile::new(parse_deal_file(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BOARD: &str =
        "n N:6.AQ93.KQT42.A94 E:T3.J84.A7.QJ8762 S:Q94.KT652.95.KT3 W:AKJ8752.7.J863.5";
    // Same South, different split of the other 39 cards.
    const SIBLING: &str =
        "n N:J2.AJ73.AKT6.AJ9 E:7.Q98.QJ74.Q7652 S:Q94.KT652.95.KT3 W:AKT8653.4.832.84";

    #[test]
    fn roundtrips_through_text() {
        let boards = vec![BOARD.parse().unwrap(), SIBLING.parse().unwrap()];
        let file = SampleFile::new(boards).unwrap();
        let again = SampleFile::from_text(&file.to_text()).unwrap();
        assert_eq!(file, again);
        assert_eq!(again.len(), 2);
        assert_eq!(again.south.to_string(), "Q94.KT652.95.KT3");
        assert_eq!(again.vul, Vulnerability::NsOnly);
    }

    #[test]
    fn rejects_mismatched_boards() {
        assert_eq!(SampleFile::new(vec![]).unwrap_err(), SampleError::Empty);

        // Different South hand on the second board.
        let other_south =
            "n N:Q94.KT652.95.KT3 E:T3.J84.A7.QJ8762 S:6.AQ93.KQT42.A94 W:AKJ8752.7.J863.5";
        let boards = vec![BOARD.parse().unwrap(), other_south.parse().unwrap()];
        assert_eq!(
            SampleFile::new(boards).unwrap_err(),
            SampleError::MixedSouth(1)
        );

        // Same layout, different vulnerability.
        let revul = SIBLING.replacen("n ", "b ", 1);
        let boards = vec![BOARD.parse().unwrap(), revul.parse().unwrap()];
        assert_eq!(
            SampleFile::new(boards).unwrap_err(),
            SampleError::MixedVul(1)
        );
    }

    #[test]
    fn file_names_use_the_index() {
        assert_eq!(SampleFile::file_name(0), "south_0.deals");
        assert_eq!(SampleFile::file_name(137), "south_137.deals");
    }
}
