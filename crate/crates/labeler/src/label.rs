//! Two-step labelling of sample files from their score tables.
//!
//! Every board of a sample file shares the same South hand, so the file as a
//! whole gets one label. Step one compares the average result of defending
//! 4♠ doubled against the average of each board's best North/South contract:
//! if defending already wins that comparison, the label is pass. Step two
//! picks the single North/South contract whose average score over the boards
//! is highest; if it beats defending the label is bid, if it falls short by
//! at least the threshold the label is pass, and anything in between is too
//! close to call and stays unknown.

use bridge_core::{Dataset, LabelOutcome, LabeledExample};
use bridge_dds::ScoreTable;
use bridge_dealgen::SampleFile;
use thiserror::Error;

/// Minimum margin (in total points) by which defending must beat the best
/// fixed contract before step two settles on pass.
pub const DEFAULT_THRESHOLD: i32 = 30;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum LabelError {
    #[error("sample file has no boards")]
    EmptyFile,
    #[error("{tables} score tables for {boards} boards")]
    TableMismatch { boards: usize, tables: usize },
}

/// Label one sample file from its per-board score tables.
///
/// `tables[i]` must be the score table of `file.boards[i]`, with the
/// defended 4♠ doubled entry first and the North/South entries scored from
/// the North/South point of view.
pub fn label_south(
    file: &SampleFile,
    tables: &[ScoreTable],
    threshold: i32,
) -> Result<LabelOutcome, LabelError> {
    if file.is_empty() {
        return Err(LabelError::EmptyFile);
    }
    if tables.len() != file.len() {
        return Err(LabelError::TableMismatch { boards: file.len(), tables: tables.len() });
    }
    let n = tables.len() as f64;
    let s_def = tables.iter().map(|t| t.defense().ns_score as f64).sum::<f64>() / n;
    let s_oracle = tables.iter().map(|t| t.best_ns().ns_score as f64).sum::<f64>() / n;

    // Step one: defending beats even a per-board choice of contract.
    if s_def > s_oracle {
        return Ok(LabelOutcome::Pass);
    }

    // Step two: the best single contract, held fixed across all boards.
    let best = best_fixed_mean(tables);
    if best > s_def {
        Ok(LabelOutcome::Bid)
    } else if best <= s_def - threshold as f64 {
        Ok(LabelOutcome::Pass)
    } else {
        Ok(LabelOutcome::Unknown)
    }
}

/// Mean score of the single North/South contract whose average over the
/// boards is highest. All tables must list the same contracts in the same
/// order.
fn best_fixed_mean(tables: &[ScoreTable]) -> f64 {
    let first = tables[0].ns_entries();
    assert!(!first.is_empty(), "score tables carry no North/South entries");
    for t in &tables[1..] {
        let same = t.ns_entries().len() == first.len()
            && t.ns_entries().iter().zip(first).all(|(a, b)| {
                (a.contract.level, a.contract.strain) == (b.contract.level, b.contract.strain)
            });
        assert!(same, "score tables cover different contract sets");
    }
    let n = tables.len() as f64;
    (0..first.len())
        .map(|i| tables.iter().map(|t| t.ns_entries()[i].ns_score as f64).sum::<f64>() / n)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// A sample file joined with its score tables and the name under which its
/// example is recorded.
#[derive(Clone, Debug)]
pub struct FileTables {
    pub file: SampleFile,
    pub tables: Vec<ScoreTable>,
    /// Provenance stored on the example, typically the file name on disk.
    pub source: String,
}

/// Per-label counts from a labelling run, including the dropped unknowns.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct LabelSummary {
    pub bid: usize,
    pub pass: usize,
    pub unknown: usize,
}

impl LabelSummary {
    pub fn total(&self) -> usize {
        self.bid + self.pass + self.unknown
    }

    /// Fraction of kept (bid or pass) examples labelled bid.
    pub fn bid_ratio(&self) -> f64 {
        let kept = self.bid + self.pass;
        if kept == 0 {
            0.0
        } else {
            self.bid as f64 / kept as f64
        }
    }
}

/// Label every file and collect the decided examples into a dataset.
///
/// Unknowns are counted in the summary but dropped from the dataset. Files
/// are independent, so the loop can be parallelised freely; the output is a
/// pure function of the inputs either way.
pub fn build_dataset(
    files: &[FileTables],
    threshold: i32,
) -> Result<(Dataset, LabelSummary), LabelError> {
    let mut examples = Vec::new();
    let mut summary = LabelSummary::default();
    for ft in files {
        let outcome = label_south(&ft.file, &ft.tables, threshold)?;
        match outcome {
            LabelOutcome::Bid => summary.bid += 1,
            LabelOutcome::Pass => summary.pass += 1,
            LabelOutcome::Unknown => summary.unknown += 1,
        }
        if let Some(label) = outcome.to_label() {
            let mut ex = LabeledExample::new(ft.file.south, ft.file.vul, label);
            ex.source = ft.source.clone();
            examples.push(ex);
        }
    }
    Ok((Dataset::new(examples), summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bridge_core::{Contract, Doubling, Seat, Strain};
    use bridge_dds::{defended_contract, TableEntry};

    /// A score table from raw scores: the defended 4♠X entry plus one
    /// North/South entry per (level, strain, score) triple.
    fn stub_table(defense: i32, ns: &[(u8, Strain, i32)]) -> ScoreTable {
        let mut entries = vec![TableEntry {
            contract: defended_contract(),
            tricks: 10,
            ns_score: defense,
        }];
        for &(level, strain, score) in ns {
            entries.push(TableEntry {
                contract: Contract::new(level, strain, Doubling::Undoubled, Seat::North).unwrap(),
                tricks: 0,
                ns_score: score,
            });
        }
        ScoreTable { entries }
    }

    fn stub_file(boards: usize) -> SampleFile {
        let deal =
            "n N:6.AQ93.KQT42.A94 E:T3.J84.A7.QJ8762 S:Q94.KT652.95.KT3 W:AKJ8752.7.J863.5"
                .parse()
                .unwrap();
        SampleFile::new(vec![deal; boards]).unwrap()
    }

    #[test]
    fn defending_well_is_a_pass() {
        // Defense averages -245 while the per-board best contract averages
        // -350, so declaring cannot be right no matter the contract.
        let file = stub_file(2);
        let tables = vec![
            stub_table(-590, &[(3, Strain::NoTrump, -300), (4, Strain::Hearts, -400)]),
            stub_table(100, &[(3, Strain::NoTrump, -400), (4, Strain::Hearts, -500)]),
        ];
        assert_eq!(label_south(&file, &tables, DEFAULT_THRESHOLD), Ok(LabelOutcome::Pass));
    }

    #[test]
    fn a_better_contract_is_a_bid() {
        let file = stub_file(1);
        let tables = vec![stub_table(-100, &[(4, Strain::Hearts, 620), (3, Strain::NoTrump, -50)])];
        assert_eq!(label_south(&file, &tables, DEFAULT_THRESHOLD), Ok(LabelOutcome::Bid));
    }

    /// Two contracts that swing in opposite directions: each averages
    /// `mean` while the per-board best averages +200, well above defense.
    fn swing_tables(mean: i32) -> Vec<ScoreTable> {
        vec![
            stub_table(0, &[(4, Strain::Hearts, 200), (5, Strain::Clubs, 2 * mean - 200)]),
            stub_table(0, &[(4, Strain::Hearts, 2 * mean - 200), (5, Strain::Clubs, 200)]),
        ]
    }

    #[test]
    fn the_threshold_splits_pass_from_unknown() {
        let file = stub_file(2);
        // Best fixed mean exactly threshold points below defense: pass.
        let at = swing_tables(-30);
        assert_eq!(label_south(&file, &at, 30), Ok(LabelOutcome::Pass));
        // One point inside the band: too close to call.
        let inside = swing_tables(-29);
        assert_eq!(label_south(&file, &inside, 30), Ok(LabelOutcome::Unknown));
    }

    #[test]
    fn raising_the_threshold_never_creates_a_bid() {
        let file = stub_file(2);
        for mean in [-60, -30, -29, -1, 10] {
            let tables = swing_tables(mean);
            let mut seen_bid = false;
            for threshold in [0, 10, 29, 30, 31, 100] {
                let label = label_south(&file, &tables, threshold).unwrap();
                if threshold == 0 {
                    seen_bid = label == LabelOutcome::Bid;
                } else {
                    // A bid at threshold zero stays a bid; a non-bid never
                    // becomes one, whatever the threshold.
                    assert_eq!(label == LabelOutcome::Bid, seen_bid, "mean {mean}, threshold {threshold}");
                }
            }
        }
    }

    #[test]
    fn step_one_outranks_step_two() {
        // Defense (+100) beats the oracle (-300): pass, even though the
        // threshold band around s_def is wide open.
        let file = stub_file(1);
        let tables = vec![stub_table(100, &[(4, Strain::Hearts, -300), (3, Strain::NoTrump, -400)])];
        assert_eq!(label_south(&file, &tables, 1_000_000), Ok(LabelOutcome::Pass));
    }

    #[test]
    fn a_fixed_contract_never_beats_the_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let file = stub_file(3);
        for _ in 0..200 {
            let mut tables = Vec::new();
            for _ in 0..3 {
                let ns: Vec<(u8, Strain, i32)> = [Strain::Clubs, Strain::Hearts, Strain::NoTrump]
                    .iter()
                    .map(|&s| (4, s, rng.gen_range(-800..800)))
                    .collect();
                tables.push(stub_table(rng.gen_range(-800..800), &ns));
            }
            let n = tables.len() as f64;
            let s_oracle =
                tables.iter().map(|t| t.best_ns().ns_score as f64).sum::<f64>() / n;
            assert!(best_fixed_mean(&tables) <= s_oracle + 1e-9);
            // Labelling is a pure function of its inputs.
            let a = label_south(&file, &tables, DEFAULT_THRESHOLD);
            let b = label_south(&file, &tables, DEFAULT_THRESHOLD);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn input_mismatches_are_reported() {
        let file = stub_file(2);
        let tables = vec![stub_table(0, &[(4, Strain::Hearts, 0)])];
        assert_eq!(
            label_south(&file, &tables, DEFAULT_THRESHOLD),
            Err(LabelError::TableMismatch { boards: 2, tables: 1 })
        );

        let empty = SampleFile { boards: Vec::new(), ..stub_file(1) };
        assert_eq!(label_south(&empty, &[], DEFAULT_THRESHOLD), Err(LabelError::EmptyFile));
    }

    #[test]
    fn dataset_keeps_only_decided_files() {
        let mk = |defense, ns: &[(u8, Strain, i32)], source: &str| FileTables {
            file: stub_file(1),
            tables: vec![stub_table(defense, ns)],
            source: source.to_string(),
        };
        let files = vec![
            mk(-100, &[(4, Strain::Hearts, 620)], "south_0.deals"),
            mk(100, &[(4, Strain::Hearts, -300)], "south_1.deals"),
            // s_def = s_oracle = 0: step two, margin 0, inside the band.
            mk(0, &[(4, Strain::Hearts, 0)], "south_2.deals"),
        ];
        let (dataset, summary) = build_dataset(&files, DEFAULT_THRESHOLD).unwrap();
        assert_eq!(summary, LabelSummary { bid: 1, pass: 1, unknown: 1 });
        assert_eq!(summary.total(), 3);
        assert_eq!(dataset.len(), 2);
        assert_eq!(dataset.n_bid(), 1);
        assert_eq!(dataset.examples[0].source, "south_0.deals");
        assert_eq!(dataset.examples[1].source, "south_1.deals");
        assert!((summary.bid_ratio() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn no_files_means_an_empty_dataset() {
        let (dataset, summary) = build_dataset(&[], DEFAULT_THRESHOLD).unwrap();
        assert!(dataset.is_empty());
        assert_eq!(summary, LabelSummary::default());
        assert_eq!(summary.bid_ratio(), 0.0);
    }
}
