//! Plain-text dataset format: one labelled example per line.
//!
//! No field in the format can contain a comma — hands are dotted suit
//! groups, vulnerability is a single letter, labels are words — except the
//! free-form source name, which the writer therefore checks.

use bridge_core::{Dataset, Hand, Label, LabeledExample, ParseError, Vulnerability};
use thiserror::Error;

/// Header line of the dataset format.
pub const DATASET_HEADER: &str = "south_hand,vulnerability,label,source_file";

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum DatasetCsvError {
    #[error("expected header `{DATASET_HEADER}`, got `{0}`")]
    Header(String),
    #[error("line {line}: expected 4 fields, got {fields}")]
    FieldCount { line: usize, fields: usize },
    #[error("line {line}: {source}")]
    Field { line: usize, source: ParseError },
}

pub fn dataset_to_csv(dataset: &Dataset) -> String {
    let mut out = String::from(DATASET_HEADER);
    out.push('\n');
    for ex in &dataset.examples {
        assert!(
            !ex.source.contains([',', '\n']),
            "source `{}` cannot be written as a CSV field",
            ex.source
        );
        out.push_str(&format!("{},{},{},{}\n", ex.south, ex.vul, ex.label, ex.source));
    }
    out
}

pub fn dataset_from_csv(text: &str) -> Result<Dataset, DatasetCsvError> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if header != DATASET_HEADER {
        return Err(DatasetCsvError::Header(header.to_string()));
    }
    let mut examples = Vec::new();
    for (i, line) in lines.enumerate() {
        let line_no = i + 2;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(DatasetCsvError::FieldCount { line: line_no, fields: fields.len() });
        }
        let field = |source| DatasetCsvError::Field { line: line_no, source };
        let south: Hand = fields[0].parse().map_err(field)?;
        let vul = Vulnerability::from_code(fields[1]).map_err(field)?;
        let label = Label::from_str(fields[2]).map_err(field)?;
        let mut ex = LabeledExample::new(south, vul, label);
        ex.source = fields[3].to_string();
        examples.push(ex);
    }
    Ok(Dataset::new(examples))
}
