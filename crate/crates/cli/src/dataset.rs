//! CSV dataset ingestion.
//!
//! Two shapes are recognized, decided by the first data row:
//!
//! * one column: numeric observations, one value per row;
//! * two columns: `label,count` category tallies.
//!
//! Ingestion fails fast at the first malformed row with its 1-based file
//! line number. The reader is configured without automatic header
//! handling so line numbers stay faithful; `--header` skips the first
//! row explicitly.

use std::path::Path;

use crate::errors::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum DatasetKind {
    /// One numeric observation per row.
    Numeric(Vec<f64>),
    /// `(label, count)` tallies, sorted by label.
    Labeled(Vec<(String, u64)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub kind: DatasetKind,
    pub source: String,
    /// Data rows read (excluding a skipped header).
    pub rows: usize,
}

impl Dataset {
    pub fn load(path: &Path, skip_header: bool) -> Result<Dataset, CliError> {
        let source = path.display().to_string();
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_path(path)
            .map_err(|e| CliError::Domain(format!("cannot read {source}: {e}")))?;

        let mut numeric: Vec<f64> = Vec::new();
        let mut labeled: Vec<(String, u64)> = Vec::new();
        let mut width: Option<usize> = None;
        let mut rows = 0usize;

        for (index, record) in reader.records().enumerate() {
            let line = index + 1;
            let record =
                record.map_err(|e| CliError::Domain(format!("{source} line {line}: {e}")))?;
            if skip_header && index == 0 {
                continue;
            }
            let fields: Vec<&str> = record.iter().collect();
            if fields.iter().all(|f| f.is_empty()) {
                continue;
            }
            let w = *width.get_or_insert(fields.len());
            if fields.len() != w {
                return Err(CliError::Domain(format!(
                    "{source} line {line}: expected {w} field(s), found {}",
                    fields.len()
                )));
            }
            match w {
                1 => {
                    let value: f64 = fields[0].parse().map_err(|_| {
                        CliError::Domain(format!(
                            "{source} line {line}: '{}' is not a number",
                            fields[0]
                        ))
                    })?;
                    if !value.is_finite() {
                        return Err(CliError::Domain(format!(
                            "{source} line {line}: non-finite value {value}"
                        )));
                    }
                    numeric.push(value);
                }
                2 => {
                    let label = fields[0].to_string();
                    if label.is_empty() {
                        return Err(CliError::Domain(format!(
                            "{source} line {line}: empty label"
                        )));
                    }
                    let count: u64 = fields[1].parse().map_err(|_| {
                        CliError::Domain(format!(
                            "{source} line {line}: count '{}' is not a nonnegative integer",
                            fields[1]
                        ))
                    })?;
                    if labeled.iter().any(|(l, _)| *l == label) {
                        return Err(CliError::Domain(format!(
                            "{source} line {line}: duplicate label '{label}'"
                        )));
                    }
                    labeled.push((label, count));
                }
                other => {
                    return Err(CliError::Domain(format!(
                        "{source} line {line}: expected 1 column (numeric) or 2 columns (label,count), found {other}"
                    )));
                }
            }
            rows += 1;
        }

        if rows == 0 {
            return Err(CliError::Domain(format!("{source}: dataset is empty")));
        }
        let kind = if width == Some(1) {
            DatasetKind::Numeric(numeric)
        } else {
            labeled.sort_by(|a, b| a.0.cmp(&b.0));
            DatasetKind::Labeled(labeled)
        };
        Ok(Dataset { kind, source, rows })
    }

    pub fn numeric(&self) -> Result<&[f64], CliError> {
        match &self.kind {
            DatasetKind::Numeric(values) => Ok(values),
            DatasetKind::Labeled(_) => Err(CliError::Domain(format!(
                "{}: expected a single numeric column, found label,count rows",
                self.source
            ))),
        }
    }

    pub fn labeled(&self) -> Option<&[(String, u64)]> {
        match &self.kind {
            DatasetKind::Labeled(rows) => Some(rows),
            DatasetKind::Numeric(_) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_file(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f.flush().unwrap();
        f
    }

    #[test]
    fn numeric_column_loads() {
        let f = write_file("1.5\n2.5\n-3.25\n");
        let d = Dataset::load(f.path(), false).unwrap();
        assert_eq!(d.rows, 3);
        assert_eq!(d.numeric().unwrap(), &[1.5, 2.5, -3.25]);
    }

    #[test]
    fn header_skip_is_explicit() {
        let f = write_file("value\n1.5\n2.5\n");
        assert!(Dataset::load(f.path(), false).is_err());
        let d = Dataset::load(f.path(), true).unwrap();
        assert_eq!(d.numeric().unwrap(), &[1.5, 2.5]);
    }

    #[test]
    fn bad_rows_report_their_line_number() {
        let f = write_file("1.5\n2.5\noops\n4.0\n");
        let err = Dataset::load(f.path(), false).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3"), "message was: {msg}");
        assert!(msg.contains("oops"), "message was: {msg}");
    }

    #[test]
    fn line_numbers_count_the_header() {
        let f = write_file("value\n1.5\nbad\n");
        let err = Dataset::load(f.path(), true).unwrap_err();
        assert!(err.to_string().contains("line 3"), "got: {err}");
    }

    #[test]
    fn labeled_rows_load_sorted() {
        let f = write_file("red,3\nblue,5\ngreen,2\n");
        let d = Dataset::load(f.path(), false).unwrap();
        assert_eq!(
            d.labeled().unwrap(),
            &[
                ("blue".to_string(), 5),
                ("green".to_string(), 2),
                ("red".to_string(), 3)
            ]
        );
        assert!(d.numeric().is_err());
    }

    #[test]
    fn duplicate_labels_are_rejected() {
        let f = write_file("red,3\nblue,5\nred,2\n");
        let err = Dataset::load(f.path(), false).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3") && msg.contains("duplicate"), "got: {msg}");
    }

    #[test]
    fn bad_counts_are_rejected() {
        let f = write_file("red,3\nblue,-5\n");
        let err = Dataset::load(f.path(), false).unwrap_err();
        assert!(err.to_string().contains("line 2"), "got: {err}");
        let f = write_file("red,3\nblue,2.5\n");
        assert!(Dataset::load(f.path(), false).is_err());
    }

    #[test]
    fn width_changes_are_rejected() {
        let f = write_file("1.5\n2.5,7\n");
        let err = Dataset::load(f.path(), false).unwrap_err();
        assert!(err.to_string().contains("line 2"), "got: {err}");
    }

    #[test]
    fn empty_datasets_are_rejected() {
        let f = write_file("");
        assert!(Dataset::load(f.path(), false).is_err());
        let f = write_file("header\n");
        assert!(Dataset::load(f.path(), true).is_err());
    }

    #[test]
    fn non_finite_values_are_rejected() {
        let f = write_file("1.5\ninf\n");
        assert!(Dataset::load(f.path(), false).is_err());
        let f = write_file("1.5\nNaN\n");
        assert!(Dataset::load(f.path(), false).is_err());
    }

    #[test]
    fn exit_codes_by_class() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Domain("x".into()).exit_code(), 1);
    }
}
