//! CSV emission for run records. The schema is fixed:
//! `trial,domain,n,N,p,delta,noise_model,queries,success,theoretical_bound,seed`
//! — header always present, rows ordered by trial, newline-terminated.

use std::path::Path;

use crate::error::HarnessError;
use crate::experiment::RunRecord;

pub const CSV_HEADER: &str = "trial,domain,n,N,p,delta,noise_model,queries,success,theoretical_bound,seed";

/// Renders records to the exact CSV byte string.
pub fn csv_string(records: &[RunRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.trial,
            r.domain,
            r.n,
            r.n0,
            r.p,
            r.delta,
            r.noise_model,
            r.queries,
            u8::from(r.success),
            r.theoretical_bound,
            r.seed
        ));
    }
    out
}

/// Writes the CSV to `path`.
pub fn emit_csv(records: &[RunRecord], path: &Path) -> Result<(), HarnessError> {
    std::fs::write(path, csv_string(records))?;
    Ok(())
}

/// Parses a CSV produced by [`csv_string`] back into records (round-trip
/// check support).
pub fn parse_csv(text: &str) -> Result<Vec<RunRecord>, HarnessError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| HarnessError::Config("empty CSV".into()))?;
    if header != CSV_HEADER {
        return Err(HarnessError::Config(format!("unexpected CSV header `{header}`")));
    }
    let mut records = Vec::new();
    for (i, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 11 {
            return Err(HarnessError::Config(format!(
                "row {}: expected 11 fields, got {}",
                i + 1,
                fields.len()
            )));
        }
        let parse_err =
            |f: &str| HarnessError::Config(format!("row {}: bad field `{f}`", i + 1));
        records.push(RunRecord {
            trial: fields[0].parse().map_err(|_| parse_err(fields[0]))?,
            domain: fields[1].to_string(),
            n: fields[2].parse().map_err(|_| parse_err(fields[2]))?,
            n0: fields[3].parse().map_err(|_| parse_err(fields[3]))?,
            p: fields[4].parse().map_err(|_| parse_err(fields[4]))?,
            delta: fields[5].parse().map_err(|_| parse_err(fields[5]))?,
            noise_model: fields[6].to_string(),
            queries: fields[7].parse().map_err(|_| parse_err(fields[7]))?,
            success: match fields[8] {
                "0" => false,
                "1" => true,
                f => return Err(parse_err(f)),
            },
            theoretical_bound: fields[9].parse().map_err(|_| parse_err(fields[9]))?,
            seed: fields[10].parse().map_err(|_| parse_err(fields[10]))?,
        });
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(trial: usize) -> RunRecord {
        RunRecord {
            trial,
            domain: "ranking-bubble".into(),
            n: 5,
            n0: 120,
            p: 0.85,
            delta: 0.2,
            noise_model: "uniform".into(),
            queries: 42,
            success: true,
            theoretical_bound: 7.0,
            seed: 100 + trial as u64,
        }
    }

    #[test]
    fn empty_records_give_header_only() {
        assert_eq!(csv_string(&[]), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn round_trip_preserves_records() {
        let records = vec![record(0), record(1)];
        let parsed = parse_csv(&csv_string(&records)).unwrap();
        assert_eq!(parsed.len(), 2);
        for (a, b) in records.iter().zip(&parsed) {
            assert_eq!(a.trial, b.trial);
            assert_eq!(a.domain, b.domain);
            assert_eq!(a.queries, b.queries);
            assert_eq!(a.success, b.success);
            assert_eq!(a.p, b.p);
            assert_eq!(a.theoretical_bound, b.theoretical_bound);
            assert_eq!(a.seed, b.seed);
        }
    }

    #[test]
    fn rows_are_newline_terminated_and_exact() {
        let s = csv_string(&[record(3)]);
        assert!(s.ends_with('\n'));
        let row = s.lines().nth(1).unwrap();
        assert_eq!(row, "3,ranking-bubble,5,120,0.85,0.2,uniform,42,1,7,103");
    }
}
