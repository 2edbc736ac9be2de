//! Ingestion of dominant-order tables.
//!
//! The input format is a two-column CSV with the exact header
//! `language_id,dominant_order`, one record per line, and dominant orders
//! drawn from the six order tokens plus `NONE` for languages without a
//! dominant order.  Summaries count languages by verb position.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::ordering::{DominantOrder, VerbPosition};

pub const TABLE_HEADER: &str = "language_id,dominant_order";

/// One language and its dominant order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageRecord {
    pub language_id: String,
    pub dominant_order: DominantOrder,
}

/// Language counts by verb position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct TypologySummary {
    /// Verb-initial languages.
    pub n1: u64,
    /// Verb-medial languages.
    pub n2: u64,
    /// Verb-final languages.
    pub n3: u64,
    /// Languages without a dominant order.
    pub none_count: u64,
    pub total: u64,
}

/// Verb position of a dominant order; `None` for languages without one.
pub fn classify_verb_position(order: DominantOrder) -> Option<VerbPosition> {
    match order {
        DominantOrder::Order(order) => Some(order.verb_position()),
        DominantOrder::None => None,
    }
}

/// Parses a dominant-order table.
///
/// Lines may end in LF or CRLF.  An empty input yields an empty list; any
/// other input must start with [`TABLE_HEADER`].  Errors carry 1-based line
/// numbers counting the header.
pub fn parse_language_table<R: BufRead>(reader: R) -> Result<Vec<LanguageRecord>> {
    let mut records = Vec::new();
    let mut lines = reader.lines().enumerate();
    match lines.next() {
        None => return Ok(records),
        Some((_, line)) => {
            let line = line?;
            let header = line.strip_suffix('\r').unwrap_or(&line);
            if header != TABLE_HEADER {
                return Err(Error::parse(
                    1,
                    format!("expected header {TABLE_HEADER:?}, found {header:?}"),
                ));
            }
        }
    }
    for (index, line) in lines {
        let line_number = index + 1;
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        let mut fields = line.split(',');
        let (id, token) = match (fields.next(), fields.next(), fields.next()) {
            (Some(id), Some(token), None) => (id, token),
            _ => {
                return Err(Error::parse(
                    line_number,
                    format!("expected 2 comma-separated fields, found {line:?}"),
                ))
            }
        };
        if id.is_empty() {
            return Err(Error::parse(line_number, "empty language_id"));
        }
        let dominant_order = DominantOrder::from_token(token).map_err(|_| {
            Error::parse(line_number, format!("unknown dominant order token {token:?}"))
        })?;
        records.push(LanguageRecord { language_id: id.to_string(), dominant_order });
    }
    Ok(records)
}

/// Writes a table back out with LF line endings, preserving record order.
/// Parsing and reserializing an LF table reproduces it byte for byte.
pub fn serialize_language_table(records: &[LanguageRecord]) -> String {
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for record in records {
        out.push_str(&record.language_id);
        out.push(',');
        out.push_str(record.dominant_order.token());
        out.push('\n');
    }
    out
}

/// Counts languages by verb position.
pub fn summarize(records: &[LanguageRecord]) -> TypologySummary {
    let mut summary =
        TypologySummary { n1: 0, n2: 0, n3: 0, none_count: 0, total: records.len() as u64 };
    for record in records {
        match classify_verb_position(record.dominant_order) {
            Some(VerbPosition::Initial) => summary.n1 += 1,
            Some(VerbPosition::Medial) => summary.n2 += 1,
            Some(VerbPosition::Final) => summary.n3 += 1,
            None => summary.none_count += 1,
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::WordOrder;

    #[test]
    fn parses_a_small_table() {
        let input = "language_id,dominant_order\nabc,SOV\nxyz,NONE\n";
        let records = parse_language_table(input.as_bytes()).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].language_id, "abc");
        assert_eq!(records[0].dominant_order, DominantOrder::Order(WordOrder::Sov));
        assert_eq!(records[1].dominant_order, DominantOrder::None);
    }

    #[test]
    fn accepts_crlf_line_endings() {
        let input = "language_id,dominant_order\r\nabc,VOS\r\n";
        let records = parse_language_table(input.as_bytes()).unwrap();
        assert_eq!(records[0].dominant_order, DominantOrder::Order(WordOrder::Vos));
    }

    #[test]
    fn empty_input_is_an_empty_table() {
        assert_eq!(parse_language_table("".as_bytes()).unwrap(), Vec::new());
    }

    #[test]
    fn wrong_header_is_a_parse_error_on_line_one() {
        let err = parse_language_table("language,order\nabc,SOV\n".as_bytes()).unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_token_reports_its_line() {
        let input = "language_id,dominant_order\nabc,SOV\nxyz,SVV\n";
        let err = parse_language_table(input.as_bytes()).unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("SVV"), "message was {message:?}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_rows_report_their_line() {
        for (input, bad_line) in [
            ("language_id,dominant_order\nabc\n", 2),
            ("language_id,dominant_order\nabc,SOV,extra\n", 2),
            ("language_id,dominant_order\nabc,SOV\n\n", 3),
            ("language_id,dominant_order\n,SOV\n", 2),
        ] {
            let err = parse_language_table(input.as_bytes()).unwrap_err();
            match err {
                Error::Parse { line, .. } => assert_eq!(line, bad_line, "input {input:?}"),
                other => panic!("expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn lf_tables_round_trip_byte_for_byte() {
        let input = "language_id,dominant_order\nabc,SOV\nmno,OSV\nxyz,NONE\n";
        let records = parse_language_table(input.as_bytes()).unwrap();
        assert_eq!(serialize_language_table(&records), input);
    }

    #[test]
    fn summary_counts_by_verb_position() {
        let input = "language_id,dominant_order\na,SOV\nb,OSV\nc,SVO\nd,OVS\ne,VSO\nf,VOS\ng,NONE\nh,SOV\n";
        let records = parse_language_table(input.as_bytes()).unwrap();
        let summary = summarize(&records);
        assert_eq!(summary.n1, 2);
        assert_eq!(summary.n2, 2);
        assert_eq!(summary.n3, 3);
        assert_eq!(summary.none_count, 1);
        assert_eq!(summary.total, 8);
    }

    #[test]
    fn verb_position_classification() {
        use WordOrder::*;
        for (order, position) in [
            (Vso, VerbPosition::Initial),
            (Vos, VerbPosition::Initial),
            (Svo, VerbPosition::Medial),
            (Ovs, VerbPosition::Medial),
            (Sov, VerbPosition::Final),
            (Osv, VerbPosition::Final),
        ] {
            assert_eq!(classify_verb_position(DominantOrder::Order(order)), Some(position));
        }
        assert_eq!(classify_verb_position(DominantOrder::None), None);
    }
}
