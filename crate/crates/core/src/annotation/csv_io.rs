//! Annotation CSV: `annotator_id,term,dimension,response,gold_kind,gold_answer`.

use std::io::{Read, Write};

use super::{AnnotationRecord, GoldKind};
use crate::error::{Error, Result};
use crate::lexicon::Dimension;

const HEADER: [&str; 6] = ["annotator_id", "term", "dimension", "response", "gold_kind", "gold_answer"];

fn gold_kind(raw: &str) -> Option<GoldKind> {
    match raw {
        "none" | "" => Some(GoldKind::NotGold),
        "popup" => Some(GoldKind::PopupGold),
        "nopopup" => Some(GoldKind::NoPopupGold),
        _ => None,
    }
}

fn gold_kind_str(kind: GoldKind) -> &'static str {
    match kind {
        GoldKind::NotGold => "none",
        GoldKind::PopupGold => "popup",
        GoldKind::NoPopupGold => "nopopup",
    }
}

/// Reads every record; errors carry the 1-based line of the offending row.
/// A completely empty input holds no records.
pub fn parse_annotations_csv<R: Read>(reader: R) -> Result<Vec<AnnotationRecord>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let header = rdr.headers().map_err(|e| Error::parse(1, e.to_string()))?;
    if header.is_empty() {
        return Ok(Vec::new());
    }
    if header.iter().map(str::trim).ne(HEADER) {
        return Err(Error::parse(1, format!("expected header `{}`", HEADER.join(","))));
    }

    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            Error::parse(line, e.to_string())
        })?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        let field = |i: usize| row.get(i).unwrap_or("").trim();
        let int = |i: usize, what: &str| -> Result<i8> {
            field(i)
                .parse::<i8>()
                .map_err(|_| Error::parse(line, format!("bad {what} {:?}", field(i))))
        };

        let dimension: Dimension = match field(2) {
            "trust" => Dimension::Trust,
            "sociability" => Dimension::Sociability,
            other => return Err(Error::parse(line, format!("bad dimension {other:?}"))),
        };
        let response = int(3, "response")?;
        let kind = gold_kind(field(4)).ok_or_else(|| Error::parse(line, format!("bad gold_kind {:?}", field(4))))?;
        let answer = if field(5).is_empty() { None } else { Some(int(5, "gold_answer")?) };
        let record = AnnotationRecord::new(field(0), field(1), dimension, response, kind, answer)
            .map_err(|e| Error::parse(line, e.to_string()))?;
        out.push(record);
    }
    Ok(out)
}

pub fn write_annotations_csv<W: Write>(records: &[AnnotationRecord], out: W) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let io = |e: csv::Error| Error::Io(e.into());
    wtr.write_record(HEADER).map_err(io)?;
    for r in records {
        let response = r.value().to_string();
        let answer = r.gold_answer().map(|g| g.to_string()).unwrap_or_default();
        wtr.write_record([
            r.annotator_id(),
            r.term(),
            r.dimension().as_str(),
            &response,
            gold_kind_str(r.gold_kind()),
            &answer,
        ])
        .map_err(io)?;
    }
    wtr.flush()?;
    Ok(())
}
