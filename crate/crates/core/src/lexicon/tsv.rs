//! Tab-separated lexicon files.
//!
//! Header `term<TAB>sociability<TAB>trust<TAB>warmth[<TAB>competence]`, one
//! term per line, empty fields for missing scores. Header names are
//! case-insensitive and `word` is accepted for `term`. Lines starting with `#`
//! before the header are comments; `# provenance: <note>` carries the
//! lexicon's provenance note.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use super::{Dimension, Lexicon, LexiconEntry};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

const PROVENANCE_PREFIX: &str = "# provenance: ";

fn column(name: &str) -> Option<Dimension> {
    match name.trim().to_ascii_lowercase().as_str() {
        "sociability" => Some(Dimension::Sociability),
        "trust" => Some(Dimension::Trust),
        "warmth" => Some(Dimension::Warmth),
        "competence" => Some(Dimension::Competence),
        _ => None,
    }
}

pub fn parse_lexicon_tsv<S: Scalar, R: BufRead>(reader: R) -> Result<Lexicon<S>> {
    let mut provenance = String::new();
    let mut columns: Option<Vec<Dimension>> = None;
    let mut seen = HashSet::new();
    let mut entries = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);

        let Some(cols) = &columns else {
            if let Some(note) = line.strip_prefix(PROVENANCE_PREFIX) {
                provenance = note.to_string();
            } else if !line.starts_with('#') {
                columns = Some(parse_header(line, lineno)?);
            }
            continue;
        };
        if line.is_empty() {
            continue;
        }

        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != cols.len() + 1 {
            return Err(Error::parse(
                lineno,
                format!("expected {} fields, found {}", cols.len() + 1, fields.len()),
            ));
        }
        let mut scores = [None::<S>; 4];
        for (&dim, raw) in cols.iter().zip(&fields[1..]) {
            if raw.is_empty() {
                continue;
            }
            let value: S = raw
                .parse()
                .map_err(|e| Error::parse(lineno, format!("bad {dim} value {raw:?}: {e}")))?;
            scores[dim as usize] = Some(value);
        }
        let [w, c, t, s] = scores;
        let entry = LexiconEntry::with_warmth(fields[0], s, t, w, c).map_err(|e| at_line(e, lineno))?;
        if !seen.insert(entry.term().to_string()) {
            return Err(Error::data(format!("line {lineno}: duplicate term {:?}", entry.term())));
        }
        entries.push(entry);
    }

    if columns.is_none() {
        return Err(Error::parse(1, "missing header row"));
    }
    Lexicon::from_entries(entries, provenance)
}

fn parse_header(line: &str, lineno: usize) -> Result<Vec<Dimension>> {
    let mut names = line.split('\t');
    let first = names.next().unwrap_or("").trim().to_ascii_lowercase();
    if first != "term" && first != "word" {
        return Err(Error::parse(lineno, "header must start with `term`"));
    }
    let mut cols = Vec::new();
    for name in names {
        let col = column(name).ok_or_else(|| Error::parse(lineno, format!("unknown column {name:?}")))?;
        if cols.contains(&col) {
            return Err(Error::parse(lineno, format!("duplicate column {name:?}")));
        }
        cols.push(col);
    }
    Ok(cols)
}

fn at_line(err: Error, lineno: usize) -> Error {
    match err {
        Error::Domain(m) => Error::Domain(format!("line {lineno}: {m}")),
        Error::Data(m) => Error::Data(format!("line {lineno}: {m}")),
        other => other,
    }
}

/// Writes `lex` in term order; the competence column appears only when some
/// entry has a competence score.
pub fn write_lexicon_tsv<S: Scalar, W: Write>(lex: &Lexicon<S>, mut out: W) -> std::io::Result<()> {
    if !lex.provenance().is_empty() {
        writeln!(out, "{PROVENANCE_PREFIX}{}", lex.provenance())?;
    }
    let with_competence = lex.has_dimension(Dimension::Competence);
    out.write_all(b"term\tsociability\ttrust\twarmth")?;
    if with_competence {
        out.write_all(b"\tcompetence")?;
    }
    out.write_all(b"\n")?;

    let field = |v: Option<S>| v.map(|x| x.to_string()).unwrap_or_default();
    for e in lex.iter() {
        write!(
            out,
            "{}\t{}\t{}\t{}",
            e.term(),
            field(e.sociability()),
            field(e.trust()),
            field(e.warmth())
        )?;
        if with_competence {
            write!(out, "\t{}", field(e.competence()))?;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(text: &str) -> Result<Lexicon<f64>> {
        parse_lexicon_tsv(text.as_bytes())
    }

    fn write(lex: &Lexicon<f64>) -> String {
        let mut buf = Vec::new();
        write_lexicon_tsv(lex, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn parses_table_row() {
        let lex = parse("term\tsociability\ttrust\twarmth\nwedding\t2.88\t2.22\t2.88\n").unwrap();
        let e = lex.get("wedding").unwrap();
        assert_eq!((e.sociability(), e.trust(), e.warmth()), (Some(2.88), Some(2.22), Some(2.88)));
    }

    #[test]
    fn header_only_is_empty() {
        assert!(parse("term\tsociability\ttrust\twarmth\n").unwrap().is_empty());
    }

    #[test]
    fn missing_header_is_parse_error() {
        assert!(matches!(parse(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("lemma\ttrust\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn duplicate_term_is_data_error() {
        let err = parse("term\ttrust\nx\t1\ny\t2\nx\t1\n").unwrap_err();
        assert!(matches!(err, Error::Data(ref m) if m.contains("line 4")), "{err}");
    }

    #[test]
    fn malformed_rows_report_line() {
        assert!(matches!(parse("term\ttrust\nx\t1\ty\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("term\ttrust\nx\t1\ny\tabc\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse("term\ttrust\nx\t3.5\n"), Err(Error::Domain(_))));
    }

    #[test]
    fn warmth_is_derived_when_column_absent() {
        let lex = parse("term\ttrust\tsociability\nx\t-2.62\t-1.71\n").unwrap();
        assert_eq!(lex.get("x").unwrap().warmth(), Some(-2.62));
    }

    #[test]
    fn header_names_ignore_case() {
        let lex: Lexicon<f64> = parse_lexicon_tsv("Word\tSociability\tTrust\tWarmth\nstalker\t-3.00\t-2.67\t-3.00\n".as_bytes()).unwrap();
        assert_eq!(lex.get("stalker").unwrap().warmth(), Some(-3.0));
        assert!(parse_lexicon_tsv::<f64, _>("lemma\ttrust\n".as_bytes()).is_err());
    }

    #[test]
    fn subset_columns_and_competence() {
        let lex = parse("term\tcompetence\nstrong\t0.8\nweak\t-0.7\n").unwrap();
        assert_eq!(lex.get("weak").unwrap().competence(), Some(-0.7));
        assert_eq!(lex.get("weak").unwrap().warmth(), None);
    }

    #[test]
    fn empty_lexicon_writes_header_only() {
        assert_eq!(write(&Lexicon::empty("")), "term\tsociability\ttrust\twarmth\n");
    }

    #[test]
    fn one_entry_is_two_lines() {
        let e = LexiconEntry::new("a", Some(1.5), None, None).unwrap();
        let text = write(&Lexicon::from_entries([e], "").unwrap());
        assert_eq!(text, "term\tsociability\ttrust\twarmth\na\t1.5\t\t1.5\n");
    }

    #[test]
    fn provenance_and_comments() {
        let text = "# tool: x\n# provenance: hand made\nterm\ttrust\nx\t1\n";
        let lex = parse(text).unwrap();
        assert_eq!(lex.provenance(), "hand made");
        assert_eq!(parse(&write(&lex)).unwrap(), lex);
    }

    fn opt_score(bound: f64) -> impl Strategy<Value = Option<f64>> {
        prop_oneof![Just(None), (-bound..=bound).prop_map(Some)]
    }

    fn arb_entry() -> impl Strategy<Value = LexiconEntry<f64>> {
        ("[a-z]{1,8}( [a-z]{1,5})?", opt_score(3.0), opt_score(3.0), opt_score(1.0))
            .prop_map(|(t, s, tr, c)| LexiconEntry::new(&t, s, tr, c).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn write_parse_round_trip(entries in proptest::collection::vec(arb_entry(), 0..100)) {
            let mut seen = HashSet::new();
            let unique = entries.into_iter().filter(|e| seen.insert(e.term().to_string()));
            let lex = Lexicon::from_entries(unique, "prop").unwrap();
            let text = write(&lex);
            prop_assert_eq!(parse(&text).unwrap(), lex);
        }
    }
}
