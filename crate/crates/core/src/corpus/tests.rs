use std::collections::HashSet;

use proptest::prelude::*;

use super::*;
use crate::lexicon::{Dimension, Lexicon, LexiconEntry};

type Row = (&'static str, Option<f64>, Option<f64>, Option<f64>);

fn fixture_lexicon() -> Lexicon<f64> {
    let rows: &[Row] = &[
        ("good", Some(2.0), Some(1.0), Some(0.1)),
        ("bad", Some(-2.0), Some(-2.5), None),
        ("meh", Some(0.5), None, Some(0.0)),
        ("strong", None, Some(0.2), Some(0.5)),
        ("weak", None, Some(-0.2), Some(-0.6)),
        ("god", Some(2.5), Some(2.8), Some(0.9)),
        ("edge", Some(-1.5), None, Some(0.33)),
    ];
    Lexicon::from_entries(
        rows.iter().map(|&(t, s, tr, c)| LexiconEntry::new(t, s, tr, c).unwrap()),
        "fixture",
    )
    .unwrap()
}

fn doc(text: &str) -> Document {
    Document::new("d", text, None, None)
}

fn doc_in(text: &str, year: Option<i32>, region: Option<&str>) -> Document {
    Document::new("d", text, year, region.map(str::to_string))
}

fn score(docs: &[Document], dim: Dimension, exclude: &[&str]) -> CotermScore<f64> {
    let exclude: HashSet<String> = exclude.iter().map(|s| s.to_string()).collect();
    coterm_score("t", docs, &fixture_lexicon(), dim, &exclude, &CountingConfig::default()).unwrap()
}

/// Token-by-token counter with literal thresholds; shares nothing with the engine.
fn naive_counts(docs: &[Document], lex: &Lexicon<f64>, dim: Dimension, exclude: &[String]) -> (usize, usize, usize) {
    let cut = if dim == Dimension::Competence { 0.33 } else { 1.5 };
    let (mut total, mut high, mut low) = (0, 0, 0);
    for d in docs {
        for tok in d.tokens() {
            if exclude.iter().any(|e| e == tok) {
                continue;
            }
            total += 1;
            if let Some(s) = lex.get(tok).and_then(|e| e.score(dim)) {
                if s >= cut {
                    high += 1;
                } else if s <= -cut {
                    low += 1;
                }
            }
        }
    }
    (total, high, low)
}

#[test]
fn target_spec_validation() {
    assert!(TargetSpec::new("n", ["nurse", "nurses", "nurse"]).unwrap().surface_terms().len() == 2);
    assert!(TargetSpec::new("n", Vec::<String>::new()).is_err());
    assert!(TargetSpec::new("n", ["#nurse"]).is_err());
    assert!(TargetSpec::new("n", ["nurse!"]).is_err());
}

#[test]
fn filter_is_whole_token() {
    let target = TargetSpec::new("nurse", ["nurse", "nurses"]).unwrap();
    let corpus = [doc("the nurse smiled"), doc("a nursery rhyme"), doc("Nurses!")];
    let kept: Vec<_> = filter_documents(&corpus, &target).map(|d| d.text()).collect();
    assert_eq!(kept, ["the nurse smiled", "Nurses!"]);
    assert_eq!(filter_documents(&[], &target).count(), 0);
}

#[test]
fn direct_lookup_examples() {
    let lex = fixture_lexicon();
    let god = direct_lookup(&lex, &TargetSpec::new("god", ["god"]).unwrap());
    assert!(god[&Dimension::Warmth].unwrap() > 1.5);
    assert!(god[&Dimension::Competence].unwrap() > 0.33);
    let missing = direct_lookup(&lex, &TargetSpec::new("lgbtq", ["lgbtq"]).unwrap());
    assert!(missing.values().all(Option::is_none));
    // first surface term with a score for the dimension wins
    let mixed = direct_lookup(&lex, &TargetSpec::new("m", ["nobody", "strong", "good"]).unwrap());
    assert_eq!(mixed[&Dimension::Competence], Some(0.5));
    assert_eq!(mixed[&Dimension::Warmth], Some(0.2));
    assert_eq!(mixed[&Dimension::Sociability], Some(2.0));
}

#[test]
fn coterm_examples() {
    let s = score(&[doc("x good bad")], Dimension::Warmth, &[]);
    assert_eq!((s.score, s.n_high, s.n_low, s.n_tokens, s.n_docs), (0.0, 1, 1, 3, 1));
    assert_eq!(score(&[doc("x y z meh")], Dimension::Warmth, &[]).score, 0.0);
    assert_eq!(score(&[doc("good good god")], Dimension::Warmth, &[]).score, 1.0);
    assert_eq!(score(&[doc("bad bad")], Dimension::Warmth, &[]).score, -1.0);
}

#[test]
fn competence_uses_its_own_cutoff() {
    let s = score(&[doc("strong weak edge meh god")], Dimension::Competence, &[]);
    assert_eq!((s.n_high, s.n_low, s.n_tokens), (3, 1, 5));
    assert_eq!(s.score, 0.4);
}

#[test]
fn exclusion_applies() {
    let s = score(&[doc("god good x")], Dimension::Warmth, &["god"]);
    assert_eq!((s.n_tokens, s.n_high), (2, 1));
}

#[test]
fn covered_denominator() {
    let cfg = CountingConfig { denominator: Denominator::LexiconCovered, ..CountingConfig::default() };
    let lex = fixture_lexicon();
    let s = coterm_score("t", &[doc("x y good meh")], &lex, Dimension::Warmth, &HashSet::new(), &cfg).unwrap();
    assert_eq!((s.n_tokens, s.score), (2, 0.5));
}

#[test]
fn baseline_examples() {
    let lex = fixture_lexicon();
    let cfg = CountingConfig::default();
    assert_eq!(baseline(&[doc("good")], &lex, Dimension::Warmth, &cfg).unwrap().score, 1.0);
    let empty = baseline(&[], &lex, Dimension::Warmth, &cfg).unwrap();
    assert!(empty.degenerate);
    assert_eq!(empty.score, 0.0);
    let half = baseline(&[doc("good god"), doc("good bad")], &lex, Dimension::Warmth, &cfg).unwrap();
    assert_eq!((half.n_high, half.n_low, half.n_tokens, half.score), (3, 1, 4, 0.5));
}

#[test]
fn quadrant_examples() {
    assert_eq!(quadrant(0.6, 0.2, 0.5, 0.14), QuadrantLabel::HighWHighC);
    assert_eq!(quadrant(0.6, 0.2, 0.5001, 0.1370), QuadrantLabel::HighWHighC);
    assert_eq!(quadrant(0.5, 0.14, 0.5, 0.14), QuadrantLabel::HighWHighC);
    assert_eq!(quadrant(-1.0, -1.0, 0.0, 0.0), QuadrantLabel::LowWLowC);
    assert_eq!(quadrant(1.0, -1.0, 0.0, 0.0), QuadrantLabel::HighWLowC);
    assert_eq!(quadrant(-1.0, 1.0, 0.0, 0.0), QuadrantLabel::LowWHighC);
}

#[test]
fn stability_hand_counts() {
    let lex = fixture_lexicon();
    let target = TargetSpec::new("nurse", ["nurse"]).unwrap();
    let corpus = [
        doc_in("nurse good god x y", Some(2016), None),
        doc_in("nurse good bad x y", Some(2015), None),
        doc_in("nurse bad bad", None, None),
    ];
    let st = stability_by_group(&corpus, &lex, &target, GroupKey::Year, Dimension::Warmth, &CountingConfig::default(), 50)
        .unwrap();
    let rows: Vec<_> = st.rows.iter().map(|r| (r.group.clone(), r.score.score, r.low_confidence)).collect();
    assert_eq!(rows, [(GroupValue::Year(2015), 0.0, true), (GroupValue::Year(2016), 0.5, true)]);
    assert_eq!(st.spread, 0.5);
}

#[test]
fn stability_identical_and_single_groups() {
    let lex = fixture_lexicon();
    let target = TargetSpec::new("t", ["nurse"]).unwrap();
    let cfg = CountingConfig::default();
    let same: Vec<_> = [2019, 2020, 2021].iter().map(|&y| doc_in("nurse good meh", Some(y), None)).collect();
    assert_eq!(stability_by_group(&same, &lex, &target, GroupKey::Year, Dimension::Warmth, &cfg, 1).unwrap().spread, 0.0);
    let one = [doc_in("nurse good", None, Some("ca")), doc_in("nurse bad x", None, Some("ca"))];
    let st = stability_by_group(&one, &lex, &target, GroupKey::Region, Dimension::Warmth, &cfg, 2).unwrap();
    assert_eq!(st.rows.len(), 1);
    assert!(!st.rows[0].low_confidence);
    assert_eq!(st.spread, 0.0);
    assert!(matches!(
        stability_by_group(&one, &lex, &target, GroupKey::Year, Dimension::Warmth, &cfg, 1),
        Err(crate::Error::Data(_))
    ));
}

#[test]
fn ingroup_outgroup_cells() {
    let lex = fixture_lexicon();
    let us = TargetSpec::new("america", ["america"]).unwrap();
    let ca = TargetSpec::new("canada", ["canada"]).unwrap();
    let dims = [Dimension::Warmth];
    let cfg = CountingConfig::default();

    let symmetric: Vec<_> = ["us", "ca"]
        .iter()
        .flat_map(|r| [doc_in("america good x", None, Some(r)), doc_in("canada good x", None, Some(r))])
        .collect();
    let m = ingroup_outgroup(&symmetric, &lex, ["us", "ca"], [&us, &ca], &dims, &cfg).unwrap();
    let first = m.cells[0].score.score;
    assert!(m.cells.iter().all(|c| c.score.score == first));

    let skewed = [
        doc_in("canada bad bad", None, Some("us")),
        doc_in("america good", None, Some("us")),
        doc_in("america x", None, Some("ca")),
    ];
    let m = ingroup_outgroup(&skewed, &lex, ["us", "ca"], [&us, &ca], &dims, &cfg).unwrap();
    assert_eq!(m.cell("us", "canada", Dimension::Warmth).unwrap().score, -1.0);
    assert_eq!(m.cell("us", "america", Dimension::Warmth).unwrap().score, 1.0);
    assert!(m.cell("ca", "canada", Dimension::Warmth).unwrap().degenerate);
    assert_eq!(m.baselines.len(), 2);
}

#[test]
fn ingroup_outgroup_matches_brute_force() {
    let lex = fixture_lexicon();
    let us = TargetSpec::new("america", ["america", "american"]).unwrap();
    let ca = TargetSpec::new("canada", ["canada", "canadian"]).unwrap();
    let corpus = [
        doc_in("american good bad meh", None, Some("us")),
        doc_in("canada weak strong good", None, Some("us")),
        doc_in("canadian god x", None, Some("us")),
        doc_in("america canada bad", None, Some("us")),
        doc_in("canada good good", None, Some("ca")),
        doc_in("america bad weak", None, Some("ca")),
        doc_in("american edge y z", None, Some("ca")),
        doc_in("hello good", None, Some("ca")),
    ];
    let dims = [Dimension::Warmth, Dimension::Competence];
    let cfg = CountingConfig::default();
    let m = ingroup_outgroup(&corpus, &lex, ["us", "ca"], [&us, &ca], &dims, &cfg).unwrap();
    for region in ["us", "ca"] {
        for target in [&us, &ca] {
            let docs: Vec<Document> = corpus
                .iter()
                .filter(|d| d.region.as_deref() == Some(region))
                .filter(|d| d.tokens().iter().any(|t| target.surface_terms().contains(t)))
                .cloned()
                .collect();
            for dim in dims {
                let (total, high, low) = naive_counts(&docs, &lex, dim, target.surface_terms());
                let cell = m.cell(region, &target.name, dim).unwrap();
                assert_eq!((cell.n_tokens, cell.n_high, cell.n_low, cell.n_docs), (total, high, low, docs.len()));
            }
        }
    }
}

#[test]
fn analyze_target_report() {
    let lex = fixture_lexicon();
    let corpus = [
        doc_in("nurse good strong", Some(2020), None),
        doc_in("nurse bad x", Some(2021), None),
        doc_in("meh meh meh good", Some(2021), None),
    ];
    let target = TargetSpec::new("nurse", ["nurse"]).unwrap();
    let cfg = CountingConfig::default();
    let dims = [Dimension::Warmth, Dimension::Competence];
    let base = baselines(&corpus, &lex, &dims, &cfg).unwrap();
    let rep = analyze_target(&corpus, &lex, &target, &dims, Some(&base), &cfg, Some((GroupKey::Year, 1))).unwrap();
    assert_eq!(rep.coterm[&Dimension::Warmth].score, 0.0);
    assert_eq!(rep.coterm[&Dimension::Competence].score, 0.25);
    assert_eq!(base.get(Dimension::Warmth).unwrap().score, 0.1);
    assert_eq!(rep.quadrant, Some(QuadrantLabel::LowWHighC));
    assert_eq!(rep.by_group.len(), 2);
    assert_eq!(rep.group_spread[&Dimension::Warmth], 1.0);
    assert_eq!(rep.direct[&Dimension::Warmth], None);

    let absent = TargetSpec::new("ghost", ["ghost"]).unwrap();
    let rep = analyze_target(&corpus, &lex, &absent, &dims, Some(&base), &cfg, None).unwrap();
    assert!(rep.coterm.values().all(|c| c.degenerate && c.n_docs == 0));
    assert_eq!(rep.quadrant, None);
}

#[test]
fn single_precision_scores() {
    let lex32 = Lexicon::<f32>::from_entries([LexiconEntry::new("good", Some(2.0f32), None, None).unwrap()], "").unwrap();
    let s = coterm_score("t", &[doc("good x x")], &lex32, Dimension::Warmth, &HashSet::new(), &CountingConfig::default())
        .unwrap();
    assert_eq!(s.score, 1.0f32 / 3.0);
}

const VOCAB: &[&str] = &["good", "bad", "meh", "strong", "weak", "god", "edge", "x", "y", "nurse"];

fn arb_corpus() -> impl Strategy<Value = Vec<Document>> {
    let doc = proptest::collection::vec(proptest::sample::select(VOCAB), 0..12).prop_map(|toks| doc(&toks.join(" ")));
    proptest::collection::vec(doc, 0..9)
}

proptest! {
    #[test]
    fn engine_equals_naive_counter(corpus in arb_corpus(), exclude_nurse in any::<bool>()) {
        let lex = fixture_lexicon();
        let exclude: Vec<String> = if exclude_nurse { vec!["nurse".into()] } else { vec![] };
        let set: HashSet<String> = exclude.iter().cloned().collect();
        for dim in Dimension::ALL {
            let s = coterm_score("t", &corpus, &lex, dim, &set, &CountingConfig::default()).unwrap();
            let (total, high, low) = naive_counts(&corpus, &lex, dim, &exclude);
            prop_assert_eq!((s.n_tokens, s.n_high, s.n_low), (total, high, low));
            if total > 0 {
                prop_assert_eq!(s.score, (high as f64 - low as f64) / total as f64);
            }
            prop_assert!((-1.0..=1.0).contains(&s.score));
        }
    }

    #[test]
    fn duplication_invariance(corpus in arb_corpus()) {
        let doubled: Vec<Document> = corpus.iter().chain(&corpus).cloned().collect();
        for dim in Dimension::ALL {
            prop_assert_eq!(score(&corpus, dim, &[]).score, score(&doubled, dim, &[]).score);
        }
    }

    #[test]
    fn additivity(corpus in arb_corpus()) {
        let lex = fixture_lexicon();
        let idx = PolarityIndex::new(&lex, Dimension::Warmth, &Default::default()).unwrap();
        let none = HashSet::new();
        let whole = idx.count(&corpus, &none, Denominator::AllTokens);
        let summed = corpus
            .iter()
            .map(|d| idx.count_document(d, &none, Denominator::AllTokens))
            .fold(CotermCounts::default(), |a, b| a + b);
        prop_assert_eq!(whole, summed);
    }

    #[test]
    fn self_exclusion_invariance(corpus in arb_corpus(), extra in 1usize..4) {
        let target = TargetSpec::new("nurse", ["nurse"]).unwrap();
        let lex = fixture_lexicon();
        let cfg = CountingConfig::default();
        let padded: Vec<Document> = corpus
            .iter()
            .map(|d| doc(&format!("{} {}", d.text(), vec!["nurse"; extra].join(" "))))
            .collect();
        let mentioned: Vec<Document> = corpus
            .iter()
            .map(|d| doc(&format!("{} nurse", d.text())))
            .collect();
        let a = analyze_target(&mentioned, &lex, &target, &Dimension::ALL, None, &cfg, None).unwrap();
        let b = analyze_target(&padded, &lex, &target, &Dimension::ALL, None, &cfg, None).unwrap();
        prop_assert_eq!(a.coterm, b.coterm);
    }
}
