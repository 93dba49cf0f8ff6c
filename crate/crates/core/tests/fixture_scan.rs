use std::collections::BTreeSet;
use std::path::PathBuf;

use convolutive::known::known_convolutive;
use convolutive::oeis::{full_report, read_corpus, scan, CorpusEntry, FilterReason, ScanOptions};
use convolutive::series::is_m_convolutive;
use convolutive::TruncatedSeries;

fn fixture() -> Vec<CorpusEntry> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/stripped_fixture.txt");
    let corpus = read_corpus(path).unwrap();
    assert!(corpus.warnings.is_empty());
    assert_eq!(corpus.entries.len(), 30);
    corpus.entries
}

#[test]
fn hits_are_exactly_the_table() {
    let report = full_report(&fixture(), &ScanOptions::default()).unwrap();
    let hits: BTreeSet<(u32, u32)> = report.hits().map(|r| (r.a_number, r.m)).collect();
    let want: BTreeSet<(u32, u32)> = known_convolutive().iter().map(|k| (k.a_number, k.m)).collect();
    assert_eq!(hits, want);
    assert_eq!(report.summary.hits[&2], 5);
    assert_eq!(report.summary.hits[&3], 2);
    for m in 4..=6 {
        assert_eq!(report.summary.hits[&m], 0);
    }
    for k in known_convolutive() {
        let rec = report.hits().find(|r| r.a_number == k.a_number).unwrap();
        assert_eq!(rec.fitted_eta.as_ref(), Some(&k.spec), "{}", k.label());
        assert_eq!(rec.primitive, Some(true));
    }
}

#[test]
fn false_positives_are_filtered_not_counted() {
    let report = full_report(&fixture(), &ScanOptions::default()).unwrap();
    let filtered: Vec<_> = report.records.iter().filter(|r| !r.is_hit()).collect();
    assert!(!filtered.is_empty());
    // A000007 = 1, 0, 0, ... holds for every m
    assert!(filtered
        .iter()
        .all(|r| r.a_number == 7 && r.filtered_reason == Some(FilterReason::TrivialPrefix)));
    assert_eq!(report.summary.filtered_hits[&4], 1);
}

#[test]
fn reports_are_byte_identical() {
    let corpus = fixture();
    let opts = ScanOptions::default();
    let a = full_report(&corpus, &opts).unwrap();
    let mut reversed = corpus.clone();
    reversed.reverse();
    let b = full_report(&reversed, &opts).unwrap();
    assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
    assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
}

#[test]
fn verdicts_agree_with_series_core() {
    let corpus = fixture();
    let recs = scan(&corpus, &ScanOptions::default()).unwrap();
    for r in recs.iter().filter(|r| r.terms_tested > 0) {
        let entry = corpus.iter().find(|e| e.a_number == r.a_number).unwrap();
        let direct = is_m_convolutive(&TruncatedSeries::new(entry.terms.clone()), r.m).unwrap();
        assert_eq!(r.verdict(), direct, "{} m={}", r.label(), r.m);
    }
}

#[test]
fn duals_of_cubic_hits_also_hit() {
    let corpus = fixture();
    let opts = ScanOptions { m_values: vec![3], ..Default::default() };
    let hits: Vec<u32> = scan(&corpus, &opts)
        .unwrap()
        .into_iter()
        .filter(|r| r.is_hit())
        .map(|r| r.a_number)
        .collect();
    assert_eq!(hits, [98151, 385520]);
    let duals: Vec<CorpusEntry> = corpus
        .iter()
        .filter(|e| hits.contains(&e.a_number))
        .map(|e| CorpusEntry {
            a_number: e.a_number,
            terms: TruncatedSeries::new(e.terms.clone()).dual().into_coeffs(),
        })
        .collect();
    let dual_recs = scan(&duals, &opts).unwrap();
    assert!(dual_recs.iter().all(|r| r.is_hit()));
}
