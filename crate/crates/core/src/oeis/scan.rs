use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fit::{fit_eta_product, DEFAULT_MAX_ABS_EXP, DEFAULT_MAX_LEVEL};
use super::parse::CorpusEntry;
use crate::series::{is_m_convolutive, ConvolutivityVerdict, EtaProductSpec, TruncatedSeries};
use crate::{Error, Result};

pub const DEFAULT_MIN_LEN: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FilterReason {
    TooShort,
    TrivialPrefix,
}

impl FilterReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            FilterReason::TooShort => "too-short",
            FilterReason::TrivialPrefix => "trivial-prefix",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FitOptions {
    pub max_level: u32,
    pub max_abs_exp: u32,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            max_level: DEFAULT_MAX_LEVEL,
            max_abs_exp: DEFAULT_MAX_ABS_EXP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub m_values: Vec<u32>,
    pub min_len: usize,
    /// Fit eta-products to unfiltered hits.
    pub fit: Option<FitOptions>,
    /// Retry a failing sequence with `a_0 = 1` prepended.
    pub prepend_one: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            m_values: (2..=6).collect(),
            min_len: DEFAULT_MIN_LEN,
            fit: Some(FitOptions::default()),
            prepend_one: false,
        }
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// The outcome of testing one sequence for one `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub a_number: u32,
    pub m: u32,
    pub terms_tested: usize,
    pub holds: bool,
    pub first_violation: Option<usize>,
    pub filtered_reason: Option<FilterReason>,
    pub fitted_eta: Option<EtaProductSpec>,
    pub primitive: Option<bool>,
    /// The verdict refers to the sequence with `a_0 = 1` prepended.
    #[serde(default, skip_serializing_if = "is_false")]
    pub offset_shifted: bool,
}

impl ScanRecord {
    /// Holds and survives the false-positive filters.
    pub fn is_hit(&self) -> bool {
        self.holds && self.filtered_reason.is_none()
    }

    pub fn label(&self) -> String {
        format!("A{:06}", self.a_number)
    }

    pub fn verdict(&self) -> ConvolutivityVerdict {
        ConvolutivityVerdict {
            m: self.m,
            terms_testable: self.terms_tested,
            holds: self.holds,
            first_violation: self.first_violation,
        }
    }
}

/// Eventually zero inside the listed prefix: nothing nonzero in the second half.
fn trivial_prefix(terms: &[BigInt]) -> bool {
    match terms.iter().rposition(|t| !t.is_zero()) {
        None => true,
        Some(last) => last < terms.len() / 2,
    }
}

fn verdict_for(terms: &[BigInt], m: u32) -> Option<ConvolutivityVerdict> {
    if terms.len() <= m as usize {
        return None;
    }
    is_m_convolutive(&TruncatedSeries::new(terms.to_vec()), m).ok()
}

fn fit_terms(terms: &[BigInt], fit: FitOptions) -> Option<EtaProductSpec> {
    if !terms[0].is_one() {
        return None;
    }
    // keep at least half of the terms as a check on the fitted exponents
    let level = fit.max_level.min((terms.len() / 2) as u32);
    if level == 0 {
        return None;
    }
    fit_eta_product(terms, level, fit.max_abs_exp).ok().flatten()
}

fn scan_entry(entry: &CorpusEntry, m: u32, opts: &ScanOptions) -> ScanRecord {
    let terms = &entry.terms;
    let filtered_reason = if terms.len() < opts.min_len {
        Some(FilterReason::TooShort)
    } else if trivial_prefix(terms) {
        Some(FilterReason::TrivialPrefix)
    } else {
        None
    };
    let mut verdict = verdict_for(terms, m);
    let mut offset_shifted = false;
    let mut tested = terms.clone();
    if opts.prepend_one && !verdict.as_ref().is_some_and(|v| v.holds) {
        let mut shifted = Vec::with_capacity(terms.len() + 1);
        shifted.push(BigInt::one());
        shifted.extend(terms.iter().cloned());
        if let Some(v) = verdict_for(&shifted, m).filter(|v| v.holds) {
            verdict = Some(v);
            offset_shifted = true;
            tested = shifted;
        }
    }
    let (terms_tested, holds, first_violation) = match &verdict {
        Some(v) => (v.terms_testable, v.holds, v.first_violation),
        None => (0, false, None),
    };
    let fitted_eta = match opts.fit {
        Some(fit) if holds && filtered_reason.is_none() => fit_terms(&tested, fit),
        _ => None,
    };
    ScanRecord {
        a_number: entry.a_number,
        m,
        terms_tested,
        holds,
        first_violation,
        filtered_reason,
        primitive: fitted_eta.as_ref().map(EtaProductSpec::is_primitive),
        fitted_eta,
        offset_shifted,
    }
}

fn check_options(opts: &ScanOptions) -> Result<()> {
    for &m in &opts.m_values {
        if !(2..=6).contains(&m) {
            return Err(Error::InvalidArgument(format!("m = {m} is outside 2..=6")));
        }
        if opts.min_len < m as usize + 1 {
            return Err(Error::InvalidArgument(format!(
                "min_len {} is below m + 1 = {}",
                opts.min_len,
                m + 1
            )));
        }
    }
    Ok(())
}

/// One record per `(entry, m)`, sorted by A-number then `m`.
pub fn scan(corpus: &[CorpusEntry], opts: &ScanOptions) -> Result<Vec<ScanRecord>> {
    check_options(opts)?;
    let mut records: Vec<ScanRecord> = corpus
        .par_iter()
        .flat_map_iter(|e| opts.m_values.iter().map(move |&m| scan_entry(e, m, opts)))
        .collect();
    records.sort_by_key(|r| (r.a_number, r.m));
    Ok(records)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub sequences: usize,
    pub m_values: Vec<u32>,
    pub min_len: usize,
    /// Unfiltered hits per `m`.
    pub hits: BTreeMap<u32, usize>,
    /// Sequences that satisfy the condition but were filtered, per `m`.
    pub filtered_hits: BTreeMap<u32, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    /// Every sequence that satisfies the condition, filtered ones included
    /// with their reason.
    pub records: Vec<ScanRecord>,
    pub summary: Summary,
}

const CSV_HEADER: [&str; 9] = [
    "a_number",
    "m",
    "terms_tested",
    "holds",
    "first_violation",
    "filtered_reason",
    "fitted_eta",
    "primitive",
    "offset_shifted",
];

impl Report {
    pub fn hits(&self) -> impl Iterator<Item = &ScanRecord> {
        self.records.iter().filter(|r| r.is_hit())
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    /// Same columns as the JSON records; `fitted_eta` uses the
    /// `1^-4 2^6 4^-2` grammar.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER)?;
        let opt = |x: Option<String>| x.unwrap_or_default();
        for r in &self.records {
            w.write_record([
                format!("A{:06}", r.a_number),
                r.m.to_string(),
                r.terms_tested.to_string(),
                r.holds.to_string(),
                opt(r.first_violation.map(|v| v.to_string())),
                opt(r.filtered_reason.map(|f| f.as_str().to_string())),
                opt(r.fitted_eta.as_ref().map(|s| s.to_string())),
                opt(r.primitive.map(|p| p.to_string())),
                r.offset_shifted.to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Scans the corpus and keeps the records that satisfy the condition.
pub fn full_report(corpus: &[CorpusEntry], opts: &ScanOptions) -> Result<Report> {
    let records: Vec<ScanRecord> = scan(corpus, opts)?.into_iter().filter(|r| r.holds).collect();
    let mut hits: BTreeMap<u32, usize> = opts.m_values.iter().map(|&m| (m, 0)).collect();
    let mut filtered_hits = hits.clone();
    for r in &records {
        let bucket = if r.is_hit() { &mut hits } else { &mut filtered_hits };
        *bucket.entry(r.m).or_default() += 1;
    }
    Ok(Report {
        summary: Summary {
            sequences: corpus.len(),
            m_values: opts.m_values.clone(),
            min_len: opts.min_len,
            hits,
            filtered_hits,
        },
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(a: u32, terms: &[i64]) -> CorpusEntry {
        CorpusEntry {
            a_number: a,
            terms: terms.iter().map(|&t| BigInt::from(t)).collect(),
        }
    }

    fn from_spec(a: u32, pairs: &[(u32, i32)], n: usize) -> CorpusEntry {
        CorpusEntry {
            a_number: a,
            terms: EtaProductSpec::from_pairs(pairs).expand(n - 1).into_coeffs(),
        }
    }

    fn fib(n: usize) -> Vec<i64> {
        let mut v = vec![0, 1];
        while v.len() < n {
            v.push(v[v.len() - 1] + v[v.len() - 2]);
        }
        v
    }

    #[test]
    fn pdo_is_a_hit_with_its_eta_product() {
        let pdo = from_spec(102186, &[(1, -1), (3, -1), (4, 1), (6, 2), (12, -1)], 40);
        let opts = ScanOptions { m_values: vec![2, 3], ..Default::default() };
        let recs = scan(&[pdo], &opts).unwrap();
        assert!(recs[0].is_hit());
        assert_eq!(recs[0].terms_tested, 20);
        assert_eq!(recs[0].fitted_eta.as_ref().unwrap().to_string(), "1^-1 3^-1 4^1 6^2 12^-1");
        assert_eq!(recs[0].primitive, Some(true));
        assert!(!recs[1].holds);
    }

    #[test]
    fn fibonacci_never_hits() {
        let recs = scan(&[entry(45, &fib(40))], &ScanOptions::default()).unwrap();
        assert_eq!(recs.len(), 5);
        assert!(recs.iter().all(|r| !r.holds && r.first_violation.is_some()));
    }

    #[test]
    fn filters() {
        let opts = ScanOptions { m_values: vec![2], ..Default::default() };
        let short = scan(&[entry(1, &[1, 0, 0])], &opts).unwrap();
        assert_eq!(short[0].filtered_reason, Some(FilterReason::TooShort));
        assert!(short[0].holds && !short[0].is_hit());
        let mut delta = vec![0i64; 30];
        delta[0] = 1;
        let trivial = scan(&[entry(7, &delta)], &opts).unwrap();
        assert_eq!(trivial[0].filtered_reason, Some(FilterReason::TrivialPrefix));
        assert!(trivial[0].fitted_eta.is_none());
        let tiny = scan(&[entry(2, &[1, 1])], &ScanOptions { m_values: vec![2], min_len: 3, ..Default::default() }).unwrap();
        assert_eq!(tiny[0].terms_tested, 0);
        assert!(!tiny[0].holds);
    }

    #[test]
    fn prepend_one_retry() {
        let full = from_spec(7096, &[(1, -4), (2, 6), (4, -2)], 41).terms;
        let e = CorpusEntry { a_number: 7096, terms: full[1..].to_vec() };
        let opts = ScanOptions { m_values: vec![2], ..Default::default() };
        assert!(!scan(std::slice::from_ref(&e), &opts).unwrap()[0].holds);
        let recs = scan(&[e], &ScanOptions { prepend_one: true, ..opts }).unwrap();
        assert!(recs[0].is_hit() && recs[0].offset_shifted);
        assert!(recs[0].fitted_eta.is_some());
    }

    #[test]
    fn options_are_validated() {
        let bad_m = ScanOptions { m_values: vec![7], ..Default::default() };
        assert!(scan(&[], &bad_m).is_err());
        let bad_len = ScanOptions { m_values: vec![3], min_len: 3, ..Default::default() };
        assert!(scan(&[], &bad_len).is_err());
    }

    #[test]
    fn empty_corpus_report() {
        let r = full_report(&[], &ScanOptions::default()).unwrap();
        assert!(r.records.is_empty());
        assert_eq!(r.summary.sequences, 0);
        assert!(r.summary.hits.values().all(|&c| c == 0));
        assert_eq!(r.to_csv().unwrap().lines().count(), 1);
    }

    #[test]
    fn json_schema_and_csv() {
        let corpus = [from_spec(7096, &[(1, -4), (2, 6), (4, -2)], 40), entry(45, &fib(40))];
        let r = full_report(&corpus, &ScanOptions::default()).unwrap();
        assert_eq!(r.hits().count(), 1);
        let v: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        let rec = &v["records"][0];
        for key in ["a_number", "m", "terms_tested", "holds", "first_violation", "filtered_reason", "fitted_eta", "primitive"] {
            assert!(rec.get(key).is_some(), "missing {key}");
        }
        assert!(rec.get("offset_shifted").is_none());
        assert_eq!(rec["fitted_eta"]["2"], 6);
        assert_eq!(v["summary"]["hits"]["2"], 1);
        let back: Report = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        let csv = r.to_csv().unwrap();
        assert!(csv.starts_with("a_number,m,terms_tested,holds,first_violation"));
        assert!(csv.contains("A007096,2,20,true,,,1^-4 2^6 4^-2,true,false"));
    }
}
