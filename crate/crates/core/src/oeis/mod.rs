//! Scanning an OEIS "stripped" dump for m-convolutive sequences.
//!
//! The first listed term is read as `a_0`. Short sequences and sequences
//! that are eventually zero within their listed prefix satisfy the condition
//! for uninteresting reasons, so they are reported but not counted as hits.

mod fit;
mod parse;
mod scan;

pub use fit::{fit_eta_product, DEFAULT_MAX_ABS_EXP, DEFAULT_MAX_LEVEL};
pub use parse::{parse_stripped, read_corpus, Corpus, CorpusEntry, ParseWarning};
pub use scan::{
    full_report, scan, FilterReason, FitOptions, Report, ScanOptions, ScanRecord, Summary,
    DEFAULT_MIN_LEN,
};
