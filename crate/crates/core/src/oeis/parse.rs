use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use flate2::read::GzDecoder;
use num_bigint::BigInt;
use serde::Serialize;

use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub a_number: u32,
    pub terms: Vec<BigInt>,
}

impl CorpusEntry {
    pub fn label(&self) -> String {
        format!("A{:06}", self.a_number)
    }
}

/// A line that could not be used. Parsing carries on past it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParseWarning {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    pub warnings: Vec<ParseWarning>,
}

fn parse_line(line: &str) -> std::result::Result<CorpusEntry, String> {
    let (id, rest) = line
        .split_once(char::is_whitespace)
        .ok_or("expected `ANNNNNN ,t1,t2,...,`")?;
    let a_number: u32 = id
        .strip_prefix('A')
        .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| format!("bad A-number `{id}`"))?;
    let body = rest.trim().trim_matches(',');
    if body.is_empty() {
        return Err(format!("A{a_number:06} has no terms"));
    }
    let terms = body
        .split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigInt>().map_err(|_| format!("A{a_number:06}: `{t}` is not an integer"))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(CorpusEntry { a_number, terms })
}

/// Reads the OEIS "stripped" format: `#` comment lines, then one
/// `A000045 ,0,1,1,2,3,5,` line per sequence.
///
/// Malformed lines and repeated A-numbers become warnings; only I/O failure
/// is fatal.
pub fn parse_stripped(reader: impl BufRead) -> Result<Corpus> {
    let mut corpus = Corpus::default();
    let mut seen = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_line(line) {
            Ok(entry) if !seen.insert(entry.a_number) => corpus.warnings.push(ParseWarning {
                line: i + 1,
                message: format!("{} repeated; keeping the first occurrence", entry.label()),
            }),
            Ok(entry) => corpus.entries.push(entry),
            Err(message) => corpus.warnings.push(ParseWarning { line: i + 1, message }),
        }
    }
    Ok(corpus)
}

/// [`parse_stripped`] on a file, decompressing when the name ends in `.gz`.
pub fn read_corpus(path: impl AsRef<Path>) -> Result<Corpus> {
    let path = path.as_ref();
    let file = File::open(path)?;
    let reader: Box<dyn Read> = if path.extension().is_some_and(|e| e == "gz") {
        Box::new(GzDecoder::new(file))
    } else {
        Box::new(file)
    };
    parse_stripped(BufReader::new(reader))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Corpus {
        parse_stripped(text.as_bytes()).unwrap()
    }

    #[test]
    fn data_line() {
        let c = parse("# OEIS header\n# more\nA000045 ,0,1,1,2,3,5,\n");
        assert!(c.warnings.is_empty());
        assert_eq!(c.entries.len(), 1);
        assert_eq!(c.entries[0].a_number, 45);
        assert_eq!(c.entries[0].label(), "A000045");
        let want: Vec<BigInt> = [0, 1, 1, 2, 3, 5].into_iter().map(BigInt::from).collect();
        assert_eq!(c.entries[0].terms, want);
    }

    #[test]
    fn big_and_negative_terms() {
        let c = parse("A000001 ,-3,123456789012345678901234567890,\n");
        assert_eq!(c.entries[0].terms[0], BigInt::from(-3));
        assert_eq!(c.entries[0].terms[1].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn malformed_lines_warn() {
        let c = parse("A000010 ,1,x,3,\nB12 ,1,\nA000011\nA000012 ,,\nA000013 ,1,2,\n");
        assert_eq!(c.entries.len(), 1);
        assert_eq!(c.entries[0].a_number, 13);
        let lines: Vec<usize> = c.warnings.iter().map(|w| w.line).collect();
        assert_eq!(lines, [1, 2, 3, 4]);
        assert!(c.warnings[0].message.contains("`x`"));
    }

    #[test]
    fn duplicates_keep_first() {
        let c = parse("A000005 ,1,2,\nA000005 ,9,9,\n");
        assert_eq!(c.entries.len(), 1);
        assert_eq!(c.entries[0].terms[0], BigInt::from(1));
        assert_eq!(c.warnings.len(), 1);
    }

    #[test]
    fn gzip_input() {
        use flate2::write::GzEncoder;
        use std::io::Write;
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("stripped.gz");
        let mut enc = GzEncoder::new(File::create(&path).unwrap(), flate2::Compression::default());
        enc.write_all(b"# x\nA000027 ,1,2,3,\n").unwrap();
        enc.finish().unwrap();
        let c = read_corpus(&path).unwrap();
        assert_eq!(c.entries[0].a_number, 27);
        assert!(read_corpus(dir.path().join("missing")).is_err());
    }
}
