//! (Multi)FASTA reader.

use std::io::BufRead;

use overabundant::SENTINEL;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    /// Header line without the leading `>`.
    pub header: String,
    /// Uppercased residues with line breaks and whitespace removed.
    pub sequence: String,
}

#[derive(Debug, Error)]
pub enum FastaError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_error(line: usize, msg: impl Into<String>) -> FastaError {
    FastaError::Parse { line, msg: msg.into() }
}

/// Reads every record in file order. Letters are uppercased; any other
/// non-whitespace symbol except the reserved sentinel is kept as is.
pub fn parse_fasta<R: BufRead>(reader: R) -> Result<Vec<FastaRecord>, FastaError> {
    let mut records = Vec::new();
    // Current record and the line its header was on.
    let mut current: Option<(FastaRecord, usize)> = None;

    let finish = |rec: Option<(FastaRecord, usize)>, out: &mut Vec<FastaRecord>| match rec {
        Some((r, line)) if r.sequence.is_empty() => {
            Err(parse_error(line, format!("record {:?} has an empty sequence", r.header)))
        }
        Some((r, _)) => {
            out.push(r);
            Ok(())
        }
        None => Ok(()),
    };

    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        if let Some(header) = line.strip_prefix('>') {
            finish(current.take(), &mut records)?;
            let header = header.trim().to_string();
            current = Some((FastaRecord { header, sequence: String::new() }, lineno));
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let Some((rec, _)) = current.as_mut() else {
            return Err(parse_error(lineno, "sequence data before the first '>' header"));
        };
        for c in line.chars().filter(|c| !c.is_whitespace()) {
            if c == SENTINEL {
                return Err(parse_error(lineno, format!("reserved symbol {SENTINEL:?} in sequence")));
            }
            rec.sequence.push(c.to_ascii_uppercase());
        }
    }
    finish(current, &mut records)?;
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Vec<FastaRecord>, FastaError> {
        parse_fasta(s.as_bytes())
    }

    fn line_of(e: FastaError) -> usize {
        match e {
            FastaError::Parse { line, .. } => line,
            FastaError::Io(e) => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn folds_and_uppercases() {
        let r = parse(">s1\nba\nab\n").unwrap();
        assert_eq!(r, [FastaRecord { header: "s1".into(), sequence: "BAAB".into() }]);
    }

    #[test]
    fn multi_record() {
        let r = parse(">a\nAC\n>b\nGT\n").unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!((r[1].header.as_str(), r[1].sequence.as_str()), ("b", "GT"));
    }

    #[test]
    fn ambiguity_codes_and_blank_lines() {
        let r = parse(">x desc\r\nacgN\n\n  ryk \n").unwrap();
        assert_eq!(r[0].header, "x desc");
        assert_eq!(r[0].sequence, "ACGNRYK");
    }

    #[test]
    fn missing_header() {
        assert_eq!(line_of(parse("ACGT\n").unwrap_err()), 1);
        assert_eq!(line_of(parse("\n\nACGT\n").unwrap_err()), 3);
    }

    #[test]
    fn empty_sequence() {
        assert_eq!(line_of(parse(">a\n>b\nAC\n").unwrap_err()), 1);
        assert_eq!(line_of(parse(">a\nAC\n>b\n").unwrap_err()), 3);
    }

    #[test]
    fn sentinel_rejected() {
        assert_eq!(line_of(parse(">a\nAC\nA$C\n").unwrap_err()), 3);
    }

    #[test]
    fn empty_input() {
        assert!(parse("").unwrap().is_empty());
    }
}
