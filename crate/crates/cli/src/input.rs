//! Sequence ingestion: FASTA and line-oriented files.

use std::path::Path;

/// One named input sequence. The data may be empty; the id never is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceRecord {
    pub id: String,
    pub data: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Fasta,
    Lines,
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: sequence data before the first FASTA header")]
    DataBeforeHeader { path: String, line: usize },
    #[error("{path}:{line}: empty FASTA header")]
    EmptyHeader { path: String, line: usize },
}

/// Parse `path` into records. `normalize_case` maps ASCII `a`–`z` to
/// `A`–`Z` in the sequence data; everything else is preserved byte for
/// byte.
pub fn parse_input(
    path: &Path,
    format: InputFormat,
    normalize_case: bool,
) -> Result<Vec<SequenceRecord>, InputError> {
    let bytes = std::fs::read(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut records = match format {
        InputFormat::Fasta => parse_fasta(path, &bytes)?,
        InputFormat::Lines => parse_lines(&bytes),
    };
    if normalize_case {
        for record in &mut records {
            record.data.make_ascii_uppercase();
        }
    }
    Ok(records)
}

/// One record per `>` header; sequence lines are concatenated with all
/// whitespace stripped. Blank lines are skipped anywhere.
fn parse_fasta(path: &Path, bytes: &[u8]) -> Result<Vec<SequenceRecord>, InputError> {
    let mut records: Vec<SequenceRecord> = Vec::new();
    for (number, line) in physical_lines(bytes) {
        if line.is_empty() {
            continue;
        }
        if line[0] == b'>' {
            let id = String::from_utf8_lossy(&line[1..]).trim().to_string();
            if id.is_empty() {
                return Err(InputError::EmptyHeader {
                    path: path.display().to_string(),
                    line: number,
                });
            }
            records.push(SequenceRecord { id, data: Vec::new() });
        } else {
            match records.last_mut() {
                Some(record) => record
                    .data
                    .extend(line.iter().copied().filter(|b| !b.is_ascii_whitespace())),
                None => {
                    return Err(InputError::DataBeforeHeader {
                        path: path.display().to_string(),
                        line: number,
                    })
                }
            }
        }
    }
    Ok(records)
}

/// One record per nonempty line, named `line-<n>` by physical 1-based line
/// number. Bytes are preserved as written.
fn parse_lines(bytes: &[u8]) -> Vec<SequenceRecord> {
    physical_lines(bytes)
        .filter(|(_, line)| !line.is_empty())
        .map(|(number, line)| SequenceRecord {
            id: format!("line-{number}"),
            data: line.to_vec(),
        })
        .collect()
}

/// Lines by `\n`, numbered from 1, with any trailing `\r` removed.
fn physical_lines(bytes: &[u8]) -> impl Iterator<Item = (usize, &[u8])> {
    bytes
        .split(|&b| b == b'\n')
        .enumerate()
        .map(|(i, line)| (i + 1, line.strip_suffix(b"\r").unwrap_or(line)))
}
