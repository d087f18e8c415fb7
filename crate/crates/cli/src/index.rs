//! Persisted reference machines.
//!
//! Layout, all integers little-endian:
//!
//! | offset | size | field |
//! |--------|------|-------|
//! | 0      | 4    | magic `TSF1` |
//! | 4      | 4    | format version (`u32`), currently 1 |
//! | 8      | 4    | alphabet length `A` (`u32`) |
//! | 12     | `A`  | alphabet symbols, ascending bytes |
//! | 12+A   | 8    | state count `N` (`u64`) |
//!
//! followed by `N` state blocks (state 0 is the initial state):
//!
//! | size | field |
//! |------|-------|
//! | 8    | longest factor length of the state (`u64`) |
//! | 8    | suffix link (`i64`, −1 = none; none only for state 0) |
//! | 8    | optimized link (`i64`, −1 = none) |
//! | 4    | transition count `K` (`u32`) |
//! | 5·K  | transitions: symbol (`u8`) then target state (`u64`), ascending by symbol |
//!
//! The file ends exactly after the last state block; trailing bytes are
//! rejected. Files are written to a temporary sibling and renamed into
//! place, so an existing index is replaced atomically.

use std::path::Path;

use tsf_core::{MachineTables, ReferenceMachine, StateTable, TableError};

pub const MAGIC: [u8; 4] = *b"TSF1";
pub const VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum IndexError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: not an index file (bad magic)")]
    BadMagic { path: String },
    #[error("{path}: index version mismatch: expected {expected}, found {found}")]
    VersionMismatch {
        path: String,
        expected: u32,
        found: u32,
    },
    #[error("{path}: truncated or corrupt index ({reason})")]
    Corrupt { path: String, reason: String },
    #[error("{path}: invalid machine: {source}")]
    InvalidMachine {
        path: String,
        #[source]
        source: TableError,
    },
}

pub fn write_index(path: &Path, machine: &ReferenceMachine) -> Result<(), IndexError> {
    let bytes = encode(&machine.to_tables());
    let io_err = |source| IndexError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut temp = path.as_os_str().to_owned();
    temp.push(".tmp");
    let temp = Path::new(&temp);
    std::fs::write(temp, &bytes).map_err(io_err)?;
    std::fs::rename(temp, path).map_err(io_err)
}

pub fn read_index(path: &Path) -> Result<ReferenceMachine, IndexError> {
    let bytes = std::fs::read(path).map_err(|source| IndexError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let tables = decode(path, &bytes)?;
    ReferenceMachine::from_tables(tables).map_err(|source| IndexError::InvalidMachine {
        path: path.display().to_string(),
        source,
    })
}

fn encode(tables: &MachineTables) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(tables.alphabet.len() as u32).to_le_bytes());
    out.extend_from_slice(&tables.alphabet);
    out.extend_from_slice(&(tables.states.len() as u64).to_le_bytes());
    for state in &tables.states {
        out.extend_from_slice(&(state.len as u64).to_le_bytes());
        out.extend_from_slice(&encode_link(state.link));
        out.extend_from_slice(&encode_link(state.opt_link));
        out.extend_from_slice(&(state.transitions.len() as u32).to_le_bytes());
        for &(symbol, target) in &state.transitions {
            out.push(symbol);
            out.extend_from_slice(&(target as u64).to_le_bytes());
        }
    }
    out
}

fn encode_link(link: Option<usize>) -> [u8; 8] {
    match link {
        Some(q) => (q as i64).to_le_bytes(),
        None => (-1i64).to_le_bytes(),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Option<&'a [u8]> {
        let chunk = self.bytes.get(self.at..self.at + n)?;
        self.at += n;
        Some(chunk)
    }

    fn u32(&mut self) -> Option<u32> {
        self.take(4).map(|b| u32::from_le_bytes(b.try_into().unwrap()))
    }

    fn u64(&mut self) -> Option<u64> {
        self.take(8).map(|b| u64::from_le_bytes(b.try_into().unwrap()))
    }

    fn i64(&mut self) -> Option<i64> {
        self.take(8).map(|b| i64::from_le_bytes(b.try_into().unwrap()))
    }
}

fn decode(path: &Path, bytes: &[u8]) -> Result<MachineTables, IndexError> {
    let corrupt = |reason: &str| IndexError::Corrupt {
        path: path.display().to_string(),
        reason: reason.to_string(),
    };
    let mut cursor = Cursor { bytes, at: 0 };

    let magic = cursor.take(4).ok_or_else(|| corrupt("missing magic"))?;
    if magic != MAGIC {
        return Err(IndexError::BadMagic {
            path: path.display().to_string(),
        });
    }
    let version = cursor.u32().ok_or_else(|| corrupt("missing version"))?;
    if version != VERSION {
        return Err(IndexError::VersionMismatch {
            path: path.display().to_string(),
            expected: VERSION,
            found: version,
        });
    }

    let alphabet_len = cursor.u32().ok_or_else(|| corrupt("missing alphabet length"))? as usize;
    let alphabet = cursor
        .take(alphabet_len)
        .ok_or_else(|| corrupt("alphabet cut short"))?
        .to_vec();
    let state_count = cursor.u64().ok_or_else(|| corrupt("missing state count"))? as usize;

    let decode_link = |raw: i64, what: &str| -> Result<Option<usize>, IndexError> {
        match raw {
            -1 => Ok(None),
            q if q >= 0 && (q as usize) < state_count => Ok(Some(q as usize)),
            _ => Err(corrupt(&format!("{what} out of range"))),
        }
    };

    let mut states = Vec::with_capacity(state_count.min(1 << 20));
    for _ in 0..state_count {
        let len = cursor.u64().ok_or_else(|| corrupt("state cut short"))? as usize;
        let link = decode_link(cursor.i64().ok_or_else(|| corrupt("state cut short"))?, "suffix link")?;
        let opt_link = decode_link(
            cursor.i64().ok_or_else(|| corrupt("state cut short"))?,
            "optimized link",
        )?;
        let transition_count = cursor.u32().ok_or_else(|| corrupt("state cut short"))? as usize;
        let mut transitions = Vec::with_capacity(transition_count.min(1 << 16));
        for _ in 0..transition_count {
            let symbol = cursor.take(1).ok_or_else(|| corrupt("transition cut short"))?[0];
            let target = cursor.u64().ok_or_else(|| corrupt("transition cut short"))? as usize;
            transitions.push((symbol, target));
        }
        states.push(StateTable {
            len,
            link,
            opt_link,
            transitions,
        });
    }

    if cursor.at != bytes.len() {
        return Err(corrupt("trailing data"));
    }
    Ok(MachineTables { alphabet, states })
}
