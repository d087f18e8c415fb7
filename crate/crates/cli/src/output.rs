//! Output encoding shared by the commands.
//!
//! Sequence bytes are printed with printable ASCII kept verbatim and
//! everything else escaped (`\t`, `\xNN`, ...), so rows stay one line and
//! tab-separated no matter the input, and no byte is lost.

use std::io::Write;

use serde::Serialize;

pub fn escape_bytes(bytes: &[u8]) -> String {
    bytes.escape_ascii().to_string()
}

/// Write to stdout, treating a closed pipe as a normal end of output.
pub fn print_stdout(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).is_err() {
        std::process::exit(0);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Tsv,
    Json,
}

/// `words` output row.
#[derive(Serialize)]
pub struct WordRow {
    pub word: String,
    pub length: usize,
}

/// `scan` output per record.
#[derive(Serialize)]
pub struct EventRow {
    pub start: usize,
    pub end: usize,
    pub substring: String,
}

#[derive(Serialize)]
pub struct RecordEvents {
    pub record: String,
    pub events: Vec<EventRow>,
}

#[derive(Serialize)]
pub struct RecordTable {
    pub record: String,
    pub table: Vec<i64>,
}
