//! The five subcommands, separated from argument parsing so they can be
//! driven with plain values.

use std::collections::BTreeSet;
use std::path::Path;

use rayon::prelude::*;
use tsf_core::oracle;
use tsf_core::{
    specific_word_report, Dawg, LinkMode, ReferenceMachine, Source, SpecificTrie,
};

use crate::dot;
use crate::index::{self, IndexError};
use crate::input::{parse_input, InputError, InputFormat, SequenceRecord};
use crate::output::{
    escape_bytes, print_stdout, EventRow, OutputFormat, RecordEvents, RecordTable, WordRow,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error("{0}")]
    Usage(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

impl CliError {
    /// 1 for usage, input and format problems; 2 when fast and naive
    /// results disagree.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::CrossCheck(_) => 2,
            _ => 1,
        }
    }
}

fn slices(records: &[SequenceRecord]) -> Vec<&[u8]> {
    records.iter().map(|r| r.data.as_slice()).collect()
}

fn total_len(records: &[SequenceRecord]) -> usize {
    records.iter().map(|r| r.data.len()).sum()
}

fn guard_oracle_size(total: usize) -> Result<(), CliError> {
    if total > oracle::MAX_ORACLE_SIZE {
        return Err(CliError::Usage(format!(
            "--oracle and oracle-check accept at most {} input bytes, got {total}",
            oracle::MAX_ORACLE_SIZE
        )));
    }
    Ok(())
}


pub struct WordsArgs<'a> {
    pub reference: &'a Path,
    pub target: &'a Path,
    pub format: InputFormat,
    pub normalize_case: bool,
    pub output: OutputFormat,
    pub oracle: bool,
}

/// Build the tagged automaton over both sets, emit the specific words and
/// a `count=<n> bound=<b>` summary on stderr.
pub fn cmd_words(args: WordsArgs) -> Result<(), CliError> {
    let reference = parse_input(args.reference, args.format, args.normalize_case)?;
    let target = parse_input(args.target, args.format, args.normalize_case)?;
    let refs = slices(&reference);
    let tgts = slices(&target);

    let report = specific_word_report(&refs, &tgts);

    let mut out = String::new();
    match args.output {
        OutputFormat::Tsv => {
            for word in &report.words {
                out.push_str(&escape_bytes(word));
                out.push('\t');
                out.push_str(&word.len().to_string());
                out.push('\n');
            }
        }
        OutputFormat::Json => {
            let rows: Vec<WordRow> = report
                .words
                .iter()
                .map(|word| WordRow {
                    word: escape_bytes(word),
                    length: word.len(),
                })
                .collect();
            out.push_str(&serde_json::to_string(&rows).expect("serialize rows"));
            out.push('\n');
        }
    }
    print_stdout(&out);
    eprintln!("count={} bound={}", report.count, report.bound);

    if args.oracle {
        guard_oracle_size(total_len(&reference) + total_len(&target))?;
        let naive = oracle::specific_naive(&refs, &tgts);
        if report.words != naive {
            return Err(CliError::CrossCheck(format!(
                "specific words diverge: fast {} vs naive {}",
                report.words.len(),
                naive.len()
            )));
        }
    }
    Ok(())
}

pub struct ScanArgs<'a> {
    pub reference: Option<&'a Path>,
    pub index: Option<&'a Path>,
    pub target: &'a Path,
    pub format: InputFormat,
    pub normalize_case: bool,
    pub output: OutputFormat,
    pub mode: LinkMode,
    pub table: bool,
    pub oracle: bool,
}

/// Scan each target record independently against the reference machine.
pub fn cmd_scan(args: ScanArgs) -> Result<(), CliError> {
    let (machine, reference) = match (args.reference, args.index) {
        (Some(path), None) => {
            let reference = parse_input(path, args.format, args.normalize_case)?;
            let machine = ReferenceMachine::build(reference.iter().map(|r| r.data.as_slice()));
            (machine, Some(reference))
        }
        (None, Some(path)) => (index::read_index(path)?, None),
        _ => {
            return Err(CliError::Usage(
                "scan needs exactly one of --reference and --index".into(),
            ))
        }
    };
    let records = parse_input(args.target, args.format, args.normalize_case)?;

    // records are independent; scan them in parallel and emit in input order
    let scans: Vec<(Vec<i64>, Vec<tsf_core::ScanEvent>)> = records
        .par_iter()
        .map(|record| {
            if args.table {
                (machine.ts_table(&record.data, args.mode), Vec::new())
            } else {
                (Vec::new(), machine.ts_pairs(&record.data, args.mode))
            }
        })
        .collect();

    let mut out = String::new();
    match (args.output, args.table) {
        (OutputFormat::Tsv, true) => {
            for (record, (table, _)) in records.iter().zip(&scans) {
                let cells: Vec<String> = table.iter().map(|v| v.to_string()).collect();
                out.push_str(&record.id);
                out.push('\t');
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        (OutputFormat::Tsv, false) => {
            for (record, (_, events)) in records.iter().zip(&scans) {
                for event in events {
                    let substring = escape_bytes(&record.data[event.start..=event.end]);
                    out.push_str(&format!(
                        "{}\t{}\t{}\t{}\n",
                        record.id, event.start, event.end, substring
                    ));
                }
            }
        }
        (OutputFormat::Json, true) => {
            let rows: Vec<RecordTable> = records
                .iter()
                .zip(&scans)
                .map(|(record, (table, _))| RecordTable {
                    record: record.id.clone(),
                    table: table.clone(),
                })
                .collect();
            out.push_str(&serde_json::to_string(&rows).expect("serialize rows"));
            out.push('\n');
        }
        (OutputFormat::Json, false) => {
            let rows: Vec<RecordEvents> = records
                .iter()
                .zip(&scans)
                .map(|(record, (_, events))| RecordEvents {
                    record: record.id.clone(),
                    events: events
                        .iter()
                        .map(|event| EventRow {
                            start: event.start,
                            end: event.end,
                            substring: escape_bytes(&record.data[event.start..=event.end]),
                        })
                        .collect(),
                })
                .collect();
            out.push_str(&serde_json::to_string(&rows).expect("serialize rows"));
            out.push('\n');
        }
    }
    print_stdout(&out);

    if args.oracle {
        // the naive oracle needs the reference words themselves, so the
        // cross-check is only possible when scanning from --reference
        let Some(reference) = reference else {
            return Err(CliError::Usage(
                "--oracle requires --reference (an index does not keep the words)".into(),
            ));
        };
        let refs = slices(&reference);
        for record in &records {
            guard_oracle_size(total_len(&reference) + record.data.len())?;
            let naive = oracle::ts_table_naive(&refs, &record.data);
            let fast = machine.ts_table(&record.data, args.mode);
            if fast != naive {
                return Err(CliError::CrossCheck(format!(
                    "table for record {} diverges from the naive scan",
                    record.id
                )));
            }
        }
    }
    Ok(())
}

pub struct IndexArgs<'a> {
    pub reference: &'a Path,
    pub out: &'a Path,
    pub format: InputFormat,
    pub normalize_case: bool,
}

pub fn cmd_index(args: IndexArgs) -> Result<(), CliError> {
    let reference = parse_input(args.reference, args.format, args.normalize_case)?;
    let machine = ReferenceMachine::build(reference.iter().map(|r| r.data.as_slice()));
    index::write_index(args.out, &machine)?;
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WhichGraph {
    Dawg,
    Trie,
}

pub struct DotArgs<'a> {
    pub reference: &'a Path,
    pub target: &'a Path,
    pub format: InputFormat,
    pub normalize_case: bool,
    pub which: WhichGraph,
    pub prune: bool,
}

pub fn cmd_dot(args: DotArgs) -> Result<(), CliError> {
    let reference = parse_input(args.reference, args.format, args.normalize_case)?;
    let target = parse_input(args.target, args.format, args.normalize_case)?;
    let dawg = Dawg::build(
        reference
            .iter()
            .map(|r| (r.data.as_slice(), Source::Reference))
            .chain(target.iter().map(|r| (r.data.as_slice(), Source::Target))),
    );
    let text = match args.which {
        WhichGraph::Dawg => dot::dawg_dot(&dawg),
        WhichGraph::Trie => {
            let trie = SpecificTrie::build(&dawg);
            let trie = if args.prune { trie.pruned() } else { trie };
            dot::trie_dot(&trie)
        }
    };
    print_stdout(&text);
    Ok(())
}

pub struct OracleCheckArgs<'a> {
    pub reference: &'a Path,
    pub target: &'a Path,
    pub format: InputFormat,
    pub normalize_case: bool,
}

/// Run every fast pipeline against its naive mirror and fail loudly on any
/// divergence.
pub fn cmd_oracle_check(args: OracleCheckArgs) -> Result<(), CliError> {
    let reference = parse_input(args.reference, args.format, args.normalize_case)?;
    let target = parse_input(args.target, args.format, args.normalize_case)?;
    guard_oracle_size(total_len(&reference) + total_len(&target))?;
    let refs = slices(&reference);
    let tgts = slices(&target);

    let report = specific_word_report(&refs, &tgts);
    let naive_specific = oracle::specific_naive(&refs, &tgts);
    if report.words != naive_specific {
        return Err(CliError::CrossCheck(format!(
            "specific words diverge: fast {} vs naive {}",
            report.words.len(),
            naive_specific.len()
        )));
    }

    let alphabet: BTreeSet<u8> = refs
        .iter()
        .chain(tgts.iter())
        .flat_map(|w| w.iter().copied())
        .collect();
    let alphabet: Vec<u8> = alphabet.into_iter().collect();
    let fact_t = oracle::factors_naive(&tgts);
    let via_absent: Vec<Vec<u8>> = oracle::maw_naive(&refs, &alphabet)
        .into_iter()
        .filter(|w| fact_t.contains(w))
        .collect();
    if report.words != via_absent {
        return Err(CliError::CrossCheck(
            "specific words diverge from the absent-word characterization".into(),
        ));
    }

    let machine = ReferenceMachine::build(refs.iter().copied());
    for record in &target {
        let naive = oracle::ts_table_naive(&refs, &record.data);
        for mode in [LinkMode::PlainS, LinkMode::OptimizedG] {
            if machine.ts_table(&record.data, mode) != naive {
                return Err(CliError::CrossCheck(format!(
                    "table for record {} diverges ({mode:?})",
                    record.id
                )));
            }
        }
    }

    print_stdout(&format!(
        "ok: {} specific words, {} target records checked\n",
        report.count,
        target.len()
    ));
    Ok(())
}
