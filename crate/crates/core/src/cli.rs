//! Command dispatch behind the `dbwords` binary: generation, verification,
//! length tables, and the exhaustive shortest-cover search, with text or
//! JSON rendering and conventional exit codes.

use std::io::{BufRead, Write};
use std::ops::RangeInclusive;

use serde_json::json;

use crate::debruijn::generate_classic_db;
use crate::error::{Error, Result};
use crate::oracle::{exhaustive_min_cover, exhaustive_min_cover_forced, CoverageReport};
use crate::primitive_db::generate_primitive_db;
use crate::squares::{fractional_power, generate_square_word, square_lower_bound, Ratio};
use crate::words::{
    all_words, conjugacy_class_count, count_primitive, primitive_words, AlphabetParams, Symbol,
    Word, ENUMERATION_CEILING,
};

/// Requested artifact produced successfully.
pub const EXIT_OK: i32 = 0;
/// A verification-style command ran but the check did not pass.
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
/// Unusable configuration or invalid input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Which dictionary `verify` checks the input word against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetKind {
    /// Every square `v^2` with `v` in `Σ_k^n` (factor length `2n`).
    Squares,
    /// Every primitive word of `Σ_k^n`.
    Primitive,
    /// All of `Σ_k^n`.
    All,
}

#[derive(Clone, Debug)]
pub enum Command {
    PrimitiveDb {
        k: u32,
        n: u32,
    },
    SquareWord {
        k: u32,
        n: u32,
        /// Word literal for the order `n-1` seed; generated when absent.
        seed: Option<String>,
    },
    ClassicDb {
        k: u32,
        n: u32,
    },
    Verify {
        k: u32,
        n: u32,
        targets: TargetKind,
        circular: bool,
    },
    Table {
        k_range: RangeInclusive<u32>,
        n_range: RangeInclusive<u32>,
    },
    MinCover {
        k: u32,
        n: u32,
        budget: u64,
        force: bool,
    },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
}

/// Parses a word literal: contiguous digits for `k <= 10`, comma-separated
/// decimal integers above. Inverse of [`format_word_literal`].
pub fn parse_word_literal(text: &str, k: u32) -> Result<Word> {
    let text = text.trim();
    let symbols: Vec<Symbol> = if k <= 10 {
        text.chars()
            .map(|ch| {
                ch.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("{ch:?} is not a digit")))
            })
            .collect::<Result<_>>()?
    } else if text.is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|part| {
                part.trim()
                    .parse::<Symbol>()
                    .map_err(|_| Error::Parse(format!("{part:?} is not an integer")))
            })
            .collect::<Result<_>>()?
    };
    Word::new(symbols, k)
}

/// Serializes a word the way the CLI prints it.
pub fn format_word_literal(word: &Word) -> String {
    word.to_string()
}

/// Executes one parsed command, writing the artifact to `output` and
/// diagnostics to `diagnostics`. Returns the process exit code.
pub fn run(
    config: &RunConfig,
    input: impl BufRead,
    output: impl Write,
    diagnostics: impl Write,
) -> i32 {
    let mut diagnostics = diagnostics;
    match dispatch(config, input, output) {
        Ok(code) => code,
        Err(error) => {
            let _ = writeln!(diagnostics, "error: {error}");
            match error {
                Error::Inconclusive { .. } => EXIT_VERIFICATION_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(config: &RunConfig, input: impl BufRead, mut output: impl Write) -> Result<i32> {
    let io = |_: std::io::Error| Error::Parse("output stream closed".into());
    match &config.command {
        Command::PrimitiveDb { k, n } => {
            let params = AlphabetParams::new(*k, *n)?;
            let trace = generate_primitive_db(&params)?;
            let word = trace.output();
            match config.format {
                OutputFormat::Text => writeln!(output, "{word}").map_err(io)?,
                OutputFormat::Json => {
                    let value = json!({
                        "word": word.to_string(),
                        "k": k,
                        "n": n,
                        "length": word.len(),
                        "breakdown": {
                            "primitive_words": count_primitive(&params),
                            "tail_zeros": n - 1,
                        },
                    });
                    writeln!(output, "{value}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::ClassicDb { k, n } => {
            let params = AlphabetParams::new(*k, *n)?;
            let word = generate_classic_db(&params)?;
            match config.format {
                OutputFormat::Text => writeln!(output, "{word}").map_err(io)?,
                OutputFormat::Json => {
                    let value = json!({
                        "word": word.to_string(),
                        "k": k,
                        "n": n,
                        "length": word.len(),
                        "breakdown": {
                            "grams": params.total_words() as u64,
                            "wrap": n - 1,
                        },
                    });
                    writeln!(output, "{value}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::SquareWord { k, n, seed } => {
            let params = AlphabetParams::new(*k, *n)?;
            let seed = seed
                .as_deref()
                .map(|text| parse_word_literal(text, *k))
                .transpose()?;
            let report = generate_square_word(&params, seed.as_ref())?;
            let word = report.word();
            match config.format {
                OutputFormat::Text => writeln!(output, "{word}").map_err(io)?,
                OutputFormat::Json => {
                    let breakdown = report.length_breakdown();
                    let value = json!({
                        "word": word.to_string(),
                        "k": k,
                        "n": n,
                        "length": word.len(),
                        "breakdown": {
                            "squares_part": breakdown.squares_part,
                            "accept_part": breakdown.accept_part,
                            "seed_part": breakdown.seed_part,
                        },
                    });
                    writeln!(output, "{value}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            k,
            n,
            targets,
            circular,
        } => {
            let params = AlphabetParams::new(*k, *n)?;
            let mut text = String::new();
            let mut input = input;
            input
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse(format!("cannot read word from input: {e}")))?;
            let word = parse_word_literal(&text, *k)?;
            let target_words = target_words(&params, *targets)?;
            let report = crate::oracle::verify_coverage(&word, &target_words, *circular)?;
            render_coverage(&report, config.format, &mut output).map_err(io)?;
            Ok(if report.verdict() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
        Command::Table { k_range, n_range } => {
            let rendered = emit_table(k_range.clone(), n_range.clone(), config.format);
            write!(output, "{rendered}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::MinCover {
            k,
            n,
            budget,
            force,
        } => {
            let params = AlphabetParams::new(*k, *n)?;
            let result = if *force {
                exhaustive_min_cover_forced(&params, *budget)?
            } else {
                exhaustive_min_cover(&params, *budget)?
            };
            match config.format {
                OutputFormat::Text => {
                    writeln!(output, "length {}", result.length).map_err(io)?;
                    writeln!(output, "witness {}", result.witness).map_err(io)?;
                }
                OutputFormat::Json => {
                    let value = json!({
                        "k": k,
                        "n": n,
                        "length": result.length,
                        "witness": result.witness.to_string(),
                    });
                    writeln!(output, "{value}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn target_words(params: &AlphabetParams, kind: TargetKind) -> Result<Vec<Word>> {
    match kind {
        TargetKind::Squares => all_words(params)?
            .iter()
            .map(|v| fractional_power(v, 2 * v.len()))
            .collect(),
        TargetKind::Primitive => primitive_words(params),
        TargetKind::All => all_words(params),
    }
}

fn render_coverage(
    report: &CoverageReport,
    format: OutputFormat,
    output: &mut impl Write,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Text => {
            writeln!(
                output,
                "verdict {}",
                if report.verdict() { "pass" } else { "fail" }
            )?;
            writeln!(
                output,
                "targets {} found-once {} found-multiple {} missing {} extraneous {}",
                report.targets().len(),
                report.found_once().len(),
                report.found_multiple().len(),
                report.missing().len(),
                report.extraneous().len(),
            )?;
            for (word, positions) in report.found_multiple() {
                let positions: Vec<String> = positions.iter().map(|p| p.to_string()).collect();
                writeln!(output, "multiple {word} at {}", positions.join(","))?;
            }
            for word in report.missing() {
                writeln!(output, "missing {word}")?;
            }
        }
        OutputFormat::Json => {
            let multiple: serde_json::Map<String, serde_json::Value> = report
                .found_multiple()
                .iter()
                .map(|(word, positions)| (word.to_string(), json!(positions)))
                .collect();
            let value = json!({
                "verdict": report.verdict(),
                "targets": report.targets().len(),
                "found_once": report.found_once().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "found_multiple": multiple,
                "missing": report.missing().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "extraneous": report.extraneous().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            });
            writeln!(output, "{value}")?;
        }
    }
    Ok(())
}

struct TableRow {
    k: u32,
    n: u32,
    primitive: Option<u64>,
    classes: Option<u64>,
    lower: Option<u64>,
    achieved: Option<u64>,
    ratio: Option<Ratio>,
}

fn table_row(k: u32, n: u32) -> TableRow {
    let mut row = TableRow {
        k,
        n,
        primitive: None,
        classes: None,
        lower: None,
        achieved: None,
        ratio: None,
    };
    let Ok(params) = AlphabetParams::new(k, n) else {
        return row;
    };
    let total = params.total_words();
    if total <= u64::MAX as u128 / 4 {
        row.primitive = Some(count_primitive(&params));
        row.classes = Some(conjugacy_class_count(&params));
        row.lower = Some(square_lower_bound(&params));
    }
    if n >= 2 && total <= ENUMERATION_CEILING as u128 {
        if let Ok(report) = generate_square_word(&params, None) {
            let achieved = report.word().len() as u64;
            row.achieved = Some(achieved);
            row.ratio = Some(Ratio::new(achieved, total as u64));
        }
    }
    row
}

/// Renders, per `(k, n)` cell, the primitive-word count, the conjugacy class
/// count, the square lower bound, the achieved construction length, and the
/// ratio `achieved / k^n`. Cells beyond the enumeration ceiling are marked
/// with `-`; the table itself always renders.
pub fn emit_table(
    k_range: RangeInclusive<u32>,
    n_range: RangeInclusive<u32>,
    format: OutputFormat,
) -> String {
    let mut rows = Vec::new();
    for k in k_range {
        for n in n_range.clone() {
            rows.push(table_row(k, n));
        }
    }
    match format {
        OutputFormat::Text => {
            fn cell<T: ToString>(value: &Option<T>) -> String {
                value.as_ref().map_or_else(|| "-".into(), T::to_string)
            }
            let mut out = String::new();
            out.push_str(&format!(
                "{:>4} {:>4} {:>12} {:>12} {:>12} {:>12} {:>10}\n",
                "k", "n", "primitive", "classes", "lower", "achieved", "ratio"
            ));
            for row in &rows {
                let ratio = row
                    .ratio
                    .map_or_else(|| "-".into(), |r| format!("{:.4}", r.to_f64()));
                out.push_str(&format!(
                    "{:>4} {:>4} {:>12} {:>12} {:>12} {:>12} {:>10}\n",
                    row.k,
                    row.n,
                    cell(&row.primitive),
                    cell(&row.classes),
                    cell(&row.lower),
                    cell(&row.achieved),
                    ratio,
                ));
            }
            out
        }
        OutputFormat::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    json!({
                        "k": row.k,
                        "n": row.n,
                        "primitive": row.primitive,
                        "classes": row.classes,
                        "lower": row.lower,
                        "achieved": row.achieved,
                        "ratio": row.ratio.map(|r| r.to_f64()),
                    })
                })
                .collect();
            format!("{}\n", json!(values))
        }
    }
}
