//! Command-line front end. [`run`] takes the argument list and output
//! streams explicitly so that tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 a checked property fails, 2 malformed input,
//! 3 capacity exceeded.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::{MengerAlgebra, Validation};
use crate::enumeration::{classify_subsets, ClassificationRow};
use crate::error::Error;
use crate::format::parse_algebra;
use crate::principal::{analysis, is_kind_strong, CongruenceKind, StrongMethod};
use crate::relations::Partition;
use crate::subset::Subset;
use crate::suite::{run_paper_suite, SuiteOptions};
use crate::term::{format_term, translation_closure, TranslationClosure, DEFAULT_TRANSLATION_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "menger",
    version,
    about = "Principal congruences of finite Menger algebras"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the superassociative law.
    Validate { file: PathBuf },
    /// Print the principal congruence induced by a subset.
    Congruence {
        file: PathBuf,
        #[arg(long)]
        kind: CongruenceKind,
        /// Comma-separated element names; '' is the empty subset.
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
    },
    /// Classify every subset of the carrier.
    Classify {
        file: PathBuf,
        /// Tab-separated rows without padding.
        #[arg(long)]
        tsv: bool,
    },
    /// Check every suite item exhaustively.
    Suite {
        file: PathBuf,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Print the translation closure.
    Translations {
        file: PathBuf,
        /// Number of translations to list.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Read(PathBuf, io::Error),
    Write(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Write(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_MALFORMED
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut buffer = Vec::new();
    let outcome = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, &mut buffer)),
            Err(e) => {
                let _ = writeln!(err, "error: cannot start thread pool: {e}");
                return EXIT_FAIL;
            }
        },
        None => dispatch(cli.command, &mut buffer),
    };
    let outcome = outcome.and_then(|code| {
        out.write_all(&buffer)?;
        out.flush()?;
        Ok(code)
    });
    match outcome {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::CapacityExceeded { .. } => EXIT_CAPACITY,
                _ => EXIT_MALFORMED,
            }
        }
        Err(Failure::Read(path, e)) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            EXIT_MALFORMED
        }
        Err(Failure::Write(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { file } => validate(&file, out),
        Command::Congruence { file, kind, subset } => congruence(&file, kind, &subset, out),
        Command::Classify { file, tsv } => classify(&file, tsv, out),
        Command::Suite { file, inject_fault } => suite(&file, inject_fault, out),
        Command::Translations { file, limit } => translations(&file, limit, out),
    }
}

fn load(path: &Path, validation: Validation) -> std::result::Result<MengerAlgebra, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Read(path.to_path_buf(), e))?;
    Ok(parse_algebra(&text, validation)?)
}

fn closure(alg: &MengerAlgebra) -> std::result::Result<TranslationClosure, Failure> {
    Ok(translation_closure(alg, DEFAULT_TRANSLATION_CAP)?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn validate(path: &Path, out: &mut dyn Write) -> Outcome {
    let alg = load(path, Validation::Defer)?;
    match alg.verify_superassociativity() {
        Ok(()) => {
            writeln!(out, "OK")?;
            Ok(EXIT_OK)
        }
        Err(cx) => {
            writeln!(
                out,
                "superassociativity fails at {}",
                cx.describe(alg.names())
            )?;
            Ok(EXIT_FAIL)
        }
    }
}

/// Parses a comma-separated list of element names; the empty string is the
/// empty subset.
pub fn parse_subset_arg(alg: &MengerAlgebra, text: &str) -> crate::Result<Subset> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Subset::empty(alg.size()));
    }
    let mut elements = Vec::new();
    for name in text.split(',') {
        let name = name.trim();
        elements.push(
            alg.element(name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))?,
        );
    }
    Subset::from_elements(alg.size(), elements)
}

/// Reconstructs a partition from a `blocks: {a b} {c}` line.
pub fn parse_blocks_line(alg: &MengerAlgebra, line: &str) -> crate::Result<Partition> {
    let bad = |message: &str| Error::Parse {
        line: 1,
        message: message.to_string(),
    };
    let body = line
        .strip_prefix("blocks:")
        .ok_or_else(|| bad("expected \"blocks:\""))?;
    let mut blocks = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        let inner = rest.strip_prefix('{').ok_or_else(|| bad("expected '{'"))?;
        let (block, tail) = inner.split_once('}').ok_or_else(|| bad("unclosed block"))?;
        let mut members = Vec::new();
        for name in block.split_whitespace() {
            members.push(
                alg.element(name)
                    .ok_or_else(|| Error::UnknownElement(name.to_string()))?,
            );
        }
        blocks.push(Subset::from_elements(alg.size(), members)?);
        rest = tail.trim_start();
    }
    Partition::from_blocks(alg.size(), &blocks)
}

fn congruence(path: &Path, kind: CongruenceKind, subset: &str, out: &mut dyn Write) -> Outcome {
    let alg = load(path, Validation::Check)?;
    let h = parse_subset_arg(&alg, subset)?;
    let cl = closure(&alg)?;
    let a = analysis(&alg, &cl, &h, kind)?;
    let blocks: Vec<String> = a
        .partition
        .blocks()
        .iter()
        .map(|b| alg.format_subset(b))
        .collect();
    writeln!(out, "blocks: {}", blocks.join(" "))?;
    if a.residue.is_empty() {
        writeln!(out, "residue: empty")?;
    } else {
        writeln!(out, "residue: {}", alg.format_subset(&a.residue))?;
    }
    let verdict = is_kind_strong(&alg, &cl, &h, kind, StrongMethod::Signatures)?;
    writeln!(out, "{}: {}", kind.strong_name(), yes_no(verdict.holds()))?;
    if let Some(w) = &verdict.witness {
        writeln!(out, "witness: {}", w.describe(&alg, Some(&cl)))?;
    }
    for member in &a.family {
        writeln!(
            out,
            "family: {} {}",
            alg.format_subset(&member.members),
            member.tag.describe(&alg, Some(&cl))
        )?;
    }
    Ok(EXIT_OK)
}

const CLASSIFY_COLUMNS: [&str; 17] = [
    "subset",
    "strong",
    "l-strong",
    "bistrong",
    "normal-v",
    "normal-l",
    "normal-bi",
    "l-ideal",
    "s-ideal",
    "sl-ideal",
    "l-consistent",
    "residue-v",
    "residue-l",
    "residue-full",
    "classes-v",
    "classes-l",
    "classes-full",
];

fn classify_cells(alg: &MengerAlgebra, row: &ClassificationRow) -> Vec<String> {
    let flags = [
        row.strong,
        row.l_strong,
        row.bistrong,
        row.normal_v_complex,
        row.normal_l_complex,
        row.normal_bicomplex,
        row.l_ideal,
        row.s_ideal,
        row.sl_ideal,
        row.l_consistent,
    ];
    let mut cells = vec![alg.format_subset(&row.subset)];
    cells.extend(flags.iter().map(|&b| yes_no(b).to_string()));
    cells.extend(row.residue_sizes.iter().map(usize::to_string));
    cells.extend(row.class_counts.iter().map(usize::to_string));
    cells
}

fn classify(path: &Path, tsv: bool, out: &mut dyn Write) -> Outcome {
    let alg = load(path, Validation::Check)?;
    let cl = closure(&alg)?;
    let rows = classify_subsets(&alg, &cl)?;
    let mut table: Vec<Vec<String>> =
        vec![CLASSIFY_COLUMNS.iter().map(|s| s.to_string()).collect()];
    table.extend(rows.iter().map(|r| classify_cells(&alg, r)));
    if tsv {
        for cells in &table {
            writeln!(out, "{}", cells.join("\t"))?;
        }
        return Ok(EXIT_OK);
    }
    let widths: Vec<usize> = (0..CLASSIFY_COLUMNS.len())
        .map(|c| {
            table
                .iter()
                .map(|r| r[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for cells in &table {
        let mut line = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            let pad = widths[c] - cell.chars().count();
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', pad));
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(EXIT_OK)
}

fn suite(path: &Path, inject_fault: bool, out: &mut dyn Write) -> Outcome {
    let alg = load(path, Validation::Check)?;
    let cl = closure(&alg)?;
    let options = SuiteOptions {
        inject_fault,
        ..SuiteOptions::default()
    };
    let report = run_paper_suite(&alg, &cl, &options)?;
    out.write_all(report.render().as_bytes())?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn translations(path: &Path, limit: usize, out: &mut dyn Write) -> Outcome {
    let alg = load(path, Validation::Check)?;
    let cl = closure(&alg)?;
    let n = cl.len();
    writeln!(out, "{n} translation{}", if n == 1 { "" } else { "s" })?;
    for i in 0..n.min(limit) {
        let images: Vec<&str> = cl.table(i).images().iter().map(|&g| alg.name(g)).collect();
        writeln!(
            out,
            "{}: {}",
            format_term(&alg, cl.witness(i)),
            images.join(" ")
        )?;
    }
    if n > limit {
        writeln!(out, "… {} more", n - limit)?;
    }
    Ok(EXIT_OK)
}
