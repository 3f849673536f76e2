//! Command-line frontend.
//!
//! Exit codes: 0 success, 1 definite negative (rank drop, no witness,
//! falsified campaign), 2 usage, parse or hypothesis error, 3 resource
//! budget exhausted.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{Field, Matrix};
use crate::gallery;
use crate::lines::{line_full_rank, witness_search, witness_search_parallel, LineVerdict, SearchOutcome, SearchStatus, Strategy};
use crate::polypencil::det_pencil;
use crate::spaces::{AffineSubspace, DEFAULT_ELEMENT_BUDGET};
use crate::verify::{run_campaign, CampaignSpec, Mode, RunOptions, Theorem, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fullrank", version, about = "Full-rank lines in spaces of matrices over finite fields and the rationals")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SearchKind {
    Exhaustive,
    Parallel,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Flanders,
    Main,
    Pencil,
    Square,
    Remark2Strong,
    Remark2Conjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Example {
    Lemma1,
    Sharpness,
    Remark1,
    Remark2F2,
    FlandersExtremal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether every matrix of A + tN has full column rank.
    CheckLine {
        /// Matrix file for A.
        a: PathBuf,
        /// Matrix file for N.
        n: PathBuf,
    },
    /// Search a subspace for A with A + tN full rank for every t.
    Witness {
        /// Subspace file (linear or affine).
        space: PathBuf,
        /// Matrix file for N.
        n: PathBuf,
        #[arg(long, value_enum, default_value_t = SearchKind::Exhaustive)]
        strategy: SearchKind,
        /// Member cap (exhaustive) or sample count (random).
        #[arg(long, default_value_t = DEFAULT_ELEMENT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for the parallel strategy; 0 means all cores.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Run a verification campaign and emit its report.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        /// Column count; defaults to n.
        #[arg(long)]
        p: Option<usize>,
        /// A codimension `c` or a range `a..b` (inclusive); defaults to every covered codimension.
        #[arg(long)]
        codim: Option<String>,
        /// A rank `r` or a range `a..b` (inclusive) for N.
        #[arg(long)]
        rank: Option<String>,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 means all cores. Never changes the report.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Member cap per case.
        #[arg(long, default_value_t = DEFAULT_ELEMENT_BUDGET)]
        budget: u64,
        #[arg(long)]
        allow_out_of_hypothesis: bool,
        #[arg(long, default_value_t = 0)]
        random_conjugates: u32,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write one of the gallery examples as text files.
    Gen {
        #[arg(long, value_enum)]
        example: Example,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Defaults to n.
        #[arg(long)]
        p: Option<usize>,
        /// Rank of N (lemma1) or the rank bound (flanders-extremal); defaults to p - 1.
        #[arg(long)]
        r: Option<usize>,
        /// A prime, or `rat` for the rationals.
        #[arg(long, default_value = "2")]
        field: String,
        /// Directory for the files; stdout if omitted.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Print det(A + tN) as a polynomial in t.
    PencilDet { a: PathBuf, n: PathBuf },
}

/// Run the command line `args` (including the program name), writing to
/// stdout and stderr, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<Matrix> {
    Matrix::from_text(&read(path)?).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, format: Format, value: &serde_json::Value, text: &str) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(value).expect("json")),
        Format::Text => write!(out, "{text}"),
    }
    .map_err(Error::from)
}

fn parse_range(s: &str, what: &'static str) -> Result<(usize, usize)> {
    let bad = || Error::Hypothesis(format!("invalid {what} `{s}`: expected `c` or `a..b`"));
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b.trim_start_matches('='))?)),
        None => num(s).map(|c| (c, c)),
    }
}

fn parse_field(s: &str) -> Result<Field> {
    match s {
        "rat" | "rational" | "q" => Ok(Field::Rational),
        _ => {
            let p = s.trim_start_matches("gf").trim().parse::<u64>().map_err(|_| Error::Hypothesis(format!("invalid field `{s}`")))?;
            Field::prime(p)
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let format = cli.format;
    match cli.command {
        Command::CheckLine { a, n } => check_line(&read_matrix(&a)?, &read_matrix(&n)?, format, out),
        Command::Witness { space, n, strategy, budget, seed, workers } => {
            let space = AffineSubspace::from_text(&read(&space)?)?;
            let n = read_matrix(&n)?;
            let outcome = match strategy {
                SearchKind::Exhaustive => witness_search(&space, &n, Strategy::Exhaustive, budget)?,
                SearchKind::Random => witness_search(&space, &n, Strategy::Random { seed }, budget)?,
                SearchKind::Parallel => {
                    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().map_err(|e| Error::Io(e.to_string()))?;
                    pool.install(|| witness_search_parallel(&space, &n, budget))?
                }
            };
            witness_output(&outcome, format, out)
        }
        Command::Verify {
            theorem,
            q,
            n,
            p,
            codim,
            rank,
            mode,
            samples,
            seed,
            workers,
            budget,
            allow_out_of_hypothesis,
            random_conjugates,
            out: path,
        } => {
            let theorem = match theorem {
                TheoremArg::Flanders => Theorem::Flanders,
                TheoremArg::Main => Theorem::Main,
                TheoremArg::Pencil => Theorem::Pencil,
                TheoremArg::Square => Theorem::Square,
                TheoremArg::Remark2Strong => Theorem::Remark2Strong,
                TheoremArg::Remark2Conjecture => Theorem::Remark2Conjecture,
            };
            let mut spec = CampaignSpec::new(theorem, q, n, p.unwrap_or(n));
            if let Some(c) = codim {
                let (a, b) = parse_range(&c, "codimension")?;
                spec = spec.codims(a..=b);
            }
            if let Some(r) = rank {
                let (a, b) = parse_range(&r, "rank")?;
                spec = spec.ranks(a..=b);
            }
            spec.mode = match mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Sample => Mode::Sample { count: samples },
            };
            spec.seed = seed;
            spec.element_budget = budget;
            spec.allow_out_of_hypothesis = allow_out_of_hypothesis;
            spec.random_conjugates = random_conjugates;
            let report = run_campaign(&spec, &RunOptions::workers(workers))?;
            let body = match format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            match path {
                Some(path) => fs::write(&path, body)?,
                None => out.write_all(body.as_bytes())?,
            }
            Ok(match report.verdict {
                Verdict::Verified | Verdict::Findings => EXIT_OK,
                Verdict::Falsified => EXIT_NEGATIVE,
                Verdict::Incomplete => EXIT_BUDGET,
            })
        }
        Command::Gen { example, n, p, r, field, out_dir } => {
            let field = parse_field(&field)?;
            let p = p.unwrap_or(n);
            let files = generate(example, n, p, r, field)?;
            match out_dir {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    let mut written = Vec::new();
                    for (name, body) in &files {
                        let path = dir.join(name);
                        fs::write(&path, body)?;
                        written.push(path.display().to_string());
                    }
                    emit(out, format, &json!({ "written": written }), &(written.join("\n") + "\n"))?;
                }
                None => {
                    let value = json!(files.iter().map(|(k, v)| (k.clone(), json!(v))).collect::<serde_json::Map<_, _>>());
                    let text: String = files.iter().map(|(k, v)| format!("# {k}\n{v}")).collect();
                    emit(out, format, &value, &text)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::PencilDet { a, n } => {
            let (a, n) = (read_matrix(&a)?, read_matrix(&n)?);
            let g = det_pencil(&a, &n)?;
            let coeffs: Vec<String> = g.coeffs().iter().map(|c| c.to_string()).collect();
            let value = json!({ "polynomial": g.to_string(), "degree": g.degree(), "coeffs": coeffs });
            emit(out, format, &value, &format!("{g}\n"))?;
            Ok(EXIT_OK)
        }
    }
}

fn check_line(a: &Matrix, n: &Matrix, format: Format, out: &mut dyn Write) -> Result<i32> {
    match line_full_rank(a, n)? {
        LineVerdict::FullRank(cert) => {
            let mut text = String::from("full rank\n");
            for row in cert.table() {
                text.push_str(&format!("t = {}: rank {}\n", row.t, row.rank));
            }
            emit(out, format, &cert.to_json(), &text)?;
            Ok(EXIT_OK)
        }
        LineVerdict::RankDrop { t, rank } => {
            let value = json!({ "verdict": "rank-drop", "t": t.to_string(), "rank": rank });
            emit(out, format, &value, &format!("rank drop\nt = {t}: rank {rank}\n"))?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn witness_output(outcome: &SearchOutcome, format: Format, out: &mut dyn Write) -> Result<i32> {
    let status = serde_json::to_value(outcome.status).expect("status");
    let value = json!({
        "status": status,
        "cases_examined": outcome.cases_examined,
        "witness_index": outcome.witness_index,
        "certificate": outcome.certificate.as_ref().map(|c| c.to_json()),
    });
    let mut text = format!("{}\nexamined {}\n", status.as_str().unwrap_or_default(), outcome.cases_examined);
    if let Some(c) = &outcome.certificate {
        text.push_str(&c.a.to_text());
    }
    emit(out, format, &value, &text)?;
    Ok(match outcome.status {
        SearchStatus::WitnessFound => EXIT_OK,
        SearchStatus::ExhaustedNoWitness => EXIT_NEGATIVE,
        SearchStatus::BudgetExhausted => EXIT_BUDGET,
    })
}

fn generate(example: Example, n: usize, p: usize, r: Option<usize>, field: Field) -> Result<Vec<(String, String)>> {
    let r = r.unwrap_or(p.saturating_sub(1));
    Ok(match example {
        Example::Lemma1 => {
            let a = gallery::lemma1_witness(n, p, r, field)?;
            let dir = crate::exactalg::canonical_n(field, n, p, r)?;
            vec![("A.txt".into(), a.to_text()), ("N.txt".into(), dir.to_text())]
        }
        Example::Sharpness => {
            let (s, dir) = gallery::sharpness_example(n, p, field)?;
            vec![("space.txt".into(), s.to_text()), ("N.txt".into(), dir.to_text())]
        }
        Example::Remark1 => {
            let (s, dir) = gallery::remark1_example(n, field)?;
            vec![("space.txt".into(), s.to_text()), ("N.txt".into(), dir.to_text())]
        }
        Example::Remark2F2 => {
            let (s, dir) = gallery::remark2_f2_example();
            vec![("space.txt".into(), s.to_text()), ("N.txt".into(), dir.to_text())]
        }
        Example::FlandersExtremal => {
            let s = gallery::flanders_extremal(n, p, r, field)?;
            vec![("space.txt".into(), s.to_text())]
        }
    })
}
