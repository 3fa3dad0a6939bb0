use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use z2cb::bounds::combined_upper_bound;
use z2cb::codelib::{best_known_lower_bound, named_code, parity_check_search, random_search, ColumnSearchConfig, DEFAULT_SEED};
use z2cb::gf2::{extend_parity, format_matrix, min_distance, parse_matrix, puncture, shorten, weight_distribution};
use z2cb::isotropy::Representation;
use z2cb::verifier::{
    scan_lemma12_part2_exceptions, scan_lemma14_part2, verify_lemma12_part1, verify_lemma12_part2, verify_lemma12_part3,
    verify_lemma14_part1, verify_lemma14_part2, verify_remark_matrix, verify_shortening, verify_shortening_tables,
    verify_tables, ScanMode, TableId, VerificationReport, Verdict,
};
use z2cb::{GenMatrix, Gf2Word};

const EXIT_FAIL: u8 = 1;
const EXIT_ERROR: u8 = 2;

/// Binary linear code analysis and verification of code-table estimates.
#[derive(Parser)]
#[command(name = "z2cb", version)]
struct Cli {
    /// Write results here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print `n k d` for a generator matrix file (`-` reads stdin).
    Mindist { matrix: PathBuf },
    /// Print parameters and the weight distribution as JSON.
    Wdist { matrix: PathBuf },
    /// Shorten at a coordinate and print the new generator matrix.
    Shorten {
        matrix: PathBuf,
        #[arg(long)]
        coord: usize,
    },
    /// Puncture at a coordinate and print the new generator matrix.
    Puncture {
        matrix: PathBuf,
        #[arg(long)]
        coord: usize,
    },
    /// Append an overall parity coordinate.
    Extend { matrix: PathBuf },
    /// Print the upper bounds on d for an [n, k] code as JSON.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Print a named code, or the best construction found for --n/--k with its recipe.
    Construct {
        #[arg(long, conflicts_with_all = ["n", "k"])]
        name: Option<String>,
        #[arg(long, requires = "k")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        k: Option<usize>,
    },
    /// Search for an [n, k] code with minimum distance at least d.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random generator matrices tried instead of the parity-check search.
        #[arg(long)]
        random: Option<u64>,
    },
    /// Analyse a generator matrix as an isotropy representation (JSON).
    AnalyzeRep { matrix: PathBuf },
    /// Run verifications and print one JSON report per line.
    Verify {
        /// Keep measured runtimes; by default runtime_ms is 0 so output is reproducible.
        #[arg(long, global = true)]
        timings: bool,
        #[command(subcommand)]
        target: VerifyTarget,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    Lemma12(Lemma12Args),
    Lemma14(Lemma14Args),
    RemarkMatrix,
    Tables {
        #[arg(long)]
        table: Option<TableId>,
    },
    /// Shorten a given code at its first row's support, or sweep the tables.
    Shortening {
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Lemma12Args {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    part: u8,
    #[arg(long, conflicts_with = "scan")]
    n: Option<usize>,
    /// Inclusive range `LO..HI`.
    #[arg(long, value_parser = parse_range)]
    scan: Option<(usize, usize)>,
}

#[derive(Args)]
struct Lemma14Args {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    part: u8,
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Bit string of the involution image for part 1; defaults to the first row.
    #[arg(long)]
    iota1: Option<String>,
    #[arg(long, conflicts_with_all = ["matrix", "exhaustive"], requires = "seed")]
    sample: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, conflicts_with = "matrix")]
    exhaustive: bool,
    #[arg(long)]
    workers: Option<usize>,
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected LO..HI")?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn read_matrix(path: &Path) -> Result<GenMatrix> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_matrix(&text).with_context(|| format!("parsing {}", path.display()))
}

struct Emitter {
    out: Box<dyn Write>,
    timings: bool,
    failed: bool,
}

impl Emitter {
    fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn text(&mut self, s: &str) -> Result<()> {
        write!(self.out, "{s}")?;
        Ok(())
    }

    fn json(&mut self, v: serde_json::Value) -> Result<()> {
        self.line(&v.to_string())
    }

    fn report(&mut self, mut r: VerificationReport) -> Result<()> {
        if !self.timings {
            r.runtime_ms = 0;
        }
        self.failed |= r.verdict == Verdict::Fail;
        self.line(&r.to_json_line())?;
        self.out.flush()?;
        Ok(())
    }
}

fn run(cli: Cli) -> Result<bool> {
    let out: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(io::stdout().lock()),
    };
    let timings = matches!(cli.command, Command::Verify { timings: true, .. });
    let mut em = Emitter { out, timings, failed: false };
    match cli.command {
        Command::Mindist { matrix } => {
            let m = read_matrix(&matrix)?;
            em.line(&format!("{} {} {}", m.n(), m.k(), min_distance(&m)?))?;
        }
        Command::Wdist { matrix } => em.json(serde_json::to_value(weight_distribution(&read_matrix(&matrix)?)?)?)?,
        Command::Shorten { matrix, coord } => em.text(&format_matrix(&shorten(&read_matrix(&matrix)?, coord)?))?,
        Command::Puncture { matrix, coord } => em.text(&format_matrix(&puncture(&read_matrix(&matrix)?, coord)?))?,
        Command::Extend { matrix } => em.text(&format_matrix(&extend_parity(&read_matrix(&matrix)?)?))?,
        Command::Bound { n, k } => em.json(serde_json::to_value(combined_upper_bound(n, k)?)?)?,
        Command::Construct { name, n, k } => match (name, n, k) {
            (Some(name), _, _) => em.text(&format_matrix(&named_code(&name)?))?,
            (None, Some(n), Some(k)) => {
                let (d, recipe) = best_known_lower_bound(n, k)?;
                em.line(&format!("# [{n},{k},{d}]"))?;
                for l in recipe.to_text().lines() {
                    em.line(&format!("# {l}"))?;
                }
                em.text(&format_matrix(&recipe.replay()?))?;
            }
            _ => bail!("construct needs --name or both --n and --k"),
        },
        Command::Search { n, k, d, seed, random } => {
            let found = match random {
                Some(budget) => random_search(n, k, d, budget, seed)?,
                None => parity_check_search(n, k, d, seed, &ColumnSearchConfig::default())?,
            };
            match found {
                Some(m) => em.text(&format_matrix(&m))?,
                None => {
                    eprintln!("z2cb: no [{n},{k},{d}] code found");
                    return Ok(false);
                }
            }
        }
        Command::AnalyzeRep { matrix } => em.json(serde_json::to_value(Representation::new(read_matrix(&matrix)?).analyze()?)?)?,
        Command::Verify { target, .. } => verify(&mut em, target)?,
    }
    em.out.flush()?;
    Ok(!em.failed)
}

fn verify(em: &mut Emitter, target: VerifyTarget) -> Result<()> {
    match target {
        VerifyTarget::Lemma12(a) => {
            let dims: Vec<usize> = match (a.n, a.scan) {
                _ if a.part == 3 => vec![],
                (Some(n), _) => vec![n],
                (None, Some((lo, hi))) => (lo..=hi).collect(),
                (None, None) => bail!("part {} needs --n or --scan", a.part),
            };
            match a.part {
                1 => dims.into_iter().try_for_each(|n| em.report(verify_lemma12_part1(n)?))?,
                2 => {
                    for &n in &dims {
                        em.report(verify_lemma12_part2(n)?)?;
                    }
                    if let Some((lo, hi)) = a.scan {
                        em.report(scan_lemma12_part2_exceptions(lo, hi)?)?;
                    }
                }
                _ => em.report(verify_lemma12_part3()?)?,
            }
        }
        VerifyTarget::Lemma14(a) => {
            let workers = a.workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            match (a.part, a.matrix) {
                (1, Some(path)) => {
                    let m = read_matrix(&path)?;
                    let iota1 = match a.iota1 {
                        Some(s) => s.parse::<Gf2Word>()?,
                        None => m.rows()[0],
                    };
                    em.report(verify_lemma14_part1(&m, &iota1)?)?;
                }
                (1, None) => bail!("part 1 needs --matrix"),
                (_, Some(path)) => em.report(verify_lemma14_part2(&read_matrix(&path)?)?)?,
                (_, None) => {
                    let mode = match (a.exhaustive, a.sample, a.seed) {
                        (true, _, _) => ScanMode::Exhaustive,
                        (false, Some(count), Some(seed)) => ScanMode::Sample { count, seed },
                        _ => bail!("part 2 needs --matrix, --exhaustive or --sample COUNT --seed S"),
                    };
                    em.report(scan_lemma14_part2(mode, workers))?;
                }
            }
        }
        VerifyTarget::RemarkMatrix => verify_remark_matrix().into_iter().try_for_each(|r| em.report(r))?,
        VerifyTarget::Tables { table } => verify_tables(table)?.into_iter().try_for_each(|r| em.report(r))?,
        VerifyTarget::Shortening { matrix } => match matrix {
            Some(path) => em.report(verify_shortening(&read_matrix(&path)?)?)?,
            None => em.report(verify_shortening_tables()?)?,
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            eprintln!("z2cb: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
