use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use finedecomp::verify::{exhaustive_feasible_with_jobs, OracleBudget};
use finedecomp::{block_form, decompose, random_matrix_of_rank, verify_decomposition, Matrix, Outcome};
use finedecomp_cli::format::{parse_field_flag, CanonFile};
use finedecomp_cli::{parse_instance, render, selftest, CliError, InstanceFile, ResultFile};

const OK: u8 = 0;
const USAGE: u8 = 1;
const INFEASIBLE: u8 = 2;
const FAILED: u8 = 3;

/// Unit-plus-nilpotent matrix decompositions in exact arithmetic.
#[derive(Parser)]
#[command(name = "finedecomp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Instance file (JSON); standard input if omitted.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Nilpotence bound; overrides `k` in the instance file.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether A = U + N with N^k = 0 exists.
    Feasible(Input),
    /// Construct U and N.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a claimed decomposition; A, U and N are one file each.
    Verify {
        a: PathBuf,
        u: PathBuf,
        n: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Block form (invertible companions, 1x1 zeros, C(x^m)) and its transform.
    Canon {
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive search for a witness N over a small prime field.
    Oracle {
        #[command(flatten)]
        input: Input,
        /// Witness file, written when one is found.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Maximum number of candidate matrices.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Random instance of given size and rank.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "fp:2")]
        field: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replay the worked examples and the gadget sweep.
    Selftest,
}

fn read_text(path: Option<&Path>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|source| CliError::Io { path: p.into(), source })?;
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })?;
        }
    }
    Ok(text)
}

fn load(path: Option<&Path>) -> Result<(Matrix, Option<usize>), CliError> {
    let text = read_text(path)?;
    parse_instance(&text).map_err(|e| match (e, path) {
        (CliError::Parse(msg), Some(p)) => CliError::Parse(format!("{}: {msg}", p.display())),
        (e, _) => e,
    })
}

fn load_with_k(input: &Input) -> Result<(Matrix, usize), CliError> {
    let (a, file_k) = load(input.input.as_deref())?;
    let k = input
        .k
        .or(file_k)
        .ok_or_else(|| CliError::Usage("no k given (use --k or a \"k\" field)".into()))?;
    if k == 0 {
        return Err(CliError::Usage("k must be positive".into()));
    }
    Ok((a, k))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|source| CliError::Io { path: p.into(), source })?;
    }
    Ok(())
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Feasible(input) => {
            let (a, k) = load_with_k(&input)?;
            let ok = finedecomp::feasible(&a, k)?;
            let (n, rank) = (a.rows(), a.rank());
            println!(
                "n = {n}, rank = {rank}, k = {k}: k*rank = {} {} n",
                k * rank,
                if ok { ">=" } else { "<" }
            );
            println!("{}", if ok { "feasible" } else { "infeasible" });
            Ok(if ok { OK } else { INFEASIBLE })
        }
        Command::Decompose { input, output } => {
            let (a, k) = load_with_k(&input)?;
            let outcome = decompose(&a, k)?;
            write(output.as_deref(), &render(&ResultFile::from_outcome(&outcome)))?;
            match outcome {
                Outcome::Decomposed(d) => {
                    println!(
                        "decomposed: n = {}, rank(A) = {}, index(N) = {}",
                        a.rows(),
                        d.certificate.rank_a,
                        d.certificate.index_n
                    );
                    if output.is_none() {
                        println!("U =\n{}N =\n{}", d.u, d.n);
                    }
                    Ok(OK)
                }
                Outcome::Infeasible { rank, n, k } => {
                    println!("infeasible: k*rank(A) = {k}*{rank} < {n}");
                    Ok(INFEASIBLE)
                }
            }
        }
        Command::Verify { a, u, n, k, output } => {
            let (a_mat, file_k) = load(Some(&a))?;
            let (u_mat, _) = load(Some(&u))?;
            let (n_mat, _) = load(Some(&n))?;
            let k = k
                .or(file_k)
                .ok_or_else(|| CliError::Usage("no k given (use --k or a \"k\" field in A)".into()))?;
            let report = verify_decomposition(&a_mat, &u_mat, &n_mat, k)?;
            write(output.as_deref(), &render(&ResultFile::from_report(&a_mat, k, &report)))?;
            println!("{report}");
            Ok(if report.overall { OK } else { FAILED })
        }
        Command::Canon { input, output } => {
            let (a, _) = load(input.as_deref())?;
            let form = block_form(&a)?;
            write(output.as_deref(), &render(&CanonFile::from_form(&form)))?;
            let names: Vec<String> = form.blocks.iter().map(ToString::to_string).collect();
            println!("{}", names.join(" ⊕ "));
            Ok(OK)
        }
        Command::Oracle {
            input,
            output,
            jobs,
            budget,
        } => {
            let (a, k) = load_with_k(&input)?;
            let budget = budget.map_or_else(OracleBudget::default, |max_candidates| OracleBudget { max_candidates });
            let verdict = exhaustive_feasible_with_jobs(&a, k, budget, jobs.max(1))?;
            match verdict.witness {
                Some(w) => {
                    write(output.as_deref(), &render(&InstanceFile::from_matrix(&w, Some(k))))?;
                    println!("feasible; first witness N =\n{w}");
                    Ok(OK)
                }
                None => {
                    println!("infeasible: no N with N^{k} = 0 makes A - N invertible");
                    Ok(INFEASIBLE)
                }
            }
        }
        Command::Gen {
            n,
            rank,
            seed,
            field,
            k,
            output,
        } => {
            let field = parse_field_flag(&field)?;
            if n == 0 || rank > n {
                return Err(CliError::Usage(format!(
                    "need 1 <= n and rank <= n (n = {n}, rank = {rank})"
                )));
            }
            let a = random_matrix_of_rank(n, rank, field, seed);
            write(output.as_deref(), &render(&InstanceFile::from_matrix(&a, k)))?;
            println!("{n}x{n} matrix of rank {rank} over {field}, seed {seed}");
            if output.is_none() {
                print!("{a}");
            }
            Ok(OK)
        }
        Command::Selftest => {
            let mut failed = false;
            for (name, result) in selftest::run() {
                match result {
                    Ok(()) => println!("PASS  {name}"),
                    Err(why) => {
                        failed = true;
                        println!("FAIL  {name}: {why}");
                    }
                }
            }
            Ok(if failed { FAILED } else { OK })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { OK });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}
