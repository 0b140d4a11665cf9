//! The `daha-lab` command line: parse elements and operator words, apply them, compute
//! Macdonald polynomials, run identity suites and check limits.
//!
//! Exit status is 0 on success, 1 when a suite or limit check fails and 2 for usage, parse
//! or evaluation errors; errors are also written to stderr as `{"error": kind, "message": ...}`.

pub mod expr;
pub mod words;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use expr::{parse_expr, Element, Side};
pub use words::{apply_generator, parse_word, Generator, OpWord};

use crate::asym::{limit_verify, suite_stable_relations, SequenceGen};
use crate::daha_deformed::{finite_hecke_lemma, suite_deformed};
use crate::daha_finite::{macdonald_ns, suite_finite_relations, suite_projection_compat};
use crate::ddpa::suite_atq;
use crate::error::{Error, Result};
use crate::pbullet_phi::{suite_isom, suite_quiverrep};
use crate::suite::{Report, Suite};
use crate::symfunc::{suite_vertex, Basis};

#[derive(Debug, Parser)]
#[command(name = "daha-lab", version, about = "Exact computations with DAHA operators, almost symmetric polynomials and the double Dyck path algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply an operator word to an element and print the result.
    Apply {
        #[arg(long, value_parser = parse_side)]
        side: Side,
        #[arg(long)]
        rank: usize,
        /// Generators separated by spaces or '∘', applied right to left.
        #[arg(long)]
        op: String,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
    },
    /// Print the nonsymmetric Macdonald polynomial of a composition.
    Macdonald {
        #[arg(long)]
        rank: usize,
        /// Comma-separated composition, e.g. 0,1.
        #[arg(long, value_delimiter = ',')]
        comp: Vec<u32>,
    },
    /// Run an identity suite.
    Suite {
        #[arg(long, value_enum)]
        name: SuiteName,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        degree: usize,
        /// Worker threads; defaults to all cores.
        #[arg(long, env = "DAHA_LAB_JOBS")]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check t-adic convergence of a sequence to its candidate limit.
    LimitCheck {
        #[arg(long, value_enum)]
        sequence: SequenceName,
        /// Degree of the elementary symmetric function.
        #[arg(long, default_value_t = 1)]
        index: u32,
        #[arg(long, default_value_t = 3)]
        from: usize,
        #[arg(long, default_value_t = 6)]
        to: usize,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Parse an element and print it in canonical form.
    Print {
        #[arg(long, value_parser = parse_side)]
        side: Side,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum)]
        basis: Option<BasisArg>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Finite,
    Projection,
    Deformed,
    HeckeLemma,
    Stable,
    Vertex,
    Atq,
    Quiverrep,
    Isom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SequenceName {
    Geometric,
    Decaying,
    Constant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    M,
    P,
    H,
    E,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::Monomial,
            BasisArg::P => Basis::PowerSum,
            BasisArg::H => Basis::Homogeneous,
            BasisArg::E => Basis::Elementary,
        }
    }
}

fn parse_side(s: &str) -> std::result::Result<Side, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, success: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}

fn print_element(e: &Element, basis: Option<BasisArg>) -> String {
    match basis {
        Some(b) => e.print(b.into()),
        None => e.to_string(),
    }
}

/// The report of a named suite at the given size.
pub fn run_suite(name: SuiteName, rank: usize, degree: usize, jobs: Option<usize>) -> Result<Report> {
    let too_small = |min: usize| Error::Usage(format!("suite {name:?} needs rank at least {min}, got {rank}"));
    let suite: Box<dyn Fn() -> Report + Send> = match name {
        SuiteName::Finite if rank >= 2 => Box::new(move || suite_finite_relations(rank, degree)),
        SuiteName::Projection if rank >= 3 => Box::new(move || suite_projection_compat(rank, degree)),
        SuiteName::Deformed if rank >= 3 => Box::new(move || suite_deformed(rank, degree)),
        SuiteName::HeckeLemma => Box::new(move || hecke_lemma_suite(rank, degree).run()),
        SuiteName::Stable if rank >= 2 => Box::new(move || suite_stable_relations(rank, degree)),
        SuiteName::Vertex => Box::new(move || suite_vertex(rank as u32, degree as u32)),
        SuiteName::Atq => Box::new(move || suite_atq(rank, degree)),
        SuiteName::Quiverrep if rank >= 2 => Box::new(move || suite_quiverrep(rank, degree)),
        SuiteName::Isom if rank >= 2 => Box::new(move || suite_isom(rank, degree)),
        SuiteName::Projection | SuiteName::Deformed => return Err(too_small(3)),
        _ => return Err(too_small(2)),
    };
    Ok(match jobs {
        None => suite(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Usage(e.to_string()))?
            .install(suite),
    })
}

/// The Hecke lemma for `m ≤ rank`, `n ≤ degree` as a one-identity suite.
fn hecke_lemma_suite(max_m: usize, max_n: usize) -> Suite {
    let mut s = Suite::new("hecke-lemma", max_m, max_n);
    let cases = (max_m + 1) * max_n;
    s.custom(
        "t^m T_m^-1 ... T_1^-1 x1^n = sum x_(m+1)^(n-i) h_i[(1-t)(x1 + ... + x_m)]",
        "finite Hecke lemma",
        cases,
        move || finite_hecke_lemma(max_m, max_n as u32),
    );
    s
}

fn sequence(name: SequenceName, index: u32) -> (SequenceGen, crate::asym::AlmostSym) {
    match name {
        SequenceName::Geometric => SequenceGen::geometric_e(index),
        SequenceName::Decaying => SequenceGen::decaying_e(index),
        SequenceName::Constant => SequenceGen::constant_e(index),
    }
}

fn render(r: &Report, emit: Emit) -> String {
    match emit {
        Emit::Json => r.to_json() + "\n",
        Emit::Text => r.to_string(),
    }
}

/// Runs one command.
pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Apply { side, rank, op, expr, basis } => {
            let e = parse_expr(expr, *side, *rank)?;
            let w = parse_word(op, *side)?;
            Ok(Outcome::ok(print_element(&w.apply(&e)?, *basis) + "\n"))
        }
        Command::Macdonald { rank, comp } => {
            if comp.len() != *rank {
                return Err(Error::Usage(format!("composition has {} parts, expected {rank}", comp.len())));
            }
            Ok(Outcome::ok(format!("{}\n", macdonald_ns(*rank, comp)?)))
        }
        Command::Suite { name, rank, degree, jobs, emit, out } => {
            let r = run_suite(*name, *rank, *degree, *jobs)?;
            let text = render(&r, *emit);
            let stdout = match out {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
                    format!("{} {}\n", if r.pass { "pass" } else { "FAIL" }, path.display())
                }
                None => text,
            };
            Ok(Outcome { stdout, success: r.pass })
        }
        Command::LimitCheck { sequence: name, index, from, to, emit } => {
            let (g, c) = sequence(*name, *index);
            let r = limit_verify(&g, &c, (*from, *to), &|m| m as i64)?;
            Ok(Outcome { stdout: render(&r, *emit), success: r.pass })
        }
        Command::Print { side, rank, expr, basis } => Ok(Outcome::ok(print_element(&parse_expr(expr, *side, *rank)?, *basis) + "\n")),
    }
}

/// The error record written to stderr.
pub fn error_record(e: &Error) -> String {
    serde_json::json!({ "error": e.kind(), "message": e.to_string() }).to_string()
}

/// Parses `args`, runs the command and writes its output; returns the exit status.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(stdout, "{text}");
            } else {
                let _ = writeln!(stderr, "{}", error_record(&Error::Usage(text.trim_end().to_string())));
            }
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = write!(stdout, "{}", o.stdout);
            o.exit_code()
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", error_record(&e));
            2
        }
    }
}
