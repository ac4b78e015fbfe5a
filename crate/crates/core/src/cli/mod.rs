//! Command-line front end: builds the requested object and writes it in one
//! of the supported formats.

pub mod cas;
pub mod json;

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{check_leaf_count, in_kernel, Binomial};
use crate::error::Error;
use crate::groebner::{count_standard_monomials, is_groebner, CheckMode, GroebnerCertificate, Reducer};
use crate::ideal::{build_generators, property_one_witness, property_two_count, satisfies_property_two};
use crate::lattice::{basis_size, lattice_binomials, LatticeBasis};
use crate::matrix::IncidenceMatrix;
use crate::oracle::{self, ExactMatrix};

pub use cas::export_cas_script;

/// Environment variable supplying the default leaf-count cap.
pub const CAP_ENV: &str = "Z2CLAW_CAP";

/// Largest leaf count for which the lattice rank is checked in `oracle-compare`.
const LATTICE_RANK_LIMIT: usize = 12;

/// Largest leaf count for which generator soundness is checked in `oracle-compare`.
const SOUNDNESS_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Matrix,
    Lattice,
    Ideal,
    VerifyGroebner,
    OracleCompare,
    Export,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    CasScript,
}

/// What `export` writes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Source {
    #[default]
    Generators,
    Lattice,
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "z2claw",
    version,
    about = "Toric ideals of Z2 phylogenetic invariants on claw trees"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Number of leaves.
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Reduce every S-pair instead of trusting the skip criteria.
    #[arg(long)]
    pub strict: bool,
    /// Largest accepted leaf count.
    #[arg(long, env = CAP_ENV, default_value_t = crate::DEFAULT_CAP)]
    pub cap: usize,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Object written by `export`.
    #[arg(long, value_enum, default_value_t = Source::Generators)]
    pub source: Source,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

/// The rendered output and whether every verification in it passed.
pub struct Outcome {
    pub text: String,
    pub verified: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, verified: true }
    }

    pub fn exit_code(&self) -> i32 {
        if self.verified {
            EXIT_OK
        } else {
            EXIT_FAILED
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<(), CliError> {
        if self.cap > crate::MAX_LEAVES {
            return Err(CliError::Usage(format!(
                "cap {} exceeds {}",
                self.cap,
                crate::MAX_LEAVES
            )));
        }
        let min = if self.command == Command::Matrix { 2 } else { 3 };
        check_leaf_count(self.n, min, self.cap).map_err(|e| CliError::Usage(e.to_string()))
    }
}

/// Runs one command and writes its output to `--out` or to `stdout`.
pub fn run(config: &RunConfig, stdout: &mut impl Write) -> Result<i32, CliError> {
    let outcome = render(config)?;
    match &config.out {
        Some(path) => std::fs::write(path, outcome.text.as_bytes())?,
        None => stdout.write_all(outcome.text.as_bytes())?,
    }
    Ok(outcome.exit_code())
}

/// Runs one command and returns the rendered output.
pub fn render(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    let n = config.n;
    let unsupported = || {
        Err(CliError::Usage(format!(
            "format {:?} is not available for {:?}",
            config.format, config.command
        )))
    };
    match config.command {
        Command::Matrix => {
            let b = IncidenceMatrix::build(n, config.cap)?;
            match config.format {
                Format::Plain => Ok(Outcome::ok(matrix_plain(&b))),
                Format::Csv => Ok(Outcome::ok(matrix_csv(&b))),
                Format::Json => Ok(Outcome::ok(to_json(&json::MatrixDocument::from(&b)))),
                Format::CasScript => unsupported(),
            }
        }
        Command::Lattice => render_lattice(config),
        Command::Ideal => render_ideal(config),
        Command::Export => match config.source {
            Source::Generators => render_ideal(config),
            Source::Lattice => render_lattice(config),
        },
        Command::VerifyGroebner => {
            let gens = build_generators(n, config.cap)?.to_vec();
            let mode = if config.strict {
                CheckMode::Strict
            } else {
                CheckMode::Criteria
            };
            let cert = is_groebner(&gens, mode)?;
            let text = match config.format {
                Format::Plain => certificate_plain(&cert),
                Format::Json => to_json(&cert),
                _ => return unsupported(),
            };
            Ok(Outcome {
                text,
                verified: cert.holds,
            })
        }
        Command::OracleCompare => {
            let report = compare(n, config.cap)?;
            let text = match config.format {
                Format::Plain => report.plain(),
                Format::Json => to_json(&report),
                _ => return unsupported(),
            };
            Ok(Outcome {
                text,
                verified: report.all_agree(),
            })
        }
    }
}

fn render_lattice(config: &RunConfig) -> Result<Outcome, CliError> {
    let l = LatticeBasis::build(config.n, config.cap)?;
    let binomials = lattice_binomials(&l)?;
    let text = match config.format {
        Format::Plain => {
            let mut out = String::new();
            for row in l.rows() {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                writeln!(out, "{}", cells.join(" ")).unwrap();
            }
            writeln!(out).unwrap();
            for b in &binomials {
                writeln!(out, "{b}").unwrap();
            }
            out
        }
        Format::Csv => lattice_csv(&l),
        Format::Json => to_json(&json::LatticeDocument::new(&l, binomials)),
        Format::CasScript => export_cas_script(&binomials, l.n()),
    };
    Ok(Outcome::ok(text))
}

fn render_ideal(config: &RunConfig) -> Result<Outcome, CliError> {
    let g = build_generators(config.n, config.cap)?;
    let text = match config.format {
        Format::Plain => {
            let mut out = String::new();
            for (name, list) in [("property one", &g.property_one), ("property two", &g.property_two)] {
                writeln!(out, "# {name} ({})", list.len()).unwrap();
                for b in list {
                    writeln!(out, "{b}").unwrap();
                }
            }
            out
        }
        Format::Json => to_json(&json::GeneratorDocument::from(&g)),
        Format::CasScript => export_cas_script(&g.to_vec(), g.n),
        Format::Csv => {
            return Err(CliError::Usage(
                "format Csv is not available for generator lists".into(),
            ));
        }
    };
    Ok(Outcome::ok(text))
}

fn to_json(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents serialize");
    text.push('\n');
    text
}

fn matrix_plain(b: &IncidenceMatrix) -> String {
    let mut out = String::new();
    for (label, row) in b.row_labels().iter().zip(b.to_rows()) {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        writeln!(out, "{label:<10} {}", cells.join(" ")).unwrap();
    }
    out
}

/// Header row of column words, then one labelled line per matrix row.
pub fn matrix_csv(b: &IncidenceMatrix) -> String {
    let header: Vec<String> = b.col_labels().iter().map(|w| w.to_string()).collect();
    let mut out = format!("row,{}\n", header.join(","));
    for (label, row) in b.row_labels().iter().zip(b.to_rows()) {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        writeln!(out, "{label},{}", cells.join(",")).unwrap();
    }
    out
}

/// Header row of column words, then rows labelled `L1`, `L2`, ...
pub fn lattice_csv(l: &LatticeBasis) -> String {
    let header: Vec<String> = l.col_labels().iter().map(|w| w.to_string()).collect();
    let mut out = format!("row,{}\n", header.join(","));
    for (i, row) in l.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(i8::to_string).collect();
        writeln!(out, "L{},{}", i + 1, cells.join(",")).unwrap();
    }
    out
}

fn certificate_plain(cert: &GroebnerCertificate) -> String {
    let s = cert.summary();
    let mut out = String::new();
    writeln!(out, "mode: {:?}", cert.mode).unwrap();
    writeln!(out, "basis size: {}", cert.basis_size).unwrap();
    writeln!(out, "pairs: {}", s.pairs).unwrap();
    writeln!(out, "skipped (coprime leading terms): {}", s.coprime_leads).unwrap();
    writeln!(out, "skipped (shared trailing factor): {}", s.shared_trailing_factor).unwrap();
    writeln!(out, "zero S-polynomial: {}", s.zero_s_polynomial).unwrap();
    writeln!(out, "reduced to zero: {} (max {} steps)", s.reduced, s.max_steps).unwrap();
    for p in cert.failures() {
        if let crate::groebner::PairOutcome::Remainder { remainder } = &p.outcome {
            writeln!(out, "pair ({}, {}) leaves {remainder}", p.i, p.j).unwrap();
        }
    }
    if cert.holds {
        writeln!(out, "all pairs coprime or reduced").unwrap();
    } else {
        writeln!(out, "NOT a Groebner basis: {} pairs leave a remainder", s.remainders).unwrap();
    }
    out
}

/// One line of `oracle-compare`: a computed value next to the value it is
/// checked against.
#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub check: String,
    pub computed: String,
    pub expected: String,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub n: usize,
    pub comparisons: Vec<Comparison>,
}

impl CompareReport {
    pub fn all_agree(&self) -> bool {
        self.comparisons.iter().all(|c| c.agree)
    }

    fn push(&mut self, check: &str, computed: impl ToString, expected: impl ToString) {
        let (computed, expected) = (computed.to_string(), expected.to_string());
        self.comparisons.push(Comparison {
            check: check.to_owned(),
            agree: computed == expected,
            computed,
            expected,
        });
    }

    pub fn plain(&self) -> String {
        let mut out = format!("n = {}\n", self.n);
        for c in &self.comparisons {
            let mark = if c.agree { "ok  " } else { "FAIL" };
            writeln!(out, "{mark} {:<44} {:>12} vs {}", c.check, c.computed, c.expected).unwrap();
        }
        out
    }
}

/// Computes the kernel dimension, lattice, generator and completeness checks
/// that are affordable at leaf count `n`.
pub fn compare(n: usize, cap: usize) -> Result<CompareReport, Error> {
    let mut report = CompareReport {
        n,
        comparisons: Vec::new(),
    };
    let b = IncidenceMatrix::build(n, cap)?;
    let exact = ExactMatrix::from_incidence(&b);
    report.push("rank of incidence matrix", oracle::exact_rank(&exact), n + 2);
    report.push(
        "kernel dimension (elimination vs 2^n-n-2)",
        oracle::nullspace_dimension(&exact),
        basis_size(n),
    );

    let l = LatticeBasis::build(n, cap)?;
    report.push("lattice basis rows", l.rows().len(), basis_size(n));
    if n <= LATTICE_RANK_LIMIT {
        let independent = oracle::full_row_rank(&l.to_i64_rows()).is_some();
        report.push("lattice rows independent over Q", independent, true);
    }

    let g = build_generators(n, cap)?;
    if n >= 4 {
        report.push("property-two generators", g.property_two.len(), property_two_count(n));
    }
    report.push("generators", g.len(), g.len());
    if n <= SOUNDNESS_LIMIT {
        let sound = g.iter().all(in_kernel)
            && g.property_one.iter().all(|q| property_one_witness(q).is_some())
            && g.property_two.iter().all(satisfies_property_two);
        report.push("generators are invariants with their property", sound, true);
    }

    if n <= oracle::ENUMERATION_CAP {
        let gens = g.to_vec();
        let reducer = Reducer::new(&gens)?;
        let quadratic = oracle::enumerate_quadratic_kernel(n)?;
        let mut reduced = 0usize;
        for q in &quadratic {
            if reducer.reduce(q)?.result.is_none() {
                reduced += 1;
            }
        }
        report.push("quadratic invariants reducing to zero", reduced, quadratic.len());
        let lattice_ok = lattice_binomials(&l)?
            .iter()
            .map(|q| reducer.reduce(q).map(|t| t.result.is_none()))
            .collect::<Result<Vec<bool>, Error>>()?
            .into_iter()
            .all(|x| x);
        report.push("lattice binomials reducing to zero", lattice_ok, true);
        let fibers = oracle::quadratic_fibers(n)?.len();
        report.push(
            "degree-2 standard monomials vs fibers",
            count_standard_monomials(&gens, n, 2)?,
            fibers,
        );
    }
    Ok(report)
}

/// Parses arguments, runs, and returns the process exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(&config, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "z2claw: {e}");
            e.exit_code()
        }
    }
}

/// Parses a binomial in either the text or the JSON form.
pub fn parse_binomial(text: &str) -> Result<Binomial, Error> {
    match serde_json::from_str::<Binomial>(text) {
        Ok(b) => Ok(b),
        Err(_) => text.parse(),
    }
}
