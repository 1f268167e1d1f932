use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use finfree::combinatorics::{kostka, kostka_table, Partition};
use finfree::finfree::{boxminus, boxplus, boxtimes, commutator_poly, z_poly, MonicPoly, MonicPolyJson};
use finfree::immanant::{imm_delta_minus, immanant_direct, immanant_gj};
use finfree::matrix::RationalMatrix;
use finfree::oracle::{mc_commutator_charpoly, BandCheck, McConfig, McReport};
use finfree::rational::{format_rational, to_f64};
use finfree::symfunc::Spectrum;
use finfree::symgroup::{character, CharacterTable};
use finfree::verify::{self, Suite, VerifyOptions};
use finfree::weingarten::{weingarten, ClassFunction, ClassFunctionJson};
use finfree::{Caps, Error};
use serde::Serialize;

/// Writes to stdout; a closed pipe ends the process quietly.
fn write_stdout(args: std::fmt::Arguments) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().lock().write_fmt(args) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

macro_rules! out {
    ($($t:tt)*) => { write_stdout(format_args!($($t)*)) };
}

macro_rules! outln {
    ($($t:tt)*) => { write_stdout(format_args!("{}\n", format_args!($($t)*))) };
}

/// Exact finite free convolutions, Weingarten calculus and the expected
/// characteristic polynomial of the commutator AUBU* − UBU*A.
#[derive(Parser)]
#[command(name = "finfree", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Pretty)]
    format: Format,
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Args)]
struct CapArgs {
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.partition_k)]
    cap_partition_k: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.set_partition_k)]
    cap_set_partition_k: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.split_chain_m)]
    cap_split_chain_m: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.c_bruteforce_k)]
    cap_c_bruteforce_k: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.kernel_k)]
    cap_kernel_k: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.immanant_n)]
    cap_immanant_n: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.gj_n)]
    cap_gj_n: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.moment_k)]
    cap_moment_k: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.gram_k)]
    cap_gram_k: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.brute_force_d)]
    cap_brute_force_d: usize,
    #[arg(long, global = true, default_value_t = Caps::DEFAULT.identity_d)]
    cap_identity_d: usize,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            partition_k: self.cap_partition_k,
            set_partition_k: self.cap_set_partition_k,
            split_chain_m: self.cap_split_chain_m,
            c_bruteforce_k: self.cap_c_bruteforce_k,
            kernel_k: self.cap_kernel_k,
            immanant_n: self.cap_immanant_n,
            gj_n: self.cap_gj_n,
            moment_k: self.cap_moment_k,
            gram_k: self.cap_gram_k,
            brute_force_d: self.cap_brute_force_d,
            identity_d: self.cap_identity_d,
        }
    }
}

#[derive(Args)]
struct McArgs {
    /// Monte Carlo sample count.
    #[arg(long = "mc")]
    n: Option<usize>,
    #[arg(long, default_value_t = McConfig::DEFAULT_SEED)]
    seed: u64,
    /// Samples per independently seeded chunk.
    #[arg(long, default_value_t = McConfig::DEFAULT_CHUNK)]
    chunk: usize,
}

impl McArgs {
    fn config(&self, default_n: usize) -> McConfig {
        McConfig {
            n: self.n.unwrap_or(default_n),
            seed: self.seed,
            chunk_size: self.chunk,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvOp {
    /// p ⊞ q
    Add,
    /// p ⊠ q
    Mul,
    /// p ⊟ q
    Sub,
}

#[derive(Clone, Copy, ValueEnum)]
enum ImmanantMethod {
    /// Character-weighted sum over permutations.
    Direct,
    /// Coefficient extraction from s_λ of the eigenvalues of ZY.
    Gj,
    /// Closed form for δ_−(X); the input file is the spectrum X.
    DeltaMinus,
}

#[derive(Subcommand)]
enum Command {
    /// Finite free convolution of two polynomial files ({"d": .., "a": [..]}).
    Conv {
        op: ConvOp,
        p: PathBuf,
        q: PathBuf,
    },
    /// The polynomial z_d.
    Zpoly {
        #[arg(long)]
        d: usize,
    },
    /// Expected characteristic polynomial of AUBU* − UBU*A from two spectrum files.
    Commutator {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        mc: McArgs,
    },
    /// Weingarten class function Wg_{k,d}.
    Weingarten {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Immanant of a matrix file (row-major rational strings).
    Immanant {
        #[arg(long)]
        lambda: Partition,
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ImmanantMethod::Direct)]
        method: ImmanantMethod,
    },
    /// Character table of S_k, or one value with --lambda and --rho.
    Character {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, requires = "rho")]
        lambda: Option<Partition>,
        #[arg(long, requires = "lambda")]
        rho: Option<Partition>,
    },
    /// Kostka matrix of k, or one value with --lambda and --mu.
    Kostka {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, requires = "mu")]
        lambda: Option<Partition>,
        #[arg(long, requires = "lambda")]
        mu: Option<Partition>,
    },
    /// Run invariant suites and print a pass/fail table.
    Verify {
        #[arg(value_parser = Suite::NAMES, default_value = "all")]
        suite: String,
        #[command(flatten)]
        mc: McArgs,
        /// Weingarten table file ({"k", "d", "values"}) used in place of the computed one.
        #[arg(long = "wg-table")]
        wg_tables: Vec<PathBuf>,
    },
}

/// Failure modes mapped to exit codes.
enum Failure {
    /// Malformed input or an operation error: exit 2.
    Input(String),
    /// A verification or statistical check failed: exit 1.
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit_json<T: Serialize>(value: &T) {
    outln!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

#[derive(Serialize)]
struct PolyOutput {
    #[serde(flatten)]
    poly: MonicPolyJson,
    signed: String,
}

impl PolyOutput {
    fn new(p: &MonicPoly) -> Self {
        PolyOutput {
            poly: p.to_json(),
            signed: p.to_string(),
        }
    }
}

fn print_poly(p: &MonicPoly, format: Format) {
    match format {
        Format::Json => emit_json(&PolyOutput::new(p)),
        Format::Pretty => {
            outln!("{p}");
            let a: Vec<String> = p.a().iter().map(format_rational).collect();
            outln!("a = [{}]", a.join(", "));
        }
    }
}

#[derive(Serialize)]
struct CommutatorOutput {
    #[serde(flatten)]
    poly: PolyOutput,
    #[serde(skip_serializing_if = "Option::is_none")]
    mc: Option<McReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<Vec<BandCheck>>,
}

fn cmd_commutator(a: &Path, b: &Path, mc: &McArgs, format: Format) -> Outcome {
    let a: Spectrum = read_json(a)?;
    let b: Spectrum = read_json(b)?;
    if a.dim() != b.dim() {
        return Err(Error::SizeMismatch {
            left: a.dim(),
            right: b.dim(),
        }
        .into());
    }
    let poly = commutator_poly(&MonicPoly::from_spectrum(&a), &MonicPoly::from_spectrum(&b))?;
    let (report, checks) = match mc.n {
        None => (None, None),
        Some(_) => {
            let report = mc_commutator_charpoly(&a.to_f64(), &b.to_f64(), &mc.config(McConfig::DEFAULT_N))?;
            let expected: Vec<f64> = poly.a().iter().map(to_f64).collect();
            let checks = report.band_check(&expected)?;
            (Some(report), Some(checks))
        }
    };
    let failed = checks.as_ref().is_some_and(|c| c.iter().any(|c| !c.pass));
    match format {
        Format::Json => emit_json(&CommutatorOutput {
            poly: PolyOutput::new(&poly),
            mc: report,
            checks,
        }),
        Format::Pretty => {
            print_poly(&poly, format);
            if let (Some(report), Some(checks)) = (report, checks) {
                outln!("Monte Carlo: n={} seed={} chunk={}", report.n, report.seed, report.chunk_size);
                outln!("{:<6} {:>22} {:>22} {:>12} {:>8}  result", "coeff", "exact", "mean", "se", "z");
                for c in &checks {
                    let r = if c.pass { "PASS" } else { "FAIL" };
                    outln!("{:<6} {:>22} {:>22} {:>12.3e} {:>8.2}  {r}", c.label, c.expected, c.mean, c.se, c.z);
                }
            }
        }
    }
    if failed {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

fn cmd_weingarten(k: usize, d: usize, caps: &Caps, format: Format) -> Outcome {
    let wg = weingarten(k, d, caps)?;
    match format {
        Format::Json => emit_json(&wg.to_json(Some(d))),
        Format::Pretty => {
            outln!("Wg_{{{k},{d}}}");
            for (rho, v) in wg.values().iter().rev() {
                outln!("  {rho:<16} {v}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct ImmanantOutput {
    lambda: Partition,
    method: &'static str,
    value: String,
}

fn cmd_immanant(lambda: &Partition, input: &Path, method: ImmanantMethod, caps: &Caps, format: Format) -> Outcome {
    let (name, value) = match method {
        ImmanantMethod::Direct => ("direct", immanant_direct(lambda, &read_json::<RationalMatrix>(input)?, caps)?),
        ImmanantMethod::Gj => ("gj", immanant_gj(lambda, &read_json::<RationalMatrix>(input)?, caps)?),
        ImmanantMethod::DeltaMinus => ("delta-minus", imm_delta_minus(lambda, &read_json::<Spectrum>(input)?)?),
    };
    match format {
        Format::Json => emit_json(&ImmanantOutput {
            lambda: lambda.clone(),
            method: name,
            value: format_rational(&value),
        }),
        Format::Pretty => outln!("Imm^{lambda} = {value}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct ValueOutput<T: Serialize> {
    lambda: Partition,
    #[serde(flatten)]
    other: BTreeMap<&'static str, Partition>,
    value: T,
}

fn cmd_character(k: Option<usize>, pair: Option<(Partition, Partition)>, caps: &Caps, format: Format) -> Outcome {
    if let Some((lambda, rho)) = pair {
        let v = character(&lambda, &rho, caps)?;
        match format {
            Format::Json => emit_json(&ValueOutput {
                lambda: lambda.clone(),
                other: BTreeMap::from([("rho", rho.clone())]),
                value: v,
            }),
            Format::Pretty => outln!("χ^{lambda}({rho}) = {v}"),
        }
        return Ok(());
    }
    let k = k.ok_or_else(|| Failure::Input("give --k, or --lambda with --rho".into()))?;
    let table = CharacterTable::new(k, caps)?;
    match format {
        Format::Json => emit_json(&table.to_json_map()),
        Format::Pretty => {
            let parts = finfree::combinatorics::partitions_of(k);
            let labels: Vec<String> = parts.iter().map(ToString::to_string).collect();
            let w = labels.iter().map(String::len).max().unwrap_or(1);
            out!("{:<w$}", "λ \\ ρ");
            for l in &labels {
                out!(" {l:>w$}");
            }
            outln!("");
            for (lam, l) in parts.iter().zip(&labels) {
                out!("{l:<w$}");
                for rho in &parts {
                    out!(" {:>w$}", table.get(lam, rho).expect("in table"));
                }
                outln!("");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct KostkaOutput {
    k: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<u64>>,
}

fn cmd_kostka(k: Option<usize>, pair: Option<(Partition, Partition)>, caps: &Caps, format: Format) -> Outcome {
    if let Some((lambda, mu)) = pair {
        let v = kostka(&lambda, &mu, caps)?;
        match format {
            Format::Json => emit_json(&ValueOutput {
                lambda: lambda.clone(),
                other: BTreeMap::from([("mu", mu.clone())]),
                value: v,
            }),
            Format::Pretty => outln!("K({lambda}, {mu}) = {v}"),
        }
        return Ok(());
    }
    let k = k.ok_or_else(|| Failure::Input("give --k, or --lambda with --mu".into()))?;
    let table = kostka_table(k, caps)?;
    match format {
        Format::Json => emit_json(&KostkaOutput {
            k,
            partitions: table.partitions.clone(),
            values: table.values.clone(),
        }),
        Format::Pretty => {
            let labels: Vec<String> = table.partitions.iter().map(ToString::to_string).collect();
            let w = labels.iter().map(String::len).max().unwrap_or(1);
            out!("{:<w$}", "λ \\ μ");
            for l in &labels {
                out!(" {l:>w$}");
            }
            outln!("");
            for (row, l) in table.values.iter().zip(&labels) {
                out!("{l:<w$}");
                for v in row {
                    out!(" {v:>w$}");
                }
                outln!("");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    suite: &'a str,
    name: &'a str,
    pass: bool,
    detail: &'a str,
}

fn cmd_verify(suite: &str, mc: &McArgs, tables: &[PathBuf], caps: Caps, format: Format) -> Outcome {
    let suite: Suite = suite.parse()?;
    let mut overrides = HashMap::new();
    for path in tables {
        let json: ClassFunctionJson = read_json(path)?;
        let d = json
            .d
            .ok_or_else(|| Failure::Input(format!("{}: Weingarten table needs a \"d\" field", path.display())))?;
        let wg = ClassFunction::from_json(&json)?;
        overrides.insert((wg.k(), d), wg);
    }
    let opts = VerifyOptions {
        caps,
        mc: mc.config(McConfig::DEFAULT_N),
        wg_overrides: overrides,
    };
    let report = verify::run(suite, &opts);
    match format {
        Format::Json => emit_json(
            &report
                .checks
                .iter()
                .map(|c| CheckOutput {
                    suite: c.suite,
                    name: &c.name,
                    pass: c.pass,
                    detail: &c.detail,
                })
                .collect::<Vec<_>>(),
        ),
        Format::Pretty => outln!("{report}"),
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Outcome {
    let caps = cli.caps.caps();
    let format = cli.format;
    match cli.command {
        Command::Conv { op, p, q } => {
            let p: MonicPoly = read_json(&p)?;
            let q: MonicPoly = read_json(&q)?;
            let r = match op {
                ConvOp::Add => boxplus(&p, &q)?,
                ConvOp::Mul => boxtimes(&p, &q)?,
                ConvOp::Sub => boxminus(&p, &q)?,
            };
            print_poly(&r, format);
            Ok(())
        }
        Command::Zpoly { d } => {
            print_poly(&z_poly(d)?, format);
            Ok(())
        }
        Command::Commutator { a, b, mc } => cmd_commutator(&a, &b, &mc, format),
        Command::Weingarten { k, d } => cmd_weingarten(k, d, &caps, format),
        Command::Immanant { lambda, input, method } => cmd_immanant(&lambda, &input, method, &caps, format),
        Command::Character { k, lambda, rho } => cmd_character(k, lambda.zip(rho), &caps, format),
        Command::Kostka { k, lambda, mu } => cmd_kostka(k, lambda.zip(mu), &caps, format),
        Command::Verify { suite, mc, wg_tables } => cmd_verify(&suite, &mc, &wg_tables, caps, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
