//! Subcommands of the `sbdft` binary. `run` returns the process exit code:
//! 0 on success, 2 on parse or argument errors, 3 on shape (length) errors.

pub mod signal_file;

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use sbdft::complexity::{self, measure};
use sbdft::dtmf::{self, DtmfConfig};
use sbdft::{cyclotomic, design_filter, Algorithm, ComplexPoly, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SHAPE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sbdft", version, about = "Single-bin DFT by Goertzel, JCO and JCO-Goertzel")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one DFT bin of a signal file
    Bin(BinArgs),
    /// Print nominal multiplication counts
    Table(TableArgs),
    /// Print the n-th cyclotomic polynomial
    Cyclo {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Print streaming filter taps for one bin
    Filter(FilterArgs),
    /// Synthesize or detect DTMF digits
    Dtmf(DtmfArgs),
}

#[derive(Debug, Args)]
pub struct BinArgs {
    /// Transform length; inferred from the file when omitted
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    /// naive | goertzel | jco | jco-goertzel | stream
    #[arg(long, default_value = "jco-goertzel")]
    pub alg: String,
    #[arg(long)]
    pub input: PathBuf,
    /// Also print measured operation counts
    #[arg(long)]
    pub counts: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Rows as `N:k1,k2,...`; repeatable
    #[arg(long = "spec")]
    pub specs: Vec<String>,
    /// The reference comparison rows
    #[arg(long)]
    pub paper: bool,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DtmfArgs {
    /// Signal file of consecutive blocks to decode
    #[arg(long, conflicts_with_all = ["synth", "out"])]
    pub detect: Option<PathBuf>,
    /// Digits to synthesize, one block each
    #[arg(long, requires = "out")]
    pub synth: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Noise RMS, absolute
    #[arg(long, default_value_t = 0.0)]
    pub noise: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1.0)]
    pub amplitude: f64,
    #[arg(long, default_value = "goertzel")]
    pub alg: String,
}

/// An error carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: EXIT_PARSE, message: message.into() }
    }

    fn shape(message: impl Into<String>) -> Self {
        Failure { code: EXIT_SHAPE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SampleCount { .. } | Error::BlockLength { .. } | Error::EmptySignal => EXIT_SHAPE,
            _ => EXIT_PARSE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::parse(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Formats `a + bj` with shortest round-trip decimals.
pub fn format_complex(z: Complex64) -> String {
    let clean = |x: f64| if x == 0.0 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{re} {sign} {}j", im.abs())
}

fn read_signal(path: &PathBuf) -> Result<Vec<Complex64>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
    signal_file::parse(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn parse_alg(tag: &str) -> Result<Algorithm, Failure> {
    tag.parse::<Algorithm>().map_err(Failure::from)
}

fn cmd_bin(args: BinArgs, out: &mut dyn Write) -> CmdResult {
    let alg = parse_alg(&args.alg)?;
    let samples = read_signal(&args.input)?;
    if let Some(n) = args.n {
        if n != samples.len() {
            return Err(Failure::shape(format!("--n {n} but file has {} samples", samples.len())));
        }
    }
    let v = ComplexPoly::new(samples)?;
    let r = measure(alg, &v, args.k)?;
    writeln!(out, "Vk = {}", format_complex(r.value))?;
    if args.counts {
        writeln!(out, "mults={} adds={}", r.counts.real_mults, r.counts.real_adds)?;
    }
    Ok(())
}

/// Parses `N:k1,k2,...`.
pub fn parse_table_spec(spec: &str) -> Result<(usize, Vec<i64>), Failure> {
    let bad = || Failure::parse(format!("bad table spec `{spec}`, expected N:k1,k2,..."));
    let (n, ks) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    let ks = ks
        .split(',')
        .map(|k| k.trim().parse::<i64>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((n, ks))
}

fn cmd_table(args: TableArgs, out: &mut dyn Write) -> CmdResult {
    let mut rows = Vec::new();
    if args.paper {
        rows.extend(complexity::paper_table_spec());
    }
    for s in &args.specs {
        rows.push(parse_table_spec(s)?);
    }
    if rows.is_empty() {
        return Err(Failure::parse("give --paper or at least one --spec"));
    }
    let table = complexity::complexity_table(&rows)?;
    let text = if args.csv { complexity::render_csv(&table) } else { complexity::render_text(&table) };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn cmd_cyclo(n: i64, out: &mut dyn Write) -> CmdResult {
    if n < 1 {
        return Err(Failure::parse(format!("N must be >= 1, got {n}")));
    }
    let phi = cyclotomic::cyclotomic(n as u64)?;
    let coeffs: Vec<String> = phi.coeffs().iter().map(i64::to_string).collect();
    writeln!(out, "{}", coeffs.join(" "))?;
    writeln!(out, "{phi}")?;
    Ok(())
}

fn cmd_filter(args: FilterArgs, out: &mut dyn Write) -> CmdResult {
    if args.n == 0 {
        return Err(Failure::parse("--n must be >= 1"));
    }
    let spec = design_filter(args.n, args.k)?;
    if args.json {
        writeln!(out, "{}", spec.to_json())?;
        return Ok(());
    }
    writeln!(out, "N={} k={} L={}", spec.n, spec.k, spec.order)?;
    for (m, a) in spec.a.iter().enumerate() {
        writeln!(out, "a{m} = {}", format_complex(*a))?;
    }
    let b: Vec<String> = spec.b.iter().map(i64::to_string).collect();
    writeln!(out, "b = [{}]", b.join(", "))?;
    Ok(())
}

fn cmd_dtmf(args: DtmfArgs, out: &mut dyn Write) -> CmdResult {
    let config = DtmfConfig::default();
    let alg = parse_alg(&args.alg)?;
    if let Some(path) = &args.detect {
        let samples = read_signal(path)?;
        let n = config.block_size;
        if samples.len() % n != 0 {
            return Err(Failure::shape(format!(
                "{} samples is not a whole number of {n}-sample blocks",
                samples.len()
            )));
        }
        let real: Vec<f64> = samples.iter().map(|c| c.re).collect();
        for block in real.chunks(n) {
            let d = dtmf::detect(block, &config, alg)?;
            writeln!(out, "{}", d.unwrap_or('-'))?;
        }
        return Ok(());
    }
    let (Some(digits), Some(path)) = (&args.synth, &args.out) else {
        return Err(Failure::parse("give --detect PATH or --synth DIGITS --out PATH"));
    };
    if !args.noise.is_finite() || args.noise < 0.0 {
        return Err(Failure::parse("--noise must be a finite, non-negative RMS"));
    }
    let mut samples = Vec::with_capacity(digits.len() * config.block_size);
    for (i, d) in digits.chars().enumerate() {
        let block = dtmf::synthesize(d, &config, args.amplitude, args.noise, args.seed.wrapping_add(i as u64))?;
        samples.extend(block);
    }
    let comment = format!(
        "dtmf digits={digits} block={} rate={} noise={} seed={}",
        config.block_size, config.sample_rate, args.noise, args.seed
    );
    fs::write(path, signal_file::render_real(&samples, Some(&comment)))?;
    writeln!(out, "wrote {} blocks to {}", digits.chars().count(), path.display())?;
    Ok(())
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Bin(a) => cmd_bin(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Cyclo { n } => cmd_cyclo(n, out),
        Command::Filter(a) => cmd_filter(a, out),
        Command::Dtmf(a) => cmd_dtmf(a, out),
    }
}

/// Parses arguments and runs; writes results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
