//! The `jackbern` command line.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 usage error, 3 parameter
//! outside the supported domain, 4 I/O error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bernoulli::{multiple_mv_bernoulli, mv_bernoulli, OmegaTuple, DEFAULT_SEED};
use crate::cache::{DiskCache, ENV_VAR};
use crate::error::Error;
use crate::jack::{jack_p, jack_phi, jack_psi};
use crate::json::sympoly_to_json;
use crate::memo::{Family, Key};
use crate::partition::{enumerate_partitions, Partition};
use crate::rational::{ensure_positive_d, format_rational, parse_rational, Rational};
use crate::shifted::{binomial, shifted_jack};
use crate::suites::{self, Suite, SuiteConfig};
use crate::sympoly::{latex_rational, SymPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "jackbern", version, about = "Exact Jack polynomials and multivariate Bernoulli polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one polynomial or coefficient.
    Compute {
        #[command(subcommand)]
        what: ComputeCmd,
    },
    /// Run a verification suite; prints one JSON report per line.
    Verify(VerifyArgs),
    /// Manage the on-disk coefficient cache.
    Cache {
        #[command(subcommand)]
        action: CacheCmd,
    },
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Number of variables.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    r: u16,
    /// Parameter d as "p/q".
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    d: Rational,
    /// Partition as "a,b,c".
    #[arg(long, value_parser = parse_partition_arg, default_value = "")]
    partition: Partition,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Read and write the disk cache in this directory (also $JACKBERN_CACHE).
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ComputeCmd {
    /// Jack polynomial P, Φ or Ψ.
    Jack {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = JackFamily::P)]
        family: JackFamily,
    },
    /// Shifted (interpolation) Jack polynomial.
    ShiftedJack {
        #[command(flatten)]
        common: Common,
    },
    /// Generalized binomial coefficient binom(partition, of).
    Binom {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_partition_arg)]
        of: Partition,
    },
    /// Multivariate Bernoulli polynomial.
    Bernoulli {
        #[command(flatten)]
        common: Common,
    },
    /// Multiple multivariate Bernoulli polynomial.
    MultiBernoulli {
        #[command(flatten)]
        common: Common,
        /// Periods as "w1,w2,…".
        #[arg(long, value_parser = parse_rationals_arg, allow_hyphen_values = true)]
        omega: RationalList,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    r: u16,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    d: Rational,
    #[arg(long, default_value_t = 4)]
    max_weight: u32,
    /// Periods for the multiple Bernoulli suites; every nonempty prefix is run.
    #[arg(long, value_parser = parse_rationals_arg, default_value = "1,2,3", allow_hyphen_values = true)]
    omega: RationalList,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum CacheCmd {
    /// Precompute Jack and shifted Jack polynomials up to a weight.
    Warm {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        r: u16,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        d: Rational,
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Delete every cache entry.
    Clear {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Entry counts per (r, d, family).
    Stats {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum JackFamily {
    #[value(name = "P")]
    P,
    #[value(name = "Phi")]
    Phi,
    #[value(name = "Psi")]
    Psi,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Thm1,
    Thm2,
    Pieri,
    SpecialValues,
    ClosedForms,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Thm1 => Suite::Thm1,
            SuiteArg::Thm2 => Suite::Thm2,
            SuiteArg::Pieri => Suite::Pieri,
            SuiteArg::SpecialValues => Suite::SpecialValues,
            SuiteArg::ClosedForms => Suite::ClosedForms,
            SuiteArg::All => Suite::All,
        }
    }
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Clone, Debug)]
struct RationalList(Vec<Rational>);

fn parse_rationals_arg(s: &str) -> Result<RationalList, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_rational_arg(t.trim()))
        .collect::<Result<_, _>>()
        .map(RationalList)
}

fn parse_partition_arg(s: &str) -> Result<Partition, String> {
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io { .. } => EXIT_IO,
        _ => EXIT_DOMAIN,
    }
}

fn cache_for(flag: Option<PathBuf>) -> Result<Option<DiskCache>, Error> {
    let dir = flag.or_else(|| std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()).map(PathBuf::from));
    dir.map(DiskCache::open).transpose()
}

fn cache_dir_or_default(flag: Option<PathBuf>) -> Result<DiskCache, Error> {
    let dir = flag.or_else(DiskCache::default_dir).ok_or_else(|| Error::Io {
        path: "<cache>".into(),
        message: "no cache directory: pass --dir or set JACKBERN_CACHE".into(),
    })?;
    DiskCache::open(dir)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match cli.command {
        Command::Compute { what } => compute(what, out),
        Command::Verify(args) => verify(args, out),
        Command::Cache { action } => cache(action, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit_poly(out: &mut dyn Write, f: &SymPoly, family: Option<&str>, format: Format) -> Result<(), Error> {
    let text = match format {
        Format::Plain => f.to_plain(),
        Format::Latex => f.to_latex(),
        Format::Json => sympoly_to_json(f, family),
    };
    write_line(out, &text)
}

fn write_line(out: &mut dyn Write, text: &str) -> Result<(), Error> {
    writeln!(out, "{text}").map_err(|e| Error::io(std::path::Path::new("<stdout>"), e))
}

fn compute(what: ComputeCmd, out: &mut dyn Write) -> Result<i32, Error> {
    let common = match &what {
        ComputeCmd::Jack { common, .. }
        | ComputeCmd::ShiftedJack { common }
        | ComputeCmd::Binom { common, .. }
        | ComputeCmd::Bernoulli { common }
        | ComputeCmd::MultiBernoulli { common, .. } => common.clone(),
    };
    let r = common.r as usize;
    let d = &common.d;
    let m = &common.partition;
    ensure_positive_d(d)?;
    m.check_fits(r)?;
    let cache = cache_for(common.cache_dir.clone())?;
    if let Some(c) = &cache {
        c.load_into_memo()?;
    }
    match what {
        ComputeCmd::Jack { family, .. } => {
            let (f, tag) = match family {
                JackFamily::P => ((*jack_p(m, r, d)?).clone(), "P"),
                JackFamily::Phi => (jack_phi(m, r, d)?, "Phi"),
                JackFamily::Psi => (jack_psi(m, r, d)?, "Psi"),
            };
            emit_poly(out, &f, Some(tag), common.format)?;
        }
        ComputeCmd::ShiftedJack { .. } => {
            let sj = shifted_jack(m, r, d)?;
            emit_poly(out, &sj.poly, Some("Pip"), common.format)?;
        }
        ComputeCmd::Binom { of, .. } => {
            of.check_fits(r)?;
            let v = binomial(m, &of, r, d)?;
            let text = match common.format {
                Format::Plain => format_rational(&v),
                Format::Latex => latex_rational(&v),
                Format::Json => serde_json::json!({
                    "r": r,
                    "d": format_rational(d),
                    "partition": m.padded(r),
                    "of": of.padded(r),
                    "value": format_rational(&v),
                })
                .to_string(),
            };
            write_line(out, &text)?;
        }
        ComputeCmd::Bernoulli { .. } => {
            emit_poly(out, &mv_bernoulli(m, r, d)?, None, common.format)?;
        }
        ComputeCmd::MultiBernoulli { omega, .. } => {
            let w = OmegaTuple::new(omega.0)?;
            emit_poly(out, &multiple_mv_bernoulli(m, &w, r, d)?, None, common.format)?;
        }
    }
    if let Some(c) = &cache {
        c.persist_memo()?;
    }
    Ok(EXIT_OK)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32, Error> {
    ensure_positive_d(&args.d)?;
    let cfg = SuiteConfig {
        r: args.r as usize,
        d: args.d,
        max_weight: args.max_weight,
        omega: OmegaTuple::new(args.omega.0)?,
        seed: args.seed,
    };
    let cache = cache_for(args.cache_dir)?;
    if let Some(c) = &cache {
        c.load_into_memo()?;
    }
    let reports = suites::run(args.suite.into(), &cfg)?;
    let mut code = EXIT_OK;
    for rep in &reports {
        write_line(out, &rep.to_json_line())?;
        if !rep.passed() {
            code = EXIT_IDENTITY;
        }
    }
    if let Some(c) = &cache {
        c.persist_memo()?;
    }
    Ok(code)
}

fn cache(action: CacheCmd, out: &mut dyn Write) -> Result<i32, Error> {
    match action {
        CacheCmd::Warm { r, d, max_weight, dir } => {
            ensure_positive_d(&d)?;
            let cache = cache_dir_or_default(dir)?;
            let r = r as usize;
            let (mut written, mut hits) = (0, 0);
            for m in enumerate_partitions(r, max_weight) {
                let entries = [
                    (Family::P, (*jack_p(&m, r, &d)?).clone()),
                    (Family::Pip, (*shifted_jack(&m, r, &d)?.poly).clone()),
                ];
                for (family, poly) in entries {
                    let key = Key {
                        family,
                        r,
                        d: d.clone(),
                        partition: m.clone(),
                    };
                    if cache.store(&key, &poly)? {
                        written += 1;
                    } else {
                        hits += 1;
                    }
                }
            }
            write_line(
                out,
                &format!(
                    "warm r={r} d={}: {} entries, {written} written, {hits} hits",
                    format_rational(&d),
                    written + hits
                ),
            )?;
        }
        CacheCmd::Clear { dir } => {
            let n = cache_dir_or_default(dir)?.clear()?;
            write_line(out, &format!("removed {n} entries"))?;
        }
        CacheCmd::Stats { dir } => {
            let stats = cache_dir_or_default(dir)?.stats()?;
            let mut total = 0;
            for (slot, n) in &stats {
                total += n;
                let line = match slot {
                    Some((r, d, family)) => format!("r={r} d={d} {}: {n}", family.as_str()),
                    None => format!("invalid: {n}"),
                };
                write_line(out, &line)?;
            }
            write_line(out, &format!("total: {total}"))?;
        }
    }
    Ok(EXIT_OK)
}
