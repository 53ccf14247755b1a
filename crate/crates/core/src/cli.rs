//! Command-line front end. Exit codes: 0 when every requested check passes,
//! 1 when a check fails, 2 for invalid arguments or parameters.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::curve::{
    affine_complete_add, on_curve, proj_add, scalar_mul, AffineGroup, AffineParams, AffinePoint, ProjParams, ProjPoint,
    ProjectiveGroup,
};
use crate::identities::{check_entry, run_all, Mutation, RunOptions};
use crate::oracle::{
    affine_axiom_sweep, dichotomy_sweep, enumerate_points, enumerate_projective, equivariance_check,
    fixed_point_free_check, jacobi_quartic_check, projective_axiom_sweep, semi_associativity_check,
    well_defined_covering_check, DEFAULT_PRIME_CAP,
};
use crate::reduce::DEFAULT_AUDIT_TRIALS;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "edwards-proof", version, about = "Certified Edwards curve group law")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every identity of the group-law proof by polynomial division.
    Verify(VerifyArgs),
    /// Arithmetic on a curve over a prime field.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Exhaustive checks over a small curve.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Time the generic associativity entry.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only this entry (repeatable).
    #[arg(long = "entry")]
    pub entries: Vec<String>,
    /// Skip the t-form entries.
    #[arg(long)]
    pub cd_only: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random evaluations per certificate.
    #[arg(long, default_value_t = DEFAULT_AUDIT_TRIALS)]
    pub trials: usize,
    /// Record wall time per entry.
    #[arg(long)]
    pub timings: bool,
    /// Write every certificate as JSON under this directory.
    #[arg(long, value_name = "DIR")]
    pub emit_certs: Option<PathBuf>,
    /// Flip the sign of one numerator term of the base law, as COORD:TERM.
    #[arg(long, value_name = "COORD:TERM", value_parser = parse_mutation)]
    pub mutate: Option<Mutation>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

fn parse_mutation(s: &str) -> Result<Mutation, String> {
    let (c, t) = s.split_once(':').ok_or("expected COORD:TERM")?;
    let coordinate: usize = c.parse().map_err(|_| "bad coordinate")?;
    let term: usize = t.parse().map_err(|_| "bad term")?;
    if coordinate > 1 || term > 1 {
        return Err("coordinate and term are 0 or 1".into());
    }
    Ok(Mutation { coordinate, term })
}

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    /// Odd prime modulus.
    #[arg(short = 'p', long = "prime")]
    pub p: u64,
    /// Coefficient c of x^2 + c*y^2 = 1 + d*x^2*y^2.
    #[arg(short = 'c', allow_negative_numbers = true, conflicts_with = "t")]
    pub c: Option<i64>,
    /// Coefficient d of x^2 + c*y^2 = 1 + d*x^2*y^2.
    #[arg(short = 'd', allow_negative_numbers = true, conflicts_with = "t")]
    pub d: Option<i64>,
    /// Parameter t of the form x^2 + y^2 = 1 + t^2*x^2*y^2 (glued curve).
    #[arg(short = 't', allow_negative_numbers = true)]
    pub t: Option<i64>,
    /// Largest modulus accepted for enumeration.
    #[arg(long, default_value_t = DEFAULT_PRIME_CAP)]
    pub cap: u64,
}

#[derive(Debug, Subcommand)]
pub enum CurveCommand {
    /// List all points.
    Points {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Add two points, given as "(x,y)" or, on the glued curve, "[(x,y),i]".
    Add {
        #[command(flatten)]
        curve: CurveArgs,
        a: String,
        b: String,
    },
    /// Multiply a point by an integer.
    Mul {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        point: String,
    },
    /// Validate the parameters.
    Check {
        #[command(flatten)]
        curve: CurveArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Group axioms over all pairs and triples.
    Sweep {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Classify every pair of points of a t-form curve.
    Dichotomy {
        #[command(flatten)]
        curve: CurveArgs,
    },
    /// Covering, well-definedness, free action, equivariance, semi-associativity.
    Wellformed {
        #[command(flatten)]
        curve: CurveArgs,
    },
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 5)]
    pub runs: usize,
}

enum Params {
    Affine(AffineParams),
    Projective(ProjParams),
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

impl CurveArgs {
    fn params(&self) -> Result<Params, Usage> {
        match (self.t, self.c, self.d) {
            (Some(t), _, _) => Ok(Params::Projective(ProjParams::from_ints(self.p, t)?)),
            (None, c, Some(d)) => Ok(Params::Affine(AffineParams::from_ints(self.p, c.unwrap_or(1), d)?)),
            (None, _, None) => Err(Usage("give either -d (with optional -c) or -t".into())),
        }
    }

    /// Affine parameters for which the base law is complete.
    fn complete(&self) -> Result<Params, Usage> {
        let params = self.params()?;
        if let Params::Affine(a) = &params {
            if let Some(why) = a.incompleteness() {
                return Err(Usage(format!("{why}: affine completeness fails")));
            }
        }
        Ok(params)
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn json<T: Serialize>(&mut self, value: &T) {
        let _ = writeln!(self.out, "{}", serde_json::to_string_pretty(value).expect("serializable"));
    }

    fn line(&mut self, s: impl std::fmt::Display) {
        let _ = writeln!(self.out, "{s}");
    }
}

fn code(ok: bool) -> i32 {
    if ok {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run_cli`] writing to the given streams.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_PASS
            };
        }
    };
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::Verify(args) => verify(&args, &mut io),
        Command::Curve(cmd) => curve(&cmd, &mut io),
        Command::Oracle(cmd) => oracle(&cmd, &mut io),
        Command::Bench(args) => bench(&args, &mut io),
    };
    match result {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn verify(args: &VerifyArgs, io: &mut Io) -> Result<i32, Usage> {
    let opts = RunOptions {
        entries: args.entries.clone(),
        cd_only: args.cd_only,
        seed: args.seed,
        trials: args.trials,
        timings: args.timings,
        mutation: args.mutate,
    };
    let report = run_all(&opts)?;
    if let Some(dir) = &args.emit_certs {
        let n = report.write_certificates(dir)?;
        let _ = writeln!(io.err, "wrote {n} certificates to {}", dir.display());
    }
    match args.format {
        Format::Json => io.json(&report),
        Format::Text => {
            let _ = write!(io.out, "{}", report.summary());
        }
    }
    Ok(code(report.passed()))
}

fn parse_proj(params: &ProjParams, s: &str) -> Result<ProjPoint, Usage> {
    let a = ProjPoint::parse(params.field, s)?;
    if !on_curve(params, &a.point) {
        return Err(Usage(format!("{s} is not on the curve")));
    }
    Ok(a.canonical(params))
}

fn parse_affine(params: &AffineParams, s: &str) -> Result<AffinePoint, Usage> {
    let a = AffinePoint::parse(params.field, s)?;
    if !on_curve(params, &a) {
        return Err(Usage(format!("{s} is not on the curve")));
    }
    Ok(a)
}

fn curve(cmd: &CurveCommand, io: &mut Io) -> Result<i32, Usage> {
    match cmd {
        CurveCommand::Points { curve, format } => {
            let (affine, proj) = match curve.params()? {
                Params::Affine(a) => (enumerate_points(&a, curve.cap)?, None),
                Params::Projective(t) => (enumerate_points(&t, curve.cap)?, Some(enumerate_projective(&t, curve.cap)?)),
            };
            match format {
                Format::Json => io.json(&json!({
                    "affine_count": affine.len(),
                    "affine": affine,
                    "projective_count": proj.as_ref().map(Vec::len),
                    "projective": proj,
                })),
                Format::Text => match &proj {
                    None => affine.iter().for_each(|p| io.line(p)),
                    Some(proj) => proj.iter().for_each(|p| io.line(p)),
                },
            }
            Ok(EXIT_PASS)
        }
        CurveCommand::Add { curve, a, b } => {
            match curve.complete()? {
                Params::Affine(params) => {
                    let (a, b) = (parse_affine(&params, a)?, parse_affine(&params, b)?);
                    io.line(affine_complete_add(&params, &a, &b)?);
                }
                Params::Projective(params) => {
                    let (a, b) = (parse_proj(&params, a)?, parse_proj(&params, b)?);
                    io.line(proj_add(&params, &a, &b));
                }
            }
            Ok(EXIT_PASS)
        }
        CurveCommand::Mul { curve, n, point } => {
            match curve.complete()? {
                Params::Affine(params) => {
                    let a = parse_affine(&params, point)?;
                    io.line(scalar_mul(&AffineGroup::new(params)?, *n, &a)?);
                }
                Params::Projective(params) => {
                    let a = parse_proj(&params, point)?;
                    io.line(scalar_mul(&ProjectiveGroup::new(params), *n, &a)?);
                }
            }
            Ok(EXIT_PASS)
        }
        CurveCommand::Check { curve } => {
            match curve.complete()? {
                Params::Affine(params) => io.line(format!("{params}: affine addition is complete")),
                Params::Projective(params) => io.line(format!("{params}: valid t-form parameters")),
            }
            Ok(EXIT_PASS)
        }
    }
}

fn projective_only(curve: &CurveArgs) -> Result<ProjParams, Usage> {
    match curve.params()? {
        Params::Projective(p) => Ok(p),
        Params::Affine(_) => Err(Usage("this check needs a t-form curve (-t)".into())),
    }
}

fn oracle(cmd: &OracleCommand, io: &mut Io) -> Result<i32, Usage> {
    match cmd {
        OracleCommand::Sweep { curve } => match curve.complete()? {
            Params::Affine(params) => {
                let sweep = affine_axiom_sweep(&params, curve.cap)?;
                let quartic = jacobi_quartic_check(&params, format!("affine {params}"), curve.cap)?;
                io.json(&json!({ "sweep": sweep, "jacobi_quartic": quartic }));
                Ok(code(sweep.passed() && quartic.passed()))
            }
            Params::Projective(params) => {
                let sweep = projective_axiom_sweep(&params, curve.cap)?;
                io.json(&json!({ "sweep": sweep }));
                Ok(code(sweep.passed()))
            }
        },
        OracleCommand::Dichotomy { curve } => {
            let params = projective_only(curve)?;
            let report = dichotomy_sweep(&params, curve.cap)?;
            io.json(&report);
            Ok(code(report.passed()))
        }
        OracleCommand::Wellformed { curve } => {
            let params = projective_only(curve)?;
            let covering = well_defined_covering_check(&params, curve.cap)?;
            let free = fixed_point_free_check(&params, curve.cap)?;
            let equivariance = equivariance_check(&params, curve.cap)?;
            let semi = semi_associativity_check(&params, curve.cap)?;
            io.json(&json!({
                "covering": covering,
                "fixed_point_free": free,
                "equivariance": equivariance,
                "semi_associativity": semi,
            }));
            Ok(code(covering.passed() && free.passed() && equivariance.passed() && semi.passed()))
        }
    }
}

fn bench(args: &BenchArgs, io: &mut Io) -> Result<i32, Usage> {
    let mut times = Vec::new();
    let mut ok = true;
    for _ in 0..args.runs.max(1) {
        let start = Instant::now();
        let outcome = check_entry("generic-associativity")?;
        times.push(start.elapsed().as_secs_f64() * 1e3);
        ok &= outcome.status.is_pass();
    }
    times.sort_by(f64::total_cmp);
    io.json(&json!({
        "entry": "generic-associativity",
        "runs": times.len(),
        "min_ms": times[0],
        "median_ms": times[times.len() / 2],
        "status": if ok { "PASS" } else { "FAIL" },
    }));
    Ok(code(ok))
}
