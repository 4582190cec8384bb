use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bent_core::constructions::{
    build_generic, carlet_build, check_property_pr, cornew_build, correduced_build,
    mesnager2_build, mesnager_build, zlj_build,
};
use bent_core::families::{
    corn4t_build, cort_m_build, gold_build, gold_dual_build, mm_build, mm_dual_build,
    thfromgold_build, thmm_build,
};
use bent_core::field::{default_modulus, MAX_DEGREE};
use bent_core::format::{read_permutation, read_truth_table, read_tuple, write_truth_table, write_tuple};
use bent_core::search::{
    ea_fingerprint, find_alphas, find_gold_lambdas, find_mu_tuples, find_self_dual_lambdas,
};
use bent_core::{
    BooleanFunction, ConstructionReport, Error, FieldElement, FieldSpec, GoldParams, MMParams,
    MuMode, MuSearchSpec, Pairing, Permutation, VectorialFunction,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod report;

use report::Report;

const DEFAULT_MAX_N: u32 = 16;

#[derive(Parser, Debug)]
#[command(name = "bent", version, about = "Construct and verify bent functions over GF(2^n)")]
struct Cli {
    /// Inner product used for spectra and duals.
    #[arg(long, global = true, value_enum, default_value_t = PairingKind::Dot)]
    pairing: PairingKind,
    /// Field modulus in hex, including the leading term.
    #[arg(long, global = true, value_parser = parse_hex)]
    modulus: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PairingKind {
    Dot,
    Trace,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Field parameters.
    Field {
        #[command(subcommand)]
        command: FieldCommand,
    },
    /// Operators on a single truth table.
    Fn(FnArgs),
    /// Build a function and its dual, then verify both spectrally.
    Construct(Box<ConstructArgs>),
    /// Parameter searches.
    Search {
        #[command(subcommand)]
        command: SearchCommand,
    },
    /// Certificate checks.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Algebraic degree and derivative-degree distribution.
    Fingerprint {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum FieldCommand {
    Info {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FnOp {
    Walsh,
    Bent,
    Dual,
    Degree,
    Anf,
    Derivative,
}

#[derive(Args, Debug)]
struct FnArgs {
    #[arg(value_enum)]
    op: FnOp,
    #[arg(long = "in")]
    input: PathBuf,
    /// Direction for `derivative`.
    #[arg(long, value_parser = parse_hex)]
    mu: Option<u32>,
    /// Write table output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    Gold,
    GoldDual,
    Thm8,
    Cor9,
    Cor10,
    Mm,
    MmDual,
    Thm12,
    Zlj,
    Cornew,
    Correduced,
    Carlet,
    Mesnager1,
    Mesnager2,
    Generic,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: Construction,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long, value_parser = parse_hex)]
    lambda: Option<u32>,
    #[arg(long, value_parser = parse_hex)]
    theta: Option<u32>,
    #[arg(long, value_parser = parse_hex)]
    omega: Option<u32>,
    /// Hex elements separated by spaces or commas.
    #[arg(long)]
    mus: Option<String>,
    #[arg(long, value_parser = parse_hex)]
    alpha: Option<u32>,
    #[arg(long, value_parser = parse_hex)]
    a: Option<u32>,
    #[arg(long, value_parser = parse_hex)]
    b: Option<u32>,
    /// Outer function as a binary truth-table string.
    #[arg(long = "F")]
    outer: Option<String>,
    #[arg(long)]
    f: Option<PathBuf>,
    #[arg(long)]
    g: Option<PathBuf>,
    #[arg(long)]
    f1: Option<PathBuf>,
    #[arg(long)]
    f2: Option<PathBuf>,
    #[arg(long)]
    f3: Option<PathBuf>,
    #[arg(long, num_args = 1..)]
    phi: Vec<PathBuf>,
    /// Permutation file of GF(2^m).
    #[arg(long)]
    pi: Option<PathBuf>,
    /// Power permutation exponent, decimal.
    #[arg(long, conflicts_with = "pi")]
    pi_power: Option<u64>,
    /// Function of GF(2^m) added to the family member.
    #[arg(long)]
    g_sub: Option<PathBuf>,
    #[arg(long)]
    out_h: Option<PathBuf>,
    #[arg(long)]
    out_hstar: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SearchMode {
    SecondDerivative,
    GoldTrace,
    Cor9Trace,
}

#[derive(Subcommand, Debug)]
enum SearchCommand {
    /// Increasing mu tuples satisfying a pairwise condition.
    Mus {
        #[arg(long, value_enum)]
        mode: SearchMode,
        /// Function whose second derivatives are tested.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Test the dual of `--in` instead.
        #[arg(long)]
        dual: bool,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long, value_parser = parse_hex)]
        lambda: Option<u32>,
        #[arg(long, value_parser = parse_hex)]
        theta: Option<u32>,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        /// Resume strictly after this tuple.
        #[arg(long)]
        cursor: Option<String>,
        #[arg(long)]
        allow_dependent: bool,
    },
    /// Elements of the orthogonal complement of the mus.
    Alphas {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        mus: String,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Bent-admissible Gold coefficients.
    Lambdas {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        #[arg(long, value_parser = parse_hex)]
        after: Option<u32>,
        /// `lambda` in GF(2^(n/2)) with `lambda + lambda^(2^(n/4)) = 1`.
        #[arg(long)]
        self_dual: bool,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Checks the certificate property for `f` and the components of `phi`.
    Pr {
        #[arg(long)]
        f: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        phi: Vec<PathBuf>,
    },
}

fn parse_hex(s: &str) -> Result<u32, String> {
    u32::from_str_radix(s.trim_start_matches("0x"), 16).map_err(|e| format!("bad hex {s:?}: {e}"))
}

enum Failure {
    Core(Error),
    /// A construction ran but the spectral check rejected it.
    Rejected,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<(), Failure>;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotBent(_) => 3,
        Error::SideConditionFailed { .. }
        | Error::NotBentAdmissible(_)
        | Error::CertificateInvalid
        | Error::ZeroDenominator => 4,
        _ => 2,
    }
}

fn max_n() -> u32 {
    std::env::var("BENT_MAX_N")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
        .min(MAX_DEGREE)
}

fn check_n(n: u32) -> Result<(), Error> {
    let max = max_n();
    if n > max {
        return Err(Error::InvalidParameter(format!(
            "n = {n} exceeds BENT_MAX_N = {max}"
        )));
    }
    Ok(())
}

fn missing(flag: &str) -> Error {
    Error::InvalidParameter(format!("missing --{flag}"))
}

fn load_table(path: &Path) -> Result<BooleanFunction, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let f = read_truth_table(&text)?;
    check_n(f.n())?;
    Ok(f)
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))
}

struct Ctx {
    pairing: PairingKind,
    modulus: Option<u32>,
    command: String,
    start: Instant,
}

impl Ctx {
    fn field(&self, n: u32) -> Result<FieldSpec, Error> {
        check_n(n)?;
        FieldSpec::new(n, self.modulus)
    }

    fn pairing(&self, n: u32) -> Result<Pairing, Error> {
        match self.pairing {
            PairingKind::Dot => {
                check_n(n)?;
                Ok(Pairing::dot(n))
            }
            PairingKind::Trace => Ok(Pairing::trace(&self.field(n)?)),
        }
    }

    fn emit(&self, report: &Report) {
        print!("{}", report.render(self.start.elapsed()));
    }
}

fn parse_mus(s: &str, n: u32) -> Result<Vec<FieldElement>, Error> {
    let mus = read_tuple(s)?;
    if let Some(&bad) = mus.iter().find(|&&mu| u64::from(mu) >> n != 0) {
        return Err(Error::InvalidParameter(format!("mu {bad:x} out of range for n = {n}")));
    }
    Ok(mus)
}

fn field_info(ctx: &Ctx, n: u32) -> CmdResult {
    let spec = ctx.field(n)?;
    let mut report = Report::new(&ctx.command);
    report.push("field", &spec);
    report.push("order", spec.order());
    report.push("default_modulus", format!("{:x}", default_modulus(n)?));
    let subfields = spec.subfield_degrees();
    report.push(
        "subfields",
        subfields.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
    );
    match spec.m() {
        Some(m) => report.push("m", m),
        None => report.push("m", "undefined"),
    }
    ctx.emit(&report);
    Ok(())
}

fn run_fn(ctx: &Ctx, args: &FnArgs) -> CmdResult {
    let f = load_table(&args.input)?;
    let pairing = ctx.pairing(f.n())?;
    let table_out = |g: &BooleanFunction| -> CmdResult {
        let text = write_truth_table(g);
        match &args.out {
            Some(p) => write_file(p, &text)?,
            None => print!("{text}"),
        }
        Ok(())
    };
    match args.op {
        FnOp::Walsh => {
            let w = pairing.spectrum(&f)?;
            let line: Vec<String> = w.values().iter().map(i32::to_string).collect();
            println!("{}", line.join(" "));
        }
        FnOp::Bent => println!("bent: {}", pairing.is_bent(&f)),
        FnOp::Dual => table_out(&pairing.dual(&f)?)?,
        FnOp::Degree => println!("{}", f.algebraic_degree()),
        FnOp::Anf => println!("{}", f.anf()),
        FnOp::Derivative => {
            let mu = args.mu.ok_or_else(|| missing("mu"))?;
            if u64::from(mu) >> f.n() != 0 {
                return Err(Error::InvalidParameter(format!("mu {mu:x} out of range")).into());
            }
            table_out(&f.derivative(mu))?;
        }
    }
    Ok(())
}

fn gold_params(ctx: &Ctx, a: &ConstructArgs) -> Result<GoldParams, Error> {
    let spec = ctx.field(a.n.ok_or_else(|| missing("n"))?)?;
    GoldParams::new(&spec, a.lambda.ok_or_else(|| missing("lambda"))?, a.t.ok_or_else(|| missing("t"))?)
}

fn mm_params(ctx: &Ctx, a: &ConstructArgs) -> Result<MMParams, Error> {
    let spec = ctx.field(a.n.ok_or_else(|| missing("n"))?)?;
    let m = spec
        .m()
        .ok_or_else(|| Error::InvalidParameter(format!("n = {} is odd", spec.n())))?;
    let pi = match (&a.pi, a.pi_power) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            let (pm, table) = read_permutation(&text)?;
            if pm != m {
                return Err(Error::ArityMismatch { expected: m, got: pm });
            }
            Permutation::Table(table)
        }
        (None, k) => Permutation::Power(k.unwrap_or(1)),
    };
    let g_sub = match &a.g_sub {
        Some(path) => load_table(path)?,
        None => BooleanFunction::zero(m),
    };
    let p = MMParams::new(
        &spec,
        a.lambda.ok_or_else(|| missing("lambda"))?,
        a.t.unwrap_or(0),
        pi,
        g_sub,
    )?;
    match a.omega {
        Some(w) => p.with_omega(w),
        None => Ok(p),
    }
}

struct Common {
    mus: Vec<FieldElement>,
    alpha: FieldElement,
    outer: BooleanFunction,
}

fn common(a: &ConstructArgs, n: u32, need_alpha: bool) -> Result<Common, Error> {
    let mus = parse_mus(a.mus.as_deref().ok_or_else(|| missing("mus"))?, n)?;
    let alpha = match (a.alpha, need_alpha) {
        (Some(v), _) => v,
        (None, false) => 0,
        (None, true) => return Err(missing("alpha")),
    };
    if u64::from(alpha) >> n != 0 {
        return Err(Error::InvalidParameter(format!("alpha {alpha:x} out of range")));
    }
    let outer = BooleanFunction::from_table_string(a.outer.as_deref().ok_or_else(|| missing("F"))?)?;
    Ok(Common { mus, alpha, outer })
}

fn file_arg(path: &Option<PathBuf>, flag: &str) -> Result<BooleanFunction, Error> {
    load_table(path.as_deref().ok_or_else(|| missing(flag))?)
}

fn build(ctx: &Ctx, a: &ConstructArgs) -> Result<ConstructionReport, Error> {
    use Construction::*;
    match a.kind {
        Gold => gold_build(&gold_params(ctx, a)?),
        GoldDual => gold_dual_build(&gold_params(ctx, a)?),
        Thm8 => {
            let p = gold_params(ctx, a)?;
            let c = common(a, p.spec().n(), false)?;
            thfromgold_build(&p, &c.mus, c.alpha, &c.outer)
        }
        Cor9 => {
            let spec = ctx.field(a.n.ok_or_else(|| missing("n"))?)?;
            let c = common(a, spec.n(), false)?;
            cort_m_build(&spec, a.theta.ok_or_else(|| missing("theta"))?, &c.mus, c.alpha, &c.outer)
        }
        Cor10 => {
            let spec = ctx.field(a.n.ok_or_else(|| missing("n"))?)?;
            if let Some(t) = a.t {
                if 4 * t != u64::from(spec.n()) {
                    return Err(Error::InvalidParameter(format!("t = {t} is not n/4")));
                }
            }
            let c = common(a, spec.n(), false)?;
            corn4t_build(&spec, a.lambda.ok_or_else(|| missing("lambda"))?, &c.mus, c.alpha, &c.outer)
        }
        Mm => mm_build(&mm_params(ctx, a)?),
        MmDual => mm_dual_build(&mm_params(ctx, a)?),
        Thm12 => {
            let p = mm_params(ctx, a)?;
            let c = common(a, p.spec().n(), false)?;
            thmm_build(&p, &c.mus, c.alpha, &c.outer)
        }
        Zlj => {
            let f = file_arg(&a.f, "f")?;
            let c = common(a, f.n(), false)?;
            zlj_build(&ctx.pairing(f.n())?, &f, &c.mus, &c.outer)
        }
        Cornew => {
            let f = file_arg(&a.f, "f")?;
            let g = file_arg(&a.g, "g")?;
            let c = common(a, f.n(), false)?;
            cornew_build(&ctx.pairing(f.n())?, &f, &g, &c.mus, &c.outer)
        }
        Correduced => {
            let f = file_arg(&a.f, "f")?;
            let c = common(a, f.n(), true)?;
            correduced_build(&ctx.pairing(f.n())?, &f, c.alpha, &c.mus, &c.outer)
        }
        Carlet => {
            let f1 = file_arg(&a.f1, "f1")?;
            let f2 = file_arg(&a.f2, "f2")?;
            let f3 = file_arg(&a.f3, "f3")?;
            carlet_build(&ctx.pairing(f1.n())?, &f1, &f2, &f3)
        }
        Mesnager1 => {
            let f = file_arg(&a.f, "f")?;
            let pairing = ctx.pairing(f.n())?;
            mesnager_build(&pairing, &f, a.a.ok_or_else(|| missing("a"))?, a.b.ok_or_else(|| missing("b"))?)
        }
        Mesnager2 => {
            let f1 = file_arg(&a.f1, "f1")?;
            let f2 = file_arg(&a.f2, "f2")?;
            mesnager2_build(&ctx.pairing(f1.n())?, &f1, &f2, a.a.ok_or_else(|| missing("a"))?)
        }
        Generic => {
            let f = file_arg(&a.f, "f")?;
            if a.phi.is_empty() {
                return Err(missing("phi"));
            }
            let phi = VectorialFunction::new(a.phi.iter().map(|p| load_table(p)).collect::<Result<_, _>>()?)?;
            let outer = BooleanFunction::from_table_string(a.outer.as_deref().ok_or_else(|| missing("F"))?)?;
            let pairing = ctx.pairing(f.n())?;
            let cert = check_property_pr(&pairing, &f, &phi)?;
            build_generic(&pairing, &f, &outer, &phi, &cert)
        }
    }
}

fn run_construct(ctx: &Ctx, a: &ConstructArgs) -> CmdResult {
    let (built, failed) = match build(ctx, a) {
        Ok(r) => (r, None),
        Err(Error::SideConditionFailed { condition, report }) => (*report, Some(condition)),
        Err(e) => return Err(e.into()),
    };
    if let Some(p) = &a.out_h {
        write_file(p, &write_truth_table(&built.h))?;
    }
    if let (Some(p), Some(hs)) = (&a.out_hstar, &built.h_star) {
        write_file(p, &write_truth_table(hs))?;
    }
    let mut report = Report::new(&ctx.command);
    report.construction(&built);
    let status = match &failed {
        Some(cond) => format!("side condition failed: {cond}"),
        None if !built.verification.h_bent => "not bent".into(),
        None if !built.verification.dual_matches => "dual mismatch".into(),
        None => "ok".into(),
    };
    report.push("status", &status);
    ctx.emit(&report);
    match failed {
        Some(condition) => {
            eprintln!("error: side condition failed: {condition}");
            Err(Failure::Core(Error::SideConditionFailed {
                condition,
                report: Box::new(built),
            }))
        }
        None if built.is_valid() => Ok(()),
        None => {
            eprintln!("error: {status}");
            Err(Failure::Rejected)
        }
    }
}

fn run_search(ctx: &Ctx, cmd: &SearchCommand) -> CmdResult {
    let tuples: Vec<Vec<FieldElement>> = match cmd {
        SearchCommand::Mus {
            mode,
            input,
            dual,
            n,
            t,
            lambda,
            theta,
            r,
            limit,
            cursor,
            allow_dependent,
        } => {
            let mode = match mode {
                SearchMode::SecondDerivative => {
                    let f = file_arg(input, "in")?;
                    let f = if *dual { ctx.pairing(f.n())?.dual(&f)? } else { f };
                    MuMode::SecondDerivative(f)
                }
                SearchMode::GoldTrace => {
                    let spec = ctx.field(n.ok_or_else(|| missing("n"))?)?;
                    MuMode::GoldTrace(GoldParams::new(
                        &spec,
                        lambda.ok_or_else(|| missing("lambda"))?,
                        t.ok_or_else(|| missing("t"))?,
                    )?)
                }
                SearchMode::Cor9Trace => MuMode::Cor9Trace {
                    spec: ctx.field(n.ok_or_else(|| missing("n"))?)?,
                    theta: theta.ok_or_else(|| missing("theta"))?,
                },
            };
            let mode_n = mode.n();
            let mut spec = MuSearchSpec::new(mode, *r, *limit);
            spec.require_independent = !allow_dependent;
            spec.cursor = cursor.as_deref().map(|c| parse_mus(c, mode_n)).transpose()?;
            find_mu_tuples(&spec)
        }
        SearchCommand::Alphas { n, mus, limit } => {
            let mus = parse_mus(mus, *n)?;
            find_alphas(&ctx.pairing(*n)?, &mus, *limit)
                .into_iter()
                .map(|a| vec![a])
                .collect()
        }
        SearchCommand::Lambdas {
            n,
            t,
            limit,
            after,
            self_dual,
        } => {
            let spec = ctx.field(*n)?;
            let found = if *self_dual {
                find_self_dual_lambdas(&spec)
                    .into_iter()
                    .filter(|&l| after.is_none_or(|a| l > a))
                    .take(*limit)
                    .collect()
            } else {
                find_gold_lambdas(&spec, t.ok_or_else(|| missing("t"))?, *limit, *after)
            };
            found.into_iter().map(|l| vec![l]).collect()
        }
    };
    let mut out = io::stdout().lock();
    for t in tuples {
        // a closed pipe ends the stream
        if writeln!(out, "{}", write_tuple(&t)).is_err() {
            break;
        }
    }
    Ok(())
}

fn run_verify_pr(ctx: &Ctx, f: &Path, phi: &[PathBuf]) -> CmdResult {
    let f = load_table(f)?;
    let components = phi.iter().map(|p| load_table(p)).collect::<Result<Vec<_>, _>>()?;
    let phi = VectorialFunction::new(components)?;
    let pairing = ctx.pairing(f.n())?;
    let cert = check_property_pr(&pairing, &f, &phi)?;
    let mut report = Report::new(&ctx.command);
    report.push("pairing", pairing.name());
    report.push("n", f.n());
    report.push("r", phi.r());
    report.push("holds", cert.holds);
    if let Some(varphi) = &cert.varphi {
        for (i, c) in varphi.components().iter().enumerate() {
            report.push(format!("varphi.{}.degree", i + 1), c.algebraic_degree());
        }
    }
    if let Some(w) = &cert.witness {
        report.push("witness.omega", format!("{:x}", w.omega));
        match w.x {
            Some(x) => report.push("witness.x", format!("{x:x}")),
            None => report.push("witness.x", "none"),
        }
        report.push("witness.failure", format!("{:?}", w.failure));
    }
    ctx.emit(&report);
    Ok(())
}

fn run_fingerprint(ctx: &Ctx, input: &Path) -> CmdResult {
    let f = load_table(input)?;
    let fp = ea_fingerprint(&f);
    let mut report = Report::new(&ctx.command);
    report.push("n", f.n());
    report.push("degree", fp.degree);
    report.push("fingerprint", &fp);
    ctx.emit(&report);
    Ok(())
}

fn run(cli: &Cli, ctx: &Ctx) -> CmdResult {
    match &cli.command {
        Command::Field {
            command: FieldCommand::Info { n },
        } => field_info(ctx, *n),
        Command::Fn(args) => run_fn(ctx, args),
        Command::Construct(args) => run_construct(ctx, args),
        Command::Search { command } => run_search(ctx, command),
        Command::Verify {
            command: VerifyCommand::Pr { f, phi },
        } => run_verify_pr(ctx, f, phi),
        Command::Fingerprint { input } => run_fingerprint(ctx, input),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args()
        .skip(1)
        .map(|a| if a.contains(char::is_whitespace) { format!("{a:?}") } else { a })
        .collect();
    let ctx = Ctx {
        pairing: cli.pairing,
        modulus: cli.modulus,
        command: format!("bent {}", args.join(" ")),
        start: Instant::now(),
    };
    match run(&cli, &ctx) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected) => ExitCode::from(3),
        Err(Failure::Core(e)) => {
            if !matches!(e, Error::SideConditionFailed { .. }) {
                eprintln!("error: {e}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
