//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code.

use std::cmp::Ordering;
use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::dkring::{ReducedMonomial, RingElement};
use crate::error::Error;
use crate::finring::{self, FiniteRing, RingSpec};
use crate::jacobson;
use crate::report::{Report, Verdict};
use crate::solver;
use crate::structure::{
    self, chain_nilpotency, power_nilpotency, suites, NilpotencyStatus, PowerVerdict, CHAIN_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

const POWER_CAP_STR: &str = "16";

const GRAMMAR: &str =
    "elements are sums of monomials over a and x, e.g. `a + xa^2`, `(1+ax)a`, `0`";

#[derive(Parser, Debug)]
#[command(
    name = "pireg",
    version,
    about = "Exact computation in F2<a,x : a = a^2 x> and related rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BoundArg {
    /// Length bound on the truncated solution space.
    #[arg(long, default_value_t = solver::ANNIHILATOR_BOUND)]
    bound: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the reduced form of an element.
    Reduce { expr: String },
    /// Multiply two elements.
    Mul { lhs: String, rhs: String },
    /// Compare two monomials in the monomial order.
    Cmp { lhs: String, rhs: String },
    /// Largest monomial of an element.
    Max { expr: String },
    /// Decide nilpotency with the chain procedure.
    Nilpotent {
        expr: String,
        #[arg(long, default_value_t = CHAIN_CAP)]
        cap: usize,
        /// Cross-check against powers up to exponent K.
        #[arg(long, value_name = "K", num_args = 0..=1, default_missing_value = POWER_CAP_STR)]
        power_check: Option<u32>,
    },
    /// Inverse of a unit.
    Invert { expr: String },
    /// Basis of the truncated right annihilator.
    Rann {
        expr: String,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Basis of the truncated left annihilator.
    Lann {
        expr: String,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Zero-divisor, unit and nilpotency classification.
    Classify {
        expr: String,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Search for y with f = y f^2 among bounded-length y.
    Srsolve {
        expr: String,
        #[arg(long, default_value_t = solver::INVERSE_BOUND)]
        bound: usize,
    },
    /// Computations in F2<b,c : bc = 1>.
    Jacobson {
        #[command(subcommand)]
        command: JacobsonCommand,
    },
    /// Predicates and checks on a small finite ring, e.g. `M2(F2)`, `Z4 x T2(F2)`.
    Finring {
        spec: String,
        #[command(subcommand)]
        command: FinringCommand,
    },
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum JacobsonCommand {
    /// The element d_n = b + c^n b^(n+1).
    D { n: u32 },
    /// The matrix unit E_ij = c^i (1 + cb) b^j.
    Unit { i: u32, j: u32 },
    /// Run the Jacobson verification suite.
    Verify,
}

#[derive(Subcommand, Debug)]
enum FinringCommand {
    /// Ring predicates, or element predicates with --element.
    Predicates {
        /// Element name as printed, e.g. `[1,0;0,0]` or `2`.
        #[arg(long)]
        element: Option<String>,
    },
    /// Exhaustive equivalence checks.
    Equivalences,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name; see --list.
    #[arg(required_unless_present_any = ["all", "list"], conflicts_with = "all")]
    suite: Option<String>,
    #[arg(long)]
    all: bool,
    /// Print the suite names.
    #[arg(long)]
    list: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    maxlen: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    bound: Option<usize>,
}

/// Outcome of a command before it is written out.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output {
            text: text.into(),
            code: EXIT_OK,
        }
    }
}

fn element(s: &str) -> Result<RingElement, Error> {
    s.parse()
}

fn monomial(s: &str) -> Result<ReducedMonomial, Error> {
    let e = element(s)?;
    let mut it = e.monomials();
    match (it.next(), it.next()) {
        (Some(m), None) => Ok(m.clone()),
        _ => Err(Error::parse(1, format!("`{s}` is not a single monomial"))),
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_FAILURE,
        Verdict::Undecided => EXIT_UNDECIDED,
    }
}

fn report_output(report: &Report, json: bool) -> Output {
    Output {
        text: if json {
            report.to_json()
        } else {
            report.to_text()
        },
        code: verdict_code(report.verdict),
    }
}

fn basis_lines(space: &solver::Subspace) -> String {
    let mut out = format!("dim={}", space.dim());
    for e in space.elements() {
        out.push('\n');
        out.push_str(&e.to_string());
    }
    out
}

fn nilpotent(expr: &str, cap: usize, power_check: Option<u32>) -> Result<Output, Error> {
    let f = element(expr)?;
    let v = chain_nilpotency(&f, cap);
    let (mut text, mut code) = match v.status {
        NilpotencyStatus::Nilpotent => {
            let index = structure::nilpotency_index(&f)?.expect("chain says nilpotent");
            (
                format!("nilpotent index={index} chain_len={}", v.chain.len()),
                EXIT_OK,
            )
        }
        NilpotencyStatus::NotNilpotent => {
            let w = v
                .witness
                .as_ref()
                .expect("negative verdicts carry a witness");
            (format!("not-nilpotent {w}"), EXIT_OK)
        }
        NilpotencyStatus::Undecided => (format!("undecided cap={cap}"), EXIT_UNDECIDED),
    };
    if let Some(k) = power_check {
        if k == 0 {
            return Err(Error::parse(1, "--power-check needs K >= 1"));
        }
        let p = power_nilpotency(&f, k);
        let agree = match (v.status, p) {
            (NilpotencyStatus::Nilpotent, PowerVerdict::NilpotentWithIndex(_)) => true,
            (NilpotencyStatus::NotNilpotent, PowerVerdict::NoPowerVanishes) => true,
            (NilpotencyStatus::Nilpotent, PowerVerdict::NoPowerVanishes) => {
                v.chain.len() + 1 > k as usize
            }
            _ => false,
        };
        text.push_str(&match p {
            PowerVerdict::NilpotentWithIndex(i) => format!("\npower-check K={k}: index={i}"),
            PowerVerdict::NoPowerVanishes => format!("\npower-check K={k}: no power vanishes"),
        });
        if !agree && code == EXIT_OK {
            text.push_str("\nverdicts disagree");
            code = EXIT_FAILURE;
        }
    }
    Ok(Output { text, code })
}

fn classify(expr: &str, bound: usize) -> Result<Output, Error> {
    let f = element(expr)?;
    if f.is_zero() {
        return Ok(Output::ok("zero"));
    }
    let zd = structure::zero_divisor_class(&f, bound as u32)?;
    let right = match zd.right_zd {
        Some(n) => format!("a^{n}"),
        None => "none".to_string(),
    };
    let unit = structure::is_unit(&f)?;
    let nil = structure::nilpotency_index(&f)?;
    let nil = nil.map_or("no".to_string(), |i| format!("index={i}"));
    Ok(Output::ok(format!(
        "left_zero_divisor={} right_zero_divisor_killer={right} unit={unit} nilpotent={nil}",
        zd.left_zd
    )))
}

fn finring_cmd(spec: &str, cmd: &FinringCommand) -> Result<Output, Error> {
    let spec: RingSpec = spec.parse()?;
    let ring = FiniteRing::build(&spec)?;
    match cmd {
        FinringCommand::Predicates { element: None } => {
            let p = ring.ring_predicates();
            Ok(Output::ok(format!(
                "ring={} order={}\ndedekind_finite={}\nabelian={}\nni={}\nweakly_semicommutative={}\n\
                 left_duo={}\nweakly_left_duo={}\nright_dischinger={}\nleft_dischinger={}",
                ring.label(),
                ring.order(),
                p.dedekind_finite,
                p.abelian,
                p.ni,
                p.weakly_semicommutative,
                p.left_duo,
                p.weakly_left_duo,
                p.right_dischinger,
                p.left_dischinger
            )))
        }
        FinringCommand::Predicates {
            element: Some(name),
        } => {
            let a = ring.lookup(name).ok_or_else(|| {
                Error::parse(1, format!("`{name}` is not an element of {}", ring.label()))
            })?;
            let p = ring.element_predicates(a);
            let exchange = p
                .right_exchange
                .map_or("size-cap".to_string(), |b| b.to_string());
            Ok(Output::ok(format!(
                "element={}\nidempotent={}\nregular={}\nunit_regular={}\npi_regular={}\n\
                 right_strongly_regular={}\nleft_strongly_regular={}\nright_strongly_pi_regular={}\n\
                 left_strongly_pi_regular={}\nsuitable={}\nleft_suitable={}\nright_exchange={exchange}",
                ring.name(a),
                p.idempotent,
                p.regular,
                p.unit_regular,
                p.pi_regular,
                p.right_strongly_regular,
                p.left_strongly_regular,
                p.right_strongly_pi_regular,
                p.left_strongly_pi_regular,
                p.suitable,
                p.left_suitable
            )))
        }
        FinringCommand::Equivalences => {
            Ok(report_output(&finring::verify_equivalences(&ring)?, false))
        }
    }
}

fn verify(args: &VerifyArgs) -> Result<Output, Error> {
    if args.list {
        return Ok(Output::ok(suites::SUITES.join("\n")));
    }
    let cfg = suites::SuiteConfig {
        seed: args.seed,
        maxlen: args.maxlen,
        samples: args.samples,
        bound: args.bound,
    };
    let Some(name) = args.suite.as_deref().filter(|_| !args.all) else {
        let mut lines = Vec::new();
        let mut verdicts = Vec::new();
        for name in suites::SUITES {
            let report = suites::run_suite(name, &cfg)?;
            let out = report_output(&report, args.json);
            lines.push(if args.json {
                out.text
            } else {
                format!("{name}: {}", out.text)
            });
            verdicts.push(report.verdict);
        }
        let code = if verdicts.contains(&Verdict::Fail) {
            EXIT_FAILURE
        } else if verdicts.contains(&Verdict::Undecided) {
            EXIT_UNDECIDED
        } else {
            EXIT_OK
        };
        return Ok(Output {
            text: lines.join("\n"),
            code,
        });
    };
    Ok(report_output(&suites::run_suite(name, &cfg)?, args.json))
}

fn dispatch(cli: Cli) -> Result<Output, Error> {
    Ok(match cli.command {
        Command::Reduce { expr } => Output::ok(element(&expr)?.to_string()),
        Command::Mul { lhs, rhs } => Output::ok((&element(&lhs)? * &element(&rhs)?).to_string()),
        Command::Cmp { lhs, rhs } => {
            let (l, r) = (monomial(&lhs)?, monomial(&rhs)?);
            let sign = match l.cmp(&r) {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            Output::ok(format!("{l} {sign} {r}"))
        }
        Command::Max { expr } => Output::ok(element(&expr)?.max_monomial()?.to_string()),
        Command::Nilpotent {
            expr,
            cap,
            power_check,
        } => nilpotent(&expr, cap, power_check)?,
        Command::Invert { expr } => match structure::inverse(&element(&expr)?)? {
            Some(inv) => Output::ok(inv.to_string()),
            None => Output::ok("not a unit"),
        },
        Command::Rann { expr, bound } => Output::ok(basis_lines(&solver::right_annihilator(
            &element(&expr)?,
            bound.bound,
        ))),
        Command::Lann { expr, bound } => Output::ok(basis_lines(&solver::left_annihilator(
            &element(&expr)?,
            bound.bound,
        ))),
        Command::Classify { expr, bound } => classify(&expr, bound.bound)?,
        Command::Srsolve { expr, bound } => {
            match solver::solve_sr_equation(&element(&expr)?, bound) {
                Some(y) => Output::ok(format!("y={y}")),
                None => Output::ok(format!("no solution with length <= {bound}")),
            }
        }
        Command::Jacobson { command } => match command {
            JacobsonCommand::D { n } => Output::ok(jacobson::d_element(n).to_string()),
            JacobsonCommand::Unit { i, j } => Output::ok(jacobson::matrix_unit(i, j).to_string()),
            JacobsonCommand::Verify => {
                report_output(&suites::run_suite("jacobson", &Default::default())?, false)
            }
        },
        Command::Finring { spec, command } => finring_cmd(&spec, &command)?,
        Command::Verify(args) => verify(&args)?,
    })
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.text);
            o.code
        }
        Err(e @ Error::Undecided(_)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_UNDECIDED
        }
        Err(e @ (Error::Parse { .. } | Error::InvalidLetter { .. })) => {
            let _ = writeln!(err, "error: {e}\n{GRAMMAR}");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
