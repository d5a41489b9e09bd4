//! Argument parsing and dispatch for the `dsym` binary.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dsym_core::basis::{
    dual_lr_via_classical, dual_lr_via_skew, dual_lr_via_supertableaux, lr_polynomial, lr_polynomial_by_product,
    BasisError,
};
use dsym_core::cauchy::cauchy_check;
use dsym_core::double_schur::{
    double_schur_alternant, double_schur_tableau, jacobi_trudi, nagelsbach_kostka, skew_double_schur, SkewMethod,
};
use dsym_core::series::{dual_schur, skew_dual_schur, DualSchurMethod, SeriesError};
use dsym_core::transition::{
    char_dual, char_poly, double_forgotten, double_monomial, hook_identities, kostka, kostka_dual, lr_by_hooks,
    CharacterMethod, DualCharacterMethod, KostkaDualMethod, KostkaMethod, TransitionError, TransitionMatrix,
};
use dsym_core::xpoly::{XPoly, MAX_VARS};
use dsym_core::{APoly, ASpec, AlgebraError, Partition, ShapeError, SkewShape};
use serde_json::{json, Value};

use crate::format::{self, ParseError};
use crate::specfile::{parse_spec, SpecError};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "dsym", version, about = "Double and dual symmetric functions in exact arithmetic")]
pub struct Cli {
    /// Print versioned JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Specialize the parameters: zero, shifted, frobenius, generic:<seed> or custom:<file>.
    #[arg(long, global = true, value_name = "SPEC")]
    spec: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Double Schur polynomial s_lambda(x||a) in nx variables.
    DoubleSchur {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long)]
        nx: usize,
        #[arg(long, value_enum, default_value_t = DoubleMethod::Tableau)]
        method: DoubleMethod,
    },
    /// Dual Schur series expanded in classical Schur functions.
    DualSchur {
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = DualMethod::Flagged)]
        method: DualMethod,
        /// Number of variables for the combinatorial and alternant methods.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Skew double Schur polynomial, or with --dual the skew dual Schur series.
    Skew {
        #[arg(long, value_parser = partition)]
        outer: Partition,
        #[arg(long, value_parser = partition, default_value = "")]
        inner: Partition,
        #[arg(long)]
        nx: usize,
        #[arg(long, value_enum, default_value_t = SkewRoute::A)]
        method: SkewRoute,
        #[arg(long)]
        dual: bool,
        #[arg(long, required_if_eq("dual", "true"))]
        degree: Option<usize>,
    },
    /// Littlewood-Richardson polynomial c^nu_{lambda mu}(a).
    Lr {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value_t = LrMethod::Interpolation)]
        method: LrMethod,
    },
    /// Dual Littlewood-Richardson polynomial.
    Duallr {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value_t = DualLrMethod::Skew)]
        method: DualLrMethod,
        /// Letters for the tableau method; defaults to the smallest valid count.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Kostka polynomial K_{lambda mu}(a), or with --dual the dual one.
    Kostka {
        #[arg(long, value_parser = partition, required_unless_present = "max_size")]
        lambda: Option<Partition>,
        #[arg(long, value_parser = partition, required_unless_present = "max_size")]
        mu: Option<Partition>,
        #[arg(long)]
        dual: bool,
        /// Series truncation for the non-dual polynomials; defaults to the needed size.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = KostkaRoute::Expansion)]
        method: KostkaRoute,
        /// Print the whole matrix over all partitions up to this size.
        #[arg(long, conflicts_with_all = ["lambda", "mu"])]
        max_size: Option<usize>,
    },
    /// Character polynomial chi^lambda_mu(a), or with --dual the dual one.
    Char {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long)]
        dual: bool,
        /// expansion or interpolation; with --dual, flagged or conversion.
        #[arg(long, value_enum)]
        method: Option<CharRoute>,
    },
    /// Double monomial function in the double Schur basis.
    Monomial {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        /// The forgotten function instead.
        #[arg(long)]
        forgotten: bool,
    },
    /// Kernel identities with n variables per alphabet, truncated at a degree.
    Cauchy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
    },
    /// Hook-product sums for characters and Kostka numbers, or LR coefficients with --nu.
    HookIdentities {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = partition)]
        nu: Option<Partition>,
    },
    /// Evaluate a polynomial in the a[i] under --spec.
    Eval {
        #[arg(long)]
        poly: String,
    },
    /// Run the acceptance suites.
    Verify {
        /// `all` or a criterion number.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Print every check, not just one line per criterion.
        #[arg(long)]
        details: bool,
    },
}

#[derive(Debug, Args)]
struct Triple {
    #[arg(long, value_parser = partition)]
    lambda: Partition,
    #[arg(long, value_parser = partition)]
    mu: Partition,
    #[arg(long, value_parser = partition)]
    nu: Partition,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DoubleMethod {
    Tableau,
    Alternant,
    JacobiTrudi,
    NagelsbachKostka,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DualMethod {
    Flagged,
    Determinant,
    Combinatorial,
    Alternant,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SkewRoute {
    A,
    APrime,
    RhoSum,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LrMethod {
    Interpolation,
    Product,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DualLrMethod {
    Tableau,
    Skew,
    Classical,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KostkaRoute {
    Expansion,
    Chain,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CharRoute {
    Expansion,
    Interpolation,
    Flagged,
    Conversion,
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: ShapeError| format!("{e}; partitions are comma-separated parts like 3,2,1"))
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Transition(TransitionError),
    #[error("{0}")]
    Basis(BasisError),
    #[error("{0}")]
    Series(SeriesError),
    #[error("{0}")]
    Algebra(AlgebraError),
    #[error("{0}")]
    Shape(ShapeError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{what} must be between {min} and {max}, got {got}")]
    OutOfRange { what: &'static str, min: usize, max: usize, got: usize },
    #[error("method {method} needs {needs}")]
    MethodMismatch { method: &'static str, needs: &'static str },
    #[error("unknown suite {0:?}; use all or 1..=10")]
    Suite(String),
}

macro_rules! wrap {
    ($($t:ty => $v:ident),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::$v(e)
            }
        })*
    };
}

wrap!(TransitionError => Transition, BasisError => Basis, SeriesError => Series, AlgebraError => Algebra, ShapeError => Shape);

impl CliError {
    /// The variant path of the underlying library error, e.g. `Series::TruncationTooSmall`.
    pub fn name(&self) -> String {
        let debug = match self {
            CliError::Transition(e) => format!("{e:?}"),
            CliError::Basis(e) => format!("{e:?}"),
            CliError::Series(e) => format!("{e:?}"),
            CliError::Algebra(e) => format!("{e:?}"),
            CliError::Shape(e) => format!("{e:?}"),
            CliError::Spec(e) => format!("Spec({e:?})"),
            CliError::Parse(e) => format!("Parse({e:?})"),
            other => format!("{other:?}"),
        };
        debug
            .split('(')
            .map(|s| s.split([' ', '{', ')', ',']).next().unwrap_or(""))
            .take_while(|s| !s.is_empty() && s.chars().next().is_some_and(char::is_alphabetic))
            .collect::<Vec<_>>()
            .join("::")
    }
}

/// What a finished invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Output { code, stdout, stderr: String::new() },
        Err(e) => {
            let input: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
            Output { code: 1, stdout: String::new(), stderr: format!("error: {}: {e}\ninput: {}\n", e.name(), input.join(" ")) }
        }
    }
}

struct Ctx {
    json: bool,
    spec: Option<ASpec>,
}

impl Ctx {
    fn coeff(&self, c: &APoly) -> Result<APoly, CliError> {
        Ok(match &self.spec {
            Some(spec) => APoly::constant(c.evaluate(spec)?),
            None => c.clone(),
        })
    }

    fn poly(&self, c: &APoly) -> Result<String, CliError> {
        let c = self.coeff(c)?;
        Ok(if self.json { line(json!({"schema": format::SCHEMA, "value": format::apoly_json(&c)})) } else { format!("{c}\n") })
    }

    fn xpoly(&self, p: &XPoly) -> Result<String, CliError> {
        let p = self.map_xpoly(p)?;
        Ok(if self.json { line(format::xpoly_json(&p)) } else { format::xpoly_text(&p) })
    }

    fn map_xpoly(&self, p: &XPoly) -> Result<XPoly, CliError> {
        if self.spec.is_none() {
            return Ok(p.clone());
        }
        let mut err = None;
        let out = p.map_coeffs(|c| self.coeff(c).unwrap_or_else(|e| {
            err.get_or_insert(e);
            APoly::zero()
        }));
        err.map_or(Ok(out), Err)
    }

    fn matrix(&self, m: &TransitionMatrix) -> Result<String, CliError> {
        let mut err = None;
        let m = m.map(|c| self.coeff(c).unwrap_or_else(|e| {
            err.get_or_insert(e);
            APoly::zero()
        }));
        if let Some(e) = err {
            return Err(e);
        }
        Ok(if self.json { line(format::matrix_json(&m)) } else { format::matrix_text(&m) })
    }
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn vars(what: &'static str, n: usize, max: usize) -> Result<usize, CliError> {
    if (1..=max).contains(&n) {
        Ok(n)
    } else {
        Err(CliError::OutOfRange { what, min: 1, max, got: n })
    }
}

fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    let spec = cli.spec.as_deref().map(parse_spec).transpose()?;
    let ctx = Ctx { json: cli.json, spec };
    let out = match &cli.command {
        Command::DoubleSchur { lambda, nx, method } => {
            let n = vars("--nx", *nx, MAX_VARS)?;
            let p = match method {
                DoubleMethod::Tableau => double_schur_tableau(lambda, n),
                DoubleMethod::Alternant => double_schur_alternant(lambda, n)?,
                DoubleMethod::JacobiTrudi => jacobi_trudi(lambda, n),
                DoubleMethod::NagelsbachKostka => nagelsbach_kostka(lambda, n),
            };
            ctx.xpoly(&p)?
        }
        Command::DualSchur { mu, degree, method, n } => {
            let needs_n = || n.ok_or(CliError::MethodMismatch { method: "combinatorial/alternant", needs: "--n" });
            let method = match method {
                DualMethod::Flagged => DualSchurMethod::Flagged,
                DualMethod::Determinant => DualSchurMethod::Determinant,
                DualMethod::Combinatorial => DualSchurMethod::Combinatorial(vars("--n", needs_n()?, MAX_VARS)?),
                DualMethod::Alternant => DualSchurMethod::Alternant(vars("--n", needs_n()?, MAX_VARS)?),
            };
            series(&ctx, &dual_schur(mu, *degree, method)?)?
        }
        Command::Skew { outer, inner, nx, method, dual, degree } => {
            let theta = SkewShape::new(outer.clone(), inner.clone())?;
            let n = vars("--nx", *nx, MAX_VARS)?;
            if *dual {
                let degree = degree.expect("clap requires --degree with --dual");
                series(&ctx, &skew_dual_schur(&theta, degree, n)?)?
            } else {
                let method = match method {
                    SkewRoute::A => SkewMethod::SupertableauA,
                    SkewRoute::APrime => SkewMethod::SupertableauAPrime,
                    SkewRoute::RhoSum => SkewMethod::RhoSum,
                };
                ctx.xpoly(&skew_double_schur(&theta, n, method))?
            }
        }
        Command::Lr { triple: Triple { lambda, mu, nu }, method } => {
            let c = match method {
                LrMethod::Interpolation => lr_polynomial(lambda, mu, nu),
                LrMethod::Product => lr_polynomial_by_product(lambda, mu, nu)?,
            };
            ctx.poly(&c)?
        }
        Command::Duallr { triple: Triple { lambda, mu, nu }, method, n } => {
            let c = match method {
                DualLrMethod::Tableau => {
                    let column = SkewShape::new(nu.clone(), mu.clone()).map(|t| t.max_column_height()).unwrap_or(0);
                    let n = n.unwrap_or_else(|| column.max(lambda.len()).max(1));
                    dual_lr_via_supertableaux(lambda, mu, nu, vars("--n", n, MAX_VARS)?)?
                }
                DualLrMethod::Skew => dual_lr_via_skew(lambda, mu, nu)?,
                DualLrMethod::Classical => dual_lr_via_classical(lambda, mu, nu),
            };
            ctx.poly(&c)?
        }
        Command::Kostka { lambda, mu, dual, degree, method, max_size } => {
            let entry = |l: &Partition, m: &Partition| -> Result<APoly, TransitionError> {
                if *dual {
                    let method = match method {
                        KostkaRoute::Expansion => KostkaDualMethod::Expansion,
                        KostkaRoute::Chain => KostkaDualMethod::LrChain,
                    };
                    kostka_dual(l, m, method)
                } else {
                    let method = match method {
                        KostkaRoute::Expansion => KostkaMethod::DualProduct,
                        KostkaRoute::Chain => KostkaMethod::DualLrChain,
                    };
                    kostka(l, m, degree.unwrap_or(l.size().max(m.size())), method)
                }
            };
            match (max_size, lambda, mu) {
                (Some(max), _, _) => ctx.matrix(&TransitionMatrix::graded(*max, entry)?)?,
                (None, Some(l), Some(m)) => ctx.poly(&entry(l, m)?)?,
                _ => unreachable!("clap requires --lambda and --mu without --max-size"),
            }
        }
        Command::Char { lambda, mu, dual, method } => {
            let c = match (dual, method) {
                (false, None | Some(CharRoute::Expansion)) => char_poly(lambda, mu, CharacterMethod::Expansion)?,
                (false, Some(CharRoute::Interpolation)) => char_poly(lambda, mu, CharacterMethod::Interpolation)?,
                (true, None | Some(CharRoute::Flagged)) => char_dual(lambda, mu, DualCharacterMethod::Flagged)?,
                (true, Some(CharRoute::Conversion)) => char_dual(lambda, mu, DualCharacterMethod::Conversion)?,
                (false, Some(_)) => {
                    return Err(CliError::MethodMismatch { method: "flagged/conversion", needs: "--dual" });
                }
                (true, Some(_)) => {
                    return Err(CliError::MethodMismatch { method: "expansion/interpolation", needs: "no --dual" });
                }
            };
            ctx.poly(&c)?
        }
        Command::Monomial { lambda, forgotten } => {
            let m = if *forgotten { double_forgotten(lambda) } else { double_monomial(lambda) };
            let mut err = None;
            let m = m.map_coeffs(|c| ctx.coeff(c).unwrap_or_else(|e| {
                err.get_or_insert(e);
                APoly::zero()
            }));
            if let Some(e) = err {
                return Err(e);
            }
            if ctx.json {
                line(format::double_sym_json(&m))
            } else {
                format::double_sym_text(&m)
            }
        }
        Command::Cauchy { n, degree } => {
            let n = vars("--n", *n, MAX_VARS / 3)?;
            let checks = cauchy_check(n, *degree)?;
            let failed = checks.iter().any(|c| !c.holds());
            let out = if ctx.json {
                line(json!({"schema": format::SCHEMA, "n": n, "degree": degree, "checks": checks.iter().map(format::check_json).collect::<Vec<_>>()}))
            } else {
                checks.iter().map(|c| format::check_text(c) + "\n").collect()
            };
            return Ok((i32::from(failed), out));
        }
        Command::HookIdentities { lambda, mu, nu } => hooks(&ctx, lambda, mu, nu.as_ref())?,
        Command::Eval { poly } => {
            let p = format::parse_apoly(poly)?;
            ctx.poly(&p)?
        }
        Command::Verify { suite, details } => return run_verify(&ctx, suite, *details),
    };
    Ok((0, out))
}

fn series(ctx: &Ctx, s: &dsym_core::series::SchurSeries) -> Result<String, CliError> {
    let mut err = None;
    let s = s.map_coeffs(|c| ctx.coeff(c).unwrap_or_else(|e| {
        err.get_or_insert(e);
        APoly::zero()
    }));
    if let Some(e) = err {
        return Err(e);
    }
    Ok(if ctx.json { line(format::series_json(&s)) } else { format::series_text(&s) })
}

fn hooks(ctx: &Ctx, lambda: &Partition, mu: &Partition, nu: Option<&Partition>) -> Result<String, CliError> {
    if let Some(nu) = nu {
        let c = lr_by_hooks(lambda, mu, nu);
        return Ok(if ctx.json {
            line(json!({"schema": format::SCHEMA, "lr_coefficient": c.to_string()}))
        } else {
            format!("{c}\n")
        });
    }
    let report = hook_identities(lambda, mu)?;
    if ctx.json {
        let terms = |ts: &[dsym_core::transition::HookTerm]| {
            ts.iter()
                .map(|t| {
                    json!({
                        "rho": t.rho.to_string(),
                        "weight": t.weight.to_string(),
                        "hook_rho": t.hook_rho.to_string(),
                        "hook_complement": t.hook_complement.to_string(),
                        "value": t.value.to_string(),
                    })
                })
                .collect::<Vec<_>>()
        };
        return Ok(line(json!({
            "schema": format::SCHEMA,
            "character": {"sum": report.character.to_string(), "classical": report.character_classical, "terms": terms(&report.character_terms)},
            "kostka": {"sum": report.kostka.to_string(), "classical": report.kostka_classical, "terms": terms(&report.kostka_terms)},
            "holds": report.holds(),
        })));
    }
    let mut out = String::new();
    for (name, terms, sum, classical) in [
        ("character", &report.character_terms, &report.character, report.character_classical.to_string()),
        ("kostka", &report.kostka_terms, &report.kostka, report.kostka_classical.to_string()),
    ] {
        let _ = writeln!(out, "{name}: {sum} (tableau count {classical})");
        for t in terms {
            let _ = writeln!(
                out,
                "  rho = ({}): weight {}, H_rho {}, H_complement {}, term {}",
                t.rho, t.weight, t.hook_rho, t.hook_complement, t.value
            );
        }
    }
    Ok(out)
}

fn run_verify(ctx: &Ctx, suite: &str, details: bool) -> Result<(i32, String), CliError> {
    let outcomes = if suite == "all" {
        verify::run_all()
    } else {
        let id: usize = suite.parse().map_err(|_| CliError::Suite(suite.to_string()))?;
        vec![verify::run(id).ok_or_else(|| CliError::Suite(suite.to_string()))?]
    };
    let failed = outcomes.iter().any(|o| !o.passed());
    let out = if ctx.json {
        line(json!({"schema": format::SCHEMA, "passed": !failed, "criteria": outcomes.iter().map(verify::Outcome::json).collect::<Vec<_>>()}))
    } else {
        outcomes.iter().map(|o| if details { o.text() } else { o.summary_line() } + "\n").collect()
    };
    Ok((i32::from(failed), out))
}
