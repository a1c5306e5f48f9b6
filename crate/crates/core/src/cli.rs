//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error,
//! 3 domain error (arguments parse but the mathematics rejects them).

use std::io::Write;

use clap::{error::ErrorKind, Args, Parser, Subcommand};

use crate::blowup::{blowup_degree, BlowupStep};
use crate::classify::{enumerate_cases, prune, verify_all, ClassificationCase, VerifyOptions};
use crate::cover::analyze_um;
use crate::k3::{base_locus_dimension, cover_pullback, fano_degree, PencilClass};
use crate::report::Report;
use crate::scroll::{DivisorClass, Scroll};
use crate::surface::SurfaceClass;
use crate::wps::{infer_ring, rr_chi, HilbertPrefix, WeightedCI, DEFAULT_TRUNCATION};
use crate::Error;

const SIGN_NOTE: &str = "\
Divisor classes on a scroll are written h,f for h·O(1) + f·F, so
O(k) - lF is entered as k,-l. Surface classes on Σe are xi,fib for
xi·ξ + fib·𝔣 with ξ the negative section. Lists are comma-separated
signed integers; several classes are separated by ';'.";

// Aliases keep clap from treating a parsed list as a repeated argument.
type Ints = Vec<i64>;
type Weights = Vec<u32>;
type Classes = Vec<DivisorClass>;

#[derive(Debug, Parser)]
#[command(name = "basefano", version, about = "Exact checks for Fano threefolds with anticanonical base points", after_help = SIGN_NOTE)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate the classification table and run every case's checks
    #[command(name = "verify-paper")]
    VerifyTable {
        #[arg(long)]
        json: bool,
        /// Highest degree of the expanded Hilbert series
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        max_degree: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Linear systems and intersections on F(d1,...,dn)
    #[command(subcommand, after_help = SIGN_NOTE)]
    Scroll(ScrollCmd),
    /// Divisors on the Hirzebruch surface Σe
    #[command(subcommand, after_help = SIGN_NOTE)]
    Surface(SurfaceCmd),
    /// The lattice spanned by the section and fibre of an elliptic K3
    #[command(subcommand)]
    K3(K3Cmd),
    /// Weighted complete intersections
    #[command(subcommand)]
    Wps(WpsCmd),
    /// Double covers of scrolls
    #[command(subcommand)]
    Cover(CoverCmd),
    /// The classification table
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Degree bookkeeping for blowups along curves
    #[command(subcommand)]
    Blowup(BlowupCmd),
}

#[derive(Debug, Args)]
struct ScrollArgs {
    /// Twists d1,...,dn
    #[arg(long = "d", value_parser = parse_csv, allow_hyphen_values = true)]
    d: Ints,
}

#[derive(Debug, Subcommand)]
enum ScrollCmd {
    /// h0 of a class
    H0 {
        #[command(flatten)]
        scroll: ScrollArgs,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
    /// Intersection number of n classes
    Intersect {
        #[command(flatten)]
        scroll: ScrollArgs,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: Option<DivisorClass>,
        #[arg(long, value_parser = parse_classes, allow_hyphen_values = true)]
        classes: Option<Classes>,
    },
    /// Monomial basis of H0, one exponent vector per line
    Support {
        #[command(flatten)]
        scroll: ScrollArgs,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
    /// Canonical class
    Canonical {
        #[command(flatten)]
        scroll: ScrollArgs,
    },
    /// Multiplicity of a rigid component in every member of a system
    Fixed {
        #[command(flatten)]
        scroll: ScrollArgs,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        comp: DivisorClass,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
    /// Multiplicity of the generic member at a coordinate point of a fibre
    Mult {
        #[command(flatten)]
        scroll: ScrollArgs,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
        /// 1-based coordinate index
        #[arg(long)]
        index: usize,
    },
    /// Degree and ambient dimension of the image under O(1)
    Degree {
        #[command(flatten)]
        scroll: ScrollArgs,
    },
}

#[derive(Debug, Subcommand)]
enum SurfaceCmd {
    /// Split off the forced copies of the negative section
    Split {
        #[arg(long)]
        e: u32,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
    Dot {
        #[arg(long)]
        e: u32,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        other: DivisorClass,
    },
    /// Arithmetic genus by adjunction
    Genus {
        #[arg(long)]
        e: u32,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
    H0 {
        #[arg(long)]
        e: u32,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
}

#[derive(Debug, Subcommand)]
enum K3Cmd {
    /// (-K)^3 and base-locus dimension for -K|S = Γ + mf
    Degree {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Pairing of two classes gamma,ell
    Dot {
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        other: DivisorClass,
    },
    /// Pull ξ4 + m𝔣 back to the K3 and blow up the section
    Chain {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
}

#[derive(Debug, Subcommand)]
enum WpsCmd {
    /// Hilbert series coefficients
    Hilbert {
        #[arg(long, value_parser = parse_weights)]
        weights: Weights,
        #[arg(long, value_parser = parse_weights, default_value = "")]
        degrees: Weights,
        #[arg(long)]
        max: usize,
    },
    /// Generator and relation degrees reproducing a Hilbert function
    Infer {
        #[arg(long, value_parser = parse_csv, allow_hyphen_values = true)]
        series: Ints,
    },
    /// Anticanonical degree of a threefold complete intersection
    Degree {
        #[arg(long, value_parser = parse_weights)]
        weights: Weights,
        #[arg(long, value_parser = parse_weights, default_value = "")]
        degrees: Weights,
    },
    /// χ(-kK) for a Gorenstein Fano threefold of the given degree
    Rr {
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
}

#[derive(Debug, Subcommand)]
enum CoverCmd {
    /// Branch analysis of the double cover of F(m, m-4, 0)
    Analyze {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum ClassifyCmd {
    /// List the cases of the table
    Enumerate {
        #[arg(long)]
        json: bool,
    },
    /// Decide a normal-bundle splitting type O(a) + O(b)
    Prune {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
}

#[derive(Debug, Subcommand)]
enum BlowupCmd {
    /// (-K)^3 after blowing up a smooth curve
    Degree {
        #[arg(long, allow_hyphen_values = true)]
        ambient: i64,
        #[arg(long, allow_hyphen_values = true)]
        curve: i64,
        #[arg(long)]
        genus: u32,
    },
}

fn parse_csv(s: &str) -> Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("'{t}': {e}")))
        .collect()
}

fn parse_weights(s: &str) -> Result<Vec<u32>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| format!("'{t}': {e}")))
        .collect()
}

fn parse_class(s: &str) -> Result<DivisorClass, String> {
    match parse_csv(s)?.as_slice() {
        &[h, f] => Ok(DivisorClass::new(h, f)),
        _ => Err(format!("expected two integers, got '{s}'")),
    }
}

fn parse_classes(s: &str) -> Result<Vec<DivisorClass>, String> {
    s.split(';').map(parse_class).collect()
}

/// Parses `args` (including the program name), writes results to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::ChecksFailed) => 1,
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            3
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

enum Outcome {
    Done,
    ChecksFailed,
}

enum CliError {
    Domain(Error),
    Usage(String),
    Io(std::io::Error),
}

impl<E: Into<Error>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Domain(e.into())
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Io(e)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match command {
        Command::VerifyTable {
            json,
            max_degree,
            threads,
        } => {
            if threads == Some(0) {
                return Err(CliError::Usage("--threads must be at least 1".into()));
            }
            verify_table(
                out,
                json,
                &VerifyOptions {
                    max_degree,
                    threads,
                },
            )
        }
        Command::Scroll(cmd) => scroll_cmd(cmd, out),
        Command::Surface(cmd) => surface_cmd(cmd, out),
        Command::K3(cmd) => k3_cmd(cmd, out),
        Command::Wps(cmd) => wps_cmd(cmd, out),
        Command::Cover(CoverCmd::Analyze { m, json }) => {
            let r = analyze_um(m)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&r).expect("serialises")
                )
                .map_err(io)?;
            } else {
                let verdict = if r.verdict.passes() {
                    "Passes"
                } else {
                    "Fails"
                };
                writeln!(out, "base: {}", r.base).map_err(io)?;
                writeln!(out, "branch: {}", r.branch).map_err(io)?;
                writeln!(out, "B: {} with multiplicity {}", r.b_class, r.b_mult).map_err(io)?;
                writeln!(out, "residual: {}", r.residual_class).map_err(io)?;
                writeln!(out, "R.B.O(1): {}", r.r_dot_b_sigma).map_err(io)?;
                writeln!(
                    out,
                    "fibre multiplicity at x{}: {}",
                    r.point_index, r.fiber_mult
                )
                .map_err(io)?;
                writeln!(out, "verdict: {verdict} (Du Val bound: multiplicity <= 3)")
                    .map_err(io)?;
            }
            Ok(Outcome::Done)
        }
        Command::Classify(ClassifyCmd::Enumerate { json }) => {
            let cases = enumerate_cases();
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&cases).expect("serialises")
                )
                .map_err(io)?;
            } else {
                for c in &cases {
                    writeln!(out, "{}", case_line(c)).map_err(io)?;
                }
            }
            Ok(Outcome::Done)
        }
        Command::Classify(ClassifyCmd::Prune { a, b }) => {
            writeln!(out, "{}", prune(a, b)?).map_err(io)?;
            Ok(Outcome::Done)
        }
        Command::Blowup(BlowupCmd::Degree {
            ambient,
            curve,
            genus,
        }) => {
            let d = blowup_degree(BlowupStep {
                ambient_degree: ambient,
                curve_degree: curve,
                genus,
            });
            writeln!(out, "{d}").map_err(io)?;
            Ok(Outcome::Done)
        }
    }
}

fn case_line(c: &ClassificationCase) -> String {
    let nb = c.nb.map_or_else(|| "-".to_owned(), |nb| nb.to_string());
    format!(
        "{}: m = {}, (-K)^3 = {}, dim Bs = {}, N = {}, W = {}; {}",
        c.label,
        c.m,
        c.degree,
        c.bs_dim,
        nb,
        c.w,
        c.construction.describe()
    )
}

fn verify_table(
    out: &mut dyn Write,
    json: bool,
    opts: &VerifyOptions,
) -> Result<Outcome, CliError> {
    let cases = verify_all(opts)?;
    let mut checks = Vec::new();
    for case in &cases {
        if !json {
            writeln!(out, "== {}", case_line(case)).map_err(io)?;
            for a in &case.assumptions {
                writeln!(out, "   assumes: {a}").map_err(io)?;
            }
            for ch in &case.checks {
                let mark = if ch.pass { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "   {mark} {}: {} [expected {}, got {}]",
                    ch.name, ch.claim, ch.expected, ch.got
                )
                .map_err(io)?;
            }
        }
        checks.extend(case.checks.iter().cloned());
    }
    let report = Report::new(checks);
    if json {
        writeln!(out, "{}", report.to_json()).map_err(io)?;
    } else {
        writeln!(
            out,
            "{} cases, {} checks passed, {} failed",
            cases.len(),
            report.summary.passed,
            report.summary.failed
        )
        .map_err(io)?;
    }
    Ok(if report.all_passed() {
        Outcome::Done
    } else {
        Outcome::ChecksFailed
    })
}

fn scroll_of(a: ScrollArgs) -> Result<Scroll, CliError> {
    Ok(Scroll::new(a.d)?)
}

fn scroll_cmd(cmd: ScrollCmd, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match cmd {
        ScrollCmd::H0 { scroll, class } => {
            writeln!(out, "{}", scroll_of(scroll)?.h0(class)).map_err(io)?;
        }
        ScrollCmd::Intersect {
            scroll,
            class,
            classes,
        } => {
            let s = scroll_of(scroll)?;
            let list = match (class, classes) {
                (_, Some(list)) => list,
                (Some(c), None) => vec![c; s.rank()],
                (None, None) => {
                    return Err(CliError::Usage(
                        "intersect needs --class or --classes".into(),
                    ))
                }
            };
            writeln!(out, "{}", s.intersect(&list)?).map_err(io)?;
        }
        ScrollCmd::Support { scroll, class } => {
            for e in scroll_of(scroll)?.monomial_support(class)? {
                let parts: Vec<String> = e.0.iter().map(u32::to_string).collect();
                writeln!(out, "{}", parts.join(",")).map_err(io)?;
            }
        }
        ScrollCmd::Canonical { scroll } => {
            writeln!(out, "{}", scroll_of(scroll)?.canonical_class()).map_err(io)?;
        }
        ScrollCmd::Fixed {
            scroll,
            comp,
            class,
        } => {
            let mu = scroll_of(scroll)?.fixed_component_multiplicity(comp, class)?;
            writeln!(out, "{mu}").map_err(io)?;
        }
        ScrollCmd::Mult {
            scroll,
            class,
            index,
        } => {
            let mult = scroll_of(scroll)?.fiber_multiplicity_at(class, index)?;
            writeln!(out, "{mult}").map_err(io)?;
        }
        ScrollCmd::Degree { scroll } => {
            let md = scroll_of(scroll)?.minimal_degree_data()?;
            writeln!(
                out,
                "degree {} in P{}, minimal degree: {}",
                md.degree, md.ambient_dim, md.is_minimal_degree
            )
            .map_err(io)?;
        }
    }
    Ok(Outcome::Done)
}

fn surface_class(e: u32, c: DivisorClass) -> SurfaceClass {
    SurfaceClass::new(e, c.h, c.f)
}

fn surface_cmd(cmd: SurfaceCmd, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match cmd {
        SurfaceCmd::Split { e, class } => {
            let (mu, rest) = surface_class(e, class).forced_minimal_decomposition()?;
            writeln!(out, "{mu}ξ + ({},{})", rest.xi, rest.fib).map_err(io)?;
        }
        SurfaceCmd::Dot { e, class, other } => {
            let d = surface_class(e, class).dot(&surface_class(e, other))?;
            writeln!(out, "{d}").map_err(io)?;
        }
        SurfaceCmd::Genus { e, class } => {
            writeln!(out, "{}", surface_class(e, class).genus()?).map_err(io)?;
        }
        SurfaceCmd::H0 { e, class } => {
            writeln!(out, "{}", surface_class(e, class).h0()).map_err(io)?;
        }
    }
    Ok(Outcome::Done)
}

fn k3_cmd(cmd: K3Cmd, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match cmd {
        K3Cmd::Degree { m } => {
            let degree = fano_degree(m)?;
            let dim = base_locus_dimension(m)?;
            writeln!(out, "(-K)^3 = {degree}, dim Bs|-K| = {dim}").map_err(io)?;
        }
        K3Cmd::Dot { class, other } => {
            let d = PencilClass::new(class.h, class.f).dot(&PencilClass::new(other.h, other.f));
            writeln!(out, "{d}").map_err(io)?;
        }
        K3Cmd::Chain { m } => {
            let up = cover_pullback(&SurfaceClass::new(4, 1, m))?;
            let down = up.blowup_section_reduce()?;
            let form = down.saint_donat_form()?;
            let degree = fano_degree(form)?;
            writeln!(out, "pullback: {up}").map_err(io)?;
            writeln!(out, "after blowup: {down}").map_err(io)?;
            writeln!(out, "m = {form}, (-K)^3 = {degree}").map_err(io)?;
        }
    }
    Ok(Outcome::Done)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn wps_cmd(cmd: WpsCmd, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match cmd {
        WpsCmd::Hilbert {
            weights,
            degrees,
            max,
        } => {
            let ci = WeightedCI::new(weights, degrees)?;
            writeln!(out, "{}", join(ci.hilbert_coeffs(max).coeffs())).map_err(io)?;
        }
        WpsCmd::Infer { series } => {
            let model = infer_ring(&HilbertPrefix(series))?;
            writeln!(out, "generators: {}", join(&model.generators)).map_err(io)?;
            writeln!(out, "relations: {}", join(&model.relations)).map_err(io)?;
        }
        WpsCmd::Degree { weights, degrees } => {
            let d = WeightedCI::new(weights, degrees)?.anticanonical_degree()?;
            writeln!(
                out,
                "-K = O({}), O(1)^3 = {}, (-K)^3 = {}",
                d.amplitude, d.hyperplane_cube, d.degree
            )
            .map_err(io)?;
        }
        WpsCmd::Rr { degree, k } => {
            writeln!(out, "{}", rr_chi(degree, k)?).map_err(io)?;
        }
    }
    Ok(Outcome::Done)
}
