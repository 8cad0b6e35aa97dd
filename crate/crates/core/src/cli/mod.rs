//! Command-line front end of the `wigner` binary.
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage or parse error,
//! 3 input state not Wigner positive, 4 entropy bound violated.

mod state;
pub mod suites;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::entropy::{vacuum_entropy, wehrl_entropy, wigner_entropy_radial, wigner_renyi, QuadratureSpec, RenyiOrder};
use crate::error::{Error, Result};
use crate::gaussian::{gaussian_renyi, gaussian_wehrl, gaussian_wigner_entropy};
use crate::photonmix::sigma_coefficients;
use crate::positivity::{arc_tangency_t, extremal_arc_point, tangent_line};

pub use state::StateFile;
pub use suites::{run_suite, SuiteContext, SuiteReport, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_POSITIVE: i32 = 3;
pub const EXIT_BOUND_VIOLATION: i32 = 4;

/// Largest `--max` accepted by `sigma-table`.
pub const SIGMA_TABLE_LIMIT: usize = 30;

/// Smallest `--samples` accepted by `region2`.
pub const REGION_MIN_SAMPLES: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "wigner", version, about = "Wigner entropy of Wigner-positive single-mode states")]
pub struct Cli {
    /// Absolute tolerance of the entropy quadratures.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub quad_tol: f64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed of the random samplers.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Write CSV output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropies of the state in a JSON state file.
    Entropy {
        state: PathBuf,
        /// Renyi orders to report (repeatable; `inf` allowed).
        #[arg(long)]
        renyi: Vec<RenyiOrder>,
    },
    /// Wigner entropy of sigma(m, n) for 0 <= m, n <= MAX.
    SigmaTable {
        #[arg(long, default_value_t = 10)]
        max: usize,
    },
    /// Boundary, extremal arc and tangent lines of the two-photon region.
    Region2 {
        #[arg(long, default_value_t = 101)]
        samples: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

/// Formats `v` with 15 significant digits, in plain or scientific notation
/// like C's `%.15g`.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{v:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-5..15).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let decimals = (14 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// First line of every CSV written by the tool.
pub fn csv_preamble(seed: u64, tol: f64) -> String {
    format!("# seed={seed}, tol={}, version={}\n", format_number(tol), env!("CARGO_PKG_VERSION"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            code
        }
    }
}

pub fn run(cli: &Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32 {
    let quad = QuadratureSpec::default().with_abs_tol(cli.quad_tol);
    if let Err(e) = quad.validate() {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    pool.install(|| match &cli.command {
        Command::Entropy { state, renyi } => cmd_entropy(cli, &quad, state, renyi, out, err),
        Command::SigmaTable { max } => cmd_sigma_table(cli, &quad, *max, out, err),
        Command::Region2 { samples } => cmd_region2(cli, *samples, out, err),
        Command::Verify { suite } => cmd_verify(cli, &quad, suite, out, err),
    })
}

fn emit(cli: &Cli, text: &str, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> bool {
    let result = match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = result {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return false;
    }
    true
}

struct EntropySummary {
    wigner: f64,
    renyi: Vec<(RenyiOrder, f64)>,
    wehrl: f64,
    purity: f64,
}

fn entropy_summary(state: &StateFile, orders: &[RenyiOrder], quad: &QuadratureSpec) -> Result<EntropySummary> {
    match state {
        StateFile::Fock(p) => Ok(EntropySummary {
            wigner: wigner_entropy_radial(p, quad)?,
            renyi: orders
                .iter()
                .map(|o| Ok((*o, wigner_renyi(p, *o, quad)?)))
                .collect::<Result<_>>()?,
            wehrl: wehrl_entropy(p, quad)?,
            purity: p.purity(),
        }),
        StateFile::Gaussian(g) => Ok(EntropySummary {
            wigner: gaussian_wigner_entropy(g),
            renyi: orders
                .iter()
                .map(|o| Ok((*o, gaussian_renyi(g, o.alpha())?)))
                .collect::<Result<_>>()?,
            wehrl: gaussian_wehrl(g),
            purity: g.purity(),
        }),
    }
}

fn order_label(o: &RenyiOrder) -> String {
    if o.alpha().is_infinite() {
        "inf".into()
    } else {
        format_number(o.alpha())
    }
}

pub fn cmd_entropy(
    cli: &Cli,
    quad: &QuadratureSpec,
    path: &Path,
    orders: &[RenyiOrder],
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> i32 {
    let state = match StateFile::load(path) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let summary = match entropy_summary(&state, orders, quad) {
        Ok(s) => s,
        Err(e @ Error::NotWignerPositive { .. }) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_NOT_POSITIVE;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILED;
        }
    };
    let margin = summary.wigner - vacuum_entropy();
    let mut rows = vec![("h(W)".to_string(), summary.wigner)];
    for (o, h) in &summary.renyi {
        rows.push((format!("h_{}(W)", order_label(o)), *h));
    }
    rows.push(("wehrl".into(), summary.wehrl));
    rows.push(("purity".into(), summary.purity));
    rows.push(("margin".into(), margin));

    let mut report = String::new();
    for (k, v) in &rows {
        let _ = writeln!(report, "{k} = {}", format_number(*v));
    }
    if out.write_all(report.as_bytes()).is_err() {
        return EXIT_FAILED;
    }
    if let Some(path) = &cli.out {
        let mut csv = csv_preamble(cli.seed, quad.abs_tol);
        csv.push_str("quantity,value\n");
        for (k, v) in &rows {
            let _ = writeln!(csv, "{k},{}", format_number(*v));
        }
        if let Err(e) = std::fs::write(path, csv) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_FAILED;
        }
    }
    EXIT_OK
}

/// Entropies `h(sigma(m, n))` for `0 <= m, n <= max`, row-major.
pub fn sigma_entropy_table(max: usize, quad: &QuadratureSpec) -> Result<Vec<(usize, usize, f64)>> {
    let cells: Vec<(usize, usize)> = (0..=max).flat_map(|m| (0..=max).map(move |n| (m, n))).collect();
    cells
        .par_iter()
        .map(|&(m, n)| Ok((m, n, wigner_entropy_radial(&sigma_coefficients(m, n)?.coeffs, quad)?)))
        .collect()
}

pub fn cmd_sigma_table(cli: &Cli, quad: &QuadratureSpec, max: usize, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32 {
    if max > SIGMA_TABLE_LIMIT {
        let _ = writeln!(err, "error: --max {max} exceeds the limit {SIGMA_TABLE_LIMIT}");
        return EXIT_USAGE;
    }
    let table = match sigma_entropy_table(max, quad) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILED;
        }
    };
    let bound = vacuum_entropy();
    let size = max + 1;
    let at = |m: usize, n: usize| table[m * size + n].2;
    let mut violation = false;
    for &(m, n, h) in &table {
        if h < bound - suites::CONJECTURE_SLACK {
            violation = true;
            let _ = writeln!(
                err,
                "!!! COUNTEREXAMPLE: h(sigma({m},{n})) = {} is below ln pi + 1 = {} !!!",
                format_number(h),
                format_number(bound)
            );
        }
        if (h - at(n, m)).abs() > 1e-9 {
            let _ = writeln!(err, "warning: table not symmetric at ({m},{n})");
        }
        if n + 1 < size && at(m, n + 1) < h - 1e-9 {
            let _ = writeln!(err, "warning: h(sigma({m},{})) < h(sigma({m},{n}))", n + 1);
        }
        if m + 1 < size && at(m + 1, n) < h - 1e-9 {
            let _ = writeln!(err, "warning: h(sigma({},{n})) < h(sigma({m},{n}))", m + 1);
        }
    }
    let mut csv = csv_preamble(cli.seed, quad.abs_tol);
    csv.push_str("m,n,entropy\n");
    for &(m, n, h) in &table {
        let _ = writeln!(csv, "{m},{n},{}", format_number(h));
    }
    if !emit(cli, &csv, out, err) {
        return EXIT_FAILED;
    }
    if violation {
        EXIT_BOUND_VIOLATION
    } else {
        EXIT_OK
    }
}

/// Rows of the two-photon region CSV: `kind, param, p1, p2, tangency_t,
/// coef_p1, coef_p2, coef_1`. Arc rows are parametrized by `a`, facet rows
/// by `p2`, tangent rows by `r`; unused fields are empty.
pub fn region2_csv(samples: usize, seed: u64) -> Result<String> {
    let mut csv = csv_preamble(seed, 0.0);
    csv.push_str("kind,param,p1,p2,tangency_t,coef_p1,coef_p2,coef_1\n");
    let step = 1.0 / (samples - 1) as f64;
    for i in 0..samples {
        let a = i as f64 * step;
        let (p1, p2) = extremal_arc_point(a)?;
        let t = arc_tangency_t(a)?;
        let _ = writeln!(
            csv,
            "arc,{},{},{},{},,,",
            format_number(a),
            format_number(p1),
            format_number(p2),
            format_number(t)
        );
    }
    for i in 0..samples {
        let p2 = 0.25 * i as f64 * step;
        let _ = writeln!(csv, "facet,{},0.5,{},,,,", format_number(p2), format_number(p2));
    }
    let r_max = 2.5;
    for i in 0..samples {
        let r = r_max * i as f64 * step;
        let (c1, c2, c0) = tangent_line(r);
        let _ = writeln!(
            csv,
            "tangent,{},,,{},{},{},{}",
            format_number(r),
            format_number(2.0 * r * r),
            format_number(c1),
            format_number(c2),
            format_number(c0)
        );
    }
    Ok(csv)
}

pub fn cmd_region2(cli: &Cli, samples: usize, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32 {
    if samples < REGION_MIN_SAMPLES {
        let _ = writeln!(err, "error: --samples must be at least {REGION_MIN_SAMPLES}");
        return EXIT_USAGE;
    }
    match region2_csv(samples, cli.seed) {
        Ok(csv) if emit(cli, &csv, out, err) => EXIT_OK,
        Ok(_) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

pub fn cmd_verify(cli: &Cli, quad: &QuadratureSpec, suite: &str, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32 {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        let _ = writeln!(err, "error: unknown suite '{suite}' (expected one of {}, all)", SUITES.join(", "));
        return EXIT_USAGE;
    };
    let ctx = SuiteContext {
        quad: *quad,
        seed: cli.seed,
    };
    let mut text = String::new();
    let _ = writeln!(text, "# seed={}, tol={}", cli.seed, format_number(quad.abs_tol));
    let mut passed = true;
    for name in names {
        let report = run_suite(name, &ctx).expect("known suite");
        passed &= report.passed;
        let _ = writeln!(text, "{}: {}", report.name, if report.passed { "PASS" } else { "FAIL" });
        for line in &report.lines {
            let _ = writeln!(text, "{line}");
        }
    }
    if !emit(cli, &text, out, err) {
        return EXIT_FAILED;
    }
    if passed {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(0.5), "0.5");
        assert_eq!(format_number(std::f64::consts::PI), "3.14159265358979");
        assert_eq!(format_number(2.144_729_885_849_400_2), "2.14472988584940".trim_end_matches('0'));
        assert_eq!(format_number(1e-10), "1e-10");
        assert_eq!(format_number(-1.5e20), "-1.5e+20");
        assert_eq!(format_number(123456.0), "123456");
        assert_eq!(format_number(0.0001), "0.0001");
        assert_eq!(format_number(9.999_999_999_999_999), "10");
        assert_eq!(format_number(f64::INFINITY), "inf");
    }

    #[test]
    fn region_rows() {
        let csv = region2_csv(16, 42).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert!(lines[0].starts_with("# seed=42"));
        assert_eq!(lines.len(), 2 + 3 * 16);
        assert!(lines.contains(&"arc,1,0,0.5,2,,,"));
        assert!(lines.contains(&"tangent,0,,,0,-2,0,1"));
    }
}
