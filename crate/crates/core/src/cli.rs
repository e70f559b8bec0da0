//! Command-line front end: `macdonald`, `verify` and `integral`.
//!
//! Exit codes: 0 when everything passes, 1 when a check fails (or a sum
//! does not converge), 2 for invalid arguments. Reports go to stdout as
//! JSON carrying `"schema": "1"`; diagnostics go to stderr.

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;
use serde_json::{json, Value};

use crate::hecke;
use crate::macdonald::{self, eigenvalue_c, macdonald_onerow};
use crate::qintegral::{self, bracket, NumericPoint, Selector};
use crate::report::Report;
use crate::rmatrix::{verify, Perturbation, QkzParams};

pub const SCHEMA: &str = "1";
const MAX_RANK_VAR: &str = "CNQKZ_MAX_RANK";

#[derive(Parser, Debug)]
#[command(
    name = "cnqkz",
    version,
    about = "Exact and numeric checks for the C_n QKZ apparatus"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Ybe,
    Conjugation,
    Hecke,
    #[value(name = "prop61")]
    LusztigTable,
    #[value(name = "lemmas4")]
    PhiLemmas,
    #[value(name = "identity53")]
    WeightedSum,
    #[value(name = "prop31")]
    Reflection,
    Eigen,
    Triangularity,
    QkzNumeric,
    #[value(name = "lemma43")]
    S0Relations,
    #[value(name = "cor51")]
    BracketSum,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Ybe => "ybe",
            Suite::Conjugation => "conjugation",
            Suite::Hecke => "hecke",
            Suite::LusztigTable => "prop61",
            Suite::PhiLemmas => "lemmas4",
            Suite::WeightedSum => "identity53",
            Suite::Reflection => "prop31",
            Suite::Eigen => "eigen",
            Suite::Triangularity => "triangularity",
            Suite::QkzNumeric => "qkz-numeric",
            Suite::S0Relations => "lemma43",
            Suite::BracketSum => "cor51",
            Suite::All => "all",
        }
    }

    /// Largest rank accepted without `CNQKZ_MAX_RANK`.
    fn default_max_rank(self) -> usize {
        match self {
            Suite::Hecke | Suite::LusztigTable | Suite::PhiLemmas | Suite::WeightedSum => 4,
            _ => 3,
        }
    }

    const EACH: [Suite; 12] = [
        Suite::Ybe,
        Suite::Conjugation,
        Suite::Hecke,
        Suite::LusztigTable,
        Suite::PhiLemmas,
        Suite::WeightedSum,
        Suite::Reflection,
        Suite::Eigen,
        Suite::Triangularity,
        Suite::QkzNumeric,
        Suite::S0Relations,
        Suite::BracketSum,
    ];
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand the one-row Macdonald polynomial P_(lambda,0,...,0).
    Macdonald {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        lambda: u32,
        #[arg(long, default_value_t = 0.3)]
        q: f64,
        #[arg(long, default_value_t = 0.7)]
        t: f64,
        /// Evaluation point, comma separated; each entry `a`, `a+bi` or `a-bi`.
        /// Random points are drawn from the seed when omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        y: Option<Vec<String>>,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Seed for the SplitMix64 generator behind every random point.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random points for the numeric suites.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// Apply the suite's deliberate perturbation; a sound suite fails.
        #[arg(long)]
        self_test: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate <psi> by residue sums.
    Integral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: u32,
        #[arg(long)]
        q: f64,
        #[arg(long)]
        t: f64,
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        y: Vec<String>,
        /// `one`, `phi_k`, `s0_phi_k` or `ratio`.
        #[arg(long, default_value = "one")]
        psi: String,
        #[arg(long)]
        prod_trunc: Option<usize>,
        #[arg(long)]
        ladder_trunc: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Exit code with the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

fn max_rank(suite_default: usize) -> usize {
    std::env::var(MAX_RANK_VAR)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(suite_default)
}

/// Parses `a`, `a+bi`, `a-bi` or `bi`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s = s.trim();
    let bad = || format!("cannot parse '{s}' as a complex number");
    if let Some(body) = s.strip_suffix('i') {
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with(['e', 'E']))
            .map(|(i, _)| i)
            .last();
        return match split {
            Some(i) => {
                let re: f64 = body[..i].parse().map_err(|_| bad())?;
                let im_str = &body[i..];
                let im: f64 = match im_str {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => im_str.parse().map_err(|_| bad())?,
                };
                Ok(Complex64::new(re, im))
            }
            None => Ok(Complex64::new(0.0, body.parse().map_err(|_| bad())?)),
        };
    }
    Ok(Complex64::new(s.parse().map_err(|_| bad())?, 0.0))
}

fn parse_selector(s: &str, n: usize) -> Result<Selector, String> {
    let index = |rest: &str| -> Result<usize, String> {
        let k: usize = rest
            .parse()
            .map_err(|_| format!("bad phi index in '{s}'"))?;
        if k == 0 || k > 2 * n {
            return Err(format!("phi index {k} out of range 1..={}", 2 * n));
        }
        Ok(k)
    };
    match s {
        "one" => Ok(Selector::One),
        "ratio" => Ok(Selector::FullRatio),
        _ => {
            if let Some(rest) = s.strip_prefix("s0_phi_") {
                Ok(Selector::S0Phi(index(rest)?))
            } else if let Some(rest) = s.strip_prefix("phi_") {
                Ok(Selector::Phi(index(rest)?))
            } else {
                Err(format!("unknown selector '{s}'"))
            }
        }
    }
}

fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Largest `λ` accepted for the symbolic Macdonald computations at rank `n`.
fn max_lambda(n: usize) -> u32 {
    match n {
        1 => 8,
        2 => 5,
        3 => 3,
        _ => 2,
    }
}

fn cmd_macdonald(n: usize, lambda: u32, format: Format) -> Outcome {
    if n == 0 || lambda == 0 {
        return Outcome::usage("n and lambda must be positive");
    }
    if n > max_rank(3) || (std::env::var(MAX_RANK_VAR).is_err() && lambda > max_lambda(n)) {
        return Outcome::usage(format!(
            "n={n}, lambda={lambda} exceeds the desk-scale limit (set {MAX_RANK_VAR} to override)"
        ));
    }
    let p = match macdonald_onerow(n, lambda) {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: e.to_string(),
            }
        }
    };
    let m = match p.m_expansion() {
        Ok(m) => m,
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: e.to_string(),
            }
        }
    };
    let mut mu = vec![0; n];
    mu[0] = lambda as i32;
    let c = eigenvalue_c(&mu, n).expect("partition");
    let monomials: Vec<(String, String)> = p
        .monomial_terms()
        .into_iter()
        .map(|(e, c)| (macdonald::sym::format_weight(&e), c.to_string()))
        .collect();
    let stdout = match format {
        Format::Json => to_json_string(&json!({
            "schema": SCHEMA,
            "n": n,
            "lambda": lambda,
            "variables": {"v": "q^(1/2)", "u": "t^(1/2)"},
            "monomial_expansion": monomials.iter()
                .map(|(m, c)| json!({"monomial": m, "coefficient": c})).collect::<Vec<_>>(),
            "m_basis_expansion": m.iter()
                .map(|(nu, c)| json!({"weight": nu, "coefficient": c.to_string()})).collect::<Vec<_>>(),
            "eigenvalue": c.to_string(),
        })),
        Format::Text => {
            let mut s = format!("P_({lambda},0,...,0) for n = {n}   [v = q^(1/2), u = t^(1/2)]\n");
            s.push_str("monomial expansion:\n");
            for (m, c) in &monomials {
                s.push_str(&format!("  {m}: {c}\n"));
            }
            s.push_str("m-basis expansion:\n");
            for (nu, c) in &m {
                s.push_str(&format!("  m{nu:?}: {c}\n"));
            }
            s.push_str(&format!("eigenvalue: {c}\n"));
            s
        }
    };
    Outcome {
        code: 0,
        stdout,
        stderr: String::new(),
    }
}

struct VerifyOptions {
    n: usize,
    lambda: u32,
    q: f64,
    t: f64,
    y: Option<Vec<Complex64>>,
    tol: f64,
    seed: u64,
    samples: usize,
    self_test: bool,
}

impl VerifyOptions {
    fn params(&self, p: Perturbation) -> QkzParams {
        let params = QkzParams::new(self.n, self.lambda);
        if self.self_test {
            params.with_perturbation(p)
        } else {
            params
        }
    }

    /// The given point, or `samples` random ones.
    fn points(&self) -> Result<Vec<NumericPoint>, qintegral::QintegralError> {
        // only a template for q, t, λ when no point is given
        let seed_y: Vec<Complex64> = (0..self.n)
            .map(|j| Complex64::new(0.85 + 0.17 * j as f64, 0.1))
            .collect();
        let base = match &self.y {
            Some(y) => NumericPoint::new(self.q, self.t, y.clone(), self.lambda)?,
            None => NumericPoint::new(self.q, self.t, seed_y, self.lambda)?,
        }
        .with_tol(self.tol);
        if self.y.is_some() {
            return Ok(vec![base]);
        }
        let mut rng = SplitMix64::seed_from_u64(self.seed);
        Ok((0..self.samples)
            .map(|_| qintegral::random_point(&base, &mut rng))
            .collect())
    }
}

fn run_suite(suite: Suite, o: &VerifyOptions) -> Result<Report, String> {
    let n = o.n;
    let mut report = Report::new();
    match suite {
        Suite::Ybe => report.extend(verify::verify_ybe(&o.params(Perturbation::DPlusOne))),
        Suite::Conjugation => {
            report.extend(verify::verify_inverse(&o.params(Perturbation::DPlusOne)));
            report.extend(verify::verify_conjugation(&o.params(Perturbation::DPlusY1)));
        }
        Suite::Hecke => report.extend(hecke::verify_hecke_relations(n, o.self_test)),
        Suite::LusztigTable => report.extend(hecke::verify_lusztig_table(n, o.self_test)),
        Suite::PhiLemmas => {
            let p = o.params(Perturbation::DPlusOne);
            report.extend(hecke::verify_si_action(&p));
            report.extend(hecke::verify_partial_fractions(&p));
            report.extend(verify::verify_induced(&p));
        }
        Suite::WeightedSum => report.extend(hecke::verify_weighted_phi_identity(n, o.self_test)),
        Suite::Reflection => report.extend(hecke::verify_reflection_integrand(
            &o.params(Perturbation::DPlusOne),
        )),
        Suite::Eigen => {
            if o.lambda > max_lambda(n) && std::env::var(MAX_RANK_VAR).is_err() {
                return Err(format!("lambda={} exceeds the desk-scale limit", o.lambda));
            }
            report.extend(macdonald::verify_eigen(n, o.lambda, o.self_test))
        }
        Suite::Triangularity => {
            if o.lambda > max_lambda(n) && std::env::var(MAX_RANK_VAR).is_err() {
                return Err(format!("lambda={} exceeds the desk-scale limit", o.lambda));
            }
            report.extend(macdonald::verify_triangularity(n, o.lambda, o.self_test))
        }
        Suite::QkzNumeric => {
            for pt in o.points().map_err(|e| e.to_string())? {
                report.extend(qintegral::verify_qkz(&pt, o.self_test));
            }
        }
        Suite::S0Relations => {
            let p = o.params(Perturbation::DPlusOne);
            for pt in o.points().map_err(|e| e.to_string())? {
                report.extend(qintegral::verify_s0_relations(&pt, &p));
                report.extend(qintegral::verify_s0_fixed(&pt));
            }
        }
        Suite::BracketSum => {
            let pts = o.points().map_err(|e| e.to_string())?;
            for pt in &pts {
                report.extend(qintegral::verify_bracket_sum(pt, o.self_test));
            }
            report.extend(qintegral::ratio_test_macdonald(
                &pts[0],
                o.samples.max(5),
                o.seed,
                o.self_test,
            ));
        }
        Suite::All => {
            for s in Suite::EACH {
                if n <= max_rank(s.default_max_rank()) {
                    report.extend(run_suite(s, o)?);
                }
            }
        }
    }
    Ok(report)
}

fn cmd_verify(suite: Suite, o: VerifyOptions, format: Format) -> Outcome {
    if o.n == 0 || o.lambda == 0 {
        return Outcome::usage("n and lambda must be positive");
    }
    let limit = match suite {
        Suite::All => 4,
        s => s.default_max_rank(),
    };
    if o.n > max_rank(limit) {
        return Outcome::usage(format!(
            "n={} exceeds the desk-scale limit {} for {} (set {MAX_RANK_VAR} to override)",
            o.n,
            limit,
            suite.name()
        ));
    }
    if matches!(
        suite,
        Suite::QkzNumeric | Suite::S0Relations | Suite::BracketSum | Suite::All
    ) {
        if let Err(e) = o.points() {
            return Outcome::usage(e.to_string());
        }
    }
    let report = match run_suite(suite, &o) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let passed = report.passed();
    let stdout = match format {
        Format::Json => to_json_string(&json!({
            "schema": SCHEMA,
            "suite": suite.name(),
            "n": o.n,
            "lambda": o.lambda,
            "seed": o.seed,
            "self_test": o.self_test,
            "passed": passed,
            "max_residual": report.max_residual(),
            "checks": report.checks,
        })),
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let status = if c.passed() { "pass" } else { "FAIL" };
                s.push_str(&format!("{status}  {}  {}", c.identity, c.parameters));
                if let Some(r) = c.residual {
                    s.push_str(&format!("  residual={r:e}"));
                }
                if let Some(cex) = &c.counterexample {
                    s.push_str(&format!("  [{cex}]"));
                }
                s.push('\n');
            }
            let failed = report.failures().count();
            s.push_str(&format!(
                "{}: {} checks, {} failed (seed {})\n",
                suite.name(),
                report.len(),
                failed,
                o.seed
            ));
            s
        }
    };
    Outcome {
        code: if passed { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_integral(
    n: usize,
    lambda: u32,
    q: f64,
    t: f64,
    y: Vec<Complex64>,
    psi: &str,
    prod_trunc: Option<usize>,
    ladder_trunc: Option<usize>,
    format: Format,
) -> Outcome {
    if y.len() != n {
        return Outcome::usage(format!("expected {n} values for --y, got {}", y.len()));
    }
    let sel = match parse_selector(psi, n) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let mut pt = match NumericPoint::new(q, t, y, lambda) {
        Ok(p) => p,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    if let Some(p) = prod_trunc {
        pt.prod_trunc = p;
    }
    if let Some(l) = ladder_trunc {
        pt.ladder_trunc = l;
    }
    let b = match bracket(sel, &pt) {
        Ok(b) => b,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let stdout = match format {
        Format::Json => to_json_string(&json!({
            "schema": SCHEMA,
            "psi": psi,
            "point": pt.to_json(),
            "value": [b.value.re, b.value.im],
            "converged": b.converged,
            "terms_used": b.terms_used,
        })),
        Format::Text => format!(
            "<{psi}> = {:.15e} {:+.15e}i  (terms {}, converged {})\n",
            b.value.re, b.value.im, b.terms_used, b.converged
        ),
    };
    Outcome {
        code: if b.converged { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

fn parse_points(raw: &[String]) -> Result<Vec<Complex64>, String> {
    raw.iter().map(|s| parse_complex(s)).collect()
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    match cli.command {
        Command::Macdonald { n, lambda, format } => cmd_macdonald(n, lambda, format),
        Command::Verify {
            suite,
            n,
            lambda,
            q,
            t,
            y,
            tol,
            seed,
            samples,
            self_test,
            format,
        } => {
            let y = match y.as_deref().map(parse_points).transpose() {
                Ok(y) => y,
                Err(e) => return Outcome::usage(e),
            };
            if let Some(y) = &y {
                if y.len() != n {
                    return Outcome::usage(format!("expected {n} values for --y, got {}", y.len()));
                }
            }
            if tol.is_nan() || tol <= 0.0 {
                return Outcome::usage("tol must be positive");
            }
            let o = VerifyOptions {
                n,
                lambda,
                q,
                t,
                y,
                tol,
                seed,
                samples,
                self_test,
            };
            cmd_verify(suite, o, format)
        }
        Command::Integral {
            n,
            lambda,
            q,
            t,
            y,
            psi,
            prod_trunc,
            ladder_trunc,
            format,
        } => {
            if n == 0 {
                return Outcome::usage("n must be positive");
            }
            match parse_points(&y) {
                Ok(y) => cmd_integral(n, lambda, q, t, y, &psi, prod_trunc, ladder_trunc, format),
                Err(e) => Outcome::usage(e),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_parsing() {
        assert_eq!(parse_complex("0.9").unwrap(), Complex64::new(0.9, 0.0));
        assert_eq!(parse_complex("0.9+0.2i").unwrap(), Complex64::new(0.9, 0.2));
        assert_eq!(parse_complex("1e-1-2i").unwrap(), Complex64::new(0.1, -2.0));
        assert_eq!(parse_complex("-0.5i").unwrap(), Complex64::new(0.0, -0.5));
        assert_eq!(parse_complex("1-i").unwrap(), Complex64::new(1.0, -1.0));
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn selector_parsing() {
        assert_eq!(parse_selector("phi_2", 1).unwrap(), Selector::Phi(2));
        assert_eq!(parse_selector("s0_phi_1", 2).unwrap(), Selector::S0Phi(1));
        assert!(parse_selector("phi_3", 1).is_err());
        assert!(parse_selector("psi", 1).is_err());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(
            run(["cnqkz", "macdonald", "--n", "0", "--lambda", "1"]).code,
            2
        );
        assert_eq!(run(["cnqkz", "verify", "nosuch"]).code, 2);
        assert_eq!(run(["cnqkz", "verify", "ybe", "--bogus"]).code, 2);
    }
}
