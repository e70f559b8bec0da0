//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::time::Instant;

use cnqkz::hecke;
use cnqkz::macdonald;
use cnqkz::qintegral::{self, NumericPoint};
use cnqkz::report::Report;
use cnqkz::rmatrix::{verify, QkzParams};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;

const TOL: f64 = 1e-8;

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: Vec<Report>) -> Outcome {
    let checks: usize = reports.iter().map(Report::len).sum();
    let fail = reports.iter().flat_map(|r| r.failures()).next();
    let worst = reports
        .iter()
        .filter_map(Report::max_residual)
        .fold(None, |a: Option<f64>, b| Some(a.map_or(b, |a| a.max(b))));
    let mut detail = format!("{checks} checks");
    if let Some(w) = worst {
        detail += &format!(", max residual {w:.2e}");
    }
    if let Some(f) = fail {
        detail += &format!(", first failure: {} {:?}", f.identity, f.counterexample);
    }
    Outcome {
        ok: checks > 0 && fail.is_none(),
        detail,
    }
}

fn points(n: usize, lambda: u32, count: usize, seed: u64) -> Vec<NumericPoint> {
    let y = (0..n)
        .map(|j| Complex64::new(0.9 + 0.2 * j as f64, 0.1))
        .collect();
    let base = NumericPoint::new(0.3, 0.7, y, lambda)
        .expect("template")
        .with_tol(TOL);
    let mut rng = SplitMix64::seed_from_u64(seed);
    (0..count)
        .map(|_| qintegral::random_point(&base, &mut rng))
        .collect()
}

const NUMERIC_CONFIGS: [(usize, u32); 4] = [(1, 1), (1, 2), (2, 1), (2, 2)];

fn c1() -> Outcome {
    from_reports(
        (2..=3)
            .map(|n| verify::verify_ybe(&QkzParams::new(n, 1)))
            .collect(),
    )
}

fn c2() -> Outcome {
    let mut reps = Vec::new();
    for n in 1..=3 {
        for lambda in 1..=2 {
            let p = QkzParams::new(n, lambda);
            reps.push(verify::verify_inverse(&p));
            reps.push(verify::verify_conjugation(&p));
        }
    }
    from_reports(reps)
}

fn c3() -> Outcome {
    let mut reps = Vec::new();
    for n in 1..=4 {
        let p = QkzParams::new(n, 1);
        reps.push(hecke::verify_si_action(&p));
        reps.push(hecke::verify_partial_fractions(&p));
        reps.push(verify::verify_induced(&p));
        reps.push(hecke::verify_weighted_phi_identity(n, false));
    }
    from_reports(reps)
}

fn c4() -> Outcome {
    from_reports(
        (1..=3)
            .map(|n| hecke::verify_reflection_integrand(&QkzParams::new(n, 1)))
            .collect(),
    )
}

fn c5() -> Outcome {
    let mut reps = Vec::new();
    for n in 1..=4 {
        reps.push(hecke::verify_hecke_relations(n, false));
        reps.push(hecke::verify_lusztig_table(n, false));
    }
    from_reports(reps)
}

fn macdonald_range() -> Vec<(usize, u32)> {
    (1..=5)
        .map(|l| (1, l))
        .chain((1..=4).map(|l| (2, l)))
        .chain((1..=3).map(|l| (3, l)))
        .collect()
}

fn c6() -> Outcome {
    from_reports(
        macdonald_range()
            .into_iter()
            .map(|(n, l)| macdonald::verify_eigen(n, l, false))
            .collect(),
    )
}

fn c7() -> Outcome {
    from_reports(
        macdonald_range()
            .into_iter()
            .map(|(n, l)| macdonald::verify_triangularity(n, l, false))
            .collect(),
    )
}

fn c8() -> Outcome {
    let mut reps = Vec::new();
    let mut shrink = Vec::new();
    for (i, &(n, l)) in NUMERIC_CONFIGS.iter().enumerate() {
        let pts = points(n, l, 3, 100 + i as u64);
        for pt in &pts {
            reps.push(qintegral::verify_qkz(pt, false));
        }
        // a coarse truncation against the default one at the first point
        let coarse = pts[0]
            .clone()
            .with_truncation(12, 6)
            .with_tol(f64::INFINITY);
        let r_coarse = qintegral::verify_qkz(&coarse, false)
            .max_residual()
            .unwrap_or(f64::NAN);
        let r_fine = reps[reps.len() - 3].max_residual().unwrap_or(f64::NAN);
        shrink.push((n, l, r_coarse, r_fine));
    }
    let mut out = from_reports(reps);
    let shrinks = shrink.iter().all(|&(_, _, c, f)| f < c);
    out.ok &= shrinks;
    for (n, l, c, f) in shrink {
        out.detail += &format!("; ({n},{l}) coarse {c:.1e} -> default {f:.1e}");
    }
    out
}

fn c9() -> Outcome {
    let mut reps = Vec::new();
    for (i, &(n, l)) in NUMERIC_CONFIGS.iter().enumerate() {
        for pt in points(n, l, 3, 100 + i as u64) {
            reps.push(qintegral::verify_s0_relations(&pt, &QkzParams::new(n, l)));
            reps.push(qintegral::verify_s0_fixed(&pt));
        }
    }
    from_reports(reps)
}

fn c10() -> Outcome {
    let configs = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)];
    let mut reps = Vec::new();
    for (i, &(n, l)) in configs.iter().enumerate() {
        let pts = points(n, l, 3, 200 + i as u64);
        for pt in &pts {
            reps.push(qintegral::verify_bracket_sum(pt, false));
        }
        reps.push(qintegral::ratio_test_macdonald(
            &pts[0],
            5,
            300 + i as u64,
            false,
        ));
    }
    from_reports(reps)
}

fn c11() -> Outcome {
    let suites = [
        "ybe",
        "conjugation",
        "hecke",
        "prop61",
        "lemmas4",
        "identity53",
        "prop31",
        "eigen",
        "triangularity",
        "qkz-numeric",
        "lemma43",
        "cor51",
    ];
    let mut bad = Vec::new();
    for s in suites {
        let args = [
            "cnqkz",
            "verify",
            s,
            "--n",
            "2",
            "--lambda",
            "2",
            "--self-test",
        ];
        let plain = cnqkz::cli::run(args[..7].iter().copied());
        let mutated = cnqkz::cli::run(args);
        if plain.code != 0 || mutated.code != 1 {
            bad.push(format!(
                "{s} (plain {}, self-test {})",
                plain.code, mutated.code
            ));
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!(
                "{} suites pass plainly and fail under --self-test",
                suites.len()
            )
        } else {
            format!("misbehaving: {}", bad.join(", "))
        },
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("Yang-Baxter families, n = 2, 3 (exact)", c1),
        ("R inverse and r_w conjugation, n <= 3 (exact)", c2),
        (
            "phi-basis lemmas, partial fractions, induced action, weighted sum, n <= 4 (exact)",
            c3,
        ),
        ("integrand-level r_s Psi = R Psi, n <= 3 (exact)", c4),
        (
            "Hecke relations and Lusztig action table, n <= 4 (exact)",
            c5,
        ),
        ("Macdonald eigen-equation (exact)", c6),
        ("triangularity with unit leading coefficient (exact)", c7),
        (
            "numeric QKZ, residual < 1e-8, shrinking with truncation",
            c8,
        ),
        (
            "s_0 bracket relations and s_0-fixed brackets, residual < 1e-8",
            c9,
        ),
        (
            "bracket sum relation, shift identity, <1>/P ratio, residual < 1e-8",
            c10,
        ),
        ("every suite fails under --self-test", c11),
    ];
    let args: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !args.is_empty() && !args.iter().any(|a| a == &id.to_string()) {
            continue;
        }
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] criterion {id:>2}: {name} ({secs:.1}s; {})",
            out.detail
        );
        failed += usize::from(!out.ok);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
