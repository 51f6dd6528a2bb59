//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::f64::consts::{FRAC_PI_4, PI, TAU};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use wiretwist::torque::origin_stiffness;
use wiretwist::{
    fit_surrogate, oracle_torque, run_doe, section_integral, stiffness_circular, stiffness_engineering,
    stiffness_from_integral, stiffness_numeric, torque_full, torque_curve, DoeGrid, GridSpec, QuadratureSpec,
    SectionGeometry, WireRing,
};

const R: f64 = 227.0;
const SECTION_R: f64 = 3.3;
const Z: u32 = 82;
const E: f64 = 210_000.0;

/// Published I/r^4 values by `(r_w/r, L/r)`.
const PUBLISHED_TABLE: [(f64, f64, f64); 12] = [
    (2.0, 2.25, 0.522_088_805),
    (2.5, 2.75, 0.513_905_797),
    (3.0, 3.25, 0.503_645_074),
    (2.0, 2.5, 0.609_857_837),
    (2.5, 3.0, 0.604_207_922),
    (3.0, 3.5, 0.600_254_386),
    (2.0, 2.75, 0.708_211_997),
    (2.5, 3.25, 0.705_624_706),
    (3.0, 3.75, 0.703_774_932),
    (2.0, 3.0, FRAC_PI_4),
    (2.5, 3.5, FRAC_PI_4),
    (3.0, 4.0, FRAC_PI_4),
];

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn circular_ring() -> WireRing {
    WireRing::new(R, Z, E, SectionGeometry::circular(SECTION_R).unwrap()).unwrap()
}

fn real_ring() -> WireRing {
    let s = SectionGeometry::wire_race_from_ratios(SECTION_R, 3.0, 3.5, FRAC_PI_4).unwrap();
    WireRing::new(R, Z, E, s).unwrap()
}

fn within_time(label: String, elapsed: Duration, limit: Duration) -> Outcome {
    if elapsed < limit {
        Ok(format!("{label}, {elapsed:.2?} < {limit:?}"))
    } else {
        Err(format!("{label}, but took {elapsed:.2?} >= {limit:?}"))
    }
}

fn circular_closed_form() -> Outcome {
    let ring = circular_ring();
    let k = stiffness_circular(&ring).map_err(|e| e.to_string())?;
    let reps = 10_000u32;
    let start = Instant::now();
    for _ in 0..reps {
        std::hint::black_box(stiffness_circular(std::hint::black_box(&ring)).unwrap());
    }
    let per_call = start.elapsed() / reps;
    if (k - 6602.0).abs() > 1.0 {
        return Err(format!("K = {k}, expected 6602 +- 1"));
    }
    within_time(format!("K = {k:.4}"), per_call, Duration::from_millis(1))
}

fn table_regression() -> Outcome {
    let start = Instant::now();
    let grid = DoeGrid::all_symmetric_gammas();
    let table = run_doe(&grid, &QuadratureSpec::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    let mut checked = 0;
    for row in &table.rows {
        let Some(&(_, _, want)) = PUBLISHED_TABLE
            .iter()
            .find(|(a, b, _)| (a - row.rw_ratio).abs() < 1e-12 && (b - row.l_ratio).abs() < 1e-12)
        else {
            return Err(format!("row ({}, {}) has no published value", row.rw_ratio, row.l_ratio));
        };
        checked += 1;
        let dev = (row.i_over_r4 - want).abs();
        if dev > 1e-6 {
            failures.push(format!(
                "({}, {}, gamma {:.4}): {:.9} vs published {want:.9} (|d| = {dev:.3e})",
                row.rw_ratio, row.l_ratio, row.gamma, row.i_over_r4
            ));
        }
    }
    if checked != 48 {
        return Err(format!("expected 48 rows, got {checked}"));
    }
    if !failures.is_empty() {
        return Err(format!("{} of 48 rows off: {}", failures.len(), failures.join("; ")));
    }
    within_time("48 rows within 1e-6".into(), elapsed, Duration::from_secs(10))
}

fn real_numeric() -> Outcome {
    let ring = real_ring();
    let i = section_integral(ring.section(), &QuadratureSpec::default()).map_err(|e| e.to_string())?.total;
    let k = stiffness_from_integral(&ring, i).map_err(|e| e.to_string())?;
    let k2 = stiffness_numeric(&ring, &QuadratureSpec::default()).map_err(|e| e.to_string())?;
    if (k - 5046.0).abs() <= 1.0 && k == k2 {
        Ok(format!("K = {k:.4}"))
    } else {
        Err(format!("K = {k} (numeric {k2}), expected 5046 +- 1"))
    }
}

fn engineering() -> Outcome {
    let k = stiffness_engineering(&real_ring()).value;
    if (k - 5089.0).abs() <= 1.0 {
        Ok(format!("K = {k:.4}"))
    } else {
        Err(format!("K = {k}, expected 5089 +- 1"))
    }
}

fn fit_recovery() -> Outcome {
    let table = run_doe(&DoeGrid::default(), &QuadratureSpec::default()).map_err(|e| e.to_string())?;
    let c = fit_surrogate(&table).map_err(|e| e.to_string())?.coefficient;
    if (0.355..=0.364).contains(&c) {
        Ok(format!("c = {c:.6}"))
    } else {
        Err(format!("c = {c}, expected within [0.355, 0.364]"))
    }
}

fn oracle_equivalence() -> Outcome {
    let q = QuadratureSpec::default();
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (name, ring) in [("circular", circular_ring()), ("wire-race", real_ring())] {
        for alpha in [1e-3, -1e-3, 0.1, -0.1] {
            let exact = torque_full(&ring, alpha, &q).map_err(|e| e.to_string())?;
            for n in [400, 800] {
                let t = oracle_torque(&ring, alpha, &GridSpec::square(n).unwrap()).map_err(|e| e.to_string())?;
                let rel = ((t - exact) / exact).abs();
                if rel >= 1e-3 {
                    return Err(format!("{name}, alpha {alpha}, grid {n}: rel {rel:.3e}"));
                }
                worst = worst.max(rel);
            }
        }
    }
    within_time(format!("worst rel {worst:.2e}"), start.elapsed(), Duration::from_secs(30))
}

fn limit_consistency() -> Outcome {
    let ring = circular_ring();
    let q = QuadratureSpec::default();
    let k8 = stiffness_circular(&ring).map_err(|e| e.to_string())?;
    let alpha_max = 0.1;
    let curve = torque_curve(&ring, alpha_max, 10, &q).map_err(|e| e.to_string())?;
    let k_origin = curve.k_origin;
    if k_origin != origin_stiffness(&ring, alpha_max, &q).map_err(|e| e.to_string())? {
        return Err("torque_curve and origin_stiffness disagree".into());
    }
    let rel = (k_origin - k8).abs() / k8;
    if rel >= 5e-3 {
        return Err(format!("K_origin = {k_origin}, closed form {k8}, rel {rel:.3e}"));
    }
    // secant deviation from the extrapolated limit shrinks at every halving
    let devs = (0..=8)
        .map(|k| {
            let a = alpha_max / f64::from(1u32 << k);
            torque_full(&ring, a, &q).map(|t| (t / a - k_origin).abs())
        })
        .collect::<wiretwist::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    if let Some(w) = devs.windows(2).find(|w| w[1] >= w[0]) {
        return Err(format!("deviation not monotone: {} then {}", w[0], w[1]));
    }
    Ok(format!("K_origin = {k_origin:.4}, rel to closed form {rel:.2e}, deviation monotone over 8 halvings"))
}

fn property_bundle() -> Outcome {
    let q = QuadratureSpec::default();
    let mut runner = TestRunner::new(Config { cases: 64, failure_persistence: None, ..Config::default() });
    let bite = (1.0f64..4.0, 0.02f64..0.98).prop_filter("single-branch bite", |&(a, x)| (a + x).powi(2) - a * a >= 1.0);

    // gamma-class invariance
    runner
        .run(&(bite.clone(), 0usize..4), |((a, x), k)| {
            let at = |g: f64| {
                section_integral(&SectionGeometry::wire_race_from_ratios(1.0, a, a + x, g).unwrap(), &q).unwrap().total
            };
            let base = at(FRAC_PI_4);
            let v = at((2 * k + 1) as f64 * FRAC_PI_4);
            prop_assert!((v - base).abs() <= 1e-9 * base, "({}, {}): {} vs {}", a, x, v, base);
            Ok(())
        })
        .map_err(|e| format!("gamma-class invariance: {e}"))?;

    // odd symmetry of the circular torque
    let ring = circular_ring();
    runner
        .run(&(1e-4f64..1.2), |alpha| {
            let tp = torque_full(&ring, alpha, &q).unwrap();
            let tn = torque_full(&ring, -alpha, &q).unwrap();
            prop_assert!((tp + tn).abs() <= 1e-9 * tp.abs());
            Ok(())
        })
        .map_err(|e| format!("odd symmetry: {e}"))?;

    // split integral against a 2D polar Riemann sum
    for (a, b, g) in [(3.0, 3.5, FRAC_PI_4), (2.0, 2.25, 1.3), (2.5, 3.25, -2.0)] {
        let s = SectionGeometry::wire_race_from_ratios(1.0, a, b, g).unwrap();
        let exact = section_integral(&s, &q).unwrap().total;
        let brute = riemann(a, b, g, 2000);
        let rel = (exact - brute).abs() / exact;
        if rel > 1e-4 {
            return Err(format!("split consistency ({a}, {b}, {g}): rel {rel:.3e}"));
        }
    }

    // scale laws
    runner
        .run(&(bite.clone(), 0.1f64..10.0, 2u32..6, -PI..PI), |((a, x), k, n, g)| {
            let s = SectionGeometry::wire_race_from_ratios(1.0, a, a + x, g).unwrap();
            let i1 = section_integral(&s, &q).unwrap().total;
            let ik = section_integral(&s.scaled(k).unwrap(), &q).unwrap().total;
            prop_assert!((ik / k.powi(4) - i1).abs() <= 1e-12 * i1);
            let nf = f64::from(n);
            let base = WireRing::new(R, Z, E, s).unwrap();
            let kb = stiffness_from_integral(&base, i1).unwrap();
            let kz = stiffness_from_integral(&WireRing::new(R, Z * n, E, s).unwrap(), i1).unwrap();
            let kr = stiffness_from_integral(&WireRing::new(R * nf, Z, E, s).unwrap(), i1).unwrap();
            let ke = stiffness_from_integral(&WireRing::new(R, Z, E * nf, s).unwrap(), i1).unwrap();
            prop_assert!((kz * nf - kb).abs() <= 1e-13 * kb);
            prop_assert!((kr * nf - kb).abs() <= 1e-13 * kb);
            prop_assert!((ke - kb * nf).abs() <= 1e-13 * ke);
            Ok(())
        })
        .map_err(|e| format!("scale laws: {e}"))?;

    // engineering formula continuity at x = 1
    let eng = |x: f64| {
        let s = SectionGeometry::wire_race_from_ratios(SECTION_R, 3.0, 3.0 + x, FRAC_PI_4).unwrap();
        stiffness_engineering(&WireRing::new(R, Z, E, s).unwrap()).value
    };
    let k1 = eng(1.0);
    let k_circ = stiffness_circular(&circular_ring()).unwrap();
    for eps in [1e-4, 1e-8] {
        let (lo, hi) = (eng(1.0 - eps), eng(1.0 + eps));
        if (lo - k1).abs() > 10.0 * eps * k1 || hi != k1 || (k1 - k_circ).abs() > 1e-9 * k_circ {
            return Err(format!("continuity at x = 1: {lo} {k1} {hi}"));
        }
    }
    Ok("gamma-class, odd symmetry, split vs Riemann, scale laws, continuity".into())
}

/// Midpoint polar Riemann sum of `rho^3 sin^2 theta` over the unit section
/// minus the bite disc.
fn riemann(rw: f64, l: f64, gamma: f64, n: usize) -> f64 {
    let (cx, cy) = (l * gamma.cos(), l * gamma.sin());
    let (dr, dt) = (1.0 / n as f64, TAU / n as f64);
    let mut total = 0.0;
    for j in 0..n {
        let (s, c) = ((j as f64 + 0.5) * dt).sin_cos();
        let mut row = 0.0;
        for i in 0..n {
            let rho = (i as f64 + 0.5) * dr;
            let (dx, dy) = (rho * c - cx, rho * s - cy);
            if dx * dx + dy * dy >= rw * rw {
                row += rho * rho * rho;
            }
        }
        total += row * s * s;
    }
    total * dr * dt
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("circular closed form", circular_closed_form),
        ("DoE table regression", table_regression),
        ("real-section numeric stiffness", real_numeric),
        ("engineering formula", engineering),
        ("fit recovery", fit_recovery),
        ("oracle equivalence", oracle_equivalence),
        ("limit consistency", limit_consistency),
        ("property suite", property_bundle),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
