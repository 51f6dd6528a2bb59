//! One-dimensional quadrature: adaptive Simpson and composite Gauss–Legendre.

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Initial uniform panels for adaptive Simpson. A single three-point
/// start can report zero error on periodic integrands such as `sin^2`
/// sampled at `0, pi, 2 pi`.
const SIMPSON_START_PANELS: usize = 16;

/// Points per panel of the composite Gauss–Legendre backend.
const COMPOSITE_GL_POINTS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuadratureScheme {
    AdaptiveSimpson,
    GaussLegendreComposite,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureSpec {
    scheme: QuadratureScheme,
    rel_tol: f64,
    /// Maximum bisection depth (Simpson) or maximum panel count (Gauss–Legendre).
    cap: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { scheme: QuadratureScheme::AdaptiveSimpson, rel_tol: 1e-10, cap: 40 }
    }
}

impl QuadratureSpec {
    pub fn new(scheme: QuadratureScheme, rel_tol: f64, cap: u32) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1e-2) {
            return Err(Error::InvalidInput(format!("rel_tol must lie in (0, 1e-2), got {rel_tol}")));
        }
        if cap < 4 {
            return Err(Error::InvalidInput(format!("refinement cap must be >= 4, got {cap}")));
        }
        Ok(Self { scheme, rel_tol, cap })
    }

    pub fn gauss_legendre() -> Self {
        Self { scheme: QuadratureScheme::GaussLegendreComposite, rel_tol: 1e-10, cap: 512 }
    }

    pub fn scheme(&self) -> QuadratureScheme {
        self.scheme
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Integrates `f` over `[a, b]` under the given policy.
///
/// An empty or reversed interval integrates to zero.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    if b <= a {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }
    match spec.scheme {
        QuadratureScheme::AdaptiveSimpson => adaptive_simpson(&f, a, b, spec.rel_tol, spec.cap),
        QuadratureScheme::GaussLegendreComposite => composite_gauss(&f, a, b, spec.rel_tol, spec.cap),
    }
}

struct SimpsonState {
    value: f64,
    error: f64,
    converged: bool,
}

fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64, max_depth: u32) -> Result<Estimate> {
    let n = SIMPSON_START_PANELS;
    let h = (b - a) / n as f64;
    let mut panels = Vec::with_capacity(n);
    for i in 0..n {
        let x0 = a + h * i as f64;
        let x2 = if i + 1 == n { b } else { a + h * (i + 1) as f64 };
        let x1 = 0.5 * (x0 + x2);
        let (f0, f1, f2) = (f(x0), f(x1), f(x2));
        let s = (x2 - x0) / 6.0 * (f0 + 4.0 * f1 + f2);
        panels.push((x0, x2, f0, f1, f2, s));
    }
    let scale: f64 = panels.iter().map(|p| p.5.abs()).sum();
    if scale == 0.0 {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }
    let tol = rel_tol * scale;
    let mut st = SimpsonState { value: 0.0, error: 0.0, converged: true };
    for &(x0, x2, f0, f1, f2, s) in &panels {
        let ptol = tol * (x2 - x0) / (b - a);
        simpson_step(f, x0, x2, f0, f1, f2, s, ptol, max_depth, &mut st);
    }
    if st.converged {
        Ok(Estimate { value: st.value, error: st.error })
    } else {
        Err(Error::QuadratureNotConverged { estimate: st.value, error: st.error })
    }
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    st: &mut SimpsonState,
) {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || depth == 0 || m <= a || m >= b {
        if delta.abs() > 15.0 * tol {
            st.converged = false;
        }
        st.value += left + right + delta / 15.0;
        st.error += delta.abs() / 15.0;
        return;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, st);
    simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, st);
}

/// Composite Gauss–Legendre with per-panel bisection: a panel is accepted when
/// the rule on the panel agrees with the rule on its two halves. Panels are
/// refined until the global tolerance is met or the panel count hits `max_panels`.
fn composite_gauss<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, rel_tol: f64, max_panels: u32) -> Result<Estimate> {
    let rule = gauss_legendre_rule(COMPOSITE_GL_POINTS);
    let max_panels = max_panels as usize;
    // (x0, x1, coarse, refined)
    let eval = |x0: f64, x1: f64| {
        let m = 0.5 * (x0 + x1);
        (x0, x1, rule.integrate(f, x0, x1), rule.integrate(f, x0, m) + rule.integrate(f, m, x1))
    };
    let n0 = 4usize;
    let h = (b - a) / n0 as f64;
    let mut panels: Vec<(f64, f64, f64, f64)> = (0..n0)
        .map(|i| eval(a + h * i as f64, if i + 1 == n0 { b } else { a + h * (i + 1) as f64 }))
        .collect();
    loop {
        let value: f64 = panels.iter().map(|p| p.3).sum();
        let error: f64 = panels.iter().map(|p| (p.3 - p.2).abs()).sum();
        let tol = rel_tol * panels.iter().map(|p| p.3.abs()).sum::<f64>();
        if error <= tol {
            return Ok(Estimate { value, error });
        }
        let split: Vec<bool> =
            panels.iter().map(|p| (p.3 - p.2).abs() > tol * (p.1 - p.0) / (b - a)).collect();
        let n_split = split.iter().filter(|&&s| s).count();
        if n_split == 0 || panels.len() + n_split > max_panels {
            return Err(Error::QuadratureNotConverged { estimate: value, error });
        }
        let mut next = Vec::with_capacity(panels.len() + n_split);
        for (p, &s) in panels.iter().zip(&split) {
            if s {
                let m = 0.5 * (p.0 + p.1);
                next.push(eval(p.0, m));
                next.push(eval(m, p.1));
            } else {
                next.push(*p);
            }
        }
        panels = next;
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// Computes an `n`-point rule by Newton iteration on `P_n`.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "Gauss rule needs at least one point");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Single-panel rule mapped to `[a, b]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }

}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Shared cached rules for the point counts used in this crate.
pub fn gauss_legendre_rule(n: usize) -> &'static GaussRule {
    static GL10: OnceLock<GaussRule> = OnceLock::new();
    static GL32: OnceLock<GaussRule> = OnceLock::new();
    match n {
        10 => GL10.get_or_init(|| GaussRule::new(10)),
        32 => GL32.get_or_init(|| GaussRule::new(32)),
        _ => panic!("no cached Gauss rule with {n} points"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(QuadratureScheme::AdaptiveSimpson, 0.0, 40).is_err());
        assert!(QuadratureSpec::new(QuadratureScheme::AdaptiveSimpson, 0.1, 40).is_err());
        assert!(QuadratureSpec::new(QuadratureScheme::AdaptiveSimpson, 1e-8, 3).is_err());
        assert!(QuadratureSpec::new(QuadratureScheme::GaussLegendreComposite, 1e-8, 4).is_ok());
    }

    #[test]
    fn gauss_rule_is_exact_for_polynomials() {
        let rule = GaussRule::new(32);
        let wsum: f64 = rule.weights.iter().sum();
        assert!((wsum - 2.0).abs() < 1e-14);
        // degree 63 is the exactness limit; check x^62
        let v = rule.integrate(|x| x.powi(62), -1.0, 1.0);
        assert!((v - 2.0 / 63.0).abs() < 1e-14, "{v}");
        let rule = GaussRule::new(5);
        assert!((rule.integrate(|x| x.powi(8), 0.0, 1.0) - 1.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn periodic_integrand_is_not_missed() {
        for spec in [QuadratureSpec::default(), QuadratureSpec::gauss_legendre()] {
            let e = integrate(|t: f64| t.sin().powi(2), 0.0, TAU, &spec).unwrap();
            assert!((e.value - PI).abs() < 1e-10, "{spec:?}: {}", e.value);
        }
    }

    #[test]
    fn both_schemes_agree_on_smooth_integrand() {
        let f = |x: f64| (x * 3.0).cos() * (-x).exp();
        let exact = {
            // antiderivative of e^{-x} cos 3x is e^{-x}(3 sin 3x - cos 3x)/10
            let g = |x: f64| (-x).exp() * (3.0 * (3.0 * x).sin() - (3.0 * x).cos()) / 10.0;
            g(2.0) - g(0.0)
        };
        let s = integrate(f, 0.0, 2.0, &QuadratureSpec::default()).unwrap();
        let g = integrate(f, 0.0, 2.0, &QuadratureSpec::gauss_legendre()).unwrap();
        assert!((s.value - exact).abs() < 1e-10 * exact.abs());
        assert!((g.value - exact).abs() < 1e-10 * exact.abs());
    }

    #[test]
    fn empty_interval_is_zero() {
        let e = integrate(|x| x, 1.0, 1.0, &QuadratureSpec::default()).unwrap();
        assert_eq!(e.value, 0.0);
    }

    #[test]
    fn unreachable_tolerance_reports_best_estimate() {
        let spec = QuadratureSpec::new(QuadratureScheme::AdaptiveSimpson, 1e-9, 4).unwrap();
        // sqrt has an infinite slope at 0; depth 4 cannot reach 1e-9
        let err = integrate(|x: f64| x.sqrt(), 0.0, 1.0, &spec).unwrap_err();
        match err {
            Error::QuadratureNotConverged { estimate, error } => {
                assert!((estimate - 2.0 / 3.0).abs() < 1e-3);
                assert!(error > 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
        let spec = QuadratureSpec::new(QuadratureScheme::GaussLegendreComposite, 1e-12, 8).unwrap();
        assert!(integrate(|x: f64| x.sqrt(), 0.0, 1.0, &spec).is_err());
    }
}
