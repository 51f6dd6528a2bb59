//! Finite-angle twisting torque from virtual work over the section.
//!
//! A fibre at `(rho, theta)` has length `beta (R + rho cos theta)` and
//! stretches by `beta rho (cos(theta + alpha) - cos theta)` when the section
//! twists by `alpha`. Summing `E dA dL^2 / L` over the section and dividing by
//! `alpha` gives the torque. The section keeps its undeformed orientation.

use std::f64::consts::{FRAC_PI_2, TAU};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{classify_section, near_root, theta_limits, BiteClass, WireRing};
use crate::quadrature::{gauss_legendre_rule, integrate, Estimate, QuadratureSpec};

/// Points of the fixed Gauss rule used for the radial integral.
const RADIAL_POINTS: usize = 32;

/// Halving exponents used for the origin-stiffness extrapolation.
pub const ORIGIN_HALVINGS: std::ops::RangeInclusive<u32> = 4..=8;

/// Length change of the fibre at `(rho, theta)` for a twist `alpha`, in mm.
///
/// Uses `cos(theta + alpha) - cos(theta) = -2 sin(theta + alpha/2) sin(alpha/2)`,
/// which keeps full relative precision for small `alpha`.
pub fn delta_length(rho: f64, theta: f64, alpha: f64, ring: &WireRing) -> f64 {
    -2.0 * ring.beta() * rho * (theta + 0.5 * alpha).sin() * (0.5 * alpha).sin()
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !alpha.is_finite() || alpha.abs() >= FRAC_PI_2 {
        return Err(Error::InvalidInput(format!("twist angle must satisfy |alpha| < pi/2, got {alpha}")));
    }
    Ok(())
}

/// Torque in N·mm for a twist `alpha` (rad). `T(0) = 0`.
pub fn torque_full(ring: &WireRing, alpha: f64, quad: &QuadratureSpec) -> Result<f64> {
    torque_estimate(ring, alpha, quad).map(|e| e.value)
}

/// Torque together with the propagated quadrature error bound.
pub fn torque_estimate(ring: &WireRing, alpha: f64, quad: &QuadratureSpec) -> Result<Estimate> {
    check_alpha(alpha)?;
    if alpha == 0.0 {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }
    let rule = gauss_legendre_rule(RADIAL_POINTS);
    let big_r = ring.ring_radius();
    let section = ring.section();
    let r = section.r();
    let half = 0.5 * alpha;

    // ∫_0^rho_max rho^3 / (R + rho cos theta) drho, times the angular weight
    let slice = |theta: f64, rho_max: f64| -> f64 {
        let c = theta.cos();
        let radial = rule.integrate(|p: f64| p * p * p / (big_r + p * c), 0.0, rho_max);
        let s = (theta + half).sin();
        s * s * radial
    };

    let est = match classify_section(section)? {
        BiteClass::FullCircle => integrate(|t| slice(t, r), 0.0, TAU, quad)?,
        BiteClass::PartialBite => {
            let (t1, t2) = theta_limits(section)?;
            let bite = *section.bite().expect("partial bite implies a bite");
            let inner = integrate(|t| slice(t, near_root(&bite, t)), t1, t2, quad)?;
            let outer = integrate(|t| slice(t, r), t2, t1 + TAU, quad)?;
            Estimate { value: inner.value + outer.value, error: inner.error + outer.error }
        }
    };
    let sh = half.sin();
    let factor = ring.beta() * ring.modulus() * 4.0 * sh * sh / alpha;
    Ok(Estimate { value: factor * est.value, error: factor.abs() * est.error })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TorqueCurve {
    /// `(alpha, T)` pairs in increasing `alpha`, including `(0, 0)`.
    pub samples: Vec<(f64, f64)>,
    /// Extrapolated `lim T(alpha)/alpha` as `alpha -> 0`, N·mm/rad.
    pub k_origin: f64,
    /// `T(alpha_max) / alpha_max`.
    pub k_secant_pos: f64,
    /// `T(-alpha_max) / (-alpha_max)`.
    pub k_secant_neg: f64,
}

/// Samples `2 n_steps + 1` uniformly spaced angles on `[-alpha_max, alpha_max]`.
pub fn torque_curve(ring: &WireRing, alpha_max: f64, n_steps: usize, quad: &QuadratureSpec) -> Result<TorqueCurve> {
    if alpha_max.is_nan() || alpha_max <= 0.0 {
        return Err(Error::InvalidInput(format!("alpha_max must be positive, got {alpha_max}")));
    }
    check_alpha(alpha_max)?;
    if n_steps < 2 {
        return Err(Error::InvalidInput(format!("n_steps must be >= 2, got {n_steps}")));
    }
    let n = n_steps as i64;
    let samples = (-n..=n)
        .into_par_iter()
        .map(|i| {
            let alpha = if i == n {
                alpha_max
            } else if i == -n {
                -alpha_max
            } else {
                alpha_max * i as f64 / n as f64
            };
            torque_full(ring, alpha, quad).map(|t| (alpha, t))
        })
        .collect::<Result<Vec<_>>>()?;
    let k_secant_pos = samples[samples.len() - 1].1 / alpha_max;
    let k_secant_neg = samples[0].1 / -alpha_max;
    let k_origin = origin_stiffness(ring, alpha_max, quad)?;
    Ok(TorqueCurve { samples, k_origin, k_secant_pos, k_secant_neg })
}

/// Richardson-extrapolated `T(alpha)/alpha` at `alpha -> 0` from the secants at
/// `alpha_max / 2^k`, `k = 4..=8`.
pub fn origin_stiffness(ring: &WireRing, alpha_max: f64, quad: &QuadratureSpec) -> Result<f64> {
    let secants = ORIGIN_HALVINGS
        .map(|k| {
            let a = alpha_max / f64::from(1u32 << k);
            torque_full(ring, a, quad).map(|t| t / a)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(richardson_limit(&secants))
}

/// Limit of a sequence sampled at steps `h, h/2, h/4, ...` assuming an error
/// expansion in integer powers `h, h^2, h^3, ...`.
pub fn richardson_limit(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "richardson_limit needs at least one value");
    let mut row = values.to_vec();
    for level in 1..values.len() {
        let factor = f64::from(1u32 << level) - 1.0;
        row = row.windows(2).map(|w| w[1] + (w[1] - w[0]) / factor).collect();
        debug_assert_eq!(row.len(), values.len() - level);
    }
    row[0]
}
