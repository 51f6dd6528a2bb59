//! Section integral `I = ∬ rho^3 sin^2(theta) drho dtheta` and the twisting
//! stiffness constants of the small-angle, large-ring model `K = (beta E / R) I`.
//!
//! For a wire-race section the integral is split at the bite arc: the part
//! bounded by the outer circle has a closed form, the part bounded by the
//! bite reduces to a one-dimensional integral over `[theta1, theta2]`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{classify_section, near_root, theta_limits, BiteClass, SectionGeometry, SectionKind, WireRing};
use crate::quadrature::{integrate, Estimate, QuadratureSpec};

/// Slope of the engineering surrogate, `I/r^4 ≈ pi/4 - c (1 - x)`.
pub const ENGINEERING_COEFFICIENT: f64 = 0.36;

/// Lower end of the clearance range `x = L/r - r_w/r` covered by the fitted surrogate.
pub const VALIDATED_CLEARANCE_MIN: f64 = 0.25;
pub const VALIDATED_CLEARANCE_MAX: f64 = 1.0;

/// Rounding slack on the range check; ratios built from mm values are not exact.
const CLEARANCE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectionIntegral {
    /// `I = I1 + I2`, mm^4.
    pub total: f64,
    /// Part bounded by the outer circle, mm^4.
    pub i1: f64,
    /// Part bounded by the bite arc, mm^4.
    pub i2: f64,
    /// Quadrature error estimate on `i2`, mm^4.
    pub est_error: f64,
}

/// Full-disc value `pi r^4 / 4`.
pub fn full_disc_integral(r: f64) -> f64 {
    PI * r.powi(4) / 4.0
}

/// Closed-form integral over the region bounded by the outer circle,
/// `theta in [theta2, 2 pi + theta1]`, `rho in [0, r]`.
pub fn integral_i1(section: &SectionGeometry) -> Result<f64> {
    let r = section.r();
    if classify_section(section)? == BiteClass::FullCircle {
        return Ok(full_disc_integral(r));
    }
    let (t1, t2) = theta_limits(section)?;
    Ok(r.powi(4) / 4.0 * (PI + (t1 - t2) / 2.0 + ((2.0 * t2).sin() - (2.0 * t1).sin()) / 4.0))
}

/// Integral over the region bounded by the bite arc, `(1/4) ∫ sin^2(theta) rho(theta)^4 dtheta`.
pub fn integral_i2(section: &SectionGeometry, quad: &QuadratureSpec) -> Result<Estimate> {
    if classify_section(section)? == BiteClass::FullCircle {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }
    let (t1, t2) = theta_limits(section)?;
    let bite = section.bite().ok_or(Error::WrongSectionKind { expected: "wire-race" })?;
    let est = integrate(
        |t: f64| {
            let rho = near_root(bite, t);
            let s = t.sin();
            s * s * rho.powi(4)
        },
        t1,
        t2,
        quad,
    )?;
    Ok(Estimate { value: 0.25 * est.value, error: 0.25 * est.error })
}

pub fn section_integral(section: &SectionGeometry, quad: &QuadratureSpec) -> Result<SectionIntegral> {
    if section.kind() == SectionKind::Circular {
        let i1 = full_disc_integral(section.r());
        return Ok(SectionIntegral { total: i1, i1, i2: 0.0, est_error: 0.0 });
    }
    let i1 = integral_i1(section)?;
    let i2 = integral_i2(section, quad)?;
    Ok(SectionIntegral { total: i1 + i2.value, i1, i2: i2.value, est_error: i2.error })
}

/// `K = (beta E / R) I` in N·mm/rad.
pub fn stiffness_from_integral(ring: &WireRing, integral: f64) -> Result<f64> {
    if !(integral.is_finite() && integral >= 0.0) {
        return Err(Error::InvalidInput(format!("section integral must be finite and >= 0, got {integral}")));
    }
    Ok(ring.beta() * ring.modulus() / ring.ring_radius() * integral)
}

/// Numerically integrated stiffness of the ring's actual section.
pub fn stiffness_numeric(ring: &WireRing, quad: &QuadratureSpec) -> Result<f64> {
    let si = section_integral(ring.section(), quad)?;
    stiffness_from_integral(ring, si.total)
}

/// Closed form for a circular section, `K = (E r^4 / (Z R)) (pi^2 / 2)`.
pub fn stiffness_circular(ring: &WireRing) -> Result<f64> {
    if ring.section().kind() != SectionKind::Circular {
        return Err(Error::WrongSectionKind { expected: "circular" });
    }
    Ok(engineering_prefactor(ring) * PI * PI / 2.0)
}

fn engineering_prefactor(ring: &WireRing) -> f64 {
    ring.modulus() * ring.section().r().powi(4) / (ring.balls() as f64 * ring.ring_radius())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EngineeringStiffness {
    /// N·mm/rad.
    pub value: f64,
    /// `L/r - r_w/r`; `None` for a circular section.
    pub clearance: Option<f64>,
    /// Clearance lies outside the range the surrogate was fitted on.
    pub out_of_range: bool,
}

/// Engineering formula with the published slope coefficient.
pub fn stiffness_engineering(ring: &WireRing) -> EngineeringStiffness {
    stiffness_engineering_with(ring, ENGINEERING_COEFFICIENT)
}

/// `K = (E r^4 / (Z R)) (pi^2 / 2 - 2 pi c [1 - x])` with the bracket clamped at
/// zero for `x > 1`. A circular section is treated as `x >= 1`.
pub fn stiffness_engineering_with(ring: &WireRing, coefficient: f64) -> EngineeringStiffness {
    let clearance = ring.section().clearance_ratio();
    let bracket = clearance.map_or(0.0, |x| (1.0 - x).max(0.0));
    let out_of_range = clearance.is_some_and(|x| {
        !(VALIDATED_CLEARANCE_MIN - CLEARANCE_SLACK..=VALIDATED_CLEARANCE_MAX + CLEARANCE_SLACK).contains(&x)
    });
    let value = engineering_prefactor(ring) * (PI * PI / 2.0 - 2.0 * PI * coefficient * bracket);
    EngineeringStiffness { value, clearance, out_of_range }
}
