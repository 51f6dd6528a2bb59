//! Wire cross-section and ring geometry.
//!
//! A section is either a full circle of radius `r`, or a circle with an
//! off-centre "bite" removed: a circle of radius `r_w` whose centre sits at
//! distance `L` from the section centre, at polar angle `gamma`. Polar angles
//! are measured from the ring's outward radial direction, so a point at
//! `(rho, theta)` lies at distance `R + rho cos(theta)` from the bearing axis.
//!
//! All lengths are in mm and all angles in radians.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::sig12;

/// Slack allowed on the arccos argument at the tangency boundary.
pub const TANGENCY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SectionKind {
    Circular,
    WireRace,
}

/// Position and size of the circle removed from the wire section.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bite {
    /// Bite circle radius `r_w`.
    pub radius: f64,
    /// Distance `L` from the section centre to the bite centre.
    pub offset: f64,
    /// Angular position `gamma` of the bite centre.
    pub gamma: f64,
}

/// Topology of a section once the bite is placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BiteClass {
    /// The bite misses the section (or there is no bite): the full disc remains.
    FullCircle,
    /// The bite removes a lens bounded by a single arc `rho(theta)` on `[theta1, theta2]`.
    PartialBite,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SectionGeometry {
    r: f64,
    bite: Option<Bite>,
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidGeometry(format!("{name} must be a finite positive number, got {v}")))
    }
}

impl SectionGeometry {
    pub fn circular(r: f64) -> Result<Self> {
        check_positive("r", r)?;
        Ok(Self { r, bite: None })
    }

    /// Wire-race section from absolute dimensions. Only the field ranges are
    /// checked here; the topology is checked by [`classify_section`].
    pub fn wire_race(r: f64, r_w: f64, offset: f64, gamma: f64) -> Result<Self> {
        check_positive("r", r)?;
        check_positive("r_w", r_w)?;
        check_positive("L", offset)?;
        if !gamma.is_finite() {
            return Err(Error::InvalidGeometry(format!("gamma must be finite, got {gamma}")));
        }
        Ok(Self { r, bite: Some(Bite { radius: r_w, offset, gamma }) })
    }

    /// Wire-race section from the dimensionless ratios `r_w/r` and `L/r`.
    pub fn wire_race_from_ratios(r: f64, rw_ratio: f64, l_ratio: f64, gamma: f64) -> Result<Self> {
        check_positive("r", r)?;
        Self::wire_race(r, rw_ratio * r, l_ratio * r, gamma)
    }

    pub fn kind(&self) -> SectionKind {
        match self.bite {
            None => SectionKind::Circular,
            Some(_) => SectionKind::WireRace,
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn bite(&self) -> Option<&Bite> {
        self.bite.as_ref()
    }

    /// `(r_w/r, L/r)` for a wire-race section.
    pub fn ratios(&self) -> Option<(f64, f64)> {
        self.bite.map(|b| (b.radius / self.r, b.offset / self.r))
    }

    /// `L/r - r_w/r`, the parameter the engineering formula is linear in.
    pub fn clearance_ratio(&self) -> Option<f64> {
        self.ratios().map(|(a, b)| b - a)
    }

    /// Same section with the bite rotated to `gamma`.
    pub fn with_gamma(&self, gamma: f64) -> Self {
        let mut out = *self;
        if let Some(b) = out.bite.as_mut() {
            b.gamma = gamma;
        }
        out
    }

    /// Uniformly scaled copy (all lengths multiplied by `k`).
    pub fn scaled(&self, k: f64) -> Result<Self> {
        check_positive("scale factor", k)?;
        Ok(match self.bite {
            None => Self { r: self.r * k, bite: None },
            Some(b) => Self {
                r: self.r * k,
                bite: Some(Bite { radius: b.radius * k, offset: b.offset * k, gamma: b.gamma }),
            },
        })
    }
}

/// Classifies how the bite intersects the section.
///
/// Rejects the topologies for which the removed region is not a lens bounded
/// by the near branch of the bite circle: bite covering the centre, bite
/// strictly inside the section, and bites reaching past the tangent lines
/// from the section centre (`L^2 - r_w^2 < r^2`), where a ray would leave and
/// re-enter the material.
pub fn classify_section(section: &SectionGeometry) -> Result<BiteClass> {
    let Some((a, b)) = section.ratios() else {
        return Ok(BiteClass::FullCircle);
    };
    if b <= a {
        return Err(Error::InvalidGeometry(format!(
            "bite covers the section centre: L/r = {} <= r_w/r = {}",
            sig12(b),
            sig12(a)
        )));
    }
    if b - a >= 1.0 {
        return Ok(BiteClass::FullCircle);
    }
    if a + b <= 1.0 {
        return Err(Error::InvalidGeometry(format!(
            "bite lies strictly inside the section: L/r + r_w/r = {} <= 1",
            sig12(a + b)
        )));
    }
    if (b - a) * (b + a) < 1.0 {
        return Err(Error::InvalidGeometry(format!(
            "bite extends past the tangent from the section centre: (L/r)^2 - (r_w/r)^2 = {} < 1",
            sig12((b - a) * (b + a))
        )));
    }
    Ok(BiteClass::PartialBite)
}

/// Radius at which the ray at `theta` first meets the bite circle.
///
/// Smaller root of `r_w^2 = L^2 + rho^2 - 2 L rho cos(gamma - theta)`. Evaluated
/// through the product of roots, `rho = (L^2 - r_w^2) / (L cos + sqrt(...))`,
/// which avoids the cancellation in `L cos - sqrt(...)` when the denominator
/// is positive (always the case on the bite arc of a valid section).
pub fn rho_of_theta(section: &SectionGeometry, theta: f64) -> Result<f64> {
    let bite = section.bite.ok_or(Error::WrongSectionKind { expected: "wire-race" })?;
    let ls = bite.offset * (bite.gamma - theta).sin();
    let disc = (bite.radius - ls) * (bite.radius + ls);
    if disc < -TANGENCY_TOL * bite.radius * bite.radius {
        return Err(Error::Domain { theta });
    }
    Ok(near_root(&bite, theta))
}

/// Near root with the discriminant clamped at zero.
pub(crate) fn near_root(bite: &Bite, theta: f64) -> f64 {
    let (rw, l) = (bite.radius, bite.offset);
    let phi = bite.gamma - theta;
    let ls = l * phi.sin();
    let root = ((rw - ls) * (rw + ls)).max(0.0).sqrt();
    let lc = l * phi.cos();
    let denom = lc + root;
    if denom > 0.0 {
        (l - rw) * (l + rw) / denom
    } else {
        lc - root
    }
}

/// Angular limits `(theta1, theta2)` of the bite arc, where `rho(theta) = r`.
///
/// For a full-circle section with a bite (including the tangent case
/// `L/r - r_w/r = 1`) the arc collapses to `(gamma, gamma)`.
pub fn theta_limits(section: &SectionGeometry) -> Result<(f64, f64)> {
    let bite = section.bite.ok_or(Error::WrongSectionKind { expected: "wire-race" })?;
    let class = classify_section(section)?;
    let gamma = bite.gamma;
    if class == BiteClass::FullCircle {
        return Ok((gamma, gamma));
    }
    let half = half_arc(section.r, &bite)?;
    Ok((gamma - half, gamma + half))
}

fn half_arc(r: f64, bite: &Bite) -> Result<f64> {
    let a = bite.radius / r;
    let b = bite.offset / r;
    let mut u = (1.0 + (b - a) * (b + a)) / (2.0 * b);
    if u > 1.0 && u <= 1.0 + TANGENCY_TOL {
        u = 1.0;
    }
    if !(-1.0..=1.0).contains(&u) {
        return Err(Error::InvalidGeometry(format!("bite arc cosine out of range: {u}")));
    }
    Ok(u.acos())
}

/// Circumferential wire ring carrying one section.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WireRing {
    ring_radius: f64,
    balls: u32,
    modulus: f64,
    section: SectionGeometry,
}

impl WireRing {
    /// `ring_radius` R in mm, `balls` Z, `modulus` E in MPa.
    pub fn new(ring_radius: f64, balls: u32, modulus: f64, section: SectionGeometry) -> Result<Self> {
        check_positive("R", ring_radius)?;
        check_positive("E", modulus)?;
        if balls == 0 {
            return Err(Error::InvalidGeometry("Z must be at least 1".into()));
        }
        if ring_radius <= section.r {
            return Err(Error::InvalidGeometry(format!(
                "ring radius R = {ring_radius} must exceed section radius r = {}",
                section.r
            )));
        }
        classify_section(&section)?;
        Ok(Self { ring_radius, balls, modulus, section })
    }

    pub fn ring_radius(&self) -> f64 {
        self.ring_radius
    }

    pub fn balls(&self) -> u32 {
        self.balls
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    pub fn section(&self) -> &SectionGeometry {
        &self.section
    }

    /// Span angle of one rolling element, `2 pi / Z`.
    pub fn beta(&self) -> f64 {
        std::f64::consts::TAU / self.balls as f64
    }

    pub fn with_section(&self, section: SectionGeometry) -> Result<Self> {
        Self::new(self.ring_radius, self.balls, self.modulus, section)
    }
}
