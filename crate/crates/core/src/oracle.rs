//! Brute-force torque from differential fibres on a polar grid.
//!
//! Independent of the closed forms, the bite-arc solver and the quadrature
//! code: each cell centre is tested for membership by its distance to the bite
//! centre, and the virtual work of the fibre through it is accumulated as
//! `dW = dK dL^2` with `dK = E dA / L`.

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::WireRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    pub n_rho: usize,
    pub n_theta: usize,
}

impl GridSpec {
    pub fn new(n_rho: usize, n_theta: usize) -> Result<Self> {
        if n_rho < 8 || n_theta < 8 {
            return Err(Error::InvalidInput(format!("grid must be at least 8x8, got {n_rho}x{n_theta}")));
        }
        Ok(Self { n_rho, n_theta })
    }

    pub fn square(n: usize) -> Result<Self> {
        Self::new(n, n)
    }
}

/// Midpoint-rule torque in N·mm for a nonzero twist `alpha`.
pub fn oracle_torque(ring: &WireRing, alpha: f64, grid: &GridSpec) -> Result<f64> {
    if alpha == 0.0 || !alpha.is_finite() {
        return Err(Error::InvalidInput(format!("oracle needs a finite nonzero twist, got {alpha}")));
    }
    let section = ring.section();
    let r = section.r();
    let beta = ring.beta();
    let big_r = ring.ring_radius();
    let e = ring.modulus();
    let d_rho = r / grid.n_rho as f64;
    let d_theta = TAU / grid.n_theta as f64;
    let bite = section.bite().map(|b| (b.offset * b.gamma.cos(), b.offset * b.gamma.sin(), b.radius));

    let rows: Vec<f64> = (0..grid.n_theta)
        .into_par_iter()
        .map(|j| {
            let theta = (j as f64 + 0.5) * d_theta;
            let (sin_t, cos_t) = theta.sin_cos();
            let cos_ta = (theta + alpha).cos();
            let cells: Vec<f64> = (0..grid.n_rho)
                .map(|i| {
                    let rho = (i as f64 + 0.5) * d_rho;
                    if let Some((cx, cy, rw)) = bite {
                        let dx = rho * cos_t - cx;
                        let dy = rho * sin_t - cy;
                        if dx * dx + dy * dy < rw * rw {
                            return 0.0;
                        }
                    }
                    let length = beta * (big_r + rho * cos_t);
                    let twisted = beta * (big_r + rho * cos_ta);
                    let dl = twisted - length;
                    let area = rho * d_rho * d_theta;
                    let stiffness = e * area / length;
                    stiffness * dl * dl
                })
                .collect();
            pairwise_sum(&cells)
        })
        .collect();
    Ok(pairwise_sum(&rows) / alpha)
}

/// Recursive pairwise summation; the reduction tree depends only on the length.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const LEAF: usize = 32;
    if values.len() <= LEAF {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SectionGeometry;
    use crate::stiffness::stiffness_circular;

    fn ring(r: f64) -> WireRing {
        WireRing::new(227.0, 82, 210_000.0, SectionGeometry::circular(r).unwrap()).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(7, 100).is_err());
        assert!(GridSpec::square(8).is_ok());
    }

    #[test]
    fn zero_twist_rejected() {
        let g = GridSpec::square(16).unwrap();
        assert!(oracle_torque(&ring(3.3), 0.0, &g).is_err());
    }

    #[test]
    fn reference_ring_near_closed_form() {
        let rg = ring(3.3);
        let k8 = stiffness_circular(&rg).unwrap();
        let t = oracle_torque(&rg, 1e-3, &GridSpec::square(200).unwrap()).unwrap();
        assert!((t / 1e-3 / k8 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn vanishing_section_gives_vanishing_torque() {
        let g = GridSpec::square(32).unwrap();
        let big = oracle_torque(&ring(1.0), 0.01, &g).unwrap();
        let tiny = oracle_torque(&ring(1e-3), 0.01, &g).unwrap();
        assert!(tiny > 0.0 && tiny < 1e-11 * big);
    }

    #[test]
    fn sign_follows_twist() {
        let g = GridSpec::square(32).unwrap();
        assert!(oracle_torque(&ring(3.3), 0.05, &g).unwrap() > 0.0);
        assert!(oracle_torque(&ring(3.3), -0.05, &g).unwrap() < 0.0);
    }

    #[test]
    fn pairwise_sum_matches_naive() {
        let v: Vec<f64> = (0..1000).map(|i| i as f64).collect();
        assert_eq!(pairwise_sum(&v), 499_500.0);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }
}
