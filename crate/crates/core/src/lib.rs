//! Twisting stiffness of the steel wire raceway in a wire-race ball bearing.
//!
//! The wire is a thin ring of radius `R` carrying `Z` balls; its cross-section
//! is a disc of radius `r`, optionally with a circular bite of radius `r_w`
//! centred at distance `L` and angle `gamma`. The crate provides:
//!
//! - [`geometry`]: section and ring types, bite classification and the bite arc.
//! - [`stiffness`]: the section integral `∬ rho^3 sin^2 theta` and the small-angle
//!   stiffness constants (closed form, numeric, engineering formula).
//! - [`torque`]: the finite-angle torque integral and torque–angle curves.
//! - [`oracle`]: a brute-force differential-element torque used for validation.
//! - [`doe`]: the full-factorial sweep of the section integral and the
//!   anchored least-squares surrogate.
//! - [`cli`]: the `wiretwist` command-line front-end.
//!
//! Units are mm, N, MPa and rad throughout; stiffness is in N·mm/rad.

pub mod cli;
pub mod doe;
pub mod error;
pub mod format;
pub mod geometry;
pub mod oracle;
pub mod quadrature;
pub mod stiffness;
pub mod torque;

pub use doe::{fit_surrogate, run_doe, surrogate_i, DoeGrid, DoeRow, DoeTable, SurrogateFit};
pub use error::{Error, Result};
pub use geometry::{classify_section, rho_of_theta, theta_limits, BiteClass, SectionGeometry, SectionKind, WireRing};
pub use oracle::{oracle_torque, GridSpec};
pub use quadrature::{QuadratureScheme, QuadratureSpec};
pub use stiffness::{
    integral_i1, integral_i2, section_integral, stiffness_circular, stiffness_engineering, stiffness_from_integral,
    stiffness_numeric, EngineeringStiffness, SectionIntegral,
};
pub use torque::{delta_length, torque_curve, torque_full, TorqueCurve};

/// Reference ring used as the default everywhere: `R = 227 mm`, `r = 3.3 mm`,
/// `Z = 82`, `E = 210000 MPa`, bite `r_w/r = 3`, `L/r = 3.5`, `gamma = 45 deg`.
pub mod reference {
    pub const RING_RADIUS: f64 = 227.0;
    pub const SECTION_RADIUS: f64 = 3.3;
    pub const BALLS: u32 = 82;
    pub const MODULUS: f64 = 210_000.0;
    pub const RW_RATIO: f64 = 3.0;
    pub const L_RATIO: f64 = 3.5;
    pub const GAMMA_DEG: f64 = 45.0;
}
