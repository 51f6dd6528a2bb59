//! C ABI over `wiretwist`.
//!
//! Every function returns a [`WtStatus`] and writes results through out
//! pointers. On failure the message is kept per thread and can be read with
//! [`wt_last_error_message`]. Handles are opaque and must be released with
//! their matching `*_free` function. Panics never cross the boundary; they are
//! reported as [`WtStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wiretwist::{
    fit_surrogate, oracle_torque, run_doe, section_integral, stiffness_circular, stiffness_engineering,
    stiffness_numeric, torque_curve, torque_full, DoeGrid, DoeTable, Error, GridSpec, QuadratureScheme, QuadratureSpec,
    SectionGeometry, TorqueCurve, WireRing,
};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WtStatus {
    Ok = 0,
    InvalidGeometry = 1,
    InvalidInput = 2,
    Domain = 3,
    WrongSectionKind = 4,
    QuadratureNotConverged = 5,
    DegenerateFit = 6,
    NullPointer = 7,
    OutOfBounds = 8,
    Panic = 9,
}

/// Integration backend selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WtScheme {
    AdaptiveSimpson = 0,
    GaussLegendre = 1,
}

/// Quadrature settings. Pass NULL wherever one is accepted to use the defaults.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WtQuadrature {
    /// A `WtScheme` value.
    pub scheme: u32,
    pub rel_tol: f64,
    /// Bisection depth for Simpson, panel budget for Gauss-Legendre.
    pub cap: u32,
}

/// One DoE row. `gamma` in radians, `i_over_r4` dimensionless.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct WtDoeRow {
    pub rw_ratio: f64,
    pub l_ratio: f64,
    pub gamma: f64,
    pub x: f64,
    pub i_over_r4: f64,
}

/// Ring geometry and material.
pub struct WtRing(WireRing);

/// Sampled torque curve with its stiffness summary.
pub struct WtTorqueCurve(TorqueCurve);

/// Table of section integrals over a DoE grid.
pub struct WtDoeTable(DoeTable);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> WtStatus {
    match err {
        Error::InvalidGeometry(_) => WtStatus::InvalidGeometry,
        Error::InvalidInput(_) => WtStatus::InvalidInput,
        Error::Domain { .. } => WtStatus::Domain,
        Error::WrongSectionKind { .. } => WtStatus::WrongSectionKind,
        Error::QuadratureNotConverged { .. } => WtStatus::QuadratureNotConverged,
        Error::DegenerateFit(_) => WtStatus::DegenerateFit,
    }
}

struct Failure(WtStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(WtStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, records any failure message and maps panics to `Panic`.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> WtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            WtStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("panic: {msg}"));
            WtStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(p: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

unsafe fn quadrature(q: *const WtQuadrature) -> Result<QuadratureSpec, Failure> {
    match q.as_ref() {
        None => Ok(QuadratureSpec::default()),
        Some(q) => {
            let scheme = match q.scheme {
                s if s == WtScheme::AdaptiveSimpson as u32 => QuadratureScheme::AdaptiveSimpson,
                s if s == WtScheme::GaussLegendre as u32 => QuadratureScheme::GaussLegendreComposite,
                s => return Err(Failure(WtStatus::InvalidInput, format!("unknown quadrature scheme {s}"))),
            };
            Ok(QuadratureSpec::new(scheme, q.rel_tol, q.cap)?)
        }
    }
}

unsafe fn slice<'a>(p: *const f64, len: usize, what: &str) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn store_ring(out: *mut *mut WtRing, build: impl FnOnce() -> wiretwist::Result<WireRing>) -> WtStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        *out = Box::into_raw(Box::new(WtRing(build()?)));
        Ok(())
    })
}

/// Ring with a full circular wire section of radius `r` (mm).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn wt_ring_new_circular(
    ring_radius: f64,
    balls: u32,
    modulus: f64,
    r: f64,
    out: *mut *mut WtRing,
) -> WtStatus {
    store_ring(out, || WireRing::new(ring_radius, balls, modulus, SectionGeometry::circular(r)?))
}

/// Ring with a wire-race section given in absolute dimensions (mm, rad).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn wt_ring_new_wire_race(
    ring_radius: f64,
    balls: u32,
    modulus: f64,
    r: f64,
    rw: f64,
    l: f64,
    gamma: f64,
    out: *mut *mut WtRing,
) -> WtStatus {
    store_ring(out, || WireRing::new(ring_radius, balls, modulus, SectionGeometry::wire_race(r, rw, l, gamma)?))
}

/// Ring with a wire-race section given by `r_w/r` and `L/r`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn wt_ring_new_wire_race_ratios(
    ring_radius: f64,
    balls: u32,
    modulus: f64,
    r: f64,
    rw_ratio: f64,
    l_ratio: f64,
    gamma: f64,
    out: *mut *mut WtRing,
) -> WtStatus {
    store_ring(out, || {
        WireRing::new(ring_radius, balls, modulus, SectionGeometry::wire_race_from_ratios(r, rw_ratio, l_ratio, gamma)?)
    })
}

/// # Safety
/// `ring` must be NULL or a handle from a `wt_ring_new_*` call not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wt_ring_free(ring: *mut WtRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Section integral in mm^4.
///
/// # Safety
/// `ring` must be a live handle, `quad` NULL or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_section_integral(
    ring: *const WtRing,
    quad: *const WtQuadrature,
    out: *mut f64,
) -> WtStatus {
    guard(|| {
        let ring = deref(ring, "ring")?;
        let v = section_integral(ring.0.section(), &quadrature(quad)?)?.total;
        write(out, v, "out")
    })
}

/// Stiffness from the numerically integrated section, N·mm/rad.
///
/// # Safety
/// `ring` must be a live handle, `quad` NULL or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_stiffness_numeric(
    ring: *const WtRing,
    quad: *const WtQuadrature,
    out: *mut f64,
) -> WtStatus {
    guard(|| {
        let ring = deref(ring, "ring")?;
        write(out, stiffness_numeric(&ring.0, &quadrature(quad)?)?, "out")
    })
}

/// Closed-form stiffness; circular sections only.
///
/// # Safety
/// `ring` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_stiffness_circular(ring: *const WtRing, out: *mut f64) -> WtStatus {
    guard(|| {
        let ring = deref(ring, "ring")?;
        write(out, stiffness_circular(&ring.0)?, "out")
    })
}

/// Engineering-formula stiffness. `out_of_range` may be NULL; when given it
/// receives 1 if the clearance lies outside the fitted range.
///
/// # Safety
/// `ring` must be a live handle, `out` writable, `out_of_range` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn wt_stiffness_engineering(
    ring: *const WtRing,
    out: *mut f64,
    out_of_range: *mut i32,
) -> WtStatus {
    guard(|| {
        let ring = deref(ring, "ring")?;
        let k = stiffness_engineering(&ring.0);
        write(out, k.value, "out")?;
        if !out_of_range.is_null() {
            *out_of_range = i32::from(k.out_of_range);
        }
        Ok(())
    })
}

/// Torque in N·mm at twist `alpha` (rad).
///
/// # Safety
/// `ring` must be a live handle, `quad` NULL or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_torque(
    ring: *const WtRing,
    alpha: f64,
    quad: *const WtQuadrature,
    out: *mut f64,
) -> WtStatus {
    guard(|| {
        let ring = deref(ring, "ring")?;
        write(out, torque_full(&ring.0, alpha, &quadrature(quad)?)?, "out")
    })
}

/// Brute-force grid torque in N·mm.
///
/// # Safety
/// `ring` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_oracle_torque(
    ring: *const WtRing,
    alpha: f64,
    n_rho: usize,
    n_theta: usize,
    out: *mut f64,
) -> WtStatus {
    guard(|| {
        let ring = deref(ring, "ring")?;
        write(out, oracle_torque(&ring.0, alpha, &GridSpec::new(n_rho, n_theta)?)?, "out")
    })
}

/// Samples `2 n_steps + 1` twist angles on `[-alpha_max, alpha_max]`.
///
/// # Safety
/// `ring` must be a live handle, `quad` NULL or valid, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_torque_curve_new(
    ring: *const WtRing,
    alpha_max: f64,
    n_steps: usize,
    quad: *const WtQuadrature,
    out: *mut *mut WtTorqueCurve,
) -> WtStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let ring = deref(ring, "ring")?;
        let curve = torque_curve(&ring.0, alpha_max, n_steps, &quadrature(quad)?)?;
        *out = Box::into_raw(Box::new(WtTorqueCurve(curve)));
        Ok(())
    })
}

/// # Safety
/// `curve` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wt_torque_curve_free(curve: *mut WtTorqueCurve) {
    if !curve.is_null() {
        drop(Box::from_raw(curve));
    }
}

/// Number of samples; 0 for NULL.
///
/// # Safety
/// `curve` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wt_torque_curve_len(curve: *const WtTorqueCurve) -> usize {
    curve.as_ref().map_or(0, |c| c.0.samples.len())
}

/// # Safety
/// `curve` must be a live handle; `alpha` and `torque` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_torque_curve_sample(
    curve: *const WtTorqueCurve,
    index: usize,
    alpha: *mut f64,
    torque: *mut f64,
) -> WtStatus {
    guard(|| {
        let curve = deref(curve, "curve")?;
        let &(a, t) = curve.0.samples.get(index).ok_or_else(|| {
            Failure(WtStatus::OutOfBounds, format!("sample {index} of {}", curve.0.samples.len()))
        })?;
        write(alpha, a, "alpha")?;
        write(torque, t, "torque")
    })
}

/// Origin stiffness and the two end secants, N·mm/rad. Any out pointer may be NULL.
///
/// # Safety
/// `curve` must be a live handle; each out pointer NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn wt_torque_curve_stiffness(
    curve: *const WtTorqueCurve,
    k_origin: *mut f64,
    k_secant_pos: *mut f64,
    k_secant_neg: *mut f64,
) -> WtStatus {
    guard(|| {
        let c = &deref(curve, "curve")?.0;
        for (p, v) in [(k_origin, c.k_origin), (k_secant_pos, c.k_secant_pos), (k_secant_neg, c.k_secant_neg)] {
            if !p.is_null() {
                *p = v;
            }
        }
        Ok(())
    })
}

/// Full-factorial DoE at `r = 1`. An empty list (length 0) selects the
/// default values for that factor. Gammas are in radians.
///
/// # Safety
/// Each array must hold at least its stated length; `quad` NULL or valid;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_doe_run(
    rw_ratios: *const f64,
    n_rw: usize,
    clearances: *const f64,
    n_clearances: usize,
    gammas: *const f64,
    n_gammas: usize,
    quad: *const WtQuadrature,
    out: *mut *mut WtDoeTable,
) -> WtStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let default = DoeGrid::default();
        let pick = |p, n, what, d: Vec<f64>| -> Result<Vec<f64>, Failure> {
            let s = slice(p, n, what)?;
            Ok(if s.is_empty() { d } else { s.to_vec() })
        };
        let grid = DoeGrid {
            rw_ratios: pick(rw_ratios, n_rw, "rw_ratios", default.rw_ratios.clone())?,
            clearances: pick(clearances, n_clearances, "clearances", default.clearances.clone())?,
            gammas: pick(gammas, n_gammas, "gammas", default.gammas.clone())?,
        };
        let table = run_doe(&grid, &quadrature(quad)?)?;
        *out = Box::into_raw(Box::new(WtDoeTable(table)));
        Ok(())
    })
}

/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wt_doe_free(table: *mut WtDoeTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of rows; 0 for NULL.
///
/// # Safety
/// `table` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn wt_doe_len(table: *const WtDoeTable) -> usize {
    table.as_ref().map_or(0, |t| t.0.rows.len())
}

/// # Safety
/// `table` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_doe_row(table: *const WtDoeTable, index: usize, out: *mut WtDoeRow) -> WtStatus {
    guard(|| {
        let t = deref(table, "table")?;
        let r = t
            .0
            .rows
            .get(index)
            .ok_or_else(|| Failure(WtStatus::OutOfBounds, format!("row {index} of {}", t.0.rows.len())))?;
        let row = WtDoeRow { rw_ratio: r.rw_ratio, l_ratio: r.l_ratio, gamma: r.gamma, x: r.x(), i_over_r4: r.i_over_r4 };
        write(out, row, "out")
    })
}

/// Anchored least-squares slope `c` and the largest absolute residual.
/// `max_residual` may be NULL.
///
/// # Safety
/// `table` must be a live handle, `coefficient` writable, `max_residual` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn wt_doe_fit(
    table: *const WtDoeTable,
    coefficient: *mut f64,
    max_residual: *mut f64,
) -> WtStatus {
    guard(|| {
        let fit = fit_surrogate(&deref(table, "table")?.0)?;
        write(coefficient, fit.coefficient, "coefficient")?;
        if !max_residual.is_null() {
            *max_residual = fit.max_abs_residual();
        }
        Ok(())
    })
}

/// CSV text of the table. Release the string with [`wt_string_free`].
///
/// # Safety
/// `table` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn wt_doe_to_csv(table: *const WtDoeTable, out: *mut *mut c_char) -> WtStatus {
    guard(|| {
        let csv = deref(table, "table")?.0.to_csv();
        let c = CString::new(csv).map_err(|e| Failure(WtStatus::InvalidInput, e.to_string()))?;
        write(out, c.into_raw(), "out")
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn wt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or "" after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn wt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn wt_status_str(status: WtStatus) -> *const c_char {
    let s: &'static CStr = match status {
        WtStatus::Ok => c"ok",
        WtStatus::InvalidGeometry => c"invalid geometry",
        WtStatus::InvalidInput => c"invalid input",
        WtStatus::Domain => c"outside the bite arc",
        WtStatus::WrongSectionKind => c"wrong section kind",
        WtStatus::QuadratureNotConverged => c"quadrature not converged",
        WtStatus::DegenerateFit => c"degenerate fit",
        WtStatus::NullPointer => c"null pointer",
        WtStatus::OutOfBounds => c"index out of bounds",
        WtStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn wt_version() -> *const c_char {
    const VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version contains a NUL byte"),
    };
    VERSION.as_ptr()
}
