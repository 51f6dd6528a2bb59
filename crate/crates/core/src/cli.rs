//! `wiretwist` command-line front-end.
//!
//! Every command runs with zero flags on the reference ring (circular
//! section unless bite dimensions are given). Output goes to stdout or to
//! `--output`, as text, JSON or CSV. Exit codes: 0 ok, 2 invalid input,
//! 3 numeric failure, 4 oracle check failed.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::doe::{fit_surrogate, run_doe, DoeGrid, DoeTable};
use crate::error::Error;
use crate::format::{round12, sig12};
use crate::geometry::{classify_section, theta_limits, BiteClass, SectionGeometry, SectionKind, WireRing};
use crate::oracle::{oracle_torque, GridSpec};
use crate::quadrature::{QuadratureScheme, QuadratureSpec};
use crate::reference;
use crate::stiffness::{
    full_disc_integral, section_integral, stiffness_engineering, stiffness_from_integral, ENGINEERING_COEFFICIENT,
};
use crate::torque::{torque_curve, torque_full};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "wiretwist", version, about = "Twisting stiffness of wire-race bearing raceways")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form, numeric and engineering-formula stiffness side by side.
    Stiffness(StiffnessArgs),
    /// Section integral I = I1 + I2.
    Integral(StiffnessArgs),
    /// Full-factorial sweep of I/r^4 (CSV by default).
    Doe(DoeArgs),
    /// Anchored least-squares slope of the engineering surrogate.
    Fit(FitArgs),
    /// Torque-angle curve of the finite-angle model.
    TorqueCurve(TorqueArgs),
    /// Compare the brute-force oracle against the quadrature torque.
    OracleCheck(OracleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RingArgs {
    /// Wire ring radius R, mm.
    #[arg(long = "R", default_value_t = reference::RING_RADIUS)]
    pub ring_radius: f64,
    /// Section radius r, mm.
    #[arg(long = "r", default_value_t = reference::SECTION_RADIUS)]
    pub section_radius: f64,
    /// Number of balls Z.
    #[arg(long = "Z", default_value_t = reference::BALLS)]
    pub balls: u32,
    /// Young's modulus E, MPa.
    #[arg(long = "E", default_value_t = reference::MODULUS)]
    pub modulus: f64,
    /// Bite radius r_w, mm.
    #[arg(long = "rw")]
    pub rw: Option<f64>,
    /// Bite centre offset L, mm.
    #[arg(long = "L")]
    pub offset: Option<f64>,
    /// Bite radius as r_w/r.
    #[arg(long = "rw-ratio")]
    pub rw_ratio: Option<f64>,
    /// Bite offset as L/r.
    #[arg(long = "L-ratio")]
    pub l_ratio: Option<f64>,
    /// Bite angular position, degrees [default: 45].
    #[arg(long = "gamma-deg", conflicts_with = "gamma_rad", allow_negative_numbers = true)]
    pub gamma_deg: Option<f64>,
    /// Bite angular position, radians.
    #[arg(long = "gamma-rad", allow_negative_numbers = true)]
    pub gamma_rad: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Simpson,
    Gauss,
}

#[derive(Debug, Clone, Args)]
pub struct QuadArgs {
    /// Quadrature backend.
    #[arg(long, value_enum, default_value_t = SchemeArg::Simpson)]
    pub scheme: SchemeArg,
    /// Relative tolerance.
    #[arg(long = "rel-tol", default_value_t = 1e-10)]
    pub rel_tol: f64,
    /// Refinement cap: bisection depth (simpson, default 40) or panel count (gauss, default 512).
    #[arg(long)]
    pub cap: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct StiffnessArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DoeArgs {
    /// Values of r_w/r.
    #[arg(long = "rw-ratios", value_delimiter = ',', default_values_t = [2.0, 2.5, 3.0])]
    pub rw_ratios: Vec<f64>,
    /// Values of x = L/r - r_w/r.
    #[arg(long, value_delimiter = ',', default_values_t = [0.25, 0.5, 0.75, 1.0])]
    pub clearances: Vec<f64>,
    /// Bite positions, degrees.
    #[arg(long = "gammas-deg", value_delimiter = ',', default_values_t = [45.0], allow_negative_numbers = true)]
    pub gammas_deg: Vec<f64>,
    #[command(flatten)]
    pub quad: QuadArgs,
    /// Output format [default: csv].
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FitArgs {
    /// DoE CSV to fit; the default sweep is run when omitted.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TorqueArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    /// Largest twist angle, rad.
    #[arg(long = "alpha-max", default_value_t = 0.1)]
    pub alpha_max: f64,
    /// Steps on each side of zero.
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    /// Twist angle, rad.
    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Grid cells per polar direction.
    #[arg(long, default_value_t = 400)]
    pub grid: usize,
    /// Largest accepted relative deviation.
    #[arg(long, default_value_t = 1e-3)]
    pub threshold: f64,
    #[command(flatten)]
    pub quad: QuadArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self { code: e.exit_code(), message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self { code: EXIT_INVALID, message: format!("I/O error: {e}") }
    }
}

/// Rendered output of one command.
struct Report {
    text: String,
    json: Value,
    csv: String,
    /// Extra lines for stderr when the main output is CSV.
    csv_note: Option<String>,
    exit: i32,
}

impl RingArgs {
    fn gamma(&self) -> f64 {
        match (self.gamma_rad, self.gamma_deg) {
            (Some(rad), _) => rad,
            (None, Some(deg)) => deg.to_radians(),
            (None, None) => reference::GAMMA_DEG.to_radians(),
        }
    }

    fn section(&self, warn: &mut dyn Write) -> Result<SectionGeometry, CliError> {
        let r = self.section_radius;
        let ratios = match (self.rw_ratio, self.l_ratio) {
            (Some(a), Some(b)) => Some((a, b)),
            (None, None) => None,
            _ => return Err(invalid("--rw-ratio and --L-ratio must be given together")),
        };
        let absolute = match (self.rw, self.offset) {
            (Some(a), Some(b)) => Some((a, b)),
            (None, None) => None,
            _ => return Err(invalid("--rw and --L must be given together")),
        };
        let section = match (ratios, absolute) {
            (Some((a, b)), Some(_)) => {
                writeln!(warn, "warning: both ratio and absolute bite dimensions given; using ratios")?;
                SectionGeometry::wire_race_from_ratios(r, a, b, self.gamma())?
            }
            (Some((a, b)), None) => SectionGeometry::wire_race_from_ratios(r, a, b, self.gamma())?,
            (None, Some((rw, l))) => SectionGeometry::wire_race(r, rw, l, self.gamma())?,
            (None, None) => SectionGeometry::circular(r)?,
        };
        Ok(section)
    }

    fn ring(&self, warn: &mut dyn Write) -> Result<WireRing, CliError> {
        let section = self.section(warn)?;
        Ok(WireRing::new(self.ring_radius, self.balls, self.modulus, section)?)
    }
}

impl QuadArgs {
    fn spec(&self) -> Result<QuadratureSpec, CliError> {
        let (scheme, default_cap) = match self.scheme {
            SchemeArg::Simpson => (QuadratureScheme::AdaptiveSimpson, 40),
            SchemeArg::Gauss => (QuadratureScheme::GaussLegendreComposite, 512),
        };
        Ok(QuadratureSpec::new(scheme, self.rel_tol, self.cap.unwrap_or(default_cap))?)
    }
}

fn invalid(msg: &str) -> CliError {
    CliError { code: EXIT_INVALID, message: msg.to_owned() }
}

fn ring_json(ring: &WireRing) -> Value {
    let s = ring.section();
    let mut v = json!({
        "R_mm": round12(ring.ring_radius()),
        "r_mm": round12(s.r()),
        "Z": ring.balls(),
        "E_MPa": round12(ring.modulus()),
        "section": match s.kind() { SectionKind::Circular => "circular", SectionKind::WireRace => "wire-race" },
    });
    if let (Some(b), Some((a, l))) = (s.bite(), s.ratios()) {
        v["rw_mm"] = json!(round12(b.radius));
        v["L_mm"] = json!(round12(b.offset));
        v["rw_ratio"] = json!(round12(a));
        v["L_ratio"] = json!(round12(l));
        v["gamma_rad"] = json!(round12(b.gamma));
    }
    v
}

fn ring_text(ring: &WireRing) -> String {
    let s = ring.section();
    let mut t = format!(
        "ring: R = {} mm, Z = {}, E = {} MPa\nsection: r = {} mm",
        sig12(ring.ring_radius()),
        ring.balls(),
        sig12(ring.modulus()),
        sig12(s.r())
    );
    match (s.bite(), s.ratios()) {
        (Some(b), Some((a, l))) => {
            let _ = write!(
                t,
                ", bite r_w/r = {}, L/r = {}, gamma = {} deg",
                sig12(a),
                sig12(l),
                sig12(b.gamma.to_degrees())
            );
        }
        _ => t.push_str(" (circular)"),
    }
    t
}

fn quad_json(q: &QuadratureSpec) -> Value {
    json!({
        "scheme": match q.scheme() {
            QuadratureScheme::AdaptiveSimpson => "adaptive-simpson",
            QuadratureScheme::GaussLegendreComposite => "gauss-legendre-composite",
        },
        "rel_tol": q.rel_tol(),
        "cap": q.cap(),
    })
}

fn envelope(inputs: Value, results: Value, quad: &QuadratureSpec) -> Value {
    json!({
        "inputs": inputs,
        "results": results,
        "meta": { "version": env!("CARGO_PKG_VERSION"), "quadrature": quad_json(quad) },
    })
}

fn csv_table(header: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(|v| sig12(*v)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

fn cmd_stiffness(args: &StiffnessArgs, warn: &mut dyn Write) -> Result<Report, CliError> {
    let quad = args.quad.spec()?;
    let ring = args.ring.ring(warn)?;
    let closed = stiffness_from_integral(&ring, full_disc_integral(ring.section().r()))?;
    let si = section_integral(ring.section(), &quad)?;
    let numeric = stiffness_from_integral(&ring, si.total)?;
    let eng = stiffness_engineering(&ring);
    let rel_num = (numeric - closed) / closed;
    let rel_eng = (eng.value - numeric) / numeric;
    if eng.out_of_range {
        writeln!(warn, "warning: L/r - r_w/r outside [0.25, 1]; engineering formula is extrapolated")?;
    }

    let mut text = ring_text(&ring);
    let _ = write!(
        text,
        "\nK closed form (full circular section) = {} N*mm/rad\n\
         K numeric (section integral)          = {} N*mm/rad\n\
         K engineering formula                 = {} N*mm/rad\n\
         numeric vs closed form     = {}\n\
         engineering vs numeric     = {}\n",
        sig12(closed),
        sig12(numeric),
        sig12(eng.value),
        sig12(rel_num),
        sig12(rel_eng)
    );
    let results = json!({
        "units": "N*mm/rad",
        "k_closed_form": round12(closed),
        "k_numeric": round12(numeric),
        "k_engineering": round12(eng.value),
        "rel_numeric_vs_closed_form": round12(rel_num),
        "rel_engineering_vs_numeric": round12(rel_eng),
        "engineering_out_of_range": eng.out_of_range,
    });
    let csv = csv_table(
        &["k_closed_form", "k_numeric", "k_engineering", "rel_numeric_vs_closed_form", "rel_engineering_vs_numeric"],
        &[vec![closed, numeric, eng.value, rel_num, rel_eng]],
    );
    Ok(Report { text, json: envelope(ring_json(&ring), results, &quad), csv, csv_note: None, exit: EXIT_OK })
}

fn cmd_integral(args: &StiffnessArgs, warn: &mut dyn Write) -> Result<Report, CliError> {
    let quad = args.quad.spec()?;
    let ring = args.ring.ring(warn)?;
    let section = ring.section();
    let si = section_integral(section, &quad)?;
    let r4 = section.r().powi(4);
    let class = classify_section(section)?;
    let limits = match (section.kind(), class) {
        (SectionKind::WireRace, BiteClass::PartialBite) => Some(theta_limits(section)?),
        _ => None,
    };
    let class_name = match class {
        BiteClass::FullCircle => "full-circle",
        BiteClass::PartialBite => "partial-bite",
    };
    let mut text = ring_text(&ring);
    let _ = write!(
        text,
        "\nclassification: {class_name}\nI  = {} mm^4\nI1 = {} mm^4\nI2 = {} mm^4\nI/r^4 = {}\nquadrature error estimate = {} mm^4\n",
        sig12(si.total),
        sig12(si.i1),
        sig12(si.i2),
        sig12(si.total / r4),
        sig12(si.est_error)
    );
    let mut results = json!({
        "classification": class_name,
        "I_mm4": round12(si.total),
        "I1_mm4": round12(si.i1),
        "I2_mm4": round12(si.i2),
        "I_over_r4": round12(si.total / r4),
        "est_error_mm4": round12(si.est_error),
    });
    if let Some((t1, t2)) = limits {
        let _ = writeln!(text, "theta1 = {} rad, theta2 = {} rad", sig12(t1), sig12(t2));
        results["theta1_rad"] = json!(round12(t1));
        results["theta2_rad"] = json!(round12(t2));
    }
    let csv = csv_table(
        &["I_mm4", "I1_mm4", "I2_mm4", "I_over_r4", "est_error_mm4"],
        &[vec![si.total, si.i1, si.i2, si.total / r4, si.est_error]],
    );
    Ok(Report { text, json: envelope(ring_json(&ring), results, &quad), csv, csv_note: None, exit: EXIT_OK })
}

fn doe_report(args: &DoeArgs) -> Result<(Report, Format), CliError> {
    let quad = args.quad.spec()?;
    let grid = DoeGrid {
        rw_ratios: args.rw_ratios.clone(),
        clearances: args.clearances.clone(),
        gammas: args.gammas_deg.iter().map(|d| d.to_radians()).collect(),
    };
    let table = run_doe(&grid, &quad)?;
    let csv = table.to_csv();
    let inputs = json!({
        "rw_ratios": grid.rw_ratios.iter().map(|v| round12(*v)).collect::<Vec<_>>(),
        "clearances": grid.clearances.iter().map(|v| round12(*v)).collect::<Vec<_>>(),
        "gammas_rad": grid.gammas.iter().map(|v| round12(*v)).collect::<Vec<_>>(),
    });
    let json = envelope(inputs, json!({ "rows": table.to_json() }), &quad);
    let report = Report { text: csv.clone(), json, csv, csv_note: None, exit: EXIT_OK };
    Ok((report, args.format.unwrap_or(Format::Csv)))
}

fn cmd_fit(args: &FitArgs) -> Result<Report, CliError> {
    let quad = args.quad.spec()?;
    let (table, source) = match &args.input {
        Some(path) => {
            let file = std::fs::File::open(path)
                .map_err(|e| invalid(&format!("cannot open {}: {e}", path.display())))?;
            (DoeTable::from_csv(file)?, path.display().to_string())
        }
        None => (run_doe(&DoeGrid::default(), &quad)?, "default sweep".to_owned()),
    };
    let fit = fit_surrogate(&table)?;
    let mut text = format!(
        "rows: {} ({source})\nc = {} (reference coefficient {})\nmax |residual| = {}\n{}\nresiduals:\n",
        table.rows.len(),
        sig12(fit.coefficient),
        ENGINEERING_COEFFICIENT,
        sig12(fit.max_abs_residual()),
        fit.stiffness_formula()
    );
    let mut rows = Vec::with_capacity(table.rows.len());
    for (row, res) in table.rows.iter().zip(&fit.residuals) {
        let _ = writeln!(
            text,
            "  r_w/r = {:<6} x = {:<6} I/r^4 = {:<16} residual = {}",
            sig12(row.rw_ratio),
            sig12(row.x()),
            sig12(row.i_over_r4),
            sig12(*res)
        );
        rows.push(vec![row.rw_ratio, row.l_ratio, row.gamma, row.x(), row.i_over_r4, *res]);
    }
    let results = json!({
        "c": round12(fit.coefficient),
        "reference_c": ENGINEERING_COEFFICIENT,
        "max_abs_residual": round12(fit.max_abs_residual()),
        "formula": fit.stiffness_formula(),
        "residuals": fit.residuals.iter().map(|v| round12(*v)).collect::<Vec<_>>(),
    });
    let csv = csv_table(&["rw_ratio", "L_ratio", "gamma_rad", "x", "I_over_r4", "residual"], &rows);
    let note = format!("c = {}\n{}\n", sig12(fit.coefficient), fit.stiffness_formula());
    Ok(Report {
        text,
        json: envelope(json!({ "source": source, "rows": table.rows.len() }), results, &quad),
        csv,
        csv_note: Some(note),
        exit: EXIT_OK,
    })
}

fn cmd_torque_curve(args: &TorqueArgs, warn: &mut dyn Write) -> Result<Report, CliError> {
    let quad = args.quad.spec()?;
    let ring = args.ring.ring(warn)?;
    let curve = torque_curve(&ring, args.alpha_max, args.steps, &quad)?;
    let summary = format!(
        "K_origin = {} N*mm/rad\nK_secant(+{a}) = {} N*mm/rad\nK_secant(-{a}) = {} N*mm/rad\n",
        sig12(curve.k_origin),
        sig12(curve.k_secant_pos),
        sig12(curve.k_secant_neg),
        a = sig12(args.alpha_max)
    );
    let rows: Vec<Vec<f64>> = curve.samples.iter().map(|&(a, t)| vec![a, t]).collect();
    let csv = csv_table(&["alpha_rad", "torque_Nmm"], &rows);
    let mut text = ring_text(&ring);
    text.push('\n');
    text.push_str(&summary);
    text.push_str(&csv);
    let results = json!({
        "samples": curve.samples.iter().map(|&(a, t)| json!({ "alpha_rad": round12(a), "torque_Nmm": round12(t) })).collect::<Vec<_>>(),
        "k_origin": round12(curve.k_origin),
        "k_secant_pos": round12(curve.k_secant_pos),
        "k_secant_neg": round12(curve.k_secant_neg),
    });
    let mut inputs = ring_json(&ring);
    inputs["alpha_max_rad"] = json!(round12(args.alpha_max));
    inputs["steps"] = json!(args.steps);
    Ok(Report { text, json: envelope(inputs, results, &quad), csv, csv_note: Some(summary), exit: EXIT_OK })
}

fn cmd_oracle_check(args: &OracleArgs, warn: &mut dyn Write) -> Result<Report, CliError> {
    let quad = args.quad.spec()?;
    let ring = args.ring.ring(warn)?;
    if args.threshold.is_nan() || args.threshold <= 0.0 {
        return Err(invalid("--threshold must be positive"));
    }
    let grid = GridSpec::square(args.grid)?;
    let reference = torque_full(&ring, args.alpha, &quad)?;
    let oracle = oracle_torque(&ring, args.alpha, &grid)?;
    let deviation = ((oracle - reference) / reference).abs();
    let pass = deviation <= args.threshold;
    let mut text = ring_text(&ring);
    let _ = write!(
        text,
        "\nalpha = {} rad, grid = {n}x{n}\nT quadrature = {} N*mm\nT oracle     = {} N*mm\nrelative deviation = {} (threshold {}) {}\n",
        sig12(args.alpha),
        sig12(reference),
        sig12(oracle),
        sig12(deviation),
        sig12(args.threshold),
        if pass { "PASS" } else { "FAIL" },
        n = args.grid
    );
    let results = json!({
        "torque_quadrature_Nmm": round12(reference),
        "torque_oracle_Nmm": round12(oracle),
        "relative_deviation": round12(deviation),
        "threshold": round12(args.threshold),
        "pass": pass,
    });
    let mut inputs = ring_json(&ring);
    inputs["alpha_rad"] = json!(round12(args.alpha));
    inputs["grid"] = json!(args.grid);
    let csv = csv_table(
        &["alpha_rad", "grid", "torque_quadrature_Nmm", "torque_oracle_Nmm", "relative_deviation"],
        &[vec![args.alpha, args.grid as f64, reference, oracle, deviation]],
    );
    Ok(Report {
        text,
        json: envelope(inputs, results, &quad),
        csv,
        csv_note: None,
        exit: if pass { EXIT_OK } else { EXIT_CHECK_FAILED },
    })
}

fn emit(report: &Report, format: Format, path: Option<&PathBuf>, out: &mut dyn Write, warn: &mut dyn Write) -> Result<(), CliError> {
    let body = match format {
        Format::Text => report.text.clone(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("JSON values always serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            if let Some(note) = &report.csv_note {
                warn.write_all(note.as_bytes())?;
            }
            report.csv.clone()
        }
    };
    match path {
        Some(p) => std::fs::write(p, body)?,
        None => out.write_all(body.as_bytes())?,
    }
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write, warn: &mut dyn Write) -> Result<i32, CliError> {
    let (report, format, path) = match &cli.command {
        Command::Stiffness(a) => (cmd_stiffness(a, warn)?, a.out.format, a.out.output.as_ref()),
        Command::Integral(a) => (cmd_integral(a, warn)?, a.out.format, a.out.output.as_ref()),
        Command::Doe(a) => {
            let (r, f) = doe_report(a)?;
            (r, f, a.output.as_ref())
        }
        Command::Fit(a) => (cmd_fit(a)?, a.out.format, a.out.output.as_ref()),
        Command::TorqueCurve(a) => (cmd_torque_curve(a, warn)?, a.out.format, a.out.output.as_ref()),
        Command::OracleCheck(a) => (cmd_oracle_check(a, warn)?, a.out.format, a.out.output.as_ref()),
    };
    emit(&report, format, path, out, warn)?;
    Ok(report.exit)
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, warn: &mut dyn Write) -> i32 {
    match execute(cli, out, warn) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(warn, "error: {}", e.message);
            e.code
        }
    }
}
