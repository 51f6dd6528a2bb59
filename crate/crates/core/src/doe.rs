//! Full-factorial sweep of the section integral over `(r_w/r, x, gamma)` and
//! the one-parameter surrogate `I/r^4 ≈ pi/4 - c (1 - x)`, `x = L/r - r_w/r`.

use std::f64::consts::FRAC_PI_4;
use std::io::Read;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::sig12;
use crate::geometry::SectionGeometry;
use crate::quadrature::QuadratureSpec;
use crate::stiffness::{full_disc_integral, section_integral, VALIDATED_CLEARANCE_MIN};

pub const CSV_HEADER: &str = "rw_ratio,L_ratio,gamma_rad,x,I_over_r4";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DoeGrid {
    pub rw_ratios: Vec<f64>,
    /// Values of `x = L/r - r_w/r`.
    pub clearances: Vec<f64>,
    pub gammas: Vec<f64>,
}

impl Default for DoeGrid {
    fn default() -> Self {
        Self { rw_ratios: vec![2.0, 2.5, 3.0], clearances: vec![0.25, 0.5, 0.75, 1.0], gammas: vec![FRAC_PI_4] }
    }
}

impl DoeGrid {
    /// The default ratios at every one of the four symmetric bite positions.
    pub fn all_symmetric_gammas() -> Self {
        Self { gammas: (0..4).map(|k| FRAC_PI_4 * (2 * k + 1) as f64).collect(), ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DoeRow {
    pub rw_ratio: f64,
    #[serde(rename = "L_ratio")]
    pub l_ratio: f64,
    #[serde(rename = "gamma_rad")]
    pub gamma: f64,
    #[serde(rename = "I_over_r4")]
    pub i_over_r4: f64,
}

impl DoeRow {
    pub fn x(&self) -> f64 {
        self.l_ratio - self.rw_ratio
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct DoeTable {
    pub rows: Vec<DoeRow>,
}

/// Evaluates every grid point at `r = 1`. Rows are ordered by gamma, then
/// `x`, then `r_w/r`. Any failing row fails the whole table.
pub fn run_doe(grid: &DoeGrid, quad: &QuadratureSpec) -> Result<DoeTable> {
    let mut points = Vec::new();
    for &gamma in &grid.gammas {
        for &x in &grid.clearances {
            for &a in &grid.rw_ratios {
                points.push((a, a + x, gamma));
            }
        }
    }
    if points.is_empty() {
        return Err(Error::InvalidInput("DoE grid is empty".into()));
    }
    let rows = points
        .into_par_iter()
        .map(|(a, b, gamma)| {
            let section = SectionGeometry::wire_race_from_ratios(1.0, a, b, gamma)?;
            let si = section_integral(&section, quad)?;
            Ok(DoeRow { rw_ratio: a, l_ratio: b, gamma, i_over_r4: si.total })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DoeTable { rows })
}

impl DoeTable {
    /// CSV with a mandatory header, LF line endings and 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            let fields = [row.rw_ratio, row.l_ratio, row.gamma, row.x(), row.i_over_r4].map(sig12);
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON array of row objects carrying the same rounded values as the CSV.
    pub fn to_json(&self) -> serde_json::Value {
        use crate::format::round12;
        serde_json::Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    serde_json::json!({
                        "rw_ratio": round12(row.rw_ratio),
                        "L_ratio": round12(row.l_ratio),
                        "gamma_rad": round12(row.gamma),
                        "x": round12(row.x()),
                        "I_over_r4": round12(row.i_over_r4),
                    })
                })
                .collect(),
        )
    }

    /// Reads a table written by [`DoeTable::to_csv`]. The `x` column is
    /// recomputed from the ratios rather than trusted.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers().map_err(|e| Error::InvalidInput(format!("DoE CSV: {e}")))?.clone();
        for col in ["rw_ratio", "L_ratio", "gamma_rad", "I_over_r4"] {
            if !headers.iter().any(|h| h == col) {
                return Err(Error::InvalidInput(format!("DoE CSV is missing column `{col}`")));
            }
        }
        let rows = rdr
            .deserialize::<DoeRow>()
            .map(|r| r.map_err(|e| Error::InvalidInput(format!("DoE CSV: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { rows })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurrogateFit {
    /// Slope `c`; the curve is pinned to `pi/4` at `x = 1`.
    pub coefficient: f64,
    /// `I/r^4 - surrogate(x)` per table row.
    pub residuals: Vec<f64>,
}

impl SurrogateFit {
    pub fn with_coefficient(coefficient: f64) -> Self {
        Self { coefficient, residuals: Vec::new() }
    }

    pub fn max_abs_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |m, r| m.max(r.abs()))
    }

    /// `I/r^4` predicted at clearance `x`.
    pub fn predict(&self, x: f64) -> f64 {
        FRAC_PI_4 - self.coefficient * (1.0 - x).max(0.0)
    }

    /// Engineering stiffness formula text with this slope.
    pub fn stiffness_formula(&self) -> String {
        format!(
            "K_T = (E r^4 / (Z R)) * (pi^2/2 - {}*pi*[1 - (L/r - r_w/r)])",
            sig12(2.0 * self.coefficient)
        )
    }
}

/// Least squares for `c` with the anchor `I(x=1) = pi/4` built in:
/// `c = Σ (pi/4 - I_i) w_i / Σ w_i^2`, `w_i = max(0, 1 - x_i)`.
pub fn fit_surrogate(table: &DoeTable) -> Result<SurrogateFit> {
    let (num, den) = table.rows.iter().fold((0.0, 0.0), |(n, d), row| {
        let w = (1.0 - row.x()).max(0.0);
        (n + (FRAC_PI_4 - row.i_over_r4) * w, d + w * w)
    });
    if den == 0.0 {
        return Err(Error::DegenerateFit("no rows with L/r - r_w/r < 1".into()));
    }
    let fit = SurrogateFit::with_coefficient(num / den);
    let residuals = table.rows.iter().map(|row| row.i_over_r4 - fit.predict(row.x())).collect();
    Ok(SurrogateFit { residuals, ..fit })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurrogateValue {
    /// mm^4.
    pub value: f64,
    /// Clearance below the fitted range.
    pub out_of_range: bool,
}

/// Surrogate section integral `r^4 (pi/4 - c [1 - x])`, bracket clamped at 0.
pub fn surrogate_i(section: &SectionGeometry, fit: &SurrogateFit) -> SurrogateValue {
    let r4 = section.r().powi(4);
    match section.clearance_ratio() {
        None => SurrogateValue { value: full_disc_integral(section.r()), out_of_range: false },
        Some(x) => SurrogateValue { value: r4 * fit.predict(x), out_of_range: x < VALIDATED_CLEARANCE_MIN },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(x: f64, i: f64) -> DoeRow {
        DoeRow { rw_ratio: 2.0, l_ratio: 2.0 + x, gamma: FRAC_PI_4, i_over_r4: i }
    }

    #[test]
    fn exact_linear_data() {
        let table = DoeTable { rows: [0.25, 0.5, 0.75, 1.0].map(|x| row(x, FRAC_PI_4 - 0.5 * (1.0 - x))).to_vec() };
        let fit = fit_surrogate(&table).unwrap();
        assert!((fit.coefficient - 0.5).abs() < 1e-15);
        assert!(fit.max_abs_residual() < 1e-15);
    }

    #[test]
    fn single_row() {
        let fit = fit_surrogate(&DoeTable { rows: vec![row(0.5, FRAC_PI_4 - 0.2)] }).unwrap();
        assert!((fit.coefficient - 0.4).abs() < 1e-15);
    }

    #[test]
    fn all_full_circle_rows_is_degenerate() {
        let table = DoeTable { rows: vec![row(1.0, FRAC_PI_4), row(1.5, FRAC_PI_4)] };
        assert!(matches!(fit_surrogate(&table), Err(Error::DegenerateFit(_))));
    }

    #[test]
    fn surrogate_examples() {
        let fit = SurrogateFit::with_coefficient(0.36);
        let s = SectionGeometry::wire_race_from_ratios(1.0, 3.0, 4.0, 0.0).unwrap();
        assert_eq!(surrogate_i(&s, &fit).value, FRAC_PI_4);
        let s = SectionGeometry::wire_race_from_ratios(1.0, 3.0, 3.5, 0.0).unwrap();
        assert!((surrogate_i(&s, &fit).value - 0.605_398_163_397).abs() < 1e-12);
        let s = SectionGeometry::wire_race_from_ratios(3.3, 3.0, 3.5, 0.0).unwrap();
        let v = surrogate_i(&s, &fit).value;
        assert!((v - 71.795_2).abs() < 1e-3, "{v}");
        let s = SectionGeometry::wire_race_from_ratios(1.0, 3.0, 3.1, 0.0).unwrap();
        assert!(surrogate_i(&s, &fit).out_of_range);
    }

    #[test]
    fn csv_layout() {
        let table = DoeTable { rows: vec![row(0.5, 0.6)] };
        assert_eq!(table.to_csv(), "rw_ratio,L_ratio,gamma_rad,x,I_over_r4\n2,2.5,0.785398163397,0.5,0.6\n");
        let back = DoeTable::from_csv(table.to_csv().as_bytes()).unwrap();
        assert_eq!(back.rows[0].l_ratio, 2.5);
        assert!(DoeTable::from_csv("a,b\n1,2\n".as_bytes()).is_err());
    }

    #[test]
    fn empty_grid_rejected() {
        let grid = DoeGrid { gammas: vec![], ..DoeGrid::default() };
        assert!(run_doe(&grid, &QuadratureSpec::default()).is_err());
    }

    #[test]
    fn invalid_row_aborts_table() {
        let grid = DoeGrid { clearances: vec![0.5, -0.5], ..DoeGrid::default() };
        assert!(matches!(run_doe(&grid, &QuadratureSpec::default()), Err(Error::InvalidGeometry(_))));
    }
}
