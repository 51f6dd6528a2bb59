//! Number rendering shared by the CSV and JSON writers.

/// Rounds to 12 significant digits.
pub fn round12(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().unwrap_or(v)
}

/// Shortest decimal form of `round12(v)`, dot decimal separator.
pub fn sig12(v: f64) -> String {
    let r = round12(v);
    if r == 0.0 {
        return "0".to_owned();
    }
    format!("{r}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_twelve_digits() {
        assert_eq!(sig12(std::f64::consts::FRAC_PI_4), "0.785398163397");
        assert_eq!(sig12(6602.449703114567), "6602.44970311");
        assert_eq!(sig12(2.5), "2.5");
        assert_eq!(sig12(-0.0), "0");
        assert_eq!(sig12(-1.25e-7), "-0.000000125");
    }

    #[test]
    fn round_trip_is_stable() {
        for v in [0.1, 1.0 / 3.0, 123456.789012345, 1e-9 / 7.0] {
            assert_eq!(round12(round12(v)), round12(v));
            assert_eq!(sig12(v).parse::<f64>().unwrap(), round12(v));
        }
    }
}
