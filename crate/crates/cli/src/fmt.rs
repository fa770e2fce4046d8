//! Number formatting for the two output modes.
//!
//! CSV cells use the shortest decimal that round-trips, capped at 12
//! significant digits, switching to scientific notation only below 1e-4
//! in magnitude. Text mode always prints 12 significant digits. Both are
//! pure functions of the bits, so repeated runs emit identical bytes.

/// CSV cell format.
pub fn csv_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs();
    if magnitude < 1e-4 {
        for digits in 1..=12usize {
            let s = format!("{:.*e}", digits - 1, x);
            if s.parse::<f64>() == Ok(x) {
                return s;
            }
        }
        return format!("{:.11e}", x);
    }
    let exponent = magnitude.log10().floor() as i32;
    for digits in 1..=12i32 {
        let decimals = (digits - 1 - exponent).max(0) as usize;
        let s = trim_trailing_zeros(format!("{:.*}", decimals, x));
        if s.parse::<f64>() == Ok(x) {
            return s;
        }
    }
    let decimals = (11 - exponent).max(0) as usize;
    trim_trailing_zeros(format!("{:.*}", decimals, x))
}

/// Text-mode format: 12 significant digits, plain notation in the
/// human-readable magnitude range.
pub fn text_number(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000".to_string();
    }
    let magnitude = x.abs();
    if (1e-4..1e7).contains(&magnitude) {
        let exponent = magnitude.log10().floor() as i32;
        let decimals = (11 - exponent).max(0) as usize;
        format!("{:.*}", decimals, x)
    } else {
        format!("{:.11e}", x)
    }
}

fn trim_trailing_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_zero_and_simple_fractions() {
        assert_eq!(csv_number(0.0), "0");
        assert_eq!(csv_number(-0.0), "0");
        assert_eq!(csv_number(0.25), "0.25");
        assert_eq!(csv_number(1.0), "1");
        assert_eq!(csv_number(-0.5), "-0.5");
        assert_eq!(csv_number(1023.0), "1023");
    }

    #[test]
    fn csv_caps_at_twelve_significant_digits() {
        assert_eq!(csv_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(csv_number(0.3017766952966369), "0.301776695297");
    }

    #[test]
    fn csv_small_magnitudes_use_scientific_notation() {
        assert_eq!(csv_number(1e-5), "1e-5");
        assert_eq!(csv_number(-2.5e-7), "-2.5e-7");
        assert_eq!(csv_number(1e-4), "0.0001");
    }

    #[test]
    fn csv_round_trips_when_possible() {
        for &x in &[0.1, 0.7071067811865476, 123.456, 3e-9, -0.999999] {
            let s = csv_number(x);
            let back: f64 = s.parse().unwrap();
            assert!((back - x).abs() <= 1e-12 * x.abs().max(1.0), "{x} -> {s}");
        }
    }

    #[test]
    fn text_mode_carries_twelve_significant_digits() {
        assert_eq!(text_number(0.5), "0.500000000000");
        assert_eq!(text_number(1.0), "1.00000000000");
        assert_eq!(text_number(1e-9), "1.00000000000e-9");
    }
}
