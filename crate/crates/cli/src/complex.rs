//! Complex numbers on the command line: `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`.

use num_complex::Complex64;

use crate::CliError;

fn parse_real(s: &str) -> Option<f64> {
    let v: f64 = s.parse().ok()?;
    v.is_finite().then_some(v)
}

fn parse_imag(s: &str) -> Option<f64> {
    let body = s.strip_suffix('i')?;
    match body {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => parse_real(body),
    }
}

/// Parses `a+bi` with either part optional.
pub fn parse_complex(input: &str) -> Result<Complex64, CliError> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::Usage(format!("cannot parse complex number {input:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if !s.ends_with('i') {
        return parse_real(&s).map(|re| Complex64::new(re, 0.0)).ok_or_else(bad);
    }
    // Split before the last sign that does not belong to an exponent.
    let bytes = s.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => {
            let re = parse_real(&s[..k]).ok_or_else(bad)?;
            let im = parse_imag(&s[k..]).ok_or_else(bad)?;
            Ok(Complex64::new(re, im))
        }
        None => parse_imag(&s).map(|im| Complex64::new(0.0, im)).ok_or_else(bad),
    }
}

/// A real number with 15 significant digits, trailing zeros trimmed.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        let s = format!("{x:.14e}");
        let (mantissa, exponent) = s.split_once('e').expect("exponent form");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exponent}")
    }
}

/// `a`, `bi` or `a±bi`, each part with 15 significant digits.
pub fn format_complex(z: Complex64) -> String {
    let (re, im) = (format_real(z.re), format_real(z.im));
    match (z.re == 0.0, z.im == 0.0) {
        (_, true) => re,
        (true, false) => format!("{im}i"),
        (false, false) if im.starts_with('-') => format!("{re}{im}i"),
        (false, false) => format!("{re}+{im}i"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_shapes() {
        let cases = [
            ("0", (0.0, 0.0)),
            ("1i", (0.0, 1.0)),
            ("i", (0.0, 1.0)),
            ("-i", (0.0, -1.0)),
            ("-1i", (0.0, -1.0)),
            ("0.3+0.8i", (0.3, 0.8)),
            ("0.3-0.8i", (0.3, -0.8)),
            ("-0.3+i", (-0.3, 1.0)),
            ("1e-3+2.5e+1i", (1e-3, 25.0)),
            ("-2E-2-1e-3i", (-0.02, -0.001)),
            (" 0.5 + 1.1i ", (0.5, 1.1)),
            ("+2", (2.0, 0.0)),
        ];
        for (s, (re, im)) in cases {
            assert_eq!(parse_complex(s).unwrap(), Complex64::new(re, im), "{s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "abc", "1+", "i1", "1+2", "1+2j", "++1i", "nan", "inf", "1ii", "1e+i"] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_real(1.086_434_811_213_308), "1.08643481121331");
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(-2.5), "-2.5");
        assert_eq!(format_real(1.5e-17), "1.5e-17");
        assert_eq!(format_real(123456789.0), "123456789");
        assert_eq!(format_complex(Complex64::new(1.0, -2.0)), "1-2i");
        assert_eq!(format_complex(Complex64::new(0.0, 0.5)), "0.5i");
        assert_eq!(format_complex(Complex64::new(0.25, 0.5)), "0.25+0.5i");
    }

    #[test]
    fn format_then_parse_round_trips() {
        for z in [Complex64::new(0.123456789012345, -9.87654321e-9), Complex64::new(-3.0, 1e20)] {
            let back = parse_complex(&format_complex(z)).unwrap();
            assert!((back - z).norm() <= 1e-14 * z.norm());
        }
    }
}
