//! Deterministic text output: numbers fixed at 10 significant digits, plain
//! CSV assembly, and a writer that targets stdout or a file. Identical inputs
//! always produce byte-identical bytes — no locale, no hash ordering, no
//! timestamps.

use num_complex::Complex64;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

/// Formats a float with 10 significant digits. Magnitudes in the range the
/// zero tables use come out in plain decimal (matching their printed style);
/// anything extreme falls back to scientific notation. −0 normalizes to 0.
pub fn sig10(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs();
    if !(1e-4..1e12).contains(&mag) {
        return format!("{x:.9e}");
    }
    let exp = mag.log10().floor() as i32;
    let decimals = (9 - exp).max(0) as usize;
    // Rounding can bump the leading digit (9.9999999996 → 10.000000000);
    // the extra significant digit is harmless and still deterministic.
    format!("{x:.decimals$}")
}

/// A complex value as `re`, `re+im·i`, or `im·i`, each part via [`sig10`].
pub fn sig10_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return sig10(z.re);
    }
    let im_part = format!("{}i", sig10(z.im.abs()));
    if z.re == 0.0 {
        return if z.im < 0.0 {
            format!("-{im_part}")
        } else {
            im_part
        };
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}", sig10(z.re), sign, im_part)
}

/// Assembles CSV from a header row and data rows. Cells are written verbatim;
/// callers only pass label and number strings that need no quoting.
pub fn csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Serializes a JSON value with sorted keys and a trailing newline.
pub fn json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

/// Writes to the given path, or to stdout when no path is set.
pub fn emit(out: Option<&Path>, content: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, content),
        None => io::stdout().write_all(content.as_bytes()),
    }
}

/// A complex number as a `[re, im]` JSON pair (exact f64 round-trip).
pub fn complex_json(z: Complex64) -> serde_json::Value {
    serde_json::json!([z.re, z.im])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig10_matches_reference_table_style() {
        assert_eq!(sig10(3.077683537), "3.077683537");
        assert_eq!(sig10(0.3324095627), "0.3324095627");
        assert_eq!(sig10(-10.75312459), "-10.75312459");
        assert_eq!(sig10(0.001082138805), "0.001082138805");
        assert_eq!(sig10(0.0), "0");
        assert_eq!(sig10(-0.0), "0");
    }

    #[test]
    fn sig10_falls_back_to_scientific_for_extremes() {
        assert_eq!(sig10(1.5e-7), "1.500000000e-7");
        assert_eq!(sig10(2.0e13), "2.000000000e13");
    }

    #[test]
    fn complex_formatting_covers_all_sign_cases() {
        assert_eq!(
            sig10_complex(Complex64::new(1.0, 2.0)),
            "1.000000000+2.000000000i"
        );
        assert_eq!(
            sig10_complex(Complex64::new(1.0, -2.0)),
            "1.000000000-2.000000000i"
        );
        assert_eq!(sig10_complex(Complex64::new(0.0, -1.0)), "-1.000000000i");
        assert_eq!(sig10_complex(Complex64::new(0.5, 0.0)), "0.5000000000");
    }

    #[test]
    fn csv_is_newline_terminated() {
        let s = csv(&["a".into(), "b".into()], &[vec!["1".into(), "2".into()]]);
        assert_eq!(s, "a,b\n1,2\n");
    }
}
