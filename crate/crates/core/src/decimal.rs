//! Fixed-width decimal rendering for densities.
//!
//! Values are rounded to 17 significant digits (enough to round-trip any
//! `f64`), then trailing zeros are dropped while keeping at least one
//! fractional digit. Values below `1e-6` switch to `d.ddde-N` notation.
//! The output depends only on the bits of the `f64`, never on the platform.

use num_rational::BigRational;
use num_traits::ToPrimitive;

const SIG_DIGITS: usize = 17;
const MIN_PLAIN_EXPONENT: i32 = -6;

/// Nearest `f64` to an exact rational.
pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders `x` with 17 significant digits.
///
/// ```
/// use palindensity::decimal::format_sig17;
/// assert_eq!(format_sig17(25.0 / 91.0), "0.27472527472527475");
/// assert_eq!(format_sig17(1.0), "1.0");
/// assert_eq!(format_sig17(0.125), "0.125");
/// ```
pub fn format_sig17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.0".to_string();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    if exp < MIN_PLAIN_EXPONENT {
        let (lead, rest) = digits.split_at(1);
        let rest = if rest.is_empty() { "0" } else { rest };
        return format!("{sign}{lead}.{rest}e{exp}");
    }

    let mut out = String::from(sign);
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(digits);
    } else {
        let int_len = exp as usize + 1;
        if digits.len() <= int_len {
            out.push_str(digits);
            for _ in digits.len()..int_len {
                out.push('0');
            }
            out.push_str(".0");
        } else {
            out.push_str(&digits[..int_len]);
            out.push('.');
            out.push_str(&digits[int_len..]);
        }
    }
    out
}

/// Renders an exact rational through its nearest `f64`.
pub fn format_ratio(r: &BigRational) -> String {
    format_sig17(ratio_to_f64(r))
}
