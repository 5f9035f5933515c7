//! Complex literals `a+bi` and short decimal formatting of results.

use crate::{AdelicError, ComplexValue, Result};

/// Parses `a`, `a+bi`, `a-bi`, `bi`, `i` with decimal (optionally
/// exponent-marked) components.
pub fn parse_complex(text: &str) -> Result<ComplexValue> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || AdelicError::Parse(format!("cannot read complex literal {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    let real = |t: &str| t.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(bad);
    let Some(body) = s.strip_suffix('i') else {
        return Ok(ComplexValue::new(real(&s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re_text, im_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("", body),
    };
    let im = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => real(t)?,
    };
    let re = if re_text.is_empty() { 0.0 } else { real(re_text)? };
    Ok(ComplexValue::new(re, im))
}

/// `x` with `digits` significant digits, trailing zeros dropped, in the
/// style of C's `%.{digits}g`.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |m: &str| -> String {
        if m.contains('.') {
            m.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            m.to_string()
        }
    };
    if exp < -5 || exp >= digits as i32 {
        format!("{}e{}", trim(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim(&format!("{:.*}", decimals, x))
    }
}

/// A complex value as `a`, `a+bi` or `a-bi`, each part with 15 significant
/// digits; readable back by [`parse_complex`].
pub fn format_complex(z: ComplexValue) -> String {
    const DIGITS: usize = 15;
    if z.im == 0.0 {
        return format_significant(z.re, DIGITS);
    }
    let im = format_significant(z.im.abs(), DIGITS);
    let sign = if z.im < 0.0 { '-' } else { '+' };
    if z.re == 0.0 {
        let lead = if z.im < 0.0 { "-" } else { "" };
        return format!("{lead}{im}i");
    }
    format!("{}{sign}{im}i", format_significant(z.re, DIGITS))
}
