//! Shared formatting for two-component values written as `a+b<unit>`.

use std::fmt;

use super::ring::Ring;

pub(crate) fn write_with_unit<T: Ring>(
    f: &mut fmt::Formatter<'_>,
    base: &T,
    coeff: &T,
    unit: &str,
) -> fmt::Result {
    if coeff.is_zero() {
        return write!(f, "{}", base);
    }
    let c = coeff.to_string();
    let c = match c.as_str() {
        "1" => String::new(),
        "-1" => "-".to_string(),
        _ => c,
    };
    if base.is_zero() {
        return write!(f, "{}{}", c, unit);
    }
    if c.starts_with('-') {
        write!(f, "{}{}{}", base, c, unit)
    } else {
        write!(f, "{}+{}{}", base, c, unit)
    }
}

/// Splits `a+b<unit>` into its two textual components. A missing component
/// is `None`; an empty or sign-only coefficient means ±1.
pub(crate) fn split_complex(
    t: &str,
    unit: impl AsRef<str>,
) -> Option<(Option<&str>, Option<&str>)> {
    let unit = unit.as_ref();
    if t.is_empty() {
        return None;
    }
    let Some(body) = t.strip_suffix(unit) else {
        return Some((Some(t), None));
    };
    let split = body
        .char_indices()
        .filter(|&(i, ch)| i > 0 && (ch == '+' || ch == '-'))
        .filter(|&(i, _)| !body[..i].ends_with(['e', 'E']))
        .map(|(i, _)| i)
        .last();
    match split {
        Some(i) => Some((Some(&body[..i]), Some(&body[i..]))),
        None => Some((None, Some(body))),
    }
}

/// `""`/`"+"` → 1, `"-"` → −1, anything else is a real coefficient.
pub(crate) fn strip_unit(m: &str) -> Option<i64> {
    match m {
        "" | "+" => Some(1),
        "-" => Some(-1),
        _ => None,
    }
}

pub(crate) fn strip_plus(m: &str) -> &str {
    m.strip_prefix('+').unwrap_or(m)
}
