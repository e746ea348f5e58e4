/// Shortest decimal form of `x` rounded to 12 significant digits.
///
/// Used for every float written by the crate so outputs do not depend on the
/// last bits of platform `ln`/`exp`.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("valid float literal");
    let a = rounded.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}
