//! Small binary64 helpers shared across modules.

/// Distance from `x` to the next representable binary64 away from zero.
///
/// `ulp(0.0)` is the smallest positive subnormal; `ulp(f64::MAX)` is
/// infinite. NaN maps to NaN.
pub fn ulp(x: f64) -> f64 {
    let a = x.abs();
    if a.is_nan() {
        return f64::NAN;
    }
    if a.is_infinite() {
        return f64::INFINITY;
    }
    f64::from_bits(a.to_bits() + 1) - a
}
