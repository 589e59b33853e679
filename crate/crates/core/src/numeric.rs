//! Scalar types and small numeric helpers shared across modules.

use num_rational::Ratio;
use num_traits::ToPrimitive;

/// Exact scalar used for word vectors, verb matrices and sentence meanings.
pub type Rational = Ratio<i64>;

/// Lossy conversion of an exact scalar to `f64`.
pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Rounds `x` half-up to `decimals` places.
pub fn round_half_up(x: f64, decimals: u32) -> f64 {
    let scale = libm::pow(10.0, decimals as f64);
    libm::floor(x * scale + 0.5) / scale
}

/// Truncates `x` toward zero at `decimals` places.
pub fn truncate(x: f64, decimals: u32) -> f64 {
    let scale = libm::pow(10.0, decimals as f64);
    libm::trunc(x * scale) / scale
}

/// Whether `printed` is a faithful `decimals`-place rendering of `computed`.
///
/// Both truncation and half-up rounding count as faithful, since published
/// tables use either convention.
pub fn matches_printed(computed: f64, printed: f64, decimals: u32) -> bool {
    let eps = 0.5 * libm::pow(10.0, -(decimals as f64) - 3.0);
    libm::fabs(round_half_up(computed, decimals) - printed) < eps
        || libm::fabs(truncate(computed, decimals) - printed) < eps
}
