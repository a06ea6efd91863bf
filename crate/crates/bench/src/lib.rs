//! Inputs shared by the benchmarks.

use bicrank_core::series::pochhammer;
use bicrank_core::PowerSeries;
use rug::Float;

/// `(q; q)_∞^4`, a dense series with a unit constant term.
pub fn dense_unit_series(order: usize) -> PowerSeries {
    pochhammer(1, 1, 4, order).expect("valid factor")
}

/// Bessel arguments spanning the range reached by desk-scale scans.
pub fn bessel_arguments(prec: u32) -> Vec<Float> {
    [1.0, 10.0, 40.0, 80.0]
        .iter()
        .map(|&x| Float::with_val(prec, x))
        .collect()
}
