//! Theta-type and Lambert series, each expanded from its own defining sum.

use rug::Integer;

use super::product::euler_function;
use super::PowerSeries;

/// `1 + 6 sum_{n>=0} (q^{3n+1}/(1-q^{3n+1}) - q^{3n+2}/(1-q^{3n+2}))`.
///
/// Each geometric term `q^k/(1-q^k)` contributes to every multiple of `k`.
pub fn lambert_p_factor(order: usize) -> PowerSeries {
    let mut out = PowerSeries::one(order);
    for k in 1..=order {
        let w: i64 = match k % 3 {
            1 => 6,
            2 => -6,
            _ => continue,
        };
        for e in (k..=order).step_by(k) {
            out.coeffs[e] += w;
        }
    }
    out
}

/// `P(q) = (q; q)_∞ · (1 + 6 sum (...))`, the Lambert-series form.
pub fn lambert_p(order: usize) -> PowerSeries {
    euler_function(order).mul_series(&lambert_p_factor(order))
}

/// `sum_{m,n in Z} q^{m^2 + m n + n^2}` truncated at `order`.
pub fn cubic_lattice_sum(order: usize) -> PowerSeries {
    let mut out = PowerSeries::zero(order);
    // m^2 + mn + n^2 >= 3 max(|m|,|n|)^2 / 4, so |m|, |n| <= sqrt(4 order / 3).
    let bound = ((4 * order / 3) as f64).sqrt() as i64 + 1;
    for m in -bound..=bound {
        for n in -bound..=bound {
            let e = m * m + m * n + n * n;
            if e >= 0 && (e as usize) <= order {
                out.coeffs[e as usize] += 1;
            }
        }
    }
    out
}

/// `P(q) = (q; q)_∞ · sum_{m,n} q^{m^2+mn+n^2}`, the cubic-theta form.
pub fn cubic_theta(order: usize) -> PowerSeries {
    euler_function(order).mul_series(&cubic_lattice_sum(order))
}

/// `sum_{m>=0} q^{m(m+1)}`.
pub fn gauss_theta(order: usize) -> PowerSeries {
    let mut out = PowerSeries::zero(order);
    for m in 0usize.. {
        let e = m * (m + 1);
        if e > order {
            break;
        }
        out.coeffs[e] = Integer::from(1);
    }
    out
}
