//! Circle-method main terms and explicit error bounds for the class
//! differences modulo 3 and 4.
//!
//! Exact quantities (Dedekind sums, multiplier phases) are rationals; every
//! real-valued quantity is a [`HighPrecReal`] at an explicitly passed
//! precision. Verdicts comparing two real quantities go through [`decide`],
//! which doubles the precision until the margin is clearly resolved.

mod bessel;
mod dedekind;
mod main_term;

use rug::ops::Pow;
use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};

pub use bessel::{
    bessel_bounds_check, bessel_i0, bessel_lower_envelope, bessel_upper_envelope,
    BesselBoundsVerdict,
};
pub use dedekind::{dedekind_sum, omega, sawtooth, RationalAngle};
pub use main_term::{
    bessel_argument, check_asymptotic, check_asymptotic_range, dominance_scan, error_bound,
    kotesovec_estimate, main_coeff, main_term, reference_threshold, root_of_unity_main,
    AsymptoticCheck, DominanceReport, DominanceRow, ExpSum, MainCoefficient,
};

/// Binary floating point value; the precision travels with each value.
pub type HighPrecReal = Float;

pub const DEFAULT_PRECISION: u32 = 192;
pub const MIN_PRECISION: u32 = 64;
/// Escalation stops here and reports [`Decision::Unresolved`].
pub const MAX_PRECISION: u32 = 1 << 14;

pub fn check_precision(prec: u32) -> Result<u32> {
    if prec < MIN_PRECISION {
        Err(Error::InvalidPrecision(prec))
    } else {
        Ok(prec)
    }
}

/// Outcome of a sign decision on a computed margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    /// Margin is positive.
    Yes,
    /// Margin is negative.
    No,
    /// Margin stayed below resolution up to [`MAX_PRECISION`].
    Unresolved,
}

/// Decides the sign of `margin` where `eval(p)` returns `(margin, scale)` at
/// precision `p`. If `|margin| <= |scale| 2^(-p/4)` the evaluation is repeated
/// at twice the precision.
pub fn decide<F>(prec: u32, mut eval: F) -> Result<Decision>
where
    F: FnMut(u32) -> Result<(Float, Float)>,
{
    let mut p = check_precision(prec)?;
    while p <= MAX_PRECISION {
        let (margin, scale) = eval(p)?;
        let resolution =
            Float::with_val(p, scale.abs()) * Float::with_val(p, 2).pow(-(p as i32) / 4);
        if Float::with_val(p, margin.abs_ref()) > resolution {
            return Ok(if margin.is_sign_positive() {
                Decision::Yes
            } else {
                Decision::No
            });
        }
        p *= 2;
    }
    Ok(Decision::Unresolved)
}

/// Scientific notation with as many digits as the value's precision carries.
pub fn render(x: &Float) -> String {
    let digits = ((x.prec() as f64) * std::f64::consts::LOG10_2).floor() as usize;
    format!("{:.*e}", digits.max(6) - 1, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decide_resolves_and_escalates() {
        let d = decide(64, |p| Ok((Float::with_val(p, 1), Float::with_val(p, 10)))).unwrap();
        assert_eq!(d, Decision::Yes);
        let d = decide(64, |p| Ok((Float::with_val(p, -1), Float::with_val(p, 10)))).unwrap();
        assert_eq!(d, Decision::No);

        // A margin of 2^-40 at scale 1 is below 2^-16 at 64 bits, resolved at 256.
        let mut seen = Vec::new();
        let d = decide(64, |p| {
            seen.push(p);
            Ok((Float::with_val(p, 2).pow(-40), Float::with_val(p, 1)))
        })
        .unwrap();
        assert_eq!(d, Decision::Yes);
        assert_eq!(seen, vec![64, 128, 256]);

        let d = decide(64, |p| Ok((Float::new(p), Float::with_val(p, 1)))).unwrap();
        assert_eq!(d, Decision::Unresolved);
    }

    #[test]
    fn precision_floor() {
        assert!(check_precision(63).is_err());
        assert!(decide(32, |p| Ok((Float::new(p), Float::new(p)))).is_err());
    }

    #[test]
    fn render_is_scientific() {
        let s = render(&Float::with_val(64, 1234.5));
        assert!(s.starts_with("1.2345"), "{s}");
        assert!(s.ends_with("e3"), "{s}");
    }
}
