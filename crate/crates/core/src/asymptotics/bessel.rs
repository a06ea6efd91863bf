use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use serde::Serialize;

use super::{decide, render, Decision};
use crate::error::{Error, Result};

/// Modified Bessel function `I_0(x) = sum_m (x/2)^{2m} / (m!)^2` for `x >= 0`.
///
/// Sums the defining series at a working precision of at least
/// `x / ln 2 + 64` bits. Terms are positive, and once the ratio
/// `(x/2)^2 / (m+1)^2` is below 1/2 the tail after a term is bounded by that
/// term, so stopping at a term below `2^(-prec-8)` of the partial sum is safe.
pub fn bessel_i0(x: &Float, prec: u32) -> Result<Float> {
    if x.is_sign_negative() && !x.is_zero() {
        return Err(Error::Domain("non-negative for I_0"));
    }
    if !x.is_finite() {
        return Err(Error::Domain("finite for I_0"));
    }
    let x_bits = x.to_f64() / std::f64::consts::LN_2;
    let wp = prec.max(x_bits.ceil() as u32 + 64) + 16;
    let half = Float::with_val(wp, x / 2u32);
    let y = Float::with_val(wp, half.square_ref());
    let mut term = Float::with_val(wp, 1);
    let mut sum = Float::with_val(wp, 1);
    let cutoff = Float::with_val(wp, 2).pow(-(prec as i32) - 8);
    let half_f = Float::with_val(wp, 0.5);
    for m in 1u64.. {
        term *= &y;
        term /= m * m;
        sum += &term;
        let next_ratio = Float::with_val(wp, &y / ((m + 1) * (m + 1)));
        if next_ratio < half_f && term < Float::with_val(wp, &sum * &cutoff) {
            break;
        }
    }
    Ok(Float::with_val(prec, sum))
}

/// `sqrt(π/8) e^x / sqrt(x)`.
pub fn bessel_upper_envelope(x: &Float, prec: u32) -> Float {
    let pi = Float::with_val(prec, Constant::Pi);
    let c = Float::with_val(prec, pi / 8u32).sqrt();
    c * envelope(x, prec)
}

/// `4 sqrt(2) / (5π) · e^x / sqrt(x)`.
pub fn bessel_lower_envelope(x: &Float, prec: u32) -> Float {
    let pi = Float::with_val(prec, Constant::Pi);
    let c = Float::with_val(prec, 2).sqrt() * 4u32 / (pi * 5u32);
    c * envelope(x, prec)
}

fn envelope(x: &Float, prec: u32) -> Float {
    let e = Float::with_val(prec, x.exp_ref());
    e / Float::with_val(prec, x.sqrt_ref())
}

#[derive(Debug, Clone, Serialize)]
pub struct BesselBoundsVerdict {
    pub x: String,
    pub value: String,
    pub upper: String,
    pub lower: Option<String>,
    pub upper_holds: Decision,
    /// `None` for `x < 1`, where no lower bound is claimed.
    pub lower_holds: Option<Decision>,
}

impl BesselBoundsVerdict {
    pub fn passed(&self) -> bool {
        self.upper_holds == Decision::Yes && self.lower_holds.is_none_or(|d| d == Decision::Yes)
    }
}

/// Checks `I_0(x) < sqrt(π/8) e^x/sqrt(x)` and, for `x >= 1`,
/// `I_0(x) > 4 sqrt(2)/(5π) e^x/sqrt(x)`.
pub fn bessel_bounds_check(x: &Float, prec: u32) -> Result<BesselBoundsVerdict> {
    if *x <= 0 {
        return Err(Error::Domain("positive for the I_0 envelopes"));
    }
    let upper_holds = decide(prec, |p| {
        let v = bessel_i0(x, p)?;
        let u = bessel_upper_envelope(x, p);
        Ok((Float::with_val(p, &u - &v), u))
    })?;
    let lower_holds = if *x >= 1 {
        Some(decide(prec, |p| {
            let v = bessel_i0(x, p)?;
            let l = bessel_lower_envelope(x, p);
            Ok((Float::with_val(p, &v - &l), v))
        })?)
    } else {
        None
    };
    Ok(BesselBoundsVerdict {
        x: render(x),
        value: render(&bessel_i0(x, prec)?),
        upper: render(&bessel_upper_envelope(x, prec)),
        lower: (*x >= 1).then(|| render(&bessel_lower_envelope(x, prec))),
        upper_holds,
        lower_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: f64) -> Float {
        Float::with_val(128, v)
    }

    #[test]
    fn zero_and_one() {
        assert_eq!(bessel_i0(&f(0.0), 128).unwrap(), 1);
        let v = bessel_i0(&f(1.0), 128).unwrap();
        // 1 + 1/4 + 1/64 + 1/2304 + 1/147456 + ...
        let partial = 1.0 + 0.25 + 1.0 / 64.0 + 1.0 / 2304.0 + 1.0 / 147456.0;
        assert!((v.to_f64() - partial).abs() < 1e-7);
        assert!((v.to_f64() - 1.2660658777520082).abs() < 1e-15);
    }

    #[test]
    fn rejects_negative() {
        assert!(bessel_i0(&f(-1.0), 64).is_err());
        assert!(bessel_bounds_check(&f(0.0), 64).is_err());
    }

    #[test]
    fn agrees_with_high_precision_reference() {
        // Reference digits from an independent arbitrary-precision evaluation.
        let v10 = bessel_i0(&f(10.0), 192).unwrap();
        let r10 = Float::with_val(
            192,
            Float::parse("2815.716628466254471469811153426590093078").unwrap(),
        );
        assert!((Float::with_val(192, &v10 - &r10) / &r10).abs() < 1e-30);
        let v50 = bessel_i0(&f(50.0), 192).unwrap();
        let r50 = Float::with_val(
            192,
            Float::parse("293255378384933632665.4675079456853858051").unwrap(),
        );
        assert!((Float::with_val(192, &v50 - &r50) / &r50).abs() < 1e-30);
    }

    #[test]
    fn upper_envelope_at_two() {
        let v = bessel_i0(&f(2.0), 64).unwrap();
        assert!(v < bessel_upper_envelope(&f(2.0), 64));
    }

    #[test]
    fn lower_bound_only_from_one() {
        let r = bessel_bounds_check(&f(0.01), 128).unwrap();
        assert!(r.lower_holds.is_none());
        assert!(r.passed());
        let r = bessel_bounds_check(&f(1.0), 128).unwrap();
        assert_eq!(r.lower_holds, Some(Decision::Yes));
        assert!(r.passed());
    }
}
