use rayon::prelude::*;
use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::Serialize;

use super::{bessel_i0, check_precision, decide, omega, render, Decision, RationalAngle};
use crate::bicrank::{diff_series, Modulus};
use crate::error::{Error, Result};
use crate::report::ser_integer;

/// Dominance thresholds claimed alongside the asymptotic formulas.
pub fn reference_threshold(modulus: Modulus) -> Result<u64> {
    match modulus {
        Modulus::Three => Ok(114),
        Modulus::Four => Ok(2160),
        Modulus::Two => Err(Error::UnsupportedModulus(2)),
    }
}

fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// `n - 1/12` as an exact rational, then to `prec` bits.
fn shifted_index(n: u64, prec: u32) -> Float {
    Float::with_val(
        prec,
        Rational::from((Integer::from(n) * 12u32 - 1u32, 12u32)),
    )
}

/// A closed-form main-term coefficient belonging to the `k'` exponential sum.
#[derive(Debug, Clone)]
pub struct MainCoefficient {
    pub kprime: u64,
    pub value: Float,
}

/// Closed-form coefficients: `c(n)` for modulus 3; `c_1(n)` (`k' = 1`) and
/// `c_2(n)` (`k' = 2`) for modulus 4.
pub fn main_coeff(modulus: Modulus, n: u64, prec: u32) -> Result<Vec<MainCoefficient>> {
    let wp = prec + 16;
    let out = match modulus {
        Modulus::Three => {
            let four_pi_3 = pi(wp) * 4u32 / 3u32;
            let value = match n % 3 {
                0 => four_pi_3 * (pi(wp) * 2u32 / 9u32).cos(),
                1 => -(four_pi_3 * (pi(wp) / 9u32).cos()),
                _ => four_pi_3 * (pi(wp) / 18u32).sin(),
            };
            vec![MainCoefficient { kprime: 1, value }]
        }
        Modulus::Four => {
            let c1 = match n % 4 {
                1 => -pi(wp),
                3 => pi(wp),
                _ => Float::new(wp),
            };
            let eighth = pi(wp) / 8u32;
            let c2 = match n % 8 {
                0 => pi(wp) * eighth.sin(),
                2 => pi(wp) * eighth.cos(),
                4 => -(pi(wp) * eighth.sin()),
                6 => -(pi(wp) * eighth.cos()),
                _ => Float::new(wp),
            };
            vec![
                MainCoefficient {
                    kprime: 1,
                    value: c1,
                },
                MainCoefficient {
                    kprime: 2,
                    value: c2,
                },
            ]
        }
        Modulus::Two => return Err(Error::UnsupportedModulus(2)),
    };
    Ok(out
        .into_iter()
        .map(|c| MainCoefficient {
            kprime: c.kprime,
            value: Float::with_val(prec, c.value),
        })
        .collect())
}

/// Real and imaginary parts of an exponential sum.
#[derive(Debug, Clone)]
pub struct ExpSum {
    pub real: Float,
    pub imag: Float,
}

/// `(2π/k) sum_{0 <= h < k, (h,k)=1} e(-n h / k) ω_{h,k'}` with `k = modulus · k'`.
///
/// Phases are added exactly as rationals before anything is evaluated.
pub fn root_of_unity_main(modulus: Modulus, kprime: u64, n: u64, prec: u32) -> Result<ExpSum> {
    if kprime == 0 {
        return Err(Error::Domain("a positive k'"));
    }
    let k = modulus.value() as u64 * kprime;
    let wp = prec + 32;
    let mut re = Float::new(wp);
    let mut im = Float::new(wp);
    for h in 1..k {
        if Integer::from(h).gcd(&Integer::from(k)) != 1 {
            continue;
        }
        let filter = RationalAngle::new(Rational::from((-(Integer::from(n) * h), k)));
        let phase = &filter + &omega(h as i64, kprime, modulus)?;
        let (c, s) = phase.cos_sin(wp);
        re += c;
        im += s;
    }
    let weight = pi(wp) * 2u32 / k;
    Ok(ExpSum {
        real: Float::with_val(prec, &re * &weight),
        imag: Float::with_val(prec, &im * &weight),
    })
}

/// `2π sqrt(n - 1/12) / (sqrt(3) · modulus · k')`.
pub fn bessel_argument(modulus: Modulus, kprime: u64, n: u64, prec: u32) -> Float {
    let wp = prec + 16;
    let s = shifted_index(n, wp).sqrt();
    let denom = Float::with_val(wp, 3).sqrt() * (modulus.value() as u64 * kprime);
    Float::with_val(prec, pi(wp) * 2u32 * s / denom)
}

/// Individual products `coefficient · I_0(argument)` of the main term.
fn main_pieces(modulus: Modulus, n: u64, prec: u32) -> Result<Vec<Float>> {
    if n == 0 {
        return Err(Error::Domain("n >= 1 for the main term"));
    }
    let wp = prec + 16;
    main_coeff(modulus, n, wp)?
        .into_iter()
        .filter(|c| !c.value.is_zero())
        .map(|c| {
            let x = bessel_argument(modulus, c.kprime, n, wp);
            Ok(c.value * bessel_i0(&x, wp)?)
        })
        .collect()
}

/// `c(n) I_0(...)` for modulus 3, `c_1(n) I_0(...) + c_2(n) I_0(...)` for modulus 4.
pub fn main_term(modulus: Modulus, n: u64, prec: u32) -> Result<Float> {
    check_precision(prec)?;
    let pieces = main_pieces(modulus, n, prec)?;
    let mut sum = Float::new(prec + 16);
    for p in pieces {
        sum += p;
    }
    Ok(Float::with_val(prec, sum))
}

/// The explicit envelope for `|E(n)|`, biased upward by a factor `1 + 2^(-prec/2)`.
pub fn error_bound(modulus: Modulus, n: u64, prec: u32) -> Result<Float> {
    check_precision(prec)?;
    if n == 0 {
        return Err(Error::Domain("n >= 1 for the error bound"));
    }
    // (log-term, linear, exponential coefficient, exponent denominator)
    let (a, b, c, d): (u32, u32, u32, u32) = match modulus {
        Modulus::Three => (1731, 743, 28, 3),
        Modulus::Four => (2242, 556, 24, 6),
        Modulus::Two => return Err(Error::UnsupportedModulus(2)),
    };
    let wp = prec + 32;
    let tenth = |v: u32| Float::with_val(wp, Rational::from((v, 10u32)));
    let m = shifted_index(n, wp);
    let s = Float::with_val(wp, m.sqrt_ref());
    let log_term = Float::with_val(wp, pi(wp) * 2u32 * &m).sqrt().ln() + 1u32;
    let exp_arg = pi(wp) * &s / (Float::with_val(wp, 3).sqrt() * d);
    let mut total = tenth(a) * &s * log_term;
    total += tenth(b) * &s;
    total += tenth(c) * &s * exp_arg.exp();
    let bias = Float::with_val(wp, 2).pow(-(prec as i32) / 2) + 1u32;
    Ok(Float::with_val_round(prec, total * bias, Round::Up).0)
}

#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticCheck {
    pub modulus: u32,
    pub n: u64,
    #[serde(serialize_with = "ser_integer")]
    pub exact: Integer,
    #[serde(serialize_with = "ser_float")]
    pub main: Float,
    #[serde(serialize_with = "ser_float")]
    pub bound: Float,
    /// `bound - |exact - main|`.
    #[serde(serialize_with = "ser_float")]
    pub margin: Float,
    pub verdict: Decision,
    pub precision: u32,
}

impl AsymptoticCheck {
    pub fn passed(&self) -> bool {
        self.verdict == Decision::Yes
    }
}

/// Checks `|exact - main_term| <= error_bound` (strictly, after escalation).
pub fn check_asymptotic(
    modulus: Modulus,
    n: u64,
    exact: &Integer,
    prec: u32,
) -> Result<AsymptoticCheck> {
    let eval = |p: u32| -> Result<(Float, Float, Float)> {
        let main = main_term(modulus, n, p)?;
        let bound = error_bound(modulus, n, p)?;
        let diff = Float::with_val(p, exact - &main).abs();
        let margin = Float::with_val(p, &bound - &diff);
        Ok((main, bound, margin))
    };
    let verdict = decide(prec, |p| {
        let (main, bound, margin) = eval(p)?;
        let scale = Float::with_val(p, exact).abs().max(&main.abs()).max(&bound);
        Ok((margin, scale))
    })?;
    let (main, bound, margin) = eval(prec)?;
    Ok(AsymptoticCheck {
        modulus: modulus.value(),
        n,
        exact: exact.clone(),
        main,
        bound,
        margin,
        verdict,
        precision: prec,
    })
}

/// [`check_asymptotic`] for every `n` in `n_lo ..= n_hi`, with exact values
/// taken from the class-difference series. Rows are in increasing `n`.
pub fn check_asymptotic_range(
    modulus: Modulus,
    n_lo: u64,
    n_hi: u64,
    prec: u32,
) -> Result<Vec<AsymptoticCheck>> {
    if n_lo == 0 || n_lo > n_hi {
        return Err(Error::Domain("a range 1 <= lo <= hi"));
    }
    reference_threshold(modulus)?;
    let exact = diff_series(modulus, n_hi as usize);
    (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| check_asymptotic(modulus, n, exact.coeff(n as usize), prec))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct DominanceRow {
    pub n: u64,
    #[serde(serialize_with = "ser_float")]
    pub main: Float,
    #[serde(serialize_with = "ser_float")]
    pub bound: Float,
    /// Lower bound for `|main|` minus the error bound.
    #[serde(serialize_with = "ser_float")]
    pub margin: Float,
    pub dominant: Decision,
}

#[derive(Debug, Clone, Serialize)]
pub struct DominanceReport {
    pub modulus: u32,
    pub lo: u64,
    pub hi: u64,
    pub precision: u32,
    pub rows: Vec<DominanceRow>,
    /// Every `n` where dominance was not established.
    pub failures: Vec<u64>,
    /// Smallest `n` in range from which dominance holds through `hi`.
    pub stable_from: Option<u64>,
    pub reference_threshold: u64,
}

impl DominanceReport {
    /// Dominance holds for every scanned `n >= reference_threshold`.
    pub fn holds_from_reference(&self) -> bool {
        self.failures.iter().all(|&n| n < self.reference_threshold)
    }
}

fn dominance_margin(modulus: Modulus, n: u64, p: u32) -> Result<(Float, Float, Float)> {
    let mut pieces: Vec<Float> = main_pieces(modulus, n, p)?
        .into_iter()
        .map(|x| x.abs())
        .collect();
    pieces.sort_by(|a, b| b.partial_cmp(a).expect("finite"));
    let mut lower = pieces.first().cloned().unwrap_or_else(|| Float::new(p));
    for rest in pieces.iter().skip(1) {
        lower -= rest;
    }
    let main = main_term(modulus, n, p)?;
    let bound = error_bound(modulus, n, p)?;
    let margin = Float::with_val(p, &lower - &bound);
    Ok((main, bound, margin))
}

/// Scans `n_lo ..= n_hi` for `|main_term(n)| > error_bound(n)`.
pub fn dominance_scan(
    modulus: Modulus,
    n_lo: u64,
    n_hi: u64,
    prec: u32,
) -> Result<DominanceReport> {
    if n_lo == 0 || n_lo > n_hi {
        return Err(Error::Domain("a range 1 <= lo <= hi"));
    }
    check_precision(prec)?;
    let reference = reference_threshold(modulus)?;
    let rows = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let dominant = decide(prec, |p| {
                let (main, bound, margin) = dominance_margin(modulus, n, p)?;
                Ok((margin, main.abs().max(&bound)))
            })?;
            let (main, bound, margin) = dominance_margin(modulus, n, prec)?;
            Ok(DominanceRow {
                n,
                main,
                bound,
                margin,
                dominant,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let failures: Vec<u64> = rows
        .iter()
        .filter(|r| r.dominant != Decision::Yes)
        .map(|r| r.n)
        .collect();
    let stable_from = match failures.last() {
        None => Some(n_lo),
        Some(&last) if last < n_hi => Some(last + 1),
        Some(_) => None,
    };
    Ok(DominanceReport {
        modulus: modulus.value(),
        lo: n_lo,
        hi: n_hi,
        precision: prec,
        rows,
        failures,
        stable_from,
        reference_threshold: reference,
    })
}

/// `(-1)^n exp(π sqrt(n/3)) / (2^{3/2} 3^{1/4} n^{3/4})`, the leading-order
/// estimate of the modulus-2 class difference.
pub fn kotesovec_estimate(n: u64, prec: u32) -> Result<Float> {
    if n == 0 {
        return Err(Error::Domain("n >= 1 for the estimate"));
    }
    let wp = prec + 16;
    let nf = Float::with_val(wp, n);
    let growth = (pi(wp) * Float::with_val(wp, &nf / 3u32).sqrt()).exp();
    let denom = Float::with_val(wp, 2).pow(Float::with_val(wp, 1.5))
        * Float::with_val(wp, 3).pow(Float::with_val(wp, 0.25))
        * nf.pow(Float::with_val(wp, 0.75));
    let v = growth / denom;
    Ok(Float::with_val(prec, if n % 2 == 1 { -v } else { v }))
}

fn ser_float<S: serde::Serializer>(v: &Float, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&render(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Float, b: f64, tol: f64) -> bool {
        (a.to_f64() - b).abs() <= tol
    }

    #[test]
    fn closed_forms_mod3() {
        let c = main_coeff(Modulus::Three, 0, 128).unwrap();
        assert!(close(&c[0].value, 3.20879945976782, 1e-12));
        let c = main_coeff(Modulus::Three, 1, 128).unwrap();
        assert!(close(&c[0].value, -3.9361752454580654, 1e-12));
        let c = main_coeff(Modulus::Three, 5, 128).unwrap();
        assert!(close(&c[0].value, 0.7273757856902446, 1e-12));
    }

    #[test]
    fn closed_forms_mod4() {
        let c = main_coeff(Modulus::Four, 6, 128).unwrap();
        assert!(c[0].value.is_zero());
        assert!(close(&c[1].value, -2.902453152139431, 1e-12));
        let c = main_coeff(Modulus::Four, 9, 128).unwrap();
        assert!(close(&c[0].value, -std::f64::consts::PI, 1e-15));
        assert!(c[1].value.is_zero());
    }

    #[test]
    fn main_term_small() {
        let m = main_term(Modulus::Three, 1, 192).unwrap();
        assert!(close(&m, -5.3697929004408164, 1e-12));
        assert!(main_term(Modulus::Three, 0, 192).is_err());
        assert!(main_term(Modulus::Two, 1, 192).is_err());
    }

    #[test]
    fn error_bound_small() {
        let b = error_bound(Modulus::Three, 1, 192).unwrap();
        assert!(close(&b, 386.736_055_768_336_9, 1e-9));
        let b = error_bound(Modulus::Four, 1, 192).unwrap();
        assert!(close(&b, 458.873_406_981_348_3, 1e-9));
    }

    #[test]
    fn check_small() {
        let r = check_asymptotic(Modulus::Three, 1, &Integer::from(-4), 192).unwrap();
        assert!(r.passed());
        assert!(close(
            &r.margin,
            386.736_055_768_336_9 - 1.3697929004408164,
            1e-9
        ));
    }

    #[test]
    fn tiny_n_is_not_dominant() {
        let r = dominance_scan(Modulus::Three, 1, 10, 128).unwrap();
        assert_eq!(r.failures.len(), 10);
        assert_eq!(r.stable_from, None);
        assert!(r.rows[0].margin < 0);
    }

    #[test]
    fn kotesovec_sign_and_n1() {
        let v = kotesovec_estimate(1, 128).unwrap();
        let expect =
            -(std::f64::consts::PI / 3f64.sqrt()).exp() / (2f64.powf(1.5) * 3f64.powf(0.25));
        assert!(close(&v, expect, 1e-12));
        assert!(kotesovec_estimate(2, 128).unwrap() > 0);
        assert!(kotesovec_estimate(0, 128).is_err());
    }
}
