use std::fmt;
use std::ops::{Add, Neg};

use rug::float::Constant;
use rug::{Float, Integer, Rational};

use crate::bicrank::Modulus;
use crate::error::{Error, Result};

/// `((x))`: `x - floor(x) - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if *x.denom() == 1 {
        return Rational::new();
    }
    let floor = Rational::from(x.floor_ref());
    (x - floor) - Rational::from((1, 2))
}

/// `s(d, c) = sum_{n mod c} ((d n / c)) ((n / c))`, straight from the definition.
pub fn dedekind_sum(d: i64, c: u64) -> Result<Rational> {
    if c == 0 || Integer::from(d).gcd(&Integer::from(c)) != 1 {
        return Err(Error::NotCoprime(d, c));
    }
    let c_int = Integer::from(c);
    let mut sum = Rational::new();
    for n in 1..c {
        let a = sawtooth(&Rational::from((Integer::from(d) * n, c_int.clone())));
        let b = sawtooth(&Rational::from((n, c)));
        sum += a * b;
    }
    Ok(sum)
}

/// The point `e(turns) = exp(2πi · turns)` on the unit circle, with `turns`
/// kept exactly and reduced into `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    turns: Rational,
}

impl RationalAngle {
    pub fn new(turns: Rational) -> Self {
        let floor = Rational::from(turns.floor_ref());
        RationalAngle {
            turns: turns - floor,
        }
    }

    pub fn from_ratio(num: i64, den: u64) -> Self {
        Self::new(Rational::from((num, den)))
    }

    pub fn turns(&self) -> &Rational {
        &self.turns
    }

    /// `(cos 2πt, sin 2πt)` at `prec` bits.
    pub fn cos_sin(&self, prec: u32) -> (Float, Float) {
        let wp = prec + 16;
        let mut theta = Float::with_val(wp, Constant::Pi) * 2u32;
        theta *= &self.turns;
        let (s, c) = theta.sin_cos(Float::new(wp));
        (Float::with_val(prec, c), Float::with_val(prec, s))
    }
}

impl Add for &RationalAngle {
    type Output = RationalAngle;

    fn add(self, rhs: &RationalAngle) -> RationalAngle {
        RationalAngle::new(Rational::from(&self.turns + &rhs.turns))
    }
}

impl Neg for &RationalAngle {
    type Output = RationalAngle;

    fn neg(self) -> RationalAngle {
        RationalAngle::new(Rational::from(-&self.turns))
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", self.turns)
    }
}

/// Root-of-unity multiplier `ω_{h,k'}` attached to the cusp `h / (modulus k')`.
///
/// Modulus 3: `e((2 s(h,k') - 4 s(h,3k')) / 2)`.
/// Modulus 4: `e((s(h,2k') + s(h,k') - 4 s(h,4k')) / 2)`.
pub fn omega(h: i64, kprime: u64, modulus: Modulus) -> Result<RationalAngle> {
    if kprime == 0 {
        return Err(Error::Domain("a positive k'"));
    }
    let k = kprime * modulus.value() as u64;
    if Integer::from(h).gcd(&Integer::from(k)) != 1 {
        return Err(Error::NotCoprime(h, k));
    }
    let combo = match modulus {
        Modulus::Three => dedekind_sum(h, kprime)? * 2u32 - dedekind_sum(h, 3 * kprime)? * 4u32,
        Modulus::Four => {
            dedekind_sum(h, 2 * kprime)? + dedekind_sum(h, kprime)?
                - dedekind_sum(h, 4 * kprime)? * 4u32
        }
        Modulus::Two => return Err(Error::UnsupportedModulus(2)),
    };
    Ok(RationalAngle::new(combo / 2u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: u64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&q(1, 2)), 0);
        assert_eq!(sawtooth(&q(3, 1)), 0);
        assert_eq!(sawtooth(&q(1, 3)), q(-1, 6));
        assert_eq!(sawtooth(&q(-1, 3)), q(1, 6));
        assert_eq!(sawtooth(&q(7, 4)), q(1, 4));
    }

    #[test]
    fn dedekind_small() {
        assert_eq!(dedekind_sum(1, 1).unwrap(), 0);
        assert_eq!(dedekind_sum(1, 3).unwrap(), q(1, 18));
        assert_eq!(dedekind_sum(2, 3).unwrap(), q(-1, 18));
        assert_eq!(dedekind_sum(1, 4).unwrap(), q(1, 8));
        assert_eq!(dedekind_sum(-1, 3).unwrap(), q(-1, 18));
        assert!(matches!(dedekind_sum(2, 4), Err(Error::NotCoprime(2, 4))));
        assert!(dedekind_sum(1, 0).is_err());
    }

    #[test]
    fn angle_reduction() {
        let a = RationalAngle::from_ratio(-1, 9);
        assert_eq!(*a.turns(), q(8, 9));
        let b = &a + &RationalAngle::from_ratio(1, 9);
        assert_eq!(*b.turns(), 0);
        assert_eq!(*(-&RationalAngle::from_ratio(1, 4)).turns(), q(3, 4));
        let (c, s) = RationalAngle::from_ratio(1, 4).cos_sin(128);
        assert!(c.abs() < 1e-35);
        assert!((s - 1u32).abs() < 1e-35);
    }

    #[test]
    fn omega_base_cases() {
        assert_eq!(*omega(1, 1, Modulus::Three).unwrap().turns(), q(8, 9));
        assert_eq!(*omega(2, 1, Modulus::Three).unwrap().turns(), q(1, 9));
        assert_eq!(*omega(1, 1, Modulus::Four).unwrap().turns(), q(3, 4));
        assert!(omega(3, 1, Modulus::Three).is_err());
        assert!(omega(2, 2, Modulus::Four).is_err());
        assert!(omega(1, 1, Modulus::Two).is_err());
    }

    #[test]
    fn omega_is_unimodular() {
        for kp in 1..=4u64 {
            for h in 1..(4 * kp as i64) {
                if let Ok(w) = omega(h, kp, Modulus::Four) {
                    let (c, s) = w.cos_sin(128);
                    let norm = Float::with_val(128, &c * &c) + Float::with_val(128, &s * &s);
                    assert!((norm - 1u32).abs() < 1e-35);
                }
            }
        }
    }
}
