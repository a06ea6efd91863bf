use rug::Integer;

use super::PowerSeries;
use crate::error::{Error, Result};

/// One factor `(±q^offset; q^modulus)_∞^exponent` of an eta quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Factor {
    pub offset: u32,
    pub modulus: u32,
    pub exponent: i32,
    /// Base `-q^offset` instead of `q^offset`.
    pub negated: bool,
}

impl Factor {
    pub const fn new(offset: u32, modulus: u32, exponent: i32) -> Self {
        Factor {
            offset,
            modulus,
            exponent,
            negated: false,
        }
    }

    /// `(-q^offset; q^modulus)_∞^exponent`.
    pub const fn negated(offset: u32, modulus: u32, exponent: i32) -> Self {
        Factor {
            offset,
            modulus,
            exponent,
            negated: true,
        }
    }

    /// `(q^k; q^k)_∞^exponent`, the building block written `f_k^e`.
    pub const fn eta(k: u32, exponent: i32) -> Self {
        Factor::new(k, k, exponent)
    }

    pub fn validate(&self) -> Result<()> {
        if self.offset < 1 || self.offset > self.modulus {
            return Err(Error::InvalidFactor {
                offset: self.offset,
                modulus: self.modulus,
            });
        }
        Ok(())
    }

    pub fn expand(&self, order: usize) -> Result<PowerSeries> {
        self.validate()?;
        let base = if self.negated {
            signed_product(self.offset as usize, self.modulus as usize, 1, order)
        } else if self.offset == self.modulus {
            euler_function(order).compose_power(self.modulus as usize)?
        } else {
            signed_product(self.offset as usize, self.modulus as usize, -1, order)
        };
        base.pow(self.exponent as i64)
    }
}

/// A finite product of [`Factor`]s. The empty product is `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EtaQuotientSpec {
    pub factors: Vec<Factor>,
}

impl EtaQuotientSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        for f in &factors {
            f.validate()?;
        }
        Ok(EtaQuotientSpec { factors })
    }

    /// Product of `f_k^e` over the given `(k, e)` pairs.
    pub fn etas(pairs: &[(u32, i32)]) -> Self {
        EtaQuotientSpec {
            factors: pairs.iter().map(|&(k, e)| Factor::eta(k, e)).collect(),
        }
    }

    pub fn expand(&self, order: usize) -> Result<PowerSeries> {
        eta_quotient(self, order)
    }
}

/// Expansion of `(q^a; q^b)_∞^e` to order `order`.
pub fn pochhammer(a: u32, b: u32, e: i32, order: usize) -> Result<PowerSeries> {
    Factor::new(a, b, e).expand(order)
}

pub fn eta_quotient(spec: &EtaQuotientSpec, order: usize) -> Result<PowerSeries> {
    let mut out = PowerSeries::one(order);
    // Positive exponents first so that divisions run against a dense numerator
    // only once per factor.
    let mut factors = spec.factors.clone();
    factors.sort_by_key(|f| f.exponent < 0);
    for f in &factors {
        f.validate()?;
        let base = Factor { exponent: 1, ..*f }.expand(order)?;
        if f.exponent > 0 {
            for _ in 0..f.exponent {
                out = out.mul_series(&base);
            }
        } else {
            for _ in 0..f.exponent.unsigned_abs() {
                out = out.div_series(&base)?;
            }
        }
    }
    Ok(out)
}

/// `(q; q)_∞` to order `order`, from Euler's pentagonal number theorem:
/// `sum_k (-1)^k q^{k(3k-1)/2}` over all integers `k`.
pub fn euler_function(order: usize) -> PowerSeries {
    let mut out = PowerSeries::zero(order);
    out.coeffs[0] = Integer::from(1);
    for k in 1usize.. {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let lo = k * (3 * k - 1) / 2;
        if lo > order {
            break;
        }
        out.coeffs[lo] = Integer::from(sign);
        let hi = k * (3 * k + 1) / 2;
        if hi <= order {
            out.coeffs[hi] = Integer::from(sign);
        }
    }
    out
}

/// `prod_{j >= 0} (1 + sign * q^{a + b j})`, multiplied out factor by factor.
fn signed_product(a: usize, b: usize, sign: i32, order: usize) -> PowerSeries {
    let mut c = PowerSeries::one(order).coeffs;
    let mut k = a;
    while k <= order {
        for n in (k..=order).rev() {
            let (lo, hi) = c.split_at_mut(n);
            if sign < 0 {
                hi[0] -= &lo[n - k];
            } else {
                hi[0] += &lo[n - k];
            }
        }
        k += b;
    }
    PowerSeries { coeffs: c }
}

#[cfg(test)]
pub(crate) fn naive_pochhammer(a: usize, b: usize, order: usize) -> PowerSeries {
    signed_product(a, b, -1, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> PowerSeries {
        PowerSeries::from_i64s(c)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(1, 1, 1, 5).unwrap(), s(&[1, -1, -1, 0, 0, 1]));
        assert_eq!(pochhammer(1, 1, -2, 4).unwrap(), s(&[1, 2, 5, 10, 20]));
        assert_eq!(pochhammer(3, 7, 1, 2).unwrap(), s(&[1, 0, 0]));
    }

    #[test]
    fn pochhammer_rejects_bad_factors() {
        assert!(matches!(
            pochhammer(0, 3, 1, 4),
            Err(Error::InvalidFactor {
                offset: 0,
                modulus: 3
            })
        ));
        assert!(pochhammer(4, 3, 1, 4).is_err());
        assert!(EtaQuotientSpec::new(vec![Factor::new(5, 2, 1)]).is_err());
    }

    #[test]
    fn eta_quotient_examples() {
        let d3 = EtaQuotientSpec::new(vec![Factor::new(1, 1, 4), Factor::new(3, 3, -2)]).unwrap();
        assert_eq!(d3.expand(5).unwrap(), s(&[1, -4, 2, 10, -13, 0]));
        let d4 = EtaQuotientSpec::etas(&[(1, 4), (2, -1), (4, -1)]);
        assert_eq!(d4.expand(4).unwrap(), s(&[1, -4, 3, 4, 0]));
        assert_eq!(
            EtaQuotientSpec::default().expand(3).unwrap(),
            s(&[1, 0, 0, 0])
        );
    }

    #[test]
    fn odd_pochhammer_squared_after_sign_flip() {
        let a = pochhammer(1, 2, 2, 4).unwrap().alternate();
        assert_eq!(a, s(&[1, 2, 1, 2, 4]));
    }

    #[test]
    fn negated_base_is_distinct_parts() {
        // (-q; q)_∞ counts partitions into distinct parts.
        let d = Factor::negated(1, 1, 1).expand(8).unwrap();
        assert_eq!(d, s(&[1, 1, 1, 2, 2, 3, 4, 5, 6]));
        // and equals (q^2; q^2)_∞ / (q; q)_∞.
        let ratio = eta_quotient(&EtaQuotientSpec::etas(&[(2, 1), (1, -1)]), 8).unwrap();
        assert_eq!(d, ratio);
    }

    #[test]
    fn pentagonal_fast_path_matches_naive_product() {
        for order in [0, 1, 2, 7, 50, 500] {
            assert_eq!(
                euler_function(order),
                naive_pochhammer(1, 1, order),
                "order {order}"
            );
        }
        for k in [2usize, 3, 5] {
            assert_eq!(
                pochhammer(k as u32, k as u32, 1, 300).unwrap(),
                naive_pochhammer(k, k, 300)
            );
        }
    }

    #[test]
    fn pentagonal_support_is_unit() {
        let e = euler_function(500);
        for (n, c) in e.coeffs().iter().enumerate() {
            if !c.is_zero() {
                assert!(*c == 1 || *c == -1);
                // 24n + 1 is a perfect square exactly at generalized pentagonal numbers.
                assert!(Integer::from(24 * n + 1).is_perfect_square());
            }
        }
    }
}
