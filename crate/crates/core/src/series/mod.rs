//! Truncated power series in `q` with arbitrary-precision integer coefficients.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of `q^0 ..= q^N`.
//! Binary operations work to the smaller of the two orders and never report a
//! coefficient past the truncation bound.

mod product;
mod theta;

use std::fmt;
use std::io::{self, Write};
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Assign, Integer};
use serde::Serialize;

use crate::error::{Error, Result};

pub use product::{eta_quotient, euler_function, pochhammer, EtaQuotientSpec, Factor};
pub use theta::{cubic_lattice_sum, cubic_theta, gauss_theta, lambert_p, lambert_p_factor};

/// Operands with fewer than `len / SPARSE_RATIO` nonzero terms take the sparse
/// convolution path.
const SPARSE_RATIO: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Integer>,
}

impl PowerSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// An empty vector is treated as the order-0 zero series.
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Integer::new());
        }
        PowerSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Integer::new(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c * q^exponent`, truncated to `order` (zero if the exponent is past it).
    pub fn monomial(c: i64, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = Integer::from(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`. Panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &Integer {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&Integer> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Number of nonzero coefficients.
    pub fn support_size(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn support(&self) -> Vec<(usize, &Integer)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    fn is_sparse(&self) -> bool {
        self.support_size() * SPARSE_RATIO < self.coeffs.len()
    }

    /// Drops every coefficient past `order`. Never extends.
    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn truncated(&self, order: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// Multiplies by the integer `c`.
    pub fn scale(&self, c: i64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| Integer::from(a * c)).collect(),
        }
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + k > self.order() {
                break;
            }
            out.coeffs[n + k] = c.clone();
        }
        out
    }

    /// Cauchy product to `min(order(self), order(rhs))`.
    pub fn mul_series(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let (dense, sparse) = if rhs.is_sparse() || !self.is_sparse() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = Self::zero(order);
        for (j, b) in sparse.support() {
            if j > order {
                break;
            }
            for (n, a) in dense.coeffs[..=order - j].iter().enumerate() {
                if !a.is_zero() {
                    out.coeffs[n + j] += a * b;
                }
            }
        }
        out
    }

    /// `self / divisor` to the common order.
    ///
    /// Uses the forward recurrence `c_n = u * (a_n - sum_{j>=1} b_j c_{n-j})`
    /// with `u = b_0 = ±1`, iterating only over the nonzero terms of the divisor.
    pub fn div_series(&self, divisor: &Self) -> Result<Self> {
        let unit = unit_sign(divisor.coeff(0))?;
        let order = self.order().min(divisor.order());
        let tail: Vec<(usize, &Integer)> = divisor
            .support()
            .into_iter()
            .filter(|&(j, _)| j >= 1 && j <= order)
            .collect();
        let mut out = Self::zero(order);
        let mut acc = Integer::new();
        for n in 0..=order {
            acc.assign(&self.coeffs[n]);
            for &(j, b) in &tail {
                if j > n {
                    break;
                }
                acc -= b * &out.coeffs[n - j];
            }
            if unit < 0 {
                acc = -acc;
            }
            std::mem::swap(&mut out.coeffs[n], &mut acc);
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn invert(&self) -> Result<Self> {
        Self::one(self.order()).div_series(self)
    }

    /// Integer power; negative exponents go through [`Self::div_series`].
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut out = Self::one(self.order());
        if e >= 0 {
            if self.is_sparse() {
                for _ in 0..e {
                    out = out.mul_series(self);
                }
            } else {
                let mut base = self.clone();
                let mut k = e as u64;
                while k > 0 {
                    if k & 1 == 1 {
                        out = out.mul_series(&base);
                    }
                    k >>= 1;
                    if k > 0 {
                        base = base.mul_series(&base);
                    }
                }
            }
        } else {
            for _ in 0..e.unsigned_abs() {
                out = out.div_series(self)?;
            }
        }
        Ok(out)
    }

    /// Substitutes `q -> q^k`; the order is preserved.
    pub fn compose_power(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidPower(0));
        }
        let mut out = Self::zero(self.order());
        for (n, c) in self.coeffs.iter().enumerate() {
            match n.checked_mul(k) {
                Some(e) if e <= self.order() => out.coeffs[e] = c.clone(),
                _ => break,
            }
        }
        Ok(out)
    }

    /// Substitutes `q -> -q`.
    pub fn alternate(&self) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    if n % 2 == 1 {
                        Integer::from(-c)
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        }
    }

    /// The series `sum_n a_{m n + r} q^n`, of order `floor((order - r) / m)`.
    pub fn dissect(&self, r: usize, m: usize) -> Result<Self> {
        if m == 0 || r >= m {
            return Err(Error::InvalidResidue {
                residue: r as u64,
                modulus: m as u64,
            });
        }
        if r > self.order() {
            // Nothing of this residue class survives truncation; there is no
            // meaningful order to report.
            return Err(Error::IndexOutOfRange {
                index: r,
                order: self.order(),
            });
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[r..].iter().step_by(m).cloned().collect(),
        })
    }

    /// Inverse of [`Self::dissect`]: `parts[r]` supplies the exponents `≡ r (mod m)`.
    ///
    /// The result has the largest order for which every coefficient is known.
    pub fn interleave(parts: &[PowerSeries]) -> Self {
        let m = parts.len();
        assert!(m > 0, "interleave needs at least one part");
        let order = (0..m)
            .map(|r| (parts[r].order() + 1) * m + r)
            .min()
            .unwrap()
            - 1;
        PowerSeries {
            coeffs: (0..=order)
                .map(|e| parts[e % m].coeffs[e / m].clone())
                .collect(),
        }
    }

    /// First exponent at which two series differ, within the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&n| self.coeffs[n] != other.coeffs[n])
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "exponent,coefficient")?;
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(w, "{n},{c}")?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SeriesDump::from(self)).expect("series dump is always serializable")
    }

    /// Comma-separated coefficients, lowest exponent first.
    pub fn to_list(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// JSON shape of a series: the order plus decimal coefficient strings.
#[derive(Debug, Serialize)]
pub struct SeriesDump {
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl From<&PowerSeries> for SeriesDump {
    fn from(s: &PowerSeries) -> Self {
        SeriesDump {
            order: s.order(),
            coeffs: s.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

fn unit_sign(c: &Integer) -> Result<i32> {
    if *c == 1 {
        Ok(1)
    } else if *c == -1 {
        Ok(-1)
    } else {
        Err(Error::NonUnitConstant(c.to_string()))
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PowerSeries(O(q^{}))[{}]",
            self.order() + 1,
            self.to_list()
        )
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = Integer::from(c.abs_ref());
            match (n, a == 1) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{a}q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{a}q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|n| Integer::from(&self.coeffs[n] + &rhs.coeffs[n]))
                .collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=order)
                .map(|n| Integer::from(&self.coeffs[n] - &rhs.coeffs[n]))
                .collect(),
        }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| Integer::from(-c)).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        self.mul_series(rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for PowerSeries {
            type Output = PowerSeries;
            fn $m(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        -&self
    }
}
