use std::fmt;

use rug::Integer;

/// Laurent polynomial in `z` with big-integer coefficients, kept trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_degree: i64,
    coeffs: Vec<Integer>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::new(0, vec![Integer::from(c)])
    }

    /// `coeffs[i]` is the coefficient of `z^(min_degree + i)`; zeros at both
    /// ends are trimmed.
    pub fn new(min_degree: i64, mut coeffs: Vec<Integer>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        let Some(lead) = lead else {
            return Self::zero();
        };
        let last = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        coeffs.truncate(last + 1);
        coeffs.drain(..lead);
        LaurentPoly {
            min_degree: min_degree + lead as i64,
            coeffs,
        }
    }

    pub fn from_i64s(min_degree: i64, coeffs: &[i64]) -> Self {
        Self::new(
            min_degree,
            coeffs.iter().map(|&c| Integer::from(c)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest and highest degree with a nonzero coefficient.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            None
        } else {
            Some((
                self.min_degree,
                self.min_degree + self.coeffs.len() as i64 - 1,
            ))
        }
    }

    pub fn coeff(&self, m: i64) -> Integer {
        let i = m - self.min_degree;
        if i < 0 {
            return Integer::new();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// `(degree, coefficient)` over the stored range, zeros included.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Integer)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.min_degree + i as i64, c))
    }

    /// Value at `z = 1`.
    pub fn total(&self) -> Integer {
        self.coeffs.iter().sum()
    }

    /// Sum of coefficients over degrees `≡ j (mod k)`.
    pub fn class_sum(&self, j: u64, k: u64) -> Integer {
        let k = k as i64;
        self.iter()
            .filter(|(m, _)| m.rem_euclid(k) == j as i64)
            .map(|(_, c)| c)
            .sum()
    }

    /// Invariance under `z -> 1/z`.
    pub fn is_symmetric(&self) -> bool {
        match self.degree_range() {
            None => true,
            Some((lo, hi)) => lo == -hi && self.coeffs.iter().eq(self.coeffs.iter().rev()),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| match m {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{m}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
