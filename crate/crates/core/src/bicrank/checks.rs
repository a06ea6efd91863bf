//! Equalities, congruences and sign patterns of the class counts.

use rug::Integer;
use serde::Serialize;

use super::{diff_series, two_colored_partitions, BicrankTable, ClassCounts, Modulus};
use crate::error::{Error, Result};

/// Exceptions to the sign patterns, as listed with the theorems.
pub const LISTED_EXCEPTIONS_MOD2: &[usize] = &[];
pub const LISTED_EXCEPTIONS_MOD3: &[usize] = &[5];
pub const LISTED_EXCEPTIONS_MOD4: &[usize] = &[4, 20];

pub fn listed_exceptions(modulus: Modulus) -> &'static [usize] {
    match modulus {
        Modulus::Two => LISTED_EXCEPTIONS_MOD2,
        Modulus::Three => LISTED_EXCEPTIONS_MOD3,
        Modulus::Four => LISTED_EXCEPTIONS_MOD4,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// Strict sign; `None` for zero.
    pub fn of(c: &Integer) -> Option<Sign> {
        match c.cmp0() {
            std::cmp::Ordering::Greater => Some(Sign::Positive),
            std::cmp::Ordering::Less => Some(Sign::Negative),
            std::cmp::Ordering::Equal => None,
        }
    }

    /// Sign the theorems predict for the class difference at index `n`.
    pub fn predicted(modulus: Modulus, n: usize) -> Sign {
        let positive = match modulus {
            Modulus::Two => n.is_multiple_of(2),
            Modulus::Three => n % 3 != 1,
            Modulus::Four => matches!(n % 8, 0 | 2 | 3 | 7),
        };
        if positive {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignException {
    pub n: usize,
    #[serde(serialize_with = "crate::report::ser_integer")]
    pub coefficient: Integer,
    pub predicted: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignReport {
    pub modulus: u32,
    pub order: usize,
    /// Every index where the coefficient is zero or has the wrong sign.
    pub exceptions: Vec<SignException>,
    /// The listed exceptions that fall within `order`.
    pub listed: Vec<usize>,
}

impl SignReport {
    pub fn exception_indices(&self) -> Vec<usize> {
        self.exceptions.iter().map(|e| e.n).collect()
    }

    /// Exceptions found that are not listed.
    pub fn unexpected(&self) -> Vec<usize> {
        self.exception_indices()
            .into_iter()
            .filter(|n| !self.listed.contains(n))
            .collect()
    }

    /// Listed exceptions that did not occur.
    pub fn missing(&self) -> Vec<usize> {
        let found = self.exception_indices();
        self.listed
            .iter()
            .copied()
            .filter(|n| !found.contains(n))
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.unexpected().is_empty() && self.missing().is_empty()
    }
}

/// Classifies every coefficient of `diff_series(modulus)` up to `order`.
///
/// A zero coefficient counts as an exception since the predicted inequality
/// is strict.
pub fn sign_report(modulus: Modulus, order: usize) -> SignReport {
    let series = diff_series(modulus, order);
    let exceptions = series
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(n, c)| {
            let predicted = Sign::predicted(modulus, n);
            (Sign::of(c) != Some(predicted)).then(|| SignException {
                n,
                coefficient: c.clone(),
                predicted,
            })
        })
        .collect();
    SignReport {
        modulus: modulus.value(),
        order,
        exceptions,
        listed: listed_exceptions(modulus)
            .iter()
            .copied()
            .filter(|&n| n <= order)
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecializationFailure {
    pub modulus: u32,
    pub n: usize,
    #[serde(serialize_with = "crate::report::ser_integer")]
    pub from_table: Integer,
    #[serde(serialize_with = "crate::report::ser_integer")]
    pub expected: Integer,
    pub what: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecializationReport {
    pub checked_to: usize,
    pub failure: Option<SpecializationFailure>,
}

impl SpecializationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks the roots-of-unity filter between the table and the three
/// specialised series, plus `M*(1,3,n) = M*(2,3,n)` and `M*(1,4,n) = M*(3,4,n)`.
pub fn verify_specializations(table: &BicrankTable, order: usize) -> Result<SpecializationReport> {
    if order > table.order() {
        return Err(Error::IndexOutOfRange {
            index: order,
            order: table.order(),
        });
    }
    let series: Vec<_> = [Modulus::Two, Modulus::Three, Modulus::Four]
        .into_iter()
        .map(|m| (m, diff_series(m, order)))
        .collect();
    for n in 0..=order {
        for (m, s) in &series {
            let k = m.value() as u64;
            let (j0, j1) = m.compared_classes();
            let diff = table.class_count(j0, k, n)? - table.class_count(j1, k, n)?;
            if diff != *s.coeff(n) {
                return Ok(SpecializationReport {
                    checked_to: order,
                    failure: Some(SpecializationFailure {
                        modulus: m.value(),
                        n,
                        from_table: diff,
                        expected: s.coeff(n).clone(),
                        what: "class difference",
                    }),
                });
            }
        }
        for (k, a, b) in [(3, 1, 2), (4, 1, 3)] {
            let lhs = table.class_count(a, k, n)?;
            let rhs = table.class_count(b, k, n)?;
            if lhs != rhs {
                return Ok(SpecializationReport {
                    checked_to: order,
                    failure: Some(SpecializationFailure {
                        modulus: k as u32,
                        n,
                        from_table: lhs,
                        expected: rhs,
                        what: "symmetric classes",
                    }),
                });
            }
        }
    }
    Ok(SpecializationReport {
        checked_to: order,
        failure: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "snake_case")]
pub enum Mod5Failure {
    /// The five classes at this index are not all equal.
    UnequalClasses(usize),
    /// The common class value is not `p_{-2}(index) / 5`.
    NotFifth(usize),
    /// Two classes at this index differ by a non-multiple of 5.
    Incongruent(usize),
    /// `p_{-2}(index)` is not divisible by 5.
    NotDivisible(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mod5Report {
    /// Largest `n` such that indices `5n+2 ..= 5n+4` were checked.
    pub checked_to: usize,
    pub failure: Option<Mod5Failure>,
}

impl Mod5Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Equal fifths at `5n+2` and `5n+4`, congruent classes at `5n+3`, and
/// `5 | p_{-2}` at all three, for `0 <= n <= bound`.
pub fn verify_mod5<C: ClassCounts>(counts: &C, bound: usize) -> Result<Mod5Report> {
    let top = 5 * bound + 4;
    if top > counts.order() {
        return Err(Error::IndexOutOfRange {
            index: top,
            order: counts.order(),
        });
    }
    let p2 = two_colored_partitions(top);
    let fail = |f| {
        Ok(Mod5Report {
            checked_to: bound,
            failure: Some(f),
        })
    };
    for n in 0..=bound {
        for idx in [5 * n + 2, 5 * n + 3, 5 * n + 4] {
            let total = p2.coeff(idx);
            if !total.is_divisible_u(5) {
                return fail(Mod5Failure::NotDivisible(idx));
            }
            let classes = (0..5)
                .map(|j| counts.class_count(j, 5, idx))
                .collect::<Result<Vec<_>>>()?;
            if idx % 5 == 3 {
                if classes
                    .iter()
                    .any(|c| !Integer::from(c - &classes[0]).is_divisible_u(5))
                {
                    return fail(Mod5Failure::Incongruent(idx));
                }
            } else {
                if classes.iter().any(|c| *c != classes[0]) {
                    return fail(Mod5Failure::UnequalClasses(idx));
                }
                if Integer::from(&classes[0] * 5u32) != *total {
                    return fail(Mod5Failure::NotFifth(idx));
                }
            }
        }
    }
    Ok(Mod5Report {
        checked_to: bound,
        failure: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub order: usize,
    /// Odd indices where `4` does not divide the series coefficient.
    pub series_failures: Vec<usize>,
    /// Odd indices (within the table) where `M*(0,4,n) ≢ M*(2,4,n) (mod 4)`.
    pub table_failures: Vec<usize>,
    pub table_checked_to: Option<usize>,
}

impl CongruenceReport {
    pub fn passed(&self) -> bool {
        self.series_failures.is_empty() && self.table_failures.is_empty()
    }
}

/// `M*(0,4,2n+1) ≡ M*(2,4,2n+1) (mod 4)` for odd indices up to `order`, from
/// the series and, when given, from the table.
pub fn mod4_odd_congruence(order: usize, table: Option<&BicrankTable>) -> Result<CongruenceReport> {
    let s = diff_series(Modulus::Four, order);
    let series_failures = (1..=order)
        .step_by(2)
        .filter(|&n| !s.coeff(n).is_divisible_u(4))
        .collect();
    let mut table_failures = Vec::new();
    let table_checked_to = table.map(|t| t.order().min(order));
    if let (Some(t), Some(top)) = (table, table_checked_to) {
        for n in (1..=top).step_by(2) {
            let d = t.class_count(0, 4, n)? - t.class_count(2, 4, n)?;
            if !d.is_divisible_u(4) {
                table_failures.push(n);
            }
        }
    }
    Ok(CongruenceReport {
        order,
        series_failures,
        table_failures,
        table_checked_to,
    })
}
