//! The bicrank table `M*(m, n)` and its residue-class counts.
//!
//! `M*(m, n)` is the coefficient of `z^m q^n` in
//!
//! ```text
//!            (q; q)_∞^2
//! ---------------------------------------
//! (z q, z^-1 q, z^2 q, z^-2 q; q)_∞
//! ```
//!
//! and `M*(j, k, n)` is the sum of `M*(m, n)` over `m ≡ j (mod k)`. Specialising
//! `z` to `-1`, `ζ_3` and `i` turns the class differences for `k = 2, 3, 4` into
//! single-variable eta quotients, see [`diff_series`].

mod checks;
mod laurent;

use std::fmt;
use std::io::{self, Write};

use rug::Integer;

use crate::error::{Error, Result};
use crate::series::{euler_function, pochhammer, EtaQuotientSpec, Factor, PowerSeries};

pub use checks::{
    mod4_odd_congruence, sign_report, verify_mod5, verify_specializations, CongruenceReport,
    Mod5Failure, Mod5Report, Sign, SignException, SignReport, SpecializationFailure,
    SpecializationReport,
};
pub use laurent::LaurentPoly;

/// z-weights of the four geometric factors, in the order they are folded in.
const WEIGHTS: [i64; 4] = [1, -1, 2, -2];

/// The moduli for which the class difference has an eta-quotient form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modulus {
    Two,
    Three,
    Four,
}

impl Modulus {
    pub fn value(self) -> u32 {
        match self {
            Modulus::Two => 2,
            Modulus::Three => 3,
            Modulus::Four => 4,
        }
    }

    /// The pair `(j0, j1)` such that [`diff_series`] gives `M*(j0,k,n) - M*(j1,k,n)`.
    pub fn compared_classes(self) -> (u64, u64) {
        match self {
            Modulus::Two | Modulus::Three => (0, 1),
            Modulus::Four => (0, 2),
        }
    }

    /// Eta quotient of the class difference generating function.
    pub fn diff_spec(self) -> EtaQuotientSpec {
        match self {
            // (q; q^2)_∞^2
            Modulus::Two => EtaQuotientSpec {
                factors: vec![Factor::new(1, 2, 2)],
            },
            Modulus::Three => EtaQuotientSpec::etas(&[(1, 4), (3, -2)]),
            Modulus::Four => EtaQuotientSpec::etas(&[(1, 4), (2, -1), (4, -1)]),
        }
    }
}

impl TryFrom<u32> for Modulus {
    type Error = Error;

    fn try_from(k: u32) -> Result<Self> {
        match k {
            2 => Ok(Modulus::Two),
            3 => Ok(Modulus::Three),
            4 => Ok(Modulus::Four),
            _ => Err(Error::UnsupportedModulus(k)),
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// `sum_n (M*(j0,k,n) - M*(j1,k,n)) q^n` to order `order`.
pub fn diff_series(modulus: Modulus, order: usize) -> PowerSeries {
    modulus
        .diff_spec()
        .expand(order)
        .expect("built-in eta quotients are valid")
}

/// `sum_n p_{-2}(n) q^n = 1/(q; q)_∞^2`.
pub fn two_colored_partitions(order: usize) -> PowerSeries {
    pochhammer(1, 1, -2, order).expect("(q;q)^-2 is a valid factor")
}

/// Anything that can answer `M*(j, k, n)`.
pub trait ClassCounts {
    /// Largest `n` available.
    fn order(&self) -> usize;

    fn class_count(&self, j: u64, k: u64, n: usize) -> Result<Integer>;
}

fn check_index(n: usize, order: usize) -> Result<()> {
    if n > order {
        Err(Error::IndexOutOfRange { index: n, order })
    } else {
        Ok(())
    }
}

fn check_residue(j: u64, k: u64) -> Result<()> {
    if k == 0 || j >= k {
        Err(Error::InvalidResidue {
            residue: j,
            modulus: k,
        })
    } else {
        Ok(())
    }
}

/// Full two-variable table: row `n` is the Laurent polynomial `sum_m M*(m,n) z^m`.
#[derive(Clone, PartialEq, Eq)]
pub struct BicrankTable {
    rows: Vec<LaurentPoly>,
}

impl BicrankTable {
    /// Expands the generating function to order `order` in `q`.
    ///
    /// Row `n` is held densely over degrees `-2n ..= 2n` while folding in the
    /// factors `1/(1 - z^w q^j)` with the ascending recurrence
    /// `T[n] += z^w T[n - j]`.
    pub fn build(order: usize) -> Self {
        let mut rows: Vec<Vec<Integer>> = (0..=order)
            .map(|n| vec![Integer::new(); 4 * n + 1])
            .collect();
        // (q; q)^2 at z-degree 0.
        let e = euler_function(order);
        let start = e.mul_series(&e);
        for (n, row) in rows.iter_mut().enumerate() {
            row[2 * n] = start.coeff(n).clone();
        }
        for w in WEIGHTS {
            for j in 1..=order {
                for n in j..=order {
                    let (lo, hi) = rows.split_at_mut(n);
                    let src = &lo[n - j];
                    let dst = &mut hi[0];
                    // degree d in row n-j sits at index d + 2(n-j); in row n
                    // degree d + w sits at d + w + 2n.
                    let shift = (2 * j) as i64 + w;
                    for (i, c) in src.iter().enumerate() {
                        if !c.is_zero() {
                            dst[(i as i64 + shift) as usize] += c;
                        }
                    }
                }
            }
        }
        BicrankTable {
            rows: rows
                .into_iter()
                .enumerate()
                .map(|(n, r)| LaurentPoly::new(-2 * n as i64, r))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Result<&LaurentPoly> {
        check_index(n, self.order())?;
        Ok(&self.rows[n])
    }

    pub fn rows(&self) -> &[LaurentPoly] {
        &self.rows
    }

    /// `M*(m, n)`.
    pub fn get(&self, m: i64, n: usize) -> Result<Integer> {
        Ok(self.row(n)?.coeff(m))
    }

    /// Collapses the table to class counts modulo `k`.
    pub fn residues(&self, k: u64) -> Result<ResidueTable> {
        check_residue(0, k)?;
        Ok(ResidueTable {
            modulus: k,
            rows: self
                .rows
                .iter()
                .map(|r| (0..k).map(|j| r.class_sum(j, k)).collect())
                .collect(),
        })
    }

    /// CSV rows `(n, m, M*(m,n))` over the nonzero entries.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "n,m,count")?;
        for (n, row) in self.rows.iter().enumerate() {
            for (m, c) in row.iter() {
                if !c.is_zero() {
                    writeln!(w, "{n},{m},{c}")?;
                }
            }
        }
        Ok(())
    }
}

impl ClassCounts for BicrankTable {
    fn order(&self) -> usize {
        self.order()
    }

    fn class_count(&self, j: u64, k: u64, n: usize) -> Result<Integer> {
        check_residue(j, k)?;
        Ok(self.row(n)?.class_sum(j, k))
    }
}

impl fmt::Debug for BicrankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BicrankTable")
            .field("order", &self.order())
            .finish_non_exhaustive()
    }
}

/// `M*(j, k, n)` for one fixed `k`, computed in `Z[z]/(z^k - 1)`.
///
/// Needs `k` integers per row instead of `4n + 1`, so it reaches orders where
/// the full table would be wasteful when only class sums are wanted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTable {
    modulus: u64,
    rows: Vec<Vec<Integer>>,
}

impl ResidueTable {
    pub fn build(order: usize, k: u64) -> Result<Self> {
        check_residue(0, k)?;
        let ku = k as usize;
        let e = euler_function(order);
        let start = e.mul_series(&e);
        let mut rows: Vec<Vec<Integer>> = (0..=order)
            .map(|n| {
                let mut r = vec![Integer::new(); ku];
                r[0] = start.coeff(n).clone();
                r
            })
            .collect();
        for w in WEIGHTS {
            let w = w.rem_euclid(k as i64) as usize;
            for j in 1..=order {
                for n in j..=order {
                    let (lo, hi) = rows.split_at_mut(n);
                    let src = &lo[n - j];
                    let dst = &mut hi[0];
                    for (i, c) in src.iter().enumerate() {
                        dst[(i + w) % ku] += c;
                    }
                }
            }
        }
        Ok(ResidueTable { modulus: k, rows })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// All `k` class counts of row `n`.
    pub fn row(&self, n: usize) -> Result<&[Integer]> {
        check_index(n, self.order())?;
        Ok(&self.rows[n])
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        let cols: Vec<String> = (0..self.modulus).map(|j| format!("class_{j}")).collect();
        writeln!(w, "n,{}", cols.join(","))?;
        for (n, row) in self.rows.iter().enumerate() {
            let vals: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            writeln!(w, "{n},{}", vals.join(","))?;
        }
        Ok(())
    }
}

impl ClassCounts for ResidueTable {
    fn order(&self) -> usize {
        self.order()
    }

    fn class_count(&self, j: u64, k: u64, n: usize) -> Result<Integer> {
        check_residue(j, k)?;
        if k != self.modulus {
            return Err(Error::UnsupportedModulus(k as u32));
        }
        Ok(self.row(n)?[j as usize].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        let t = BicrankTable::build(4);
        assert_eq!(*t.row(0).unwrap(), LaurentPoly::constant(1));
        assert_eq!(
            *t.row(1).unwrap(),
            LaurentPoly::from_i64s(-2, &[1, 1, -2, 1, 1])
        );
        assert_eq!(t.get(0, 1).unwrap(), -2);
        assert!(t.row(5).is_err());
    }

    #[test]
    fn row_totals_are_two_colored_partitions() {
        let t = BicrankTable::build(4);
        let totals: Vec<Integer> = t.rows().iter().map(|r| r.total()).collect();
        assert_eq!(totals, [1, 2, 5, 10, 20].map(Integer::from));
    }

    #[test]
    fn class_counts_row_one() {
        let t = BicrankTable::build(3);
        assert_eq!(t.class_count(0, 2, 1).unwrap(), 0);
        assert_eq!(t.class_count(1, 2, 1).unwrap(), 2);
        assert_eq!(t.class_count(0, 1, 3).unwrap(), 10);
        for k in 1..6 {
            for j in 0..k {
                let expect = if j == 0 { 1 } else { 0 };
                assert_eq!(t.class_count(j, k, 0).unwrap(), expect);
            }
        }
        assert!(t.class_count(2, 2, 1).is_err());
        assert!(t.class_count(0, 0, 1).is_err());
        assert!(matches!(
            t.class_count(0, 2, 4),
            Err(Error::IndexOutOfRange { index: 4, order: 3 })
        ));
    }

    #[test]
    fn diff_series_examples() {
        assert_eq!(
            diff_series(Modulus::Two, 4),
            PowerSeries::from_i64s(&[1, -2, 1, -2, 4])
        );
        assert_eq!(
            diff_series(Modulus::Three, 5),
            PowerSeries::from_i64s(&[1, -4, 2, 10, -13, 0])
        );
        assert_eq!(
            diff_series(Modulus::Four, 4),
            PowerSeries::from_i64s(&[1, -4, 3, 4, 0])
        );
    }

    #[test]
    fn modulus_parsing() {
        assert_eq!(Modulus::try_from(3).unwrap(), Modulus::Three);
        assert!(matches!(
            Modulus::try_from(5),
            Err(Error::UnsupportedModulus(5))
        ));
    }

    #[test]
    fn residue_table_matches_full_table() {
        let t = BicrankTable::build(40);
        for k in 1..=7u64 {
            let r = ResidueTable::build(40, k).unwrap();
            assert_eq!(r, t.residues(k).unwrap(), "k = {k}");
        }
        let r = ResidueTable::build(5, 3).unwrap();
        assert!(r.class_count(0, 4, 1).is_err());
    }

    #[test]
    fn csv_exports() {
        let t = BicrankTable::build(1);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,m,count\n0,0,1\n1,-2,1\n1,-1,1\n1,0,-2\n1,1,1\n1,2,1\n"
        );
        let mut buf = Vec::new();
        t.residues(2).unwrap().write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,class_0,class_1\n0,1,0\n1,0,2\n"
        );
    }
}
