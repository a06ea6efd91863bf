//! Verification toolkit for the bicrank statistic of 2-colored partitions.
//!
//! The crate is split along the lines of the computations it performs:
//!
//! - [`series`]: exact truncated power series over big integers, Pochhammer
//!   and eta-quotient expansion, dissections and the theta/Lambert series.
//! - [`bicrank`]: the two-variable bicrank table `M*(m, n)`, residue-class
//!   counts and the sign/congruence checks built on them.
//! - [`asymptotics`]: Dedekind sums, root-of-unity multipliers, the modified
//!   Bessel function `I_0`, main terms and explicit error bounds.
//! - [`identities`]: the catalog of dissection and positivity identities.
//! - [`report`]: machine-readable rows shared by the command line tools.

pub mod asymptotics;
pub mod bicrank;
pub mod error;
pub mod identities;
pub mod report;
pub mod series;

pub use asymptotics::{HighPrecReal, RationalAngle, DEFAULT_PRECISION};
pub use bicrank::{BicrankTable, LaurentPoly, Modulus, ResidueTable};
pub use error::{Error, Result};
pub use series::{EtaQuotientSpec, Factor, PowerSeries};

pub use rug::{Integer, Rational};
