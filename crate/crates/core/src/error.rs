use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Pochhammer factor (q^{offset}; q^{modulus}): need 1 <= offset <= modulus")]
    InvalidFactor { offset: u32, modulus: u32 },

    #[error("series with constant term {0} is not invertible over the integers")]
    NonUnitConstant(String),

    #[error("residue {residue} is out of range for modulus {modulus}")]
    InvalidResidue { residue: u64, modulus: u64 },

    #[error("power substitution q -> q^{0} needs a positive exponent")]
    InvalidPower(u64),

    #[error("modulus {0} is not supported here")]
    UnsupportedModulus(u32),

    #[error("arguments {0} and {1} are not coprime")]
    NotCoprime(i64, u64),

    #[error("index {index} exceeds the table order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),

    #[error("argument must be {0}")]
    Domain(&'static str),

    #[error("precision of {0} bits is below the 64-bit minimum")]
    InvalidPrecision(u32),
}
