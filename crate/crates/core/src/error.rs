use core::fmt;

/// Everything that can go wrong inside the core crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` is not a prime, or not one the operation supports.
    NotPrime(u64),
    /// `p^k` does not fit in 128 bits.
    PrecisionOverflow { p: u64, k: u32 },
    /// A denominator divisible by `p` where a p-adic integer was required.
    NotIntegral,
    DivisionByZero,
    /// Operands built over different primes, precisions or moduli.
    Mismatch(&'static str),
    /// A unit group or sweep that would exceed the enumeration guard.
    TooLarge { size: u64, limit: u64 },
    /// An element that should have been a unit is not.
    NotUnit,
    /// The character is not defined on the requested level or group.
    BadCharacter(&'static str),
    InvalidInput(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not a supported prime"),
            Error::PrecisionOverflow { p, k } => {
                write!(f, "{p}^{k} overflows the 128-bit working modulus")
            }
            Error::NotIntegral => write!(f, "value is not a p-adic integer"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Mismatch(what) => write!(f, "operand mismatch: {what}"),
            Error::TooLarge { size, limit } => {
                write!(f, "enumeration of {size} elements exceeds the limit {limit}")
            }
            Error::NotUnit => write!(f, "element is not a unit"),
            Error::BadCharacter(what) => write!(f, "bad character: {what}"),
            Error::InvalidInput(what) => write!(f, "invalid input: {what}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
