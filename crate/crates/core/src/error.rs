use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus {0} is too small (must be at least 2)")]
    ModulusTooSmall(u64),

    #[error("modulus {got} exceeds the supported maximum {max}")]
    ModulusTooLarge { got: u64, max: u64 },

    #[error("modulus mismatch: Z_{left} vs Z_{right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("matrix has determinant {det} over Z_{modulus}, expected 1")]
    NotUnimodular { det: u64, modulus: u64 },

    #[error("{divisor} does not divide the modulus {modulus}")]
    NotADivisor { divisor: u64, modulus: u64 },

    #[error("dimension {0} is odd; only even dimensions are handled (for odd N both the Clifford group and its projective quotient are known to be semidirect products)")]
    OddDimension(u64),

    #[error("dimension {0} is too small (must be at least 2)")]
    DimensionTooSmall(u64),

    #[error("dimension {got} exceeds the configured bound {bound}")]
    DimensionOverBound { got: u64, bound: u64 },

    #[error("dimension mismatch: N={left} vs N={right}")]
    DimensionMismatch { left: u64, right: u64 },

    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),

    #[error("criterion only applies when N ≡ 2 (mod 4), got N={0}")]
    RequiresNTwoModFour(u64),

    #[error("matrix is not unitary (deviation {deviation:e} above tolerance {tolerance:e})")]
    NotUnitary { deviation: f64, tolerance: f64 },

    #[error("operator does not normalize the Heisenberg group: {0}")]
    NotClifford(String),

    #[error("W(u)W(w) is not proportional to W(u+w) for u={u:?}, w={w:?}")]
    NotProportional { u: (i64, i64), w: (i64, i64) },
}
