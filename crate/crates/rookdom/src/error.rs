use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Domination quantities are defined only for boards with at least one
    /// square; the polynomial of an empty board is the constant 1 and is
    /// handled explicitly where it makes sense.
    #[error("board has no squares; this quantity needs n >= 1 and m >= 1")]
    EmptyBoard,

    /// The exhaustive oracle enumerates all 2^squares subsets and refuses
    /// boards where that is intractable.
    #[error("board has {squares} squares, above the exhaustive-enumeration cap of {cap}")]
    CapacityExceeded { squares: usize, cap: usize },

    /// The two-term coefficient formula is valid only for sizes strictly
    /// above `n*m - n - m - min(n,m) + 2`.
    #[error("coefficient index {k} is outside the high-density range k > {threshold}")]
    OutsideHighDensityRange { k: usize, threshold: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
