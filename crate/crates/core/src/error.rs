use thiserror::Error;

use crate::algebra::LatticeVec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TileError {
    #[error("|q| = {0} is below 2; the digit set would be degenerate")]
    DegenerateDeterminant(i64),
    #[error("x^2 + {p}x + {q} has a root of modulus <= 1")]
    NotExpanding { p: i64, q: i64 },
    #[error("tile for x^2 + {p}x + {q} is not disk-like (2|p| > |q+2|)")]
    NotDiskLike { p: i64, q: i64 },
    #[error("digit {digit} outside [-{bound}, {bound}]")]
    DigitOutOfRange { digit: i64, bound: i64 },
    #[error("A^m - I is singular for period length {0}")]
    SingularPeriod(usize),
    #[error("period of an eventually periodic word must be nonempty")]
    EmptyPeriod,
    #[error("neighbor search retained vertices on the candidate box boundary")]
    BoxExhausted,
    #[error("{0} is not a vertex of the neighbor graph")]
    UnknownVertex(LatticeVec),
    #[error("label stream does not trace an infinite path from {0}")]
    InvalidPath(LatticeVec),
    #[error("x^2 + {p}x + {q} does not give a number system")]
    NotANumberSystem { p: i64, q: i64 },
    #[error("digit expansion of {0} did not terminate")]
    NonTermination(LatticeVec),
    #[error("{0} is not a neighbor of the tile")]
    NotANeighbor(LatticeVec),
    #[error("matrix has a negative entry at ({0}, {1})")]
    NegativeEntry(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("integer overflow in exact polynomial arithmetic")]
    Overflow,
    #[error("depth {depth} exceeds the limit {limit}")]
    DepthTooLarge { depth: u32, limit: u32 },
    #[error("point cloud is empty")]
    EmptyCloud,
    #[error("image width {0} outside [64, 4096]")]
    BadWidth(u32),
    #[error("io error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for TileError {
    fn from(e: std::io::Error) -> Self {
        TileError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, TileError>;
