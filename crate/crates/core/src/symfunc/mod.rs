//! Partitions, complete homogeneous polynomials and Schur functions in
//! finitely many variables.

mod partition;
mod schur;

pub use partition::{Partition, SkewShape};
pub use schur::{
    complete_table, h_complete, h_complete_of, schur, schur_bialternant, schur_expand, schur_of,
    skew_schur, skew_schur_of,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymfuncError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
    #[error("Frobenius arm and leg lists must be strictly decreasing and of equal length")]
    BadFrobenius,
    #[error("{shape} does not fit in the {rows}x{cols} box")]
    NotInBox { shape: Partition, rows: usize, cols: usize },
    #[error("{shape} has more than {max} parts")]
    TooLong { shape: Partition, max: usize },
    #[error("{inner} is not contained in {outer}")]
    ShapeInvalid { outer: Partition, inner: Partition },
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error("polynomial is not symmetric in the given variables")]
    NotSymmetric,
}
