pub mod algebra;
pub mod linalg;
pub mod symfunc;
pub mod vandermonde;
pub mod lr;
pub mod harness;
