//! Exact Clebsch–Gordan coefficients of Spin(5) for `Λ ⊗ (1,1)` in the
//! SO(3)×SO(3) subgroup basis, with an independent floating-point oracle.

pub mod error;
pub mod exactnum;
pub mod export;
pub mod full;
pub mod labels;
pub mod oracle;
pub mod reduced;
pub mod su2;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Rational, SqrtSum};
pub use labels::{branching, channel_present, decompose_with_14, dim, Channel, DecompEntry, HalfInt, IrrepLabel, So4Label};
