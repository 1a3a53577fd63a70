//! Partition combinatorics, symmetric group and `GL` representation theory, and
//! finite computations with twisted commutative algebras.
//!
//! Every result is exact: multiplicities are integers, series coefficients are
//! rationals, and matrices are reduced by fraction-free elimination.

pub mod cache;
pub mod characters;
pub mod error;
pub mod linalg;
pub mod lr;
pub mod partitions;
pub mod plethysm;
pub mod resolutions;
pub mod tca;
pub mod vcat;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use vcat::VObject;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/lr.md")]
    mod lr {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/objects.md")]
    mod objects {}
    #[doc = include_str!("../../../book/src/tca.md")]
    mod tca {}
    #[doc = include_str!("../../../book/src/resolutions.md")]
    mod resolutions {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
