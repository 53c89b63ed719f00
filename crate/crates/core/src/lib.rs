//! Exact lattice model of the Néron–Severi lattice of a generic jacobian
//! Kummer surface.
//!
//! Everything here is pure arithmetic over arbitrary-precision integers and
//! rationals. The crate is `no_std` and only needs `alloc`; reports and the
//! command line live in the `kummerlab` companion crate.
//!
//! Module map:
//!
//! * [`lattice`]: quadratic spaces, sublattices, Hermite/Smith normal forms,
//!   discriminant groups and isometry checks.
//! * [`code`]: node subsets as words of a binary code.
//! * [`naruki`]: nodes, tropes, the covering involution and the even eights.
//! * [`nikulin`]: the rank-eight Nikulin lattice and its roots.
//! * [`fibration`]: elliptic fibrations, Kodaira fibers and Euler sums.
//! * [`surface`]: blowups, branched double covers and the surfaces `T`, `X`.

#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod code;
pub mod error;
pub mod fibration;
pub mod labels;
pub mod lattice;
pub mod naruki;
pub mod nikulin;
pub mod normal_form;
pub mod polarization;
pub mod surface;

pub use code::{BinaryCode, NodeSet};
pub use error::{Error, Result};
pub use labels::{NodeLabel, TropeLabel};
pub use lattice::{
    DiscriminantGroup, DivisorClass, QuadraticSpace, Rational, RationalVector, SublatticeModel,
};
pub use naruki::NarukiModel;
pub use nikulin::NikulinLattice;
