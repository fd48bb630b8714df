//! Fenchel–Nielsen type coordinates for globally hyperbolic maximal
//! anti-de Sitter structures on surfaces.
//!
//! The scalar field of every length and twist is the split-complex algebra
//! [`SplitComplex`]. Isometries of anti-de Sitter space are pairs of
//! `PSL(2, R)` matrices ([`Isometry`]), pairs of pants are realized from three
//! `B`-lengths ([`pants`]), and pants are glued with `B`-valued twist-bend
//! parameters ([`gluing`]). The [`coords`] module assembles these into the
//! surface-level coordinate maps, including the augmented coordinates that
//! describe degenerations along a multicurve.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod boundary;
pub mod cli;
pub mod coords;
pub mod error;
pub mod gluing;
pub mod halfspace;
pub mod isometry;
pub mod pants;
pub mod split;

pub use boundary::{cross_ratio, spacelike_position, BoundaryPoint, Orientation, ProjPoint, Sawtooth};
pub use error::{Error, Result};
pub use isometry::{centralizer_element, FixedPoints, Isometry, IsometryClass};
pub use split::{ConeClass, SplitComplex};
