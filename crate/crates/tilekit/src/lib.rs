//! Colored domino tilings of the Aztec diamond and colored lozenge tilings
//! of hexagons.
//!
//! A `k`-tiling of the rank-`m` Aztec diamond is a `k`-tuple of ordinary
//! domino tilings. Each pair of colors contributes an *interaction* count,
//! and the generating polynomial in the interaction parameter `t`
//! interpolates between `k` independent tilings (`t = 1`) and a single
//! tiling of a larger region (`t = 0`).
//!
//! Modules, bottom up:
//! - [`algebra`]: exact Laurent polynomials over big rationals.
//! - [`partitions`]: partitions, interlacing, Maya windows.
//! - [`aztec`]: domino tilings, enumeration, flips.
//! - [`encodings`]: purple-gray and white-pink particle sequences, weights,
//!   interaction counts.
//! - [`vertex`]: colored vertex weights, Yang–Baxter checks, lattice
//!   partition functions.
//! - [`schroder`]: Schröder path families.
//! - [`bijections`]: the `t = 0` bijection and the diagonal involution.
//! - [`hexagon`]: colored lozenge tilings and their generating functions.
//! - [`sampler`]: seeded Markov chain sampling.
//! - [`arctic`]: limit-shape curves and frozen-region classification.
//! - [`render`]: text and SVG pictures.

pub mod algebra;
pub mod arctic;
pub mod bijections;
pub mod aztec;
pub mod encodings;
pub mod error;
pub mod golden;
pub mod hexagon;
pub mod partitions;
pub mod render;
pub mod sampler;
pub mod schroder;
pub mod vertex;

pub use error::{Error, Result};
