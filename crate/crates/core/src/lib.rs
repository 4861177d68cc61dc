//! Hives, the bounded octahedron recurrence, and gl_n tableau crystals.
//!
//! A hive in `HIVE_{λμ}^ν` is an integer triangle satisfying the rhombus
//! inequalities; the number of them is the Littlewood-Richardson coefficient
//! `c_{λμ}^ν`. The octahedron recurrence evolves pairs of hives into pairs of
//! hives and realizes the associator and commutor of the tensor category on
//! hives, which the crystal side reproduces through jeu de taquin and the
//! Schützenberger involution.

pub mod bridge;
pub mod category;
pub mod crystal;
pub mod error;
pub mod hive;
pub mod spacetime;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use hive::{DominantWeight, Hive, QuasiHive, TriangleArray, TrianglePoint};
pub use spacetime::{LatticePoint, SectionEmbedding, SpacetimeState};
