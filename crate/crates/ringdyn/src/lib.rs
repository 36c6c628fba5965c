//! Exact models of the isometry algebra attached to an integral domain
//! acting on itself by multiplication and translation: affine partial
//! bijections over Z, Z[i], F2[t], and F2, the Boolean algebra of congruence
//! cosets, and the induced partial action on finite-precision completions.
//! The `suite` module mechanically verifies the defining relations, the
//! partial-representation axioms, the expectation intertwine, coherent
//! residue-family counts, topological freeness, and minimality.

pub mod clopen;
pub mod config;
pub mod error;
pub mod frac;
pub mod pmap;
pub mod profinite;
pub mod report;
pub mod ring;
pub mod sample;
pub mod suite;
pub mod words;

pub use error::{Error, Result};
pub use ring::{RingElement, RingId};
