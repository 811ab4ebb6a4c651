//! Topological entropy, Randić indices and BFD-ordered extremal graphs.
//!
//! Everything in this crate is a pure function of an immutable [`Graph`] or
//! [`DegreeSequence`]. The crate is `no_std` and only needs `alloc`; file
//! formats, reports and the command-line front end live in the `grent` crate.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`graph`] | simple undirected graphs, degree statistics, connectivity |
//! | [`sequence`] | degree sequences, Havel–Hakimi test, tree sequences |
//! | [`random`] | seeded Erdős–Rényi generation |
//! | [`spectral`] | spectral radius, Perron vector, walk counts, maximum-entropy chain |
//! | [`randic`] | Randić indices, normalized Randić function, edge/vertex entropies |
//! | [`ordering`] | BFD-orderings, BFD realizations and trees, majorization |
//! | [`rewire`] | degree-preserving switches, hill climbing, assortativity |
//! | [`oracle`] | brute-force enumerators and closed-form spectra |
//!
//! Entropies are in bits throughout.

#![no_std]

extern crate alloc;

pub mod error;
pub mod graph;
mod numeric;
pub mod oracle;
pub mod ordering;
pub mod randic;
pub mod random;
pub mod rewire;
pub mod sequence;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{DegreeStats, Graph};
pub use ordering::BfdOrdering;
pub use randic::{AlphaProfile, AlphaRecord, AlphaStar};
pub use rewire::Switch;
pub use sequence::DegreeSequence;
pub use spectral::{MarkovChain, SpectralResult};
