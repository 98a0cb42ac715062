//! Exact-arithmetic little-cubes toolkit: operad structure maps, the
//! envelope and Moore monoids built from interval configurations, piecewise
//! linear coherence loops with certified fillings, braid-word extraction,
//! and the planar-tree calculus.

// Errors carry the exact rational data that witnesses the failure, which
// makes the `Err` variants large; nothing here is on a hot path that would
// justify boxing them.
#![allow(clippy::result_large_err)]

pub mod braid;
pub mod envelope;
pub mod moore;
pub mod operad;
pub mod path;
pub mod rational;
pub mod sample;
pub mod suite;
pub mod term;
pub mod tree;
