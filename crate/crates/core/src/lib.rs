//! Maximal matroid degenerations in the weak order, labeled hypergraph
//! constraints, and a recursive circuit-variety decomposition driver.

pub mod catalog;
pub mod decomposition;
pub mod degenerations;
pub mod error;
pub mod hypergraph;
pub mod io;
pub mod isomorphism;
pub mod matroid;
pub mod set;
pub mod steiner;
pub mod structure;
pub mod weak_order;

pub use error::{Error, Result};
pub use hypergraph::{Edge, LabeledHypergraph};
pub use matroid::{Matroid, QuotientMap};
pub use set::Set;
