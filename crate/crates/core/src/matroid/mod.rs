pub mod digraph;
pub mod oriented;
pub mod signed;

pub use digraph::Digraph;
pub use oriented::{Classification, MatroidOptions, OrientedMatroid, TuPolicy};
pub use signed::{Mask, SignedSubset};
