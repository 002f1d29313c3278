//! Exact coflow polynomials of regular oriented matroids.
//!
//! Build an [`matroid::OrientedMatroid`] from a digraph or a totally
//! unimodular matrix, then compute its A-polynomial with [`coflow::a_poly`].
//! The [`identities`], [`partial`] and [`cocycle`] modules check the known
//! relations with Tutte-type invariants exactly, and [`verify`] runs them over
//! the generated [`corpus`].

pub mod algebra;
pub mod cocycle;
pub mod coflow;
pub mod corpus;
pub mod error;
pub mod identities;
pub mod io;
pub mod matroid;
pub mod partial;
pub mod tutte;
pub mod verify;

pub use error::{Error, Result};
