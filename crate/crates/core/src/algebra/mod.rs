pub mod eisenstein;
pub mod f2;
pub mod interp;
pub mod matrix;
pub mod poly;
pub mod rational;

pub use eisenstein::Eisenstein;
pub use f2::F2Space;
pub use interp::{homog_substitute, interpolate, HomogMode, Interpolator};
pub use matrix::{QMatrix, TuStatus};
pub use poly::{BiPoly, Poly, QuadPoly, TriPoly, UniPoly};
pub use rational::Rational;
