//! Tutte and Potts polynomials, and how the coflow count collapses on a non-regular matroid.

use apoly::algebra::rational::int;
use apoly::coflow::{at_q, brute_coflow_histogram, Config};
use apoly::corpus::named_fixture;
use apoly::matroid::{Digraph, OrientedMatroid};
use apoly::tutte::{potts, tutte};

fn main() -> apoly::Result<()> {
    let cfg = Config::default();

    let k4 = Digraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let om = OrientedMatroid::from_digraph(&k4)?;
    let t = tutte(&om, &cfg)?;
    println!("T(K4; x, y) = {}", t.to_string_with(&["x", "y"]));
    println!("T(K4; 2, 0) = {} acyclic orientations", t.eval(&[int(2), int(0)]));
    println!("T(K4; 1, 1) = {} spanning trees", t.eval(&[int(1), int(1)]));
    println!("Z(K4; q, y) = {}", potts(&om, &cfg)?.to_string_with(&["q", "y"]));

    // U(2,4) has a real representation but no totally unimodular one.
    let u24 = named_fixture("U24-assume-tu")?.instance.om;
    let z = potts(&u24, &cfg)?;
    println!("T(U24) = {}", tutte(&u24, &cfg)?.to_string_with(&["x", "y"]));
    println!("Z(U24; 3, y) = {}", at_q(&z, &int(3)).to_string_with(&["q", "y"]));
    let h = brute_coflow_histogram(&u24, 3, &cfg)?;
    println!("but U24 has only {} coflow over Z/3", h.total());
    Ok(())
}
