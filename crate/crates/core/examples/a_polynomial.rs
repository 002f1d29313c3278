//! The A-polynomial of a small digraph: a digon closed into a triangle.
//!
//! Run with `cargo run --example a_polynomial`.

use apoly::algebra::rational::int;
use apoly::coflow::{a_eval, a_poly, coflow_histogram, specialize_q, Config};
use apoly::matroid::{Digraph, OrientedMatroid};

fn main() -> apoly::Result<()> {
    // Arcs u->v, v->u, v->w, w->u.
    let d = Digraph::new(3, vec![(0, 1), (1, 0), (1, 2), (2, 0)])?;
    let om = OrientedMatroid::from_digraph(&d)?;
    let cfg = Config::default();

    let a = a_poly(&om, &cfg)?;
    println!("rank {} on {} elements", om.rank(), om.len());
    println!("A(q, y, z) = {}", a.to_string_with(&["q", "y", "z"]));

    // Any odd q can be read off the polynomial or counted directly.
    for q in [3, 5, 7] {
        let from_poly = specialize_q(&a, &int(q as i64));
        assert_eq!(from_poly, a_eval(&om, q, &cfg)?);
        println!("A({q}, y, z) = {}", from_poly.to_string_with(&["y", "z"]));
    }

    let h = coflow_histogram(&om, 5, &cfg)?;
    println!("5-coflows: {} in total", h.total());
    for ((g, l), c) in &h.counts {
        println!("  {c:>3} with {g} values in 1..2 and {l} in 3..4");
    }
    Ok(())
}
