//! The A-polynomial of a digraph from vertex colorings, and the B-polynomial.

use apoly::algebra::rational::int;
use apoly::coflow::{a_eval, a_poly, b_poly, digraph_a_eval, specialize_q, Config};
use apoly::matroid::{Digraph, OrientedMatroid};

fn main() -> apoly::Result<()> {
    let cfg = Config::default();
    let d = Digraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])?;
    let om = OrientedMatroid::from_digraph(&d)?;

    for q in [1, 3, 5] {
        let colorings = digraph_a_eval(&d, q, &cfg)?;
        assert_eq!(colorings, a_eval(&om, q, &cfg)?);
        println!("A({q}) = {}", colorings.to_string_with(&["y", "z"]));
    }

    let b = b_poly(&d, &cfg)?;
    println!("B(q, y, z) = {}", b.to_string_with(&["q", "y", "z"]));
    let a1 = specialize_q(&a_poly(&om, &cfg)?, &int(-1));
    let b1 = specialize_q(&b, &int(-1));
    println!("A(-1) = {}", a1.to_string_with(&["y", "z"]));
    println!("B(-1) = {} on {} component(s)", b1.to_string_with(&["y", "z"]), d.components());
    Ok(())
}
