//! Strict and weak characteristic polynomials, and their even-q counterparts.

use apoly::coflow::{char_counts, char_polys, even_char_polys, Config};
use apoly::matroid::{Digraph, OrientedMatroid};

fn main() -> apoly::Result<()> {
    let cfg = Config::default();
    // Acyclic: a 4-cycle oriented from a source to a sink, plus a chord.
    let d = Digraph::new(4, vec![(0, 1), (1, 3), (0, 2), (2, 3), (1, 2)])?;
    let om = OrientedMatroid::from_digraph(&d)?;

    let c = char_polys(&om, &cfg)?;
    println!("strict: {}", c.strict.to_string_with(&["q"]));
    println!("weak:   {}", c.weak.to_string_with(&["q"]));
    for q in [3, 5, 7, 9] {
        let (s, w) = char_counts(&om, q, &cfg)?;
        println!("q = {q}: {s} strict, {w} weak");
    }

    let e = even_char_polys(&om, &cfg)?;
    println!("even strict: {}", e.strict.to_string_with(&["q"]));
    println!("even weak:   {}", e.weak.to_string_with(&["q"]));
    Ok(())
}
