//! Tutte polynomials of a partially oriented matroid by four routes.

use apoly::coflow::Config;
use apoly::corpus::named_fixture;
use apoly::partial::{
    pom_from_instance, potential_bases, t_by_activities, t_by_expansion, t_by_recurrence, t_by_subsets, t_poly, Variant,
};

fn main() -> apoly::Result<()> {
    let cfg = Config::default();
    // Unoriented triangle a, b, c with one oriented edge parallel to a.
    let p = pom_from_instance(&named_fixture("P2")?.instance)?;
    // Only unoriented blocks are eliminated or ranked by activity.
    let h = p.unoriented();

    for v in [Variant::First, Variant::Second] {
        let t = t_poly(&p, v, &cfg)?;
        println!("{v:?}: {}", t.to_string_with(&["x", "y"]));
        assert_eq!(t, t_by_expansion(&p, v, &cfg)?);
        assert_eq!(t, t_by_recurrence(&p, v, &h, &cfg)?);
        assert_eq!(t, t_by_subsets(&p, v, &cfg)?);
        assert_eq!(t, t_by_activities(&p, v, &h, &cfg)?);
    }

    println!("potential bases over the unoriented blocks {h:?}:");
    for b in potential_bases(&p, &h) {
        println!("  {:?}  internal {:?}  external {:?}", b.basis, b.internal, b.external);
    }
    Ok(())
}
