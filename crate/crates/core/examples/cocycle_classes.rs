//! Classes of reorientations under cocycle reversal.

use apoly::cocycle::{omega_counts, omega_counts_by_signature, reorientation_classes, Universe};
use apoly::coflow::Config;
use apoly::corpus::named_fixture;

fn main() -> apoly::Result<()> {
    let cfg = Config::default();
    let om = named_fixture("fig-cocycle-classes")?.instance.om;

    let c = reorientation_classes(&om, Universe::Cocycles, &cfg)?;
    for (class, acyclic) in c.classes.iter().zip(&c.acyclic) {
        let members: Vec<String> = class.iter().map(|m| format!("{m:05b}")).collect();
        println!("{} {}", if *acyclic { "acyclic" } else { "cyclic " }, members.join(" "));
    }
    let by_union_find = omega_counts(&om, &cfg)?;
    assert_eq!(by_union_find, omega_counts_by_signature(&om)?);
    println!("{by_union_find:?}");

    let all = reorientation_classes(&om, Universe::All, &cfg)?;
    println!("{} classes over all {} reorientations", all.count(), 1 << om.len());
    Ok(())
}
