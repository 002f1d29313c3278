//! A-polynomial of R10, the regular matroid that is neither graphic nor cographic.

use std::time::Instant;

use apoly::coflow::{a_poly, coflow_histogram, Config};
use apoly::corpus::named_fixture;
use apoly::tutte::tutte;

fn main() -> apoly::Result<()> {
    let om = named_fixture("R10")?.instance.om;
    let jobs = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let cfg = Config::with_jobs(jobs);

    let start = Instant::now();
    let a = a_poly(&om, &cfg)?;
    println!("A(R10) has {} terms, computed in {:.2?} on {jobs} thread(s)", a.len(), start.elapsed());
    for q in [3, 13] {
        println!("q = {q}: {} coflows", coflow_histogram(&om, q, &cfg)?.total());
    }
    println!("T(R10) = {}", tutte(&om, &cfg)?.to_string_with(&["x", "y"]));
    Ok(())
}
