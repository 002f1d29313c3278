//! Builds a small corpus and runs all suites over it.

use apoly::coflow::Config;
use apoly::corpus::{build_corpus, CorpusSpec};
use apoly::identities::Status;
use apoly::verify::{run_corpus, Suite};

fn main() -> apoly::Result<()> {
    let spec = CorpusSpec { max_vertices: 3, max_arcs: 3, max_doubled_edges: 3, ..CorpusSpec::default() };
    let instances: Vec<_> = build_corpus(&spec)?.into_iter().map(|e| e.instance).collect();
    println!("{} instances", instances.len());

    let reports = run_corpus(&Suite::ALL, &instances, &Config::default(), 2)?;
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    println!("{} pass, {} xfail, {} fail", count(Status::Pass), count(Status::Xfail), count(Status::Fail));
    Ok(())
}
