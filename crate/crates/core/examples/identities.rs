//! Runs every identity suite on one instance read from JSON and prints the checks.

use apoly::coflow::Config;
use apoly::io::parse_instance;
use apoly::verify::{run_suite, Suite};

const INSTANCE: &str = r#"{
  "name": "bowtie",
  "vertices": 5,
  "arcs": [["0", "1"], ["1", "2"], ["2", "0"], ["2", "3"], ["3", "4"], ["4", "2"]]
}"#;

fn main() -> apoly::Result<()> {
    let inst = parse_instance(INSTANCE, "bowtie", false)?;
    let cfg = Config::default();
    for suite in Suite::ALL {
        let reports = run_suite(suite, &inst, &cfg)?;
        let ok = reports.iter().filter(|r| r.passed()).count();
        println!("{:<12} {ok}/{} checks hold", suite.name(), reports.len());
        for r in reports.iter().filter(|r| !r.passed()) {
            println!("  failed: {}", r.check);
        }
    }
    Ok(())
}
