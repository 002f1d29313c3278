//! Suite dispatch over single instances and whole corpora.

use std::str::FromStr;

use crate::cocycle::verify_class_counts;
use crate::coflow::Config;
use crate::error::{Error, Result};
use crate::identities::{
    is_regular, negative_controls, verify_basic, verify_duality, verify_expansions, verify_reciprocity, verify_recurrences,
    verify_tutte_relations, CheckReport,
};
use crate::io::Instance;
use crate::partial::{pom_from_instance, verify_pom};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Basic,
    Tutte,
    Expansions,
    Reciprocity,
    Duality,
    Recurrences,
    Pom,
    Classes,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Basic,
        Suite::Tutte,
        Suite::Expansions,
        Suite::Reciprocity,
        Suite::Duality,
        Suite::Recurrences,
        Suite::Pom,
        Suite::Classes,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Basic => "basic",
            Suite::Tutte => "tutte",
            Suite::Expansions => "expansions",
            Suite::Reciprocity => "reciprocity",
            Suite::Duality => "duality",
            Suite::Recurrences => "recurrences",
            Suite::Pom => "pom",
            Suite::Classes => "classes",
        }
    }

    /// `all` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',').map(Suite::from_str).collect()
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

pub fn run_suite(suite: Suite, inst: &Instance, cfg: &Config) -> Result<Vec<CheckReport>> {
    match suite {
        Suite::Basic => verify_basic(inst, cfg),
        Suite::Tutte => verify_tutte_relations(inst, cfg),
        Suite::Expansions => verify_expansions(inst, cfg),
        Suite::Reciprocity => verify_reciprocity(inst, cfg),
        Suite::Duality => verify_duality(inst, cfg),
        Suite::Recurrences => verify_recurrences(inst, cfg),
        Suite::Pom if !is_regular(&inst.om) => negative_controls(inst, cfg),
        Suite::Pom => verify_pom(&pom_from_instance(inst)?, &inst.name, cfg),
        Suite::Classes => verify_class_counts(inst, cfg),
    }
}

/// Runs the suites over the instances on `jobs` threads; reports come back ordered by instance name.
pub fn run_corpus(suites: &[Suite], instances: &[Instance], cfg: &Config, jobs: usize) -> Result<Vec<CheckReport>> {
    let mut order: Vec<&Instance> = instances.iter().collect();
    order.sort_by(|a, b| a.name.cmp(&b.name));
    let jobs = jobs.max(1).min(order.len().max(1));
    let chunks: Vec<Vec<(usize, &Instance)>> =
        (0..jobs).map(|j| order.iter().copied().enumerate().skip(j).step_by(jobs).collect()).collect();
    let results: Vec<Result<Vec<(usize, Vec<CheckReport>)>>> = std::thread::scope(|s| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| {
                s.spawn(move || {
                    chunk
                        .into_iter()
                        .map(|(i, inst)| {
                            let mut reports = Vec::new();
                            for &suite in suites {
                                reports.extend(run_suite(suite, inst, cfg)?);
                            }
                            Ok((i, reports))
                        })
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut all = Vec::new();
    for r in results {
        all.extend(r?);
    }
    all.sort_by_key(|(i, _)| *i);
    Ok(all.into_iter().flat_map(|(_, r)| r).collect())
}
