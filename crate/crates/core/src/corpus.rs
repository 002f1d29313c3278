//! Test corpus: small digraphs, doubled graphs and named fixtures.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::io::{digraph_to_json, matrix_to_json, parse_instance, Instance};
use crate::matroid::digraph::default_label;
use crate::matroid::Digraph;

/// Named fixtures in the default corpus.
pub const DEFAULT_NAMED: [&str; 5] = ["fig-exp-Apoly", "fig-cocycle-classes", "U24-assume-tu", "partially-oriented", "P2"];

/// Every fixture name `named_fixture` understands.
pub const ALL_NAMED: [&str; 6] = ["fig-exp-Apoly", "fig-cocycle-classes", "U24-assume-tu", "partially-oriented", "P2", "R10"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub max_vertices: usize,
    pub max_arcs: usize,
    pub include_doubled: bool,
    pub max_doubled_edges: usize,
    pub named: Vec<String>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        Self {
            max_vertices: 4,
            max_arcs: 5,
            include_doubled: true,
            max_doubled_edges: 4,
            named: DEFAULT_NAMED.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl CorpusSpec {
    pub fn empty() -> Self {
        Self { max_vertices: 0, max_arcs: 0, include_doubled: false, max_doubled_edges: 0, named: vec![] }
    }
}

/// An instance together with the JSON it was parsed from.
#[derive(Clone, Debug)]
pub struct Entry {
    pub instance: Instance,
    pub json: Value,
}

fn entry(json: Value, assume_tu: bool) -> Result<Entry> {
    let name = json["name"].as_str().unwrap_or("unnamed").to_string();
    let instance = parse_instance(&json.to_string(), &name, assume_tu)?;
    Ok(Entry { instance, json })
}

fn edges_json(name: &str, source: &str, vertices: usize, edges: &[(usize, usize, bool)]) -> Value {
    let edges: Vec<Value> = edges
        .iter()
        .map(|&(u, v, directed)| json!([u.to_string(), v.to_string(), if directed { "directed" } else { "undirected" }]))
        .collect();
    json!({"name": name, "source": source, "vertices": vertices, "edges": edges})
}

pub fn named_fixture(name: &str) -> Result<Entry> {
    let arcs_json = |vertices: usize, arcs: &[(usize, usize)], source: &str| {
        let d = Digraph::new(vertices, arcs.to_vec()).expect("fixture arcs are valid");
        digraph_to_json(&d, name, Some(source))
    };
    match name {
        "fig-exp-Apoly" => entry(
            arcs_json(
                3,
                &[(0, 1), (1, 0), (1, 2), (2, 0)],
                "digon on u, v closed into a triangle through w; worked A-polynomial example",
            ),
            false,
        ),
        "fig-cocycle-classes" => entry(
            arcs_json(
                4,
                &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 3)],
                "directed triangle with a pendant path; three cocycle reversing classes",
            ),
            false,
        ),
        "U24-assume-tu" => {
            let rows = vec![vec![1, 0, 1, 1], vec![0, 1, 1, -1]];
            let labels: Vec<String> = (0..4).map(default_label).collect();
            entry(matrix_to_json(&rows, &labels, name, Some("uniform matroid U(2,4), not regular; negative control"), true), true)
        }
        "R10" => {
            let d = [[-1, 1, 0, 0, 1], [1, -1, 1, 0, 0], [0, 1, -1, 1, 0], [0, 0, 1, -1, 1], [1, 0, 0, 1, -1]];
            let rows: Vec<Vec<i64>> =
                (0..5).map(|i| (0..5).map(|j| (i == j) as i64).chain(d[i].iter().copied()).collect()).collect();
            let labels: Vec<String> = (0..10).map(default_label).collect();
            entry(matrix_to_json(&rows, &labels, name, Some("standard totally unimodular representation of R10"), false), false)
        }
        "partially-oriented" => entry(
            edges_json(
                name,
                "partially oriented graph with three oriented and two unoriented edges",
                4,
                &[(0, 1, true), (1, 2, false), (2, 0, true), (2, 3, false), (3, 0, true)],
            ),
            false,
        ),
        "P2" => entry(
            edges_json(
                name,
                "triangle of unoriented edges a, b, c with an oriented edge parallel to a",
                3,
                &[(0, 1, false), (1, 2, false), (0, 2, false), (0, 1, true)],
            ),
            false,
        ),
        other => Err(Error::InvalidArgument(format!("unknown fixture {other:?}; known: {}", ALL_NAMED.join(", ")))),
    }
}

/// Multisets of `k` arcs over `n` vertices, with every vertex incident to some arc.
fn arc_multisets(n: usize, k: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        let arcs: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
        let touched = arcs.iter().fold(0u32, |m, &(u, v)| m | 1 << u | 1 << v);
        if touched.count_ones() as usize == n {
            out.push(arcs);
        }
        // Next non-decreasing index sequence.
        let Some(pos) = (0..k).rev().find(|&i| idx[i] + 1 < pairs.len()) else { break };
        let v = idx[pos] + 1;
        for x in &mut idx[pos..] {
            *x = v;
        }
    }
    out
}

fn vertex_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    out
}

fn canonical_arcs(arcs: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut a: Vec<(usize, usize)> = arcs.iter().map(|&(u, v)| (p[u], p[v])).collect();
            a.sort_unstable();
            a
        })
        .min()
        .unwrap_or_default()
}

/// Digraphs without isolated vertices, one per oriented matroid and component count.
pub fn digraphs(max_vertices: usize, max_arcs: usize) -> Vec<Digraph> {
    let mut seen_shape = BTreeSet::new();
    let mut seen_key = BTreeSet::new();
    let mut out = Vec::new();
    if max_vertices >= 1 {
        // The arcless digraph stands for the empty matroid.
        seen_key.insert((String::from("0:"), 1));
        out.push(Digraph::new(1, vec![]).unwrap());
    }
    for k in 1..=max_arcs {
        for n in 1..=max_vertices.min(2 * k) {
            let perms = vertex_permutations(n);
            for arcs in arc_multisets(n, k) {
                if !seen_shape.insert((n, canonical_arcs(&arcs, &perms))) {
                    continue;
                }
                let d = Digraph::new(n, arcs).unwrap();
                let om = crate::matroid::OrientedMatroid::from_digraph(&d).unwrap();
                if seen_key.insert((om.isomorphism_key(), d.components())) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Underlying graphs with at most `max_edges` edges, one per matroid, as all-unoriented edge lists.
pub fn doubled_graphs(max_edges: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 1..=max_edges {
        for n in 1..=(k + 1) {
            let perms = vertex_permutations(n);
            let mut shapes = BTreeSet::new();
            for arcs in arc_multisets(n, k) {
                if arcs.iter().any(|&(u, v)| u > v) {
                    continue;
                }
                if !shapes
                    .insert(canonical_arcs(&arcs, &perms).into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect::<Vec<_>>())
                {
                    continue;
                }
                let d = Digraph::new(n, arcs.clone()).unwrap();
                let om = crate::matroid::OrientedMatroid::from_digraph(&d).unwrap();
                // Orientation is irrelevant after doubling, so the unsigned key suffices.
                let key = om.double().isomorphism_key();
                if seen.insert(key) {
                    out.push((n, arcs));
                }
            }
        }
    }
    out
}

pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (i, d) in digraphs(spec.max_vertices, spec.max_arcs).into_iter().enumerate() {
        let name = format!("digraph-{:03}-v{}-a{}", i, d.vertices(), d.arcs().len());
        out.push(entry(digraph_to_json(&d, &name, None), false)?);
    }
    if spec.include_doubled {
        for (i, (n, arcs)) in doubled_graphs(spec.max_doubled_edges).into_iter().enumerate() {
            let name = format!("doubled-{:03}-e{}", i, arcs.len());
            let edges: Vec<(usize, usize, bool)> = arcs.iter().map(|&(u, v)| (u, v, false)).collect();
            out.push(entry(edges_json(&name, "all edges unoriented", n, &edges), false)?);
        }
    }
    for name in &spec.named {
        out.push(named_fixture(name)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_caps() {
        let ds = digraphs(2, 2);
        let shapes: Vec<Vec<(usize, usize)>> = ds.iter().map(|d| d.arcs().to_vec()).collect();
        assert!(shapes.contains(&vec![(0, 1), (1, 0)]), "digon");
        assert!(shapes.contains(&vec![(0, 1), (0, 1)]), "parallel arcs");
        assert!(shapes.contains(&vec![(0, 0)]), "self-loop");
        assert!(shapes.contains(&vec![(0, 0), (0, 0)]), "two self-loops");
        assert!(build_corpus(&CorpusSpec::empty()).unwrap().is_empty());
    }

    #[test]
    fn named_fixtures_parse() {
        for name in ALL_NAMED {
            let e = named_fixture(name).unwrap();
            assert!(e.json["source"].is_string(), "{name}");
        }
        let r10 = named_fixture("R10").unwrap().instance.om;
        assert_eq!((r10.len(), r10.rank()), (10, 5));
        let p2 = named_fixture("P2").unwrap().instance;
        assert_eq!(p2.pairs.len(), 3);
    }

    #[test]
    fn keys_are_distinct() {
        let corpus = build_corpus(&CorpusSpec { named: vec![], ..CorpusSpec::default() }).unwrap();
        let keys: BTreeSet<(String, Option<usize>, bool)> = corpus
            .iter()
            .map(|e| {
                (
                    e.instance.om.isomorphism_key(),
                    e.instance.digraph.as_ref().map(|d| d.components()),
                    e.instance.pairs.is_empty(),
                )
            })
            .collect();
        assert_eq!(keys.len(), corpus.len());
    }
}
