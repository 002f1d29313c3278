//! JSON formats for polynomials, histograms and instances.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{rational, Poly, QMatrix, Rational};
use crate::coflow::CoflowHistogram;
use crate::error::{Error, Result};
use crate::matroid::{digraph::default_label, Digraph, MatroidOptions, OrientedMatroid};

pub fn poly_to_json<const N: usize>(p: &Poly<N>, vars: &[&str; N]) -> Value {
    let terms: Vec<Value> =
        p.terms().map(|(e, c)| json!({"exp": e.to_vec(), "num": c.numer().to_string(), "den": c.denom().to_string()})).collect();
    json!({"vars": vars.to_vec(), "terms": terms})
}

#[derive(Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    num: String,
    den: String,
}

pub fn poly_from_json<const N: usize>(v: &Value) -> Result<Poly<N>> {
    let pj: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    if pj.vars.len() != N {
        return Err(Error::Parse(format!("expected {N} variables, found {}", pj.vars.len())));
    }
    let mut p = Poly::zero();
    for t in pj.terms {
        let exp: [u32; N] = t.exp.try_into().map_err(|_| Error::Parse("exponent length mismatch".into()))?;
        p.add_term(exp, rational::parse(&format!("{}/{}", t.num, t.den))?);
    }
    Ok(p)
}

pub fn histogram_to_json(h: &CoflowHistogram) -> Value {
    let counts: Vec<Value> = h.counts.iter().map(|(&(g, l), &c)| json!([g, l, c])).collect();
    json!({"q": h.q, "counts": counts})
}

/// A vertex reference in an arc list: an index or a numeric string.
#[derive(Deserialize, Serialize, Clone, Debug)]
#[serde(untagged)]
enum VertexRef {
    Index(usize),
    Name(String),
}

impl VertexRef {
    fn index(&self) -> Result<usize> {
        match self {
            VertexRef::Index(i) => Ok(*i),
            VertexRef::Name(s) => s.parse().map_err(|_| Error::Parse(format!("vertex {s:?} is not an index"))),
        }
    }
}

/// Matrix entry: integer or rational string such as "-1/2".
#[derive(Deserialize, Clone, Debug)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize, Debug, Default)]
struct InstanceJson {
    name: Option<String>,
    source: Option<String>,
    vertices: Option<usize>,
    arcs: Option<Vec<(VertexRef, VertexRef)>>,
    labels: Option<Vec<String>>,
    rows: Option<Vec<Vec<Entry>>>,
    edges: Option<Vec<(VertexRef, VertexRef, String)>>,
    pairs: Option<Vec<(String, String)>>,
    assume_tu: Option<bool>,
}

/// A parsed input: the oriented matroid plus whatever extra structure the file carried.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub source: Option<String>,
    pub om: OrientedMatroid,
    pub digraph: Option<Digraph>,
    /// Opposite pairs forming the unoriented blocks of a partial orientation.
    pub pairs: Vec<(String, String)>,
}

pub fn parse_instance(text: &str, name: &str, assume_tu: bool) -> Result<Instance> {
    let ij: InstanceJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let name = ij.name.clone().unwrap_or_else(|| name.to_string());
    let mut pairs = ij.pairs.clone().unwrap_or_default();
    let (om, digraph) = if let Some(arcs) = &ij.arcs {
        let arcs: Vec<(usize, usize)> = arcs.iter().map(|(u, v)| Ok((u.index()?, v.index()?))).collect::<Result<_>>()?;
        let n = ij.vertices.unwrap_or_else(|| arcs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        let labels = ij.labels.clone().unwrap_or_else(|| (0..arcs.len()).map(default_label).collect());
        let d = Digraph::with_labels(n, arcs, labels)?;
        (OrientedMatroid::from_digraph(&d)?, Some(d))
    } else if let Some(edges) = &ij.edges {
        let mut arcs = Vec::new();
        let mut labels = Vec::new();
        for (i, (u, v, kind)) in edges.iter().enumerate() {
            let (u, v) = (u.index()?, v.index()?);
            let l = default_label(i);
            match kind.as_str() {
                "directed" => {
                    arcs.push((u, v));
                    labels.push(l);
                }
                "undirected" => {
                    arcs.push((u, v));
                    arcs.push((v, u));
                    labels.push(l.clone());
                    labels.push(format!("{l}'"));
                    pairs.push((l.clone(), format!("{l}'")));
                }
                other => return Err(Error::Parse(format!("edge kind {other:?} is neither directed nor undirected"))),
            }
        }
        let n = ij.vertices.unwrap_or_else(|| arcs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
        let d = Digraph::with_labels(n, arcs, labels)?;
        (OrientedMatroid::from_digraph(&d)?, Some(d))
    } else if let Some(rows) = &ij.rows {
        let cols = rows.first().map_or(ij.labels.as_ref().map_or(0, |l| l.len()), |r| r.len());
        let parsed: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| {
                if r.len() != cols {
                    return Err(Error::Parse("matrix rows have different lengths".into()));
                }
                r.iter()
                    .map(|e| match e {
                        Entry::Int(i) => Ok(rational::int(*i)),
                        Entry::Text(s) => rational::parse(s),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let labels = ij.labels.clone().unwrap_or_else(|| (0..cols).map(default_label).collect());
        let opts =
            if assume_tu || ij.assume_tu.unwrap_or(false) { MatroidOptions::assume_tu() } else { MatroidOptions::default() };
        (OrientedMatroid::from_matrix(&QMatrix::from_rows(parsed, cols), labels, opts)?, None)
    } else {
        return Err(Error::Parse("input needs one of \"arcs\", \"edges\" or \"rows\"".into()));
    };
    Ok(Instance { name, source: ij.source, om, digraph, pairs })
}

pub fn digraph_to_json(d: &Digraph, name: &str, source: Option<&str>) -> Value {
    let arcs: Vec<Value> = d.arcs().iter().map(|&(u, v)| json!([u.to_string(), v.to_string()])).collect();
    let mut v = json!({"name": name, "vertices": d.vertices(), "arcs": arcs, "labels": d.labels()});
    if let Some(s) = source {
        v["source"] = json!(s);
    }
    v
}

pub fn matrix_to_json(om_rows: &[Vec<i64>], labels: &[String], name: &str, source: Option<&str>, assume_tu: bool) -> Value {
    let mut v = json!({"name": name, "labels": labels, "rows": om_rows});
    if let Some(s) = source {
        v["source"] = json!(s);
    }
    if assume_tu {
        v["assume_tu"] = json!(true);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TriPoly;

    #[test]
    fn polynomial_json_round_trip() {
        let p = &(&TriPoly::var(0) * &TriPoly::var(1)).scale(&rational::frac(-3, 4)) + &TriPoly::one();
        let v = poly_to_json(&p, &["q", "y", "z"]);
        assert_eq!(v["terms"][0]["exp"], json!([0, 0, 0]));
        assert_eq!(poly_from_json::<3>(&v).unwrap(), p);
    }

    #[test]
    fn parses_digraph_matrix_and_shorthand() {
        let d = parse_instance(r#"{"vertices": 2, "arcs": [["0","1"],[1,0]]}"#, "digon", false).unwrap();
        assert_eq!(d.om.len(), 2);
        assert_eq!(d.om.rank(), 1);
        let m = parse_instance(r#"{"labels":["a","b"],"rows":[[1,"-1"]]}"#, "m", false).unwrap();
        assert_eq!(m.om.circuits().len(), 1);
        let p = parse_instance(r#"{"edges":[["0","1","undirected"],["1","2","directed"]]}"#, "p", false).unwrap();
        assert_eq!(p.om.labels(), &["a", "a'", "b"]);
        assert_eq!(p.pairs, vec![("a".to_string(), "a'".to_string())]);
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = parse_instance("{\n  \"arcs\": [[0, 1],\n}", "bad", false).unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
    }

    #[test]
    fn non_unimodular_matrix_needs_assume_tu() {
        let text = r#"{"rows":[[1,0,1,1],[0,1,1,-1]]}"#;
        assert!(matches!(parse_instance(text, "u", false), Err(Error::NotTotallyUnimodular(_))));
        assert!(parse_instance(text, "u", true).is_ok());
    }
}
