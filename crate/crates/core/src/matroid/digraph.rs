use crate::algebra::QMatrix;
use crate::error::{Error, Result};

/// Directed multigraph on vertices `0..vertices`; loops and parallel arcs allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    vertices: usize,
    arcs: Vec<(usize, usize)>,
    labels: Vec<String>,
}

impl Digraph {
    pub fn new(vertices: usize, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let labels = (0..arcs.len()).map(default_label).collect();
        Self::with_labels(vertices, arcs, labels)
    }

    pub fn with_labels(vertices: usize, arcs: Vec<(usize, usize)>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != arcs.len() {
            return Err(Error::InvalidArgument("one label per arc required".into()));
        }
        if let Some(&(u, v)) = arcs.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::InvalidArgument(format!("arc ({u}, {v}) leaves the vertex range 0..{vertices}")));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(l) = labels.iter().find(|l| !seen.insert(*l)) {
            return Err(Error::InvalidArgument(format!("duplicate arc label {l:?}")));
        }
        Ok(Self { vertices, arcs, labels })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Vertex-by-arc matrix: +1 at the head, -1 at the tail, zero column for a loop.
    pub fn incidence(&self) -> QMatrix {
        let mut rows = vec![vec![0i64; self.arcs.len()]; self.vertices];
        for (e, &(u, v)) in self.arcs.iter().enumerate() {
            if u != v {
                rows[v][e] = 1;
                rows[u][e] = -1;
            }
        }
        QMatrix::from_ints(&rows, self.arcs.len())
    }

    /// Number of weakly connected components, isolated vertices included.
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = self.vertices;
        for &(u, v) in &self.arcs {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps
    }
}

pub fn default_label(i: usize) -> String {
    const ALPHA: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if i < ALPHA.len() {
        (ALPHA[i] as char).to_string()
    } else {
        format!("e{i}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn incidence_signs_and_components() {
        let d = Digraph::new(4, vec![(0, 1), (1, 1), (2, 3)]).unwrap();
        let m = d.incidence();
        assert_eq!(m.column(0), vec![int(-1), int(1), int(0), int(0)]);
        assert!(m.column(1).iter().all(|x| *x == int(0)));
        assert_eq!(d.components(), 2);
    }

    #[test]
    fn rejects_bad_arcs() {
        assert!(Digraph::new(2, vec![(0, 2)]).is_err());
    }
}
