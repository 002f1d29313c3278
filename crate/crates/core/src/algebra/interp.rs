use std::collections::HashSet;

use num_traits::{One, Zero};

use super::poly::{TriPoly, UniPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Lagrange basis for a fixed node set, reusable across many value vectors.
#[derive(Clone, Debug)]
pub struct Interpolator {
    nodes: Vec<Rational>,
    basis: Vec<UniPoly>,
}

impl Interpolator {
    pub fn new(nodes: &[Rational]) -> Result<Self> {
        let mut seen = HashSet::new();
        for x in nodes {
            if !seen.insert(x.clone()) {
                return Err(Error::DuplicateNode(x.to_string()));
            }
        }
        let x = UniPoly::var(0);
        let basis = nodes
            .iter()
            .enumerate()
            .map(|(i, xi)| {
                let mut num = UniPoly::one();
                let mut den = Rational::one();
                for (j, xj) in nodes.iter().enumerate() {
                    if i != j {
                        num = &num * &(&x - &UniPoly::constant(xj.clone()));
                        den *= xi - xj;
                    }
                }
                num.scale(&(Rational::one() / den))
            })
            .collect();
        Ok(Self { nodes: nodes.to_vec(), basis })
    }

    pub fn nodes(&self) -> &[Rational] {
        &self.nodes
    }

    /// The unique polynomial of degree below the node count through `values`.
    pub fn fit(&self, values: &[Rational]) -> UniPoly {
        assert_eq!(values.len(), self.nodes.len());
        let mut out = UniPoly::zero();
        for (b, v) in self.basis.iter().zip(values) {
            if !v.is_zero() {
                out = out + b.scale(v);
            }
        }
        out
    }
}

pub fn interpolate(points: &[(Rational, Rational)]) -> Result<UniPoly> {
    let nodes: Vec<Rational> = points.iter().map(|p| p.0.clone()).collect();
    let values: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
    Ok(Interpolator::new(&nodes)?.fit(&values))
}

/// Homogenized substitutions used by the expansion and duality identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomogMode {
    /// (1+y)^i (1+z)^j (1+y+z)^(n-i-j)
    Shifted,
    /// y^i z^j (1+y+z)^(n-i-j)
    Plain,
    /// (y-1)^i (z-1)^j (y+z-1)^(n-i-j)
    Dual,
}

/// Replaces every term `c q^k y^i z^j` of `p` by `c q^k u^i v^j w^(n-i-j)`
/// with `(u, v, w)` chosen by `mode`.
pub fn homog_substitute(p: &TriPoly, n: u32, mode: HomogMode) -> Result<TriPoly> {
    let degree = p.degree_over(&[1, 2]);
    if degree > n {
        return Err(Error::DegreeExceedsHomogenizer { degree, n });
    }
    let one = TriPoly::one();
    let y = TriPoly::var(1);
    let z = TriPoly::var(2);
    let (u, v, w) = match mode {
        HomogMode::Shifted => (&one + &y, &one + &z, &(&one + &y) + &z),
        HomogMode::Plain => (y.clone(), z.clone(), &(&one + &y) + &z),
        HomogMode::Dual => (&y - &one, &z - &one, &(&y + &z) - &one),
    };
    let mut out = TriPoly::zero();
    for (e, c) in p.terms() {
        let mut t = TriPoly::monomial([e[0], 0, 0], c.clone());
        t = &t * &u.pow(e[1]);
        t = &t * &v.pow(e[2]);
        t = &t * &w.pow(n - e[1] - e[2]);
        out = out + t;
    }
    Ok(out)
}
