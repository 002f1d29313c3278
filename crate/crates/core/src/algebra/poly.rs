use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<const N: usize> {
    terms: BTreeMap<[u32; N], Rational>,
}

pub type UniPoly = Poly<1>;
pub type BiPoly = Poly<2>;
pub type TriPoly = Poly<3>;
pub type QuadPoly = Poly<4>;

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0; N], c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn monomial(exp: [u32; N], c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut exp = [0; N];
        exp[i] = 1;
        Self::monomial(exp, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ([u32; N], Rational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: [u32; N], c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32; N]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Largest sum of the exponents of `vars` over all terms.
    pub fn degree_over(&self, vars: &[usize]) -> u32 {
        self.terms.keys().map(|e| vars.iter().map(|&v| e[v]).sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Rational; N]) -> Rational {
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::one()]; N];
        let mut total = Rational::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for v in 0..N {
                let table = &mut powers[v];
                while table.len() <= exp[v] as usize {
                    let next = table.last().unwrap() * &point[v];
                    table.push(next);
                }
                t *= &table[exp[v] as usize];
            }
            total += t;
        }
        total
    }

    /// Substitute polynomial `subs[i]` for variable `i`.
    pub fn compose<const M: usize>(&self, subs: &[Poly<M>; N]) -> Poly<M> {
        let mut powers: Vec<Vec<Poly<M>>> = vec![vec![Poly::one()]; N];
        let mut out = Poly::zero();
        for (exp, c) in &self.terms {
            let mut t = Poly::<M>::constant(c.clone());
            for v in 0..N {
                let table = &mut powers[v];
                while table.len() <= exp[v] as usize {
                    let next = table.last().unwrap() * &subs[v];
                    table.push(next);
                }
                t = &t * &table[exp[v] as usize];
            }
            out = out + t;
        }
        out
    }

    /// Exact division by a monic linear factor `(x_var - root)`.
    pub fn div_linear(&self, var: usize, root: &Rational) -> Result<Self> {
        // Synthetic division along `var`, grouped by the other exponents.
        let mut groups: BTreeMap<[u32; N], BTreeMap<u32, Rational>> = BTreeMap::new();
        for (exp, c) in &self.terms {
            let mut key = *exp;
            key[var] = 0;
            groups.entry(key).or_default().insert(exp[var], c.clone());
        }
        let mut out = Self::zero();
        for (key, coeffs) in groups {
            let deg = *coeffs.keys().max().unwrap();
            let mut carry = Rational::zero();
            for d in (0..=deg).rev() {
                let a = coeffs.get(&d).cloned().unwrap_or_else(Rational::zero) + &carry;
                if d == 0 {
                    if !a.is_zero() {
                        return Err(Error::NonPolynomialResult(format!("nonzero remainder dividing by (x{var} - {root})")));
                    }
                } else {
                    let mut e = key;
                    e[var] = d - 1;
                    carry = &a * root;
                    out.add_term(e, a);
                }
            }
        }
        Ok(out)
    }

    /// Exact division by `x_var^k`.
    pub fn div_var_pow(&self, var: usize, k: u32) -> Result<Self> {
        let mut out = Self::zero();
        for (exp, c) in &self.terms {
            if exp[var] < k {
                return Err(Error::NonPolynomialResult(format!("term not divisible by x{var}^{k}")));
            }
            let mut e = *exp;
            e[var] -= k;
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Exponent of the first monomial (in lexicographic order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<[u32; N]> {
        let diff = self - other;
        diff.terms.keys().next().copied()
    }

    pub fn to_string_with(&self, vars: &[&str; N]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (exp, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = (0..N)
                .filter(|&v| exp[v] > 0)
                .map(|v| if exp[v] == 1 { vars[v].to_string() } else { format!("{}^{}", vars[v], exp[v]) })
                .collect();
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                s.push_str(&mono.join("*"));
            }
        }
        s
    }
}

impl<const N: usize> fmt::Debug for Poly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["q", "y", "z", "w", "v", "u"];
        let mut vars = [""; N];
        for (i, v) in vars.iter_mut().enumerate() {
            *v = names.get(i).copied().unwrap_or("t");
        }
        write!(f, "{}", self.to_string_with(&vars))
    }
}

impl<const N: usize> Add for Poly<N> {
    type Output = Poly<N>;
    fn add(mut self, rhs: Poly<N>) -> Poly<N> {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<const N: usize> Add<&Poly<N>> for &Poly<N> {
    type Output = Poly<N>;
    fn add(self, rhs: &Poly<N>) -> Poly<N> {
        self.clone() + rhs.clone()
    }
}

impl<const N: usize> Neg for Poly<N> {
    type Output = Poly<N>;
    fn neg(self) -> Poly<N> {
        Poly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<const N: usize> Sub for Poly<N> {
    type Output = Poly<N>;
    fn sub(self, rhs: Poly<N>) -> Poly<N> {
        self + (-rhs)
    }
}

impl<const N: usize> Sub<&Poly<N>> for &Poly<N> {
    type Output = Poly<N>;
    fn sub(self, rhs: &Poly<N>) -> Poly<N> {
        self.clone() - rhs.clone()
    }
}

impl<const N: usize> Mul<&Poly<N>> for &Poly<N> {
    type Output = Poly<N>;
    fn mul(self, rhs: &Poly<N>) -> Poly<N> {
        let mut out = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = [0; N];
                for v in 0..N {
                    e[v] = ea[v] + eb[v];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl<const N: usize> Mul for Poly<N> {
    type Output = Poly<N>;
    fn mul(self, rhs: Poly<N>) -> Poly<N> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;
    use proptest::prelude::*;

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(((0u32..4, 0u32..4), -5i64..6), 0..6)
            .prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|((a, b), c)| ([a, b], int(c)))))
    }

    #[test]
    fn zero_terms_are_dropped() {
        let x = BiPoly::var(0);
        let d = &x - &x;
        assert!(d.is_zero());
        assert_eq!(d, BiPoly::zero());
    }

    #[test]
    fn compose_and_eval() {
        // (x + 1)^2 at x = y*z, evaluated at y = 2, z = 3.
        let p = (UniPoly::var(0) + UniPoly::one()).pow(2);
        let yz = &BiPoly::var(0) * &BiPoly::var(1);
        let c = p.compose(&[yz]);
        assert_eq!(c.eval(&[int(2), int(3)]), int(49));
    }

    #[test]
    fn linear_division_detects_remainder() {
        let y = BiPoly::var(1);
        let p = (&y - &BiPoly::one()) * (&BiPoly::var(0) + &y);
        assert_eq!(p.div_linear(1, &int(1)).unwrap(), &BiPoly::var(0) + &y);
        assert!(p.div_linear(1, &int(2)).is_err());
    }

    #[test]
    fn display_is_readable() {
        let p = BiPoly::from_terms([([2, 0], int(1)), ([0, 1], frac(-1, 2)), ([0, 0], int(3))]);
        assert_eq!(p.to_string_with(&["x", "y"]), "x^2 - 1/2*y + 3");
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_bipoly(), b in arb_bipoly(), c in arb_bipoly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_bipoly(), b in arb_bipoly(), x in -4i64..5, y in -4i64..5) {
            let pt = [int(x), int(y)];
            prop_assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
            prop_assert_eq!((&a + &b).eval(&pt), a.eval(&pt) + b.eval(&pt));
        }

        #[test]
        fn division_inverts_multiplication(a in arb_bipoly(), r in -3i64..4) {
            let f = &BiPoly::var(1) - &BiPoly::int(r);
            prop_assert_eq!((&a * &f).div_linear(1, &int(r)).unwrap(), a);
        }
    }
}
