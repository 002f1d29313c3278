use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, Rational};

/// Element `a + b*tau` of Q(tau) with `tau = exp(2*pi*i/3)`, so `tau^2 = -1 - tau`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub a: Rational,
    pub b: Rational,
}

impl Eisenstein {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self { a, b: Rational::zero() }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn tau() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// Complex conjugate: tau maps to tau^2 = -1 - tau.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -self.b.clone())
    }

    /// Field norm `x * conj(x)`, always rational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(Self::new(c.a / &n, c.b / &n))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.a * r, &self.b * r)
    }
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a - &o.a, &self.b - &o.b)
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-self.a.clone(), -self.b.clone())
    }
}

impl Mul for &Eisenstein {
    type Output = Eisenstein;
    fn mul(self, o: &Eisenstein) -> Eisenstein {
        // (a + b t)(c + d t) = ac + (ad + bc) t + bd t^2, with t^2 = -1 - t
        let bd = &self.b * &o.b;
        Eisenstein::new(&self.a * &o.a - &bd, &self.a * &o.b + &self.b * &o.a - bd)
    }
}

impl Div for &Eisenstein {
    type Output = Eisenstein;
    fn div(self, o: &Eisenstein) -> Eisenstein {
        self * &o.inverse().expect("division by zero in Q(tau)")
    }
}

impl From<i64> for Eisenstein {
    fn from(n: i64) -> Self {
        Self::from_rational(int(n))
    }
}
