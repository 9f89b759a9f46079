//! Minimal integer polynomials in four variables.
//!
//! Just enough symbolic algebra to prove coordinate identities like the ♥
//! composition law: expand both sides over the variables a, b, c, d and
//! check that the difference collapses to the zero polynomial. Terms map a
//! monomial's exponent vector to its integer coefficient; zero coefficients
//! are never stored, so `is_zero` is an emptiness check.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// A polynomial with integer coefficients in variables a, b, c, d.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<[u8; 4], BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Poly::zero();
        if c != 0 {
            p.terms.insert([0; 4], BigInt::from(c));
        }
        p
    }

    /// The variable with the given index: 0 ↦ a, 1 ↦ b, 2 ↦ c, 3 ↦ d.
    pub fn var(index: usize) -> Self {
        assert!(index < 4, "only four variables available");
        let mut exps = [0u8; 4];
        exps[index] = 1;
        let mut p = Poly::zero();
        p.terms.insert(exps, BigInt::from(1));
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn square(&self) -> Self {
        self * self
    }

    fn add_term(&mut self, exps: [u8; 4], coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.add_term(*exps, coeff.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.add_term(*exps, -coeff.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (le, lc) in &self.terms {
            for (re, rc) in &rhs.terms {
                let exps = [le[0] + re[0], le[1] + re[1], le[2] + re[2], le[3] + re[3]];
                out.add_term(exps, lc * rc);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        &Poly::zero() - self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let a = Poly::var(0);
        let b = Poly::var(1);
        let lhs = &a.square() - &b.square();
        let rhs = &(&a + &b) * &(&a - &b);
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn two_square_identity() {
        // (a²+b²)(c²+d²) = (ac−bd)² + (ad+bc)²
        let [a, b, c, d] = [Poly::var(0), Poly::var(1), Poly::var(2), Poly::var(3)];
        let lhs = &(&a.square() + &b.square()) * &(&c.square() + &d.square());
        let rhs = &(&(&a * &c) - &(&b * &d)).square() + &(&(&a * &d) + &(&b * &c)).square();
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = Poly::var(0);
        assert!((&a - &a).is_zero());
        assert!(Poly::constant(0).is_zero());
        assert!(!Poly::constant(3).is_zero());
    }
}
