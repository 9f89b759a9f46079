//! Algebra elements as exact coefficient vectors.
//!
//! An [`Element`] is a vector of [`Rational`] coefficients over a fixed
//! orthonormal basis. Index 0 is the algebra unit; indices 1.. span the
//! imaginary subspace (the orthogonal complement of the real line). The
//! module provides the Euclidean structure — inner product, squared norm —
//! and two predicates used throughout the table derivations:
//!
//! * [`Element::equality_statement_holds`]: the triangle inequality is tight
//!   and the norms agree, which characterises `x = y`;
//! * [`Element::orthogonal`]: vanishing inner product, which for unit
//!   vectors is the same as `norm_sq(x + y) = 2`.
//!
//! Norms are always carried in squared form so they stay rational.

use crate::scalar::Rational;
use crate::{check_same_dim, Error};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

/// A vector of exact rational coefficients over a fixed basis.
///
/// The dimension is the coefficient count; binary operations check it and
/// fail loudly on mismatch rather than zero-extending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    coeffs: Vec<Rational>,
}

impl Element {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "element must have at least one coordinate"
        );
        Element { coeffs }
    }

    /// Convenience constructor from integers, mostly for tests and the CLI.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Element::new(coeffs.iter().map(|&n| Rational::from_integer(n)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        Element::new(vec![Rational::zero(); dim])
    }

    /// The basis vector e_index (unit coefficient at `index`, zero elsewhere).
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(
            index < dim,
            "basis index {index} out of range for dimension {dim}"
        );
        let mut coeffs = vec![Rational::zero(); dim];
        coeffs[index] = Rational::one();
        Element::new(coeffs)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, index: usize) -> &Rational {
        &self.coeffs[index]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Element) -> Result<Element, Error> {
        check_same_dim(self.dim(), other.dim())?;
        Ok(Element::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Element) -> Result<Element, Error> {
        check_same_dim(self.dim(), other.dim())?;
        Ok(Element::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element::new(self.coeffs.iter().map(|a| c * a).collect())
    }

    pub fn neg(&self) -> Element {
        Element::new(self.coeffs.iter().map(|a| -a).collect())
    }

    /// Euclidean inner product Σᵢ aᵢ·bᵢ.
    pub fn inner(&self, other: &Element) -> Result<Rational, Error> {
        check_same_dim(self.dim(), other.dim())?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Squared Euclidean norm Σᵢ xᵢ². Zero iff the element is zero.
    pub fn norm_sq(&self) -> Rational {
        self.coeffs.iter().map(Rational::square).sum()
    }

    /// Evaluates, entirely in rationals, the conjunction
    /// `‖x+y‖ = ‖x‖ + ‖y‖  ∧  ‖x‖ = ‖y‖`
    /// which holds iff `x = y` coordinatewise (tight triangle inequality
    /// forces non-negative collinearity; equal norms then force equality).
    ///
    /// Squared reformulation: with t = norm_sq(x+y) − norm_sq(x) − norm_sq(y)
    /// (twice the inner product), the first condition is t ≥ 0 and
    /// t² = 4·norm_sq(x)·norm_sq(y).
    pub fn equality_statement_holds(&self, other: &Element) -> Result<bool, Error> {
        let nx = self.norm_sq();
        let ny = other.norm_sq();
        let t = self.add(other)?.norm_sq() - &nx - &ny;
        let triangle_tight =
            !t.is_negative() && t.square() == Rational::from_integer(4) * &nx * &ny;
        Ok(triangle_tight && nx == ny)
    }

    /// True iff the inner product vanishes.
    pub fn orthogonal(&self, other: &Element) -> Result<bool, Error> {
        Ok(self.inner(other)?.is_zero())
    }
}

impl fmt::Display for Element {
    /// Renders the coefficient tuple, e.g. `(1, -2, 0, 5/3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Element {
    /// Serializes as a JSON array of rational strings, e.g. `["1","-2/3"]`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn elem(coeffs: &[i64]) -> Element {
        Element::from_integers(coeffs)
    }

    #[test]
    fn scaling() {
        assert_eq!(
            elem(&[1, 3]).scale(&Rational::from_integer(2)),
            elem(&[2, 6])
        );
        assert_eq!(elem(&[7, -2, 5]).scale(&Rational::zero()), Element::zero(3));
        assert_eq!(
            elem(&[1, -2, 0, 5]).scale(&Rational::from_integer(-1)),
            elem(&[-1, 2, 0, -5])
        );
    }

    #[test]
    fn inner_product() {
        assert_eq!(
            elem(&[1, 0]).inner(&elem(&[0, 1])).unwrap(),
            Rational::zero()
        );
        assert_eq!(
            elem(&[1, 2]).inner(&elem(&[3, 4])).unwrap(),
            Rational::from_integer(11)
        );
        let x = elem(&[2, -3, 5]);
        assert_eq!(x.inner(&x).unwrap(), x.norm_sq());
    }

    #[test]
    fn norm_sq_values() {
        assert_eq!(elem(&[1, 1]).norm_sq(), Rational::from_integer(2));
        assert_eq!(Element::zero(4).norm_sq(), Rational::zero());
        assert_eq!(elem(&[3, 4]).norm_sq(), Rational::from_integer(25));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = elem(&[1, 2]);
        let b = elem(&[1, 2, 3]);
        assert_eq!(
            a.add(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        assert_eq!(
            a.inner(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        assert!(a.orthogonal(&b).is_err());
        assert!(a.equality_statement_holds(&b).is_err());
    }

    #[test]
    fn equality_statement_characterises_equality() {
        // equal vectors: both conditions hold
        let x = elem(&[1, 0]);
        assert!(x.equality_statement_holds(&x).unwrap());

        // equal norms but not collinear: norm_sq(x+y) = 2, not 4
        assert!(!elem(&[1, 0])
            .equality_statement_holds(&elem(&[0, 1]))
            .unwrap());

        // collinear but unequal norms
        assert!(!elem(&[1, 0])
            .equality_statement_holds(&elem(&[2, 0]))
            .unwrap());

        // anti-collinear equal norms: t < 0 branch
        assert!(!elem(&[1, 0])
            .equality_statement_holds(&elem(&[-1, 0]))
            .unwrap());

        // both zero
        assert!(Element::zero(3)
            .equality_statement_holds(&Element::zero(3))
            .unwrap());
    }

    #[test]
    fn orthogonality() {
        let e0 = Element::basis(2, 0);
        let e1 = Element::basis(2, 1);
        assert!(e0.orthogonal(&e1).unwrap());
        assert_eq!(e0.add(&e1).unwrap().norm_sq(), Rational::from_integer(2));

        let x = elem(&[2, 1]);
        assert!(!x.orthogonal(&x).unwrap());
        assert!(elem(&[1, 1]).orthogonal(&elem(&[1, -1])).unwrap());
    }

    #[test]
    fn orthogonal_rational_unit_vectors_sum_to_norm_sq_two() {
        // 3-4-5 pair: exact unit vectors with rational coordinates
        let x = Element::new(vec![Rational::new(3, 5), Rational::new(4, 5)]);
        let y = Element::new(vec![Rational::new(-4, 5), Rational::new(3, 5)]);
        assert_eq!(x.norm_sq(), Rational::one());
        assert_eq!(y.norm_sq(), Rational::one());
        assert!(x.orthogonal(&y).unwrap());
        assert_eq!(x.add(&y).unwrap().norm_sq(), Rational::from_integer(2));
    }

    prop_compose! {
        fn rational()(n in -9i64..=9, d in 1i64..=9) -> Rational {
            Rational::new(n, d)
        }
    }

    prop_compose! {
        fn element(dim: usize)(coeffs in prop::collection::vec(rational(), dim)) -> Element {
            Element::new(coeffs)
        }
    }

    /// Stereographic projection: any rational u ∈ ℚ^{n−1} yields an exact
    /// unit vector ((2u, 1−|u|²)) / (1+|u|²).
    fn unit_vector(u: &Element) -> Element {
        let u_sq = u.norm_sq();
        let denom = Rational::one() + &u_sq;
        let mut coeffs: Vec<Rational> = u
            .coeffs()
            .iter()
            .map(|c| Rational::from_integer(2) * c)
            .collect();
        coeffs.push(Rational::one() - &u_sq);
        Element::new(coeffs).scale(&(Rational::one() / denom))
    }

    proptest! {
        #[test]
        fn parallelogram_law(x in element(4), y in element(4)) {
            let sum = x.add(&y).unwrap().norm_sq();
            let diff = x.sub(&y).unwrap().norm_sq();
            let two = Rational::from_integer(2);
            prop_assert_eq!(sum + diff, &two * &x.norm_sq() + &two * &y.norm_sq());
        }

        #[test]
        fn unit_vectors_orthogonal_iff_sum_has_norm_sq_two(u in element(3), v in element(3)) {
            let x = unit_vector(&u);
            let y = unit_vector(&v);
            prop_assert_eq!(x.norm_sq(), Rational::one());
            prop_assert_eq!(y.norm_sq(), Rational::one());
            let orthogonal = x.orthogonal(&y).unwrap();
            let sum_two = x.add(&y).unwrap().norm_sq() == Rational::from_integer(2);
            prop_assert_eq!(orthogonal, sum_two);
        }

        #[test]
        fn equality_statement_agrees_with_coordinatewise_equality(
            x in element(4),
            y in element(4),
        ) {
            prop_assert_eq!(x.equality_statement_holds(&y).unwrap(), x == y);
            // force the positive branch too: random pairs are almost never equal
            prop_assert!(x.equality_statement_holds(&x).unwrap());
        }
    }
}
