//! The ♥ product: a plane multiplication with every good property but a unit.
//!
//! On ℝ² define (a,b)♥(c,d) = (ad+bc, ac−bd). This product is bilinear,
//! commutative, and norm-multiplicative — ‖x♥y‖ = ‖x‖·‖y‖ — yet no element
//! acts as a two-sided (or even one-sided) unit. It is the standard witness
//! that the unit axiom in the definition of a Euclidean Hurwitz algebra is
//! not implied by the other axioms.
//!
//! Unlike the doubling-tower algebras, ♥ is kept as a coordinate formula
//! rather than a [`StructureTable`](crate::StructureTable): its basis
//! products happen to be signed basis elements, but the grid does not
//! satisfy the tower's unit-row invariants, so forcing it into that type
//! would assert structure it only has by accident.

use crate::{check_same_dim, Element, Error};

/// Evaluates (a,b)♥(c,d) = (ad+bc, ac−bd) exactly. Both factors must live
/// in the plane.
pub fn heart_multiply(x: &Element, y: &Element) -> Result<Element, Error> {
    check_same_dim(x.dim(), 2)?;
    check_same_dim(y.dim(), 2)?;
    let (a, b) = (x.coeff(0), x.coeff(1));
    let (c, d) = (y.coeff(0), y.coeff(1));
    Ok(Element::new(vec![a * d + b * c, a * c - b * d]))
}
