//! Products of general elements, conjugation, inversion, and rotation.
//!
//! A [`StructureTable`] only records products of basis elements; bilinearity
//! extends it to arbitrary elements: x·y = Σ_{j,k} x_j y_k (e_j·e_k). On top
//! of that sit the standard conjugation (negate the imaginary part),
//! inversion x⁻¹ = conj(x)/norm_sq(x) — defined only through dimension 8,
//! since the 16-dimensional table has zero divisors — and the classic
//! application of quaternions: rotating a 3-vector as the imaginary part of
//! q·v·q⁻¹.
//!
//! Rotation deliberately accepts *unnormalized* quaternions. Exact rationals
//! cannot represent 1/√2, but q·v·q⁻¹ is homogeneous of degree 0 in q, so
//! scaling q changes nothing and every rotation reachable by a rational unit
//! quaternion is reachable exactly.

use crate::scalar::Rational;
use crate::table::{build_table, Sign, StructureTable};
use crate::{check_same_dim, Element, Error};
use std::sync::OnceLock;

/// The quaternion table, built once; rotation always runs over it.
fn quaternion_table() -> &'static StructureTable {
    static TABLE: OnceLock<StructureTable> = OnceLock::new();
    TABLE.get_or_init(|| build_table(4).expect("dimension 4 is always supported"))
}

/// Bilinear product of two elements through a structure table.
pub fn multiply(a: &Element, b: &Element, t: &StructureTable) -> Result<Element, Error> {
    check_same_dim(a.dim(), b.dim())?;
    check_same_dim(a.dim(), t.dim())?;
    let dim = t.dim();
    let mut coeffs = vec![Rational::zero(); dim];
    for j in 0..dim {
        if a.coeff(j).is_zero() {
            continue;
        }
        for k in 0..dim {
            if b.coeff(k).is_zero() {
                continue;
            }
            let cell = t.entry(j, k);
            let term = a.coeff(j) * b.coeff(k);
            coeffs[cell.index] = match cell.sign {
                Sign::Plus => &coeffs[cell.index] + &term,
                Sign::Minus => &coeffs[cell.index] - &term,
            };
        }
    }
    Ok(Element::new(coeffs))
}

/// Negates the imaginary part: conj(x)₀ = x₀, conj(x)ᵢ = −xᵢ for i ≥ 1.
pub fn conjugate(x: &Element) -> Element {
    let mut coeffs = Vec::with_capacity(x.dim());
    coeffs.push(x.coeff(0).clone());
    coeffs.extend(x.coeffs()[1..].iter().map(|c| -c));
    Element::new(coeffs)
}

/// x⁻¹ = conj(x)/norm_sq(x). Restricted to dimensions 1, 2, 4, 8: the
/// dimension-16 table has zero divisors, so inverses are not guaranteed
/// there and the contract excludes it outright.
pub fn inverse(x: &Element, t: &StructureTable) -> Result<Element, Error> {
    check_same_dim(x.dim(), t.dim())?;
    if t.dim() > 8 {
        return Err(Error::InverseUndefined(t.dim()));
    }
    if x.is_zero() {
        return Err(Error::ZeroInverse);
    }
    Ok(conjugate(x).scale(&(Rational::one() / x.norm_sq())))
}

/// A 3-vector of exact rationals, the object quaternions rotate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Vector3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Vector3 { x, y, z }
    }

    pub fn from_integers(x: i64, y: i64, z: i64) -> Self {
        Vector3::new(
            Rational::from_integer(x),
            Rational::from_integer(y),
            Rational::from_integer(z),
        )
    }

    pub fn norm_sq(&self) -> Rational {
        self.x.square() + self.y.square() + self.z.square()
    }

    /// Embeds as a purely imaginary quaternion (0, x, y, z).
    pub fn embed(&self) -> Element {
        Element::new(vec![
            Rational::zero(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        ])
    }
}

/// Rotates `v` by the (possibly unnormalized) nonzero quaternion `q`:
/// embeds v as (0, x, y, z), computes q·v·q⁻¹ in the quaternion table, and
/// returns the imaginary part. The scalar part vanishes identically.
pub fn rotate(q: &Element, v: &Vector3) -> Result<Vector3, Error> {
    check_same_dim(q.dim(), 4)?;
    if q.is_zero() {
        return Err(Error::ZeroRotation);
    }
    let t = quaternion_table();
    let q_inv = inverse(q, t)?;
    let image = multiply(&multiply(q, &v.embed(), t)?, &q_inv, t)?;
    debug_assert!(
        image.coeff(0).is_zero(),
        "conjugation must keep pure vectors pure"
    );
    Ok(Vector3::new(
        image.coeff(1).clone(),
        image.coeff(2).clone(),
        image.coeff(3).clone(),
    ))
}
