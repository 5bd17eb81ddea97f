//! Dense univariate polynomials over an arbitrary commutative ring, and the
//! extension ring `R[X]` as a ring object. Characteristic polynomials are
//! computed with the division-free determinant over this extension, which
//! keeps them valid over rings with zero divisors.

use std::fmt;

use num_bigint::BigInt;

use crate::rings::CommutativeRing;

/// Coefficients in ascending degree, no trailing zeros (zero = empty vec).
#[derive(Debug, Clone)]
pub struct UniPoly<R: CommutativeRing> {
    coeffs: Vec<R::Element>,
}

impl<R: CommutativeRing> PartialEq for UniPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: CommutativeRing> Eq for UniPoly<R> {}

impl<R: CommutativeRing> UniPoly<R> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(ring: &R, c: R::Element) -> Self {
        Self::from_coeffs(ring, vec![c])
    }

    pub fn one(ring: &R) -> Self {
        Self::constant(ring, ring.one())
    }

    /// The indeterminate `X`.
    pub fn x(ring: &R) -> Self {
        Self::from_coeffs(ring, vec![ring.zero(), ring.one()])
    }

    pub fn from_coeffs(ring: &R, coeffs: Vec<R::Element>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().map(|c| ring.is_zero(c)).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[R::Element] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, ring: &R, k: usize) -> R::Element {
        self.coeffs.get(k).cloned().unwrap_or_else(|| ring.zero())
    }

    pub fn add(&self, ring: &R, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(ring.add(&self.coeff(ring, k), &other.coeff(ring, k)));
        }
        Self::from_coeffs(ring, out)
    }

    pub fn neg(&self, ring: &R) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| ring.neg(c)).collect() }
    }

    pub fn sub(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn mul(&self, ring: &R, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        Self::from_coeffs(ring, out)
    }

    /// Horner evaluation at a ring element.
    pub fn eval(&self, ring: &R, at: &R::Element) -> R::Element {
        let mut acc = ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = ring.add(&ring.mul(&acc, at), c);
        }
        acc
    }

    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*X"),
                _ => format!("({c})*X^{k}"),
            })
            .collect();
        parts.join(" + ")
    }
}

impl<R: CommutativeRing> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// The polynomial extension `R[X]` as a ring object over a base ring value.
#[derive(Debug, Clone)]
pub struct PolyExtRing<R: CommutativeRing> {
    base: R,
}

impl<R: CommutativeRing> PolyExtRing<R> {
    pub fn new(base: R) -> Self {
        PolyExtRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }
}

impl<R: CommutativeRing> CommutativeRing for PolyExtRing<R> {
    type Element = UniPoly<R>;

    fn zero(&self) -> UniPoly<R> {
        UniPoly::zero()
    }
    fn one(&self) -> UniPoly<R> {
        UniPoly::one(&self.base)
    }
    fn add(&self, a: &UniPoly<R>, b: &UniPoly<R>) -> UniPoly<R> {
        a.add(&self.base, b)
    }
    fn neg(&self, a: &UniPoly<R>) -> UniPoly<R> {
        a.neg(&self.base)
    }
    fn mul(&self, a: &UniPoly<R>, b: &UniPoly<R>) -> UniPoly<R> {
        a.mul(&self.base, b)
    }
    fn from_int(&self, n: &BigInt) -> UniPoly<R> {
        UniPoly::constant(&self.base, self.base.from_int(n))
    }
    fn name(&self) -> String {
        format!("{}[X]", self.base.name())
    }
    fn is_integral(&self) -> bool {
        self.base.is_integral()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{IntegerRing, ModRing};

    #[test]
    fn arithmetic_over_mod_ring() {
        let z6 = ModRing::from_u64(6);
        let ext = PolyExtRing::new(z6.clone());
        // (1 + 3X)(1 + 2X) = 1 + 5X + 6X^2 = 1 + 5X over Z/6
        let a = UniPoly::from_coeffs(&z6, vec![z6.element(1), z6.element(3)]);
        let b = UniPoly::from_coeffs(&z6, vec![z6.element(1), z6.element(2)]);
        let prod = ext.mul(&a, &b);
        assert_eq!(prod, UniPoly::from_coeffs(&z6, vec![z6.element(1), z6.element(5)]));
        assert_eq!(prod.degree(), Some(1));
    }

    #[test]
    fn eval_by_horner() {
        let z = IntegerRing;
        let p = UniPoly::from_coeffs(&z, vec![1.into(), (-2).into(), 1.into()]);
        assert_eq!(p.eval(&z, &5.into()), 16.into());
        assert_eq!(p.eval(&z, &1.into()), 0.into());
    }
}
