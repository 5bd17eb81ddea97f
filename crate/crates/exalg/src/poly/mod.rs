//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! `Polynomial` models an element of `Z[x1, .., xk]` as a map from exponent
//! vectors to nonzero integer coefficients. The ring carries a total order
//! built recursively: a nonzero polynomial is positive when its leading
//! coefficient with respect to the last variable is positive, down to the
//! usual order on `Z`. Sign, absolute value, comparison, gcd and the
//! desk-scale factorization into positive irreducibles all live here.

mod factor;
mod gcd;
mod parse;

pub use factor::{factor, gauss_lemma_check, Factorization};
pub use gcd::gcd;
pub use parse::{parse_polynomial, PolyParseError};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rings::{CommutativeRing, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operands live in different polynomial rings: {0} vs {1} variables")]
    NvarsMismatch(usize, usize),
    #[error("inexact division: remainder is nonzero")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("desk-scale limit exceeded: {0}")]
    DeskScaleLimit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Exponent vector of one monomial. Ordered lexicographically with the last
/// variable strongest, matching the recursive construction of the ring as
/// univariate polynomials in the last variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(vec![0; nvars]), c);
        }
        Polynomial { nvars, terms }
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, BigInt::from(c))
    }

    /// The single variable `x_{index+1}` (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index {index} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self::from_terms(nvars, vec![(exps, BigInt::one())])
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Vec<u32>, BigInt)>) -> Self {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars, "exponent vector length must equal nvars");
            if c.is_zero() {
                continue;
            }
            *map.entry(Monomial(exps)).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, v| !v.is_zero());
        Polynomial { nvars, terms: map }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().total_degree() == 0)
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        assert_eq!(exps.len(), self.nvars);
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading term under the ring's monomial order (last variable strongest).
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Degree in variable `index` (zero-based); `None` for the zero polynomial.
    pub fn degree_in(&self, index: usize) -> Option<u32> {
        assert!(index < self.nvars);
        self.terms.keys().map(|m| m.0[index]).max()
    }

    fn check_nvars(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            Err(PolyError::NvarsMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.checked_add(other).expect("nvars mismatch")
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_nvars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Ok(Polynomial { nvars: self.nvars, terms })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.checked_mul(other).expect("nvars mismatch")
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_nvars(other)?;
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = terms.entry(m).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Ok(Polynomial { nvars: self.nvars, terms })
    }

    pub fn mul_int(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Sign under the recursive order: the sign of the coefficient of the
    /// order-leading monomial. Zero polynomial has sign 0.
    pub fn sign(&self) -> i8 {
        match self.leading() {
            None => 0,
            Some((_, c)) => {
                if c.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == 1
    }

    pub fn abs(&self) -> Polynomial {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Total order of the ring: `p >= q` iff `p - q` is positive or zero.
    pub fn compare(&self, other: &Polynomial) -> Result<Ordering, PolyError> {
        self.check_nvars(other)?;
        Ok(match self.sub(other).sign() {
            1 => Ordering::Greater,
            0 => Ordering::Equal,
            _ => Ordering::Less,
        })
    }

    /// Exact division: returns `q` with `divisor * q = self`. Fails with
    /// `InexactDivision` when the divisor does not divide exactly.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_nvars(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (dm, dc) = divisor.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !dm.divides(&rm) {
                return Err(PolyError::InexactDivision);
            }
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            let mq = dm.quotient(&rm);
            let t = Polynomial::from_terms(self.nvars, vec![(mq.0.clone(), q.clone())]);
            rem = rem.sub(&t.mul(divisor));
            quot.insert(mq, q);
        }
        Ok(Polynomial { nvars: self.nvars, terms: quot })
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        !self.is_zero() && other.exact_div(self).is_ok()
    }

    /// View as a univariate polynomial in the last variable: coefficient of
    /// `x_k^d` at position `d`, each a polynomial in one fewer variable.
    pub fn to_univariate_last(&self) -> Vec<Polynomial> {
        assert!(self.nvars >= 1, "no variable to split off");
        let deg = self.degree_in(self.nvars - 1).unwrap_or(0) as usize;
        let mut coeffs = vec![Polynomial::zero(self.nvars - 1); deg + 1];
        for (m, c) in &self.terms {
            let d = m.0[self.nvars - 1] as usize;
            let inner = Monomial(m.0[..self.nvars - 1].to_vec());
            coeffs[d].terms.insert(inner, c.clone());
        }
        coeffs
    }

    pub fn from_univariate_last(coeffs: &[Polynomial], nvars: usize) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (d, coeff) in coeffs.iter().enumerate() {
            assert_eq!(coeff.nvars + 1, nvars);
            for (m, c) in &coeff.terms {
                let mut exps = m.0.clone();
                exps.push(d as u32);
                terms.insert(Monomial(exps), c.clone());
            }
        }
        Polynomial { nvars, terms }
    }

    /// Ring morphism determined by `x_i -> values[i]`; all images must share
    /// a variable count, which becomes the result's.
    pub fn substitute(&self, values: &[Polynomial]) -> Polynomial {
        assert_eq!(values.len(), self.nvars, "need one image per variable");
        let target = values.first().map(|p| p.nvars).unwrap_or(0);
        assert!(values.iter().all(|p| p.nvars == target));
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&values[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Relabel variables: variable `i` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        assert_eq!(perm.len(), self.nvars);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; self.nvars];
            for (i, &e) in m.0.iter().enumerate() {
                exps[perm[i]] += e;
            }
            terms.insert(Monomial(exps), c.clone());
        }
        Polynomial { nvars: self.nvars, terms }
    }

    /// Image under the unique morphism into a commutative ring sending
    /// `x_i` to `values[i]` and integers through repeated addition of one.
    pub fn eval_in_ring<R: CommutativeRing>(&self, ring: &R, values: &[R::Element]) -> R::Element {
        assert_eq!(values.len(), self.nvars);
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.from_int(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = ring.mul(&t, &ring.pow(&values[i], e as u64));
                }
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        self.eval_in_ring(&crate::rings::IntegerRing, point)
    }

    /// Gcd of all coefficients (nonnegative); zero for the zero polynomial.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Padding embedding into a ring with more variables (new variables are
    /// appended after the existing ones).
    pub fn embed(&self, nvars: usize) -> Polynomial {
        assert!(nvars >= self.nvars);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.resize(nvars, 0);
            terms.insert(Monomial(exps), c.clone());
        }
        Polynomial { nvars, terms }
    }

    /// Compact form without spaces, suitable as a matrix-file entry.
    pub fn to_compact_string(&self) -> String {
        self.render(false)
    }

    fn render(&self, spaced: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if spaced {
                out.push_str(if negative { " - " } else { " + " });
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.total_degree() == 0 {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(format!("x{}", i + 1));
                } else if e > 1 {
                    factors.push(format!("x{}^{}", i + 1, e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(true))
    }
}

/// The polynomial ring `Z[x1..xk]` as a ring object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    nvars: usize,
}

impl PolyRing {
    pub fn new(nvars: usize) -> Self {
        PolyRing { nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}

impl CommutativeRing for PolyRing {
    type Element = Polynomial;

    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars)
    }
    fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars)
    }
    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.add(b)
    }
    fn neg(&self, a: &Polynomial) -> Polynomial {
        a.neg()
    }
    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.mul(b)
    }
    fn from_int(&self, n: &BigInt) -> Polynomial {
        Polynomial::constant(self.nvars, n.clone())
    }
    fn name(&self) -> String {
        format!("Poly {}", self.nvars)
    }
    fn is_integral(&self) -> bool {
        true
    }
    fn is_unit(&self, a: &Polynomial) -> Result<bool, RingError> {
        Ok(a.as_constant().map(|c| c.abs().is_one()).unwrap_or(false))
    }
    fn invert(&self, a: &Polynomial) -> Result<Polynomial, RingError> {
        if self.is_unit(a)? {
            Ok(a.clone())
        } else {
            Err(RingError::NotInvertible(a.to_string()))
        }
    }
    fn is_zero_divisor(&self, a: &Polynomial) -> Result<bool, RingError> {
        Ok(a.is_zero())
    }
    fn exact_div(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial, RingError> {
        a.exact_div(b).map_err(|e| match e {
            PolyError::DivisionByZero => RingError::DivisionByZero,
            _ => RingError::InexactDivision(b.to_string(), a.to_string()),
        })
    }
}

#[cfg(test)]
mod tests;
