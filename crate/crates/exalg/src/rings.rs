//! Commutative rings: the abstraction and the concrete instances used by the
//! rest of the kernel (arbitrary-precision integers, integers mod `n`,
//! rationals).
//!
//! Rings are values carrying their structure (a `ModRing` knows its modulus);
//! elements are plain immutable data. Decision procedures that a ring may or
//! may not support (unit test, zero-divisor test, exact division) are
//! "capabilities": a ring without one reports [`RingError::CapabilityAbsent`]
//! instead of guessing.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring {ring} does not provide the {capability} capability")]
    CapabilityAbsent { ring: String, capability: &'static str },
    #[error("element {0} is not invertible")]
    NotInvertible(String),
    #[error("inexact division: {0} does not divide {1}")]
    InexactDivision(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined on the zero ring (modulus 1)")]
    ZeroRing,
}

/// A commutative ring with identity.
///
/// `add`/`neg`/`mul` together with `zero`/`one` are total; the remaining
/// methods are optional capabilities. Implementations must keep elements
/// canonical (e.g. reduced representatives mod `n`, reduced fractions) so
/// that `==` decides equality.
pub trait CommutativeRing: Clone + fmt::Debug {
    type Element: Clone + PartialEq + Eq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Element) -> bool {
        *a == self.one()
    }

    /// Image of `n` under the unique ring morphism `Z -> R`.
    fn from_int(&self, n: &BigInt) -> Self::Element;

    fn from_i64(&self, n: i64) -> Self::Element {
        self.from_int(&BigInt::from(n))
    }

    fn pow(&self, a: &Self::Element, mut e: u64) -> Self::Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Short descriptor used in error messages and reports.
    fn name(&self) -> String;

    /// Whether the ring is an integral domain (gates the fraction-free
    /// elimination fast path).
    fn is_integral(&self) -> bool;

    fn is_unit(&self, _a: &Self::Element) -> Result<bool, RingError> {
        Err(RingError::CapabilityAbsent { ring: self.name(), capability: "is_unit" })
    }

    fn invert(&self, _a: &Self::Element) -> Result<Self::Element, RingError> {
        Err(RingError::CapabilityAbsent { ring: self.name(), capability: "invert" })
    }

    /// Zero-divisor test. Convention: in a nonzero ring, 0 is a zero divisor.
    fn is_zero_divisor(&self, _a: &Self::Element) -> Result<bool, RingError> {
        Err(RingError::CapabilityAbsent { ring: self.name(), capability: "is_zero_divisor" })
    }

    /// Exact division: returns `q` with `b * q = a`, or an error when `b`
    /// does not divide `a` (or the ring cannot decide divisibility).
    fn exact_div(&self, _a: &Self::Element, _b: &Self::Element) -> Result<Self::Element, RingError> {
        Err(RingError::CapabilityAbsent { ring: self.name(), capability: "exact_div" })
    }

    /// All elements of the ring, when it is finite and small enough to
    /// enumerate. Drives the brute-force kernel/image oracles.
    fn elements(&self) -> Option<Vec<Self::Element>> {
        None
    }
}

/// The ring of arbitrary-precision integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IntegerRing;

impl CommutativeRing for IntegerRing {
    type Element = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn name(&self) -> String {
        "Z".into()
    }
    fn is_integral(&self) -> bool {
        true
    }
    fn is_unit(&self, a: &BigInt) -> Result<bool, RingError> {
        Ok(a.abs().is_one())
    }
    fn invert(&self, a: &BigInt) -> Result<BigInt, RingError> {
        if a.abs().is_one() {
            Ok(a.clone())
        } else {
            Err(RingError::NotInvertible(a.to_string()))
        }
    }
    fn is_zero_divisor(&self, a: &BigInt) -> Result<bool, RingError> {
        Ok(a.is_zero())
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Result<BigInt, RingError> {
        if b.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(RingError::InexactDivision(b.to_string(), a.to_string()))
        }
    }
}

/// The field of rationals, elements kept in lowest terms with positive
/// denominator (maintained by `num_rational`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalRing;

impl CommutativeRing for RationalRing {
    type Element = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn is_integral(&self) -> bool {
        true
    }
    fn is_unit(&self, a: &BigRational) -> Result<bool, RingError> {
        Ok(!a.is_zero())
    }
    fn invert(&self, a: &BigRational) -> Result<BigRational, RingError> {
        if a.is_zero() {
            Err(RingError::NotInvertible("0".into()))
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero_divisor(&self, a: &BigRational) -> Result<bool, RingError> {
        Ok(a.is_zero())
    }
    fn exact_div(&self, a: &BigRational, b: &BigRational) -> Result<BigRational, RingError> {
        if b.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(a / b)
    }
}

/// Canonical representative of an integer mod `n`, carrying its modulus.
///
/// Invariant: `0 <= value < modulus` and `modulus >= 1`. The modulus 1 case
/// is the zero ring, where the single element is simultaneously 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModularInt {
    value: BigUint,
    modulus: BigUint,
}

impl ModularInt {
    pub fn new(value: BigInt, modulus: BigUint) -> Self {
        assert!(!modulus.is_zero(), "modulus must be >= 1");
        let m = BigInt::from(modulus.clone());
        let v = value.mod_floor(&m);
        ModularInt { value: v.to_biguint().expect("canonical representative is nonnegative"), modulus }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    fn check_same_modulus(&self, other: &ModularInt) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli: {} vs {}",
            self.modulus, other.modulus
        );
    }

    /// True iff `gcd(value, n) = 1`. In the zero ring (n = 1) the single
    /// element 0 = 1 is a unit, and the gcd formula already yields true.
    pub fn is_unit(&self) -> bool {
        self.value.gcd(&self.modulus).is_one()
    }

    /// True iff the element is 0 or shares a factor with the modulus.
    /// Requires `n >= 2`: the zero ring has no zero-divisor classification.
    pub fn is_zero_divisor(&self) -> Result<bool, RingError> {
        if self.modulus.is_one() {
            return Err(RingError::ZeroRing);
        }
        Ok(self.value.is_zero() || !self.value.gcd(&self.modulus).is_one())
    }

    /// Modular inverse by the extended Euclidean algorithm.
    pub fn invert(&self) -> Result<ModularInt, RingError> {
        if self.modulus.is_one() {
            return Ok(self.clone());
        }
        let a = BigInt::from(self.value.clone());
        let m = BigInt::from(self.modulus.clone());
        let ext = a.extended_gcd(&m);
        if !ext.gcd.is_one() {
            return Err(RingError::NotInvertible(format!("{} mod {}", self.value, self.modulus)));
        }
        Ok(ModularInt::new(ext.x, self.modulus.clone()))
    }
}

impl fmt::Display for ModularInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The ring `Z/nZ` for a fixed modulus `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModRing {
    modulus: BigUint,
}

impl ModRing {
    pub fn new(modulus: BigUint) -> Self {
        assert!(!modulus.is_zero(), "modulus must be >= 1");
        ModRing { modulus }
    }

    pub fn from_u64(modulus: u64) -> Self {
        Self::new(BigUint::from(modulus))
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn element(&self, value: i64) -> ModularInt {
        ModularInt::new(BigInt::from(value), self.modulus.clone())
    }
}

impl CommutativeRing for ModRing {
    type Element = ModularInt;

    fn zero(&self) -> ModularInt {
        ModularInt::new(BigInt::zero(), self.modulus.clone())
    }
    fn one(&self) -> ModularInt {
        ModularInt::new(BigInt::one(), self.modulus.clone())
    }
    fn add(&self, a: &ModularInt, b: &ModularInt) -> ModularInt {
        a.check_same_modulus(b);
        ModularInt::new(BigInt::from(&a.value + &b.value), self.modulus.clone())
    }
    fn neg(&self, a: &ModularInt) -> ModularInt {
        ModularInt::new(-BigInt::from(a.value.clone()), self.modulus.clone())
    }
    fn mul(&self, a: &ModularInt, b: &ModularInt) -> ModularInt {
        a.check_same_modulus(b);
        ModularInt::new(BigInt::from(&a.value * &b.value), self.modulus.clone())
    }
    fn from_int(&self, n: &BigInt) -> ModularInt {
        ModularInt::new(n.clone(), self.modulus.clone())
    }
    fn name(&self) -> String {
        format!("Zmod {}", self.modulus)
    }
    fn is_integral(&self) -> bool {
        false
    }
    fn is_unit(&self, a: &ModularInt) -> Result<bool, RingError> {
        Ok(a.is_unit())
    }
    fn invert(&self, a: &ModularInt) -> Result<ModularInt, RingError> {
        a.invert()
    }
    fn is_zero_divisor(&self, a: &ModularInt) -> Result<bool, RingError> {
        a.is_zero_divisor()
    }
    fn elements(&self) -> Option<Vec<ModularInt>> {
        let mut out = Vec::new();
        let mut v = BigUint::zero();
        while v < self.modulus {
            out.push(ModularInt { value: v.clone(), modulus: self.modulus.clone() });
            v += 1u32;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::rng::SplitMix64;

    #[test]
    fn mod_is_unit_examples() {
        let z6 = ModRing::from_u64(6);
        assert!(z6.element(5).is_unit());
        assert!(!z6.element(2).is_unit());
        // zero ring: the single element is 0 = 1 and counts as a unit
        let z1 = ModRing::from_u64(1);
        assert!(z1.element(1).is_unit());
        assert_eq!(z1.element(1), z1.element(0));
    }

    #[test]
    fn mod_is_zero_divisor_examples() {
        let z6 = ModRing::from_u64(6);
        assert_eq!(z6.element(2).is_zero_divisor(), Ok(true));
        assert_eq!(z6.element(5).is_zero_divisor(), Ok(false));
        assert_eq!(z6.element(0).is_zero_divisor(), Ok(true));
        let z1 = ModRing::from_u64(1);
        assert_eq!(z1.element(0).is_zero_divisor(), Err(RingError::ZeroRing));
    }

    #[test]
    fn mod_invert_examples() {
        let z6 = ModRing::from_u64(6);
        // 5 * 5 = 25 = 1 mod 6
        assert_eq!(z6.element(5).invert(), Ok(z6.element(5)));
        let z17 = ModRing::from_u64(17);
        assert_eq!(z17.element(1).invert(), Ok(z17.element(1)));
        assert!(matches!(z6.element(3).invert(), Err(RingError::NotInvertible(_))));
        for a in 1..17 {
            let e = z17.element(a);
            let inv = e.invert().unwrap();
            assert!(z17.is_one(&z17.mul(&e, &inv)));
        }
    }

    #[test]
    fn unit_xor_zero_divisor_partitions_modular_rings() {
        for n in 2..=30u64 {
            let ring = ModRing::from_u64(n);
            for a in ring.elements().unwrap() {
                let u = a.is_unit();
                let z = a.is_zero_divisor().unwrap();
                assert!(u ^ z, "a={a} mod {n}: unit={u}, zero divisor={z}");
            }
        }
    }

    fn axiom_suite<R: CommutativeRing>(ring: &R, sample: impl Fn(&mut SplitMix64) -> R::Element) {
        let mut rng = SplitMix64::new(0x5eed);
        for _ in 0..1000 {
            let a = sample(&mut rng);
            let b = sample(&mut rng);
            let c = sample(&mut rng);
            let ab_c = ring.mul(&ring.mul(&a, &b), &c);
            let a_bc = ring.mul(&a, &ring.mul(&b, &c));
            assert_eq!(ab_c, a_bc, "mul associativity in {}", ring.name());
            let lhs = ring.mul(&a, &ring.add(&b, &c));
            let rhs = ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c));
            assert_eq!(lhs, rhs, "distributivity in {}", ring.name());
            assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a), "commutativity in {}", ring.name());
            assert!(ring.is_zero(&ring.add(&a, &ring.neg(&a))), "a + (-a) = 0 in {}", ring.name());
            assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
            assert_eq!(ring.mul(&a, &ring.one()), a);
            assert_eq!(ring.add(&a, &ring.zero()), a);
        }
    }

    #[test]
    fn ring_axioms_hold_on_random_triples() {
        axiom_suite(&IntegerRing, |rng| BigInt::from(rng.i64_in(-1000, 1000)));
        axiom_suite(&ModRing::from_u64(6), |rng| {
            ModularInt::new(BigInt::from(rng.i64_in(-50, 50)), BigUint::from(6u32))
        });
        axiom_suite(&ModRing::from_u64(12), |rng| {
            ModularInt::new(BigInt::from(rng.i64_in(-50, 50)), BigUint::from(12u32))
        });
        axiom_suite(&RationalRing, |rng| {
            BigRational::new(BigInt::from(rng.i64_in(-60, 60)), BigInt::from(rng.i64_in(1, 20)))
        });
    }

    #[test]
    fn rational_results_stay_reduced() {
        let q = RationalRing;
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            let a = BigRational::new(BigInt::from(rng.i64_in(-40, 40)), BigInt::from(rng.i64_in(1, 24)));
            let b = BigRational::new(BigInt::from(rng.i64_in(-40, 40)), BigInt::from(rng.i64_in(1, 24)));
            for r in [q.add(&a, &b), q.mul(&a, &b)] {
                assert!(r.denom().is_positive() || r.is_zero() && r.denom().is_one());
                assert!(r.numer().gcd(r.denom()).is_one() || r.numer().is_zero());
                // normalization is idempotent: rebuilding from parts changes nothing
                assert_eq!(r, BigRational::new(r.numer().clone(), r.denom().clone()));
            }
        }
    }

    #[test]
    fn integer_ring_capabilities() {
        let z = IntegerRing;
        assert_eq!(z.is_unit(&BigInt::from(-1)), Ok(true));
        assert_eq!(z.is_unit(&BigInt::from(2)), Ok(false));
        assert_eq!(z.is_zero_divisor(&BigInt::zero()), Ok(true));
        assert_eq!(z.is_zero_divisor(&BigInt::from(7)), Ok(false));
        assert_eq!(z.exact_div(&BigInt::from(12), &BigInt::from(-4)), Ok(BigInt::from(-3)));
        assert!(matches!(z.exact_div(&BigInt::from(7), &BigInt::from(2)), Err(RingError::InexactDivision(..))));
    }

    #[test]
    fn mod_ring_lacks_exact_div() {
        let z6 = ModRing::from_u64(6);
        let err = z6.exact_div(&z6.element(4), &z6.element(2)).unwrap_err();
        assert!(matches!(err, RingError::CapabilityAbsent { .. }));
    }
}
