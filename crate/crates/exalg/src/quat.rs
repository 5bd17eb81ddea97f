//! Exact rational quaternions: `x0 + x1 i + x2 j + x3 k` with
//! `i^2 = j^2 = k^2 = -1`, `ij = k`, `jk = i`, `ki = j` and anticommutation.
//!
//! An equivalent model writes a quaternion as the complex 2x2 matrix
//! `[[a, b], [-conj(b), conj(a)]]` with `a = x0 + x1 i` and `b = x2 + x3 i`;
//! the basis form used here keeps all arithmetic in reduced rationals and the
//! dictionary is pinned down by the multiplication-table tests.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuatError {
    #[error("cannot invert the zero quaternion")]
    ZeroInverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quaternion {
    pub x0: BigRational,
    pub x1: BigRational,
    pub x2: BigRational,
    pub x3: BigRational,
}

impl Quaternion {
    pub fn new(x0: BigRational, x1: BigRational, x2: BigRational, x3: BigRational) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64, x3: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        Quaternion::new(r(x0), r(x1), r(x2), r(x3))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Quaternion::new(r, BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x0.is_zero() && self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x0.is_one() && self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    /// Central elements of the quaternion algebra are exactly the rationals.
    pub fn is_central(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_central() {
            Some(self.x0.clone())
        } else {
            None
        }
    }

    pub fn coords(&self) -> [BigRational; 4] {
        [self.x0.clone(), self.x1.clone(), self.x2.clone(), self.x3.clone()]
    }

    pub fn from_coords(c: &[BigRational]) -> Self {
        assert_eq!(c.len(), 4);
        Quaternion::new(c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone())
    }

    /// Imaginary part as a coordinate vector over (i, j, k).
    pub fn pure_part(&self) -> [BigRational; 3] {
        [self.x1.clone(), self.x2.clone(), self.x3.clone()]
    }

    pub fn add(&self, other: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.x0 + &other.x0,
            &self.x1 + &other.x1,
            &self.x2 + &other.x2,
            &self.x3 + &other.x3,
        )
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion::new(-&self.x0, -&self.x1, -&self.x2, -&self.x3)
    }

    pub fn sub(&self, other: &Quaternion) -> Quaternion {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Quaternion {
        Quaternion::new(c * &self.x0, c * &self.x1, c * &self.x2, c * &self.x3)
    }

    pub fn mul(&self, o: &Quaternion) -> Quaternion {
        let (a0, a1, a2, a3) = (&self.x0, &self.x1, &self.x2, &self.x3);
        let (b0, b1, b2, b3) = (&o.x0, &o.x1, &o.x2, &o.x3);
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }

    pub fn pow(&self, e: u32) -> Quaternion {
        let mut acc = Quaternion::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Conjugation: the anti-automorphism flipping the sign of the pure part.
    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.x0.clone(), -&self.x1, -&self.x2, -&self.x3)
    }

    /// `z * conj(z)`: the sum of the four squared coordinates.
    pub fn norm(&self) -> BigRational {
        &self.x0 * &self.x0 + &self.x1 * &self.x1 + &self.x2 * &self.x2 + &self.x3 * &self.x3
    }

    pub fn inverse(&self) -> Result<Quaternion, QuatError> {
        if self.is_zero() {
            return Err(QuatError::ZeroInverse);
        }
        let n = self.norm();
        Ok(self.conj().scale(&n.recip()))
    }

    /// Compact literal without spaces, suitable as a matrix-file entry.
    pub fn to_compact_string(&self) -> String {
        self.render(false)
    }

    fn render(&self, spaced: bool) -> String {
        let units = ["", "i", "j", "k"];
        let coords = [&self.x0, &self.x1, &self.x2, &self.x3];
        let mut out = String::new();
        for (unit, c) in units.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else if spaced {
                out.push_str(if negative { " - " } else { " + " });
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            if mag.is_one() && !unit.is_empty() {
                out.push_str(unit);
            } else {
                out.push_str(&mag.to_string());
                out.push_str(unit);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(true))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{msg} (at offset {offset})")]
pub struct QuatParseError {
    pub offset: usize,
    pub msg: String,
}

/// Parse a quaternion literal: rational coefficients `p/q` combined as in
/// `1/2 + 3i - j + 2/5k`; bare `i`, `j`, `k` mean coefficient 1. Whitespace
/// is insignificant.
pub fn parse_quaternion(input: &str) -> Result<Quaternion, QuatParseError> {
    let bytes = input.as_bytes();
    let mut pos = 0usize;
    let mut acc = Quaternion::zero();
    let mut first = true;

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };

    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            if first {
                return Err(QuatParseError { offset: pos, msg: "empty quaternion literal".into() });
            }
            break;
        }
        let sign = match bytes[pos] {
            b'+' => {
                pos += 1;
                BigRational::one()
            }
            b'-' => {
                pos += 1;
                -BigRational::one()
            }
            _ if first => BigRational::one(),
            c => {
                return Err(QuatParseError {
                    offset: pos,
                    msg: format!("expected '+' or '-', found {:?}", c as char),
                })
            }
        };
        first = false;
        skip_ws(&mut pos);

        // optional numerator / denominator
        let num_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff = if pos > num_start {
            let numer: BigInt = std::str::from_utf8(&bytes[num_start..pos]).unwrap().parse().unwrap();
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'/' {
                pos += 1;
                skip_ws(&mut pos);
                let den_start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == den_start {
                    return Err(QuatParseError { offset: pos, msg: "expected a denominator".into() });
                }
                let denom: BigInt = std::str::from_utf8(&bytes[den_start..pos]).unwrap().parse().unwrap();
                if denom.is_zero() {
                    return Err(QuatParseError { offset: den_start, msg: "denominator is zero".into() });
                }
                Some(BigRational::new(numer, denom))
            } else {
                Some(BigRational::from_integer(numer))
            }
        } else {
            None
        };
        skip_ws(&mut pos);

        // optional unit
        let unit = if pos < bytes.len() && matches!(bytes[pos], b'i' | b'j' | b'k') {
            let u = bytes[pos] as char;
            pos += 1;
            Some(u)
        } else {
            None
        };

        let coeff = match (coeff, unit) {
            (None, None) => {
                return Err(QuatParseError { offset: pos, msg: "expected a coefficient or unit".into() })
            }
            (None, Some(_)) => BigRational::one(),
            (Some(c), _) => c,
        };
        let coeff = sign * coeff;
        let term = match unit {
            None => Quaternion::from_rational(coeff),
            Some('i') => Quaternion::i().scale(&coeff),
            Some('j') => Quaternion::j().scale(&coeff),
            Some('k') => Quaternion::k().scale(&coeff),
            _ => unreachable!(),
        };
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::rng::SplitMix64;

    pub(crate) fn random_quat(rng: &mut SplitMix64, bound: i64) -> Quaternion {
        let mut part = || {
            BigRational::new(BigInt::from(rng.i64_in(-bound, bound + 1)), BigInt::from(rng.i64_in(1, 4)))
        };
        Quaternion::new(part(), part(), part(), part())
    }

    #[test]
    fn multiplication_table() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let minus_one = Quaternion::one().neg();
        assert_eq!(i.mul(&i), minus_one);
        assert_eq!(j.mul(&j), minus_one);
        assert_eq!(k.mul(&k), minus_one);
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), k.neg());
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&j), i.neg());
        assert_eq!(k.mul(&i), j);
        assert_eq!(i.mul(&k), j.neg());
    }

    /// Complex 2x2 model `[[a, b], [-conj(b), conj(a)]]` with `a = x0 + x1 I`
    /// and `b = x2 + x3 I`: an independent multiplication oracle.
    #[test]
    fn matches_complex_matrix_model() {
        type C = (BigRational, BigRational); // re + im*I
        fn cmul(x: &C, y: &C) -> C {
            (&x.0 * &y.0 - &x.1 * &y.1, &x.0 * &y.1 + &x.1 * &y.0)
        }
        fn cadd(x: &C, y: &C) -> C {
            (&x.0 + &y.0, &x.1 + &y.1)
        }
        fn cconj(x: &C) -> C {
            (x.0.clone(), -&x.1)
        }
        fn cneg(x: &C) -> C {
            (-&x.0, -&x.1)
        }
        fn to_model(q: &Quaternion) -> [[C; 2]; 2] {
            let a = (q.x0.clone(), q.x1.clone());
            let b = (q.x2.clone(), q.x3.clone());
            [[a.clone(), b.clone()], [cneg(&cconj(&b)), cconj(&a)]]
        }
        fn model_mul(x: &[[C; 2]; 2], y: &[[C; 2]; 2]) -> [[C; 2]; 2] {
            let e = |i: usize, j: usize| cadd(&cmul(&x[i][0], &y[0][j]), &cmul(&x[i][1], &y[1][j]));
            [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
        }
        let mut rng = SplitMix64::new(2024);
        for _ in 0..200 {
            let p = random_quat(&mut rng, 5);
            let q = random_quat(&mut rng, 5);
            assert_eq!(to_model(&p.mul(&q)), model_mul(&to_model(&p), &to_model(&q)));
        }
    }

    #[test]
    fn inverse_and_norm_examples() {
        // inverse(1 + i) = (1 - i)/2
        let z = Quaternion::from_ints(1, 1, 0, 0);
        let inv = z.inverse().unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(inv, Quaternion::new(half.clone(), -half, BigRational::zero(), BigRational::zero()));
        assert!(z.mul(&inv).is_one());
        assert!(inv.mul(&z).is_one());

        assert_eq!(Quaternion::from_ints(1, 1, 1, 1).norm(), BigRational::from_integer(4.into()));
        assert_eq!(Quaternion::zero().inverse(), Err(QuatError::ZeroInverse));
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mut rng = SplitMix64::new(31337);
        for _ in 0..300 {
            let a = random_quat(&mut rng, 6);
            let b = random_quat(&mut rng, 6);
            let c = random_quat(&mut rng, 6);
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)), "associativity");
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)), "left distributivity");
            assert_eq!(b.add(&c).mul(&a), b.mul(&a).add(&c.mul(&a)), "right distributivity");
            // conjugation is an anti-automorphism
            assert_eq!(a.mul(&b).conj(), b.conj().mul(&a.conj()));
            // z * conj(z) = norm
            assert_eq!(a.mul(&a.conj()), Quaternion::from_rational(a.norm()));
            if !a.is_zero() {
                let inv = a.inverse().unwrap();
                assert!(a.mul(&inv).is_one() && inv.mul(&a).is_one(), "two-sided inverse");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let z = parse_quaternion("1/2 + 3i - j + 2/5k").unwrap();
        assert_eq!(
            z,
            Quaternion::new(
                BigRational::new(1.into(), 2.into()),
                BigRational::from_integer(3.into()),
                BigRational::from_integer((-1).into()),
                BigRational::new(2.into(), 5.into()),
            )
        );
        for src in ["i", "-k", "0", "5", "1/2+3i-j+2/5k", "-1/3 - i + 7k"] {
            let q = parse_quaternion(src).unwrap();
            assert_eq!(parse_quaternion(&q.to_string()).unwrap(), q);
            assert_eq!(parse_quaternion(&q.to_compact_string()).unwrap(), q);
        }
        assert!(parse_quaternion("").is_err());
        assert!(parse_quaternion("1 +").is_err());
        assert!(parse_quaternion("1/0").is_err());
        assert!(parse_quaternion("x").is_err());
    }
}
