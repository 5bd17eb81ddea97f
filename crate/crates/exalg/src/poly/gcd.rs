//! Multivariate gcd by recursive content extraction and a primitive
//! pseudo-remainder sequence in the last variable.
//!
//! The result is always sign-normalized positive. Correctness relies only on
//! pseudo-division and exact division, so it is independent of the
//! factorization machinery and serves as its cross-check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{Polynomial, PolyError};

/// Positive gcd of two polynomials, errors when both are zero.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, PolyError> {
    if p.nvars() != q.nvars() {
        return Err(PolyError::NvarsMismatch(p.nvars(), q.nvars()));
    }
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::BothZero);
    }
    Ok(gcd_inner(p, q))
}

fn gcd_inner(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return q.abs();
    }
    if q.is_zero() {
        return p.abs();
    }
    // cheap early exit: one operand dividing the other settles the gcd
    if p.divides(q) {
        return p.abs();
    }
    if q.divides(p) {
        return q.abs();
    }
    let n = p.nvars();
    if n == 0 {
        let a = p.as_constant().unwrap();
        let b = q.as_constant().unwrap();
        return Polynomial::constant(0, a.gcd(&b));
    }
    let dp = p.degree_in(n - 1).unwrap_or(0);
    let dq = q.degree_in(n - 1).unwrap_or(0);
    if dp == 0 && dq == 0 {
        // the last variable is absent from both: recurse one level down
        let p1 = strip_last(p);
        let q1 = strip_last(q);
        return gcd_inner(&p1, &q1).embed(n);
    }
    let up = p.to_univariate_last();
    let uq = q.to_univariate_last();
    let cont_p = coeff_gcd(&up);
    let cont_q = coeff_gcd(&uq);
    let cont = gcd_inner(&cont_p, &cont_q);
    let pp_p = divide_coeffs(&up, &cont_p);
    let pp_q = divide_coeffs(&uq, &cont_q);
    let prim = primitive_prs(pp_p, pp_q);
    let g = Polynomial::from_univariate_last(&prim, n).mul(&cont.embed(n));
    g.abs()
}

fn strip_last(p: &Polynomial) -> Polynomial {
    let coeffs = p.to_univariate_last();
    assert_eq!(coeffs.len(), 1);
    coeffs.into_iter().next().unwrap()
}

fn coeff_gcd(coeffs: &[Polynomial]) -> Polynomial {
    let nvars = coeffs[0].nvars();
    let mut g = Polynomial::zero(nvars);
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = gcd_inner(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_coeffs(coeffs: &[Polynomial], d: &Polynomial) -> Vec<Polynomial> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                c.exact_div(d).expect("content divides every coefficient")
            }
        })
        .collect()
}

fn deg(u: &[Polynomial]) -> Option<usize> {
    u.iter().rposition(|c| !c.is_zero())
}

fn trim(mut u: Vec<Polynomial>) -> Vec<Polynomial> {
    while u.len() > 1 && u.last().map(|c| c.is_zero()).unwrap_or(false) {
        u.pop();
    }
    u
}

fn make_primitive(u: Vec<Polynomial>) -> Vec<Polynomial> {
    let c = coeff_gcd(&u);
    if c.is_zero() || c.is_one() {
        return u;
    }
    divide_coeffs(&u, &c)
}

/// Gcd of two primitive univariate polynomials (coefficients in a smaller
/// polynomial ring) via the primitive pseudo-remainder sequence.
fn primitive_prs(a: Vec<Polynomial>, b: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut a = trim(a);
    let mut b = trim(b);
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b);
        match deg(&r) {
            None => return b,
            Some(_) => {
                a = b;
                b = make_primitive(trim(r));
            }
        }
    }
}

/// Pseudo remainder of `a` by `b`: the remainder of `lc(b)^(da-db+1) * a`
/// under ordinary polynomial division by `b`.
fn pseudo_rem(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let da = deg(a).expect("dividend must be nonzero");
    let db = deg(b).expect("divisor must be nonzero");
    assert!(da >= db);
    let lcb = b[db].clone();
    let mut r: Vec<Polynomial> = a.to_vec();
    let mut steps = (da - db + 1) as i64;
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let lcr = r[dr].clone();
        let shift = dr - db;
        let mut next = vec![Polynomial::zero(lcb.nvars()); dr.max(db + shift) + 1];
        for (i, c) in r.iter().enumerate() {
            if !c.is_zero() {
                next[i] = c.mul(&lcb);
            }
        }
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                next[i + shift] = next[i + shift].sub(&c.mul(&lcr));
            }
        }
        debug_assert!(next[dr].is_zero());
        r = trim(next);
        steps -= 1;
    }
    // keep the classical normalization lc(b)^(da-db+1) * a = q*b + r
    while steps > 0 {
        for c in r.iter_mut() {
            *c = c.mul(&lcb);
        }
        steps -= 1;
    }
    r
}

/// Integer gcd of a slice of big integers (helper shared with factorization).
pub(crate) fn bigint_gcd_all<'a>(values: impl Iterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        g = g.gcd(v);
    }
    g
}
