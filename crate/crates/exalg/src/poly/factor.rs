//! Desk-scale factorization into positive irreducibles ("premiers").
//!
//! The multivariate input (at most 3 variables, total degree at most 6) is
//! mapped to a univariate integer polynomial by the Kronecker substitution
//! `x_i -> T^(D_1 * .. * D_{i-1})` with `D_i` exceeding the degree in `x_i`;
//! the univariate image is factored by the classical interpolation search on
//! integer factorizations of evaluated values, and multivariate factors are
//! recovered from subsets of the univariate ones by inverse substitution and
//! test division. Integer prime factors of the content are kept as degree-0
//! premiers so that recomposition is exact.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::bigint_gcd_all;
use super::{PolyError, Polynomial};

pub const FACTOR_MAX_TOTAL_DEGREE: u32 = 6;
pub const FACTOR_MAX_NVARS: usize = 3;

/// `sign * product(factor^multiplicity)` reproducing the input exactly.
/// Every factor is positive and irreducible; integer primes count as
/// degree-zero factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    pub fn recompose(&self, nvars: usize) -> Polynomial {
        let mut acc = Polynomial::int(nvars, self.sign as i64);
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-1")?;
            if !self.factors.is_empty() {
                write!(f, " * ")?;
            }
        } else if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, m)| {
                if *m == 1 {
                    format!("({})", p.to_compact_string())
                } else {
                    format!("({})^{}", p.to_compact_string(), m)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Factor a nonzero polynomial within the documented desk-scale budget.
pub fn factor(p: &Polynomial) -> Result<Factorization, PolyError> {
    if p.is_zero() {
        return Err(PolyError::Precondition("cannot factor the zero polynomial".into()));
    }
    if p.nvars() > FACTOR_MAX_NVARS {
        return Err(PolyError::DeskScaleLimit(format!(
            "factorization supports at most {FACTOR_MAX_NVARS} variables, got {}",
            p.nvars()
        )));
    }
    let td = p.total_degree().unwrap_or(0);
    if td > FACTOR_MAX_TOTAL_DEGREE {
        return Err(PolyError::DeskScaleLimit(format!(
            "factorization supports total degree at most {FACTOR_MAX_TOTAL_DEGREE}, got {td}"
        )));
    }

    let sign = p.sign();
    let abs = p.abs();
    let content = abs.integer_content();
    let primitive = abs.exact_div(&Polynomial::constant(p.nvars(), content.clone()))
        .expect("integer content divides");

    let mut factors: Vec<(Polynomial, u32)> = Vec::new();
    for (prime, m) in factor_biguint(&content.to_biguint().expect("content of |p| is positive")) {
        factors.push((Polynomial::constant(p.nvars(), BigInt::from(prime)), m));
    }

    for part in factor_primitive(&primitive) {
        factors.push(part);
    }

    factors.sort_by(|(a, _), (b, _)| a.compare(b).expect("same ring"));
    // merge equal factors that arrived separately
    let mut merged: Vec<(Polynomial, u32)> = Vec::new();
    for (f, m) in factors {
        match merged.last_mut() {
            Some((g, gm)) if *g == f => *gm += m,
            _ => merged.push((f, m)),
        }
    }
    Ok(Factorization { sign, factors: merged })
}

/// Gauss lemma instance check: a premier of the coefficient ring (no
/// occurrence of the last variable) dividing neither `s` nor `t` never
/// divides `s * t`. Returns that divisibility verdict after validating the
/// preconditions.
pub fn gauss_lemma_check(prime: &Polynomial, s: &Polynomial, t: &Polynomial) -> Result<bool, PolyError> {
    let n = prime.nvars();
    if s.nvars() != n || t.nvars() != n {
        return Err(PolyError::NvarsMismatch(n, if s.nvars() != n { s.nvars() } else { t.nvars() }));
    }
    if n == 0 {
        return Err(PolyError::Precondition("need at least one variable".into()));
    }
    if prime.degree_in(n - 1).unwrap_or(0) != 0 {
        return Err(PolyError::Precondition(
            "the prime must come from the coefficient ring (no last variable)".into(),
        ));
    }
    if !prime.is_positive() {
        return Err(PolyError::Precondition("a premier is positive".into()));
    }
    let fz = factor(prime)?;
    if fz.factors.len() != 1 || fz.factors[0].1 != 1 {
        return Err(PolyError::Precondition("the given polynomial is not irreducible".into()));
    }
    if prime.divides(s) {
        return Err(PolyError::Precondition("the prime divides the first operand".into()));
    }
    if prime.divides(t) {
        return Err(PolyError::Precondition("the prime divides the second operand".into()));
    }
    Ok(prime.divides(&s.mul(t)))
}

/// Factor a primitive positive polynomial into (premier, multiplicity) pairs.
fn factor_primitive(p: &Polynomial) -> Vec<(Polynomial, u32)> {
    if p.is_one() {
        return Vec::new();
    }
    let nvars = p.nvars();
    let used: Vec<usize> = (0..nvars).filter(|&i| p.degree_in(i).unwrap_or(0) > 0).collect();
    if used.is_empty() {
        // primitive positive constant is 1, handled above
        unreachable!("nonconstant primitive polynomial expected");
    }

    // Kronecker substitution over the used variables only.
    let bounds: Vec<u32> = used.iter().map(|&i| p.degree_in(i).unwrap() + 1).collect();
    let image = kronecker_image(p, &used, &bounds);
    let uni_factors = factor_univariate(&image);

    // Recover multivariate factors from subsets of univariate ones, smallest
    // subsets first, restarting after every extraction. The full subset
    // always reproduces the remaining polynomial, so the search terminates.
    let mut remaining = p.clone();
    let mut pool: Vec<UniPoly> = uni_factors;
    let mut out: Vec<(Polynomial, u32)> = Vec::new();
    while !remaining.is_one() {
        debug_assert!(!pool.is_empty(), "nontrivial remainder must have image factors");
        let (candidate, subset) = (1..=pool.len())
            .find_map(|size| find_divisor_subset(&remaining, &pool, size, nvars, &used, &bounds))
            .expect("the full subset reproduces the remaining polynomial");
        remaining = remaining.exact_div(&candidate).expect("verified divisor");
        for idx in subset.into_iter().rev() {
            pool.remove(idx);
        }
        match out.iter_mut().find(|(f, _)| *f == candidate) {
            Some((_, m)) => *m += 1,
            None => out.push((candidate, 1)),
        }
    }
    out
}

/// Depth-first search over index subsets of `pool` of the given size; the
/// first subset whose inverse substitution divides `remaining` wins.
fn find_divisor_subset(
    remaining: &Polynomial,
    pool: &[UniPoly],
    size: usize,
    nvars: usize,
    used: &[usize],
    bounds: &[u32],
) -> Option<(Polynomial, Vec<usize>)> {
    fn rec(
        remaining: &Polynomial,
        pool: &[UniPoly],
        size: usize,
        start: usize,
        prod: &UniPoly,
        chosen: &mut Vec<usize>,
        nvars: usize,
        used: &[usize],
        bounds: &[u32],
    ) -> Option<(Polynomial, Vec<usize>)> {
        if chosen.len() == size {
            let candidate = inverse_kronecker(prod, nvars, used, bounds);
            if !candidate.is_constant() && candidate.divides(remaining) {
                return Some((candidate, chosen.clone()));
            }
            return None;
        }
        for i in start..pool.len() {
            chosen.push(i);
            let next = uni_mul(prod, &pool[i]);
            if let Some(hit) = rec(remaining, pool, size, i + 1, &next, chosen, nvars, used, bounds) {
                return Some(hit);
            }
            chosen.pop();
        }
        None
    }
    let mut chosen = Vec::with_capacity(size);
    let unit = vec![BigInt::one()];
    rec(remaining, pool, size, 0, &unit, &mut chosen, nvars, used, bounds)
}

fn kronecker_image(p: &Polynomial, used: &[usize], bounds: &[u32]) -> UniPoly {
    let mut weights = vec![0u64; used.len()];
    let mut w = 1u64;
    for (slot, b) in bounds.iter().enumerate() {
        weights[slot] = w;
        w *= *b as u64;
    }
    let mut coeffs = vec![BigInt::zero(); w as usize];
    for (m, c) in p.terms() {
        let mut pos = 0u64;
        for (slot, &var) in used.iter().enumerate() {
            pos += m.0[var] as u64 * weights[slot];
        }
        coeffs[pos as usize] += c;
    }
    uni_trim(coeffs)
}

fn inverse_kronecker(u: &UniPoly, nvars: usize, used: &[usize], bounds: &[u32]) -> Polynomial {
    let mut terms = Vec::new();
    for (pos, c) in u.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut exps = vec![0u32; nvars];
        let mut rest = pos as u64;
        for (slot, &var) in used.iter().enumerate() {
            exps[var] = (rest % bounds[slot] as u64) as u32;
            rest /= bounds[slot] as u64;
        }
        if rest != 0 {
            // degree overflow: cannot be the image of an in-bounds factor
            return Polynomial::one(nvars);
        }
        terms.push((exps, c.clone()));
    }
    Polynomial::from_terms(nvars, terms)
}

// ---------------------------------------------------------------------------
// dense univariate polynomials over Z (internal to the factorizer)
// ---------------------------------------------------------------------------

type UniPoly = Vec<BigInt>;

fn uni_trim(mut u: UniPoly) -> UniPoly {
    while u.len() > 1 && u.last().map(|c| c.is_zero()).unwrap_or(false) {
        u.pop();
    }
    u
}

fn uni_deg(u: &UniPoly) -> usize {
    u.len() - 1
}

fn uni_mul(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    uni_trim(out)
}

fn uni_eval(u: &UniPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in u.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn uni_content(u: &UniPoly) -> BigInt {
    bigint_gcd_all(u.iter())
}

/// Exact division in Z[T]; `None` when inexact.
fn uni_exact_div(num: &UniPoly, den: &UniPoly) -> Option<UniPoly> {
    let dd = uni_deg(den);
    if den.len() == 1 && den[0].is_zero() {
        return None;
    }
    let mut rem = num.clone();
    if uni_deg(&rem) < dd && !(rem.len() == 1 && rem[0].is_zero()) {
        return None;
    }
    let mut quot = vec![BigInt::zero(); uni_deg(&rem).saturating_sub(dd) + 1];
    let lead = den[dd].clone();
    while !(rem.len() == 1 && rem[0].is_zero()) {
        let dr = uni_deg(&rem);
        if dr < dd {
            return None;
        }
        let (q, r) = rem[dr].div_rem(&lead);
        if !r.is_zero() {
            return None;
        }
        let shift = dr - dd;
        quot[shift] = q.clone();
        for (i, c) in den.iter().enumerate() {
            let v = &rem[i + shift] - c * &q;
            rem[i + shift] = v;
        }
        rem = uni_trim(rem);
        if rem.len() == 1 && rem[0].is_zero() {
            break;
        }
    }
    Some(uni_trim(quot))
}

/// Factor a primitive univariate polynomial with positive leading coefficient
/// into irreducible primitive factors with positive leading coefficients
/// (with multiplicity, flattened).
fn factor_univariate(input: &UniPoly) -> Vec<UniPoly> {
    let mut p = input.clone();
    debug_assert!(uni_content(&p).is_one(), "input must be primitive");
    debug_assert!(p.last().unwrap().is_positive(), "input must have positive leading coefficient");
    let mut out: Vec<UniPoly> = Vec::new();

    // powers of T
    while p[0].is_zero() {
        p.remove(0);
        out.push(vec![BigInt::zero(), BigInt::one()]);
    }

    if uni_deg(&p) == 0 {
        return out;
    }

    // peel integer roots so that sample values are never zero
    loop {
        let mut found = false;
        for d in divisors(&p[0]) {
            for root in [d.clone(), -d] {
                let lin = vec![-root.clone(), BigInt::one()];
                while let Some(q) = uni_exact_div(&p, &lin) {
                    p = q;
                    out.push(lin.clone());
                    found = true;
                    if uni_deg(&p) == 0 {
                        return out;
                    }
                }
            }
        }
        if !found {
            break;
        }
    }

    let mut m = 1usize;
    while 2 * m <= uni_deg(&p) {
        match search_degree_m_factor(&p, m) {
            Some(f) => {
                p = uni_exact_div(&p, &f).expect("verified factor divides");
                out.push(f);
                // same degree may divide again (multiplicities)
            }
            None => m += 1,
        }
    }
    if uni_deg(&p) >= 1 {
        out.push(p);
    }
    out
}

/// Classical interpolation search for a degree-`m` factor: every factor value
/// at an integer point divides the polynomial's value there, so candidate
/// factors are interpolated from divisor tuples. Tuples are pruned with the
/// integer-polynomial constraint `(a - b) | (g(a) - g(b))`.
fn search_degree_m_factor(p: &UniPoly, m: usize) -> Option<UniPoly> {
    let points: Vec<BigInt> = sample_points(m + 1);
    let values: Vec<BigInt> = points.iter().map(|x| uni_eval(p, x)).collect();
    debug_assert!(values.iter().all(|v| !v.is_zero()), "roots must have been peeled");
    let divisor_lists: Vec<Vec<BigInt>> = values
        .iter()
        .map(|v| {
            let mut ds = Vec::new();
            for d in divisors(v) {
                ds.push(d.clone());
                ds.push(-d);
            }
            ds
        })
        .collect();

    let mut chosen: Vec<BigInt> = Vec::with_capacity(m + 1);
    dfs_divisor_tuples(p, m, &points, &divisor_lists, &mut chosen)
}

fn dfs_divisor_tuples(
    p: &UniPoly,
    m: usize,
    points: &[BigInt],
    divisor_lists: &[Vec<BigInt>],
    chosen: &mut Vec<BigInt>,
) -> Option<UniPoly> {
    let depth = chosen.len();
    if depth == m + 1 {
        let cand = interpolate_integer(points, chosen, m)?;
        if cand.last().unwrap().is_zero() {
            return None;
        }
        // factors of a primitive polynomial can be taken primitive
        let cont = uni_content(&cand);
        let mut cand: UniPoly = cand.iter().map(|c| c / &cont).collect();
        if cand.last().unwrap().is_negative() {
            cand = cand.iter().map(|c| -c).collect();
        }
        if uni_deg(&cand) != m {
            return None;
        }
        if uni_exact_div(p, &cand).is_some() {
            return Some(cand);
        }
        return None;
    }
    'next: for d in &divisor_lists[depth] {
        for (i, prev) in chosen.iter().enumerate() {
            let gap = &points[depth] - &points[i];
            if !(d - prev).is_multiple_of(&gap) {
                continue 'next;
            }
        }
        chosen.push(d.clone());
        if let Some(f) = dfs_divisor_tuples(p, m, points, divisor_lists, chosen) {
            return Some(f);
        }
        chosen.pop();
    }
    None
}

fn sample_points(count: usize) -> Vec<BigInt> {
    let mut pts = vec![BigInt::zero()];
    let mut k = 1i64;
    while pts.len() < count {
        pts.push(BigInt::from(k));
        if pts.len() < count {
            pts.push(BigInt::from(-k));
        }
        k += 1;
    }
    pts
}

/// Lagrange interpolation returning integer coefficients, or `None` when the
/// interpolant is not an integer polynomial of degree <= m.
fn interpolate_integer(points: &[BigInt], values: &[BigInt], m: usize) -> Option<UniPoly> {
    // work over rationals represented as (num, den) pairs scaled by a common
    // denominator: multiply through by prod of (x_i - x_j) lazily via exact
    // rational arithmetic on BigRational
    use num_rational::BigRational;
    let n = points.len();
    let mut acc = vec![BigRational::zero(); m + 1];
    for i in 0..n {
        // basis_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut numer = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            // numer *= (x - x_j)
            let mut next = vec![BigRational::zero(); numer.len() + 1];
            let xj = BigRational::from_integer(points[j].clone());
            for (k, c) in numer.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xj;
            }
            numer = next;
            denom *= BigRational::from_integer(&points[i] - &points[j]);
        }
        let scale = BigRational::from_integer(values[i].clone()) / denom;
        for (k, c) in numer.iter().enumerate() {
            if k > m {
                if !(c * &scale).is_zero() {
                    return None;
                }
                continue;
            }
            acc[k] += c * &scale;
        }
    }
    let mut out = Vec::with_capacity(m + 1);
    for c in acc {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(uni_trim(out))
}

// ---------------------------------------------------------------------------
// integer factorization (trial division + Brent's rho with Miller-Rabin)
// ---------------------------------------------------------------------------

fn divisors(v: &BigInt) -> Vec<BigInt> {
    let mag = v.to_biguint().unwrap_or_else(|| (-v).to_biguint().unwrap());
    debug_assert!(!mag.is_zero());
    let mut divs: Vec<BigUint> = vec![BigUint::one()];
    for (p, m) in factor_biguint(&mag) {
        let mut next = Vec::with_capacity(divs.len() * (m as usize + 1));
        for d in &divs {
            let mut pk = BigUint::one();
            for _ in 0..=m {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs.into_iter().map(BigInt::from).collect()
}

/// Prime factorization of a positive integer. Trial division handles the
/// small part; larger cofactors go through Miller-Rabin and Brent's variant
/// of Pollard's rho.
pub fn factor_biguint(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut n = n.clone();
    if n.is_one() {
        return out;
    }
    let mut small = 2u64;
    while small <= 10_000 {
        let p = BigUint::from(small);
        if (&p * &p) > n {
            break;
        }
        let mut m = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            m += 1;
        }
        if m > 0 {
            out.push((p, m));
        }
        small += if small == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return out;
    }
    let mut stack = vec![n];
    let mut rest: Vec<BigUint> = Vec::new();
    while let Some(v) = stack.pop() {
        if v.is_one() {
            continue;
        }
        if is_probable_prime(&v) {
            rest.push(v);
            continue;
        }
        let d = brent_rho(&v);
        stack.push(&v / &d);
        stack.push(d);
    }
    rest.sort();
    for p in rest {
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, m)) => *m += 1,
            None => out.push((p, 1)),
        }
    }
    out.sort_by(|(a, _), (b, _)| a.cmp(b));
    out
}

fn is_probable_prime(n: &BigUint) -> bool {
    if n < &BigUint::from(2u32) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // Miller-Rabin with the first twelve primes as bases: deterministic for
    // every modulus below 3.3e24, overwhelming evidence beyond.
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn brent_rho(n: &BigUint) -> BigUint {
    debug_assert!(!is_probable_prime(n));
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::from(1u32);
    loop {
        let mut x = BigUint::from(2u32);
        let mut y = BigUint::from(2u32);
        let mut d = BigUint::one();
        let f = |v: &BigUint| (v * v + &c) % n;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if !d.is_one() && d != *n {
            return d;
        }
        c += &one;
    }
}
