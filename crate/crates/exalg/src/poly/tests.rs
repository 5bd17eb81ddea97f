use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::checks::rng::SplitMix64;

fn p(src: &str, nvars: usize) -> Polynomial {
    parse_polynomial(src, nvars).unwrap()
}

/// Uniform small polynomial for randomized batteries.
pub(crate) fn random_poly(rng: &mut SplitMix64, nvars: usize, max_deg: u32, max_terms: usize, max_coeff: i64) -> Polynomial {
    let nterms = rng.usize_below(max_terms) + 1;
    let mut terms = Vec::new();
    for _ in 0..nterms {
        let mut exps = vec![0u32; nvars];
        let mut budget = max_deg;
        for e in exps.iter_mut() {
            let d = rng.below(budget as u64 + 1) as u32;
            *e = d;
            budget -= d;
        }
        let mut c = rng.i64_in(-max_coeff, max_coeff + 1);
        if c == 0 {
            c = 1;
        }
        terms.push((exps, BigInt::from(c)));
    }
    Polynomial::from_terms(nvars, terms)
}

#[test]
fn add_examples() {
    let x1 = Polynomial::var(1, 0);
    assert!(x1.add(&x1.neg()).is_zero());
    assert_eq!(p("x1+1", 1).add(&p("x1-1", 1)), p("2*x1", 1));
    // term identification across argument order
    assert_eq!(p("x1*x2", 2).add(&p("x2*x1", 2)), p("2*x1*x2", 2));
}

#[test]
fn add_rejects_nvars_mismatch() {
    let a = Polynomial::var(1, 0);
    let b = Polynomial::var(2, 0);
    assert_eq!(a.checked_add(&b), Err(PolyError::NvarsMismatch(1, 2)));
    assert_eq!(a.checked_mul(&b), Err(PolyError::NvarsMismatch(1, 2)));
}

#[test]
fn mul_examples() {
    assert_eq!(p("x1-1", 1).mul(&p("x1+1", 1)), p("x1^2-1", 1));
    let q = p("3*x1^2*x2-4", 2);
    assert_eq!(q.mul(&Polynomial::one(2)), q);
}

#[test]
fn mul_degree_is_additive_in_last_variable() {
    let mut rng = SplitMix64::new(11);
    for _ in 0..500 {
        let a = random_poly(&mut rng, 2, 3, 4, 5);
        let b = random_poly(&mut rng, 2, 3, 4, 5);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let da = a.degree_in(1).unwrap_or(0);
        let db = b.degree_in(1).unwrap_or(0);
        assert_eq!(a.mul(&b).degree_in(1).unwrap_or(0), da + db);
    }
}

#[test]
fn sign_examples() {
    assert_eq!(p("x1-5", 1).sign(), 1);
    assert_eq!(Polynomial::zero(3).sign(), 0);
    // leading coefficient w.r.t. x2 is -x1, whose leading coefficient is -1
    assert_eq!(p("-x1*x2^2+7*x1", 2).sign(), -1);
    let q = p("3*x1^2*x2-4", 2);
    assert_eq!(q.neg().sign(), -(q.sign()));
    assert_eq!(Polynomial::int(0, -7).sign(), -1);
    assert_eq!(Polynomial::int(0, 7).sign(), 1);
}

#[test]
fn compare_examples() {
    // x - m >= x - (m+1)
    assert_eq!(p("x1", 1).compare(&p("x1-1", 1)), Ok(Ordering::Greater));
    let q = p("x1*x2-3", 2);
    assert_eq!(q.compare(&q), Ok(Ordering::Equal));
    // 1 is the least positive element
    for positive in ["x1", "x1+9", "x1^4-x1", "2", "x1*x2^2-x1*x2+x1"] {
        let pp = p(positive, 2);
        assert!(pp.is_positive());
        if !pp.is_one() {
            assert_eq!(Polynomial::one(2).compare(&pp), Ok(Ordering::Less), "1 < {positive}");
        }
    }
}

#[test]
fn order_is_total_and_compatible() {
    let mut rng = SplitMix64::new(23);
    for _ in 0..500 {
        let a = random_poly(&mut rng, 2, 3, 3, 6);
        let b = random_poly(&mut rng, 2, 3, 3, 6);
        let c = random_poly(&mut rng, 2, 3, 3, 6);
        let ord = a.compare(&b).unwrap();
        // compatibility with addition
        assert_eq!(a.add(&c).compare(&b.add(&c)).unwrap(), ord);
        // compatibility with multiplication by positives
        if c.is_positive() {
            let ord_mul = a.mul(&c).compare(&b.mul(&c)).unwrap();
            assert_eq!(ord_mul, ord);
        }
    }
}

#[test]
fn exact_div_examples() {
    assert_eq!(p("x1^2-1", 1).exact_div(&p("x1-1", 1)), Ok(p("x1+1", 1)));
    let q = p("3*x1^2*x2-4", 2);
    assert_eq!(q.exact_div(&Polynomial::one(2)), Ok(q.clone()));
    assert_eq!(p("x1^2+1", 1).exact_div(&p("x1-1", 1)), Err(PolyError::InexactDivision));
    assert_eq!(q.exact_div(&Polynomial::zero(2)), Err(PolyError::DivisionByZero));
}

#[test]
fn gcd_examples() {
    // 2(x+1) vs 2^2 (x-1)(x+1)
    assert_eq!(gcd(&p("2*x1+2", 1), &p("4*x1^2-4", 1)), Ok(p("2*x1+2", 1)));
    let q = p("-3*x1*x2+1", 2);
    assert_eq!(gcd(&q, &Polynomial::zero(2)), Ok(q.abs()));
    assert_eq!(gcd(&p("x1*x2", 2), &p("x1^2", 2)), Ok(p("x1", 2)));
    assert_eq!(gcd(&Polynomial::zero(1), &Polynomial::zero(1)), Err(PolyError::BothZero));
}

#[test]
fn gcd_contract_on_random_triples() {
    let mut rng = SplitMix64::new(271);
    let mut nontrivial = 0;
    for _ in 0..120 {
        let a = random_poly(&mut rng, 2, 2, 2, 4);
        let b = random_poly(&mut rng, 2, 2, 2, 4);
        let r = random_poly(&mut rng, 2, 2, 2, 4);
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let g = gcd(&a, &b).unwrap();
        // divides both (checked through exact division)
        if !a.is_zero() {
            assert!(g.divides(&a));
        }
        if !b.is_zero() {
            assert!(g.divides(&b));
        }
        if !r.is_zero() && !(a.is_zero() && b.is_zero()) {
            let lhs = gcd(&a.mul(&r), &b.mul(&r)).unwrap();
            let rhs = r.abs().mul(&g);
            assert_eq!(lhs, rhs, "gcd(ar, br) = |r| gcd(a, b)");
            if !g.is_one() {
                nontrivial += 1;
            }
        }
    }
    assert!(nontrivial > 0, "battery must exercise nontrivial gcds");
}

#[test]
fn factor_examples() {
    // 6 x^2 - 6 = 2 * 3 * (x-1) * (x+1)
    let f = factor(&p("6*x1^2-6", 1)).unwrap();
    assert_eq!(f.sign, 1);
    let expected: Vec<(Polynomial, u32)> = vec![
        (p("2", 1), 1),
        (p("3", 1), 1),
        (p("x1-1", 1), 1),
        (p("x1+1", 1), 1),
    ];
    assert_eq!(f.factors, expected);
    assert_eq!(f.recompose(1), p("6*x1^2-6", 1));

    // units factor to an empty multiset
    let minus_one = factor(&Polynomial::int(1, -1)).unwrap();
    assert_eq!(minus_one.sign, -1);
    assert!(minus_one.factors.is_empty());
    let one = factor(&Polynomial::one(2)).unwrap();
    assert_eq!(one.sign, 1);
    assert!(one.factors.is_empty());

    // monomial
    let f = factor(&p("x1^2*x2", 2)).unwrap();
    assert_eq!(f.sign, 1);
    assert_eq!(f.factors, vec![(p("x1", 2), 2), (p("x2", 2), 1)]);
}

#[test]
fn factor_budget_is_enforced() {
    assert!(matches!(factor(&p("x1^7", 1)), Err(PolyError::DeskScaleLimit(_))));
    assert!(matches!(factor(&Polynomial::var(4, 3)), Err(PolyError::DeskScaleLimit(_))));
    assert!(matches!(factor(&Polynomial::zero(1)), Err(PolyError::Precondition(_))));
}

#[test]
fn factor_mixed_multivariate() {
    // (x1 + x2)(x1 x2 + 1), irreducible factors recovered through the
    // Kronecker substitution and subset search
    let a = p("x1+x2", 2);
    let b = p("x1*x2+1", 2);
    let f = factor(&a.mul(&b)).unwrap();
    assert_eq!(f.sign, 1);
    assert_eq!(f.factors.len(), 2);
    assert_eq!(f.recompose(2), a.mul(&b));

    // repeated factors and sign
    let q = a.mul(&a).mul(&b).neg();
    let f = factor(&q).unwrap();
    assert_eq!(f.sign, -1);
    assert_eq!(f.recompose(2), q);
    assert!(f.factors.iter().any(|(g, m)| *g == a && *m == 2));
}

#[test]
fn factor_three_variables() {
    let a = p("x1+x2+x3", 3);
    let b = p("x3+1", 3);
    let c = p("2", 3);
    let input = a.mul(&b).mul(&c);
    let f = factor(&input).unwrap();
    assert_eq!(f.recompose(3), input);
    assert_eq!(f.factors.len(), 3);
}

#[test]
fn gauss_lemma_examples() {
    // prime 2 embedded in Z[x], dividing neither x+1 nor x-1
    assert_eq!(gauss_lemma_check(&p("2", 1), &p("x1+1", 1), &p("x1-1", 1)), Ok(false));
    assert_eq!(
        gauss_lemma_check(&p("x1", 2), &p("x1*x2+1", 2), &p("x2+1", 2)),
        Ok(false)
    );
    assert!(matches!(
        gauss_lemma_check(&p("3", 1), &p("3*x1", 1), &p("x1+1", 1)),
        Err(PolyError::Precondition(_))
    ));
    // not from the coefficient ring: mentions the last variable
    assert!(matches!(
        gauss_lemma_check(&p("x2", 2), &p("x1+1", 2), &p("x1-1", 2)),
        Err(PolyError::Precondition(_))
    ));
}

#[test]
fn trichotomy_and_closure() {
    let mut rng = SplitMix64::new(9000);
    for _ in 0..1000 {
        let a = random_poly(&mut rng, 3, 3, 4, 9);
        let states = [a.is_positive(), a.is_zero(), a.neg().is_positive()];
        assert_eq!(states.iter().filter(|s| **s).count(), 1, "trichotomy for {a}");
        let b = random_poly(&mut rng, 3, 3, 4, 9);
        if a.is_positive() && b.is_positive() {
            assert!(a.add(&b).is_positive());
            assert!(a.mul(&b).is_positive());
        }
        // sign and abs are multiplicative
        assert_eq!(a.mul(&b).sign(), a.sign() * b.sign());
        assert_eq!(a.mul(&b).abs(), a.abs().mul(&b.abs()));
    }
}

#[test]
fn factor_roundtrip_on_random_premier_products() {
    let pool: Vec<Polynomial> = [
        "2", "3", "5", "x1", "x1+1", "x1-1", "x2", "x2+1", "x1+x2", "x1*x2+1", "2*x1+1",
    ]
    .iter()
    .map(|s| p(s, 2))
    .collect();
    let mut rng = SplitMix64::new(333);
    for _ in 0..60 {
        let mut chosen: Vec<Polynomial> = Vec::new();
        let mut product = Polynomial::one(2);
        for _ in 0..(1 + rng.usize_below(3)) {
            let f = pool[rng.usize_below(pool.len())].clone();
            let next = product.mul(&f);
            if next.total_degree().unwrap_or(0) > 6 {
                break;
            }
            chosen.push(f);
            product = next;
        }
        if chosen.is_empty() {
            continue;
        }
        let f = factor(&product).unwrap();
        assert_eq!(f.recompose(2), product, "round trip for {product}");
        // uniqueness: the found multiset is exactly the chosen one
        let mut found: Vec<Polynomial> = Vec::new();
        for (g, m) in &f.factors {
            for _ in 0..*m {
                found.push(g.clone());
            }
        }
        let mut expected = chosen.clone();
        expected.sort_by(|a, b| a.compare(b).unwrap());
        found.sort_by(|a, b| a.compare(b).unwrap());
        assert_eq!(found, expected, "unique factorization of {product}");
    }
}

#[test]
fn parse_and_display_round_trip() {
    for src in ["3*x1^2*x2 - 4", "x1 - 5", "-x1*x2^2 + 7*x1", "0", "42", "-x3^4"] {
        let q = p(src, 3);
        assert_eq!(parse_polynomial(&q.to_string(), 3).unwrap(), q);
        assert_eq!(parse_polynomial(&q.to_compact_string(), 3).unwrap(), q);
    }
}

#[test]
fn parse_rejects_unknown_variables() {
    let err = parse_polynomial("x1+x3", 2).unwrap_err();
    assert!(err.msg.contains("x3"));
    assert!(parse_polynomial("", 1).is_err());
    assert!(parse_polynomial("x1 +", 1).is_err());
    assert!(parse_polynomial("x0", 1).is_err());
}

#[test]
fn unit_search_over_small_constants() {
    // the only units among degree-0 candidates with small coefficients are 1 and -1
    let ring = PolyRing::new(2);
    let mut units = Vec::new();
    for c in -10..=10i64 {
        let cand = Polynomial::int(2, c);
        if !cand.is_zero() && ring.is_unit(&cand).unwrap() {
            units.push(c);
        }
    }
    assert_eq!(units, vec![-1, 1]);
}

proptest! {
    #[test]
    fn prop_mul_distributes(seed in 0u64..5000) {
        let mut rng = SplitMix64::new(seed);
        let a = random_poly(&mut rng, 2, 3, 3, 5);
        let b = random_poly(&mut rng, 2, 3, 3, 5);
        let c = random_poly(&mut rng, 2, 3, 3, 5);
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn prop_exact_div_inverts_mul(seed in 0u64..2000) {
        let mut rng = SplitMix64::new(seed.wrapping_mul(77).wrapping_add(1));
        let a = random_poly(&mut rng, 2, 3, 3, 5);
        let b = random_poly(&mut rng, 2, 3, 3, 5);
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }
}
