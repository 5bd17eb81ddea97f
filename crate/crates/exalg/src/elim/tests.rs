use super::*;
use crate::poly::parse_polynomial;

fn gp(src: &str, nvars: usize) -> Polynomial {
    parse_polynomial(src, nvars).unwrap()
}

#[test]
fn size_one_trace() {
    // hand-run: a^1(1,1) = a11*a11 - a11*a11 + 1*a11 = a11
    let trace = eliminate(1).unwrap();
    assert_eq!(trace.pivots()[1], gp("x1", 1));
    assert_eq!(*trace.stages()[1].at(0, 0), gp("x1", 1));
    assert!(trace.accumulators()[1].at(0, 0).is_one());
    trace.verify_invariants().unwrap();
}

#[test]
fn size_two_pivot() {
    // hand-run of the recurrence: d_2 = a11 * (a11 a22 - a21 a12)
    let trace = eliminate(2).unwrap();
    assert_eq!(trace.pivots()[2], gp("x1^2*x4 - x1*x2*x3", 4));
    trace.verify_invariants().unwrap();
}

#[test]
fn size_three_trace_invariants() {
    eliminate(3).unwrap().verify_invariants().unwrap();
}

#[test]
fn elimination_rejects_bad_sizes() {
    assert!(matches!(eliminate(0), Err(ElimError::Precondition(_))));
    assert!(matches!(eliminate(5), Err(ElimError::DeskScaleLimit(_))));
}

#[test]
fn reduced_inverse_examples() {
    let r1 = reduced_inverse(1).unwrap();
    assert_eq!(r1.det, gp("x1", 1));
    assert!(r1.adjugate.at(0, 0).is_one());
    assert!(r1.content.is_one());

    let r2 = reduced_inverse(2).unwrap();
    assert_eq!(r2.det, gp("x1*x4 - x2*x3", 4));
    assert_eq!(r2.content, gp("x1", 4));
    assert_eq!(*r2.adjugate.at(0, 0), gp("x4", 4));
    assert_eq!(*r2.adjugate.at(0, 1), gp("-x2", 4));
    assert_eq!(*r2.adjugate.at(1, 0), gp("-x3", 4));
    assert_eq!(*r2.adjugate.at(1, 1), gp("x1", 4));
}

#[test]
fn adjugate_identity_small_sizes() {
    for n in 1..=3 {
        let reduced = reduced_inverse(n).unwrap();
        assert_eq!(reduced.det_at_identity(), BigInt::one(), "det(Id) = 1 at n={n}");
        for cmp in reduced.verify_adjugate_identity().unwrap() {
            assert!(cmp.equal(), "{}", cmp.first_difference().unwrap());
        }
    }
}

#[test]
fn leibniz_matches_elimination() {
    assert_eq!(leibniz_det(1).unwrap(), gp("x1", 1));
    assert_eq!(leibniz_det(2).unwrap(), gp("x1*x4 - x2*x3", 4));
    for n in 1..=3 {
        assert_eq!(leibniz_det(n).unwrap(), det_generic(n).unwrap(), "oracle equality at n={n}");
    }
    let det3 = leibniz_det(3).unwrap();
    assert_eq!(det3.term_count(), 6);
}

#[test]
fn charpoly_generic_examples() {
    let c1 = charpoly_generic(1).unwrap();
    assert_eq!(c1.coeffs, vec![Polynomial::one(1), gp("-x1", 1)]);

    let c2 = charpoly_generic(2).unwrap();
    assert_eq!(
        c2.coeffs,
        vec![Polynomial::one(4), gp("-x1-x4", 4), gp("x1*x4-x2*x3", 4)]
    );

    // constant term is (-1)^n det(A)
    for n in 1..=3 {
        let data = charpoly_generic(n).unwrap();
        let det = det_generic(n).unwrap();
        let expected = if n % 2 == 0 { det } else { det.neg() };
        assert_eq!(data.coeffs[n], expected, "c_n = (-1)^n det at n={n}");
        assert!(data.verify_resolvent().unwrap(), "resolvent expansion at n={n}");
    }
}

#[test]
fn cayley_hamilton_generic() {
    for n in 1..=3 {
        assert!(cayley_hamilton_check(n).unwrap(), "chi_A(A) = 0 at n={n}");
    }
}

#[test]
fn adjugate_from_charpoly_matches() {
    // n = 2: -(A - (a11+a22) Id) = [[a22, -a12], [-a21, a11]]
    let adj = adjugate_from_charpoly(2).unwrap();
    assert_eq!(*adj.at(0, 0), gp("x4", 4));
    assert_eq!(*adj.at(0, 1), gp("-x2", 4));
    for n in 1..=3 {
        assert_eq!(adjugate_from_charpoly(n).unwrap(), reduced_inverse(n).unwrap().adjugate);
    }
}

#[test]
fn multiplicativity_small() {
    for n in 1..=2 {
        let cmp = multiplicativity_sides(n).unwrap();
        assert!(cmp.equal(), "{}", cmp.first_difference().unwrap());
    }
}

#[test]
fn block_triangular_simplest() {
    // p = q = 1: det [[u, w], [0, v]] = u*v
    let sides = block_triangular_sides(1, 1).unwrap();
    for cmp in &sides {
        assert!(cmp.equal(), "{}", cmp.first_difference().unwrap());
    }
    let det_cmp = &sides[0];
    assert_eq!(det_cmp.rhs, gp("x1*x3", 3));
}

#[test]
fn cramer_small() {
    for n in 1..=2 {
        for cmp in cramer_sides(n).unwrap() {
            assert!(cmp.equal(), "{}", cmp.first_difference().unwrap());
        }
    }
}

#[test]
fn transpose_cofactor_expansion_alternating_small() {
    for n in 1..=3 {
        let cmp = transpose_sides(n).unwrap();
        assert!(cmp.equal());
        for cmp in cofactor_sides(n).unwrap() {
            assert!(cmp.equal(), "{}", cmp.first_difference().unwrap());
        }
        for cmp in expansion_sides(n).unwrap() {
            assert!(cmp.equal(), "{}", cmp.first_difference().unwrap());
        }
        for cmp in alternating_sides(n).unwrap() {
            assert!(cmp.equal(), "{}", cmp.first_difference().unwrap());
        }
    }
}

#[test]
fn full_budget_size_four() {
    // the largest supported generic size works end to end
    assert!(cayley_hamilton_check(4).unwrap());
    assert_eq!(adjugate_from_charpoly(4).unwrap(), reduced_inverse(4).unwrap().adjugate);
    assert!(charpoly_generic(4).unwrap().verify_resolvent().unwrap());
    eliminate(4).unwrap().verify_invariants().unwrap();
    assert_eq!(leibniz_det(4).unwrap(), det_generic(4).unwrap());
}

#[test]
fn corrupted_recurrence_is_detected() {
    let trace = eliminate_corrupted(2).unwrap();
    // the harness must notice: either reduction fails or the identity breaks
    let detected = match reduce_trace(&trace) {
        Err(_) => true,
        Ok(reduced) => reduced
            .verify_adjugate_identity()
            .unwrap()
            .iter()
            .any(|cmp| !cmp.equal()),
    };
    assert!(detected, "corrupted elimination slipped through verification");
    assert!(trace.verify_invariants().is_err());
}
