use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::*;
use crate::checks::rng::SplitMix64;
use crate::poly::{parse_polynomial, PolyRing};
use crate::rings::{IntegerRing, ModRing, RationalRing};

fn zmat(rows: Vec<Vec<i64>>) -> RingMatrix<IntegerRing> {
    RingMatrix::from_rows(
        IntegerRing,
        rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(),
    )
}

fn zmod_mat(n: u64, rows: Vec<Vec<i64>>) -> RingMatrix<ModRing> {
    let ring = ModRing::from_u64(n);
    RingMatrix::from_rows(
        ring.clone(),
        rows.into_iter().map(|r| r.into_iter().map(|v| ring.element(v)).collect()).collect(),
    )
}

pub(crate) fn random_zmat(rng: &mut SplitMix64, n: usize, bound: i64) -> RingMatrix<IntegerRing> {
    RingMatrix::from_fn(IntegerRing, n, n, |_, _| BigInt::from(rng.i64_in(-bound, bound + 1)))
}

#[test]
fn det_examples() {
    assert_eq!(zmat(vec![vec![1, 2], vec![3, 4]]).det().unwrap(), BigInt::from(-2));
    for n in 0..5 {
        assert!(RingMatrix::identity(IntegerRing, n).det().unwrap().is_one());
    }
    let z6 = zmod_mat(6, vec![vec![2, 0], vec![0, 3]]);
    assert!(z6.ring().is_zero(&z6.det().unwrap()));
}

#[test]
fn det_strategies_agree_where_supported() {
    let mut rng = SplitMix64::new(404);
    for n in 0..=4 {
        for _ in 0..25 {
            let m = random_zmat(&mut rng, n, 9);
            let reference = CofactorDet.det(&m).unwrap();
            for s in det_strategies::<IntegerRing>() {
                assert!(s.supports(&IntegerRing));
                assert_eq!(s.det(&m).unwrap(), reference, "strategy {}", s.name());
            }
        }
    }
    // over Z/6 only the division-free strategies apply
    let m = zmod_mat(6, vec![vec![1, 2], vec![3, 4]]);
    let bareiss: Box<dyn DetStrategy<ModRing>> = Box::new(BareissDet);
    assert!(!bareiss.supports(m.ring()));
    assert!(matches!(bareiss.det(&m), Err(MatrixError::StrategyUnsupported { .. })));
    assert_eq!(CofactorDet.det(&m).unwrap(), LeibnizDet.det(&m).unwrap());
}

#[test]
fn det_strategy_registry_lookup() {
    assert!(det_strategy::<IntegerRing>("bareiss").is_ok());
    assert!(det_strategy::<IntegerRing>("cofactor").is_ok());
    assert!(det_strategy::<IntegerRing>("leibniz").is_ok());
    assert!(matches!(
        det_strategy::<IntegerRing>("schoolbook"),
        Err(MatrixError::UnknownStrategy(_))
    ));
}

#[test]
fn bareiss_handles_zero_pivots() {
    let m = zmat(vec![vec![0, 1, 2], vec![1, 0, 3], vec![4, 5, 0]]);
    assert_eq!(BareissDet.det(&m).unwrap(), CofactorDet.det(&m).unwrap());
    let singular = zmat(vec![vec![0, 0], vec![1, 1]]);
    assert!(BareissDet.det(&singular).unwrap().is_zero());
}

#[test]
fn adjugate_examples() {
    let m = zmat(vec![vec![1, 2], vec![3, 4]]);
    assert_eq!(m.adjugate().unwrap(), zmat(vec![vec![4, -2], vec![-3, 1]]));
    // adjugate * M = det * Id = M * adjugate
    let det = m.det().unwrap();
    let lhs = m.adjugate().unwrap().mul(&m).unwrap();
    let rhs = RingMatrix::identity(IntegerRing, 2).scalar_mul(&det);
    assert_eq!(lhs, rhs);
    assert_eq!(m.mul(&m.adjugate().unwrap()).unwrap(), rhs);
    assert_eq!(zmat(vec![vec![7]]).adjugate().unwrap(), zmat(vec![vec![1]]));
}

#[test]
fn charpoly_examples() {
    // nilpotent: X^2
    let m = zmat(vec![vec![0, 1], vec![0, 0]]);
    let coeffs = m.charpoly_coeffs().unwrap();
    assert_eq!(coeffs, vec![BigInt::one(), BigInt::zero(), BigInt::zero()]);

    let m = zmat(vec![vec![1, 2], vec![3, 4]]);
    // X^2 - 5X - 2
    assert_eq!(m.charpoly_coeffs().unwrap(), vec![BigInt::one(), BigInt::from(-5), BigInt::from(-2)]);
}

#[test]
fn cayley_hamilton_on_random_matrices() {
    let mut rng = SplitMix64::new(777);
    for _ in 0..100 {
        let m = random_zmat(&mut rng, 3, 9);
        let coeffs = m.charpoly_coeffs().unwrap();
        assert!(m.eval_charpoly(&coeffs).unwrap().is_zero_matrix(), "chi(M) = 0 over Z");
    }
    let z6 = ModRing::from_u64(6);
    for _ in 0..100 {
        let m = RingMatrix::from_fn(z6.clone(), 3, 3, |_, _| z6.element(rng.i64_in(0, 6)));
        let coeffs = m.charpoly_coeffs().unwrap();
        assert!(m.eval_charpoly(&coeffs).unwrap().is_zero_matrix(), "chi(M) = 0 over Z/6");
    }
}

#[test]
fn det_is_multiplicative_over_concrete_rings() {
    let mut rng = SplitMix64::new(6174);
    let z6 = ModRing::from_u64(6);
    for _ in 0..60 {
        let a = random_zmat(&mut rng, 3, 9);
        let b = random_zmat(&mut rng, 3, 9);
        let lhs = a.mul(&b).unwrap().det().unwrap();
        let rhs = IntegerRing.mul(&a.det().unwrap(), &b.det().unwrap());
        assert_eq!(lhs, rhs);
        let am = RingMatrix::from_fn(z6.clone(), 3, 3, |_, _| z6.element(rng.i64_in(0, 6)));
        let bm = RingMatrix::from_fn(z6.clone(), 3, 3, |_, _| z6.element(rng.i64_in(0, 6)));
        let lhs = am.mul(&bm).unwrap().det().unwrap();
        let rhs = z6.mul(&am.det().unwrap(), &bm.det().unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn cramer_examples() {
    let m = zmat(vec![vec![1, 2], vec![3, 4]]);
    let y = vec![BigInt::from(5), BigInt::from(6)];
    let sol = cramer_solve(&m, &y).unwrap();
    assert_eq!(sol.det, BigInt::from(-2));
    assert_eq!(sol.replaced, vec![BigInt::from(8), BigInt::from(-9)]);
    // -2 does not divide -9 in Z: no integral solution
    assert!(sol.solution.is_none());

    let id = RingMatrix::identity(IntegerRing, 2);
    let sol = cramer_solve(&id, &y).unwrap();
    assert_eq!(sol.solution, Some(y.clone()));

    // over Q the same system has x = (-4, 9/2)
    let q = RationalRing;
    let mq = RingMatrix::from_rows(
        q,
        vec![
            vec![BigRational::from_integer(1.into()), BigRational::from_integer(2.into())],
            vec![BigRational::from_integer(3.into()), BigRational::from_integer(4.into())],
        ],
    );
    let yq = vec![BigRational::from_integer(5.into()), BigRational::from_integer(6.into())];
    let sol = cramer_solve(&mq, &yq).unwrap();
    assert_eq!(
        sol.solution,
        Some(vec![
            BigRational::from_integer((-4).into()),
            BigRational::new(9.into(), 2.into()),
        ])
    );
}

#[test]
fn injectivity_and_isomorphism_over_z6() {
    let m = zmod_mat(6, vec![vec![2, 0], vec![0, 1]]);
    assert!(!m.is_injective().unwrap());
    // kernel witness (3, 0)
    let kernel = enumerate_kernel(&m).unwrap();
    let z6 = ModRing::from_u64(6);
    assert!(kernel.contains(&vec![z6.element(3), z6.element(0)]));
    assert!(kernel.len() > 1);

    let m = zmod_mat(6, vec![vec![5, 0], vec![0, 1]]);
    assert!(m.is_isomorphism().unwrap());
    assert_eq!(m.inverse().unwrap(), zmod_mat(6, vec![vec![5, 0], vec![0, 1]]));

    let m = zmat(vec![vec![1, 2], vec![3, 4]]);
    assert!(m.is_injective().unwrap());
    assert!(!m.is_isomorphism().unwrap());
}

#[test]
fn surjective_endo_inverse_examples() {
    // A = Id (n = 2): 1 - det(Id - X Id) = 2X - X^2, so P = 2 - X
    let id = RingMatrix::identity(IntegerRing, 2);
    let p = surjective_endo_inverse(&id).unwrap();
    assert_eq!(p.coeffs(), &[BigInt::from(2), BigInt::from(-1)]);

    // A = 0: P = 0
    let zero = RingMatrix::zero(IntegerRing, 3, 3);
    assert!(surjective_endo_inverse(&zero).unwrap().is_zero());

    // triangular example gives the same P as the identity
    let tri = zmat(vec![vec![1, 1], vec![0, 1]]);
    let p = surjective_endo_inverse(&tri).unwrap();
    assert_eq!(p.coeffs(), &[BigInt::from(2), BigInt::from(-1)]);
}

#[test]
fn transpose_contravariance() {
    let mut rng = SplitMix64::new(5150);
    for _ in 0..50 {
        let a = random_zmat(&mut rng, 3, 9);
        let b = random_zmat(&mut rng, 3, 9);
        assert_eq!(a.transpose().transpose(), a);
        // (AB)^t = B^t A^t
        assert_eq!(a.mul(&b).unwrap().transpose(), b.transpose().mul(&a.transpose()).unwrap());
        assert_eq!(a.transpose().det().unwrap(), a.det().unwrap());
    }
    // det(M^t) = det(M) over Z/6 as well
    let z6 = ModRing::from_u64(6);
    for _ in 0..50 {
        let m = RingMatrix::from_fn(z6.clone(), 3, 3, |_, _| z6.element(rng.i64_in(0, 6)));
        assert_eq!(m.transpose().det().unwrap(), m.det().unwrap());
    }
}

#[test]
fn specialize_generic_data() {
    // generic 2x2 determinant as a polynomial in a_(1,1)..a_(2,2)
    let det2 = parse_polynomial("x1*x4 - x2*x3", 4).unwrap();
    let m = zmat(vec![vec![1, 2], vec![3, 4]]);
    assert_eq!(specialize(&det2, &m).unwrap(), BigInt::from(-2));

    let id = RingMatrix::identity(IntegerRing, 2);
    assert_eq!(specialize(&det2, &id).unwrap(), BigInt::one());

    let z6 = zmod_mat(6, vec![vec![2, 0], vec![0, 1]]);
    assert_eq!(specialize(&det2, &z6).unwrap(), ModRing::from_u64(6).element(2));

    // specialization is a ring morphism: respects products of polynomials
    let ring = PolyRing::new(4);
    let p = parse_polynomial("x1+2*x2", 4).unwrap();
    let q = parse_polynomial("x3*x4-1", 4).unwrap();
    let m = zmat(vec![vec![2, -1], vec![5, 3]]);
    let lhs = specialize(&ring.mul(&p, &q), &m).unwrap();
    let rhs = IntegerRing.mul(&specialize(&p, &m).unwrap(), &specialize(&q, &m).unwrap());
    assert_eq!(lhs, rhs);
}

#[test]
fn enumeration_budget_is_enforced() {
    let z = IntegerRing;
    assert!(matches!(enumerate_vectors(&z, 2), Err(MatrixError::OracleUnavailable(_))));
    let big = ModRing::from_u64(101);
    assert!(matches!(enumerate_vectors(&big, 4), Err(MatrixError::OracleUnavailable(_))));
    let z6 = ModRing::from_u64(6);
    assert_eq!(enumerate_vectors(&z6, 2).unwrap().len(), 36);
}

#[test]
fn non_square_inputs_are_rejected() {
    let m = RingMatrix::from_fn(IntegerRing, 2, 3, |i, j| BigInt::from((i + j) as i64));
    assert!(matches!(m.det(), Err(MatrixError::NotSquare { .. })));
    assert!(matches!(m.adjugate(), Err(MatrixError::NotSquare { .. })));
    assert!(matches!(m.charpoly(), Err(MatrixError::NotSquare { .. })));
}

#[test]
fn det_size_budget() {
    let m = RingMatrix::identity(IntegerRing, 9);
    assert!(matches!(m.det(), Err(MatrixError::DeskScaleLimit(_))));
}
