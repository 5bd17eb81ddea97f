//! Subfield structure of the rational quaternions: left-multiplication
//! operators, minimal polynomials, characteristic polynomials over a maximal
//! commutative subfield, the reduced norm, centralizer dimensions, and
//! inner-automorphism witnesses.
//!
//! Everything reduces to exact rational linear algebra in the coordinates of
//! the basis (1, i, j, k).

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::quat::Quaternion;
use crate::skew::{left_echelon, left_rank, RationalField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CentersError {
    #[error("the given family does not span a subfield: {0}")]
    NotASubfield(String),
    #[error("the assignment does not extend to a ring automorphism: {0}")]
    NotAnAutomorphism(String),
}

/// Left multiplication by `a` as a rational 4x4 matrix in the basis
/// (1, i, j, k), columns are the images of the basis quaternions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftMultOperator {
    pub a: Quaternion,
    pub matrix: [[BigRational; 4]; 4],
}

pub fn sigma_matrix(a: &Quaternion) -> LeftMultOperator {
    LeftMultOperator { a: a.clone(), matrix: mult_matrix(a, true) }
}

/// Right multiplication by `a` in the same basis.
pub fn rho_matrix(a: &Quaternion) -> [[BigRational; 4]; 4] {
    mult_matrix(a, false)
}

fn mult_matrix(a: &Quaternion, left: bool) -> [[BigRational; 4]; 4] {
    let basis = [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()];
    let mut cols = Vec::with_capacity(4);
    for e in &basis {
        let image = if left { a.mul(e) } else { e.mul(a) };
        cols.push(image.coords());
    }
    std::array::from_fn(|r| std::array::from_fn(|c| cols[c][r].clone()))
}

impl LeftMultOperator {
    pub fn apply(&self, x: &Quaternion) -> Quaternion {
        let coords = x.coords();
        let mut out = [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()];
        for (r, out_r) in out.iter_mut().enumerate() {
            for (c, coord) in coords.iter().enumerate() {
                *out_r += &self.matrix[r][c] * coord;
            }
        }
        Quaternion::from_coords(&out)
    }

    pub fn compose(&self, other: &LeftMultOperator) -> [[BigRational; 4]; 4] {
        std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                (0..4).map(|k| &self.matrix[r][k] * &other.matrix[k][c]).sum()
            })
        })
    }
}

/// Minimal polynomial data: the least-degree monic rational polynomial
/// annihilating `a`, its degree, and the cofactor degree with
/// `degree * cofactor_degree = 2` (the quaternions have degree 2 over their
/// maximal commutative subfields).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPolynomialData {
    pub a: Quaternion,
    pub degree: usize,
    /// Monic coefficients, constant term first: `P = X^d + .. + coeffs[0]`.
    pub coeffs: Vec<BigRational>,
    pub cofactor_degree: usize,
}

impl MinimalPolynomialData {
    /// Evaluate `P` at a quaternion.
    pub fn eval(&self, x: &Quaternion) -> Quaternion {
        let mut acc = Quaternion::one();
        let mut result = Quaternion::zero();
        for c in &self.coeffs {
            result = result.add(&acc.scale(c));
            acc = acc.mul(x);
        }
        result.add(&acc)
    }

    /// Coefficients of `P^e`, constant term first, monic.
    pub fn power_coeffs(&self, e: usize) -> Vec<BigRational> {
        let mut base = self.coeffs.clone();
        base.push(BigRational::one());
        let mut acc = vec![BigRational::one()];
        for _ in 0..e {
            let mut next = vec![BigRational::zero(); acc.len() + base.len() - 1];
            for (i, x) in acc.iter().enumerate() {
                for (j, y) in base.iter().enumerate() {
                    next[i + j] += x * y;
                }
            }
            acc = next;
        }
        acc.pop();
        acc
    }
}

/// Least `p` with `span(1, a, .., a^p) = span(1, .., a^(p-1))`, realized by
/// solving `a^p = sum c_j a^j` in coordinates. The result is re-verified by
/// evaluating on `a`.
pub fn minimal_polynomial(a: &Quaternion) -> MinimalPolynomialData {
    let ring = RationalField;
    let mut powers: Vec<Vec<BigRational>> = vec![Quaternion::one().coords().to_vec()];
    let mut p = 0usize;
    loop {
        p += 1;
        let next = a.pow(p as u32).coords().to_vec();
        if left_rank(&ring, &powers) == left_rank(&ring, &{
            let mut with = powers.clone();
            with.push(next.clone());
            with
        }) {
            // a^p depends on the earlier powers: solve for the coefficients
            let ech = left_echelon(&ring, &powers);
            let mut w = next;
            let mut combo = vec![BigRational::zero(); powers.len()];
            for (r, &col) in ech.pivot_cols.iter().enumerate() {
                let c = w[col].clone();
                for j in 0..4 {
                    w[j] = &w[j] - &c * &ech.rows[r][j];
                }
                combo[r] = c;
            }
            assert!(w.iter().all(|x| x.is_zero()));
            // coefficients in the power basis: c = combo * transform
            let coeffs: Vec<BigRational> = (0..powers.len())
                .map(|j| (0..powers.len()).map(|r| &combo[r] * &ech.transform[r][j]).sum())
                .collect();
            let data = MinimalPolynomialData {
                a: a.clone(),
                degree: p,
                coeffs: coeffs.iter().map(|c| -c).collect(),
                cofactor_degree: 2 / p,
            };
            assert!(data.eval(a).is_zero(), "minimal polynomial certificate failed");
            assert!(p == 1 || p == 2, "quaternion degrees over the center are 1 or 2");
            assert_eq!(p == 1, a.is_central());
            return data;
        }
        powers.push(a.pow(p as u32).coords().to_vec());
    }
}

/// The 2x2 matrix of left multiplication by `a` on the quaternions viewed as
/// a right vector space over the commutative subfield `L`, together with the
/// characteristic polynomial data. `L = Q[a]` for non-central `a`, `Q[i]`
/// for central `a`; the second basis vector is a pure quaternion orthogonal
/// to the pure part of the generator (deterministic choice).
#[derive(Debug, Clone)]
pub struct SubfieldRepresentation {
    pub a: Quaternion,
    /// generator of L (a itself, or i when a is central)
    pub generator: Quaternion,
    /// the right-L basis (1, u)
    pub second_basis: Quaternion,
    /// entries of the 2x2 matrix over L (as quaternions lying in L)
    pub matrix: [[Quaternion; 2]; 2],
    /// characteristic polynomial `X^2 + c1 X + c0`, coefficients in the
    /// center: `[c0, c1]`
    pub charpoly: [BigRational; 2],
}

pub fn charpoly_over_subfield(a: &Quaternion) -> SubfieldRepresentation {
    let generator = if a.is_central() { Quaternion::i() } else { a.clone() };
    let v = generator.pure_part();
    // first of j, k, i not parallel to the pure part of the generator,
    // then made orthogonal to it
    let candidates = [Quaternion::j(), Quaternion::k(), Quaternion::i()];
    let chosen = candidates
        .iter()
        .find(|w| !parallel(&w.pure_part(), &v))
        .expect("some basis quaternion is not parallel to the pure part");
    let dot = dot3(&chosen.pure_part(), &v);
    let vv = dot3(&v, &v);
    let u = if dot.is_zero() {
        chosen.clone()
    } else {
        let coeff = dot / vv;
        chosen.sub(&Quaternion::new(
            BigRational::zero(),
            &coeff * &v[0],
            &coeff * &v[1],
            &coeff * &v[2],
        ))
    };

    // solve a * b_k = b_1 lambda_1 + b_2 lambda_2 with lambda in L, for both
    // basis quaternions b_1 = 1, b_2 = u; the unknowns are the four rational
    // coordinates of lambda_1 = s + t g, lambda_2 = s' + t' g
    let b = [Quaternion::one(), u.clone()];
    let col_basis = [
        Quaternion::one(),
        generator.clone(),
        u.clone(),
        u.mul(&generator),
    ];
    let mut matrix: [[Quaternion; 2]; 2] =
        [[Quaternion::zero(), Quaternion::zero()], [Quaternion::zero(), Quaternion::zero()]];
    for (k, bk) in b.iter().enumerate() {
        let rhs = a.mul(bk);
        let coeffs = solve_in_span(&col_basis, &rhs)
            .expect("(1, u) is a right-L basis of the quaternions");
        matrix[0][k] = Quaternion::from_rational(coeffs[0].clone())
            .add(&generator.scale(&coeffs[1]));
        matrix[1][k] = Quaternion::from_rational(coeffs[2].clone())
            .add(&generator.scale(&coeffs[3]));
    }

    // trace and determinant of the 2x2 matrix over the commutative field L
    let trace = matrix[0][0].add(&matrix[1][1]);
    let det = matrix[0][0].mul(&matrix[1][1]).sub(&matrix[0][1].mul(&matrix[1][0]));
    let c1 = trace
        .neg()
        .as_rational()
        .expect("characteristic polynomial coefficients lie in the center");
    let c0 = det.as_rational().expect("characteristic polynomial coefficients lie in the center");
    SubfieldRepresentation {
        a: a.clone(),
        generator,
        second_basis: u,
        matrix,
        charpoly: [c0, c1],
    }
}

impl SubfieldRepresentation {
    /// Monic coefficient list `[c0, c1]` (degree 2), constant first.
    pub fn charpoly_coeffs(&self) -> Vec<BigRational> {
        self.charpoly.to_vec()
    }
}

/// Reduced norm: the determinant of left multiplication over a maximal
/// commutative subfield; equals the sum of the four squared coordinates.
pub fn reduced_norm(a: &Quaternion) -> BigRational {
    charpoly_over_subfield(a).charpoly[0].clone()
}

fn dot3(x: &[BigRational; 3], y: &[BigRational; 3]) -> BigRational {
    &x[0] * &y[0] + &x[1] * &y[1] + &x[2] * &y[2]
}

fn parallel(x: &[BigRational; 3], y: &[BigRational; 3]) -> bool {
    // cross product vanishes
    (&x[1] * &y[2] - &x[2] * &y[1]).is_zero()
        && (&x[2] * &y[0] - &x[0] * &y[2]).is_zero()
        && (&x[0] * &y[1] - &x[1] * &y[0]).is_zero()
}

/// Express `target` as a rational combination of the given quaternions.
fn solve_in_span(span: &[Quaternion], target: &Quaternion) -> Option<Vec<BigRational>> {
    let ring = RationalField;
    let rows: Vec<Vec<BigRational>> = span.iter().map(|q| q.coords().to_vec()).collect();
    let ech = left_echelon(&ring, &rows);
    let mut w = target.coords().to_vec();
    let mut combo = vec![BigRational::zero(); span.len()];
    for (r, &col) in ech.pivot_cols.iter().enumerate() {
        let c = w[col].clone();
        for j in 0..4 {
            w[j] = &w[j] - &c * &ech.rows[r][j];
        }
        combo[r] = c;
    }
    if !w.iter().all(|x| x.is_zero()) {
        return None;
    }
    Some(
        (0..span.len())
            .map(|j| (0..span.len()).map(|r| &combo[r] * &ech.transform[r][j]).sum())
            .collect(),
    )
}

/// Centralizer of the subfield spanned by `l_basis`: dimension and a basis,
/// found as the kernel of the stacked commutation system
/// `(sigma(lambda) - rho(lambda)) z = 0`.
#[derive(Debug, Clone)]
pub struct CentralizerData {
    pub dim_l: usize,
    pub dim_centralizer: usize,
    pub basis: Vec<Quaternion>,
}

pub fn centralizer(l_basis: &[Quaternion]) -> Result<CentralizerData, CentersError> {
    if l_basis.is_empty() {
        return Err(CentersError::NotASubfield("empty basis".into()));
    }
    let ring = RationalField;
    let coord_rows: Vec<Vec<BigRational>> = l_basis.iter().map(|q| q.coords().to_vec()).collect();
    let dim_l = left_rank(&ring, &coord_rows);
    // the span must contain 1 and be closed under multiplication
    if solve_in_span(l_basis, &Quaternion::one()).is_none() {
        return Err(CentersError::NotASubfield("the span does not contain 1".into()));
    }
    for x in l_basis {
        for y in l_basis {
            if solve_in_span(l_basis, &x.mul(y)).is_none() {
                return Err(CentersError::NotASubfield(format!(
                    "the span is not closed under multiplication: ({x})*({y}) escapes"
                )));
            }
        }
    }

    // stack the commutation constraints for every basis element
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for lambda in l_basis {
        let sigma = sigma_matrix(lambda).matrix;
        let rho = rho_matrix(lambda);
        for r in 0..4 {
            rows.push((0..4).map(|c| &sigma[r][c] - &rho[r][c]).collect());
        }
    }
    let kernel = rational_nullspace(&rows, 4);
    let basis: Vec<Quaternion> = kernel.iter().map(|z| Quaternion::from_coords(z)).collect();
    // certificate: each basis element commutes with every generator
    for z in &basis {
        for lambda in l_basis {
            assert_eq!(z.mul(lambda), lambda.mul(z), "centralizer certificate failed");
        }
    }
    let dim_centralizer = basis.len();
    assert_eq!(dim_centralizer * dim_l, 4, "centralizer dimension law violated");
    Ok(CentralizerData { dim_l, dim_centralizer, basis })
}

/// Kernel basis of a rational matrix given by rows (acting on column vectors
/// of length `n`), via reduced row echelon form and free columns.
pub fn rational_nullspace(rows: &[Vec<BigRational>], n: usize) -> Vec<Vec<BigRational>> {
    let ring = RationalField;
    let ech = left_echelon(&ring, rows);
    let pivot_cols = &ech.pivot_cols;
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut z = vec![BigRational::zero(); n];
        z[free] = BigRational::one();
        for (r, &p) in pivot_cols.iter().enumerate() {
            z[p] = -ech.rows[r][free].clone();
        }
        basis.push(z);
    }
    basis
}

/// A conjugation witness for the automorphism determined by the images of
/// `i` and `j`: a nonzero `a` with `x a = a alpha(x)` for all `x`, so that
/// `alpha(x) = a^(-1) x a`. The full kernel basis is returned; the first
/// vector is the designated witness.
#[derive(Debug, Clone)]
pub struct InnerAutoWitness {
    pub img_i: Quaternion,
    pub img_j: Quaternion,
    pub witness: Quaternion,
    pub kernel_basis: Vec<Quaternion>,
}

impl InnerAutoWitness {
    /// The automorphism applied through the witness: `a^(-1) x a`.
    pub fn conjugate(&self, x: &Quaternion) -> Quaternion {
        let inv = self.witness.inverse().expect("witness is nonzero");
        inv.mul(x).mul(&self.witness)
    }
}

pub fn inner_automorphism_witness(
    img_i: &Quaternion,
    img_j: &Quaternion,
) -> Result<InnerAutoWitness, CentersError> {
    let minus_one = Quaternion::one().neg();
    if img_i.mul(img_i) != minus_one {
        return Err(CentersError::NotAnAutomorphism("the image of i must square to -1".into()));
    }
    if img_j.mul(img_j) != minus_one {
        return Err(CentersError::NotAnAutomorphism("the image of j must square to -1".into()));
    }
    if img_i.mul(img_j) != img_j.mul(img_i).neg() {
        return Err(CentersError::NotAnAutomorphism("the images of i and j must anticommute".into()));
    }

    // linearization: x a = a alpha(x) for x in {i, j} gives
    // (sigma(x) - rho(alpha(x))) a = 0, stacked into an 8x4 system
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (x, alpha_x) in [(Quaternion::i(), img_i), (Quaternion::j(), img_j)] {
        let sigma = sigma_matrix(&x).matrix;
        let rho = rho_matrix(alpha_x);
        for r in 0..4 {
            rows.push((0..4).map(|c| &sigma[r][c] - &rho[r][c]).collect());
        }
    }
    let kernel = rational_nullspace(&rows, 4);
    assert!(!kernel.is_empty(), "a conjugation witness always exists for an automorphism");
    let basis: Vec<Quaternion> = kernel.iter().map(|z| Quaternion::from_coords(z)).collect();
    let witness = basis[0].clone();
    let out = InnerAutoWitness {
        img_i: img_i.clone(),
        img_j: img_j.clone(),
        witness,
        kernel_basis: basis,
    };
    // certificate on the multiplicative basis (enough by linearity)
    let img_k = img_i.mul(img_j);
    assert_eq!(out.conjugate(&Quaternion::i()), *img_i);
    assert_eq!(out.conjugate(&Quaternion::j()), *img_j);
    assert_eq!(out.conjugate(&Quaternion::k()), img_k);
    Ok(out)
}

/// 4x4 characteristic polynomial of left multiplication at the level of the
/// center (monic coefficients, leading first), used for the consistency law
/// against the subfield representation.
pub fn center_level_charpoly(a: &Quaternion) -> Vec<BigRational> {
    use crate::matrix::RingMatrix;
    use crate::rings::RationalRing;
    let sigma = sigma_matrix(a).matrix;
    let m = RingMatrix::from_fn(RationalRing, 4, 4, |i, j| sigma[i][j].clone());
    m.charpoly_coeffs().expect("4x4 rational charpoly")
}
