//! Linear algebra over division rings: one-sided elimination, the four ranks
//! of a matrix, linear systems with unknowns acting from the left, basis
//! extraction and completion, and agreement of rational-coefficient results
//! between the rationals and the quaternions.
//!
//! Scalars act from the left throughout the elimination core; right actions
//! are obtained by running the same code over the opposite ring (the
//! multiplication-flipped structure), which is exactly how the crosswise rank
//! equalities arise.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::quat::Quaternion;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkewError {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("the given family is not free (rank {rank} < {len} vectors)")]
    NotFree { rank: usize, len: usize },
    #[error("matrix entries must be rational (central) for this check")]
    NonCentralEntry,
}

/// A division ring: a possibly noncommutative ring in which every nonzero
/// element is invertible.
pub trait DivisionRing: Clone + fmt::Debug {
    type Element: Clone + PartialEq + Eq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    /// Two-sided inverse of a nonzero element; panics on zero (callers check).
    fn inv(&self, a: &Self::Element) -> Self::Element;
    fn is_zero(&self, a: &Self::Element) -> bool;
    fn from_rational(&self, r: &BigRational) -> Self::Element;
    fn name(&self) -> String;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }
}

/// The rationals as a division ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalField;

impl DivisionRing for RationalField {
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
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, r: &BigRational) -> BigRational {
        r.clone()
    }
    fn name(&self) -> String {
        "Q".into()
    }
}

/// The rational quaternions as a division ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QuaternionField;

impl DivisionRing for QuaternionField {
    type Element = Quaternion;

    fn zero(&self) -> Quaternion {
        Quaternion::zero()
    }
    fn one(&self) -> Quaternion {
        Quaternion::one()
    }
    fn add(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a.add(b)
    }
    fn neg(&self, a: &Quaternion) -> Quaternion {
        a.neg()
    }
    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        a.mul(b)
    }
    fn inv(&self, a: &Quaternion) -> Quaternion {
        a.inverse().expect("inverse of zero")
    }
    fn is_zero(&self, a: &Quaternion) -> bool {
        a.is_zero()
    }
    fn from_rational(&self, r: &BigRational) -> Quaternion {
        Quaternion::from_rational(r.clone())
    }
    fn name(&self) -> String {
        "Quat".into()
    }
}

/// The opposite ring: same elements, multiplication reversed. Left-scalar
/// algorithms over `Opposite<K>` compute the right-scalar answers over `K`.
#[derive(Debug, Clone)]
pub struct Opposite<K: DivisionRing>(pub K);

impl<K: DivisionRing> DivisionRing for Opposite<K> {
    type Element = K::Element;

    fn zero(&self) -> K::Element {
        self.0.zero()
    }
    fn one(&self) -> K::Element {
        self.0.one()
    }
    fn add(&self, a: &K::Element, b: &K::Element) -> K::Element {
        self.0.add(a, b)
    }
    fn neg(&self, a: &K::Element) -> K::Element {
        self.0.neg(a)
    }
    fn mul(&self, a: &K::Element, b: &K::Element) -> K::Element {
        self.0.mul(b, a)
    }
    fn inv(&self, a: &K::Element) -> K::Element {
        self.0.inv(a)
    }
    fn is_zero(&self, a: &K::Element) -> bool {
        self.0.is_zero(a)
    }
    fn from_rational(&self, r: &BigRational) -> K::Element {
        self.0.from_rational(r)
    }
    fn name(&self) -> String {
        format!("{}-opposite", self.0.name())
    }
}

/// Rectangular matrix over a division ring.
#[derive(Debug, Clone)]
pub struct SkewMatrix<K: DivisionRing> {
    ring: K,
    rows: usize,
    cols: usize,
    entries: Vec<K::Element>,
}

impl<K: DivisionRing> PartialEq for SkewMatrix<K> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl<K: DivisionRing> Eq for SkewMatrix<K> {}

impl<K: DivisionRing> SkewMatrix<K> {
    pub fn from_rows(ring: K, rows: Vec<Vec<K::Element>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        SkewMatrix { ring, rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(ring: K, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K::Element) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        SkewMatrix { ring, rows, cols, entries }
    }

    pub fn identity(ring: K, n: usize) -> Self {
        let one = ring.one();
        let zero = ring.zero();
        Self::from_fn(ring, n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn ring(&self) -> &K {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &K::Element {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<K::Element> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<K::Element> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<K::Element>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col_vectors(&self) -> Vec<Vec<K::Element>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring.clone(), self.cols, self.rows, |i, j| self.at(j, i).clone())
    }
}

impl<K: DivisionRing> fmt::Display for SkewMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Reduced echelon data of a family of vectors under left scalar operations:
/// `transform * original = echelon` with the nonzero echelon rows leading.
pub struct Echelon<K: DivisionRing> {
    pub rows: Vec<Vec<K::Element>>,
    pub transform: Vec<Vec<K::Element>>,
    pub pivot_cols: Vec<usize>,
}

impl<K: DivisionRing> Echelon<K> {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }
}

/// Reduced row echelon form with scalars acting from the left. Pivots are the
/// first nonzero entry in scan order (arithmetic is exact, no pivoting by
/// magnitude).
pub fn left_echelon<K: DivisionRing>(ring: &K, vectors: &[Vec<K::Element>]) -> Echelon<K> {
    let m = vectors.len();
    let n = vectors.first().map(|v| v.len()).unwrap_or(0);
    assert!(vectors.iter().all(|v| v.len() == n), "ragged family");
    let mut w: Vec<Vec<K::Element>> = vectors.to_vec();
    let mut t: Vec<Vec<K::Element>> = (0..m)
        .map(|i| (0..m).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for col in 0..n {
        let Some(src) = (r..m).find(|&s| !ring.is_zero(&w[s][col])) else {
            continue;
        };
        w.swap(r, src);
        t.swap(r, src);
        let lambda = ring.inv(&w[r][col]);
        for x in w[r].iter_mut() {
            *x = ring.mul(&lambda, x);
        }
        for x in t[r].iter_mut() {
            *x = ring.mul(&lambda, x);
        }
        for s in 0..m {
            if s == r || ring.is_zero(&w[s][col]) {
                continue;
            }
            let mu = w[s][col].clone();
            for j in 0..n {
                let delta = ring.mul(&mu, &w[r][j]);
                w[s][j] = ring.sub(&w[s][j], &delta);
            }
            for j in 0..m {
                let delta = ring.mul(&mu, &t[r][j]);
                t[s][j] = ring.sub(&t[s][j], &delta);
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == m {
            break;
        }
    }
    Echelon { rows: w, transform: t, pivot_cols }
}

/// Dimension of the left span of a family of vectors.
pub fn left_rank<K: DivisionRing>(ring: &K, vectors: &[Vec<K::Element>]) -> usize {
    left_echelon(ring, vectors).rank()
}

/// The four ranks of a matrix over a division ring, in the order:
/// left row rank, right column rank, left column rank, right row rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankReport {
    /// dimension of the left span of the rows
    pub left_row: usize,
    /// dimension of the right span of the columns
    pub right_col: usize,
    /// dimension of the left span of the columns
    pub left_col: usize,
    /// dimension of the right span of the rows
    pub right_row: usize,
}

impl RankReport {
    /// The two crosswise equalities that always hold.
    pub fn crosswise_equalities_hold(&self) -> bool {
        self.left_row == self.right_col && self.left_col == self.right_row
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.left_row, self.right_col, self.left_col, self.right_row)
    }
}

/// Compute all four ranks, each by its own one-sided elimination.
pub fn four_ranks<K: DivisionRing>(m: &SkewMatrix<K>) -> RankReport {
    let ring = m.ring().clone();
    let op = Opposite(ring.clone());
    RankReport {
        left_row: left_rank(&ring, &m.row_vectors()),
        right_col: left_rank(&op, &m.col_vectors()),
        left_col: left_rank(&ring, &m.col_vectors()),
        right_row: left_rank(&op, &m.row_vectors()),
    }
}

/// Solution data for the system `sum_j X_j a_(i,j) = b_i` (unknowns multiply
/// the coefficients from the left).
#[derive(Debug, Clone)]
pub struct SkewSolution<K: DivisionRing> {
    pub solvable: bool,
    pub particular: Option<Vec<K::Element>>,
    pub homogeneous_basis: Vec<Vec<K::Element>>,
    pub rank: usize,
    /// Dimension of the homogeneous solution space: unknowns minus rank.
    pub dimension: usize,
}

/// Solve `sum_j X_j * column_j = v` over a division ring. The returned
/// solution and homogeneous basis are re-verified by substitution before
/// being handed out.
pub fn solve_left<K: DivisionRing>(
    m: &SkewMatrix<K>,
    v: &[K::Element],
) -> Result<SkewSolution<K>, SkewError> {
    if v.len() != m.rows() {
        return Err(SkewError::DimMismatch(format!(
            "right-hand side length {} vs {} equations",
            v.len(),
            m.rows()
        )));
    }
    let ring = m.ring().clone();
    let n = m.cols();
    // the j-th unknown multiplies the j-th column, seen as a row vector here
    let columns = m.col_vectors();
    let ech = left_echelon(&ring, &columns);
    let rank = ech.rank();

    // greedy expression of v in the reduced echelon rows
    let mut w = v.to_vec();
    let mut combo = vec![ring.zero(); n];
    for (r, &p) in ech.pivot_cols.iter().enumerate() {
        let c = w[p].clone();
        if ring.is_zero(&c) {
            continue;
        }
        for j in 0..w.len() {
            let delta = ring.mul(&c, &ech.rows[r][j]);
            w[j] = ring.sub(&w[j], &delta);
        }
        combo[r] = c;
    }
    let solvable = w.iter().all(|x| ring.is_zero(x));

    let particular = if solvable {
        // X = combo * transform
        let x: Vec<K::Element> = (0..n)
            .map(|j| {
                let mut acc = ring.zero();
                for r in 0..n {
                    acc = ring.add(&acc, &ring.mul(&combo[r], &ech.transform[r][j]));
                }
                acc
            })
            .collect();
        // substitution certificate
        for i in 0..m.rows() {
            let mut acc = ring.zero();
            for j in 0..n {
                acc = ring.add(&acc, &ring.mul(&x[j], m.at(i, j)));
            }
            assert_eq!(acc, v[i], "solution certificate failed at equation {i}");
        }
        Some(x)
    } else {
        None
    };

    // zero echelon rows give a left basis of the homogeneous solutions
    let mut homogeneous_basis = Vec::new();
    for r in 0..n {
        if ech.rows[r].iter().all(|x| ring.is_zero(x)) {
            let basis_vec = ech.transform[r].clone();
            for i in 0..m.rows() {
                let mut acc = ring.zero();
                for j in 0..n {
                    acc = ring.add(&acc, &ring.mul(&basis_vec[j], m.at(i, j)));
                }
                assert!(ring.is_zero(&acc), "homogeneous certificate failed");
            }
            homogeneous_basis.push(basis_vec);
        }
    }
    assert_eq!(homogeneous_basis.len(), n - rank, "rank bookkeeping");
    assert_eq!(left_rank(&ring, &homogeneous_basis), n - rank, "homogeneous basis freeness");

    Ok(SkewSolution { solvable, particular, homogeneous_basis, rank, dimension: n - rank })
}

/// Solve the ordinary matrix-vector system `sum_j a_(i,j) X_j = b_i`
/// (unknowns multiply the coefficients from the right): this is the same
/// one-sided elimination run over the opposite ring. The relevant rank is
/// then the right span of the columns.
pub fn solve_right<K: DivisionRing>(
    m: &SkewMatrix<K>,
    v: &[K::Element],
) -> Result<SkewSolution<Opposite<K>>, SkewError> {
    let op = Opposite(m.ring().clone());
    let flipped = SkewMatrix::from_fn(op, m.rows(), m.cols(), |i, j| m.at(i, j).clone());
    solve_left(&flipped, v)
}

/// Greedy maximal free sub-family (first-accept order), returned as indices.
/// The result is re-verified: it is free and spans the same subspace.
pub fn extract_basis<K: DivisionRing>(ring: &K, family: &[Vec<K::Element>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut kept: Vec<Vec<K::Element>> = Vec::new();
    for (idx, v) in family.iter().enumerate() {
        kept.push(v.clone());
        if left_rank(ring, &kept) == kept.len() {
            chosen.push(idx);
        } else {
            kept.pop();
        }
    }
    assert_eq!(left_rank(ring, &kept), kept.len(), "extracted family is free");
    assert_eq!(left_rank(ring, family), kept.len(), "extracted family spans the family");
    chosen
}

/// Complete a free family to a basis of the span of `free ++ generating`,
/// choosing the first generating vectors that grow the span. Returns indices
/// into the concatenated list.
pub fn complete_to_basis<K: DivisionRing>(
    ring: &K,
    free: &[Vec<K::Element>],
    generating: &[Vec<K::Element>],
) -> Result<Vec<usize>, SkewError> {
    let rank = left_rank(ring, free);
    if rank != free.len() {
        return Err(SkewError::NotFree { rank, len: free.len() });
    }
    let mut chosen: Vec<usize> = (0..free.len()).collect();
    let mut kept: Vec<Vec<K::Element>> = free.to_vec();
    for (idx, v) in generating.iter().enumerate() {
        kept.push(v.clone());
        if left_rank(ring, &kept) == kept.len() {
            chosen.push(free.len() + idx);
        } else {
            kept.pop();
        }
    }
    let mut all: Vec<Vec<K::Element>> = free.to_vec();
    all.extend_from_slice(generating);
    assert_eq!(left_rank(ring, &kept), kept.len());
    assert_eq!(left_rank(ring, &all), kept.len(), "completion spans the union");
    Ok(chosen)
}

/// Embed a rational matrix into the quaternions entry-wise.
pub fn embed_rational_matrix(m: &SkewMatrix<RationalField>) -> SkewMatrix<QuaternionField> {
    SkewMatrix::from_fn(QuaternionField, m.rows(), m.cols(), |i, j| {
        Quaternion::from_rational(m.at(i, j).clone())
    })
}

/// Rational-structure agreement: all four ranks of a rational matrix and the
/// solvability/dimension of rational systems are identical over the
/// rationals and over the quaternions.
pub fn rational_structure_check(
    m: &SkewMatrix<RationalField>,
    right_hand_sides: &[Vec<BigRational>],
) -> Result<bool, SkewError> {
    let over_h = embed_rational_matrix(m);
    let ranks_q = four_ranks(m);
    let ranks_h = four_ranks(&over_h);
    if ranks_q != ranks_h {
        return Ok(false);
    }
    for v in right_hand_sides {
        let sol_q = solve_left(m, v)?;
        let v_h: Vec<Quaternion> = v.iter().map(|r| Quaternion::from_rational(r.clone())).collect();
        let sol_h = solve_left(&over_h, &v_h)?;
        if sol_q.solvable != sol_h.solvable || sol_q.dimension != sol_h.dimension {
            return Ok(false);
        }
    }
    Ok(true)
}
