//! Matrices over an arbitrary commutative ring: determinants (several
//! interchangeable strategies behind one trait), adjugates, characteristic
//! polynomials, Cramer solving, invertibility criteria, the surjective
//! endomorphism inverse, and specialization of generic polynomial data.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::poly::Polynomial;
use crate::rings::{CommutativeRing, RingError};
use crate::unipoly::{PolyExtRing, UniPoly};

/// Division-free determinant paths stay within this size.
pub const DET_MAX_SIZE: usize = 8;

/// Brute-force kernel/image enumeration stays within this many vectors.
pub const ENUMERATION_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("desk-scale limit exceeded: {0}")]
    DeskScaleLimit(String),
    #[error("unknown determinant strategy `{0}`")]
    UnknownStrategy(String),
    #[error("strategy `{strategy}` does not support ring {ring}")]
    StrategyUnsupported { strategy: &'static str, ring: String },
    #[error("enumeration oracle unavailable: {0}")]
    OracleUnavailable(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Rectangular matrix over a ring object; all entries belong to that ring.
#[derive(Debug, Clone)]
pub struct RingMatrix<R: CommutativeRing> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Element>,
}

impl<R: CommutativeRing> PartialEq for RingMatrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl<R: CommutativeRing> Eq for RingMatrix<R> {}

impl<R: CommutativeRing> RingMatrix<R> {
    pub fn new(ring: R, rows: usize, cols: usize, entries: Vec<R::Element>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        RingMatrix { ring, rows, cols, entries }
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Element>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RingMatrix { ring, rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(ring: R, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R::Element) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RingMatrix { ring, rows, cols, entries }
    }

    pub fn zero(ring: R, rows: usize, cols: usize) -> Self {
        let z = ring.zero();
        RingMatrix { ring, rows, cols, entries: vec![z; rows * cols] }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            let one = m.ring.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &R::Element {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Element) {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<R::Element> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<R::Element> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[R::Element] {
        &self.entries
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::DimMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        Ok(RingMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RingMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| self.ring.neg(a)).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &R::Element) -> Self {
        RingMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| self.ring.mul(c, a)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.ring.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    acc = self.ring.add(&acc, &self.ring.mul(self.at(i, k), other.at(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R::Element]) -> Result<Vec<R::Element>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::DimMismatch(format!("{}x{} * vec{}", self.rows, self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.ring.zero();
                for k in 0..self.cols {
                    acc = self.ring.add(&acc, &self.ring.mul(self.at(i, k), &v[k]));
                }
                acc
            })
            .collect())
    }

    /// Entry `(i,j)` becomes entry `(j,i)`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ring.clone(), self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.ring.is_one(self.at(i, j))
                    } else {
                        self.ring.is_zero(self.at(i, j))
                    }
                })
            })
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    /// Submatrix with row `i` and column `j` removed.
    pub fn minor_matrix(&self, i: usize, j: usize) -> Self {
        assert!(self.rows > 0 && self.cols > 0);
        Self::from_fn(self.ring.clone(), self.rows - 1, self.cols - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            let cc = if c < j { c } else { c + 1 };
            self.at(rr, cc).clone()
        })
    }

    /// Copy with column `j` replaced by `v`.
    pub fn with_column(&self, j: usize, v: &[R::Element]) -> Result<Self, MatrixError> {
        if v.len() != self.rows {
            return Err(MatrixError::DimMismatch(format!("column length {} vs {} rows", v.len(), self.rows)));
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            m.set(i, j, v[i].clone());
        }
        Ok(m)
    }

    /// Determinant via the default division-free strategy.
    pub fn det(&self) -> Result<R::Element, MatrixError> {
        CofactorDet.det(self)
    }

    /// Signed-cofactor adjugate: entry `(i,j)` is `(-1)^(i+j) det(M_(j,i))`.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n > DET_MAX_SIZE {
            return Err(MatrixError::DeskScaleLimit(format!("adjugate supports n <= {DET_MAX_SIZE}, got {n}")));
        }
        if n == 0 {
            return Ok(self.clone());
        }
        let mut out = Self::zero(self.ring.clone(), n, n);
        for i in 0..n {
            for j in 0..n {
                if n == 1 {
                    out.set(i, j, self.ring.one());
                    continue;
                }
                let minor = self.minor_matrix(j, i).det()?;
                let signed = if (i + j) % 2 == 0 { minor } else { self.ring.neg(&minor) };
                out.set(i, j, signed);
            }
        }
        Ok(out)
    }

    /// Monic characteristic polynomial `det(X Id - M)` computed with the
    /// division-free determinant over `R[X]` (valid over any commutative
    /// ring, zero divisors included).
    pub fn charpoly(&self) -> Result<UniPoly<R>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let ext = PolyExtRing::new(self.ring.clone());
        let xid_minus_m = RingMatrix::from_fn(ext.clone(), self.rows, self.cols, |i, j| {
            let c = self.ring.neg(self.at(i, j));
            if i == j {
                UniPoly::from_coeffs(&self.ring, vec![c, self.ring.one()])
            } else {
                UniPoly::constant(&self.ring, c)
            }
        });
        xid_minus_m.det()
    }

    /// Characteristic polynomial coefficients `[1, c_1, .., c_n]`, leading
    /// first.
    pub fn charpoly_coeffs(&self) -> Result<Vec<R::Element>, MatrixError> {
        let chi = self.charpoly()?;
        let n = self.rows;
        Ok((0..=n).map(|k| chi.coeff(&self.ring, n - k)).collect())
    }

    /// Evaluate a monic coefficient list on the matrix itself:
    /// `M^n + c_1 M^(n-1) + .. + c_n Id`.
    pub fn eval_charpoly(&self, coeffs: &[R::Element]) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut acc = RingMatrix::zero(self.ring.clone(), n, n);
        for c in coeffs {
            acc = acc.mul(self)?;
            let term = RingMatrix::identity(self.ring.clone(), n).scalar_mul(c);
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Inverse as `det^{-1} * adjugate`; requires the determinant to be a
    /// unit (and the ring to decide that).
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let det = self.det()?;
        let inv_det = self.ring.invert(&det)?;
        let inv = self.adjugate()?.scalar_mul(&inv_det);
        let product = self.mul(&inv)?;
        assert!(product.is_identity(), "inverse certificate failed");
        Ok(inv)
    }

    /// Injectivity of the induced map: the determinant is not a zero divisor.
    pub fn is_injective(&self) -> Result<bool, MatrixError> {
        let det = self.det()?;
        Ok(!self.ring.is_zero_divisor(&det)?)
    }

    /// Isomorphism (equivalently surjectivity): the determinant is a unit.
    pub fn is_isomorphism(&self) -> Result<bool, MatrixError> {
        let det = self.det()?;
        Ok(self.ring.is_unit(&det)?)
    }
}

impl<R: CommutativeRing> fmt::Display for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// determinant strategies
// ---------------------------------------------------------------------------

/// A determinant algorithm; variants register by name and are selected at
/// runtime. All supported strategies must agree wherever they apply.
pub trait DetStrategy<R: CommutativeRing> {
    fn name(&self) -> &'static str;
    /// Whether the strategy can run over the given ring.
    fn supports(&self, ring: &R) -> bool;
    fn det(&self, m: &RingMatrix<R>) -> Result<R::Element, MatrixError>;
}

fn require_square_within_budget<R: CommutativeRing>(m: &RingMatrix<R>) -> Result<usize, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() > DET_MAX_SIZE {
        return Err(MatrixError::DeskScaleLimit(format!(
            "determinant supports n <= {DET_MAX_SIZE}, got {}",
            m.rows()
        )));
    }
    Ok(m.rows())
}

/// Division-free expansion along rows with memoization on column subsets:
/// O(2^n * n) ring operations, works over every commutative ring.
pub struct CofactorDet;

impl<R: CommutativeRing> DetStrategy<R> for CofactorDet {
    fn name(&self) -> &'static str {
        "cofactor"
    }

    fn supports(&self, _ring: &R) -> bool {
        true
    }

    fn det(&self, m: &RingMatrix<R>) -> Result<R::Element, MatrixError> {
        let n = require_square_within_budget(m)?;
        let ring = m.ring().clone();
        if n == 0 {
            return Ok(ring.one());
        }
        // memo[mask]: determinant of the submatrix made of the first
        // popcount(mask) rows and the columns in mask
        let mut memo: Vec<Option<R::Element>> = vec![None; 1usize << n];
        memo[0] = Some(ring.one());
        for mask in 1usize..(1 << n) {
            let k = (mask as u32).count_ones() as usize;
            let mut acc = ring.zero();
            // Laplace expansion along row k-1: sign is (-1)^((k-1) + t) for
            // the t-th column of the subset
            let mut sign_positive = (k - 1) % 2 == 0;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let sub = memo[mask & !(1 << j)].clone().expect("filled in mask order");
                let term = ring.mul(m.at(k - 1, j), &sub);
                acc = if sign_positive { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
                sign_positive = !sign_positive;
            }
            memo[mask] = Some(acc);
        }
        Ok(memo[(1 << n) - 1].clone().unwrap())
    }
}

/// Fraction-free elimination with exact divisions (Bareiss): the fast path
/// for integral domains whose ring exposes exact division.
pub struct BareissDet;

impl<R: CommutativeRing> DetStrategy<R> for BareissDet {
    fn name(&self) -> &'static str {
        "bareiss"
    }

    fn supports(&self, ring: &R) -> bool {
        ring.is_integral() && ring.exact_div(&ring.one(), &ring.one()).is_ok()
    }

    fn det(&self, m: &RingMatrix<R>) -> Result<R::Element, MatrixError> {
        let n = require_square_within_budget(m)?;
        let ring = m.ring().clone();
        if !self.supports(&ring) {
            return Err(MatrixError::StrategyUnsupported { strategy: "bareiss", ring: ring.name() });
        }
        if n == 0 {
            return Ok(ring.one());
        }
        let mut w = m.clone();
        let mut negate = false;
        let mut prev = ring.one();
        for k in 0..n - 1 {
            if ring.is_zero(w.at(k, k)) {
                match (k + 1..n).find(|&r| !ring.is_zero(w.at(r, k))) {
                    Some(r) => {
                        for j in 0..n {
                            let a = w.at(k, j).clone();
                            let b = w.at(r, j).clone();
                            w.set(k, j, b);
                            w.set(r, j, a);
                        }
                        negate = !negate;
                    }
                    None => return Ok(ring.zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = ring.sub(
                        &ring.mul(w.at(k, k), w.at(i, j)),
                        &ring.mul(w.at(i, k), w.at(k, j)),
                    );
                    let v = ring.exact_div(&num, &prev)?;
                    w.set(i, j, v);
                }
                w.set(i, k, ring.zero());
            }
            prev = w.at(k, k).clone();
        }
        let d = w.at(n - 1, n - 1).clone();
        Ok(if negate { ring.neg(&d) } else { d })
    }
}

/// The signed permutation sum. Exponential, but a fully independent oracle.
pub struct LeibnizDet;

impl<R: CommutativeRing> DetStrategy<R> for LeibnizDet {
    fn name(&self) -> &'static str {
        "leibniz"
    }

    fn supports(&self, _ring: &R) -> bool {
        true
    }

    fn det(&self, m: &RingMatrix<R>) -> Result<R::Element, MatrixError> {
        let n = require_square_within_budget(m)?;
        let ring = m.ring().clone();
        let mut acc = ring.zero();
        for (perm, positive) in permutations_with_sign(n) {
            let mut term = ring.one();
            for (col, &row) in perm.iter().enumerate() {
                term = ring.mul(&term, m.at(row, col));
            }
            acc = if positive { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
        }
        Ok(acc)
    }
}

/// All permutations of `0..n` with their signs (identity first).
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, positive: &mut bool, out: &mut Vec<(Vec<usize>, bool)>) {
        if k <= 1 {
            out.push((cur.clone(), *positive));
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, positive, out);
            if i < k - 1 {
                if k % 2 == 0 {
                    cur.swap(i, k - 1);
                } else {
                    cur.swap(0, k - 1);
                }
                *positive = !*positive;
            }
        }
    }
    let mut positive = true;
    heap(n, &mut cur, &mut positive, &mut out);
    out
}

/// Every registered determinant strategy, in registration order.
pub fn det_strategies<R: CommutativeRing>() -> Vec<Box<dyn DetStrategy<R>>> {
    vec![Box::new(CofactorDet), Box::new(BareissDet), Box::new(LeibnizDet)]
}

/// Look a strategy up by its registered name.
pub fn det_strategy<R: CommutativeRing>(name: &str) -> Result<Box<dyn DetStrategy<R>>, MatrixError> {
    det_strategies::<R>()
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| MatrixError::UnknownStrategy(name.to_string()))
}

// ---------------------------------------------------------------------------
// specialization of generic polynomial data
// ---------------------------------------------------------------------------

/// Specialization at `M`: the unique ring morphism sending the generic entry
/// variable `a_(i,j)` (row-major index) to the matrix entry `m_(i,j)`.
pub fn specialize<R: CommutativeRing>(
    generic: &Polynomial,
    m: &RingMatrix<R>,
) -> Result<R::Element, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if generic.nvars() != m.rows() * m.cols() {
        return Err(MatrixError::DimMismatch(format!(
            "generic data over {} variables vs {}x{} matrix",
            generic.nvars(),
            m.rows(),
            m.cols()
        )));
    }
    Ok(generic.eval_in_ring(m.ring(), m.entries()))
}

/// Entry-wise specialization of a matrix of generic polynomials.
pub fn specialize_matrix<R: CommutativeRing>(
    generic: &[Vec<Polynomial>],
    m: &RingMatrix<R>,
) -> Result<RingMatrix<R>, MatrixError> {
    let rows = generic.len();
    let cols = generic.first().map(|r| r.len()).unwrap_or(0);
    let mut entries = Vec::with_capacity(rows * cols);
    for row in generic {
        for p in row {
            entries.push(specialize(p, m)?);
        }
    }
    Ok(RingMatrix::new(m.ring().clone(), rows, cols, entries))
}

// ---------------------------------------------------------------------------
// Cramer data, surjective-endomorphism inverse, enumeration oracles
// ---------------------------------------------------------------------------

/// Output of `cramer_solve`: the determinant, the column-replaced
/// determinants, and a verified solution when the determinant is invertible.
#[derive(Debug, Clone)]
pub struct CramerSolution<R: CommutativeRing> {
    pub det: R::Element,
    pub replaced: Vec<R::Element>,
    pub solution: Option<Vec<R::Element>>,
}

/// Cramer data for `M x = y`: `det(M) * x_i = det(M with column i = y)`.
pub fn cramer_solve<R: CommutativeRing>(
    m: &RingMatrix<R>,
    y: &[R::Element],
) -> Result<CramerSolution<R>, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if y.len() != m.rows() {
        return Err(MatrixError::DimMismatch(format!("rhs length {} vs {} rows", y.len(), m.rows())));
    }
    let ring = m.ring().clone();
    let det = m.det()?;
    let mut replaced = Vec::with_capacity(m.cols());
    for j in 0..m.cols() {
        replaced.push(m.with_column(j, y)?.det()?);
    }
    let solution = match ring.invert(&det) {
        Ok(inv) => {
            let x: Vec<R::Element> = replaced.iter().map(|d| ring.mul(&inv, d)).collect();
            let check = m.mul_vec(&x)?;
            assert_eq!(check, y.to_vec(), "Cramer solution certificate failed");
            Some(x)
        }
        Err(_) => None,
    };
    Ok(CramerSolution { det, replaced, solution })
}

/// For a surjective endomorphism presented by the matrix `A` (relating the
/// generators to their images), the inverse is `P(f)` where
/// `X * P(X) = 1 - det(Id - X A)`. Returns `P`, re-verifying that defining
/// identity symbolically over `R[X]`.
pub fn surjective_endo_inverse<R: CommutativeRing>(
    a: &RingMatrix<R>,
) -> Result<UniPoly<R>, MatrixError> {
    if !a.is_square() {
        return Err(MatrixError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let ring = a.ring().clone();
    let ext = PolyExtRing::new(ring.clone());
    let n = a.rows();
    let id_minus_xa = RingMatrix::from_fn(ext.clone(), n, n, |i, j| {
        let c = ring.neg(a.at(i, j));
        let lin = UniPoly::from_coeffs(&ring, vec![ring.zero(), c]);
        if i == j {
            lin.add(&ring, &UniPoly::one(&ring))
        } else {
            lin
        }
    });
    let d = id_minus_xa.det()?;
    // det(Id - X A) has constant term det(Id) = 1, so 1 - d is divisible by X
    let one_minus_d = UniPoly::one(&ring).sub(&ring, &d);
    assert!(
        one_minus_d.is_zero() || ring.is_zero(&one_minus_d.coeff(&ring, 0)),
        "1 - det(Id - XA) must vanish at X = 0"
    );
    let p_coeffs: Vec<R::Element> = (1..=one_minus_d.degree().map(|d| d).unwrap_or(0))
        .map(|k| one_minus_d.coeff(&ring, k))
        .collect();
    let p = UniPoly::from_coeffs(&ring, p_coeffs);
    // re-verify the defining identity X * P(X) = 1 - det(Id - XA)
    let x = UniPoly::x(&ring);
    assert_eq!(x.mul(&ring, &p), one_minus_d, "defining identity for P failed");
    Ok(p)
}

/// All kernel vectors of `M` over a finite ring, by exhaustive enumeration.
pub fn enumerate_kernel<R: CommutativeRing>(
    m: &RingMatrix<R>,
) -> Result<Vec<Vec<R::Element>>, MatrixError> {
    let mut out = Vec::new();
    for v in enumerate_vectors(m.ring(), m.cols())? {
        let image = m.mul_vec(&v)?;
        if image.iter().all(|e| m.ring().is_zero(e)) {
            out.push(v);
        }
    }
    Ok(out)
}

/// Number of distinct values `M v` over a finite ring.
pub fn image_size<R: CommutativeRing>(m: &RingMatrix<R>) -> Result<usize, MatrixError> {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for v in enumerate_vectors(m.ring(), m.cols())? {
        let image = m.mul_vec(&v)?;
        let key: Vec<String> = image.iter().map(|e| e.to_string()).collect();
        seen.insert(key.join(","));
    }
    Ok(seen.len())
}

/// All vectors of length `len` over a finite ring within the enumeration
/// budget; reports the oracle as unavailable otherwise.
pub fn enumerate_vectors<R: CommutativeRing>(
    ring: &R,
    len: usize,
) -> Result<Vec<Vec<R::Element>>, MatrixError> {
    let elems = ring
        .elements()
        .ok_or_else(|| MatrixError::OracleUnavailable(format!("ring {} is not enumerable", ring.name())))?;
    let size = elems.len() as u64;
    let total = size.checked_pow(len as u32).filter(|&t| t <= ENUMERATION_BUDGET);
    let Some(total) = total else {
        return Err(MatrixError::OracleUnavailable(format!(
            "{}^{} exceeds the enumeration budget {}",
            size, len, ENUMERATION_BUDGET
        )));
    };
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = vec![0usize; len];
    loop {
        out.push(idx.iter().map(|&i| elems[i].clone()).collect());
        let mut k = 0;
        loop {
            if k == len {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests;
