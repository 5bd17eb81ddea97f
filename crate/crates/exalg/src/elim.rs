//! Fraction-free elimination on the fully generic matrix.
//!
//! The generic `n x n` matrix has the independent indeterminate `a_(i,j)` as
//! its `(i,j)` entry, living in the polynomial ring over `n^2` variables
//! (row-major: `a_(i,j)` is variable `(i-1)*n + j`). One elimination stage
//! multiplies the pivot row by the previous pivot and cross-multiplies the
//! remaining rows, using ring operations only:
//!
//! ```text
//! a^g(i,j) = a^(g-1)(g,g) * a^(g-1)(i,j) - a^(g-1)(i,g) * a^(g-1)(g,j)
//!          + [i = g] * a^(g-1)(g-1,g-1) * a^(g-1)(i,j)
//! ```
//!
//! with the convention that the stage-0 "previous pivot" is 1. After `n`
//! stages the matrix is diagonal with the single pivot polynomial `d_n` on
//! the diagonal; the accumulated row operations `B^n` satisfy
//! `B^n * A = d_n * Id = A * B^n`. Extracting the common content of `d_n`
//! and `B^n` yields the canonical determinant / adjugate pair.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::matrix::{permutations_with_sign, MatrixError, RingMatrix};
use crate::poly::{gcd, PolyError, PolyRing, Polynomial};
use crate::rings::IntegerRing;
use crate::unipoly::{PolyExtRing, UniPoly};

/// Size budget for the fully generic elimination.
pub const ELIM_MAX_SIZE: usize = 4;
/// Gcd-based content extraction stays within this size; n = 4 uses the
/// Leibniz cross-check path instead.
pub const REDUCE_GCD_MAX_SIZE: usize = 3;
/// The permutation-sum oracle tolerates up to 8! terms.
pub const LEIBNIZ_MAX_SIZE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ElimError {
    #[error("desk-scale limit exceeded: {0}")]
    DeskScaleLimit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Variable index of the generic entry `a_(i,j)` (zero-based `i`, `j`).
pub fn var_index(n: usize, i: usize, j: usize) -> usize {
    i * n + j
}

/// The generic matrix: entry `(i,j)` is exactly the variable `a_(i,j)`.
pub fn generic_matrix(n: usize) -> RingMatrix<PolyRing> {
    let ring = PolyRing::new(n * n);
    RingMatrix::from_fn(ring, n, n, |i, j| Polynomial::var(n * n, var_index(n, i, j)))
}

/// Full record of one elimination run: the stage matrices `A^0..A^n`, the
/// accumulated row-operation matrices `B^0..B^n`, and the pivots `d_0..d_n`
/// (with `d_0 = 1`).
#[derive(Debug, Clone)]
pub struct EliminationTrace {
    n: usize,
    stages: Vec<RingMatrix<PolyRing>>,
    accumulators: Vec<RingMatrix<PolyRing>>,
    pivots: Vec<Polynomial>,
}

impl EliminationTrace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn stages(&self) -> &[RingMatrix<PolyRing>] {
        &self.stages
    }

    pub fn accumulators(&self) -> &[RingMatrix<PolyRing>] {
        &self.accumulators
    }

    pub fn pivots(&self) -> &[Polynomial] {
        &self.pivots
    }

    pub fn final_pivot(&self) -> &Polynomial {
        &self.pivots[self.n]
    }

    /// Check every structural invariant of the trace; the first violated one
    /// is reported.
    pub fn verify_invariants(&self) -> Result<(), String> {
        let n = self.n;
        if self.stages[0] != generic_matrix(n) {
            return Err("stage 0 is not the generic matrix".into());
        }
        if !self.accumulators[0].is_identity() {
            return Err("accumulator 0 is not the identity".into());
        }
        if !self.pivots[0].is_one() {
            return Err("pivot d_0 is not 1".into());
        }
        let a = &self.stages[0];
        for g in 1..=n {
            let stage = &self.stages[g];
            let acc = &self.accumulators[g];
            // eliminated column: a^g(i,g) = 0 for i != g
            for i in 0..n {
                if i != g - 1 && !stage.at(i, g - 1).is_zero() {
                    return Err(format!("stage {g}: entry ({},{}) not eliminated", i + 1, g));
                }
            }
            // diagonalized prefix: for j <= g, off-diagonal zero and diagonal
            // equal to the stage pivot
            let dg = stage.at(g - 1, g - 1);
            for j in 0..g {
                for i in 0..n {
                    if i == j {
                        if stage.at(i, j) != dg {
                            return Err(format!("stage {g}: diagonal ({},{}) differs from pivot", i + 1, j + 1));
                        }
                    } else if !stage.at(i, j).is_zero() {
                        return Err(format!("stage {g}: prefix entry ({},{}) nonzero", i + 1, j + 1));
                    }
                }
            }
            // the accumulator reproduces the stage: B^g * A = A^g
            let product = acc.mul(a).map_err(|e| e.to_string())?;
            if product != *stage {
                return Err(format!("stage {g}: B^{g} * A differs from A^{g}"));
            }
            if self.pivots[g] != *dg {
                return Err(format!("stage {g}: recorded pivot differs from a^{g}({g},{g})"));
            }
        }
        // specializing at the identity matrix fixes every stage: A^g(Id) = Id
        let id = RingMatrix::identity(IntegerRing, n);
        for (g, stage) in self.stages.iter().enumerate() {
            let specialized = crate::matrix::specialize_matrix(
                &(0..n).map(|i| (0..n).map(|j| stage.at(i, j).clone()).collect()).collect::<Vec<_>>(),
                &id,
            )
            .map_err(|e| e.to_string())?;
            if !specialized.is_identity() {
                return Err(format!("stage {g} does not specialize to the identity"));
            }
        }
        self.verify_entry_shape()
    }

    /// Homogeneity and column-structure of the stage entries: every entry is
    /// homogeneous with degree independent of its column; it only involves
    /// variables from columns `s <= max(j, g)`; and for `j >= g` it is linear
    /// in the variables of column `j`.
    fn verify_entry_shape(&self) -> Result<(), String> {
        let n = self.n;
        for g in 1..=n {
            let stage = &self.stages[g];
            let mut row_degree: Vec<Option<u32>> = vec![None; n];
            for i in 0..n {
                for j in 0..n {
                    let entry = stage.at(i, j);
                    if entry.is_zero() {
                        continue;
                    }
                    let degrees: Vec<u32> = entry.terms().map(|(m, _)| m.total_degree()).collect();
                    let d0 = degrees[0];
                    if degrees.iter().any(|&d| d != d0) {
                        return Err(format!("stage {g}: entry ({},{}) not homogeneous", i + 1, j + 1));
                    }
                    match row_degree[i] {
                        None => row_degree[i] = Some(d0),
                        Some(d) if d == d0 => {}
                        Some(d) => {
                            return Err(format!(
                                "stage {g}: row {} degree varies with the column ({d} vs {d0})",
                                i + 1
                            ));
                        }
                    }
                    let col_bound = (j + 1).max(g); // 1-based column bound
                    for (mono, _) in entry.terms() {
                        let mut col_j_degree = 0u32;
                        for (var, &e) in mono.0.iter().enumerate() {
                            if e == 0 {
                                continue;
                            }
                            let s = var % n + 1; // 1-based column of this variable
                            if s > col_bound {
                                return Err(format!(
                                    "stage {g}: entry ({},{}) uses column {s} > {col_bound}",
                                    i + 1,
                                    j + 1
                                ));
                            }
                            if s == j + 1 {
                                col_j_degree += e;
                            }
                        }
                        if j + 1 >= g && col_j_degree != 1 {
                            return Err(format!(
                                "stage {g}: entry ({},{}) not linear in column {}",
                                i + 1,
                                j + 1,
                                j + 1
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_size(n: usize) -> Result<(), ElimError> {
    if n < 1 {
        return Err(ElimError::Precondition("the generic matrix needs size n >= 1".into()));
    }
    if n > ELIM_MAX_SIZE {
        return Err(ElimError::DeskScaleLimit(format!(
            "generic elimination supports n <= {ELIM_MAX_SIZE}, got {n}"
        )));
    }
    Ok(())
}

/// Run the elimination on the generic matrix of size `n`.
pub fn eliminate(n: usize) -> Result<EliminationTrace, ElimError> {
    check_size(n)?;
    Ok(eliminate_impl(n, false))
}

/// Deliberately corrupted recurrence (the cross-multiplication term is added
/// instead of subtracted). Exists so the verification battery can prove it
/// detects a broken elimination; never use for real computation.
pub fn eliminate_corrupted(n: usize) -> Result<EliminationTrace, ElimError> {
    check_size(n)?;
    Ok(eliminate_impl(n, true))
}

fn eliminate_impl(n: usize, corrupt: bool) -> EliminationTrace {
    let ring = PolyRing::new(n * n);
    let mut stages = vec![generic_matrix(n)];
    let mut accumulators = vec![RingMatrix::identity(ring.clone(), n)];
    let mut pivots = vec![Polynomial::one(n * n)];

    for g in 1..=n {
        let cur = &stages[g - 1];
        let acc = &accumulators[g - 1];
        let prev_pivot = pivots[g - 1].clone();
        let pivot = cur.at(g - 1, g - 1).clone();

        let step = |src: &RingMatrix<PolyRing>| {
            RingMatrix::from_fn(ring.clone(), n, n, |i, j| {
                let main = pivot.mul(src.at(i, j));
                let cross = cur.at(i, g - 1).mul(src.at(g - 1, j));
                let base = if corrupt && i != g - 1 { main.add(&cross) } else { main.sub(&cross) };
                if i == g - 1 {
                    base.add(&prev_pivot.mul(src.at(i, j)))
                } else {
                    base
                }
            })
        };

        let next_stage = step(cur);
        let next_acc = step(acc);
        let d = next_stage.at(g - 1, g - 1).clone();
        stages.push(next_stage);
        accumulators.push(next_acc);
        pivots.push(d);
    }

    EliminationTrace { n, stages, accumulators, pivots }
}

/// The determinant as the signed permutation sum (the independent oracle).
pub fn leibniz_det(n: usize) -> Result<Polynomial, ElimError> {
    if n < 1 {
        return Err(ElimError::Precondition("need n >= 1".into()));
    }
    if n > LEIBNIZ_MAX_SIZE {
        return Err(ElimError::DeskScaleLimit(format!(
            "permutation sum supports n <= {LEIBNIZ_MAX_SIZE}, got {n}"
        )));
    }
    let nv = n * n;
    let mut terms = Vec::new();
    for (perm, positive) in permutations_with_sign(n) {
        let mut exps = vec![0u32; nv];
        for (col, &row) in perm.iter().enumerate() {
            exps[var_index(n, row, col)] += 1;
        }
        terms.push((exps, if positive { BigInt::one() } else { -BigInt::one() }));
    }
    Ok(Polynomial::from_terms(nv, terms))
}

/// Determinant of the generic minor with one row and column deleted
/// (computed by the permutation sum over the remaining entries).
pub fn generic_minor_det(n: usize, del_row: usize, del_col: usize) -> Result<Polynomial, ElimError> {
    if n < 1 || del_row >= n || del_col >= n {
        return Err(ElimError::Precondition("minor indices out of range".into()));
    }
    if n - 1 > LEIBNIZ_MAX_SIZE {
        return Err(ElimError::DeskScaleLimit("minor too large".into()));
    }
    let rows: Vec<usize> = (0..n).filter(|&r| r != del_row).collect();
    let cols: Vec<usize> = (0..n).filter(|&c| c != del_col).collect();
    let nv = n * n;
    if n == 1 {
        return Ok(Polynomial::one(nv));
    }
    let mut terms = Vec::new();
    for (perm, positive) in permutations_with_sign(n - 1) {
        let mut exps = vec![0u32; nv];
        for (k, &p) in perm.iter().enumerate() {
            exps[var_index(n, rows[p], cols[k])] += 1;
        }
        terms.push((exps, if positive { BigInt::one() } else { -BigInt::one() }));
    }
    Ok(Polynomial::from_terms(nv, terms))
}

/// The canonical determinant / adjugate pair: `det` and `adjugate` have no
/// common factor, `content * det = d_n` and `content * adjugate = B^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInverse {
    pub n: usize,
    pub det: Polynomial,
    pub adjugate: RingMatrix<PolyRing>,
    pub content: Polynomial,
}

impl ReducedInverse {
    /// Both halves of the adjugate identity, entry by entry.
    pub fn verify_adjugate_identity(&self) -> Result<Vec<PolyComparison>, ElimError> {
        let n = self.n;
        let a = generic_matrix(n);
        let det_id = RingMatrix::identity(PolyRing::new(n * n), n).scalar_mul(&self.det);
        let left = self.adjugate.mul(&a)?;
        let right = a.mul(&self.adjugate)?;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                out.push(PolyComparison {
                    label: format!("(adj*A)({},{})", i + 1, j + 1),
                    lhs: left.at(i, j).clone(),
                    rhs: det_id.at(i, j).clone(),
                });
                out.push(PolyComparison {
                    label: format!("(A*adj)({},{})", i + 1, j + 1),
                    lhs: right.at(i, j).clone(),
                    rhs: det_id.at(i, j).clone(),
                });
            }
        }
        Ok(out)
    }

    pub fn det_at_identity(&self) -> BigInt {
        let id = RingMatrix::identity(IntegerRing, self.n);
        crate::matrix::specialize(&self.det, &id).expect("sizes match")
    }
}

/// Reduce a trace to the canonical pair. Sizes up to 3 extract the content
/// as a gcd; size 4 takes the determinant from the permutation sum and the
/// content by exact division, then re-verifies reducedness.
pub fn reduce_trace(trace: &EliminationTrace) -> Result<ReducedInverse, ElimError> {
    let n = trace.n();
    let d_n = trace.final_pivot().clone();
    let b_n = &trace.accumulators()[n];
    let nv = n * n;

    let (content, det) = if n <= REDUCE_GCD_MAX_SIZE {
        let mut g = d_n.clone();
        'outer: for i in 0..n {
            for j in 0..n {
                let entry = b_n.at(i, j);
                if entry.is_zero() {
                    continue;
                }
                g = gcd(&g, entry)?;
                if g.is_one() {
                    break 'outer;
                }
            }
        }
        let det = d_n.exact_div(&g)?;
        (g, det)
    } else {
        let det = leibniz_det(n)?;
        let content = d_n.exact_div(&det)?;
        (content, det)
    };

    // normalize so that det specializes to 1 at the identity
    let id = RingMatrix::identity(IntegerRing, n);
    let at_id = crate::matrix::specialize(&det, &id)?;
    let (content, det) = if at_id == BigInt::from(-1) { (content.neg(), det.neg()) } else { (content, det) };

    let ring = PolyRing::new(nv);
    let mut adj_entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            adj_entries.push(b_n.at(i, j).exact_div(&content)?);
        }
    }
    let adjugate = RingMatrix::new(ring, n, n, adj_entries);

    // reduced form: no common factor between det and the adjugate entries
    let mut g = det.clone();
    'outer: for i in 0..n {
        for j in 0..n {
            let entry = adjugate.at(i, j);
            if entry.is_zero() {
                continue;
            }
            g = gcd(&g, entry)?;
            if g.is_one() {
                break 'outer;
            }
        }
    }
    if !g.is_one() {
        return Err(ElimError::Precondition(format!(
            "determinant and adjugate still share the factor {g}"
        )));
    }

    Ok(ReducedInverse { n, det, adjugate, content })
}

/// Determinant and adjugate of the generic matrix in reduced form.
pub fn reduced_inverse(n: usize) -> Result<ReducedInverse, ElimError> {
    check_size(n)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ReducedInverse>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return Ok((**hit).clone());
    }
    let trace = eliminate(n)?;
    let reduced = reduce_trace(&trace)?;
    cache.lock().unwrap().insert(n, Arc::new(reduced.clone()));
    Ok(reduced)
}

/// The generic determinant (elimination-derived, reduced).
pub fn det_generic(n: usize) -> Result<Polynomial, ElimError> {
    Ok(reduced_inverse(n)?.det)
}

/// One compared pair of polynomial sides in an identity report.
#[derive(Debug, Clone)]
pub struct PolyComparison {
    pub label: String,
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

impl PolyComparison {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Leading monomial of the difference, for failure reports.
    pub fn first_difference(&self) -> Option<String> {
        let diff = self.lhs.sub(&self.rhs);
        diff.leading().map(|(m, c)| {
            let mono = Polynomial::from_terms(diff.nvars(), vec![(m.0.clone(), c.clone())]);
            format!("{}: first differing monomial {}", self.label, mono.to_compact_string())
        })
    }
}

/// Characteristic polynomial data of the generic matrix: the monic
/// coefficients `c_0 = 1, c_1, .., c_n` and the resolvent matrices
/// `S_0..S_(n-1)` from the recurrence `S_k = S_(k-1) A + c_k Id`.
#[derive(Debug, Clone)]
pub struct GenericCharpoly {
    pub n: usize,
    pub coeffs: Vec<Polynomial>,
    pub resolvent: Vec<RingMatrix<PolyRing>>,
}

pub fn charpoly_generic(n: usize) -> Result<GenericCharpoly, ElimError> {
    check_size(n)?;
    let a = generic_matrix(n);
    let coeffs = a.charpoly_coeffs()?;
    let ring = PolyRing::new(n * n);
    let id = RingMatrix::identity(ring.clone(), n);
    let mut resolvent = vec![id.clone()];
    for k in 1..n {
        let prev = resolvent[k - 1].clone();
        let next = prev.mul(&a)?.add(&id.scalar_mul(&coeffs[k]))?;
        resolvent.push(next);
    }
    Ok(GenericCharpoly { n, coeffs, resolvent })
}

impl GenericCharpoly {
    /// `chi_A(A)` evaluated in the matrix ring; zero iff Cayley-Hamilton
    /// holds for this data.
    pub fn eval_on_generic(&self) -> Result<RingMatrix<PolyRing>, ElimError> {
        let a = generic_matrix(self.n);
        Ok(a.eval_charpoly(&self.coeffs)?)
    }

    /// The adjugate of `X Id - A` must equal `sum_i S_i X^(n-1-i)`.
    pub fn verify_resolvent(&self) -> Result<bool, ElimError> {
        let n = self.n;
        let base = PolyRing::new(n * n);
        let ext = PolyExtRing::new(base.clone());
        let a = generic_matrix(n);
        let xid_minus_a = RingMatrix::from_fn(ext.clone(), n, n, |i, j| {
            let c = a.at(i, j).neg();
            if i == j {
                UniPoly::from_coeffs(&base, vec![c, Polynomial::one(n * n)])
            } else {
                UniPoly::constant(&base, c)
            }
        });
        let adj = xid_minus_a.adjugate()?;
        for i in 0..n {
            for j in 0..n {
                let expected = UniPoly::from_coeffs(
                    &base,
                    (0..n).rev().map(|k| self.resolvent[k].at(i, j).clone()).collect(),
                );
                if *adj.at(i, j) != expected {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Does `chi_A(A) = 0` hold on the generic matrix of size `n`?
pub fn cayley_hamilton_check(n: usize) -> Result<bool, ElimError> {
    let data = charpoly_generic(n)?;
    Ok(data.eval_on_generic()?.is_zero_matrix())
}

/// Adjugate from the characteristic polynomial:
/// `(-1)^(n-1) * sum_(i=1..n) c_(i-1) A^(n-i)` with `c_0 = 1`.
pub fn adjugate_from_charpoly(n: usize) -> Result<RingMatrix<PolyRing>, ElimError> {
    let data = charpoly_generic(n)?;
    let a = generic_matrix(n);
    let ring = PolyRing::new(n * n);
    let id = RingMatrix::identity(ring.clone(), n);
    let mut acc = RingMatrix::zero(ring.clone(), n, n);
    for k in 0..n {
        acc = acc.mul(&a)?;
        acc = acc.add(&id.scalar_mul(&data.coeffs[k]))?;
    }
    if n % 2 == 0 {
        acc = acc.neg();
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// identity computations with fresh variable blocks
// ---------------------------------------------------------------------------

/// `det(B C) = det(C) det(B)` over disjoint variable blocks for `B` and `C`.
pub fn multiplicativity_sides(n: usize) -> Result<PolyComparison, ElimError> {
    check_size(n)?;
    let det = det_generic(n)?;
    let nv2 = 2 * n * n;
    let big = PolyRing::new(nv2);
    let b = RingMatrix::from_fn(big.clone(), n, n, |i, j| Polynomial::var(nv2, var_index(n, i, j)));
    let c = RingMatrix::from_fn(big.clone(), n, n, |i, j| {
        Polynomial::var(nv2, n * n + var_index(n, i, j))
    });
    let bc = b.mul(&c)?;
    let lhs = det.substitute(bc.entries());
    let det_b = det.substitute(b.entries());
    let det_c = det.substitute(c.entries());
    let rhs = det_c.mul(&det_b);
    Ok(PolyComparison { label: format!("det(B*C) vs det(C)*det(B), n={n}"), lhs, rhs })
}

/// Block-triangular determinant and adjugate formulas over the variable
/// blocks `U` (p x p), `W` (p x q), `V` (q x q).
pub fn block_triangular_sides(p: usize, q: usize) -> Result<Vec<PolyComparison>, ElimError> {
    if p < 1 || q < 1 {
        return Err(ElimError::Precondition("block sizes must be >= 1".into()));
    }
    if p + q > ELIM_MAX_SIZE {
        return Err(ElimError::DeskScaleLimit(format!(
            "block-triangular check supports p + q <= {ELIM_MAX_SIZE}"
        )));
    }
    let n = p + q;
    let nv = p * p + p * q + q * q;
    let ring = PolyRing::new(nv);
    let u = RingMatrix::from_fn(ring.clone(), p, p, |i, j| Polynomial::var(nv, i * p + j));
    let w = RingMatrix::from_fn(ring.clone(), p, q, |i, k| Polynomial::var(nv, p * p + i * q + k));
    let v = RingMatrix::from_fn(ring.clone(), q, q, |r, s| {
        Polynomial::var(nv, p * p + p * q + r * q + s)
    });
    let zero = Polynomial::zero(nv);
    let m = RingMatrix::from_fn(ring.clone(), n, n, |i, j| {
        if i < p && j < p {
            u.at(i, j).clone()
        } else if i < p {
            w.at(i, j - p).clone()
        } else if j < p {
            zero.clone()
        } else {
            v.at(i - p, j - p).clone()
        }
    });

    let mut out = Vec::new();

    let det_n = det_generic(n)?;
    let lhs_det = det_n.substitute(m.entries());
    let det_u = det_generic(p)?.substitute(u.entries());
    let det_v = det_generic(q)?.substitute(v.entries());
    out.push(PolyComparison {
        label: format!("det of the block matrix, p={p} q={q}"),
        lhs: lhs_det,
        rhs: det_u.mul(&det_v),
    });

    // adjugate formula: [[det(V) adj(U), -adj(U) W adj(V)], [0, det(U) adj(V)]]
    let adj_n = reduced_inverse(n)?.adjugate;
    let adj_u = specialize_poly_matrix(&reduced_inverse(p)?.adjugate, u.entries());
    let adj_v = specialize_poly_matrix(&reduced_inverse(q)?.adjugate, v.entries());
    let top_left = adj_u.scalar_mul(&det_v);
    let top_right = adj_u.mul(&w)?.mul(&adj_v)?.neg();
    let bottom_right = adj_v.scalar_mul(&det_u);
    for i in 0..n {
        for j in 0..n {
            let lhs = adj_n.at(i, j).substitute(m.entries());
            let rhs = if i < p && j < p {
                top_left.at(i, j).clone()
            } else if i < p {
                top_right.at(i, j - p).clone()
            } else if j < p {
                Polynomial::zero(nv)
            } else {
                bottom_right.at(i - p, j - p).clone()
            };
            out.push(PolyComparison { label: format!("adjugate block entry ({},{})", i + 1, j + 1), lhs, rhs });
        }
    }
    Ok(out)
}

fn specialize_poly_matrix(m: &RingMatrix<PolyRing>, values: &[Polynomial]) -> RingMatrix<PolyRing> {
    let target = values[0].nvars();
    RingMatrix::from_fn(PolyRing::new(target), m.rows(), m.cols(), |i, j| {
        m.at(i, j).substitute(values)
    })
}

/// Cramer identity with a fresh column of variables `Y`: reading the solution
/// off the diagonal stage (`d_n x_i = (B^n Y)_i`), the identity
/// `det(A) x_i = det(A with column i = Y)` becomes the polynomial identity
/// `det * (B^n Y)_i = d_n * det(A with column i = Y)`.
pub fn cramer_sides(n: usize) -> Result<Vec<PolyComparison>, ElimError> {
    check_size(n)?;
    let trace = eliminate(n)?;
    let reduced = reduce_trace(&trace)?;
    let nv = n * n;
    let big = nv + n;
    // variable images: a_(r,c) stays itself, Y_i are the fresh variables
    let embed: Vec<Polynomial> = (0..nv).map(|v| Polynomial::var(big, v)).collect();
    let y: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(big, nv + i)).collect();

    let det = reduced.det.substitute(&embed);
    let d_n = trace.final_pivot().substitute(&embed);
    let b_n = &trace.accumulators()[n];

    let mut out = Vec::new();
    for i in 0..n {
        // (B^n Y)_i
        let mut bny = Polynomial::zero(big);
        for j in 0..n {
            bny = bny.add(&b_n.at(i, j).substitute(&embed).mul(&y[j]));
        }
        // det(A with column i = Y): substitute a_(r,i) -> Y_r
        let mut values = embed.clone();
        for r in 0..n {
            values[var_index(n, r, i)] = y[r].clone();
        }
        let det_replaced = reduced.det.substitute(&values);
        out.push(PolyComparison {
            label: format!("Cramer column {}, n={n}", i + 1),
            lhs: det.mul(&bny),
            rhs: d_n.mul(&det_replaced),
        });
    }
    Ok(out)
}

/// `det(A^t) = det(A)` as polynomials.
pub fn transpose_sides(n: usize) -> Result<PolyComparison, ElimError> {
    let det = det_generic(n)?;
    let mut perm = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            perm[var_index(n, i, j)] = var_index(n, j, i);
        }
    }
    Ok(PolyComparison { label: format!("det of the transpose, n={n}"), lhs: det.permute_vars(&perm), rhs: det })
}

/// Adjugate entries as signed minor determinants:
/// `adj(A)(i,j) = (-1)^(i+j) det(A with row j and column i deleted)`.
pub fn cofactor_sides(n: usize) -> Result<Vec<PolyComparison>, ElimError> {
    let reduced = reduced_inverse(n)?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let minor = generic_minor_det(n, j, i)?;
            let rhs = if (i + j) % 2 == 0 { minor } else { minor.neg() };
            out.push(PolyComparison {
                label: format!("adjugate entry ({},{}), n={n}", i + 1, j + 1),
                lhs: reduced.adjugate.at(i, j).clone(),
                rhs,
            });
        }
    }
    Ok(out)
}

/// Both cofactor expansions of the determinant, along every row and column.
pub fn expansion_sides(n: usize) -> Result<Vec<PolyComparison>, ElimError> {
    let det = det_generic(n)?;
    let nv = n * n;
    let mut out = Vec::new();
    for i in 0..n {
        let mut along_row = Polynomial::zero(nv);
        for j in 0..n {
            let term = Polynomial::var(nv, var_index(n, i, j)).mul(&generic_minor_det(n, i, j)?);
            along_row = if (i + j) % 2 == 0 { along_row.add(&term) } else { along_row.sub(&term) };
        }
        out.push(PolyComparison { label: format!("expansion along row {}, n={n}", i + 1), lhs: along_row, rhs: det.clone() });
    }
    for j in 0..n {
        let mut along_col = Polynomial::zero(nv);
        for i in 0..n {
            let term = Polynomial::var(nv, var_index(n, i, j)).mul(&generic_minor_det(n, i, j)?);
            along_col = if (i + j) % 2 == 0 { along_col.add(&term) } else { along_col.sub(&term) };
        }
        out.push(PolyComparison { label: format!("expansion along column {}, n={n}", j + 1), lhs: along_col, rhs: det.clone() });
    }
    Ok(out)
}

/// Alternating multilinearity: swapping two columns negates the determinant
/// and equal columns annihilate it.
pub fn alternating_sides(n: usize) -> Result<Vec<PolyComparison>, ElimError> {
    let det = det_generic(n)?;
    let nv = n * n;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // swap columns i and j
            let mut perm: Vec<usize> = (0..nv).collect();
            for r in 0..n {
                perm[var_index(n, r, i)] = var_index(n, r, j);
                perm[var_index(n, r, j)] = var_index(n, r, i);
            }
            out.push(PolyComparison {
                label: format!("columns {} and {} swapped, n={n}", i + 1, j + 1),
                lhs: det.permute_vars(&perm),
                rhs: det.neg(),
            });
            // set column i equal to column j
            let mut values: Vec<Polynomial> = (0..nv).map(|v| Polynomial::var(nv, v)).collect();
            for r in 0..n {
                values[var_index(n, r, i)] = Polynomial::var(nv, var_index(n, r, j));
            }
            out.push(PolyComparison {
                label: format!("columns {} and {} equal, n={n}", i + 1, j + 1),
                lhs: det.substitute(&values),
                rhs: Polynomial::zero(nv),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
