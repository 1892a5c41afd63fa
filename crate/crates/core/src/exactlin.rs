//! Exact rational linear algebra: dense matrices, rank-3 tensors, kernels,
//! row reduction and simultaneous-invariant solvers.
//!
//! Everything here is exact. Scalars are arbitrary-precision rationals and
//! no operation ever rounds. Row reduction runs fraction-free (Bareiss) on
//! denominator-cleared integer rows with leftmost-pivot tie-breaking, so
//! results are deterministic across runs and platforms.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact scalar used by all algebraic modules. Always in lowest terms with
/// positive denominator (maintained by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Dense exact vector.
pub type Vector = Vec<Rational>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactLinError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise, lowest terms.
pub fn rat_to_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse the canonical string form produced by [`rat_to_string`].
pub fn rat_from_str(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("bad rational {s:?}: {e}"))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn scale_vec(a: &[Rational], c: &Rational) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn is_zero_vec(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn basis_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix with the given vectors as columns.
    pub fn from_cols(cols: Vec<Vector>) -> Self {
        Matrix::from_rows(cols).transpose()
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_fn(rows.len(), rows[0].len(), |r, c| rat(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) + other.get(r, c))
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) - other.get(r, c))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows).map(|r| dot(self.row(r), v)).collect()
    }

    /// Commutator `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Stack matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        assert!(!blocks.is_empty());
        let cols = blocks[0].cols;
        assert!(blocks.iter().all(|b| b.cols == cols));
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend_from_slice(&b.data);
        }
        Matrix { rows, cols, data }
    }

    /// Reduced row echelon form together with the pivot column indices.
    ///
    /// Forward elimination is fraction-free (Bareiss) over denominator-cleared
    /// integer rows; pivots are chosen leftmost-column-first, topmost-row-first.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        // Clear denominators row by row: scaling a row by a positive integer
        // does not change the row space or the reduced echelon form.
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let lcm = self.row(r).iter().fold(BigInt::one(), |acc, x| {
                    num_integer::lcm(acc, x.denom().clone())
                });
                self.row(r)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect();

        let (rows, cols) = (self.rows, self.cols);
        let mut pivots: Vec<usize> = Vec::new();
        let mut prev_pivot = BigInt::one();
        let mut pr = 0usize;
        for pc in 0..cols {
            if pr == rows {
                break;
            }
            let Some(sel) = (pr..rows).find(|&r| !m[r][pc].is_zero()) else {
                continue;
            };
            m.swap(pr, sel);
            let pivot = m[pr][pc].clone();
            for r in pr + 1..rows {
                if m[r][pc].is_zero() {
                    // Still divide through to keep the Bareiss invariant.
                    for c in 0..cols {
                        let v = &m[r][c] * &pivot / &prev_pivot;
                        m[r][c] = v;
                    }
                    continue;
                }
                let factor = m[r][pc].clone();
                for c in 0..cols {
                    let v = (&m[r][c] * &pivot - &factor * &m[pr][c]) / &prev_pivot;
                    m[r][c] = v;
                }
            }
            prev_pivot = pivot;
            pivots.push(pc);
            pr += 1;
        }

        // Back substitution over rationals, normalizing pivots to 1.
        let mut out: Vec<Vector> = m
            .into_iter()
            .map(|row| row.into_iter().map(Rational::from_integer).collect())
            .collect();
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let inv = out[i][pc].clone();
            for c in 0..cols {
                let v = &out[i][c] / &inv;
                out[i][c] = v;
            }
            for r in 0..i {
                if out[r][pc].is_zero() {
                    continue;
                }
                let f = out[r][pc].clone();
                for c in 0..cols {
                    let v = &out[r][c] - &f * &out[i][c];
                    out[r][c] = v;
                }
            }
        }
        (Matrix::from_rows(out), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : self v = 0}`, one vector per free
    /// column in ascending column order (deterministic).
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for c in 0..self.cols {
            if piv_iter.peek() == Some(&c) {
                piv_iter.next();
            } else {
                free_cols.push(c);
            }
        }
        for fc in free_cols {
            let mut v = zero_vec(self.cols);
            v[fc] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(i, fc).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Particular solution of `self x = rhs` with all free variables set to
    /// zero (the least-pivot solution), or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vector> {
        assert_eq!(self.rows, rhs.len());
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = zero_vec(self.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Sylvester inertia (positive, negative, zero counts) of a symmetric
    /// matrix, computed by exact symmetric Gaussian reduction.
    pub fn inertia(&self) -> Result<Inertia, ExactLinError> {
        if self.rows != self.cols {
            return Err(ExactLinError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_symmetric() {
            return Err(ExactLinError::NotSymmetric);
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut pos = 0usize;
        let mut neg = 0usize;
        let mut zero = 0usize;
        let mut k = 0usize;
        while k < n {
            if m.get(k, k).is_zero() {
                // Look for a usable diagonal entry first, then repair a zero
                // diagonal from a nonzero off-diagonal pair.
                if let Some(j) = (k + 1..n).find(|&j| !m.get(j, j).is_zero()) {
                    m.swap_sym(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !m.get(k, j).is_zero()) {
                    // row/col_k += row/col_j makes the (k,k) entry 2*m[k][j]
                    for c in 0..n {
                        let v = m.get(k, c) + m.get(j, c);
                        m.set(k, c, v);
                    }
                    for r in 0..n {
                        let v = m.get(r, k) + m.get(r, j);
                        m.set(r, k, v);
                    }
                } else {
                    zero += 1;
                    k += 1;
                    continue;
                }
            }
            let d = m.get(k, k).clone();
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for r in k + 1..n {
                if m.get(r, k).is_zero() {
                    continue;
                }
                let f = m.get(r, k) / &d;
                for c in k..n {
                    let v = m.get(r, c) - &f * m.get(k, c);
                    m.set(r, c, v);
                }
                for c in k..n {
                    let v = m.get(c, r) - &f * m.get(c, k);
                    m.set(c, r, v);
                }
            }
            k += 1;
        }
        Ok(Inertia { pos, neg, zero })
    }

    fn swap_sym(&mut self, i: usize, j: usize) {
        let n = self.cols;
        for c in 0..n {
            let (a, b) = (self.get(i, c).clone(), self.get(j, c).clone());
            self.set(i, c, b);
            self.set(j, c, a);
        }
        for r in 0..n {
            let (a, b) = (self.get(r, i).clone(), self.get(r, j).clone());
            self.set(r, i, b);
            self.set(r, j, a);
        }
    }
}

/// Signature data of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.pos == 0 || self.neg == 0) && self.pos + self.neg > 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.neg == 0 && self.zero == 0 && self.pos > 0
    }

    /// Lorentzian up to overall sign: signature `(n-1, 1)` or `(1, n-1)`.
    pub fn is_lorentzian(&self) -> bool {
        self.zero == 0 && (self.pos == 1 || self.neg == 1) && self.pos + self.neg >= 2
    }

    /// Positive-semidefinite with a one-dimensional radical.
    pub fn is_psd_corank_one(&self) -> bool {
        self.neg == 0 && self.zero == 1
    }
}

/// Basis of the kernel of `m` (spec-level entry point).
pub fn kernel(m: &Matrix) -> Vec<Vector> {
    m.kernel()
}

/// Basis of the simultaneous kernel of a family of equally-sized square
/// matrices: the fixed subspace of the Lie algebra representation they span.
///
/// With an empty family this is the full ambient space, so callers must pass
/// the ambient dimension.
pub fn fixed_subspace(actions: &[Matrix], dim: usize) -> Result<Vec<Vector>, ExactLinError> {
    for a in actions {
        if a.rows() != a.cols() {
            return Err(ExactLinError::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        if a.rows() != dim {
            return Err(ExactLinError::DimensionMismatch {
                expected: dim,
                got: a.rows(),
            });
        }
    }
    if actions.is_empty() {
        return Ok((0..dim).map(|i| basis_vec(dim, i)).collect());
    }
    let stacked = Matrix::vstack(actions);
    Ok(stacked.kernel())
}

/// Rank-3 array `f^c_{ab}` antisymmetric in the lower pair, the carrier for
/// bracket structure constants. Indexed `(a, b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Rational>,
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Tensor3 {
            n,
            data: vec![Rational::zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.data[(a * self.n + b) * self.n + c]
    }

    /// Set `f^c_{ab} = v` and `f^c_{ba} = -v`, preserving antisymmetry.
    pub fn set_antisym(&mut self, a: usize, b: usize, c: usize, v: Rational) {
        assert!(a != b || v.is_zero(), "diagonal entries must vanish");
        self.data[(b * self.n + a) * self.n + c] = -v.clone();
        self.data[(a * self.n + b) * self.n + c] = v;
    }

    /// Add `v` into `f^c_{ab}` (and `-v` into `f^c_{ba}`).
    pub fn add_antisym(&mut self, a: usize, b: usize, c: usize, v: Rational) {
        let cur = self.get(a, b, c).clone();
        self.set_antisym(a, b, c, cur + v);
    }

    pub fn is_antisymmetric(&self) -> bool {
        for a in 0..self.n {
            for b in 0..=a {
                for c in 0..self.n {
                    if *self.get(a, b, c) != -self.get(b, a, c).clone() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Nonzero entries with `a < b`, in lexicographic order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                for c in 0..self.n {
                    let v = self.get(a, b, c);
                    if !v.is_zero() {
                        out.push((a, b, c, v.clone()));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn kernel_of_identity_is_empty() {
        let m = Matrix::identity(2);
        assert!(kernel(&m).is_empty());
    }

    #[test]
    fn kernel_of_difference_row() {
        let m = Matrix::from_i64(&[&[1, -1]]);
        let k = kernel(&m);
        assert_eq!(k, vec![vec![rat(1), rat(1)]]);
    }

    #[test]
    fn kernel_vectors_satisfy_equation() {
        let m = Matrix::from_i64(&[&[2, 4, -2], &[1, 2, -1], &[3, 6, -3]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
    }

    #[test]
    fn fixed_subspace_no_constraints() {
        let basis = fixed_subspace(&[], 3).unwrap();
        assert_eq!(basis.len(), 3);
        assert_eq!(basis[0], basis_vec(3, 0));
    }

    #[test]
    fn fixed_subspace_rotation_has_no_fixed_vector() {
        let so2 = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(fixed_subspace(&[so2], 2).unwrap().is_empty());
    }

    #[test]
    fn fixed_subspace_rejects_size_mismatch() {
        let a = Matrix::identity(2);
        let b = Matrix::identity(3);
        assert!(fixed_subspace(&[a, b], 2).is_err());
    }

    #[test]
    fn fixed_subspace_order_independent() {
        let a = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        let s1 = fixed_subspace(&[a.clone(), b.clone()], 3).unwrap();
        let s2 = fixed_subspace(&[b, a], 3).unwrap();
        // Same subspace: each basis solves the other's stacked system.
        let m1 = Matrix::from_rows(s1.clone());
        let m2 = Matrix::from_rows(s2.clone());
        assert_eq!(m1.rank(), m2.rank());
        let joint = Matrix::vstack(&[m1.clone(), m2]);
        assert_eq!(joint.rank(), m1.rank());
    }

    #[test]
    fn solve_least_pivot() {
        // x + y = 2 with free y: least-pivot solution sets y = 0.
        let m = Matrix::from_i64(&[&[1, 1]]);
        assert_eq!(m.solve(&[rat(2)]), Some(vec![rat(2), rat(0)]));
        // Inconsistent system.
        let m = Matrix::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.solve(&[rat(0), rat(1)]), None);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        let sing = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn inertia_examples() {
        let lorentz = Matrix::from_i64(&[&[-1, 0], &[0, 1]]);
        assert_eq!(
            lorentz.inertia().unwrap(),
            Inertia { pos: 1, neg: 1, zero: 0 }
        );
        // Zero diagonal, nonzero off-diagonal: hyperbolic plane.
        let hyp = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(hyp.inertia().unwrap(), Inertia { pos: 1, neg: 1, zero: 0 });
        let psd = Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert!(psd.inertia().unwrap().is_psd_corank_one());
    }

    #[test]
    fn tensor3_antisymmetry() {
        let mut t = Tensor3::zeros(3);
        t.set_antisym(0, 1, 2, rat(5));
        assert_eq!(*t.get(1, 0, 2), rat(-5));
        assert!(t.is_antisymmetric());
        assert_eq!(t.nonzero_entries(), vec![(0, 1, 2, rat(5))]);
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = Matrix::from_fn(rows, cols, |_, _| ratio(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=3)));
            prop_assert_eq!(m.rank() + m.kernel().len(), cols);
        }

        #[test]
        fn kernel_exactness(seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = Matrix::from_fn(4, 6, |_, _| rat(rng.gen_range(-4i64..=4)));
            for v in m.kernel() {
                prop_assert!(is_zero_vec(&m.mul_vec(&v)));
            }
        }
    }
}
