//! Lie algebras presented by structure constants: bracket evaluation, Jacobi
//! verification, subalgebra/ideal machinery, invariant fingerprints
//! (derived algebra, center, Killing rank), quotients and change of basis.

use crate::exactlin::{
    self, add_vec, is_zero_vec, rat_from_str, rat_to_string, zero_vec, Matrix, Rational,
    Tensor3, Vector,
};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LieAlgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("structure constants are not antisymmetric")]
    NotAntisymmetric,
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    NotLie(String, String, String),
    #[error("subspace basis vectors are linearly dependent")]
    DependentBasis,
    #[error("not an ideal: [{basis_label}, v_{ideal_index}] leaves the subspace")]
    NotIdeal {
        basis_label: String,
        ideal_index: usize,
    },
    #[error("change of basis matrix is singular")]
    SingularBasisChange,
    #[error("malformed algebra JSON: {0}")]
    Json(String),
}

/// Subspace of a fixed ambient coordinate space, stored as an independent
/// spanning set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    parent_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn new(parent_dim: usize, basis: Vec<Vector>) -> Result<Self, LieAlgError> {
        for v in &basis {
            if v.len() != parent_dim {
                return Err(LieAlgError::Dimension {
                    expected: parent_dim,
                    got: v.len(),
                });
            }
        }
        if !basis.is_empty() {
            let m = Matrix::from_rows(basis.clone());
            if m.rank() != basis.len() {
                return Err(LieAlgError::DependentBasis);
            }
        }
        Ok(Subspace { parent_dim, basis })
    }

    pub fn zero(parent_dim: usize) -> Self {
        Subspace {
            parent_dim,
            basis: Vec::new(),
        }
    }

    /// Span of an arbitrary (possibly dependent) set: rref rows become the
    /// canonical basis.
    pub fn span(parent_dim: usize, vectors: &[Vector]) -> Self {
        let nonzero: Vec<Vector> = vectors.iter().filter(|v| !is_zero_vec(v)).cloned().collect();
        if nonzero.is_empty() {
            return Subspace::zero(parent_dim);
        }
        let (r, pivots) = Matrix::from_rows(nonzero).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { parent_dim, basis }
    }

    pub fn parent_dim(&self) -> usize {
        self.parent_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Vector]) -> bool {
        v.iter().all(|x| self.contains_vec(x))
    }

    pub fn contains_vec(&self, v: &[Rational]) -> bool {
        if is_zero_vec(v) {
            return true;
        }
        if self.basis.is_empty() {
            return false;
        }
        let mut rows = self.basis.clone();
        let base_rank = Matrix::from_rows(rows.clone()).rank();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).rank() == base_rank
    }

    /// Coordinates of `v` in this subspace's basis, if `v` lies in it.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if self.basis.is_empty() {
            return is_zero_vec(v).then(Vec::new);
        }
        Matrix::from_cols(self.basis.clone()).solve(v)
    }

    /// Same subspace as another (mutual containment).
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.parent_dim == other.parent_dim
            && self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains_vec(v))
    }
}

/// A finite-dimensional real Lie algebra given by exact structure constants
/// `f^c_{ab}` in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    f: Tensor3,
    labels: Vec<String>,
}

/// One failing Jacobi triple together with the residual vector
/// `[[x_a,x_b],x_c] + [[x_b,x_c],x_a] + [[x_c,x_a],x_b]`.
#[derive(Debug, Clone)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub labels: (String, String, String),
    pub residual: Vector,
}

impl LieAlgebra {
    /// Construct and validate: antisymmetry plus the Jacobi identity.
    pub fn new(f: Tensor3, labels: Vec<String>) -> Result<Self, LieAlgError> {
        let alg = Self::new_unchecked(f, labels)?;
        if let Some(v) = alg.jacobi_violations(true).first() {
            return Err(LieAlgError::NotLie(
                v.labels.0.clone(),
                v.labels.1.clone(),
                v.labels.2.clone(),
            ));
        }
        Ok(alg)
    }

    /// Construct without the Jacobi check. Antisymmetry is still enforced.
    /// Intended for the Jacobi-variety workflow where candidate bracket
    /// tensors are assembled first and tested afterwards.
    pub fn new_unchecked(f: Tensor3, labels: Vec<String>) -> Result<Self, LieAlgError> {
        let dim = f.dim();
        if labels.len() != dim {
            return Err(LieAlgError::Dimension {
                expected: dim,
                got: labels.len(),
            });
        }
        if !f.is_antisymmetric() {
            return Err(LieAlgError::NotAntisymmetric);
        }
        Ok(LieAlgebra { dim, f, labels })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            f: Tensor3::zeros(dim),
            labels: (0..dim).map(|i| format!("e{i}")).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self) -> &Tensor3 {
        &self.f
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of a basis label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Bracket of two coefficient vectors: `Σ f^c_{ab} x^a y^b e_c`.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector, LieAlgError> {
        if x.len() != self.dim {
            return Err(LieAlgError::Dimension {
                expected: self.dim,
                got: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(LieAlgError::Dimension {
                expected: self.dim,
                got: y.len(),
            });
        }
        let mut out = zero_vec(self.dim);
        for a in 0..self.dim {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..self.dim {
                if y[b].is_zero() {
                    continue;
                }
                let xy = &x[a] * &y[b];
                for c in 0..self.dim {
                    let f = self.f.get(a, b, c);
                    if !f.is_zero() {
                        out[c] += f * &xy;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Bracket of two basis elements as a coefficient vector.
    pub fn bracket_basis(&self, a: usize, b: usize) -> Vector {
        (0..self.dim).map(|c| self.f.get(a, b, c).clone()).collect()
    }

    /// Sparse pair table: for each `(a,b)` the nonzero `(c, f^c_{ab})`.
    fn pair_table(&self) -> Vec<Vec<(usize, Rational)>> {
        let n = self.dim;
        let mut table = vec![Vec::new(); n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = self.f.get(a, b, c);
                    if !v.is_zero() {
                        table[a * n + b].push((c, v.clone()));
                    }
                }
            }
        }
        table
    }

    /// Jacobiator on all basis triples `a < b < c`; empty iff the bracket is
    /// a Lie bracket. With `first_only` the scan stops at the first failure.
    pub fn jacobi_violations(&self, first_only: bool) -> Vec<JacobiViolation> {
        let n = self.dim;
        let table = self.pair_table();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let mut res = zero_vec(n);
                    let mut nonzero = false;
                    for &(x, y, z) in &[(a, b, c), (b, c, a), (c, a, b)] {
                        for (e, v) in &table[x * n + y] {
                            for (d, w) in &table[e * n + z] {
                                res[*d] += v * w;
                                nonzero = true;
                            }
                        }
                    }
                    if nonzero && !is_zero_vec(&res) {
                        out.push(JacobiViolation {
                            triple: (a, b, c),
                            labels: (
                                self.labels[a].clone(),
                                self.labels[b].clone(),
                                self.labels[c].clone(),
                            ),
                            residual: res,
                        });
                        if first_only {
                            return out;
                        }
                    }
                }
            }
        }
        out
    }

    /// Jacobiator residual on one basis triple.
    pub fn jacobiator_entry(&self, a: usize, b: usize, c: usize) -> Vector {
        let left = self.bracket_basis(a, b);
        let mid = self.bracket_basis(b, c);
        let right = self.bracket_basis(c, a);
        let mut res = self.bracket(&left, &crate::exactlin::basis_vec(self.dim, c)).unwrap();
        res = add_vec(&res, &self.bracket(&mid, &crate::exactlin::basis_vec(self.dim, a)).unwrap());
        add_vec(&res, &self.bracket(&right, &crate::exactlin::basis_vec(self.dim, b)).unwrap())
    }

    pub fn is_lie(&self) -> bool {
        self.jacobi_violations(true).is_empty()
    }

    /// Adjoint matrix of the `i`-th basis element: column `j` is `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |c, j| self.f.get(i, j, c).clone())
    }

    /// Adjoint matrix of a general element.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let adi = self.ad_basis(i);
            m = m.add(&adi.scale(xi));
        }
        m
    }

    /// Span of all brackets of basis pairs.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut vectors = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                vectors.push(self.bracket_basis(a, b));
            }
        }
        Subspace::span(self.dim, &vectors)
    }

    /// `{x : [x, y] = 0 for all y}`.
    pub fn center(&self) -> Subspace {
        // Kernel of x ↦ ad_x, as an (n^2 × n) linear map.
        let n = self.dim;
        let m = Matrix::from_fn(n * n, n, |rc, a| {
            let (b, c) = (rc / n, rc % n);
            self.f.get(a, b, c).clone()
        });
        Subspace::span(n, &m.kernel())
    }

    /// Killing form `B(x,y) = tr(ad_x ad_y)` on basis pairs.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..=i {
                let v = ads[i].mul(&ads[j]).trace();
                k.set(i, j, v.clone());
                k.set(j, i, v);
            }
        }
        k
    }

    pub fn killing_rank(&self) -> usize {
        self.killing_form().rank()
    }

    /// Check `[alg, sub] ⊆ sub`.
    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        self.ideal_violation(sub).is_none()
    }

    fn ideal_violation(&self, sub: &Subspace) -> Option<(usize, usize)> {
        for a in 0..self.dim {
            let ad = self.ad_basis(a);
            for (k, v) in sub.basis().iter().enumerate() {
                if !sub.contains_vec(&ad.mul_vec(v)) {
                    return Some((a, k));
                }
            }
        }
        None
    }

    /// Check `sub` is closed under the bracket.
    pub fn is_subalgebra(&self, sub: &Subspace) -> bool {
        sub.basis().iter().enumerate().all(|(i, x)| {
            sub.basis()
                .iter()
                .skip(i + 1)
                .all(|y| sub.contains_vec(&self.bracket(x, y).unwrap()))
        })
    }

    /// Quotient by a verified ideal. Returns the quotient algebra together
    /// with the projection matrix (quotient coordinates of each parent basis
    /// vector). The quotient basis is the image of the parent basis vectors
    /// at non-pivot positions of the ideal's row echelon form.
    pub fn quotient_by_ideal(&self, ideal: &Subspace) -> Result<(LieAlgebra, Matrix), LieAlgError> {
        if ideal.parent_dim() != self.dim {
            return Err(LieAlgError::Dimension {
                expected: self.dim,
                got: ideal.parent_dim(),
            });
        }
        if let Some((a, k)) = self.ideal_violation(ideal) {
            return Err(LieAlgError::NotIdeal {
                basis_label: self.labels[a].clone(),
                ideal_index: k,
            });
        }
        let n = self.dim;
        let (ideal_rref, pivots) = if ideal.dim() == 0 {
            (Matrix::zeros(0, n), Vec::new())
        } else {
            Matrix::from_rows(ideal.basis().to_vec()).rref()
        };
        let complement: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        let q = complement.len();

        // proj: parent coords -> quotient coords. Basis vector e_i maps to
        // e_i minus its ideal part, expressed in the complement coordinates.
        // Solving [ideal basis | complement basis] x = e_i gives the split.
        let mut columns: Vec<Vector> = (0..pivots.len())
            .map(|r| ideal_rref.row(r).to_vec())
            .collect();
        for &ci in &complement {
            columns.push(exactlin::basis_vec(n, ci));
        }
        let split = Matrix::from_cols(columns);
        let split_inv = split.inverse().expect("ideal ⊕ complement spans");
        let proj = Matrix::from_fn(q, n, |r, c| {
            split_inv.get(pivots.len() + r, c).clone()
        });

        let mut f = Tensor3::zeros(q);
        for (i, &bi) in complement.iter().enumerate() {
            for (j, &bj) in complement.iter().enumerate().skip(i + 1) {
                let br = self.bracket_basis(bi, bj);
                let qcoords = proj.mul_vec(&br);
                for (c, v) in qcoords.into_iter().enumerate() {
                    if !v.is_zero() {
                        f.set_antisym(i, j, c, v);
                    }
                }
            }
        }
        let labels = complement.iter().map(|&i| self.labels[i].clone()).collect();
        let alg = LieAlgebra::new(f, labels)?;
        Ok((alg, proj))
    }

    /// Change of basis: column `a` of `g` holds the old coordinates of the
    /// new basis vector `e'_a`; the new constants are
    /// `f'^c_{ab} = (g^{-1})^c_r f^r_{pq} g^p_a g^q_b`.
    pub fn change_basis(&self, g: &Matrix) -> Result<LieAlgebra, LieAlgError> {
        if g.rows() != self.dim || g.cols() != self.dim {
            return Err(LieAlgError::Dimension {
                expected: self.dim,
                got: g.rows(),
            });
        }
        let ginv = g.inverse().ok_or(LieAlgError::SingularBasisChange)?;
        let n = self.dim;
        let mut f = Tensor3::zeros(n);
        for a in 0..n {
            let ga = g.col(a);
            for b in a + 1..n {
                let gb = g.col(b);
                let br = self.bracket(&ga, &gb).unwrap();
                let new_coords = ginv.mul_vec(&br);
                for (c, v) in new_coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        f.set_antisym(a, b, c, v);
                    }
                }
            }
        }
        LieAlgebra::new_unchecked(f, self.labels.clone())
    }
}

// ---------------------------------------------------------------------------
// JSON structure-constant format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct JsonEntry {
    a: usize,
    b: usize,
    c: usize,
    val: String,
}

#[derive(Serialize, Deserialize)]
struct JsonAlgebra {
    schema: String,
    dim: usize,
    labels: Vec<String>,
    f: Vec<JsonEntry>,
}

pub const SCHEMA: &str = "kine/1";

/// Serialize to the interchange JSON format: only nonzero entries with
/// `a < b`, lexicographic order, rationals in canonical `p/q` form.
pub fn to_json(alg: &LieAlgebra) -> String {
    let f = alg
        .constants()
        .nonzero_entries()
        .into_iter()
        .map(|(a, b, c, v)| JsonEntry {
            a,
            b,
            c,
            val: rat_to_string(&v),
        })
        .collect();
    let doc = JsonAlgebra {
        schema: SCHEMA.to_string(),
        dim: alg.dim(),
        labels: alg.labels().to_vec(),
        f,
    };
    serde_json::to_string_pretty(&doc).expect("serialization cannot fail")
}

/// Parse the interchange JSON format. Validates antisymmetry but not the
/// Jacobi identity (callers decide whether to demand a Lie algebra).
pub fn from_json(s: &str) -> Result<LieAlgebra, LieAlgError> {
    let doc: JsonAlgebra =
        serde_json::from_str(s).map_err(|e| LieAlgError::Json(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(LieAlgError::Json(format!(
            "unsupported schema {:?}, expected {:?}",
            doc.schema, SCHEMA
        )));
    }
    if doc.labels.len() != doc.dim {
        return Err(LieAlgError::Json(format!(
            "{} labels for dim {}",
            doc.labels.len(),
            doc.dim
        )));
    }
    let mut f = Tensor3::zeros(doc.dim);
    for e in &doc.f {
        if e.a >= doc.dim || e.b >= doc.dim || e.c >= doc.dim {
            return Err(LieAlgError::Json(format!(
                "index out of range in entry ({}, {}, {})",
                e.a, e.b, e.c
            )));
        }
        if e.a >= e.b {
            return Err(LieAlgError::Json(format!(
                "entries must have a < b, got ({}, {})",
                e.a, e.b
            )));
        }
        let v = rat_from_str(&e.val).map_err(LieAlgError::Json)?;
        if !f.get(e.a, e.b, e.c).is_zero() {
            return Err(LieAlgError::Json(format!(
                "duplicate entry ({}, {}, {})",
                e.a, e.b, e.c
            )));
        }
        f.set_antisym(e.a, e.b, e.c, v);
    }
    LieAlgebra::new_unchecked(f, doc.labels)
}
