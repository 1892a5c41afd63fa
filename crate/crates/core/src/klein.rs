//! Klein pairs `(k, h)`: effectiveness, reductivity and symmetry, the linear
//! isotropy representation, invariant tensors of the isotropy action, and the
//! coarse classification into lorentzian / riemannian / galilean / carrollian
//! geometries.

use crate::catalog::{CatalogError, EquivariantBracketCoeffs, KinBasis};
use crate::exactlin::{
    basis_vec, rat, zero_vec, Inertia, Matrix, Rational, Vector,
};
use crate::liealg::{LieAlgebra, Subspace};
use num_traits::{Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KleinError {
    #[error("h is not a subalgebra: [{0}, {1}] leaves h")]
    NotSubalgebra(String, String),
    #[error("subspace dimension {got} does not fit parent dimension {parent}")]
    BadSubspace { parent: usize, got: usize },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    LieAlg(#[from] crate::liealg::LieAlgError),
}

// ---------------------------------------------------------------------------
// Klein pairs
// ---------------------------------------------------------------------------

/// A Lie algebra together with a designated subalgebra. The coset space
/// `k/h` is coordinatized by the parent basis vectors at the non-pivot
/// positions of `h`'s row echelon form (for the kinematical pairs in the
/// table basis these are `P_1..P_d, H`).
#[derive(Debug, Clone)]
pub struct KleinPair {
    k: LieAlgebra,
    h: Subspace,
    tag: Option<KleinTag>,
    coset: Vec<usize>,
    proj: Matrix,
}

impl KleinPair {
    pub fn new(k: LieAlgebra, h: Subspace) -> Result<Self, KleinError> {
        if h.parent_dim() != k.dim() {
            return Err(KleinError::BadSubspace {
                parent: k.dim(),
                got: h.parent_dim(),
            });
        }
        for (i, x) in h.basis().iter().enumerate() {
            for y in h.basis().iter().skip(i + 1) {
                if !h.contains_vec(&k.bracket(x, y).unwrap()) {
                    return Err(KleinError::NotSubalgebra(
                        format!("h[{i}]"),
                        "h[..]".to_string(),
                    ));
                }
            }
        }
        let n = k.dim();
        let pivots = if h.dim() == 0 {
            Vec::new()
        } else {
            Matrix::from_rows(h.basis().to_vec()).rref().1
        };
        let coset: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
        // Split k = h ⊕ span(coset basis vectors); the projection to coset
        // coordinates is read off the inverse of the assembled column matrix.
        let h_rref = if h.dim() == 0 {
            Vec::new()
        } else {
            let (r, p) = Matrix::from_rows(h.basis().to_vec()).rref();
            (0..p.len()).map(|i| r.row(i).to_vec()).collect()
        };
        let mut columns: Vec<Vector> = h_rref;
        for &ci in &coset {
            columns.push(basis_vec(n, ci));
        }
        let split_inv = Matrix::from_cols(columns)
            .inverse()
            .expect("h ⊕ complement spans k");
        let proj = Matrix::from_fn(coset.len(), n, |r, c| {
            split_inv.get(h.dim() + r, c).clone()
        });
        Ok(KleinPair {
            k,
            h,
            tag: None,
            coset,
            proj,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.k
    }

    pub fn subalgebra(&self) -> &Subspace {
        &self.h
    }

    pub fn tag(&self) -> Option<&KleinTag> {
        self.tag.as_ref()
    }

    /// Dimension of the coset space `k/h`.
    pub fn coset_dim(&self) -> usize {
        self.coset.len()
    }

    /// Parent-basis indices representing the coset basis.
    pub fn coset_indices(&self) -> &[usize] {
        &self.coset
    }

    /// Coset labels, for reports.
    pub fn coset_labels(&self) -> Vec<String> {
        self.coset.iter().map(|&i| self.k.label(i).to_string()).collect()
    }

    /// Projection of a parent-coordinate vector to coset coordinates.
    pub fn project(&self, v: &[Rational]) -> Vector {
        self.proj.mul_vec(v)
    }

    /// Lift of a coset basis index to the parent space.
    pub fn lift(&self, i: usize) -> Vector {
        basis_vec(self.k.dim(), self.coset[i])
    }

    /// Linear isotropy representation: one matrix per basis vector of `h`,
    /// acting on coset coordinates via the projected adjoint action.
    pub fn isotropy(&self) -> IsotropyRep {
        let q = self.coset_dim();
        let generators = self
            .h
            .basis()
            .iter()
            .map(|x| {
                let ad = self.k.ad(x);
                Matrix::from_fn(q, q, |r, c| {
                    let image = ad.mul_vec(&self.lift(c));
                    self.project(&image)[r].clone()
                })
            })
            .collect();
        IsotropyRep {
            generators,
            coset_dim: q,
        }
    }

    /// Largest ideal of `k` contained in `h`; the pair is effective iff it is
    /// zero.
    pub fn maximal_ideal_in_h(&self) -> Subspace {
        let n = self.k.dim();
        let mut w: Vec<Vector> = self.h.basis().to_vec();
        loop {
            if w.is_empty() {
                return Subspace::zero(n);
            }
            let wspace = Subspace::span(n, &w);
            // x = W c must satisfy ad_a x ∈ W for every basis direction a:
            // complement coordinates of ad_a W c vanish.
            let (wr, wpiv) = Matrix::from_rows(wspace.basis().to_vec()).rref();
            let comp: Vec<usize> = (0..n).filter(|i| !wpiv.contains(i)).collect();
            let mut cols: Vec<Vector> = (0..wpiv.len()).map(|i| wr.row(i).to_vec()).collect();
            for &ci in &comp {
                cols.push(basis_vec(n, ci));
            }
            let inv = Matrix::from_cols(cols).inverse().unwrap();
            let comp_proj =
                Matrix::from_fn(comp.len(), n, |r, c| inv.get(wpiv.len() + r, c).clone());
            let wcols = Matrix::from_cols(wspace.basis().to_vec());
            let mut blocks = Vec::new();
            for a in 0..n {
                blocks.push(comp_proj.mul(&self.k.ad_basis(a)).mul(&wcols));
            }
            let stacked = Matrix::vstack(&blocks);
            let kern = stacked.kernel();
            let next: Vec<Vector> = kern.iter().map(|c| wcols.mul_vec(c)).collect();
            let next_space = Subspace::span(n, &next);
            if next_space.dim() == wspace.dim() {
                return next_space;
            }
            w = next_space.basis().to_vec();
        }
    }

    pub fn is_effective(&self) -> (bool, Option<Subspace>) {
        let ideal = self.maximal_ideal_in_h();
        if ideal.dim() == 0 {
            (true, None)
        } else {
            (false, Some(ideal))
        }
    }

    /// Solve for an `h`-stable complement `m` with the least-pivot solution;
    /// report `[m,m] ⊂ h` when reductive.
    pub fn reductive_complement(&self) -> Reductivity {
        let n = self.k.dim();
        let q = self.coset_dim();
        let w = self.h.dim();
        if w == 0 {
            return Reductivity::Reductive {
                m: Subspace::span(n, &(0..q).map(|i| self.lift(i)).collect::<Vec<_>>()),
                symmetric: self.symmetric_with(&(0..q).map(|i| self.lift(i)).collect::<Vec<_>>()),
            };
        }
        let iso = self.isotropy();
        // Unknowns x_{ij}: m_i = c_i + Σ_j x_{ij} h_j. Equivariance demands
        // [X_k, m_i] = Σ_l λ(X_k)_{li} m_l exactly in k.
        let unknowns = q * w;
        let mut rows: Vec<Vector> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        let mut gen_row_ranges = Vec::new();
        for (k_idx, xk) in self.h.basis().iter().enumerate() {
            let start = rows.len();
            let ad = self.k.ad(xk);
            let lam = &iso.generators[k_idx];
            let ad_h: Vec<Vector> = self
                .h
                .basis()
                .iter()
                .map(|hj| ad.mul_vec(hj))
                .collect();
            for i in 0..q {
                let ad_ci = ad.mul_vec(&self.lift(i));
                for r in 0..n {
                    let mut row = zero_vec(unknowns);
                    for j in 0..w {
                        row[i * w + j] += &ad_h[j][r];
                    }
                    for l in 0..q {
                        let coef = lam.get(l, i);
                        if coef.is_zero() {
                            continue;
                        }
                        for j in 0..w {
                            row[l * w + j] -= coef * &self.h.basis()[j][r];
                        }
                    }
                    let mut b = -ad_ci[r].clone();
                    for l in 0..q {
                        b += lam.get(l, i) * &self.lift(l)[r];
                    }
                    rows.push(row);
                    rhs.push(b);
                }
            }
            gen_row_ranges.push((k_idx, start, rows.len()));
        }
        let full = Matrix::from_rows(rows.clone());
        match full.solve(&rhs) {
            Some(x) => {
                let m_basis: Vec<Vector> = (0..q)
                    .map(|i| {
                        let mut v = self.lift(i);
                        for j in 0..w {
                            let c = &x[i * w + j];
                            if !c.is_zero() {
                                v = crate::exactlin::add_vec(
                                    &v,
                                    &crate::exactlin::scale_vec(&self.h.basis()[j], c),
                                );
                            }
                        }
                        v
                    })
                    .collect();
                let symmetric = self.symmetric_with(&m_basis);
                Reductivity::Reductive {
                    m: Subspace::new(n, m_basis).expect("complement basis independent"),
                    symmetric,
                }
            }
            None => {
                // Attribute the inconsistency: find the first generator prefix
                // whose accumulated system is already unsolvable.
                let mut witness = "equivariance system inconsistent".to_string();
                for &(k_idx, _, end) in &gen_row_ranges {
                    let sub = Matrix::from_rows(rows[..end].to_vec());
                    if sub.solve(&rhs[..end]).is_none() {
                        let gen_label = self.describe_h_vector(k_idx);
                        witness = format!(
                            "no h-stable complement: adding equivariance under {gen_label} \
                             makes the splitting system inconsistent"
                        );
                        break;
                    }
                }
                Reductivity::NonReductive { witness }
            }
        }
    }

    fn describe_h_vector(&self, idx: usize) -> String {
        let v = &self.h.basis()[idx];
        let mut terms = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                terms.push(format!(
                    "{}{}",
                    if c == &rat(1) {
                        String::new()
                    } else {
                        format!("{}*", crate::exactlin::rat_to_string(c))
                    },
                    self.k.label(i)
                ));
            }
        }
        terms.join(" + ")
    }

    fn symmetric_with(&self, m_basis: &[Vector]) -> bool {
        m_basis.iter().enumerate().all(|(i, x)| {
            m_basis.iter().skip(i + 1).all(|y| {
                self.h
                    .contains_vec(&self.k.bracket(x, y).unwrap())
            })
        })
    }

    /// Invariant tensors of the linear isotropy representation and the
    /// derived coarse class.
    pub fn invariant_signature(&self) -> InvariantSignature {
        let iso = self.isotropy();
        invariant_signature_of(&iso)
    }
}

/// Result of the reductive-splitting solve.
#[derive(Debug, Clone)]
pub enum Reductivity {
    Reductive { m: Subspace, symmetric: bool },
    NonReductive { witness: String },
}

impl Reductivity {
    pub fn is_reductive(&self) -> bool {
        matches!(self, Reductivity::Reductive { .. })
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(
            self,
            Reductivity::Reductive {
                symmetric: true,
                ..
            }
        )
    }
}

/// The linear isotropy representation on coset coordinates: one matrix per
/// basis vector of `h`, satisfying `λ_{[X,Y]} = [λ_X, λ_Y]`.
#[derive(Debug, Clone)]
pub struct IsotropyRep {
    pub generators: Vec<Matrix>,
    pub coset_dim: usize,
}

// ---------------------------------------------------------------------------
// Invariant tensors and classification
// ---------------------------------------------------------------------------

/// Coarse geometry class decided by the invariant tensors of the isotropy
/// representation. `Other` carries a note (aristotelian signatures and
/// non-catalog inputs land there).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryClass {
    Lorentzian,
    Riemannian,
    Galilean,
    Carrollian,
    Other(String),
}

impl fmt::Display for GeometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryClass::Lorentzian => write!(f, "Lorentzian"),
            GeometryClass::Riemannian => write!(f, "Riemannian"),
            GeometryClass::Galilean => write!(f, "Galilean"),
            GeometryClass::Carrollian => write!(f, "Carrollian"),
            GeometryClass::Other(note) => write!(f, "Other ({note})"),
        }
    }
}

/// Dimensions of the invariant subspaces in the tensor powers of the coset
/// representation, class-defining representatives, and the decided class.
#[derive(Debug, Clone)]
pub struct InvariantSignature {
    pub dim_inv_v: usize,
    pub dim_inv_vstar: usize,
    pub dim_inv_sym2v: usize,
    pub dim_inv_sym2vstar: usize,
    pub dim_inv_wedge2vstar: usize,
    pub inv_v: Vec<Vector>,
    pub inv_vstar: Vec<Vector>,
    /// Invariant symmetric bivectors as symmetric matrices.
    pub inv_sym2v: Vec<Matrix>,
    /// Invariant symmetric bilinear forms as symmetric matrices.
    pub inv_sym2vstar: Vec<Matrix>,
    /// Inertia of the class-defining metric representative, sign-normalized.
    pub metric_inertia: Option<Inertia>,
    pub class: GeometryClass,
}

/// Action on symmetric bilinear forms: `M ↦ -(AᵀM + MA)` is the generator
/// action; invariance means `AᵀM + MA = 0`.
pub fn sym_form_action(a: &Matrix) -> Matrix {
    let n = a.rows();
    let coords: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .collect();
    Matrix::from_fn(coords.len(), coords.len(), |r, c| {
        let (i, j) = coords[r];
        let (k, l) = coords[c];
        // Coefficient of basis form E_kl (symmetrized) in Aᵀ E_kl + E_kl A at
        // entry (i, j): E_kl has entries (k,l) and (l,k) equal to 1.
        let mut v = Rational::zero();
        // (Aᵀ M)_{ij} = Σ_s A_{si} M_{sj}; (M A)_{ij} = Σ_s M_{is} A_{sj}
        // with M = E_kl + E_lk (k ≠ l) or E_kk.
        let mut add = |s: usize, t: usize| {
            // contribution of M_{st} = 1
            if t == j {
                v += a.get(s, i);
            }
            if s == i {
                v += a.get(t, j);
            }
        };
        if k == l {
            add(k, l);
        } else {
            add(k, l);
            add(l, k);
        }
        v
    })
}

/// Action on symmetric bivectors: invariance means `Aλ + λAᵀ = 0`.
pub fn sym_bivector_action(a: &Matrix) -> Matrix {
    sym_form_action(&a.transpose())
}

/// Action on 2-forms (antisymmetric): invariance means `AᵀW + WA = 0`.
pub fn wedge_form_action(a: &Matrix) -> Matrix {
    let n = a.rows();
    let coords: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Matrix::from_fn(coords.len(), coords.len(), |r, c| {
        let (i, j) = coords[r];
        let (k, l) = coords[c];
        let mut v = Rational::zero();
        let mut add = |s: usize, t: usize, sign: i64| {
            // contribution of W_{st} = sign
            if t == j {
                v += rat(sign) * a.get(s, i);
            }
            if s == i {
                v += rat(sign) * a.get(t, j);
            }
        };
        add(k, l, 1);
        add(l, k, -1);
        v
    })
}

fn sym_coords_to_matrix(n: usize, coords: &[Rational]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    let mut idx = 0;
    for i in 0..n {
        for j in i..n {
            m.set(i, j, coords[idx].clone());
            m.set(j, i, coords[idx].clone());
            idx += 1;
        }
    }
    m
}

/// Probe combinations of a small basis of symmetric matrices: singles, pair
/// sums/differences, and (for up to three basis elements) a fixed small
/// integer grid. Deterministic order.
fn probe_combinations(basis: &[Matrix]) -> Vec<Matrix> {
    let mut out = Vec::new();
    out.extend(basis.iter().cloned());
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            out.push(basis[i].add(&basis[j]));
            out.push(basis[i].sub(&basis[j]));
        }
    }
    if basis.len() >= 2 && basis.len() <= 3 {
        let range = [-2i64, -1, 1, 2];
        if basis.len() == 2 {
            for &x in &range {
                for &y in &range {
                    out.push(basis[0].scale(&rat(x)).add(&basis[1].scale(&rat(y))));
                }
            }
        } else {
            for &x in &range {
                for &y in &range {
                    for &z in &range {
                        out.push(
                            basis[0]
                                .scale(&rat(x))
                                .add(&basis[1].scale(&rat(y)))
                                .add(&basis[2].scale(&rat(z))),
                        );
                    }
                }
            }
        }
    }
    out.retain(|m| !m.is_zero());
    out
}

/// Compute invariant tensors of an isotropy representation and classify.
pub fn invariant_signature_of(iso: &IsotropyRep) -> InvariantSignature {
    let q = iso.coset_dim;
    let gens = &iso.generators;
    let inv_v = crate::exactlin::fixed_subspace(gens, q).expect("square actions");
    let dual_gens: Vec<Matrix> = gens.iter().map(|a| a.transpose().scale(&rat(-1))).collect();
    let inv_vstar = crate::exactlin::fixed_subspace(&dual_gens, q).expect("square actions");

    let sym_form_gens: Vec<Matrix> = gens.iter().map(sym_form_action).collect();
    let sym_dim = q * (q + 1) / 2;
    let inv_sym2vstar: Vec<Matrix> = crate::exactlin::fixed_subspace(&sym_form_gens, sym_dim)
        .expect("square actions")
        .iter()
        .map(|v| sym_coords_to_matrix(q, v))
        .collect();

    let sym_biv_gens: Vec<Matrix> = gens.iter().map(sym_bivector_action).collect();
    let inv_sym2v: Vec<Matrix> = crate::exactlin::fixed_subspace(&sym_biv_gens, sym_dim)
        .expect("square actions")
        .iter()
        .map(|v| sym_coords_to_matrix(q, v))
        .collect();

    let wedge_gens: Vec<Matrix> = gens.iter().map(wedge_form_action).collect();
    let dim_inv_wedge2vstar = crate::exactlin::fixed_subspace(&wedge_gens, q * (q - 1) / 2)
        .expect("square actions")
        .len();

    let mut metric_inertia = None;
    let class = 'class: {
        // Aristotelian signature: both an invariant vector and covector.
        if !inv_v.is_empty() && !inv_vstar.is_empty() {
            break 'class GeometryClass::Other(
                "aristotelian signature: invariant vector and covector".to_string(),
            );
        }
        // Nondegenerate invariant metric: lorentzian or riemannian.
        for m in probe_combinations(&inv_sym2vstar) {
            let inertia = m.inertia().expect("symmetric probe");
            if inertia.is_lorentzian() {
                metric_inertia = Some(if inertia.neg == 1 {
                    inertia
                } else {
                    Inertia {
                        pos: inertia.neg,
                        neg: inertia.pos,
                        zero: 0,
                    }
                });
                break 'class GeometryClass::Lorentzian;
            }
            if inertia.is_definite() {
                metric_inertia = Some(Inertia {
                    pos: q,
                    neg: 0,
                    zero: 0,
                });
                break 'class GeometryClass::Riemannian;
            }
        }
        // Galilean: invariant covector τ plus psd corank-1 bivector λ with
        // λ(τ,·) = 0.
        for tau in &inv_vstar {
            for lam in probe_combinations(&inv_sym2v) {
                let signed = if lam.inertia().unwrap().neg > 0 {
                    lam.scale(&rat(-1))
                } else {
                    lam
                };
                if signed.inertia().unwrap().is_psd_corank_one()
                    && crate::exactlin::is_zero_vec(&signed.mul_vec(tau))
                {
                    break 'class GeometryClass::Galilean;
                }
            }
        }
        // Carrollian: invariant vector ξ plus psd corank-1 form h with
        // h(ξ,·) = 0.
        for xi in &inv_v {
            for h in probe_combinations(&inv_sym2vstar) {
                let signed = if h.inertia().unwrap().neg > 0 {
                    h.scale(&rat(-1))
                } else {
                    h
                };
                if signed.inertia().unwrap().is_psd_corank_one()
                    && crate::exactlin::is_zero_vec(&signed.mul_vec(xi))
                {
                    break 'class GeometryClass::Carrollian;
                }
            }
        }
        GeometryClass::Other("no class-defining invariant tensors found".to_string())
    };

    InvariantSignature {
        dim_inv_v: inv_v.len(),
        dim_inv_vstar: inv_vstar.len(),
        dim_inv_sym2v: inv_sym2v.len(),
        dim_inv_sym2vstar: inv_sym2vstar.len(),
        dim_inv_wedge2vstar,
        inv_v,
        inv_vstar,
        inv_sym2v,
        inv_sym2vstar,
        metric_inertia,
        class,
    }
}

// ---------------------------------------------------------------------------
// The table of kinematical Klein geometries
// ---------------------------------------------------------------------------

/// The sixteen kinematical Klein geometries of generic dimension, with the
/// bracket conventions of the classification table (subalgebra spanned by
/// `L_ab` and `B_a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KleinTag {
    Minkowski,
    DeSitter,
    AntiDeSitter,
    Euclidean,
    Sphere,
    Hyperbolic,
    Galilei,
    DeSitterGalilei,
    /// `γ ∈ (-1, 1)`.
    TorsionalDeSitterGalilei { gamma: Rational },
    /// The `n0` member of the torsional de Sitter-Galilei family.
    TorsionalDeSitterGalileiNZero,
    AntiDeSitterGalilei,
    /// `χ > 0`.
    TorsionalAntiDeSitterGalilei { chi: Rational },
    Carroll,
    DeSitterCarroll,
    AntiDeSitterCarroll,
    Lightcone,
}

impl KleinTag {
    /// All sixteen rows at representative parameters (`γ = 0`, `χ = 1`).
    pub fn all_rows() -> Vec<KleinTag> {
        use KleinTag::*;
        vec![
            Minkowski,
            DeSitter,
            AntiDeSitter,
            Euclidean,
            Sphere,
            Hyperbolic,
            Galilei,
            DeSitterGalilei,
            TorsionalDeSitterGalilei { gamma: rat(0) },
            TorsionalDeSitterGalileiNZero,
            AntiDeSitterGalilei,
            TorsionalAntiDeSitterGalilei { chi: rat(1) },
            Carroll,
            DeSitterCarroll,
            AntiDeSitterCarroll,
            Lightcone,
        ]
    }

    pub fn name(&self) -> String {
        use KleinTag::*;
        match self {
            Minkowski => "Minkowski".into(),
            DeSitter => "de Sitter".into(),
            AntiDeSitter => "anti de Sitter".into(),
            Euclidean => "euclidean".into(),
            Sphere => "sphere".into(),
            Hyperbolic => "hyperbolic".into(),
            Galilei => "Galilei".into(),
            DeSitterGalilei => "de Sitter-Galilei".into(),
            TorsionalDeSitterGalilei { gamma } => format!(
                "torsional de Sitter-Galilei [gamma={}]",
                crate::exactlin::rat_to_string(gamma)
            ),
            TorsionalDeSitterGalileiNZero => "torsional de Sitter-Galilei [n0]".into(),
            AntiDeSitterGalilei => "anti de Sitter-Galilei".into(),
            TorsionalAntiDeSitterGalilei { chi } => format!(
                "torsional anti de Sitter-Galilei [chi={}]",
                crate::exactlin::rat_to_string(chi)
            ),
            Carroll => "Carroll".into(),
            DeSitterCarroll => "de Sitter-Carroll".into(),
            AntiDeSitterCarroll => "anti de Sitter-Carroll".into(),
            Lightcone => "lightcone".into(),
        }
    }

    /// Klein pair names `(k, h)` at spatial dimension `d`.
    pub fn pair_names(&self, d: usize) -> (String, String) {
        use KleinTag::*;
        let so_d1 = format!("so({d},1)");
        let so_dp1 = format!("so({})", d + 1);
        let iso_d = format!("iso({d})");
        match self {
            Minkowski => (format!("iso({d},1)"), so_d1),
            DeSitter => (format!("so({},1)", d + 1), so_d1),
            AntiDeSitter => (format!("so({d},2)"), so_d1),
            Euclidean => (format!("iso({})", d + 1), so_dp1),
            Sphere => (format!("so({})", d + 2), so_dp1),
            Hyperbolic => (format!("so({},1)", d + 1), so_dp1),
            Galilei => ("g".into(), iso_d),
            DeSitterGalilei => ("n+[gamma=-1]".into(), iso_d),
            TorsionalDeSitterGalilei { gamma } => (
                format!("n+[gamma={}]", crate::exactlin::rat_to_string(gamma)),
                iso_d,
            ),
            TorsionalDeSitterGalileiNZero => ("n0".into(), iso_d),
            AntiDeSitterGalilei => ("n-[chi=0]".into(), iso_d),
            TorsionalAntiDeSitterGalilei { chi } => (
                format!("n-[chi={}]", crate::exactlin::rat_to_string(chi)),
                iso_d,
            ),
            Carroll => ("c".into(), iso_d),
            DeSitterCarroll => (format!("iso({})", d + 1), iso_d),
            AntiDeSitterCarroll => (format!("iso({d},1)"), iso_d),
            Lightcone => (format!("so({},1)", d + 1), iso_d),
        }
    }

    /// Extra brackets of the row, on top of the defining ones.
    pub fn coeffs(&self) -> Result<EquivariantBracketCoeffs, CatalogError> {
        use KleinTag::*;
        let c = match self {
            Minkowski => EquivariantBracketCoeffs::from_i64(0, -1, 0, 0, 1, 1, 0, 0),
            DeSitter => EquivariantBracketCoeffs::from_i64(0, -1, -1, 0, 1, 1, 0, -1),
            AntiDeSitter => EquivariantBracketCoeffs::from_i64(0, -1, 1, 0, 1, 1, 0, 1),
            Euclidean => EquivariantBracketCoeffs::from_i64(0, 1, 0, 0, -1, 1, 0, 0),
            Sphere => EquivariantBracketCoeffs::from_i64(0, 1, -1, 0, -1, 1, 0, -1),
            Hyperbolic => EquivariantBracketCoeffs::from_i64(0, 1, 1, 0, -1, 1, 0, 1),
            Galilei => EquivariantBracketCoeffs::from_i64(0, -1, 0, 0, 0, 0, 0, 0),
            DeSitterGalilei => EquivariantBracketCoeffs::from_i64(0, -1, -1, 0, 0, 0, 0, 0),
            TorsionalDeSitterGalilei { gamma } => {
                if gamma <= &rat(-1) || gamma >= &rat(1) {
                    return Err(CatalogError::ParamOutOfRange {
                        param: "gamma",
                        value: crate::exactlin::rat_to_string(gamma),
                        range: "(-1, 1)",
                    });
                }
                let mut c = EquivariantBracketCoeffs::from_i64(0, -1, 0, 0, 0, 0, 0, 0);
                c.gamma = gamma.clone();
                c.delta = rat(1) + gamma;
                c
            }
            TorsionalDeSitterGalileiNZero => {
                EquivariantBracketCoeffs::from_i64(0, -1, 1, 2, 0, 0, 0, 0)
            }
            AntiDeSitterGalilei => EquivariantBracketCoeffs::from_i64(0, -1, 1, 0, 0, 0, 0, 0),
            TorsionalAntiDeSitterGalilei { chi } => {
                if !chi.is_positive() {
                    return Err(CatalogError::ParamOutOfRange {
                        param: "chi",
                        value: crate::exactlin::rat_to_string(chi),
                        range: "(0, oo)",
                    });
                }
                let mut c = EquivariantBracketCoeffs::from_i64(0, -1, 0, 0, 0, 0, 0, 0);
                c.gamma = rat(1) + chi * chi;
                c.delta = rat(2) * chi;
                c
            }
            Carroll => EquivariantBracketCoeffs::from_i64(0, 0, 0, 0, 0, 1, 0, 0),
            DeSitterCarroll => EquivariantBracketCoeffs::from_i64(0, 0, -1, 0, 0, 1, 0, -1),
            AntiDeSitterCarroll => EquivariantBracketCoeffs::from_i64(0, 0, 1, 0, 0, 1, 0, 1),
            Lightcone => EquivariantBracketCoeffs::from_i64(1, 0, 0, -1, 0, 1, 1, 0),
        };
        Ok(c)
    }

    pub fn expected_class(&self) -> GeometryClass {
        use KleinTag::*;
        match self {
            Minkowski | DeSitter | AntiDeSitter => GeometryClass::Lorentzian,
            Euclidean | Sphere | Hyperbolic => GeometryClass::Riemannian,
            Galilei
            | DeSitterGalilei
            | TorsionalDeSitterGalilei { .. }
            | TorsionalDeSitterGalileiNZero
            | AntiDeSitterGalilei
            | TorsionalAntiDeSitterGalilei { .. } => GeometryClass::Galilean,
            Carroll | DeSitterCarroll | AntiDeSitterCarroll | Lightcone => {
                GeometryClass::Carrollian
            }
        }
    }

    pub fn expected_reductive(&self) -> bool {
        !matches!(self, KleinTag::Lightcone)
    }

    pub fn expected_symmetric(&self) -> bool {
        !matches!(
            self,
            KleinTag::Lightcone
                | KleinTag::TorsionalDeSitterGalilei { .. }
                | KleinTag::TorsionalDeSitterGalileiNZero
                | KleinTag::TorsionalAntiDeSitterGalilei { .. }
        )
    }
}

impl fmt::Display for KleinTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Build a table row: the algebra from its bracket column and the subalgebra
/// spanned by `L_ab, B_a`.
pub fn build_klein(tag: KleinTag, d: usize) -> Result<KleinPair, KleinError> {
    if d < 3 {
        return Err(KleinError::Catalog(CatalogError::OutOfScope { d }));
    }
    let kb = KinBasis::new(d);
    let f = tag.coeffs()?.assemble(d)?;
    let k = LieAlgebra::new(f, kb.labels())?;
    let mut h_basis = Vec::new();
    for i in 0..kb.n_rot() {
        h_basis.push(basis_vec(kb.dim(), i));
    }
    for a in 1..=d {
        h_basis.push(basis_vec(kb.dim(), kb.b(a)));
    }
    let h = Subspace::new(kb.dim(), h_basis)?;
    let mut pair = KleinPair::new(k, h)?;
    pair.tag = Some(tag);
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::KinematicalTag;
    use crate::exactlin::{is_zero_vec, ratio, Tensor3};

    fn kb(d: usize) -> KinBasis {
        KinBasis::new(d)
    }

    #[test]
    fn minkowski_brackets_match_row() {
        let p = build_klein(KleinTag::Minkowski, 3).unwrap();
        let b = kb(3);
        let alg = p.algebra();
        // [B_1, B_2] = L_12, [B_a, P_a] = H, [H, B_a] = -P_a.
        assert_eq!(
            alg.bracket_basis(b.b(1), b.b(2)),
            basis_vec(b.dim(), b.l(1, 2))
        );
        assert_eq!(alg.bracket_basis(b.b(1), b.p(1)), basis_vec(b.dim(), b.h()));
        let mut hb = zero_vec(b.dim());
        hb[b.p(1)] = rat(-1);
        assert_eq!(alg.bracket_basis(b.h(), b.b(1)), hb);
    }

    #[test]
    fn lightcone_brackets_match_row() {
        let p = build_klein(KleinTag::Lightcone, 3).unwrap();
        let b = kb(3);
        let alg = p.algebra();
        let mut hb = zero_vec(b.dim());
        hb[b.b(1)] = rat(1);
        assert_eq!(alg.bracket_basis(b.h(), b.b(1)), hb);
        let mut hp = zero_vec(b.dim());
        hp[b.p(1)] = rat(-1);
        assert_eq!(alg.bracket_basis(b.h(), b.p(1)), hp);
        // [B_a, P_b] = δ_ab H + L_ab.
        assert_eq!(alg.bracket_basis(b.b(1), b.p(1)), basis_vec(b.dim(), b.h()));
        assert_eq!(
            alg.bracket_basis(b.b(1), b.p(2)),
            basis_vec(b.dim(), b.l(1, 2))
        );
    }

    #[test]
    fn carroll_brackets_match_row() {
        let p = build_klein(KleinTag::Carroll, 3).unwrap();
        let b = kb(3);
        assert_eq!(
            p.algebra().bracket_basis(b.b(2), b.p(2)),
            basis_vec(b.dim(), b.h())
        );
        // Only extra bracket: [H, P] and [P, P] vanish.
        assert!(is_zero_vec(&p.algebra().bracket_basis(b.h(), b.p(1))));
        assert!(is_zero_vec(&p.algebra().bracket_basis(b.p(1), b.p(2))));
    }

    #[test]
    fn coset_basis_is_p_and_h() {
        let p = build_klein(KleinTag::Galilei, 3).unwrap();
        let b = kb(3);
        let expect: Vec<usize> = (1..=3).map(|a| b.p(a)).chain([b.h()]).collect();
        assert_eq!(p.coset_indices(), &expect[..]);
    }

    #[test]
    fn all_rows_effective_and_classified() {
        let mut counts = std::collections::HashMap::new();
        for tag in KleinTag::all_rows() {
            let p = build_klein(tag.clone(), 3).unwrap();
            let (eff, _) = p.is_effective();
            assert!(eff, "{tag} must be effective");
            let sig = p.invariant_signature();
            assert_eq!(sig.class, tag.expected_class(), "{tag}");
            *counts.entry(format!("{}", sig.class)).or_insert(0) += 1;
        }
        assert_eq!(counts["Lorentzian"], 3);
        assert_eq!(counts["Riemannian"], 3);
        assert_eq!(counts["Galilean"], 6);
        assert_eq!(counts["Carrollian"], 4);
    }

    #[test]
    fn reductivity_and_symmetry_match_table() {
        for tag in KleinTag::all_rows() {
            let p = build_klein(tag.clone(), 3).unwrap();
            let red = p.reductive_complement();
            assert_eq!(red.is_reductive(), tag.expected_reductive(), "{tag}");
            if red.is_reductive() {
                assert_eq!(red.is_symmetric(), tag.expected_symmetric(), "{tag}");
            }
        }
    }

    #[test]
    fn galilei_complement_is_p_h_and_symmetric() {
        let p = build_klein(KleinTag::Galilei, 3).unwrap();
        let b = kb(3);
        match p.reductive_complement() {
            Reductivity::Reductive { m, symmetric } => {
                assert!(symmetric);
                let expected = Subspace::new(
                    b.dim(),
                    (1..=3)
                        .map(|a| basis_vec(b.dim(), b.p(a)))
                        .chain([basis_vec(b.dim(), b.h())])
                        .collect(),
                )
                .unwrap();
                assert!(m.same_as(&expected));
            }
            Reductivity::NonReductive { witness } => panic!("Galilei non-reductive: {witness}"),
        }
    }

    #[test]
    fn torsional_galilei_reductive_not_symmetric() {
        let p = build_klein(
            KleinTag::TorsionalDeSitterGalilei { gamma: rat(0) },
            3,
        )
        .unwrap();
        let red = p.reductive_complement();
        assert!(red.is_reductive());
        assert!(!red.is_symmetric());
    }

    #[test]
    fn lightcone_is_non_reductive_with_witness() {
        let p = build_klein(KleinTag::Lightcone, 3).unwrap();
        match p.reductive_complement() {
            Reductivity::NonReductive { witness } => {
                assert!(witness.contains("B"), "witness: {witness}");
            }
            Reductivity::Reductive { .. } => panic!("lightcone must be non-reductive"),
        }
    }

    #[test]
    fn isotropy_examples() {
        let b = kb(3);
        // Carroll: λ_{B_a} P̄_b = δ_ab H̄, λ_{B_a} H̄ = 0.
        let p = build_klein(KleinTag::Carroll, 3).unwrap();
        let iso = p.isotropy();
        // h basis ordering: L12, L13, L23, B1, B2, B3.
        let lam_b1 = &iso.generators[3];
        // Coset coordinates: P1, P2, P3, H.
        assert_eq!(*lam_b1.get(3, 0), rat(1)); // P̄_1 ↦ H̄
        assert_eq!(*lam_b1.get(3, 1), rat(0));
        assert!(lam_b1.col(3).iter().all(Zero::is_zero)); // H̄ ↦ 0

        // Galilei: λ_{B_a} H̄ = -P̄_a... in the residue of [B_a, H] = P_a the
        // sign is positive; the defining bracket is [H, B_a] = -P_a.
        let p = build_klein(KleinTag::Galilei, 3).unwrap();
        let iso = p.isotropy();
        let lam_b1 = &iso.generators[3];
        assert_eq!(*lam_b1.get(0, 3), rat(1)); // H̄ ↦ P̄_1 via [B_1, H] = P_1
        // λ_{L_12} H̄ = 0 for every pair.
        for tag in KleinTag::all_rows() {
            let p = build_klein(tag, 3).unwrap();
            let iso = p.isotropy();
            let lam_l12 = &iso.generators[0];
            assert!(lam_l12.col(3).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn isotropy_is_a_homomorphism() {
        for tag in KleinTag::all_rows() {
            let p = build_klein(tag.clone(), 3).unwrap();
            let iso = p.isotropy();
            let h = p.subalgebra();
            for (i, x) in h.basis().iter().enumerate() {
                for (j, y) in h.basis().iter().enumerate().skip(i + 1) {
                    let br = p.algebra().bracket(x, y).unwrap();
                    let coords = h.coordinates(&br).expect("h closed");
                    let mut lam_br = Matrix::zeros(iso.coset_dim, iso.coset_dim);
                    for (k, c) in coords.iter().enumerate() {
                        if !c.is_zero() {
                            lam_br = lam_br.add(&iso.generators[k].scale(c));
                        }
                    }
                    let comm = iso.generators[i].commutator(&iso.generators[j]);
                    assert_eq!(lam_br, comm, "{tag}: λ_[X,Y] = [λ_X, λ_Y]");
                }
            }
        }
    }

    #[test]
    fn minkowski_signature_is_lorentzian() {
        let p = build_klein(KleinTag::Minkowski, 3).unwrap();
        let sig = p.invariant_signature();
        assert_eq!(sig.dim_inv_sym2vstar, 1);
        assert_eq!(sig.class, GeometryClass::Lorentzian);
        assert_eq!(
            sig.metric_inertia,
            Some(Inertia {
                pos: 3,
                neg: 1,
                zero: 0
            })
        );
    }

    #[test]
    fn galilei_signature_has_clock_and_ruler() {
        let p = build_klein(KleinTag::Galilei, 3).unwrap();
        let sig = p.invariant_signature();
        assert_eq!(sig.class, GeometryClass::Galilean);
        assert_eq!(sig.dim_inv_vstar, 1);
        assert_eq!(sig.dim_inv_sym2v, 1);
        // The invariant covector is the clock: dual to H̄ (coset index 3).
        let tau = &sig.inv_vstar[0];
        assert!(tau[0].is_zero() && tau[1].is_zero() && tau[2].is_zero());
        assert!(!tau[3].is_zero());
        // λ(τ, ·) = 0.
        assert!(is_zero_vec(&sig.inv_sym2v[0].mul_vec(tau)));
    }

    #[test]
    fn carroll_signature_has_invariant_null_vector() {
        for tag in [
            KleinTag::Carroll,
            KleinTag::DeSitterCarroll,
            KleinTag::AntiDeSitterCarroll,
            KleinTag::Lightcone,
        ] {
            let p = build_klein(tag.clone(), 3).unwrap();
            let sig = p.invariant_signature();
            assert_eq!(sig.class, GeometryClass::Carrollian, "{tag}");
            assert_eq!(sig.dim_inv_v, 1, "{tag}");
            let xi = &sig.inv_v[0];
            // ξ is the coset image of H.
            assert!(xi[..3].iter().all(Zero::is_zero));
            // h(ξ, ξ) = 0 for every invariant bilinear.
            for h in &sig.inv_sym2vstar {
                let hxi = h.mul_vec(xi);
                assert!(crate::exactlin::dot(xi, &hxi).is_zero(), "{tag}");
            }
        }
    }

    #[test]
    fn bargmann_pair_invariants() {
        // (b, h) with h = span{L, B}: invariant vector Z, covector η, and a
        // lorentzian metric with Z null.
        let b = crate::catalog::build_bargmann(crate::catalog::BargmannTag::GHat, 3).unwrap();
        let kbz = b.basis();
        let mut h_basis = Vec::new();
        for i in 0..kbz.n_rot() {
            h_basis.push(basis_vec(kbz.dim(), i));
        }
        for a in 1..=3 {
            h_basis.push(basis_vec(kbz.dim(), kbz.b(a)));
        }
        let pair = KleinPair::new(b.alg.clone(), Subspace::new(kbz.dim(), h_basis).unwrap())
            .unwrap();
        // Coset: P1 P2 P3 H Z.
        assert_eq!(pair.coset_dim(), 5);
        let sig = pair.invariant_signature();
        // Z̄ is invariant (coset index 4), η (dual of H̄, index 3) is invariant.
        assert_eq!(sig.dim_inv_v, 1);
        assert!(!sig.inv_v[0][4].is_zero());
        assert_eq!(sig.dim_inv_vstar, 1);
        assert!(!sig.inv_vstar[0][3].is_zero());
        // Some invariant metric is lorentzian with h(Z,Z) = 0.
        let z = &sig.inv_v[0];
        let mut found = false;
        for m in probe_combinations(&sig.inv_sym2vstar) {
            if m.inertia().unwrap().is_lorentzian() {
                found = true;
                let mz = m.mul_vec(z);
                assert!(crate::exactlin::dot(z, &mz).is_zero(), "Z must be null");
            }
        }
        assert!(found, "a lorentzian invariant metric exists");
        // Both an invariant vector and covector: reported as Other.
        assert!(matches!(sig.class, GeometryClass::Other(_)));
    }

    #[test]
    fn non_effective_pair_detected() {
        // Galilei ⊕ ℝC with C adjoined to h: the center C is an ideal in h.
        let g = crate::catalog::build(KinematicalTag::Galilei, 3).unwrap();
        let n = g.alg.dim();
        let mut f = Tensor3::zeros(n + 1);
        for (a, b, c, v) in g.alg.constants().nonzero_entries() {
            f.set_antisym(a, b, c, v);
        }
        let mut labels = g.alg.labels().to_vec();
        labels.push("C".to_string());
        let ext = LieAlgebra::new(f, labels).unwrap();
        let kb3 = kb(3);
        let mut h_basis = Vec::new();
        for i in 0..kb3.n_rot() {
            h_basis.push(basis_vec(n + 1, i));
        }
        for a in 1..=3 {
            h_basis.push(basis_vec(n + 1, kb3.b(a)));
        }
        h_basis.push(basis_vec(n + 1, n)); // C
        let pair = KleinPair::new(ext, Subspace::new(n + 1, h_basis).unwrap()).unwrap();
        let (eff, ideal) = pair.is_effective();
        assert!(!eff);
        let ideal = ideal.unwrap();
        assert_eq!(ideal.dim(), 1);
        assert!(ideal.contains_vec(&basis_vec(n + 1, n)));
    }

    #[test]
    fn trivial_subalgebra_is_effective() {
        let g = crate::catalog::build(KinematicalTag::Galilei, 3).unwrap();
        let pair = KleinPair::new(g.alg.clone(), Subspace::zero(g.alg.dim())).unwrap();
        assert!(pair.is_effective().0);
    }

    #[test]
    fn torsional_rows_reject_boundary_params() {
        assert!(build_klein(
            KleinTag::TorsionalDeSitterGalilei { gamma: rat(1) },
            3
        )
        .is_err());
        assert!(build_klein(
            KleinTag::TorsionalAntiDeSitterGalilei { chi: rat(0) },
            3
        )
        .is_err());
        assert!(build_klein(
            KleinTag::TorsionalDeSitterGalilei { gamma: ratio(1, 2) },
            3
        )
        .is_ok());
    }
}
