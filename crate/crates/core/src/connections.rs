//! Invariant connections on reductive Klein pairs: the space of equivariant
//! bilinear maps on the complement, torsion and curvature of the associated
//! connections, the canonical connection, and the holonomy ideal.

use crate::exactlin::{zero_vec, Matrix, Rational, Tensor3, Vector};
use crate::klein::{KleinPair, Reductivity};
use crate::liealg::Subspace;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConnectionError {
    #[error("pair is not reductive: {witness}")]
    NonReductive { witness: String },
    #[error("bilinear coefficients have dimension {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },
}

/// A reductive Klein pair with its splitting data: the chosen complement
/// `m`, the isotropy action restricted to `m`, and the `h`/`m` decomposition
/// of brackets of `m`-basis pairs.
#[derive(Debug, Clone)]
pub struct ReductiveStructure {
    pair: KleinPair,
    m: Subspace,
    /// Isotropy matrices on `m` coordinates, one per basis vector of `h`.
    lam: Vec<Matrix>,
    /// `[m_i, m_j]` in `m` coordinates.
    bracket_m: Vec<Vec<Vector>>,
    /// `[m_i, m_j]` in `h` coordinates.
    bracket_h: Vec<Vec<Vector>>,
}

impl ReductiveStructure {
    pub fn new(pair: KleinPair) -> Result<Self, ConnectionError> {
        let m = match pair.reductive_complement() {
            Reductivity::Reductive { m, .. } => m,
            Reductivity::NonReductive { witness } => {
                return Err(ConnectionError::NonReductive { witness })
            }
        };
        let k = pair.algebra();
        let n = k.dim();
        let h = pair.subalgebra();
        let w = h.dim();
        let q = m.dim();
        // Split x = x_h + x_m by inverting the assembled column matrix.
        let mut cols: Vec<Vector> = h.basis().to_vec();
        cols.extend(m.basis().iter().cloned());
        let split_inv = Matrix::from_cols(cols).inverse().expect("h ⊕ m spans k");
        let h_coords = Matrix::from_fn(w, n, |r, c| split_inv.get(r, c).clone());
        let m_coords = Matrix::from_fn(q, n, |r, c| split_inv.get(w + r, c).clone());

        let lam: Vec<Matrix> = h
            .basis()
            .iter()
            .map(|x| {
                let ad = k.ad(x);
                Matrix::from_fn(q, q, |r, c| {
                    m_coords.mul_vec(&ad.mul_vec(&m.basis()[c]))[r].clone()
                })
            })
            .collect();

        let mut bracket_m = vec![vec![zero_vec(q); q]; q];
        let mut bracket_h = vec![vec![zero_vec(w); q]; q];
        for i in 0..q {
            for j in 0..q {
                let br = k.bracket(&m.basis()[i], &m.basis()[j]).unwrap();
                bracket_m[i][j] = m_coords.mul_vec(&br);
                bracket_h[i][j] = h_coords.mul_vec(&br);
            }
        }
        Ok(ReductiveStructure {
            pair,
            m,
            lam,
            bracket_m,
            bracket_h,
        })
    }

    pub fn pair(&self) -> &KleinPair {
        &self.pair
    }

    pub fn complement(&self) -> &Subspace {
        &self.m
    }

    pub fn m_dim(&self) -> usize {
        self.m.dim()
    }

    /// Isotropy action on `m` coordinates.
    pub fn isotropy_on_m(&self) -> &[Matrix] {
        &self.lam
    }

    /// `[m_i, m_j]` projected to `m`, in `m` coordinates.
    pub fn bracket_m(&self, i: usize, j: usize) -> &Vector {
        &self.bracket_m[i][j]
    }

    /// `[m_i, m_j]` projected to `h`, in `h`-basis coordinates.
    pub fn bracket_h(&self, i: usize, j: usize) -> &Vector {
        &self.bracket_h[i][j]
    }

    /// Basis of the space of `h`-equivariant bilinear maps `m × m → m`,
    /// the parameter space of invariant connections.
    pub fn nomizu_space(&self) -> Vec<NomizuMap> {
        let q = self.m_dim();
        let unknowns = q * q * q;
        let idx = |i: usize, j: usize, c: usize| (i * q + j) * q + c;
        let mut rows = Vec::new();
        for lam in &self.lam {
            for i in 0..q {
                for j in 0..q {
                    for r in 0..q {
                        let mut row = zero_vec(unknowns);
                        // λ(α(Y_i, Y_j))_r
                        for c in 0..q {
                            row[idx(i, j, c)] += lam.get(r, c);
                        }
                        // − α(λY_i, Y_j)_r − α(Y_i, λY_j)_r
                        for l in 0..q {
                            row[idx(l, j, r)] -= lam.get(l, i);
                            row[idx(i, l, r)] -= lam.get(l, j);
                        }
                        if !crate::exactlin::is_zero_vec(&row) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        let basis = if rows.is_empty() {
            (0..unknowns)
                .map(|k| crate::exactlin::basis_vec(unknowns, k))
                .collect()
        } else {
            Matrix::from_rows(rows).kernel()
        };
        basis
            .into_iter()
            .map(|coeffs| NomizuMap { q, coeffs })
            .collect()
    }

    /// The canonical invariant connection: zero bilinear map.
    pub fn canonical_connection(&self) -> NomizuMap {
        NomizuMap {
            q: self.m_dim(),
            coeffs: zero_vec(self.m_dim().pow(3)),
        }
    }

    /// Check `h`-equivariance of a bilinear map (exact).
    pub fn is_equivariant(&self, nm: &NomizuMap) -> bool {
        let q = self.m_dim();
        if nm.q != q {
            return false;
        }
        for lam in &self.lam {
            for i in 0..q {
                for j in 0..q {
                    // λ(α(Y_i,Y_j)) − α(λY_i, Y_j) − α(Y_i, λY_j) = 0
                    let aij: Vector = (0..q).map(|c| nm.get(i, j, c).clone()).collect();
                    let mut lhs = lam.mul_vec(&aij);
                    for l in 0..q {
                        let cli = lam.get(l, i);
                        let clj = lam.get(l, j);
                        for r in 0..q {
                            let v = &lhs[r] - cli * nm.get(l, j, r) - clj * nm.get(i, l, r);
                            lhs[r] = v;
                        }
                    }
                    if !crate::exactlin::is_zero_vec(&lhs) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Torsion `Θ(X,Y) = α(X,Y) − α(Y,X) − [X,Y]_m` of the connection with
    /// bilinear map `nm`.
    pub fn torsion(&self, nm: &NomizuMap) -> Result<Tensor3, ConnectionError> {
        let q = self.m_dim();
        if nm.q != q {
            return Err(ConnectionError::Dimension {
                expected: q,
                got: nm.q,
            });
        }
        let mut theta = Tensor3::zeros(q);
        for i in 0..q {
            for j in i + 1..q {
                for c in 0..q {
                    let v = nm.get(i, j, c) - nm.get(j, i, c) - &self.bracket_m[i][j][c];
                    if !v.is_zero() {
                        theta.set_antisym(i, j, c, v);
                    }
                }
            }
        }
        Ok(theta)
    }

    /// Curvature
    /// `Ω(X,Y)Z = α(X,α(Y,Z)) − α(Y,α(X,Z)) − α([X,Y]_m, Z) − [[X,Y]_h, Z]`.
    pub fn curvature(&self, nm: &NomizuMap) -> Result<CurvatureTensor, ConnectionError> {
        let q = self.m_dim();
        if nm.q != q {
            return Err(ConnectionError::Dimension {
                expected: q,
                got: nm.q,
            });
        }
        let k = self.pair.algebra();
        let h = self.pair.subalgebra();
        let mut cols: Vec<Vector> = h.basis().to_vec();
        cols.extend(self.m.basis().iter().cloned());
        let split_inv = Matrix::from_cols(cols).inverse().unwrap();
        let m_coords = Matrix::from_fn(q, k.dim(), |r, c| {
            split_inv.get(h.dim() + r, c).clone()
        });
        let mut data = vec![Rational::zero(); q * q * q * q];
        let at = |i: usize, j: usize, l: usize, c: usize| ((i * q + j) * q + l) * q + c;
        for i in 0..q {
            for j in 0..q {
                for l in 0..q {
                    let ajl: Vector = (0..q).map(|c| nm.get(j, l, c).clone()).collect();
                    let ail: Vector = (0..q).map(|c| nm.get(i, l, c).clone()).collect();
                    // [[Y_i, Y_j]_h, Y_l] in m coordinates
                    let mut hb = zero_vec(k.dim());
                    for (s, coef) in self.bracket_h[i][j].iter().enumerate() {
                        if !coef.is_zero() {
                            hb = crate::exactlin::add_vec(
                                &hb,
                                &crate::exactlin::scale_vec(&h.basis()[s], coef),
                            );
                        }
                    }
                    let hterm = m_coords.mul_vec(&k.bracket(&hb, &self.m.basis()[l]).unwrap());
                    for c in 0..q {
                        let mut v = -hterm[c].clone();
                        for s in 0..q {
                            v += nm.get(i, s, c) * &ajl[s];
                            v -= nm.get(j, s, c) * &ail[s];
                            v -= &self.bracket_m[i][j][s] * nm.get(s, l, c);
                        }
                        data[at(i, j, l, c)] = v;
                    }
                }
            }
        }
        Ok(CurvatureTensor { q, data })
    }

    /// The span of the `h`-components of brackets of `m` pairs, saturated
    /// under the `h`-action (it is automatically an ideal of `h`; the
    /// saturation is a no-op safeguard). Returned in parent coordinates.
    pub fn holonomy_ideal(&self) -> Subspace {
        let k = self.pair.algebra();
        let h = self.pair.subalgebra();
        let n = k.dim();
        let q = self.m_dim();
        let mut vectors: Vec<Vector> = Vec::new();
        for i in 0..q {
            for j in i + 1..q {
                let mut v = zero_vec(n);
                for (s, coef) in self.bracket_h[i][j].iter().enumerate() {
                    if !coef.is_zero() {
                        v = crate::exactlin::add_vec(
                            &v,
                            &crate::exactlin::scale_vec(&h.basis()[s], coef),
                        );
                    }
                }
                if !crate::exactlin::is_zero_vec(&v) {
                    vectors.push(v);
                }
            }
        }
        let mut span = Subspace::span(n, &vectors);
        loop {
            let mut next = span.basis().to_vec();
            for x in h.basis() {
                for v in span.basis() {
                    next.push(k.bracket(x, v).unwrap());
                }
            }
            let closed = Subspace::span(n, &next);
            if closed.dim() == span.dim() {
                return closed;
            }
            span = closed;
        }
    }
}

/// Bilinear coefficients `α^c_{ab}` on `m` (not necessarily symmetric or
/// antisymmetric), encoding an invariant connection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NomizuMap {
    q: usize,
    /// Row-major `(a, b, c)` coefficients, length `q³`.
    coeffs: Vector,
}

impl NomizuMap {
    pub fn from_coeffs(q: usize, coeffs: Vector) -> Result<Self, ConnectionError> {
        if coeffs.len() != q * q * q {
            return Err(ConnectionError::Dimension {
                expected: q * q * q,
                got: coeffs.len(),
            });
        }
        Ok(NomizuMap { q, coeffs })
    }

    pub fn dim(&self) -> usize {
        self.q
    }

    pub fn coeffs(&self) -> &Vector {
        &self.coeffs
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> &Rational {
        &self.coeffs[(a * self.q + b) * self.q + c]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `α(x, y)` on `m`-coordinate vectors.
    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let q = self.q;
        let mut out = zero_vec(q);
        for a in 0..q {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..q {
                if y[b].is_zero() {
                    continue;
                }
                let xy = &x[a] * &y[b];
                for c in 0..q {
                    let v = self.get(a, b, c);
                    if !v.is_zero() {
                        out[c] += v * &xy;
                    }
                }
            }
        }
        out
    }
}

/// Curvature coefficients `Ω(Y_i, Y_j)Y_l = Σ_c Ω^c_{ijl} Y_c`, antisymmetric
/// in `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureTensor {
    q: usize,
    data: Vector,
}

impl CurvatureTensor {
    pub fn get(&self, i: usize, j: usize, l: usize, c: usize) -> &Rational {
        &self.data[((i * self.q + j) * self.q + l) * self.q + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{basis_vec, is_zero_vec, rat};
    use crate::klein::{build_klein, KleinTag};

    fn structure(tag: KleinTag, d: usize) -> ReductiveStructure {
        ReductiveStructure::new(build_klein(tag, d).unwrap()).unwrap()
    }

    #[test]
    fn lightcone_is_rejected() {
        let p = build_klein(KleinTag::Lightcone, 3).unwrap();
        assert!(matches!(
            ReductiveStructure::new(p),
            Err(ConnectionError::NonReductive { .. })
        ));
    }

    #[test]
    fn nomizu_space_contains_zero_and_is_equivariant() {
        for tag in [KleinTag::Galilei, KleinTag::Carroll, KleinTag::Minkowski] {
            let s = structure(tag.clone(), 3);
            let basis = s.nomizu_space();
            for nm in &basis {
                assert!(s.is_equivariant(nm), "{tag}");
            }
            // The zero map is always equivariant: the canonical connection.
            assert!(s.is_equivariant(&s.canonical_connection()));
        }
    }

    #[test]
    fn nomizu_space_matches_per_generator_intersection() {
        // Same kernel computed two ways: stacked system vs iterative
        // intersection over the generators.
        let s = structure(KleinTag::Galilei, 3);
        let stacked = s.nomizu_space();

        let q = s.m_dim();
        let unknowns = q * q * q;
        let idx = |i: usize, j: usize, c: usize| (i * q + j) * q + c;
        let mut space: Vec<crate::exactlin::Vector> = (0..unknowns)
            .map(|k| basis_vec(unknowns, k))
            .collect();
        for lam in s.isotropy_on_m() {
            let mut rows = Vec::new();
            for i in 0..q {
                for j in 0..q {
                    for r in 0..q {
                        let mut row = zero_vec(unknowns);
                        for c in 0..q {
                            row[idx(i, j, c)] += lam.get(r, c);
                        }
                        for l in 0..q {
                            row[idx(l, j, r)] -= lam.get(l, i);
                            row[idx(i, l, r)] -= lam.get(l, j);
                        }
                        rows.push(row);
                    }
                }
            }
            let a = Matrix::from_rows(rows);
            let cols = Matrix::from_cols(space.clone());
            let restricted = a.mul(&cols);
            let inner = restricted.kernel();
            space = inner.iter().map(|v| cols.mul_vec(v)).collect();
        }
        assert_eq!(space.len(), stacked.len());
        if !space.is_empty() {
            let m1 = Matrix::from_rows(space.clone());
            let rank1 = m1.rank();
            let mut joint = space;
            joint.extend(stacked.iter().map(|nm| nm.coeffs().clone()));
            assert_eq!(Matrix::from_rows(joint).rank(), rank1);
        }
    }

    #[test]
    fn canonical_torsion_vanishes_exactly_on_symmetric_rows() {
        for tag in KleinTag::all_rows() {
            if !tag.expected_reductive() {
                continue;
            }
            let s = structure(tag.clone(), 3);
            let theta = s.torsion(&s.canonical_connection()).unwrap();
            assert_eq!(theta.is_zero(), tag.expected_symmetric(), "{tag}");
        }
    }

    #[test]
    fn torsional_galilei_canonical_torsion() {
        // Canonical connection at γ = 0: Θ(H, P_a) = -P_a, the m-component
        // of -[H, P_a] = -(γB_a + (1+γ)P_a) at γ = 0.
        let s = structure(KleinTag::TorsionalDeSitterGalilei { gamma: rat(0) }, 3);
        let theta = s.torsion(&s.canonical_connection()).unwrap();
        // m coordinates follow the coset order P1, P2, P3, H.
        let h_idx = 3;
        for a in 0..3 {
            for c in 0..4 {
                let expected = if c == a { rat(-1) } else { rat(0) };
                assert_eq!(*theta.get(h_idx, a, c), expected);
            }
        }
    }

    #[test]
    fn canonical_torsion_is_minus_m_bracket() {
        // On every reductive row the canonical torsion equals the negated
        // m-projection of the bracket, entry by entry.
        for tag in KleinTag::all_rows() {
            if !tag.expected_reductive() {
                continue;
            }
            let s = structure(tag.clone(), 3);
            let theta = s.torsion(&s.canonical_connection()).unwrap();
            let q = s.m_dim();
            for i in 0..q {
                for j in 0..q {
                    for c in 0..q {
                        assert_eq!(
                            *theta.get(i, j, c),
                            -s.bracket_m(i, j)[c].clone(),
                            "{tag}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn galilei_canonical_connection_is_flat() {
        let s = structure(KleinTag::Galilei, 3);
        let omega = s.curvature(&s.canonical_connection()).unwrap();
        assert!(omega.is_zero());
    }

    #[test]
    fn sphere_canonical_curvature_is_nonzero() {
        let s = structure(KleinTag::Sphere, 3);
        let omega = s.curvature(&s.canonical_connection()).unwrap();
        assert!(!omega.is_zero());
    }

    #[test]
    fn holonomy_ideals() {
        // Flat rows: all m-brackets vanish, so the ideal is zero.
        let s = structure(KleinTag::Galilei, 3);
        assert_eq!(s.holonomy_ideal().dim(), 0);
        let s = structure(KleinTag::Minkowski, 3);
        assert_eq!(s.holonomy_ideal().dim(), 0);
        // Sphere: [P,P] = -L and [H,P] = -B span all of h.
        let s = structure(KleinTag::Sphere, 3);
        assert_eq!(s.holonomy_ideal().dim(), 6);
        let s = structure(KleinTag::DeSitter, 3);
        assert_eq!(s.holonomy_ideal().dim(), 6);
        // Carroll: [m, m] lands inside m, so the h-part is zero.
        let s = structure(KleinTag::Carroll, 3);
        assert_eq!(s.holonomy_ideal().dim(), 0);
    }

    #[test]
    fn holonomy_ideal_is_an_ideal_of_h() {
        for tag in KleinTag::all_rows() {
            if !tag.expected_reductive() {
                continue;
            }
            let s = structure(tag.clone(), 3);
            let ideal = s.holonomy_ideal();
            let h = s.pair().subalgebra().clone();
            for x in h.basis() {
                for v in ideal.basis() {
                    let br = s.pair().algebra().bracket(x, v).unwrap();
                    assert!(ideal.contains_vec(&br), "{tag}");
                }
            }
        }
    }

    #[test]
    fn invariant_tensors_are_parallel() {
        // Algebraic form of parallelism: the holonomy ideal annihilates every
        // invariant tensor of the isotropy representation.
        for tag in KleinTag::all_rows() {
            if !tag.expected_reductive() {
                continue;
            }
            let pair = build_klein(tag.clone(), 3).unwrap();
            let s = ReductiveStructure::new(pair.clone()).unwrap();
            // Guard: for the table rows the least-pivot complement is the
            // raw coset span, so coset and m coordinates agree.
            let coset_span = crate::liealg::Subspace::new(
                pair.algebra().dim(),
                pair.coset_indices()
                    .iter()
                    .map(|&i| basis_vec(pair.algebra().dim(), i))
                    .collect(),
            )
            .unwrap();
            assert!(s.complement().same_as(&coset_span), "{tag}");
            let sig = pair.invariant_signature();
            let ideal = s.holonomy_ideal();
            let h = pair.subalgebra();
            for v in ideal.basis() {
                let coords = h.coordinates(v).expect("ideal inside h");
                let mut lam = Matrix::zeros(s.m_dim(), s.m_dim());
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        lam = lam.add(&s.isotropy_on_m()[k].scale(c));
                    }
                }
                for t in &sig.inv_v {
                    assert!(is_zero_vec(&lam.mul_vec(t)), "{tag}: vector");
                }
                for t in &sig.inv_vstar {
                    assert!(is_zero_vec(&lam.transpose().mul_vec(t)), "{tag}: covector");
                }
                for t in &sig.inv_sym2vstar {
                    let action = lam.transpose().mul(t).add(&t.mul(&lam));
                    assert!(action.is_zero(), "{tag}: bilinear form");
                }
                for t in &sig.inv_sym2v {
                    let action = lam.mul(t).add(&t.mul(&lam.transpose()));
                    assert!(action.is_zero(), "{tag}: bivector");
                }
            }
        }
    }
}
