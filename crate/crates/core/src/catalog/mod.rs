//! Catalog of kinematical Lie algebras in generic spatial dimension `d ≥ 3`:
//! constructors for every table row (including the generalised Bargmann
//! extensions), contraction limits, membership tests for the equivariant
//! bracket ansatz, and identification of raw structure constants against the
//! catalog.
//!
//! Basis ordering is fixed globally: `L_ab` (a < b, lexicographic), then
//! `B_1..B_d`, `P_1..P_d`, `H`, and `Z` last when present.

mod identify;

pub use identify::{doublet_basis_change, identify, Identification};

use crate::exactlin::{rat, Rational, Tensor3};
use crate::liealg::{JacobiViolation, LieAlgebra};
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("spatial dimension d = {d} is out of scope (generic catalog requires d >= 3)")]
    OutOfScope { d: usize },
    #[error("parameter {param} = {value} outside {range}")]
    ParamOutOfRange {
        param: &'static str,
        value: String,
        range: &'static str,
    },
    #[error("input is not in kinematical form: {reason}")]
    NotKinematical { reason: String },
    #[error("not in catalog: {diagnostics}")]
    NoMatch { diagnostics: String },
    #[error("reserved coefficient sigma must be zero")]
    ReservedCoefficient,
    #[error(transparent)]
    LieAlg(#[from] crate::liealg::LieAlgError),
}

// ---------------------------------------------------------------------------
// Kinematical basis indexing
// ---------------------------------------------------------------------------

/// Index bookkeeping for the kinematical basis
/// `L_ab (a<b), B_1..B_d, P_1..P_d, H [, Z]`. Generator indices `a, b` are
/// 1-based as in the bracket conventions; flat indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KinBasis {
    pub d: usize,
    pub with_z: bool,
}

impl KinBasis {
    pub fn new(d: usize) -> Self {
        KinBasis { d, with_z: false }
    }

    pub fn with_z(d: usize) -> Self {
        KinBasis { d, with_z: true }
    }

    pub fn n_rot(&self) -> usize {
        self.d * (self.d - 1) / 2
    }

    pub fn dim(&self) -> usize {
        self.n_rot() + 2 * self.d + 1 + usize::from(self.with_z)
    }

    /// Flat index of `L_ab`, `1 <= a < b <= d`.
    pub fn l(&self, a: usize, b: usize) -> usize {
        assert!(1 <= a && a < b && b <= self.d);
        // Lexicographic: (1,2),(1,3),..,(1,d),(2,3),..
        (a - 1) * self.d - a * (a - 1) / 2 + (b - a - 1)
    }

    pub fn b(&self, a: usize) -> usize {
        assert!(1 <= a && a <= self.d);
        self.n_rot() + a - 1
    }

    pub fn p(&self, a: usize) -> usize {
        assert!(1 <= a && a <= self.d);
        self.n_rot() + self.d + a - 1
    }

    pub fn h(&self) -> usize {
        self.n_rot() + 2 * self.d
    }

    pub fn z(&self) -> usize {
        assert!(self.with_z);
        self.n_rot() + 2 * self.d + 1
    }

    pub fn is_l(&self, i: usize) -> bool {
        i < self.n_rot()
    }

    pub fn labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.dim());
        for a in 1..=self.d {
            for b in a + 1..=self.d {
                out.push(if self.d < 10 {
                    format!("L{a}{b}")
                } else {
                    format!("L{a}_{b}")
                });
            }
        }
        for a in 1..=self.d {
            out.push(format!("B{a}"));
        }
        for a in 1..=self.d {
            out.push(format!("P{a}"));
        }
        out.push("H".to_string());
        if self.with_z {
            out.push("Z".to_string());
        }
        out
    }

    /// Add `coeff * L_xy` (any orientation, `x != y`) into `f^._{ij}`.
    fn add_l_target(&self, f: &mut Tensor3, i: usize, j: usize, x: usize, y: usize, coeff: &Rational) {
        if x == y || coeff.is_zero() {
            return;
        }
        if x < y {
            f.add_antisym(i, j, self.l(x, y), coeff.clone());
        } else {
            f.add_antisym(i, j, self.l(y, x), -coeff.clone());
        }
    }

    /// Fill the defining kinematical brackets: the `so(d)` block, the vector
    /// action on `B` and `P`, and the scalar action on `H` (and `Z`).
    pub fn fill_generic(&self, f: &mut Tensor3) {
        let one = Rational::one();
        // [L_ab, L_ce] = δ_bc L_ae − δ_ac L_be − δ_be L_ac + δ_ae L_bc
        for a in 1..=self.d {
            for b in a + 1..=self.d {
                let i = self.l(a, b);
                for c in 1..=self.d {
                    for e in c + 1..=self.d {
                        let j = self.l(c, e);
                        if j <= i {
                            continue;
                        }
                        if b == c {
                            self.add_l_target(f, i, j, a, e, &one);
                        }
                        if a == c {
                            self.add_l_target(f, i, j, b, e, &(-one.clone()));
                        }
                        if b == e {
                            self.add_l_target(f, i, j, a, c, &(-one.clone()));
                        }
                        if a == e {
                            self.add_l_target(f, i, j, b, c, &one);
                        }
                    }
                }
            }
        }
        // [L_ab, V_c] = δ_bc V_a − δ_ac V_b for V ∈ {B, P}
        for a in 1..=self.d {
            for b in a + 1..=self.d {
                let i = self.l(a, b);
                f.add_antisym(i, self.b(b), self.b(a), one.clone());
                f.add_antisym(i, self.b(a), self.b(b), -one.clone());
                f.add_antisym(i, self.p(b), self.p(a), one.clone());
                f.add_antisym(i, self.p(a), self.p(b), -one.clone());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The equivariant bracket ansatz
// ---------------------------------------------------------------------------

/// Rotation-equivariant bracket coefficients for generic `d`:
///
/// ```text
/// [H, B_a]   = α B_a + β P_a
/// [H, P_a]   = γ B_a + δ P_a
/// [B_a, B_b] = ε L_ab
/// [B_a, P_b] = μ δ_ab H + ν L_ab
/// [P_a, P_b] = ρ L_ab
/// ```
///
/// `sigma` is reserved (must be zero).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EquivariantBracketCoeffs {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
    pub eps: Rational,
    pub mu: Rational,
    pub nu: Rational,
    pub rho: Rational,
    pub sigma: Rational,
}

impl EquivariantBracketCoeffs {
    pub fn from_i64(
        alpha: i64,
        beta: i64,
        gamma: i64,
        delta: i64,
        eps: i64,
        mu: i64,
        nu: i64,
        rho: i64,
    ) -> Self {
        EquivariantBracketCoeffs {
            alpha: rat(alpha),
            beta: rat(beta),
            gamma: rat(gamma),
            delta: rat(delta),
            eps: rat(eps),
            mu: rat(mu),
            nu: rat(nu),
            rho: rat(rho),
            sigma: rat(0),
        }
    }

    /// Assemble the full bracket tensor: defining brackets plus these
    /// coefficients.
    pub fn assemble(&self, d: usize) -> Result<Tensor3, CatalogError> {
        if d < 3 {
            return Err(CatalogError::OutOfScope { d });
        }
        if !self.sigma.is_zero() {
            return Err(CatalogError::ReservedCoefficient);
        }
        let kb = KinBasis::new(d);
        let mut f = Tensor3::zeros(kb.dim());
        kb.fill_generic(&mut f);
        let h = kb.h();
        for a in 1..=d {
            if !self.alpha.is_zero() {
                f.add_antisym(h, kb.b(a), kb.b(a), self.alpha.clone());
            }
            if !self.beta.is_zero() {
                f.add_antisym(h, kb.b(a), kb.p(a), self.beta.clone());
            }
            if !self.gamma.is_zero() {
                f.add_antisym(h, kb.p(a), kb.b(a), self.gamma.clone());
            }
            if !self.delta.is_zero() {
                f.add_antisym(h, kb.p(a), kb.p(a), self.delta.clone());
            }
            if !self.mu.is_zero() {
                f.add_antisym(kb.b(a), kb.p(a), h, self.mu.clone());
            }
            for b in a + 1..=d {
                let l = kb.l(a, b);
                if !self.eps.is_zero() {
                    f.add_antisym(kb.b(a), kb.b(b), l, self.eps.clone());
                }
                if !self.rho.is_zero() {
                    f.add_antisym(kb.p(a), kb.p(b), l, self.rho.clone());
                }
                if !self.nu.is_zero() {
                    // [B_a, P_b] = ν L_ab for a != b, both orientations.
                    f.add_antisym(kb.b(a), kb.p(b), l, self.nu.clone());
                    f.add_antisym(kb.b(b), kb.p(a), l, -self.nu.clone());
                }
            }
        }
        Ok(f)
    }
}

/// Outcome of testing ansatz coefficients for membership in the variety cut
/// out by the Jacobi identity.
#[derive(Debug)]
pub struct VarietyReport {
    pub is_member: bool,
    pub violations: Vec<JacobiViolation>,
}

/// Assemble the bracket tensor from the coefficients and evaluate the
/// jacobiator on all basis triples.
pub fn jacobi_variety_check(
    coeffs: &EquivariantBracketCoeffs,
    d: usize,
) -> Result<VarietyReport, CatalogError> {
    let f = coeffs.assemble(d)?;
    let kb = KinBasis::new(d);
    let alg = LieAlgebra::new_unchecked(f, kb.labels())?;
    let violations = alg.jacobi_violations(false);
    Ok(VarietyReport {
        is_member: violations.is_empty(),
        violations,
    })
}

// ---------------------------------------------------------------------------
// Table of kinematical Lie algebras
// ---------------------------------------------------------------------------

/// Catalog tags for the kinematical Lie algebras existing in generic
/// dimension, with their orbit-normalized parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KinematicalTag {
    /// `s`: all extra brackets vanish.
    Static,
    /// `g`: `[H,B] = -P`.
    Galilei,
    /// `n0`: `[H,B] = B + P`, `[H,P] = P` (non-semisimple ad_H).
    NZero,
    /// `n+_γ`: `[H,B] = γB`, `[H,P] = P`, real eigenvalues, `γ ∈ [-1,1]`.
    NPlus { gamma: Rational },
    /// `n-_χ`: `[H,B] = χB + P`, `[H,P] = χP - B`, complex eigenvalues, `χ ≥ 0`.
    NMinus { chi: Rational },
    /// `c`: `[B,P] = H`.
    Carroll,
    /// `iso(d,1)` for `eps = +1` (Poincaré), `iso(d+1)` for `eps = -1`
    /// (euclidean): `[H,B] = -εP`, `[B,B] = εL`, `[B,P] = H`.
    Iso { eps: i8 },
    /// `so(d+1,1)`: `[H,B] = B`, `[H,P] = -P`, `[B,P] = H + L`.
    SoLorentzian,
    /// `so(d,2)` for `eps = +1`, `so(d+2)` for `eps = -1`:
    /// `[H,B] = -εP`, `[H,P] = εB`, `[B,B] = εL`, `[B,P] = H`, `[P,P] = εL`.
    So { eps: i8 },
}

impl KinematicalTag {
    /// Canonical row coefficients (single source of truth for build and
    /// identify).
    pub fn canonical_coeffs(&self) -> EquivariantBracketCoeffs {
        use KinematicalTag::*;
        match self {
            Static => EquivariantBracketCoeffs::from_i64(0, 0, 0, 0, 0, 0, 0, 0),
            Galilei => EquivariantBracketCoeffs::from_i64(0, -1, 0, 0, 0, 0, 0, 0),
            NZero => EquivariantBracketCoeffs::from_i64(1, 1, 0, 1, 0, 0, 0, 0),
            NPlus { gamma } => {
                let mut c = EquivariantBracketCoeffs::from_i64(0, 0, 0, 1, 0, 0, 0, 0);
                c.alpha = gamma.clone();
                c
            }
            NMinus { chi } => {
                let mut c = EquivariantBracketCoeffs::from_i64(0, 1, -1, 0, 0, 0, 0, 0);
                c.alpha = chi.clone();
                c.delta = chi.clone();
                c
            }
            Carroll => EquivariantBracketCoeffs::from_i64(0, 0, 0, 0, 0, 1, 0, 0),
            Iso { eps } => {
                let e = *eps as i64;
                EquivariantBracketCoeffs::from_i64(0, -e, 0, 0, e, 1, 0, 0)
            }
            SoLorentzian => EquivariantBracketCoeffs::from_i64(1, 0, 0, -1, 0, 1, 1, 0),
            So { eps } => {
                let e = *eps as i64;
                EquivariantBracketCoeffs::from_i64(0, -e, e, 0, e, 1, 0, e)
            }
        }
    }

    /// Catalog name at spatial dimension `d`.
    pub fn name(&self, d: usize) -> String {
        use KinematicalTag::*;
        match self {
            Static => "s".into(),
            Galilei => "g".into(),
            NZero => "n0".into(),
            NPlus { gamma } => format!("n+[gamma={}]", crate::exactlin::rat_to_string(gamma)),
            NMinus { chi } => format!("n-[chi={}]", crate::exactlin::rat_to_string(chi)),
            Carroll => "c".into(),
            Iso { eps: 1 } => format!("iso({d},1)"),
            Iso { .. } => format!("iso({})", d + 1),
            SoLorentzian => format!("so({},1)", d + 1),
            So { eps: 1 } => format!("so({d},2)"),
            So { .. } => format!("so({})", d + 2),
        }
    }

    fn validate(&self) -> Result<(), CatalogError> {
        match self {
            KinematicalTag::NPlus { gamma } => {
                if gamma < &rat(-1) || gamma > &rat(1) {
                    return Err(CatalogError::ParamOutOfRange {
                        param: "gamma",
                        value: crate::exactlin::rat_to_string(gamma),
                        range: "[-1, 1]",
                    });
                }
            }
            KinematicalTag::NMinus { chi } => {
                if chi.is_negative() {
                    return Err(CatalogError::ParamOutOfRange {
                        param: "chi",
                        value: crate::exactlin::rat_to_string(chi),
                        range: "[0, oo)",
                    });
                }
            }
            KinematicalTag::Iso { eps } | KinematicalTag::So { eps } => {
                if *eps != 1 && *eps != -1 {
                    return Err(CatalogError::ParamOutOfRange {
                        param: "eps",
                        value: eps.to_string(),
                        range: "{-1, +1}",
                    });
                }
            }
            _ => {}
        }
        Ok(())
    }
}

impl fmt::Display for KinematicalTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use KinematicalTag::*;
        match self {
            Static => write!(f, "s"),
            Galilei => write!(f, "g"),
            NZero => write!(f, "n0"),
            NPlus { gamma } => write!(f, "n+[gamma={}]", crate::exactlin::rat_to_string(gamma)),
            NMinus { chi } => write!(f, "n-[chi={}]", crate::exactlin::rat_to_string(chi)),
            Carroll => write!(f, "c"),
            Iso { eps: 1 } => write!(f, "iso(d,1)"),
            Iso { .. } => write!(f, "iso(d+1)"),
            SoLorentzian => write!(f, "so(d+1,1)"),
            So { eps: 1 } => write!(f, "so(d,2)"),
            So { .. } => write!(f, "so(d+2)"),
        }
    }
}

/// A catalog kinematical Lie algebra: structure constants in the fixed
/// kinematical basis together with its tag.
#[derive(Debug, Clone)]
pub struct KinematicalAlgebra {
    pub d: usize,
    pub tag: KinematicalTag,
    pub alg: LieAlgebra,
}

impl KinematicalAlgebra {
    pub fn basis(&self) -> KinBasis {
        KinBasis::new(self.d)
    }
}

/// Build a catalog algebra. The constants match the table row exactly and
/// the Jacobi identity is verified at construction.
pub fn build(tag: KinematicalTag, d: usize) -> Result<KinematicalAlgebra, CatalogError> {
    if d < 3 {
        return Err(CatalogError::OutOfScope { d });
    }
    tag.validate()?;
    let kb = KinBasis::new(d);
    let f = tag.canonical_coeffs().assemble(d)?;
    let alg = LieAlgebra::new(f, kb.labels())?;
    Ok(KinematicalAlgebra { d, tag, alg })
}

// ---------------------------------------------------------------------------
// Generalised Bargmann algebras
// ---------------------------------------------------------------------------

/// Tags for the generalised Bargmann algebras: one-dimensional extensions
/// with `[B_a, P_b] = δ_ab Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BargmannTag {
    /// Central extension of `g`: `[B,H] = P`.
    GHat,
    /// Central extension of `n+_{γ=-1}`: `[B,H] = P`, `[H,P] = -B`.
    NPlusHat,
    /// Central extension of `n-_{χ=0}`: `[B,H] = P`, `[H,P] = B`.
    NMinusHat,
    /// Non-central extension of `n+_γ`, `γ ∈ (-1,1)`:
    /// `[B,H] = P`, `[H,P] = γB + (1+γ)P`, `[H,Z] = (1+γ)Z`.
    BPlus { gamma: Rational },
    /// Non-central extension of `n0`: `[B,H] = P`, `[H,P] = B + 2P`,
    /// `[H,Z] = 2Z`. Same brackets as the `γ = 1` endpoint of `b+`, tagged
    /// separately because it extends `n0`.
    BZero,
    /// Non-central extension of `n-_χ`, `χ > 0`:
    /// `[B,H] = P`, `[H,P] = (1+χ²)B + 2χP`, `[H,Z] = 2χZ`.
    BMinus { chi: Rational },
}

impl BargmannTag {
    pub fn name(&self) -> String {
        match self {
            BargmannTag::GHat => "g^".into(),
            BargmannTag::NPlusHat => "n+^".into(),
            BargmannTag::NMinusHat => "n-^".into(),
            BargmannTag::BPlus { gamma } => {
                format!("b+[gamma={}]", crate::exactlin::rat_to_string(gamma))
            }
            BargmannTag::BZero => "b0".into(),
            BargmannTag::BMinus { chi } => {
                format!("b-[chi={}]", crate::exactlin::rat_to_string(chi))
            }
        }
    }

    /// `([H,P] B-part, [H,P] P-part, [H,Z] coefficient)`.
    fn hp_hz(&self) -> Result<(Rational, Rational, Rational), CatalogError> {
        match self {
            BargmannTag::GHat => Ok((rat(0), rat(0), rat(0))),
            BargmannTag::NPlusHat => Ok((rat(-1), rat(0), rat(0))),
            BargmannTag::NMinusHat => Ok((rat(1), rat(0), rat(0))),
            BargmannTag::BPlus { gamma } => {
                if gamma <= &rat(-1) || gamma >= &rat(1) {
                    return Err(CatalogError::ParamOutOfRange {
                        param: "gamma",
                        value: crate::exactlin::rat_to_string(gamma),
                        range: "(-1, 1)",
                    });
                }
                Ok((gamma.clone(), rat(1) + gamma, (rat(1) + gamma)))
            }
            BargmannTag::BZero => Ok((rat(1), rat(2), rat(2))),
            BargmannTag::BMinus { chi } => {
                if !chi.is_positive() {
                    return Err(CatalogError::ParamOutOfRange {
                        param: "chi",
                        value: crate::exactlin::rat_to_string(chi),
                        range: "(0, oo)",
                    });
                }
                Ok((rat(1) + chi * chi, rat(2) * chi, rat(2) * chi))
            }
        }
    }

    /// Tag of the kinematical quotient by the `Z` ideal.
    pub fn quotient_tag(&self) -> KinematicalTag {
        match self {
            BargmannTag::GHat => KinematicalTag::Galilei,
            BargmannTag::NPlusHat => KinematicalTag::NPlus { gamma: rat(-1) },
            BargmannTag::NMinusHat => KinematicalTag::NMinus { chi: rat(0) },
            BargmannTag::BPlus { gamma } => KinematicalTag::NPlus {
                gamma: gamma.clone(),
            },
            BargmannTag::BZero => KinematicalTag::NZero,
            BargmannTag::BMinus { chi } => KinematicalTag::NMinus { chi: chi.clone() },
        }
    }
}

/// A generalised Bargmann algebra in the basis `L, B, P, H, Z`.
#[derive(Debug, Clone)]
pub struct BargmannAlgebra {
    pub d: usize,
    pub tag: BargmannTag,
    pub alg: LieAlgebra,
}

impl BargmannAlgebra {
    pub fn basis(&self) -> KinBasis {
        KinBasis::with_z(self.d)
    }
}

/// Build a generalised Bargmann algebra from its table row.
pub fn build_bargmann(tag: BargmannTag, d: usize) -> Result<BargmannAlgebra, CatalogError> {
    if d < 3 {
        return Err(CatalogError::OutOfScope { d });
    }
    let (hp_b, hp_p, hz) = tag.hp_hz()?;
    let kb = KinBasis::with_z(d);
    let mut f = Tensor3::zeros(kb.dim());
    kb.fill_generic(&mut f);
    let h = kb.h();
    let z = kb.z();
    for a in 1..=d {
        // Shared extension bracket [B_a, P_b] = δ_ab Z and [B,H] = P.
        f.add_antisym(kb.b(a), kb.p(a), z, Rational::one());
        f.add_antisym(kb.b(a), h, kb.p(a), Rational::one());
        if !hp_b.is_zero() {
            f.add_antisym(h, kb.p(a), kb.b(a), hp_b.clone());
        }
        if !hp_p.is_zero() {
            f.add_antisym(h, kb.p(a), kb.p(a), hp_p.clone());
        }
    }
    if !hz.is_zero() {
        f.add_antisym(h, z, z, hz.clone());
    }
    let alg = LieAlgebra::new(f, kb.labels())?;
    Ok(BargmannAlgebra { d, tag, alg })
}

// ---------------------------------------------------------------------------
// Contraction limits
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractionMode {
    /// Boost rescaling `B -> c^{-2} B` of the Poincaré brackets, then
    /// `t = c^{-2} -> 0`; lands on the Galilei algebra.
    GalileanLimit,
    /// Speed-of-light limit `t = c^2 -> 0` of the Poincaré brackets; lands on
    /// the Carroll algebra.
    CarrollLimit,
}

/// A contraction limit together with its witness family: structure constants
/// linear in the contraction parameter `t`, equal to the Poincaré (`c = 1`)
/// constants at `t = 1` and to the limit algebra at `t = 0`.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub mode: ContractionMode,
    pub d: usize,
    pub limit: KinematicalAlgebra,
    base: EquivariantBracketCoeffs,
    delta: EquivariantBracketCoeffs,
}

impl Contraction {
    /// Structure constants of the witness family at parameter `t`. The family
    /// satisfies the Jacobi identity for every `t`.
    pub fn witness_at(&self, t: &Rational) -> Result<LieAlgebra, CatalogError> {
        let mut c = self.base.clone();
        c.alpha = &c.alpha + t * &self.delta.alpha;
        c.beta = &c.beta + t * &self.delta.beta;
        c.gamma = &c.gamma + t * &self.delta.gamma;
        c.delta = &c.delta + t * &self.delta.delta;
        c.eps = &c.eps + t * &self.delta.eps;
        c.mu = &c.mu + t * &self.delta.mu;
        c.nu = &c.nu + t * &self.delta.nu;
        c.rho = &c.rho + t * &self.delta.rho;
        let f = c.assemble(self.d)?;
        Ok(LieAlgebra::new(f, KinBasis::new(self.d).labels())?)
    }
}

/// Realize a contraction limit of the Poincaré algebra at spatial dimension
/// `d`. The returned algebra equals the corresponding catalog row entrywise.
pub fn contract(mode: ContractionMode, d: usize) -> Result<Contraction, CatalogError> {
    let (limit_tag, base, delta) = match mode {
        ContractionMode::GalileanLimit => (
            KinematicalTag::Galilei,
            // [B,H] = P fixed; [B,B] = tL and [B,P] = tδH scale away.
            EquivariantBracketCoeffs::from_i64(0, -1, 0, 0, 0, 0, 0, 0),
            EquivariantBracketCoeffs::from_i64(0, 0, 0, 0, 1, 1, 0, 0),
        ),
        ContractionMode::CarrollLimit => (
            KinematicalTag::Carroll,
            // [B,P] = δH fixed; [B,B] = tL and [B,H] = tP scale away.
            EquivariantBracketCoeffs::from_i64(0, 0, 0, 0, 0, 1, 0, 0),
            EquivariantBracketCoeffs::from_i64(0, -1, 0, 0, 1, 0, 0, 0),
        ),
    };
    let limit = build(limit_tag, d)?;
    Ok(Contraction {
        mode,
        d,
        limit,
        base,
        delta,
    })
}

/// Invariant fingerprint used as a cheap isomorphism obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub derived_dim: usize,
    pub center_dim: usize,
    pub killing_rank: usize,
}

pub fn fingerprint(alg: &LieAlgebra) -> Fingerprint {
    Fingerprint {
        derived_dim: alg.derived_subalgebra().dim(),
        center_dim: alg.center().dim(),
        killing_rank: alg.killing_rank(),
    }
}
