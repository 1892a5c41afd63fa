//! Kinematical Lie algebras and their geometries.
//!
//! This crate mechanizes the classification pipeline for non-lorentzian
//! kinematics: exact construction and verification of kinematical Lie
//! algebras and Klein pairs, invariant tensors and invariant connections,
//! Spencer differentials with intrinsic torsion classes, and floating-point
//! realizations of the spacetimes as embedded quadrics and null
//! hypersurfaces.
//!
//! All algebraic modules work over arbitrary-precision rationals and are
//! exact; floating point is confined to [`realizations`].

pub mod catalog;
pub mod connections;
pub mod exactlin;
pub mod klein;
pub mod liealg;
pub mod realizations;
pub mod spencer;
