//! Exact-arithmetic realization of finite and untwisted affine Weyl
//! groups, the level-0 action of the affine 0-Hecke generators, alcove
//! walks, and the associated Hecke-algebra operator matrices, with
//! machine verification of their structural properties on small ranks.
//!
//! Everything is computed over exact coefficient rings: arbitrary
//! precision rationals, or bivariate Laurent polynomials in `q1, q2`
//! for symbolic identities. Concrete scalar aliases live at the crate
//! root: [`Rat`] for rationals, [`MatrixQ`]/[`MatrixL`] for matrices
//! over the two rings.
//!
//! The modules follow the pipeline:
//! - [`cartan`]: affine Cartan data and classical realizations;
//! - [`weyl`]: the finite Weyl group, fully tabulated;
//! - [`alcove`]: the affine group, walks, crossing signs, heights;
//! - [`level0`]: the level-0 projection action, transitivity, sorting;
//! - [`heckeop`]: operator matrices T_i, T̄_i, Y^λ and relation checks;
//! - [`hga`]: the Hecke group algebra, its bases, surjectivity;
//! - [`calibrated`]: the eigenbasis, idempotents, calibration graph;
//! - [`exactmath`]: the exact scalar rings and linear algebra;
//! - [`export`]: JSON/DOT emitters.

pub mod alcove;
pub mod calibrated;
pub mod cartan;
pub mod exactmath;
pub mod export;
pub mod heckeop;
pub mod hga;
pub mod level0;
pub mod weyl;

pub use cartan::{build_affine_datum, AffineCartanDatum, ClassicalDatum, Family, RootVector};
pub use exactmath::{LaurentQQ, Matrix, Rat};
pub use weyl::{enumerate_group, ElemId, GroupTable};

/// Dense matrix over the exact rationals.
pub type MatrixQ = Matrix<Rat>;

/// Dense matrix over the bivariate Laurent ring in `q1, q2`.
pub type MatrixL = Matrix<LaurentQQ>;
