//! Exact computation of the smallest positive Laplace–Beltrami eigenvalue
//! λ₁(G/H, g_st) of standard homogeneous spaces, the Einstein constant 2E,
//! and the resulting conformal ν-stability classification, for the catalog
//! of non-symmetric standard Einstein manifolds with G simple.
//!
//! All arithmetic is exact rational. The pipeline is: Cartan data in
//! Bourbaki ε-coordinates ([`root_system`]), integral weight lattices of the
//! group forms ([`lattice`]), Casimir eigenvalues with complete enumeration
//! below a bound ([`casimir`]), weight systems and branching by character
//! subtraction ([`rep`]), restriction maps and Killing ratios for an
//! embedding 𝔥 ⊂ 𝔤 ([`embedding`]), the Einstein constant ([`einstein`]),
//! the λ₁ search with its fast lower-bound paths ([`spectrum`]), and the
//! catalog/report layer ([`catalog`], [`report`]).

pub mod casimir;
pub mod catalog;
pub mod einstein;
pub mod embedding;
pub mod error;
pub mod expr;
pub mod lattice;
pub mod rat;
pub mod rep;
pub mod report;
pub mod root_system;
pub mod spectrum;
pub mod weight;

pub use error::{Error, Result};
pub use rat::Rat;
pub use weight::Weight;
