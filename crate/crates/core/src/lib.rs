//! Exact Borel–Weil–Bott cohomology on flag varieties of types A and D, and
//! verification of tilting bundles on Severi–Brauer varieties, generalized
//! Severi–Brauer varieties and involution varieties through their split
//! forms.
//!
//! All arithmetic is exact; dimensions are arbitrary-precision integers.

pub mod acceptance;
pub mod bott;
pub mod bundles;
pub mod csa;
pub mod endo;
mod error;
pub mod ktheory;
pub mod oracle;
pub mod report;
pub mod rootdata;
pub mod tilting;
mod util;

pub use bott::{bott_classify, bott_typea_epsilon, epsilon_to_fundamental, CohomologyResult};
pub use bundles::{ext_dims, EquivariantBundle, GLWeight, GradedDims};
pub use csa::{CsaKind, CsaLabel};
pub use endo::{endo_structure, euler_matrix, gldim_bound, EndoStructure, TriangularDirection};
pub use error::{Error, Result};
pub use ktheory::{k0_decomposition, KDecomposition};
pub use rootdata::{Parabolic, RootDatum, RootFamily, Weight};
pub use tilting::{build_gsb, build_inv, build_sb, verify, ExtReport, TiltingCollection, Verdict};
pub use util::binomial;
