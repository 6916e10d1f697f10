//! Calibrated representations of the degenerate affine periplectic Brauer
//! algebra on two strands.
//!
//! The algebra is generated by `s`, `y1`, `y2` and `e`. Representations are
//! built from a seed `(S, (a, b))`: a `k x l` matrix and a vector of `k + l`
//! eigenvalues. Everything is computed exactly over `Q(i)`.
//!
//! - [`exact_linalg`]: scalars, matrices, kernels and commutants.
//! - [`algebra`]: representations and the defining relations.
//! - [`rep_builder`]: one-dimensional modules, Hecke modules and seeded deformations.
//! - [`rhizome`]: zero-pattern analysis of seed matrices.
//! - [`classify`]: indecomposability, endomorphisms, orbits and canonical forms.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod exact_linalg;
pub mod fuzz;
pub mod random;
pub mod rep_builder;
pub mod rhizome;

pub use algebra::{e_is_zero, e_sandwich_check, verify_hdeg, verify_sv2, Poly, RelationReport, Rep, Violation};
pub use classify::{
    canonical_form, e_nonzero_guarantee, endo_report, group_act, indecomposable, is_regular, isomorphic,
    split_t, split_weight_blocks, CanonicalForm, EndoReport, IsoOutcome, MonomialPair, Splitting, Verdict,
    VerdictKind, WeightBlockPartition, WeightSplit,
};
pub use error::{Error, Result};
pub use exact_linalg::{GaussRat, Mat};
pub use rep_builder::{build_hecke_w, build_one_dim, build_v, extension_profile, ExtensionProfile, Seed, Sign};
pub use rhizome::{analyze, bipartite_components, scaling_normalize, RhizomeReport, ScalingNormalization};
