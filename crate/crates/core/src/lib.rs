//! Exact cochain calculus for Lie superalgebras.
//!
//! Cochains are sign-invariant multilinear maps stored on normal-form
//! tuples. The graded bracket on them encodes Lie superalgebras, actions
//! and crossed homomorphisms as Maurer–Cartan elements, and the induced
//! differentials give their cohomology and deformation theory.

pub mod catalog;
pub mod cochain;
pub mod crossed;
pub mod deformation;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod random;
pub mod sum;
pub mod superalgebra;
pub mod triple;

pub use cochain::{bracket_at, circ, circ_at, nr_bracket, Bidegree, Cochain};
pub use crossed::{
    ch_bracket, ch_bracket_closed_form, ch_cohomology, ch_mc_residual, check_crossed, d_d_matrix, del_pi_rho,
    graph_check, CHMorphism, CrossedHom, Verification,
};
pub use deformation::{
    linear_ch_check, linear_triple_check, ChDeformation, Defect, TripleDeformation, TripleResidual,
};
pub use error::{Error, Result};
pub use graded::{
    koszul_k, koszul_sign, normalize_tuple, shuffles, wedge_basis, GradedSpace, Parity, Permutation, WedgeIndex,
};
pub use random::Sampler;
pub use linalg::{cohomology_dims, format_scalar, parse_scalar, Matrix, Scalar};
pub use sum::{f_membership, Block, BlockShape, DirectSum, Side};
pub use superalgebra::{semidirect, CheckReport, LinearMap, SuperAlgebra, Violation};
pub use triple::{
    check_action, mc_residual, triple_coboundary_matrix, triple_cohomology, triple_cohomology_table, ActionMap,
    ComplexBasis, LieSupActTriple, McResidual, ParityDims, TripleCochain,
};
