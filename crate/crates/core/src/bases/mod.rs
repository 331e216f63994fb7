//! Matrix-level computations on one weight space at a time: the expansions of
//! monomials in tableau vectors, the dual standard monomial basis and its
//! independence of the shape, the Kashiwara monomial coordinates and the
//! canonical basis.

mod canonical;
mod dual;
mod expansions;
mod matrix;
mod space;

pub use canonical::{
    canonical_basis, canonical_data, canonical_data_in, certify, crystal_congruence_check,
    domain_summary, kashiwara_monomial_matrix, kashiwara_monomial_matrix_in, solve_canonical,
    theorem52_matrix, verify_shape_expansions, CanonicalData,
};
pub use dual::{dual_smt, dual_smt_in, stability_check, DualSmtBasis};
pub use expansions::{kashiwara_tableau_matrix, smt_matrix, verify_expansion};
pub use matrix::{BasisMatrix, Label, MatrixJson};
pub use space::WeightSpace;
