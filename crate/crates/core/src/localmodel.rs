//! Exact split model of the `S_e`-closure `R_e` of `k[t^{1/e}]` over `k[t]`.
//!
//! Coordinates are indexed by the permutations `π` of `S_e`, with
//! `α_i(π) = ζ^{π(i)} u` and `u^e = t`. Elements are stored by homogeneous
//! `u`-degree, which makes every lattice built here graded; lattice bases
//! and discriminants then reduce to linear algebra over `Q(ζ)`.

mod lattice;
mod puiseux;
mod specht_poly;
mod split;

pub use lattice::{
    gram_matrix, gram_valuation, gram_valuation_generic, isotypic_lattice, lattice_pair_invariants,
    monomial_gram_valuation, monomial_lattice, pair_invariants_matrix, LatticeBasis, Side,
};
pub use puiseux::PuiseuxPoly;
pub use specht_poly::{
    check_specht, chw_monomial, column_group, evaluate_specht, higher_specht, row_group, specht_family_report, IntPoly,
    SpechtCheck, SpechtFamilyReport,
};
pub use split::{build_model, build_model_with_bound, Cyclo, LocalModel, SplitElement};

/// Largest `e` built without an explicit override (`e!` coordinates).
pub const MAX_MODEL_E: usize = 5;

/// Environment variable read by the command line to raise [`MAX_MODEL_E`].
pub const E_BOUND_ENV: &str = "SCROLLAR_E_BOUND";
