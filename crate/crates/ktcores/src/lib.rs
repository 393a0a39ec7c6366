//! Exact arithmetic in cores of the polynomial ring k[t].

pub mod corealg;
mod echelon;
pub mod error;
pub mod field;
pub mod ideal;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod reproduce;
pub mod semigroup;
pub mod spectra;

pub use corealg::{CoreAlgebra, CoreOrigin, EchelonBasis};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use ideal::{
    choose_b0, classify_principality, integral_closure_general, integral_closure_one_minus_t,
    monomial_ideal, monomial_ideal_min_gens, mu_of_s, rational_point_ideal, two_generator_ideal,
    ClosureVariant, IdealPresentation, Principality, Provenance,
};
pub use oracle::{
    default_verify_bound, ideal_span, intersection_phi_s_r, mu_at_origin, mu_at_origin_of,
    mu_of_s_oracle, verify_ideal_equality, Refutation, RefutationKind, TruncatedSubspace, Verdict,
};
pub use parse::{parse_poly, parse_scalar};
pub use poly::Poly;
pub use reproduce::{example_ids, run_all, ExampleOutcome};
pub use semigroup::NumericalSemigroup;
pub use spectra::{
    monic_irreducibles, point_to_r, spec_correspondence_check, ClosedPoint, ContractedPoint,
    PointReport, SpecReport,
};
