//! Finite-dimensional coalgebras and comodules: axioms, the dual algebra
//! bridge, cotensor products, corestriction, coinduction and cohom, and the
//! coflatness tests built on them.

mod coalgebra;
mod comodule;
mod functors;
mod predicates;
pub mod samples;

pub use coalgebra::{Coalgebra, CoalgebraMorphism};
pub use comodule::{
    generated_subcomodule, hom_comodules, hom_left_comodules, is_comodule_map, LeftComodule, RightComodule,
};
pub use functors::{
    certify_cohom_corestrict, certify_corestrict_coinduce, coinduce, coinduce_counit, coinduce_dual_hom,
    coinduce_map, coinduce_unit, coinductions_agree, cohom, cohom_counit, cohom_map, cohom_unit, corestrict,
    cotensor, cotensor_unit_map, source_as_left, source_as_right, Cohom, Coinduction,
};
pub use predicates::{
    coflatness, is_coflat, is_quasi_finite, is_sigma_injective, sigma_injectivity, QuasiFiniteness,
};

use algmod::AlgError;
use exactla::{LinAlgError, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoalgError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("invalid {what}: {}", violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid { what: String, violations: Vec<Violation> },
}
