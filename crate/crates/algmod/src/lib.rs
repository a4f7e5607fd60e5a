//! Finite-dimensional associative algebras and modules over them:
//! change of rings, hom spaces, projectivity, and presented actions.

mod algebra;
mod fp;
mod functors;
mod module;
mod proj;
pub mod samples;

pub use algebra::{Algebra, AlgebraMorphism};
pub use fp::{fp_quotient, fp_submodule_generated, words_up_to, FPAlgebraAction, NcPolynomial, Word};
pub use functors::{
    certify_extend_restrict, certify_restrict_coextend, coextend, coextend_counit, coextend_map, coextend_unit,
    extend, extend_counit, extend_map, extend_unit, restrict, transposition_rank, AdjunctionCertificate,
    Coextension, Extension,
};
pub use module::{balanced_tensor, cokernel_module, hom_modules, is_module_map, kernel_module, Module, Side};
pub use proj::{free_cover, is_injective, is_projective, verify_splitting, Projectivity};

use exactla::{LinAlgError, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("invalid {what}: {}", render(.violations))]
    Invalid { what: String, violations: Vec<Violation> },
    #[error("relation {index} ({relation}) does not hold")]
    RelationFails { index: usize, relation: String },
}

fn render(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
