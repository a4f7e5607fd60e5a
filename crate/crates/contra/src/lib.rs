//! Right contramodules over finite-dimensional coalgebras.
//!
//! A contraction `Hom(C, M) -> M` is stored on `M (x) C*`, which makes a
//! contramodule the same thing as a left module over the dual algebra. On
//! top of that: free contramodules, contrarestriction and its left adjoint
//! contraextension, `Cohom`, and the contratensor product with a bicomodule.

mod contramodule;
mod contratensor;
mod functors;
pub mod samples;

pub use contramodule::{hom_contra, is_contra_map, Contramodule};
pub use contratensor::{
    certify_contratensor_hom, contratensor, contratensor_by_balanced_tensor, contratensor_comparison,
    free_contratensor_comparison, hom_comodule_contra, Bicomodule, Contratensor, HomComparison, HomContra,
};
pub use functors::{
    certify_contraextend_contrarestrict, certify_free_adjunction, cohom_contra, contraextend,
    contraextend_by_cohom, contraextend_by_presentation, contraextend_counit, contraextend_map, contraextend_unit,
    contraextension_is_exact, contrarestrict, free_extension_comparison, free_unit, Contraextension,
};

use algmod::AlgError;
use coalg::CoalgError;
use exactla::{LinAlgError, Mat, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContraError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Coalg(#[from] CoalgError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
    #[error("invalid {what}: {}", violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid { what: String, violations: Vec<Violation> },
}

/// A map of contramodules over the same coalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContraMorphism {
    pub source: Contramodule,
    pub target: Contramodule,
    pub map: Mat,
}

impl ContraMorphism {
    pub fn new(source: &Contramodule, target: &Contramodule, map: Mat) -> Result<ContraMorphism, ContraError> {
        if source.coalgebra() != target.coalgebra() {
            return Err(ContraError::Mismatch("contramodules over different coalgebras".into()));
        }
        if map.shape() != (target.dim(), source.dim()) {
            return Err(ContraError::Shape("morphism has the wrong shape".into()));
        }
        if !is_contra_map(source, target, &map) {
            return Err(ContraError::Invalid {
                what: "contramodule map".into(),
                violations: vec![Violation::new("commutes with contraction", Vec::new())],
            });
        }
        Ok(ContraMorphism { source: source.clone(), target: target.clone(), map })
    }
}
