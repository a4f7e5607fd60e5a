//! Exact linear algebra over GF(p) and Q: dense matrices, subspaces,
//! quotients, and block-structured linear systems.

mod field;
mod mat;
mod subspace;
mod system;

pub use field::{Field, Scalar};
pub use mat::{swap_matrix, tensor_vectors, LinearMap, Mat};
pub use subspace::{
    all_subspaces, all_vectors, coequalizer, compose, direct_sum, dual, equalizer, image, kernel, solve,
    subspace_intersection, subspace_sum, tensor, Quotient, Subspace,
};
pub use system::{intertwiners, LinearSystem, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("map does not descend to the quotient")]
    NotWellDefined,
    #[error("enumeration needs a finite field")]
    InfiniteField,
}

/// A failed law together with a vector exhibiting the failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<Scalar>,
}

impl Violation {
    pub fn new(law: impl Into<String>, witness: Vec<Scalar>) -> Violation {
        Violation { law: law.into(), witness }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|s| s.to_string()).collect();
        write!(f, "{} fails at [{}]", self.law, w.join(", "))
    }
}

/// First column on which two equally shaped maps differ, as a witness vector.
pub fn difference_witness(f: &Mat, g: &Mat) -> Option<Vec<Scalar>> {
    if f.shape() != g.shape() {
        return Some(Vec::new());
    }
    (0..f.cols()).find(|&j| f.column(j) != g.column(j)).map(|j| Mat::unit_vector(f.field(), f.cols(), j))
}
