//! Representations of finite posets in coalgebras and algebras, and the
//! five kinds of objects over them: cis- and trans-comodules,
//! trans-contramodules, cis- and trans-modules.
//!
//! Every fiber is stored as a module over an algebra `B_x` (the dual
//! algebra `C_x*` for comodules and contramodules, `A_x` itself for
//! modules) and every connecting map as a plain linear map between fibers,
//! which makes kernels, cokernels, hom spaces and subobjects uniform across
//! flavors. The other mate of a connecting map is computed when needed,
//! e.g. for cartesianness.

mod adjoint;
mod cartesian;
mod fg;
mod object;
mod poset;
mod rep;
pub mod samples;

pub use adjoint::{
    certify_ev_coe, certify_ex_ev, coe, coe_unit, downstream, ev, ex, ex_counit, generator_witness, lift,
    projective_generator_family, upstream, Coinduced, Induced,
};
pub use cartesian::{cartesian_hull, cartesian_hull_subspaces, hypothesis, is_cartesian, mate, CartesianReport, Hypothesis, Mate};
pub use fg::{certify_fg, functor_f, functor_g, FgCertificate};
pub use object::{coordinates_in, hom_rep, RepMorphism, RepObject};
pub use poset::{FinitePoset, PosetViolation};
pub use rep::{AlgebraRep, Base, CoalgebraRep, Flavor, Kind, Rep};

use algmod::AlgError;
use coalg::CoalgError;
use contra::ContraError;
use exactla::{LinAlgError, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Coalg(#[from] CoalgError),
    #[error(transparent)]
    Contra(#[from] ContraError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("not a poset: {0}")]
    Poset(String),
    #[error("no element {0} in the poset")]
    NotInPoset(String),
    #[error("precondition fails: {0}")]
    Precondition(String),
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
    #[error("invalid {what}: {}", violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid { what: String, violations: Vec<Violation> },
}
