//! Rational pairings between coalgebras and algebras, the rational part of
//! a module, the comodule/module and contramodule/module bridges over
//! representations, finite duals, and base-change isomorphisms for
//! contratensor products.

mod base_change;
mod bridge;
mod dual;
mod pairing;
mod rationalize;
mod reps;
pub mod samples;

pub use base_change::{base_change_certificates, BaseChangeReport, Comparison};
pub use bridge::{comodules_to_modules, contra_to_cis_module, dual_rep, modules_to_comodules, transport_morphism};
pub use dual::{finite_dual, finite_dual_of};
pub use pairing::{PairedAlgebra, RationalPairing};
pub use rationalize::{action_pairs, is_rational, rationalize, torsion_witness, ActionData, Rationalization, TorsionWitness};
pub use reps::{rationalize_rep, RepPairing};

use algmod::AlgError;
use coalg::CoalgError;
use contra::ContraError;
use exactla::{LinAlgError, Violation};
use repcat::RepError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalError {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Coalg(#[from] CoalgError),
    #[error(transparent)]
    Contra(#[from] ContraError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
    #[error("invalid {what}: {}", violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid { what: String, violations: Vec<Violation> },
}
