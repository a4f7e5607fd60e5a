use algmod::{is_injective, is_projective, Module, Projectivity, Side};

use crate::{source_as_left, CoalgebraMorphism};

/// `C` injective as a left `D`-comodule, i.e. `alpha_*` exact.
pub fn is_coflat(alpha: &CoalgebraMorphism) -> bool {
    coflatness(alpha).projective
}

/// The underlying test: injectivity of `C` as a right `D*`-module.
pub fn coflatness(alpha: &CoalgebraMorphism) -> Projectivity {
    is_injective(&source_as_left(alpha).to_module())
}

/// `C*` projective as a right `D*`-module, i.e. `alpha^!` exact; at finite
/// dimension this is the same as every direct sum of copies of `C` being
/// injective over `D`.
pub fn is_sigma_injective(alpha: &CoalgebraMorphism) -> bool {
    sigma_injectivity(alpha).projective
}

pub fn sigma_injectivity(alpha: &CoalgebraMorphism) -> Projectivity {
    let cs = alpha.source.dual_algebra();
    let at = alpha.dual();
    let ops = (0..alpha.target.dim()).map(|g| cs.right_mult_by(&at.map.column(g))).collect();
    let m = Module::unchecked(&at.source, Side::Right, cs.dim(), ops).expect("right multiplication shapes");
    is_projective(&m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiFiniteness {
    pub quasi_finite: bool,
    pub note: &'static str,
}

/// Always true here: every comodule involved is finite-dimensional, so
/// `Hom_D(V, C)` is finite-dimensional for every finite `V`.
pub fn is_quasi_finite(_alpha: &CoalgebraMorphism) -> QuasiFiniteness {
    QuasiFiniteness {
        quasi_finite: true,
        note: "finite-dimensional coalgebras are quasi-finite over any coalgebra they map to",
    }
}
