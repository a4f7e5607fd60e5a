//! Comodules and contramodules over a coalgebra representation as modules
//! over the dual algebras.
//!
//! `C*` carries the convolution product, so a right comodule or a
//! contramodule is a left `C*`-module, i.e. a right module over `(C*)^op`.
//! The module side therefore uses the opposite dual algebras.

use std::collections::BTreeMap;

use algmod::AlgebraMorphism;
use coalg::Coalgebra;
use repcat::{AlgebraRep, CoalgebraRep, Flavor, Rep, RepMorphism, RepObject};

use crate::RationalError;

/// `x -> (C_x*)^op` over the opposite poset, maps `alpha^T`.
pub fn dual_rep(crep: &CoalgebraRep) -> AlgebraRep {
    let fibers = crep.fibers().iter().map(|c| c.dual_algebra().opposite()).collect();
    let arrows: BTreeMap<(usize, usize), AlgebraMorphism> =
        crep.arrows().iter().map(|(&(a, b), al)| ((b, a), al.dual().opposite())).collect();
    AlgebraRep::unchecked(crep.poset().opposite(), fibers, arrows).expect("dual of a valid representation")
}

fn convert(m: &RepObject, flavor: Flavor, rep: &Rep) -> Result<RepObject, RationalError> {
    let fibers = m.fibers().iter().map(|f| f.over_opposite()).collect();
    Ok(RepObject::new(flavor, rep, fibers, m.structure().clone())?)
}

/// Cis-comodules to trans-modules and trans-comodules to cis-modules over
/// [`dual_rep`].
pub fn comodules_to_modules(m: &RepObject) -> Result<RepObject, RationalError> {
    let Rep::Coalgebra(c) = m.rep() else { return Err(RationalError::Mismatch("not over coalgebras".into())) };
    let target = match m.flavor() {
        Flavor::CisComodule => Flavor::TransModule,
        Flavor::TransComodule => Flavor::CisModule,
        other => return Err(RationalError::Mismatch(format!("{other} objects are not comodules"))),
    };
    convert(m, target, &Rep::Algebra(dual_rep(c)))
}

/// The inverse of [`comodules_to_modules`]; every finite-dimensional
/// module over a dual algebra is rational.
pub fn modules_to_comodules(crep: &CoalgebraRep, m: &RepObject) -> Result<RepObject, RationalError> {
    if m.rep() != &Rep::Algebra(dual_rep(crep)) {
        return Err(RationalError::Mismatch("module is not over the dual algebras".into()));
    }
    let target = match m.flavor() {
        Flavor::TransModule => Flavor::CisComodule,
        Flavor::CisModule => Flavor::TransComodule,
        other => return Err(RationalError::Mismatch(format!("{other} objects do not come from comodules"))),
    };
    let back = convert(m, target, &Rep::Coalgebra(crep.clone()))?;
    // fibers must be the duals of the coalgebras again, not merely isomorphic
    for (x, f) in back.fibers().iter().enumerate() {
        if f.algebra() != &Coalgebra::dual_algebra(crep.fiber(x)) {
            return Err(RationalError::Inconsistent(format!("fiber {x} is not over C*")));
        }
    }
    Ok(back)
}

/// Trans-contramodules to cis-modules over [`dual_rep`].
pub fn contra_to_cis_module(m: &RepObject) -> Result<RepObject, RationalError> {
    let Rep::Coalgebra(c) = m.rep() else { return Err(RationalError::Mismatch("not over coalgebras".into())) };
    if m.flavor() != Flavor::TransContramodule {
        return Err(RationalError::Mismatch(format!("{} objects are not trans-contramodules", m.flavor())));
    }
    convert(m, Flavor::CisModule, &Rep::Algebra(dual_rep(c)))
}

/// The same components between converted source and target.
pub fn transport_morphism(
    eta: &RepMorphism,
    convert: impl Fn(&RepObject) -> Result<RepObject, RationalError>,
) -> Result<RepMorphism, RationalError> {
    Ok(RepMorphism::new(&convert(&eta.source)?, &convert(&eta.target)?, eta.components.clone())?)
}
