//! Pairings along a representation and the rational part of a trans-module.

use algmod::Module;
use exactla::{difference_witness, Subspace, Violation};
use repcat::{AlgebraRep, CoalgebraRep, Flavor, Rep, RepMorphism, RepObject};

use crate::{rationalize, ActionData, PairedAlgebra, RationalError, RationalPairing};

/// Coalgebras over a poset, algebras over its opposite, and a pairing per point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepPairing {
    crep: CoalgebraRep,
    arep: AlgebraRep,
    pairings: Vec<RationalPairing>,
}

impl RepPairing {
    pub fn new(crep: CoalgebraRep, arep: AlgebraRep, pairings: Vec<RationalPairing>) -> Result<RepPairing, RationalError> {
        let p = RepPairing::unchecked(crep, arep, pairings)?;
        let v = p.check();
        if v.is_empty() {
            Ok(p)
        } else {
            Err(RationalError::Invalid { what: "representation pairing".into(), violations: v })
        }
    }

    pub fn unchecked(crep: CoalgebraRep, arep: AlgebraRep, pairings: Vec<RationalPairing>) -> Result<RepPairing, RationalError> {
        if arep.poset() != &crep.poset().opposite() {
            return Err(RationalError::Mismatch("algebras must live over the opposite poset".into()));
        }
        if pairings.len() != crep.poset().len() {
            return Err(RationalError::Shape("one pairing per poset element".into()));
        }
        for (x, p) in pairings.iter().enumerate() {
            let ok = p.coalgebra() == crep.fiber(x) && matches!(p.algebra(), PairedAlgebra::Finite(a) if a == arep.fiber(x));
            if !ok {
                return Err(RationalError::Mismatch(format!("pairing at {x} is not between the fibers")));
            }
        }
        Ok(RepPairing { crep, arep, pairings })
    }

    /// Evaluation pairings against the dual algebras.
    pub fn evaluation(crep: &CoalgebraRep) -> RepPairing {
        RepPairing {
            crep: crep.clone(),
            arep: AlgebraRep::dual_of(crep),
            pairings: crep.fibers().iter().map(RationalPairing::evaluation).collect(),
        }
    }

    pub fn crep(&self) -> &CoalgebraRep {
        &self.crep
    }

    pub fn arep(&self) -> &AlgebraRep {
        &self.arep
    }

    pub fn pairing(&self, x: usize) -> &RationalPairing {
        &self.pairings[x]
    }

    /// Each pairing, plus `phi_y(C_a(c) (x) a) = phi_x(c (x) A_a(a))` for `x < y`.
    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.crep.check());
        out.extend(self.arep.check());
        for (x, p) in self.pairings.iter().enumerate() {
            for v in p.check() {
                out.push(Violation::new(format!("pairing at {x}: {}", v.law), v.witness));
            }
        }
        for (x, y) in self.crep.poset().pairs() {
            let c_al = self.crep.morphism(x, y).expect("pair");
            let a_al = self.arep.morphism(y, x).expect("opposite pair");
            let lhs = c_al.map.transpose().mul(self.pairings[y].values());
            let rhs = self.pairings[x].values().mul(&a_al.map);
            if let Some(w) = difference_witness(&lhs, &rhs) {
                out.push(Violation::new(format!("pairings incompatible along {x} -> {y}"), w));
            }
        }
        out
    }
}

/// Largest subobject of the trans-module `N` whose fibers lie in the
/// rational parts and whose transitions land in the rational parts.
/// Fibers are right modules, so each is rationalized over `(C^op, A^op)`.
pub fn rationalize_rep(p: &RepPairing, n: &RepObject) -> Result<(RepObject, RepMorphism, Vec<Subspace>), RationalError> {
    if n.flavor() != Flavor::TransModule || n.rep() != &Rep::Algebra(p.arep.clone()) {
        return Err(RationalError::Mismatch("rationalize_rep takes a trans-module over the paired algebras".into()));
    }
    let rat: Vec<Subspace> = (0..n.len())
        .map(|x| {
            let data = ActionData::Module(n.fiber(x).over_opposite());
            Ok(rationalize(&p.pairings[x].opposite()?, &data)?.subspace)
        })
        .collect::<Result<_, RationalError>>()?;
    let mut subs = rat.clone();
    for (s, t) in n.transitions() {
        subs[s] = subs[s].intersection(&rat[t].preimage_under(&n.transition(s, t).expect("pair")))?;
    }
    for (x, s) in subs.iter_mut().enumerate() {
        *s = largest_submodule(n.fiber(x), s)?;
    }
    if !n.is_subobject(&subs) {
        return Err(RationalError::Inconsistent("rational parts are not a subobject".into()));
    }
    let (sub, inc) = n.subobject(&subs)?;
    Ok((sub, inc, subs))
}

fn largest_submodule(m: &Module, s: &Subspace) -> Result<Subspace, RationalError> {
    let mut v = s.clone();
    loop {
        let mut next = v.clone();
        for op in m.ops() {
            next = next.intersection(&v.preimage_under(op))?;
        }
        if next.dim() == v.dim() {
            return Ok(v);
        }
        v = next;
    }
}
