//! Objects over a representation, their morphisms, and fiberwise
//! constructions.

use std::collections::BTreeMap;
use std::sync::Arc;

use algmod::Module;
use coalg::RightComodule;
use contra::Contramodule;
use exactla::{difference_witness, Field, LinearSystem, Mat, Quotient, Scalar, Subspace, Term, Violation};

use crate::{Base, Flavor, Kind, Rep, RepError};

/// An object of one of the five flavors. Fiber `x` is a module over
/// `B_x` (see [`Base`]); `structure[(s, t)]` is the transition `M_s -> M_t`
/// for every transition pair of the flavor, in restriction form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepObject {
    flavor: Flavor,
    rep: Arc<Rep>,
    base: Arc<Base>,
    fibers: Vec<Module>,
    structure: BTreeMap<(usize, usize), Mat>,
}

impl RepObject {
    pub fn new(
        flavor: Flavor,
        rep: &Rep,
        fibers: Vec<Module>,
        structure: BTreeMap<(usize, usize), Mat>,
    ) -> Result<RepObject, RepError> {
        let o = RepObject::unchecked(flavor, rep, fibers, structure)?;
        let v = o.check();
        if v.is_empty() {
            Ok(o)
        } else {
            Err(RepError::Invalid { what: flavor.name().into(), violations: v })
        }
    }

    pub fn unchecked(
        flavor: Flavor,
        rep: &Rep,
        fibers: Vec<Module>,
        structure: BTreeMap<(usize, usize), Mat>,
    ) -> Result<RepObject, RepError> {
        let base = rep.base();
        RepObject::assemble(flavor, Arc::new(rep.clone()), Arc::new(base), fibers, structure)
    }

    pub(crate) fn assemble(
        flavor: Flavor,
        rep: Arc<Rep>,
        base: Arc<Base>,
        fibers: Vec<Module>,
        structure: BTreeMap<(usize, usize), Mat>,
    ) -> Result<RepObject, RepError> {
        if flavor.over_coalgebras() != matches!(*rep, Rep::Coalgebra(_)) {
            return Err(RepError::Mismatch(format!("{flavor} over the wrong kind of representation")));
        }
        let poset = rep.poset();
        if fibers.len() != poset.len() {
            return Err(RepError::Shape("one fiber per poset element".into()));
        }
        for (x, m) in fibers.iter().enumerate() {
            if m.algebra() != base.algebra(x) || m.side() != flavor.side() {
                return Err(RepError::Mismatch(format!("fiber at {x} is not a module over the right algebra")));
            }
        }
        for (s, t) in flavor.transitions(poset) {
            let tr = structure
                .get(&(s, t))
                .ok_or_else(|| RepError::Shape(format!("missing transition {s} -> {t}")))?;
            if tr.shape() != (fibers[t].dim(), fibers[s].dim()) {
                return Err(RepError::Shape(format!("transition {s} -> {t} has the wrong shape")));
            }
        }
        if structure.len() != poset.pairs().len() {
            return Err(RepError::Shape("transitions given for pairs outside the flavor's orientation".into()));
        }
        Ok(RepObject { flavor, rep, base, fibers, structure })
    }

    /// Fibers given as right comodules (cis- or trans-comodules).
    pub fn from_comodules(
        flavor: Flavor,
        rep: &Rep,
        fibers: &[RightComodule],
        structure: BTreeMap<(usize, usize), Mat>,
    ) -> Result<RepObject, RepError> {
        if !matches!(flavor, Flavor::CisComodule | Flavor::TransComodule) {
            return Err(RepError::Mismatch(format!("{flavor} fibers are not comodules")));
        }
        RepObject::new(flavor, rep, fibers.iter().map(RightComodule::to_module).collect(), structure)
    }

    pub fn from_contramodules(
        rep: &Rep,
        fibers: &[Contramodule],
        structure: BTreeMap<(usize, usize), Mat>,
    ) -> Result<RepObject, RepError> {
        let fibers = fibers.iter().map(Contramodule::to_module).collect();
        RepObject::new(Flavor::TransContramodule, rep, fibers, structure)
    }

    pub fn zero(flavor: Flavor, rep: &Rep) -> Result<RepObject, RepError> {
        let base = rep.base();
        let fibers: Vec<Module> = base.algebras.iter().map(|a| Module::zero(a, flavor.side())).collect();
        let f = rep.field();
        let structure = flavor.transitions(rep.poset()).into_iter().map(|p| (p, Mat::zeros(f, 0, 0))).collect();
        RepObject::assemble(flavor, Arc::new(rep.clone()), Arc::new(base), fibers, structure)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn field(&self) -> &Field {
        self.rep.field()
    }

    pub fn len(&self) -> usize {
        self.fibers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fibers.is_empty()
    }

    pub fn fiber(&self, x: usize) -> &Module {
        &self.fibers[x]
    }

    pub fn fibers(&self) -> &[Module] {
        &self.fibers
    }

    pub fn dims(&self) -> Vec<usize> {
        self.fibers.iter().map(Module::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.fibers.iter().map(Module::dim).sum()
    }

    pub fn structure(&self) -> &BTreeMap<(usize, usize), Mat> {
        &self.structure
    }

    /// Transition pairs `(s, t)` in a fixed order.
    pub fn transitions(&self) -> Vec<(usize, usize)> {
        self.flavor.transitions(self.rep.poset())
    }

    /// The transition `M_s -> M_t`; the identity when `s == t`.
    pub fn transition(&self, s: usize, t: usize) -> Option<Mat> {
        if s == t {
            return Some(Mat::identity(self.field(), self.fibers[s].dim()));
        }
        self.structure.get(&(s, t)).cloned()
    }

    /// Fiber `x` as a right comodule over `C_x`.
    pub fn comodule_at(&self, x: usize) -> Result<RightComodule, RepError> {
        match (&*self.rep, self.flavor) {
            (Rep::Coalgebra(c), Flavor::CisComodule | Flavor::TransComodule) => {
                Ok(RightComodule::from_module(c.fiber(x), &self.fibers[x]))
            }
            _ => Err(RepError::Mismatch(format!("{} fibers are not comodules", self.flavor))),
        }
    }

    pub fn contramodule_at(&self, x: usize) -> Result<Contramodule, RepError> {
        match (&*self.rep, self.flavor) {
            (Rep::Coalgebra(c), Flavor::TransContramodule) => Ok(Contramodule::from_module(c.fiber(x), &self.fibers[x])?),
            _ => Err(RepError::Mismatch(format!("{} fibers are not contramodules", self.flavor))),
        }
    }

    /// Pairs `(op on M_s, op on M_t)` that every transition must intertwine.
    pub(crate) fn intertwining_pairs(&self, s: usize, t: usize) -> Vec<(Mat, Mat)> {
        pairs_for(self.flavor, &self.base, &self.fibers[s], &self.fibers[t], s, t)
    }

    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (x, m) in self.fibers.iter().enumerate() {
            for v in m.check() {
                out.push(Violation::new(format!("fiber {x}: {}", v.law), v.witness));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (s, t) in self.transitions() {
            let tr = &self.structure[&(s, t)];
            for (k, (src, tgt)) in self.intertwining_pairs(s, t).into_iter().enumerate() {
                if let Some(w) = difference_witness(&tr.mul(&src), &tgt.mul(tr)) {
                    out.push(Violation::new(format!("transition {s} -> {t} is not linear over basis element {k}"), w));
                    break;
                }
            }
        }
        let poset = self.rep.poset();
        for (a, b, c) in poset.triples() {
            let (s, m, t) = if self.flavor.is_cis() { (a, b, c) } else { (c, b, a) };
            let comp = self.structure[&(m, t)].mul(&self.structure[&(s, m)]);
            if let Some(w) = difference_witness(&comp, &self.structure[&(s, t)]) {
                out.push(Violation::new(format!("cocycle along {s} -> {m} -> {t}"), w));
            }
        }
        out
    }

    pub fn direct_sum(&self, other: &RepObject) -> Result<RepObject, RepError> {
        self.same_category(other)?;
        let fibers = self.fibers.iter().zip(&other.fibers).map(|(a, b)| a.direct_sum(b)).collect::<Result<_, _>>()?;
        let structure = self.structure.iter().map(|(k, t)| (*k, t.block_diag(&other.structure[k]))).collect();
        RepObject::assemble(self.flavor, self.rep.clone(), self.base.clone(), fibers, structure)
    }

    pub(crate) fn same_category(&self, other: &RepObject) -> Result<(), RepError> {
        if self.flavor != other.flavor {
            return Err(RepError::Mismatch("objects of different flavors".into()));
        }
        if self.rep != other.rep {
            return Err(RepError::Mismatch("objects over different representations".into()));
        }
        Ok(())
    }

    /// Family of fiber subspaces stable under the actions and transitions.
    pub fn is_subobject(&self, subs: &[Subspace]) -> bool {
        subs.len() == self.len()
            && subs.iter().zip(&self.fibers).all(|(s, m)| s.ambient() == m.dim() && m.is_submodule(s))
            && self.transitions().iter().all(|&(s, t)| subs[t].contains_subspace(&subs[s].image_under(&self.structure[&(s, t)])))
    }

    /// The subobject on `subs`, in the subspaces' bases, with its inclusion.
    pub fn subobject(&self, subs: &[Subspace]) -> Result<(RepObject, RepMorphism), RepError> {
        if !self.is_subobject(subs) {
            return Err(RepError::Precondition("subspaces do not form a subobject".into()));
        }
        let mut fibers = Vec::with_capacity(self.len());
        let mut incs = Vec::with_capacity(self.len());
        for (m, s) in self.fibers.iter().zip(subs) {
            let (sub, inc) = m.submodule(s)?;
            fibers.push(sub);
            incs.push(inc);
        }
        let structure = self
            .transitions()
            .into_iter()
            .map(|(s, t)| {
                let img = self.structure[&(s, t)].mul(&incs[s]);
                ((s, t), incs[t].solve_mat(&img).expect("stable subspace"))
            })
            .collect();
        let sub = RepObject::assemble(self.flavor, self.rep.clone(), self.base.clone(), fibers, structure)?;
        let inc = RepMorphism { source: sub.clone(), target: self.clone(), components: incs };
        Ok((sub, inc))
    }

    /// The quotient by a subobject, with the projection.
    pub fn quotient(&self, subs: &[Subspace]) -> Result<(RepObject, RepMorphism, Vec<Quotient>), RepError> {
        if !self.is_subobject(subs) {
            return Err(RepError::Precondition("subspaces do not form a subobject".into()));
        }
        let mut fibers = Vec::with_capacity(self.len());
        let mut qs = Vec::with_capacity(self.len());
        for (m, s) in self.fibers.iter().zip(subs) {
            let (q, carrier) = m.quotient(s)?;
            fibers.push(q);
            qs.push(carrier);
        }
        let structure = self
            .transitions()
            .into_iter()
            .map(|(s, t)| ((s, t), qs[t].projection.mul(&self.structure[&(s, t)]).mul(&qs[s].section)))
            .collect();
        let quo = RepObject::assemble(self.flavor, self.rep.clone(), self.base.clone(), fibers, structure)?;
        let proj = RepMorphism { source: self.clone(), target: quo.clone(), components: qs.iter().map(|q| q.projection.clone()).collect() };
        Ok((quo, proj, qs))
    }

    /// Fiberwise subspaces of the smallest subobject containing `vectors`
    /// in fiber `x`.
    pub fn generated_subspaces(&self, x: usize, vectors: &[Vec<Scalar>]) -> Result<Vec<Subspace>, RepError> {
        if x >= self.len() {
            return Err(RepError::NotInPoset(x.to_string()));
        }
        let mut subs: Vec<Subspace> = self.fibers.iter().map(|m| Subspace::zero(self.field(), m.dim())).collect();
        subs[x] = self.fibers[x].generated(vectors)?;
        self.close(&mut subs)?;
        Ok(subs)
    }

    pub fn generated_subobject(&self, x: usize, vectors: &[Vec<Scalar>]) -> Result<(RepObject, RepMorphism), RepError> {
        let subs = self.generated_subspaces(x, vectors)?;
        self.subobject(&subs)
    }

    /// Enlarges `subs` to the smallest subobject containing it.
    pub(crate) fn close(&self, subs: &mut [Subspace]) -> Result<(), RepError> {
        for (s, m) in subs.iter_mut().zip(&self.fibers) {
            *s = m.generated(&s.basis_vectors())?;
        }
        loop {
            let mut grew = false;
            for (s, t) in self.transitions() {
                let img = subs[s].image_under(&self.structure[&(s, t)]);
                if !subs[t].contains_subspace(&img) {
                    let mut gens = subs[t].basis_vectors();
                    gens.extend(img.basis_vectors());
                    subs[t] = self.fibers[t].generated(&gens)?;
                    grew = true;
                }
            }
            if !grew {
                return Ok(());
            }
        }
    }
}

pub(crate) fn pairs_for(flavor: Flavor, base: &Base, ms: &Module, mt: &Module, s: usize, t: usize) -> Vec<(Mat, Mat)> {
    let h = base.map_between(s, t);
    match flavor.kind() {
        Kind::Coinduction => (0..base.algebra(t).dim()).map(|b| (ms.act(&h.map.column(b)), mt.op(b).clone())).collect(),
        Kind::Extension => (0..base.algebra(s).dim()).map(|a| (ms.op(a).clone(), mt.act(&h.map.column(a)))).collect(),
    }
}

/// A family of fiber maps `eta_x: M_x -> N_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism {
    pub source: RepObject,
    pub target: RepObject,
    pub components: Vec<Mat>,
}

impl RepMorphism {
    pub fn new(source: &RepObject, target: &RepObject, components: Vec<Mat>) -> Result<RepMorphism, RepError> {
        source.same_category(target)?;
        if components.len() != source.len()
            || components.iter().enumerate().any(|(x, c)| c.shape() != (target.fibers[x].dim(), source.fibers[x].dim()))
        {
            return Err(RepError::Shape("morphism components have the wrong shapes".into()));
        }
        let eta = RepMorphism { source: source.clone(), target: target.clone(), components };
        let v = eta.check();
        if v.is_empty() {
            Ok(eta)
        } else {
            Err(RepError::Invalid { what: "morphism".into(), violations: v })
        }
    }

    pub fn identity(m: &RepObject) -> RepMorphism {
        let components = m.fibers.iter().map(|f| Mat::identity(m.field(), f.dim())).collect();
        RepMorphism { source: m.clone(), target: m.clone(), components }
    }

    pub fn zero(m: &RepObject, n: &RepObject) -> RepMorphism {
        let components = (0..m.len()).map(|x| Mat::zeros(m.field(), n.fibers[x].dim(), m.fibers[x].dim())).collect();
        RepMorphism { source: m.clone(), target: n.clone(), components }
    }

    pub fn component(&self, x: usize) -> &Mat {
        &self.components[x]
    }

    pub fn check(&self) -> Vec<Violation> {
        let (m, n) = (&self.source, &self.target);
        let mut out = Vec::new();
        for (x, eta) in self.components.iter().enumerate() {
            for (b, (p, q)) in m.fibers[x].ops().iter().zip(n.fibers[x].ops()).enumerate() {
                if let Some(w) = difference_witness(&eta.mul(p), &q.mul(eta)) {
                    out.push(Violation::new(format!("component {x} is not linear over basis element {b}"), w));
                    break;
                }
            }
        }
        for (s, t) in m.transitions() {
            let lhs = self.components[t].mul(&m.structure[&(s, t)]);
            let rhs = n.structure[&(s, t)].mul(&self.components[s]);
            if let Some(w) = difference_witness(&lhs, &rhs) {
                out.push(Violation::new(format!("square along {s} -> {t}"), w));
            }
        }
        out
    }

    pub fn then(&self, next: &RepMorphism) -> Result<RepMorphism, RepError> {
        if self.target != next.source {
            return Err(RepError::Mismatch("morphisms are not composable".into()));
        }
        let components = self.components.iter().zip(&next.components).map(|(a, b)| b.mul(a)).collect();
        Ok(RepMorphism { source: self.source.clone(), target: next.target.clone(), components })
    }

    pub fn is_iso(&self) -> bool {
        self.components.iter().all(Mat::is_invertible)
    }

    pub fn is_mono(&self) -> bool {
        self.components.iter().all(Mat::is_injective)
    }

    pub fn is_epi(&self) -> bool {
        self.components.iter().all(Mat::is_surjective)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Mat::is_zero)
    }

    pub fn kernel(&self) -> Result<(RepObject, RepMorphism), RepError> {
        let subs: Vec<_> = self.components.iter().map(exactla::kernel).collect();
        self.source.subobject(&subs)
    }

    pub fn image(&self) -> Result<(RepObject, RepMorphism), RepError> {
        let subs: Vec<_> = self.components.iter().map(exactla::image).collect();
        self.target.subobject(&subs)
    }

    pub fn cokernel(&self) -> Result<(RepObject, RepMorphism), RepError> {
        let subs: Vec<_> = self.components.iter().map(exactla::image).collect();
        let (q, p, _) = self.target.quotient(&subs)?;
        Ok((q, p))
    }

    /// Whether `self` factors as `inc . g` through a monomorphism `inc`.
    pub fn factors_through(&self, inc: &RepMorphism) -> bool {
        self.components.iter().zip(&inc.components).all(|(e, i)| i.solve_mat(e).is_some())
    }
}

/// Basis of `Hom(M, N)`: fiberwise intertwiners that commute with every
/// transition.
pub fn hom_rep(m: &RepObject, n: &RepObject) -> Result<Vec<RepMorphism>, RepError> {
    m.same_category(n)?;
    let f = m.field().clone();
    let mut sys = LinearSystem::new(&f);
    let blocks: Vec<usize> = (0..m.len()).map(|x| sys.add_block(n.fibers[x].dim(), m.fibers[x].dim())).collect();
    for x in 0..m.len() {
        for (p, q) in m.fibers[x].ops().iter().zip(n.fibers[x].ops()) {
            sys.add_equation(&[Term::new(&f, None, blocks[x], Some(p)), Term::negated(&f, Some(q), blocks[x], None)])?;
        }
    }
    for (s, t) in m.transitions() {
        let (tm, tn) = (&m.structure[&(s, t)], &n.structure[&(s, t)]);
        sys.add_equation(&[Term::new(&f, None, blocks[t], Some(tm)), Term::negated(&f, Some(tn), blocks[s], None)])?;
    }
    Ok(sys
        .solution_basis()
        .into_iter()
        .map(|components| RepMorphism { source: m.clone(), target: n.clone(), components })
        .collect())
}

/// A morphism `g` as the combination `sum c_i basis_i`, if it lies in the span.
pub fn coordinates_in(basis: &[RepMorphism], g: &RepMorphism) -> Option<Vec<Scalar>> {
    let f = g.source.field();
    let flat = |e: &RepMorphism| e.components.iter().flat_map(Mat::vec).collect::<Vec<_>>();
    let target = flat(g);
    let cols: Vec<_> = basis.iter().map(flat).collect();
    Mat::from_columns(f, target.len(), &cols).solve(&target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::CoalgebraRep;
    use coalg::{Coalgebra, CoalgebraMorphism};

    fn arrow() -> Rep {
        let f = Field::Gf(3);
        Rep::Coalgebra(CoalgebraRep::arrow(&CoalgebraMorphism::counit_of(&Coalgebra::grouplike(&f, 2))))
    }

    #[test]
    fn wrong_shapes_are_rejected() {
        let rep = arrow();
        let f = rep.field().clone();
        let kg = RightComodule::regular(&Coalgebra::grouplike(&f, 2));
        let k = RightComodule::regular(&Coalgebra::ground(&f));
        let bad = BTreeMap::from([((0, 1), Mat::zeros(&f, 2, 2))]);
        assert!(matches!(RepObject::from_comodules(Flavor::CisComodule, &rep, &[kg.clone(), k.clone()], bad), Err(RepError::Shape(_))));
        let missing = BTreeMap::new();
        assert!(matches!(RepObject::from_comodules(Flavor::CisComodule, &rep, &[kg, k], missing), Err(RepError::Shape(_))));
    }

    #[test]
    fn non_linear_transition_is_flagged() {
        let f = Field::Gf(3);
        let kg = Coalgebra::grouplike(&f, 2);
        let rep = Rep::Coalgebra(CoalgebraRep::constant(crate::FinitePoset::chain(2), &kg));
        let r = RightComodule::regular(&kg);
        // swapping group elements does not respect the coaction
        let t = Mat::from_i64(&f, 2, 2, &[0, 1, 1, 0]);
        let err = RepObject::from_comodules(Flavor::CisComodule, &rep, &[r.clone(), r], BTreeMap::from([((0, 1), t)])).unwrap_err();
        assert!(matches!(err, RepError::Invalid { .. }));
    }

    #[test]
    fn flavor_must_match_representation() {
        let rep = arrow();
        assert!(matches!(RepObject::zero(Flavor::CisModule, &rep), Err(RepError::Mismatch(_))));
    }

    #[test]
    fn coordinates_of_a_combination() {
        let rep = arrow();
        let m = crate::ex(Flavor::CisComodule, &rep, 0, &Module::regular(rep.base().algebra(0), Flavor::CisComodule.side()))
            .unwrap()
            .object;
        let basis = hom_rep(&m, &m).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(coordinates_in(&basis, &RepMorphism::zero(&m, &m)).unwrap().iter().all(|c| c == &m.field().zero()));
    }
}
