//! Evaluation at a point and its two adjoints, for posets.

use std::collections::BTreeMap;

use algmod::{
    coextend, coextend_counit, extend, extend_unit, hom_modules, restrict, transposition_rank, AdjunctionCertificate,
    Coextension, Extension, Module,
};
use exactla::{Mat, Scalar};

use crate::{hom_rep, Flavor, Kind, Rep, RepError, RepMorphism, RepObject};

/// Points `t` with a transition `x -> t`, and `x` itself.
pub fn downstream(flavor: Flavor, rep: &Rep, x: usize) -> Vec<usize> {
    let p = rep.poset();
    if flavor.is_cis() {
        p.up_set(x)
    } else {
        p.down_set(x)
    }
}

/// Points `s` with a transition `s -> x`, and `x` itself.
pub fn upstream(flavor: Flavor, rep: &Rep, x: usize) -> Vec<usize> {
    let p = rep.poset();
    if flavor.is_cis() {
        p.down_set(x)
    } else {
        p.up_set(x)
    }
}

fn check_point(rep: &Rep, x: usize) -> Result<(), RepError> {
    if rep.poset().contains(x) {
        Ok(())
    } else {
        Err(RepError::NotInPoset(x.to_string()))
    }
}

fn check_fiber_module(rep: &Rep, flavor: Flavor, x: usize, v: &Module) -> Result<(), RepError> {
    check_point(rep, x)?;
    if flavor.over_coalgebras() != matches!(rep, Rep::Coalgebra(_)) {
        return Err(RepError::Mismatch(format!("{flavor} over the wrong kind of representation")));
    }
    let base = rep.base();
    if v.algebra() != base.algebra(x) || v.side() != flavor.side() {
        return Err(RepError::Mismatch(format!("module is not over the algebra at {x}")));
    }
    Ok(())
}

/// `ex_x(V)` with the scalar-extension carriers of its fibers.
#[derive(Clone, Debug)]
pub struct Induced {
    pub object: RepObject,
    pub point: usize,
    pub extensions: BTreeMap<usize, Extension>,
}

/// `coe_x(N)` with the coextension data of its fibers.
#[derive(Clone, Debug)]
pub struct Coinduced {
    pub object: RepObject,
    pub point: usize,
    pub coextensions: BTreeMap<usize, Coextension>,
}

/// Left adjoint of evaluation at `x`.
pub fn ex(flavor: Flavor, rep: &Rep, x: usize, v: &Module) -> Result<Induced, RepError> {
    check_fiber_module(rep, flavor, x, v)?;
    let base = rep.base();
    let f = rep.field();
    let n = rep.poset().len();
    let down = downstream(flavor, rep, x);
    let mut fibers: Vec<Module> = base.algebras.iter().map(|a| Module::zero(a, flavor.side())).collect();
    let mut extensions = BTreeMap::new();
    for &t in &down {
        if t == x {
            fibers[t] = v.clone();
            continue;
        }
        let h = base.map_between(x, t);
        fibers[t] = match flavor.kind() {
            Kind::Coinduction => restrict(&h, v)?,
            Kind::Extension => {
                let e = extend(&h, v)?;
                let m = e.module.clone();
                extensions.insert(t, e);
                m
            }
        };
    }
    let mut structure = BTreeMap::new();
    for (s, t) in flavor.transitions(rep.poset()) {
        let map = if !(down.contains(&s) && down.contains(&t)) {
            Mat::zeros(f, fibers[t].dim(), fibers[s].dim())
        } else {
            match flavor.kind() {
                Kind::Coinduction => Mat::identity(f, v.dim()),
                Kind::Extension if s == x => extend_unit(&base.map_between(x, t), v, &extensions[&t]),
                Kind::Extension => {
                    let hh = base.map_between(s, t).map;
                    let lift = Mat::identity(f, v.dim()).kron(&hh);
                    extensions[&t].carrier.projection.mul(&lift).mul(&extensions[&s].carrier.section)
                }
            }
        };
        structure.insert((s, t), map);
    }
    debug_assert_eq!(fibers.len(), n);
    let object = RepObject::unchecked(flavor, rep, fibers, structure)?;
    Ok(Induced { object, point: x, extensions })
}

pub fn ev(m: &RepObject, x: usize) -> Result<Module, RepError> {
    check_point(m.rep(), x)?;
    Ok(m.fiber(x).clone())
}

/// Right adjoint of evaluation at `x`.
pub fn coe(flavor: Flavor, rep: &Rep, x: usize, n: &Module) -> Result<Coinduced, RepError> {
    check_fiber_module(rep, flavor, x, n)?;
    let base = rep.base();
    let f = rep.field();
    let up = upstream(flavor, rep, x);
    let mut fibers: Vec<Module> = base.algebras.iter().map(|a| Module::zero(a, flavor.side())).collect();
    let mut coextensions = BTreeMap::new();
    for &s in &up {
        if s == x {
            fibers[s] = n.clone();
            continue;
        }
        let h = base.map_between(s, x);
        fibers[s] = match flavor.kind() {
            Kind::Extension => restrict(&h, n)?,
            Kind::Coinduction => {
                let c = coextend(&h, n)?;
                let m = c.module.clone();
                coextensions.insert(s, c);
                m
            }
        };
    }
    let mut structure = BTreeMap::new();
    for (s, t) in flavor.transitions(rep.poset()) {
        let map = if !(up.contains(&s) && up.contains(&t)) {
            Mat::zeros(f, fibers[t].dim(), fibers[s].dim())
        } else {
            match flavor.kind() {
                Kind::Extension => Mat::identity(f, n.dim()),
                Kind::Coinduction if t == x => coextend_counit(&base.map_between(s, x), &coextensions[&s]),
                Kind::Coinduction => {
                    let hh = base.map_between(s, t).map;
                    let (src, tgt) = (&coextensions[&s], &coextensions[&t]);
                    let dim = src.module.dim();
                    let cols: Vec<Vec<Scalar>> = (0..dim)
                        .map(|i| {
                            let g = src.hom_at(&Mat::unit_vector(f, dim, i)).mul(&hh);
                            tgt.coords_of(&g).expect("precomposition stays linear")
                        })
                        .collect();
                    Mat::from_columns(f, tgt.module.dim(), &cols)
                }
            }
        };
        structure.insert((s, t), map);
    }
    let object = RepObject::unchecked(flavor, rep, fibers, structure)?;
    Ok(Coinduced { object, point: x, coextensions })
}

/// `ex_x(M_x) -> M`.
pub fn ex_counit(m: &RepObject, x: usize) -> Result<(Induced, RepMorphism), RepError> {
    let flavor = m.flavor();
    let ind = ex(flavor, m.rep(), x, m.fiber(x))?;
    let f = m.field();
    let down = downstream(flavor, m.rep(), x);
    let mut components = Vec::with_capacity(m.len());
    for y in 0..m.len() {
        let src_dim = ind.object.fiber(y).dim();
        let c = if !down.contains(&y) {
            Mat::zeros(f, m.fiber(y).dim(), src_dim)
        } else {
            let tr = m.transition(x, y).expect("downstream point");
            match flavor.kind() {
                Kind::Extension if y != x => {
                    let db = m.base().algebra(y).dim();
                    let mt = m.fiber(y);
                    let prods: Vec<Mat> = (0..db).map(|b| mt.op(b).mul(&tr)).collect();
                    let raw = Mat::from_fn(f, mt.dim(), m.fiber(x).dim() * db, |i, col| {
                        prods[col % db].get(i, col / db).clone()
                    });
                    ind.extensions[&y].carrier.descend(&raw)?
                }
                _ => tr,
            }
        };
        components.push(c);
    }
    let eps = RepMorphism { source: ind.object.clone(), target: m.clone(), components };
    Ok((ind, eps))
}

/// `M -> coe_x(M_x)`.
pub fn coe_unit(m: &RepObject, x: usize) -> Result<(Coinduced, RepMorphism), RepError> {
    let flavor = m.flavor();
    let co = coe(flavor, m.rep(), x, m.fiber(x))?;
    let f = m.field();
    let up = upstream(flavor, m.rep(), x);
    let mut components = Vec::with_capacity(m.len());
    for y in 0..m.len() {
        let tgt_dim = co.object.fiber(y).dim();
        let c = if !up.contains(&y) {
            Mat::zeros(f, tgt_dim, m.fiber(y).dim())
        } else {
            let tr = m.transition(y, x).expect("upstream point");
            match flavor.kind() {
                Kind::Coinduction if y != x => {
                    let cx = &co.coextensions[&y];
                    let ms = m.fiber(y);
                    let db = m.base().algebra(y).dim();
                    let prods: Vec<Mat> = (0..db).map(|b| tr.mul(ms.op(b))).collect();
                    let cols: Vec<Vec<Scalar>> = (0..ms.dim())
                        .map(|k| {
                            let fm = Mat::from_fn(f, m.fiber(x).dim(), db, |i, b| prods[b].get(i, k).clone());
                            cx.coords_of(&fm).ok_or(RepError::Inconsistent("unit is not a module map".into()))
                        })
                        .collect::<Result<_, _>>()?;
                    Mat::from_columns(f, tgt_dim, &cols)
                }
                _ => tr,
            }
        };
        components.push(c);
    }
    let eta = RepMorphism { source: m.clone(), target: co.object.clone(), components };
    Ok((co, eta))
}

/// `ex_x -| ev_x` at `(V, M)`.
pub fn certify_ex_ev(x: usize, v: &Module, m: &RepObject) -> Result<AdjunctionCertificate, RepError> {
    let ind = ex(m.flavor(), m.rep(), x, v)?;
    let left = hom_rep(&ind.object, m)?;
    let right = hom_modules(v, m.fiber(x))?;
    let at_x: Vec<Mat> = left.iter().map(|e| e.components[x].clone()).collect();
    let rank = transposition_rank(&at_x, None, None);
    // eps_{ex V} is the identity, and ev(eps_M) too
    let (_, eps_ex) = ex_counit(&ind.object, x)?;
    let t1 = eps_ex.check().is_empty() && eps_ex.components.iter().all(Mat::is_identity);
    let (_, eps_m) = ex_counit(m, x)?;
    let t2 = eps_m.check().is_empty() && eps_m.components[x].is_identity();
    Ok(AdjunctionCertificate {
        hom_left: left.len(),
        hom_right: right.len(),
        bijection: rank == left.len() && rank == right.len(),
        triangle_left: t1,
        triangle_right: t2,
    })
}

/// `ev_x -| coe_x` at `(M, N)`.
pub fn certify_ev_coe(x: usize, m: &RepObject, n: &Module) -> Result<AdjunctionCertificate, RepError> {
    let co = coe(m.flavor(), m.rep(), x, n)?;
    let left = hom_modules(m.fiber(x), n)?;
    let right = hom_rep(m, &co.object)?;
    let at_x: Vec<Mat> = right.iter().map(|e| e.components[x].clone()).collect();
    let rank = transposition_rank(&at_x, None, None);
    let (_, eta_m) = coe_unit(m, x)?;
    let t1 = eta_m.check().is_empty() && eta_m.components[x].is_identity();
    let (_, eta_co) = coe_unit(&co.object, x)?;
    let t2 = eta_co.check().is_empty() && eta_co.components.iter().all(Mat::is_identity);
    Ok(AdjunctionCertificate {
        hom_left: left.len(),
        hom_right: right.len(),
        bijection: rank == left.len() && rank == right.len(),
        triangle_left: t1,
        triangle_right: t2,
    })
}

/// `ex_x` of the rank-one free module over `B_x`, for every `x`.
pub fn projective_generator_family(flavor: Flavor, rep: &Rep) -> Result<Vec<RepObject>, RepError> {
    let base = rep.base();
    (0..rep.poset().len())
        .map(|x| Ok(ex(flavor, rep, x, &Module::regular(base.algebra(x), flavor.side()))?.object))
        .collect()
}

/// A member of the family with a map into `inc.target` that does not
/// factor through the monomorphism `inc`, if there is one.
pub fn generator_witness(family: &[RepObject], inc: &RepMorphism) -> Result<Option<(usize, RepMorphism)>, RepError> {
    for (i, g) in family.iter().enumerate() {
        for eta in hom_rep(g, &inc.target)? {
            if !eta.factors_through(inc) {
                return Ok(Some((i, eta)));
            }
        }
    }
    Ok(None)
}

/// A lift of `g: P -> N` along an epimorphism `p: M -> N`, if any.
pub fn lift(g: &RepMorphism, p: &RepMorphism) -> Result<Option<RepMorphism>, RepError> {
    if g.target != p.target {
        return Err(RepError::Mismatch("lift: maps into different objects".into()));
    }
    let basis = hom_rep(&g.source, &p.source)?;
    let f = g.source.field();
    let images: Vec<RepMorphism> = basis.iter().map(|b| b.then(p)).collect::<Result<_, _>>()?;
    let Some(c) = crate::coordinates_in(&images, g) else { return Ok(None) };
    let mut components: Vec<Mat> =
        (0..g.source.len()).map(|x| Mat::zeros(f, p.source.fiber(x).dim(), g.source.fiber(x).dim())).collect();
    for (coef, b) in c.iter().zip(&basis) {
        for (acc, comp) in components.iter_mut().zip(&b.components) {
            acc.add_scaled(coef, comp);
        }
    }
    Ok(Some(RepMorphism { source: g.source.clone(), target: p.source.clone(), components }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{samples, CoalgebraRep, FinitePoset};
    use algmod::Side;
    use coalg::Coalgebra;
    use exactla::Field;

    #[test]
    fn streams_on_a_vee() {
        let f = Field::Q;
        let rep = samples::reps_for(Flavor::CisComodule, &f).pop().unwrap().1;
        assert_eq!(rep.poset(), &FinitePoset::vee());
        assert_eq!(downstream(Flavor::CisComodule, &rep, 0), vec![0, 1, 2]);
        assert_eq!(upstream(Flavor::CisComodule, &rep, 1), vec![0, 1]);
        assert_eq!(downstream(Flavor::TransContramodule, &rep, 2), vec![0, 2]);
    }

    #[test]
    fn unknown_point() {
        let f = Field::Q;
        let rep = Rep::Coalgebra(CoalgebraRep::constant(FinitePoset::point(), &Coalgebra::ground(&f)));
        let v = Module::regular(rep.base().algebra(0), Side::Left);
        assert!(matches!(ex(Flavor::CisComodule, &rep, 3, &v), Err(RepError::NotInPoset(_))));
    }

    #[test]
    fn contramodule_family_is_one_per_point() {
        let f = Field::Gf(3);
        let rep = samples::reps_for(Flavor::TransContramodule, &f).remove(1).1;
        let fam = projective_generator_family(Flavor::TransContramodule, &rep).unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(fam[0].fiber(0).dim(), 2);
    }
}
