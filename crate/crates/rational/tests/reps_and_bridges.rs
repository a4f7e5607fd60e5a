use std::collections::BTreeMap;

use coalg::samples::coalgebras;
use exactla::{Field, Mat};
use rational::samples::*;
use rational::*;
use repcat::samples::{coalgebra_reps, objects};
use repcat::{hom_rep, CoalgebraRep, Flavor, Rep, RepObject};

#[test]
fn pairing_compatibility_is_checked() {
    let f = Field::Gf(3);
    let p = chain_pairing(&f);
    assert!(p.check().is_empty());
    // a pairing at 1 that sends x to a nonzero functional on K is not an algebra map
    let bad = RationalPairing::finite_unchecked(
        &coalg::Coalgebra::ground(&f),
        &algmod::Algebra::truncated_poly(&f, 2),
        Mat::from_i64(&f, 1, 2, &[1, 1]),
    )
    .unwrap();
    assert!(!bad.check().is_empty());
    let r = RepPairing::unchecked(p.crep().clone(), p.arep().clone(), vec![p.pairing(0).clone(), bad]).unwrap();
    assert!(!r.check().is_empty());
}

#[test]
fn chain_with_a_non_rational_fiber() {
    let f = Field::Gf(3);
    let p = chain_pairing(&f);
    let rep = Rep::Algebra(p.arep().clone());
    let objs = objects(Flavor::TransModule, &rep, 6);
    let mut smaller = 0;
    for n in &objs {
        let (sub, inc, subs) = rationalize_rep(&p, n).unwrap();
        assert!(sub.check().is_empty() && inc.check().is_empty());
        for x in 0..n.len() {
            let data = ActionData::Module(sub.fiber(x).over_opposite());
            assert!(is_rational(&p.pairing(x).opposite().unwrap(), &data).unwrap());
        }
        if sub.total_dim() < n.total_dim() {
            smaller += 1;
        }
        // every map from a rational object factors through the inclusion
        for m in &objs {
            let (rm, _, _) = rationalize_rep(&p, m).unwrap();
            if rm.total_dim() != m.total_dim() {
                continue;
            }
            for eta in hom_rep(m, n).unwrap() {
                assert!(eta.factors_through(&inc));
            }
        }
        // idempotent
        let (again, _, _) = rationalize_rep(&p, &sub).unwrap();
        assert_eq!(again.dims(), sub.dims());
        assert_eq!(subs.iter().map(|s| s.dim()).collect::<Vec<_>>(), sub.dims());
    }
    assert!(smaller > 0);
}

#[test]
fn evaluation_pairings_rationalize_to_everything() {
    for f in [Field::Gf(2), Field::Q] {
        for (name, rp) in evaluation_pairings(&f) {
            assert!(rp.check().is_empty(), "{name}");
            let rep = Rep::Algebra(rp.arep().clone());
            for n in objects(Flavor::TransModule, &rep, 6) {
                let (sub, _, _) = rationalize_rep(&rp, &n).unwrap();
                assert_eq!(sub.dims(), n.dims(), "{name}");
            }
        }
    }
}

#[test]
fn one_point_poset_is_plain_rationalization() {
    let f = Field::Q;
    let k = coalg::Coalgebra::ground(&f);
    let t2 = algmod::Algebra::truncated_poly(&f, 2);
    let crep = CoalgebraRep::constant(repcat::FinitePoset::point(), &k);
    let arep = repcat::AlgebraRep::constant(repcat::FinitePoset::point(), &t2);
    let rp = RepPairing::new(crep, arep.clone(), vec![ground_truncated(&f)]).unwrap();
    let rep = Rep::Algebra(arep);
    for n in objects(Flavor::TransModule, &rep, 6) {
        let (sub, _, _) = rationalize_rep(&rp, &n).unwrap();
        let plain = rationalize(&ground_truncated(&f).opposite().unwrap(), &ActionData::Module(n.fiber(0).over_opposite())).unwrap();
        assert_eq!(sub.dims(), vec![plain.subspace.dim()]);
    }
}

#[test]
fn comodule_bridge_round_trips() {
    let mut n = 0;
    for f in [Field::Gf(2), Field::Gf(3), Field::Q] {
        for (name, crep) in coalgebra_reps(&f) {
            let rep = Rep::Coalgebra(crep.clone());
            for flavor in [Flavor::CisComodule, Flavor::TransComodule] {
                let objs = objects(flavor, &rep, 6);
                for m in &objs {
                    let md = comodules_to_modules(m).unwrap();
                    assert!(md.check().is_empty(), "{name}");
                    assert_eq!(&modules_to_comodules(&crep, &md).unwrap(), m);
                    n += 1;
                }
                // kernels and cokernels match dimensionwise
                for a in objs.iter().take(4) {
                    for b in objs.iter().take(4) {
                        for eta in hom_rep(a, b).unwrap() {
                            let t = transport_morphism(&eta, comodules_to_modules).unwrap();
                            assert_eq!(eta.kernel().unwrap().0.dims(), t.kernel().unwrap().0.dims());
                            assert_eq!(eta.cokernel().unwrap().0.dims(), t.cokernel().unwrap().0.dims());
                        }
                    }
                }
            }
        }
    }
    assert!(n >= 20);
}

#[test]
fn contramodules_become_cis_modules() {
    for f in [Field::Gf(3), Field::Q] {
        for (name, crep) in coalgebra_reps(&f) {
            let rep = Rep::Coalgebra(crep.clone());
            let z = RepObject::zero(Flavor::TransContramodule, &rep).unwrap();
            assert_eq!(contra_to_cis_module(&z).unwrap().total_dim(), 0);
            let objs = objects(Flavor::TransContramodule, &rep, 6);
            for m in &objs {
                let md = contra_to_cis_module(m).unwrap();
                assert!(md.check().is_empty(), "{name}");
                assert_eq!(md.flavor(), Flavor::CisModule);
            }
            // functorial on composable pairs
            for a in objs.iter().take(3) {
                for b in objs.iter().take(3) {
                    for g in hom_rep(a, b).unwrap() {
                        for h in hom_rep(b, a).unwrap().into_iter().take(2) {
                            let gh = g.then(&h).unwrap();
                            let lhs = transport_morphism(&gh, contra_to_cis_module).unwrap();
                            let rhs = transport_morphism(&g, contra_to_cis_module)
                                .unwrap()
                                .then(&transport_morphism(&h, contra_to_cis_module).unwrap())
                                .unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn finite_dual_inverts_dual_algebra() {
    for f in [Field::Gf(2), Field::Gf(5), Field::Q] {
        for (name, c) in coalgebras(&f) {
            assert_eq!(finite_dual(&c.dual_algebra()).unwrap(), c, "{name}");
        }
        for (name, a) in algmod::samples::algebras(&f) {
            let c = finite_dual(&a).unwrap();
            assert!(c.check().is_empty(), "{name}");
            assert_eq!(c.dual_algebra(), a, "{name}");
        }
    }
}

#[test]
fn one_point_bridge_is_the_fiber_correspondence() {
    let f = Field::Gf(3);
    let kg = coalg::Coalgebra::grouplike(&f, 2);
    let crep = CoalgebraRep::constant(repcat::FinitePoset::point(), &kg);
    let rep = Rep::Coalgebra(crep);
    let r = coalg::RightComodule::regular(&kg);
    let m = RepObject::from_comodules(Flavor::CisComodule, &rep, std::slice::from_ref(&r), BTreeMap::new()).unwrap();
    let md = comodules_to_modules(&m).unwrap();
    assert_eq!(md.fiber(0).ops(), r.to_module().ops());
}
