//! Small representations and objects for tests and the corpus.

use std::collections::BTreeMap;

use algmod::{samples as alg, Algebra, AlgebraMorphism, Module};
use coalg::{samples as co, Coalgebra, CoalgebraMorphism};
use exactla::{Field, Mat};

use crate::{coe, ex, AlgebraRep, CoalgebraRep, Flavor, FinitePoset, Rep, RepObject};

pub fn coalgebra_reps(f: &Field) -> Vec<(String, CoalgebraRep)> {
    let dp = |n| Coalgebra::divided_power(f, n);
    let kg2 = Coalgebra::grouplike(f, 2);
    let k = Coalgebra::ground(f);
    let eps = CoalgebraMorphism::counit_of(&kg2);
    let mut out = vec![
        ("point KG2".to_string(), CoalgebraRep::constant(FinitePoset::point(), &kg2)),
        ("KG2 -> K".into(), CoalgebraRep::arrow(&eps)),
        ("DP2 -> DP3".into(), CoalgebraRep::arrow(&CoalgebraMorphism::divided_power_inclusion(f, 2, 3))),
        ("DP1 -> DP2".into(), CoalgebraRep::arrow(&CoalgebraMorphism::divided_power_inclusion(f, 1, 2))),
        ("constant DP2 on 0 < 1".into(), CoalgebraRep::constant(FinitePoset::chain(2), &dp(2))),
    ];
    let covers = BTreeMap::from([
        ((0, 1), CoalgebraMorphism::divided_power_inclusion(f, 1, 2)),
        ((1, 2), CoalgebraMorphism::counit_of(&dp(2))),
    ]);
    out.push((
        "DP1 -> DP2 -> K".into(),
        CoalgebraRep::from_covers(FinitePoset::chain(3), vec![dp(1), dp(2), k.clone()], covers).expect("chain"),
    ));
    let vee = BTreeMap::from([((0, 1), eps.clone()), ((0, 2), eps)]);
    out.push((
        "K <- KG2 -> K".into(),
        CoalgebraRep::from_covers(FinitePoset::vee(), vec![kg2, k.clone(), k], vee).expect("vee"),
    ));
    out
}

pub fn algebra_reps(f: &Field) -> Vec<(String, AlgebraRep)> {
    let t2 = Algebra::truncated_poly(f, 2);
    let t3 = Algebra::truncated_poly(f, 3);
    let k = Algebra::ground(f);
    let kk = Algebra::product(f, 2);
    let quot = AlgebraMorphism::new(&t3, &t2, Mat::from_i64(f, 2, 3, &[1, 0, 0, 0, 1, 0])).expect("quotient");
    let proj = AlgebraMorphism::new(&kk, &k, Mat::from_i64(f, 1, 2, &[1, 0])).expect("projection");
    let mut out = vec![
        ("point K[x]/x^2".to_string(), AlgebraRep::constant(FinitePoset::point(), &t2)),
        ("K -> K[x]/x^2".into(), AlgebraRep::arrow(&AlgebraMorphism::unit_of(&t2))),
        ("K -> KxK".into(), AlgebraRep::arrow(&AlgebraMorphism::unit_of(&kk))),
        ("K[x]/x^3 -> K[x]/x^2".into(), AlgebraRep::arrow(&quot)),
        ("KxK -> K".into(), AlgebraRep::arrow(&proj)),
    ];
    let covers = BTreeMap::from([((0, 1), AlgebraMorphism::unit_of(&kk)), ((1, 2), proj)]);
    out.push((
        "K -> KxK -> K".into(),
        AlgebraRep::from_covers(FinitePoset::chain(3), vec![k.clone(), kk, k], covers).expect("chain"),
    ));
    out
}

pub fn reps_for(flavor: Flavor, f: &Field) -> Vec<(String, Rep)> {
    if flavor.over_coalgebras() {
        coalgebra_reps(f).into_iter().map(|(n, r)| (n, Rep::Coalgebra(r))).collect()
    } else {
        algebra_reps(f).into_iter().map(|(n, r)| (n, Rep::Algebra(r))).collect()
    }
}

/// Sample modules over the algebra at `x`, in the flavor's conventions.
pub fn fiber_modules(flavor: Flavor, rep: &Rep, x: usize) -> Vec<Module> {
    match rep {
        Rep::Coalgebra(c) => {
            let cx = c.fiber(x);
            let mut out: Vec<Module> = co::comodules(cx).iter().map(|m| m.to_module()).collect();
            if flavor == Flavor::TransContramodule {
                for m in contra::samples::contramodules(cx) {
                    let md = m.to_module();
                    if !out.contains(&md) {
                        out.push(md);
                    }
                }
            }
            out
        }
        Rep::Algebra(a) => alg::modules(a.fiber(x), flavor.side()),
    }
}

/// `ex_x(V)`, `coe_x(V)` for sample `V`, and pairwise sums, up to a total
/// dimension bound, in a fixed order.
pub fn objects(flavor: Flavor, rep: &Rep, max_total: usize) -> Vec<RepObject> {
    let mut basic: Vec<RepObject> = Vec::new();
    let push = |o: RepObject, out: &mut Vec<RepObject>| {
        if o.total_dim() > 0 && o.total_dim() <= max_total && !out.contains(&o) {
            out.push(o);
        }
    };
    for x in 0..rep.poset().len() {
        for v in fiber_modules(flavor, rep, x) {
            push(ex(flavor, rep, x, &v).expect("ex").object, &mut basic);
            push(coe(flavor, rep, x, &v).expect("coe").object, &mut basic);
        }
    }
    let mut out = basic.clone();
    for i in 0..basic.len() {
        for j in i..basic.len() {
            if basic[i].total_dim() + basic[j].total_dim() <= max_total {
                push(basic[i].direct_sum(&basic[j]).expect("same category"), &mut out);
            }
        }
    }
    out
}
