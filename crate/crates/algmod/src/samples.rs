//! Small algebras, morphisms and modules used by tests and the corpus.

use exactla::{Field, Mat};

use crate::{Algebra, AlgebraMorphism, Module, Side};

/// Named algebras of dimension at most 4.
pub fn algebras(f: &Field) -> Vec<(String, Algebra)> {
    vec![
        ("K".into(), Algebra::ground(f)),
        ("K[x]/x^2".into(), Algebra::truncated_poly(f, 2)),
        ("K[x]/x^3".into(), Algebra::truncated_poly(f, 3)),
        ("KxK".into(), Algebra::product(f, 2)),
        ("KC2".into(), Algebra::cyclic_group(f, 2)),
        ("M2".into(), Algebra::matrix(f, 2)),
    ]
}

/// Named algebra morphisms between the sample algebras.
pub fn morphisms(f: &Field) -> Vec<(String, AlgebraMorphism)> {
    let t2 = Algebra::truncated_poly(f, 2);
    let t3 = Algebra::truncated_poly(f, 3);
    let kk = Algebra::product(f, 2);
    let m2 = Algebra::matrix(f, 2);
    let mut out = Vec::new();
    out.push(("id K[x]/x^2".into(), AlgebraMorphism::identity(&t2)));
    out.push(("unit K[x]/x^3".into(), AlgebraMorphism::unit_of(&t3)));
    out.push((
        "x^3 -> x^2".into(),
        AlgebraMorphism::new(&t3, &t2, Mat::from_i64(f, 2, 3, &[1, 0, 0, 0, 1, 0])).expect("quotient"),
    ));
    out.push((
        "x^2 -> x^3, x -> x^2".into(),
        AlgebraMorphism::new(&t2, &t3, Mat::from_i64(f, 3, 2, &[1, 0, 0, 0, 0, 1])).expect("square embedding"),
    ));
    out.push(("diagonal K -> KxK".into(), AlgebraMorphism::unit_of(&kk)));
    out.push((
        "KxK -> M2 diagonal".into(),
        AlgebraMorphism::new(&kk, &m2, Mat::from_i64(f, 4, 2, &[1, 0, 0, 0, 0, 0, 0, 1])).expect("diagonal"),
    ));
    out.push((
        "x^2 -> M2, x -> E01".into(),
        AlgebraMorphism::new(&t2, &m2, Mat::from_i64(f, 4, 2, &[1, 0, 0, 1, 0, 0, 1, 0])).expect("nilpotent"),
    ));
    out.push((
        "KxK -> K first".into(),
        AlgebraMorphism::new(&kk, &Algebra::ground(f), Mat::from_i64(f, 1, 2, &[1, 0])).expect("projection"),
    ));
    out
}

/// A handful of modules over `a`: regular, cyclic submodules and
/// quotients of it, and the dual of the other-sided regular module.
pub fn modules(a: &Algebra, side: Side) -> Vec<Module> {
    let f = a.field();
    let reg = Module::regular(a, side);
    let mut out = vec![reg.clone()];
    let push = |m: Module, out: &mut Vec<Module>| {
        if m.dim() > 0 && !out.contains(&m) {
            out.push(m);
        }
    };
    push(Module::regular(a, side.flip()).dual(), &mut out);
    for i in 0..a.dim() {
        let s = reg.generated(&[Mat::unit_vector(f, a.dim(), i)]).expect("in range");
        if !s.is_full() {
            push(reg.submodule(&s).expect("submodule").0, &mut out);
            push(reg.quotient(&s).expect("submodule").0, &mut out);
        }
    }
    out
}
