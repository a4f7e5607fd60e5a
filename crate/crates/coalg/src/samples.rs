//! Standard coalgebras, morphisms and comodules for tests and the corpus.

use exactla::{Field, Mat};

use crate::{generated_subcomodule, Coalgebra, CoalgebraMorphism, LeftComodule, RightComodule};

/// `K`, `KG` for `|G|` in 1..=3, `DP(n)` for n in 1..=4, `MC(2)`.
pub fn coalgebras(f: &Field) -> Vec<(String, Coalgebra)> {
    let mut out = vec![("K".to_string(), Coalgebra::ground(f))];
    for n in 1..=3 {
        out.push((format!("KG{n}"), Coalgebra::grouplike(f, n)));
    }
    for n in 1..=4 {
        out.push((format!("DP{n}"), Coalgebra::divided_power(f, n)));
    }
    out.push(("MC2".into(), Coalgebra::matrix(f, 2)));
    out
}

pub fn cocommutative_coalgebras(f: &Field) -> Vec<(String, Coalgebra)> {
    coalgebras(f).into_iter().filter(|(_, c)| c.is_cocommutative()).collect()
}

pub fn morphisms(f: &Field) -> Vec<(String, CoalgebraMorphism)> {
    let kg2 = Coalgebra::grouplike(f, 2);
    let mc2 = Coalgebra::matrix(f, 2);
    let dp2 = Coalgebra::divided_power(f, 2);
    let mut out = vec![
        ("id DP3".to_string(), CoalgebraMorphism::identity(&Coalgebra::divided_power(f, 3))),
        ("DP2 -> DP3".into(), CoalgebraMorphism::divided_power_inclusion(f, 2, 3)),
        ("DP1 -> DP2".into(), CoalgebraMorphism::divided_power_inclusion(f, 1, 2)),
        ("eps KG2".into(), CoalgebraMorphism::counit_of(&kg2)),
        ("eps DP2".into(), CoalgebraMorphism::counit_of(&dp2)),
        ("eps MC2".into(), CoalgebraMorphism::counit_of(&mc2)),
    ];
    out.push((
        "KG3 -> KG2 fold".into(),
        CoalgebraMorphism::new(&Coalgebra::grouplike(f, 3), &kg2, Mat::from_i64(f, 2, 3, &[1, 1, 0, 0, 0, 1]))
            .expect("fold"),
    ));
    out.push((
        "DP2 -> KG2 at g".into(),
        CoalgebraMorphism::new(&dp2, &kg2, Mat::from_i64(f, 2, 2, &[1, 0, 0, 0])).expect("grouplike"),
    ));
    out
}

/// Regular comodule, cyclic subcomodules and quotients of it, and the
/// dual of the regular left comodule.
pub fn comodules(c: &Coalgebra) -> Vec<RightComodule> {
    let f = c.field();
    let reg = RightComodule::regular(c);
    let mut out = vec![reg.clone()];
    let mut push = |m: RightComodule| {
        if m.dim() > 0 && !out.contains(&m) {
            out.push(m);
        }
    };
    push(LeftComodule::regular(c).dual());
    for i in 0..c.dim() {
        let (sub, inc) = generated_subcomodule(&reg, &[Mat::unit_vector(f, c.dim(), i)]).expect("in range");
        if sub.dim() < c.dim() {
            push(sub);
            push(reg.quotient(&exactla::image(&inc)).expect("subcomodule").0);
        }
    }
    out
}

/// Deterministic corruptions of `c`, each breaking a counit law: the
/// counit zeroed, `Delta` zeroed, `e^x` added to the counit, and
/// `e_0 (x) e_0` added to `Delta(e_x)` (every sample has `eps(e_0) = 1`).
pub fn mutated_coalgebras(c: &Coalgebra) -> Vec<(String, Coalgebra)> {
    let f = c.field();
    let d = c.dim();
    let one = f.one();
    let mut out = vec![
        ("eps = 0".to_string(), Coalgebra::unchecked(f, d, c.delta().clone(), Mat::zeros(f, 1, d)).expect("shape")),
        ("delta = 0".to_string(), Coalgebra::unchecked(f, d, Mat::zeros(f, d * d, d), c.eps().clone()).expect("shape")),
    ];
    for x in 0..d {
        let mut eps = c.eps().clone();
        eps.set(0, x, f.add(c.eps().get(0, x), &one));
        out.push((format!("eps(e{x}) += 1"), Coalgebra::unchecked(f, d, c.delta().clone(), eps).expect("shape")));
        let mut delta = c.delta().clone();
        delta.set(0, x, f.add(c.delta().get(0, x), &one));
        out.push((format!("delta(e{x}) += e0 (x) e0"), Coalgebra::unchecked(f, d, delta, c.eps().clone()).expect("shape")));
    }
    out
}

/// Corruptions of a nonzero comodule breaking the counit law.
pub fn mutated_comodules(m: &RightComodule) -> Vec<(String, RightComodule)> {
    let c = m.coalgebra();
    let f = c.field();
    let (n, d) = (m.dim(), c.dim());
    let mut out = vec![(
        "rho = 0".to_string(),
        RightComodule::unchecked(c, n, Mat::zeros(f, n * d, n)).expect("shape"),
    )];
    for i in 0..n {
        let mut rho = m.rho().clone();
        rho.set(i * d, i, f.add(m.rho().get(i * d, i), &f.one()));
        out.push((format!("rho(m{i}) += m{i} (x) e0"), RightComodule::unchecked(c, n, rho).expect("shape")));
    }
    out
}
