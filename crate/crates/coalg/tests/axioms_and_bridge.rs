use algmod::{Algebra, Module};
use coalg::samples;
use coalg::*;
use exactla::{Field, Mat};

fn fields() -> Vec<Field> {
    vec![Field::Gf(2), Field::Gf(5), Field::Q]
}

#[test]
fn corpus_coalgebras_and_comodules_are_valid() {
    for f in fields() {
        for (name, c) in samples::coalgebras(&f) {
            assert!(c.check().is_empty(), "{name} over {f}");
            for m in samples::comodules(&c) {
                assert!(m.check().is_empty(), "comodule over {name}");
            }
        }
    }
}

#[test]
fn mutations_fail_with_witnesses() {
    for f in fields() {
        let mut coalgebra_failures = 0;
        let mut comodule_failures = 0;
        for (name, c) in samples::coalgebras(&f) {
            for (what, bad) in samples::mutated_coalgebras(&c) {
                let v = bad.check();
                assert!(!v.is_empty(), "{name}: {what}");
                assert!(v.iter().all(|x| !x.witness.is_empty()));
                coalgebra_failures += 1;
            }
            for m in samples::comodules(&c) {
                for (what, bad) in samples::mutated_comodules(&m) {
                    let v = bad.check();
                    assert!(!v.is_empty(), "{name}: {what}");
                    comodule_failures += 1;
                }
            }
        }
        assert!(coalgebra_failures >= 10 && comodule_failures >= 10);
    }
}

#[test]
fn grouplike_with_zero_counit_fails_at_g() {
    let f = Field::Q;
    let kg = Coalgebra::grouplike(&f, 2);
    let bad = Coalgebra::unchecked(&f, 2, kg.delta().clone(), Mat::from_i64(&f, 1, 2, &[0, 1])).unwrap();
    let v = bad.check();
    assert!(v.iter().any(|x| x.law.contains("counit") && x.witness == Mat::unit_vector(&f, 2, 0)));
}

#[test]
fn dual_algebras() {
    for f in fields() {
        assert_eq!(Coalgebra::grouplike(&f, 2).dual_algebra(), Algebra::product(&f, 2));
        for n in 1..=4 {
            let a = Coalgebra::divided_power(&f, n).dual_algebra();
            assert!(a.check().is_empty());
            // x = c_1^* is nilpotent of order exactly n
            let mut x = vec![f.zero(); n];
            if n > 1 {
                x[1] = f.one();
            }
            let lx = a.left_mult_by(&x);
            let mut p = Mat::identity(&f, n);
            for k in 0..n {
                assert_eq!(p.is_zero(), n > 1 && k >= n, "power {k}");
                p = lx.mul(&p);
            }
            if n > 1 {
                assert!(p.is_zero());
            }
        }
    }
}

#[test]
fn module_round_trips() {
    for f in fields() {
        for (_, c) in samples::coalgebras(&f) {
            for m in samples::comodules(&c) {
                let md = m.to_module();
                assert!(md.check().is_empty());
                assert_eq!(RightComodule::from_module(&c, &md), m);
                let l = m.dual();
                assert!(l.check().is_empty());
                assert_eq!(LeftComodule::from_module(&c, &l.to_module()), l);
            }
            let reg = Module::regular(&c.dual_algebra(), algmod::Side::Left);
            assert_eq!(RightComodule::from_module(&c, &reg).to_module(), reg);
        }
    }
}

#[test]
fn hom_spaces_match_definition_by_enumeration() {
    let f = Field::Gf(2);
    for (_, c) in samples::coalgebras(&f).into_iter().filter(|(_, c)| c.dim() <= 2) {
        let ms = samples::comodules(&c);
        for m in &ms {
            for n in &ms {
                if m.dim() * n.dim() > 8 {
                    continue;
                }
                let basis = hom_comodules(m, n).unwrap();
                let brute = exactla::all_vectors(&f, m.dim() * n.dim())
                    .unwrap()
                    .into_iter()
                    .filter(|v| is_comodule_map(m, n, &Mat::from_vec(&f, n.dim(), m.dim(), v)))
                    .count();
                assert_eq!(brute, 1 << basis.len());
            }
        }
    }
}

#[test]
fn generated_subcomodules_against_enumeration() {
    let f = Field::Gf(2);
    for (_, c) in samples::coalgebras(&f).into_iter().filter(|(_, c)| c.dim() <= 4) {
        for m in samples::comodules(&c) {
            let subs: Vec<_> = exactla::all_subspaces(&f, m.dim())
                .unwrap()
                .into_iter()
                .filter(|s| m.is_subcomodule(s))
                .collect();
            for v in exactla::all_vectors(&f, m.dim()).unwrap() {
                let (_, inc) = generated_subcomodule(&m, std::slice::from_ref(&v)).unwrap();
                let got = exactla::image(&inc);
                let smallest = subs.iter().filter(|s| s.contains(&v)).min_by_key(|s| s.dim()).unwrap();
                assert_eq!(&got, smallest);
                assert!(subs.iter().filter(|s| s.contains(&v)).all(|s| s.contains_subspace(&got)));
            }
        }
    }
}

#[test]
fn grouplike_generation_examples() {
    let f = Field::Gf(2);
    let r = RightComodule::regular(&Coalgebra::grouplike(&f, 2));
    assert_eq!(generated_subcomodule(&r, &[vec![f.one(), f.zero()]]).unwrap().0.dim(), 1);
    assert_eq!(generated_subcomodule(&r, &[vec![f.one(), f.one()]]).unwrap().0.dim(), 2);
    assert_eq!(generated_subcomodule(&r, &[vec![f.zero(), f.zero()]]).unwrap().0.dim(), 0);
}
