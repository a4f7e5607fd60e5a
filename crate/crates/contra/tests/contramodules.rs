use algmod::Side;
use coalg::{samples as co, Coalgebra, CoalgebraMorphism, RightComodule};
use contra::samples;
use contra::*;
use exactla::{all_vectors, Field, Mat};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![Field::Gf(2), Field::Gf(5), Field::Q]
}

#[test]
fn corpus_contramodules_are_valid_and_mutations_fail() {
    for f in fields() {
        let mut failures = 0;
        for (name, c) in co::coalgebras(&f) {
            for m in samples::contramodules(&c) {
                assert!(m.check().is_empty(), "{name}");
                for (what, bad) in samples::mutated_contramodules(&m) {
                    let v = bad.check();
                    assert!(!v.is_empty(), "{name}: {what}");
                    assert!(v.iter().all(|x| !x.witness.is_empty()));
                    failures += 1;
                }
            }
        }
        assert!(failures >= 10);
    }
}

#[test]
fn doubling_pi_over_q_breaks_the_counit() {
    let f = Field::Q;
    for (_, c) in co::coalgebras(&f) {
        let t = Contramodule::free(&c, 1);
        let bad = Contramodule::unchecked(&c, t.dim(), t.pi().scale(&f.from_i64(2))).unwrap();
        assert!(bad.check().iter().any(|v| v.law == "contraction counit"));
    }
}

#[test]
fn free_contramodules() {
    for f in fields() {
        for (_, c) in co::coalgebras(&f) {
            assert_eq!(Contramodule::free(&c, 1).dim(), c.dim());
            assert_eq!(Contramodule::free(&c, 1).to_module(), algmod::Module::regular(&c.dual_algebra(), Side::Left));
        }
        let k = Coalgebra::ground(&f);
        let t = Contramodule::free(&k, 3);
        assert!(t.pi().is_identity());
        let dp2 = Coalgebra::divided_power(&f, 2);
        let cert = certify_free_adjunction(2, &Contramodule::free(&dp2, 1)).unwrap();
        assert_eq!((cert.hom_left, cert.hom_right), (4, 4));
        assert!(cert.holds());
    }
}

#[test]
fn free_adjunction_on_the_corpus() {
    let mut n = 0;
    for f in fields() {
        for (name, c) in co::coalgebras(&f) {
            for m in samples::contramodules(&c).iter().take(3) {
                for v in 0..3 {
                    let cert = certify_free_adjunction(v, m).unwrap();
                    assert!(cert.holds(), "{name}: {cert:?}");
                    n += 1;
                }
            }
        }
    }
    assert!(n >= 20);
}

#[test]
fn direct_sums_of_frees_are_free() {
    for f in fields() {
        for (_, c) in co::coalgebras(&f) {
            for (v, w) in [(1, 1), (1, 2), (0, 2)] {
                let sum = Contramodule::free(&c, v).direct_sum(&Contramodule::free(&c, w)).unwrap();
                assert_eq!(sum, Contramodule::free(&c, v + w));
            }
        }
    }
}

#[test]
fn module_bridge_round_trips() {
    for f in fields() {
        for (_, c) in co::coalgebras(&f) {
            for m in samples::contramodules(&c) {
                let md = m.to_module();
                assert!(md.check().is_empty());
                assert_eq!(Contramodule::from_module(&c, &md).unwrap(), m);
            }
        }
        let k = Coalgebra::ground(&f);
        let m = Contramodule::free(&k, 2);
        assert!(m.to_module().ops()[0].is_identity());
    }
}

#[test]
fn hom_spaces_match_enumeration() {
    let f = Field::Gf(2);
    for (_, c) in co::coalgebras(&f).into_iter().filter(|(_, c)| c.dim() <= 3) {
        let ms = samples::contramodules(&c);
        for m in &ms {
            for n in &ms {
                if m.dim() * n.dim() > 9 {
                    continue;
                }
                let basis = hom_contra(m, n).unwrap();
                let brute = all_vectors(&f, m.dim() * n.dim())
                    .unwrap()
                    .into_iter()
                    .filter(|v| is_contra_map(m, n, &Mat::from_vec(&f, n.dim(), m.dim(), v)))
                    .count();
                assert_eq!(brute, 1 << basis.len());
            }
        }
    }
}

#[test]
fn contramodule_morphisms_are_checked() {
    let f = Field::Gf(3);
    let c = Coalgebra::divided_power(&f, 2);
    let t = Contramodule::free(&c, 1);
    assert!(ContraMorphism::new(&t, &t, Mat::identity(&f, 2)).is_ok());
    assert!(ContraMorphism::new(&t, &t, Mat::from_i64(&f, 2, 2, &[1, 0, 0, 0])).is_err());
}

fn random_map(f: &Field, rows: usize, cols: usize, seed: &[i64]) -> Mat {
    Mat::from_fn(f, rows, cols, |i, j| f.from_i64(seed[(i * cols + j) % seed.len()]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Any linear `V -> T_C(W)` extends to a contramodule map `T_C(V) -> T_C(W)`.
    #[test]
    fn free_extension_of_linear_maps(v in 1usize..3, w in 1usize..3, which in 0usize..4, seed in prop::collection::vec(-3i64..4, 1..12)) {
        let f = Field::Gf(5);
        let c = [Coalgebra::grouplike(&f, 2), Coalgebra::divided_power(&f, 3), Coalgebra::matrix(&f, 2), Coalgebra::ground(&f)][which].clone();
        let (tv, tw) = (Contramodule::free(&c, v), Contramodule::free(&c, w));
        let h = random_map(&f, tw.dim(), v, &seed);
        let ext = tw.pi().mul(&h.kron(&Mat::identity(&f, c.dim())));
        prop_assert!(is_contra_map(&tv, &tw, &ext));
        prop_assert_eq!(ext.mul(&free_unit(&c, v)), h);
    }

    /// `T(g) = g (x) id` is a contramodule map for every linear `g`.
    #[test]
    fn free_functor_on_maps(v in 0usize..3, w in 0usize..3, seed in prop::collection::vec(-3i64..4, 1..9)) {
        let f = Field::Q;
        let c = Coalgebra::divided_power(&f, 3);
        let g = random_map(&f, w, v, &seed);
        let tg = g.kron(&Mat::identity(&f, c.dim()));
        prop_assert!(is_contra_map(&Contramodule::free(&c, v), &Contramodule::free(&c, w), &tg));
    }
}

#[test]
fn cohom_from_the_coalgebra_is_the_contramodule() {
    for f in fields() {
        for (_, c) in co::coalgebras(&f) {
            for m in samples::contramodules(&c) {
                let q = cohom_contra(&RightComodule::regular(&c), &m).unwrap();
                assert_eq!(q.dim(), m.dim());
                // the contraction itself descends to the isomorphism
                assert!(q.descend(m.pi()).unwrap().is_invertible());
            }
            let t = Contramodule::free(&c, 1);
            assert_eq!(cohom_contra(&RightComodule::zero(&c), &t).unwrap().dim(), 0);
        }
        let k = Coalgebra::ground(&f);
        let p = RightComodule::trivial_at(&k, 2, &[f.one()]).unwrap();
        assert_eq!(cohom_contra(&p, &Contramodule::free(&k, 3)).unwrap().dim(), 6);
    }
}

#[test]
fn dp3_trivial_contramodule() {
    let f = Field::Gf(3);
    let dp3 = Coalgebra::divided_power(&f, 3);
    let one = RightComodule::trivial_at(&dp3, 1, &Mat::unit_vector(&f, 3, 0)).unwrap();
    let k = Contramodule::from_module(&dp3, &one.to_module()).unwrap();
    assert!(k.check().is_empty());
    let al = CoalgebraMorphism::divided_power_inclusion(&f, 2, 3);
    let a = contraextend_by_presentation(&al, &k).unwrap();
    let b = contraextend_by_cohom(&al, &k).unwrap();
    assert_eq!(a.contramodule.dim(), b.contramodule.dim());
    assert_eq!(a.contramodule.dim(), 1);
}
