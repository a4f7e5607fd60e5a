use algmod::samples;
use algmod::*;
use exactla::{all_vectors, Field, Mat, Subspace};

fn t(f: &Field, n: usize) -> Algebra {
    Algebra::truncated_poly(f, n)
}

fn quotient_map(f: &Field) -> AlgebraMorphism {
    AlgebraMorphism::new(&t(f, 3), &t(f, 2), Mat::from_i64(f, 2, 3, &[1, 0, 0, 0, 1, 0])).unwrap()
}

fn trivial(f: &Field, a: &Algebra, side: Side) -> Module {
    let mut chi = vec![f.zero(); a.dim()];
    chi[0] = f.one();
    Module::from_character(a, side, &chi).unwrap()
}

#[test]
fn restriction_examples() {
    let f = Field::Gf(3);
    let a = t(&f, 3);
    let m = Module::regular(&a, Side::Right);
    assert_eq!(restrict(&AlgebraMorphism::identity(&a), &m).unwrap(), m);
    let r = restrict(&AlgebraMorphism::unit_of(&a), &m).unwrap();
    assert_eq!(r.dim(), 3);
    assert!(r.op(0).is_identity());
    // x^2 -> x^3 is not a morphism K[x]/x^2 -> K[x]/x^3 when x -> x; the
    // quotient map goes the other way, so restricting a K[x]/x^3-module
    // along it is an algebra mismatch
    assert!(matches!(restrict(&quotient_map(&f), &m), Err(AlgError::Mismatch(_))));
}

#[test]
fn extension_examples() {
    for f in [Field::Gf(2), Field::Q] {
        let id = AlgebraMorphism::identity(&t(&f, 3));
        let m = Module::regular(&t(&f, 3), Side::Right);
        assert_eq!(extend(&id, &m).unwrap().module.dim(), 3);
        for (_, al) in samples::morphisms(&f) {
            let free = Module::regular(&al.source, Side::Right);
            assert_eq!(extend(&al, &free).unwrap().module.dim(), al.target.dim());
        }
        let q = quotient_map(&f);
        assert_eq!(extend(&q, &m).unwrap().module.dim(), 2);
    }
}

/// Along a surjection `A -> A/I`, extension is `M / M I`.
#[test]
fn extension_along_surjection_is_quotient_by_ideal() {
    let f = Field::Gf(2);
    let q = quotient_map(&f);
    let ker = q.map.kernel_basis();
    for side in [Side::Right, Side::Left] {
        for m in samples::modules(&q.source, side) {
            let mut imgs = Vec::new();
            for col in ker.columns() {
                imgs.extend(m.act(&col).columns());
            }
            let mi = m.generated(&imgs).unwrap();
            assert_eq!(extend(&q, &m).unwrap().module.dim(), m.dim() - mi.dim());
        }
    }
}

#[test]
fn coextension_examples() {
    let f = Field::Gf(2);
    let q = quotient_map(&f);
    let k = trivial(&f, &q.source, Side::Right);
    let c = coextend(&q, &k).unwrap();
    assert_eq!(c.module.dim(), 1);
    // brute force: A-linear maps K[x]/x^2 -> K with K[x]/x^2 an A-module through q
    let b_ops: Vec<Mat> = (0..3).map(|a| q.target.right_mult_by(&q.map.column(a))).collect();
    let count = all_vectors(&f, 2)
        .unwrap()
        .into_iter()
        .filter(|v| {
            let h = Mat::from_vec(&f, 1, 2, v);
            b_ops.iter().zip(k.ops()).all(|(b, n)| h.mul(b) == n.mul(&h))
        })
        .count();
    assert_eq!(count, 1 << c.module.dim());
    let zero = Module::zero(&q.source, Side::Right);
    assert_eq!(coextend(&q, &zero).unwrap().module.dim(), 0);
    let id = AlgebraMorphism::identity(&q.source);
    assert_eq!(coextend(&id, &Module::regular(&q.source, Side::Right)).unwrap().module.dim(), 3);
}

#[test]
fn hom_examples_against_enumeration() {
    let f = Field::Gf(2);
    let a = t(&f, 2);
    let reg = Module::regular(&a, Side::Right);
    let k = trivial(&f, &a, Side::Right);
    let basis = hom_modules(&reg, &k).unwrap();
    assert_eq!(basis.len(), 1);
    let brute = all_vectors(&f, 2)
        .unwrap()
        .into_iter()
        .filter(|v| is_module_map(&reg, &k, &Mat::from_vec(&f, 1, 2, v)))
        .count();
    assert_eq!(brute, 2);
    let g = Algebra::ground(&f);
    let ka = Module::free(&g, Side::Left, 2);
    let kb = Module::free(&g, Side::Left, 3);
    assert_eq!(hom_modules(&ka, &kb).unwrap().len(), 6);
    let ends = hom_modules(&reg, &reg).unwrap();
    let span = Mat::from_columns(&f, 4, &ends.iter().map(Mat::vec).collect::<Vec<_>>());
    assert!(span.solve(&Mat::identity(&f, 2).vec()).is_some());
}

#[test]
fn adjunctions_on_the_sample_corpus() {
    let mut triples = 0;
    for f in [Field::Gf(2), Field::Gf(3), Field::Q] {
        for (name, al) in samples::morphisms(&f) {
            for side in [Side::Right, Side::Left] {
                let ms = samples::modules(&al.source, side);
                let ns = samples::modules(&al.target, side);
                for m in ms.iter().take(3) {
                    for n in ns.iter().take(3) {
                        let c = certify_extend_restrict(&al, m, n).unwrap();
                        assert!(c.holds(), "extend/restrict along {name}: {c:?}");
                        let c = certify_restrict_coextend(&al, n, m).unwrap();
                        assert!(c.holds(), "restrict/coextend along {name}: {c:?}");
                        triples += 1;
                    }
                }
            }
        }
    }
    assert!(triples >= 20);
}

/// extend is right exact, restrict exact, coextend left exact, checked on
/// `0 -> S -> R -> R/S -> 0` for cyclic submodules `S` of the regular module.
#[test]
fn exactness_on_short_exact_sequences() {
    for f in [Field::Gf(2), Field::Q] {
        for (name, al) in samples::morphisms(&f) {
            let a = &al.source;
            let reg = Module::regular(a, Side::Right);
            for i in 0..a.dim() {
                let s = reg.generated(&[Mat::unit_vector(&f, a.dim(), i)]).unwrap();
                let (sub, inc) = reg.submodule(&s).unwrap();
                let (quo, q) = reg.quotient(&s).unwrap();
                let (es, er, eq) = (extend(&al, &sub).unwrap(), extend(&al, &reg).unwrap(), extend(&al, &quo).unwrap());
                let ei = extend_map(&es, &er, &inc);
                let ep = extend_map(&er, &eq, &q.projection);
                assert!(ep.is_surjective(), "{name}");
                assert_eq!(exactla::kernel(&ep), exactla::image(&ei), "{name}");
                let (cs, cr, cq) = (coextend(&al, &sub).unwrap(), coextend(&al, &reg).unwrap(), coextend(&al, &quo).unwrap());
                let ci = coextend_map(&cs, &cr, &inc);
                let cp = coextend_map(&cr, &cq, &q.projection);
                assert!(ci.is_injective(), "{name}");
                assert_eq!(exactla::kernel(&cp), exactla::image(&ci), "{name}");
            }
            let b = &al.target;
            let rb = Module::regular(b, Side::Right);
            for i in 0..b.dim() {
                let s = rb.generated(&[Mat::unit_vector(&f, b.dim(), i)]).unwrap();
                let (sub, inc) = rb.submodule(&s).unwrap();
                let rs = restrict(&al, &sub).unwrap();
                let rr = restrict(&al, &rb).unwrap();
                assert!(is_module_map(&rs, &rr, &inc));
            }
        }
    }
}

#[test]
fn fp_generation_examples() {
    let f = Field::Q;
    let j = Mat::from_i64(&f, 3, 3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
    let a = FPAlgebraAction::new(&f, 1, vec![NcPolynomial::monomial(&f, vec![0, 0, 0])], 3, vec![j]).unwrap();
    assert!(fp_submodule_generated(&a, &[vec![f.zero(); 3]]).unwrap().is_zero());
    assert!(fp_submodule_generated(&a, &[Mat::unit_vector(&f, 3, 2)]).unwrap().is_full());
    assert_eq!(fp_submodule_generated(&a, &[Mat::unit_vector(&f, 3, 0)]).unwrap(), Subspace::coordinate(&f, 3, &[0]));
    assert!(fp_submodule_generated(&a, &[vec![f.one(); 4]]).is_err());
}
