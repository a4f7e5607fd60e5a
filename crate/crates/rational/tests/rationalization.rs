use algmod::{FPAlgebraAction, Side};
use coalg::samples::coalgebras;
use exactla::{all_subspaces, Field, Mat, Scalar, Subspace};
use rational::samples::*;
use rational::*;

/// A stable subspace is rational when some `rho: V -> V (x) C` realizes
/// the action of every word of length at most `len`.
fn rational_by_solve(p: &RationalPairing, gens: &[Mat], v: &Subspace, len: usize) -> bool {
    let f = p.field();
    let dv = v.dim();
    if dv == 0 {
        return true;
    }
    let dc = p.coalgebra().dim();
    let words = algmod::words_up_to(gens.len(), len);
    let b = v.basis();
    let blocks = dv * dv;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for w in &words {
        let mut m = Mat::identity(f, b.shape().0);
        for &g in w {
            m = m.mul(&gens[g]);
        }
        let a = b.solve_mat(&m.mul(b)).expect("stable");
        let th = p.word_image(w);
        for (k, val) in a.vec().into_iter().enumerate() {
            let mut row = vec![f.zero(); dc * blocks];
            for c in 0..dc {
                row[c * blocks + k] = th[c].clone();
            }
            rows.push(row);
            rhs.push(val);
        }
    }
    Mat::from_rows(f, &rows).unwrap().solve(&rhs).is_some()
}

fn stable(gens: &[Mat], s: &Subspace) -> bool {
    gens.iter().all(|g| s.contains_subspace(&s.image_under(g)))
}

#[test]
fn agrees_with_sum_of_rational_submodules_over_gf2() {
    let f = Field::Gf(2);
    let p = dp2_kx(&f);
    let mut n = 0;
    for d in 1..=3usize {
        let subs = all_subspaces(&f, d).unwrap();
        for bits in 0u32..(1 << (d * d)) {
            let x = Mat::from_fn(&f, d, d, |i, j| if bits >> (i * d + j) & 1 == 1 { f.one() } else { f.zero() });
            let gens = [x.clone()];
            let mut oracle = Subspace::zero(&f, d);
            for s in subs.iter().filter(|s| stable(&gens, s)) {
                if rational_by_solve(&p, &gens, s, d * d + 3) {
                    oracle = oracle.sum(s).unwrap();
                }
            }
            let r = rationalize(&p, &kx_module(&f, x)).unwrap();
            assert_eq!(r.subspace, oracle, "x = {bits:b}");
            n += 1;
        }
    }
    // a sample of 4x4 actions
    let subs = all_subspaces(&f, 4).unwrap();
    for seed in 0u64..40 {
        let bits = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) >> 48;
        let x = Mat::from_fn(&f, 4, 4, |i, j| if bits >> (i * 4 + j) & 1 == 1 { f.one() } else { f.zero() });
        let gens = [x.clone()];
        let mut oracle = Subspace::zero(&f, 4);
        for s in subs.iter().filter(|s| stable(&gens, s)) {
            if rational_by_solve(&p, &gens, s, 20) {
                oracle = oracle.sum(s).unwrap();
            }
        }
        assert_eq!(rationalize(&p, &kx_module(&f, x)).unwrap().subspace, oracle);
        n += 1;
    }
    assert!(n > 500);
}

#[test]
fn finite_algebra_oracle() {
    let f = Field::Gf(2);
    let p = ground_truncated(&f);
    let a = algmod::Algebra::truncated_poly(&f, 2);
    for m in algmod::samples::modules(&a, Side::Left).into_iter().filter(|m| m.dim() <= 4) {
        let gens: Vec<Mat> = m.ops().to_vec();
        let mut oracle = Subspace::zero(&f, m.dim());
        for s in all_subspaces(&f, m.dim()).unwrap().iter().filter(|s| stable(&gens, s)) {
            // words of length one are the basis of A
            let dv = s.dim();
            let ok = dv == 0 || {
                let b = s.basis();
                let xs = b.solve_mat(&gens[1].mul(b)).unwrap();
                xs.is_zero()
            };
            if ok {
                oracle = oracle.sum(s).unwrap();
            }
        }
        assert_eq!(rationalize(&p, &ActionData::Module(m.clone())).unwrap().subspace, oracle);
    }
}

#[test]
fn dual_algebra_modules_are_rational() {
    for f in [Field::Gf(2), Field::Gf(5), Field::Q] {
        for (name, c) in coalgebras(&f) {
            let p = RationalPairing::evaluation(&c);
            let a = c.dual_algebra();
            let mut mods = left_modules(&a);
            mods.push(regular(&a));
            for m in mods {
                let w = torsion_witness(&p, &m).unwrap();
                assert_eq!(w.rational.subspace.dim(), m.dim(), "{name}");
                assert!(w.vanishes());
                assert!(w.rational.comodule.check().is_empty());
            }
        }
    }
}

#[test]
fn idempotent_and_monotone() {
    let f = Field::Gf(3);
    let p = dp2_kx(&f);
    let mats = [
        jordan(&f, 3),
        jordan(&f, 4),
        Mat::identity(&f, 2),
        Mat::from_i64(&f, 3, 3, &[0, 1, 0, 0, 0, 0, 0, 0, 2]),
        Mat::from_i64(&f, 4, 4, &[0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    ];
    for x in mats {
        let n = kx_module(&f, x.clone());
        let r = rationalize(&p, &n).unwrap();
        let rr = rationalize(&p, &r.action).unwrap();
        assert_eq!(rr.subspace.dim(), r.subspace.dim());
        let ActionData::Presented(act) = &n else { unreachable!() };
        for i in 0..act.dim() {
            let mut e = vec![f.zero(); act.dim()];
            e[i] = f.one();
            let sub = algmod::fp_submodule_generated(act, &[e]).unwrap();
            let small = ActionData::Presented(act.restrict_to(&sub).unwrap());
            let rs = rationalize(&p, &small).unwrap();
            let pushed = rs.subspace.image_under(sub.basis());
            assert!(r.subspace.contains_subspace(&pushed));
        }
    }
}

#[test]
fn jordan_exhibit_and_identity() {
    for f in [Field::Gf(3), Field::Q] {
        let w = torsion_witness(&dp2_kx(&f), &kx_module(&f, jordan(&f, 3))).unwrap();
        assert_eq!((w.rational.subspace.dim(), w.quotient_rational.subspace.dim()), (2, 1));
        assert_eq!(w.rational.subspace, exactla::kernel(&jordan(&f, 3).mul(&jordan(&f, 3))));
        assert!(!w.vanishes());
        let id = rationalize(&dp2_kx(&f), &kx_module(&f, Mat::identity(&f, 3))).unwrap();
        assert_eq!(id.subspace.dim(), 0);
    }
}

#[test]
fn relations_are_enforced() {
    let f = Field::Q;
    let dp = coalg::Coalgebra::divided_power(&f, 2);
    let x2 = algmod::NcPolynomial::monomial(&f, vec![0, 0]);
    let p = RationalPairing::presented_from_generators(&dp, vec![x2], &[vec![f.zero(), f.one()]]).unwrap();
    let bad = ActionData::Presented(FPAlgebraAction::new(&f, 1, vec![], 3, vec![jordan(&f, 3)]).unwrap());
    assert!(matches!(rationalize(&p, &bad), Err(RationalError::Mismatch(_))));
    // x^2 = 0 holds for J2
    let good = kx_module(&f, jordan(&f, 2));
    assert!(is_rational(&p, &good).unwrap());
}

/// Quotients and extensions of rational modules are rational over `C*`.
#[test]
fn torsion_class_closure_over_dual_algebras() {
    let f = Field::Gf(3);
    for (_, c) in coalgebras(&f) {
        let p = RationalPairing::evaluation(&c);
        let a = c.dual_algebra();
        for m in left_modules(&a).into_iter().filter(|m| m.dim() <= 6) {
            let ActionData::Module(md) = &m else { unreachable!() };
            for i in 0..md.dim() {
                let mut e = vec![f.zero(); md.dim()];
                e[i] = f.one();
                let s = md.generated(&[e]).unwrap();
                let (sub, _) = md.submodule(&s).unwrap();
                let (quo, _) = md.quotient(&s).unwrap();
                let sub_r = is_rational(&p, &ActionData::Module(sub)).unwrap();
                let quo_r = is_rational(&p, &ActionData::Module(quo)).unwrap();
                let mid_r = is_rational(&p, &m).unwrap();
                assert!(!mid_r || quo_r, "quotient closure");
                assert!(!(sub_r && quo_r) || mid_r, "extension closure");
            }
        }
    }
}
