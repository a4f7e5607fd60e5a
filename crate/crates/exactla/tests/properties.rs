use exactla::*;
use proptest::prelude::*;

fn gf_mat(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec(0..p, rows * cols).prop_map(move |v| {
        let f = Field::Gf(p);
        let s: Vec<Scalar> = v.into_iter().map(Scalar::Gf).collect();
        Mat::from_vec(&f, rows, cols, &s)
    })
}

fn q_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    proptest::collection::vec((-4i64..5, 1i64..4), rows * cols).prop_map(move |v| {
        let f = Field::Q;
        let s: Vec<Scalar> = v.into_iter().map(|(n, d)| f.from_ratio(n, d).unwrap()).collect();
        Mat::from_vec(&f, rows, cols, &s)
    })
}

fn shaped() -> impl Strategy<Value = (usize, usize)> {
    (0usize..5, 0usize..5)
}

proptest! {
    #[test]
    fn rank_nullity_gf((r, c) in shaped(), seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let f = Field::Gf(p);
        let m = Mat::from_fn(&f, r, c, |i, j| Scalar::Gf(seed.wrapping_mul(31 + i as u64 * 7 + j as u64 * 13).rotate_left((i * 5 + j) as u32) % p));
        prop_assert_eq!(kernel(&m).dim() + image(&m).dim(), c);
        prop_assert!(m.mul(kernel(&m).basis()).is_zero());
    }

    #[test]
    fn rank_nullity_q(m in q_mat(3, 4)) {
        prop_assert_eq!(kernel(&m).dim() + m.rank(), 4);
        let q = coequalizer(&m, &Mat::zeros(&Field::Q, 3, 4)).unwrap();
        prop_assert_eq!(q.dim(), 3 - m.rank());
    }

    #[test]
    fn tensor_is_functorial(a in gf_mat(5, 2, 3), b in gf_mat(5, 3, 2), c in gf_mat(5, 2, 2), d in gf_mat(5, 2, 3)) {
        let lhs = tensor(&a, &c).unwrap().mul(&tensor(&b, &d).unwrap());
        let rhs = tensor(&a.mul(&b), &c.mul(&d)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_is_an_involution(m in q_mat(2, 3)) {
        prop_assert_eq!(dual(&dual(&m)), m.clone());
        prop_assert_eq!(dual(&m).rank(), m.rank());
    }

    #[test]
    fn equalizer_is_kernel_of_difference(a in gf_mat(3, 3, 3), b in gf_mat(3, 3, 3)) {
        prop_assert_eq!(equalizer(&a, &b).unwrap(), kernel(&a.sub(&b)));
        let q = coequalizer(&a, &b).unwrap();
        prop_assert_eq!(q.dim(), 3 - image(&a.sub(&b)).dim());
        prop_assert!(q.projection.mul(&a).sub(&q.projection.mul(&b)).is_zero());
        prop_assert!(q.projection.mul(&q.section).is_identity());
    }

    #[test]
    fn solve_returns_preimages(m in q_mat(3, 3), x in q_mat(3, 1)) {
        let b = m.mul(&x).column(0);
        let y = solve(&m, &b).unwrap().unwrap();
        prop_assert_eq!(m.apply(&y), b);
    }

    #[test]
    fn preimage_and_image_are_adjoint(m in gf_mat(2, 3, 3), s in gf_mat(2, 3, 2)) {
        let w = Subspace::span(&s);
        let pre = w.preimage_under(&m);
        prop_assert!(w.contains_subspace(&pre.image_under(&m)));
        let all = all_vectors(&Field::Gf(2), 3).unwrap();
        let brute = all.iter().filter(|v| w.contains(&m.apply(v))).count();
        prop_assert_eq!(brute, 1usize << pre.dim());
    }
}
