//! Small pairings and modules for tests and the corpus.

use algmod::{Algebra, AlgebraMorphism, FPAlgebraAction, Module, Side};
use coalg::{Coalgebra, CoalgebraMorphism};
use exactla::{Field, Mat};
use repcat::{AlgebraRep, CoalgebraRep, FinitePoset};

use crate::{ActionData, RationalPairing, RepPairing};

/// `(DP(2), K[x])` with `phi(c_i (x) x^j) = delta_ij`.
pub fn dp2_kx(f: &Field) -> RationalPairing {
    let dp = Coalgebra::divided_power(f, 2);
    RationalPairing::presented_from_generators(&dp, vec![], &[vec![f.zero(), f.one()]]).expect("valid pairing")
}

/// `K[x]` acting on `K^n` through `x -> m`.
pub fn kx_module(f: &Field, m: Mat) -> ActionData {
    let d = m.shape().0;
    ActionData::Presented(FPAlgebraAction::new(f, 1, vec![], d, vec![m]).expect("no relations"))
}

pub fn jordan(f: &Field, n: usize) -> Mat {
    Mat::from_fn(f, n, n, |i, j| if j == i + 1 { f.one() } else { f.zero() })
}

/// `(K, K[x]/x^2)` through `x -> 0`.
pub fn ground_truncated(f: &Field) -> RationalPairing {
    let k = Coalgebra::ground(f);
    RationalPairing::finite(&k, &Algebra::truncated_poly(f, 2), Mat::from_i64(f, 1, 2, &[1, 0])).expect("valid pairing")
}

/// Chain `0 < 1`, coalgebras `K = K`, algebras `K[x]/x^2 -> K` over the
/// opposite chain, fiber `1` paired through `x -> 0`.
pub fn chain_pairing(f: &Field) -> RepPairing {
    let k = Coalgebra::ground(f);
    let crep = CoalgebraRep::constant(FinitePoset::chain(2), &k);
    let t2 = Algebra::truncated_poly(f, 2);
    let ka = Algebra::ground(f);
    let quot = AlgebraMorphism::new(&t2, &ka, Mat::from_i64(f, 1, 2, &[1, 0])).expect("x -> 0");
    let op = FinitePoset::chain(2).opposite();
    let arep = AlgebraRep::from_covers(op, vec![ka.clone(), t2], [((1, 0), quot)].into()).expect("arrow");
    let pairings = vec![RationalPairing::finite(&k, &ka, Mat::identity(f, 1)).expect("identity"), ground_truncated(f)];
    RepPairing::new(crep, arep, pairings).expect("compatible")
}

/// Evaluation pairings along a few coalgebra representations.
pub fn evaluation_pairings(f: &Field) -> Vec<(String, RepPairing)> {
    repcat::samples::coalgebra_reps(f).into_iter().map(|(n, r)| (n, RepPairing::evaluation(&r))).collect()
}

/// Cocommutative morphisms for base change.
pub fn cocommutative_morphisms(f: &Field) -> Vec<(String, CoalgebraMorphism)> {
    let kg2 = Coalgebra::grouplike(f, 2);
    let kg3 = Coalgebra::grouplike(f, 3);
    let dp2 = Coalgebra::divided_power(f, 2);
    vec![
        ("id DP2".into(), CoalgebraMorphism::identity(&dp2)),
        ("KG2 -> K".into(), CoalgebraMorphism::counit_of(&kg2)),
        ("DP2 -> K".into(), CoalgebraMorphism::counit_of(&dp2)),
        ("DP1 -> DP2".into(), CoalgebraMorphism::divided_power_inclusion(f, 1, 2)),
        ("DP2 -> DP3".into(), CoalgebraMorphism::divided_power_inclusion(f, 2, 3)),
        ("KG3 -> K".into(), CoalgebraMorphism::counit_of(&kg3)),
    ]
}

/// Left modules over a finite algebra, for rationalization.
pub fn left_modules(a: &Algebra) -> Vec<ActionData> {
    algmod::samples::modules(a, Side::Left).into_iter().map(ActionData::Module).collect::<Vec<_>>()
}

pub fn regular(a: &Algebra) -> ActionData {
    ActionData::Module(Module::regular(a, Side::Left))
}
