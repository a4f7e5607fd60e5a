use exactla::{LinearSystem, Mat, Term};

use crate::{AlgError, Module};

/// Result of the splitting test for the free cover `A^n -> M` that sends
/// the `k`-th generator to the `k`-th basis vector of `M`.
#[derive(Clone, Debug)]
pub struct Projectivity {
    pub projective: bool,
    /// The cover `A^n -> M`, column `k * dim A + a` holding `e_a` acting on `m_k`.
    pub cover: Mat,
    /// A module map `s: M -> A^n` with `cover * s = id`, when one exists.
    pub splitting: Option<Mat>,
}

pub fn free_cover(m: &Module) -> (Module, Mat) {
    let a = m.algebra();
    let f = m.field();
    let (n, d) = (m.dim(), a.dim());
    let free = Module::free(a, m.side(), n);
    let cover = Mat::from_fn(f, n, n * d, |i, c| m.op(c % d).get(i, c / d).clone());
    (free, cover)
}

pub fn is_projective(m: &Module) -> Projectivity {
    let (free, cover) = free_cover(m);
    let f = m.field();
    if m.dim() == 0 {
        return Projectivity { projective: true, cover, splitting: Some(Mat::zeros(f, 0, 0)) };
    }
    let mut sys = LinearSystem::new(f);
    let s = sys.add_block(free.dim(), m.dim());
    for a in 0..m.algebra().dim() {
        sys.add_equation(&[Term::new(f, None, s, Some(m.op(a))), Term::negated(f, Some(free.op(a)), s, None)])
            .expect("shapes agree");
    }
    sys.add_equation_rhs(&[Term::new(f, Some(&cover), s, None)], Some(&Mat::identity(f, m.dim())))
        .expect("shapes agree");
    let splitting = sys.solve_one().map(|mut v| v.remove(0));
    Projectivity { projective: splitting.is_some(), cover, splitting }
}

/// Injective iff the dual module is projective.
pub fn is_injective(m: &Module) -> Projectivity {
    is_projective(&m.dual())
}

/// Checks that a claimed splitting really is one.
pub fn verify_splitting(m: &Module, p: &Projectivity) -> Result<bool, AlgError> {
    let Some(s) = &p.splitting else { return Ok(false) };
    let (free, _) = free_cover(m);
    Ok(crate::is_module_map(m, &free, s) && p.cover.mul(s).is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Algebra, Side};
    use exactla::Field;

    #[test]
    fn free_is_projective_trivial_is_not() {
        let f = Field::Gf(2);
        let a = Algebra::truncated_poly(&f, 2);
        for side in [Side::Left, Side::Right] {
            let r = Module::regular(&a, side);
            let p = is_projective(&r);
            assert!(p.projective);
            assert!(verify_splitting(&r, &p).unwrap());
            let k = Module::from_character(&a, side, &[f.one(), f.zero()]).unwrap();
            assert!(!is_projective(&k).projective);
            assert!(is_injective(&r).projective);
            assert!(!is_injective(&k).projective);
        }
    }

    #[test]
    fn semisimple_modules_are_projective() {
        let f = Field::Q;
        let a = Algebra::matrix(&f, 2);
        let r = Module::regular(&a, Side::Left);
        let (col, _) = r.submodule(&r.generated(&[Mat::unit_vector(&f, 4, 0)]).unwrap()).unwrap();
        assert_eq!(col.dim(), 2);
        assert!(is_projective(&col).projective);
    }
}
