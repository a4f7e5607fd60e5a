//! Free contramodules, contrarestriction, contraextension and Cohom.
//!
//! Every `Hom(X, M)` is stored as `M (x) X*` with `M` major.

use algmod::{transposition_rank, AdjunctionCertificate};
use coalg::{is_sigma_injective, source_as_right, CoalgebraMorphism, RightComodule};
use exactla::{coequalizer, swap_matrix, Mat, Quotient, Subspace};

use crate::{hom_contra, ContraError, Contramodule};

/// `V -> T_C(V)`, `v -> v (x) eps`.
pub fn free_unit(c: &coalg::Coalgebra, v_dim: usize) -> Mat {
    Mat::identity(c.field(), v_dim).kron(&c.eps().transpose())
}

/// `Hom_contra(T_C(V), M) = Hom_K(V, M)` at `(V, M)`; the triangles are
/// `pi_{T V} T(eta_V) = id` and `pi_M eta_M = id`.
pub fn certify_free_adjunction(v_dim: usize, m: &Contramodule) -> Result<AdjunctionCertificate, ContraError> {
    let c = m.coalgebra();
    let f = c.field();
    let t = Contramodule::free(c, v_dim);
    let left = hom_contra(&t, m)?;
    let eta = free_unit(c, v_dim);
    let rank = transposition_rank(&left, None, Some(&eta));
    let right = v_dim * m.dim();
    let t_eta = eta.kron(&Mat::identity(f, c.dim()));
    let tt = Contramodule::free(c, t.dim());
    let t1 = t.pi().mul(&t_eta).is_identity() && crate::is_contra_map(&t, &tt, &t_eta);
    let t2 = m.pi().mul(&free_unit(c, m.dim())).is_identity();
    Ok(AdjunctionCertificate {
        hom_left: left.len(),
        hom_right: right,
        bijection: rank == left.len() && rank == right,
        triangle_left: t1,
        triangle_right: t2,
    })
}

/// `pi' = pi (id (x) alpha^T)`.
pub fn contrarestrict(alpha: &CoalgebraMorphism, m: &Contramodule) -> Result<Contramodule, ContraError> {
    if *m.coalgebra() != alpha.source {
        return Err(ContraError::Mismatch("contrarestrict: contramodule is not over the source coalgebra".into()));
    }
    let pi = m.pi().mul(&Mat::identity(m.field(), m.dim()).kron(&alpha.map.transpose()));
    Contramodule::unchecked(&alpha.target, m.dim(), pi)
}

/// `Cohom_C(P, M)`: the quotient of `Hom(P, M) = M (x) P*` by the
/// relations `phi rho_P ~ pi_M phi` for `phi` in `Hom(P (x) C, M)`.
pub fn cohom_contra(p: &RightComodule, m: &Contramodule) -> Result<Quotient, ContraError> {
    let c = m.coalgebra();
    if p.coalgebra() != c {
        return Err(ContraError::Mismatch("cohom: comodule and contramodule over different coalgebras".into()));
    }
    let f = c.field();
    let (dm, dp, d) = (m.dim(), p.dim(), c.dim());
    let idm = Mat::identity(f, dm);
    let via_rho = idm.kron(&p.rho().transpose());
    let via_pi = m.pi().kron(&Mat::identity(f, dp)).mul(&idm.kron(&swap_matrix(f, dp, d)));
    Ok(coequalizer(&via_rho, &via_pi)?)
}

/// The contraextension of `M` on a quotient of `M (x) C*`, acted on by `id (x) L_x`.
#[derive(Clone, Debug)]
pub struct Contraextension {
    pub contramodule: Contramodule,
    pub carrier: Quotient,
}

fn relations_by_presentation(alpha: &CoalgebraMorphism, m: &Contramodule) -> Subspace {
    // T_D(M) -> M is onto with kernel K; push K into T_C(M) and close up
    let c = &alpha.source;
    let f = c.field();
    let k = exactla::kernel(m.pi());
    let pushed = Mat::identity(f, m.dim()).kron(&alpha.map.transpose()).mul(k.basis());
    let cs = c.dual_algebra();
    let idm = Mat::identity(f, m.dim());
    let mut rel = Vec::new();
    for x in 0..c.dim() {
        rel.extend(idm.kron(&cs.left_mult(x)).mul(&pushed).columns());
    }
    Subspace::span_vectors(f, m.dim() * c.dim(), &rel)
}

fn finish(alpha: &CoalgebraMorphism, dm: usize, q: Quotient) -> Contraextension {
    let c = &alpha.source;
    let f = c.field();
    let cs = c.dual_algebra();
    let idm = Mat::identity(f, dm);
    let ops: Vec<Mat> = (0..c.dim()).map(|x| q.projection.mul(&idm.kron(&cs.left_mult(x))).mul(&q.section)).collect();
    Contraextension { contramodule: Contramodule::from_ops(c, q.dim(), &ops), carrier: q }
}

/// Through a free presentation: `T_D(ker pi_M) -> T_D(M) -> M -> 0`
/// sent to `T_C(ker pi_M) -> T_C(M)`.
pub fn contraextend_by_presentation(alpha: &CoalgebraMorphism, m: &Contramodule) -> Result<Contraextension, ContraError> {
    if *m.coalgebra() != alpha.target {
        return Err(ContraError::Mismatch("contraextend: contramodule is not over the target coalgebra".into()));
    }
    Ok(finish(alpha, m.dim(), Quotient::of(&relations_by_presentation(alpha, m))))
}

/// As `Cohom_D(C, M)`, with `C` a right `D`-comodule through `alpha`.
pub fn contraextend_by_cohom(alpha: &CoalgebraMorphism, m: &Contramodule) -> Result<Contraextension, ContraError> {
    if *m.coalgebra() != alpha.target {
        return Err(ContraError::Mismatch("contraextend: contramodule is not over the target coalgebra".into()));
    }
    let q = cohom_contra(&source_as_right(alpha), m)?;
    Ok(finish(alpha, m.dim(), q))
}

/// Both constructions, which must produce the same relations.
pub fn contraextend(alpha: &CoalgebraMorphism, m: &Contramodule) -> Result<Contraextension, ContraError> {
    let a = contraextend_by_presentation(alpha, m)?;
    let b = contraextend_by_cohom(alpha, m)?;
    if a.carrier.relations != b.carrier.relations {
        return Err(ContraError::Inconsistent("contraextension: presentation and cohom disagree".into()));
    }
    Ok(b)
}

/// `m -> [m (x) eps]`, from `M` to the contrarestriction of its contraextension.
pub fn contraextend_unit(alpha: &CoalgebraMorphism, m: &Contramodule, ext: &Contraextension) -> Mat {
    let c = &alpha.source;
    ext.carrier.projection.mul(&free_unit(c, m.dim()))
}

/// `[n (x) x] -> P_x n`.
pub fn contraextend_counit(alpha: &CoalgebraMorphism, n: &Contramodule) -> Result<Mat, ContraError> {
    let ext = contraextend(alpha, &contrarestrict(alpha, n)?)?;
    Ok(ext.carrier.descend(n.pi())?)
}

/// `[m (x) x] -> [g m (x) x]`.
pub fn contraextend_map(src: &Contraextension, tgt: &Contraextension, g: &Mat) -> Mat {
    let d = src.contramodule.coalgebra().dim();
    tgt.carrier.projection.mul(&g.kron(&Mat::identity(g.field(), d))).mul(&src.carrier.section)
}

/// Contraextension left adjoint to contrarestriction at `(M over D, N over C)`.
pub fn certify_contraextend_contrarestrict(
    alpha: &CoalgebraMorphism,
    m: &Contramodule,
    n: &Contramodule,
) -> Result<AdjunctionCertificate, ContraError> {
    let ext = contraextend(alpha, m)?;
    let rn = contrarestrict(alpha, n)?;
    let left = hom_contra(&ext.contramodule, n)?;
    let right = hom_contra(m, &rn)?;
    let eta_m = contraextend_unit(alpha, m, &ext);
    let rank = transposition_rank(&left, None, Some(&eta_m));
    let ext2 = contraextend(alpha, &contrarestrict(alpha, &ext.contramodule)?)?;
    let eps_ext = contraextend_counit(alpha, &ext.contramodule)?;
    let t1 = eps_ext.mul(&contraextend_map(&ext, &ext2, &eta_m)).is_identity();
    let ext_rn = contraextend(alpha, &rn)?;
    let t2 = contraextend_counit(alpha, n)?.mul(&contraextend_unit(alpha, &rn, &ext_rn)).is_identity();
    Ok(AdjunctionCertificate {
        hom_left: left.len(),
        hom_right: right.len(),
        bijection: rank == left.len() && rank == right.len(),
        triangle_left: t1,
        triangle_right: t2,
    })
}

/// `T_C(V)` into the contraextension of `T_D(V)`, `v (x) x -> [(v (x) eps_D) (x) x]`.
pub fn free_extension_comparison(alpha: &CoalgebraMorphism, v_dim: usize) -> Result<(Contraextension, Mat), ContraError> {
    let (c, d) = (&alpha.source, &alpha.target);
    let ext = contraextend(alpha, &Contramodule::free(d, v_dim))?;
    let m = ext.carrier.projection.mul(&free_unit(d, v_dim).kron(&Mat::identity(c.field(), c.dim())));
    Ok((ext, m))
}

/// Contraextension is exact exactly when `C*` is projective as a right
/// `D*`-module, i.e. `C` is injective as a right `D`-comodule.
pub fn contraextension_is_exact(alpha: &CoalgebraMorphism) -> bool {
    is_sigma_injective(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use coalg::Coalgebra;
    use exactla::Field;

    #[test]
    fn cohom_over_the_ground_field_is_hom() {
        let f = Field::Q;
        let k = Coalgebra::ground(&f);
        let p = RightComodule::trivial_at(&k, 2, &[f.one()]).unwrap();
        let m = Contramodule::free(&k, 3);
        assert_eq!(cohom_contra(&p, &m).unwrap().dim(), 6);
        assert_eq!(cohom_contra(&RightComodule::zero(&k), &m).unwrap().dim(), 0);
    }

    #[test]
    fn cohom_from_the_coalgebra_recovers_the_contramodule() {
        let f = Field::Gf(3);
        for c in [Coalgebra::grouplike(&f, 3), Coalgebra::divided_power(&f, 3), Coalgebra::matrix(&f, 2)] {
            let m = Contramodule::free(&c, 2);
            assert_eq!(cohom_contra(&RightComodule::regular(&c), &m).unwrap().dim(), m.dim());
        }
    }

    #[test]
    fn identity_extension_is_the_identity() {
        let f = Field::Gf(2);
        let c = Coalgebra::divided_power(&f, 3);
        let m = Contramodule::free(&c, 1);
        let id = CoalgebraMorphism::identity(&c);
        let e = contraextend(&id, &m).unwrap();
        let eta = contraextend_unit(&id, &m, &e);
        assert!(eta.is_invertible() && crate::is_contra_map(&m, &e.contramodule, &eta));
        assert_eq!(contrarestrict(&id, &m).unwrap(), m);
    }
}
