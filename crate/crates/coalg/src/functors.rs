//! Cotensor products and the functors induced by a coalgebra map
//! `alpha: C -> D`: corestriction `alpha*`, coinduction `alpha_* = - []_D C`
//! and its left partner `alpha^! = C* (x)_{D*} -`.

use algmod::{extend, extend_counit, extend_map, extend_unit, transposition_rank, AdjunctionCertificate, Extension, Module, Side};
use exactla::{equalizer, intertwiners, Mat, Subspace};

use crate::{hom_comodules, CoalgError, CoalgebraMorphism, LeftComodule, RightComodule};

/// `M []_C N` as a subspace of `M (x) N`.
pub fn cotensor(m: &RightComodule, n: &LeftComodule) -> Result<Subspace, CoalgError> {
    if m.coalgebra() != n.coalgebra() {
        return Err(CoalgError::Mismatch("cotensor over different coalgebras".into()));
    }
    let f = m.field();
    let lhs = m.rho().kron(&Mat::identity(f, n.dim()));
    let rhs = Mat::identity(f, m.dim()).kron(n.rho());
    Ok(equalizer(&lhs, &rhs)?)
}

/// The canonical `rho: M -> M []_C C` in coordinates of the cotensor basis.
pub fn cotensor_unit_map(m: &RightComodule) -> Result<(Subspace, Mat), CoalgError> {
    let s = cotensor(m, &LeftComodule::regular(m.coalgebra()))?;
    let map = s
        .basis()
        .solve_mat(m.rho())
        .ok_or_else(|| CoalgError::Mismatch("coaction does not land in the cotensor".into()))?;
    Ok((s, map))
}

/// Same space, coaction pushed along `alpha`.
pub fn corestrict(alpha: &CoalgebraMorphism, m: &RightComodule) -> Result<RightComodule, CoalgError> {
    if *m.coalgebra() != alpha.source {
        return Err(CoalgError::Mismatch("corestrict: comodule is not over the source coalgebra".into()));
    }
    let rho = Mat::identity(m.field(), m.dim()).kron(&alpha.map).mul(m.rho());
    RightComodule::unchecked(&alpha.target, m.dim(), rho)
}

/// `C` as a left `D`-comodule through `alpha`.
pub fn source_as_left(alpha: &CoalgebraMorphism) -> LeftComodule {
    let c = &alpha.source;
    let rho = alpha.map.kron(&Mat::identity(c.field(), c.dim())).mul(c.delta());
    LeftComodule::unchecked(&alpha.target, c.dim(), rho).expect("shape")
}

/// `C` as a right `D`-comodule through `alpha`.
pub fn source_as_right(alpha: &CoalgebraMorphism) -> RightComodule {
    corestrict(alpha, &RightComodule::regular(&alpha.source)).expect("regular comodule")
}

/// `N []_D C` with its inclusion into `N (x) C`.
#[derive(Clone, Debug)]
pub struct Coinduction {
    pub comodule: RightComodule,
    pub inclusion: Mat,
}

/// Coaction on a subspace of `ambient` closed under `ambient_rho`.
fn restricted_coaction(inclusion: &Mat, ambient_rho: &Mat, d: usize) -> Option<Mat> {
    let f = inclusion.field();
    let lifted = inclusion.kron(&Mat::identity(f, d));
    lifted.solve_mat(&ambient_rho.mul(inclusion))
}

pub fn coinduce(alpha: &CoalgebraMorphism, n: &RightComodule) -> Result<Coinduction, CoalgError> {
    if *n.coalgebra() != alpha.target {
        return Err(CoalgError::Mismatch("coinduce: comodule is not over the target coalgebra".into()));
    }
    let c = &alpha.source;
    let f = c.field();
    let sub = cotensor(n, &source_as_left(alpha))?;
    let inc = sub.basis().clone();
    let amb = Mat::identity(f, n.dim()).kron(c.delta());
    let rho = restricted_coaction(&inc, &amb, c.dim())
        .ok_or_else(|| CoalgError::Mismatch("cotensor is not a subcomodule".into()))?;
    Ok(Coinduction { comodule: RightComodule::unchecked(c, sub.dim(), rho)?, inclusion: inc })
}

/// `m -> rho(m)`, from `M` into `alpha_* alpha* M`.
pub fn coinduce_unit(m: &RightComodule, co: &Coinduction) -> Result<Mat, CoalgError> {
    co.inclusion
        .solve_mat(m.rho())
        .ok_or_else(|| CoalgError::Mismatch("coaction does not land in the coinduction".into()))
}

/// `n (x) c -> eps(c) n`, from `alpha* alpha_* N` to `N`.
pub fn coinduce_counit(alpha: &CoalgebraMorphism, n_dim: usize, co: &Coinduction) -> Mat {
    let f = alpha.source.field();
    Mat::identity(f, n_dim).kron(alpha.source.eps()).mul(&co.inclusion)
}

/// `g (x) id` restricted to the coinductions.
pub fn coinduce_map(src: &Coinduction, tgt: &Coinduction, g: &Mat) -> Result<Mat, CoalgError> {
    let d = src.comodule.coalgebra().dim();
    let lifted = g.kron(&Mat::identity(g.field(), d)).mul(&src.inclusion);
    tgt.inclusion.solve_mat(&lifted).ok_or_else(|| CoalgError::Mismatch("map is not a comodule map".into()))
}

/// `Hom_{D*}(C*, N)` as a subspace of `N (x) C` (row-major `dim N x dim C`
/// matrices) together with its left `C*`-module structure
/// `(f F)(g) = F(g f)`.
pub fn coinduce_dual_hom(alpha: &CoalgebraMorphism, n: &RightComodule) -> Result<(Subspace, Module), CoalgError> {
    let c = &alpha.source;
    let f = c.field();
    let cs = c.dual_algebra();
    let dn = n.to_module();
    let at = alpha.dual();
    let c_over_d: Vec<Mat> = (0..alpha.target.dim()).map(|g| cs.left_mult_by(&at.map.column(g))).collect();
    let homs = intertwiners(f, &c_over_d, dn.ops(), c.dim(), n.dim())?;
    let sub = Subspace::span_vectors(f, n.dim() * c.dim(), &homs.iter().map(Mat::vec).collect::<Vec<_>>());
    let basis = sub.basis().clone();
    let ops = (0..c.dim())
        .map(|x| {
            let rx = cs.right_mult(x);
            let imgs: Vec<_> = basis
                .columns()
                .iter()
                .map(|v| Mat::from_vec(f, n.dim(), c.dim(), v).mul(&rx).vec())
                .collect();
            basis.solve_mat(&Mat::from_columns(f, n.dim() * c.dim(), &imgs)).expect("hom space is C*-stable")
        })
        .collect();
    Ok((sub, Module::unchecked(&cs, Side::Left, basis.cols(), ops)?))
}

/// The cotensor and dual-hom constructions of `alpha_* N` agree: same
/// subspace of `N (x) C` (the comparison map is the identity there) and
/// the same `C*`-action.
pub fn coinductions_agree(alpha: &CoalgebraMorphism, n: &RightComodule) -> Result<bool, CoalgError> {
    let co = coinduce(alpha, n)?;
    let (sub, module) = coinduce_dual_hom(alpha, n)?;
    let eq = Subspace::span(&co.inclusion);
    if eq != sub {
        return Ok(false);
    }
    let t = sub.basis().solve_mat(&co.inclusion).expect("same subspace");
    let transported = co.comodule.to_module().transport(&t)?;
    Ok(transported.ops() == module.ops())
}

/// `alpha^! N = C* (x)_{D*} N`.
#[derive(Clone, Debug)]
pub struct Cohom {
    pub comodule: RightComodule,
    pub extension: Extension,
}

pub fn cohom(alpha: &CoalgebraMorphism, n: &RightComodule) -> Result<Cohom, CoalgError> {
    if *n.coalgebra() != alpha.target {
        return Err(CoalgError::Mismatch("cohom: comodule is not over the target coalgebra".into()));
    }
    let ext = extend(&alpha.dual(), &n.to_module())?;
    let comodule = RightComodule::from_module(&alpha.source, &ext.module);
    Ok(Cohom { comodule, extension: ext })
}

/// `n -> [n (x) 1]`.
pub fn cohom_unit(alpha: &CoalgebraMorphism, n: &RightComodule, h: &Cohom) -> Mat {
    extend_unit(&alpha.dual(), &n.to_module(), &h.extension)
}

/// `[w (x) f] -> f w`, from `alpha^! alpha* W` to `W`.
pub fn cohom_counit(alpha: &CoalgebraMorphism, w: &RightComodule) -> Result<Mat, CoalgError> {
    Ok(extend_counit(&alpha.dual(), &w.to_module())?)
}

pub fn cohom_map(src: &Cohom, tgt: &Cohom, g: &Mat) -> Mat {
    extend_map(&src.extension, &tgt.extension, g)
}

/// `alpha* -| alpha_*` at `(M over C, N over D)`.
pub fn certify_corestrict_coinduce(
    alpha: &CoalgebraMorphism,
    m: &RightComodule,
    n: &RightComodule,
) -> Result<AdjunctionCertificate, CoalgError> {
    let am = corestrict(alpha, m)?;
    let co = coinduce(alpha, n)?;
    let left = hom_comodules(&am, n)?;
    let right = hom_comodules(m, &co.comodule)?;
    let eps_n = coinduce_counit(alpha, n.dim(), &co);
    let rank = transposition_rank(&right, Some(&eps_n), None);
    let co_am = coinduce(alpha, &am)?;
    let eta_m = coinduce_unit(m, &co_am)?;
    let t1 = coinduce_counit(alpha, m.dim(), &co_am).mul(&eta_m).is_identity();
    let co2 = coinduce(alpha, &corestrict(alpha, &co.comodule)?)?;
    let eta_co = coinduce_unit(&co.comodule, &co2)?;
    let t2 = coinduce_map(&co2, &co, &eps_n)?.mul(&eta_co).is_identity();
    Ok(AdjunctionCertificate {
        hom_left: left.len(),
        hom_right: right.len(),
        bijection: rank == left.len() && rank == right.len(),
        triangle_left: t1,
        triangle_right: t2,
    })
}

/// `alpha^! -| alpha*` at `(N over D, W over C)`.
pub fn certify_cohom_corestrict(
    alpha: &CoalgebraMorphism,
    n: &RightComodule,
    w: &RightComodule,
) -> Result<AdjunctionCertificate, CoalgError> {
    let h = cohom(alpha, n)?;
    let aw = corestrict(alpha, w)?;
    let left = hom_comodules(&h.comodule, w)?;
    let right = hom_comodules(n, &aw)?;
    let eta_n = cohom_unit(alpha, n, &h);
    let rank = transposition_rank(&left, None, Some(&eta_n));
    let h2 = cohom(alpha, &corestrict(alpha, &h.comodule)?)?;
    let t1 = cohom_counit(alpha, &h.comodule)?.mul(&cohom_map(&h, &h2, &eta_n)).is_identity();
    let h_aw = cohom(alpha, &aw)?;
    let t2 = cohom_counit(alpha, w)?.mul(&cohom_unit(alpha, &aw, &h_aw)).is_identity();
    Ok(AdjunctionCertificate {
        hom_left: left.len(),
        hom_right: right.len(),
        bijection: rank == left.len() && rank == right.len(),
        triangle_left: t1,
        triangle_right: t2,
    })
}
