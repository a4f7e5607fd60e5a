//! Restriction, extension and coextension of scalars along an algebra map,
//! with the units and counits of both adjunctions.
//!
//! Left modules are handled by passing to the opposite algebras, so every
//! carrier below is laid out as `M (x) B` with `M` major.

use exactla::{Mat, Quotient, Subspace};

use crate::{hom_modules, AlgError, AlgebraMorphism, Module, Side};

/// `M` viewed over the source of `alpha`.
pub fn restrict(alpha: &AlgebraMorphism, m: &Module) -> Result<Module, AlgError> {
    if *m.algebra() != alpha.target {
        return Err(AlgError::Mismatch("restrict: module is not over the target algebra".into()));
    }
    let ops = (0..alpha.source.dim()).map(|i| m.act(&alpha.map.column(i))).collect();
    Module::unchecked(&alpha.source, m.side(), m.dim(), ops)
}

fn to_right(alpha: &AlgebraMorphism, m: &Module) -> (AlgebraMorphism, Module) {
    match m.side() {
        Side::Right => (alpha.clone(), m.clone()),
        Side::Left => (alpha.opposite(), m.over_opposite()),
    }
}

fn back(side: Side, target: &crate::Algebra, m: Module) -> Module {
    match side {
        Side::Right => m,
        Side::Left => m.with_algebra(target, Side::Left),
    }
}

/// Extension of scalars together with its presentation as a quotient of
/// `M (x) B`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub module: Module,
    pub carrier: Quotient,
}

/// `M (x)_A B` for right modules, `B (x)_A M` for left ones.
pub fn extend(alpha: &AlgebraMorphism, m: &Module) -> Result<Extension, AlgError> {
    if *m.algebra() != alpha.source {
        return Err(AlgError::Mismatch("extend: module is not over the source algebra".into()));
    }
    let side = m.side();
    let (al, m) = to_right(alpha, m);
    let b = &al.target;
    let f = m.field().clone();
    let (dm, db) = (m.dim(), b.dim());
    let idm = Mat::identity(&f, dm);
    let idb = Mat::identity(&f, db);
    let mut rel = Vec::new();
    for a in 0..al.source.dim() {
        let d = m.op(a).kron(&idb).sub(&idm.kron(&b.left_mult_by(&al.map.column(a))));
        rel.extend(d.columns());
    }
    let q = Quotient::of(&Subspace::span_vectors(&f, dm * db, &rel));
    let ops = (0..db).map(|x| q.projection.mul(&idm.kron(&b.right_mult(x))).mul(&q.section)).collect();
    let module = Module::unchecked(b, Side::Right, q.dim(), ops)?;
    Ok(Extension { module: back(side, &alpha.target, module), carrier: q })
}

/// `m -> [m (x) 1]`, from `M` to the restriction of its extension.
pub fn extend_unit(alpha: &AlgebraMorphism, m: &Module, ext: &Extension) -> Mat {
    let f = m.field();
    ext.carrier.projection.mul(&Mat::identity(f, m.dim()).kron(alpha.target.unit()))
}

/// `[n (x) b] -> n b`, from the extension of the restriction of `N` to `N`.
pub fn extend_counit(alpha: &AlgebraMorphism, n: &Module) -> Result<Mat, AlgError> {
    let rn = restrict(alpha, n)?;
    let ext = extend(alpha, &rn)?;
    let (_, nr) = to_right(alpha, n);
    Ok(ext.carrier.descend(&nr.action())?)
}

/// `[m (x) b] -> [g m (x) b]`.
pub fn extend_map(src: &Extension, tgt: &Extension, g: &Mat) -> Mat {
    let f = g.field();
    let db = src.module.algebra().dim();
    tgt.carrier.projection.mul(&g.kron(&Mat::identity(f, db))).mul(&src.carrier.section)
}

/// Coextension of scalars: `Hom_A(B, N)` with a chosen basis of the hom
/// space; column `i` of `basis` is a row-major `dim N x dim B` matrix.
#[derive(Clone, Debug)]
pub struct Coextension {
    pub module: Module,
    pub basis: Mat,
    pub hom_rows: usize,
    pub hom_cols: usize,
}

impl Coextension {
    /// The linear map `B -> N` with the given coordinates.
    pub fn hom_at(&self, coords: &[exactla::Scalar]) -> Mat {
        let v = self.basis.apply(coords);
        Mat::from_vec(self.basis.field(), self.hom_rows, self.hom_cols, &v)
    }

    /// Coordinates of an `A`-linear `B -> N`.
    pub fn coords_of(&self, h: &Mat) -> Option<Vec<exactla::Scalar>> {
        self.basis.solve(&h.vec())
    }

    fn coords_of_all(&self, columns: &Mat) -> Mat {
        self.basis.solve_mat(columns).expect("maps lie in the hom space")
    }
}

/// `Hom_A(B, N)` with `(F b)(b') = F(b b')` for right modules and
/// `(b F)(b') = F(b' b)` for left ones.
pub fn coextend(alpha: &AlgebraMorphism, n: &Module) -> Result<Coextension, AlgError> {
    if *n.algebra() != alpha.source {
        return Err(AlgError::Mismatch("coextend: module is not over the source algebra".into()));
    }
    let side = n.side();
    let (al, n) = to_right(alpha, n);
    let b = &al.target;
    let f = n.field().clone();
    let (dn, db) = (n.dim(), b.dim());
    let b_over_a: Vec<Mat> = (0..al.source.dim()).map(|a| b.right_mult_by(&al.map.column(a))).collect();
    let homs = exactla::intertwiners(&f, &b_over_a, n.ops(), db, dn)?;
    let basis = Mat::from_columns(&f, dn * db, &homs.iter().map(Mat::vec).collect::<Vec<_>>());
    let shell = Coextension { module: Module::zero(b, Side::Right), basis, hom_rows: dn, hom_cols: db };
    let ops = (0..db)
        .map(|x| {
            let lx = b.left_mult(x);
            let imgs: Vec<_> = homs.iter().map(|h| h.mul(&lx).vec()).collect();
            shell.coords_of_all(&Mat::from_columns(&f, dn * db, &imgs))
        })
        .collect();
    let module = Module::unchecked(b, Side::Right, homs.len(), ops)?;
    Ok(Coextension { module: back(side, &alpha.target, module), ..shell })
}

/// `m -> (b -> m b)`, from `M` to the coextension of its restriction.
pub fn coextend_unit(alpha: &AlgebraMorphism, m: &Module, coext: &Coextension) -> Result<Mat, AlgError> {
    let (al, mr) = to_right(alpha, m);
    let b = &al.target;
    let f = m.field();
    let (dm, db) = (m.dim(), b.dim());
    let h = Mat::from_fn(f, dm * db, dm, |r, k| mr.op(r % db).get(r / db, k).clone());
    coext
        .basis
        .solve_mat(&h)
        .ok_or_else(|| AlgError::Mismatch("coextend unit: orbit maps are not A-linear".into()))
}

/// `F -> F(1)`.
pub fn coextend_counit(alpha: &AlgebraMorphism, coext: &Coextension) -> Mat {
    let f = coext.basis.field();
    let one = alpha.target.unit_vector();
    let cols: Vec<_> = (0..coext.module.dim())
        .map(|i| coext.hom_at(&Mat::unit_vector(f, coext.module.dim(), i)).apply(&one))
        .collect();
    Mat::from_columns(f, coext.hom_rows, &cols)
}

/// `F -> g F`.
pub fn coextend_map(src: &Coextension, tgt: &Coextension, g: &Mat) -> Mat {
    let f = g.field();
    let cols: Vec<_> = (0..src.module.dim())
        .map(|i| g.mul(&src.hom_at(&Mat::unit_vector(f, src.module.dim(), i))).vec())
        .collect();
    tgt.coords_of_all(&Mat::from_columns(f, tgt.hom_rows * tgt.hom_cols, &cols))
}

/// Outcome of checking one adjunction on one pair of objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionCertificate {
    pub hom_left: usize,
    pub hom_right: usize,
    /// The transposition map between the hom spaces is bijective.
    pub bijection: bool,
    pub triangle_left: bool,
    pub triangle_right: bool,
}

impl AdjunctionCertificate {
    pub fn holds(&self) -> bool {
        self.hom_left == self.hom_right && self.bijection && self.triangle_left && self.triangle_right
    }
}

/// Rank of `phi -> after * phi * before` on a hom basis.
pub fn transposition_rank(homs: &[Mat], after: Option<&Mat>, before: Option<&Mat>) -> usize {
    let Some(h0) = homs.first() else { return 0 };
    let f = h0.field().clone();
    let imgs: Vec<_> = homs
        .iter()
        .map(|h| {
            let mut x = h.clone();
            if let Some(b) = before {
                x = x.mul(b);
            }
            if let Some(a) = after {
                x = a.mul(&x);
            }
            x.vec()
        })
        .collect();
    let len = imgs[0].len();
    Mat::from_columns(&f, len, &imgs).rank()
}

/// `extend -| restrict` at `(M over A, N over B)`.
pub fn certify_extend_restrict(alpha: &AlgebraMorphism, m: &Module, n: &Module) -> Result<AdjunctionCertificate, AlgError> {
    let ext = extend(alpha, m)?;
    let rn = restrict(alpha, n)?;
    let left = hom_modules(&ext.module, n)?;
    let right = hom_modules(m, &rn)?;
    let eta_m = extend_unit(alpha, m, &ext);
    let rank = transposition_rank(&left, None, Some(&eta_m));
    // eps_{ext M} . ext(eta_M) = id
    let rext = restrict(alpha, &ext.module)?;
    let ext2 = extend(alpha, &rext)?;
    let eps_ext = extend_counit(alpha, &ext.module)?;
    let t1 = eps_ext.mul(&extend_map(&ext, &ext2, &eta_m)).is_identity();
    // res(eps_N) . eta_{res N} = id
    let ext_rn = extend(alpha, &rn)?;
    let eta_rn = extend_unit(alpha, &rn, &ext_rn);
    let t2 = extend_counit(alpha, n)?.mul(&eta_rn).is_identity();
    Ok(AdjunctionCertificate {
        hom_left: left.len(),
        hom_right: right.len(),
        bijection: rank == left.len() && rank == right.len(),
        triangle_left: t1,
        triangle_right: t2,
    })
}

/// `restrict -| coextend` at `(M over B, N over A)`.
pub fn certify_restrict_coextend(alpha: &AlgebraMorphism, m: &Module, n: &Module) -> Result<AdjunctionCertificate, AlgError> {
    let rm = restrict(alpha, m)?;
    let co = coextend(alpha, n)?;
    let left = hom_modules(&rm, n)?;
    let right = hom_modules(m, &co.module)?;
    let eps_n = coextend_counit(alpha, &co);
    let rank = transposition_rank(&right, Some(&eps_n), None);
    // eps_{res M} . res(eta_M) = id
    let co_rm = coextend(alpha, &rm)?;
    let eta_m = coextend_unit(alpha, m, &co_rm)?;
    let t1 = coextend_counit(alpha, &co_rm).mul(&eta_m).is_identity();
    // coext(eps_N) . eta_{coext N} = id
    let rco = restrict(alpha, &co.module)?;
    let co2 = coextend(alpha, &rco)?;
    let eta_co = coextend_unit(alpha, &co.module, &co2)?;
    let t2 = coextend_map(&co2, &co, &eps_n).mul(&eta_co).is_identity();
    Ok(AdjunctionCertificate {
        hom_left: left.len(),
        hom_right: right.len(),
        bijection: rank == left.len() && rank == right.len(),
        triangle_left: t1,
        triangle_right: t2,
    })
}
