use exactla::{difference_witness, intertwiners, Field, Mat, Quotient, Scalar, Subspace, Violation};

use crate::algebra::combine;
use crate::{AlgError, Algebra};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A finite-dimensional module, held as one operator per basis element of
/// the algebra: `ops[a]` is `m -> e_a m` (left) or `m -> m e_a` (right).
/// Left modules satisfy `L_a L_b = L_{ab}`, right ones `R_b R_a = R_{ab}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    algebra: Algebra,
    side: Side,
    dim: usize,
    ops: Vec<Mat>,
}

impl Module {
    pub fn new(algebra: &Algebra, side: Side, dim: usize, ops: Vec<Mat>) -> Result<Module, AlgError> {
        let m = Module::unchecked(algebra, side, dim, ops)?;
        let v = m.check();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(AlgError::Invalid { what: "module".into(), violations: v })
        }
    }

    pub fn unchecked(algebra: &Algebra, side: Side, dim: usize, ops: Vec<Mat>) -> Result<Module, AlgError> {
        if ops.len() != algebra.dim() || ops.iter().any(|o| o.shape() != (dim, dim)) {
            return Err(AlgError::Shape(format!(
                "module of dim {dim} needs {} operators of size {dim}x{dim}",
                algebra.dim()
            )));
        }
        Ok(Module { algebra: algebra.clone(), side, dim, ops })
    }

    /// From the action map: `A (x) M -> M` (left) or `M (x) A -> M` (right).
    pub fn from_action(algebra: &Algebra, side: Side, dim: usize, action: &Mat) -> Result<Module, AlgError> {
        let d = algebra.dim();
        if action.shape() != (dim, dim * d) {
            return Err(AlgError::Shape("action map has the wrong shape".into()));
        }
        let f = algebra.field();
        let ops = (0..d)
            .map(|a| {
                Mat::from_fn(f, dim, dim, |i, m| match side {
                    Side::Left => action.get(i, a * dim + m).clone(),
                    Side::Right => action.get(i, m * d + a).clone(),
                })
            })
            .collect();
        Module::new(algebra, side, dim, ops)
    }

    pub fn zero(algebra: &Algebra, side: Side) -> Module {
        let f = algebra.field();
        Module { algebra: algebra.clone(), side, dim: 0, ops: vec![Mat::zeros(f, 0, 0); algebra.dim()] }
    }

    /// `A` acting on itself.
    pub fn regular(algebra: &Algebra, side: Side) -> Module {
        let ops = (0..algebra.dim())
            .map(|a| match side {
                Side::Left => algebra.left_mult(a),
                Side::Right => algebra.right_mult(a),
            })
            .collect();
        Module { algebra: algebra.clone(), side, dim: algebra.dim(), ops }
    }

    pub fn free(algebra: &Algebra, side: Side, rank: usize) -> Module {
        let mut m = Module::zero(algebra, side);
        let r = Module::regular(algebra, side);
        for _ in 0..rank {
            m = m.direct_sum(&r).expect("same algebra");
        }
        m
    }

    /// Module on which `e_a` acts by the scalar `chi(e_a)`; `chi` must be a
    /// character.
    pub fn from_character(algebra: &Algebra, side: Side, chi: &[Scalar]) -> Result<Module, AlgError> {
        let f = algebra.field();
        let ops = chi.iter().map(|c| Mat::from_fn(f, 1, 1, |_, _| c.clone())).collect();
        Module::new(algebra, side, 1, ops)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ops(&self) -> &[Mat] {
        &self.ops
    }

    pub fn op(&self, a: usize) -> &Mat {
        &self.ops[a]
    }

    /// Operator of an arbitrary algebra element.
    pub fn act(&self, u: &[Scalar]) -> Mat {
        combine(self.field(), self.dim, u, |a| self.ops[a].clone())
    }

    /// The action map in the layout accepted by [`Module::from_action`].
    pub fn action(&self) -> Mat {
        let d = self.algebra.dim();
        let n = self.dim;
        let mut out = Mat::zeros(self.field(), n, n * d);
        for a in 0..d {
            for i in 0..n {
                for m in 0..n {
                    let col = match self.side {
                        Side::Left => a * n + m,
                        Side::Right => m * d + a,
                    };
                    out.set(i, col, self.ops[a].get(i, m).clone());
                }
            }
        }
        out
    }

    pub fn check(&self) -> Vec<Violation> {
        let f = self.field().clone();
        let d = self.algebra.dim();
        let mut out = Vec::new();
        for a in 0..d {
            for b in 0..d {
                let prod = self.act(&self.algebra.mult().column(a * d + b));
                let comp = match self.side {
                    Side::Left => self.ops[a].mul(&self.ops[b]),
                    Side::Right => self.ops[b].mul(&self.ops[a]),
                };
                if let Some(w) = difference_witness(&comp, &prod) {
                    let mut wit = Vec::new();
                    wit.extend(Mat::unit_vector(&f, d, a));
                    wit.extend(Mat::unit_vector(&f, d, b));
                    wit.extend(w);
                    out.push(Violation::new(format!("action associativity at (e{a}, e{b})"), wit));
                    return out;
                }
            }
        }
        let one = self.act(&self.algebra.unit_vector());
        if let Some(w) = difference_witness(&one, &Mat::identity(&f, self.dim)) {
            out.push(Violation::new("unit acts as identity", w));
        }
        out
    }

    pub fn direct_sum(&self, other: &Module) -> Result<Module, AlgError> {
        self.same_kind(other)?;
        let ops = self.ops.iter().zip(&other.ops).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Module { algebra: self.algebra.clone(), side: self.side, dim: self.dim + other.dim, ops })
    }

    pub(crate) fn same_kind(&self, other: &Module) -> Result<(), AlgError> {
        if self.algebra != other.algebra {
            return Err(AlgError::Mismatch("modules over different algebras".into()));
        }
        if self.side != other.side {
            return Err(AlgError::Mismatch("left and right modules mixed".into()));
        }
        Ok(())
    }

    /// The dual space with the transposed action; sides swap.
    pub fn dual(&self) -> Module {
        Module {
            algebra: self.algebra.clone(),
            side: self.side.flip(),
            dim: self.dim,
            ops: self.ops.iter().map(Mat::transpose).collect(),
        }
    }

    /// A left `A`-module read as a right `A^op`-module and vice versa.
    pub fn over_opposite(&self) -> Module {
        Module { algebra: self.algebra.opposite(), side: self.side.flip(), dim: self.dim, ops: self.ops.clone() }
    }

    /// Same space and operators, over another algebra of equal dimension.
    pub(crate) fn with_algebra(&self, algebra: &Algebra, side: Side) -> Module {
        Module { algebra: algebra.clone(), side, dim: self.dim, ops: self.ops.clone() }
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        self.ops.iter().all(|o| s.contains_subspace(&s.image_under(o)))
    }

    /// Smallest submodule containing `vectors`.
    pub fn generated(&self, vectors: &[Vec<Scalar>]) -> Result<Subspace, AlgError> {
        if vectors.iter().any(|v| v.len() != self.dim) {
            return Err(AlgError::Shape("vector outside the module".into()));
        }
        let mut s = Subspace::span_vectors(self.field(), self.dim, vectors);
        loop {
            let mut next = s.clone();
            for o in &self.ops {
                next = next.sum(&s.image_under(o))?;
            }
            if next.dim() == s.dim() {
                return Ok(s);
            }
            s = next;
        }
    }

    /// Submodule on an invariant subspace, in the subspace's basis, with
    /// its inclusion.
    pub fn submodule(&self, s: &Subspace) -> Result<(Module, Mat), AlgError> {
        if !self.is_submodule(s) {
            return Err(AlgError::Mismatch("subspace is not a submodule".into()));
        }
        let inc = s.basis().clone();
        let ops = self
            .ops
            .iter()
            .map(|o| inc.solve_mat(&o.mul(&inc)).expect("invariant subspace"))
            .collect();
        Ok((Module { algebra: self.algebra.clone(), side: self.side, dim: s.dim(), ops }, inc))
    }

    /// Quotient by an invariant subspace, with its projection.
    pub fn quotient(&self, s: &Subspace) -> Result<(Module, Quotient), AlgError> {
        if !self.is_submodule(s) {
            return Err(AlgError::Mismatch("subspace is not a submodule".into()));
        }
        let q = Quotient::of(s);
        let ops = self.ops.iter().map(|o| q.projection.mul(o).mul(&q.section)).collect();
        Ok((Module { algebra: self.algebra.clone(), side: self.side, dim: q.dim(), ops }, q))
    }

    /// Module with the operators transported along an invertible change of
    /// basis `t: self -> new`.
    pub fn transport(&self, t: &Mat) -> Result<Module, AlgError> {
        let ti = t.inverse().ok_or_else(|| AlgError::Shape("transport needs an invertible map".into()))?;
        let ops = self.ops.iter().map(|o| t.mul(o).mul(&ti)).collect();
        Ok(Module { algebra: self.algebra.clone(), side: self.side, dim: self.dim, ops })
    }
}

/// Basis of `Hom_A(M, N)`.
pub fn hom_modules(m: &Module, n: &Module) -> Result<Vec<Mat>, AlgError> {
    m.same_kind(n)?;
    Ok(intertwiners(m.field(), &m.ops, &n.ops, m.dim, n.dim)?)
}

pub fn is_module_map(m: &Module, n: &Module, f: &Mat) -> bool {
    f.shape() == (n.dim, m.dim) && m.ops.iter().zip(&n.ops).all(|(a, b)| f.mul(a) == b.mul(f))
}

/// Kernel of a module map as a submodule of the source.
pub fn kernel_module(m: &Module, f: &Mat) -> Result<(Module, Mat), AlgError> {
    m.submodule(&exactla::kernel(f))
}

/// Cokernel of a module map as a quotient of the target.
pub fn cokernel_module(n: &Module, f: &Mat) -> Result<(Module, Quotient), AlgError> {
    n.quotient(&exactla::image(f))
}

/// `N (x)_A M` for a right module `N` and a left module `M`.
pub fn balanced_tensor(n: &Module, m: &Module) -> Result<Quotient, AlgError> {
    if n.algebra != m.algebra {
        return Err(AlgError::Mismatch("balanced tensor over different algebras".into()));
    }
    if n.side != Side::Right || m.side != Side::Left {
        return Err(AlgError::Mismatch("balanced tensor needs a right and a left module".into()));
    }
    let f = n.field();
    let mut rel = Vec::new();
    let idn = Mat::identity(f, n.dim);
    let idm = Mat::identity(f, m.dim);
    for a in 0..n.algebra.dim() {
        let d = n.ops[a].kron(&idm).sub(&idn.kron(&m.ops[a]));
        rel.extend(d.columns());
    }
    let w = Subspace::span_vectors(f, n.dim * m.dim, &rel);
    Ok(Quotient::of(&w))
}
