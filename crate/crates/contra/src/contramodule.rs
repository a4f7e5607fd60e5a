use algmod::{Module, Side};
use coalg::Coalgebra;
use exactla::{difference_witness, swap_matrix, Field, Mat, Quotient, Subspace, Violation};

use crate::ContraError;

/// A right contramodule. `Hom(C, M)` is identified with `M (x) C*`
/// (`m (x) e^c` is the map `x -> e^c(x) m`), and `pi` is the resulting
/// `dim x (dim * dim C)` matrix, column `m*d + c`.
///
/// Writing `P_c = pi(- (x) e^c)`, the axioms read `sum_c eps(e_c) P_c = id`
/// and `P_a P_b = P_{a b}` in `C*`: a contramodule is the same as a left
/// `C*`-module, which is how the module bridge below reads it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contramodule {
    coalgebra: Coalgebra,
    dim: usize,
    pi: Mat,
}

impl Contramodule {
    pub fn new(coalgebra: &Coalgebra, dim: usize, pi: Mat) -> Result<Contramodule, ContraError> {
        let m = Contramodule::unchecked(coalgebra, dim, pi)?;
        let v = m.check();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(ContraError::Invalid { what: "contramodule".into(), violations: v })
        }
    }

    pub fn unchecked(coalgebra: &Coalgebra, dim: usize, pi: Mat) -> Result<Contramodule, ContraError> {
        if pi.shape() != (dim, dim * coalgebra.dim()) {
            return Err(ContraError::Shape(format!(
                "contramodule of dim {dim} needs a {dim}x{} contraction",
                dim * coalgebra.dim()
            )));
        }
        Ok(Contramodule { coalgebra: coalgebra.clone(), dim, pi })
    }

    pub fn zero(c: &Coalgebra) -> Contramodule {
        Contramodule { coalgebra: c.clone(), dim: 0, pi: Mat::zeros(c.field(), 0, 0) }
    }

    /// `T_C(V) = Hom(C, V) = V (x) C*` with `pi` induced by `Delta`.
    pub fn free(c: &Coalgebra, v_dim: usize) -> Contramodule {
        let cs = c.dual_algebra();
        let idv = Mat::identity(c.field(), v_dim);
        let ops: Vec<Mat> = (0..c.dim()).map(|a| idv.kron(&cs.left_mult(a))).collect();
        Contramodule::from_ops(c, v_dim * c.dim(), &ops)
    }

    pub(crate) fn from_ops(c: &Coalgebra, dim: usize, ops: &[Mat]) -> Contramodule {
        let d = c.dim();
        let pi = Mat::from_fn(c.field(), dim, dim * d, |i, col| ops[col % d].get(i, col / d).clone());
        Contramodule { coalgebra: c.clone(), dim, pi }
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn field(&self) -> &Field {
        self.coalgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pi(&self) -> &Mat {
        &self.pi
    }

    /// `P_c`, for each dual basis vector `e^c`.
    pub fn ops(&self) -> Vec<Mat> {
        let d = self.coalgebra.dim();
        (0..d)
            .map(|c| Mat::from_fn(self.field(), self.dim, self.dim, |i, k| self.pi.get(i, k * d + c).clone()))
            .collect()
    }

    pub fn check(&self) -> Vec<Violation> {
        let c = &self.coalgebra;
        let f = c.field();
        let d = c.dim();
        let idm = Mat::identity(f, self.dim);
        let mut out = Vec::new();
        let unit = self.pi.mul(&idm.kron(&c.eps().transpose()));
        if let Some(w) = difference_witness(&unit, &idm) {
            out.push(Violation::new("contraction counit", w));
        }
        let inner = self.pi.kron(&Mat::identity(f, d)).mul(&idm.kron(&swap_matrix(f, d, d)));
        let lhs = self.pi.mul(&inner);
        let rhs = self.pi.mul(&idm.kron(&c.delta().transpose()));
        if let Some(w) = difference_witness(&lhs, &rhs) {
            out.push(Violation::new("contraction associativity", w));
        }
        out
    }

    /// The left `C*`-module with operators `P_c`.
    pub fn to_module(&self) -> Module {
        Module::unchecked(&self.coalgebra.dual_algebra(), Side::Left, self.dim, self.ops()).expect("shapes")
    }

    pub fn from_module(c: &Coalgebra, m: &Module) -> Result<Contramodule, ContraError> {
        if m.side() != Side::Left || *m.algebra() != c.dual_algebra() {
            return Err(ContraError::Mismatch("contramodules correspond to left modules over the dual algebra".into()));
        }
        Ok(Contramodule::from_ops(c, m.dim(), m.ops()))
    }

    pub fn direct_sum(&self, other: &Contramodule) -> Result<Contramodule, ContraError> {
        if self.coalgebra != other.coalgebra {
            return Err(ContraError::Mismatch("contramodules over different coalgebras".into()));
        }
        let m = self.to_module().direct_sum(&other.to_module())?;
        Contramodule::from_module(&self.coalgebra, &m)
    }

    pub fn is_subcontramodule(&self, s: &Subspace) -> bool {
        self.to_module().is_submodule(s)
    }

    pub fn subcontramodule(&self, s: &Subspace) -> Result<(Contramodule, Mat), ContraError> {
        let (m, inc) = self.to_module().submodule(s)?;
        Ok((Contramodule::from_module(&self.coalgebra, &m)?, inc))
    }

    pub fn quotient(&self, s: &Subspace) -> Result<(Contramodule, Quotient), ContraError> {
        let (m, q) = self.to_module().quotient(s)?;
        Ok((Contramodule::from_module(&self.coalgebra, &m)?, q))
    }
}

/// `g pi_M = pi_N (g (x) id)`.
pub fn is_contra_map(m: &Contramodule, n: &Contramodule, g: &Mat) -> bool {
    let idc = Mat::identity(m.field(), m.coalgebra.dim());
    g.shape() == (n.dim, m.dim) && g.mul(&m.pi) == n.pi.mul(&g.kron(&idc))
}

pub fn hom_contra(m: &Contramodule, n: &Contramodule) -> Result<Vec<Mat>, ContraError> {
    if m.coalgebra != n.coalgebra {
        return Err(ContraError::Mismatch("contramodules over different coalgebras".into()));
    }
    Ok(exactla::intertwiners(m.field(), &m.ops(), &n.ops(), m.dim, n.dim)?)
}
