use algmod::{Module, Side};
use exactla::{difference_witness, swap_matrix, Field, Mat, Quotient, Scalar, Subspace, Violation};

use crate::{CoalgError, Coalgebra};

/// A right comodule; `rho` is `(dim * dim C) x dim`, row `m*d + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    coalgebra: Coalgebra,
    dim: usize,
    rho: Mat,
}

/// A left comodule; `rho` is `(dim C * dim) x dim`, row `c*dim + m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule {
    coalgebra: Coalgebra,
    dim: usize,
    rho: Mat,
}

fn shape_err(kind: &str, dim: usize, d: usize) -> CoalgError {
    CoalgError::Shape(format!("{kind} comodule of dim {dim} needs a {}x{dim} coaction", dim * d))
}

impl RightComodule {
    pub fn new(coalgebra: &Coalgebra, dim: usize, rho: Mat) -> Result<RightComodule, CoalgError> {
        let m = RightComodule::unchecked(coalgebra, dim, rho)?;
        let v = m.check();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(CoalgError::Invalid { what: "right comodule".into(), violations: v })
        }
    }

    pub fn unchecked(coalgebra: &Coalgebra, dim: usize, rho: Mat) -> Result<RightComodule, CoalgError> {
        if rho.shape() != (dim * coalgebra.dim(), dim) {
            return Err(shape_err("right", dim, coalgebra.dim()));
        }
        Ok(RightComodule { coalgebra: coalgebra.clone(), dim, rho })
    }

    pub fn zero(c: &Coalgebra) -> RightComodule {
        RightComodule { coalgebra: c.clone(), dim: 0, rho: Mat::zeros(c.field(), 0, 0) }
    }

    /// `C` with `rho = Delta`.
    pub fn regular(c: &Coalgebra) -> RightComodule {
        RightComodule { coalgebra: c.clone(), dim: c.dim(), rho: c.delta().clone() }
    }

    /// `K^n` with `rho(m) = m (x) g` for a grouplike `g`.
    pub fn trivial_at(c: &Coalgebra, n: usize, g: &[Scalar]) -> Result<RightComodule, CoalgError> {
        let rho = Mat::identity(c.field(), n).kron(&Mat::column_vector(c.field(), g));
        RightComodule::new(c, n, rho)
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

    pub fn rho(&self) -> &Mat {
        &self.rho
    }

    pub fn check(&self) -> Vec<Violation> {
        let c = &self.coalgebra;
        let f = c.field();
        let idm = Mat::identity(f, self.dim);
        let idc = Mat::identity(f, c.dim());
        let mut out = Vec::new();
        let lhs = self.rho.kron(&idc).mul(&self.rho);
        let rhs = idm.kron(c.delta()).mul(&self.rho);
        if let Some(w) = difference_witness(&lhs, &rhs) {
            out.push(Violation::new("coaction coassociativity", w));
        }
        if let Some(w) = difference_witness(&idm.kron(c.eps()).mul(&self.rho), &idm) {
            out.push(Violation::new("coaction counit", w));
        }
        out
    }

    /// `m -> (id (x) e^c) rho(m)` for each dual basis vector.
    pub fn contractions(&self) -> Vec<Mat> {
        let d = self.coalgebra.dim();
        (0..d)
            .map(|c| Mat::from_fn(self.field(), self.dim, self.dim, |i, j| self.rho.get(i * d + c, j).clone()))
            .collect()
    }

    pub fn direct_sum(&self, other: &RightComodule) -> Result<RightComodule, CoalgError> {
        if self.coalgebra != other.coalgebra {
            return Err(CoalgError::Mismatch("comodules over different coalgebras".into()));
        }
        let m = self.to_module().direct_sum(&other.to_module())?;
        Ok(RightComodule::from_module(&self.coalgebra, &m))
    }

    /// The left `C*`-module with `f m = (id (x) f) rho(m)`.
    pub fn to_module(&self) -> Module {
        Module::unchecked(&self.coalgebra.dual_algebra(), Side::Left, self.dim, self.contractions())
            .expect("contraction shapes")
    }

    /// Inverse of [`RightComodule::to_module`]; any finite-dimensional left
    /// `C*`-module is rational.
    pub fn from_module(c: &Coalgebra, m: &Module) -> RightComodule {
        let d = c.dim();
        let n = m.dim();
        let rho = Mat::from_fn(c.field(), n * d, n, |r, j| m.op(r % d).get(r / d, j).clone());
        RightComodule { coalgebra: c.clone(), dim: n, rho }
    }

    pub fn is_subcomodule(&self, s: &Subspace) -> bool {
        self.to_module().is_submodule(s)
    }

    pub fn subcomodule(&self, s: &Subspace) -> Result<(RightComodule, Mat), CoalgError> {
        let (m, inc) = self.to_module().submodule(s)?;
        Ok((RightComodule::from_module(&self.coalgebra, &m), inc))
    }

    pub fn quotient(&self, s: &Subspace) -> Result<(RightComodule, Quotient), CoalgError> {
        let (m, q) = self.to_module().quotient(s)?;
        Ok((RightComodule::from_module(&self.coalgebra, &m), q))
    }

    /// `M*` as a left comodule.
    pub fn dual(&self) -> LeftComodule {
        let m = self.to_module().dual();
        LeftComodule::from_module(&self.coalgebra, &m)
    }

    /// Over cocommutative `C`, the same space with `lambda = swap . rho`.
    pub fn as_left(&self) -> Result<LeftComodule, CoalgError> {
        if !self.coalgebra.is_cocommutative() {
            return Err(CoalgError::Hypothesis("coalgebra is not cocommutative".into()));
        }
        let rho = swap_matrix(self.field(), self.dim, self.coalgebra.dim()).mul(&self.rho);
        Ok(LeftComodule { coalgebra: self.coalgebra.clone(), dim: self.dim, rho })
    }
}

impl LeftComodule {
    pub fn new(coalgebra: &Coalgebra, dim: usize, rho: Mat) -> Result<LeftComodule, CoalgError> {
        let m = LeftComodule::unchecked(coalgebra, dim, rho)?;
        let v = m.check();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(CoalgError::Invalid { what: "left comodule".into(), violations: v })
        }
    }

    pub fn unchecked(coalgebra: &Coalgebra, dim: usize, rho: Mat) -> Result<LeftComodule, CoalgError> {
        if rho.shape() != (dim * coalgebra.dim(), dim) {
            return Err(shape_err("left", dim, coalgebra.dim()));
        }
        Ok(LeftComodule { coalgebra: coalgebra.clone(), dim, rho })
    }

    pub fn zero(c: &Coalgebra) -> LeftComodule {
        LeftComodule { coalgebra: c.clone(), dim: 0, rho: Mat::zeros(c.field(), 0, 0) }
    }

    pub fn regular(c: &Coalgebra) -> LeftComodule {
        LeftComodule { coalgebra: c.clone(), dim: c.dim(), rho: c.delta().clone() }
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

    pub fn rho(&self) -> &Mat {
        &self.rho
    }

    pub fn check(&self) -> Vec<Violation> {
        let c = &self.coalgebra;
        let f = c.field();
        let idm = Mat::identity(f, self.dim);
        let idc = Mat::identity(f, c.dim());
        let mut out = Vec::new();
        let lhs = idc.kron(&self.rho).mul(&self.rho);
        let rhs = c.delta().kron(&idm).mul(&self.rho);
        if let Some(w) = difference_witness(&lhs, &rhs) {
            out.push(Violation::new("coaction coassociativity", w));
        }
        if let Some(w) = difference_witness(&c.eps().kron(&idm).mul(&self.rho), &idm) {
            out.push(Violation::new("coaction counit", w));
        }
        out
    }

    /// `m -> (e^c (x) id) lambda(m)`.
    pub fn contractions(&self) -> Vec<Mat> {
        let n = self.dim;
        (0..self.coalgebra.dim())
            .map(|c| Mat::from_fn(self.field(), n, n, |i, j| self.rho.get(c * n + i, j).clone()))
            .collect()
    }

    /// The right `C*`-module with `m f = (f (x) id) lambda(m)`.
    pub fn to_module(&self) -> Module {
        Module::unchecked(&self.coalgebra.dual_algebra(), Side::Right, self.dim, self.contractions())
            .expect("contraction shapes")
    }

    pub fn from_module(c: &Coalgebra, m: &Module) -> LeftComodule {
        let n = m.dim();
        let rho = Mat::from_fn(c.field(), n * c.dim(), n, |r, j| m.op(r / n).get(r % n, j).clone());
        LeftComodule { coalgebra: c.clone(), dim: n, rho }
    }

    pub fn dual(&self) -> RightComodule {
        RightComodule::from_module(&self.coalgebra, &self.to_module().dual())
    }

    pub fn as_right(&self) -> Result<RightComodule, CoalgError> {
        if !self.coalgebra.is_cocommutative() {
            return Err(CoalgError::Hypothesis("coalgebra is not cocommutative".into()));
        }
        let rho = swap_matrix(self.field(), self.coalgebra.dim(), self.dim).mul(&self.rho);
        Ok(RightComodule { coalgebra: self.coalgebra.clone(), dim: self.dim, rho })
    }

    pub fn direct_sum(&self, other: &LeftComodule) -> Result<LeftComodule, CoalgError> {
        if self.coalgebra != other.coalgebra {
            return Err(CoalgError::Mismatch("comodules over different coalgebras".into()));
        }
        let m = self.to_module().direct_sum(&other.to_module())?;
        Ok(LeftComodule::from_module(&self.coalgebra, &m))
    }
}

/// `rho_N f = (f (x) id) rho_M`.
pub fn is_comodule_map(m: &RightComodule, n: &RightComodule, f: &Mat) -> bool {
    let idc = Mat::identity(m.field(), m.coalgebra.dim());
    f.shape() == (n.dim, m.dim) && n.rho.mul(f) == f.kron(&idc).mul(&m.rho)
}

pub fn hom_comodules(m: &RightComodule, n: &RightComodule) -> Result<Vec<Mat>, CoalgError> {
    if m.coalgebra != n.coalgebra {
        return Err(CoalgError::Mismatch("comodules over different coalgebras".into()));
    }
    Ok(exactla::intertwiners(m.field(), &m.contractions(), &n.contractions(), m.dim, n.dim)?)
}

pub fn hom_left_comodules(m: &LeftComodule, n: &LeftComodule) -> Result<Vec<Mat>, CoalgError> {
    if m.coalgebra != n.coalgebra {
        return Err(CoalgError::Mismatch("comodules over different coalgebras".into()));
    }
    Ok(exactla::intertwiners(m.field(), &m.contractions(), &n.contractions(), m.dim, n.dim)?)
}

/// Smallest subcomodule containing `vectors`.
pub fn generated_subcomodule(m: &RightComodule, vectors: &[Vec<Scalar>]) -> Result<(RightComodule, Mat), CoalgError> {
    let s = m.to_module().generated(vectors)?;
    m.subcomodule(&s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_modules() {
        let f = Field::Gf(3);
        for c in [Coalgebra::grouplike(&f, 2), Coalgebra::divided_power(&f, 3), Coalgebra::matrix(&f, 2)] {
            let r = RightComodule::regular(&c);
            assert!(r.check().is_empty());
            assert!(r.to_module().check().is_empty());
            assert_eq!(RightComodule::from_module(&c, &r.to_module()), r);
            let l = LeftComodule::regular(&c);
            assert!(l.check().is_empty());
            assert!(l.to_module().check().is_empty());
            assert_eq!(LeftComodule::from_module(&c, &l.to_module()), l);
            assert!(r.dual().check().is_empty());
            assert!(l.dual().check().is_empty());
        }
    }

    #[test]
    fn generated_in_grouplike() {
        let f = Field::Gf(2);
        let c = Coalgebra::grouplike(&f, 2);
        let r = RightComodule::regular(&c);
        assert_eq!(generated_subcomodule(&r, &[vec![f.one(), f.zero()]]).unwrap().0.dim(), 1);
        assert_eq!(generated_subcomodule(&r, &[vec![f.one(), f.one()]]).unwrap().0.dim(), 2);
        assert_eq!(generated_subcomodule(&r, &[vec![f.zero(), f.zero()]]).unwrap().0.dim(), 0);
    }

    #[test]
    fn homs_are_comodule_maps() {
        let f = Field::Q;
        let c = Coalgebra::divided_power(&f, 3);
        let r = RightComodule::regular(&c);
        let h = hom_comodules(&r, &r).unwrap();
        assert_eq!(h.len(), 3);
        assert!(h.iter().all(|x| is_comodule_map(&r, &r, x)));
    }
}
