use exactla::{difference_witness, tensor_vectors, Field, Mat, Scalar, Violation};

use crate::AlgError;

/// A finite-dimensional associative unital algebra given by structure
/// constants: `mult` is `d x d^2` (column `a*d + b` holds `e_a e_b`) and
/// `unit` is `d x 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mult: Mat,
    unit: Mat,
}

impl Algebra {
    /// Builds an algebra and checks associativity and the unit laws.
    pub fn new(field: &Field, dim: usize, mult: Mat, unit: Mat) -> Result<Algebra, AlgError> {
        let a = Algebra::unchecked(field, dim, mult, unit)?;
        let v = a.check();
        if v.is_empty() {
            Ok(a)
        } else {
            Err(AlgError::Invalid { what: "algebra".into(), violations: v })
        }
    }

    /// Builds an algebra checking only shapes.
    pub fn unchecked(field: &Field, dim: usize, mult: Mat, unit: Mat) -> Result<Algebra, AlgError> {
        if mult.shape() != (dim, dim * dim) || unit.shape() != (dim, 1) {
            return Err(AlgError::Shape(format!(
                "algebra of dim {dim} needs mult {dim}x{} and unit {dim}x1, got {}x{} and {}x{}",
                dim * dim,
                mult.rows(),
                mult.cols(),
                unit.rows(),
                unit.cols()
            )));
        }
        if mult.field() != field || unit.field() != field {
            return Err(exactla::LinAlgError::FieldMismatch.into());
        }
        Ok(Algebra { field: field.clone(), dim, mult, unit })
    }

    /// Algebra from a bilinear product on basis elements.
    pub fn from_products(
        field: &Field,
        dim: usize,
        unit: &[Scalar],
        mut prod: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<Algebra, AlgError> {
        let mut mult = Mat::zeros(field, dim, dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                for (x, v) in prod(a, b).into_iter().enumerate() {
                    mult.set(x, a * dim + b, v);
                }
            }
        }
        Algebra::new(field, dim, mult, Mat::column_vector(field, unit))
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground(field: &Field) -> Algebra {
        Algebra { field: field.clone(), dim: 1, mult: Mat::identity(field, 1), unit: Mat::identity(field, 1) }
    }

    /// `K[x]/(x^n)` on the basis `1, x, ..., x^{n-1}`.
    pub fn truncated_poly(field: &Field, n: usize) -> Algebra {
        let mut unit = vec![field.zero(); n];
        if n > 0 {
            unit[0] = field.one();
        }
        Algebra::from_products(field, n, &unit, |a, b| {
            let mut v = vec![field.zero(); n];
            if a + b < n {
                v[a + b] = field.one();
            }
            v
        })
        .expect("truncated polynomial algebra")
    }

    /// `K^n` with componentwise product.
    pub fn product(field: &Field, n: usize) -> Algebra {
        let unit = vec![field.one(); n];
        Algebra::from_products(field, n, &unit, |a, b| {
            let mut v = vec![field.zero(); n];
            if a == b {
                v[a] = field.one();
            }
            v
        })
        .expect("product algebra")
    }

    /// `M_n(K)` on matrix units `E_ij` (index `i*n + j`).
    pub fn matrix(field: &Field, n: usize) -> Algebra {
        let d = n * n;
        let mut unit = vec![field.zero(); d];
        for i in 0..n {
            unit[i * n + i] = field.one();
        }
        Algebra::from_products(field, d, &unit, |a, b| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            let mut v = vec![field.zero(); d];
            if j == k {
                v[i * n + l] = field.one();
            }
            v
        })
        .expect("matrix algebra")
    }

    /// Group algebra of the cyclic group of order `n`.
    pub fn cyclic_group(field: &Field, n: usize) -> Algebra {
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Algebra::from_products(field, n, &unit, |a, b| {
            let mut v = vec![field.zero(); n];
            v[(a + b) % n] = field.one();
            v
        })
        .expect("group algebra")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self) -> &Mat {
        &self.mult
    }

    pub fn unit(&self) -> &Mat {
        &self.unit
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.mult.apply(&tensor_vectors(&self.field, u, v))
    }

    /// Matrix of `b -> e_a b`.
    pub fn left_mult(&self, a: usize) -> Mat {
        let d = self.dim;
        Mat::from_fn(&self.field, d, d, |x, b| self.mult.get(x, a * d + b).clone())
    }

    /// Matrix of `a -> a e_b`.
    pub fn right_mult(&self, b: usize) -> Mat {
        let d = self.dim;
        Mat::from_fn(&self.field, d, d, |x, a| self.mult.get(x, a * d + b).clone())
    }

    /// Matrix of `b -> u b` for an arbitrary element `u`.
    pub fn left_mult_by(&self, u: &[Scalar]) -> Mat {
        combine(&self.field, self.dim, u, |a| self.left_mult(a))
    }

    pub fn right_mult_by(&self, u: &[Scalar]) -> Mat {
        combine(&self.field, self.dim, u, |a| self.right_mult(a))
    }

    /// The algebra with reversed multiplication.
    pub fn opposite(&self) -> Algebra {
        let sw = exactla::swap_matrix(&self.field, self.dim, self.dim);
        Algebra { field: self.field.clone(), dim: self.dim, mult: self.mult.mul(&sw), unit: self.unit.clone() }
    }

    pub fn is_commutative(&self) -> bool {
        self.opposite().mult == self.mult
    }

    /// Violated laws, each with a witness basis tensor.
    pub fn check(&self) -> Vec<Violation> {
        let f = &self.field;
        let d = self.dim;
        let id = Mat::identity(f, d);
        let mut out = Vec::new();
        let lhs = self.mult.mul(&self.mult.kron(&id));
        let rhs = self.mult.mul(&id.kron(&self.mult));
        if let Some(w) = difference_witness(&lhs, &rhs) {
            out.push(Violation::new("associativity", w));
        }
        let left_unit = self.mult.mul(&self.unit.kron(&id));
        if let Some(w) = difference_witness(&left_unit, &id) {
            out.push(Violation::new("left unit", w));
        }
        let right_unit = self.mult.mul(&id.kron(&self.unit));
        if let Some(w) = difference_witness(&right_unit, &id) {
            out.push(Violation::new("right unit", w));
        }
        out
    }

    /// Direct product `A x B` (basis of `A` first).
    pub fn direct_product(&self, other: &Algebra) -> Result<Algebra, AlgError> {
        if self.field != other.field {
            return Err(exactla::LinAlgError::FieldMismatch.into());
        }
        let (p, q) = (self.dim, other.dim);
        let f = self.field.clone();
        let mut unit = self.unit_vector();
        unit.extend(other.unit_vector());
        Algebra::from_products(&f, p + q, &unit, |a, b| {
            let mut v = vec![f.zero(); p + q];
            if a < p && b < p {
                for (x, s) in self.mult.column(a * p + b).into_iter().enumerate() {
                    v[x] = s;
                }
            } else if a >= p && b >= p {
                for (x, s) in other.mult.column((a - p) * q + (b - p)).into_iter().enumerate() {
                    v[p + x] = s;
                }
            }
            v
        })
    }
}

pub(crate) fn combine(field: &Field, n: usize, coeffs: &[Scalar], mut op: impl FnMut(usize) -> Mat) -> Mat {
    let mut acc = Mat::zeros(field, n, n);
    for (a, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc.add_scaled(c, &op(a));
        }
    }
    acc
}

/// A linear map between algebras; `new` insists on multiplicativity and
/// unitality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    pub source: Algebra,
    pub target: Algebra,
    pub map: Mat,
}

impl AlgebraMorphism {
    pub fn new(source: &Algebra, target: &Algebra, map: Mat) -> Result<AlgebraMorphism, AlgError> {
        let m = AlgebraMorphism::unchecked(source, target, map)?;
        let v = m.check();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(AlgError::Invalid { what: "algebra morphism".into(), violations: v })
        }
    }

    pub fn unchecked(source: &Algebra, target: &Algebra, map: Mat) -> Result<AlgebraMorphism, AlgError> {
        if map.shape() != (target.dim, source.dim) {
            return Err(AlgError::Shape(format!(
                "algebra morphism needs a {}x{} matrix",
                target.dim, source.dim
            )));
        }
        Ok(AlgebraMorphism { source: source.clone(), target: target.clone(), map })
    }

    pub fn identity(a: &Algebra) -> AlgebraMorphism {
        AlgebraMorphism { source: a.clone(), target: a.clone(), map: Mat::identity(&a.field, a.dim) }
    }

    /// The unit map `K -> A`.
    pub fn unit_of(a: &Algebra) -> AlgebraMorphism {
        AlgebraMorphism { source: Algebra::ground(&a.field), target: a.clone(), map: a.unit.clone() }
    }

    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let lhs = self.map.mul(self.source.mult());
        let rhs = self.target.mult().mul(&self.map.kron(&self.map));
        if let Some(w) = difference_witness(&lhs, &rhs) {
            out.push(Violation::new("multiplicativity", w));
        }
        if self.map.mul(self.source.unit()) != *self.target.unit() {
            out.push(Violation::new("unitality", vec![self.source.field.one()]));
        }
        out
    }

    /// `other` after `self`.
    pub fn then(&self, other: &AlgebraMorphism) -> Result<AlgebraMorphism, AlgError> {
        if self.target != other.source {
            return Err(AlgError::Mismatch("composable algebra morphisms".into()));
        }
        Ok(AlgebraMorphism { source: self.source.clone(), target: other.target.clone(), map: other.map.mul(&self.map) })
    }

    /// The same map viewed between opposite algebras.
    pub fn opposite(&self) -> AlgebraMorphism {
        AlgebraMorphism { source: self.source.opposite(), target: self.target.opposite(), map: self.map.clone() }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_algebras_are_valid() {
        for f in [Field::Gf(2), Field::Gf(3), Field::Q] {
            for n in 1..4 {
                assert!(Algebra::truncated_poly(&f, n).check().is_empty());
                assert!(Algebra::product(&f, n).check().is_empty());
                assert!(Algebra::cyclic_group(&f, n).check().is_empty());
            }
            assert!(Algebra::matrix(&f, 2).check().is_empty());
            assert!(!Algebra::matrix(&f, 2).is_commutative());
        }
    }

    #[test]
    fn broken_unit_is_reported() {
        let f = Field::Q;
        let a = Algebra::truncated_poly(&f, 2);
        let bad = Algebra::unchecked(&f, 2, a.mult().clone(), Mat::column_vector(&f, &[f.zero(), f.one()])).unwrap();
        let v = bad.check();
        assert!(v.iter().any(|x| x.law == "left unit"));
    }

    #[test]
    fn quotient_map_is_a_morphism() {
        let f = Field::Gf(2);
        let a3 = Algebra::truncated_poly(&f, 3);
        let a2 = Algebra::truncated_poly(&f, 2);
        let q = Mat::from_i64(&f, 2, 3, &[1, 0, 0, 0, 1, 0]);
        assert!(AlgebraMorphism::new(&a3, &a2, q).is_ok());
        let inc = Mat::from_i64(&f, 3, 2, &[1, 0, 0, 1, 0, 0]);
        assert!(AlgebraMorphism::new(&a2, &a3, inc).is_err());
    }

    #[test]
    fn opposite_of_matrix_algebra_transposes() {
        let f = Field::Q;
        let m = Algebra::matrix(&f, 2);
        let op = m.opposite();
        // E_01 *op E_10 = E_10 E_01 = E_11
        let e01 = Mat::unit_vector(&f, 4, 1);
        let e10 = Mat::unit_vector(&f, 4, 2);
        assert_eq!(op.multiply(&e01, &e10), Mat::unit_vector(&f, 4, 3));
    }
}
