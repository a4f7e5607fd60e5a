use algmod::{Algebra, AlgebraMorphism};
use exactla::{difference_witness, swap_matrix, Field, Mat, Scalar, Violation};

use crate::CoalgError;

/// A finite-dimensional coalgebra: `delta` is `d^2 x d` (row `a*d + b`
/// holds the `e_a (x) e_b` coefficient) and `eps` is `1 x d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    dim: usize,
    delta: Mat,
    eps: Mat,
}

impl Coalgebra {
    pub fn new(field: &Field, dim: usize, delta: Mat, eps: Mat) -> Result<Coalgebra, CoalgError> {
        let c = Coalgebra::unchecked(field, dim, delta, eps)?;
        let v = c.check();
        if v.is_empty() {
            Ok(c)
        } else {
            Err(CoalgError::Invalid { what: "coalgebra".into(), violations: v })
        }
    }

    pub fn unchecked(field: &Field, dim: usize, delta: Mat, eps: Mat) -> Result<Coalgebra, CoalgError> {
        if delta.shape() != (dim * dim, dim) || eps.shape() != (1, dim) {
            return Err(CoalgError::Shape(format!(
                "coalgebra of dim {dim} needs delta {}x{dim} and eps 1x{dim}",
                dim * dim
            )));
        }
        if delta.field() != field || eps.field() != field {
            return Err(exactla::LinAlgError::FieldMismatch.into());
        }
        Ok(Coalgebra { field: field.clone(), dim, delta, eps })
    }

    fn from_coproducts(
        field: &Field,
        dim: usize,
        eps: &[Scalar],
        mut co: impl FnMut(usize) -> Vec<(usize, usize)>,
    ) -> Coalgebra {
        let mut delta = Mat::zeros(field, dim * dim, dim);
        for x in 0..dim {
            for (a, b) in co(x) {
                let cur = delta.get(a * dim + b, x).clone();
                delta.set(a * dim + b, x, field.add(&cur, &field.one()));
            }
        }
        Coalgebra::new(field, dim, delta, Mat::row_vector(field, eps)).expect("standard coalgebra")
    }

    /// The ground field, `Delta(1) = 1 (x) 1`.
    pub fn ground(field: &Field) -> Coalgebra {
        Coalgebra::grouplike(field, 1)
    }

    /// `KG` for a set of `n` grouplikes.
    pub fn grouplike(field: &Field, n: usize) -> Coalgebra {
        Coalgebra::from_coproducts(field, n, &vec![field.one(); n], |g| vec![(g, g)])
    }

    /// Divided powers `DP(n)`: `Delta c_k = sum_{i+j=k} c_i (x) c_j`.
    pub fn divided_power(field: &Field, n: usize) -> Coalgebra {
        let mut eps = vec![field.zero(); n];
        if n > 0 {
            eps[0] = field.one();
        }
        Coalgebra::from_coproducts(field, n, &eps, |k| (0..=k).map(|i| (i, k - i)).collect())
    }

    /// Matrix coalgebra on `e_ij` (index `i*n + j`), `Delta e_ij = sum_k e_ik (x) e_kj`.
    pub fn matrix(field: &Field, n: usize) -> Coalgebra {
        let d = n * n;
        let eps: Vec<Scalar> = (0..d).map(|x| if x / n == x % n { field.one() } else { field.zero() }).collect();
        Coalgebra::from_coproducts(field, d, &eps, |x| {
            let (i, j) = (x / n, x % n);
            (0..n).map(|k| (i * n + k, k * n + j)).collect()
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self) -> &Mat {
        &self.delta
    }

    pub fn eps(&self) -> &Mat {
        &self.eps
    }

    pub fn check(&self) -> Vec<Violation> {
        let f = &self.field;
        let id = Mat::identity(f, self.dim);
        let mut out = Vec::new();
        let lhs = self.delta.kron(&id).mul(&self.delta);
        let rhs = id.kron(&self.delta).mul(&self.delta);
        if let Some(w) = difference_witness(&lhs, &rhs) {
            out.push(Violation::new("coassociativity", w));
        }
        let l = self.eps.kron(&id).mul(&self.delta);
        if let Some(w) = difference_witness(&l, &id) {
            out.push(Violation::new("left counit", w));
        }
        let r = id.kron(&self.eps).mul(&self.delta);
        if let Some(w) = difference_witness(&r, &id) {
            out.push(Violation::new("right counit", w));
        }
        out
    }

    pub fn is_cocommutative(&self) -> bool {
        swap_matrix(&self.field, self.dim, self.dim).mul(&self.delta) == self.delta
    }

    /// `C*` with the convolution product `(f g)(c) = (f (x) g)(Delta c)`.
    pub fn dual_algebra(&self) -> Algebra {
        Algebra::unchecked(&self.field, self.dim, self.delta.transpose(), self.eps.transpose())
            .expect("shapes of a coalgebra dualize")
    }

    /// The coalgebra dual to a finite-dimensional algebra.
    pub fn from_algebra(a: &Algebra) -> Coalgebra {
        Coalgebra {
            field: a.field().clone(),
            dim: a.dim(),
            delta: a.mult().transpose(),
            eps: a.unit().transpose(),
        }
    }

    pub fn opposite(&self) -> Coalgebra {
        Coalgebra {
            field: self.field.clone(),
            dim: self.dim,
            delta: swap_matrix(&self.field, self.dim, self.dim).mul(&self.delta),
            eps: self.eps.clone(),
        }
    }
}

/// A linear map between coalgebras; `new` checks comultiplicativity and counit
/// compatibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraMorphism {
    pub source: Coalgebra,
    pub target: Coalgebra,
    pub map: Mat,
}

impl CoalgebraMorphism {
    pub fn new(source: &Coalgebra, target: &Coalgebra, map: Mat) -> Result<CoalgebraMorphism, CoalgError> {
        let m = CoalgebraMorphism::unchecked(source, target, map)?;
        let v = m.check();
        if v.is_empty() {
            Ok(m)
        } else {
            Err(CoalgError::Invalid { what: "coalgebra morphism".into(), violations: v })
        }
    }

    pub fn unchecked(source: &Coalgebra, target: &Coalgebra, map: Mat) -> Result<CoalgebraMorphism, CoalgError> {
        if map.shape() != (target.dim, source.dim) {
            return Err(CoalgError::Shape(format!("coalgebra morphism needs a {}x{} matrix", target.dim, source.dim)));
        }
        Ok(CoalgebraMorphism { source: source.clone(), target: target.clone(), map })
    }

    pub fn identity(c: &Coalgebra) -> CoalgebraMorphism {
        CoalgebraMorphism { source: c.clone(), target: c.clone(), map: Mat::identity(&c.field, c.dim) }
    }

    /// `eps: C -> K`.
    pub fn counit_of(c: &Coalgebra) -> CoalgebraMorphism {
        CoalgebraMorphism { source: c.clone(), target: Coalgebra::ground(&c.field), map: c.eps.clone() }
    }

    /// `DP(m) -> DP(n)` for `m <= n`, `c_i -> c_i`.
    pub fn divided_power_inclusion(field: &Field, m: usize, n: usize) -> CoalgebraMorphism {
        let map = Mat::from_fn(field, n, m, |i, j| if i == j { field.one() } else { field.zero() });
        CoalgebraMorphism::new(&Coalgebra::divided_power(field, m), &Coalgebra::divided_power(field, n), map)
            .expect("divided power inclusion")
    }

    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let lhs = self.map.kron(&self.map).mul(&self.source.delta);
        let rhs = self.target.delta.mul(&self.map);
        if let Some(w) = difference_witness(&lhs, &rhs) {
            out.push(Violation::new("comultiplicativity", w));
        }
        if let Some(w) = difference_witness(&self.target.eps.mul(&self.map), &self.source.eps) {
            out.push(Violation::new("counit compatibility", w));
        }
        out
    }

    /// `other` after `self`.
    pub fn then(&self, other: &CoalgebraMorphism) -> Result<CoalgebraMorphism, CoalgError> {
        if self.target != other.source {
            return Err(CoalgError::Mismatch("composable coalgebra morphisms".into()));
        }
        Ok(CoalgebraMorphism { source: self.source.clone(), target: other.target.clone(), map: other.map.mul(&self.map) })
    }

    /// `alpha^T: D* -> C*`.
    pub fn dual(&self) -> AlgebraMorphism {
        AlgebraMorphism::unchecked(&self.target.dual_algebra(), &self.source.dual_algebra(), self.map.transpose())
            .expect("transposed shape")
    }
}
