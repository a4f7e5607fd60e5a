use crate::{Field, LinAlgError, Mat, Scalar};

/// A subspace of `K^ambient`, held by a canonical basis: the columns of
/// `basis` are the nonzero rows of the reduced row echelon form of any
/// spanning set. Two subspaces are equal exactly when their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::zeros(field, ambient, 0) }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::identity(field, ambient) }
    }

    /// Span of the columns of `spanning`.
    pub fn span(spanning: &Mat) -> Subspace {
        let ambient = spanning.rows();
        let (r, pivots) = spanning.transpose().rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>()).transpose();
        Subspace { ambient, basis }
    }

    pub fn span_vectors(field: &Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        Subspace::span(&Mat::from_columns(field, ambient, vectors))
    }

    pub fn coordinate(field: &Field, ambient: usize, idx: &[usize]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = idx.iter().map(|&i| Mat::unit_vector(field, ambient, i)).collect();
        Subspace::span_vectors(field, ambient, &vs)
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    /// Basis vectors as columns (an injective `ambient x dim` matrix).
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.columns()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.basis.solve(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.columns().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        Ok(Subspace::span(&self.basis.hstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        let stacked = self.basis.hstack(&other.basis.neg());
        let ker = stacked.kernel_basis();
        let top = ker.block(0, 0, self.dim(), ker.cols());
        Ok(Subspace::span(&self.basis.mul(&top)))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::Shape(format!(
                "subspaces of K^{} and K^{}",
                self.ambient, other.ambient
            )));
        }
        if self.field() != other.field() {
            return Err(LinAlgError::FieldMismatch);
        }
        Ok(())
    }

    /// Image of the subspace under `f`.
    pub fn image_under(&self, f: &Mat) -> Subspace {
        Subspace::span(&f.mul(&self.basis))
    }

    /// `{v : f v in self}`.
    pub fn preimage_under(&self, f: &Mat) -> Subspace {
        let q = Quotient::of(self);
        Subspace::span(&q.projection.mul(f).kernel_basis())
    }

    /// The quotient `K^ambient / self` with its canonical projection.
    pub fn quotient(&self) -> Quotient {
        Quotient::of(self)
    }
}

/// A quotient `K^n / W` presented by a projection `q` and a section `s`
/// with `q s = id`. The section picks the non-pivot coordinate vectors of
/// the canonical basis of `W`, so the presentation is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub relations: Subspace,
    pub projection: Mat,
    pub section: Mat,
}

impl Quotient {
    pub fn of(w: &Subspace) -> Quotient {
        let f = w.field().clone();
        let n = w.ambient();
        let rows = w.basis().transpose();
        let pivots: Vec<usize> = (0..rows.rows())
            .map(|i| (0..n).find(|&j| !rows.get(i, j).is_zero()).expect("nonzero basis row"))
            .collect();
        let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
        let mut pos = vec![usize::MAX; n];
        for (k, &j) in free.iter().enumerate() {
            pos[j] = k;
        }
        let mut projection = Mat::zeros(&f, free.len(), n);
        for (k, &j) in free.iter().enumerate() {
            projection.set(k, j, f.one());
        }
        for (i, &p) in pivots.iter().enumerate() {
            for &j in &free {
                let e = rows.get(i, j);
                if !e.is_zero() {
                    projection.set(pos[j], p, f.neg(e));
                }
            }
        }
        let mut section = Mat::zeros(&f, n, free.len());
        for (k, &j) in free.iter().enumerate() {
            section.set(j, k, f.one());
        }
        Quotient { relations: w.clone(), projection, section }
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn ambient(&self) -> usize {
        self.projection.cols()
    }

    /// Induces `g: (K^n / W) -> target` from a map `h: K^n -> target` that kills `W`.
    pub fn descend(&self, h: &Mat) -> Result<Mat, LinAlgError> {
        if h.cols() != self.ambient() {
            return Err(LinAlgError::Shape("descend: map has the wrong domain".into()));
        }
        if !h.mul(self.relations.basis()).is_zero() {
            return Err(LinAlgError::NotWellDefined);
        }
        Ok(h.mul(&self.section))
    }
}

/// Basis of `{v : f v = 0}`.
pub fn kernel(f: &Mat) -> Subspace {
    Subspace::span(&f.kernel_basis())
}

/// Column span of `f`.
pub fn image(f: &Mat) -> Subspace {
    Subspace::span(f)
}

/// `{v : f v = g v}`.
pub fn equalizer(f: &Mat, g: &Mat) -> Result<Subspace, LinAlgError> {
    if f.shape() != g.shape() {
        return Err(LinAlgError::Shape(format!(
            "equalizer of {}x{} and {}x{}",
            f.rows(),
            f.cols(),
            g.rows(),
            g.cols()
        )));
    }
    Ok(kernel(&f.try_sub(g)?))
}

/// The universal quotient of the codomain making `f` and `g` equal.
pub fn coequalizer(f: &Mat, g: &Mat) -> Result<Quotient, LinAlgError> {
    if f.shape() != g.shape() {
        return Err(LinAlgError::Shape(format!(
            "coequalizer of {}x{} and {}x{}",
            f.rows(),
            f.cols(),
            g.rows(),
            g.cols()
        )));
    }
    Ok(Quotient::of(&image(&f.try_sub(g)?)))
}

/// `f (x) g` in the i-major Kronecker layout.
pub fn tensor(f: &Mat, g: &Mat) -> Result<Mat, LinAlgError> {
    if f.field() != g.field() {
        return Err(LinAlgError::FieldMismatch);
    }
    Ok(f.kron(g))
}

/// The transpose map between dual spaces.
pub fn dual(f: &Mat) -> Mat {
    f.transpose()
}

/// `outer` after `inner`.
pub fn compose(outer: &Mat, inner: &Mat) -> Result<Mat, LinAlgError> {
    outer.try_mul(inner)
}

/// `f (+) g : A (+) B -> C (+) D`.
pub fn direct_sum(f: &Mat, g: &Mat) -> Result<Mat, LinAlgError> {
    if f.field() != g.field() {
        return Err(LinAlgError::FieldMismatch);
    }
    Ok(f.block_diag(g))
}

pub fn subspace_sum(u: &Subspace, w: &Subspace) -> Result<Subspace, LinAlgError> {
    u.sum(w)
}

pub fn subspace_intersection(u: &Subspace, w: &Subspace) -> Result<Subspace, LinAlgError> {
    u.intersection(w)
}

/// Some preimage of `b` under `f`.
pub fn solve(f: &Mat, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
    if b.len() != f.rows() {
        return Err(LinAlgError::Shape("solve: right-hand side of wrong length".into()));
    }
    Ok(f.solve(b))
}

/// All vectors of `GF(p)^n`, in lexicographic order.
pub fn all_vectors(field: &Field, n: usize) -> Result<Vec<Vec<Scalar>>, LinAlgError> {
    let elems = field.elements().ok_or(LinAlgError::InfiniteField)?;
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * elems.len());
        for v in &out {
            for e in &elems {
                let mut w = v.clone();
                w.push(e.clone());
                next.push(w);
            }
        }
        out = next;
    }
    Ok(out)
}

/// Every subspace of `GF(p)^n`, enumerated through reduced echelon forms.
pub fn all_subspaces(field: &Field, n: usize) -> Result<Vec<Subspace>, LinAlgError> {
    let elems = field.elements().ok_or(LinAlgError::InfiniteField)?;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let pivots: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let k = pivots.len();
        // free slots: entries right of each pivot in non-pivot columns
        let slots: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let pr = pivots[r];
                let piv = pivots.clone();
                (pr + 1..n).filter(move |c| !piv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let choices = all_assignments(&elems, slots.len());
        for choice in choices {
            let mut rows = Mat::zeros(field, k, n);
            for (r, &p) in pivots.iter().enumerate() {
                rows.set(r, p, field.one());
            }
            for ((r, c), v) in slots.iter().zip(choice) {
                rows.set(*r, *c, v);
            }
            out.push(Subspace { ambient: n, basis: rows.transpose() });
        }
    }
    Ok(out)
}

fn all_assignments(elems: &[Scalar], len: usize) -> Vec<Vec<Scalar>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * elems.len());
        for v in &out {
            for e in elems {
                let mut w = v.clone();
                w.push(e.clone());
                next.push(w);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_intersection() {
        let f = Field::Q;
        let a = Subspace::coordinate(&f, 3, &[0, 1]);
        let b = Subspace::coordinate(&f, 3, &[1, 2]);
        assert_eq!(a.intersection(&b).unwrap(), Subspace::coordinate(&f, 3, &[1]));
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(&f, 3));
    }

    #[test]
    fn quotient_projection_kills_relations() {
        let f = Field::Gf(5);
        let w = Subspace::span_vectors(&f, 3, &[vec![f.from_i64(1), f.from_i64(2), f.from_i64(3)]]);
        let q = w.quotient();
        assert_eq!(q.dim(), 2);
        assert!(q.projection.mul(w.basis()).is_zero());
        assert!(q.projection.mul(&q.section).is_identity());
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        // number of subspaces of GF(2)^n: 1, 2, 5, 16, 67
        let f = Field::Gf(2);
        let counts: Vec<usize> = (0..5).map(|n| all_subspaces(&f, n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 67]);
        let g = Field::Gf(3);
        assert_eq!(all_subspaces(&g, 2).unwrap().len(), 6);
    }

    #[test]
    fn enumerated_subspaces_are_canonical() {
        let f = Field::Gf(3);
        for s in all_subspaces(&f, 3).unwrap() {
            assert_eq!(Subspace::span(s.basis()), s);
        }
    }

    #[test]
    fn preimage_of_line() {
        let f = Field::Q;
        let m = Mat::from_i64(&f, 2, 2, &[1, 0, 0, 0]);
        let line = Subspace::coordinate(&f, 2, &[1]);
        assert_eq!(line.preimage_under(&m), Subspace::coordinate(&f, 2, &[1]));
    }
}
