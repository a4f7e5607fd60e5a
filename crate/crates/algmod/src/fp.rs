//! Finite-dimensional modules over finitely presented algebras such as
//! `K[x]`, given by one matrix per generator.

use exactla::{Field, Mat, Quotient, Scalar, Subspace};

use crate::AlgError;

/// A word in the generators; `[i, j]` means `x_i x_j`.
pub type Word = Vec<usize>;

/// A noncommutative polynomial as a list of `(coefficient, word)` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPolynomial {
    pub terms: Vec<(Scalar, Word)>,
}

impl NcPolynomial {
    pub fn monomial(field: &Field, word: Word) -> NcPolynomial {
        NcPolynomial { terms: vec![(field.one(), word)] }
    }

    /// Largest generator index mentioned, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.terms.iter().flat_map(|(_, w)| w.iter().copied()).max()
    }

    /// Renders as e.g. `x0*x1 - 2*x0`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(c, w)| {
                let word = if w.is_empty() { "1".to_string() } else { w.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join("*") };
                format!("{c}*{word}")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPAlgebraAction {
    field: Field,
    generators: usize,
    relations: Vec<NcPolynomial>,
    dim: usize,
    matrices: Vec<Mat>,
}

impl FPAlgebraAction {
    pub fn new(
        field: &Field,
        generators: usize,
        relations: Vec<NcPolynomial>,
        dim: usize,
        matrices: Vec<Mat>,
    ) -> Result<FPAlgebraAction, AlgError> {
        if matrices.len() != generators || matrices.iter().any(|m| m.shape() != (dim, dim)) {
            return Err(AlgError::Shape(format!("{generators} generator matrices of size {dim}x{dim} expected")));
        }
        if relations.iter().any(|r| r.max_generator().is_some_and(|g| g >= generators)) {
            return Err(AlgError::Shape("relation mentions an unknown generator".into()));
        }
        let a = FPAlgebraAction { field: field.clone(), generators, relations, dim, matrices };
        for (i, r) in a.relations.iter().enumerate() {
            if !a.evaluate(r).is_zero() {
                return Err(AlgError::RelationFails { index: i, relation: r.render() });
            }
        }
        Ok(a)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrices(&self) -> &[Mat] {
        &self.matrices
    }

    /// `x_{w0} x_{w1} ...` acting on column vectors.
    pub fn word(&self, w: &[usize]) -> Mat {
        let mut acc = Mat::identity(&self.field, self.dim);
        for &g in w {
            acc = acc.mul(&self.matrices[g]);
        }
        acc
    }

    pub fn evaluate(&self, p: &NcPolynomial) -> Mat {
        let mut acc = Mat::zeros(&self.field, self.dim, self.dim);
        for (c, w) in &p.terms {
            acc.add_scaled(c, &self.word(w));
        }
        acc
    }

    /// The action restricted to an invariant subspace, in its basis.
    pub fn restrict_to(&self, s: &Subspace) -> Result<FPAlgebraAction, AlgError> {
        let b = s.basis();
        let mut mats = Vec::new();
        for m in &self.matrices {
            mats.push(b.solve_mat(&m.mul(b)).ok_or_else(|| AlgError::Mismatch("subspace is not invariant".into()))?);
        }
        Ok(FPAlgebraAction { matrices: mats, dim: s.dim(), ..self.clone() })
    }
}

/// Every word of length at most `len`, shortest first, then lexicographic.
pub fn words_up_to(generators: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..generators {
                let mut v: Word = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Smallest subspace containing `vectors` and stable under every generator.
pub fn fp_submodule_generated(data: &FPAlgebraAction, vectors: &[Vec<Scalar>]) -> Result<Subspace, AlgError> {
    if vectors.iter().any(|v| v.len() != data.dim) {
        return Err(AlgError::Shape("vector outside the module".into()));
    }
    let mut s = Subspace::span_vectors(&data.field, data.dim, vectors);
    loop {
        let mut next = s.clone();
        for m in &data.matrices {
            next = next.sum(&s.image_under(m))?;
        }
        if next.dim() == s.dim() {
            return Ok(s);
        }
        s = next;
    }
}

/// Induced action on `M / sub`.
pub fn fp_quotient(data: &FPAlgebraAction, sub: &Subspace) -> Result<(FPAlgebraAction, Quotient), AlgError> {
    if data.matrices.iter().any(|m| !sub.contains_subspace(&sub.image_under(m))) {
        return Err(AlgError::Mismatch("subspace is not invariant".into()));
    }
    let q = Quotient::of(sub);
    let mats = data.matrices.iter().map(|m| q.projection.mul(m).mul(&q.section)).collect();
    Ok((FPAlgebraAction { matrices: mats, dim: q.dim(), ..data.clone() }, q))
}
