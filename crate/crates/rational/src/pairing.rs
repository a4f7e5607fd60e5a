//! Pairings `phi: C (x) A -> K`, stored as the matrix of `theta: A -> C*`.

use algmod::{words_up_to, Algebra, NcPolynomial, Word};
use coalg::Coalgebra;
use exactla::{difference_witness, kernel, Field, Mat, Scalar, Subspace, Violation};

use crate::RationalError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairedAlgebra {
    Finite(Algebra),
    /// Free algebra on `generators` modulo `relations`, possibly infinite-dimensional.
    Presented { generators: usize, relations: Vec<NcPolynomial> },
}

/// `values[c][j] = phi(c (x) a_j)` where `a_j` is the `j`-th basis element
/// (finite algebras) or the `j`-th entry of `words` (presented ones).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPairing {
    coalgebra: Coalgebra,
    algebra: PairedAlgebra,
    words: Vec<Word>,
    values: Mat,
}

impl RationalPairing {
    pub fn finite(c: &Coalgebra, a: &Algebra, values: Mat) -> Result<RationalPairing, RationalError> {
        RationalPairing::finite_unchecked(c, a, values)?.checked()
    }

    pub fn finite_unchecked(c: &Coalgebra, a: &Algebra, values: Mat) -> Result<RationalPairing, RationalError> {
        if values.shape() != (c.dim(), a.dim()) {
            return Err(RationalError::Shape(format!("pairing values must be {}x{}", c.dim(), a.dim())));
        }
        if a.field() != c.field() {
            return Err(RationalError::Mismatch("pairing over different fields".into()));
        }
        Ok(RationalPairing { coalgebra: c.clone(), algebra: PairedAlgebra::Finite(a.clone()), words: Vec::new(), values })
    }

    /// Values on `words`, which must include the empty word and every
    /// single generator; longer words are checked against products in `C*`.
    pub fn presented(
        c: &Coalgebra,
        generators: usize,
        relations: Vec<NcPolynomial>,
        words: Vec<Word>,
        values: Mat,
    ) -> Result<RationalPairing, RationalError> {
        RationalPairing::presented_unchecked(c, generators, relations, words, values)?.checked()
    }

    pub fn presented_unchecked(
        c: &Coalgebra,
        generators: usize,
        relations: Vec<NcPolynomial>,
        words: Vec<Word>,
        values: Mat,
    ) -> Result<RationalPairing, RationalError> {
        if values.shape() != (c.dim(), words.len()) {
            return Err(RationalError::Shape(format!("pairing values must be {}x{}", c.dim(), words.len())));
        }
        if words.iter().flatten().any(|&g| g >= generators)
            || relations.iter().any(|r| r.max_generator().is_some_and(|g| g >= generators))
        {
            return Err(RationalError::Shape("word or relation mentions an unknown generator".into()));
        }
        for w in std::iter::once(Vec::new()).chain((0..generators).map(|g| vec![g])) {
            if !words.contains(&w) {
                return Err(RationalError::Shape(format!("no value given on the word {w:?}")));
            }
        }
        Ok(RationalPairing {
            coalgebra: c.clone(),
            algebra: PairedAlgebra::Presented { generators, relations },
            words,
            values,
        })
    }

    /// Values of `theta` on words of length at most `dim C`, computed from
    /// the generator values.
    pub fn presented_from_generators(
        c: &Coalgebra,
        relations: Vec<NcPolynomial>,
        generator_values: &[Vec<Scalar>],
    ) -> Result<RationalPairing, RationalError> {
        let g = generator_values.len();
        let cs = c.dual_algebra();
        let words = words_up_to(g, c.dim());
        let cols: Vec<Vec<Scalar>> = words
            .iter()
            .map(|w| w.iter().fold(cs.unit_vector(), |acc, &i| cs.multiply(&acc, &generator_values[i])))
            .collect();
        let values = Mat::from_columns(c.field(), c.dim(), &cols);
        RationalPairing::presented(c, g, relations, words, values)
    }

    /// `(C, C*, evaluation)`.
    pub fn evaluation(c: &Coalgebra) -> RationalPairing {
        RationalPairing {
            coalgebra: c.clone(),
            algebra: PairedAlgebra::Finite(c.dual_algebra()),
            words: Vec::new(),
            values: Mat::identity(c.field(), c.dim()),
        }
    }

    fn checked(self) -> Result<RationalPairing, RationalError> {
        let v = self.check();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(RationalError::Invalid { what: "rational pairing".into(), violations: v })
        }
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &PairedAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.coalgebra.field()
    }

    pub fn values(&self) -> &Mat {
        &self.values
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn generators(&self) -> usize {
        match &self.algebra {
            PairedAlgebra::Finite(a) => a.dim(),
            PairedAlgebra::Presented { generators, .. } => *generators,
        }
    }

    /// `theta(x_g)` in `C*` (for finite algebras, `theta` of basis element `g`).
    pub fn generator_image(&self, g: usize) -> Vec<Scalar> {
        match &self.algebra {
            PairedAlgebra::Finite(_) => self.values.column(g),
            PairedAlgebra::Presented { .. } => {
                let j = self.words.iter().position(|w| w == &[g]).expect("generators are among the words");
                self.values.column(j)
            }
        }
    }

    /// `theta` of a word, as a product in `C*`.
    pub fn word_image(&self, w: &[usize]) -> Vec<Scalar> {
        let cs = self.coalgebra.dual_algebra();
        w.iter().fold(cs.unit_vector(), |acc, &g| cs.multiply(&acc, &self.generator_image(g)))
    }

    /// `(C^op, A^op)` with the same values; right `A`-modules are left `A^op`-modules.
    pub fn opposite(&self) -> Result<RationalPairing, RationalError> {
        match &self.algebra {
            PairedAlgebra::Finite(a) => Ok(RationalPairing {
                coalgebra: self.coalgebra.opposite(),
                algebra: PairedAlgebra::Finite(a.opposite()),
                words: Vec::new(),
                values: self.values.clone(),
            }),
            PairedAlgebra::Presented { generators, relations } => {
                let rev = |w: &Word| w.iter().rev().copied().collect::<Word>();
                let relations = relations
                    .iter()
                    .map(|r| NcPolynomial { terms: r.terms.iter().map(|(c, w)| (c.clone(), rev(w))).collect() })
                    .collect();
                Ok(RationalPairing {
                    coalgebra: self.coalgebra.opposite(),
                    algebra: PairedAlgebra::Presented { generators: *generators, relations },
                    words: self.words.iter().map(rev).collect(),
                    values: self.values.clone(),
                })
            }
        }
    }

    /// The subalgebra `theta(A)` of `C*`.
    pub fn image(&self) -> Subspace {
        let f = self.field();
        let d = self.coalgebra.dim();
        match &self.algebra {
            PairedAlgebra::Finite(_) => Subspace::span(&self.values),
            PairedAlgebra::Presented { generators, .. } => {
                let cs = self.coalgebra.dual_algebra();
                let mut s = Subspace::span_vectors(f, d, &[cs.unit_vector()]);
                loop {
                    let mut gens = s.basis_vectors();
                    for v in s.basis_vectors() {
                        for g in 0..*generators {
                            gens.push(cs.multiply(&v, &self.generator_image(g)));
                        }
                    }
                    let next = Subspace::span_vectors(f, d, &gens);
                    if next.dim() == s.dim() {
                        return s;
                    }
                    s = next;
                }
            }
        }
    }

    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let c = &self.coalgebra;
        let f = c.field();
        let cs = c.dual_algebra();
        let eps = c.eps().row(0);
        // condition (i): C -> A* injective, i.e. theta(A) separates C
        let im = self.image();
        if im.dim() < c.dim() {
            let k = kernel(&im.basis().transpose());
            out.push(Violation::new("C -> A* is not injective", k.basis_vectors().remove(0)));
        }
        match &self.algebra {
            PairedAlgebra::Finite(a) => {
                let one = self.values.apply(&a.unit_vector());
                if let Some(w) = difference_witness(&Mat::column_vector(f, &one), &Mat::column_vector(f, &eps)) {
                    out.push(Violation::new("A -> C* does not preserve the unit", w));
                }
                'outer: for i in 0..a.dim() {
                    for j in 0..a.dim() {
                        let mut ei = vec![f.zero(); a.dim()];
                        ei[i] = f.one();
                        let mut ej = vec![f.zero(); a.dim()];
                        ej[j] = f.one();
                        let lhs = self.values.apply(&a.multiply(&ei, &ej));
                        let rhs = cs.multiply(&self.values.column(i), &self.values.column(j));
                        if lhs != rhs {
                            let w: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(x, y)| f.sub(x, y)).collect();
                            out.push(Violation::new(format!("A -> C* is not multiplicative on ({i}, {j})"), w));
                            break 'outer;
                        }
                    }
                }
            }
            PairedAlgebra::Presented { relations, .. } => {
                for (w, col) in self.words.iter().zip(self.values.columns()) {
                    let expect = self.word_image(w);
                    if col != expect {
                        let d: Vec<Scalar> = col.iter().zip(&expect).map(|(x, y)| f.sub(x, y)).collect();
                        let law = if w.is_empty() {
                            "A -> C* does not preserve the unit".to_string()
                        } else {
                            format!("A -> C* is not multiplicative on the word {w:?}")
                        };
                        out.push(Violation::new(law, d));
                    }
                }
                for (i, r) in relations.iter().enumerate() {
                    let mut acc = vec![f.zero(); c.dim()];
                    for (coef, w) in &r.terms {
                        for (a, x) in acc.iter_mut().zip(self.word_image(w)) {
                            *a = f.add(a, &f.mul(coef, &x));
                        }
                    }
                    if acc.iter().any(|x| *x != f.zero()) {
                        out.push(Violation::new(format!("relation {i} ({}) is not killed in C*", r.render()), acc));
                    }
                }
            }
        }
        out
    }
}
