use crate::{Field, LinAlgError, Mat, Scalar};

/// One summand `left * X_block * right` of a matrix equation; `None` stands
/// for an identity of the fitting size.
#[derive(Clone, Debug)]
pub struct Term<'a> {
    pub coeff: Scalar,
    pub left: Option<&'a Mat>,
    pub block: usize,
    pub right: Option<&'a Mat>,
}

impl<'a> Term<'a> {
    pub fn new(field: &Field, left: Option<&'a Mat>, block: usize, right: Option<&'a Mat>) -> Term<'a> {
        Term { coeff: field.one(), left, block, right }
    }

    pub fn negated(field: &Field, left: Option<&'a Mat>, block: usize, right: Option<&'a Mat>) -> Term<'a> {
        Term { coeff: field.neg(&field.one()), left, block, right }
    }
}

/// Linear system whose unknowns are several matrices ("blocks"), built from
/// equations `sum_t c_t L_t X_{b_t} R_t = B`. Unknowns are vectorised row-major.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    field: Field,
    blocks: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    rows: Vec<Vec<Scalar>>,
    rhs: Vec<Scalar>,
}

impl LinearSystem {
    pub fn new(field: &Field) -> LinearSystem {
        LinearSystem { field: field.clone(), blocks: Vec::new(), offsets: Vec::new(), rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn add_block(&mut self, rows: usize, cols: usize) -> usize {
        let off = self.offsets.last().map_or(0, |o| o + {
            let (r, c) = self.blocks[self.blocks.len() - 1];
            r * c
        });
        self.blocks.push((rows, cols));
        self.offsets.push(off);
        for r in &mut self.rows {
            r.resize(off + rows * cols, self.field.zero());
        }
        self.blocks.len() - 1
    }

    pub fn unknowns(&self) -> usize {
        self.offsets.last().map_or(0, |o| {
            let (r, c) = self.blocks[self.blocks.len() - 1];
            o + r * c
        })
    }

    pub fn equations(&self) -> usize {
        self.rows.len()
    }

    fn term_shape(&self, t: &Term) -> Result<(usize, usize), LinAlgError> {
        let (br, bc) = *self.blocks.get(t.block).ok_or_else(|| LinAlgError::Shape("unknown block".into()))?;
        let out_r = match t.left {
            Some(l) if l.cols() != br => return Err(LinAlgError::Shape("left factor does not fit block".into())),
            Some(l) => l.rows(),
            None => br,
        };
        let out_c = match t.right {
            Some(r) if r.rows() != bc => return Err(LinAlgError::Shape("right factor does not fit block".into())),
            Some(r) => r.cols(),
            None => bc,
        };
        Ok((out_r, out_c))
    }

    /// Adds `sum_t terms = 0`.
    pub fn add_equation(&mut self, terms: &[Term]) -> Result<(), LinAlgError> {
        self.add_equation_rhs(terms, None)
    }

    /// Adds `sum_t terms = rhs` (zero when `rhs` is `None`).
    pub fn add_equation_rhs(&mut self, terms: &[Term], rhs: Option<&Mat>) -> Result<(), LinAlgError> {
        let Some(first) = terms.first() else { return Ok(()) };
        let shape = self.term_shape(first)?;
        for t in terms {
            if self.term_shape(t)? != shape {
                return Err(LinAlgError::Shape("terms of an equation have different shapes".into()));
            }
        }
        if let Some(b) = rhs {
            if b.shape() != shape {
                return Err(LinAlgError::Shape("right-hand side has the wrong shape".into()));
            }
        }
        let f = self.field.clone();
        let n = self.unknowns();
        let (p, q) = shape;
        let mut new_rows = vec![vec![f.zero(); n]; p * q];
        for t in terms {
            let (br, bc) = self.blocks[t.block];
            let off = self.offsets[t.block];
            for a in 0..p {
                let lefts: Vec<(usize, Scalar)> = match t.left {
                    Some(l) => (0..br).filter_map(|i| {
                        let e = l.get(a, i);
                        (!e.is_zero()).then(|| (i, f.mul(e, &t.coeff)))
                    }).collect(),
                    None => vec![(a, t.coeff.clone())],
                };
                for b in 0..q {
                    let row = &mut new_rows[a * q + b];
                    let rights: Vec<(usize, Option<&Scalar>)> = match t.right {
                        Some(r) => (0..bc)
                            .filter_map(|j| {
                                let e = r.get(j, b);
                                (!e.is_zero()).then_some((j, Some(e)))
                            })
                            .collect(),
                        None => vec![(b, None)],
                    };
                    for (i, li) in &lefts {
                        for (j, rj) in &rights {
                            let val = match rj {
                                Some(r) => f.mul(li, r),
                                None => li.clone(),
                            };
                            let idx = off + i * bc + j;
                            row[idx] = f.add(&row[idx], &val);
                        }
                    }
                }
            }
        }
        for (k, row) in new_rows.into_iter().enumerate() {
            let b = rhs.map_or_else(|| f.zero(), |m| m.elems()[k].clone());
            if row.iter().all(Scalar::is_zero) && b.is_zero() {
                continue;
            }
            self.rows.push(row);
            self.rhs.push(b);
        }
        Ok(())
    }

    fn matrix(&self) -> Mat {
        let n = self.unknowns();
        let mut m = Mat::zeros(&self.field, self.rows.len(), n);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    fn split(&self, v: &[Scalar]) -> Vec<Mat> {
        self.blocks
            .iter()
            .zip(&self.offsets)
            .map(|(&(r, c), &o)| Mat::from_vec(&self.field, r, c, &v[o..o + r * c]))
            .collect()
    }

    /// Basis of the solution space of the homogeneous system (right-hand
    /// sides ignored), each solution split into its blocks.
    pub fn solution_basis(&self) -> Vec<Vec<Mat>> {
        let n = self.unknowns();
        let ker = if self.rows.is_empty() { Mat::identity(&self.field, n) } else { self.matrix().kernel_basis() };
        ker.columns().iter().map(|v| self.split(v)).collect()
    }

    /// Homogeneous solution basis as columns of one `unknowns x k` matrix.
    pub fn solution_matrix(&self) -> Mat {
        let n = self.unknowns();
        if self.rows.is_empty() {
            Mat::identity(&self.field, n)
        } else {
            self.matrix().kernel_basis()
        }
    }

    /// One solution of the inhomogeneous system, if any.
    pub fn solve_one(&self) -> Option<Vec<Mat>> {
        let n = self.unknowns();
        if self.rows.is_empty() {
            return Some(self.split(&vec![self.field.zero(); n]));
        }
        let x = self.matrix().solve(&self.rhs)?;
        Some(self.split(&x))
    }
}

/// Basis of `{X : X S_k = T_k X for all k}` for operator families on the
/// source (`dim_s`) and target (`dim_t`) spaces.
pub fn intertwiners(field: &Field, source_ops: &[Mat], target_ops: &[Mat], dim_s: usize, dim_t: usize) -> Result<Vec<Mat>, LinAlgError> {
    if source_ops.len() != target_ops.len() {
        return Err(LinAlgError::Shape("operator families of different length".into()));
    }
    let mut sys = LinearSystem::new(field);
    let x = sys.add_block(dim_t, dim_s);
    for (s, t) in source_ops.iter().zip(target_ops) {
        sys.add_equation(&[Term::new(field, None, x, Some(s)), Term::negated(field, Some(t), x, None)])?;
    }
    Ok(sys.solution_basis().into_iter().map(|mut v| v.remove(0)).collect())
}
