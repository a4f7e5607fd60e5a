//! The rational part `R(N)`: the largest subspace on which the action of
//! `A` comes from a `C`-coaction through the pairing.

use algmod::{fp_quotient, FPAlgebraAction, Module, Side};
use coalg::RightComodule;
use exactla::{kernel, Field, Mat, Scalar, Subspace};

use crate::{PairedAlgebra, RationalError, RationalPairing};

/// A finite-dimensional left `A`-module: a [`Module`] for finite `A`,
/// generator matrices for presented `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionData {
    Module(Module),
    Presented(FPAlgebraAction),
}

impl ActionData {
    pub fn dim(&self) -> usize {
        match self {
            ActionData::Module(m) => m.dim(),
            ActionData::Presented(a) => a.dim(),
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            ActionData::Module(m) => m.field(),
            ActionData::Presented(a) => a.field(),
        }
    }

    fn restrict_to(&self, s: &Subspace) -> Result<ActionData, RationalError> {
        Ok(match self {
            ActionData::Module(m) => ActionData::Module(m.submodule(s)?.0),
            ActionData::Presented(a) => ActionData::Presented(a.restrict_to(s)?),
        })
    }

    fn quotient(&self, s: &Subspace) -> Result<ActionData, RationalError> {
        Ok(match self {
            ActionData::Module(m) => ActionData::Module(m.quotient(s)?.0),
            ActionData::Presented(a) => ActionData::Presented(fp_quotient(a, s)?.0),
        })
    }
}

/// Pairs `(action of a on N, theta(a))` spanning the image of `A` in
/// `End(N) x C*`.
pub fn action_pairs(p: &RationalPairing, n: &ActionData) -> Result<Vec<(Mat, Vec<Scalar>)>, RationalError> {
    match (p.algebra(), n) {
        (PairedAlgebra::Finite(a), ActionData::Module(m)) => {
            if m.algebra() != a || m.side() != Side::Left {
                return Err(RationalError::Mismatch("module is not a left module over the paired algebra".into()));
            }
            Ok((0..a.dim()).map(|j| (m.op(j).clone(), p.generator_image(j))).collect())
        }
        (PairedAlgebra::Presented { generators, relations }, ActionData::Presented(act)) => {
            if act.generators() != *generators {
                return Err(RationalError::Mismatch("action has the wrong number of generators".into()));
            }
            for (i, r) in relations.iter().enumerate() {
                if !act.evaluate(r).is_zero() {
                    return Err(RationalError::Mismatch(format!("action violates relation {i} ({})", r.render())));
                }
            }
            Ok(presented_pairs(p, act))
        }
        _ => Err(RationalError::Mismatch("finite and presented data mixed".into())),
    }
}

fn presented_pairs(p: &RationalPairing, act: &FPAlgebraAction) -> Vec<(Mat, Vec<Scalar>)> {
    let f = act.field();
    let (dn, dc) = (act.dim(), p.coalgebra().dim());
    let cs = p.coalgebra().dual_algebra();
    let stack = |m: &Mat, v: &[Scalar]| {
        let mut s = m.vec();
        s.extend_from_slice(v);
        s
    };
    let mut out = vec![(Mat::identity(f, dn), cs.unit_vector())];
    let mut span = Subspace::span_vectors(f, dn * dn + dc, &[stack(&out[0].0, &out[0].1)]);
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (m, v) in &frontier {
            for g in 0..act.generators() {
                let pair = (m.mul(&act.matrices()[g]), cs.multiply(v, &p.generator_image(g)));
                let s = stack(&pair.0, &pair.1);
                if !span.contains(&s) {
                    span = span.sum(&Subspace::span_vectors(f, dn * dn + dc, &[s])).expect("same ambient");
                    next.push(pair);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `R(N)` with the coaction that realizes the action on it.
#[derive(Clone, Debug)]
pub struct Rationalization {
    pub subspace: Subspace,
    /// The coaction on `R(N)`, in the basis of `subspace`.
    pub comodule: RightComodule,
    pub action: ActionData,
}

pub fn rationalize(p: &RationalPairing, n: &ActionData) -> Result<Rationalization, RationalError> {
    let pairs = action_pairs(p, n)?;
    let f = n.field().clone();
    let c = p.coalgebra();
    let (dn, dc) = (n.dim(), c.dim());
    let thetas = Mat::from_columns(&f, dc, &pairs.iter().map(|q| q.1.clone()).collect::<Vec<_>>());
    // elements of A killed by theta must act by zero
    let mut killed = Vec::new();
    for lam in kernel(&thetas).basis_vectors() {
        let mut k = Mat::zeros(&f, dn, dn);
        for (l, (m, _)) in lam.iter().zip(&pairs) {
            k.add_scaled(l, m);
        }
        killed.push(k);
    }
    let mut v = Subspace::full(&f, dn);
    for k in &killed {
        v = v.intersection(&kernel(k))?;
    }
    loop {
        let mut next = v.clone();
        for (m, _) in &pairs {
            next = next.intersection(&v.preimage_under(m))?;
        }
        if next.dim() == v.dim() {
            break;
        }
        v = next;
    }
    if thetas.rank() < dc && v.dim() > 0 {
        return Err(RationalError::Hypothesis("C -> A* is not injective; the coaction is not determined".into()));
    }
    let comodule = coaction_on(&f, c, &pairs, &thetas, &v)?;
    Ok(Rationalization { action: n.restrict_to(&v)?, subspace: v, comodule })
}

fn coaction_on(
    f: &Field,
    c: &coalg::Coalgebra,
    pairs: &[(Mat, Vec<Scalar>)],
    thetas: &Mat,
    v: &Subspace,
) -> Result<RightComodule, RationalError> {
    let dc = c.dim();
    let b = v.basis();
    let dv = v.dim();
    let mut rho = Mat::zeros(f, dv * dc, dv);
    for cc in 0..dc {
        if dv == 0 {
            break;
        }
        let mut e = vec![f.zero(); dc];
        e[cc] = f.one();
        let beta = thetas.solve(&e).ok_or_else(|| RationalError::Hypothesis("theta(A) is not all of C*".into()))?;
        let mut op = Mat::zeros(f, b.shape().0, b.shape().0);
        for (bj, (m, _)) in beta.iter().zip(pairs) {
            op.add_scaled(bj, m);
        }
        let coords = b.solve_mat(&op.mul(b)).ok_or_else(|| RationalError::Inconsistent("rational part is not stable".into()))?;
        for i in 0..dv {
            for k in 0..dv {
                rho.set(i * dc + cc, k, coords.get(i, k).clone());
            }
        }
    }
    RightComodule::new(c, dv, rho).map_err(|e| RationalError::Inconsistent(format!("coaction on the rational part: {e}")))
}

pub fn is_rational(p: &RationalPairing, n: &ActionData) -> Result<bool, RationalError> {
    Ok(rationalize(p, n)?.subspace.dim() == n.dim())
}

/// `0 -> R(N) -> N -> N/R(N) -> 0` and the rational part of the quotient.
#[derive(Clone, Debug)]
pub struct TorsionWitness {
    pub rational: Rationalization,
    pub quotient: ActionData,
    pub quotient_rational: Rationalization,
}

impl TorsionWitness {
    /// `R(N / R(N)) = 0`.
    pub fn vanishes(&self) -> bool {
        self.quotient_rational.subspace.dim() == 0
    }
}

pub fn torsion_witness(p: &RationalPairing, n: &ActionData) -> Result<TorsionWitness, RationalError> {
    let rational = rationalize(p, n)?;
    let quotient = n.quotient(&rational.subspace)?;
    let quotient_rational = rationalize(p, &quotient)?;
    Ok(TorsionWitness { rational, quotient, quotient_rational })
}
