//! Cartesian objects: the other mate of every transition is invertible.

use algmod::{coextend, extend, is_projective, restrict, Coextension, Extension, Module, Side};
use coalg::{is_coflat, is_sigma_injective};
use exactla::{intertwiners, Mat, Scalar, Subspace};

use crate::{Flavor, Kind, Rep, RepError, RepMorphism, RepObject};

/// The transition `s -> t` in its other mate form.
#[derive(Clone, Debug)]
pub enum Mate {
    /// `M_s -> Hom_{B_t}(B_s, M_t)`, `m -> (b -> T(b m))`, in coextension coordinates.
    IntoCoextension { coextension: Coextension, map: Mat },
    /// `M_s (x) B_t -> M_t`, `[m (x) b] -> b T(m)`, on the extension carrier.
    FromExtension { extension: Extension, map: Mat },
}

impl Mate {
    pub fn map(&self) -> &Mat {
        match self {
            Mate::IntoCoextension { map, .. } | Mate::FromExtension { map, .. } => map,
        }
    }

    pub fn is_iso(&self) -> bool {
        self.map().is_invertible()
    }
}

pub fn mate(m: &RepObject, s: usize, t: usize) -> Result<Mate, RepError> {
    let f = m.field();
    let tr = m.transition(s, t).ok_or_else(|| RepError::Mismatch(format!("no transition {s} -> {t}")))?;
    let h = m.base().map_between(s, t);
    let (ms, mt) = (m.fiber(s), m.fiber(t));
    match m.flavor().kind() {
        Kind::Coinduction => {
            let coextension = coextend(&h, mt)?;
            let db = m.base().algebra(s).dim();
            let prods: Vec<Mat> = (0..db).map(|b| tr.mul(ms.op(b))).collect();
            let cols = (0..ms.dim())
                .map(|k| {
                    let fm = Mat::from_fn(f, mt.dim(), db, |i, b| prods[b].get(i, k).clone());
                    coextension.coords_of(&fm).ok_or(RepError::Inconsistent("mate is not linear".into()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let map = Mat::from_columns(f, coextension.module.dim(), &cols);
            Ok(Mate::IntoCoextension { coextension, map })
        }
        Kind::Extension => {
            let extension = extend(&h, ms)?;
            let db = m.base().algebra(t).dim();
            let prods: Vec<Mat> = (0..db).map(|b| mt.op(b).mul(&tr)).collect();
            let raw = Mat::from_fn(f, mt.dim(), ms.dim() * db, |i, col| prods[col % db].get(i, col / db).clone());
            let map = extension.carrier.descend(&raw)?;
            Ok(Mate::FromExtension { extension, map })
        }
    }
}

/// Exactness hypothesis attached to a flavor's cartesian theory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub holds: bool,
    /// Pairs `(lo, hi)` where it fails.
    pub failures: Vec<(usize, usize)>,
}

/// Whether `B_big` is projective over `B_small` (through `h`) on `side`.
fn projective_over(h: &algmod::AlgebraMorphism, side: Side) -> bool {
    let reg = Module::regular(&h.target, side);
    is_projective(&restrict(h, &reg).expect("regular module over the target")).projective
}

/// Coflat maps for cis-comodules, sigma-injective ones for trans-comodules
/// and trans-contramodules, projectivity of the bigger algebra over the
/// smaller on the side that gets tensored (cis-modules) or homed
/// (trans-modules).
pub fn hypothesis(flavor: Flavor, rep: &Rep) -> Hypothesis {
    let mut failures = Vec::new();
    let base = rep.base();
    for (lo, hi) in rep.poset().pairs() {
        let ok = match (rep, flavor) {
            (Rep::Coalgebra(c), Flavor::CisComodule) => is_coflat(&c.morphism(lo, hi).expect("pair")),
            (Rep::Coalgebra(c), _) => is_sigma_injective(&c.morphism(lo, hi).expect("pair")),
            (Rep::Algebra(_), _) => {
                let h = base.map_between(lo, hi);
                match flavor.kind() {
                    Kind::Extension => projective_over(&h, flavor.side().flip()),
                    Kind::Coinduction => projective_over(&h, flavor.side()),
                }
            }
        };
        if !ok {
            failures.push((lo, hi));
        }
    }
    let name = match flavor {
        Flavor::CisComodule => "coflat",
        Flavor::TransComodule | Flavor::TransContramodule => "sigma-injective",
        Flavor::CisModule => "flat",
        Flavor::TransModule => "fg-projective",
    };
    Hypothesis { name, holds: failures.is_empty(), failures }
}

#[derive(Clone, Debug)]
pub struct CartesianReport {
    pub cartesian: bool,
    /// `((s, t), mate is an isomorphism)` per transition.
    pub arrows: Vec<((usize, usize), bool)>,
    pub hypothesis: Hypothesis,
}

pub fn is_cartesian(m: &RepObject) -> Result<CartesianReport, RepError> {
    let mut arrows = Vec::new();
    for (s, t) in m.transitions() {
        arrows.push(((s, t), mate(m, s, t)?.is_iso()));
    }
    Ok(CartesianReport {
        cartesian: arrows.iter().all(|a| a.1),
        arrows,
        hypothesis: hypothesis(m.flavor(), m.rep()),
    })
}

/// Smallest cartesian subobject of a cartesian `M` containing `vectors`
/// at `x`, as fiber subspaces.
///
/// Alternates closure under actions and transitions with the enlargement
/// each arrow forces on its source fiber: for coinduction-type flavors the
/// preimage `{m : T(B_s m) in S_t}`, for extension-type ones the least
/// `U` with `S_t` inside the image of `U (x) B_t`. The latter needs `B_t`
/// projective over `B_s`.
pub fn cartesian_hull_subspaces(m: &RepObject, x: usize, vectors: &[Vec<Scalar>]) -> Result<Vec<Subspace>, RepError> {
    if !is_cartesian(m)?.cartesian {
        return Err(RepError::Precondition("cartesian hull of a non-cartesian object".into()));
    }
    let f = m.field().clone();
    let transitions = m.transitions();
    let mut data = Vec::with_capacity(transitions.len());
    for &(s, t) in &transitions {
        let mt = mate(m, s, t)?;
        let prep = match &mt {
            Mate::IntoCoextension { .. } => Forcing::Preimage,
            Mate::FromExtension { extension, map } => {
                let h = m.base().map_between(s, t);
                let side = m.flavor().side().flip();
                if !projective_over(&h, side) {
                    return Err(RepError::Hypothesis(format!(
                        "B_{t} is not projective over B_{s}; the hull is not determined"
                    )));
                }
                let inverse = map.inverse().expect("cartesian");
                let functionals = functionals(&h, side);
                Forcing::Contraction { section: extension.carrier.section.clone(), inverse, functionals }
            }
        };
        data.push(prep);
    }
    let mut subs = m.generated_subspaces(x, vectors)?;
    loop {
        let before: usize = subs.iter().map(Subspace::dim).sum();
        for (&(s, t), forcing) in transitions.iter().zip(&data) {
            let forced = match forcing {
                Forcing::Preimage => {
                    let tr = m.transition(s, t).expect("transition");
                    let ms = m.fiber(s);
                    let mut p = Subspace::full(&f, ms.dim());
                    for b in 0..m.base().algebra(s).dim() {
                        p = p.intersection(&subs[t].preimage_under(&tr.mul(ms.op(b))))?;
                    }
                    p
                }
                Forcing::Contraction { section, inverse, functionals } => {
                    let ms = m.fiber(s);
                    let dbs = m.base().algebra(s).dim();
                    let mut gens = Vec::new();
                    for w in subs[t].basis_vectors() {
                        let z = section.apply(&inverse.apply(&w));
                        for lam in functionals {
                            // (id (x) lambda) z, then act
                            let y = Mat::identity(&f, ms.dim()).kron(lam).apply(&z);
                            let mut v = vec![f.zero(); ms.dim()];
                            for a in 0..dbs {
                                let part: Vec<Scalar> = (0..ms.dim()).map(|i| y[i * dbs + a].clone()).collect();
                                let img = ms.op(a).apply(&part);
                                for (acc, c) in v.iter_mut().zip(&img) {
                                    *acc = f.add(acc, c);
                                }
                            }
                            gens.push(v);
                        }
                    }
                    ms.generated(&gens)?
                }
            };
            subs[s] = subs[s].sum(&forced)?;
        }
        m.close(&mut subs)?;
        let after: usize = subs.iter().map(Subspace::dim).sum();
        if after == before {
            break;
        }
    }
    Ok(subs)
}

enum Forcing {
    Preimage,
    Contraction { section: Mat, inverse: Mat, functionals: Vec<Mat> },
}

/// Basis of `B_s`-linear maps `B_t -> B_s`, linear for the action on the
/// given side (`h` makes `B_t` a `B_s`-module).
fn functionals(h: &algmod::AlgebraMorphism, side: Side) -> Vec<Mat> {
    let (bs, bt) = (&h.source, &h.target);
    let (src, tgt): (Vec<Mat>, Vec<Mat>) = (0..bs.dim())
        .map(|a| {
            let ha = h.map.column(a);
            match side {
                Side::Left => (bt.left_mult_by(&ha), bs.left_mult(a)),
                Side::Right => (bt.right_mult_by(&ha), bs.right_mult(a)),
            }
        })
        .unzip();
    intertwiners(bs.field(), &src, &tgt, bt.dim(), bs.dim()).expect("same number of operators")
}

pub fn cartesian_hull(m: &RepObject, x: usize, vectors: &[Vec<Scalar>]) -> Result<(RepObject, RepMorphism), RepError> {
    let subs = cartesian_hull_subspaces(m, x, vectors)?;
    let (sub, inc) = m.subobject(&subs)?;
    if !is_cartesian(&sub)?.cartesian {
        return Err(RepError::Inconsistent("hull is not cartesian".into()));
    }
    Ok((sub, inc))
}
