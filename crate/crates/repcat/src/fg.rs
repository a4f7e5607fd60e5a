//! Contratensoring trans-contramodules with a cartesian trans-comodule `N`,
//! and its right adjoint `Hom_C(N, -)`.

use std::collections::BTreeMap;

use contra::{contratensor, hom_comodule_contra, Bicomodule, Contratensor, HomContra};
use exactla::{Mat, Scalar};

use crate::{hom_rep, is_cartesian, Flavor, Rep, RepError, RepObject};

fn require(n: &RepObject) -> Result<Vec<Bicomodule>, RepError> {
    if n.flavor() != Flavor::TransComodule {
        return Err(RepError::Mismatch("N must be a trans-comodule".into()));
    }
    let Rep::Coalgebra(c) = n.rep() else { unreachable!("trans-comodules live over coalgebras") };
    if !c.is_cocommutative() {
        return Err(RepError::Hypothesis("the coalgebras are not all cocommutative".into()));
    }
    if !is_cartesian(n)?.cartesian {
        return Err(RepError::Hypothesis("N is not cartesian".into()));
    }
    (0..n.len())
        .map(|x| Ok(Bicomodule::from_cocommutative(&n.comodule_at(x)?)?))
        .collect()
}

/// `F(M)_x = M_x [x] N_x` with transitions induced by `T_M (x) T_N`.
pub fn functor_f(m: &RepObject, n: &RepObject) -> Result<(RepObject, Vec<Contratensor>), RepError> {
    if m.flavor() != Flavor::TransContramodule || m.rep() != n.rep() {
        return Err(RepError::Mismatch("F takes a trans-contramodule over the same representation".into()));
    }
    let bis = require(n)?;
    let cts: Vec<Contratensor> = (0..m.len())
        .map(|x| contratensor(&m.contramodule_at(x)?, &bis[x]).map_err(RepError::from))
        .collect::<Result<_, _>>()?;
    let mut structure = BTreeMap::new();
    for (s, t) in n.transitions() {
        let raw = cts[t].carrier.projection.mul(&m.transition(s, t).expect("pair").kron(&n.transition(s, t).expect("pair")));
        structure.insert((s, t), cts[s].carrier.descend(&raw)?);
    }
    let fibers = cts.iter().map(|c| c.comodule.to_module()).collect();
    let obj = RepObject::new(Flavor::TransComodule, n.rep(), fibers, structure)?;
    Ok((obj, cts))
}

/// `G(P)_x = Hom_{C_x}(N_x, P_x)`; the transition sends `phi` to the
/// unique comodule map `psi` with `psi T_N = T_P phi`.
pub fn functor_g(p: &RepObject, n: &RepObject) -> Result<(RepObject, Vec<HomContra>), RepError> {
    if p.flavor() != Flavor::TransComodule || p.rep() != n.rep() {
        return Err(RepError::Mismatch("G takes a trans-comodule over the same representation".into()));
    }
    let bis = require(n)?;
    let f = p.field().clone();
    let homs: Vec<HomContra> = (0..p.len())
        .map(|x| hom_comodule_contra(&bis[x], &p.comodule_at(x)?).map_err(RepError::from))
        .collect::<Result<_, _>>()?;
    let mut structure = BTreeMap::new();
    for (s, t) in n.transitions() {
        let (tn, tp) = (n.transition(s, t).expect("pair"), p.transition(s, t).expect("pair"));
        let (hs, ht) = (&homs[s], &homs[t]);
        let (ds, dt) = (hs.contramodule.dim(), ht.contramodule.dim());
        let len = ht.rows * n.fiber(s).dim();
        let along: Vec<Vec<Scalar>> =
            (0..dt).map(|j| ht.map_at(&Mat::unit_vector(&f, dt, j)).mul(&tn).vec()).collect();
        let a = Mat::from_columns(&f, len, &along);
        let cols = (0..ds)
            .map(|i| {
                let target = tp.mul(&hs.map_at(&Mat::unit_vector(&f, ds, i))).vec();
                a.solve(&target).ok_or_else(|| RepError::Inconsistent(format!("no transported map along {s} -> {t}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        structure.insert((s, t), Mat::from_columns(&f, dt, &cols));
    }
    let fibers = homs.iter().map(|h| h.contramodule.to_module()).collect();
    let obj = RepObject::new(Flavor::TransContramodule, n.rep(), fibers, structure)?;
    Ok((obj, homs))
}

/// `dim Hom(F M, P)` against `dim Hom(M, G P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgCertificate {
    pub hom_left: usize,
    pub hom_right: usize,
}

impl FgCertificate {
    pub fn holds(&self) -> bool {
        self.hom_left == self.hom_right
    }
}

pub fn certify_fg(m: &RepObject, n: &RepObject, p: &RepObject) -> Result<FgCertificate, RepError> {
    let (fm, _) = functor_f(m, n)?;
    let (gp, _) = functor_g(p, n)?;
    Ok(FgCertificate { hom_left: hom_rep(&fm, p)?.len(), hom_right: hom_rep(m, &gp)?.len() })
}
