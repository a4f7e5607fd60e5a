//! Contratensor products and comodule homs as contramodules.

use algmod::{balanced_tensor, transposition_rank};
use coalg::{hom_comodules, Coalgebra, LeftComodule, RightComodule};
use exactla::{swap_matrix, Field, Mat, Quotient, Subspace};

use crate::{hom_contra, is_contra_map, ContraError, Contramodule};

/// A space with commuting left and right `C`-coactions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicomodule {
    left: LeftComodule,
    right: RightComodule,
}

impl Bicomodule {
    pub fn new(left: LeftComodule, right: RightComodule) -> Result<Bicomodule, ContraError> {
        if left.coalgebra() != right.coalgebra() || left.dim() != right.dim() {
            return Err(ContraError::Mismatch("bicomodule: coactions on different spaces".into()));
        }
        let b = Bicomodule { left, right };
        if !b.coactions_commute() {
            return Err(ContraError::Hypothesis("bicomodule: left and right coactions do not commute".into()));
        }
        Ok(b)
    }

    /// Right comodule over a cocommutative coalgebra, with `lambda = swap rho`.
    pub fn from_cocommutative(right: &RightComodule) -> Result<Bicomodule, ContraError> {
        let left = right.as_left().map_err(|_| {
            ContraError::Hypothesis("a right comodule is a bicomodule only over a cocommutative coalgebra".into())
        })?;
        Bicomodule::new(left, right.clone())
    }

    /// `C` with `Delta` on both sides.
    pub fn regular(c: &Coalgebra) -> Bicomodule {
        Bicomodule { left: LeftComodule::regular(c), right: RightComodule::regular(c) }
    }

    pub fn left(&self) -> &LeftComodule {
        &self.left
    }

    pub fn right(&self) -> &RightComodule {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.right.dim()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        self.right.coalgebra()
    }

    fn coactions_commute(&self) -> bool {
        let f = self.right.field();
        let idc = Mat::identity(f, self.coalgebra().dim());
        idc.kron(self.right.rho()).mul(self.left.rho()) == self.left.rho().kron(&idc).mul(self.right.rho())
    }
}

/// `M [x]_C N` as a quotient of `M (x) N`, with the right coaction of `N`.
#[derive(Clone, Debug)]
pub struct Contratensor {
    pub comodule: RightComodule,
    pub carrier: Quotient,
}

/// Coequalizer of `pi (x) id` and `id (x) (contract along lambda)` on
/// `M (x) C* (x) N -> M (x) N`.
pub fn contratensor(m: &Contramodule, n: &Bicomodule) -> Result<Contratensor, ContraError> {
    let c = m.coalgebra();
    if n.coalgebra() != c {
        return Err(ContraError::Mismatch("contratensor over different coalgebras".into()));
    }
    let f = c.field();
    let (dm, dn) = (m.dim(), n.dim());
    let (idm, idn) = (Mat::identity(f, dm), Mat::identity(f, dn));
    let lam = n.left.contractions();
    let mut rel = Vec::new();
    for (pc, lc) in m.ops().iter().zip(&lam) {
        rel.extend(pc.kron(&idn).sub(&idm.kron(lc)).columns());
    }
    let w = Subspace::span_vectors(f, dm * dn, &rel);
    let ambient = RightComodule::unchecked(c, dm * dn, idm.kron(n.right.rho()))?;
    if !ambient.is_subcomodule(&w) {
        return Err(ContraError::Hypothesis("contratensor: relations are not a subcomodule".into()));
    }
    let (comodule, carrier) = ambient.quotient(&w)?;
    Ok(Contratensor { comodule, carrier })
}

/// `N (x)_{C*} M` over the dual algebra, `N` acted on through `lambda`.
pub fn contratensor_by_balanced_tensor(m: &Contramodule, n: &Bicomodule) -> Result<Quotient, ContraError> {
    Ok(balanced_tensor(&n.left.to_module(), &m.to_module())?)
}

/// The flip `N (x) M -> M (x) N` descended to the two quotients, if it
/// is well defined.
pub fn contratensor_comparison(m: &Contramodule, n: &Bicomodule) -> Result<Mat, ContraError> {
    let f = m.field();
    let ct = contratensor(m, n)?;
    let bt = contratensor_by_balanced_tensor(m, n)?;
    let flip = ct.carrier.projection.mul(&swap_matrix(f, n.dim(), m.dim()));
    Ok(bt.descend(&flip)?)
}

/// `C* [x]_C N -> N`, `f (x) n -> (f (x) id) lambda(n)`.
pub fn free_contratensor_comparison(n: &Bicomodule) -> Result<(Contratensor, Mat), ContraError> {
    let c = n.coalgebra();
    let f = c.field();
    let t = Contramodule::free(c, 1);
    let ct = contratensor(&t, n)?;
    let lam = n.left.contractions();
    let dn = n.dim();
    let raw = Mat::from_fn(f, dn, c.dim() * dn, |i, col| lam[col / dn].get(i, col % dn).clone());
    let map = ct.carrier.descend(&raw)?;
    Ok((ct, map))
}

/// `Hom_C(N, P)` with `P_c phi = phi lambda^c`; column `i` of `basis` is the
/// row-major `dim P x dim N` matrix of the `i`-th basis map.
#[derive(Clone, Debug)]
pub struct HomContra {
    pub contramodule: Contramodule,
    pub basis: Mat,
    pub rows: usize,
    pub cols: usize,
}

impl HomContra {
    pub fn map_at(&self, coords: &[exactla::Scalar]) -> Mat {
        Mat::from_vec(self.basis.field(), self.rows, self.cols, &self.basis.apply(coords))
    }

    pub fn coords_of(&self, phi: &Mat) -> Option<Vec<exactla::Scalar>> {
        self.basis.solve(&phi.vec())
    }
}

pub fn hom_comodule_contra(n: &Bicomodule, p: &RightComodule) -> Result<HomContra, ContraError> {
    let c = n.coalgebra();
    if p.coalgebra() != c {
        return Err(ContraError::Mismatch("comodule hom over different coalgebras".into()));
    }
    let f = c.field();
    let homs = hom_comodules(&n.right, p)?;
    let (rows, cols) = (p.dim(), n.dim());
    let basis = Mat::from_columns(f, rows * cols, &homs.iter().map(Mat::vec).collect::<Vec<_>>());
    let lam = n.left.contractions();
    let mut ops = Vec::with_capacity(c.dim());
    for lc in &lam {
        let imgs: Vec<_> = homs.iter().map(|h| h.mul(lc).vec()).collect();
        let op = basis
            .solve_mat(&Mat::from_columns(f, rows * cols, &imgs))
            .ok_or_else(|| ContraError::Hypothesis("comodule maps are not stable under lambda".into()))?;
        ops.push(op);
    }
    Ok(HomContra { contramodule: Contramodule::from_ops(c, homs.len(), &ops), basis, rows, cols })
}

/// Both sides of `Hom_C(M [x] N, P) = Hom_contra(M, Hom_C(N, P))` and
/// whether `psi -> (m -> psi[m (x) -])` is a bijection onto contramodule maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomComparison {
    pub hom_left: usize,
    pub hom_right: usize,
    pub bijection: bool,
}

impl HomComparison {
    pub fn holds(&self) -> bool {
        self.hom_left == self.hom_right && self.bijection
    }
}

pub fn certify_contratensor_hom(
    m: &Contramodule,
    n: &Bicomodule,
    p: &RightComodule,
) -> Result<HomComparison, ContraError> {
    let f = m.field().clone();
    let ct = contratensor(m, n)?;
    let h = hom_comodule_contra(n, p)?;
    let left = hom_comodules(&ct.comodule, p)?;
    let right = hom_contra(m, &h.contramodule)?;
    let transposed: Result<Vec<Mat>, ContraError> = left.iter().map(|psi| transpose(&f, m, n, &ct, &h, psi)).collect();
    let transposed = transposed?;
    let all_maps = transposed.iter().all(|t| is_contra_map(m, &h.contramodule, t));
    let rank = transposition_rank(&transposed, None, None);
    Ok(HomComparison {
        hom_left: left.len(),
        hom_right: right.len(),
        bijection: all_maps && rank == left.len() && rank == right.len(),
    })
}

fn transpose(f: &Field, m: &Contramodule, n: &Bicomodule, ct: &Contratensor, h: &HomContra, psi: &Mat) -> Result<Mat, ContraError> {
    let base = psi.mul(&ct.carrier.projection);
    let idn = Mat::identity(f, n.dim());
    let mut cols = Vec::with_capacity(m.dim());
    for k in 0..m.dim() {
        let at = Mat::column_vector(f, &Mat::unit_vector(f, m.dim(), k)).kron(&idn);
        let phi = base.mul(&at);
        cols.push(h.coords_of(&phi).ok_or_else(|| ContraError::Inconsistent("transpose is not a comodule map".into()))?);
    }
    Ok(Mat::from_columns(f, h.contramodule.dim(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn over_the_ground_field_it_is_the_tensor_product() {
        let f = Field::Gf(5);
        let k = Coalgebra::ground(&f);
        let m = Contramodule::free(&k, 2);
        let n = Bicomodule::from_cocommutative(&RightComodule::trivial_at(&k, 3, &[f.one()]).unwrap()).unwrap();
        assert_eq!(contratensor(&m, &n).unwrap().comodule.dim(), 6);
    }

    #[test]
    fn mismatched_grouplikes_collapse() {
        let f = Field::Q;
        let kg = Coalgebra::grouplike(&f, 2);
        let g = [f.one(), f.zero()];
        let h = [f.zero(), f.one()];
        let at_g = RightComodule::trivial_at(&kg, 1, &g).unwrap();
        let m = Contramodule::from_module(&kg, &at_g.to_module()).unwrap();
        let n = Bicomodule::from_cocommutative(&RightComodule::trivial_at(&kg, 1, &h).unwrap()).unwrap();
        assert_eq!(contratensor(&m, &n).unwrap().comodule.dim(), 0);
        assert_eq!(contratensor_by_balanced_tensor(&m, &n).unwrap().dim(), 0);
    }

    #[test]
    fn non_cocommutative_needs_both_coactions() {
        let f = Field::Gf(2);
        let mc = Coalgebra::matrix(&f, 2);
        assert!(matches!(
            Bicomodule::from_cocommutative(&RightComodule::regular(&mc)),
            Err(ContraError::Hypothesis(_))
        ));
        assert!(Bicomodule::new(LeftComodule::regular(&mc), RightComodule::regular(&mc)).is_ok());
    }
}
