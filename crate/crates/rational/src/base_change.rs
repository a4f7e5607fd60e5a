//! Base change along a cocommutative `alpha: C -> D`:
//! `alpha^!(M [x]_D N) = alpha^*M [x]_C alpha^!N` and
//! `Hom_D(N, alpha_* P) = Hom_C(alpha^!N, P)` restricted to `D`.

use coalg::{cohom, cohom_unit, corestrict, is_comodule_map, CoalgebraMorphism, RightComodule};
use contra::{contraextend, contrarestrict, contratensor, hom_comodule_contra, is_contra_map, Bicomodule, Contramodule};
use exactla::Mat;

use crate::RationalError;

/// Both sides of one isomorphism and the canonical map between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub left_dim: usize,
    pub right_dim: usize,
    /// `None` when the canonical map is not well defined.
    pub map: Option<Mat>,
    /// The map respects the (co)module structures.
    pub structural: bool,
    pub iso: bool,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.left_dim == self.right_dim && self.structural && self.iso
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseChangeReport {
    /// `[[m (x) n] (x) f] -> [[m (x) eps] (x) [n (x) f]]`.
    pub contratensor: Comparison,
    /// `phi -> phi . (n -> [n (x) 1])`.
    pub hom: Comparison,
}

impl BaseChangeReport {
    pub fn holds(&self) -> bool {
        self.contratensor.holds() && self.hom.holds()
    }
}

/// `M` a contramodule and `N` a comodule over `D`, `P` a comodule over `C`.
pub fn base_change_certificates(
    alpha: &CoalgebraMorphism,
    m: &Contramodule,
    n: &RightComodule,
    p: &RightComodule,
) -> Result<BaseChangeReport, RationalError> {
    let (c, d) = (&alpha.source, &alpha.target);
    if !c.is_cocommutative() || !d.is_cocommutative() {
        return Err(RationalError::Hypothesis("both coalgebras must be cocommutative".into()));
    }
    if m.coalgebra() != d || n.coalgebra() != d || p.coalgebra() != c {
        return Err(RationalError::Mismatch("M, N over the target and P over the source".into()));
    }
    let f = c.field();
    let (dm, dn, dc) = (m.dim(), n.dim(), c.dim());

    // contratensor side
    let q = contratensor(m, &Bicomodule::from_cocommutative(n)?)?;
    let left = cohom(alpha, &q.comodule)?;
    let ext = contraextend(alpha, m)?;
    let h = cohom(alpha, n)?;
    let right = contratensor(&ext.contramodule, &Bicomodule::from_cocommutative(&h.comodule)?)?;
    let onto_left = left.extension.carrier.projection.mul(&q.carrier.projection.kron(&Mat::identity(f, dc)));
    let eps = Mat::from_columns(f, dc, &[c.eps().row(0)]);
    let a = ext.carrier.projection.mul(&Mat::identity(f, dm).kron(&eps));
    let raw = right.carrier.projection.mul(&a.kron(&h.extension.carrier.projection));
    debug_assert_eq!(raw.shape().1, dm * dn * dc);
    let map = onto_left.transpose().solve_mat(&raw.transpose()).map(|x| x.transpose());
    let contratensor_cmp = match map {
        Some(x) => Comparison {
            left_dim: left.comodule.dim(),
            right_dim: right.comodule.dim(),
            structural: is_comodule_map(&left.comodule, &right.comodule, &x),
            iso: x.is_invertible(),
            map: Some(x),
        },
        None => Comparison {
            left_dim: left.comodule.dim(),
            right_dim: right.comodule.dim(),
            map: None,
            structural: false,
            iso: false,
        },
    };

    // hom side
    let pd = corestrict(alpha, p)?;
    let hom_left = hom_comodule_contra(&Bicomodule::from_cocommutative(n)?, &pd)?;
    let hom_c = hom_comodule_contra(&Bicomodule::from_cocommutative(&h.comodule)?, p)?;
    let hom_right = contrarestrict(alpha, &hom_c.contramodule)?;
    let unit = cohom_unit(alpha, n, &h);
    let (kr, kl) = (hom_right.dim(), hom_left.contramodule.dim());
    let mut cols = Vec::with_capacity(kr);
    let mut defined = true;
    for i in 0..kr {
        let mut e = vec![f.zero(); kr];
        e[i] = f.one();
        match hom_left.coords_of(&hom_c.map_at(&e).mul(&unit)) {
            Some(v) => cols.push(v),
            None => {
                defined = false;
                break;
            }
        }
    }
    let hom_cmp = if defined {
        let x = Mat::from_columns(f, kl, &cols);
        Comparison {
            left_dim: kl,
            right_dim: kr,
            structural: is_contra_map(&hom_right, &hom_left.contramodule, &x),
            iso: x.is_invertible(),
            map: Some(x),
        }
    } else {
        Comparison { left_dim: kl, right_dim: kr, map: None, structural: false, iso: false }
    };
    Ok(BaseChangeReport { contratensor: contratensor_cmp, hom: hom_cmp })
}
