//! Finite duals of finite-dimensional algebras.

use algmod::Algebra;
use coalg::Coalgebra;

use crate::{PairedAlgebra, RationalError};

/// `A* ` with `Delta = mult^T`, `eps = unit^T`.
pub fn finite_dual(a: &Algebra) -> Result<Coalgebra, RationalError> {
    Ok(Coalgebra::new(a.field(), a.dim(), a.mult().transpose(), a.unit().transpose())?)
}

/// Only finite-dimensional algebras are supported; a presentation is refused.
pub fn finite_dual_of(a: &PairedAlgebra) -> Result<Coalgebra, RationalError> {
    match a {
        PairedAlgebra::Finite(a) => finite_dual(a),
        PairedAlgebra::Presented { .. } => Err(RationalError::Unsupported(
            "finite dual of a presented algebra (only finite-dimensional algebras)".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactla::Field;

    #[test]
    fn known_duals() {
        let f = Field::Gf(5);
        assert_eq!(finite_dual(&Algebra::product(&f, 2)).unwrap(), Coalgebra::grouplike(&f, 2));
        assert_eq!(finite_dual(&Algebra::truncated_poly(&f, 2)).unwrap(), Coalgebra::divided_power(&f, 2));
        assert_eq!(finite_dual(&Algebra::ground(&f)).unwrap(), Coalgebra::ground(&f));
        let p = PairedAlgebra::Presented { generators: 1, relations: vec![] };
        assert!(matches!(finite_dual_of(&p), Err(RationalError::Unsupported(_))));
    }
}
