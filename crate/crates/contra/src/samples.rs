//! Standard contramodules for tests and the corpus.

use coalg::{samples as co, Coalgebra};
use exactla::Mat;

use crate::Contramodule;

/// Free on one and two generators, every sample comodule read as a
/// contramodule through the dual algebra, and quotients of `T_C(K)` by
/// cyclic subcontramodules.
pub fn contramodules(c: &Coalgebra) -> Vec<Contramodule> {
    let f = c.field();
    let free = Contramodule::free(c, 1);
    let mut out = vec![free.clone()];
    let mut push = |m: Contramodule| {
        if m.dim() > 0 && !out.contains(&m) {
            out.push(m);
        }
    };
    if c.dim() <= 2 {
        push(Contramodule::free(c, 2));
    }
    for m in co::comodules(c) {
        push(Contramodule::from_module(c, &m.to_module()).expect("left dual module"));
    }
    let module = free.to_module();
    for i in 0..c.dim() {
        let s = module.generated(&[Mat::unit_vector(f, c.dim(), i)]).expect("in range");
        if s.dim() < c.dim() {
            push(free.quotient(&s).expect("subcontramodule").0);
        }
    }
    out
}

/// Corruptions breaking the counit law: `pi = 0`, and `e_i` added to
/// `P_0 e_i` (every sample has `eps(e_0) = 1`).
pub fn mutated_contramodules(m: &Contramodule) -> Vec<(String, Contramodule)> {
    let c = m.coalgebra();
    let f = c.field();
    let (n, d) = (m.dim(), c.dim());
    let mut out = vec![("pi = 0".to_string(), Contramodule::unchecked(c, n, Mat::zeros(f, n, n * d)).expect("shape"))];
    for i in 0..n {
        let mut pi = m.pi().clone();
        pi.set(i, i * d, f.add(m.pi().get(i, i * d), &f.one()));
        out.push((format!("P_0 m{i} += m{i}"), Contramodule::unchecked(c, n, pi).expect("shape")));
    }
    out
}
