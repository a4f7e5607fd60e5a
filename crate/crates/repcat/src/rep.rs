//! Representations of a finite poset in coalgebras or algebras, and the
//! five kinds of objects over them.

use std::collections::BTreeMap;

use algmod::{Algebra, AlgebraMorphism, Side};
use coalg::{Coalgebra, CoalgebraMorphism};
use exactla::{difference_witness, Field, Violation};

use crate::{FinitePoset, RepError};

/// `x -> C_x` with a coalgebra map `C_lo -> C_hi` for every pair `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraRep {
    poset: FinitePoset,
    fibers: Vec<Coalgebra>,
    arrows: BTreeMap<(usize, usize), CoalgebraMorphism>,
}

/// `x -> A_x` with an algebra map `A_lo -> A_hi` for every pair `lo < hi`.
/// Contravariant data is expressed over the opposite poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraRep {
    poset: FinitePoset,
    fibers: Vec<Algebra>,
    arrows: BTreeMap<(usize, usize), AlgebraMorphism>,
}

fn missing_pairs<T>(poset: &FinitePoset, arrows: &BTreeMap<(usize, usize), T>) -> Result<(), RepError> {
    for p in poset.pairs() {
        if !arrows.contains_key(&p) {
            return Err(RepError::Shape(format!("no arrow for the pair {p:?}")));
        }
    }
    if let Some(k) = arrows.keys().find(|&&(a, b)| !poset.contains(a) || !poset.contains(b) || !poset.lt(a, b)) {
        return Err(RepError::Shape(format!("arrow {k:?} is not a strict pair of the poset")));
    }
    Ok(())
}

/// Composites along every chain ending in a cover, from maps on covers.
fn close_covers<T: Clone>(
    poset: &FinitePoset,
    covers: &BTreeMap<(usize, usize), T>,
    compose: impl Fn(&T, &T) -> Result<T, RepError>,
) -> Result<BTreeMap<(usize, usize), T>, RepError> {
    for c in poset.covers() {
        if !covers.contains_key(&c) {
            return Err(RepError::Shape(format!("no arrow for the cover {c:?}")));
        }
    }
    let mut all: BTreeMap<(usize, usize), T> = BTreeMap::new();
    // pairs sorted by the length of the interval, so shorter composites exist first
    let mut pairs = poset.pairs();
    pairs.sort_by_key(|&(a, b)| (0..poset.len()).filter(|&m| poset.leq(a, m) && poset.leq(m, b)).count());
    for (a, b) in pairs {
        if let Some(t) = covers.get(&(a, b)) {
            all.insert((a, b), t.clone());
            continue;
        }
        let m = (0..poset.len())
            .find(|&m| poset.lt(a, m) && poset.lt(m, b) && covers.contains_key(&(m, b)))
            .ok_or_else(|| RepError::Shape(format!("pair ({a}, {b}) is not reachable through covers")))?;
        let first = all.get(&(a, m)).expect("shorter interval").clone();
        all.insert((a, b), compose(&first, &covers[&(m, b)])?);
    }
    Ok(all)
}

impl CoalgebraRep {
    pub fn new(
        poset: FinitePoset,
        fibers: Vec<Coalgebra>,
        arrows: BTreeMap<(usize, usize), CoalgebraMorphism>,
    ) -> Result<CoalgebraRep, RepError> {
        let r = CoalgebraRep::unchecked(poset, fibers, arrows)?;
        let v = r.check();
        if v.is_empty() {
            Ok(r)
        } else {
            Err(RepError::Invalid { what: "coalgebra representation".into(), violations: v })
        }
    }

    pub fn unchecked(
        poset: FinitePoset,
        fibers: Vec<Coalgebra>,
        arrows: BTreeMap<(usize, usize), CoalgebraMorphism>,
    ) -> Result<CoalgebraRep, RepError> {
        if fibers.len() != poset.len() {
            return Err(RepError::Shape("one coalgebra per poset element".into()));
        }
        missing_pairs(&poset, &arrows)?;
        if fibers.windows(2).any(|w| w[0].field() != w[1].field()) {
            return Err(RepError::Mismatch("coalgebras over different fields".into()));
        }
        Ok(CoalgebraRep { poset, fibers, arrows })
    }

    /// Maps on covering pairs, composed along chains.
    pub fn from_covers(
        poset: FinitePoset,
        fibers: Vec<Coalgebra>,
        covers: BTreeMap<(usize, usize), CoalgebraMorphism>,
    ) -> Result<CoalgebraRep, RepError> {
        let arrows = close_covers(&poset, &covers, |f, g| Ok(f.then(g)?))?;
        CoalgebraRep::new(poset, fibers, arrows)
    }

    /// The same coalgebra everywhere with identity maps.
    pub fn constant(poset: FinitePoset, c: &Coalgebra) -> CoalgebraRep {
        let arrows = poset.pairs().into_iter().map(|p| (p, CoalgebraMorphism::identity(c))).collect();
        CoalgebraRep { fibers: vec![c.clone(); poset.len()], poset, arrows }
    }

    /// Chain `0 < 1` along one morphism.
    pub fn arrow(alpha: &CoalgebraMorphism) -> CoalgebraRep {
        let arrows = BTreeMap::from([((0, 1), alpha.clone())]);
        CoalgebraRep {
            poset: FinitePoset::chain(2),
            fibers: vec![alpha.source.clone(), alpha.target.clone()],
            arrows,
        }
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn field(&self) -> &Field {
        self.fibers[0].field()
    }

    pub fn fiber(&self, x: usize) -> &Coalgebra {
        &self.fibers[x]
    }

    pub fn fibers(&self) -> &[Coalgebra] {
        &self.fibers
    }

    /// The morphism `C_lo -> C_hi`; identity when `lo == hi`.
    pub fn morphism(&self, lo: usize, hi: usize) -> Option<CoalgebraMorphism> {
        if lo == hi {
            return Some(CoalgebraMorphism::identity(&self.fibers[lo]));
        }
        self.arrows.get(&(lo, hi)).cloned()
    }

    pub fn arrows(&self) -> &BTreeMap<(usize, usize), CoalgebraMorphism> {
        &self.arrows
    }

    pub fn is_cocommutative(&self) -> bool {
        self.fibers.iter().all(Coalgebra::is_cocommutative)
    }

    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (x, c) in self.fibers.iter().enumerate() {
            for v in c.check() {
                out.push(Violation::new(format!("coalgebra at {x}: {}", v.law), v.witness));
            }
        }
        for (&(a, b), al) in &self.arrows {
            if al.source != self.fibers[a] || al.target != self.fibers[b] {
                out.push(Violation::new(format!("arrow ({a}, {b}) has the wrong ends"), Vec::new()));
                continue;
            }
            for v in al.check() {
                out.push(Violation::new(format!("arrow ({a}, {b}): {}", v.law), v.witness));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (a, b, c) in self.poset.triples() {
            let comp = self.arrows[&(b, c)].map.mul(&self.arrows[&(a, b)].map);
            if let Some(w) = difference_witness(&comp, &self.arrows[&(a, c)].map) {
                out.push(Violation::new(format!("functoriality along {a} < {b} < {c}"), w));
            }
        }
        out
    }

    pub fn base(&self) -> Base {
        Base {
            poset: self.poset.clone(),
            algebras: self.fibers.iter().map(Coalgebra::dual_algebra).collect(),
            maps: self.arrows.iter().map(|(&k, al)| (k, al.dual())).collect(),
        }
    }
}

impl AlgebraRep {
    pub fn new(
        poset: FinitePoset,
        fibers: Vec<Algebra>,
        arrows: BTreeMap<(usize, usize), AlgebraMorphism>,
    ) -> Result<AlgebraRep, RepError> {
        let r = AlgebraRep::unchecked(poset, fibers, arrows)?;
        let v = r.check();
        if v.is_empty() {
            Ok(r)
        } else {
            Err(RepError::Invalid { what: "algebra representation".into(), violations: v })
        }
    }

    pub fn unchecked(
        poset: FinitePoset,
        fibers: Vec<Algebra>,
        arrows: BTreeMap<(usize, usize), AlgebraMorphism>,
    ) -> Result<AlgebraRep, RepError> {
        if fibers.len() != poset.len() {
            return Err(RepError::Shape("one algebra per poset element".into()));
        }
        missing_pairs(&poset, &arrows)?;
        if fibers.windows(2).any(|w| w[0].field() != w[1].field()) {
            return Err(RepError::Mismatch("algebras over different fields".into()));
        }
        Ok(AlgebraRep { poset, fibers, arrows })
    }

    pub fn from_covers(
        poset: FinitePoset,
        fibers: Vec<Algebra>,
        covers: BTreeMap<(usize, usize), AlgebraMorphism>,
    ) -> Result<AlgebraRep, RepError> {
        let arrows = close_covers(&poset, &covers, |f, g| Ok(f.then(g)?))?;
        AlgebraRep::new(poset, fibers, arrows)
    }

    pub fn constant(poset: FinitePoset, a: &Algebra) -> AlgebraRep {
        let arrows = poset.pairs().into_iter().map(|p| (p, AlgebraMorphism::identity(a))).collect();
        AlgebraRep { fibers: vec![a.clone(); poset.len()], poset, arrows }
    }

    pub fn arrow(alpha: &AlgebraMorphism) -> AlgebraRep {
        AlgebraRep {
            poset: FinitePoset::chain(2),
            fibers: vec![alpha.source.clone(), alpha.target.clone()],
            arrows: BTreeMap::from([((0, 1), alpha.clone())]),
        }
    }

    /// The dual algebras of a coalgebra representation, over the opposite
    /// poset so that the maps keep pointing from `lo` to `hi`.
    pub fn dual_of(c: &CoalgebraRep) -> AlgebraRep {
        let arrows = c.arrows.iter().map(|(&(a, b), al)| ((b, a), al.dual())).collect();
        AlgebraRep {
            poset: c.poset.opposite(),
            fibers: c.fibers.iter().map(Coalgebra::dual_algebra).collect(),
            arrows,
        }
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn field(&self) -> &Field {
        self.fibers[0].field()
    }

    pub fn fiber(&self, x: usize) -> &Algebra {
        &self.fibers[x]
    }

    pub fn fibers(&self) -> &[Algebra] {
        &self.fibers
    }

    pub fn morphism(&self, lo: usize, hi: usize) -> Option<AlgebraMorphism> {
        if lo == hi {
            return Some(AlgebraMorphism::identity(&self.fibers[lo]));
        }
        self.arrows.get(&(lo, hi)).cloned()
    }

    pub fn arrows(&self) -> &BTreeMap<(usize, usize), AlgebraMorphism> {
        &self.arrows
    }

    pub fn check(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (x, a) in self.fibers.iter().enumerate() {
            for v in a.check() {
                out.push(Violation::new(format!("algebra at {x}: {}", v.law), v.witness));
            }
        }
        for (&(a, b), al) in &self.arrows {
            if al.source != self.fibers[a] || al.target != self.fibers[b] {
                out.push(Violation::new(format!("arrow ({a}, {b}) has the wrong ends"), Vec::new()));
                continue;
            }
            for v in al.check() {
                out.push(Violation::new(format!("arrow ({a}, {b}): {}", v.law), v.witness));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (a, b, c) in self.poset.triples() {
            let comp = self.arrows[&(b, c)].map.mul(&self.arrows[&(a, b)].map);
            if let Some(w) = difference_witness(&comp, &self.arrows[&(a, c)].map) {
                out.push(Violation::new(format!("functoriality along {a} < {b} < {c}"), w));
            }
        }
        out
    }

    pub fn base(&self) -> Base {
        Base { poset: self.poset.clone(), algebras: self.fibers.clone(), maps: self.arrows.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rep {
    Coalgebra(CoalgebraRep),
    Algebra(AlgebraRep),
}

impl Rep {
    pub fn poset(&self) -> &FinitePoset {
        match self {
            Rep::Coalgebra(c) => c.poset(),
            Rep::Algebra(a) => a.poset(),
        }
    }

    pub fn field(&self) -> &Field {
        match self {
            Rep::Coalgebra(c) => c.field(),
            Rep::Algebra(a) => a.field(),
        }
    }

    pub fn base(&self) -> Base {
        match self {
            Rep::Coalgebra(c) => c.base(),
            Rep::Algebra(a) => a.base(),
        }
    }

    pub fn check(&self) -> Vec<Violation> {
        match self {
            Rep::Coalgebra(c) => c.check(),
            Rep::Algebra(a) => a.check(),
        }
    }

    pub fn as_coalgebra(&self) -> Option<&CoalgebraRep> {
        match self {
            Rep::Coalgebra(c) => Some(c),
            Rep::Algebra(_) => None,
        }
    }
}

/// The algebras the fibers are modules over: `C_x*` for comodules and
/// contramodules, `A_x` for modules. `maps[(lo, hi)]` is `alpha^T: C_hi* ->
/// C_lo*` in the first case and `A_alpha: A_lo -> A_hi` in the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Base {
    pub poset: FinitePoset,
    pub algebras: Vec<Algebra>,
    pub maps: BTreeMap<(usize, usize), AlgebraMorphism>,
}

impl Base {
    pub fn algebra(&self, x: usize) -> &Algebra {
        &self.algebras[x]
    }

    /// The algebra map attached to two comparable points, in whichever
    /// direction it runs.
    pub fn map_between(&self, a: usize, b: usize) -> AlgebraMorphism {
        if a == b {
            return AlgebraMorphism::identity(&self.algebras[a]);
        }
        let key = if self.poset.lt(a, b) { (a, b) } else { (b, a) };
        self.maps[&key].clone()
    }
}

/// Which kind of object sits over a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    CisComodule,
    TransComodule,
    TransContramodule,
    CisModule,
    TransModule,
}

/// How a stored transition `T: M_s -> M_t` relates the two actions.
///
/// `Coinduction`: `h: B_t -> B_s` and `T op_s(h b) = op_t(b) T`; the other
/// mate lands in a coextension. `Extension`: `h: B_s -> B_t` and
/// `T op_s(a) = op_t(h a) T`; the other mate starts at an extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Coinduction,
    Extension,
}

impl Flavor {
    pub const ALL: [Flavor; 5] =
        [Flavor::CisComodule, Flavor::TransComodule, Flavor::TransContramodule, Flavor::CisModule, Flavor::TransModule];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::CisComodule => "cis-comodule",
            Flavor::TransComodule => "trans-comodule",
            Flavor::TransContramodule => "trans-contramodule",
            Flavor::CisModule => "cis-module",
            Flavor::TransModule => "trans-module",
        }
    }

    pub fn from_name(s: &str) -> Option<Flavor> {
        Flavor::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Transitions run from `lo` to `hi`.
    pub fn is_cis(self) -> bool {
        matches!(self, Flavor::CisComodule | Flavor::CisModule)
    }

    pub fn over_coalgebras(self) -> bool {
        !matches!(self, Flavor::CisModule | Flavor::TransModule)
    }

    pub fn kind(self) -> Kind {
        match self {
            Flavor::CisComodule | Flavor::TransModule => Kind::Coinduction,
            _ => Kind::Extension,
        }
    }

    /// Comodules and contramodules are left modules over the dual algebra;
    /// modules are right modules.
    pub fn side(self) -> Side {
        if self.over_coalgebras() {
            Side::Left
        } else {
            Side::Right
        }
    }

    /// Transitions as `(source, target)` pairs.
    pub fn transitions(self, poset: &FinitePoset) -> Vec<(usize, usize)> {
        poset.pairs().into_iter().map(|(lo, hi)| if self.is_cis() { (lo, hi) } else { (hi, lo) }).collect()
    }
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
