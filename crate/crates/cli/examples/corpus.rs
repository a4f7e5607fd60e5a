//! Writes the shipped corpus: `cargo run -p cli --example corpus -- <dir>`.
//! The files are checked in; the `corpus` test fails if this program would
//! now write something different.

use std::collections::BTreeMap;
use std::path::PathBuf;

use algmod::{Algebra, AlgebraMorphism, Side};
use cli::{
    encode, Comodule, ComoduleData, Document, Morphism, MorphismData, NamedContramodule, NamedModule, Object, Pairing,
    Representation,
};
use coalg::{Coalgebra, CoalgebraMorphism, LeftComodule, RightComodule};
use contra::Contramodule;
use exactla::{Field, Mat};
use rational::{samples as rs, ActionData, RationalPairing};
use repcat::{samples as rc, AlgebraRep, CoalgebraRep, FinitePoset, Flavor, Rep, RepObject};

struct Builder {
    doc: Document,
}

impl Builder {
    fn new(f: &Field) -> Builder {
        Builder { doc: Document::new(f.clone()) }
    }

    fn f(&self) -> Field {
        self.doc.field.clone()
    }

    /// Name of an equal coalgebra already present, or `hint` for a new one.
    fn coalgebra(&mut self, c: &Coalgebra, hint: &str) -> String {
        if let Some((n, _)) = self.doc.coalgebras.iter().find(|(_, x)| *x == c) {
            return n.clone();
        }
        self.doc.coalgebras.insert(hint.into(), c.clone());
        hint.into()
    }

    fn algebra(&mut self, a: &Algebra, hint: &str) -> String {
        if let Some((n, _)) = self.doc.algebras.iter().find(|(_, x)| *x == a) {
            return n.clone();
        }
        self.doc.algebras.insert(hint.into(), a.clone());
        hint.into()
    }

    fn poset(&mut self, p: &FinitePoset, hint: &str) -> String {
        if let Some((n, _)) = self.doc.posets.iter().find(|(_, x)| *x == p) {
            return n.clone();
        }
        self.doc.posets.insert(hint.into(), p.clone());
        hint.into()
    }

    fn cmorph(&mut self, name: &str, source: &str, target: &str, m: &CoalgebraMorphism) -> String {
        let data = MorphismData::Coalgebra(m.clone());
        if let Some((n, _)) = self.doc.morphisms.iter().find(|(_, x)| x.data == data && x.source == source && x.target == target) {
            return n.clone();
        }
        self.doc.morphisms.insert(name.into(), Morphism { source: source.into(), target: target.into(), data });
        name.into()
    }

    fn amorph(&mut self, name: &str, source: &str, target: &str, m: &AlgebraMorphism) -> String {
        let data = MorphismData::Algebra(m.clone());
        if let Some((n, _)) = self.doc.morphisms.iter().find(|(_, x)| x.data == data && x.source == source && x.target == target) {
            return n.clone();
        }
        self.doc.morphisms.insert(name.into(), Morphism { source: source.into(), target: target.into(), data });
        name.into()
    }

    fn crep(&mut self, name: &str, r: &CoalgebraRep, hints: &[&str]) -> String {
        let poset = self.poset(r.poset(), &format!("{name}_poset"));
        let fibers: Vec<String> =
            r.fibers().iter().enumerate().map(|(x, c)| self.coalgebra(c, hints.get(x).copied().unwrap_or("C"))).collect();
        let mut arrows = BTreeMap::new();
        for (a, b) in r.poset().covers() {
            let m = r.morphism(a, b).expect("cover");
            let n = self.cmorph(&format!("{}_to_{}", fibers[a], fibers[b]), &fibers[a], &fibers[b], &m);
            arrows.insert((a, b), n);
        }
        let rep = Rep::Coalgebra(r.clone());
        self.doc.representations.insert(name.into(), Representation { poset, fibers, arrows, rep });
        name.into()
    }

    fn arep(&mut self, name: &str, r: &AlgebraRep, hints: &[&str]) -> String {
        let poset = self.poset(r.poset(), &format!("{name}_poset"));
        let fibers: Vec<String> =
            r.fibers().iter().enumerate().map(|(x, a)| self.algebra(a, hints.get(x).copied().unwrap_or("A"))).collect();
        let mut arrows = BTreeMap::new();
        for (a, b) in r.poset().covers() {
            let m = r.morphism(a, b).expect("cover");
            let n = self.amorph(&format!("{}_to_{}", fibers[a], fibers[b]), &fibers[a], &fibers[b], &m);
            arrows.insert((a, b), n);
        }
        let rep = Rep::Algebra(r.clone());
        self.doc.representations.insert(name.into(), Representation { poset, fibers, arrows, rep });
        name.into()
    }

    fn object(&mut self, name: &str, rep: &str, o: &RepObject) {
        self.doc.objects.insert(name.into(), Object { rep: rep.into(), object: o.clone() });
    }

    fn right(&mut self, name: &str, c: &str, m: &RightComodule) {
        self.doc.comodules.insert(name.into(), Comodule { coalgebra: c.into(), data: ComoduleData::Right(m.clone()) });
    }

    fn left(&mut self, name: &str, c: &str, m: &LeftComodule) {
        self.doc.comodules.insert(name.into(), Comodule { coalgebra: c.into(), data: ComoduleData::Left(m.clone()) });
    }

    fn contra(&mut self, name: &str, c: &str, m: &Contramodule) {
        self.doc.contramodules.insert(name.into(), NamedContramodule { coalgebra: c.into(), contramodule: m.clone() });
    }

    fn module(&mut self, name: &str, algebra: Option<&str>, data: ActionData) {
        self.doc.modules.insert(name.into(), NamedModule { algebra: algebra.map(str::to_string), data });
    }
}

fn tag(f: &Field) -> &'static str {
    match f {
        Field::Gf(2) => "gf2",
        Field::Gf(3) => "gf3",
        Field::Gf(5) => "gf5",
        Field::Q => "q",
        _ => unreachable!("corpus fields"),
    }
}

fn minimal() -> Document {
    let mut b = Builder::new(&Field::Gf(5));
    let k = Coalgebra::ground(&b.f());
    b.coalgebra(&k, "K");
    b.doc
}

/// Every sample coalgebra with its comodules, contramodules and counit.
fn coalgebras(f: &Field) -> Document {
    let mut b = Builder::new(f);
    let samples = coalg::samples::coalgebras(f);
    for (n, c) in &samples {
        b.doc.coalgebras.insert(n.clone(), c.clone());
    }
    for (n, c) in &samples {
        b.cmorph(&format!("eps_{n}"), n, "K", &CoalgebraMorphism::counit_of(c));
        for (i, m) in coalg::samples::comodules(c).iter().enumerate() {
            b.right(&format!("{n}_m{i}"), n, m);
        }
        b.left(&format!("{n}_left"), n, &LeftComodule::regular(c));
        for (i, m) in contra::samples::contramodules(c).iter().enumerate() {
            b.contra(&format!("{n}_p{i}"), n, m);
        }
    }
    let named = [
        ("DP2_to_DP3", "DP2", "DP3", CoalgebraMorphism::divided_power_inclusion(f, 2, 3)),
        ("DP1_to_DP2", "DP1", "DP2", CoalgebraMorphism::divided_power_inclusion(f, 1, 2)),
        ("DP3_to_DP4", "DP3", "DP4", CoalgebraMorphism::divided_power_inclusion(f, 3, 4)),
    ];
    for (n, s, t, m) in named {
        b.cmorph(n, s, t, &m);
    }
    for (n, m) in coalg::samples::morphisms(f) {
        let s = samples.iter().find(|(_, c)| *c == m.source).expect("sample").0.clone();
        let t = samples.iter().find(|(_, c)| *c == m.target).expect("sample").0.clone();
        b.cmorph(&n.replace(" -> ", "_to_").replace(' ', "_"), &s, &t, &m);
    }
    b.doc
}

/// `KG2 -> K` on `0 < 1` with the cartesian `(KG2, K)` object and a
/// non-cartesian one.
fn kg_chain(f: &Field) -> Document {
    let mut b = Builder::new(f);
    let kg = Coalgebra::grouplike(f, 2);
    let k = Coalgebra::ground(f);
    b.coalgebra(&kg, "KG2");
    b.coalgebra(&k, "K");
    let rep = CoalgebraRep::arrow(&CoalgebraMorphism::counit_of(&kg));
    let rn = b.crep("KG2_to_K", &rep, &["KG2", "K"]);
    let r = Rep::Coalgebra(rep);
    let eps = Mat::from_i64(f, 1, 2, &[1, 1]);
    let m = RepObject::from_comodules(
        Flavor::CisComodule,
        &r,
        &[RightComodule::regular(&kg), RightComodule::regular(&k)],
        BTreeMap::from([((0, 1), eps)]),
    )
    .expect("cartesian pair");
    b.object("M", &rn, &m);
    let n = RepObject::from_comodules(
        Flavor::CisComodule,
        &r,
        &[RightComodule::zero(&kg), RightComodule::regular(&k)],
        BTreeMap::from([((0, 1), Mat::zeros(f, 1, 0))]),
    )
    .expect("zero map");
    b.object("N", &rn, &n);
    b.doc
}

/// `DP(2) -> DP(3)` and the counits.
fn dp_coflat(f: &Field) -> Document {
    let mut b = Builder::new(f);
    let (dp2, dp3) = (Coalgebra::divided_power(f, 2), Coalgebra::divided_power(f, 3));
    b.coalgebra(&Coalgebra::ground(f), "K");
    b.coalgebra(&dp2, "DP2");
    b.coalgebra(&dp3, "DP3");
    let alpha = CoalgebraMorphism::divided_power_inclusion(f, 2, 3);
    b.cmorph("DP2_to_DP3", "DP2", "DP3", &alpha);
    b.cmorph("eps_DP2", "DP2", "K", &CoalgebraMorphism::counit_of(&dp2));
    b.cmorph("eps_DP3", "DP3", "K", &CoalgebraMorphism::counit_of(&dp3));
    let rep = CoalgebraRep::arrow(&alpha);
    let rn = b.crep("DP2_to_DP3", &rep, &["DP2", "DP3"]);
    let m0 = RightComodule::regular(&dp2);
    let m1 = coalg::corestrict(&alpha, &m0).expect("corestriction");
    let m = RepObject::from_comodules(
        Flavor::CisComodule,
        &Rep::Coalgebra(rep),
        &[m0, m1],
        BTreeMap::from([((0, 1), Mat::identity(f, 2))]),
    )
    .expect("identity transition");
    b.object("M", &rn, &m);
    for (i, m) in coalg::samples::comodules(&dp2).iter().enumerate() {
        b.right(&format!("DP2_m{i}"), "DP2", m);
    }
    for (i, m) in coalg::samples::comodules(&dp3).iter().enumerate() {
        b.right(&format!("DP3_m{i}"), "DP3", m);
    }
    b.doc
}

/// `(DP(2), K[x])` and `K[x]` acting through Jordan blocks.
fn dp2_kx(f: &Field) -> Document {
    let mut b = Builder::new(f);
    let p = rs::dp2_kx(f);
    let c = b.coalgebra(p.coalgebra(), "DP2");
    b.doc.pairings.insert("dp2_kx".into(), Pairing::Single { coalgebra: c, algebra: None, pairing: p });
    for n in 1..=4 {
        b.module(&format!("jordan{n}"), None, rs::kx_module(f, rs::jordan(f, n)));
    }
    b.module("identity2", None, rs::kx_module(f, Mat::identity(f, 2)));
    b.doc
}

/// Objects of every flavor over small representations.
fn objects(f: &Field) -> Document {
    let mut b = Builder::new(f);
    let creps = rc::coalgebra_reps(f);
    let areps = rc::algebra_reps(f);
    let cpick = [("KG2 -> K", "KG2_to_K", ["KG2", "K"]), ("DP1 -> DP2", "DP1_to_DP2", ["K", "DP2"])];
    let apick = [("K -> K[x]/x^2", "K_to_T2", ["K", "T2"]), ("KxK -> K", "KxK_to_K", ["KxK", "K"])];
    for (key, name, hints) in cpick {
        let r = &creps.iter().find(|(n, _)| n == key).expect("sample").1;
        let rn = b.crep(name, r, &hints);
        let rep = Rep::Coalgebra(r.clone());
        for flavor in [Flavor::CisComodule, Flavor::TransComodule, Flavor::TransContramodule] {
            for (i, o) in rc::objects(flavor, &rep, 3).iter().take(4).enumerate() {
                b.object(&format!("{}_{name}_{i}", short(flavor)), &rn, o);
            }
        }
    }
    for (key, name, hints) in apick {
        let r = &areps.iter().find(|(n, _)| n == key).expect("sample").1;
        let rn = b.arep(name, r, &hints);
        let rep = Rep::Algebra(r.clone());
        for flavor in [Flavor::CisModule, Flavor::TransModule] {
            for (i, o) in rc::objects(flavor, &rep, 3).iter().take(4).enumerate() {
                b.object(&format!("{}_{name}_{i}", short(flavor)), &rn, o);
            }
        }
    }
    b.doc
}

fn short(flavor: Flavor) -> &'static str {
    match flavor {
        Flavor::CisComodule => "cc",
        Flavor::TransComodule => "tc",
        Flavor::TransContramodule => "tp",
        Flavor::CisModule => "cm",
        Flavor::TransModule => "tm",
    }
}

/// Single pairings, pairing families and trans-modules to rationalize.
fn pairings(f: &Field) -> Document {
    let mut b = Builder::new(f);
    let g = rs::ground_truncated(f);
    let k = b.coalgebra(g.coalgebra(), "K");
    let t2 = Algebra::truncated_poly(f, 2);
    let t2n = b.algebra(&t2, "T2");
    b.doc.pairings.insert(
        "K_T2".into(),
        Pairing::Single { coalgebra: k.clone(), algebra: Some(t2n.clone()), pairing: g },
    );
    for (i, m) in algmod::samples::modules(&t2, Side::Left).into_iter().enumerate() {
        b.module(&format!("T2_m{i}"), Some(&t2n), ActionData::Module(m));
    }
    for (cn, c) in [("DP2", Coalgebra::divided_power(f, 2)), ("KG2", Coalgebra::grouplike(f, 2))] {
        let cn = b.coalgebra(&c, cn);
        let an = b.algebra(&c.dual_algebra(), &format!("{cn}_dual"));
        b.doc.pairings.insert(
            format!("eval_{cn}"),
            Pairing::Single { coalgebra: cn.clone(), algebra: Some(an.clone()), pairing: RationalPairing::evaluation(&c) },
        );
        for (i, m) in rs::left_modules(&c.dual_algebra()).into_iter().enumerate() {
            b.module(&format!("{an}_m{i}"), Some(&an), m);
        }
    }
    // K = K on 0 < 1 against K[x]/x^2 -> K over 1 > 0
    let rp = rs::chain_pairing(f);
    let cr = b.crep("K_chain", rp.crep(), &["K", "K"]);
    let ar = b.arep("T2_to_K", rp.arep(), &["K", "T2"]);
    let one = b.algebra(&Algebra::ground(f), "K");
    let p0 = RationalPairing::finite(&Coalgebra::ground(f), &Algebra::ground(f), Mat::identity(f, 1)).expect("identity");
    b.doc.pairings.insert("K_K".into(), Pairing::Single { coalgebra: k.clone(), algebra: Some(one), pairing: p0 });
    b.doc.pairings.insert(
        "chain".into(),
        Pairing::Family { representation: cr, algebra_rep: ar.clone(), fibers: vec!["K_K".into(), "K_T2".into()], pairing: rp.clone() },
    );
    let arep = Rep::Algebra(rp.arep().clone());
    for (i, o) in rc::objects(Flavor::TransModule, &arep, 4).iter().take(6).enumerate() {
        b.object(&format!("tm_chain_{i}"), &ar, o);
    }
    b.doc
}

/// Cocommutative data for contratensors and the F/G adjunction.
fn cocommutative(f: &Field) -> Document {
    let mut b = Builder::new(f);
    let kg2 = Coalgebra::grouplike(f, 2);
    let k = Coalgebra::ground(f);
    b.coalgebra(&kg2, "KG2");
    b.coalgebra(&k, "K");
    let r = CoalgebraRep::arrow(&CoalgebraMorphism::counit_of(&kg2));
    let rn = b.crep("KG2_to_K", &r, &["KG2", "K"]);
    let rep = Rep::Coalgebra(r);
    let mut cart = 0;
    for o in rc::objects(Flavor::TransComodule, &rep, 3) {
        if cart < 2 && repcat::is_cartesian(&o).expect("mates").cartesian {
            b.object(&format!("N{cart}"), &rn, &o);
            cart += 1;
        }
    }
    for (i, o) in rc::objects(Flavor::TransComodule, &rep, 3).iter().take(3).enumerate() {
        b.object(&format!("P{i}"), &rn, o);
    }
    for (i, o) in rc::objects(Flavor::TransContramodule, &rep, 3).iter().take(3).enumerate() {
        b.object(&format!("M{i}"), &rn, o);
    }
    for (cn, c) in [("KG2", &kg2), ("DP2", &Coalgebra::divided_power(f, 2))] {
        let cn = b.coalgebra(c, cn);
        for (i, m) in coalg::samples::comodules(c).iter().enumerate() {
            b.right(&format!("{cn}_m{i}"), &cn, m);
        }
        for (i, m) in contra::samples::contramodules(c).iter().enumerate() {
            b.contra(&format!("{cn}_p{i}"), &cn, m);
        }
    }
    b.doc
}

pub fn documents() -> Vec<(String, Document)> {
    let mut out = vec![("minimal_gf5".to_string(), minimal())];
    for f in [Field::Gf(2), Field::Gf(5), Field::Q] {
        out.push((format!("coalgebras_{}", tag(&f)), coalgebras(&f)));
    }
    out.push(("kg_chain_gf3".into(), kg_chain(&Field::Gf(3))));
    out.push(("dp_coflat_q".into(), dp_coflat(&Field::Q)));
    out.push(("dp2_kx_q".into(), dp2_kx(&Field::Q)));
    out.push(("objects_gf2".into(), objects(&Field::Gf(2))));
    out.push(("pairings_q".into(), pairings(&Field::Q)));
    out.push(("cocommutative_gf3".into(), cocommutative(&Field::Gf(3))));
    out.push(("cocommutative_q".into(), cocommutative(&Field::Q)));
    out
}

fn main() {
    let dir: PathBuf = std::env::args().nth(1).unwrap_or_else(|| "crates/cli/corpus".into()).into();
    std::fs::create_dir_all(&dir).expect("corpus directory");
    for (name, doc) in documents() {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, encode(&doc)).expect("write");
        println!("{}", path.display());
    }
}
