//! Dispatch from a parsed command to the libraries, one check per subject.

use std::collections::BTreeMap;

use algmod::{AlgError, Module};
use coalg::{CoalgError, CoalgebraMorphism, RightComodule};
use contra::{Bicomodule, ContraError, Contramodule};
use exactla::{Scalar, Subspace};
use rational::{ActionData, PairedAlgebra, RationalError, RationalPairing};
use repcat::{Flavor, Rep, RepError, RepObject};
use serde_json::Value as Json;

use crate::args::{AdjunctionKind, CheckKind, Command, ComputeKind, Options};
use crate::document::{ComoduleData, Document, MorphismData, Pairing};
use crate::report::{Check, Report, Status, Value};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UsageError {
    #[error("{command} needs --{flag}")]
    Missing { command: String, flag: &'static str },
    #[error("no {kind} named {name:?}")]
    Unknown { kind: &'static str, name: String },
    #[error("{0}")]
    Wrong(String),
}

fn unknown(kind: &'static str, name: &str) -> UsageError {
    UsageError::Unknown { kind, name: name.into() }
}

/// Library errors that mean "outside the supported hypotheses" rather
/// than "the check fails".
trait Outcome: std::fmt::Display {
    fn unsupported(&self) -> bool;
}

impl Outcome for AlgError {
    fn unsupported(&self) -> bool {
        false
    }
}

impl Outcome for CoalgError {
    fn unsupported(&self) -> bool {
        matches!(self, CoalgError::Hypothesis(_))
    }
}

impl Outcome for ContraError {
    fn unsupported(&self) -> bool {
        match self {
            ContraError::Hypothesis(_) => true,
            ContraError::Coalg(e) => e.unsupported(),
            _ => false,
        }
    }
}

impl Outcome for RepError {
    fn unsupported(&self) -> bool {
        match self {
            RepError::Hypothesis(_) | RepError::Precondition(_) => true,
            RepError::Coalg(e) => e.unsupported(),
            RepError::Contra(e) => e.unsupported(),
            _ => false,
        }
    }
}

impl Outcome for RationalError {
    fn unsupported(&self) -> bool {
        match self {
            RationalError::Hypothesis(_) | RationalError::Unsupported(_) => true,
            RationalError::Rep(e) => e.unsupported(),
            RationalError::Coalg(e) => e.unsupported(),
            RationalError::Contra(e) => e.unsupported(),
            _ => false,
        }
    }
}

fn errored<E: Outcome>(subject: &str, property: &str, e: E) -> Check {
    if e.unsupported() {
        Check::unsupported(subject, property, &e)
    } else {
        Check::new(subject, property, Status::Fail).text("error", e.to_string())
    }
}

/// Runs `f`, turning an error into an unsupported or failed check.
fn attempt<E: Outcome>(subject: &str, property: &str, f: impl FnOnce() -> Result<Check, E>) -> Check {
    f().unwrap_or_else(|e| errored(subject, property, e))
}

pub fn run(command: Command, opts: &Options, doc: &Document) -> Result<Report, UsageError> {
    let mut report = Report::new(opts.echo(command));
    let checks = match command {
        Command::Validate => validate(doc),
        Command::Check { what } => check(what, opts, doc)?,
        Command::Compute { what } => compute(what, opts, doc, &command.name())?,
        Command::Adjunction { which } => adjunction(which, opts, doc, &command.name())?,
        Command::Hull => hull(opts, doc)?,
        Command::Rationalize => rationalize(opts, doc)?,
        Command::Generators => generators(opts, doc)?,
    };
    for c in checks {
        report.push(c);
    }
    Ok(report)
}

/// Names from `map`, narrowed to `only` when given.
fn select<'a, T>(
    map: &'a BTreeMap<String, T>,
    only: &Option<String>,
    kind: &'static str,
) -> Result<Vec<(&'a String, &'a T)>, UsageError> {
    match only {
        Some(n) => map.get_key_value(n).map(|kv| vec![kv]).ok_or_else(|| unknown(kind, n)),
        None => Ok(map.iter().collect()),
    }
}

fn need<'a>(v: &'a Option<String>, command: &str, flag: &'static str) -> Result<&'a String, UsageError> {
    v.as_ref().ok_or_else(|| UsageError::Missing { command: command.into(), flag })
}

// -------------------------------------------------------------- validate

fn validate(doc: &Document) -> Vec<Check> {
    let mut out = Vec::new();
    for (n, c) in &doc.coalgebras {
        out.push(Check::from_violations(format!("coalgebras/{n}"), "axioms", &c.check()));
    }
    for (n, a) in &doc.algebras {
        out.push(Check::from_violations(format!("algebras/{n}"), "axioms", &a.check()));
    }
    for (n, m) in &doc.morphisms {
        let v = match &m.data {
            MorphismData::Coalgebra(c) => c.check(),
            MorphismData::Algebra(a) => a.check(),
        };
        out.push(Check::from_violations(format!("morphisms/{n}"), "axioms", &v));
    }
    for n in doc.posets.keys() {
        out.push(poset_check(doc, n));
    }
    for (n, r) in &doc.representations {
        out.push(Check::from_violations(format!("representations/{n}"), "axioms", &r.rep.check()));
    }
    for (n, c) in &doc.comodules {
        out.push(comodule_check(n, &c.data));
    }
    for (n, c) in &doc.contramodules {
        out.push(Check::from_violations(format!("contramodules/{n}"), "axioms", &c.contramodule.check()));
    }
    for (n, m) in &doc.modules {
        let v = match &m.data {
            ActionData::Module(md) => md.check(),
            // relations were verified while parsing
            ActionData::Presented(_) => Vec::new(),
        };
        out.push(Check::from_violations(format!("modules/{n}"), "axioms", &v));
    }
    for (n, o) in &doc.objects {
        out.push(Check::from_violations(format!("objects/{n}"), "axioms", &o.object.check()));
    }
    for (n, p) in &doc.pairings {
        out.push(pairing_check(n, p));
    }
    out
}

fn poset_check(doc: &Document, name: &str) -> Check {
    let p = &doc.posets[name];
    p.check().iter().fold(Check::new(format!("posets/{name}"), "axioms", Status::of(p.check().is_empty())), |c, v| {
        let labels: Vec<String> = v.elements.iter().map(|&x| p.elements()[x].clone()).collect();
        c.with(format!("witness: {}", v.law), Value::Vector(labels))
    })
}

fn comodule_check(name: &str, data: &ComoduleData) -> Check {
    let (v, side, dim) = match data {
        ComoduleData::Right(m) => (m.check(), "right", m.dim()),
        ComoduleData::Left(m) => (m.check(), "left", m.dim()),
    };
    Check::from_violations(format!("comodules/{name}"), "axioms", &v).text("side", side).count("dim", dim)
}

fn pairing_check(name: &str, p: &Pairing) -> Check {
    match p {
        Pairing::Single { pairing, .. } => Check::from_violations(format!("pairings/{name}"), "axioms", &pairing.check())
            .count("dim image", pairing.image().dim()),
        Pairing::Family { pairing, .. } => Check::from_violations(format!("pairings/{name}"), "axioms", &pairing.check()),
    }
}

// ----------------------------------------------------------------- check

fn check(what: CheckKind, opts: &Options, doc: &Document) -> Result<Vec<Check>, UsageError> {
    let only = &opts.object;
    let out = match what {
        CheckKind::Coalgebra => select(&doc.coalgebras, only, "coalgebra")?
            .into_iter()
            .map(|(n, c)| {
                Check::from_violations(format!("coalgebras/{n}"), "axioms", &c.check())
                    .count("dim", c.dim())
                    .flag("cocommutative", c.is_cocommutative())
            })
            .collect(),
        CheckKind::Comodule => {
            select(&doc.comodules, only, "comodule")?.into_iter().map(|(n, c)| comodule_check(n, &c.data)).collect()
        }
        CheckKind::Contramodule => select(&doc.contramodules, only, "contramodule")?
            .into_iter()
            .map(|(n, c)| {
                Check::from_violations(format!("contramodules/{n}"), "axioms", &c.contramodule.check())
                    .count("dim", c.contramodule.dim())
            })
            .collect(),
        CheckKind::Representation => select(&doc.representations, only, "representation")?
            .into_iter()
            .map(|(n, r)| {
                let dims = match &r.rep {
                    Rep::Coalgebra(c) => c.fibers().iter().map(|x| x.dim()).collect(),
                    Rep::Algebra(a) => a.fibers().iter().map(|x| x.dim()).collect(),
                };
                Check::from_violations(format!("representations/{n}"), "axioms", &r.rep.check())
                    .with("fiber dims", Value::Dims(dims))
            })
            .collect(),
        CheckKind::Object => select(&doc.objects, only, "object")?
            .into_iter()
            .map(|(n, o)| {
                Check::from_violations(format!("objects/{n}"), "axioms", &o.object.check())
                    .text("flavor", o.object.flavor().name())
                    .with("dims", Value::Dims(o.object.dims()))
            })
            .collect(),
        CheckKind::Cartesian => select(&doc.objects, only, "object")?
            .into_iter()
            .map(|(n, o)| cartesian_check(n, &o.object))
            .collect(),
        CheckKind::Coflat | CheckKind::SigmaInjective => {
            let only = if opts.morphism.is_some() { &opts.morphism } else { only };
            let names = select(&doc.morphisms, only, "morphism")?;
            let mut out = Vec::new();
            for (n, m) in names {
                let MorphismData::Coalgebra(alpha) = &m.data else {
                    if only.is_some() {
                        return Err(UsageError::Wrong(format!("{n} is not a coalgebra morphism")));
                    }
                    continue;
                };
                let (prop, holds) = if what == CheckKind::Coflat {
                    ("coflat", coalg::is_coflat(alpha))
                } else {
                    ("sigma-injective", coalg::is_sigma_injective(alpha))
                };
                out.push(
                    Check::new(format!("morphisms/{n}"), prop, Status::of(holds))
                        .text("source", &m.source)
                        .text("target", &m.target),
                );
            }
            out
        }
        CheckKind::Pairing => {
            select(&doc.pairings, &opts.pairing, "pairing")?.into_iter().map(|(n, p)| pairing_check(n, p)).collect()
        }
    };
    Ok(out)
}

fn labels(o: &RepObject) -> &[String] {
    o.rep().poset().elements()
}

fn cartesian_check(name: &str, o: &RepObject) -> Check {
    let subject = format!("objects/{name}");
    attempt(&subject, "cartesian", || -> Result<Check, RepError> {
        let r = repcat::is_cartesian(o)?;
        let l = labels(o);
        let mut c = Check::new(&subject, "cartesian", Status::of(r.cartesian))
            .text("flavor", o.flavor().name())
            .text("hypothesis", r.hypothesis.name)
            .flag("hypothesis holds", r.hypothesis.holds);
        for ((s, t), iso) in r.arrows {
            c = c.flag(format!("mate {}->{} invertible", l[s], l[t]), iso);
        }
        Ok(c)
    })
}

// --------------------------------------------------------------- compute

fn right_comodule<'a>(doc: &'a Document, name: &str) -> Result<(&'a str, &'a RightComodule), UsageError> {
    let c = doc.comodules.get(name).ok_or_else(|| unknown("comodule", name))?;
    let m = c.right().ok_or_else(|| UsageError::Wrong(format!("{name} is a left comodule")))?;
    Ok((&c.coalgebra, m))
}

fn contramodule<'a>(doc: &'a Document, name: &str) -> Result<(&'a str, &'a Contramodule), UsageError> {
    let c = doc.contramodules.get(name).ok_or_else(|| unknown("contramodule", name))?;
    Ok((&c.coalgebra, &c.contramodule))
}

fn coalgebra_morphism<'a>(doc: &'a Document, name: &str) -> Result<(&'a crate::document::Morphism, &'a CoalgebraMorphism), UsageError> {
    let m = doc.morphisms.get(name).ok_or_else(|| unknown("morphism", name))?;
    match &m.data {
        MorphismData::Coalgebra(a) => Ok((m, a)),
        MorphismData::Algebra(_) => Err(UsageError::Wrong(format!("{name} is not a coalgebra morphism"))),
    }
}

fn over(expected: &str, got: &str, what: &str) -> Result<(), UsageError> {
    if expected == got {
        Ok(())
    } else {
        Err(UsageError::Wrong(format!("{what} lives over {got}, expected {expected}")))
    }
}

fn compute(what: ComputeKind, opts: &Options, doc: &Document, cmd: &str) -> Result<Vec<Check>, UsageError> {
    let check = match what {
        ComputeKind::Cotensor => {
            let left = need(&opts.left, cmd, "left")?;
            let (c, m) = right_comodule(doc, left)?;
            match &opts.right {
                Some(right) => {
                    let n = doc.comodules.get(right).ok_or_else(|| unknown("comodule", right))?;
                    over(c, &n.coalgebra, right)?;
                    let ComoduleData::Left(n) = &n.data else {
                        return Err(UsageError::Wrong(format!("{right} must be a left comodule")));
                    };
                    let subject = format!("{left} [] {right}");
                    attempt(&subject, "cotensor", || -> Result<Check, CoalgError> {
                        let s = coalg::cotensor(m, n)?;
                        Ok(Check::new(&subject, "cotensor", Status::Pass).count("dim", s.dim()).with("basis", Value::basis(&s)))
                    })
                }
                None => {
                    let subject = format!("{left} [] {c}");
                    attempt(&subject, "cotensor unit", || -> Result<Check, CoalgError> {
                        let (s, map) = coalg::cotensor_unit_map(m)?;
                        Ok(Check::new(&subject, "cotensor unit", Status::of(s.dim() == m.dim() && map.is_invertible()))
                            .count("dim M", m.dim())
                            .count("dim cotensor", s.dim())
                            .flag("canonical map invertible", map.is_invertible()))
                    })
                }
            }
        }
        ComputeKind::Coinduce => {
            let (mor, alpha) = coalgebra_morphism(doc, need(&opts.morphism, cmd, "morphism")?)?;
            let name = need(&opts.module, cmd, "module")?;
            let (c, n) = right_comodule(doc, name)?;
            over(&mor.target, c, name)?;
            let subject = format!("coinduce {name}");
            attempt(&subject, "coinduction", || -> Result<Check, CoalgError> {
                let co = coalg::coinduce(alpha, n)?;
                let agree = coalg::coinductions_agree(alpha, n)?;
                Ok(Check::new(&subject, "coinduction", Status::of(agree))
                    .count("dim", co.comodule.dim())
                    .flag("agrees with dual hom", agree)
                    .with("rho", Value::matrix(co.comodule.rho())))
            })
        }
        ComputeKind::Cohom => {
            let (mor, alpha) = coalgebra_morphism(doc, need(&opts.morphism, cmd, "morphism")?)?;
            let name = need(&opts.module, cmd, "module")?;
            let (c, n) = right_comodule(doc, name)?;
            over(&mor.source, c, name)?;
            let subject = format!("cohom {name}");
            attempt(&subject, "cohom", || -> Result<Check, CoalgError> {
                let h = coalg::cohom(alpha, n)?;
                let v = h.comodule.check();
                Ok(Check::from_violations(&subject, "cohom", &v)
                    .count("dim", h.comodule.dim())
                    .with("rho", Value::matrix(h.comodule.rho())))
            })
        }
        ComputeKind::Contraextend => {
            let (mor, alpha) = coalgebra_morphism(doc, need(&opts.morphism, cmd, "morphism")?)?;
            let name = need(&opts.module, cmd, "module")?;
            let (c, m) = contramodule(doc, name)?;
            over(&mor.target, c, name)?;
            let subject = format!("contraextend {name}");
            attempt(&subject, "contraextension", || -> Result<Check, ContraError> {
                let by_pres = contra::contraextend_by_presentation(alpha, m)?;
                let by_cohom = contra::contraextend_by_cohom(alpha, m)?;
                let agree = by_pres.contramodule.dim() == by_cohom.contramodule.dim();
                Ok(Check::new(&subject, "contraextension", Status::of(agree))
                    .count("dim", by_pres.contramodule.dim())
                    .count("dim by cohom", by_cohom.contramodule.dim())
                    .with("pi", Value::matrix(by_pres.contramodule.pi())))
            })
        }
        ComputeKind::Contratensor => {
            let left = need(&opts.left, cmd, "left")?;
            let (c, m) = contramodule(doc, left)?;
            let (subject, bi) = match &opts.right {
                Some(right) => {
                    let (c2, n) = right_comodule(doc, right)?;
                    over(c, c2, right)?;
                    let bi = Bicomodule::from_cocommutative(n);
                    (format!("{left} [x] {right}"), bi)
                }
                None => (format!("{left} [x] {c}"), Ok(Bicomodule::regular(m.coalgebra()))),
            };
            attempt(&subject, "contratensor", || -> Result<Check, ContraError> {
                let bi = bi?;
                let ct = contra::contratensor(m, &bi)?;
                let cmp = contra::contratensor_comparison(m, &bi)?;
                Ok(Check::new(&subject, "contratensor", Status::of(cmp.is_invertible()))
                    .count("dim", ct.comodule.dim())
                    .flag("agrees with balanced tensor", cmp.is_invertible())
                    .with("rho", Value::matrix(ct.comodule.rho())))
            })
        }
        ComputeKind::FiniteDual => {
            let name = need(&opts.algebra, cmd, "algebra")?;
            let a = doc.algebras.get(name).ok_or_else(|| unknown("algebra", name))?;
            let subject = format!("algebras/{name}");
            attempt(&subject, "finite dual", || -> Result<Check, RationalError> {
                let c = rational::finite_dual(a)?;
                Ok(Check::from_violations(&subject, "finite dual", &c.check())
                    .count("dim", c.dim())
                    .with("delta", Value::matrix(c.delta()))
                    .with("eps", Value::matrix(c.eps())))
            })
        }
    };
    Ok(vec![check])
}

// ------------------------------------------------------------ adjunction

fn certificate(subject: &str, property: &str, c: &algmod::AdjunctionCertificate) -> Check {
    Check::new(subject, property, Status::of(c.holds()))
        .count("hom left", c.hom_left)
        .count("hom right", c.hom_right)
        .flag("bijection", c.bijection)
        .flag("triangle left", c.triangle_left)
        .flag("triangle right", c.triangle_right)
}

fn named<'a, T>(v: &'a [(&'a String, T)], only: &Option<String>, kind: &'static str) -> Result<Vec<&'a (&'a String, T)>, UsageError> {
    match only {
        Some(n) => {
            let hit: Vec<_> = v.iter().filter(|(k, _)| *k == n).collect();
            if hit.is_empty() {
                Err(unknown(kind, n))
            } else {
                Ok(hit)
            }
        }
        None => Ok(v.iter().collect()),
    }
}

fn adjunction(which: AdjunctionKind, opts: &Options, doc: &Document, cmd: &str) -> Result<Vec<Check>, UsageError> {
    match which {
        AdjunctionKind::CorestrictCoinduce | AdjunctionKind::CohomCorestrict | AdjunctionKind::ContraextendContrarestrict => {
            coalgebra_adjunction(which, opts, doc)
        }
        AdjunctionKind::ExEv | AdjunctionKind::EvCoe => point_adjunction(which, opts, doc),
        AdjunctionKind::Fg => fg(opts, doc, cmd),
    }
}

fn coalgebra_adjunction(which: AdjunctionKind, opts: &Options, doc: &Document) -> Result<Vec<Check>, UsageError> {
    let morphisms: Vec<_> = select(&doc.morphisms, &opts.morphism, "morphism")?
        .into_iter()
        .filter_map(|(n, m)| match &m.data {
            MorphismData::Coalgebra(a) => Some((n, (m, a))),
            MorphismData::Algebra(_) => None,
        })
        .collect();
    let comods: Vec<(&String, (&str, &RightComodule))> =
        doc.comodules.iter().filter_map(|(n, c)| c.right().map(|m| (n, (c.coalgebra.as_str(), m)))).collect();
    let contras: Vec<(&String, (&str, &Contramodule))> =
        doc.contramodules.iter().map(|(n, c)| (n, (c.coalgebra.as_str(), &c.contramodule))).collect();
    let mut out = Vec::new();
    let property = match which {
        AdjunctionKind::CorestrictCoinduce => "corestrict -| coinduce",
        AdjunctionKind::CohomCorestrict => "cohom -| corestrict",
        _ => "contraextend -| contrarestrict",
    };
    for (an, (mor, alpha)) in &morphisms {
        // (left argument over, right argument over)
        let (lo, ro) = match which {
            AdjunctionKind::CorestrictCoinduce => (&mor.source, &mor.target),
            _ => (&mor.target, &mor.source),
        };
        if which == AdjunctionKind::ContraextendContrarestrict {
            for (ln, (lc, l)) in named(&contras, &opts.left, "contramodule")? {
                for (rn, (rc, r)) in named(&contras, &opts.right, "contramodule")? {
                    if lc != lo || rc != ro {
                        continue;
                    }
                    let subject = format!("{an}: {ln}, {rn}");
                    out.push(attempt(&subject, property, || {
                        contra::certify_contraextend_contrarestrict(alpha, l, r).map(|c| certificate(&subject, property, &c))
                    }));
                }
            }
            continue;
        }
        for (ln, (lc, l)) in named(&comods, &opts.left, "comodule")? {
            for (rn, (rc, r)) in named(&comods, &opts.right, "comodule")? {
                if lc != lo || rc != ro {
                    continue;
                }
                let subject = format!("{an}: {ln}, {rn}");
                out.push(attempt(&subject, property, || {
                    let cert = if which == AdjunctionKind::CorestrictCoinduce {
                        coalg::certify_corestrict_coinduce(alpha, l, r)
                    } else {
                        coalg::certify_cohom_corestrict(alpha, l, r)
                    };
                    cert.map(|c| certificate(&subject, property, &c))
                }));
            }
        }
    }
    Ok(out)
}

/// Any named module-like item viewed as a module over its algebra.
fn module_like(doc: &Document, name: &str) -> Result<Module, UsageError> {
    if let Some(m) = doc.modules.get(name) {
        return match &m.data {
            ActionData::Module(md) => Ok(md.clone()),
            ActionData::Presented(_) => Err(UsageError::Wrong(format!("{name} is over a presented algebra"))),
        };
    }
    if let Some(c) = doc.comodules.get(name) {
        return c.right().map(RightComodule::to_module).ok_or_else(|| UsageError::Wrong(format!("{name} is a left comodule")));
    }
    if let Some(c) = doc.contramodules.get(name) {
        return Ok(c.contramodule.to_module());
    }
    Err(unknown("module", name))
}

fn points(o: &RepObject, at: &Option<String>) -> Result<Vec<usize>, UsageError> {
    match at {
        Some(label) => o.rep().poset().index_of(label).map(|x| vec![x]).map_err(|_| unknown("poset element", label)),
        None => Ok((0..o.len()).collect()),
    }
}

fn point_adjunction(which: AdjunctionKind, opts: &Options, doc: &Document) -> Result<Vec<Check>, UsageError> {
    let given = opts.module.as_ref().map(|n| module_like(doc, n).map(|m| (n.clone(), m))).transpose()?;
    let property = if which == AdjunctionKind::ExEv { "ex -| ev" } else { "ev -| coe" };
    let mut out = Vec::new();
    for (on, o) in select(&doc.objects, &opts.object, "object")? {
        let m = &o.object;
        for x in points(m, &opts.at)? {
            let bx = m.base().algebra(x);
            let side = m.flavor().side();
            let tests: Vec<(String, Module)> = match &given {
                Some((n, v)) => {
                    if v.algebra() != bx || v.side() != side {
                        if opts.object.is_some() && opts.at.is_some() {
                            return Err(UsageError::Wrong(format!("{n} is not a module over the algebra at {}", labels(m)[x])));
                        }
                        continue;
                    }
                    vec![(n.clone(), v.clone())]
                }
                None => vec![("regular".into(), Module::regular(bx, side)), ("fiber".into(), m.fiber(x).clone())],
            };
            for (vn, v) in tests {
                let subject = format!("{on} at {}: {vn}", labels(m)[x]);
                out.push(attempt(&subject, property, || {
                    let cert = if which == AdjunctionKind::ExEv {
                        repcat::certify_ex_ev(x, &v, m)
                    } else {
                        repcat::certify_ev_coe(x, m, &v)
                    };
                    cert.map(|c| certificate(&subject, property, &c))
                }));
            }
        }
    }
    Ok(out)
}

fn fg(opts: &Options, doc: &Document, cmd: &str) -> Result<Vec<Check>, UsageError> {
    let of = |only: &Option<String>, flavor: Flavor| -> Result<Vec<(&String, &RepObject)>, UsageError> {
        let v = select(&doc.objects, only, "object")?;
        if only.is_some() && v.iter().any(|(_, o)| o.object.flavor() != flavor) {
            return Err(UsageError::Wrong(format!("{cmd} expects a {flavor} there, got {}", v[0].0)));
        }
        Ok(v.into_iter().filter(|(_, o)| o.object.flavor() == flavor).map(|(n, o)| (n, &o.object)).collect())
    };
    let ms = of(&opts.object, Flavor::TransContramodule)?;
    let ns = of(&opts.left, Flavor::TransComodule)?;
    let ps = of(&opts.right, Flavor::TransComodule)?;
    let mut out = Vec::new();
    for (mn, m) in &ms {
        for (nn, n) in &ns {
            for (pn, p) in &ps {
                if m.rep() != n.rep() || n.rep() != p.rep() {
                    continue;
                }
                let subject = format!("M={mn}, N={nn}, P={pn}");
                out.push(attempt(&subject, "F -| G", || -> Result<Check, RepError> {
                    let c = repcat::certify_fg(m, n, p)?;
                    Ok(Check::new(&subject, "F -| G", Status::of(c.holds()))
                        .count("hom left", c.hom_left)
                        .count("hom right", c.hom_right))
                }));
            }
        }
    }
    Ok(out)
}

// ------------------------------------------------------------------ hull

fn seed(doc: &Document, text: &str, dim: usize) -> Result<Vec<Vec<Scalar>>, UsageError> {
    let rows: Vec<Vec<Json>> = serde_json::from_str(text).map_err(|e| UsageError::Wrong(format!("--seed: {e}")))?;
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() != dim {
                return Err(UsageError::Wrong(format!("--seed row {i} has {} entries, the fiber has dimension {dim}", r.len())));
            }
            r.iter()
                .enumerate()
                .map(|(j, v)| crate::document::scalar(&doc.field, v, &format!("--seed/{i}/{j}")).map_err(|e| UsageError::Wrong(e.to_string())))
                .collect()
        })
        .collect()
}

fn hull(opts: &Options, doc: &Document) -> Result<Vec<Check>, UsageError> {
    let name = need(&opts.object, "hull", "object")?;
    let o = &doc.objects.get(name).ok_or_else(|| unknown("object", name))?.object;
    let mut out = Vec::new();
    for x in points(o, &opts.at)? {
        let d = o.fiber(x).dim();
        let vectors = match &opts.seed {
            Some(s) => seed(doc, s, d)?,
            None => Subspace::full(o.field(), d).basis_vectors(),
        };
        let subject = format!("{name} at {}", labels(o)[x]);
        out.push(attempt(&subject, "cartesian hull", || -> Result<Check, RepError> {
            let (h, inc) = repcat::cartesian_hull(o, x, &vectors)?;
            let cartesian = repcat::is_cartesian(&h)?.cartesian;
            let image = Subspace::span(inc.component(x));
            let contains = vectors.iter().all(|v| image.contains(v));
            Ok(Check::new(&subject, "cartesian hull", Status::of(cartesian && contains))
                .count("seed vectors", vectors.len())
                .with("dims", Value::Dims(h.dims()))
                .flag("cartesian", cartesian)
                .flag("contains seed", contains)
                .flag("whole object", h.dims() == o.dims()))
        }));
    }
    Ok(out)
}

// ------------------------------------------------------------ generators

fn generators(opts: &Options, doc: &Document) -> Result<Vec<Check>, UsageError> {
    let mut out = Vec::new();
    for (name, o) in select(&doc.objects, &opts.object, "object")? {
        let m = &o.object;
        let subject = format!("objects/{name}");
        out.push(attempt(&subject, "generated by the projective family", || -> Result<Check, RepError> {
            let family = repcat::projective_generator_family(m.flavor(), m.rep())?;
            let f = m.field();
            let mut images: Vec<Subspace> = (0..m.len()).map(|x| Subspace::zero(f, m.fiber(x).dim())).collect();
            let mut c = Check::new(&subject, "generated by the projective family", Status::Pass);
            for (i, g) in family.iter().enumerate() {
                let homs = repcat::hom_rep(g, m)?;
                for h in &homs {
                    for (x, img) in images.iter_mut().enumerate() {
                        *img = img.sum(&Subspace::span(h.component(x)))?;
                    }
                }
                c = c
                    .with(format!("member {} dims", labels(m)[i]), Value::Dims(g.dims()))
                    .count(format!("member {} hom dim", labels(m)[i]), homs.len());
            }
            let dims: Vec<usize> = images.iter().map(Subspace::dim).collect();
            c.status = Status::of(dims == m.dims());
            Ok(c.with("image dims", Value::Dims(dims)).with("object dims", Value::Dims(m.dims())))
        }));
    }
    Ok(out)
}

// ----------------------------------------------------------- rationalize

fn compatible(p: &RationalPairing, palg: &Option<String>, m: &crate::document::NamedModule) -> bool {
    match (p.algebra(), &m.data) {
        (PairedAlgebra::Finite(_), ActionData::Module(md)) => palg == &m.algebra && md.side() == algmod::Side::Left,
        (PairedAlgebra::Presented { generators, .. }, ActionData::Presented(a)) => a.generators() == *generators,
        _ => false,
    }
}

fn rationalize(opts: &Options, doc: &Document) -> Result<Vec<Check>, UsageError> {
    let mut out = Vec::new();
    for (pn, p) in select(&doc.pairings, &opts.pairing, "pairing")? {
        match p {
            Pairing::Single { pairing, algebra, .. } => {
                for (mn, m) in select(&doc.modules, &opts.module, "module")? {
                    if !compatible(pairing, algebra, m) {
                        if opts.module.is_some() && opts.pairing.is_some() {
                            return Err(UsageError::Wrong(format!("{mn} is not a module over the algebra of {pn}")));
                        }
                        continue;
                    }
                    let subject = format!("{pn}: {mn}");
                    out.push(attempt(&subject, "rational part", || -> Result<Check, RationalError> {
                        let t = rational::torsion_witness(pairing, &m.data)?;
                        let r = &t.rational;
                        Ok(Check::new(&subject, "rational part", Status::Pass)
                            .count("dim N", m.data.dim())
                            .count("dim R(N)", r.subspace.dim())
                            .count("dim R(N/R(N))", t.quotient_rational.subspace.dim())
                            .flag("rational", r.subspace.dim() == m.data.dim())
                            .with("basis R(N)", Value::basis(&r.subspace)))
                    }));
                }
            }
            Pairing::Family { pairing, representation, .. } => {
                for (on, o) in select(&doc.objects, &opts.object, "object")? {
                    let obj = &o.object;
                    let fits = obj.flavor() == Flavor::TransModule && matches!(obj.rep(), Rep::Algebra(a) if a == pairing.arep());
                    if !fits {
                        if opts.object.is_some() && opts.pairing.is_some() {
                            return Err(UsageError::Wrong(format!("{on} is not a trans-module over the algebras of {pn}")));
                        }
                        continue;
                    }
                    let subject = format!("{pn}: {on}");
                    out.push(attempt(&subject, "rational part", || -> Result<Check, RationalError> {
                        let (r, _, _) = rational::rationalize_rep(pairing, obj)?;
                        Ok(Check::new(&subject, "rational part", Status::Pass)
                            .text("coalgebras", representation.as_str())
                            .with("dims N", Value::Dims(obj.dims()))
                            .with("dims R(N)", Value::Dims(r.dims())))
                    }));
                }
            }
        }
    }
    Ok(out)
}
