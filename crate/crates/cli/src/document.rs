//! Resolved instance documents and the codec between them and JSON text.
//!
//! Parsing checks shapes and references only. Axioms are left to the
//! `check` commands so that broken instances can still be loaded and get
//! witnesses.

use std::collections::BTreeMap;

use algmod::{Algebra, AlgebraMorphism, FPAlgebraAction, Module, NcPolynomial, Side};
use coalg::{Coalgebra, CoalgebraMorphism, LeftComodule, RightComodule};
use contra::Contramodule;
use exactla::{Field, Mat, Scalar};
use rational::{ActionData, PairedAlgebra, RationalPairing, RepPairing};
use repcat::{AlgebraRep, CoalgebraRep, FinitePoset, Flavor, Rep, RepObject};
use serde_json::Value;

use crate::schema::*;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("malformed document: {0}")]
    Json(String),
    #[error("{path}: unknown field kind {kind:?}")]
    UnknownFieldKind { path: String, kind: String },
    #[error("{path}: {p} is not prime")]
    NotPrime { path: String, p: u64 },
    #[error("{path}: shape mismatch: {reason}")]
    Shape { path: String, reason: String },
    #[error("{path}: dangling reference to {name:?}")]
    Dangling { path: String, name: String },
    #[error("{path}: {reason}")]
    Invalid { path: String, reason: String },
}

impl ParseError {
    pub fn path(&self) -> Option<&str> {
        match self {
            ParseError::Json(_) => None,
            ParseError::UnknownFieldKind { path, .. }
            | ParseError::NotPrime { path, .. }
            | ParseError::Shape { path, .. }
            | ParseError::Dangling { path, .. }
            | ParseError::Invalid { path, .. } => Some(path),
        }
    }
}

fn shape(path: &str, reason: impl Into<String>) -> ParseError {
    ParseError::Shape { path: path.into(), reason: reason.into() }
}

fn invalid(path: &str, reason: impl std::fmt::Display) -> ParseError {
    ParseError::Invalid { path: path.into(), reason: reason.to_string() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismData {
    Coalgebra(CoalgebraMorphism),
    Algebra(AlgebraMorphism),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub source: String,
    pub target: String,
    pub data: MorphismData,
}

/// A representation with the names it was assembled from. `arrows` holds
/// only the pairs spelled out in the document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub poset: String,
    pub fibers: Vec<String>,
    pub arrows: BTreeMap<(usize, usize), String>,
    pub rep: Rep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComoduleData {
    Right(RightComodule),
    Left(LeftComodule),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    pub coalgebra: String,
    pub data: ComoduleData,
}

impl Comodule {
    pub fn dim(&self) -> usize {
        match &self.data {
            ComoduleData::Right(m) => m.dim(),
            ComoduleData::Left(m) => m.dim(),
        }
    }

    pub fn right(&self) -> Option<&RightComodule> {
        match &self.data {
            ComoduleData::Right(m) => Some(m),
            ComoduleData::Left(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedContramodule {
    pub coalgebra: String,
    pub contramodule: Contramodule,
}

/// `algebra` is `None` for modules over a presented algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedModule {
    pub algebra: Option<String>,
    pub data: ActionData,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Object {
    pub rep: String,
    pub object: RepObject,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pairing {
    Single { coalgebra: String, algebra: Option<String>, pairing: RationalPairing },
    Family { representation: String, algebra_rep: String, fibers: Vec<String>, pairing: RepPairing },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub field: Field,
    pub coalgebras: BTreeMap<String, Coalgebra>,
    pub algebras: BTreeMap<String, Algebra>,
    pub morphisms: BTreeMap<String, Morphism>,
    pub posets: BTreeMap<String, FinitePoset>,
    pub representations: BTreeMap<String, Representation>,
    pub comodules: BTreeMap<String, Comodule>,
    pub contramodules: BTreeMap<String, NamedContramodule>,
    pub modules: BTreeMap<String, NamedModule>,
    pub objects: BTreeMap<String, Object>,
    pub pairings: BTreeMap<String, Pairing>,
}

impl Document {
    pub fn new(field: Field) -> Document {
        Document {
            field,
            coalgebras: BTreeMap::new(),
            algebras: BTreeMap::new(),
            morphisms: BTreeMap::new(),
            posets: BTreeMap::new(),
            representations: BTreeMap::new(),
            comodules: BTreeMap::new(),
            contramodules: BTreeMap::new(),
            modules: BTreeMap::new(),
            objects: BTreeMap::new(),
            pairings: BTreeMap::new(),
        }
    }

    pub fn coalgebra_morphism(&self, name: &str) -> Option<&CoalgebraMorphism> {
        match &self.morphisms.get(name)?.data {
            MorphismData::Coalgebra(m) => Some(m),
            MorphismData::Algebra(_) => None,
        }
    }
}

pub fn parse(text: &str) -> Result<Document, ParseError> {
    let value: Value = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    // look at the field first so an unknown kind gets its own error
    if let Some(kind) = value.get("field").and_then(|f| f.get("kind")) {
        match kind.as_str() {
            Some("gf") | Some("q") => {}
            _ => {
                return Err(ParseError::UnknownFieldKind {
                    path: "/field/kind".into(),
                    kind: kind.as_str().map(str::to_string).unwrap_or_else(|| kind.to_string()),
                })
            }
        }
    }
    let raw: RawDocument = serde_json::from_value(value).map_err(|e| ParseError::Json(e.to_string()))?;
    resolve(&raw)
}

pub fn encode(doc: &Document) -> String {
    let raw = to_raw(doc);
    let mut s = serde_json::to_string_pretty(&raw).expect("documents serialize");
    s.push('\n');
    s
}

// ---------------------------------------------------------------- scalars

pub(crate) fn scalar(field: &Field, v: &Value, path: &str) -> Result<Scalar, ParseError> {
    match field {
        Field::Gf(_) => {
            let n = v
                .as_i64()
                .map(|n| field.from_i64(n))
                .or_else(|| v.as_u64().map(|n| field.parse(&n.to_string()).expect("integer")))
                .ok_or_else(|| invalid(path, format!("GF entries are integers, got {v}")))?;
            Ok(n)
        }
        Field::Q => {
            let s = v.as_str().ok_or_else(|| invalid(path, format!("Q entries are \"num/den\" strings, got {v}")))?;
            field.parse(s).map_err(|e| invalid(path, e))
        }
    }
}

fn scalar_value(s: &Scalar) -> Value {
    match s {
        Scalar::Gf(v) => Value::from(*v),
        Scalar::Q(_) => Value::from(s.to_fraction_string()),
    }
}

fn matrix(field: &Field, raw: &RawMatrix, rows: usize, cols: usize, path: &str) -> Result<Mat, ParseError> {
    if raw.len() != rows {
        return Err(shape(path, format!("expected {rows} rows, found {}", raw.len())));
    }
    let mut elems = Vec::with_capacity(rows * cols);
    for (i, row) in raw.iter().enumerate() {
        if row.len() != cols {
            return Err(shape(&format!("{path}/{i}"), format!("expected {cols} entries, found {}", row.len())));
        }
        for (j, v) in row.iter().enumerate() {
            elems.push(scalar(field, v, &format!("{path}/{i}/{j}"))?);
        }
    }
    Ok(Mat::from_elems(field, rows, cols, elems).expect("counted"))
}

fn matrix_value(m: &Mat) -> RawMatrix {
    m.to_rows().iter().map(|r| r.iter().map(scalar_value).collect()).collect()
}

fn relations(field: &Field, raw: &[Vec<RawTerm>], path: &str) -> Result<Vec<NcPolynomial>, ParseError> {
    raw.iter()
        .enumerate()
        .map(|(i, terms)| {
            let terms = terms
                .iter()
                .enumerate()
                .map(|(k, t)| Ok((scalar(field, &t.coeff, &format!("{path}/{i}/{k}/coeff"))?, t.word.clone())))
                .collect::<Result<Vec<_>, ParseError>>()?;
            Ok(NcPolynomial { terms })
        })
        .collect()
}

fn relations_value(rels: &[NcPolynomial]) -> Vec<Vec<RawTerm>> {
    rels.iter()
        .map(|r| r.terms.iter().map(|(c, w)| RawTerm { coeff: scalar_value(c), word: w.clone() }).collect())
        .collect()
}

fn side(s: &str, path: &str) -> Result<Side, ParseError> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(invalid(path, format!("side must be \"left\" or \"right\", got {other:?}"))),
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, path: &str) -> Result<&'a T, ParseError> {
    map.get(name).ok_or_else(|| ParseError::Dangling { path: path.into(), name: name.into() })
}

fn element(poset: &FinitePoset, label: &str, path: &str) -> Result<usize, ParseError> {
    poset
        .index_of(label)
        .map_err(|_| ParseError::Dangling { path: path.into(), name: label.into() })
}

// --------------------------------------------------------------- resolve

fn resolve(raw: &RawDocument) -> Result<Document, ParseError> {
    let field = match (raw.field.kind.as_str(), raw.field.p) {
        ("q", None) => Field::Q,
        ("q", Some(_)) => return Err(invalid("/field/p", "Q takes no characteristic")),
        ("gf", Some(p)) => Field::gf(p).map_err(|_| ParseError::NotPrime { path: "/field/p".into(), p })?,
        ("gf", None) => return Err(invalid("/field", "GF needs p")),
        (kind, _) => return Err(ParseError::UnknownFieldKind { path: "/field/kind".into(), kind: kind.into() }),
    };
    let f = &field;
    let mut doc = Document::new(field.clone());

    for (name, c) in &raw.coalgebras {
        let path = format!("/coalgebras/{name}");
        let d = c.dim;
        let delta = matrix(f, &c.delta, d * d, d, &format!("{path}/delta"))?;
        let eps = matrix(f, &c.eps, 1, d, &format!("{path}/eps"))?;
        let co = Coalgebra::unchecked(f, d, delta, eps).map_err(|e| shape(&path, e.to_string()))?;
        doc.coalgebras.insert(name.clone(), co);
    }
    for (name, a) in &raw.algebras {
        let path = format!("/algebras/{name}");
        let d = a.dim;
        let mult = matrix(f, &a.mult, d, d * d, &format!("{path}/mult"))?;
        let unit = matrix(f, &a.unit, d, 1, &format!("{path}/unit"))?;
        let al = Algebra::unchecked(f, d, mult, unit).map_err(|e| shape(&path, e.to_string()))?;
        doc.algebras.insert(name.clone(), al);
    }
    for (name, m) in &raw.morphisms {
        let path = format!("/morphisms/{name}");
        let data = match m.kind.as_str() {
            "coalgebra" => {
                let s = lookup(&doc.coalgebras, &m.source, &format!("{path}/source"))?;
                let t = lookup(&doc.coalgebras, &m.target, &format!("{path}/target"))?;
                let map = matrix(f, &m.matrix, t.dim(), s.dim(), &format!("{path}/matrix"))?;
                MorphismData::Coalgebra(CoalgebraMorphism::unchecked(s, t, map).map_err(|e| shape(&path, e.to_string()))?)
            }
            "algebra" => {
                let s = lookup(&doc.algebras, &m.source, &format!("{path}/source"))?;
                let t = lookup(&doc.algebras, &m.target, &format!("{path}/target"))?;
                let map = matrix(f, &m.matrix, t.dim(), s.dim(), &format!("{path}/matrix"))?;
                MorphismData::Algebra(AlgebraMorphism::unchecked(s, t, map).map_err(|e| shape(&path, e.to_string()))?)
            }
            other => return Err(invalid(&format!("{path}/kind"), format!("unknown morphism kind {other:?}"))),
        };
        doc.morphisms.insert(name.clone(), Morphism { source: m.source.clone(), target: m.target.clone(), data });
    }
    for (name, p) in &raw.posets {
        let path = format!("/posets/{name}");
        let n = p.elements.len();
        if p.leq.len() != n || p.leq.iter().any(|r| r.len() != n) {
            return Err(shape(&format!("{path}/leq"), format!("expected a {n}x{n} relation")));
        }
        let poset = FinitePoset::unchecked(p.elements.clone(), p.leq.clone()).map_err(|e| invalid(&path, e))?;
        doc.posets.insert(name.clone(), poset);
    }
    for (name, r) in &raw.representations {
        let rep = representation(&doc, r, &format!("/representations/{name}"))?;
        doc.representations.insert(name.clone(), rep);
    }
    for (name, c) in &raw.comodules {
        let path = format!("/comodules/{name}");
        let co = lookup(&doc.coalgebras, &c.coalgebra, &format!("{path}/coalgebra"))?;
        let rho = matrix(f, &c.rho, c.dim * co.dim(), c.dim, &format!("{path}/rho"))?;
        let data = match side(&c.side, &format!("{path}/side"))? {
            Side::Right => ComoduleData::Right(RightComodule::unchecked(co, c.dim, rho).map_err(|e| shape(&path, e.to_string()))?),
            Side::Left => ComoduleData::Left(LeftComodule::unchecked(co, c.dim, rho).map_err(|e| shape(&path, e.to_string()))?),
        };
        doc.comodules.insert(name.clone(), Comodule { coalgebra: c.coalgebra.clone(), data });
    }
    for (name, c) in &raw.contramodules {
        let path = format!("/contramodules/{name}");
        let co = lookup(&doc.coalgebras, &c.coalgebra, &format!("{path}/coalgebra"))?;
        let pi = matrix(f, &c.pi, c.dim, c.dim * co.dim(), &format!("{path}/pi"))?;
        let m = Contramodule::unchecked(co, c.dim, pi).map_err(|e| shape(&path, e.to_string()))?;
        doc.contramodules.insert(name.clone(), NamedContramodule { coalgebra: c.coalgebra.clone(), contramodule: m });
    }
    for (name, m) in &raw.modules {
        let module = module(&doc, m, &format!("/modules/{name}"))?;
        doc.modules.insert(name.clone(), module);
    }
    for (name, o) in &raw.objects {
        let obj = object(&doc, o, &format!("/objects/{name}"))?;
        doc.objects.insert(name.clone(), obj);
    }
    // single pairings first: families refer to them
    let (families, singles): (Vec<_>, Vec<_>) = raw.pairings.iter().partition(|(_, p)| p.representation.is_some());
    for (name, p) in singles {
        let pairing = single_pairing(&doc, p, &format!("/pairings/{name}"))?;
        doc.pairings.insert(name.clone(), pairing);
    }
    for (name, p) in families {
        let pairing = family_pairing(&doc, p, &format!("/pairings/{name}"))?;
        doc.pairings.insert(name.clone(), pairing);
    }
    Ok(doc)
}

fn parse_pair(key: &str, sep: &str, poset: &FinitePoset, path: &str) -> Result<(usize, usize), ParseError> {
    let (a, b) = key
        .split_once(sep)
        .ok_or_else(|| invalid(path, format!("keys look like \"a{sep}b\", got {key:?}")))?;
    Ok((element(poset, a.trim(), path)?, element(poset, b.trim(), path)?))
}

/// Fills in composites when only covering pairs are given.
fn close<T: Clone>(
    poset: &FinitePoset,
    given: &BTreeMap<(usize, usize), T>,
    compose: impl Fn(&T, &T) -> Option<T>,
    path: &str,
) -> Result<BTreeMap<(usize, usize), T>, ParseError> {
    let pairs = poset.pairs();
    let keys: Vec<(usize, usize)> = given.keys().copied().collect();
    if keys.iter().any(|k| !pairs.contains(k)) {
        return Err(shape(path, "arrow between incomparable or equal elements"));
    }
    if keys == pairs {
        return Ok(given.clone());
    }
    if keys != poset.covers() {
        return Err(shape(path, "give arrows on every comparable pair or exactly on the covering pairs"));
    }
    let mut all = given.clone();
    let mut by_len: Vec<(usize, usize)> = pairs;
    by_len.sort_by_key(|&(a, b)| (poset.up_set(a).iter().filter(|&&m| poset.leq(m, b)).count(), a, b));
    for (a, b) in by_len {
        if all.contains_key(&(a, b)) {
            continue;
        }
        let m = (0..poset.len())
            .find(|&m| poset.lt(a, m) && poset.lt(m, b) && given.contains_key(&(m, b)) && all.contains_key(&(a, m)))
            .ok_or_else(|| shape(path, "covering pairs do not reach every comparable pair"))?;
        let composed = compose(&all[&(a, m)], &given[&(m, b)]).ok_or_else(|| shape(path, "arrows do not compose"))?;
        all.insert((a, b), composed);
    }
    Ok(all)
}

fn representation(doc: &Document, r: &RawRepresentation, path: &str) -> Result<Representation, ParseError> {
    let poset = lookup(&doc.posets, &r.poset, &format!("{path}/poset"))?.clone();
    let mut fibers = vec![String::new(); poset.len()];
    for (label, name) in &r.fibers {
        let x = element(&poset, label, &format!("{path}/fibers/{label}"))?;
        fibers[x] = name.clone();
    }
    if let Some(x) = fibers.iter().position(String::is_empty) {
        return Err(shape(&format!("{path}/fibers"), format!("no fiber at {}", poset.elements()[x])));
    }
    let mut names = BTreeMap::new();
    for (key, m) in &r.arrows {
        let p = format!("{path}/arrows/{key}");
        let (a, b) = parse_pair(key, "<", &poset, &p)?;
        let mor = lookup(&doc.morphisms, m, &p)?;
        if mor.source != fibers[a] || mor.target != fibers[b] {
            return Err(invalid(&p, format!("{m} does not run from {} to {}", fibers[a], fibers[b])));
        }
        names.insert((a, b), m.clone());
    }
    let rep = match r.kind.as_str() {
        "coalgebra" => {
            let cs = fibers
                .iter()
                .enumerate()
                .map(|(x, n)| lookup(&doc.coalgebras, n, &format!("{path}/fibers/{}", poset.elements()[x])).cloned())
                .collect::<Result<Vec<_>, _>>()?;
            let mut given = BTreeMap::new();
            for (k, n) in &names {
                let m = doc
                    .coalgebra_morphism(n)
                    .ok_or_else(|| invalid(&format!("{path}/arrows"), format!("{n} is not a coalgebra morphism")))?;
                given.insert(*k, m.clone());
            }
            let arrows = close(&poset, &given, |f, g| f.then(g).ok(), &format!("{path}/arrows"))?;
            Rep::Coalgebra(CoalgebraRep::unchecked(poset, cs, arrows).map_err(|e| shape(path, e.to_string()))?)
        }
        "algebra" => {
            let als = fibers
                .iter()
                .enumerate()
                .map(|(x, n)| lookup(&doc.algebras, n, &format!("{path}/fibers/{}", poset.elements()[x])).cloned())
                .collect::<Result<Vec<_>, _>>()?;
            let mut given = BTreeMap::new();
            for (k, n) in &names {
                let MorphismData::Algebra(m) = &doc.morphisms[n].data else {
                    return Err(invalid(&format!("{path}/arrows"), format!("{n} is not an algebra morphism")));
                };
                given.insert(*k, m.clone());
            }
            let arrows = close(&poset, &given, |f, g| f.then(g).ok(), &format!("{path}/arrows"))?;
            Rep::Algebra(AlgebraRep::unchecked(poset, als, arrows).map_err(|e| shape(path, e.to_string()))?)
        }
        other => return Err(invalid(&format!("{path}/kind"), format!("unknown representation kind {other:?}"))),
    };
    Ok(Representation { poset: r.poset.clone(), fibers, arrows: names, rep })
}

fn module(doc: &Document, m: &RawModule, path: &str) -> Result<NamedModule, ParseError> {
    let f = &doc.field;
    match (&m.algebra, m.generators) {
        (Some(name), None) => {
            if m.relations.is_some() {
                return Err(invalid(path, "relations belong to presented algebras"));
            }
            let a = lookup(&doc.algebras, name, &format!("{path}/algebra"))?;
            let s = side(m.side.as_deref().unwrap_or("left"), &format!("{path}/side"))?;
            if m.ops.len() != a.dim() {
                return Err(shape(&format!("{path}/ops"), format!("expected {} matrices", a.dim())));
            }
            let ops = m
                .ops
                .iter()
                .enumerate()
                .map(|(i, op)| matrix(f, op, m.dim, m.dim, &format!("{path}/ops/{i}")))
                .collect::<Result<Vec<_>, _>>()?;
            let module = Module::unchecked(a, s, m.dim, ops).map_err(|e| shape(path, e.to_string()))?;
            Ok(NamedModule { algebra: Some(name.clone()), data: ActionData::Module(module) })
        }
        (None, Some(g)) => {
            if m.side.as_deref().is_some_and(|s| s != "left") {
                return Err(invalid(&format!("{path}/side"), "presented actions are left actions"));
            }
            if m.ops.len() != g {
                return Err(shape(&format!("{path}/ops"), format!("expected {g} matrices")));
            }
            let ops = m
                .ops
                .iter()
                .enumerate()
                .map(|(i, op)| matrix(f, op, m.dim, m.dim, &format!("{path}/ops/{i}")))
                .collect::<Result<Vec<_>, _>>()?;
            let rels = relations(f, m.relations.as_deref().unwrap_or(&[]), &format!("{path}/relations"))?;
            let action = FPAlgebraAction::new(f, g, rels, m.dim, ops).map_err(|e| invalid(path, e))?;
            Ok(NamedModule { algebra: None, data: ActionData::Presented(action) })
        }
        _ => Err(invalid(path, "give exactly one of \"algebra\" and \"generators\"")),
    }
}

fn object(doc: &Document, o: &RawObject, path: &str) -> Result<Object, ParseError> {
    let f = &doc.field;
    let flavor = Flavor::from_name(&o.flavor)
        .ok_or_else(|| invalid(&format!("{path}/flavor"), format!("unknown flavor {:?}", o.flavor)))?;
    let r = lookup(&doc.representations, &o.rep, &format!("{path}/rep"))?;
    let rep = &r.rep;
    let poset = rep.poset();
    if flavor.over_coalgebras() != matches!(rep, Rep::Coalgebra(_)) {
        return Err(invalid(&format!("{path}/rep"), format!("{flavor} objects need a {} representation", if flavor.over_coalgebras() { "coalgebra" } else { "algebra" })));
    }
    let mut fibers: Vec<Option<Module>> = vec![None; poset.len()];
    for (label, fb) in &o.fibers {
        let p = format!("{path}/fibers/{label}");
        let x = element(poset, label, &p)?;
        let d = fb.dim;
        let module = match rep {
            Rep::Coalgebra(c) => {
                let cx = c.fiber(x);
                if flavor == Flavor::TransContramodule {
                    let pi = fb.pi.as_ref().ok_or_else(|| invalid(&p, "contramodule fibers carry \"pi\""))?;
                    let pi = matrix(f, pi, d, d * cx.dim(), &format!("{p}/pi"))?;
                    Contramodule::unchecked(cx, d, pi).map_err(|e| shape(&p, e.to_string()))?.to_module()
                } else {
                    let rho = fb.rho.as_ref().ok_or_else(|| invalid(&p, "comodule fibers carry \"rho\""))?;
                    let rho = matrix(f, rho, d * cx.dim(), d, &format!("{p}/rho"))?;
                    RightComodule::unchecked(cx, d, rho).map_err(|e| shape(&p, e.to_string()))?.to_module()
                }
            }
            Rep::Algebra(a) => {
                let ax = a.fiber(x);
                let ops = fb.ops.as_ref().ok_or_else(|| invalid(&p, "module fibers carry \"ops\""))?;
                if ops.len() != ax.dim() {
                    return Err(shape(&format!("{p}/ops"), format!("expected {} matrices", ax.dim())));
                }
                let ops = ops
                    .iter()
                    .enumerate()
                    .map(|(i, op)| matrix(f, op, d, d, &format!("{p}/ops/{i}")))
                    .collect::<Result<Vec<_>, _>>()?;
                Module::unchecked(ax, flavor.side(), d, ops).map_err(|e| shape(&p, e.to_string()))?
            }
        };
        if (fb.rho.is_some() as u8 + fb.pi.is_some() as u8 + fb.ops.is_some() as u8) != 1 {
            return Err(invalid(&p, "give exactly one of \"rho\", \"pi\", \"ops\""));
        }
        fibers[x] = Some(module);
    }
    let fibers = fibers
        .into_iter()
        .enumerate()
        .map(|(x, m)| m.ok_or_else(|| shape(&format!("{path}/fibers"), format!("no fiber at {}", poset.elements()[x]))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut structure = BTreeMap::new();
    let allowed = flavor.transitions(poset);
    for (key, raw) in &o.structure {
        let p = format!("{path}/structure/{key}");
        let (s, t) = parse_pair(key, "->", poset, &p)?;
        if !allowed.contains(&(s, t)) {
            return Err(invalid(&p, format!("{flavor} transitions do not run this way")));
        }
        structure.insert((s, t), matrix(f, raw, fibers[t].dim(), fibers[s].dim(), &p)?);
    }
    let object = RepObject::unchecked(flavor, rep, fibers, structure).map_err(|e| shape(path, e.to_string()))?;
    Ok(Object { rep: o.rep.clone(), object })
}

fn single_pairing(doc: &Document, p: &RawPairing, path: &str) -> Result<Pairing, ParseError> {
    let f = &doc.field;
    if p.algebra_rep.is_some() || p.fibers.is_some() {
        return Err(invalid(path, "\"algebra_rep\" and \"fibers\" belong to pairing families"));
    }
    let cname = p.coalgebra.as_ref().ok_or_else(|| invalid(path, "missing \"coalgebra\""))?;
    let c = lookup(&doc.coalgebras, cname, &format!("{path}/coalgebra"))?;
    let raw_values = p.values.as_ref().ok_or_else(|| invalid(path, "missing \"values\""))?;
    let vpath = format!("{path}/values");
    match (&p.algebra, p.generators) {
        (Some(aname), None) => {
            if p.relations.is_some() || p.words.is_some() {
                return Err(invalid(path, "relations and words belong to presented algebras"));
            }
            let a = lookup(&doc.algebras, aname, &format!("{path}/algebra"))?;
            let values = matrix(f, raw_values, c.dim(), a.dim(), &vpath)?;
            let pairing = RationalPairing::finite_unchecked(c, a, values).map_err(|e| shape(path, e.to_string()))?;
            Ok(Pairing::Single { coalgebra: cname.clone(), algebra: Some(aname.clone()), pairing })
        }
        (None, Some(g)) => {
            let words = p.words.clone().ok_or_else(|| invalid(path, "presented pairings list their \"words\""))?;
            let rels = relations(f, p.relations.as_deref().unwrap_or(&[]), &format!("{path}/relations"))?;
            let values = matrix(f, raw_values, c.dim(), words.len(), &vpath)?;
            let pairing = RationalPairing::presented_unchecked(c, g, rels, words, values)
                .map_err(|e| shape(path, e.to_string()))?;
            Ok(Pairing::Single { coalgebra: cname.clone(), algebra: None, pairing })
        }
        _ => Err(invalid(path, "give exactly one of \"algebra\" and \"generators\"")),
    }
}

fn family_pairing(doc: &Document, p: &RawPairing, path: &str) -> Result<Pairing, ParseError> {
    if p.coalgebra.is_some() || p.algebra.is_some() || p.values.is_some() || p.generators.is_some() {
        return Err(invalid(path, "a pairing family only names representations and fiber pairings"));
    }
    let rname = p.representation.as_ref().expect("partitioned on this");
    let aname = p.algebra_rep.as_ref().ok_or_else(|| invalid(path, "missing \"algebra_rep\""))?;
    let Rep::Coalgebra(crep) = &lookup(&doc.representations, rname, &format!("{path}/representation"))?.rep else {
        return Err(invalid(&format!("{path}/representation"), "expected a coalgebra representation"));
    };
    let Rep::Algebra(arep) = &lookup(&doc.representations, aname, &format!("{path}/algebra_rep"))?.rep else {
        return Err(invalid(&format!("{path}/algebra_rep"), "expected an algebra representation"));
    };
    let poset = crep.poset();
    let mut names = vec![String::new(); poset.len()];
    for (label, n) in p.fibers.as_ref().ok_or_else(|| invalid(path, "missing \"fibers\""))? {
        let x = element(poset, label, &format!("{path}/fibers/{label}"))?;
        names[x] = n.clone();
    }
    let mut pairings = Vec::new();
    for (x, n) in names.iter().enumerate() {
        let fp = format!("{path}/fibers/{}", poset.elements()[x]);
        if n.is_empty() {
            return Err(shape(&format!("{path}/fibers"), format!("no pairing at {}", poset.elements()[x])));
        }
        match lookup(&doc.pairings, n, &fp)? {
            Pairing::Single { pairing, .. } => pairings.push(pairing.clone()),
            Pairing::Family { .. } => return Err(invalid(&fp, "fibers name single pairings")),
        }
    }
    let pairing = RepPairing::unchecked(crep.clone(), arep.clone(), pairings).map_err(|e| invalid(path, e))?;
    Ok(Pairing::Family { representation: rname.clone(), algebra_rep: aname.clone(), fibers: names, pairing })
}

// ---------------------------------------------------------------- encode

fn to_raw(doc: &Document) -> RawDocument {
    let field = match doc.field {
        Field::Gf(p) => RawField { kind: "gf".into(), p: Some(p) },
        Field::Q => RawField { kind: "q".into(), p: None },
    };
    let coalgebras = doc
        .coalgebras
        .iter()
        .map(|(n, c)| (n.clone(), RawCoalgebra { dim: c.dim(), delta: matrix_value(c.delta()), eps: matrix_value(c.eps()) }))
        .collect();
    let algebras = doc
        .algebras
        .iter()
        .map(|(n, a)| (n.clone(), RawAlgebra { dim: a.dim(), mult: matrix_value(a.mult()), unit: matrix_value(a.unit()) }))
        .collect();
    let morphisms = doc
        .morphisms
        .iter()
        .map(|(n, m)| {
            let (kind, map) = match &m.data {
                MorphismData::Coalgebra(c) => ("coalgebra", &c.map),
                MorphismData::Algebra(a) => ("algebra", &a.map),
            };
            let raw = RawMorphism {
                kind: kind.into(),
                source: m.source.clone(),
                target: m.target.clone(),
                matrix: matrix_value(map),
            };
            (n.clone(), raw)
        })
        .collect();
    let posets = doc
        .posets
        .iter()
        .map(|(n, p)| (n.clone(), RawPoset { elements: p.elements().to_vec(), leq: p.relation().to_vec() }))
        .collect();
    let representations = doc
        .representations
        .iter()
        .map(|(n, r)| {
            let labels = r.rep.poset().elements();
            let raw = RawRepresentation {
                kind: if matches!(r.rep, Rep::Coalgebra(_)) { "coalgebra" } else { "algebra" }.into(),
                poset: r.poset.clone(),
                fibers: labels.iter().cloned().zip(r.fibers.iter().cloned()).collect(),
                arrows: r.arrows.iter().map(|(&(a, b), m)| (format!("{}<{}", labels[a], labels[b]), m.clone())).collect(),
            };
            (n.clone(), raw)
        })
        .collect();
    let comodules = doc
        .comodules
        .iter()
        .map(|(n, c)| {
            let (s, dim, rho) = match &c.data {
                ComoduleData::Right(m) => ("right", m.dim(), m.rho()),
                ComoduleData::Left(m) => ("left", m.dim(), m.rho()),
            };
            (n.clone(), RawComodule { coalgebra: c.coalgebra.clone(), side: s.into(), dim, rho: matrix_value(rho) })
        })
        .collect();
    let contramodules = doc
        .contramodules
        .iter()
        .map(|(n, c)| {
            let m = &c.contramodule;
            (n.clone(), RawContramodule { coalgebra: c.coalgebra.clone(), dim: m.dim(), pi: matrix_value(m.pi()) })
        })
        .collect();
    let modules = doc
        .modules
        .iter()
        .map(|(n, m)| {
            let raw = match &m.data {
                ActionData::Module(md) => RawModule {
                    algebra: m.algebra.clone(),
                    side: Some(side_name(md.side()).into()),
                    generators: None,
                    relations: None,
                    dim: md.dim(),
                    ops: md.ops().iter().map(matrix_value).collect(),
                },
                ActionData::Presented(a) => RawModule {
                    algebra: None,
                    side: None,
                    generators: Some(a.generators()),
                    relations: if a.relations().is_empty() { None } else { Some(relations_value(a.relations())) },
                    dim: a.dim(),
                    ops: a.matrices().iter().map(matrix_value).collect(),
                },
            };
            (n.clone(), raw)
        })
        .collect();
    let objects = doc.objects.iter().map(|(n, o)| (n.clone(), object_value(o))).collect();
    let pairings = doc
        .pairings
        .iter()
        .map(|(n, p)| {
            let raw = match p {
                Pairing::Single { coalgebra, algebra, pairing } => {
                    let presented = match pairing.algebra() {
                        PairedAlgebra::Finite(_) => None,
                        PairedAlgebra::Presented { generators, relations } => Some((*generators, relations)),
                    };
                    RawPairing {
                        coalgebra: Some(coalgebra.clone()),
                        algebra: algebra.clone(),
                        generators: presented.map(|(g, _)| g),
                        relations: presented.and_then(|(_, r)| (!r.is_empty()).then(|| relations_value(r))),
                        words: presented.map(|_| pairing.words().to_vec()),
                        values: Some(matrix_value(pairing.values())),
                        representation: None,
                        algebra_rep: None,
                        fibers: None,
                    }
                }
                Pairing::Family { representation, algebra_rep, fibers, pairing } => {
                    let labels = pairing.crep().poset().elements();
                    RawPairing {
                        coalgebra: None,
                        algebra: None,
                        generators: None,
                        relations: None,
                        words: None,
                        values: None,
                        representation: Some(representation.clone()),
                        algebra_rep: Some(algebra_rep.clone()),
                        fibers: Some(labels.iter().cloned().zip(fibers.iter().cloned()).collect()),
                    }
                }
            };
            (n.clone(), raw)
        })
        .collect();
    RawDocument {
        field,
        coalgebras,
        algebras,
        morphisms,
        posets,
        representations,
        comodules,
        contramodules,
        modules,
        objects,
        pairings,
    }
}

fn object_value(o: &Object) -> RawObject {
    let m = &o.object;
    let labels = m.rep().poset().elements();
    let fibers = (0..m.len())
        .map(|x| {
            let fiber = m.fiber(x);
            let mut raw = RawFiber { dim: fiber.dim(), rho: None, pi: None, ops: None };
            match (m.rep(), m.flavor()) {
                (Rep::Coalgebra(c), Flavor::TransContramodule) => {
                    let cm = Contramodule::from_module(c.fiber(x), fiber).expect("fibers are dual-algebra modules");
                    raw.pi = Some(matrix_value(cm.pi()));
                }
                (Rep::Coalgebra(c), _) => {
                    raw.rho = Some(matrix_value(RightComodule::from_module(c.fiber(x), fiber).rho()));
                }
                (Rep::Algebra(_), _) => raw.ops = Some(fiber.ops().iter().map(matrix_value).collect()),
            }
            (labels[x].clone(), raw)
        })
        .collect();
    let structure = m
        .structure()
        .iter()
        .map(|(&(s, t), tr)| (format!("{}->{}", labels[s], labels[t]), matrix_value(tr)))
        .collect();
    RawObject { flavor: m.flavor().name().into(), rep: o.rep.clone(), fibers, structure }
}
