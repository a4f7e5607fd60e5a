//! The interchange form: plain serde mirrors of the JSON document. Entries
//! stay as raw JSON values here; `document` turns them into scalars once
//! the field is known.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub type RawMatrix = Vec<Vec<Value>>;

fn empty<K, V>(m: &BTreeMap<K, V>) -> bool {
    m.is_empty()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDocument {
    pub field: RawField,
    #[serde(default, skip_serializing_if = "empty")]
    pub coalgebras: BTreeMap<String, RawCoalgebra>,
    #[serde(default, skip_serializing_if = "empty")]
    pub algebras: BTreeMap<String, RawAlgebra>,
    #[serde(default, skip_serializing_if = "empty")]
    pub morphisms: BTreeMap<String, RawMorphism>,
    #[serde(default, skip_serializing_if = "empty")]
    pub posets: BTreeMap<String, RawPoset>,
    #[serde(default, skip_serializing_if = "empty")]
    pub representations: BTreeMap<String, RawRepresentation>,
    #[serde(default, skip_serializing_if = "empty")]
    pub comodules: BTreeMap<String, RawComodule>,
    #[serde(default, skip_serializing_if = "empty")]
    pub contramodules: BTreeMap<String, RawContramodule>,
    #[serde(default, skip_serializing_if = "empty")]
    pub modules: BTreeMap<String, RawModule>,
    #[serde(default, skip_serializing_if = "empty")]
    pub objects: BTreeMap<String, RawObject>,
    #[serde(default, skip_serializing_if = "empty")]
    pub pairings: BTreeMap<String, RawPairing>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawField {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCoalgebra {
    pub dim: usize,
    pub delta: RawMatrix,
    pub eps: RawMatrix,
}

/// `mult` is `d x d^2` with column `i*d + j` holding `e_i e_j`; `unit` is `d x 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawAlgebra {
    pub dim: usize,
    pub mult: RawMatrix,
    pub unit: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMorphism {
    pub kind: String,
    pub source: String,
    pub target: String,
    pub matrix: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPoset {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
}

/// `arrows` is keyed `"a<b"`; either every comparable pair or exactly the
/// covering pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawRepresentation {
    pub kind: String,
    pub poset: String,
    pub fibers: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "empty")]
    pub arrows: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawComodule {
    pub coalgebra: String,
    pub side: String,
    pub dim: usize,
    pub rho: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawContramodule {
    pub coalgebra: String,
    pub dim: usize,
    pub pi: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTerm {
    pub coeff: Value,
    pub word: Vec<usize>,
}

/// Over a declared algebra (`algebra`, `side`, one op per basis element)
/// or over a presented one (`generators`, `relations`, one op per generator).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawModule {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<Vec<RawTerm>>>,
    pub dim: usize,
    pub ops: Vec<RawMatrix>,
}

/// A fiber carries `rho` (comodule flavors), `pi` (contramodules) or
/// `ops` (module flavors).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawFiber {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pi: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ops: Option<Vec<RawMatrix>>,
}

/// `structure` is keyed `"s->t"` along the flavor's transitions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawObject {
    pub flavor: String,
    pub rep: String,
    pub fibers: BTreeMap<String, RawFiber>,
    #[serde(default, skip_serializing_if = "empty")]
    pub structure: BTreeMap<String, RawMatrix>,
}

/// Either a single pairing (`coalgebra` with `algebra` or a presentation)
/// or a family over representations (`representation`, `algebra_rep`,
/// `fibers` naming single pairings).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPairing {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<Vec<RawTerm>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<RawMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra_rep: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibers: Option<BTreeMap<String, String>>,
}
