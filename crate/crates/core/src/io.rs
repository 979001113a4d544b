//! JSON encodings of nerve elements, horns, simplex collections and reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::ainfty::spec::SpecError;
use crate::ainfty::AInftyCategory;
use crate::exactlin::{GenId, TensorElement};
use crate::necklace::{injective_index, Necklace, NecklaceMap};
use crate::nerve::{bead_degrees, NerveElement, Residual};
use crate::quasicat::{HornData, SimplexCollection};

pub const SCHEMA_VERSION: u32 = 1;

/// `[[labels…], coefficient]`.
pub type TermJson = (Vec<String>, String);

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ComponentJson {
    /// Vertex images of the injective map.
    pub map: Vec<usize>,
    /// Joints of its source necklace.
    pub joints: Vec<usize>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub necklace: String,
    pub from: String,
    pub to: String,
    pub components: Vec<ComponentJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct HornJson {
    pub n: usize,
    pub j: usize,
    pub from: String,
    pub to: String,
    pub faces: BTreeMap<usize, ElementJson>,
    pub decomps: BTreeMap<usize, ElementJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SimplexEntryJson {
    pub indices: Vec<usize>,
    pub terms: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SimplexJson {
    pub n: usize,
    pub objects: Vec<String>,
    pub elements: Vec<SimplexEntryJson>,
}

fn invalid(msg: String) -> SpecError {
    SpecError::Invalid(msg)
}

fn object(a: &AInftyCategory, name: &str) -> Result<usize, SpecError> {
    a.object(name)
        .ok_or_else(|| invalid(format!("unknown object {name:?}")))
}

fn label(a: &AInftyCategory, g: GenId) -> String {
    a.quiver().generator(g).label.clone()
}

/// The generator named `name` leaving `at` in degree `degree`.
fn resolve(a: &AInftyCategory, at: usize, degree: usize, name: &str) -> Result<GenId, SpecError> {
    let hits: Vec<GenId> = (0..a.object_count())
        .filter_map(|t| a.quiver().lookup(at, t, degree, name))
        .collect();
    match hits.as_slice() {
        [g] => Ok(*g),
        [] => Err(invalid(format!(
            "no generator {name:?} of degree {degree} out of {}",
            a.object_name(at)
        ))),
        _ => Err(invalid(format!("generator label {name:?} is ambiguous"))),
    }
}

fn tensor_to_json(a: &AInftyCategory, x: &TensorElement) -> Vec<TermJson> {
    x.terms()
        .map(|(k, c)| (k.iter().map(|&g| label(a, g)).collect(), c.to_string()))
        .collect()
}

fn tensor_from_json(
    a: &AInftyCategory,
    terms: &[TermJson],
    from: usize,
    degrees: &[usize],
) -> Result<TensorElement, SpecError> {
    let mut x = TensorElement::zero();
    for (labels, coef) in terms {
        if labels.len() != degrees.len() {
            return Err(invalid(format!("term {labels:?} has the wrong number of factors")));
        }
        let mut at = from;
        let mut key = Vec::with_capacity(labels.len());
        for (l, &d) in labels.iter().zip(degrees) {
            let g = resolve(a, at, d, l)?;
            at = a.target(g);
            key.push(g);
        }
        x.add_term(key, &a.field().parse_scalar(coef)?);
    }
    Ok(x)
}

pub fn element_to_json(a: &AInftyCategory, y: &NerveElement) -> ElementJson {
    let idx = injective_index(&y.necklace);
    ElementJson {
        necklace: y.necklace.encode(),
        from: a.object_name(y.from).to_string(),
        to: a.object_name(y.to).to_string(),
        components: idx
            .maps
            .iter()
            .zip(&y.comps)
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, c)| ComponentJson {
                map: g.map().to_vec(),
                joints: g.source().joints().to_vec(),
                terms: tensor_to_json(a, c),
            })
            .collect(),
    }
}

pub fn element_from_json(a: &AInftyCategory, j: &ElementJson) -> Result<NerveElement, SpecError> {
    let t = Necklace::parse(&j.necklace).map_err(|e| invalid(e.to_string()))?;
    let (from, to) = (object(a, &j.from)?, object(a, &j.to)?);
    let idx = injective_index(&t);
    let mut y = NerveElement::zero(&t, from, to);
    for c in &j.components {
        let u = Necklace::new(c.map.len().saturating_sub(1), c.joints.clone())
            .map_err(|e| invalid(e.to_string()))?;
        let g = NecklaceMap::new(u, t.clone(), c.map.clone()).map_err(|e| invalid(e.to_string()))?;
        let gi = idx
            .position(&g)
            .ok_or_else(|| invalid(format!("map {:?} is not injective into {t}", c.map)))?;
        let x = tensor_from_json(a, &c.terms, from, &bead_degrees(g.source()))?;
        y.comps[gi].add_assign(&x);
    }
    y.check_shape(a).map_err(|e| invalid(e.to_string()))?;
    Ok(y)
}

pub fn horn_to_json(a: &AInftyCategory, h: &HornData) -> HornJson {
    HornJson {
        n: h.n,
        j: h.j,
        from: a.object_name(h.from).to_string(),
        to: a.object_name(h.to).to_string(),
        faces: h.faces.iter().map(|(i, y)| (*i, element_to_json(a, y))).collect(),
        decomps: h.decomps.iter().map(|(k, x)| (*k, element_to_json(a, x))).collect(),
    }
}

pub fn horn_from_json(a: &AInftyCategory, j: &HornJson) -> Result<HornData, SpecError> {
    let conv = |m: &BTreeMap<usize, ElementJson>| -> Result<BTreeMap<usize, NerveElement>, SpecError> {
        m.iter().map(|(i, e)| Ok((*i, element_from_json(a, e)?))).collect()
    };
    Ok(HornData {
        n: j.n,
        j: j.j,
        from: object(a, &j.from)?,
        to: object(a, &j.to)?,
        faces: conv(&j.faces)?,
        decomps: conv(&j.decomps)?,
    })
}

pub fn parse_horn(a: &AInftyCategory, text: &str) -> Result<HornData, SpecError> {
    let j: HornJson = serde_json::from_str(text)?;
    horn_from_json(a, &j)
}

pub fn simplex_to_json(a: &AInftyCategory, s: &SimplexCollection) -> SimplexJson {
    SimplexJson {
        n: s.n,
        objects: s.objects.iter().map(|&o| a.object_name(o).to_string()).collect(),
        elements: s
            .elements
            .iter()
            .map(|(seq, x)| SimplexEntryJson {
                indices: seq.clone(),
                terms: x.terms().map(|(k, c)| (label(a, k[0]), c.to_string())).collect(),
            })
            .collect(),
    }
}

pub fn simplex_from_json(a: &AInftyCategory, j: &SimplexJson) -> Result<SimplexCollection, SpecError> {
    let objects = j
        .objects
        .iter()
        .map(|o| object(a, o))
        .collect::<Result<Vec<_>, _>>()?;
    let mut s = SimplexCollection::zero(j.n, objects);
    for e in &j.elements {
        if e.indices.len() < 2 || e.indices.iter().any(|&i| i > j.n) {
            return Err(invalid(format!("bad index sequence {:?}", e.indices)));
        }
        let from = s.objects[e.indices[0]];
        let terms: Vec<TermJson> = e.terms.iter().map(|(l, c)| (vec![l.clone()], c.clone())).collect();
        let x = tensor_from_json(a, &terms, from, &[e.indices.len() - 2])?;
        let mut v = s.get(&e.indices);
        v.add_assign(&x);
        s.set(e.indices.clone(), v);
    }
    s.check_shape(a).map_err(|e| invalid(e.to_string()))?;
    Ok(s)
}

pub fn residual_to_json(a: &AInftyCategory, r: &Residual) -> Value {
    json!({
        "map": r.map.map(),
        "joints": r.map.source().joints(),
        "bead": r.bead,
        "residual": tensor_to_json(a, &r.value),
    })
}

/// The common report envelope.
pub fn envelope(command: &str, passed: bool, details: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "status": if passed { "pass" } else { "fail" },
        "details": details,
    })
}

/// Report for rejected input.
pub fn error_envelope(command: &str, message: &str) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "status": "error",
        "details": { "message": message },
    })
}
