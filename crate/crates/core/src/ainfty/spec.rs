//! JSON encoding of categories and functors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{AInftyCategory, AInftyError, AInftyFunctor, CategoryBuilder};
use crate::exactlin::{Field, GenId, GradedQuiver, LinError, Scalar};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Category(#[from] AInftyError),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("{0}")]
    Invalid(String),
}

impl From<serde_json::Error> for SpecError {
    fn from(e: serde_json::Error) -> Self {
        SpecError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// `[source, target, degree, label]`.
pub type GeneratorRef = (String, String, usize, String);

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub source: String,
    pub target: String,
    pub degree: usize,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct OperationSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arity: Option<usize>,
    pub inputs: Vec<GeneratorRef>,
    /// `[label, scalar]`; the output slot is implied by the inputs.
    pub output: (String, String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CategorySpec {
    #[serde(default)]
    pub name: String,
    #[serde(default = "default_field")]
    pub field: String,
    pub objects: Vec<String>,
    pub max_degree: usize,
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub units: BTreeMap<String, String>,
    #[serde(default)]
    pub operations: Vec<OperationSpec>,
}

fn default_field() -> String {
    "Q".into()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FunctorSpec {
    #[serde(default)]
    pub name: String,
    /// Inline category or a path relative to the functor file.
    pub source: serde_json::Value,
    pub target: serde_json::Value,
    pub object_map: BTreeMap<String, String>,
    #[serde(default)]
    pub components: Vec<OperationSpec>,
}

fn object(q: &GradedQuiver, name: &str) -> Result<usize, SpecError> {
    q.object(name)
        .ok_or_else(|| SpecError::Lin(LinError::UnknownObject(name.to_string())))
}

fn resolve(q: &GradedQuiver, r: &GeneratorRef) -> Result<GenId, SpecError> {
    let (s, t, d, l) = r;
    q.lookup(object(q, s)?, object(q, t)?, *d, l)
        .ok_or_else(|| AInftyError::UnknownLabel(format!("{l} in {s}->{t} degree {d}")).into())
}

impl CategorySpec {
    /// Builds the category; `field` overrides the field named in the spec.
    pub fn build(&self, field: Option<Field>) -> Result<AInftyCategory, SpecError> {
        let field = match field {
            Some(f) => f,
            None => self.field.parse()?,
        };
        let mut b = CategoryBuilder::new(field, self.max_degree);
        b.name(&self.name);
        for o in &self.objects {
            b.object(o)?;
        }
        for (o, label) in &self.units {
            let x = object(b.quiver(), o)?;
            b.unit(x, label)?;
        }
        for g in &self.generators {
            let s = object(b.quiver(), &g.source)?;
            let t = object(b.quiver(), &g.target)?;
            for l in &g.labels {
                if s == t && g.degree == 0 && b.quiver().lookup(s, t, 0, l).is_some() {
                    continue;
                }
                b.generator(s, t, g.degree, l)?;
            }
        }
        for op in &self.operations {
            let inputs = op
                .inputs
                .iter()
                .map(|r| resolve(b.quiver(), r))
                .collect::<Result<Vec<_>, _>>()?;
            check_arity(op, inputs.len())?;
            let (s, t, d) = output_slot(b.quiver(), &inputs, 2)?;
            let out = b
                .quiver()
                .lookup(s, t, d, &op.output.0)
                .ok_or_else(|| AInftyError::UnknownLabel(op.output.0.clone()))?;
            let c = field.parse_scalar(&op.output.1)?;
            b.op(&inputs, &[(out, c)])?;
        }
        Ok(b.build()?)
    }

    pub fn from_category(a: &AInftyCategory) -> Self {
        let q = a.quiver();
        let name = |x: usize| q.objects()[x].clone();
        let gref = |g: GenId| {
            let gen = q.generator(g);
            (name(gen.source), name(gen.target), gen.degree, gen.label.clone())
        };
        let mut generators: Vec<GeneratorSpec> = Vec::new();
        for (id, g) in q.generators().iter().enumerate() {
            if a.is_unit(id) {
                continue;
            }
            match generators.iter_mut().find(|s| {
                s.source == name(g.source) && s.target == name(g.target) && s.degree == g.degree
            }) {
                Some(s) => s.labels.push(g.label.clone()),
                None => generators.push(GeneratorSpec {
                    source: name(g.source),
                    target: name(g.target),
                    degree: g.degree,
                    labels: vec![g.label.clone()],
                }),
            }
        }
        let units = (0..a.object_count())
            .map(|x| (name(x), q.generator(a.unit(x)).label.clone()))
            .collect();
        let mut operations = Vec::new();
        for (inputs, outputs) in a.table() {
            for (g, c) in outputs {
                operations.push(OperationSpec {
                    arity: Some(inputs.len()),
                    inputs: inputs.iter().map(|&i| gref(i)).collect(),
                    output: (q.generator(*g).label.clone(), c.to_string()),
                });
            }
        }
        CategorySpec {
            name: a.name().to_string(),
            field: a.field().to_string(),
            objects: q.objects().to_vec(),
            max_degree: a.max_degree(),
            generators,
            units,
            operations,
        }
    }
}

fn check_arity(op: &OperationSpec, k: usize) -> Result<(), SpecError> {
    match op.arity {
        Some(a) if a != k => Err(SpecError::Invalid(format!(
            "declared arity {a} but {k} inputs"
        ))),
        _ if k == 0 => Err(SpecError::Invalid("operation without inputs".into())),
        _ => Ok(()),
    }
}

/// `(source, target, degree)` of an operation of degree `k - shift`.
fn output_slot(q: &GradedQuiver, inputs: &[GenId], shift: i64) -> Result<(usize, usize, usize), SpecError> {
    let gens = q.generators();
    if inputs.windows(2).any(|w| gens[w[0]].target != gens[w[1]].source) {
        return Err(AInftyError::NotComposable(format!("{inputs:?}")).into());
    }
    let k = inputs.len() as i64;
    let d = inputs.iter().map(|&g| gens[g].degree as i64).sum::<i64>() + k - shift;
    if d < 0 {
        return Err(AInftyError::BadDegree(d).into());
    }
    Ok((
        gens[inputs[0]].source,
        gens[*inputs.last().unwrap()].target,
        d as usize,
    ))
}

pub fn parse_category(text: &str, field: Option<Field>) -> Result<AInftyCategory, SpecError> {
    let spec: CategorySpec = serde_json::from_str(text)?;
    spec.build(field)
}

fn read(path: &Path) -> Result<String, SpecError> {
    std::fs::read_to_string(path).map_err(|source| SpecError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_category(path: &Path, field: Option<Field>) -> Result<AInftyCategory, SpecError> {
    parse_category(&read(path)?, field)
}

fn category_value(v: &serde_json::Value, base: &Path, field: Option<Field>) -> Result<AInftyCategory, SpecError> {
    match v {
        serde_json::Value::String(p) => {
            let path: PathBuf = base.join(p);
            load_category(&path, field)
        }
        other => {
            let spec: CategorySpec = serde_json::from_value(other.clone())?;
            spec.build(field)
        }
    }
}

/// Parses a functor; relative category paths resolve against `base`.
pub fn parse_functor(text: &str, base: &Path, field: Option<Field>) -> Result<AInftyFunctor, SpecError> {
    let spec: FunctorSpec = serde_json::from_str(text)?;
    let a = Arc::new(category_value(&spec.source, base, field)?);
    let b = Arc::new(category_value(&spec.target, base, field)?);
    let mut map = vec![usize::MAX; a.object_count()];
    for (x, y) in &spec.object_map {
        map[object(a.quiver(), x)?] = object(b.quiver(), y)?;
    }
    if map.contains(&usize::MAX) {
        return Err(SpecError::Invalid("object map is not total".into()));
    }
    let mut f = AInftyFunctor::new(&spec.name, a.clone(), b.clone(), map)?;
    for c in &spec.components {
        let inputs = c
            .inputs
            .iter()
            .map(|r| resolve(a.quiver(), r))
            .collect::<Result<Vec<_>, _>>()?;
        check_arity(c, inputs.len())?;
        let (s, t, d) = output_slot(a.quiver(), &inputs, 1)?;
        let out = b
            .quiver()
            .lookup(f.map_object(s), f.map_object(t), d, &c.output.0)
            .ok_or_else(|| AInftyError::UnknownLabel(c.output.0.clone()))?;
        let coef: Scalar = a.field().parse_scalar(&c.output.1)?;
        f.set_component(&inputs, &[(out, coef)])?;
    }
    Ok(f)
}

pub fn load_functor(path: &Path, field: Option<Field>) -> Result<AInftyFunctor, SpecError> {
    let base = path.parent().unwrap_or(Path::new("."));
    parse_functor(&read(path)?, base, field)
}

/// Serializes a functor with inline categories.
pub fn functor_to_spec(f: &AInftyFunctor) -> FunctorSpec {
    let a = f.source();
    let b = f.target();
    let qa = a.quiver();
    let qb = b.quiver();
    let mut components = Vec::new();
    for (inputs, outputs) in f.table() {
        for (g, c) in outputs {
            components.push(OperationSpec {
                arity: Some(inputs.len()),
                inputs: inputs
                    .iter()
                    .map(|&i| {
                        let gen = qa.generator(i);
                        (
                            qa.objects()[gen.source].clone(),
                            qa.objects()[gen.target].clone(),
                            gen.degree,
                            gen.label.clone(),
                        )
                    })
                    .collect(),
                output: (qb.generator(*g).label.clone(), c.to_string()),
            });
        }
    }
    FunctorSpec {
        name: f.name().to_string(),
        source: serde_json::to_value(CategorySpec::from_category(a)).expect("serializable"),
        target: serde_json::to_value(CategorySpec::from_category(b)).expect("serializable"),
        object_map: (0..a.object_count())
            .map(|x| (qa.objects()[x].clone(), qb.objects()[f.map_object(x)].clone()))
            .collect(),
        components,
    }
}
