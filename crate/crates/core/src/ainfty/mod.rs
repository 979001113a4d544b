//! Finite strictly unital A∞-categories and A∞-functors.

mod check;
pub mod fixtures;
mod functor;
pub mod spec;

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::exactlin::{Field, GenId, GradedQuiver, LinError, Scalar};

pub use check::{
    check_functor, check_relations, check_units, functor_residual, relation_residual, CheckReport,
    Violation,
};
pub use functor::{compose_functors, AInftyFunctor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AInftyError {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("unknown generator {0}")]
    UnknownLabel(String),
    #[error("degree {0} outside [0, max_degree]")]
    BadDegree(i64),
    #[error("table entries may not have unit inputs: {0}")]
    UnitInput(String),
    #[error("inputs are not composable: {0}")]
    NotComposable(String),
    #[error("relations fail: {0}")]
    RelationsFail(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Table = HashMap<Vec<GenId>, Vec<(GenId, Scalar)>>;

/// Finite strictly unital A∞-category with sparse multiplication tables on non-unit inputs.
#[derive(Clone, Debug)]
pub struct AInftyCategory {
    name: String,
    field: Field,
    quiver: GradedQuiver,
    units: Vec<GenId>,
    is_unit: Vec<bool>,
    max_degree: usize,
    ops: Table,
}

impl AInftyCategory {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn quiver(&self) -> &GradedQuiver {
        &self.quiver
    }

    pub fn object_count(&self) -> usize {
        self.quiver.object_count()
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.quiver.objects()[x]
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.quiver.object(name)
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn unit(&self, x: usize) -> GenId {
        self.units[x]
    }

    pub fn is_unit(&self, g: GenId) -> bool {
        self.is_unit[g]
    }

    pub fn degree(&self, g: GenId) -> usize {
        self.quiver.degree(g)
    }

    pub fn source(&self, g: GenId) -> usize {
        self.quiver.generator(g).source
    }

    pub fn target(&self, g: GenId) -> usize {
        self.quiver.generator(g).target
    }

    /// Stored table entries, sorted for deterministic output.
    pub fn table(&self) -> Vec<(&Vec<GenId>, &Vec<(GenId, Scalar)>)> {
        let mut v: Vec<_> = self.ops.iter().collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        v
    }

    /// `m_k` on a basis tuple, with the strict unit laws applied.
    pub fn m(&self, inputs: &[GenId]) -> Vec<(GenId, Scalar)> {
        if inputs.iter().any(|&g| self.is_unit[g]) {
            return match inputs.len() {
                2 if self.is_unit[inputs[0]] => vec![(inputs[1], self.field.one())],
                2 => vec![(inputs[0], self.field.one())],
                _ => Vec::new(),
            };
        }
        self.ops.get(inputs).cloned().unwrap_or_default()
    }

    /// Every composable tuple of `k` generators.
    pub fn composable_tuples(&self, k: usize) -> Vec<Vec<GenId>> {
        let n = self.quiver.generators().len();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(
            a: &AInftyCategory,
            n: usize,
            k: usize,
            cur: &mut Vec<GenId>,
            out: &mut Vec<Vec<GenId>>,
        ) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for g in 0..n {
                if let Some(&last) = cur.last() {
                    if a.target(last) != a.source(g) {
                        continue;
                    }
                }
                cur.push(g);
                rec(a, n, k, cur, out);
                cur.pop();
            }
        }
        rec(self, n, k, &mut cur, &mut out);
        out
    }

    /// Whether every `m_k` with `k > 2` vanishes.
    pub fn is_dg(&self) -> bool {
        self.ops.keys().all(|k| k.len() <= 2)
    }

    /// Whether some stored `m_k` with `k ≥ 3` is nonzero.
    pub fn has_higher_products(&self) -> bool {
        self.ops.iter().any(|(k, v)| k.len() >= 3 && !v.is_empty())
    }

    /// Re-indexes homs along `f0: new objects → Ob(A)`.
    pub fn pullback(&self, names: &[String], f0: &[usize]) -> Result<AInftyCategory, AInftyError> {
        if names.len() != f0.len() || f0.iter().any(|&x| x >= self.object_count()) {
            return Err(AInftyError::Invalid("object map does not fit".into()));
        }
        let mut b = CategoryBuilder::new(self.field, self.max_degree);
        b.name(&format!("pullback of {}", self.name));
        for n in names {
            b.object(n)?;
        }
        let mut origin: HashMap<(usize, usize, GenId), GenId> = HashMap::new();
        for (x, &fx) in f0.iter().enumerate() {
            for (y, &fy) in f0.iter().enumerate() {
                for d in 0..=self.max_degree {
                    for &g in self.quiver.basis(fx, fy, d) {
                        let label = self.quiver.generator(g).label.clone();
                        let id = if x == y && g == self.units[fx] {
                            b.unit(x, &label)?
                        } else {
                            b.generator(x, y, d, &label)?
                        };
                        origin.insert((x, y, g), id);
                    }
                }
            }
        }
        let new = b.clone().build()?;
        let back: HashMap<GenId, GenId> = origin.iter().map(|(&(_, _, g), &id)| (id, g)).collect();
        for k in 1..=self.max_degree + 2 {
            for tuple in new.composable_tuples(k) {
                if tuple.iter().any(|&g| new.is_unit(g)) {
                    continue;
                }
                let mapped: Vec<GenId> = tuple.iter().map(|g| back[g]).collect();
                let x = new.source(tuple[0]);
                let y = new.target(tuple[k - 1]);
                let out: Vec<(GenId, Scalar)> = self
                    .m(&mapped)
                    .into_iter()
                    .map(|(g, c)| (origin[&(x, y, g)], c))
                    .collect();
                if !out.is_empty() {
                    b.op(&tuple, &out)?;
                }
            }
        }
        b.build()
    }
}

/// Incremental constructor for [`AInftyCategory`].
#[derive(Clone, Debug)]
pub struct CategoryBuilder {
    name: String,
    field: Field,
    quiver: GradedQuiver,
    units: BTreeMap<usize, GenId>,
    max_degree: usize,
    ops: Table,
}

impl CategoryBuilder {
    pub fn new(field: Field, max_degree: usize) -> Self {
        CategoryBuilder {
            name: String::new(),
            field,
            quiver: GradedQuiver::new(),
            units: BTreeMap::new(),
            max_degree,
            ops: Table::new(),
        }
    }

    pub fn name(&mut self, name: &str) -> &mut Self {
        self.name = name.to_string();
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn quiver(&self) -> &GradedQuiver {
        &self.quiver
    }

    pub fn object(&mut self, name: &str) -> Result<usize, AInftyError> {
        Ok(self.quiver.add_object(name)?)
    }

    pub fn generator(
        &mut self,
        source: usize,
        target: usize,
        degree: usize,
        label: &str,
    ) -> Result<GenId, AInftyError> {
        if degree > self.max_degree {
            return Err(AInftyError::BadDegree(degree as i64));
        }
        Ok(self.quiver.add_generator(source, target, degree, label)?)
    }

    /// Declares the unit of `x`, creating the degree-0 generator if needed.
    pub fn unit(&mut self, x: usize, label: &str) -> Result<GenId, AInftyError> {
        if self.units.contains_key(&x) {
            return Err(AInftyError::Invalid(format!("second unit for object {x}")));
        }
        let g = match self.quiver.lookup(x, x, 0, label) {
            Some(g) => g,
            None => self.generator(x, x, 0, label)?,
        };
        self.units.insert(x, g);
        Ok(g)
    }

    fn is_unit(&self, g: GenId) -> bool {
        self.units.values().any(|&u| u == g)
    }

    /// Adds `outputs` to `m_k(inputs)`.
    pub fn op(&mut self, inputs: &[GenId], outputs: &[(GenId, Scalar)]) -> Result<(), AInftyError> {
        let k = inputs.len();
        let describe = |q: &GradedQuiver| {
            inputs
                .iter()
                .map(|&g| q.describe(g))
                .collect::<Vec<_>>()
                .join(" ⊗ ")
        };
        if k == 0 {
            return Err(AInftyError::Invalid("operation without inputs".into()));
        }
        if inputs.iter().any(|&g| self.is_unit(g)) {
            return Err(AInftyError::UnitInput(describe(&self.quiver)));
        }
        let gens = self.quiver.generators();
        if inputs.windows(2).any(|w| gens[w[0]].target != gens[w[1]].source) {
            return Err(AInftyError::NotComposable(describe(&self.quiver)));
        }
        let src = gens[inputs[0]].source;
        let tgt = gens[inputs[k - 1]].target;
        let deg: i64 = inputs.iter().map(|&g| gens[g].degree as i64).sum::<i64>() + k as i64 - 2;
        for (g, _) in outputs {
            let o = &gens[*g];
            if o.source != src || o.target != tgt || o.degree as i64 != deg {
                return Err(AInftyError::Invalid(format!(
                    "output {} does not match m_{k}({})",
                    self.quiver.describe(*g),
                    describe(&self.quiver)
                )));
            }
        }
        let entry = self.ops.entry(inputs.to_vec()).or_default();
        for (g, c) in outputs {
            match entry.iter_mut().find(|(h, _)| h == g) {
                Some((_, v)) => *v += c,
                None => entry.push((*g, c.clone())),
            }
        }
        entry.retain(|(_, c)| !c.is_zero());
        if entry.is_empty() {
            self.ops.remove(inputs);
        }
        Ok(())
    }

    pub fn build(self) -> Result<AInftyCategory, AInftyError> {
        let mut b = self;
        for x in 0..b.quiver.object_count() {
            if !b.units.contains_key(&x) {
                let label = format!("1_{}", b.quiver.objects()[x]);
                b.unit(x, &label)?;
            }
        }
        let n = b.quiver.generators().len();
        let mut is_unit = vec![false; n];
        let units: Vec<GenId> = (0..b.quiver.object_count()).map(|x| b.units[&x]).collect();
        for &u in &units {
            is_unit[u] = true;
        }
        for entry in b.ops.values_mut() {
            entry.sort_by_key(|(g, _)| *g);
        }
        Ok(AInftyCategory {
            name: b.name,
            field: b.field,
            quiver: b.quiver,
            units,
            is_unit,
            max_degree: b.max_degree,
            ops: b.ops,
        })
    }
}

/// Builds a dg-category from a builder holding only `m_1` and `m_2`, rejecting
/// inputs that are not a strictly unital dg-category.
pub fn from_dg(builder: CategoryBuilder) -> Result<AInftyCategory, AInftyError> {
    let a = builder.build()?;
    if !a.is_dg() {
        return Err(AInftyError::Invalid("dg input with m_k for k > 2".into()));
    }
    let report = check_relations(&a, 3);
    if !report.passed() {
        return Err(AInftyError::RelationsFail(report.summary()));
    }
    let units = check_units(&a);
    if !units.passed() {
        return Err(AInftyError::RelationsFail(units.summary()));
    }
    Ok(a)
}
