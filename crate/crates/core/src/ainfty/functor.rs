use std::sync::Arc;

use super::check::compose_sum;
use super::{AInftyCategory, AInftyError, Table};
use crate::exactlin::{GenId, Scalar, TensorElement};

/// A∞-functor with sparse component tables on non-unit inputs.
#[derive(Clone, Debug)]
pub struct AInftyFunctor {
    name: String,
    source: Arc<AInftyCategory>,
    target: Arc<AInftyCategory>,
    object_map: Vec<usize>,
    comps: Table,
}

impl AInftyFunctor {
    pub fn new(
        name: &str,
        source: Arc<AInftyCategory>,
        target: Arc<AInftyCategory>,
        object_map: Vec<usize>,
    ) -> Result<Self, AInftyError> {
        if object_map.len() != source.object_count()
            || object_map.iter().any(|&y| y >= target.object_count())
        {
            return Err(AInftyError::Invalid("object map does not fit".into()));
        }
        if source.field() != target.field() {
            return Err(AInftyError::Invalid("source and target fields differ".into()));
        }
        Ok(AInftyFunctor {
            name: name.to_string(),
            source,
            target,
            object_map,
            comps: Table::new(),
        })
    }

    /// The identity functor, with `f_1 = id` stored on every non-unit generator.
    pub fn identity(a: Arc<AInftyCategory>) -> Self {
        let mut f = AInftyFunctor::new(
            &format!("id_{}", a.name()),
            a.clone(),
            a.clone(),
            (0..a.object_count()).collect(),
        )
        .expect("identity fits");
        for g in 0..a.quiver().generators().len() {
            if !a.is_unit(g) {
                f.comps.insert(vec![g], vec![(g, a.field().one())]);
            }
        }
        f
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rename(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn source(&self) -> &AInftyCategory {
        &self.source
    }

    pub fn target(&self) -> &AInftyCategory {
        &self.target
    }

    pub fn source_arc(&self) -> Arc<AInftyCategory> {
        self.source.clone()
    }

    pub fn target_arc(&self) -> Arc<AInftyCategory> {
        self.target.clone()
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn map_object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    /// Stored components, sorted for deterministic output.
    pub fn table(&self) -> Vec<(&Vec<GenId>, &Vec<(GenId, Scalar)>)> {
        let mut v: Vec<_> = self.comps.iter().collect();
        v.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        v
    }

    /// Adds `outputs` to `f_k(inputs)`.
    pub fn set_component(&mut self, inputs: &[GenId], outputs: &[(GenId, Scalar)]) -> Result<(), AInftyError> {
        let a = &self.source;
        let b = &self.target;
        let k = inputs.len();
        if k == 0 {
            return Err(AInftyError::Invalid("component without inputs".into()));
        }
        let describe = || {
            inputs
                .iter()
                .map(|&g| a.quiver().describe(g))
                .collect::<Vec<_>>()
                .join(" ⊗ ")
        };
        if inputs.iter().any(|&g| a.is_unit(g)) {
            return Err(AInftyError::UnitInput(describe()));
        }
        if inputs.windows(2).any(|w| a.target(w[0]) != a.source(w[1])) {
            return Err(AInftyError::NotComposable(describe()));
        }
        let src = self.object_map[a.source(inputs[0])];
        let tgt = self.object_map[a.target(inputs[k - 1])];
        let deg = inputs.iter().map(|&g| a.degree(g)).sum::<usize>() + k - 1;
        for (g, _) in outputs {
            if b.source(*g) != src || b.target(*g) != tgt || b.degree(*g) != deg {
                return Err(AInftyError::Invalid(format!(
                    "output {} does not match f_{k}({})",
                    b.quiver().describe(*g),
                    describe()
                )));
            }
        }
        let entry = self.comps.entry(inputs.to_vec()).or_default();
        for (g, c) in outputs {
            match entry.iter_mut().find(|(h, _)| h == g) {
                Some((_, v)) => *v += c,
                None => entry.push((*g, c.clone())),
            }
        }
        entry.retain(|(_, c)| !c.is_zero());
        entry.sort_by_key(|(g, _)| *g);
        if entry.is_empty() {
            self.comps.remove(inputs);
        }
        Ok(())
    }

    /// `f_k` on a basis tuple, with the unit conditions applied.
    pub fn apply(&self, inputs: &[GenId]) -> Vec<(GenId, Scalar)> {
        if inputs.iter().any(|&g| self.source.is_unit(g)) {
            if inputs.len() == 1 {
                let x = self.source.source(inputs[0]);
                return vec![(self.target.unit(self.object_map[x]), self.target.field().one())];
            }
            return Vec::new();
        }
        self.comps.get(inputs).cloned().unwrap_or_default()
    }

    /// Largest arity that can be nonzero for degree reasons.
    pub fn max_arity(&self) -> usize {
        self.target.max_degree() + 1
    }
}

/// `(g ∘ f)_k = Σ (-1)^{ε_g(i)} g_r(f_{i_1} ⊗ … ⊗ f_{i_r})`.
pub fn compose_functors(g: &AInftyFunctor, f: &AInftyFunctor) -> Result<AInftyFunctor, AInftyError> {
    if f.target().object_count() != g.source().object_count()
        || f.target().quiver().generators() != g.source().quiver().generators()
    {
        return Err(AInftyError::Invalid("functors are not composable".into()));
    }
    let a = f.source_arc();
    let object_map = f.object_map.iter().map(|&x| g.map_object(x)).collect();
    let mut h = AInftyFunctor::new(
        &format!("{}∘{}", g.name(), f.name()),
        a.clone(),
        g.target_arc(),
        object_map,
    )?;
    let field = a.field();
    for k in 1..=g.target().max_degree() + 1 {
        for tuple in a.composable_tuples(k) {
            if tuple.iter().any(|&t| a.is_unit(t)) {
                continue;
            }
            let x = TensorElement::basis(tuple.clone(), field);
            let value = compose_sum(
                f,
                f.target(),
                &x,
                a.source(tuple[0]),
                k,
                |ins| g.apply(ins),
                |r| r as i64 - 1,
            );
            let outputs: Vec<(GenId, Scalar)> = value
                .terms()
                .map(|(key, c)| (key[0], c.clone()))
                .collect();
            if !outputs.is_empty() {
                h.set_component(&tuple, &outputs)?;
            }
        }
    }
    Ok(h)
}
