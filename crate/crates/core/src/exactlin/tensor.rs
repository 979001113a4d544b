use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use super::{Field, LinError, Scalar};

pub type GenId = usize;

/// A basis element of a hom space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub source: usize,
    pub target: usize,
    pub degree: usize,
    pub label: String,
}

/// Finite graded quiver with an ordered basis in every `(source, target, degree)` slot.
#[derive(Clone, Debug, Default)]
pub struct GradedQuiver {
    objects: Vec<String>,
    object_index: HashMap<String, usize>,
    gens: Vec<Generator>,
    slots: HashMap<(usize, usize, usize), Vec<GenId>>,
    outgoing: HashMap<(usize, usize), Vec<GenId>>,
    labels: HashMap<(usize, usize, usize, String), GenId>,
}

impl GradedQuiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, name: &str) -> Result<usize, LinError> {
        if self.object_index.contains_key(name) {
            return Err(LinError::DuplicateGenerator(format!("object {name}")));
        }
        let id = self.objects.len();
        self.objects.push(name.to_string());
        self.object_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_generator(
        &mut self,
        source: usize,
        target: usize,
        degree: usize,
        label: &str,
    ) -> Result<GenId, LinError> {
        if source >= self.objects.len() || target >= self.objects.len() {
            return Err(LinError::UnknownObject(format!("{source}->{target}")));
        }
        let key = (source, target, degree, label.to_string());
        if self.labels.contains_key(&key) {
            return Err(LinError::DuplicateGenerator(label.to_string()));
        }
        let id = self.gens.len();
        self.gens.push(Generator {
            source,
            target,
            degree,
            label: label.to_string(),
        });
        self.labels.insert(key, id);
        self.slots.entry((source, target, degree)).or_default().push(id);
        self.outgoing.entry((source, degree)).or_default().push(id);
        Ok(id)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object(&self, name: &str) -> Option<usize> {
        self.object_index.get(name).copied()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, id: GenId) -> &Generator {
        &self.gens[id]
    }

    pub fn degree(&self, id: GenId) -> usize {
        self.gens[id].degree
    }

    pub fn basis(&self, source: usize, target: usize, degree: usize) -> &[GenId] {
        self.slots
            .get(&(source, target, degree))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn lookup(&self, source: usize, target: usize, degree: usize, label: &str) -> Option<GenId> {
        self.labels
            .get(&(source, target, degree, label.to_string()))
            .copied()
    }

    /// All generator tuples of the given degrees composing to a path from `a` to `b`.
    pub fn paths(&self, a: usize, b: usize, degrees: &[usize]) -> Vec<Vec<GenId>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(degrees.len());
        self.paths_rec(a, b, degrees, &mut cur, &mut out);
        out
    }

    fn paths_rec(
        &self,
        at: usize,
        b: usize,
        degrees: &[usize],
        cur: &mut Vec<GenId>,
        out: &mut Vec<Vec<GenId>>,
    ) {
        match degrees.split_first() {
            None => {
                if at == b {
                    out.push(cur.clone());
                }
            }
            Some((&d, rest)) => {
                if let Some(gens) = self.outgoing.get(&(at, d)) {
                    for &g in gens {
                        cur.push(g);
                        self.paths_rec(self.gens[g].target, b, rest, cur, out);
                        cur.pop();
                    }
                }
            }
        }
    }

    /// Object at position `slot` of a path starting at `start`.
    pub fn object_at(&self, start: usize, tuple: &[GenId], slot: usize) -> usize {
        if slot == 0 {
            start
        } else {
            self.gens[tuple[slot - 1]].target
        }
    }

    pub fn describe(&self, id: GenId) -> String {
        let g = &self.gens[id];
        format!(
            "{}:{}->{}@{}",
            g.label, self.objects[g.source], self.objects[g.target], g.degree
        )
    }
}

/// How an operator placed after some tensor factors picks up a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum SignConvention {
    /// Koszul rule with the degree of every factor taken in `A`.
    #[default]
    Koszul,
    /// Only the explicitly printed signs.
    Plain,
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignConvention::Koszul => write!(f, "koszul"),
            SignConvention::Plain => write!(f, "plain"),
        }
    }
}

impl FromStr for SignConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "koszul" => Ok(SignConvention::Koszul),
            "plain" => Ok(SignConvention::Plain),
            other => Err(format!("unknown sign convention {other}")),
        }
    }
}

/// Sparse linear combination of generator tuples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TensorElement {
    terms: BTreeMap<Vec<GenId>, Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: Vec<GenId>, field: Field) -> Self {
        let mut t = Self::zero();
        t.terms.insert(key, field.one());
        t
    }

    pub fn add_term(&mut self, key: Vec<GenId>, coef: &Scalar) {
        if coef.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coef;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coef.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<GenId>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &[GenId]) -> Option<&Scalar> {
        self.terms.get(key)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn add_assign(&mut self, other: &TensorElement) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), &(-v));
        }
        out
    }

    /// Concatenation of tuples; the caller guarantees the objects match up.
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                out.add_term(k, &(v1 * v2));
            }
        }
        out
    }

    /// Checks every tuple against the quiver: factor degrees and a path from `a` to `b`.
    pub fn check_shape(
        &self,
        quiver: &GradedQuiver,
        a: usize,
        b: usize,
        degrees: &[usize],
    ) -> Result<(), LinError> {
        for key in self.terms.keys() {
            if key.len() != degrees.len() {
                return Err(LinError::Mismatch(format!("tuple length {}", key.len())));
            }
            let mut at = a;
            for (&g, &d) in key.iter().zip(degrees) {
                let gen = quiver
                    .gens
                    .get(g)
                    .ok_or_else(|| LinError::Mismatch(format!("generator {g}")))?;
                if gen.source != at || gen.degree != d {
                    return Err(LinError::Mismatch(quiver.describe(g)));
                }
                at = gen.target;
            }
            if at != b {
                return Err(LinError::Mismatch("path endpoint".into()));
            }
        }
        Ok(())
    }
}

/// Applies `op` to factors `slot..slot+arity` of every tuple.
///
/// `op` receives the inputs and the object sitting at the slot, and returns a
/// combination of single generators. Under the Koszul convention the result
/// picks up `(-1)^(op_degree * sum of preceding degrees)`.
#[allow(clippy::too_many_arguments)]
pub fn apply_graded_op<F>(
    x: &TensorElement,
    slot: usize,
    arity: usize,
    op_degree: i64,
    start: usize,
    quiver: &GradedQuiver,
    conv: SignConvention,
    field: Field,
    mut op: F,
) -> Result<TensorElement, LinError>
where
    F: FnMut(&[GenId], usize) -> Vec<(GenId, Scalar)>,
{
    let mut out = TensorElement::zero();
    for (key, coef) in x.terms() {
        if slot + arity > key.len() {
            return Err(LinError::Mismatch(format!(
                "operator of arity {arity} at slot {slot} on {} factors",
                key.len()
            )));
        }
        let sign = match conv {
            SignConvention::Koszul => {
                let pre: i64 = key[..slot].iter().map(|&g| quiver.degree(g) as i64).sum();
                field.sign(op_degree * pre)
            }
            SignConvention::Plain => field.one(),
        };
        let c = coef * &sign;
        let obj = quiver.object_at(start, key, slot);
        for (g, v) in op(&key[slot..slot + arity], obj) {
            let mut k = Vec::with_capacity(key.len() + 1 - arity);
            k.extend_from_slice(&key[..slot]);
            k.push(g);
            k.extend_from_slice(&key[slot + arity..]);
            out.add_term(k, &(&c * &v));
        }
    }
    Ok(out)
}

/// Applies `op_1 ⊗ … ⊗ op_r` where block `i` consumes `blocks[i]` consecutive factors.
///
/// Under the Koszul convention a block operator passing earlier blocks
/// contributes `(-1)^(op_degree(arity) * degree of the passed factors)`.
pub fn apply_blockwise<F, D>(
    x: &TensorElement,
    blocks: &[usize],
    op_degree: D,
    quiver: &GradedQuiver,
    conv: SignConvention,
    field: Field,
    mut op: F,
) -> Result<TensorElement, LinError>
where
    F: FnMut(&[GenId]) -> Vec<(GenId, Scalar)>,
    D: Fn(usize) -> i64,
{
    let total: usize = blocks.iter().sum();
    let mut out = TensorElement::zero();
    for (key, coef) in x.terms() {
        if key.len() != total {
            return Err(LinError::Mismatch(format!(
                "blocks cover {total} factors, tuple has {}",
                key.len()
            )));
        }
        let mut exponent = 0i64;
        if conv == SignConvention::Koszul {
            let mut passed = 0i64;
            let mut pos = 0;
            for &b in blocks {
                exponent += op_degree(b) * passed;
                passed += key[pos..pos + b]
                    .iter()
                    .map(|&g| quiver.degree(g) as i64)
                    .sum::<i64>();
                pos += b;
            }
        }
        let mut partial: Vec<(Vec<GenId>, Scalar)> = vec![(Vec::new(), coef * &field.sign(exponent))];
        let mut pos = 0;
        for &b in blocks {
            let images = op(&key[pos..pos + b]);
            pos += b;
            let mut next = Vec::with_capacity(partial.len() * images.len());
            for (k, c) in &partial {
                for (g, v) in &images {
                    let mut k2 = k.clone();
                    k2.push(*g);
                    next.push((k2, c * v));
                }
            }
            partial = next;
            if partial.is_empty() {
                break;
            }
        }
        for (k, c) in partial {
            out.add_term(k, &c);
        }
    }
    Ok(out)
}
