use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{QuasicatError, Verdict};
use crate::ainfty::AInftyCategory;
use crate::exactlin::{apply_graded_op, LinearSystem, SignConvention, TensorElement};
use crate::necklace::{epsilon_c, injective_index, Necklace};
use crate::nerve::NerveElement;

/// Objects `A_0, …, A_n` and elements `a_I ∈ A_{m-1}(A_{i_0}, A_{i_m})` for strictly
/// increasing `I = (i_0 < … < i_m)`, `m ≥ 1`. Missing entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexCollection {
    pub n: usize,
    pub objects: Vec<usize>,
    pub elements: BTreeMap<Vec<usize>, TensorElement>,
}

/// All strictly increasing sequences in `[n]` of length at least 2, shortest first.
pub fn sequences(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u64..1 << (n + 1))
        .filter(|mask| mask.count_ones() >= 2)
        .map(|mask| (0..=n).filter(|i| mask >> i & 1 == 1).collect())
        .collect();
    out.sort_by(|a: &Vec<usize>, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Nonempty cut sets `0 < k_1 < … < k_{r-1} < m`.
fn cuts(m: usize) -> Vec<Vec<usize>> {
    let inner = m.saturating_sub(1);
    (1u64..1 << inner)
        .map(|mask| (1..m).filter(|k| mask >> (k - 1) & 1 == 1).collect())
        .collect()
}

fn is_strict(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] < w[1])
}

fn apply_m(a: &AInftyCategory, x: &TensorElement, arity: usize, start: usize) -> TensorElement {
    apply_graded_op(
        x,
        0,
        arity,
        arity as i64 - 2,
        start,
        a.quiver(),
        SignConvention::Koszul,
        a.field(),
        |ins, _| a.m(ins),
    )
    .expect("arity fits")
}

impl SimplexCollection {
    pub fn zero(n: usize, objects: Vec<usize>) -> Self {
        SimplexCollection {
            n,
            objects,
            elements: BTreeMap::new(),
        }
    }

    pub fn get(&self, seq: &[usize]) -> TensorElement {
        self.elements.get(seq).cloned().unwrap_or_else(TensorElement::zero)
    }

    pub fn set(&mut self, seq: Vec<usize>, value: TensorElement) {
        if value.is_zero() {
            self.elements.remove(&seq);
        } else {
            self.elements.insert(seq, value);
        }
    }

    /// `Σ_j (-1)^{j-1} a_{I∖i_j} - Σ (-1)^{ε_c(k)} m_r(a_{i_0…i_{k_1}} ⊗ …)`.
    fn rhs(&self, a: &AInftyCategory, seq: &[usize]) -> TensorElement {
        let field = a.field();
        let m = seq.len() - 1;
        let mut acc = TensorElement::zero();
        for j in 1..m {
            let mut face = seq.to_vec();
            face.remove(j);
            acc.add_scaled(&self.get(&face), &field.sign(j as i64 - 1));
        }
        for ks in cuts(m) {
            let mut bounds = vec![0];
            bounds.extend(&ks);
            bounds.push(m);
            let mut x = TensorElement::basis(Vec::new(), field);
            for w in bounds.windows(2) {
                x = x.tensor(&self.get(&seq[w[0]..=w[1]]));
                if x.is_zero() {
                    break;
                }
            }
            if x.is_zero() {
                continue;
            }
            let ts: Vec<i64> = ks.iter().map(|&k| k as i64).collect();
            let value = apply_m(a, &x, bounds.len() - 1, self.objects[seq[0]]);
            acc.add_scaled(&value, &field.sign(epsilon_c(&ts) + 1));
        }
        acc
    }

    fn check_entry_shape(&self, a: &AInftyCategory, seq: &[usize], x: &TensorElement) -> Result<(), QuasicatError> {
        if seq.iter().any(|&i| i > self.n) || seq.len() < 2 {
            return Err(QuasicatError::Shape(format!("index sequence {seq:?}")));
        }
        let deg = seq.len() - 2;
        let (s, t) = (self.objects[seq[0]], self.objects[*seq.last().unwrap()]);
        x.check_shape(a.quiver(), s, t, &[deg])?;
        Ok(())
    }

    pub fn check_shape(&self, a: &AInftyCategory) -> Result<(), QuasicatError> {
        if self.objects.len() != self.n + 1 || self.objects.iter().any(|&o| o >= a.object_count()) {
            return Err(QuasicatError::Shape("object list".into()));
        }
        for (seq, x) in &self.elements {
            self.check_entry_shape(a, seq, x)?;
        }
        Ok(())
    }
}

/// The simplex equations for every strictly increasing sequence, plus the
/// degeneracy conditions on any non-strict entries that were supplied.
pub fn faonte_check(a: &AInftyCategory, s: &SimplexCollection) -> Result<Verdict, QuasicatError> {
    s.check_shape(a)?;
    let mut v = Verdict::new("faonte");
    for (seq, x) in &s.elements {
        if is_strict(seq) {
            continue;
        }
        let expected = if seq.len() == 2 {
            TensorElement::basis(vec![a.unit(s.objects[seq[0]])], a.field())
        } else {
            TensorElement::zero()
        };
        if x != &expected {
            v.push(format!("degenerate entry {seq:?} is not {}", if seq.len() == 2 { "a unit" } else { "zero" }));
        }
    }
    for seq in sequences(s.n) {
        let lhs = apply_m(a, &s.get(&seq), 1, s.objects[seq[0]]);
        if lhs != s.rhs(a, &seq) {
            v.push(format!("equation fails at {seq:?}"));
        }
    }
    Ok(v)
}

/// `y_g = a_{g(bead_1)} ⊗ … ⊗ a_{g(bead_l)}` on `Δ^n`.
pub fn assemble_simplex(a: &AInftyCategory, s: &SimplexCollection) -> Result<NerveElement, QuasicatError> {
    assemble_interval(a, s, 0, s.n)
}

/// The element of `N_{Δ^{j-i}}(A_i, A_j)` read off the vertices `i..=j`.
pub fn assemble_interval(
    a: &AInftyCategory,
    s: &SimplexCollection,
    i: usize,
    j: usize,
) -> Result<NerveElement, QuasicatError> {
    s.check_shape(a)?;
    if i > j || j > s.n {
        return Err(QuasicatError::Shape(format!("interval [{i},{j}] in [{}]", s.n)));
    }
    let t = Necklace::simplex(j - i);
    let idx = injective_index(&t);
    let mut y = NerveElement::zero(&t, s.objects[i], s.objects[j]);
    for (gi, g) in idx.maps.iter().enumerate() {
        let mut x = TensorElement::basis(Vec::new(), a.field());
        for w in g.source().joints().windows(2) {
            let seq: Vec<usize> = g.map()[w[0]..=w[1]].iter().map(|v| v + i).collect();
            x = x.tensor(&s.get(&seq));
        }
        y.comps[gi] = x;
    }
    Ok(y)
}

/// Assembled elements over every interval `[i, j]`, `i < j`.
pub fn assembled_family(
    a: &AInftyCategory,
    s: &SimplexCollection,
) -> Result<Vec<((usize, usize), NerveElement)>, QuasicatError> {
    let mut out = Vec::new();
    for i in 0..s.n {
        for j in i + 1..=s.n {
            out.push(((i, j), assemble_interval(a, s, i, j)?));
        }
    }
    Ok(out)
}

/// Random member: entries solved in increasing length against `∂a_I = rhs(I)`,
/// with a sparse random cycle added; objects are a sorted random tuple.
pub fn random_member<R: Rng>(
    a: &AInftyCategory,
    n: usize,
    rng: &mut R,
    attempts: usize,
) -> Result<SimplexCollection, QuasicatError> {
    let field = a.field();
    let q = a.quiver();
    'attempt: for _ in 0..attempts {
        let mut objects: Vec<usize> = (0..=n).map(|_| rng.gen_range(0..a.object_count())).collect();
        objects.sort_unstable();
        let mut s = SimplexCollection::zero(n, objects.clone());
        for seq in sequences(n) {
            let deg = seq.len() - 2;
            let (src, tgt) = (objects[seq[0]], objects[*seq.last().unwrap()]);
            let cols = q.basis(src, tgt, deg).to_vec();
            let rhs = s.rhs(a, &seq);
            let mut system = LinearSystem::new(field, cols.len());
            let rows: Vec<usize> = if deg == 0 { Vec::new() } else { q.basis(src, tgt, deg - 1).to_vec() };
            for &r in &rows {
                system.push_row(cols.iter().enumerate().filter_map(|(ci, &c)| {
                    a.m(&[c]).into_iter().find(|(g, _)| *g == r).map(|(_, v)| (ci, v))
                }));
            }
            if deg == 0 && !rhs.is_zero() {
                continue 'attempt;
            }
            let target: Vec<_> = rows
                .iter()
                .map(|&r| rhs.coefficient(&[r]).cloned().unwrap_or_else(|| field.zero()))
                .collect();
            if rhs.terms().any(|(k, _)| !rows.contains(&k[0])) {
                continue 'attempt;
            }
            let Some(mut sol) = system.solve(&target) else {
                continue 'attempt;
            };
            for kv in system.kernel_basis() {
                let c = field.from_i64(*[0i64, 0, 0, 1, -1, 2].choose(rng).unwrap());
                for (x, k) in sol.iter_mut().zip(&kv) {
                    *x += &(&c * k);
                }
            }
            let mut value = TensorElement::zero();
            for (&g, c) in cols.iter().zip(&sol) {
                value.add_term(vec![g], c);
            }
            s.set(seq, value);
        }
        return Ok(s);
    }
    Err(QuasicatError::Exhausted(attempts))
}

/// Adds a nonzero multiple of one basis generator to one entry; `None` if every
/// entry space is zero.
pub fn perturb<R: Rng>(a: &AInftyCategory, s: &SimplexCollection, rng: &mut R) -> Option<SimplexCollection> {
    let q = a.quiver();
    let mut slots = Vec::new();
    for seq in sequences(s.n) {
        let (src, tgt) = (s.objects[seq[0]], s.objects[*seq.last().unwrap()]);
        for &g in q.basis(src, tgt, seq.len() - 2) {
            slots.push((seq.clone(), g));
        }
    }
    let (seq, g) = slots.choose(rng)?.clone();
    let c = *[1i64, -1, 2].choose(rng).unwrap();
    let mut out = s.clone();
    let mut value = out.get(&seq);
    value.add_term(vec![g], &a.field().from_i64(c));
    if a.field().from_i64(c).is_zero() {
        value.add_term(vec![g], &a.field().one());
    }
    out.set(seq, value);
    Some(out)
}

/// Quiver maps `β_m` on the simplices of `Δ^n`, keyed by weakly increasing sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaData {
    pub n: usize,
    pub objects: Vec<usize>,
    pub values: BTreeMap<Vec<usize>, TensorElement>,
}

impl BetaData {
    /// `β` of a simplex collection: units on constant edges, zero on other degenerate simplices.
    pub fn from_collection(a: &AInftyCategory, s: &SimplexCollection) -> Self {
        let mut values = s.elements.clone();
        for i in 0..=s.n {
            values.insert(vec![i, i], TensorElement::basis(vec![a.unit(s.objects[i])], a.field()));
        }
        BetaData {
            n: s.n,
            objects: s.objects.clone(),
            values,
        }
    }

    fn get(&self, seq: &[usize]) -> TensorElement {
        self.values.get(seq).cloned().unwrap_or_else(TensorElement::zero)
    }
}

fn weak_sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=n {
            cur.push(v);
            rec(n, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, len, &mut Vec::new(), &mut out);
    out
}

/// Degeneracy conditions and the β-equation on all simplices `f: [m] → [n]`, `1 ≤ m ≤ max_m`.
///
/// The m-term carries the sign of the TAN relation at the identity.
pub fn verify_beta_data(a: &AInftyCategory, b: &BetaData, max_m: usize) -> Result<Verdict, QuasicatError> {
    if b.objects.len() != b.n + 1 {
        return Err(QuasicatError::Shape("object list".into()));
    }
    let field = a.field();
    let mut v = Verdict::new("beta-data");
    for m in 1..=max_m {
        for f in weak_sequences(b.n, m + 1) {
            let (src, tgt) = (b.objects[f[0]], b.objects[f[m]]);
            let value = b.get(&f);
            value.check_shape(a.quiver(), src, tgt, &[m - 1])?;
            if !is_strict(&f) {
                let expected = if m == 1 {
                    TensorElement::basis(vec![a.unit(src)], field)
                } else {
                    TensorElement::zero()
                };
                if value != expected {
                    v.push(format!("degeneracy condition fails at {f:?}"));
                }
            }
            let mut rhs = TensorElement::zero();
            for j in 1..m {
                let mut face = f.clone();
                face.remove(j);
                rhs.add_scaled(&b.get(&face), &field.sign(j as i64 - 1));
            }
            for ks in cuts(m) {
                let mut bounds = vec![0];
                bounds.extend(&ks);
                bounds.push(m);
                let mut x = TensorElement::basis(Vec::new(), field);
                for w in bounds.windows(2) {
                    x = x.tensor(&b.get(&f[w[0]..=w[1]]));
                }
                let ts: Vec<i64> = ks.iter().map(|&k| k as i64).collect();
                rhs.add_scaled(&apply_m(a, &x, bounds.len() - 1, src), &field.sign(epsilon_c(&ts) + 1));
            }
            if apply_m(a, &value, 1, src) != rhs {
                v.push(format!("β-equation fails at {f:?}"));
            }
        }
    }
    Ok(v)
}
