use std::collections::HashMap;

use super::{bead_degrees, Nerve, NerveElement, NerveSpace};
use crate::exactlin::{apply_graded_op, GenId, LinearSystem, Scalar, TensorElement};
use crate::necklace::{enumerate_inert_into, injective_index, Necklace, NecklaceMap};

/// A nonzero left-hand side of the TAN equation at `(g, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub map: NecklaceMap,
    pub bead: usize,
    pub value: TensorElement,
}

#[derive(Clone, Copy, Debug)]
enum Kind {
    /// `m_arity` at factor `slot`.
    Op { slot: usize, arity: usize },
    Id,
}

#[derive(Clone, Debug)]
struct Term {
    source: usize,
    sign: i64,
    kind: Kind,
}

/// Terms of the equation at `(g, k)`: `Σ_ν (-1)^{ε(S)+ℓ(S)dim(U^{<k})} m_{ℓ(S)}(y_{g∘_kν})
/// - Σ_j (-1)^{j-1} y_{g∘_kδ_j}`.
fn terms(t: &Necklace, gi: usize, k: usize) -> Vec<Term> {
    let idx = injective_index(t);
    let g = &idx.maps[gi];
    let u = g.source();
    let (s, e) = u.bead_interval(k);
    let n = e - s;
    let dim_before = u.before(k).dim() as i64;
    let pos = |h: NecklaceMap| idx.position(&h).expect("composite is injective into T");
    let mut out = Vec::new();
    for nu in enumerate_inert_into(n) {
        let l = nu.source().bead_count();
        let h = g.compose_at(k, &nu).expect("bead fits");
        out.push(Term {
            source: pos(h),
            sign: nu.source().epsilon() + l as i64 * dim_before,
            kind: Kind::Op { slot: k - 1, arity: l },
        });
    }
    for j in 1..n {
        let h = g
            .compose_at(k, &NecklaceMap::face(n, j).expect("inner face"))
            .expect("bead fits");
        out.push(Term {
            source: pos(h),
            sign: j as i64,
            kind: Kind::Id,
        });
    }
    out
}

/// Equations `(g index, bead)` with `n_k ≥ 2`.
fn equations(t: &Necklace) -> Vec<(usize, usize)> {
    let idx = injective_index(t);
    let mut out = Vec::new();
    for (gi, g) in idx.maps.iter().enumerate() {
        for (k, n) in g.source().beads().iter().enumerate() {
            if *n >= 2 {
                out.push((gi, k + 1));
            }
        }
    }
    out
}

fn term_image(nerve: &Nerve, term: &Term, x: &TensorElement, start: usize) -> TensorElement {
    let a = nerve.category();
    let field = nerve.field();
    let value = match term.kind {
        Kind::Id => x.clone(),
        Kind::Op { slot, arity } => apply_graded_op(
            x,
            slot,
            arity,
            arity as i64 - 2,
            start,
            a.quiver(),
            nerve.convention(),
            field,
            |ins, _| a.m(ins),
        )
        .expect("operator fits the bead"),
    };
    value.scaled(&field.sign(term.sign))
}

pub(super) fn residuals(nerve: &Nerve, y: &NerveElement) -> Vec<Residual> {
    let t = &y.necklace;
    let idx = injective_index(t);
    let mut out = Vec::new();
    for (gi, k) in equations(t) {
        let mut acc = TensorElement::zero();
        for term in terms(t, gi, k) {
            acc.add_assign(&term_image(nerve, &term, &y.comps[term.source], y.from));
        }
        if !acc.is_zero() {
            out.push(Residual {
                map: idx.maps[gi].clone(),
                bead: k,
                value: acc,
            });
        }
    }
    out
}

fn follows_labels(nerve: &Nerve, g: &NecklaceMap, tuple: &[GenId], vertices: &[usize]) -> bool {
    let q = nerve.category().quiver();
    let joints = g.source().joints();
    tuple.iter().enumerate().all(|(i, &x)| {
        let gen = q.generator(x);
        gen.source == vertices[g.apply(joints[i])] && gen.target == vertices[g.apply(joints[i + 1])]
    })
}

pub(super) fn build_space(
    nerve: &Nerve,
    t: &Necklace,
    a: usize,
    b: usize,
    vertices: Option<Vec<usize>>,
) -> NerveSpace {
    let field = nerve.field();
    let q = nerve.category().quiver();
    let idx = injective_index(t);
    let mut columns = Vec::new();
    let mut by_comp: Vec<Vec<usize>> = Vec::with_capacity(idx.len());
    for (gi, g) in idx.maps.iter().enumerate() {
        let mut cols = Vec::new();
        for tuple in q.paths(a, b, &bead_degrees(g.source())) {
            if let Some(v) = &vertices {
                if !follows_labels(nerve, g, &tuple, v) {
                    continue;
                }
            }
            cols.push(columns.len());
            columns.push((gi, tuple));
        }
        by_comp.push(cols);
    }
    let column_index: HashMap<(usize, Vec<GenId>), usize> =
        columns.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

    let mut system = LinearSystem::new(field, columns.len());
    for (gi, k) in equations(t) {
        let mut rows: HashMap<Vec<GenId>, usize> = HashMap::new();
        for term in terms(t, gi, k) {
            for &col in &by_comp[term.source] {
                let x = TensorElement::basis(columns[col].1.clone(), field);
                for (key, c) in term_image(nerve, &term, &x, a).terms() {
                    let row = *rows
                        .entry(key.clone())
                        .or_insert_with(|| system.push_empty_row());
                    system.add_to_row(row, col, c);
                }
            }
        }
    }

    let mut space = NerveSpace {
        necklace: t.clone(),
        from: a,
        to: b,
        vertices,
        columns,
        column_index,
        system,
        basis: Vec::new(),
    };
    let kernel: Vec<Vec<Scalar>> = space.system.kernel_basis();
    space.basis = kernel.iter().map(|v| space.element(v)).collect();
    space
}
