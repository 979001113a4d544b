//! Membership in the dg nerve, for categories with `m_k = 0` when `k ≥ 3`:
//! `∂a_I = Σ_j (-1)^{j-1} a_{I∖i_j} - Σ_j (-1)^{j-1} m_2(a_{i_0..i_j} ⊗ a_{i_j..i_k})`.

use tan_core::ainfty::AInftyCategory;
use tan_core::exactlin::{Scalar, TensorElement};
use tan_core::quasicat::SimplexCollection;

fn linear(a: &AInftyCategory, x: &TensorElement, op: impl Fn(&[usize]) -> Vec<(usize, Scalar)>) -> TensorElement {
    let mut out = TensorElement::zero();
    for (k, c) in x.terms() {
        for (g, v) in op(k) {
            out.add_term(vec![g], &(c * &v));
        }
    }
    let _ = a;
    out
}

fn product(a: &AInftyCategory, x: &TensorElement, y: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (k1, c1) in x.terms() {
        for (k2, c2) in y.terms() {
            let c = c1 * c2;
            for (g, v) in a.m(&[k1[0], k2[0]]) {
                out.add_term(vec![g], &(&c * &v));
            }
        }
    }
    out
}

fn strict_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << (n + 1))
        .filter(|m| m.count_ones() >= 2)
        .map(|m| (0..=n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// Sequences where the dg equation fails.
pub fn dg_violations(a: &AInftyCategory, s: &SimplexCollection) -> Vec<Vec<usize>> {
    assert!(a.table().iter().all(|(ins, _)| ins.len() <= 2), "not a dg category");
    let field = a.field();
    let get = |seq: &[usize]| s.elements.get(seq).cloned().unwrap_or_else(TensorElement::zero);
    let mut bad = Vec::new();
    for seq in strict_subsets(s.n) {
        let k = seq.len() - 1;
        let lhs = linear(a, &get(&seq), |g| a.m(g));
        let mut rhs = TensorElement::zero();
        for j in 1..k {
            let sign = field.from_i64(if j % 2 == 1 { 1 } else { -1 });
            let mut face = seq.clone();
            face.remove(j);
            rhs.add_scaled(&get(&face), &sign);
            let m2 = product(a, &get(&seq[..=j]), &get(&seq[j..]));
            rhs.add_scaled(&m2, &(-&sign));
        }
        if !lhs.sub(&rhs).is_zero() {
            bad.push(seq);
        }
    }
    bad
}
