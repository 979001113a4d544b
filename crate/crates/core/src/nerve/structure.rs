use super::{Nerve, NerveElement, NerveError};
use crate::exactlin::{LinearSystem, Scalar, TensorElement};
use crate::necklace::{injective_index, Necklace, NecklaceMap};

/// `Σ y1 ⊗ y2` over middle objects, as returned by the comultiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitElement {
    pub terms: Vec<(NerveElement, NerveElement)>,
}

impl<'a> Nerve<'a> {
    /// `ē(e)` on one component: identity on identity beads, a unit on collapsed `Δ^1` beads.
    fn collapse(&self, e: &NecklaceMap, x: &TensorElement, start: usize) -> TensorElement {
        if !e.classify().spine_collapsing {
            return TensorElement::zero();
        }
        let a = self.category();
        let factors = e.bead_factors();
        let mut out = TensorElement::zero();
        for (key, c) in x.terms() {
            let mut tuple = Vec::with_capacity(factors.len());
            let mut at = start;
            let mut pos = 0;
            for &(_, m) in &factors {
                if m == 0 {
                    tuple.push(a.unit(at));
                } else {
                    tuple.push(key[pos]);
                    at = a.target(key[pos]);
                    pos += 1;
                }
            }
            out.add_term(tuple, c);
        }
        out
    }

    /// `f^*(y)` for a necklace map `f: T' → T` and `y` on `T`; `y` need not satisfy TAN.
    pub fn structure_map(&self, f: &NecklaceMap, y: &NerveElement) -> Result<NerveElement, NerveError> {
        if f.target() != &y.necklace {
            return Err(NerveError::Shape(format!(
                "map into {} applied to an element on {}",
                f.target(),
                y.necklace
            )));
        }
        let target_idx = injective_index(f.target());
        let idx = injective_index(f.source());
        let mut out = NerveElement::zero(f.source(), y.from, y.to);
        for (gi, g) in idx.maps.iter().enumerate() {
            let fg = f.compose(g)?;
            let (e, m) = fg.factor_epi_mono();
            let hi = target_idx.position(&m).expect("mono part is injective");
            out.comps[gi] = self.collapse(&e, &y.comps[hi], y.from);
        }
        Ok(out)
    }

    /// Like [`Nerve::structure_map`] but rejects inputs outside the nerve.
    pub fn structure_map_checked(&self, f: &NecklaceMap, y: &NerveElement) -> Result<NerveElement, NerveError> {
        let r = self.tan_residuals(y)?;
        if !r.is_empty() {
            return Err(NerveError::NotInNerve(r.len()));
        }
        self.structure_map(f, y)
    }

    /// Inner face `d_j = δ_j^*` on `y ∈ N_{Δ^n}`.
    pub fn face(&self, j: usize, y: &NerveElement) -> Result<NerveElement, NerveError> {
        let n = simplex_dim(y)?;
        self.structure_map(&NecklaceMap::face(n, j)?, y)
    }

    /// Degeneracy `s_i = σ_i^*: N_{Δ^n} → N_{Δ^{n+1}}`.
    pub fn degeneracy(&self, i: usize, y: &NerveElement) -> Result<NerveElement, NerveError> {
        let n = simplex_dim(y)?;
        self.structure_map(&NecklaceMap::degeneracy(n, i)?, y)
    }

    /// `s_i` computed componentwise without factorizing maps.
    pub fn degeneracy_explicit(&self, i: usize, y: &NerveElement) -> Result<NerveElement, NerveError> {
        let n = simplex_dim(y)?;
        if i > n {
            return Err(NerveError::Shape(format!("s_{i} on Δ^{n}")));
        }
        let a = self.category();
        let small = injective_index(&y.necklace);
        let big_t = Necklace::simplex(n + 1);
        let big = injective_index(&big_t);
        let sigma = |v: usize| if v <= i { v } else { v - 1 };
        let mut out = NerveElement::zero(&big_t, y.from, y.to);
        for (gi, g) in big.maps.iter().enumerate() {
            let u = g.source();
            let img = g.map();
            let pi = img.iter().position(|&v| v == i);
            let pj = img.iter().position(|&v| v == i + 1);
            match (pi, pj) {
                (Some(p), Some(_)) => {
                    if !(u.is_joint(p) && u.is_joint(p + 1)) {
                        continue;
                    }
                    let slot = u.joints().iter().position(|&v| v == p).unwrap();
                    let joints: Vec<usize> = u
                        .joints()
                        .iter()
                        .filter(|&&v| v != p + 1)
                        .map(|&v| if v > p + 1 { v - 1 } else { v })
                        .collect();
                    let src = Necklace::new(u.spine() - 1, joints)?;
                    let map: Vec<usize> = img
                        .iter()
                        .enumerate()
                        .filter(|&(pos, _)| pos != p + 1)
                        .map(|(_, &v)| sigma(v))
                        .collect();
                    let h = NecklaceMap::new(src, y.necklace.clone(), map)?;
                    let x = &y.comps[small.position(&h).expect("injective")];
                    let comp = &mut out.comps[gi];
                    for (key, c) in x.terms() {
                        let obj = a.quiver().object_at(y.from, key, slot);
                        let mut k2 = key.clone();
                        k2.insert(slot, a.unit(obj));
                        comp.add_term(k2, c);
                    }
                }
                _ => {
                    let map = img.iter().map(|&v| sigma(v)).collect();
                    let h = NecklaceMap::new(u.clone(), y.necklace.clone(), map)?;
                    out.comps[gi] = y.comps[small.position(&h).expect("injective")].clone();
                }
            }
        }
        Ok(out)
    }

    /// `z_g = y1_{g_1} ⊗ y2_{g_2}` on `T_1 ∨ T_2`.
    pub fn tensor_elements(&self, y1: &NerveElement, y2: &NerveElement) -> Result<NerveElement, NerveError> {
        if y1.to != y2.from {
            return Err(NerveError::Shape("middle objects differ".into()));
        }
        let t = y1.necklace.wedge(&y2.necklace);
        let p1 = y1.necklace.spine();
        let (i1, i2) = (injective_index(&y1.necklace), injective_index(&y2.necklace));
        let idx = injective_index(&t);
        let mut out = NerveElement::zero(&t, y1.from, y2.to);
        for (gi, g) in idx.maps.iter().enumerate() {
            let (g1, g2) = g.split_injective(p1)?;
            let a = &y1.comps[i1.position(&g1).expect("injective")];
            let b = &y2.comps[i2.position(&g2).expect("injective")];
            out.comps[gi] = a.tensor(b);
        }
        Ok(out)
    }

    /// Writes `w ∈ N_{T_1 ∨ T_2}(a,b)` as `Σ_c Σ y1 ⊗ y2` with `T_1` of spine `p1`.
    pub fn split(&self, w: &NerveElement, p1: usize) -> Result<SplitElement, NerveError> {
        let (t1, t2) = w.necklace.split_at(p1)?;
        let field = self.field();
        let space = self.space(&w.necklace, w.from, w.to);
        let target = space
            .coordinates(w, field)
            .ok_or_else(|| NerveError::Shape("element has terms off the ambient basis".into()))?;
        let mut candidates: Vec<(usize, usize, NerveElement)> = Vec::new();
        let mut columns: Vec<Vec<Scalar>> = Vec::new();
        let mut firsts: Vec<Vec<NerveElement>> = Vec::new();
        for c in 0..self.category().object_count() {
            let b1 = self.basis(&t1, w.from, c);
            let b2 = self.basis(&t2, c, w.to);
            for (i, y1) in b1.iter().enumerate() {
                for y2 in &b2 {
                    let z = self.tensor_elements(y1, y2)?;
                    columns.push(space.coordinates(&z, field).expect("products are ambient"));
                    candidates.push((c, i, y2.clone()));
                }
            }
            firsts.push(b1);
        }
        let mut system = LinearSystem::new(field, columns.len());
        for r in 0..space.ambient_dim() {
            system.push_row(
                columns
                    .iter()
                    .enumerate()
                    .filter(|(_, col)| !col[r].is_zero())
                    .map(|(j, col)| (j, col[r].clone())),
            );
        }
        let lambda = system
            .solve(&target)
            .ok_or(NerveError::NotInNerve(1))?;
        let mut terms: Vec<(NerveElement, NerveElement)> = Vec::new();
        for ((c, i, y2), l) in candidates.iter().zip(&lambda) {
            if l.is_zero() {
                continue;
            }
            let y1 = &firsts[*c][*i];
            match terms.iter_mut().find(|(x, _)| x == y1) {
                Some((_, acc)) => acc.add_scaled(y2, l),
                None => terms.push((y1.clone(), y2.scaled(l))),
            }
        }
        terms.retain(|(_, y2)| !y2.is_zero());
        Ok(SplitElement { terms })
    }

    /// `μ_{p,q}(y) = split(ν_{p,q}^* y)`.
    pub fn comult(&self, p: usize, q: usize, y: &NerveElement) -> Result<SplitElement, NerveError> {
        let w = self.structure_map(&NecklaceMap::nu(p, q)?, y)?;
        self.split(&w, p)
    }

    /// `Σ y1 ⊗ y2` back on the wedge.
    pub fn recombine(&self, s: &SplitElement, t: &Necklace, a: usize, b: usize) -> Result<NerveElement, NerveError> {
        let mut out = NerveElement::zero(t, a, b);
        for (y1, y2) in &s.terms {
            out.add_scaled(&self.tensor_elements(y1, y2)?, &self.field().one());
        }
        Ok(out)
    }
}

fn simplex_dim(y: &NerveElement) -> Result<usize, NerveError> {
    if y.necklace.bead_count() > 1 {
        return Err(NerveError::Shape(format!("{} is not a simplex", y.necklace)));
    }
    Ok(y.necklace.spine())
}
