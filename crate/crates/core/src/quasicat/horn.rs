use std::collections::BTreeMap;

use super::{QuasicatError, Verdict};
use crate::exactlin::{apply_graded_op, TensorElement};
use crate::necklace::{enumerate_inert_into, injective_index, Necklace, NecklaceMap};
use crate::nerve::{Nerve, NerveElement};

/// An inner horn `Λ^n_j`: faces `y_i` (`0 < i < n`, `i ≠ j`) and decompositions `x_k` (`0 < k < n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornData {
    pub n: usize,
    pub j: usize,
    pub from: usize,
    pub to: usize,
    pub faces: BTreeMap<usize, NerveElement>,
    pub decomps: BTreeMap<usize, NerveElement>,
}

impl HornData {
    /// The horn of an `n`-simplex `z`.
    pub fn restrict(nerve: &Nerve, z: &NerveElement, j: usize) -> Result<Self, QuasicatError> {
        let n = z.necklace.spine();
        if z.necklace != Necklace::simplex(n) || n < 2 || j == 0 || j >= n {
            return Err(QuasicatError::Shape(format!("Λ^{n}_{j} of {}", z.necklace)));
        }
        let mut faces = BTreeMap::new();
        for i in (1..n).filter(|&i| i != j) {
            faces.insert(i, nerve.face(i, z)?);
        }
        let mut decomps = BTreeMap::new();
        for k in 1..n {
            decomps.insert(k, nerve.structure_map(&NecklaceMap::nu(k, n - k)?, z)?);
        }
        Ok(HornData {
            n,
            j,
            from: z.from,
            to: z.to,
            faces,
            decomps,
        })
    }

    fn face(&self, i: usize) -> &NerveElement {
        &self.faces[&i]
    }

    fn decomp(&self, k: usize) -> &NerveElement {
        &self.decomps[&k]
    }

    fn check_shape(&self) -> Result<(), QuasicatError> {
        let n = self.n;
        if n < 2 || self.j == 0 || self.j >= n {
            return Err(QuasicatError::Shape(format!("Λ^{n}_{}", self.j)));
        }
        let want_faces: Vec<usize> = (1..n).filter(|&i| i != self.j).collect();
        if self.faces.keys().copied().collect::<Vec<_>>() != want_faces {
            return Err(QuasicatError::Shape("face indices".into()));
        }
        if self.decomps.keys().copied().collect::<Vec<_>>() != (1..n).collect::<Vec<_>>() {
            return Err(QuasicatError::Shape("decomposition indices".into()));
        }
        for (i, y) in &self.faces {
            if y.necklace != Necklace::simplex(n - 1) || (y.from, y.to) != (self.from, self.to) {
                return Err(QuasicatError::Shape(format!("face y_{i}")));
            }
        }
        for (k, x) in &self.decomps {
            let t = Necklace::simplex(*k).wedge(&Necklace::simplex(n - k));
            if x.necklace != t || (x.from, x.to) != (self.from, self.to) {
                return Err(QuasicatError::Shape(format!("decomposition x_{k}")));
            }
        }
        Ok(())
    }
}

fn wedge_face(left: usize, right: usize, i: usize, on_left: bool) -> Result<NecklaceMap, QuasicatError> {
    Ok(if on_left {
        NecklaceMap::face(left, i)?.wedge(&NecklaceMap::identity(&Necklace::simplex(right)))
    } else {
        NecklaceMap::identity(&Necklace::simplex(left)).wedge(&NecklaceMap::face(right, i)?)
    })
}

/// Membership of every piece plus the three compatibility families.
pub fn horn_compatible(nerve: &Nerve, h: &HornData) -> Result<Verdict, QuasicatError> {
    h.check_shape()?;
    let mut v = Verdict::new("horn-compatibility");
    let n = h.n;
    for (i, y) in &h.faces {
        if !nerve.satisfies_tan(y) {
            v.push(format!("y_{i} violates TAN"));
        }
    }
    for (k, x) in &h.decomps {
        if !nerve.satisfies_tan(x) {
            v.push(format!("x_{k} violates TAN"));
        }
    }
    for (&i, yi) in &h.faces {
        for (&i2, yi2) in h.faces.range(i + 1..) {
            if nerve.face(i2 - 1, yi)? != nerve.face(i, yi2)? {
                v.push(format!("d_{} y_{i} != d_{i} y_{i2}", i2 - 1));
            }
        }
    }
    for k in 1..n {
        for l in k + 1..n {
            let left = NecklaceMap::identity(&Necklace::simplex(k)).wedge(&NecklaceMap::nu(l - k, n - l)?);
            let right = NecklaceMap::nu(k, l - k)?.wedge(&NecklaceMap::identity(&Necklace::simplex(n - l)));
            if nerve.structure_map(&left, h.decomp(k))? != nerve.structure_map(&right, h.decomp(l))? {
                v.push(format!("x_{k} and x_{l} disagree on Δ^{k}∨Δ^{}∨Δ^{}", l - k, n - l));
            }
        }
    }
    for (&i, yi) in &h.faces {
        for k in 1..n - 1 {
            let lhs = nerve.structure_map(&NecklaceMap::nu(k, n - 1 - k)?, yi)?;
            let rhs = if i <= k {
                nerve.structure_map(&wedge_face(k + 1, n - k - 1, i, true)?, h.decomp(k + 1))?
            } else {
                nerve.structure_map(&wedge_face(k, n - k, i - k, false)?, h.decomp(k))?
            };
            if lhs != rhs {
                v.push(format!("ν_{{{k},{}}}^* y_{i} disagrees with the decompositions", n - 1 - k));
            }
        }
    }
    Ok(v)
}

/// The explicit filler: `z_id = 0`, components through `δ_i` or `ν_{k,n-k}` read off
/// the horn, and `z_{δ_j}` from the TAN relation at the identity.
pub fn horn_fill(nerve: &Nerve, h: &HornData) -> Result<NerveElement, QuasicatError> {
    let verdict = horn_compatible(nerve, h)?;
    if !verdict.passed() {
        return Err(QuasicatError::Incompatible(verdict.violations.len()));
    }
    let (n, j) = (h.n, h.j);
    let t = Necklace::simplex(n);
    let idx = injective_index(&t);
    let face_idx = injective_index(&Necklace::simplex(n - 1));
    let mut z = NerveElement::zero(&t, h.from, h.to);
    let mut pending = None;
    for (gi, g) in idx.maps.iter().enumerate() {
        let u = g.source();
        let img = g.map();
        if let Some(i) = (1..n).find(|&i| i != j && !img.contains(&i)) {
            let map = img.iter().map(|&v| if v < i { v } else { v - 1 }).collect();
            let g2 = NecklaceMap::new(u.clone(), Necklace::simplex(n - 1), map)?;
            z.comps[gi] = h.face(i).comps[face_idx.position(&g2).expect("injective")].clone();
        } else if let Some(k) = u.joints().iter().map(|&v| img[v]).find(|&v| v > 0 && v < n) {
            let target = Necklace::simplex(k).wedge(&Necklace::simplex(n - k));
            let g2 = NecklaceMap::new(u.clone(), target.clone(), img.to_vec())?;
            let x = h.decomp(k);
            z.comps[gi] = x.comps[injective_index(&target).position(&g2).expect("injective")].clone();
        } else if u.spine() == n {
            z.comps[gi] = TensorElement::zero();
        } else {
            pending = Some(gi);
        }
    }
    let dj = pending.expect("δ_j is injective into Δ^n");
    let a = nerve.category();
    let field = nerve.field();
    let mut acc = TensorElement::zero();
    for i in (1..n).filter(|&i| i != j) {
        let gi = idx.position(&NecklaceMap::face(n, i)?).expect("face");
        acc.add_scaled(&z.comps[gi], &field.sign((i + j - 1) as i64));
    }
    for nu in enumerate_inert_into(n) {
        let l = nu.source().bead_count();
        if l < 2 {
            continue;
        }
        let gi = idx.position(&nu).expect("inert map is injective");
        let m = apply_graded_op(
            &z.comps[gi],
            0,
            l,
            l as i64 - 2,
            h.from,
            a.quiver(),
            nerve.convention(),
            field,
            |ins, _| a.m(ins),
        )?;
        acc.add_scaled(&m, &field.sign(nu.source().epsilon() + j as i64 - 1));
    }
    z.comps[dj] = acc;
    Ok(z)
}

/// Checks `d_i z = y_i`, `ν_{k,n-k}^* z = x_k` and the TAN relations for a filler.
pub fn verify_filler(nerve: &Nerve, h: &HornData, z: &NerveElement) -> Result<Verdict, QuasicatError> {
    let mut v = Verdict::new("horn-filler");
    for (i, y) in &h.faces {
        if &nerve.face(*i, z)? != y {
            v.push(format!("d_{i} z != y_{i}"));
        }
    }
    for (k, x) in &h.decomps {
        if &nerve.structure_map(&NecklaceMap::nu(*k, h.n - k)?, z)? != x {
            v.push(format!("μ_{{{k},{}}} z != x_{k}", h.n - k));
        }
    }
    for r in nerve.tan_residuals(z)? {
        v.push(format!("TAN residual at {:?}, bead {}", r.map, r.bead));
    }
    Ok(v)
}
