//! Brute-force nerve kernels over F_p: enumerates injective maps, sets up the
//! equations and counts or eliminates on its own.

use std::collections::{BTreeMap, HashMap};

use tan_core::ainfty::AInftyCategory;
use tan_core::exactlin::Scalar;
use tan_core::necklace::{injective_index, Necklace};
use tan_core::nerve::NerveElement;

pub const BIG: u64 = 1_000_003;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn to_mod(s: &Scalar, p: u64) -> u64 {
    let text = s.to_string();
    let (num, den) = text.split_once('/').unwrap_or((&text, "1"));
    let n: i64 = num.parse().unwrap();
    let d: u64 = den.parse().unwrap();
    (n.rem_euclid(p as i64) as u64) * pow_mod(d, p - 2, p) % p
}

fn signed(x: u64, negative: bool, p: u64) -> u64 {
    if negative && x != 0 {
        p - x
    } else {
        x
    }
}

/// An injective map into `T`: image vertices and joint vertices (both sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Inj {
    verts: Vec<usize>,
    joints: Vec<usize>,
}

impl Inj {
    fn beads(&self) -> Vec<usize> {
        let pos = |v: usize| self.verts.iter().position(|&x| x == v).unwrap();
        self.joints.windows(2).map(|w| pos(w[1]) - pos(w[0])).collect()
    }
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0..1u32 << items.len())
        .map(|mask| (0..items.len()).filter(|i| mask >> i & 1 == 1).map(|i| items[i]).collect())
        .collect()
}

fn injections(p: usize, t_joints: &[usize]) -> Vec<Inj> {
    let free: Vec<usize> = (0..=p).filter(|v| !t_joints.contains(v)).collect();
    let mut out = Vec::new();
    for extra in subsets(&free) {
        let mut verts: Vec<usize> = t_joints.iter().copied().chain(extra.iter().copied()).collect();
        verts.sort();
        for more in subsets(&extra) {
            let mut joints: Vec<usize> = t_joints.iter().copied().chain(more).collect();
            joints.sort();
            out.push(Inj { verts: verts.clone(), joints });
        }
    }
    out.sort();
    out
}

/// `Σ_{l<r} (r-l)(i_l - 1)`.
fn eps_g(beads: &[usize]) -> i64 {
    let r = beads.len() as i64;
    beads
        .iter()
        .enumerate()
        .map(|(l, &i)| (r - 1 - l as i64) * (i as i64 - 1))
        .sum()
}

type Coord = (usize, Vec<usize>, Vec<usize>);

pub struct Oracle<'a> {
    a: &'a AInftyCategory,
    p: u64,
    injs: Vec<Inj>,
    pub coords: Vec<Coord>,
    rows: Vec<BTreeMap<usize, u64>>,
}

impl<'a> Oracle<'a> {
    pub fn new(a: &'a AInftyCategory, spine: usize, t_joints: &[usize], from: usize, to: usize, labels: Option<&[usize]>, p: u64) -> Self {
        let injs = injections(spine, t_joints);
        let gens = a.quiver().generators();
        let mut coords = Vec::new();
        for (gi, g) in injs.iter().enumerate() {
            let beads = g.beads();
            let mut partial: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![from], vec![])];
            for (k, &n) in beads.iter().enumerate() {
                let mut next = Vec::new();
                for (objs, word) in &partial {
                    let at = *objs.last().unwrap();
                    for (id, gen) in gens.iter().enumerate() {
                        if gen.source != at || gen.degree != n - 1 {
                            continue;
                        }
                        if let Some(l) = labels {
                            if gen.target != l[g.joints[k + 1]] {
                                continue;
                            }
                        }
                        let mut o = objs.clone();
                        o.push(gen.target);
                        let mut w = word.clone();
                        w.push(id);
                        next.push((o, w));
                    }
                }
                partial = next;
            }
            for (objs, word) in partial {
                if *objs.last().unwrap() == to && labels.map_or(true, |l| l[0] == from) {
                    coords.push((gi, objs, word));
                }
            }
        }
        let mut o = Oracle { a, p, injs, coords, rows: Vec::new() };
        o.build_rows();
        o
    }

    fn coord_index(&self) -> HashMap<Coord, usize> {
        self.coords.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect()
    }

    fn build_rows(&mut self) {
        let p = self.p;
        let inj_index: HashMap<Inj, usize> = self.injs.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let mut rows: BTreeMap<(usize, usize, Vec<usize>, Vec<usize>), BTreeMap<usize, u64>> = BTreeMap::new();
        let mut add = |key, col: usize, v: u64| {
            if v != 0 {
                let e = rows.entry(key).or_default().entry(col).or_insert(0);
                *e = (*e + v) % p;
            }
        };
        for (gi, g) in self.injs.iter().enumerate() {
            let beads = g.beads();
            for (k0, &nk) in beads.iter().enumerate() {
                if nk < 2 {
                    continue;
                }
                let start = g.verts.iter().position(|&x| x == g.joints[k0]).unwrap();
                let interior: Vec<usize> = g.verts[start + 1..start + nk].to_vec();
                let dim_before: usize = beads[..k0].iter().map(|n| n - 1).sum();
                for chosen in subsets(&interior) {
                    let mut joints = g.joints.clone();
                    joints.extend(&chosen);
                    joints.sort();
                    let h = Inj { verts: g.verts.clone(), joints };
                    let hi = inj_index[&h];
                    let l = chosen.len() + 1;
                    let mut s_beads = Vec::new();
                    let mut prev = g.joints[k0];
                    for &c in chosen.iter().chain(std::iter::once(&g.joints[k0 + 1])) {
                        let a = g.verts.iter().position(|&x| x == prev).unwrap();
                        let b = g.verts.iter().position(|&x| x == c).unwrap();
                        s_beads.push(b - a);
                        prev = c;
                    }
                    let base_sign = eps_g(&s_beads) + (l * dim_before) as i64 + ((l as i64 - 2) * dim_before as i64);
                    for (ci, (cg, objs, word)) in self.coords.iter().enumerate() {
                        if *cg != hi {
                            continue;
                        }
                        let ins = &word[k0..k0 + l];
                        for (out, c) in self.a.m(ins) {
                            let mut w = word[..k0].to_vec();
                            w.push(out);
                            w.extend(&word[k0 + l..]);
                            let mut o = objs[..=k0].to_vec();
                            o.extend(&objs[k0 + l..]);
                            let v = signed(to_mod(&c, p), base_sign.rem_euclid(2) == 1, p);
                            add((gi, k0, o, w), ci, v);
                        }
                    }
                }
                for j in 1..nk {
                    let removed = g.verts[start + j];
                    let h = Inj {
                        verts: g.verts.iter().copied().filter(|&x| x != removed).collect(),
                        joints: g.joints.clone(),
                    };
                    let hi = inj_index[&h];
                    for (ci, (cg, objs, word)) in self.coords.iter().enumerate() {
                        if *cg == hi {
                            add((gi, k0, objs.clone(), word.clone()), ci, signed(1, j % 2 == 1, p));
                        }
                    }
                }
            }
        }
        self.rows = rows.into_values().filter(|r| !r.is_empty()).collect();
    }

    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut rows: Vec<BTreeMap<usize, u64>> = self.rows.clone();
        let mut rank = 0;
        let mut pivots: Vec<(usize, BTreeMap<usize, u64>)> = Vec::new();
        for mut r in rows.drain(..) {
            for (pc, pr) in &pivots {
                if let Some(&v) = r.get(pc) {
                    for (&c, &x) in pr {
                        let e = r.entry(c).or_insert(0);
                        *e = (*e + p - v * x % p) % p;
                    }
                    r.retain(|_, x| *x != 0);
                }
            }
            if let Some((&c, &v)) = r.iter().next() {
                let inv = pow_mod(v, p - 2, p);
                for x in r.values_mut() {
                    *x = *x * inv % p;
                }
                pivots.push((c, r));
                rank += 1;
            }
        }
        rank
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - self.rank()
    }

    /// Number of solutions by exhaustive enumeration of `F_p^N`.
    pub fn count(&self) -> u64 {
        let n = self.coords.len();
        let p = self.p;
        let mut x = vec![0u64; n];
        let mut count = 0;
        loop {
            if self.rows.iter().all(|r| r.iter().map(|(&c, &v)| v * x[c]).sum::<u64>() % p == 0) {
                count += 1;
            }
            let mut i = 0;
            while i < n && x[i] == p - 1 {
                x[i] = 0;
                i += 1;
            }
            if i == n {
                return count;
            }
            x[i] += 1;
        }
    }

    pub fn vector(&self, y: &NerveElement) -> Vec<u64> {
        let idx = injective_index(&y.necklace);
        let index = self.coord_index();
        let inj_index: HashMap<Inj, usize> = self.injs.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let q = self.a.quiver();
        let mut v = vec![0; self.coords.len()];
        for (g, comp) in idx.maps.iter().zip(&y.comps) {
            let verts = g.map().to_vec();
            let joints = g.source().joints().iter().map(|&j| verts[j]).collect();
            let gi = inj_index[&Inj { verts, joints }];
            for (word, c) in comp.terms() {
                let mut objs = vec![y.from];
                objs.extend(word.iter().map(|&w| q.generator(w).target));
                v[index[&(gi, objs, word.clone())]] = to_mod(c, self.p);
            }
        }
        v
    }

    pub fn residual_free(&self, v: &[u64]) -> bool {
        self.rows.iter().all(|r| r.iter().map(|(&c, &x)| x * v[c] % self.p).sum::<u64>() % self.p == 0)
    }
}

pub fn all_necklaces(max: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = vec![(0, vec![0])];
    for p in 1..=max {
        for inner in subsets(&(1..p).collect::<Vec<_>>()) {
            let mut j = vec![0];
            j.extend(inner);
            j.push(p);
            out.push((p, j));
        }
    }
    out
}

pub fn library_necklace(p: usize, joints: &[usize]) -> Necklace {
    Necklace::new(p, joints.to_vec()).unwrap()
}

