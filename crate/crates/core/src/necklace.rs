//! Necklaces `(T, p)`, necklace maps, factorizations, enumerations and signs.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NecklaceError {
    #[error("invalid necklace: {0}")]
    InvalidNecklace(String),
    #[error("invalid necklace map: {0}")]
    InvalidMap(String),
    #[error("maps are not composable")]
    NotComposable,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

type Result<T> = std::result::Result<T, NecklaceError>;

/// A necklace: spine length `p` and the sorted joint set `T ⊆ [p]` containing `0` and `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    spine: usize,
    joints: Vec<usize>,
}

impl Necklace {
    pub fn new(spine: usize, joints: Vec<usize>) -> Result<Self> {
        let bad = |m: &str| NecklaceError::InvalidNecklace(format!("{m}: p={spine}, T={joints:?}"));
        if joints.first() != Some(&0) || joints.last() != Some(&spine) {
            return Err(bad("joints must contain 0 and p"));
        }
        if joints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("joints must be strictly increasing"));
        }
        Ok(Necklace { spine, joints })
    }

    /// `Δ^n`.
    pub fn simplex(n: usize) -> Self {
        if n == 0 {
            Self::point()
        } else {
            Necklace {
                spine: n,
                joints: vec![0, n],
            }
        }
    }

    /// `Δ^0`, the monoidal unit.
    pub fn point() -> Self {
        Necklace {
            spine: 0,
            joints: vec![0],
        }
    }

    /// `Δ^{n_1} ∨ … ∨ Δ^{n_k}`; every bead length must be positive.
    pub fn from_beads(beads: &[usize]) -> Result<Self> {
        let mut joints = vec![0];
        let mut p = 0;
        for &b in beads {
            if b == 0 {
                return Err(NecklaceError::InvalidNecklace("bead of length 0".into()));
            }
            p += b;
            joints.push(p);
        }
        Ok(Necklace { spine: p, joints })
    }

    /// Parses the comma-separated bead encoding; the empty string is `Δ^0`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::point());
        }
        let beads = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| NecklaceError::InvalidNecklace(format!("bad bead list {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_beads(&beads)
    }

    pub fn encode(&self) -> String {
        self.beads()
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn spine(&self) -> usize {
        self.spine
    }

    pub fn joints(&self) -> &[usize] {
        &self.joints
    }

    pub fn is_joint(&self, v: usize) -> bool {
        self.joints.binary_search(&v).is_ok()
    }

    pub fn beads(&self) -> Vec<usize> {
        self.joints.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// `ℓ(T)`.
    pub fn bead_count(&self) -> usize {
        self.joints.len() - 1
    }

    /// `dim(T) = p - ℓ(T)`.
    pub fn dim(&self) -> usize {
        self.spine - self.bead_count()
    }

    /// `ε(T)`.
    pub fn epsilon(&self) -> i64 {
        let beads: Vec<i64> = self.beads().iter().map(|&b| b as i64).collect();
        epsilon_g(&beads)
    }

    /// Vertex interval `[t_{k-1}, t_k]` of bead `k` (1-based).
    pub fn bead_interval(&self, k: usize) -> (usize, usize) {
        (self.joints[k - 1], self.joints[k])
    }

    /// `T^{<k}`.
    pub fn before(&self, k: usize) -> Necklace {
        Necklace::from_beads(&self.beads()[..k - 1]).expect("sub-necklace")
    }

    /// `T^{>k}`.
    pub fn after(&self, k: usize) -> Necklace {
        Necklace::from_beads(&self.beads()[k..]).expect("sub-necklace")
    }

    pub fn wedge(&self, other: &Necklace) -> Necklace {
        let mut joints = self.joints.clone();
        joints.extend(other.joints[1..].iter().map(|j| j + self.spine));
        Necklace {
            spine: self.spine + other.spine,
            joints,
        }
    }

    /// Splits `T = T_1 ∨ T_2` at the joint `p1`.
    pub fn split_at(&self, p1: usize) -> Result<(Necklace, Necklace)> {
        if !self.is_joint(p1) {
            return Err(NecklaceError::Precondition(format!("{p1} is not a joint")));
        }
        let left = self.joints.iter().copied().filter(|&j| j <= p1).collect();
        let right = self
            .joints
            .iter()
            .filter(|&&j| j >= p1)
            .map(|j| j - p1)
            .collect();
        Ok((
            Necklace { spine: p1, joints: left },
            Necklace {
                spine: self.spine - p1,
                joints: right,
            },
        ))
    }
}

impl fmt::Debug for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Necklace[{}]", self.encode())
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spine == 0 {
            return write!(f, "Δ^0");
        }
        let beads: Vec<String> = self.beads().iter().map(|b| format!("Δ^{b}")).collect();
        write!(f, "{}", beads.join("∨"))
    }
}

/// `ε_g(n_1,…,n_k) = Σ_{l<k} (k-l)(n_l - 1)`.
pub fn epsilon_g(ns: &[i64]) -> i64 {
    let k = ns.len() as i64;
    ns.iter()
        .enumerate()
        .take(ns.len().saturating_sub(1))
        .map(|(i, &n)| (k - (i as i64 + 1)) * (n - 1))
        .sum()
}

/// `ε_c(t_1,…,t_{k-1}) = Σ t_i - (k-1)k/2`.
pub fn epsilon_c(ts: &[i64]) -> i64 {
    let l = ts.len() as i64;
    ts.iter().sum::<i64>() - l * (l + 1) / 2
}

/// Structural flags of a necklace map.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MapClass {
    pub inert: bool,
    pub active: bool,
    pub injective: bool,
    pub surjective: bool,
    pub spine_collapsing: bool,
    pub bead_reducing: bool,
}

/// A morphism `(T,p) → (U,q)`: an endpoint-preserving monotone map with `U ⊆ f(T)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NecklaceMap {
    source: Necklace,
    target: Necklace,
    map: Vec<usize>,
}

impl fmt::Debug for NecklaceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->{:?} {:?}", self.source, self.target, self.map)
    }
}

impl NecklaceMap {
    pub fn new(source: Necklace, target: Necklace, map: Vec<usize>) -> Result<Self> {
        let bad = |m: &str| NecklaceError::InvalidMap(format!("{m}: {map:?}"));
        if map.len() != source.spine + 1 {
            return Err(bad("map length must be p+1"));
        }
        if map[0] != 0 || map[source.spine] != target.spine {
            return Err(bad("endpoints must be preserved"));
        }
        if map.windows(2).any(|w| w[0] > w[1]) {
            return Err(bad("map must be monotone"));
        }
        let image: Vec<usize> = source.joints.iter().map(|&j| map[j]).collect();
        if target.joints.iter().any(|j| !image.contains(j)) {
            return Err(bad("target joints must be images of source joints"));
        }
        Ok(NecklaceMap { source, target, map })
    }

    pub fn identity(t: &Necklace) -> Self {
        NecklaceMap {
            source: t.clone(),
            target: t.clone(),
            map: (0..=t.spine).collect(),
        }
    }

    /// The inert inclusion with source joints `joints` into `(target.joints ⊆ joints)`.
    pub fn inert(source: Necklace, target: Necklace) -> Result<Self> {
        let map = (0..=target.spine).collect();
        Self::new(source, target, map)
    }

    /// Inner face `δ_j: Δ^{n-1} → Δ^n`, `0 < j < n`.
    pub fn face(n: usize, j: usize) -> Result<Self> {
        if j == 0 || j >= n {
            return Err(NecklaceError::Precondition(format!("face δ_{j} of Δ^{n}")));
        }
        let map = (0..n).map(|i| if i < j { i } else { i + 1 }).collect();
        Self::new(Necklace::simplex(n - 1), Necklace::simplex(n), map)
    }

    /// Degeneracy `σ_i: Δ^{n+1} → Δ^n`, `0 ≤ i ≤ n`.
    pub fn degeneracy(n: usize, i: usize) -> Result<Self> {
        if i > n {
            return Err(NecklaceError::Precondition(format!("degeneracy σ_{i} onto Δ^{n}")));
        }
        let map = (0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect();
        Self::new(Necklace::simplex(n + 1), Necklace::simplex(n), map)
    }

    /// `ν_{p,q}: Δ^p ∨ Δ^q ↪ Δ^{p+q}`.
    pub fn nu(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(NecklaceError::Precondition("ν_{p,q} needs p,q > 0".into()));
        }
        Self::inert(
            Necklace::simplex(p).wedge(&Necklace::simplex(q)),
            Necklace::simplex(p + q),
        )
    }

    pub fn source(&self) -> &Necklace {
        &self.source
    }

    pub fn target(&self) -> &Necklace {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v]
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &NecklaceMap) -> Result<NecklaceMap> {
        if g.target != self.source {
            return Err(NecklaceError::NotComposable);
        }
        Ok(NecklaceMap {
            source: g.source.clone(),
            target: self.target.clone(),
            map: g.map.iter().map(|&v| self.map[v]).collect(),
        })
    }

    pub fn wedge(&self, other: &NecklaceMap) -> NecklaceMap {
        let mut map = self.map.clone();
        map.extend(other.map[1..].iter().map(|v| v + self.target.spine));
        NecklaceMap {
            source: self.source.wedge(&other.source),
            target: self.target.wedge(&other.target),
            map,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.map.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.map.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_inert(&self) -> bool {
        self.source.spine == self.target.spine && self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    fn joint_image(&self) -> Vec<usize> {
        let mut img: Vec<usize> = self.source.joints.iter().map(|&j| self.map[j]).collect();
        img.dedup();
        img
    }

    pub fn is_active(&self) -> bool {
        self.joint_image() == self.target.joints
    }

    /// For an active map: `(n_i, m_i)` for every source bead, where `m_i` is the
    /// length of its image.
    pub fn bead_factors(&self) -> Vec<(usize, usize)> {
        self.source
            .joints
            .windows(2)
            .map(|w| (w[1] - w[0], self.map[w[1]] - self.map[w[0]]))
            .collect()
    }

    fn factor_is_identity(&self, k: usize) -> bool {
        let (a, b) = self.source.bead_interval(k);
        (a..b).all(|v| self.map[v + 1] == self.map[v] + 1)
    }

    pub fn classify(&self) -> MapClass {
        let inert = self.is_inert();
        let active = self.is_active();
        let injective = self.is_injective();
        let surjective = self.is_surjective();
        let (mut spine_collapsing, mut bead_reducing) = (false, false);
        if active && surjective {
            let factors = self.bead_factors();
            bead_reducing = factors.iter().all(|&(_, m)| m >= 1);
            spine_collapsing = (1..=factors.len()).all(|k| {
                let (n, m) = factors[k - 1];
                (n == 1 && m == 0) || self.factor_is_identity(k)
            });
        }
        MapClass {
            inert,
            active,
            injective,
            surjective,
            spine_collapsing,
            bead_reducing,
        }
    }

    /// `f = m ∘ e` with `e` active surjective and `m` injective.
    pub fn factor_epi_mono(&self) -> (NecklaceMap, NecklaceMap) {
        let mut image = self.map.clone();
        image.dedup();
        let rank = |v: usize| image.binary_search(&v).expect("in image");
        let mid_joints: Vec<usize> = self.joint_image().iter().map(|&v| rank(v)).collect();
        let mid = Necklace {
            spine: image.len() - 1,
            joints: mid_joints,
        };
        let e = NecklaceMap {
            source: self.source.clone(),
            target: mid.clone(),
            map: self.map.iter().map(|&v| rank(v)).collect(),
        };
        let m = NecklaceMap {
            source: mid,
            target: self.target.clone(),
            map: image,
        };
        (e, m)
    }

    /// `f = f_inert ∘ f_act` through `(f(T), q)`.
    pub fn factor_active_inert(&self) -> (NecklaceMap, NecklaceMap) {
        let mid = Necklace {
            spine: self.target.spine,
            joints: self.joint_image(),
        };
        let act = NecklaceMap {
            source: self.source.clone(),
            target: mid.clone(),
            map: self.map.clone(),
        };
        let inert = NecklaceMap {
            source: mid,
            target: self.target.clone(),
            map: (0..=self.target.spine).collect(),
        };
        (act, inert)
    }

    /// Writes an injective `g: U ↪ T_1 ∨ T_2` as `g_1 ∨ g_2`, where `T_1` has spine `p1`.
    pub fn split_injective(&self, p1: usize) -> Result<(NecklaceMap, NecklaceMap)> {
        if !self.is_injective() {
            return Err(NecklaceError::Precondition("split needs an injective map".into()));
        }
        let (t1, t2) = self.target.split_at(p1)?;
        let u = self
            .map
            .iter()
            .position(|&v| v == p1)
            .filter(|&u| self.source.is_joint(u))
            .ok_or_else(|| NecklaceError::Precondition("split point is not hit by a joint".into()))?;
        let (s1, s2) = self.source.split_at(u)?;
        let g1 = NecklaceMap {
            source: s1,
            target: t1,
            map: self.map[..=u].to_vec(),
        };
        let g2 = NecklaceMap {
            source: s2,
            target: t2,
            map: self.map[u..].iter().map(|v| v - p1).collect(),
        };
        Ok((g1, g2))
    }

    /// `g ∘_k f = g ∘ (id_{U^{<k}} ∨ f ∨ id_{U^{>k}})`.
    pub fn compose_at(&self, k: usize, f: &NecklaceMap) -> Result<NecklaceMap> {
        let u = &self.source;
        if k == 0 || k > u.bead_count() {
            return Err(NecklaceError::Precondition(format!("bead index {k} out of range")));
        }
        let (a, b) = u.bead_interval(k);
        if f.target != Necklace::simplex(b - a) {
            return Err(NecklaceError::NotComposable);
        }
        let mid = NecklaceMap::identity(&u.before(k))
            .wedge(f)
            .wedge(&NecklaceMap::identity(&u.after(k)));
        self.compose(&mid)
    }

    /// Pieces `S_i ↪ Δ^{n_i}` of an inert map.
    pub fn inert_pieces(&self) -> Result<Vec<Necklace>> {
        if !self.is_inert() {
            return Err(NecklaceError::Precondition("map is not inert".into()));
        }
        Ok(self
            .target
            .joints
            .windows(2)
            .map(|w| {
                let joints = self
                    .source
                    .joints
                    .iter()
                    .filter(|&&j| j >= w[0] && j <= w[1])
                    .map(|j| j - w[0])
                    .collect();
                Necklace {
                    spine: w[1] - w[0],
                    joints,
                }
            })
            .collect())
    }

    /// `φ(μ) = Σ_{i<j} dim(S_i)(ℓ(S_j) - 1)` for inert `μ`.
    pub fn phi(&self) -> Result<i64> {
        let pieces = self.inert_pieces()?;
        let mut total = 0i64;
        let mut dims = 0i64;
        for s in &pieces {
            total += dims * (s.bead_count() as i64 - 1);
            dims += s.dim() as i64;
        }
        Ok(total)
    }
}

/// `φ_k(ν) = dim(U^{<k})(ℓ(S) - 1)` for `ν: S ↪ Δ^{n_k}` and ambient `U`.
pub fn phi_k(nu: &NecklaceMap, k: usize, ambient: &Necklace) -> Result<i64> {
    if !nu.is_inert() {
        return Err(NecklaceError::Precondition("map is not inert".into()));
    }
    Ok(ambient.before(k).dim() as i64 * (nu.source.bead_count() as i64 - 1))
}

/// All inert maps into `Δ^n`, ordered by source joints.
pub fn enumerate_inert_into(n: usize) -> Vec<NecklaceMap> {
    inert_into(&Necklace::simplex(n))
}

/// All inert maps into `U`, ordered by source joints.
pub fn inert_into(u: &Necklace) -> Vec<NecklaceMap> {
    let free: Vec<usize> = (1..u.spine).filter(|v| !u.is_joint(*v)).collect();
    let mut out: Vec<NecklaceMap> = (0..1u64 << free.len())
        .map(|mask| {
            let mut joints = u.joints.clone();
            for (i, &v) in free.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    joints.push(v);
                }
            }
            joints.sort_unstable();
            NecklaceMap {
                source: Necklace {
                    spine: u.spine,
                    joints,
                },
                target: u.clone(),
                map: (0..=u.spine).collect(),
            }
        })
        .collect();
    out.sort_by(|a, b| a.source.joints.cmp(&b.source.joints));
    out
}

/// All injective maps into `T`, ordered by spine length, then map tuple, then joints.
pub fn enumerate_injective_into(t: &Necklace) -> Vec<NecklaceMap> {
    injective_index(t).maps.clone()
}

/// Canonical list of injective maps into a necklace with a reverse lookup.
#[derive(Debug)]
pub struct InjectiveIndex {
    pub maps: Vec<NecklaceMap>,
    lookup: HashMap<(Vec<usize>, Vec<usize>), usize>,
}

impl InjectiveIndex {
    fn build(t: &Necklace) -> Self {
        let q = t.spine;
        let mut maps = Vec::new();
        let optional: Vec<usize> = (1..q).filter(|v| !t.is_joint(*v)).collect();
        for mask in 0..1u64 << optional.len() {
            let mut image = t.joints.clone();
            for (i, &v) in optional.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    image.push(v);
                }
            }
            image.sort_unstable();
            let p = image.len() - 1;
            let forced: Vec<usize> = (0..=p).filter(|&i| t.is_joint(image[i])).collect();
            let choice: Vec<usize> = (1..p).filter(|i| !forced.contains(i)).collect();
            for jm in 0..1u64 << choice.len() {
                let mut joints = forced.clone();
                for (i, &v) in choice.iter().enumerate() {
                    if jm >> i & 1 == 1 {
                        joints.push(v);
                    }
                }
                joints.sort_unstable();
                maps.push(NecklaceMap {
                    source: Necklace { spine: p, joints },
                    target: t.clone(),
                    map: image.clone(),
                });
            }
        }
        maps.sort_by(|a, b| {
            (a.source.spine, &a.map, &a.source.joints).cmp(&(b.source.spine, &b.map, &b.source.joints))
        });
        let lookup = maps
            .iter()
            .enumerate()
            .map(|(i, g)| ((g.map.clone(), g.source.joints.clone()), i))
            .collect();
        InjectiveIndex { maps, lookup }
    }

    /// Position of an injective map into the indexed necklace.
    pub fn position(&self, g: &NecklaceMap) -> Option<usize> {
        self.lookup
            .get(&(g.map.clone(), g.source.joints.clone()))
            .copied()
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

static INDEX_CACHE: Lazy<Mutex<HashMap<Necklace, Arc<InjectiveIndex>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Cached canonical enumeration of injective maps into `t`.
pub fn injective_index(t: &Necklace) -> Arc<InjectiveIndex> {
    let mut cache = INDEX_CACHE.lock().expect("index cache poisoned");
    cache
        .entry(t.clone())
        .or_insert_with(|| Arc::new(InjectiveIndex::build(t)))
        .clone()
}

/// All necklaces with the given spine length.
pub fn necklaces_with_spine(p: usize) -> Vec<Necklace> {
    if p == 0 {
        return vec![Necklace::point()];
    }
    let mut out: Vec<Necklace> = (0..1u64 << (p - 1))
        .map(|mask| {
            let mut joints = vec![0];
            joints.extend((1..p).filter(|v| mask >> (v - 1) & 1 == 1));
            joints.push(p);
            Necklace { spine: p, joints }
        })
        .collect();
    out.sort();
    out
}

/// All necklace maps `s → t`.
pub fn maps_between(s: &Necklace, t: &Necklace) -> Vec<NecklaceMap> {
    let mut out = Vec::new();
    if s.spine == 0 {
        if t.spine == 0 {
            out.push(NecklaceMap::identity(s));
        }
        return out;
    }
    let mut cur = vec![0usize];
    monotone_rec(s, t, &mut cur, &mut out);
    out
}

fn monotone_rec(s: &Necklace, t: &Necklace, cur: &mut Vec<usize>, out: &mut Vec<NecklaceMap>) {
    if cur.len() == s.spine {
        cur.push(t.spine);
        if let Ok(m) = NecklaceMap::new(s.clone(), t.clone(), cur.clone()) {
            out.push(m);
        }
        cur.pop();
        return;
    }
    let last = *cur.last().expect("nonempty");
    for v in last..=t.spine {
        cur.push(v);
        monotone_rec(s, t, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nk(beads: &[usize]) -> Necklace {
        Necklace::from_beads(beads).unwrap()
    }

    #[test]
    fn wedge_and_statistics() {
        let t = nk(&[1]).wedge(&nk(&[2]));
        assert_eq!(t.joints(), &[0, 1, 3]);
        assert_eq!(t.spine(), 3);
        assert_eq!(Necklace::point().wedge(&t), t);
        let u = nk(&[2, 3]);
        assert_eq!((u.bead_count(), u.spine(), u.dim()), (2, 5, 3));
        assert_eq!(u.epsilon(), 1);
        assert_eq!(Necklace::simplex(4).epsilon(), 0);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["", "1", "2,3", "1,1,1"] {
            assert_eq!(Necklace::parse(s).unwrap().encode(), s);
        }
        assert!(Necklace::parse("0").is_err());
        assert!(Necklace::parse("a").is_err());
    }

    #[test]
    fn epsilon_forms_agree() {
        for beads in [vec![2i64, 3], vec![1, 1, 1], vec![3, 1, 2, 2]] {
            let mut ts = Vec::new();
            let mut acc = 0;
            for b in &beads[..beads.len() - 1] {
                acc += b;
                ts.push(acc);
            }
            assert_eq!(epsilon_g(&beads), epsilon_c(&ts));
        }
    }

    #[test]
    fn simplicial_identity_after_face() {
        let s0 = NecklaceMap::degeneracy(1, 0).unwrap();
        let d1 = NecklaceMap::face(2, 1).unwrap();
        assert_eq!(s0.compose(&d1).unwrap(), NecklaceMap::identity(&Necklace::simplex(1)));
        let id = NecklaceMap::identity(&Necklace::simplex(2));
        assert_eq!(id.compose(&d1).unwrap(), d1);
        assert!(d1.compose(&d1).is_err());
    }

    #[test]
    fn epi_mono_of_collapsing_map() {
        let d2 = Necklace::simplex(2);
        let h = NecklaceMap::new(d2.clone(), d2, vec![0, 0, 2]).unwrap();
        let (e, m) = h.factor_epi_mono();
        assert_eq!(e, NecklaceMap::degeneracy(1, 0).unwrap());
        assert_eq!(m, NecklaceMap::face(2, 1).unwrap());
        assert_eq!(m.compose(&e).unwrap(), h);
    }

    #[test]
    fn active_inert_of_nu() {
        let nu = NecklaceMap::nu(1, 1).unwrap();
        let (act, inert) = nu.factor_active_inert();
        assert_eq!(act, NecklaceMap::identity(&nk(&[1, 1])));
        assert_eq!(inert, nu);
    }

    #[test]
    fn injective_counts() {
        assert_eq!(enumerate_injective_into(&Necklace::simplex(1)).len(), 1);
        let into2 = enumerate_injective_into(&Necklace::simplex(2));
        assert_eq!(into2.len(), 3);
        assert_eq!(into2[0], NecklaceMap::face(2, 1).unwrap());
        assert_eq!(enumerate_injective_into(&nk(&[1, 1])).len(), 1);
        for n in 1..6 {
            assert_eq!(enumerate_injective_into(&Necklace::simplex(n)).len(), 3usize.pow(n as u32 - 1));
        }
    }

    #[test]
    fn inert_counts() {
        for n in 1..=8 {
            assert_eq!(enumerate_inert_into(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn compose_at_bead() {
        let id = NecklaceMap::identity(&nk(&[2, 2]));
        let nu = NecklaceMap::nu(1, 1).unwrap();
        let g = id.compose_at(2, &nu).unwrap();
        assert_eq!(g.source(), &nk(&[2, 1, 1]));
        assert!(g.is_inert());
        let d1 = NecklaceMap::face(3, 1).unwrap();
        let id3 = NecklaceMap::identity(&Necklace::simplex(3));
        assert_eq!(id3.compose_at(1, &d1).unwrap(), d1);
    }

    #[test]
    fn phi_k_example() {
        let ambient = nk(&[2, 3]);
        let nu = NecklaceMap::inert(nk(&[1, 2]), Necklace::simplex(3)).unwrap();
        assert_eq!(phi_k(&nu, 2, &ambient).unwrap(), 1);
        let wide = NecklaceMap::identity(&nk(&[2])).wedge(&nu);
        assert_eq!(wide.phi().unwrap(), 1);
    }

    #[test]
    fn split_recovers_factors() {
        let d1 = NecklaceMap::face(2, 1).unwrap();
        let id = NecklaceMap::identity(&Necklace::simplex(1));
        let w = d1.wedge(&id);
        assert_eq!(w.split_injective(2).unwrap(), (d1, id));
        assert!(NecklaceMap::degeneracy(1, 0).unwrap().split_injective(1).is_err());
    }
}
