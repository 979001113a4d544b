//! The templicial A∞-nerve: TAN systems, nerve components, structure maps and functor images.

mod functor_image;
mod structure;
mod tan;

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use rand::Rng;
use thiserror::Error;

use crate::ainfty::AInftyCategory;
use crate::exactlin::{Field, GenId, LinError, LinearSystem, Scalar, SignConvention, TensorElement};
use crate::necklace::{injective_index, Necklace, NecklaceError};

pub use functor_image::functor_image;
pub use structure::SplitElement;
pub use tan::Residual;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NerveError {
    #[error(transparent)]
    Necklace(#[from] NecklaceError),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("element violates the TAN relations at {0} places")]
    NotInNerve(usize),
}

/// A collection `(y_g)` indexed by the injective maps `g: U ↪ T` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveElement {
    pub necklace: Necklace,
    pub from: usize,
    pub to: usize,
    pub comps: Vec<TensorElement>,
}

impl NerveElement {
    pub fn zero(necklace: &Necklace, from: usize, to: usize) -> Self {
        let n = injective_index(necklace).len();
        NerveElement {
            necklace: necklace.clone(),
            from,
            to,
            comps: vec![TensorElement::zero(); n],
        }
    }

    /// The element `1 ∈ N_{Δ^0}(a, a)`.
    pub fn point_unit(a: usize, field: Field) -> Self {
        NerveElement {
            necklace: Necklace::point(),
            from: a,
            to: a,
            comps: vec![TensorElement::basis(Vec::new(), field)],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(TensorElement::is_zero)
    }

    fn check_same_shape(&self, other: &NerveElement) {
        assert!(
            self.necklace == other.necklace && self.from == other.from && self.to == other.to,
            "nerve elements live in different spaces"
        );
    }

    pub fn add_scaled(&mut self, other: &NerveElement, c: &Scalar) {
        self.check_same_shape(other);
        for (x, y) in self.comps.iter_mut().zip(&other.comps) {
            x.add_scaled(y, c);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> NerveElement {
        let mut out = NerveElement::zero(&self.necklace, self.from, self.to);
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &NerveElement) -> NerveElement {
        self.check_same_shape(other);
        NerveElement {
            necklace: self.necklace.clone(),
            from: self.from,
            to: self.to,
            comps: self.comps.iter().zip(&other.comps).map(|(x, y)| x.sub(y)).collect(),
        }
    }

    /// Checks every component against the bead degrees and endpoints.
    pub fn check_shape(&self, a: &AInftyCategory) -> Result<(), NerveError> {
        let idx = injective_index(&self.necklace);
        if self.comps.len() != idx.len() {
            return Err(NerveError::Shape(format!(
                "{} components for {} injective maps",
                self.comps.len(),
                idx.len()
            )));
        }
        for (g, c) in idx.maps.iter().zip(&self.comps) {
            c.check_shape(a.quiver(), self.from, self.to, &bead_degrees(g.source()))?;
        }
        Ok(())
    }
}

/// A-degrees `n_i - 1` of the factors of `(sA)_U`.
pub fn bead_degrees(u: &Necklace) -> Vec<usize> {
    u.beads().iter().map(|n| n - 1).collect()
}

/// Canonical basis of `⊕_g (sA)_U(a,b)` with the TAN system and its kernel.
#[derive(Debug)]
pub struct NerveSpace {
    pub necklace: Necklace,
    pub from: usize,
    pub to: usize,
    pub vertices: Option<Vec<usize>>,
    pub columns: Vec<(usize, Vec<GenId>)>,
    column_index: HashMap<(usize, Vec<GenId>), usize>,
    pub system: LinearSystem,
    pub basis: Vec<NerveElement>,
}

impl NerveSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.columns.len()
    }

    /// Dense coordinates in the ambient basis; `None` if `y` has a term outside it.
    pub fn coordinates(&self, y: &NerveElement, field: Field) -> Option<Vec<Scalar>> {
        let mut v = vec![field.zero(); self.columns.len()];
        for (gi, comp) in y.comps.iter().enumerate() {
            for (key, c) in comp.terms() {
                let col = *self.column_index.get(&(gi, key.clone()))?;
                v[col] = c.clone();
            }
        }
        Some(v)
    }

    pub fn element(&self, coords: &[Scalar]) -> NerveElement {
        let mut y = NerveElement::zero(&self.necklace, self.from, self.to);
        for (col, c) in coords.iter().enumerate() {
            let (gi, key) = &self.columns[col];
            y.comps[*gi].add_term(key.clone(), c);
        }
        y
    }

    /// Random combination of the basis with small integer coefficients.
    pub fn random_element<R: Rng>(&self, rng: &mut R, field: Field) -> NerveElement {
        let mut y = NerveElement::zero(&self.necklace, self.from, self.to);
        for b in &self.basis {
            y.add_scaled(b, &field.from_i64(rng.gen_range(-3..=3)));
        }
        y
    }
}

type SpaceKey = (Necklace, usize, usize, Option<Vec<usize>>);

/// Nerve of a fixed category under a fixed sign convention, with memoized components.
pub struct Nerve<'a> {
    cat: &'a AInftyCategory,
    conv: SignConvention,
    cache: RefCell<HashMap<SpaceKey, Rc<NerveSpace>>>,
}

impl<'a> Nerve<'a> {
    pub fn new(cat: &'a AInftyCategory, conv: SignConvention) -> Self {
        Nerve {
            cat,
            conv,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn category(&self) -> &'a AInftyCategory {
        self.cat
    }

    pub fn convention(&self) -> SignConvention {
        self.conv
    }

    pub fn field(&self) -> Field {
        self.cat.field()
    }

    /// `N_T(a, b)` with its kernel basis.
    pub fn space(&self, t: &Necklace, a: usize, b: usize) -> Rc<NerveSpace> {
        self.space_with(t, a, b, None)
    }

    /// The summand of `N_T(a, b)` whose components follow the object labelling
    /// `vertices` of `[p]` along every injective map.
    pub fn labelled_space(&self, t: &Necklace, vertices: &[usize]) -> Rc<NerveSpace> {
        let a = vertices[0];
        let b = vertices[t.spine()];
        self.space_with(t, a, b, Some(vertices.to_vec()))
    }

    fn space_with(&self, t: &Necklace, a: usize, b: usize, vertices: Option<Vec<usize>>) -> Rc<NerveSpace> {
        let key = (t.clone(), a, b, vertices);
        if let Some(s) = self.cache.borrow().get(&key) {
            return s.clone();
        }
        let space = Rc::new(tan::build_space(self, t, a, b, key.3.clone()));
        self.cache.borrow_mut().insert(key, space.clone());
        space
    }

    pub fn basis(&self, t: &Necklace, a: usize, b: usize) -> Vec<NerveElement> {
        self.space(t, a, b).basis.clone()
    }

    pub fn dimension(&self, t: &Necklace, a: usize, b: usize) -> usize {
        self.space(t, a, b).dim()
    }

    /// Nonzero TAN residuals of `y`; empty iff `y` lies in the nerve.
    pub fn tan_residuals(&self, y: &NerveElement) -> Result<Vec<Residual>, NerveError> {
        y.check_shape(self.cat)?;
        Ok(tan::residuals(self, y))
    }

    pub fn satisfies_tan(&self, y: &NerveElement) -> bool {
        matches!(self.tan_residuals(y), Ok(r) if r.is_empty())
    }

    pub fn clear_cache(&self) {
        self.cache.borrow_mut().clear();
    }
}
