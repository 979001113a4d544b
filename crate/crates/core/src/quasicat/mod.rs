//! Inner-horn filling, Faonte simplices and the underlying simplicial set.

mod horn;
mod simplex;

use serde::Serialize;
use thiserror::Error;

use crate::exactlin::LinError;
use crate::necklace::NecklaceError;
use crate::nerve::NerveError;

pub use horn::{horn_compatible, horn_fill, verify_filler, HornData};
pub use simplex::{
    assemble_interval, assemble_simplex, assembled_family, faonte_check, perturb, random_member, sequences, verify_beta_data, BetaData,
    SimplexCollection,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuasicatError {
    #[error(transparent)]
    Nerve(#[from] NerveError),
    #[error(transparent)]
    Necklace(#[from] NecklaceError),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("incompatible horn: {0} violations")]
    Incompatible(usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("no member found after {0} attempts")]
    Exhausted(usize),
}

/// Outcome of a verification with human-readable violations.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub violations: Vec<String>,
}

impl Verdict {
    pub fn new(check: &str) -> Self {
        Verdict {
            check: check.to_string(),
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: String) {
        self.violations.push(v);
    }
}
