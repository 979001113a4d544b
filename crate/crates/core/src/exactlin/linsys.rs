use std::collections::BTreeMap;

use super::{Field, Scalar};

type SparseRow = BTreeMap<usize, Scalar>;

/// Sparse matrix given row by row.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    field: Field,
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl LinearSystem {
    pub fn new(field: Field, ncols: usize) -> Self {
        LinearSystem {
            field,
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Appends a row; repeated columns are summed.
    pub fn push_row<I: IntoIterator<Item = (usize, Scalar)>>(&mut self, entries: I) {
        let mut row = SparseRow::new();
        for (c, v) in entries {
            assert!(c < self.ncols, "column {c} out of range");
            add_entry(&mut row, c, &v);
        }
        self.rows.push(row);
    }

    pub fn add_to_row(&mut self, row: usize, col: usize, v: &Scalar) {
        assert!(col < self.ncols, "column {col} out of range");
        add_entry(&mut self.rows[row], col, v);
    }

    pub fn push_empty_row(&mut self) -> usize {
        self.rows.push(SparseRow::new());
        self.rows.len() - 1
    }

    pub fn rows(&self) -> impl Iterator<Item = impl Iterator<Item = (usize, &Scalar)>> {
        self.rows.iter().map(|r| r.iter().map(|(c, v)| (*c, v)))
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.ncols);
        for r in &self.rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Exact null-space basis, one vector per free column in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.echelon().kernel_basis()
    }

    /// Returns `M v` for a dense vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.rows
            .iter()
            .map(|r| {
                let mut acc = self.field.zero();
                for (c, x) in r {
                    acc += &(x * &v[*c]);
                }
                acc
            })
            .collect()
    }

    /// Some solution of `M v = rhs`, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows.len());
        let mut e = Echelon::new(self.field, self.ncols + 1);
        for (r, b) in self.rows.iter().zip(rhs) {
            let mut row = r.clone();
            add_entry(&mut row, self.ncols, b);
            e.insert(row);
        }
        if e.pivots.contains_key(&self.ncols) {
            return None;
        }
        let mut v = vec![self.field.zero(); self.ncols];
        for (p, row) in &e.pivots {
            if let Some(b) = row.get(&self.ncols) {
                v[*p] = b.clone();
            }
        }
        Some(v)
    }
}

fn add_entry(row: &mut SparseRow, c: usize, v: &Scalar) {
    if v.is_zero() {
        return;
    }
    match row.get_mut(&c) {
        Some(x) => {
            *x += v;
            if x.is_zero() {
                row.remove(&c);
            }
        }
        None => {
            row.insert(c, v.clone());
        }
    }
}

/// Incrementally maintained reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let hits: Vec<(usize, Scalar)> = row
            .iter()
            .filter(|(c, _)| self.pivots.contains_key(c))
            .map(|(c, v)| (*c, v.clone()))
            .collect();
        for (c, v) in hits {
            for (c2, x) in &self.pivots[&c] {
                add_entry(&mut row, *c2, &-(x * &v));
            }
        }
        row
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lv)) = row.iter().next() else {
            return false;
        };
        let inv = lv.inverse().expect("nonzero pivot");
        let row: SparseRow = row.iter().map(|(c, v)| (*c, v * &inv)).collect();
        for other in self.pivots.values_mut() {
            if let Some(v) = other.get(&lead).cloned() {
                for (c, x) in &row {
                    add_entry(other, *c, &-(x * &v));
                }
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    /// Whether `row` lies in the row space.
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let zero = self.field.zero();
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivots.contains_key(&f) {
                continue;
            }
            let mut v = vec![zero.clone(); self.ncols];
            v[f] = self.field.one();
            for (p, row) in &self.pivots {
                if let Some(x) = row.get(&f) {
                    v[*p] = -x;
                }
            }
            out.push(v);
        }
        out
    }
}
