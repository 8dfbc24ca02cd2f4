//! Subspaces of F^d kept in reduced row echelon form.

use crate::gfpn::{FieldElement, FiniteField};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    /// Sorted by pivot; each row has 1 at its pivot and 0 at every other pivot.
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &FiniteField, dim: usize) -> Self {
        let mut s = Self::zero(dim);
        for i in 0..dim {
            let mut e = vec![field.zero(); dim];
            e[i] = field.one();
            s.insert(field, e);
        }
        s
    }

    pub fn span<I>(field: &FiniteField, dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<FieldElement>>,
    {
        let mut s = Self::zero(dim);
        for v in vectors {
            s.insert(field, v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot columns.
    pub fn reduce(&self, field: &FiniteField, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(
            v.len(),
            self.dim,
            "vector length differs from ambient dimension"
        );
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p];
            if c != field.zero() {
                for (x, &y) in r.iter_mut().zip(row) {
                    if y != field.zero() {
                        *x = field.sub(*x, field.mul(c, y));
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, field: &FiniteField, v: &[FieldElement]) -> bool {
        self.reduce(field, v).iter().all(|&x| x == field.zero())
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, field: &FiniteField, v: Vec<FieldElement>) -> bool {
        let mut r = self.reduce(field, &v);
        let Some(p) = r.iter().position(|&x| x != field.zero()) else {
            return false;
        };
        let lead_inv = field.inv(r[p]).expect("nonzero lead");
        for x in r.iter_mut() {
            *x = field.mul(*x, lead_inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != field.zero() {
                for (x, &y) in row.iter_mut().zip(&r) {
                    if y != field.zero() {
                        *x = field.sub(*x, field.mul(c, y));
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn is_subspace_of(&self, field: &FiniteField, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(field, r))
    }

    /// Reduced echelon form is canonical, so equal spans compare equal.
    pub fn same_span(&self, other: &Subspace) -> bool {
        self == other
    }

    pub fn sum(&self, field: &FiniteField, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in other.basis() {
            s.insert(field, r.clone());
        }
        s
    }

    /// `dim(A ∩ B) = dim A + dim B - dim(A + B)`.
    pub fn intersection_rank(&self, field: &FiniteField, other: &Subspace) -> usize {
        self.rank() + other.rank() - self.sum(field, other).rank()
    }
}

/// Solves `A x = b` where `columns[j]` is column `j` of `A`. Returns one
/// solution, or `None` when the system is inconsistent.
pub fn solve_columns(
    field: &FiniteField,
    columns: &[Vec<FieldElement>],
    b: &[FieldElement],
) -> Option<Vec<FieldElement>> {
    let m = b.len();
    let n = columns.len();
    // Augmented rows [A | b].
    let mut rows: Vec<Vec<FieldElement>> = (0..m)
        .map(|i| {
            let mut r: Vec<FieldElement> = columns.iter().map(|c| c[i]).collect();
            r.push(b[i]);
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pr) = (rank..m).find(|&r| rows[r][col] != field.zero()) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = field.inv(rows[rank][col]).expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != field.zero() {
                let c = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(c, y));
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| r[n] != field.zero()) {
        return None;
    }
    let mut x = vec![field.zero(); n];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = rows[r][n];
    }
    Some(x)
}
