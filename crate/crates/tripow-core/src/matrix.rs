//! Upper-triangular square matrices over an exact field.
//!
//! Indices are 1-based everywhere on the public surface, matching the
//! usual subscript notation for matrix entries.

use alloc::vec;
use alloc::vec::Vec;


use crate::error::{Error, Result};
use crate::field::Field;

/// A k×k upper-triangular matrix. Entries below the diagonal are zero by
/// construction and stay that way; values are immutable after validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriMatrix<F> {
    k: usize,
    entries: Vec<F>,
}

impl<F: Field> TriMatrix<F> {
    /// Validates and stores a full k×k grid of entries.
    ///
    /// Rejects an empty grid, ragged rows, and any nonzero entry below
    /// the diagonal.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(Error::RaggedRow { row: r + 1 });
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate().take(r) {
                if !v.is_zero() {
                    return Err(Error::NotUpperTriangular {
                        row: r + 1,
                        col: c + 1,
                    });
                }
            }
        }
        Ok(TriMatrix {
            k,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// The identity matrix of dimension `k`.
    pub fn identity(k: usize) -> Self {
        assert!(k > 0, "dimension must be positive");
        let mut entries = vec![F::zero(); k * k];
        for i in 0..k {
            entries[i * k + i] = F::one();
        }
        TriMatrix { k, entries }
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// Entry m[i, j], 1-based. Panics if an index is out of range.
    pub fn entry(&self, i: usize, j: usize) -> &F {
        assert!(
            (1..=self.k).contains(&i) && (1..=self.k).contains(&j),
            "entry ({i}, {j}) out of range for dimension {}",
            self.k
        );
        &self.entries[(i - 1) * self.k + (j - 1)]
    }

    /// The diagonal as a slice-backed iterator, in row order.
    pub fn diagonal(&self) -> impl Iterator<Item = &F> + '_ {
        (1..=self.k).map(move |i| self.entry(i, i))
    }

    /// 1-based position of the first zero diagonal entry, if any.
    pub fn first_zero_diagonal(&self) -> Option<usize> {
        self.diagonal().position(F::is_zero).map(|p| p + 1)
    }

    pub fn is_singular(&self) -> bool {
        self.first_zero_diagonal().is_some()
    }

    /// Errors unless the diagonal entries are pairwise distinct.
    pub fn require_distinct_diagonal(&self) -> Result<()> {
        for a in 1..=self.k {
            for b in (a + 1)..=self.k {
                if self.entry(a, a) == self.entry(b, b) {
                    return Err(Error::DuplicateDiagonal { first: a, second: b });
                }
            }
        }
        Ok(())
    }

    /// Validates a 1-based cell reference 1 <= i <= j <= k.
    pub fn check_cell(&self, i: usize, j: usize) -> Result<()> {
        if i >= 1 && i <= j && j <= self.k {
            Ok(())
        } else {
            Err(Error::CellOutOfRange { i, j, k: self.k })
        }
    }

    /// Entry-wise conversion into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> TriMatrix<G> {
        TriMatrix {
            k: self.k,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Matrix product. Both factors are upper triangular, so the product
    /// is too and each entry is a short sum over t in i..=j.
    ///
    /// Panics on a dimension mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "dimension mismatch in matrix product");
        let k = self.k;
        let mut entries = vec![F::zero(); k * k];
        for i in 1..=k {
            for j in i..=k {
                let mut acc = F::zero();
                for t in i..=j {
                    acc = acc + self.entry(i, t).clone() * rhs.entry(t, j).clone();
                }
                entries[(i - 1) * k + (j - 1)] = acc;
            }
        }
        TriMatrix { k, entries }
    }

    /// Rows as owned vectors, for serialization.
    pub fn rows(&self) -> Vec<Vec<F>> {
        self.entries.chunks(self.k).map(<[F]>::to_vec).collect()
    }
}
