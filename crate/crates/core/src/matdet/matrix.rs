use std::fmt;

use crate::exactcore::{Int, Rat, Ring};
use crate::genfun::GenSpec;
use crate::series::BiSeries;

/// Where a matrix came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Spec(GenSpec),
    Product(GenSpec, GenSpec),
    Oracle(String),
    Explicit,
}

/// Dense `n×n` matrix. Equality ignores provenance.
#[derive(Debug, Clone)]
pub struct GenMatrix<R: Ring> {
    n: usize,
    entries: Vec<R>,
    provenance: Provenance,
}

impl<R: Ring> PartialEq for GenMatrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries
    }
}

impl<R: Ring> GenMatrix<R> {
    pub fn from_fn(n: usize, provenance: Provenance, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(n >= 1, "matrix size must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        GenMatrix { n, entries, provenance }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        GenMatrix::from_fn(n, Provenance::Explicit, |i, j| rows[i][j].clone())
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        GenMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&c| R::from_i64(c)).collect()).collect())
    }

    /// Top-left `n×n` block of a series' coefficient grid.
    pub fn from_series(s: &BiSeries<R>, n: usize, provenance: Provenance) -> Self {
        assert!(s.orders().0 + 1 >= n && s.orders().1 + 1 >= n, "series orders cover the matrix");
        GenMatrix::from_fn(n, provenance, |i, j| s.at(i, j).clone())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.entries.chunks(self.n).map(<[R]>::to_vec).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> GenMatrix<S> {
        GenMatrix { n: self.n, entries: self.entries.iter().map(f).collect(), provenance: self.provenance.clone() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix sizes");
        GenMatrix::from_fn(self.n, Provenance::Explicit, |i, j| {
            (0..self.n).fold(R::zero(), |acc, t| acc.plus(&self.get(i, t).times(rhs.get(t, j))))
        })
    }

    /// The matrix with row `r` and column `c` removed; `None` for `1×1`.
    pub fn minor(&self, r: usize, c: usize) -> Option<Self> {
        (self.n > 1).then(|| {
            GenMatrix::from_fn(self.n - 1, Provenance::Explicit, |i, j| {
                self.get(i + (i >= r) as usize, j + (j >= c) as usize).clone()
            })
        })
    }
}

impl GenMatrix<Rat> {
    /// Integer matrix when every entry is an integer.
    pub fn to_int(&self) -> Option<GenMatrix<Int>> {
        let entries = self.entries.iter().map(Rat::to_int).collect::<Option<Vec<_>>>()?;
        Some(GenMatrix { n: self.n, entries, provenance: self.provenance.clone() })
    }
}

impl<R: Ring> fmt::Display for GenMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
