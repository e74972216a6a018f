//! Sparse signed arrays and the parameter quadruple `(m, n, r, s)`.
//!
//! Cells are addressed with 1-based `(row, col)` pairs throughout the public
//! API. Storage is a `BTreeMap`, so iteration is always in row-major order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Shape and density of a signed magic rectangle: an `m x n` array with `r`
/// filled cells in every row and `s` in every column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub s: usize,
}

impl Params {
    pub fn new(m: usize, n: usize, r: usize, s: usize) -> Result<Self> {
        let bad = |reason| Error::InvalidParams { m, n, r, s, reason };
        if m == 0 || n == 0 || r == 0 || s == 0 {
            return Err(bad("all of m, n, r, s must be positive"));
        }
        if m * r != n * s {
            return Err(bad("m*r must equal n*s"));
        }
        if r > n {
            return Err(bad("r must not exceed n"));
        }
        if s > m {
            return Err(bad("s must not exceed m"));
        }
        Ok(Params { m, n, r, s })
    }

    /// Number of filled cells, `m * r` (equivalently `n * s`).
    pub fn cells(&self) -> usize {
        self.m * self.r
    }

    pub fn support_set(&self) -> SupportSet {
        support_set(self)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SMR({},{};{},{})", self.m, self.n, self.r, self.s)
    }
}

/// The set of values an SMR must use, each exactly once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SupportSet {
    /// Largest absolute value in the set.
    pub half: i64,
    pub includes_zero: bool,
}

impl SupportSet {
    pub fn len(&self) -> usize {
        2 * self.half as usize + usize::from(self.includes_zero)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, value: i64) -> bool {
        if value == 0 {
            self.includes_zero
        } else {
            value.abs() <= self.half
        }
    }

    /// Members in ascending order.
    pub fn values(&self) -> Vec<i64> {
        let neg = (1..=self.half).rev().map(|k| -k);
        let zero = self.includes_zero.then_some(0);
        let pos = 1..=self.half;
        neg.chain(zero).chain(pos).collect()
    }
}

/// `{±1, …, ±mr/2}` when `mr` is even, `{0, ±1, …, ±(mr-1)/2}` when it is odd.
pub fn support_set(p: &Params) -> SupportSet {
    let cells = p.cells() as i64;
    if cells % 2 == 0 {
        SupportSet {
            half: cells / 2,
            includes_zero: false,
        }
    } else {
        SupportSet {
            half: (cells - 1) / 2,
            includes_zero: true,
        }
    }
}

/// A sparse `rows x cols` array of signed integers.
///
/// Values are immutable once built; every transform returns a new array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedArray {
    rows: usize,
    cols: usize,
    cells: BTreeMap<(usize, usize), i64>,
}

impl SignedArray {
    pub fn empty(rows: usize, cols: usize) -> Self {
        SignedArray {
            rows,
            cols,
            cells: BTreeMap::new(),
        }
    }

    /// Builds an array from `(row, col, value)` triples, rejecting cells that
    /// are out of bounds or listed twice.
    pub fn from_cells<I>(rows: usize, cols: usize, cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut a = SignedArray::empty(rows, cols);
        for (row, col, value) in cells {
            a.insert(row, col, value)?;
        }
        Ok(a)
    }

    pub(crate) fn insert(&mut self, row: usize, col: usize, value: i64) -> Result<()> {
        if row == 0 || col == 0 || row > self.rows || col > self.cols {
            return Err(Error::OutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.cells.insert((row, col), value).is_some() {
            return Err(Error::DuplicateCell { row, col });
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of filled cells.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<i64> {
        self.cells.get(&(row, col)).copied()
    }

    /// Filled cells as `(row, col, value)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.cells.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    /// Values of row `row` in column order.
    pub fn row_values(&self, row: usize) -> Vec<i64> {
        self.cells
            .range((row, 0)..=(row, usize::MAX))
            .map(|(_, &v)| v)
            .collect()
    }

    /// Values of column `col` in row order.
    pub fn col_values(&self, col: usize) -> Vec<i64> {
        self.iter()
            .filter(|&(_, c, _)| c == col)
            .map(|(_, _, v)| v)
            .collect()
    }

    /// Filled-cell count of each row (index 0 is row 1).
    pub fn row_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.rows];
        for (r, _, _) in self.iter() {
            deg[r - 1] += 1;
        }
        deg
    }

    pub fn col_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.cols];
        for (_, c, _) in self.iter() {
            deg[c - 1] += 1;
        }
        deg
    }

    pub fn row_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.rows];
        for (r, _, v) in self.iter() {
            sums[r - 1] += v;
        }
        sums
    }

    pub fn col_sums(&self) -> Vec<i64> {
        let mut sums = vec![0; self.cols];
        for (_, c, v) in self.iter() {
            sums[c - 1] += v;
        }
        sums
    }

    /// All stored values in ascending order.
    pub fn entry_multiset(&self) -> Vec<i64> {
        let mut values: Vec<i64> = self.cells.values().copied().collect();
        values.sort_unstable();
        values
    }

    /// True when every row and every column holds as many positive entries as
    /// negative ones. A zero entry has no sign and makes the array unshiftable.
    pub fn is_shiftable(&self) -> bool {
        let mut row_bal = vec![0i64; self.rows];
        let mut col_bal = vec![0i64; self.cols];
        for (r, c, v) in self.iter() {
            if v == 0 {
                return false;
            }
            let d = v.signum();
            row_bal[r - 1] += d;
            col_bal[c - 1] += d;
        }
        row_bal.iter().chain(&col_bal).all(|&b| b == 0)
    }

    /// The common number of filled cells per row, if all rows agree.
    /// `Some(None)` for an array without rows, `None` when rows disagree.
    pub fn uniform_row_degree(&self) -> Option<Option<usize>> {
        uniform(&self.row_degrees())
    }

    pub fn uniform_col_degree(&self) -> Option<Option<usize>> {
        uniform(&self.col_degrees())
    }

    /// The parameters this array would have as an SMR, if its rows and
    /// columns are each uniformly filled and it has at least one cell.
    pub fn inferred_params(&self) -> Option<Params> {
        let r = self.uniform_row_degree()??;
        let s = self.uniform_col_degree()??;
        Params::new(self.rows, self.cols, r, s).ok()
    }

    pub(crate) fn map_values(&self, f: impl Fn(i64) -> i64) -> SignedArray {
        SignedArray {
            rows: self.rows,
            cols: self.cols,
            cells: self.cells.iter().map(|(&k, &v)| (k, f(v))).collect(),
        }
    }
}

fn uniform(degrees: &[usize]) -> Option<Option<usize>> {
    match degrees.split_first() {
        None => Some(None),
        Some((&first, rest)) => rest.iter().all(|&d| d == first).then_some(Some(first)),
    }
}

impl fmt::Display for SignedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::to_grid(self))
    }
}
