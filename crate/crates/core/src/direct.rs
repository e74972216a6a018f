//! Direct constructions of SMR(m, 3m/2; 3, 2) and SMR(m, 5m/2; 5, 2) for
//! even `m`.
//!
//! Both go through a compact `m x 3` or `m x 5` block whose rows already sum
//! to zero and whose values are exactly `±1..±cm/2`. Spreading moves every
//! value `k` to column `|k|`, which makes each column hold `k` and `-k`.

use std::collections::HashSet;

use crate::array::SignedArray;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// The `m x 3` block.
    A,
    /// The `m x 5` block for `m ≡ 0 (mod 4)`.
    C,
    /// The repaired `m x 5` block for `m ≡ 2 (mod 4)`.
    CPrime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactBlock {
    pub array: SignedArray,
    pub kind: BlockKind,
}

impl CompactBlock {
    pub fn new(array: SignedArray, kind: BlockKind) -> Self {
        CompactBlock { array, kind }
    }

    /// Rows (1-based) that contain some value together with its negation.
    pub fn opposed_rows(&self) -> Vec<usize> {
        opposed_pairs(&self.array)
            .into_iter()
            .map(|(r, _)| r)
            .collect()
    }
}

fn opposed_pairs(a: &SignedArray) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for row in 1..=a.rows() {
        let values = a.row_values(row);
        let seen: HashSet<i64> = values.iter().copied().collect();
        if let Some(&v) = values.iter().find(|&&v| v > 0 && seen.contains(&-v)) {
            out.push((row, v));
        }
    }
    out
}

fn require_even_m(block: &'static str, m: usize, min: usize) -> Result<()> {
    if m % 2 == 1 || m < min {
        Err(Error::BlockSize { block, m, min })
    } else {
        Ok(())
    }
}

/// The `m x 3` block: for `i ≤ m/2` row `i` is `(i, 3m/2 - 2i + 1, -3m/2 + i - 1)`,
/// for `i > m/2` it is `(m/2 - i, -i, -m/2 + 2i)`.
pub fn build_a(m: usize) -> Result<CompactBlock> {
    require_even_m("A", m, 2)?;
    let h = (m / 2) as i64;
    let cells = (1..=m as i64).flat_map(|i| {
        let row = if i <= h {
            [i, 3 * h - 2 * i + 1, -3 * h + i - 1]
        } else {
            [h - i, -i, -h + 2 * i]
        };
        row.into_iter()
            .enumerate()
            .map(move |(j, v)| (i as usize, j + 1, v))
    });
    let array = SignedArray::from_cells(m, 3, cells)?;
    Ok(CompactBlock::new(array, BlockKind::A))
}

/// The `m x 5` block straight from its column formulas, without the repair
/// needed when `m ≡ 2 (mod 4)`.
pub fn build_c_unrepaired(m: usize) -> Result<SignedArray> {
    require_even_m("C", m, 4)?;
    let h = (m / 2) as i64;
    let mm = m as i64;
    let cells = (1..=mm).flat_map(|i| {
        let row = if i <= h {
            [i, h + 2 * i - 1, -mm - i, -3 * h - i, 2 * mm - i + 1]
        } else {
            [
                h - i,
                -3 * h + i - 1,
                5 * h - 2 * i + 2,
                3 * h + i,
                -3 * mm + i - 1,
            ]
        };
        row.into_iter()
            .enumerate()
            .map(move |(j, v)| (i as usize, j + 1, v))
    });
    SignedArray::from_cells(m, 5, cells)
}

/// The `m x 5` block. When `m ≡ 2 (mod 4)` the unrepaired block has
/// `d = -e` in rows `(m+2)/4` and `(3m+2)/4`; those rows trade their
/// column 1 and column 5 entries with the row just above them, which keeps
/// every row sum at zero (the two trades move `+1` and `-1`).
pub fn build_c(m: usize) -> Result<CompactBlock> {
    let raw = build_c_unrepaired(m)?;
    if m.is_multiple_of(4) {
        return Ok(CompactBlock::new(raw, BlockKind::C));
    }
    let top = (m + 2) / 4;
    let bottom = (3 * m + 2) / 4;
    let swaps = [(top - 1, top), (bottom - 1, bottom)];
    let cells = raw.iter().map(|(i, j, v)| {
        if j != 1 && j != 5 {
            return (i, j, v);
        }
        let partner = swaps.iter().find_map(|&(x, y)| {
            if i == x {
                Some(y)
            } else if i == y {
                Some(x)
            } else {
                None
            }
        });
        match partner {
            Some(p) => (i, j, raw.get(p, j).expect("compact blocks are full")),
            None => (i, j, v),
        }
    });
    let array = SignedArray::from_cells(m, 5, cells)?;
    Ok(CompactBlock::new(array, BlockKind::CPrime))
}

/// Moves each entry `k` of the block to column `|k|` of its row.
///
/// Fails with [`Error::OpposedPair`] if some row holds both `k` and `-k`,
/// since both would land in the same cell.
pub fn spread(block: &CompactBlock) -> Result<SignedArray> {
    let a = &block.array;
    if let Some(&(row, value)) = opposed_pairs(a).first() {
        return Err(Error::OpposedPair { row, value });
    }
    let width = a
        .iter()
        .map(|(_, _, v)| v.unsigned_abs())
        .max()
        .unwrap_or(0) as usize;
    SignedArray::from_cells(
        a.rows(),
        width,
        a.iter().map(|(i, _, v)| (i, v.unsigned_abs() as usize, v)),
    )
}
