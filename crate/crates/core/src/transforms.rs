//! Composition operators on shiftable arrays.
//!
//! A shiftable array keeps all of its line sums when every absolute value is
//! raised by the same amount, so shifted copies can be laid side by side or
//! along a block diagonal without disturbing the zero sums. The shift unit
//! for an SMR is half its cell count, which is also its largest absolute
//! value; shifted copies therefore never reuse a value.
//!
//! Empty operands are accepted everywhere and behave as identities.

use crate::array::SignedArray;
use crate::error::{Error, Result};

/// Raises the absolute value of every entry by `t`.
pub fn shift(a: &SignedArray, t: u64) -> Result<SignedArray> {
    require_shiftable(a, "shift")?;
    Ok(shifted(a, t))
}

/// Flips the sign of every entry. Any SMR stays an SMR, and shiftability is
/// preserved.
pub fn negate(a: &SignedArray) -> SignedArray {
    a.map_values(|v| -v)
}

/// `k` shifted copies of `a` side by side: copy `l` (0-based) is shifted by
/// `l * |a| / 2` and starts at column `l * n + 1`. Turns a shiftable
/// SMR(m,n;r,s) into a shiftable SMR(m,kn;kr,s); `k = 0` gives an `m x 0`
/// array.
pub fn inflate_horizontal(a: &SignedArray, k: usize) -> Result<SignedArray> {
    require_shiftable(a, "inflate_horizontal")?;
    let unit = half_cells(a);
    let mut out = SignedArray::empty(a.rows(), k * a.cols());
    for l in 0..k {
        place(&mut out, &shifted(a, l as u64 * unit), 0, l * a.cols());
    }
    Ok(out)
}

/// `k` shifted copies of `a` along the block diagonal, copy `l` shifted by
/// `l * |a| / 2`. Turns a shiftable SMR(m,n;r,s) into a shiftable
/// SMR(km,kn;r,s); `k = 0` gives a `0 x 0` array.
pub fn inflate_diagonal(a: &SignedArray, k: usize) -> Result<SignedArray> {
    require_shiftable(a, "inflate_diagonal")?;
    let unit = half_cells(a);
    let mut out = SignedArray::empty(k * a.rows(), k * a.cols());
    for l in 0..k {
        place(
            &mut out,
            &shifted(a, l as u64 * unit),
            l * a.rows(),
            l * a.cols(),
        );
    }
    Ok(out)
}

/// Puts `b` in the leading columns and `a`, shifted past the values of `b`,
/// after it. With `a` a shiftable SMR(m,N;R,s) and `b` an SMR(m,n';r',s)
/// the result is an SMR(m,N+n';R+r',s), shiftable exactly when `b` is.
pub fn join_horizontal(a: &SignedArray, b: &SignedArray) -> Result<SignedArray> {
    const OP: &str = "join_horizontal";
    if a.rows() != b.rows() {
        return Err(Error::RowCountMismatch {
            op: OP,
            left: a.rows(),
            right: b.rows(),
        });
    }
    require_shiftable(a, OP)?;
    require_even(b, OP)?;
    let (sa, sb) = (col_degree(a, OP)?, col_degree(b, OP)?);
    require_same(sa, sb, OP, "column")?;

    let mut out = SignedArray::empty(b.rows(), b.cols() + a.cols());
    place(&mut out, b, 0, 0);
    place(&mut out, &shifted(a, half_cells(b)), 0, b.cols());
    Ok(out)
}

/// Puts `b` in the top-left corner and `a`, shifted past the values of `b`,
/// in the bottom-right corner. With `a` a shiftable SMR(M,N;r,s) and `b` an
/// SMR(m',n';r,s) the result is an SMR(M+m',N+n';r,s), shiftable exactly when
/// `b` is.
pub fn join_diagonal(a: &SignedArray, b: &SignedArray) -> Result<SignedArray> {
    const OP: &str = "join_diagonal";
    require_shiftable(a, OP)?;
    require_even(b, OP)?;
    require_same(row_degree(a, OP)?, row_degree(b, OP)?, OP, "row")?;
    require_same(col_degree(a, OP)?, col_degree(b, OP)?, OP, "column")?;

    let mut out = SignedArray::empty(b.rows() + a.rows(), b.cols() + a.cols());
    place(&mut out, b, 0, 0);
    place(&mut out, &shifted(a, half_cells(b)), b.rows(), b.cols());
    Ok(out)
}

fn shifted(a: &SignedArray, t: u64) -> SignedArray {
    let t = t as i64;
    a.map_values(|v| match v {
        v if v > 0 => v + t,
        v if v < 0 => v - t,
        _ => 0,
    })
}

fn half_cells(a: &SignedArray) -> u64 {
    a.len() as u64 / 2
}

fn place(out: &mut SignedArray, block: &SignedArray, row_off: usize, col_off: usize) {
    for (i, j, v) in block.iter() {
        out.insert(i + row_off, j + col_off, v)
            .expect("blocks are placed in disjoint regions inside the output");
    }
}

fn require_shiftable(a: &SignedArray, op: &'static str) -> Result<()> {
    if a.is_shiftable() {
        Ok(())
    } else {
        Err(Error::NotShiftable { op })
    }
}

fn require_even(b: &SignedArray, op: &'static str) -> Result<()> {
    if b.len().is_multiple_of(2) {
        Ok(())
    } else {
        Err(Error::OddCellCount { op, cells: b.len() })
    }
}

fn row_degree(a: &SignedArray, op: &'static str) -> Result<Option<usize>> {
    a.uniform_row_degree()
        .ok_or(Error::Irregular { op, line: "row" })
}

fn col_degree(a: &SignedArray, op: &'static str) -> Result<Option<usize>> {
    a.uniform_col_degree()
        .ok_or(Error::Irregular { op, line: "column" })
}

fn require_same(
    left: Option<usize>,
    right: Option<usize>,
    op: &'static str,
    line: &'static str,
) -> Result<()> {
    match (left, right) {
        (Some(l), Some(r)) if l != r => Err(Error::DegreeMismatch {
            op,
            line,
            left: l,
            right: r,
        }),
        _ => Ok(()),
    }
}
