//! Checker for the SMR axioms. Works for any `s`, not only `s = 2`.

use std::collections::BTreeMap;
use std::fmt;

use crate::array::{Params, SignedArray};
use crate::error::{Error, Result};

/// One failed axiom, located at the offending line or value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    RowCount {
        row: usize,
        expected: usize,
        found: usize,
    },
    ColumnCount {
        col: usize,
        expected: usize,
        found: usize,
    },
    /// A value occurs more than once.
    DuplicateValue {
        value: i64,
        count: usize,
    },
    /// A member of the support set is absent.
    MissingValue {
        value: i64,
    },
    /// A value outside the support set is present.
    UnexpectedValue {
        value: i64,
    },
    RowSum {
        row: usize,
        sum: i64,
    },
    ColumnSum {
        col: usize,
        sum: i64,
    },
}

impl Violation {
    /// Short machine-readable axiom name.
    pub fn axiom(&self) -> &'static str {
        match self {
            Violation::RowCount { .. } => "row-count",
            Violation::ColumnCount { .. } => "column-count",
            Violation::DuplicateValue { .. } => "duplicate-value",
            Violation::MissingValue { .. } | Violation::UnexpectedValue { .. } => "support-set",
            Violation::RowSum { .. } => "row-sum",
            Violation::ColumnSum { .. } => "column-sum",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::RowCount {
                row,
                expected,
                found,
            } => {
                write!(
                    f,
                    "row-count: row {row} has {found} filled cells, expected {expected}"
                )
            }
            Violation::ColumnCount {
                col,
                expected,
                found,
            } => {
                write!(
                    f,
                    "column-count: column {col} has {found} filled cells, expected {expected}"
                )
            }
            Violation::DuplicateValue { value, count } => {
                write!(f, "duplicate-value: {value} appears {count} times")
            }
            Violation::MissingValue { value } => write!(f, "support-set: {value} is missing"),
            Violation::UnexpectedValue { value } => {
                write!(f, "support-set: {value} is not in the support set")
            }
            Violation::RowSum { row, sum } => write!(f, "row-sum: row {row} sums to {sum}"),
            Violation::ColumnSum { col, sum } => {
                write!(f, "column-sum: column {col} sums to {sum}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub params: Params,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Whether any violation of the given axiom name was recorded.
    pub fn has(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom() == axiom)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "pass: array is an {}", self.params);
        }
        writeln!(
            f,
            "fail: {} violation(s) of {}",
            self.violations.len(),
            self.params
        )?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Checks every SMR axiom and reports all violations, not just the first.
pub fn verify_smr(a: &SignedArray, p: &Params) -> Result<VerificationReport> {
    if a.rows() != p.m || a.cols() != p.n {
        return Err(Error::DimensionMismatch {
            rows: p.m,
            cols: p.n,
            found_rows: a.rows(),
            found_cols: a.cols(),
        });
    }
    let mut violations = Vec::new();

    for (i, found) in a.row_degrees().into_iter().enumerate() {
        if found != p.r {
            violations.push(Violation::RowCount {
                row: i + 1,
                expected: p.r,
                found,
            });
        }
    }
    for (j, found) in a.col_degrees().into_iter().enumerate() {
        if found != p.s {
            violations.push(Violation::ColumnCount {
                col: j + 1,
                expected: p.s,
                found,
            });
        }
    }

    let support = p.support_set();
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for (_, _, v) in a.iter() {
        *counts.entry(v).or_default() += 1;
    }
    for (&value, &count) in &counts {
        if count > 1 {
            violations.push(Violation::DuplicateValue { value, count });
        }
    }
    for value in support.values() {
        if !counts.contains_key(&value) {
            violations.push(Violation::MissingValue { value });
        }
    }
    for &value in counts.keys() {
        if !support.contains(value) {
            violations.push(Violation::UnexpectedValue { value });
        }
    }

    for (i, sum) in a.row_sums().into_iter().enumerate() {
        if sum != 0 {
            violations.push(Violation::RowSum { row: i + 1, sum });
        }
    }
    for (j, sum) in a.col_sums().into_iter().enumerate() {
        if sum != 0 {
            violations.push(Violation::ColumnSum { col: j + 1, sum });
        }
    }

    Ok(VerificationReport {
        params: *p,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::{seed, SeedId};

    #[test]
    fn figure_one_passes() {
        let (a, p) = seed(SeedId::S2x4);
        let report = verify_smr(&a, &p).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn single_mutation_breaks_three_axioms() {
        let (a, p) = seed(SeedId::S2x4);
        let mutated = SignedArray::from_cells(
            a.rows(),
            a.cols(),
            a.iter().map(|(r, c, v)| {
                if (r, c) == (1, 1) {
                    (r, c, 2)
                } else {
                    (r, c, v)
                }
            }),
        )
        .unwrap();
        let report = verify_smr(&mutated, &p).unwrap();
        assert!(!report.passed());
        assert!(report.has("duplicate-value"));
        assert!(report.has("row-sum"));
        assert!(report.has("support-set"));
        assert!(report
            .violations
            .contains(&Violation::RowSum { row: 1, sum: 1 }));
        assert!(report
            .violations
            .contains(&Violation::MissingValue { value: 1 }));
    }

    #[test]
    fn deleted_entry_reports_counts_and_support() {
        let (a, p) = seed(SeedId::S2x4);
        let cut = SignedArray::from_cells(
            a.rows(),
            a.cols(),
            a.iter().filter(|&(r, c, _)| (r, c) != (2, 4)),
        )
        .unwrap();
        let report = verify_smr(&cut, &p).unwrap();
        assert!(report.violations.contains(&Violation::RowCount {
            row: 2,
            expected: 4,
            found: 3
        }));
        assert!(report.violations.contains(&Violation::ColumnCount {
            col: 4,
            expected: 2,
            found: 1
        }));
        assert!(report
            .violations
            .contains(&Violation::MissingValue { value: -4 }));
    }

    #[test]
    fn figure_six_passes() {
        let a = crate::format::parse_grid(
            "1 . -3 -4 . 6 . . . . . . . .
             -1 2 . 4 -5 . . . . . . . . .
             . -2 3 . 5 -6 . . . . . . . .
             . . . . . . -7 8 9 -10 . . . .
             . . . . . . 7 -8 -9 10 . . . .
             . . . . . . . . . . -11 12 13 -14
             . . . . . . . . . . 11 -12 -13 14",
        )
        .unwrap();
        let report = verify_smr(&a, &Params::new(7, 14, 4, 2).unwrap()).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let (a, _) = seed(SeedId::S2x4);
        let p = Params::new(2, 3, 3, 2).unwrap();
        assert!(matches!(
            verify_smr(&a, &p),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn general_s_with_zero() {
        // full 3x3, odd mr: support is {0, ±1, ±2, ±3, ±4}
        let a = crate::format::parse_grid("-4 0 4\n1 2 -3\n3 -2 -1").unwrap();
        let p = Params::new(3, 3, 3, 3).unwrap();
        assert!(verify_smr(&a, &p).unwrap().passed());
        let b = crate::format::parse_grid("-4 0 4\n1 2 -3\n3 -2 -2").unwrap();
        let report = verify_smr(&b, &p).unwrap();
        assert!(report.has("duplicate-value"));
        assert!(report.has("support-set"));
    }

    #[test]
    fn pure_function() {
        let (a, p) = seed(SeedId::S5x15);
        assert_eq!(verify_smr(&a, &p).unwrap(), verify_smr(&a, &p).unwrap());
    }
}
