//! Existence decision and construction routing for SMR(m, n; r, 2).
//!
//! Every feasible parameter point maps to exactly one route, a short stack
//! program over seeds, direct blocks and transforms. The program is kept as
//! the [`RouteTrace`], and the returned array is obtained by replaying it,
//! so the trace always reproduces the output.

use std::fmt;

use crate::array::{Params, SignedArray};
use crate::direct::{self, CompactBlock};
use crate::error::{Error, Result};
use crate::seeds::{seed, SeedId};
use crate::transforms;
use crate::verify::verify_smr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// `m = 2`, `n = r ≡ 0, 3 (mod 4)`.
    OkM2,
    /// `m, r ≥ 3` and `mr = 2n`.
    OkGeneral,
    /// `mr ≠ 2n`.
    FailArith,
    /// `m = 2`, `n = r ≡ 1, 2 (mod 4)`.
    FailM2Residue,
    /// Some parameter is zero, `m < 2`, or `r < 3` with `m ≠ 2`.
    FailSmall,
    /// `m` and `r` both odd.
    FailParity,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::OkM2 => "OK_M2",
            Reason::OkGeneral => "OK_GENERAL",
            Reason::FailArith => "FAIL_ARITH",
            Reason::FailM2Residue => "FAIL_M2_RESIDUE",
            Reason::FailSmall => "FAIL_SMALL",
            Reason::FailParity => "FAIL_PARITY",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub feasible: bool,
    pub reason: Reason,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = if self.feasible {
            "feasible"
        } else {
            "infeasible"
        };
        write!(f, "{word}: {}", self.reason.code())
    }
}

/// Decides whether an SMR(m, n; r, 2) exists.
///
/// Checks run in a fixed order so each point gets the sharpest code: zero
/// parameters, both `m` and `r` odd, `mr ≠ 2n`, the `m = 2` residue law,
/// and finally the `m, r ≥ 3` lower bounds.
pub fn feasibility(m: usize, n: usize, r: usize) -> Verdict {
    let reason = if m == 0 || n == 0 || r == 0 {
        Reason::FailSmall
    } else if m % 2 == 1 && r % 2 == 1 {
        Reason::FailParity
    } else if m * r != 2 * n {
        Reason::FailArith
    } else if m == 2 {
        if matches!(r % 4, 0 | 3) {
            Reason::OkM2
        } else {
            Reason::FailM2Residue
        }
    } else if m < 2 || r < 3 {
        Reason::FailSmall
    } else {
        Reason::OkGeneral
    };
    Verdict {
        feasible: matches!(reason, Reason::OkM2 | Reason::OkGeneral),
        reason,
    }
}

/// One instruction of a route program. Producers push an array (or, for
/// `BuildA`/`BuildC`, a compact block); unary operators replace the top of
/// the stack; joins pop the attached block `b` and then the shiftable `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RouteStep {
    Seed(SeedId),
    Empty { rows: usize, cols: usize },
    BuildA { m: usize },
    BuildC { m: usize },
    Spread,
    Negate,
    InflateHorizontal { k: usize },
    InflateDiagonal { k: usize },
    JoinHorizontal,
    JoinDiagonal,
}

impl fmt::Display for RouteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RouteStep::Seed(id) => write!(f, "seed {id}"),
            RouteStep::Empty { rows, cols } => write!(f, "empty {rows}x{cols}"),
            RouteStep::BuildA { m } => write!(f, "build_A m={m}"),
            RouteStep::BuildC { m } => write!(f, "build_C m={m}"),
            RouteStep::Spread => f.write_str("spread"),
            RouteStep::Negate => f.write_str("negate"),
            RouteStep::InflateHorizontal { k } => write!(f, "inflate_horizontal k={k}"),
            RouteStep::InflateDiagonal { k } => write!(f, "inflate_diagonal k={k}"),
            RouteStep::JoinHorizontal => f.write_str("join_horizontal"),
            RouteStep::JoinDiagonal => f.write_str("join_diagonal"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RouteTrace {
    /// Route table row (1..=10) that produced the program.
    pub rule: u8,
    pub steps: Vec<RouteStep>,
}

enum Item {
    Array(SignedArray),
    Block(CompactBlock),
}

impl RouteTrace {
    /// Runs the program and returns the single array left on the stack.
    pub fn replay(&self) -> Result<SignedArray> {
        let mut stack: Vec<Item> = Vec::new();
        for (idx, step) in self.steps.iter().enumerate() {
            let bad = |msg: &str| Error::Replay(format!("step {} ({step}): {msg}", idx + 1));
            let pop_array = |stack: &mut Vec<Item>| match stack.pop() {
                Some(Item::Array(a)) => Ok(a),
                Some(Item::Block(_)) => Err(bad("expected an array, found a compact block")),
                None => Err(bad("stack underflow")),
            };
            let item = match *step {
                RouteStep::Seed(id) => Item::Array(seed(id).0),
                RouteStep::Empty { rows, cols } => Item::Array(SignedArray::empty(rows, cols)),
                RouteStep::BuildA { m } => Item::Block(direct::build_a(m)?),
                RouteStep::BuildC { m } => Item::Block(direct::build_c(m)?),
                RouteStep::Spread => match stack.pop() {
                    Some(Item::Block(b)) => Item::Array(direct::spread(&b)?),
                    _ => return Err(bad("expected a compact block")),
                },
                RouteStep::Negate => Item::Array(transforms::negate(&pop_array(&mut stack)?)),
                RouteStep::InflateHorizontal { k } => {
                    Item::Array(transforms::inflate_horizontal(&pop_array(&mut stack)?, k)?)
                }
                RouteStep::InflateDiagonal { k } => {
                    Item::Array(transforms::inflate_diagonal(&pop_array(&mut stack)?, k)?)
                }
                RouteStep::JoinHorizontal => {
                    let b = pop_array(&mut stack)?;
                    let a = pop_array(&mut stack)?;
                    Item::Array(transforms::join_horizontal(&a, &b)?)
                }
                RouteStep::JoinDiagonal => {
                    let b = pop_array(&mut stack)?;
                    let a = pop_array(&mut stack)?;
                    Item::Array(transforms::join_diagonal(&a, &b)?)
                }
            };
            stack.push(item);
        }
        match (stack.pop(), stack.is_empty()) {
            (Some(Item::Array(a)), true) => Ok(a),
            _ => Err(Error::Replay(
                "program must leave exactly one array on the stack".into(),
            )),
        }
    }
}

impl fmt::Display for RouteTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "route: rule {}", self.rule)?;
        for (i, step) in self.steps.iter().enumerate() {
            writeln!(f, "  {}. {step}", i + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub array: SignedArray,
    pub params: Params,
    pub trace: RouteTrace,
}

use RouteStep::*;

/// Shiftable SMR(m, mw/2; w, 2) for even `m` and `w ≡ 0 (mod 4)`; `m x 0`
/// when `w = 0`.
fn even_width4(m: usize, w: usize) -> Vec<RouteStep> {
    if w == 0 {
        vec![Empty { rows: m, cols: 0 }]
    } else {
        vec![
            Seed(SeedId::S2x4),
            InflateDiagonal { k: m / 2 },
            InflateHorizontal { k: w / 4 },
        ]
    }
}

/// Shiftable SMR(m, 3m; 6, 2) for even `m ≥ 4`.
fn even_base6(m: usize) -> Vec<RouteStep> {
    if m.is_multiple_of(4) {
        vec![Seed(SeedId::S4x12), InflateDiagonal { k: m / 4 }]
    } else if m == 6 {
        vec![Seed(SeedId::S6x18)]
    } else {
        vec![
            Seed(SeedId::S4x12),
            InflateDiagonal { k: (m - 6) / 4 },
            Seed(SeedId::S6x18),
            JoinDiagonal,
        ]
    }
}

/// Shiftable SMR(m, 2m; 4, 2) for odd `m ≥ 3`. The 2x4 filler is used with
/// its rows exchanged (equivalently negated).
fn odd_base4(m: usize) -> Vec<RouteStep> {
    match m {
        3 => vec![Seed(SeedId::S3x6)],
        5 => vec![Seed(SeedId::S5x10)],
        _ => {
            let (k, tail) = if m % 4 == 3 {
                ((m - 3) / 2, SeedId::S3x6)
            } else {
                ((m - 5) / 2, SeedId::S5x10)
            };
            vec![
                Seed(SeedId::S2x4),
                Negate,
                InflateDiagonal { k },
                Seed(tail),
                JoinDiagonal,
            ]
        }
    }
}

/// Shiftable SMR(m, 3m; 6, 2) for odd `m ≥ 3`.
fn odd_base6(m: usize) -> Vec<RouteStep> {
    match m {
        3 => vec![Seed(SeedId::S3x9)],
        5 => vec![Seed(SeedId::S5x15)],
        _ => {
            let (k, tail) = if m % 4 == 1 {
                ((m - 5) / 4, SeedId::S5x15)
            } else {
                ((m - 3) / 4, SeedId::S3x9)
            };
            vec![
                Seed(SeedId::S4x12),
                InflateDiagonal { k },
                Seed(tail),
                JoinDiagonal,
            ]
        }
    }
}

fn concat(parts: &[&[RouteStep]]) -> Vec<RouteStep> {
    parts.concat()
}

/// Selects the route for a feasible point. First matching rule wins.
pub fn route(m: usize, n: usize, r: usize) -> Result<RouteTrace> {
    let verdict = feasibility(m, n, r);
    if !verdict.feasible {
        return Err(Error::Infeasible { m, n, r, verdict });
    }
    let (rule, steps) = if m == 2 && r.is_multiple_of(4) {
        (1, vec![Seed(SeedId::S2x4), InflateHorizontal { k: r / 4 }])
    } else if m == 2 {
        let filler = if r == 3 {
            vec![Empty { rows: 2, cols: 0 }]
        } else {
            vec![Seed(SeedId::S2x4), InflateHorizontal { k: (r - 3) / 4 }]
        };
        (
            2,
            concat(&[&filler, &[Seed(SeedId::S2x3), JoinHorizontal, Negate]]),
        )
    } else if m.is_multiple_of(2) {
        match r {
            3 => (3, vec![BuildA { m }, Spread]),
            5 => (4, vec![BuildC { m }, Spread]),
            _ => match r % 4 {
                0 => (5, even_width4(m, r)),
                2 => (
                    6,
                    concat(&[&even_width4(m, r - 6), &even_base6(m), &[JoinHorizontal]]),
                ),
                1 => (
                    7,
                    concat(&[
                        &even_width4(m, r - 5),
                        &[BuildC { m }, Spread, JoinHorizontal],
                    ]),
                ),
                _ => (
                    8,
                    concat(&[
                        &even_width4(m, r - 3),
                        &[BuildA { m }, Spread, JoinHorizontal],
                    ]),
                ),
            },
        }
    } else if r.is_multiple_of(4) {
        (
            9,
            concat(&[&odd_base4(m), &[InflateHorizontal { k: r / 4 }]]),
        )
    } else {
        let filler = if r == 6 {
            vec![Empty { rows: m, cols: 0 }]
        } else {
            concat(&[&odd_base4(m), &[InflateHorizontal { k: (r - 6) / 4 }]])
        };
        (10, concat(&[&filler, &odd_base6(m), &[JoinHorizontal]]))
    };
    Ok(RouteTrace { rule, steps })
}

/// Builds an SMR(m, n; r, 2) for any feasible point.
pub fn construct(m: usize, n: usize, r: usize) -> Result<Construction> {
    let trace = route(m, n, r)?;
    let array = trace.replay()?;
    Ok(Construction {
        array,
        params: Params { m, n, r, s: 2 },
        trace,
    })
}

/// Whether the given route rule promises a shiftable result.
pub fn rule_is_shiftable(rule: u8) -> bool {
    matches!(rule, 1 | 5 | 6 | 9 | 10)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub points: usize,
    pub constructed: usize,
    pub rejected: usize,
    /// Feasible points whose construction failed or did not verify.
    pub failures: Vec<(usize, usize, String)>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "points: {}  constructed+verified: {}  rejected as infeasible: {}  failures: {}",
            self.points,
            self.constructed,
            self.rejected,
            self.failures.len()
        )?;
        for (m, r, why) in &self.failures {
            writeln!(f, "  FAIL m={m} r={r}: {why}")?;
        }
        if self.all_pass() {
            writeln!(f, "all pass")?;
        }
        Ok(())
    }
}

/// Runs construct + verify on every `(m, r)` with `2 ≤ m ≤ max_m`,
/// `1 ≤ r ≤ max_r` and `n = ⌊mr/2⌋`. Infeasible points must be rejected;
/// feasible ones must verify (and be shiftable when their rule says so).
pub fn sweep(max_m: usize, max_r: usize) -> SweepReport {
    let mut report = SweepReport::default();
    for m in 2..=max_m {
        for r in 1..=max_r {
            let n = m * r / 2;
            report.points += 1;
            let verdict = feasibility(m, n, r);
            match construct(m, n, r) {
                Err(Error::Infeasible { .. }) if !verdict.feasible => report.rejected += 1,
                Err(e) => report.failures.push((m, r, e.to_string())),
                Ok(_) if !verdict.feasible => {
                    report
                        .failures
                        .push((m, r, "constructed an infeasible point".into()));
                }
                Ok(c) => match verify_smr(&c.array, &c.params) {
                    Ok(v) if !v.passed() => report.failures.push((m, r, v.to_string())),
                    Err(e) => report.failures.push((m, r, e.to_string())),
                    Ok(_) if rule_is_shiftable(c.trace.rule) && !c.array.is_shiftable() => {
                        report.failures.push((
                            m,
                            r,
                            format!("rule {} output is not shiftable", c.trace.rule),
                        ));
                    }
                    Ok(_) => report.constructed += 1,
                },
            }
        }
    }
    report
}
