//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach the terminal.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use smr_core::direct::{build_a, build_c, spread, BlockKind};
use smr_core::format::{from_csv, from_json, parse_grid, to_csv, to_json};
use smr_core::oracle::{cross_check, decide, DEFAULT_BUDGET};
use smr_core::transforms::{
    inflate_diagonal, inflate_horizontal, join_diagonal, join_horizontal, negate, shift,
};
use smr_core::{
    construct, feasibility, seed, verify_smr, Error, Params, SearchStatus, SeedId, SignedArray,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn grid(text: &str) -> SignedArray {
    parse_grid(text).expect("figure grids parse")
}

fn verifies(a: &SignedArray, m: usize, n: usize, r: usize) -> bool {
    let p = Params::new(m, n, r, 2).unwrap();
    verify_smr(a, &p).map(|v| v.passed()).unwrap_or(false)
}

fn seed_fidelity() -> Outcome {
    for id in SeedId::ALL {
        let (a, p) = seed(id);
        check(verify_smr(&a, &p).unwrap().passed(), || {
            format!("{} does not verify", id.name())
        })?;
        let want = id != SeedId::S2x3;
        check(a.is_shiftable() == want, || {
            format!("{} shiftable={}", id.name(), a.is_shiftable())
        })?;
    }
    Ok("8 seeds verify, 7 shiftable (all but S_2x3)".into())
}

fn figures() -> Outcome {
    let s24 = seed(SeedId::S2x4).0;
    let fig2 = grid(
        "1 -2 -3 4 5 -6 -7 8 9 -10 -11 12
         -1 2 3 -4 -5 6 7 -8 -9 10 11 -12",
    );
    let fig3 = grid(
        "1 -2 -3 4 . . . . . . . .
         -1 2 3 -4 . . . . . . . .
         . . . . 5 -6 -7 8 . . . .
         . . . . -5 6 7 -8 . . . .
         . . . . . . . . 9 -10 -11 12
         . . . . . . . . -9 10 11 -12",
    );
    let fig4 = grid(
        "-1 -2 3 -4 5 6 -7 -8 9 10 -11
         1 2 -3 4 -5 -6 7 8 -9 -10 11",
    );
    let fig6 = grid(
        "1 . -3 -4 . 6 . . . . . . . .
         -1 2 . 4 -5 . . . . . . . . .
         . -2 3 . 5 -6 . . . . . . . .
         . . . . . . -7 8 9 -10 . . . .
         . . . . . . 7 -8 -9 10 . . . .
         . . . . . . . . . . -11 12 13 -14
         . . . . . . . . . . 11 -12 -13 14",
    );
    let a8 = grid("1 11 -12\n2 9 -11\n3 7 -10\n4 5 -9\n-1 -5 6\n-2 -6 8\n-3 -7 10\n-4 -8 12");
    let a10 = grid(
        "1 14 -15\n2 12 -14\n3 10 -13\n4 8 -12\n5 6 -11
         -1 -6 7\n-2 -7 9\n-3 -8 11\n-4 -9 13\n-5 -10 15",
    );
    let fig9 = grid(
        "1 . . . . . . . . . 11 -12
         . 2 . . . . . . 9 . -11 .
         . . 3 . . . 7 . . -10 . .
         . . . 4 5 . . . -9 . . .
         -1 . . . -5 6 . . . . . .
         . -2 . . . -6 . 8 . . . .
         . . -3 . . . -7 . . 10 . .
         . . . -4 . . . -8 . . . 12",
    );
    let c8 = grid(
        "1 5 -9 -13 16\n2 7 -10 -14 15\n3 9 -11 -15 14\n4 11 -12 -16 13
         -1 -8 12 17 -20\n-2 -7 10 18 -19\n-3 -6 8 19 -18\n-4 -5 6 20 -17",
    );
    let c10 = grid(
        "1 6 -11 -16 20\n3 8 -12 -17 18\n2 10 -13 -18 19\n4 12 -14 -19 17
         5 14 -15 -20 16\n-1 -10 15 21 -25\n-3 -9 13 22 -23\n-2 -8 11 23 -24
         -4 -7 9 24 -22\n-5 -6 7 25 -21",
    );

    let c2_11 = construct(2, 11, 11).map_err(|e| e.to_string())?;
    let c7_14 = construct(7, 14, 4).map_err(|e| e.to_string())?;
    let cases: [(&str, SignedArray, &SignedArray); 10] = [
        (
            "inflate_horizontal(S_2x4, 3)",
            inflate_horizontal(&s24, 3).unwrap(),
            &fig2,
        ),
        (
            "inflate_diagonal(S_2x4, 3)",
            inflate_diagonal(&s24, 3).unwrap(),
            &fig3,
        ),
        ("construct(2, 11, 11)", c2_11.array, &fig4),
        ("construct(7, 14, 4)", c7_14.array, &fig6),
        ("build_a(8)", build_a(8).unwrap().array, &a8),
        ("build_a(10)", build_a(10).unwrap().array, &a10),
        (
            "spread(build_a(8))",
            spread(&build_a(8).unwrap()).unwrap(),
            &fig9,
        ),
        ("build_c(8)", build_c(8).unwrap().array, &c8),
        ("build_c(10)", build_c(10).unwrap().array, &c10),
        (
            "construct(2, 12, 12)",
            construct(2, 12, 12).unwrap().array,
            &fig2,
        ),
    ];
    for (name, got, want) in &cases {
        check(got == *want, || format!("{name} differs:\n{got}"))?;
    }
    check(c2_11.trace.rule == 2 && c7_14.trace.rule == 9, || {
        format!("rules {} and {}", c2_11.trace.rule, c7_14.trace.rule)
    })?;
    check(build_c(10).unwrap().kind == BlockKind::CPrime, || {
        "C(10) kind".into()
    })?;
    Ok(format!("{} figures match cell for cell", cases.len()))
}

/// The existence criterion, written out independently of the dispatcher.
fn expected_code(m: usize, n: usize, r: usize) -> &'static str {
    if m == 0 || n == 0 || r == 0 {
        "FAIL_SMALL"
    } else if m % 2 == 1 && r % 2 == 1 {
        "FAIL_PARITY"
    } else if m * r != 2 * n {
        "FAIL_ARITH"
    } else if m == 2 {
        if r.is_multiple_of(4) || r % 4 == 3 {
            "OK_M2"
        } else {
            "FAIL_M2_RESIDUE"
        }
    } else if m < 2 || r < 3 {
        "FAIL_SMALL"
    } else {
        "OK_GENERAL"
    }
}

fn sweep_40() -> Outcome {
    let (mut built, mut rejected) = (0, 0);
    for m in 2..=40 {
        for r in 3..=40 {
            let n = m * r / 2;
            // also probe a column count off the arithmetic line
            for n in [n, n + 1] {
                let verdict = feasibility(m, n, r);
                let want = expected_code(m, n, r);
                check(verdict.reason.code() == want, || {
                    format!(
                        "({m},{n},{r}): {} but expected {want}",
                        verdict.reason.code()
                    )
                })?;
                match construct(m, n, r) {
                    Ok(c) => {
                        check(verdict.feasible, || format!("({m},{n},{r}) built"))?;
                        check(verifies(&c.array, m, n, r), || {
                            format!("({m},{n},{r}) does not verify")
                        })?;
                        built += 1;
                    }
                    Err(Error::Infeasible { verdict: v, .. }) => {
                        check(!verdict.feasible && v == verdict, || {
                            format!("({m},{n},{r}) rejected as {v}")
                        })?;
                        rejected += 1;
                    }
                    Err(e) => return Err(format!("({m},{n},{r}): {e}")),
                }
            }
        }
    }
    Ok(format!(
        "{built} built and verified, {rejected} rejected with the expected code"
    ))
}

fn direct_range() -> Outcome {
    for m in (2..=200).step_by(2) {
        let b = spread(&build_a(m).unwrap()).map_err(|e| format!("A({m}): {e}"))?;
        check(verifies(&b, m, 3 * m / 2, 3), || format!("A({m}) fails"))?;
        if m >= 4 {
            let blk = build_c(m).unwrap();
            let want = if m % 4 == 0 {
                BlockKind::C
            } else {
                BlockKind::CPrime
            };
            check(blk.kind == want, || format!("C({m}) kind {:?}", blk.kind))?;
            let b = spread(&blk).map_err(|e| format!("C({m}): {e}"))?;
            check(verifies(&b, m, 5 * m / 2, 5), || format!("C({m}) fails"))?;
        }
    }
    Ok("spread(A(m)) for even m <= 200, spread(C(m)) for even 4 <= m <= 200".into())
}

fn oracle_agreement() -> Outcome {
    let report = cross_check(6, 8, DEFAULT_BUDGET);
    let bad: Vec<_> = report.disagreements().map(|e| (e.m, e.r)).collect();
    check(bad.is_empty(), || format!("disagreements at {bad:?}"))?;
    let cut: Vec<_> = report.cutoffs().map(|e| (e.m, e.r)).collect();
    check(cut.is_empty(), || format!("cutoffs at {cut:?}"))?;
    check(
        decide(2, 5, DEFAULT_BUDGET).status == SearchStatus::NotExists,
        || "decide(2,5) is not not_exists".into(),
    )?;
    for n in 1..=16 {
        let want = if n % 4 == 0 || n % 4 == 3 {
            SearchStatus::Exists
        } else {
            SearchStatus::NotExists
        };
        let got = decide(2, n, DEFAULT_BUDGET);
        check(got.status == want, || {
            format!("decide(2,{n}) = {}", got.status)
        })?;
        if let Some(w) = &got.witness {
            check(verifies(w, 2, n, n), || format!("decide(2,{n}) witness"))?;
        }
    }
    let max_nodes = report.entries.iter().map(|e| e.nodes).max().unwrap_or(0);
    Ok(format!(
        "{} points agree, no cutoffs (max {max_nodes} nodes); two-row law holds for n <= 16",
        report.entries.len()
    ))
}

fn shiftable_smr() -> impl Strategy<Value = SignedArray> {
    let ids = [
        SeedId::S2x4,
        SeedId::S4x12,
        SeedId::S6x18,
        SeedId::S5x10,
        SeedId::S3x6,
        SeedId::S5x15,
        SeedId::S3x9,
    ];
    (
        prop::sample::select(ids.to_vec()),
        1usize..=3,
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(id, k, diagonal, flip)| {
            let s = seed(id).0;
            let a = if diagonal {
                inflate_diagonal(&s, k).unwrap()
            } else {
                inflate_horizontal(&s, k).unwrap()
            };
            if flip {
                negate(&a)
            } else {
                a
            }
        })
}

fn feasible_point() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=16, 3usize..=16)
        .prop_filter("feasible", |&(m, r)| feasibility(m, m * r / 2, r).feasible)
}

fn property_suite() -> Outcome {
    const CASES: u32 = 1000;
    let cfg = || Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new(cfg());
    runner
        .run(&(shiftable_smr(), 0u64..100_000), |(a, t)| {
            let b = shift(&a, t).unwrap();
            prop_assert!(b.row_sums().iter().chain(&b.col_sums()).all(|&s| s == 0));
            prop_assert!(b.is_shiftable());
            Ok(())
        })
        .map_err(|e| format!("shift: {e}"))?;

    let mut runner = TestRunner::new(cfg());
    let bad = seed(SeedId::S2x3).0;
    runner
        .run(&(shiftable_smr(), shiftable_smr()), |(a, b)| {
            let unshiftable = matches!(join_diagonal(&bad, &b), Err(Error::NotShiftable { .. }));
            prop_assert!(unshiftable);
            let mut odd = SignedArray::from_cells(a.rows(), 1, [(1, 1, 1)]).unwrap();
            let e = join_horizontal(&a, &odd);
            prop_assert!(matches!(e, Err(Error::OddCellCount { .. })), "{:?}", e);
            odd = SignedArray::from_cells(1, 1, [(1, 1, 1)]).unwrap();
            let e = join_diagonal(&a, &odd);
            prop_assert!(matches!(e, Err(Error::OddCellCount { .. })), "{:?}", e);
            let e = join_horizontal(&a, &b);
            if a.rows() != b.rows() {
                prop_assert!(matches!(e, Err(Error::RowCountMismatch { .. })), "{:?}", e);
            } else {
                prop_assert!(e.is_ok());
            }
            let rows_a = a.row_degrees()[0];
            let rows_b = b.row_degrees()[0];
            let e = join_diagonal(&a, &b);
            if rows_a != rows_b {
                prop_assert!(matches!(e, Err(Error::DegreeMismatch { .. })), "{:?}", e);
            } else {
                prop_assert!(e.is_ok());
            }
            Ok(())
        })
        .map_err(|e| format!("joins: {e}"))?;

    let mut runner = TestRunner::new(cfg());
    runner
        .run(&feasible_point(), |(m, r)| {
            let c = construct(m, m * r / 2, r).unwrap();
            let json = to_json(&c.array, &c.params);
            let (a, p) = from_json(&json).unwrap();
            prop_assert_eq!(&a, &c.array);
            prop_assert_eq!(to_json(&a, &p), json);
            let csv = to_csv(&c.array, &c.params);
            let (a, p) = from_csv(&csv).unwrap();
            prop_assert_eq!(&a, &c.array);
            prop_assert_eq!(to_csv(&a, &p), csv);
            Ok(())
        })
        .map_err(|e| format!("round trip: {e}"))?;
    Ok(format!("3 properties x {CASES} cases"))
}

fn determinism() -> Outcome {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_smr"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())
    };
    let commands: [&[&str]; 4] = [
        &["gen", "9", "63", "14", "--json"],
        &["gen", "14", "35", "5", "--csv", "--trace"],
        &["gen", "2", "12", "12"],
        &["sweep", "--max-m", "40", "--max-r", "40"],
    ];
    for args in commands {
        let (x, y) = (run(args)?, run(args)?);
        check(x.status.success(), || {
            format!("{args:?} exited {:?}", x.status)
        })?;
        check(x.stdout == y.stdout, || {
            format!("{args:?} differs between runs")
        })?;
    }
    Ok(format!(
        "{} commands byte-identical across two runs",
        commands.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("seed fidelity", seed_fidelity),
        ("figure reproduction", figures),
        ("constructive sweep 2<=m<=40, 3<=r<=40", sweep_40),
        ("direct constructions m<=200", direct_range),
        ("oracle vs. existence criterion", oracle_agreement),
        ("property suite", property_suite),
        ("determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|e| Err(panic_message(e.as_ref())));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{}]", i + 1, secs(took)),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why} [{}]", i + 1, secs(took));
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn panic_message(e: &(dyn std::any::Any + Send)) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panicked".into())
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
