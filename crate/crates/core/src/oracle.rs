//! Exhaustive existence search for SMR(m, mr/2; r, 2), independent of the
//! constructions.
//!
//! With two cells per column and a zero column sum, every column holds some
//! `k` and `-k`. Reordering columns puts `±k` in column `k`, so it is enough
//! to decide, for each `k`, which row receives `+k` and which receives `-k`.
//! Values are placed from `k = n` downwards, which lets the row-sum bound
//! cut off hopeless branches early.

use std::fmt;

use crate::array::SignedArray;
use crate::dispatch::feasibility;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Exists,
    NotExists,
    Cutoff,
}

impl fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStatus::Exists => "exists",
            SearchStatus::NotExists => "not_exists",
            SearchStatus::Cutoff => "cutoff",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<SignedArray>,
    /// Placements tried.
    pub nodes: u64,
}

/// For each value `k` (index `k - 1`), the 0-based rows holding `+k` and `-k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PairAssignment {
    pub pos_row: usize,
    pub neg_row: usize,
}

struct Search {
    m: usize,
    r: usize,
    budget: u64,
    nodes: u64,
    sums: Vec<i64>,
    fill: Vec<usize>,
    pairs: Vec<PairAssignment>,
}

enum Step {
    Found,
    Exhausted,
    Cutoff,
}

/// Sum of the `count` largest values in `1..=max`.
fn top_sum(count: usize, max: usize) -> i64 {
    let (c, k) = (count as i64, max as i64);
    c * (2 * k - c + 1) / 2
}

/// Whether `slots` signed values with distinct absolute values in
/// `1..=max` can bring `sum` to zero.
fn completable(sum: i64, slots: usize, max: usize) -> bool {
    match slots {
        0 => sum == 0,
        _ if slots > max || sum.abs() > top_sum(slots, max) => false,
        // every remaining value is used, so the parity is fixed
        _ if slots == max => (sum + top_sum(max, max)) % 2 == 0,
        // one value, or two distinct ones, never cancel
        1 | 2 => sum != 0,
        _ => true,
    }
}

impl Search {
    /// Every row can still be completed with values from `1..=remaining_max`,
    /// each of which is still available with both signs.
    fn rows_viable(&self, remaining_max: usize) -> bool {
        (0..self.m).all(|row| completable(self.sums[row], self.r - self.fill[row], remaining_max))
    }

    fn place(&mut self, k: usize, p: usize, q: usize, sign: i64) {
        let v = sign * k as i64;
        self.sums[p] += v;
        self.sums[q] -= v;
        self.fill[p] = (self.fill[p] as i64 + sign) as usize;
        self.fill[q] = (self.fill[q] as i64 + sign) as usize;
    }

    /// `touched` is the number of rows already holding something; they
    /// always form a prefix because an untouched row is only ever entered
    /// at the lowest untouched index.
    fn run(&mut self, k: usize, touched: usize) -> Step {
        if k == 0 {
            return Step::Found;
        }
        let open = |row: usize| row < self.m && self.fill[row] < self.r;
        let mut candidates = Vec::new();
        for p in (0..=touched).filter(|&p| open(p)) {
            let after_p = if p == touched { touched + 1 } else { touched };
            for q in (0..=after_p).filter(|&q| q != p && open(q)) {
                candidates.push((p, q, if q == after_p { after_p + 1 } else { after_p }));
            }
        }
        // Try +k where the sum is lowest and -k where it is highest first.
        candidates.sort_by_key(|&(p, q, _)| (self.sums[p] - self.sums[q], p, q));

        for (p, q, next_touched) in candidates {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::Cutoff;
            }
            self.place(k, p, q, 1);
            if self.rows_viable(k - 1) {
                self.pairs[k - 1] = PairAssignment {
                    pos_row: p,
                    neg_row: q,
                };
                match self.run(k - 1, next_touched) {
                    Step::Exhausted => {}
                    done => return done,
                }
            }
            self.place(k, p, q, -1);
        }
        Step::Exhausted
    }
}

/// Decides whether an SMR(m, mr/2; r, 2) exists by exhaustive search.
///
/// `NotExists` is only reported after the whole (symmetry-reduced) space has
/// been explored; running out of `budget` placements gives `Cutoff`.
pub fn decide(m: usize, r: usize, budget: u64) -> SearchOutcome {
    let not_exists = SearchOutcome {
        status: SearchStatus::NotExists,
        witness: None,
        nodes: 0,
    };
    if (m * r) % 2 == 1 || m == 0 || r == 0 {
        return not_exists;
    }
    let n = m * r / 2;
    let mut search = Search {
        m,
        r,
        budget,
        nodes: 0,
        sums: vec![0; m],
        fill: vec![0; m],
        pairs: vec![PairAssignment::default(); n],
    };
    let step = search.run(n, 0);
    let nodes = search.nodes;
    match step {
        Step::Found => {
            let cells = search.pairs.iter().enumerate().flat_map(|(idx, a)| {
                let k = idx + 1;
                [
                    (a.pos_row + 1, k, k as i64),
                    (a.neg_row + 1, k, -(k as i64)),
                ]
            });
            let witness = SignedArray::from_cells(m, n, cells)
                .expect("each column receives exactly one +k and one -k");
            SearchOutcome {
                status: SearchStatus::Exists,
                witness: Some(witness),
                nodes,
            }
        }
        Step::Exhausted => SearchOutcome {
            nodes,
            ..not_exists
        },
        Step::Cutoff => SearchOutcome {
            status: SearchStatus::Cutoff,
            witness: None,
            nodes,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckEntry {
    pub m: usize,
    pub r: usize,
    pub theorem: bool,
    pub oracle: SearchStatus,
    pub nodes: u64,
}

impl CrossCheckEntry {
    pub fn disagrees(&self) -> bool {
        match self.oracle {
            SearchStatus::Exists => !self.theorem,
            SearchStatus::NotExists => self.theorem,
            SearchStatus::Cutoff => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub entries: Vec<CrossCheckEntry>,
}

impl CrossCheckReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &CrossCheckEntry> {
        self.entries.iter().filter(|e| e.disagrees())
    }

    pub fn cutoffs(&self) -> impl Iterator<Item = &CrossCheckEntry> {
        self.entries
            .iter()
            .filter(|e| e.oracle == SearchStatus::Cutoff)
    }

    pub fn passed(&self) -> bool {
        self.disagreements().next().is_none()
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>3} {:>3} {:>4} {:>10} {:>11} {:>12}",
            "m", "r", "n", "theorem", "oracle", "nodes"
        )?;
        for e in &self.entries {
            let flag = if e.disagrees() { "  DISAGREE" } else { "" };
            writeln!(
                f,
                "{:>3} {:>3} {:>4} {:>10} {:>11} {:>12}{flag}",
                e.m,
                e.r,
                e.m * e.r / 2,
                if e.theorem { "exists" } else { "not_exists" },
                e.oracle.to_string(),
                e.nodes
            )?;
        }
        let disagreements = self.disagreements().count();
        let cutoffs = self.cutoffs().count();
        writeln!(f, "disagreements: {disagreements}  cutoffs: {cutoffs}")
    }
}

/// Compares the exhaustive search with the closed-form existence criterion
/// for every `1 ≤ m ≤ max_m`, `1 ≤ r ≤ max_r`.
pub fn cross_check(max_m: usize, max_r: usize, budget: u64) -> CrossCheckReport {
    let mut entries = Vec::new();
    for m in 1..=max_m {
        for r in 1..=max_r {
            let outcome = decide(m, r, budget);
            entries.push(CrossCheckEntry {
                m,
                r,
                theorem: feasibility(m, m * r / 2, r).feasible,
                oracle: outcome.status,
                nodes: outcome.nodes,
            });
        }
    }
    CrossCheckReport { entries }
}
