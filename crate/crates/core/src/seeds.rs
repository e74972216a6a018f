//! Fixed base arrays that the recursive constructions start from.
//!
//! Each seed is stored as a text grid and checked against its parameters
//! every time it is loaded.

use std::fmt;
use std::str::FromStr;

use crate::array::{Params, SignedArray};
use crate::error::{Error, Result};
use crate::format::parse_grid;
use crate::verify::verify_smr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeedId {
    /// Shiftable SMR(2,4;4,2).
    S2x4,
    /// SMR(2,3;3,2). The only seed that is not shiftable.
    S2x3,
    /// Shiftable SMR(4,12;6,2).
    S4x12,
    /// Shiftable SMR(6,18;6,2).
    S6x18,
    /// Shiftable SMR(5,10;4,2).
    S5x10,
    /// Shiftable SMR(3,6;4,2).
    S3x6,
    /// Shiftable SMR(5,15;6,2).
    S5x15,
    /// Shiftable SMR(3,9;6,2).
    S3x9,
}

impl SeedId {
    pub const ALL: [SeedId; 8] = [
        SeedId::S2x4,
        SeedId::S2x3,
        SeedId::S4x12,
        SeedId::S6x18,
        SeedId::S5x10,
        SeedId::S3x6,
        SeedId::S5x15,
        SeedId::S3x9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeedId::S2x4 => "S_2x4",
            SeedId::S2x3 => "S_2x3",
            SeedId::S4x12 => "S_4x12",
            SeedId::S6x18 => "S_6x18",
            SeedId::S5x10 => "S_5x10",
            SeedId::S3x6 => "S_3x6",
            SeedId::S5x15 => "S_5x15",
            SeedId::S3x9 => "S_3x9",
        }
    }

    pub fn params(self) -> Params {
        let (m, n, r) = match self {
            SeedId::S2x4 => (2, 4, 4),
            SeedId::S2x3 => (2, 3, 3),
            SeedId::S4x12 => (4, 12, 6),
            SeedId::S6x18 => (6, 18, 6),
            SeedId::S5x10 => (5, 10, 4),
            SeedId::S3x6 => (3, 6, 4),
            SeedId::S5x15 => (5, 15, 6),
            SeedId::S3x9 => (3, 9, 6),
        };
        Params { m, n, r, s: 2 }
    }

    pub fn is_shiftable(self) -> bool {
        self != SeedId::S2x3
    }

    fn grid(self) -> &'static str {
        match self {
            SeedId::S2x4 => S_2X4,
            SeedId::S2x3 => S_2X3,
            SeedId::S4x12 => S_4X12,
            SeedId::S6x18 => S_6X18,
            SeedId::S5x10 => S_5X10,
            SeedId::S3x6 => S_3X6,
            SeedId::S5x15 => S_5X15,
            SeedId::S3x9 => S_3X9,
        }
    }
}

impl fmt::Display for SeedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeedId {
    type Err = Error;

    /// Accepts `S_2x4`, `s2x4`, `2x4` and similar spellings.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| *c != '_')
            .collect::<String>()
            .to_ascii_lowercase();
        let key = key.strip_prefix('s').unwrap_or(&key);
        SeedId::ALL
            .into_iter()
            .find(|id| id.name()[2..].eq_ignore_ascii_case(key))
            .ok_or_else(|| Error::UnknownSeed(s.to_string()))
    }
}

const S_2X4: &str = "
     1 -2 -3  4
    -1  2  3 -4
";

const S_2X3: &str = "
     1  2 -3
    -1 -2  3
";

const S_4X12: &str = "
    -1  2  .  . -5  6  .  .  9 -11   .   .
     1 -2  .  .  5 -6  .  . -9  11   .   .
     .  . -3  4  .  . -7  8  .   .  10 -12
     .  .  3 -4  .  .  7 -8  .   . -10  12
";

const S_6X18: &str = "
    -1  .  3  .  .  .  7 -8  .   .   .   .  13 -14   .   .   .   .
     . -2  .  4  .  .  .  8 -9   .   .   .   .  14 -15   .   .   .
     .  . -3  .  5  .  .  .  9 -10   .   .   .   .  15 -16   .   .
     .  .  . -4  .  6  .  .  .  10 -11   .   .   .   .  16 -17   .
     1  .  .  . -5  .  .  .  .   .  11 -12 -13   .   .   .   .  18
     .  2  .  .  . -6 -7  .  .   .   .  12   .   .   .   .  17 -18
";

// Row 5, column 10 is -10: the only sign that balances row 5 and column 10.
const S_5X10: &str = "
     1  .  .  . -5 -6  .  .  .  10
    -1  2  .  .  .  6 -7  .  .   .
     . -2  3  .  .  .  7 -8  .   .
     .  . -3  4  .  .  .  8 -9   .
     .  .  . -4  5  .  .  .  9 -10
";

const S_3X6: &str = "
     1  . -3 -4  .  6
    -1  2  .  4 -5  .
     . -2  3  .  5 -6
";

const S_5X15: &str = "
     1 -2  .  .  . -6  .  .  .  10   .  12   .   . -15
     .  2 -3  .  .  6 -7  .  .   .   .   . -13   .  15
     .  .  3 -4  .  .  7 -8  .   . -11   .  13   .   .
     .  .  .  4 -5  .  .  8 -9   .   . -12   .  14   .
    -1  .  .  .  5  .  .  .  9 -10  11   .   . -14   .
";

const S_3X9: &str = "
     1 -2  . -4  .  6  7 -8  .
     .  2 -3  4 -5  . -7  .  9
    -1  .  3  .  5 -6  .  8 -9
";

/// Loads a seed together with its parameters.
///
/// Panics if the embedded data fails verification or its shiftability flag,
/// which would mean the catalog itself is corrupt.
pub fn seed(id: SeedId) -> (SignedArray, Params) {
    let a = parse_grid(id.grid()).expect("seed grids are well formed");
    let p = id.params();
    let report = verify_smr(&a, &p).expect("seed dimensions match their parameters");
    assert!(report.passed(), "seed {id} is corrupt:\n{report}");
    assert_eq!(
        a.is_shiftable(),
        id.is_shiftable(),
        "seed {id} has the wrong shiftability"
    );
    (a, p)
}

pub fn seed_by_name(name: &str) -> Result<(SignedArray, Params)> {
    name.parse().map(seed)
}
