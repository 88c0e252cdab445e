use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Value column of a positive-pattern table row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowValue {
    /// `Φ = num/den + 1/k` exactly.
    Exact { num: i64, den: i64 },
    /// `Φ >= num/den` for every `k` in the row's range.
    AtLeast { num: i64, den: i64 },
}

/// A family `(prefix..., k)` of patterns with positive curvature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub prefix: &'static [usize],
    pub k_min: usize,
    /// `None` for an unbounded family.
    pub k_max: Option<usize>,
    pub value: RowValue,
}

impl TableRow {
    pub fn contains(&self, degrees: &[usize]) -> bool {
        let Some((&k, prefix)) = degrees.split_last() else { return false };
        prefix == self.prefix && k >= self.k_min && self.k_max.is_none_or(|m| k <= m)
    }

    /// Lower bound certified by the row for the pattern ending in `k`.
    pub fn bound(&self, k: usize) -> BigRational {
        match self.value {
            RowValue::Exact { num, den } => ratio(num, den) + BigRational::new(BigInt::from(1), BigInt::from(k)),
            RowValue::AtLeast { num, den } => ratio(num, den),
        }
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for d in self.prefix {
            write!(f, "{d},")?;
        }
        f.write_str("k), ")?;
        match self.k_max {
            Some(m) => write!(f, "{}<=k<={m}", self.k_min),
            None => write!(f, "k>={}", self.k_min),
        }
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

const fn exact(prefix: &'static [usize], k_min: usize, num: i64, den: i64) -> TableRow {
    TableRow { prefix, k_min, k_max: None, value: RowValue::Exact { num, den } }
}

const fn at_least(prefix: &'static [usize], k_min: usize, k_max: usize, den: i64) -> TableRow {
    TableRow { prefix, k_min, k_max: Some(k_max), value: RowValue::AtLeast { num: 1, den } }
}

/// All patterns of positive curvature with at most five faces.
pub const POSITIVE_TABLE: [TableRow; 20] = [
    exact(&[3, 3], 3, 1, 6),
    exact(&[3, 4], 4, 1, 12),
    exact(&[3, 5], 5, 1, 30),
    exact(&[3, 6], 6, 0, 1),
    at_least(&[3, 7], 7, 41, 1722),
    at_least(&[3, 8], 8, 23, 552),
    at_least(&[3, 9], 9, 17, 306),
    at_least(&[3, 10], 10, 14, 210),
    at_least(&[3, 11], 11, 13, 858),
    exact(&[4, 4], 4, 0, 1),
    at_least(&[4, 5], 5, 19, 380),
    at_least(&[4, 6], 6, 11, 132),
    at_least(&[4, 7], 7, 9, 252),
    at_least(&[5, 5], 5, 9, 90),
    at_least(&[5, 6], 6, 7, 105),
    exact(&[3, 3, 3], 3, 0, 1),
    at_least(&[3, 3, 4], 4, 11, 132),
    at_least(&[3, 3, 5], 5, 7, 105),
    at_least(&[3, 4, 4], 4, 5, 30),
    at_least(&[3, 3, 3, 3], 3, 5, 30),
];

/// The patterns with vanishing curvature.
pub const VANISHING_PATTERNS: [&[usize]; 17] = [
    &[3, 7, 42],
    &[3, 8, 24],
    &[3, 9, 18],
    &[3, 10, 15],
    &[3, 12, 12],
    &[4, 5, 20],
    &[4, 6, 12],
    &[4, 8, 8],
    &[5, 5, 10],
    &[6, 6, 6],
    &[3, 3, 4, 12],
    &[3, 3, 6, 6],
    &[3, 4, 4, 6],
    &[4, 4, 4, 4],
    &[3, 3, 3, 3, 6],
    &[3, 3, 3, 4, 4],
    &[3, 3, 3, 3, 3, 3],
];

pub fn table_row(degrees: &[usize]) -> Option<&'static TableRow> {
    POSITIVE_TABLE.iter().find(|r| r.contains(degrees))
}
