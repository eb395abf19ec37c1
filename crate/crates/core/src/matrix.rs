//! Exact rational matrices. No floating point enters the core anywhere:
//! realizations, products and ranks are all computed over arbitrary-precision
//! rationals so that rank verdicts are never tolerance-dependent.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pattern::{Pattern, PatternEntry};

/// A dense `rows x cols` matrix with exact rational entries, indexed 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must match shape");
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![BigRational::zero(); rows * cols])
    }

    /// Convenience constructor from integer rows (mostly for tests and docs).
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let row_count = rows.len();
        let col_count = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == col_count));
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))))
            .collect();
        Self::new(row_count, col_count, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        self.entries[(i - 1) * self.cols + (j - 1)] = value;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                expected_rows: self.cols,
                expected_cols: other.cols,
                rows: other.rows,
                cols: other.cols,
            });
        }
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for i in 1..=self.rows {
            for k in 1..=self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 1..=other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation of equally tall blocks.
    pub fn hconcat(blocks: &[RationalMatrix]) -> Result<RationalMatrix> {
        let rows = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::ShapeMismatch {
                expected_rows: rows,
                expected_cols: 0,
                rows: blocks.iter().map(|b| b.rows).max().unwrap_or(0),
                cols: 0,
            });
        }
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = RationalMatrix::zero(rows, cols);
        let mut offset = 0;
        for b in blocks {
            for i in 1..=rows {
                for j in 1..=b.cols {
                    out.set(i, offset + j, b.get(i, j).clone());
                }
            }
            offset += b.cols;
        }
        Ok(out)
    }

    /// Rank by exact Gaussian elimination with first-nonzero pivoting.
    pub fn rank(&self) -> usize {
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |m: &[BigRational], i: usize, j: usize| m[i * cols + j].clone();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot_row) = (rank..rows).find(|&r| !m[r * cols + col].is_zero()) else {
                continue;
            };
            if pivot_row != rank {
                for j in 0..cols {
                    m.swap(rank * cols + j, pivot_row * cols + j);
                }
            }
            let pivot = at(&m, rank, col);
            for r in (rank + 1)..rows {
                let head = at(&m, r, col);
                if head.is_zero() {
                    continue;
                }
                let factor = head / &pivot;
                m[r * cols + col] = BigRational::zero();
                for j in (col + 1)..cols {
                    let updated = at(&m, r, j) - &factor * at(&m, rank, j);
                    m[r * cols + j] = updated;
                }
            }
            rank += 1;
        }
        rank
    }

    /// True when this matrix is a realization of `p`: every star cell is
    /// nonzero, every zero cell is zero, free cells are unconstrained.
    pub fn realizes(&self, p: &Pattern) -> Result<bool> {
        if self.rows != p.rows() || self.cols != p.cols() {
            return Err(Error::ShapeMismatch {
                expected_rows: p.rows(),
                expected_cols: p.cols(),
                rows: self.rows,
                cols: self.cols,
            });
        }
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                let ok = match p.get(i, j) {
                    PatternEntry::Star => !self.get(i, j).is_zero(),
                    PatternEntry::Zero => self.get(i, j).is_zero(),
                    PatternEntry::Free => true,
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Whitespace-separated rationals, one row per line, e.g. `"-3 1 0\n9 0 0"`.
/// Entries accept `p/q` fractions.
impl FromStr for RationalMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for line in s.lines() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.is_empty() {
                continue;
            }
            let row = fields
                .iter()
                .map(|f| {
                    BigRational::from_str(f)
                        .map_err(|e| Error::Parse(format!("bad rational {f:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let row_count = rows.len();
        let col_count = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != col_count) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(Self::new(
            row_count,
            col_count,
            rows.into_iter().flatten().collect(),
        ))
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            if i > 1 {
                writeln!(f)?;
            }
            for j in 1..=self.cols {
                if j > 1 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

/// Matrices travel through JSON in the matrix text format.
impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}
