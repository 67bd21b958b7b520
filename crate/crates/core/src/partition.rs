//! Integer partitions and their Young diagrams.
//!
//! Diagrams use English notation with 1-based cells: row `i` counts from the
//! top, column `j` from the left, and `(i, j)` lies in `λ` iff `j <= λ_i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A nonincreasing tuple of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

/// A cell `(row, col)` of a Young diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// Validates `parts` and builds a partition.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (index, &value) in parts.iter().enumerate() {
            if value == 0 {
                return Err(Error::NonpositivePart { index, value: 0 });
            }
            if index > 0 && parts[index - 1] < value {
                return Err(Error::NotNonincreasing {
                    index,
                    previous: parts[index - 1] as i64,
                    value: value as i64,
                });
            }
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Same as [`Partition::new`] but accepts signed input, rejecting
    /// nonpositive entries.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(parts.len());
        for (index, &value) in parts.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonpositivePart { index, value });
            }
            if index > 0 && parts[index - 1] < value {
                return Err(Error::NotNonincreasing {
                    index,
                    previous: parts[index - 1],
                    value,
                });
            }
            out.push(value as usize);
        }
        Partition::new(out)
    }

    /// Builds a partition from row lengths that may contain trailing zeros.
    pub(crate) fn from_rows_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut cols = Vec::with_capacity(width);
        let mut rows = self.parts.len();
        for j in 1..=width {
            while rows > 0 && self.parts[rows - 1] < j {
                rows -= 1;
            }
            cols.push(rows);
        }
        Partition {
            parts: cols,
            size: self.size,
        }
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    fn check_cell(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutside {
                row: cell.row,
                col: cell.col,
            })
        }
    }

    pub fn arm_length(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.part(cell.row) - cell.col)
    }

    pub fn leg_length(&self, cell: Cell) -> Result<usize> {
        self.check_cell(cell)?;
        Ok(self.column_height(cell.col) - cell.row)
    }

    /// `λ_i - i + λ'_j - j + 1`.
    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        Ok(self.arm_length(cell)? + self.leg_length(cell)? + 1)
    }

    /// Content `j - i`.
    pub fn content(&self, cell: Cell) -> Result<i64> {
        self.check_cell(cell)?;
        Ok(cell.col as i64 - cell.row as i64)
    }

    /// `λ'_j`, the number of rows of length at least `j`.
    fn column_height(&self, j: usize) -> usize {
        self.parts.partition_point(|&p| p >= j)
    }

    /// Every cell paired with its hook length, row-major.
    pub fn hooks(&self) -> Vec<(Cell, usize)> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| {
                let h = (self.parts[c.row - 1] - c.col) + (conj.parts[c.col - 1] - c.row) + 1;
                (c, h)
            })
            .collect()
    }

    /// Hook lengths, row-major.
    pub fn hook_lengths(&self) -> Vec<usize> {
        self.hooks().into_iter().map(|(_, h)| h).collect()
    }

    /// Removes the rim hook (ribbon) of `cell`.
    ///
    /// Walks the outer rim from the arm node `(i, λ_i)` down-and-left to the
    /// leg node `(λ'_j, j)`, moving down whenever the cell below is in the
    /// diagram, and deletes every visited cell.
    pub fn remove_rim_hook(&self, cell: Cell) -> Result<Partition> {
        self.check_cell(cell)?;
        let leg_row = self.column_height(cell.col);
        let mut rows = self.parts.clone();
        let (mut r, mut c) = (cell.row, self.part(cell.row));
        loop {
            rows[r - 1] -= 1;
            if (r, c) == (leg_row, cell.col) {
                break;
            }
            if self.contains(Cell::new(r + 1, c)) {
                r += 1;
            } else {
                c -= 1;
            }
        }
        Ok(Partition::from_rows_unchecked(rows))
    }

    /// Parses `(5,4,4,2,1)`, `5,4,4,2,1` or `5 4 4 2 1`; `()` and `` are empty.
    pub fn parse(s: &str) -> Result<Partition> {
        s.parse()
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let v: i64 = tok.parse().map_err(|_| Error::Parse(s.to_string()))?;
            parts.push(v);
        }
        Partition::from_signed(&parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Iterator over the partitions of `n` in reverse-lexicographic order,
/// starting from `(n)` and ending with `(1,1,…,1)`.
pub struct Partitions {
    current: Option<Vec<usize>>,
}

/// Every partition of `n` exactly once, reverse-lexicographically.
pub fn partitions(n: usize) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions {
        current: Some(first),
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_rows_unchecked(cur.clone());
        // Successor: decrement the rightmost part exceeding 1 and refill the
        // tail greedily with parts no larger than the decremented value.
        let mut parts = cur;
        let mut freed = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            freed += 1;
        }
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            let cap = *last;
            freed += 1;
            while freed > 0 {
                let take = freed.min(cap);
                parts.push(take);
                freed -= take;
            }
            self.current = Some(parts);
        }
        Some(out)
    }
}
