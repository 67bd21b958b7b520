//! 1-runner abaci (Maya diagrams) and their t-runner decomposition.
//!
//! An abacus is a bit sequence `w : Z -> {0,1}` that is all ones far to the
//! left and all zeros far to the right. Reading it left to right, a 1 is a
//! vertical step and a 0 a horizontal step of the boundary path of a Young
//! diagram. The partition `λ` is encoded by putting ones exactly at the
//! positions `λ_r - r` for `r >= 1`; that word is *balanced* (it justifies
//! at position 0).
//!
//! Cells of `λ` correspond to pairs `i < j` with `w_i = 0`, `w_j = 1`: the
//! 1 at `j` marks row `i'` (rows counted from the right) and the 0 at `i`
//! marks a column, and the hook length is `j - i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

/// A finitely windowed abacus word in canonical form.
///
/// Bits below `offset` are 1, bits at or above `offset + window.len()` are 0.
/// In canonical form the window is either empty (a justified word) or starts
/// with a 0 and ends with a 1, so structural equality is word equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbacusWord {
    offset: i64,
    window: Vec<bool>,
}

impl AbacusWord {
    /// Builds a word from a window starting at `offset`, normalizing it.
    pub fn from_window(offset: i64, window: Vec<bool>) -> Self {
        let lead = window.iter().take_while(|&&b| b).count();
        let end = window.iter().rposition(|&b| b).map_or(0, |p| p + 1);
        if lead >= end {
            // Only ones followed by zeros: justified.
            return AbacusWord::justified(offset + lead as i64);
        }
        AbacusWord {
            offset: offset + lead as i64,
            window: window[lead..end].to_vec(),
        }
    }

    /// The word justified at `p`: ones strictly below `p`, zeros from `p` on.
    pub fn justified(p: i64) -> Self {
        AbacusWord {
            offset: p,
            window: Vec::new(),
        }
    }

    /// The balanced abacus of `λ`.
    pub fn from_partition(lambda: &Partition) -> Self {
        let k = lambda.len() as i64;
        let top = lambda.parts().first().map_or(0, |&p| p as i64);
        // Window covers positions -k ..= λ_1 - 1.
        let mut window = vec![false; (top + k) as usize];
        for (r, &part) in lambda.parts().iter().enumerate() {
            let pos = part as i64 - (r as i64 + 1);
            window[(pos + k) as usize] = true;
        }
        AbacusWord::from_window(-k, window)
    }

    /// Reads the partition off the boundary path; any shift gives the same
    /// partition.
    pub fn to_partition(&self) -> Partition {
        let mut zeros = 0;
        let mut parts = Vec::new();
        for &b in &self.window {
            if b {
                if zeros > 0 {
                    parts.push(zeros);
                }
            } else {
                zeros += 1;
            }
        }
        parts.reverse();
        Partition::from_rows_unchecked(parts)
    }

    pub fn bit(&self, i: i64) -> bool {
        if i < self.offset {
            true
        } else {
            let k = (i - self.offset) as usize;
            k < self.window.len() && self.window[k]
        }
    }

    /// First position of the canonical window (the first 0 for a
    /// non-justified word).
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn window(&self) -> &[bool] {
        &self.window
    }

    /// The shift `δ^k`: bit `i` of the result is bit `i + k` of `self`.
    pub fn shift(&self, k: i64) -> Self {
        AbacusWord {
            offset: self.offset - k,
            window: self.window.clone(),
        }
    }

    /// Position at which the word justifies once every 1 is slid left past
    /// the 0s. Balanced words have charge 0.
    pub fn charge(&self) -> i64 {
        self.offset + self.window.iter().filter(|&&b| b).count() as i64
    }

    pub fn justify(&self) -> Self {
        AbacusWord::justified(self.charge())
    }

    pub fn is_justified(&self) -> bool {
        self.window.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        self.charge() == 0
    }

    /// Position `p` if the word is justified at `p`.
    pub fn justified_position(&self) -> Option<i64> {
        self.is_justified().then_some(self.offset)
    }

    /// All pairs `(i, j)` with `i < j`, `w_i = 0`, `w_j = 1`.
    pub fn zero_one_pairs(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for (a, &ba) in self.window.iter().enumerate() {
            if ba {
                continue;
            }
            for (b, &bb) in self.window.iter().enumerate().skip(a + 1) {
                if bb {
                    out.push((self.offset + a as i64, self.offset + b as i64));
                }
            }
        }
        out
    }

    /// The cell of the encoded partition that corresponds to the pair
    /// `(i, j)`; `None` unless `w_i = 0`, `w_j = 1`, `i < j`.
    pub fn cell_of_pair(&self, i: i64, j: i64) -> Option<Cell> {
        if i >= j || self.bit(i) || !self.bit(j) {
            return None;
        }
        let end = self.offset + self.window.len() as i64;
        let row = (j..end).filter(|&x| self.bit(x)).count();
        let col = (self.offset..=i).filter(|&x| !self.bit(x)).count();
        Some(Cell::new(row, col))
    }

    /// The `(0, 1)` pair of a cell of the encoded partition.
    pub fn pair_of_cell(&self, cell: Cell) -> Option<(i64, i64)> {
        let end = self.offset + self.window.len() as i64;
        let one = (self.offset..end)
            .rev()
            .filter(|&x| self.bit(x))
            .nth(cell.row.checked_sub(1)?)?;
        let zero = (self.offset..end)
            .filter(|&x| !self.bit(x))
            .nth(cell.col.checked_sub(1)?)?;
        (zero < one).then_some((zero, one))
    }

    /// Renders bits `lo..=hi` as `(…, 1, 0, 0̲, 1, …)`, underlining position 0
    /// with U+0332 when it is in range.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        render_bits((lo..=hi).map(|i| (self.bit(i), i == 0)))
    }
}

fn render_bits(bits: impl Iterator<Item = (bool, bool)>) -> String {
    let mut s = String::from("(…");
    for (b, underline) in bits {
        s.push_str(", ");
        s.push(if b { '1' } else { '0' });
        if underline {
            s.push('\u{0332}');
        }
    }
    s.push_str(", …)");
    s
}

impl fmt::Debug for AbacusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbacusWord{self}")
    }
}

/// Displays the window plus three bits of each tail, always including
/// position 0.
impl fmt::Display for AbacusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = self.offset + self.window.len() as i64;
        let lo = self.offset.min(0) - 3;
        let hi = end.max(1) + 2;
        f.write_str(&self.render(lo, hi))
    }
}

/// The t-runner abacus: runner `i` holds the bits at positions `n·t + i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RunnerAbacus {
    t: usize,
    runners: Vec<AbacusWord>,
}

/// Justification positions `(p_0, …, p_{t-1})` of the runners of a t-core.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct JustificationVector(pub Vec<i64>);

impl JustificationVector {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `max_{i<j} |p_i - p_j|`.
    pub fn spread(&self) -> i64 {
        match (self.0.iter().max(), self.0.iter().min()) {
            (Some(hi), Some(lo)) => hi - lo,
            _ => 0,
        }
    }
}

pub(crate) fn check_modulus(t: usize) -> Result<()> {
    if t < 2 {
        Err(Error::InvalidModulus(t))
    } else {
        Ok(())
    }
}

impl RunnerAbacus {
    /// Splits `w` into its `t` position classes.
    pub fn split(w: &AbacusWord, t: usize) -> Result<Self> {
        check_modulus(t)?;
        let ti = t as i64;
        let end = w.offset + w.window.len() as i64;
        let runners = (0..ti)
            .map(|r| {
                let lo = (w.offset - r).div_euclid(ti);
                let hi = (end - 1 - r).div_euclid(ti);
                let window = (lo..=hi).map(|n| w.bit(n * ti + r)).collect();
                AbacusWord::from_window(lo, window)
            })
            .collect();
        Ok(RunnerAbacus { t, runners })
    }

    /// Assembles runners; fails unless exactly `t >= 2` runners are given.
    pub fn from_runners(runners: Vec<AbacusWord>) -> Result<Self> {
        check_modulus(runners.len())?;
        Ok(RunnerAbacus {
            t: runners.len(),
            runners,
        })
    }

    pub fn from_partition(lambda: &Partition, t: usize) -> Result<Self> {
        RunnerAbacus::split(&AbacusWord::from_partition(lambda), t)
    }

    /// Interleaves the runners back into one word; inverse of [`split`](Self::split).
    pub fn merge(&self) -> AbacusWord {
        let ti = self.t as i64;
        let lo = self
            .runners
            .iter()
            .enumerate()
            .map(|(r, w)| w.offset * ti + r as i64)
            .min()
            .unwrap_or(0);
        let hi = self
            .runners
            .iter()
            .enumerate()
            .map(|(r, w)| (w.offset + w.window.len() as i64) * ti + r as i64)
            .max()
            .unwrap_or(0);
        let window = (lo..hi)
            .map(|pos| {
                let r = pos.rem_euclid(ti) as usize;
                self.runners[r].bit(pos.div_euclid(ti))
            })
            .collect();
        AbacusWord::from_window(lo, window)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn runners(&self) -> &[AbacusWord] {
        &self.runners
    }

    pub fn runner(&self, i: usize) -> &AbacusWord {
        &self.runners[i]
    }

    /// Charges of the runners; they sum to the charge of the merged word.
    pub fn charges(&self) -> Vec<i64> {
        self.runners.iter().map(AbacusWord::charge).collect()
    }

    /// Positions of justification, failing on the first non-justified runner.
    pub fn justification_positions(&self) -> Result<JustificationVector> {
        self.runners
            .iter()
            .enumerate()
            .map(|(runner, w)| w.justified_position().ok_or(Error::NotJustified { runner }))
            .collect::<Result<Vec<_>>>()
            .map(JustificationVector)
    }

    /// Applies `δ^{shifts[i]}` to runner `i`.
    pub fn shift_runners(&self, shifts: &[i64]) -> Self {
        RunnerAbacus {
            t: self.t,
            runners: self
                .runners
                .iter()
                .zip(shifts)
                .map(|(w, &k)| w.shift(k))
                .collect(),
        }
    }

    /// Renders runner columns `lo..=hi`, one line per runner, underlining
    /// column 0 of runner 0.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        let mut lines = Vec::with_capacity(self.t);
        for (i, w) in self.runners.iter().enumerate() {
            let bits = (lo..=hi).map(|n| (w.bit(n), i == 0 && n == 0));
            lines.push(format!("runner {i} = {}", render_bits(bits)));
        }
        lines.join("\n")
    }
}

impl fmt::Display for RunnerAbacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self
            .runners
            .iter()
            .map(|w| w.offset)
            .min()
            .unwrap_or(0)
            .min(0)
            - 2;
        let hi = self
            .runners
            .iter()
            .map(|w| w.offset + w.window.len() as i64)
            .max()
            .unwrap_or(0)
            .max(1)
            + 1;
        f.write_str(&self.render(lo, hi))
    }
}
