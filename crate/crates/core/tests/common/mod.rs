//! Slow, independent reference implementations shared by the integration
//! tests. None of them touch the abacus.

#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use tcore::{Cell, Partition};

pub fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Hook lengths from the definition `λ_i - i + λ'_j - j + 1`, computing `λ'_j`
/// by scanning rows.
pub fn naive_hooks(lam: &Partition) -> Vec<(Cell, usize)> {
    let parts = lam.parts();
    let mut out = Vec::new();
    for (i, &len) in parts.iter().enumerate() {
        for j in 1..=len {
            let col = parts.iter().filter(|&&x| x >= j).count();
            out.push((Cell::new(i + 1, j), len - j + col - (i + 1) + 1));
        }
    }
    out
}

/// The rim hook of `c = (i, j)`: cells `(r, s)` of `λ` with `r ≥ i`, `s ≥ j`
/// and `(r+1, s+1) ∉ λ`.
pub fn rim_hook_cells(lam: &Partition, c: Cell) -> Vec<Cell> {
    let parts = lam.parts();
    let inside = |r: usize, s: usize| r >= 1 && r <= parts.len() && s >= 1 && s <= parts[r - 1];
    let mut out = Vec::new();
    for r in c.row..=parts.len() {
        for s in c.col..=parts[r - 1] {
            if !inside(r + 1, s + 1) {
                out.push(Cell::new(r, s));
            }
        }
    }
    out
}

/// `λ` minus the rim hook of `c`, through the cell-set characterization.
pub fn remove_rim_hook_oracle(lam: &Partition, c: Cell) -> Partition {
    let mut rows = lam.parts().to_vec();
    for cell in rim_hook_cells(lam, c) {
        rows[cell.row - 1] -= 1;
    }
    while rows.last() == Some(&0) {
        rows.pop();
    }
    Partition::new(rows).expect("removing a rim hook leaves a partition")
}

/// Core by greedily stripping rim hooks of length `t` until none is left.
pub fn greedy_core(lam: &Partition, t: usize) -> Partition {
    let mut cur = lam.clone();
    loop {
        let next = naive_hooks(&cur).into_iter().find(|&(_, h)| h == t);
        match next {
            Some((c, _)) => cur = remove_rim_hook_oracle(&cur, c),
            None => return cur,
        }
    }
}

/// Core by stripping the *last* available `t`-hook instead of the first,
/// to exercise the uniqueness of the result.
pub fn greedy_core_reversed(lam: &Partition, t: usize) -> Partition {
    let mut cur = lam.clone();
    loop {
        let next = naive_hooks(&cur).into_iter().rev().find(|&(_, h)| h == t);
        match next {
            Some((c, _)) => cur = remove_rim_hook_oracle(&cur, c),
            None => return cur,
        }
    }
}

pub fn is_core_by_hooks(lam: &Partition, t: usize) -> bool {
    naive_hooks(lam).iter().all(|&(_, h)| h % t != 0)
}

/// The content description of the quotient: for each `k`, the sorted hooks
/// `h/t` of the cells with `t | h` whose arm node `(i, λ_i)` has content
/// `≡ k (mod t)`.
pub fn quotient_hooks_by_content(lam: &Partition, t: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); t];
    for (c, h) in naive_hooks(lam) {
        if h % t == 0 {
            let arm_content = lam.part(c.row) as i64 - c.row as i64;
            out[arm_content.rem_euclid(t as i64) as usize].push(h / t);
        }
    }
    for v in &mut out {
        v.sort_unstable();
    }
    out
}

pub fn sorted_hooks(lam: &Partition) -> Vec<usize> {
    let mut h: Vec<usize> = naive_hooks(lam).into_iter().map(|(_, h)| h).collect();
    h.sort_unstable();
    h
}

/// Partitions of `n` by recursion on the largest part, independent of the
/// library's iterator.
pub fn partitions_oracle(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `c_t(n)` by enumeration and the hook test.
pub fn brute_core_count(t: usize, n: usize) -> u64 {
    partitions_oracle(n)
        .into_iter()
        .filter(|v| is_core_by_hooks(&p(v), t))
        .count() as u64
}

/// Histogram of `|core_t(λ)|` over `λ ⊢ n`, cores by greedy stripping.
pub fn core_size_histogram(t: usize, n: usize) -> BTreeMap<usize, u64> {
    let mut h = BTreeMap::new();
    for v in partitions_oracle(n) {
        *h.entry(greedy_core(&p(&v), t).size()).or_insert(0) += 1;
    }
    h
}

/// Random partitions with at most `rows` parts, each at most `max_part`.
pub fn arb_partition(rows: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}
