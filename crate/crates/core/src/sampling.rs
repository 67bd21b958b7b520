//! Exact uniform sampling of partitions of `n`.
//!
//! The table holds `p(m, k)`, the number of partitions of `m` with largest
//! part at most `k`. A sample is the partition of rank `r` in
//! reverse-lexicographic order for one uniform draw `r ∈ [0, p(n))`:
//! parts are chosen largest first, and part `j` is taken when `r` falls in
//! the block of `p(m-j, j)` partitions that start with `j`. Part `j` is
//! therefore chosen with probability `p(m-j, j)/p(m, k)` exactly.
//!
//! Sample `i` of a run with seed `s` uses a ChaCha8 stream seeded with
//! [`stream_seed`]`(s, i)`, so it does not depend on scheduling.

use num_bigint::{BigUint, RandBigInt};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// `p(m, k)` for `0 ≤ k ≤ m ≤ n`, stored as little-endian `u64` limbs.
/// Row `m` uses a fixed limb width wide enough for `p(m)`.
#[derive(Debug, Clone)]
pub struct SamplerTable {
    n: usize,
    limbs: Vec<u64>,
    offsets: Vec<usize>,
    widths: Vec<usize>,
}

/// `a += b`, with `a` at least as wide as the value of `b`.
fn add_assign(a: &mut [u64], b: &[u64]) {
    let mut carry = 0u64;
    for (i, ai) in a.iter_mut().enumerate() {
        let bi = b.get(i).copied().unwrap_or(0);
        let (s1, c1) = ai.overflowing_add(bi);
        let (s2, c2) = s1.overflowing_add(carry);
        *ai = s2;
        carry = (c1 as u64) + (c2 as u64);
    }
    debug_assert_eq!(carry, 0);
}

/// `a -= b`, requires `a ≥ b`.
fn sub_assign(a: &mut [u64], b: &[u64]) {
    let mut borrow = 0u64;
    for (i, ai) in a.iter_mut().enumerate() {
        let bi = b.get(i).copied().unwrap_or(0);
        let (d1, o1) = ai.overflowing_sub(bi);
        let (d2, o2) = d1.overflowing_sub(borrow);
        *ai = d2;
        borrow = (o1 as u64) + (o2 as u64);
    }
    debug_assert_eq!(borrow, 0);
}

/// `a < b` for little-endian limb slices of any widths.
fn less_than(a: &[u64], b: &[u64]) -> bool {
    let width = a.len().max(b.len());
    for i in (0..width).rev() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        if x != y {
            return x < y;
        }
    }
    false
}

fn to_biguint(limbs: &[u64]) -> BigUint {
    let digits: Vec<u32> = limbs
        .iter()
        .flat_map(|&l| [l as u32, (l >> 32) as u32])
        .collect();
    BigUint::new(digits)
}

impl SamplerTable {
    /// Fills `p(m, k) = p(m-k, k) + p(m, k-1)` with `p(0, 0) = 1` and
    /// `p(m, 0) = 0` for `m > 0`.
    pub fn build(n: usize) -> Self {
        let totals = crate::counting::partition_count_table(n);
        let widths: Vec<usize> = totals
            .values()
            .iter()
            .map(|v| (v.bits() as usize).div_ceil(64).max(1))
            .collect();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut len = 0;
        for (m, w) in widths.iter().enumerate() {
            offsets.push(len);
            len += (m + 1) * w;
        }
        let mut table = SamplerTable {
            n,
            limbs: vec![0; len],
            offsets,
            widths,
        };
        table.limbs[0] = 1;
        for m in 1..=n {
            let w = table.widths[m];
            for k in 1..=m {
                let start = table.offsets[m] + k * w;
                let (done, rest) = table.limbs.split_at_mut(start);
                let cell = &mut rest[..w];
                // p(m, k-1)
                cell.copy_from_slice(&done[start - w..start]);
                // p(m-k, min(k, m-k))
                let r = m - k;
                let kk = k.min(r);
                let rw = table.widths[r];
                let src = table.offsets[r] + kk * rw;
                add_assign(cell, &done[src..src + rw]);
            }
        }
        table
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn slot(&self, m: usize, k: usize) -> &[u64] {
        let k = k.min(m);
        let w = self.widths[m];
        let start = self.offsets[m] + k * w;
        &self.limbs[start..start + w]
    }

    /// `p(m, k)`; `k` above `m` is clamped.
    pub fn count(&self, m: usize, k: usize) -> BigUint {
        assert!(m <= self.n, "table built for n = {}", self.n);
        to_biguint(self.slot(m, k))
    }

    /// `p(n)`.
    pub fn total(&self) -> BigUint {
        self.count(self.n, self.n)
    }

    /// The partition of rank `r` (0-based) among partitions of `n` in
    /// reverse-lexicographic order.
    pub fn unrank(&self, r: &BigUint) -> Result<Partition> {
        if r >= &self.total() {
            return Err(Error::Parse(format!("rank {r} out of range")));
        }
        let mut rest: Vec<u64> = r.to_u64_digits();
        rest.resize(self.widths[self.n], 0);
        let mut parts = Vec::new();
        let (mut m, mut k) = (self.n, self.n);
        while m > 0 {
            let mut j = k.min(m);
            loop {
                let block = self.slot(m - j, j);
                if less_than(&rest, block) {
                    break;
                }
                sub_assign(&mut rest, block);
                j -= 1;
            }
            parts.push(j);
            m -= j;
            k = j;
        }
        Ok(Partition::from_rows_unchecked(parts))
    }

    /// Reverse-lexicographic rank of `λ ⊢ n`.
    pub fn rank(&self, lambda: &Partition) -> Result<BigUint> {
        self.check_size(lambda)?;
        let mut r = BigUint::zero();
        let (mut m, mut k) = (self.n, self.n);
        for &part in lambda.parts() {
            for j in part + 1..=k.min(m) {
                r += self.count(m - j, j);
            }
            m -= part;
            k = part;
        }
        Ok(r)
    }

    /// Probability that the part-by-part procedure produces `λ`, as the
    /// product of its step probabilities `p(m-j, j)/p(m, k)`.
    pub fn selection_probability(&self, lambda: &Partition) -> Result<BigRational> {
        self.check_size(lambda)?;
        let mut prob = BigRational::one();
        let (mut m, mut k) = (self.n, self.n);
        for &j in lambda.parts() {
            let num = self.count(m - j, j);
            let den = self.count(m, k);
            prob *= BigRational::new(num.into(), den.into());
            m -= j;
            k = j;
        }
        Ok(prob)
    }

    fn check_size(&self, lambda: &Partition) -> Result<()> {
        if lambda.size() != self.n {
            return Err(Error::SamplerSize {
                built: self.n,
                requested: lambda.size(),
            });
        }
        Ok(())
    }
}

/// Builds the table for partitions of `n`.
pub fn build_sampler(n: usize) -> SamplerTable {
    SamplerTable::build(n)
}

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of the stream for sample `index` of a run with master `seed`:
/// `splitmix64(splitmix64(seed) ^ index)`.
pub fn stream_seed(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ index)
}

/// Sample `index` of the run with master `seed`.
pub fn sample_partition(table: &SamplerTable, seed: u64, index: u64) -> Partition {
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(seed, index));
    let r = rng.gen_biguint_below(&table.total());
    table.unrank(&r).expect("draw is below p(n)")
}

/// Samples `0..count` of a run, in index order.
pub fn sample_batch(table: &SamplerTable, seed: u64, count: usize) -> Vec<Partition> {
    (0..count as u64)
        .into_par_iter()
        .map(|i| sample_partition(table, seed, i))
        .collect()
}
