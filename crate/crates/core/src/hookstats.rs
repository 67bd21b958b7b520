//! Hook lengths modulo `t`: residue censuses, the `S_t` action on
//! partitions, b-smoothings of t-divisible partitions, and the injection of
//! the canonical smoothing into `λ`.
//!
//! A cell of `λ` is a `(0, 1)` pair `(g0, g1)` of its balanced abacus, with
//! hook length `g1 - g0`. On the t-runner abacus `g = n·t + r` sits on runner
//! `r`, column `n`, so the residue of the hook is fixed by the two runners.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::abacus::{check_modulus, AbacusWord, RunnerAbacus};
use crate::corequotient::{compose, core_positions, decompose, is_divisible, CoreQuotient};
use crate::error::{Error, Result};
use crate::partition::{partitions, Cell, Partition};
use crate::sampling::{sample_partition, SamplerTable};

/// Default largest `n` for exhaustive residue distributions.
pub const EXACT_LIMIT: usize = 50;

/// `counts[i] = #{c ∈ λ : h_c ≡ i (mod t)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueCensus {
    pub t: usize,
    pub counts: Vec<u64>,
}

impl ResidueCensus {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn residue_census(lambda: &Partition, t: usize) -> Result<ResidueCensus> {
    check_modulus(t)?;
    let mut counts = vec![0u64; t];
    for h in lambda.hook_lengths() {
        counts[h % t] += 1;
    }
    Ok(ResidueCensus { t, counts })
}

/// `x_i(n)`: the probability that a uniform cell of a uniform `λ ⊢ n` has
/// hook length `≡ i (mod t)`, by enumerating all partitions of `n ≤ 50`.
pub fn exact_residue_distribution(t: usize, n: usize) -> Result<Vec<BigRational>> {
    exact_residue_distribution_with_limit(t, n, EXACT_LIMIT)
}

pub fn exact_residue_distribution_with_limit(
    t: usize,
    n: usize,
    limit: usize,
) -> Result<Vec<BigRational>> {
    check_modulus(t)?;
    if n > limit {
        return Err(Error::EnumerationLimit { n, limit });
    }
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let all: Vec<Partition> = partitions(n).collect();
    let count = all.len() as u64;
    let totals = all
        .par_iter()
        .map(|lam| residue_census(lam, t).expect("t checked").counts)
        .reduce(
            || vec![0u64; t],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let den = BigInt::from(n as u64 * count);
    Ok(totals
        .into_iter()
        .map(|c| BigRational::new(BigInt::from(c), den.clone()))
        .collect())
}

/// Monte Carlo estimate of `x_i(n)` with standard errors.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledResidues {
    pub t: usize,
    pub n: usize,
    pub samples: usize,
    pub means: Vec<f64>,
    pub std_errors: Vec<f64>,
}

/// Averages `counts_i(λ)/n` over samples `0..samples` of the run with
/// `seed`. Sums are accumulated in integers, so the result does not depend
/// on the thread count.
pub fn sampled_residue_distribution(
    table: &SamplerTable,
    t: usize,
    samples: usize,
    seed: u64,
) -> Result<SampledResidues> {
    check_modulus(t)?;
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    let n = table.n();
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let (sums, squares) = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let lam = sample_partition(table, seed, i);
            let c = residue_census(&lam, t).expect("t checked").counts;
            let sq: Vec<u128> = c.iter().map(|&x| (x as u128) * (x as u128)).collect();
            (c.into_iter().map(u128::from).collect::<Vec<_>>(), sq)
        })
        .reduce(
            || (vec![0u128; t], vec![0u128; t]),
            |(mut a, mut b), (c, d)| {
                a.iter_mut().zip(c).for_each(|(x, y)| *x += y);
                b.iter_mut().zip(d).for_each(|(x, y)| *x += y);
                (a, b)
            },
        );
    let s = samples as f64;
    let nf = n as f64;
    let means: Vec<f64> = sums.iter().map(|&x| x as f64 / s / nf).collect();
    let std_errors = sums
        .iter()
        .zip(&squares)
        .map(|(&x, &x2)| {
            if samples < 2 {
                return f64::NAN;
            }
            // Unbiased variance of counts from the integer sums.
            let xf = x as f64;
            let var = (x2 as f64 - xf * xf / s) / (s - 1.0);
            var.max(0.0).sqrt() / nf / s.sqrt()
        })
        .collect();
    Ok(SampledResidues {
        t,
        n,
        samples,
        means,
        std_errors,
    })
}

/// A permutation `σ` of `{0, …, t-1}` in 0-indexed one-line notation
/// `(σ(0), …, σ(t-1))`. It displays 1-indexed, so `(0, 2, 1)` is `132`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let t = images.len();
        let mut seen = vec![false; t];
        for &i in &images {
            if i >= t || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(t));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(t: usize) -> Self {
        Permutation((0..t).collect())
    }

    /// All of `S_t` in lexicographic order of one-line notation.
    pub fn all(t: usize) -> Vec<Permutation> {
        fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    extend(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::new(), &mut vec![false; t], &mut out);
        out
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            inv[s] = i;
        }
        Permutation(inv)
    }

    /// The product with `act(σ·τ, ν) = act(σ, act(τ, ν))`, namely
    /// `(σ·τ)(i) = τ(σ(i))`. The action permutes quotient slots, so it is
    /// a right action of composition.
    pub fn product(&self, tau: &Permutation) -> Result<Permutation> {
        if self.len() != tau.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: tau.len(),
            });
        }
        Ok(Permutation(self.0.iter().map(|&s| tau.0[s]).collect()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() < 10 {
            for &i in &self.0 {
                write!(f, "{}", i + 1)?;
            }
            Ok(())
        } else {
            let words: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
            f.write_str(&words.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses 1-indexed one-line notation: `132`, or `1,3,2` when `t ≥ 10`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let images: Option<Vec<usize>> = if s.contains(',') {
            s.split(',')
                .map(|w| w.trim().parse::<usize>().ok()?.checked_sub(1))
                .collect()
        } else {
            s.chars()
                .map(|c| (c.to_digit(10)? as usize).checked_sub(1))
                .collect()
        };
        let images = images.ok_or_else(|| Error::Parse(s.to_string()))?;
        Permutation::new(images)
    }
}

fn check_permutation(sigma: &Permutation, t: usize) -> Result<()> {
    check_modulus(t)?;
    if sigma.len() != t {
        return Err(Error::DimensionMismatch {
            expected: t,
            found: sigma.len(),
        });
    }
    Ok(())
}

fn require_divisible(nu: &Partition, t: usize) -> Result<()> {
    if !is_divisible(nu, t)? {
        return Err(Error::NotDivisible {
            partition: nu.to_string(),
            t,
        });
    }
    Ok(())
}

/// `σν`: the t-divisible partition with quotient `(ν^{σ(0)}, …, ν^{σ(t-1)})`.
pub fn act_on_divisible(sigma: &Permutation, nu: &Partition, t: usize) -> Result<Partition> {
    check_permutation(sigma, t)?;
    require_divisible(nu, t)?;
    let runners = RunnerAbacus::from_partition(nu, t)?;
    let permuted = sigma
        .images()
        .iter()
        .map(|&s| runners.runner(s).clone())
        .collect();
    Ok(RunnerAbacus::from_runners(permuted)?.merge().to_partition())
}

/// `σλ = Δ_t^{-1}(ρ, σν)`.
pub fn act_on_partition(sigma: &Permutation, lambda: &Partition, t: usize) -> Result<Partition> {
    check_permutation(sigma, t)?;
    let d = decompose(lambda, t)?;
    let quotient: Vec<Partition> = sigma
        .images()
        .iter()
        .map(|&s| d.quotient[s].clone())
        .collect();
    compose(&d.core, &quotient, t)
}

/// `σλ` assembled directly on runners: runner `i` is
/// `δ^{p_{σ(i)} - p_i} λ^{σ(i)}`, where `p` justifies the core.
pub fn act_on_partition_by_shifts(
    sigma: &Permutation,
    lambda: &Partition,
    t: usize,
) -> Result<Partition> {
    check_permutation(sigma, t)?;
    let runners = RunnerAbacus::from_partition(lambda, t)?;
    let p = runners.charges();
    let moved = (0..t)
        .map(|i| {
            let s = sigma.apply(i);
            runners.runner(s).shift(p[s] - p[i])
        })
        .collect();
    Ok(RunnerAbacus::from_runners(moved)?.merge().to_partition())
}

/// The `S_t`-orbit of a t-divisible `ν`, one row per word `π` in
/// lexicographic order.
///
/// Rows are labelled by where the runners go: row `π` holds the partition
/// whose slot `π(i)` carries `ν^i`, which is `act_on_divisible(π⁻¹, ν)`.
/// For `ν = (7,3,2)` and `t = 3` the rows run 123 (7,3,2), 132 (7,4,1),
/// 213 (8,2,2), 231 (8,4), 312 (9,2,1), 321 (9,3).
pub fn orbit(nu: &Partition, t: usize) -> Result<Vec<(Permutation, Partition)>> {
    require_divisible(nu, t)?;
    Permutation::all(t)
        .into_iter()
        .map(|pi| {
            let image = act_on_divisible(&pi.inverse(), nu, t)?;
            Ok((pi, image))
        })
        .collect()
}

/// `C_ν^b`, as a subdiagram of the t-divisible `parent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothedRegion {
    pub b: i64,
    pub cells: Partition,
    pub parent: Partition,
}

/// Abacus positions of the `(0, 1)` pair of each cell of `λ`:
/// row `r` is the 1 at `λ_r - r` and column `c` the 0 at `c - 1 - λ'_c`.
struct PairPositions {
    rows: Vec<i64>,
    cols: Vec<i64>,
}

impl PairPositions {
    fn of(lambda: &Partition) -> Self {
        let conj = lambda.conjugate();
        PairPositions {
            rows: lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &p)| p as i64 - (i as i64 + 1))
                .collect(),
            cols: conj
                .parts()
                .iter()
                .enumerate()
                .map(|(j, &h)| j as i64 - h as i64)
                .collect(),
        }
    }

    fn pair(&self, cell: Cell) -> (i64, i64) {
        (self.cols[cell.col - 1], self.rows[cell.row - 1])
    }
}

/// Runner columns of a pair: `(⌊g0/t⌋, ⌊g1/t⌋)`.
fn columns(pair: (i64, i64), t: usize) -> (i64, i64) {
    let ti = t as i64;
    (pair.0.div_euclid(ti), pair.1.div_euclid(ti))
}

/// Cells of `ν` whose pairs are at least `b + 1` runner columns apart,
/// row-major.
pub fn smoothing_cells(nu: &Partition, t: usize, b: i64) -> Result<Vec<Cell>> {
    check_modulus(t)?;
    require_divisible(nu, t)?;
    let pos = PairPositions::of(nu);
    Ok(nu
        .cells()
        .filter(|&c| {
            let (i, j) = columns(pos.pair(c), t);
            j - i > b
        })
        .collect())
}

/// `C_ν^b` for a t-divisible `ν` and `b ≥ -1`.
pub fn b_smoothing(nu: &Partition, t: usize, b: i64) -> Result<SmoothedRegion> {
    if b < -1 {
        return Err(Error::Parse(format!("smoothing level {b} is below -1")));
    }
    let cells = smoothing_cells(nu, t, b)?;
    let mut rows: Vec<usize> = Vec::new();
    for c in &cells {
        if rows.len() < c.row {
            rows.resize(c.row, 0);
        }
        rows[c.row - 1] += 1;
    }
    let region = Partition::new(rows).expect("a smoothing is a subdiagram");
    debug_assert!(cells.iter().all(|&c| region.contains(c)));
    Ok(SmoothedRegion {
        b,
        cells: region,
        parent: nu.clone(),
    })
}

/// One row of an orbit table: `π`, the orbit member and its
/// smoothings `C^0, …, C^{max_b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRow {
    pub word: Permutation,
    pub member: Partition,
    pub smoothings: Vec<Partition>,
}

/// The orbit of `ν` with its `b`-smoothings for `0 ≤ b ≤ max_b`.
pub fn orbit_table(nu: &Partition, t: usize, max_b: i64) -> Result<Vec<OrbitRow>> {
    orbit(nu, t)?
        .into_iter()
        .map(|(word, member)| {
            let smoothings = (0..=max_b)
                .map(|b| Ok(b_smoothing(&member, t, b)?.cells))
                .collect::<Result<_>>()?;
            Ok(OrbitRow {
                word,
                member,
                smoothings,
            })
        })
        .collect()
}

/// `b_λ` and `C_λ = C_ν^{b_λ}` with `Δ_t(λ) = (ρ, ν)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSmoothing {
    pub b: i64,
    pub region: SmoothedRegion,
    pub division: CoreQuotient,
}

/// `b_λ = max_{0 ≤ i < j < t} |p_i - p_j|` over the core's justification
/// positions, i.e. their spread.
pub fn canonical_smoothing(lambda: &Partition, t: usize) -> Result<CanonicalSmoothing> {
    let division = decompose(lambda, t)?;
    let b = division.positions.spread();
    let region = b_smoothing(&division.divisible, t, b)?;
    Ok(CanonicalSmoothing {
        b,
        region,
        division,
    })
}

/// `b_λ` alone.
pub fn b_lambda(lambda: &Partition, t: usize) -> Result<i64> {
    let rho = crate::corequotient::core(lambda, t)?;
    Ok(core_positions(&rho, t)?.spread())
}

/// The injection `φ: C_λ → λ`. The cell of `C_λ ⊆ ν` with its 0 on runner
/// `a`, column `i` and its 1 on runner `b`, column `j` goes to the cell of
/// `λ` whose pair sits at columns `i + p_a` and `j + p_b` of the same
/// runners. Returned as `(c, φ(c))` in row-major order of `c`.
pub fn phi_map(lambda: &Partition, t: usize) -> Result<Vec<(Cell, Cell)>> {
    let canon = canonical_smoothing(lambda, t)?;
    let ti = t as i64;
    let p = &canon.division.positions.0;
    let nu = &canon.division.divisible;
    let nu_pos = PairPositions::of(nu);
    let lam_pos = PairPositions::of(lambda);
    let row_of: HashMap<i64, usize> = lam_pos
        .rows
        .iter()
        .enumerate()
        .map(|(r, &g)| (g, r + 1))
        .collect();
    let col_of: HashMap<i64, usize> = lam_pos
        .cols
        .iter()
        .enumerate()
        .map(|(c, &g)| (g, c + 1))
        .collect();
    let moved = |g: i64| {
        let r = g.rem_euclid(ti);
        g + p[r as usize] * ti
    };
    canon
        .region
        .cells
        .cells()
        .map(|c| {
            let (g0, g1) = nu_pos.pair(c);
            let (h0, h1) = (moved(g0), moved(g1));
            let image = match (col_of.get(&h0), row_of.get(&h1)) {
                (Some(&col), Some(&row)) if h0 < h1 => Cell::new(row, col),
                _ => unreachable!("φ lands on a (0, 1) pair of λ"),
            };
            Ok((c, image))
        })
        .collect()
}

/// `#{c ∈ λ : h_c < m}`.
pub fn small_hook_count(lambda: &Partition, m: usize) -> usize {
    lambda.hook_lengths().into_iter().filter(|&h| h < m).count()
}

/// The `S_t`-orbits of the t-divisible partitions of `m`, each sorted, in
/// order of their least element.
pub fn divisible_orbits(m: usize, t: usize) -> Result<Vec<Vec<Partition>>> {
    check_modulus(t)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for nu in partitions(m) {
        if !is_divisible(&nu, t)? || seen.contains(&nu) {
            continue;
        }
        let members: BTreeSet<Partition> = orbit(&nu, t)?.into_iter().map(|(_, p)| p).collect();
        seen.extend(members.iter().cloned());
        out.push(members.into_iter().collect());
    }
    Ok(out)
}

/// Balanced abacus word of `λ`, re-exported for callers that render pairs.
pub fn abacus_of(lambda: &Partition) -> AbacusWord {
    AbacusWord::from_partition(lambda)
}
