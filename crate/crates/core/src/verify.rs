//! Brute-force verification of the finite-n identities at a chosen scale.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::corequotient::{compose, core, decompose, is_core};
use crate::counting::{c3_divisor_oracle, core_count_table, core_sum_table};
use crate::distribution::{core_size_pmf, gamma_moment_closed_form, scaled_moment, GammaParams};
use crate::error::{Error, Result};
use crate::hookstats::{
    b_smoothing, canonical_smoothing, divisible_orbits, orbit_table, phi_map, residue_census,
    small_hook_count,
};
use crate::lattice::{lattice_core_counts, mod_solution_counts};
use crate::partition::{partitions, Partition};
use crate::sampling::{build_sampler, sample_batch};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Counting,
    CoreQuotient,
    Distribution,
    Hooks,
    Sampling,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "all",
        "counting",
        "corequotient",
        "distribution",
        "hooks",
        "sampling",
    ];

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            Suite::All => 0,
            Suite::Counting => 1,
            Suite::CoreQuotient => 2,
            Suite::Distribution => 3,
            Suite::Hooks => 4,
            Suite::Sampling => 5,
        };
        f.write_str(Self::NAMES[i])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "counting" => Suite::Counting,
            "corequotient" => Suite::CoreQuotient,
            "distribution" => Suite::Distribution,
            "hooks" => Suite::Hooks,
            "sampling" => Suite::Sampling,
            _ => return Err(Error::Parse(s.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseRecord {
    pub name: String,
    pub params: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: Suite,
    pub cases: Vec<CaseRecord>,
    pub master_seed: u64,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }
}

/// `Err` carries the first failure found.
type Check = std::result::Result<(), String>;

trait OrFail<T> {
    fn or_fail(self) -> std::result::Result<T, String>;
}

impl<T> OrFail<T> for Result<T> {
    fn or_fail(self) -> std::result::Result<T, String> {
        self.map_err(|e| format!("error: {e}"))
    }
}

/// `Some(detail)` is a failure.
fn failure(found: Option<String>) -> Check {
    found.map_or(Ok(()), Err)
}

fn record(name: &str, params: String, check: Check) -> CaseRecord {
    let passed = check.is_ok();
    CaseRecord {
        name: name.to_string(),
        params,
        passed,
        detail: check.err().unwrap_or_else(|| "ok".to_string()),
    }
}

fn is_core_by_hooks(lambda: &Partition, t: usize) -> bool {
    lambda.hook_lengths().iter().all(|h| h % t != 0)
}

fn core_counts(max_n: usize) -> Check {
    for t in 2..=6 {
        let series = core_count_table(t, max_n).or_fail()?;
        let lattice = lattice_core_counts(t, max_n).or_fail()?;
        for (n, &count) in lattice.iter().enumerate() {
            let brute = partitions(n).filter(|l| is_core_by_hooks(l, t)).count();
            if series.get(n) != &BigUint::from(count) || count != brute as u64 {
                return Err(format!("t={t} n={n}"));
            }
        }
    }
    Ok(())
}

fn core_census(max_n: usize) -> Check {
    for t in 2..=5 {
        let sums = core_sum_table(t, max_n).or_fail()?;
        for n in 0..=max_n {
            let distinct: HashSet<Partition> = partitions(n)
                .map(|l| core(&l, t))
                .collect::<Result<_>>()
                .or_fail()?;
            if sums.get(n) != &BigUint::from(distinct.len()) {
                return Err(format!("t={t} n={n}"));
            }
        }
    }
    Ok(())
}

fn mod_counts() -> Check {
    for t in 2..=5 {
        let expected = (t as u64).pow(t as u32 - 2);
        if mod_solution_counts(t)
            .or_fail()?
            .iter()
            .any(|&c| c != expected)
        {
            return Err(format!("t={t}"));
        }
    }
    Ok(())
}

fn divisor_formula(max_n: usize) -> Check {
    let series = core_count_table(3, max_n).or_fail()?;
    failure(
        (0..=max_n)
            .find(|&n| series.get(n) != &BigUint::from(c3_divisor_oracle(n as u64) as u64))
            .map(|n| format!("n={n}")),
    )
}

fn division_bijection(max_n: usize) -> Check {
    for t in 2..=4 {
        for n in 0..=max_n {
            let mut seen = HashSet::new();
            for lam in partitions(n) {
                let d = decompose(&lam, t).or_fail()?;
                let back = compose(&d.core, &d.quotient, t).or_fail()?;
                let sizes = d.core.size() + d.divisible.size() == n;
                let core_ok = is_core(&d.core, t).or_fail()? == is_core_by_hooks(&d.core, t)
                    && is_core_by_hooks(&d.core, t);
                if back != lam || !sizes || !core_ok || !seen.insert((d.core, d.quotient)) {
                    return Err(format!("{lam}, t={t}"));
                }
            }
        }
    }
    Ok(())
}

fn fixed_core_histogram(max_n: usize) -> Check {
    for t in 2..=5 {
        for n in 0..=max_n {
            let pmf = core_size_pmf(t, n).or_fail()?;
            let mut hist: HashMap<usize, u64> = HashMap::new();
            for lam in partitions(n) {
                *hist.entry(core(&lam, t).or_fail()?.size()).or_default() += 1;
            }
            for (&k, &count) in &hist {
                let (c, d) = pmf.factors(k);
                if c * d != BigUint::from(count) {
                    return Err(format!("t={t} n={n} k={k}"));
                }
            }
            let sum: BigRational = pmf.masses().into_values().sum();
            if pmf.support().count() != hist.len() || !sum.is_one() {
                return Err(format!("t={t} n={n}"));
            }
        }
    }
    Ok(())
}

fn moment_gaps() -> Check {
    let g = GammaParams::for_cores(3).or_fail()?;
    let small = core_size_pmf(3, 100).or_fail()?;
    let large = core_size_pmf(3, 1600).or_fail()?;
    failure(
        (1..=3)
            .find(|&k| {
                let limit = gamma_moment_closed_form(&g, k);
                (scaled_moment(&large, k) - limit).abs() >= (scaled_moment(&small, k) - limit).abs()
            })
            .map(|k| format!("k={k}")),
    )
}

fn residue_identities(max_n: usize) -> Check {
    for t in 2..=6 {
        for n in 0..=max_n {
            for lam in partitions(n) {
                let census = residue_census(&lam, t).or_fail()?;
                let rho = core(&lam, t).or_fail()?;
                let k = ((n - rho.size()) / t) as u64;
                let cc = residue_census(&rho, t).or_fail()?;
                let pairs_ok = (1..t).all(|r| {
                    if 2 * r == t {
                        census.counts[r] == k + cc.counts[r]
                    } else {
                        census.counts[r] + census.counts[t - r]
                            == 2 * k + cc.counts[r] + cc.counts[t - r]
                    }
                });
                if census.counts[0] != k || !pairs_ok {
                    return Err(format!("{lam}, t={t}"));
                }
            }
        }
    }
    Ok(())
}

const ORBIT_TABLE: [&str; 6] = [
    "123 (7,3,2) (7,2) (4) (2)",
    "132 (7,4,1) (7,2) (4) (2)",
    "213 (8,2,2) (7,2) (4) (2)",
    "231 (8,4) (7,2) (4) (2)",
    "312 (9,2,1) (7,2) (4) (2)",
    "321 (9,3) (7,2) (4) (2)",
];

fn orbit_example() -> Check {
    let nu = Partition::new(vec![7, 3, 2]).or_fail()?;
    let rows = orbit_table(&nu, 3, 2).or_fail()?;
    let lines: Vec<String> = rows
        .iter()
        .map(|r| {
            let mut s = format!("{} {}", r.word, r.member);
            for c in &r.smoothings {
                s += &format!(" {c}");
            }
            s
        })
        .collect();
    failure((lines != ORBIT_TABLE).then(|| lines.join("; ")))
}

fn phi_injective(max_n: usize) -> Check {
    for t in 2..=4 {
        for n in 0..=max_n {
            for lam in partitions(n) {
                let nu = decompose(&lam, t).or_fail()?.divisible;
                let map = phi_map(&lam, t).or_fail()?;
                let images: HashSet<_> = map.iter().map(|&(_, f)| f).collect();
                let mut residues = true;
                for &(c, f) in &map {
                    residues &=
                        nu.hook_length(c).or_fail()? % t == lam.hook_length(f).or_fail()? % t;
                }
                if images.len() != map.len() || !residues {
                    return Err(format!("{lam}, t={t}"));
                }
            }
        }
    }
    Ok(())
}

fn smoothing_bounds(max_n: usize) -> Check {
    for t in 2..=5 {
        for n in 0..=max_n {
            for lam in partitions(n) {
                let c = canonical_smoothing(&lam, t).or_fail()?;
                let nu = &c.division.divisible;
                let missing = nu.size() - c.region.cells.size();
                let spread_ok = c.b as f64 <= 2.0 * (c.division.core.size() as f64).sqrt();
                let cover_ok = missing <= small_hook_count(nu, t * (c.b as usize + 1));
                if !spread_ok || !cover_ok {
                    return Err(format!("{lam}, t={t}"));
                }
            }
        }
    }
    Ok(())
}

fn small_hooks(max_n: usize) -> Check {
    for n in 1..=max_n {
        let root = (2.0 * n as f64).sqrt();
        for lam in partitions(n) {
            if (1..=n).any(|m| small_hook_count(&lam, m) as f64 >= m as f64 * root) {
                return Err(format!("{lam}"));
            }
        }
    }
    Ok(())
}

fn equidistribution(max_n: usize) -> Check {
    for m in (0..=max_n).step_by(3) {
        for members in divisible_orbits(m, 3).or_fail()? {
            for b in 0..=m as i64 {
                let mut totals = [0u64; 3];
                for nu in &members {
                    for c in b_smoothing(nu, 3, b).or_fail()?.cells.cells() {
                        totals[nu.hook_length(c).or_fail()? % 3] += 1;
                    }
                }
                if totals[1] != totals[2] {
                    return Err(format!("orbit of {} at b={b}", members[0]));
                }
            }
        }
    }
    Ok(())
}

fn exact_uniformity(max_n: usize) -> Check {
    for n in 0..=max_n {
        let table = build_sampler(n);
        let uniform = BigRational::new(BigInt::one(), table.total().into());
        for lam in partitions(n) {
            if table.selection_probability(&lam).or_fail()? != uniform {
                return Err(format!("{lam}"));
            }
        }
    }
    Ok(())
}

fn frequencies(seed: u64, samples: usize) -> Check {
    let table = build_sampler(8);
    let mut freq: HashMap<Partition, usize> = HashMap::new();
    for lam in sample_batch(&table, seed, samples) {
        *freq.entry(lam).or_default() += 1;
    }
    failure(
        partitions(8)
            .map(|l| {
                (freq.get(&l).copied().unwrap_or(0) as f64 / samples as f64 - 1.0 / 22.0).abs()
            })
            .find(|&dev| dev >= 0.01)
            .map(|dev| format!("deviation {dev}")),
    )
}

fn rerun_identical(seed: u64) -> Check {
    let table = build_sampler(40);
    let first = sample_batch(&table, seed, 5000);
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?;
    let second = single.install(|| sample_batch(&table, seed, 5000));
    failure((first != second).then(|| "reruns differ".to_string()))
}

/// Runs `suite` with enumeration up to `max_n`. Cases that would grow
/// past desk scale are capped.
pub fn run_suite(suite: Suite, max_n: usize, master_seed: u64) -> VerificationReport {
    let start = Instant::now();
    let mut cases = Vec::new();
    let small = max_n.min(18);
    if suite.includes(Suite::Counting) {
        cases.push(record(
            "core_counts",
            format!("t=2..6, n<={max_n}"),
            core_counts(max_n),
        ));
        cases.push(record(
            "core_census",
            format!("t=2..5, n<={max_n}"),
            core_census(max_n),
        ));
        cases.push(record("mod_solution_counts", "t=2..5".into(), mod_counts()));
        let m = 50 * max_n.max(1);
        cases.push(record(
            "c3_divisor_formula",
            format!("n<={m}"),
            divisor_formula(m),
        ));
    }
    if suite.includes(Suite::CoreQuotient) {
        cases.push(record(
            "division_bijection",
            format!("t=2..4, n<={max_n}"),
            division_bijection(max_n),
        ));
    }
    if suite.includes(Suite::Distribution) {
        cases.push(record(
            "fixed_core_histogram",
            format!("t=2..5, n<={max_n}"),
            fixed_core_histogram(max_n),
        ));
        cases.push(record(
            "moment_gaps",
            "t=3, n=100,1600, k=1..3".into(),
            moment_gaps(),
        ));
    }
    if suite.includes(Suite::Hooks) {
        cases.push(record(
            "residue_identities",
            format!("t=2..6, n<={max_n}"),
            residue_identities(max_n),
        ));
        cases.push(record(
            "orbit_table",
            "nu=(7,3,2), t=3, b=0..2".into(),
            orbit_example(),
        ));
        cases.push(record(
            "phi_injective",
            format!("t=2..4, n<={small}"),
            phi_injective(small),
        ));
        cases.push(record(
            "smoothing_bounds",
            format!("t=2..5, n<={max_n}"),
            smoothing_bounds(max_n),
        ));
        cases.push(record(
            "small_hooks",
            format!("n<={max_n}"),
            small_hooks(max_n),
        ));
        cases.push(record(
            "orbit_equidistribution",
            format!("t=3, m<={max_n}"),
            equidistribution(max_n),
        ));
    }
    if suite.includes(Suite::Sampling) {
        let u = max_n.min(10);
        cases.push(record(
            "exact_uniformity",
            format!("n<={u}"),
            exact_uniformity(u),
        ));
        cases.push(record(
            "frequencies",
            "n=8, samples=100000".into(),
            frequencies(master_seed, 100_000),
        ));
        cases.push(record(
            "rerun_identical",
            "n=40, samples=5000".into(),
            rerun_identical(master_seed),
        ));
    }
    VerificationReport {
        suite,
        cases,
        master_seed,
        elapsed_ms: start.elapsed().as_millis(),
    }
}
