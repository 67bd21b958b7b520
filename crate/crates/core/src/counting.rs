//! Exact counting series: partitions `p(n)`, t-cores `c_t(n)`, t-divisible
//! partitions `d_t(n)` and the core census `C_t(n)`, plus leading-order
//! asymptotics.
//!
//! Series are dense truncated power series over big integers. Each Euler
//! factor `1/(1 - x^k)` or `(1 - x^k)` is applied by one in-place pass.

use std::f64::consts::PI;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::abacus::check_modulus;
use crate::error::Result;
use crate::lattice::{ball_volume, lattice_covolume};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `p(n)`.
    Partitions,
    /// `c_t(n)`.
    Cores,
    /// `d_t(n)`.
    Divisible,
    /// `C_t(n)`.
    CoreSums,
}

/// Exact values `a(0), …, a(max_n)` of one counting sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    pub kind: SeriesKind,
    pub t: Option<usize>,
    values: Vec<BigUint>,
}

impl SeriesTable {
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    /// `a(n)`; panics past `max_n`.
    pub fn get(&self, n: usize) -> &BigUint {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn into_values(self) -> Vec<BigUint> {
        self.values
    }
}

fn divide_by_one_minus_power(series: &mut [BigInt], k: usize) {
    for i in k..series.len() {
        let (lo, hi) = series.split_at_mut(i);
        hi[0] += &lo[i - k];
    }
}

fn multiply_by_one_minus_power(series: &mut [BigInt], k: usize) {
    for i in (k..series.len()).rev() {
        let (lo, hi) = series.split_at_mut(i);
        hi[0] -= &lo[i - k];
    }
}

fn unit_series(max_n: usize) -> Vec<BigInt> {
    let mut s = vec![BigInt::zero(); max_n + 1];
    s[0] = BigInt::one();
    s
}

fn into_table(kind: SeriesKind, t: Option<usize>, series: Vec<BigInt>) -> SeriesTable {
    let values = series
        .into_iter()
        .map(|v| {
            let (sign, mag) = v.into_parts();
            assert!(
                sign != Sign::Minus,
                "counting series produced a negative coefficient"
            );
            mag
        })
        .collect();
    SeriesTable { kind, t, values }
}

fn partition_series(max_n: usize) -> Vec<BigInt> {
    let mut s = unit_series(max_n);
    for k in 1..=max_n {
        divide_by_one_minus_power(&mut s, k);
    }
    s
}

/// `p(0..=max_n)` from `∏_{j≥1} 1/(1 - x^j)`.
pub fn partition_count_table(max_n: usize) -> SeriesTable {
    into_table(SeriesKind::Partitions, None, partition_series(max_n))
}

/// `p(0..=max_n)` from Euler's pentagonal-number recurrence; an independent
/// route to the same numbers.
pub fn partition_count_pentagonal(max_n: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = Vec::with_capacity(max_n + 1);
    p.push(BigInt::one());
    for n in 1..=max_n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.into_iter().map(|v| v.into_parts().1).collect()
}

/// `c_t(0..=max_n)` from `∏_{k≥1} (1 - x^{tk})^t / (1 - x^k)`.
pub fn core_count_table(t: usize, max_n: usize) -> Result<SeriesTable> {
    check_modulus(t)?;
    let mut s = partition_series(max_n);
    for k in 1..=max_n / t {
        for _ in 0..t {
            multiply_by_one_minus_power(&mut s, t * k);
        }
    }
    Ok(into_table(SeriesKind::Cores, Some(t), s))
}

/// `d_t(0..=max_n)` from `∏_{k≥1} 1/(1 - x^{tk})^t`.
pub fn divisible_count_table(t: usize, max_n: usize) -> Result<SeriesTable> {
    check_modulus(t)?;
    let mut s = unit_series(max_n);
    for k in 1..=max_n / t {
        for _ in 0..t {
            divide_by_one_minus_power(&mut s, t * k);
        }
    }
    Ok(into_table(SeriesKind::Divisible, Some(t), s))
}

/// `C_t(0..=max_n)` where `C_t(n) = Σ_{i ≤ n/t} c_t(n - it)`.
pub fn core_sum_table(t: usize, max_n: usize) -> Result<SeriesTable> {
    let cores = core_count_table(t, max_n)?;
    Ok(core_sums_from(&cores))
}

/// Prefix sums of `c_t` along residue classes mod `t`.
pub fn core_sums_from(cores: &SeriesTable) -> SeriesTable {
    let t = cores.t.expect("core table carries t");
    let mut values: Vec<BigUint> = Vec::with_capacity(cores.values.len());
    for n in 0..cores.values.len() {
        let mut v = cores.values[n].clone();
        if n >= t {
            v += &values[n - t];
        }
        values.push(v);
    }
    SeriesTable {
        kind: SeriesKind::CoreSums,
        t: Some(t),
        values,
    }
}

/// `C_t(n)`, the number of distinct t-cores of partitions of `n`.
pub fn core_sum(t: usize, n: usize) -> Result<BigUint> {
    let cores = core_count_table(t, n)?;
    Ok((0..=n / t).map(|i| cores.get(n - i * t)).sum())
}

/// `p`, `c_t`, `d_t` computed together up to `max_n`.
#[derive(Debug, Clone)]
pub struct CountTables {
    pub t: usize,
    pub partitions: SeriesTable,
    pub cores: SeriesTable,
    pub divisible: SeriesTable,
}

impl CountTables {
    pub fn new(t: usize, max_n: usize) -> Result<Self> {
        Ok(CountTables {
            t,
            partitions: partition_count_table(max_n),
            cores: core_count_table(t, max_n)?,
            divisible: divisible_count_table(t, max_n)?,
        })
    }

    pub fn max_n(&self) -> usize {
        self.partitions.max_n()
    }
}

/// `c_3(n) = Σ_{d | 3n+1} (d/3)` with the Legendre symbol mod 3, by trial
/// division.
pub fn c3_divisor_oracle(n: u64) -> i64 {
    let m = 3 * n + 1;
    let legendre = |d: u64| match d % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    };
    let mut total = 0;
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            total += legendre(d);
            if d * d != m {
                total += legendre(m / d);
            }
        }
        d += 1;
    }
    total
}

/// Leading-order estimates for plot overlays.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticEstimates {
    /// `exp(π√(2n/3)) / (4n√3)`.
    pub partitions: f64,
    /// The `d_t(n)` leading term; `None` when `t ∤ n`, where `d_t(n) = 0`.
    pub divisible: Option<f64>,
    /// Leading term of `C_t(n)`.
    pub core_sum: f64,
}

pub fn asymptotic_estimates(t: usize, n: usize) -> Result<AsymptoticEstimates> {
    check_modulus(t)?;
    let nf = n as f64;
    let tf = t as f64;
    let growth = (PI * (2.0 * nf / 3.0).sqrt()).exp();
    let partitions = growth / (4.0 * nf * 3f64.sqrt());
    let divisible = (n % t == 0).then(|| {
        tf.powf((tf + 2.0) / 2.0) * growth
            / (2f64.powf((3.0 * tf + 5.0) / 4.0)
                * 3f64.powf((tf + 1.0) / 4.0)
                * nf.powf((tf + 3.0) / 4.0))
    });
    Ok(AsymptoticEstimates {
        partitions,
        divisible,
        core_sum: core_sum_leading_term(t, nf),
    })
}

/// `(2π)^{(t-1)/2} / (t^{(t+2)/2} Γ((t+1)/2)) · (n + (t²-1)/24)^{(t-1)/2}`.
pub fn core_sum_leading_term(t: usize, n: f64) -> f64 {
    let tf = t as f64;
    let half = (tf - 1.0) / 2.0;
    (2.0 * PI).powf(half) / (tf.powf((tf + 2.0) / 2.0) * crate::special::gamma((tf + 1.0) / 2.0))
        * (n + (tf * tf - 1.0) / 24.0).powf(half)
}

/// The same leading term assembled geometrically: the ball volume divided
/// by the covolume of the shifted sublattice `t·Λ_t` (`t^{t-1}·√t`), times
/// the `t^{t-2}` residue classes that satisfy `F_t ≡ n (mod t)`.
pub fn core_sum_volume_estimate(t: usize, n: f64) -> f64 {
    let tf = t as f64;
    let classes = tf.powi(t as i32 - 2);
    let sublattice = tf.powi(t as i32 - 1) * lattice_covolume(t);
    ball_volume(t, n) / sublattice * classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(table: &SeriesTable) -> Vec<u64> {
        table
            .values()
            .iter()
            .map(|v| v.try_into().unwrap())
            .collect()
    }

    #[test]
    fn partition_numbers() {
        let p = small(&partition_count_table(10));
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partition_count_table(100).get(100).to_string(), "190569292");
    }

    #[test]
    fn pentagonal_agrees_with_product() {
        let a = partition_count_table(1000).into_values();
        let b = partition_count_pentagonal(1000);
        assert_eq!(a, b);
        assert_eq!(a[1000].to_string(), "24061467864032622473692149727991");
    }

    #[test]
    fn two_cores_are_staircases() {
        let c2 = small(&core_count_table(2, 100).unwrap());
        for (n, &v) in c2.iter().enumerate() {
            let triangular = (1..=20).any(|k| k * (k - 1) / 2 == n);
            assert_eq!(v, triangular as u64, "n = {n}");
        }
    }

    #[test]
    fn small_core_counts() {
        let c3 = small(&core_count_table(3, 4).unwrap());
        assert_eq!(c3, vec![1, 1, 2, 0, 2]);
        for t in 2..=7 {
            assert_eq!(core_count_table(t, 0).unwrap().get(0), &BigUint::one());
        }
    }

    #[test]
    fn divisible_counts() {
        for t in 2..=6 {
            let d = divisible_count_table(t, 3 * t).unwrap();
            assert_eq!(d.get(0), &BigUint::one());
            assert_eq!(d.get(t), &BigUint::from(t));
            for m in 0..=3 * t {
                if m % t != 0 {
                    assert!(d.get(m).is_zero());
                }
            }
        }
        assert_eq!(
            divisible_count_table(3, 3).unwrap().get(3),
            &BigUint::from(3u32)
        );
    }

    #[test]
    fn core_sums() {
        assert_eq!(core_sum(3, 3).unwrap(), BigUint::from(1u32));
        assert_eq!(core_sum(3, 4).unwrap(), BigUint::from(3u32));
        assert_eq!(core_sum(5, 0).unwrap(), BigUint::one());
        let cores = core_count_table(4, 60).unwrap();
        let sums = core_sums_from(&cores);
        for n in 4..=60 {
            assert_eq!(sums.get(n), &(sums.get(n - 4) + cores.get(n)));
            assert_eq!(sums.get(n), &core_sum(4, n).unwrap());
        }
    }

    #[test]
    fn divisor_oracle_matches_three_cores() {
        assert_eq!(c3_divisor_oracle(1), 1);
        assert_eq!(c3_divisor_oracle(3), 0);
        let c3 = small(&core_count_table(3, 200).unwrap());
        for (n, &c) in c3.iter().enumerate() {
            assert_eq!(c3_divisor_oracle(n as u64), c as i64, "n = {n}");
        }
    }

    #[test]
    fn rejects_small_modulus() {
        assert!(core_count_table(1, 5).is_err());
        assert!(divisible_count_table(0, 5).is_err());
        assert!(asymptotic_estimates(1, 5).is_err());
    }

    #[test]
    fn estimates() {
        let e = asymptotic_estimates(3, 100).unwrap();
        let exact = 190_569_292f64;
        assert!((e.partitions / exact - 1.0).abs() < 0.05);
        assert!(e.divisible.is_none());
        assert!(asymptotic_estimates(3, 99).unwrap().divisible.is_some());
        // Exponent (t-1)/2 = 1 for t = 3: doubling n roughly doubles the term.
        let r = core_sum_leading_term(3, 20000.0) / core_sum_leading_term(3, 10000.0);
        assert!((r - 2.0).abs() < 1e-3);
    }

    #[test]
    fn volume_route_matches_closed_form() {
        for t in 2..=8 {
            for n in [0.0, 1.0, 17.0, 1000.0] {
                let a = core_sum_leading_term(t, n);
                let b = core_sum_volume_estimate(t, n);
                assert!(
                    (a - b).abs() <= 1e-12 * a.abs().max(1.0),
                    "t={t} n={n}: {a} vs {b}"
                );
            }
        }
    }
}
