//! The size `Y_n = |core_t(λ)|` of the t-core of a uniform random partition
//! `λ ⊢ n`, and its limit law: `Y_n/√n` tends to a gamma distribution with
//! shape `(t-1)/2` and rate `π/√6`.
//!
//! Masses are exact rationals `c_t(k)·d_t(n-k)/p(n)`; floating point only
//! appears when comparing with the gamma law.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::abacus::check_modulus;
use crate::counting::CountTables;
use crate::error::Result;
use crate::special::{gamma, ln_gamma, lower_regularized_gamma};

/// Exact law of `Y_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreSizePmf {
    pub t: usize,
    pub n: usize,
    /// `k ↦ (c_t(k), d_t(n-k))` over the support.
    factors: BTreeMap<usize, (BigUint, BigUint)>,
    /// `p(n)`.
    total: BigUint,
}

impl CoreSizePmf {
    /// Assembles the law from precomputed tables; `n ≤ tables.max_n()`.
    pub fn from_tables(tables: &CountTables, n: usize) -> Self {
        let t = tables.t;
        let factors = (n % t..=n)
            .step_by(t)
            .filter_map(|k| {
                let c = tables.cores.get(k);
                let d = tables.divisible.get(n - k);
                (!c.is_zero() && !d.is_zero()).then(|| (k, (c.clone(), d.clone())))
            })
            .collect();
        CoreSizePmf {
            t,
            n,
            factors,
            total: tables.partitions.get(n).clone(),
        }
    }

    /// Core sizes with positive mass, increasing.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.factors.keys().copied()
    }

    /// `c_t(k)` and `d_t(n-k)`; zeros off the support.
    pub fn factors(&self, k: usize) -> (BigUint, BigUint) {
        self.factors
            .get(&k)
            .cloned()
            .unwrap_or_else(|| (BigUint::zero(), BigUint::zero()))
    }

    /// `#{λ ⊢ n : |core_t(λ)| = k} = c_t(k)·d_t(n-k)`.
    pub fn weight(&self, k: usize) -> BigUint {
        self.factors.get(&k).map(|(c, d)| c * d).unwrap_or_default()
    }

    /// `p(n)`.
    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn mass(&self, k: usize) -> BigRational {
        ratio(self.weight(k), self.total.clone())
    }

    pub fn masses(&self) -> BTreeMap<usize, BigRational> {
        self.support().map(|k| (k, self.mass(k))).collect()
    }

    /// `E[Y_n^k]`, exact.
    pub fn raw_moment(&self, k: u32) -> BigRational {
        let sum: BigUint = self
            .factors
            .iter()
            .map(|(&j, (c, d))| BigUint::from(j).pow(k) * c * d)
            .sum();
        ratio(sum, self.total.clone())
    }

    /// `P(Y_n/√n ≤ x)`.
    pub fn scaled_cdf(&self, x: f64) -> f64 {
        let below: BigUint = self
            .factors
            .iter()
            .filter(|(&k, _)| self.scale(k) <= x)
            .map(|(_, (c, d))| c * d)
            .sum();
        to_f64(&ratio(below, self.total.clone()))
    }

    /// `k/√n`, with `0` at `n = 0`.
    pub fn scale(&self, k: usize) -> f64 {
        if k == 0 {
            0.0
        } else {
            k as f64 / (self.n as f64).sqrt()
        }
    }

    /// Bars of width `1/√n` at `k/√n` with height `mass·√n`, so the bars
    /// have total area 1.
    pub fn density_bars(&self) -> Vec<DensityBar> {
        let root = (self.n as f64).sqrt();
        self.support()
            .map(|k| {
                let mass = to_f64(&self.mass(k));
                DensityBar {
                    k,
                    x: self.scale(k),
                    height: if self.n == 0 { mass } else { mass * root },
                }
            })
            .collect()
    }
}

/// One bar of the rescaled histogram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityBar {
    pub k: usize,
    pub x: f64,
    pub height: f64,
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Nearest-ish `f64` of an exact rational.
pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("finite ratio")
}

/// The law of `Y_n` for a single `(t, n)`.
pub fn core_size_pmf(t: usize, n: usize) -> Result<CoreSizePmf> {
    check_modulus(t)?;
    Ok(CoreSizePmf::from_tables(&CountTables::new(t, n)?, n))
}

/// `E[(Y_n/√n)^k]`: the rational moment is exact, then divided once by
/// `n^{k/2}`.
pub fn scaled_moment(pmf: &CoreSizePmf, k: u32) -> f64 {
    if k == 0 {
        return 1.0;
    }
    to_f64(&pmf.raw_moment(k)) / (pmf.n as f64).powf(k as f64 / 2.0)
}

/// Gamma law with density `β^α x^{α-1} e^{-βx} / Γ(α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaParams {
    /// `α`.
    pub shape: f64,
    /// `β`.
    pub rate: f64,
}

impl GammaParams {
    pub fn new(shape: f64, rate: f64) -> Self {
        assert!(
            shape > 0.0 && rate > 0.0,
            "gamma parameters must be positive"
        );
        GammaParams { shape, rate }
    }

    /// The limit law of `|core_t(λ)|/√n`: `α = (t-1)/2`, `β = π/√6`.
    pub fn for_cores(t: usize) -> Result<Self> {
        check_modulus(t)?;
        Ok(GammaParams::new((t as f64 - 1.0) / 2.0, PI / 6f64.sqrt()))
    }

    pub fn cdf(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return 0.0;
        }
        lower_regularized_gamma(self.shape, self.rate * x)
    }

    pub fn density(&self, x: f64) -> f64 {
        if x < 0.0 {
            return 0.0;
        }
        if x == 0.0 {
            return match self.shape.partial_cmp(&1.0) {
                Some(std::cmp::Ordering::Less) => f64::INFINITY,
                Some(std::cmp::Ordering::Equal) => self.rate,
                _ => 0.0,
            };
        }
        (self.shape * self.rate.ln() + (self.shape - 1.0) * x.ln()
            - self.rate * x
            - ln_gamma(self.shape))
        .exp()
    }

    /// `m_k = Γ(k+α)/(β^k Γ(α)) = ∏_{i=0}^{k-1} (α+i)/β`.
    pub fn moment(&self, k: u32) -> f64 {
        (0..k)
            .map(|i| (self.shape + i as f64) / self.rate)
            .product()
    }

    pub fn mean(&self) -> f64 {
        self.shape / self.rate
    }
}

/// `sup_x |P(Y_n/√n ≤ x) - G(x)|` for the gamma CDF `G`.
///
/// The empirical CDF is a right-continuous step function and `G` is
/// continuous and increasing, so the supremum is attained at a left or
/// right limit of some jump; both are checked.
pub fn cdf_sup_distance(pmf: &CoreSizePmf, g: &GammaParams) -> f64 {
    let mut below = BigUint::zero();
    let mut sup: f64 = 0.0;
    for (&k, (c, d)) in &pmf.factors {
        let x = pmf.scale(k);
        let gx = g.cdf(x);
        let left = to_f64(&ratio(below.clone(), pmf.total.clone()));
        below += c * d;
        let right = to_f64(&ratio(below.clone(), pmf.total.clone()));
        sup = sup.max((left - gx).abs()).max((right - gx).abs());
    }
    sup
}

/// `E|core_t(λ)|` over `λ ⊢ n`, exact, beside its asymptote `(t-1)√(6n)/(2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedCoreSize {
    pub t: usize,
    pub n: usize,
    pub exact: BigRational,
    pub asymptote: f64,
}

impl ExpectedCoreSize {
    pub fn exact_f64(&self) -> f64 {
        to_f64(&self.exact)
    }

    /// `exact/asymptote`.
    pub fn ratio(&self) -> f64 {
        self.exact_f64() / self.asymptote
    }
}

pub fn expected_core_size(t: usize, n: usize) -> Result<ExpectedCoreSize> {
    let pmf = core_size_pmf(t, n)?;
    Ok(expected_core_size_of(&pmf))
}

/// [`expected_core_size`] from an existing law.
pub fn expected_core_size_of(pmf: &CoreSizePmf) -> ExpectedCoreSize {
    ExpectedCoreSize {
        t: pmf.t,
        n: pmf.n,
        exact: pmf.raw_moment(1),
        asymptote: core_size_asymptote(pmf.t, pmf.n as f64),
    }
}

/// `(t-1)√(6n)/(2π)`.
pub fn core_size_asymptote(t: usize, n: f64) -> f64 {
    (t as f64 - 1.0) * (6.0 * n).sqrt() / (2.0 * PI)
}

/// `Γ(k+α)/(β^k Γ(α))` via the gamma function directly; used to cross-check
/// the product form of [`GammaParams::moment`].
pub fn gamma_moment_closed_form(g: &GammaParams, k: u32) -> f64 {
    gamma(k as f64 + g.shape) / (g.rate.powi(k as i32) * gamma(g.shape))
}
