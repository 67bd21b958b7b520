//! The lattice `Λ_t = H_t ∩ Z^t` of zero-sum integer vectors and the
//! quadratic form
//!
//! ```text
//! F_t(p) = (t/2) Σ p_i² + Σ i·p_i
//! ```
//!
//! whose level sets `F_t = n` count the t-cores of `n`: a t-core's runner
//! justification positions are exactly such a point.

use rayon::prelude::*;

use crate::abacus::check_modulus;
use crate::error::{Error, Result};

/// A point of `Λ_t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        check_modulus(coords.len())?;
        let sum: i64 = coords.iter().sum();
        if sum != 0 {
            return Err(Error::NonzeroSum(sum));
        }
        Ok(LatticePoint(coords))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// `F_t(p)`; always a nonnegative integer on `Λ_t`.
pub fn f_t(p: &LatticePoint) -> i64 {
    quadratic_form(p.coords())
}

fn quadratic_form(p: &[i64]) -> i64 {
    let t = p.len() as i64;
    let squares: i64 = p.iter().map(|x| x * x).sum();
    let linear: i64 = p.iter().enumerate().map(|(i, x)| i as i64 * x).sum();
    // t·Σp² is even whenever Σp = 0.
    (t * squares + 2 * linear) / 2
}

/// Integer square root.
fn isqrt(v: i64) -> i64 {
    let mut r = (v as f64).sqrt() as i64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// Histogram `h[n] = #{p ∈ Λ_t : F_t(p) = n}` for `n ≤ max_n`.
///
/// `F_t(p) ≤ N` is the ball `Σ (2t·p_i - (t-1-2i))² ≤ 8tN + t(t²-1)/3`
/// (all integers). The first `t-1` coordinates range over the box that the
/// ball implies, pruned by the partial sum of squares; the last coordinate
/// is fixed by the zero-sum constraint.
pub fn lattice_core_counts(t: usize, max_n: usize) -> Result<Vec<u64>> {
    check_modulus(t)?;
    let ti = t as i64;
    let bound = 8 * ti * max_n as i64 + ti * (ti * ti - 1) / 3;
    let centers: Vec<i64> = (0..ti).map(|i| ti - 1 - 2 * i).collect();
    let radius = isqrt(bound);
    let range = |i: usize| {
        let c = centers[i];
        let lo = -(-(c - radius)).div_euclid(2 * ti);
        let hi = (c + radius).div_euclid(2 * ti);
        lo..=hi
    };

    struct Walk<'a> {
        t: usize,
        max_n: usize,
        bound: i64,
        centers: &'a [i64],
        point: Vec<i64>,
        hist: Vec<u64>,
    }

    impl Walk<'_> {
        fn descend(
            &mut self,
            depth: usize,
            partial: i64,
            sum: i64,
            ranges: &dyn Fn(usize) -> std::ops::RangeInclusive<i64>,
        ) {
            let ti = self.t as i64;
            if depth == self.t - 1 {
                let last = -sum;
                let d = 2 * ti * last - self.centers[depth];
                if partial + d * d > self.bound {
                    return;
                }
                self.point[depth] = last;
                let f = quadratic_form(&self.point);
                if (f as usize) <= self.max_n {
                    self.hist[f as usize] += 1;
                }
                return;
            }
            for x in ranges(depth) {
                let d = 2 * ti * x - self.centers[depth];
                let next = partial + d * d;
                if next > self.bound {
                    continue;
                }
                self.point[depth] = x;
                self.descend(depth + 1, next, sum + x, ranges);
            }
        }
    }

    let outer: Vec<i64> = range(0).collect();
    let hist = outer
        .par_iter()
        .map(|&x0| {
            let mut walk = Walk {
                t,
                max_n,
                bound,
                centers: &centers,
                point: vec![0; t],
                hist: vec![0; max_n + 1],
            };
            let d = 2 * ti * x0 - centers[0];
            if d * d <= bound {
                walk.point[0] = x0;
                walk.descend(1, d * d, x0, &range);
            }
            walk.hist
        })
        .reduce(
            || vec![0; max_n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(hist)
}

/// Number of `p ∈ Λ_t` with `F_t(p) = n`.
pub fn lattice_core_count(t: usize, n: usize) -> Result<u64> {
    Ok(lattice_core_counts(t, n)?[n])
}

/// Exhaustive scan of `(Z/tZ)^t`: among the points with `Σ q_i ≡ 0`, the
/// number with `F_t(q) ≡ residue (mod t)`.
///
/// `F_t` is evaluated on the lift that moves `q_0` by a multiple of `t` so
/// the coordinates sum to exactly 0; its residue mod `t` does not depend on
/// the lift within `Λ_t`.
pub fn mod_solution_count(t: usize, residue: usize) -> Result<u64> {
    Ok(mod_solution_counts(t)?[residue % t])
}

/// [`mod_solution_count`] for every residue at once.
pub fn mod_solution_counts(t: usize) -> Result<Vec<u64>> {
    check_modulus(t)?;
    let ti = t as i64;
    let mut counts = vec![0u64; t];
    let mut q = vec![0i64; t];
    let total = (t as u64).pow(t as u32);
    for code in 0..total {
        let mut c = code;
        for slot in q.iter_mut() {
            *slot = (c % t as u64) as i64;
            c /= t as u64;
        }
        let sum: i64 = q.iter().sum();
        if sum % ti != 0 {
            continue;
        }
        let mut lift = q.clone();
        lift[0] -= sum;
        let f = quadratic_form(&lift);
        counts[f.rem_euclid(ti) as usize] += 1;
    }
    Ok(counts)
}

/// Volume of the `(t-1)`-ball `F_t ≤ n` inside `H_t`:
/// `(2π/t · (n + (t²-1)/24))^{(t-1)/2} / Γ((t+1)/2)`.
pub fn ball_volume(t: usize, n: f64) -> f64 {
    let tf = t as f64;
    let scaled = 2.0 * std::f64::consts::PI / tf * (n + (tf * tf - 1.0) / 24.0);
    scaled.powf((tf - 1.0) / 2.0) / crate::special::gamma((tf + 1.0) / 2.0)
}

/// Covolume of `Λ_t` in `H_t`: the square root of the Gram determinant of
/// the basis `e_0 - e_i`, `1 ≤ i < t` (so `A·Aᵀ = I + J`).
pub fn lattice_covolume(t: usize) -> f64 {
    let basis: Vec<Vec<i64>> = (1..t)
        .map(|i| {
            let mut v = vec![0i64; t];
            v[0] = 1;
            v[i] = -1;
            v
        })
        .collect();
    let gram: Vec<Vec<i128>> = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| (x * y) as i128).sum())
                .collect()
        })
        .collect();
    (bareiss_determinant(gram) as f64).sqrt()
}

/// Fraction-free Gaussian elimination.
fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}
