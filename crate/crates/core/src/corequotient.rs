//! t-cores, t-quotients and the partition division bijection
//! `λ ↦ (core, divisible part)`.
//!
//! Everything is computed on the t-runner abacus: the core justifies each
//! runner, the quotient reads each runner as a partition, and the divisible
//! part shifts runner `i` by the core's justification position `p_i` so that
//! every runner becomes balanced.

use crate::abacus::{check_modulus, AbacusWord, JustificationVector, RunnerAbacus};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Result of dividing a partition by `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoreQuotient {
    pub t: usize,
    /// The t-core `ρ`.
    pub core: Partition,
    /// The t-quotient `(ν^0, …, ν^{t-1})`, shared by `λ` and `divisible`.
    pub quotient: Vec<Partition>,
    /// The t-divisible partition `ν` with the same quotient.
    pub divisible: Partition,
    /// Justification positions of the core's runners.
    pub positions: JustificationVector,
}

/// The t-core of `λ`.
pub fn core(lambda: &Partition, t: usize) -> Result<Partition> {
    let runners = RunnerAbacus::from_partition(lambda, t)?;
    Ok(justified_core(&runners).0)
}

fn justified_core(runners: &RunnerAbacus) -> (Partition, JustificationVector) {
    let charges = runners.charges();
    let justified = charges.iter().map(|&p| AbacusWord::justified(p)).collect();
    let merged = RunnerAbacus::from_runners(justified)
        .expect("runner count already validated")
        .merge();
    (merged.to_partition(), JustificationVector(charges))
}

/// The t-quotient of `λ`: runner `i` of its balanced abacus read as a
/// partition.
pub fn quotient(lambda: &Partition, t: usize) -> Result<Vec<Partition>> {
    let runners = RunnerAbacus::from_partition(lambda, t)?;
    Ok(runners
        .runners()
        .iter()
        .map(AbacusWord::to_partition)
        .collect())
}

/// Whether every runner of `λ` is justified, i.e. `λ` is a t-core.
pub fn is_core(lambda: &Partition, t: usize) -> Result<bool> {
    let runners = RunnerAbacus::from_partition(lambda, t)?;
    Ok(runners.runners().iter().all(AbacusWord::is_justified))
}

/// Whether every runner of `λ` is balanced, i.e. `λ` has empty t-core.
pub fn is_divisible(lambda: &Partition, t: usize) -> Result<bool> {
    let runners = RunnerAbacus::from_partition(lambda, t)?;
    Ok(runners.runners().iter().all(AbacusWord::is_balanced))
}

/// Justification positions of a t-core's runners.
pub fn core_positions(rho: &Partition, t: usize) -> Result<JustificationVector> {
    let runners = RunnerAbacus::from_partition(rho, t)?;
    runners
        .justification_positions()
        .map_err(|_| Error::NotACore {
            partition: rho.to_string(),
            t,
        })
}

/// The unique t-core whose runners justify at `positions`, which must sum
/// to zero.
pub fn core_from_positions(positions: &[i64]) -> Result<Partition> {
    let t = positions.len();
    check_modulus(t)?;
    let sum: i64 = positions.iter().sum();
    if sum != 0 {
        return Err(Error::NonzeroSum(sum));
    }
    let runners = positions
        .iter()
        .map(|&p| AbacusWord::justified(p))
        .collect();
    Ok(RunnerAbacus::from_runners(runners)?.merge().to_partition())
}

/// `Δ_t(λ) = (ρ, ν)` together with the shared quotient.
pub fn decompose(lambda: &Partition, t: usize) -> Result<CoreQuotient> {
    let runners = RunnerAbacus::from_partition(lambda, t)?;
    let (core, positions) = justified_core(&runners);
    let quotient = runners
        .runners()
        .iter()
        .map(AbacusWord::to_partition)
        .collect();
    let divisible = runners.shift_runners(&positions.0).merge().to_partition();
    Ok(CoreQuotient {
        t,
        core,
        quotient,
        divisible,
        positions,
    })
}

/// `Δ_t^{-1}`: rebuilds `λ` from its t-core and t-quotient.
pub fn compose(rho: &Partition, quotient: &[Partition], t: usize) -> Result<Partition> {
    check_modulus(t)?;
    if quotient.len() != t {
        return Err(Error::DimensionMismatch {
            expected: t,
            found: quotient.len(),
        });
    }
    let positions = core_positions(rho, t)?;
    let runners = quotient
        .iter()
        .zip(&positions.0)
        .map(|(q, &p)| AbacusWord::from_partition(q).shift(-p))
        .collect();
    Ok(RunnerAbacus::from_runners(runners)?.merge().to_partition())
}

/// The t-divisible partition with the given quotient.
pub fn divisible_from_quotient(quotient: &[Partition], t: usize) -> Result<Partition> {
    compose(&Partition::empty(), quotient, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn running_example_cores() {
        let lam = p(&[5, 4, 4, 2, 1]);
        assert_eq!(core(&lam, 3).unwrap(), p(&[2, 1, 1]));
        assert_eq!(core(&lam, 8).unwrap(), lam);
        for t in 2..=7 {
            assert!(!is_core(&lam, t).unwrap());
        }
        assert!(is_core(&lam, 8).unwrap());
        assert_eq!(core(&Partition::empty(), 5).unwrap(), Partition::empty());
        assert_eq!(core(&lam, 1), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn running_example_core_abacus() {
        let rho = core(&p(&[5, 4, 4, 2, 1]), 3).unwrap();
        assert_eq!(
            AbacusWord::from_partition(&rho).render(-8, 7),
            "(…, 1, 1, 1, 1, 1, 0, 1, 1, 0\u{332}, 1, 0, 0, 0, 0, 0, 0, …)"
        );
    }

    #[test]
    fn running_example_quotient() {
        let q = quotient(&p(&[5, 4, 4, 2, 1]), 3).unwrap();
        assert_eq!(q, vec![Partition::empty(), p(&[1, 1, 1]), p(&[1])]);
        let q = quotient(&p(&[2, 1, 1]), 3).unwrap();
        assert!(q.iter().all(Partition::is_empty));
    }

    #[test]
    fn division_of_ten_three() {
        let d = decompose(&p(&[10, 3]), 3).unwrap();
        assert_eq!(d.core, p(&[1]));
        assert_eq!(d.divisible, p(&[7, 3, 2]));
        assert_eq!(d.positions.0, vec![1, 0, -1]);
        assert_eq!(compose(&d.core, &d.quotient, 3).unwrap(), p(&[10, 3]));
        let q = quotient(&p(&[7, 3, 2]), 3).unwrap();
        assert_eq!(q, d.quotient);
        assert_eq!(q.iter().map(Partition::size).sum::<usize>(), 4);
    }

    #[test]
    fn ten_three_runner_block() {
        let r = RunnerAbacus::from_partition(&p(&[10, 3]), 3).unwrap();
        let rows: Vec<Vec<u8>> = r
            .runners()
            .iter()
            .map(|w| (-3..=3).map(|n| w.bit(n) as u8).collect())
            .collect();
        assert_eq!(
            rows,
            vec![
                vec![1, 1, 1, 0, 0, 0, 1],
                vec![1, 1, 0, 1, 0, 0, 0],
                vec![1, 1, 0, 0, 0, 0, 0]
            ]
        );
    }

    #[test]
    fn running_example_division() {
        let d = decompose(&p(&[5, 4, 4, 2, 1]), 3).unwrap();
        assert_eq!(d.core, p(&[2, 1, 1]));
        assert_eq!(d.divisible.size(), 12);
        assert!(is_divisible(&d.divisible, 3).unwrap());
        assert_eq!(d.positions.sum(), 0);
    }

    #[test]
    fn cores_divide_trivially() {
        let rho = p(&[3, 1]);
        assert!(is_core(&rho, 3).unwrap());
        let d = decompose(&rho, 3).unwrap();
        assert_eq!(d.core, rho);
        assert_eq!(d.divisible, Partition::empty());
        let empties = vec![Partition::empty(); 3];
        assert_eq!(compose(&rho, &empties, 3).unwrap(), rho);
    }

    #[test]
    fn compose_rejects_non_cores() {
        let err = compose(&p(&[3]), &vec![Partition::empty(); 3], 3).unwrap_err();
        assert!(matches!(err, Error::NotACore { .. }));
        let err = compose(&Partition::empty(), &[Partition::empty()], 3).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn core_from_positions_inverts_core_positions() {
        assert_eq!(core_from_positions(&[1, 0, -1]).unwrap(), p(&[1]));
        assert_eq!(core_from_positions(&[1, 1, -2]).unwrap().size(), 6);
        assert_eq!(core_from_positions(&[1, 1]), Err(Error::NonzeroSum(2)));
        for n in 0..=12 {
            for lam in partitions(n) {
                if is_core(&lam, 4).unwrap() {
                    let pos = core_positions(&lam, 4).unwrap();
                    assert_eq!(core_from_positions(&pos.0).unwrap(), lam);
                }
            }
        }
    }

    #[test]
    fn round_trip_small() {
        for n in 0..=12 {
            for t in 2..=5 {
                for lam in partitions(n) {
                    let d = decompose(&lam, t).unwrap();
                    assert_eq!(compose(&d.core, &d.quotient, t).unwrap(), lam);
                    let qsum: usize = d.quotient.iter().map(Partition::size).sum();
                    assert_eq!(n, d.core.size() + t * qsum);
                    assert_eq!(d.divisible.size(), t * qsum);
                }
            }
        }
    }
}
