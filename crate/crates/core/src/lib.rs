//! t-cores, t-quotients, the division bijection and the statistics of cores
//! of random partitions.

pub mod abacus;
pub mod corequotient;
pub mod counting;
pub mod distribution;
pub mod error;
pub mod hookstats;
pub mod lattice;
pub mod partition;
pub mod sampling;
pub mod special;
pub mod verify;

pub use abacus::{AbacusWord, JustificationVector, RunnerAbacus};
pub use corequotient::{compose, core, decompose, is_core, is_divisible, quotient, CoreQuotient};
pub use error::{Error, Result};
pub use lattice::{f_t, LatticePoint};
pub use partition::{partitions, Cell, Partition};
