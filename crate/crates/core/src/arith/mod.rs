//! Sieves and point evaluators for the base arithmetic functions.

mod functions;
mod legendre;
pub mod roots;
mod series;
mod sieve;

pub use functions::{
    a_r_series, lambda_q_sieve, liouville_sieve, mobius_sieve, multiplicative_series, tau_sieve, LambdaQ, Liouville,
    Mobius, Multiplicative, Tau,
};
pub use legendre::{is_prime, jacobi_symbol, legendre_symbol, LegendreChar};
pub use series::CoeffSeries;
pub use sieve::{build_factor_sieve, for_each_prime_block, map_segments, primes_up_to, FactorSieve, SegmentedSieve};
