//! Exact and certified computations for the summatory function of
//! `lambda_q * 1`, where `lambda_q(n)` is the Legendre symbol of the divisor
//! count `tau(n)` modulo an odd prime `q`.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: sieves and point evaluators for `tau`, `mu`, Liouville's
//!   function, perfect-power indicators, the Legendre symbol and `lambda_q`.
//! * [`dirichlet`]: exact Dirichlet convolution, inversion, Euler product
//!   expansion and the factorization oracle.
//! * [`constants`]: case classification of `q` and certified evaluation of the
//!   main-term constants.
//! * [`summatory`]: large-`x` summatory values, residual traces and growth
//!   diagnostics.
//! * [`curve`]: the short-interval machinery for `q = 5` built on counting
//!   integers near the curve `sqrt(x / n^5)`.
//!
//! Heavy loops run on rayon when the `parallel` feature is enabled (the
//! default) and [`Settings::parallel`] is set; otherwise they run sequentially
//! with identical results.

pub mod arith;
pub mod constants;
pub mod curve;
pub mod dirichlet;
mod error;
mod exec;
mod progress;
mod settings;
pub mod summatory;

pub use error::{Error, ErrorKind, Result};
pub use exec::set_thread_count;
pub use progress::Progress;
pub use settings::Settings;
