//! Exact summatory functions at large `x`, residual traces against the main
//! terms, and growth diagnostics for the `q = +-5 mod 24` branch.

mod diagnostic;
mod stream;
mod trace;

pub use diagnostic::{delta_c, omega, rh_diagnostic, DiagnosticRow, GrowthDiagnostic, DEFAULT_C, DEFAULT_EPSILON};
pub use stream::{
    floor_weighted_sums, liouville_summatory, mertens, mu_floor_identity, prefix_sums_at, summatory_lambda_conv_one,
    summatory_lambda_conv_one_many,
};
pub use trace::{dyadic_checkpoints, fit_exponent, trace, SummatoryTrace, TraceRow};
