//! Exact Dirichlet-coefficient algebra and the factorization oracle.

mod convolution;
mod euler;
mod fps;
mod local;
mod verify;

pub use convolution::{convolve_many, dirichlet_convolve, dirichlet_inverse};
pub use euler::expand_euler_product;
pub use fps::FormalPowerSeries;
pub use local::{local_factor_for, Family, LocalFactor, MAX_LOCAL_ORDER};
pub use verify::{verify_factorization, verify_floor_identities, verify_many, FactorizationReport, IdentityCheck};
