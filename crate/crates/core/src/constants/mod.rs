//! Case classification of `q` and certified numerics for the main-term
//! constants.

mod certified;
mod classify;
mod main_term;
mod products;
mod zeta;

pub use certified::Certified;
pub use classify::{classify, first_difference_index, first_sum_index, Branch, CaseClass, FiveMod24Sub, OneMod8Sub};
pub use main_term::{
    main_term, ConstantsConfig, MainTerm, MainTermKind, MainTermParams, EULER_GAMMA, EULER_GAMMA_DIGITS, THETA,
    THETA_LOWER,
};
pub use products::{p_q_constants, prime_log_power_tail, prime_power_tail, r_q_at_half, ProductConstants};
pub use zeta::{zeta_prime_real, zeta_real, MAX_ZETA_TERMS, ZETA_MARGIN};
