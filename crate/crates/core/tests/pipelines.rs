//! End-to-end checks through the public API at sizes beyond the unit tests.

use lqlab_core::arith::Liouville;
use lqlab_core::arith::{liouville_sieve, mobius_sieve, multiplicative_series, LambdaQ, LegendreChar};
use lqlab_core::constants::{p_q_constants, r_q_at_half, ConstantsConfig, MainTermParams};
use lqlab_core::curve::{range_scan, short_interval_sum, ShortIntervalInstance};
use lqlab_core::dirichlet::verify_many;
use lqlab_core::summatory::{
    floor_weighted_sums, liouville_summatory, mertens, mu_floor_identity, rh_diagnostic, summatory_lambda_conv_one,
    DEFAULT_C, DEFAULT_EPSILON,
};
use lqlab_core::{Error, ErrorKind, Settings};

#[test]
fn floor_identities_at_ten_million() {
    let s = Settings::default();
    let x = 10_000_000;
    assert_eq!(summatory_lambda_conv_one(3, x, &s).unwrap(), 215);
    assert_eq!(floor_weighted_sums(&Liouville, &[x], &s).unwrap(), vec![3162]);
    assert_eq!(
        summatory_lambda_conv_one(5, x, &s).unwrap(),
        mu_floor_identity(x, 5, &s).unwrap()
    );
}

#[test]
fn mertens_and_liouville_match_sieves() {
    let s = Settings::default();
    let n = 300_000;
    let mu: i64 = mobius_sieve(n, &s).unwrap().values().iter().sum();
    let li: i64 = liouville_sieve(n, &s).unwrap().values().iter().sum();
    assert_eq!(mertens(n as u64, &s).unwrap(), mu);
    assert_eq!(liouville_summatory(n as u64, &s).unwrap(), li);
    // Known values.
    assert_eq!(mertens(1_000_000, &s).unwrap(), 212);
    assert_eq!(liouville_summatory(1_000_000, &s).unwrap(), -530);
}

#[test]
fn segmented_and_table_routes_agree_above_the_threshold() {
    let table = Settings::default();
    let segmented = Settings {
        segment_threshold: 1000,
        segment_len: 4099,
        ..Settings::default()
    };
    let f = LambdaQ::new(LegendreChar::new(11).unwrap());
    let a = multiplicative_series(&f, 200_000, &table).unwrap();
    let b = multiplicative_series(&f, 200_000, &segmented).unwrap();
    assert_eq!(a, b);
}

#[test]
fn factorizations_hold_for_larger_primes() {
    let qs = [61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127];
    for r in verify_many(&qs, 5000, &Settings::default()).unwrap() {
        assert!(r.success(), "{r:?}");
    }
}

#[test]
fn certified_constants_are_stable_under_refinement() {
    let s = Settings::default();
    let coarse = p_q_constants(7, 100_000, 1e-3, &s).unwrap();
    let fine = p_q_constants(7, 200_000, 5e-4, &s).unwrap();
    assert!((coarse.value.value - fine.value.value).abs() <= coarse.value.error);
    let d0 = coarse.log_derivative.unwrap();
    let d1 = fine.log_derivative.unwrap();
    assert!((d0.value - d1.value).abs() <= d0.error);
    let r0 = r_q_at_half(37, 1_000_000, 1e-1, &s).unwrap();
    let r1 = r_q_at_half(37, 2_000_000, 1e-1, &s).unwrap();
    assert!((r0.value.value - r1.value.value).abs() <= r0.value.error);
}

#[test]
fn precision_errors_are_resource_kind() {
    let cfg = ConstantsConfig {
        tolerance: 1e-9,
        p_cutoff: 1000,
        r_cutoff: 1000,
    };
    let e = MainTermParams::compute(13, &cfg, &Settings::default()).unwrap_err();
    assert!(matches!(e, Error::Precision { .. }));
    assert_eq!(e.kind(), ErrorKind::Resource);
}

#[test]
fn sequential_fallback_gives_identical_results() {
    let par = Settings::default();
    let seq = Settings::sequential();
    let xs: Vec<u64> = (10..=22).map(|k| 1u64 << k).collect();
    let a = lqlab_core::summatory::summatory_lambda_conv_one_many(13, &xs, &par).unwrap();
    let b = lqlab_core::summatory::summatory_lambda_conv_one_many(13, &xs, &seq).unwrap();
    assert_eq!(a, b);
    let inst = ShortIntervalInstance::new(50_000_000, 2000);
    assert_eq!(range_scan(&inst, &par).unwrap(), range_scan(&inst, &seq).unwrap());
}

#[test]
fn q5_short_sums_and_diagnostics() {
    let s = Settings::default();
    let x = 1_000_000u64;
    let y = 1000u64;
    let direct = summatory_lambda_conv_one(5, x + y, &s).unwrap() - summatory_lambda_conv_one(5, x, &s).unwrap();
    assert_eq!(
        short_interval_sum(&ShortIntervalInstance::new(x, y), &s).unwrap(),
        direct
    );
    let d = rh_diagnostic(5, &[10_000, 1_000_000, 100_000_000], DEFAULT_EPSILON, DEFAULT_C, &s).unwrap();
    assert_eq!(d.rows.len(), 3);
    assert_eq!(d.rows[2].value, mu_floor_identity(100_000_000, 5, &s).unwrap());
}
