//! Property-based invariants across modules.

use lqlab_core::arith::{a_r_series, CoeffSeries};
use lqlab_core::constants::Certified;
use lqlab_core::curve::{
    count_near_curve, near_integer_sqrt, short_interval_sum, window_decomposition, CurveConfig, ShortIntervalInstance,
};
use lqlab_core::dirichlet::{
    dirichlet_convolve, dirichlet_inverse, expand_euler_product, local_factor_for, Family, LocalFactor,
};
use lqlab_core::Settings;
use num::rational::Ratio;
use num::{BigInt, BigRational};
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_products_are_multiplicative(q in prop::sample::select(vec![7u64, 13, 19, 23, 29, 43, 53]), m in 1usize..300, n in 1usize..300) {
        prop_assume!(gcd(m as u64, n as u64) == 1);
        let fam = if q % 8 == 1 || q % 8 == 7 { Family::P } else { Family::R };
        let g = expand_euler_product(&local_factor_for(q, fam).unwrap(), 90_000, &Settings::default()).unwrap();
        prop_assert_eq!(g.get(m * n), g.get(m) * g.get(n));
    }

    #[test]
    fn inverse_of_a_product_is_the_product_of_inverses(r in 2u32..5, k in 2u32..5) {
        let s = Settings::default();
        let a = a_r_series(r, 3000).unwrap();
        let b = a_r_series(k, 3000).unwrap();
        let lhs = dirichlet_inverse(&dirichlet_convolve(&a, &b, &s).unwrap()).unwrap();
        let rhs = dirichlet_convolve(&dirichlet_inverse(&a).unwrap(), &dirichlet_inverse(&b).unwrap(), &s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn local_factor_products_expand_to_convolutions(a in 2u32..6, b in 2u32..6) {
        let s = Settings::default();
        let lhs = expand_euler_product(&LocalFactor::zeta_multiple(a).times(&LocalFactor::zeta_multiple(b)), 5000, &s).unwrap();
        let rhs = dirichlet_convolve(&a_r_series(a, 5000).unwrap(), &a_r_series(b, 5000).unwrap(), &s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn certified_products_enclose(a in -10.0f64..10.0, ea in 0.0f64..0.5, b in 1.0f64..10.0, eb in 0.0f64..0.5, ta in -1.0f64..1.0, tb in -1.0f64..1.0) {
        let x = Certified::new(a, ea);
        let y = Certified::new(b, eb);
        let (u, v) = (a + ta * ea, b + tb * eb);
        prop_assert!((x * y).contains(u * v));
        prop_assert!((x + y).contains(u + v));
        prop_assert!((x / y).contains(u / v));
    }

    #[test]
    fn sqrt_decider_agrees_with_floats_away_from_the_boundary(num in 0u64..1_000_000, den in 1u64..1000, bn in 1u64..600, bd in 10_000u64..20_000) {
        let a = num as f64 / den as f64;
        let b = bn as f64 / bd as f64;
        let f = a.sqrt();
        let dist = (f - f.round()).abs();
        prop_assume!((dist - b.sqrt()).abs() > 1e-9);
        let r = |p: u64, q: u64| BigRational::new(BigInt::from(p), BigInt::from(q));
        prop_assert_eq!(near_integer_sqrt(&r(num, den), &r(bn, bd)), dist < b.sqrt());
    }

    #[test]
    fn short_sums_are_additive(x in 1000u64..5_000_000, y in 0u64..5000, z in 0u64..5000) {
        let s = Settings::default();
        let a = short_interval_sum(&ShortIntervalInstance::new(x, y), &s).unwrap();
        let b = short_interval_sum(&ShortIntervalInstance::new(x + y, z), &s).unwrap();
        let c = short_interval_sum(&ShortIntervalInstance::new(x, y + z), &s).unwrap();
        prop_assert_eq!(a + b, c);
    }

    #[test]
    fn window_decomposition_is_exact(x in 10_000u64..10_000_000, frac in 0.0f64..1.0) {
        let y = ((x as f64).powf(0.6) * frac).max(1.0) as u64;
        let d = window_decomposition(&ShortIntervalInstance::new(x, y), &Settings::default()).unwrap();
        prop_assert!(d.windows_reproduce_double_count());
        prop_assert!(d.first_inequality_holds());
        prop_assert!(d.delta_guards_hold());
        prop_assert!(d.pairs_within_near_counts());
        prop_assert!(d.windows_cover_scan());
    }

    #[test]
    fn near_counts_grow_with_delta(scale in 1.0f64..1e5, n in 1u64..2000, d1 in 0.001f64..0.12, d2 in 0.0f64..0.12) {
        let s = Settings::default();
        let small = count_near_curve(&CurveConfig::new(scale, Ratio::new(5, 2), n, d1), &s).unwrap();
        let large = count_near_curve(&CurveConfig::new(scale, Ratio::new(5, 2), n, d1 + d2), &s).unwrap();
        prop_assert!(small <= large && large <= n + 1);
    }
}

#[test]
fn unit_series_is_neutral() {
    let s = Settings::default();
    let a = a_r_series(3, 1000).unwrap();
    assert_eq!(dirichlet_convolve(&a, &CoeffSeries::unit(1000), &s).unwrap(), a);
}
