#![allow(dead_code)]

use composita::rational::ratio;
use composita::{Rational, Series};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    ((1i64..=6), prop::bool::ANY, 1i64..=4)
        .prop_map(|(p, neg, q)| ratio(if neg { -p } else { p }, q))
}

/// Series of the given order with arbitrary small rational coefficients.
pub fn series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(small_rational(), order + 1).prop_map(move |c| Series::new(c, order))
}

/// `h(0)` nonzero.
pub fn unit_series(order: usize) -> impl Strategy<Value = Series> {
    (
        nonzero_rational(),
        prop::collection::vec(small_rational(), order),
    )
        .prop_map(move |(c0, rest)| {
            let mut c = vec![c0];
            c.extend(rest);
            Series::new(c, order)
        })
}

/// `h(0) = 1`.
pub fn monic_series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(small_rational(), order).prop_map(move |rest| {
        let mut c = vec![ratio(1, 1)];
        c.extend(rest);
        Series::new(c, order)
    })
}

/// `g(0) = 0`, `g(1) ≠ 0`.
pub fn revertible_series(order: usize) -> impl Strategy<Value = Series> {
    unit_series(order - 1).prop_map(|h| h.shift_up())
}

/// `g(0) = 0`, not identically zero.
pub fn composita_source(order: usize) -> impl Strategy<Value = Series> {
    series(order - 1)
        .prop_filter("nonzero", |s| !s.is_zero())
        .prop_map(|s| s.shift_up())
}

/// Deterministic runner executing exactly `cases` successful cases.
pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

/// `g^k` by `k - 1` explicit Cauchy products.
pub fn repeated_product(g: &Series, k: usize) -> Series {
    let mut acc = Series::one(g.order());
    for _ in 0..k {
        acc = &acc * g;
    }
    acc
}
