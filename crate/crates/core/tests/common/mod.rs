#![allow(dead_code)]

use convexdim_core::embedding::PointConfiguration;
use convexdim_core::exactlp::{frac, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=3).prop_map(|(p, q)| frac(p, q))
}

/// Distinct points in `R^d`, affinely spanning when `spanning` is set.
pub fn configuration(n: std::ops::RangeInclusive<usize>, spanning: bool) -> impl Strategy<Value = PointConfiguration> {
    n.prop_flat_map(move |n| {
        let dmax = (n - 1).max(2);
        (Just(n), 2..=dmax)
    })
    .prop_flat_map(|(n, d)| (Just(d), prop::collection::vec(prop::collection::vec(rational(), d), n)))
    .prop_filter_map("distinct points", move |(d, pts)| {
        let s = PointConfiguration::new(d, pts).ok()?;
        (!spanning || s.spans()).then_some(s)
    })
}

pub fn planar(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PointConfiguration> {
    n.prop_flat_map(|n| prop::collection::vec(prop::collection::vec(rational(), 2), n))
        .prop_filter_map("distinct points", |pts| PointConfiguration::new(2, pts).ok())
}
