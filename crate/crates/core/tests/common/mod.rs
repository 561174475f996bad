#![allow(dead_code)]

use cograph::cograph::{num_pairs, Cograph};
use proptest::prelude::*;

/// Cographs on `n` points (within `points`) with at most `max_classes` classes.
pub fn cograph_strategy(points: std::ops::RangeInclusive<usize>, max_classes: u16) -> impl Strategy<Value = Cograph> {
    points.prop_flat_map(move |n| {
        prop::collection::vec(0..max_classes, num_pairs(n)).prop_map(move |labels| Cograph::from_labels(n, &labels).unwrap())
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

pub fn cograph_and_permutation(points: std::ops::RangeInclusive<usize>, max_classes: u16) -> impl Strategy<Value = (Cograph, Vec<usize>)> {
    cograph_strategy(points, max_classes).prop_flat_map(|c| {
        let n = c.n();
        (Just(c), permutation(n))
    })
}

/// `k` distinct values from `0..bound`.
pub fn distinct_values(k: usize, bound: i128) -> impl Strategy<Value = Vec<i128>> {
    Just((0..bound).collect::<Vec<i128>>()).prop_shuffle().prop_map(move |v| v[..k].to_vec())
}
