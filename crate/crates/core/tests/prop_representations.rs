mod common;

use std::sync::OnceLock;

use cograph::cograph::{lex_pairs, num_pairs, pair_at, Cograph};
use cograph::representations::{
    distance_prelabel_points, inner_product_represent, polynomial_represent, sum_prelabel_points,
};
use cograph::sum::{enumerate_sum_cographs, AbelianGroup, SumCatalogueEntry, SumWitness};
use cograph::Exec;
use common::{cograph_strategy, distinct_values};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn integer_catalogue_witnesses() -> &'static [SumWitness] {
    static W: OnceLock<Vec<SumWitness>> = OnceLock::new();
    W.get_or_init(|| {
        let entries: Vec<SumCatalogueEntry> = enumerate_sum_cographs(5, false, Exec::Parallel).unwrap();
        entries
            .into_iter()
            .filter_map(|e| e.verdict.witness)
            .filter(|w| w.group == AbelianGroup::integers())
            .collect()
    })
}

/// A cograph with `k` distinct rationals, one per class.
fn cograph_with_values(points: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (Cograph, Vec<BigRational>)> {
    cograph_strategy(points, 5).prop_flat_map(|c| {
        let k = c.num_classes();
        (Just(c), distinct_values(k, 60), prop::collection::vec(1i64..6, k)).prop_map(|(c, nums, dens)| {
            let mut values: Vec<BigRational> = Vec::new();
            for (num, den) in nums.iter().zip(&dens) {
                let mut v = BigRational::new(BigInt::from(*num - 30), BigInt::from(*den));
                while values.contains(&v) {
                    v += BigRational::from_integer(BigInt::from(100));
                }
                values.push(v);
            }
            (c, values)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inner_products_match_exactly((c, values) in cograph_with_values(2..=6)) {
        let r = inner_product_represent(&c, &values).unwrap();
        prop_assert!(r.verify(&c));
        for (i, j) in lex_pairs(c.n()) {
            prop_assert_eq!(r.dot(i, j), values[c.class_of(i, j)].clone());
            prop_assert_ne!(&r.points[i], &r.points[j]);
        }
    }

    #[test]
    fn polynomial_interpolates((c, values) in cograph_strategy(2..=4, 4).prop_flat_map(|c| {
        let k = c.num_classes();
        (Just(c), distinct_values(k, 40))
    })) {
        let values: Vec<BigInt> = values.into_iter().map(|v| BigInt::from(v + 1)).collect();
        let r = polynomial_represent(&c, &values).unwrap();
        let n = c.n();
        prop_assert!(r.polynomial.degree() <= 4 * (num_pairs(n) - 1));
        prop_assert!(r.polynomial.is_symmetric());
        for (i, j) in lex_pairs(n) {
            let want = &r.scale * &values[c.class_of(i, j)];
            let (x, y) = (i as i64 + 1, j as i64 + 1);
            prop_assert_eq!(r.polynomial.eval(x, y), want.clone());
            prop_assert_eq!(r.polynomial.eval(y, x), want);
        }
    }

    #[test]
    fn sum_prelabel_recovers_catalogue_witnesses(index in 0usize..1000) {
        let w = &integer_catalogue_witnesses()[index % integer_catalogue_witnesses().len()];
        let n = w.values.len();
        let edges: Vec<Vec<i128>> = (0..num_pairs(n)).map(pair_at).map(|(i, j)| w.group.add(&w.values[i], &w.values[j])).collect();
        let recovered = sum_prelabel_points(&w.group, &edges, n).unwrap();
        prop_assert!(recovered.realizes(&w.pattern()));
        prop_assert_eq!(&recovered.values, &w.values);
    }

    /// Two points share one edge, which does not determine them, so start at three.
    #[test]
    fn sum_prelabel_recovers_random_points(values in (3usize..=7).prop_flat_map(|n| distinct_values(n, 50)), m in prop_oneof![Just(0i128), Just(51i128), Just(53i128)]) {
        let w = if m == 0 { SumWitness::integers(&values) } else { SumWitness::cyclic(m, &values) };
        let n = values.len();
        let edges: Vec<Vec<i128>> = (0..num_pairs(n)).map(pair_at).map(|(i, j)| w.group.add(&w.values[i], &w.values[j])).collect();
        let recovered = sum_prelabel_points(&w.group, &edges, n).unwrap();
        prop_assert!(recovered.realizes(&w.pattern()));
    }

    #[test]
    fn distance_prelabel_recovers_the_line(values in (2usize..=7).prop_flat_map(|n| distinct_values(n, 50))) {
        let n = values.len();
        let edges: Vec<BigRational> = (0..num_pairs(n))
            .map(pair_at)
            .map(|(i, j)| BigRational::from_integer(BigInt::from((values[i] - values[j]).abs())))
            .collect();
        let points = distance_prelabel_points(&edges, n).unwrap();
        for (k, (i, j)) in (0..num_pairs(n)).map(pair_at).enumerate() {
            let d = &points[i] - &points[j];
            prop_assert_eq!(if d < BigRational::from_integer(0.into()) { -d } else { d }, edges[k].clone());
        }
    }
}
