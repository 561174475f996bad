mod common;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use cograph::cograph::Cograph;
use cograph::pl::{
    blocks, blocks_complete, enumerate_pl, from_linear_space, is_pl, pairwise_intersection_check, pl_sum, pl_wedge,
    small_blocks_complete, to_linear_space, LinearSpace, PlEntry, PlError,
};
use cograph::Exec;
use common::cograph_strategy;
use proptest::prelude::*;

/// Lines chosen greedily from random subsets so that any two meet at most once.
fn linear_space(points: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = LinearSpace> {
    points
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::btree_set(0..n, n.min(3)..=n), 0..6)))
        .prop_map(|(n, candidates)| {
            let mut lines: Vec<BTreeSet<usize>> = Vec::new();
            for line in candidates.into_iter().filter(|l| l.len() >= 3) {
                if lines.iter().all(|l| l.intersection(&line).count() <= 1) {
                    lines.push(line);
                }
            }
            let long: Vec<Vec<usize>> = lines.into_iter().map(|l| l.into_iter().collect()).collect();
            LinearSpace::from_long_lines(n, &long).unwrap()
        })
}

fn pl_cograph(points: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Cograph> {
    linear_space(points).prop_map(|s| from_linear_space(&s).unwrap())
}

fn catalogue() -> &'static [PlEntry] {
    static CAT: OnceLock<Vec<PlEntry>> = OnceLock::new();
    CAT.get_or_init(|| (2..=7).flat_map(|n| enumerate_pl(n, false, Exec::Parallel).unwrap()).collect())
}

fn characterizations_agree(c: &Cograph) -> Result<(), TestCaseError> {
    let rules = is_pl(c);
    prop_assert_eq!(rules, small_blocks_complete(c));
    prop_assert_eq!(rules, blocks_complete(c));
    if rules {
        prop_assert!(pairwise_intersection_check(c));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn characterizations_agree_on_random_cographs(c in cograph_strategy(3..=6, 4)) {
        characterizations_agree(&c)?;
    }

    #[test]
    fn characterizations_agree_on_linear_spaces(c in pl_cograph(3..=9)) {
        prop_assert!(is_pl(&c));
        characterizations_agree(&c)?;
    }

    #[test]
    fn characterizations_agree_on_catalogue(index in 0usize..1000) {
        let e = &catalogue()[index % catalogue().len()];
        prop_assert!(is_pl(&e.pattern));
        characterizations_agree(&e.pattern)?;
    }

    /// Two distinct classes meeting at a point meet nowhere else.
    #[test]
    fn two_classes_meet_in_at_most_one_point(c in pl_cograph(3..=9)) {
        if c.num_classes() > 1 {
            let b: Vec<BTreeSet<usize>> = blocks(&c).into_iter().map(|v| v.into_iter().collect()).collect();
            for x in 0..b.len() {
                for y in x + 1..b.len() {
                    prop_assert!(b[x].intersection(&b[y]).count() <= 1);
                }
            }
        }
    }

    #[test]
    fn linear_space_round_trip(s in linear_space(2..=9)) {
        let c = from_linear_space(&s).unwrap();
        prop_assert_eq!(to_linear_space(&c).unwrap(), s);
        prop_assert_eq!(from_linear_space(&to_linear_space(&c).unwrap()).unwrap(), c);
    }

    #[test]
    fn catalogue_round_trip(index in 0usize..1000) {
        let e = &catalogue()[index % catalogue().len()];
        prop_assert_eq!(&to_linear_space(&e.pattern).unwrap(), &e.space);
        prop_assert_eq!(&from_linear_space(&e.space).unwrap(), &e.pattern);
    }

    #[test]
    fn compositions_stay_pl(c in pl_cograph(2..=6), d in pl_cograph(2..=6)) {
        let sum = pl_sum(&c, &d);
        prop_assert!(is_pl(&sum));
        prop_assert_eq!(sum.n(), c.n() + d.n());
        match pl_wedge(&c, &d) {
            Ok(wedge) => {
                prop_assert!(is_pl(&wedge));
                prop_assert_eq!(wedge.n(), c.n() + d.n() - 1);
            }
            Err(e) => prop_assert_eq!(e, PlError::JoinPrecondition),
        }
    }

    #[test]
    fn wedges_of_lines_and_complete_graphs(k in 2usize..6, l in 2usize..6, c_line in any::<bool>(), d_line in any::<bool>()) {
        let pick = |n: usize, line: bool| if line { Cograph::monochrome(n) } else { Cograph::all_distinct(n) }.unwrap();
        let (c, d) = (pick(k, c_line), pick(l, d_line));
        let wedge = pl_wedge(&c, &d).unwrap();
        prop_assert!(is_pl(&wedge));
        prop_assert_eq!(wedge.n(), k + l - 1);
    }
}
