mod common;

use cograph::cograph::{canonical_labeling, find_isomorphism, parse, serialize};
use cograph::enumeration::count_cographs;
use cograph::{canonical_form, canonicalize, is_isomorphic, type_signature};
use common::{cograph_and_permutation, cograph_strategy};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_is_permutation_invariant((c, perm) in cograph_and_permutation(2..=7, 6)) {
        prop_assert_eq!(canonical_form(&c.permute(&perm).unwrap()), canonical_form(&c));
    }

    #[test]
    fn canonical_labeling_maps_onto_representative(c in cograph_strategy(2..=7, 5)) {
        let (key, perm) = canonical_labeling(&c);
        prop_assert_eq!(c.permute(&perm).unwrap(), key.to_cograph());
    }

    #[test]
    fn canonical_form_is_a_fixpoint(c in cograph_strategy(2..=7, 5)) {
        let rep = canonicalize(&c);
        let reparsed = parse(&serialize(&rep)).unwrap();
        prop_assert_eq!(canonical_form(&reparsed), canonical_form(&c));
        prop_assert_eq!(canonicalize(&rep), rep);
    }

    #[test]
    fn serialization_round_trips(c in cograph_strategy(2..=8, 8)) {
        prop_assert_eq!(parse(&serialize(&c)).unwrap(), c);
    }

    #[test]
    fn signatures_separate_non_isomorphic(a in cograph_strategy(4..=4, 4), b in cograph_strategy(4..=4, 4)) {
        if type_signature(&a) != type_signature(&b) {
            prop_assert!(!is_isomorphic(&a, &b).unwrap());
        }
        if is_isomorphic(&a, &b).unwrap() {
            prop_assert_eq!(type_signature(&a), type_signature(&b));
        }
    }

    #[test]
    fn isomorphisms_are_found((c, perm) in cograph_and_permutation(2..=6, 4)) {
        let d = c.permute(&perm).unwrap();
        let found = find_isomorphism(&c, &d).expect("permuted copy is isomorphic");
        prop_assert_eq!(c.permute(&found).unwrap(), d);
    }
}

#[test]
fn counts_increase() {
    let counts: Vec<_> = (2..=9).map(|n| count_cographs(n).unwrap()).collect();
    assert!(counts.windows(2).all(|w| w[0] < w[1]));
}
