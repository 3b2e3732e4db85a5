mod common;

use asmkey::enumeration::{asms_by_row_sums, generate_asms, pattern_avoiders};
use asmkey::{Asm, Error, PatternSet, Permutation};
use common::{is_asm_by_definition, small_support_matrices};
use itertools::Itertools;
use proptest::prelude::*;

#[test]
fn validation_matches_definition_on_all_small_matrices() {
    for n in 1..=3 {
        for entries in (0..n * n).map(|_| [-1i64, 0, 1]).multi_cartesian_product() {
            let rows: Vec<Vec<i64>> = entries.chunks(n).map(<[i64]>::to_vec).collect();
            assert_eq!(Asm::from_rows(&rows).is_ok(), is_asm_by_definition(&rows), "{rows:?}");
        }
    }
}

#[test]
fn validation_matches_definition_with_small_support_n4() {
    let mut accepted = 0;
    for rows in small_support_matrices(4, 6) {
        let ok = Asm::from_rows(&rows).is_ok();
        assert_eq!(ok, is_asm_by_definition(&rows), "{rows:?}");
        accepted += ok as usize;
    }
    // Of the 42 ASMs of order 4, the two with eight nonzero entries are out of reach.
    assert_eq!(accepted, 40);
    for a in generate_asms(4).unwrap() {
        assert!(is_asm_by_definition(&a.to_rows()));
    }
}

#[test]
fn rejects_empty_and_ragged() {
    let empty: Vec<Vec<i64>> = vec![];
    assert_eq!(Asm::from_rows(&empty), Err(Error::EmptySize));
    assert!(matches!(Asm::from_rows(&[vec![1, 0], vec![0]]), Err(Error::NotSquare { .. })));
    assert!(matches!(Asm::from_rows(&[[2]]), Err(Error::BadEntry { .. })));
}

#[test]
fn permutation_round_trips() {
    for n in 1..=6 {
        for p in Permutation::all(n) {
            let a = Asm::from_permutation(&p);
            assert!(a.is_permutation_matrix());
            assert_eq!(a.to_permutation(), Some(p));
        }
    }
    for a in generate_asms(5).unwrap() {
        match a.to_permutation() {
            Some(p) => assert_eq!(Asm::from_permutation(&p), a),
            None => assert!(a.count_minus_ones() > 0),
        }
    }
}

#[test]
fn reflection_is_an_involution() {
    for n in 1..=5 {
        for a in generate_asms(n).unwrap() {
            let r = a.reflect_antidiagonal();
            assert!(r.is_valid());
            assert_eq!(r.reflect_antidiagonal(), a);
        }
    }
}

#[test]
fn reflection_examples() {
    let p132 = Asm::from_permutation(&"132".parse().unwrap());
    assert_eq!(p132.reflect_antidiagonal(), Asm::from_permutation(&"213".parse().unwrap()));
    let c = Asm::from_rows(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap();
    assert_eq!(c.reflect_antidiagonal(), c);
}

#[test]
fn sums_of_asms_are_asms() {
    let small: Vec<Asm> = (1..=3).flat_map(|n| generate_asms(n).unwrap()).collect();
    for a in &small {
        for b in &small {
            for s in [a.direct_sum(b), a.skew_sum(b)] {
                assert_eq!(s.size(), a.size() + b.size());
                assert!(is_asm_by_definition(&s.to_rows()));
            }
        }
    }
}

#[test]
fn w_avoids_312_and_321() {
    let class: PatternSet = "312&321".parse().unwrap();
    for n in 1..=10 {
        let w = Permutation::w(n).unwrap();
        assert!(class.avoided_by(&w), "{w}");
        assert!(!common::brute_contains(w.images(), &[3, 1, 2]));
    }
}

#[test]
fn single_southwest_record_characterises_w() {
    let class: PatternSet = "312&321".parse().unwrap();
    for n in 1..=7 {
        let w = Permutation::w(n).unwrap();
        for p in pattern_avoiders(n, &class) {
            assert_eq!(p.southwest_records().len() == 1, p == w, "{p}");
        }
    }
}

#[test]
fn display_round_trips_through_parser() {
    for a in asms_by_row_sums(4).unwrap() {
        assert_eq!(asmkey::cli::parse_asm(&a.to_string()).unwrap(), a);
    }
}

fn arb_asm() -> impl Strategy<Value = Asm> {
    (1usize..=5).prop_flat_map(|n| {
        let all: Vec<Asm> = generate_asms(n).unwrap().collect();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn arb_perm() -> impl Strategy<Value = Permutation> {
    (1usize..=9)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn random_matrices_validate_like_definition(
        rows in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-1i64..=1, n), n))
    ) {
        prop_assert_eq!(Asm::from_rows(&rows).is_ok(), is_asm_by_definition(&rows));
    }

    #[test]
    fn asm_rows_round_trip(a in arb_asm()) {
        prop_assert_eq!(Asm::from_rows(&a.to_rows()).unwrap(), a.clone());
        prop_assert_eq!(asmkey::cli::parse_asm(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn permutation_algebra(p in arb_perm(), q in arb_perm()) {
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.reverse().reverse(), p.clone());
        prop_assert_eq!(Asm::from_permutation(&p.direct_sum(&q)), p.to_asm().direct_sum(&q.to_asm()));
        prop_assert_eq!(Asm::from_permutation(&p.skew_sum(&q)), p.to_asm().skew_sum(&q.to_asm()));
        prop_assert_eq!(p.compact().parse::<Permutation>().unwrap(), p);
    }
}
