mod common;

use asmkey::enumeration::generate_asms;
use asmkey::key::{count_asms_with_key, key_trace, remove_minus_one, removable_positions, RemovalTrace};
use asmkey::patterns::{classical_contains, perm_contains};
use asmkey::{conjugate, sw_key, Asm, Permutation, Position};
use common::{worked_example_chain, keys_over_all_orders};
use proptest::prelude::*;

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn all_asms(max_n: usize) -> impl Iterator<Item = Asm> {
    (1..=max_n).flat_map(|n| generate_asms(n).unwrap())
}

#[test]
fn worked_example_chain_is_reproduced() {
    let chain = worked_example_chain();
    let a = Asm::from_rows(&chain[0]).unwrap();
    let trace = key_trace(&a);
    let got: Vec<Vec<Vec<i64>>> = trace.iter().map(|s| s.asm.to_rows()).collect();
    assert_eq!(got, chain);
    assert_eq!(trace[1].removal.as_ref().unwrap().minus_one, Position::new(3, 4));
    assert_eq!(trace[2].removal.as_ref().unwrap().minus_one, Position::new(2, 3));
    assert_eq!(sw_key(&a), perm("34512"));
}

#[test]
fn removal_order_does_not_matter() {
    for a in all_asms(5) {
        let keys = keys_over_all_orders(&a);
        assert_eq!(keys.len(), 1, "{a}");
        assert!(keys.contains(&sw_key(&a)));
    }
}

fn check_removal(before: &Asm, after: &Asm, r: &RemovalTrace) {
    let s = &r.staircase;
    assert!(s.len() >= 2);
    assert!(s.windows(2).all(|w| w[0].row < w[1].row && w[0].col < w[1].col), "{s:?}");
    let closed_form: Vec<Position> = s.windows(2).map(|w| Position::new(w[1].row, w[0].col)).collect();
    assert_eq!(r.created, closed_form);
    assert_eq!(r.simple, s.len() == 2);
    assert!(s.iter().all(|p| p.weakly_southwest_of(r.minus_one) && before.at(*p) == 1));
    assert!(after.is_valid());
    assert_eq!(after.count_minus_ones() + 1, before.count_minus_ones());
    assert_eq!(after.ones().len() + 1, before.ones().len());
    for i in 1..=before.size() {
        let row_sum = |m: &Asm| m.row(i).iter().map(|&x| x as i64).sum::<i64>();
        let col_sum = |m: &Asm| (1..=m.size()).map(|r| m.get(r, i) as i64).sum::<i64>();
        assert_eq!(row_sum(after), row_sum(before));
        assert_eq!(col_sum(after), col_sum(before));
    }
}

#[test]
fn every_removal_is_a_staircase_rewrite() {
    for a in all_asms(6) {
        let trace = key_trace(&a);
        for w in trace.windows(2) {
            check_removal(&w[0].asm, &w[1].asm, w[1].removal.as_ref().unwrap());
        }
    }
}

#[test]
fn every_removable_minus_one_rewrites_as_a_staircase() {
    for a in all_asms(5) {
        for m in removable_positions(&a) {
            let (after, r) = remove_minus_one(&a, m).unwrap();
            check_removal(&a, &after, &r);
        }
    }
}

#[test]
fn a_minus_one_forces_231_in_the_key() {
    let p231 = perm("231");
    for a in all_asms(6) {
        if a.count_minus_ones() > 0 {
            assert!(perm_contains(&sw_key(&a), &p231), "{a}");
        }
    }
}

#[test]
fn classical_321_avoidance_survives_the_key_process() {
    let p321 = perm("321");
    for a in all_asms(5).filter(|a| !classical_contains(a, &p321)) {
        for step in key_trace(&a) {
            assert!(!classical_contains(&step.asm, &p321), "{}", step.asm);
        }
        assert!(!perm_contains(&sw_key(&a), &p321));
    }
}

#[test]
fn classical_321_reaches_a_312_avoiding_key() {
    let (p312, p321) = (perm("312"), perm("321"));
    for a in all_asms(5) {
        let key = sw_key(&a);
        if !perm_contains(&key, &p312) && classical_contains(&a, &p321) {
            assert!(perm_contains(&key, &p321), "{a}");
        }
    }
}

#[test]
fn key_commutes_with_reflection() {
    for a in all_asms(5) {
        assert_eq!(sw_key(&a.reflect_antidiagonal()), conjugate(&sw_key(&a)), "{a}");
    }
}

#[test]
fn identity_is_the_key_of_only_itself() {
    for n in 1..=6 {
        assert_eq!(count_asms_with_key(n, &Permutation::identity(n).unwrap()).unwrap(), 1);
    }
}

#[test]
fn keys_are_fixed_on_permutation_matrices() {
    for n in 1..=6 {
        for p in Permutation::all(n) {
            assert_eq!(sw_key(&p.to_asm()), p);
            assert!(removable_positions(&p.to_asm()).is_empty());
        }
    }
}

proptest! {
    #[test]
    fn trace_ends_at_the_key(
        a in (1usize..=6).prop_flat_map(|n| {
            let all: Vec<Asm> = generate_asms(n).unwrap().collect();
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    ) {
        let trace = key_trace(&a);
        prop_assert_eq!(&trace[0].asm, &a);
        prop_assert_eq!(trace.len(), a.count_minus_ones() + 1);
        prop_assert_eq!(trace.last().unwrap().asm.to_permutation(), Some(sw_key(&a)));
    }
}
