//! Independent oracles shared by the integration tests. None of these call
//! into the algorithms they are used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use asmkey::key::{remove_minus_one, removable_positions};
use asmkey::{Asm, Permutation};
use itertools::Itertools;

/// Relative order of a sequence of distinct values, as 1-based ranks.
pub fn standardize(values: &[usize]) -> Vec<usize> {
    values
        .iter()
        .map(|v| 1 + values.iter().filter(|w| *w < v).count())
        .collect()
}

/// Containment by trying every index subsequence.
pub fn brute_contains(sigma: &[usize], pi: &[usize]) -> bool {
    (0..sigma.len())
        .combinations(pi.len())
        .any(|idx| standardize(&idx.iter().map(|&i| sigma[i]).collect::<Vec<_>>()) == pi)
}

/// Definition-level check: entries in {-1,0,1}, every line sums to 1 and the
/// nonzero entries of every line alternate in sign starting with +1.
pub fn is_asm_by_definition(rows: &[Vec<i64>]) -> bool {
    let n = rows.len();
    let line_ok = |line: Vec<i64>| {
        let nz: Vec<i64> = line.into_iter().filter(|&x| x != 0).collect();
        nz.iter().all(|&x| x == 1 || x == -1)
            && nz.iter().sum::<i64>() == 1
            && nz.iter().enumerate().all(|(i, &x)| x == if i % 2 == 0 { 1 } else { -1 })
    };
    rows.iter().all(|r| r.len() == n)
        && (0..n).all(|i| line_ok(rows[i].clone()))
        && (0..n).all(|j| line_ok(rows.iter().map(|r| r[j]).collect()))
}

/// Every key reachable by any sequence of removable −1 removals.
pub fn keys_over_all_orders(a: &Asm) -> BTreeSet<Permutation> {
    let removable = removable_positions(a);
    if removable.is_empty() {
        return BTreeSet::from([a.to_permutation().expect("no removable -1 left means no -1 left")]);
    }
    removable
        .into_iter()
        .flat_map(|m| keys_over_all_orders(&remove_minus_one(a, m).unwrap().0))
        .collect()
}

/// Balanced U/D words of semilength n, as strings, by filtering all words.
pub fn dyck_words(n: usize) -> BTreeSet<String> {
    (0u32..1 << (2 * n))
        .map(|bits| {
            (0..2 * n)
                .map(|i| if bits >> (2 * n - 1 - i) & 1 == 1 { 'U' } else { 'D' })
                .collect::<String>()
        })
        .filter(|w| {
            let mut h = 0i32;
            w.chars().all(|c| {
                h += if c == 'U' { 1 } else { -1 };
                h >= 0
            }) && h == 0
        })
        .collect()
}

/// All inversion sequences e with e_i < i, weakly increasing ones only.
pub fn weakly_increasing_inversion_sequences(n: usize) -> Vec<Vec<usize>> {
    (1..=n)
        .map(|i| 0..i)
        .multi_cartesian_product()
        .filter(|e| e.windows(2).all(|w| w[0] <= w[1]))
        .collect()
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan_table(n: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for m in 1..=n {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All n×n matrices over {-1,0,1} with at most `support` nonzero entries.
pub fn small_support_matrices(n: usize, support: usize) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    for k in 0..=support {
        for cells in (0..n * n).combinations(k) {
            for signs in 0u32..1 << k {
                let mut m = vec![vec![0i64; n]; n];
                for (b, &c) in cells.iter().enumerate() {
                    m[c / n][c % n] = if signs >> b & 1 == 1 { -1 } else { 1 };
                }
                out.push(m);
            }
        }
    }
    out
}

/// The worked example matrix and the two matrices its key process passes through.
pub fn worked_example_chain() -> Vec<Vec<Vec<i64>>> {
    vec![
        vec![
            vec![0, 0, 1, 0, 0],
            vec![0, 1, -1, 1, 0],
            vec![1, 0, 0, -1, 1],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
        ],
        vec![
            vec![0, 0, 1, 0, 0],
            vec![0, 1, -1, 1, 0],
            vec![0, 0, 0, 0, 1],
            vec![1, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
        ],
        vec![
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1],
            vec![1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0],
        ],
    ]
}
