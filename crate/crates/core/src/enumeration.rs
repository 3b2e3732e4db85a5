//! Exhaustive generation of ASMs and the counts built on top of it.
//!
//! ASMs are generated through their monotone triangles: rows are filled from
//! the bottom row `1..n` upward, each new row interlacing the one below it.
//! Sweeps are sharded on the lowest generated rows and merged by exact
//! integer addition, so results do not depend on scheduling.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::asm::{Asm, Permutation};
use crate::error::{Error, Result};
use crate::patterns::{classically_avoids, perm_contains, PatternSet};
use crate::triangles::{asm_from_triangle, MonotoneTriangle};

/// Largest size the generators accept at all.
pub const MAX_GENERATION_SIZE: usize = 8;
/// Largest size a sweep accepts without an explicit override.
pub const DEFAULT_SWEEP_LIMIT: usize = 7;
/// Largest size for the Catalan identity check.
pub const MAX_IDENTITY_SIZE: usize = 14;

fn check_generation_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    if n > MAX_GENERATION_SIZE {
        return Err(Error::SizeTooLarge {
            n,
            max: MAX_GENERATION_SIZE,
        });
    }
    Ok(())
}

/// Backtracking iterator over monotone triangles of a fixed order.
///
/// `levels[0]` is the bottom row; `levels[k]` has `n − k` entries. Levels
/// below `fixed` never change, which is how shards are expressed.
#[derive(Debug, Clone)]
pub struct Triangles {
    levels: Vec<Vec<usize>>,
    fixed: usize,
    depth: usize,
    started: bool,
    done: bool,
}

fn lowest_row_above(below: &[usize]) -> Vec<usize> {
    below[..below.len() - 1].to_vec()
}

/// Advances `row` to the next row interlacing `below` in lexicographic
/// order. Returns false when `row` was the last one.
fn advance_row(row: &mut [usize], below: &[usize]) -> bool {
    let Some(j) = (0..row.len()).rev().find(|&j| row[j] < below[j + 1]) else {
        return false;
    };
    row[j] += 1;
    for k in j + 1..row.len() {
        row[k] = below[k].max(row[k - 1] + 1);
    }
    true
}

impl Triangles {
    fn with_levels(levels: Vec<Vec<usize>>, depth: usize) -> Self {
        let fixed = levels.len();
        Triangles {
            levels,
            fixed,
            depth,
            started: false,
            done: false,
        }
    }

    fn fill_from(&mut self, level: usize) {
        self.levels.truncate(level);
        while self.levels.len() < self.depth {
            let next = lowest_row_above(&self.levels[self.levels.len() - 1]);
            self.levels.push(next);
        }
    }

    fn next_levels(&mut self) -> Option<&[Vec<usize>]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill_from(self.fixed);
            return Some(&self.levels);
        }
        let mut k = self.depth;
        loop {
            if k <= self.fixed {
                self.done = true;
                return None;
            }
            k -= 1;
            let (lower, upper) = self.levels.split_at_mut(k);
            if advance_row(&mut upper[0], &lower[k - 1]) {
                break;
            }
        }
        self.fill_from(k + 1);
        Some(&self.levels)
    }

    /// Prefixes of `d` rows above the bottom row, in generation order.
    fn seeds(n: usize, d: usize) -> Vec<Vec<Vec<usize>>> {
        let depth = (1 + d).min(n);
        let mut it = Triangles::with_levels(vec![(1..=n).collect()], depth);
        let mut out = Vec::new();
        while let Some(levels) = it.next_levels() {
            out.push(levels.to_vec());
        }
        out
    }

    fn from_seed(n: usize, seed: Vec<Vec<usize>>) -> Self {
        Triangles::with_levels(seed, n)
    }
}

impl Iterator for Triangles {
    type Item = MonotoneTriangle;

    fn next(&mut self) -> Option<MonotoneTriangle> {
        let levels = self.next_levels()?;
        Some(MonotoneTriangle::from_rows_unchecked(
            levels.iter().rev().cloned().collect(),
        ))
    }
}

/// Every monotone triangle of order `n`, each exactly once, in lexicographic
/// order of rows with the top row varying fastest.
pub fn generate_triangles(n: usize) -> Result<Triangles> {
    check_generation_size(n)?;
    Ok(Triangles::with_levels(vec![(1..=n).collect()], n))
}

/// Every `n×n` ASM, in the order of [`generate_triangles`].
pub fn generate_asms(n: usize) -> Result<impl Iterator<Item = Asm>> {
    Ok(generate_triangles(n)?.map(|t| asm_from_triangle(&t)))
}

/// Every `n×n` ASM, generated independently of monotone triangles: cells are
/// filled row by row while every row prefix and column prefix sum stays in
/// `{0, 1}`.
pub fn asms_by_row_sums(n: usize) -> Result<Vec<Asm>> {
    check_generation_size(n)?;
    let mut out = Vec::new();
    let mut entries = vec![0i8; n * n];
    let mut columns = vec![0i8; n];
    fill_cell(n, 0, 0, &mut entries, &mut columns, &mut out);
    Ok(out)
}

fn fill_cell(
    n: usize,
    cell: usize,
    row_prefix: i8,
    entries: &mut [i8],
    columns: &mut [i8],
    out: &mut Vec<Asm>,
) {
    if cell == n * n {
        out.push(Asm::from_entries_unchecked(n, entries.to_vec()));
        return;
    }
    let c = cell % n;
    let last_in_row = c == n - 1;
    let last_row = cell / n == n - 1;
    for value in [-1i8, 0, 1] {
        let rp = row_prefix + value;
        let cp = columns[c] + value;
        if !(0..=1).contains(&rp) || !(0..=1).contains(&cp) {
            continue;
        }
        if (last_in_row && rp != 1) || (last_row && cp != 1) {
            continue;
        }
        entries[cell] = value;
        columns[c] = cp;
        let next_prefix = if last_in_row { 0 } else { rp };
        fill_cell(n, cell + 1, next_prefix, entries, columns, out);
        columns[c] -= value;
    }
    entries[cell] = 0;
}

/// How an ASM is tested against a pattern set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// The southwest key avoids the patterns.
    Key,
    /// The ASM with −1s read as 0s avoids the patterns.
    Classical,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Key => "key",
            Mode::Classical => "classical",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "key" => Ok(Mode::Key),
            "classical" => Ok(Mode::Classical),
            other => Err(Error::Parse {
                line: 0,
                column: 0,
                message: format!("unknown mode {other:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// Lift the size limit from 7 to 8.
    pub allow_large: bool,
    /// Number of chunks the work is split into; 0 means one per seed.
    pub shards: usize,
}

impl SweepOptions {
    fn check(&self, n: usize) -> Result<()> {
        let max = if self.allow_large {
            MAX_GENERATION_SIZE
        } else {
            DEFAULT_SWEEP_LIMIT
        };
        if n > max {
            return Err(Error::SizeTooLarge { n, max });
        }
        check_generation_size(n)
    }
}

/// Parallel fold over all `n×n` ASMs.
fn fold_asms<T, F, M>(n: usize, opts: &SweepOptions, init: impl Fn() -> T + Sync, fold: F, merge: M) -> T
where
    T: Send,
    F: Fn(&mut T, &Asm) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    let seeds = Triangles::seeds(n, n / 2);
    let chunk = if opts.shards == 0 {
        1
    } else {
        seeds.len().div_ceil(opts.shards).max(1)
    };
    seeds
        .par_chunks(chunk)
        .map(|chunk| {
            let mut acc = init();
            for seed in chunk {
                for t in Triangles::from_seed(n, seed.clone()) {
                    fold(&mut acc, &asm_from_triangle(&t));
                }
            }
            acc
        })
        .reduce(&init, &merge)
}

/// Number of `n×n` ASMs, counted through the triangle generator.
pub fn count_asms(n: usize, opts: &SweepOptions) -> Result<u64> {
    opts.check(n)?;
    Ok(fold_asms(n, opts, || 0u64, |acc, _| *acc += 1, |a, b| a + b))
}

/// Number of `n×n` ASMs with each southwest key, ordered by one-line notation.
pub fn counts_by_key(n: usize) -> Result<BTreeMap<Permutation, u64>> {
    counts_by_key_with(n, &SweepOptions::default())
}

pub fn counts_by_key_with(n: usize, opts: &SweepOptions) -> Result<BTreeMap<Permutation, u64>> {
    opts.check(n)?;
    let map = fold_asms(
        n,
        opts,
        HashMap::<Permutation, u64>::new,
        |acc, a| *acc.entry(crate::key::sw_key(a)).or_default() += 1,
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    );
    Ok(map.into_iter().collect())
}

/// Number of `n×n` ASMs avoiding `s` in the given mode.
pub fn count_avoiders(n: usize, s: &PatternSet, mode: Mode) -> Result<u64> {
    let table = sweep(n..=n, std::slice::from_ref(s), mode, &SweepOptions::default())?;
    Ok(table[0].counts[0])
}

/// Avoidance counts for one pattern set over a range of sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub patterns: String,
    pub mode: Mode,
    pub first_n: usize,
    pub counts: Vec<u64>,
}

impl CountTable {
    pub fn count(&self, n: usize) -> Option<u64> {
        n.checked_sub(self.first_n).and_then(|i| self.counts.get(i)).copied()
    }
}

/// Counts for every pattern set and every `n` in `ns`. In key mode each
/// ASM's key is computed once per size and shared by all pattern sets.
pub fn sweep(
    ns: RangeInclusive<usize>,
    sets: &[PatternSet],
    mode: Mode,
    opts: &SweepOptions,
) -> Result<Vec<CountTable>> {
    for n in ns.clone() {
        opts.check(n)?;
    }
    let mut tables: Vec<CountTable> = sets
        .iter()
        .map(|s| CountTable {
            patterns: s.to_string(),
            mode,
            first_n: *ns.start(),
            counts: Vec::new(),
        })
        .collect();
    for n in ns {
        let counts: Vec<u64> = match mode {
            Mode::Key => {
                let by_key = counts_by_key_with(n, opts)?;
                sets.iter()
                    .map(|s| {
                        by_key
                            .iter()
                            .filter(|(k, _)| s.avoided_by(k))
                            .map(|(_, c)| c)
                            .sum()
                    })
                    .collect()
            }
            Mode::Classical => fold_asms(
                n,
                opts,
                || vec![0u64; sets.len()],
                |acc, a| {
                    for (slot, s) in acc.iter_mut().zip(sets) {
                        if classically_avoids(a, s) {
                            *slot += 1;
                        }
                    }
                },
                |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
            ),
        };
        for (table, c) in tables.iter_mut().zip(counts) {
            table.counts.push(c);
        }
    }
    Ok(tables)
}

/// Permutations of size `n` avoiding every pattern in `s`, in lexicographic
/// order. Deleting the largest entry of an avoider leaves an avoider, so each
/// size is built by inserting `m` into the avoiders of size `m − 1`.
pub fn pattern_avoiders(n: usize, s: &PatternSet) -> Vec<Permutation> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Vec::new()];
    for m in 1..=n {
        let mut next = Vec::new();
        for p in &level {
            for pos in 0..m {
                let mut q: Vec<usize> = p.clone();
                q.insert(pos, m);
                let perm = Permutation::from_images_unchecked(q);
                if s.avoided_by(&perm) {
                    next.push(perm.images().to_vec());
                }
            }
        }
        level = next;
    }
    level.sort_unstable();
    level.into_iter().map(Permutation::from_images_unchecked).collect()
}

/// An ordered tuple of parts; `strict` compositions have no zero part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Composition {
    parts: Vec<usize>,
    strict: bool,
}

impl Composition {
    pub fn new(parts: Vec<usize>, strict: bool) -> Result<Self> {
        if strict && parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts, strict })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

fn compositions(total: usize, k: usize, min_part: usize, strict: bool) -> Vec<Composition> {
    fn go(remaining: usize, k: usize, min_part: usize, prefix: &mut Vec<usize>, strict: bool, out: &mut Vec<Composition>) {
        if k == 1 {
            if remaining >= min_part {
                prefix.push(remaining);
                out.push(Composition {
                    parts: prefix.clone(),
                    strict,
                });
                prefix.pop();
            }
            return;
        }
        let reserve = min_part * (k - 1);
        if remaining < reserve + min_part {
            return;
        }
        for first in (min_part..=remaining - reserve).rev() {
            prefix.push(first);
            go(remaining - first, k - 1, min_part, prefix, strict, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(total, k, min_part, &mut Vec::with_capacity(k), strict, &mut out);
    }
    out
}

/// Weak compositions of `total` into `k` parts, first part descending.
/// Empty for `k = 0`.
pub fn weak_compositions(total: usize, k: usize) -> Vec<Composition> {
    compositions(total, k, 0, false)
}

/// Strict compositions of `total` into `k` parts, first part descending.
/// Empty for `k = 0`.
pub fn strict_compositions(total: usize, k: usize) -> Vec<Composition> {
    compositions(total, k, 1, true)
}

fn require_312_321_avoider(p: &Permutation) -> Result<()> {
    let p312 = Permutation::from_images_unchecked(vec![3, 1, 2]);
    let p321 = Permutation::from_images_unchecked(vec![3, 2, 1]);
    if perm_contains(p, &p312) || perm_contains(p, &p321) {
        return Err(Error::NotIn312And321Class(p.compact()));
    }
    Ok(())
}

/// The block sizes `(m₁, …, m_k)` with `p = w_{m₁} ⊕ … ⊕ w_{m_k}`.
///
/// Each block holds exactly one southwest record, in its bottom-left corner,
/// so the parts are the gaps between the records' rows.
pub fn composition_of(p: &Permutation) -> Result<Composition> {
    require_312_321_avoider(p)?;
    let mut previous = 0;
    let parts = p
        .southwest_records()
        .into_iter()
        .map(|r| {
            let m = r.row - previous;
            previous = r.row;
            m
        })
        .collect();
    let c = Composition::new(parts, true)?;
    debug_assert_eq!(perm_from_composition(&c).as_ref(), Ok(p));
    Ok(c)
}

/// `w_{m₁} ⊕ … ⊕ w_{m_k}` for a composition with positive parts.
pub fn perm_from_composition(c: &Composition) -> Result<Permutation> {
    let mut parts = c.parts().iter();
    let first = parts
        .next()
        .ok_or_else(|| Error::InvalidComposition("no parts".to_string()))?;
    let w = |m: usize| {
        Permutation::w(m).map_err(|_| Error::InvalidComposition(format!("{c} has a zero part")))
    };
    parts.try_fold(w(*first)?, |acc, &m| Ok(acc.direct_sum(&w(m)?)))
}

/// Product of `C_{m−1}` over the blocks of `p`.
pub fn predicted_count_for_key(p: &Permutation) -> Result<u64> {
    composition_of(p)?
        .parts()
        .iter()
        .try_fold(1u64, |acc, &m| Ok(acc * catalan(m - 1)?))
}

/// The Catalan number `C_n = (2n choose n)/(n+1)`, exact.
pub fn catalan(n: usize) -> Result<u64> {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
        if c > u64::MAX as u128 {
            return Err(Error::Overflow(n));
        }
    }
    Ok(c as u64)
}

/// Both sides of the Catalan identity: `lhs = C_n`; `rhs1` sums the block
/// products over 312,321-avoiding permutations; `rhs2` sums products of
/// Catalan numbers over weak compositions of `n − k` into `k` parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalanIdentity {
    pub n: usize,
    pub lhs: u64,
    pub rhs1: u64,
    pub rhs2: u64,
    pub breakdown: Vec<KeyTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyTerm {
    pub key: Permutation,
    pub composition: Composition,
    pub count: u64,
}

impl CatalanIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs1 && self.rhs1 == self.rhs2
    }
}

pub fn catalan_identity_check(n: usize) -> Result<CatalanIdentity> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    if n > MAX_IDENTITY_SIZE {
        return Err(Error::SizeTooLarge {
            n,
            max: MAX_IDENTITY_SIZE,
        });
    }
    let lhs = catalan(n)?;
    let class: PatternSet = "312&321".parse()?;
    let breakdown = pattern_avoiders(n, &class)
        .into_iter()
        .map(|key| {
            Ok(KeyTerm {
                composition: composition_of(&key)?,
                count: predicted_count_for_key(&key)?,
                key,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs1 = breakdown.iter().map(|t| t.count).sum();
    let mut rhs2 = 0;
    for k in 1..=n {
        for m in weak_compositions(n - k, k) {
            rhs2 += m
                .parts()
                .iter()
                .try_fold(1u64, |acc, &part| Ok::<_, Error>(acc * catalan(part)?))?;
        }
    }
    Ok(CatalanIdentity {
        n,
        lhs,
        rhs1,
        rhs2,
        breakdown,
    })
}
