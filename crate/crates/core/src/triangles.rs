//! Monotone triangles and the Catalan objects attached to them.
//!
//! Row `i` of the triangle of an ASM lists the columns whose partial column
//! sum over rows `1..=i` equals 1. Columns of the triangle are left-aligned:
//! column `j` holds `t[i][j]` for `i ≥ j`.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::asm::{Asm, Position};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<usize>>,
}

impl MonotoneTriangle {
    /// Builds a triangle from its rows, top row first.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptySize);
        }
        let invalid = |msg: String| Err(Error::InvalidTriangle(msg));
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return invalid(format!("row {} has {} entries", i + 1, row.len()));
            }
            if !row.windows(2).all(|w| w[0] < w[1]) {
                return invalid(format!("row {} is not strictly increasing", i + 1));
            }
        }
        for i in 0..n - 1 {
            for j in 0..=i {
                if rows[i + 1][j] > rows[i][j] {
                    return invalid(format!("column {} decreases upward at row {}", j + 1, i + 1));
                }
                if rows[i][j] > rows[i + 1][j + 1] {
                    return invalid(format!("diagonal decreases below row {}, entry {}", i + 1, j + 1));
                }
            }
        }
        if !rows[n - 1].iter().copied().eq(1..=n) {
            return invalid("bottom row is not 1..n".to_string());
        }
        Ok(MonotoneTriangle { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        debug_assert!(MonotoneTriangle::new(rows.clone()).is_ok());
        MonotoneTriangle { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row `i`, 1-based from the top.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i - 1]
    }

    /// Column `j` (1-based), top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows[j - 1..].iter().map(|r| r[j - 1]).collect()
    }

    fn columns(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (1..=self.order()).map(|j| self.column(j))
    }

    /// The triangle of the identity matrix: row `i` is `1..=i`.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        Ok(MonotoneTriangle {
            rows: (1..=n).map(|i| (1..=i).collect()).collect(),
        })
    }
}

impl fmt::Display for MonotoneTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let indent = " ".repeat(n - 1 - i);
            write!(f, "{indent}{}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

pub fn triangle_from_asm(a: &Asm) -> MonotoneTriangle {
    let n = a.size();
    let mut partial = vec![0i8; n];
    let mut rows = Vec::with_capacity(n);
    for row in a.rows() {
        for (s, &e) in partial.iter_mut().zip(row) {
            *s += e;
        }
        rows.push(
            partial
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == 1)
                .map(|(c, _)| c + 1)
                .collect(),
        );
    }
    MonotoneTriangle::from_rows_unchecked(rows)
}

/// Inverse of [`triangle_from_asm`]: row `i` of the ASM is the indicator of
/// row `i` of the triangle minus the indicator of row `i − 1`.
pub fn asm_from_triangle(t: &MonotoneTriangle) -> Asm {
    let n = t.order();
    let mut entries = vec![0i8; n * n];
    let mut previous = vec![0i8; n];
    for (i, row) in t.rows().iter().enumerate() {
        let mut current = vec![0i8; n];
        for &c in row {
            current[c - 1] = 1;
        }
        for c in 0..n {
            entries[i * n + c] = current[c] - previous[c];
        }
        previous = current;
    }
    let a = Asm::from_entries_unchecked(n, entries);
    assert!(a.is_valid(), "a monotone triangle always yields an ASM");
    a
}

/// Whether every column's values form an interval of integers.
pub fn is_gapless(t: &MonotoneTriangle) -> bool {
    t.columns().all(|col| {
        let distinct: Vec<usize> = col.into_iter().sorted().dedup().collect();
        distinct[distinct.len() - 1] - distinct[0] + 1 == distinct.len()
    })
}

/// Whether no column holds more than two distinct values.
pub fn max_two_values_per_column(t: &MonotoneTriangle) -> bool {
    t.columns()
        .all(|col| col.into_iter().sorted().dedup().count() <= 2)
}

/// A −1 with a witness that its triangle has a gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BadMinusOne {
    pub minus_one: Position,
    /// The nearest 1 west of the −1 in its row.
    pub west_one: Position,
    /// A +1 that is the first nonzero entry below the −1's row in a column
    /// strictly between `west_one` and the −1.
    pub witness: Position,
}

/// The bad −1s of `a` in row-major order, each with its topmost, then
/// westmost, witness.
pub fn bad_minus_ones(a: &Asm) -> Vec<BadMinusOne> {
    let n = a.size();
    let mut bad = Vec::new();
    for m in a.minus_ones() {
        let west = (1..m.col)
            .rev()
            .find(|&c| a.get(m.row, c) != 0)
            .expect("a -1 always has a nonzero entry to its west");
        debug_assert_eq!(a.get(m.row, west), 1);
        let witness = (west + 1..m.col)
            .filter_map(|c| {
                (m.row + 1..=n)
                    .find(|&r| a.get(r, c) != 0)
                    .filter(|&r| a.get(r, c) == 1)
                    .map(|r| Position::new(r, c))
            })
            .min();
        if let Some(witness) = witness {
            bad.push(BadMinusOne {
                minus_one: m,
                west_one: Position::new(m.row, west),
                witness,
            });
        }
    }
    bad
}

/// A sequence `e₁ … e_n` with `0 ≤ e_i < i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InversionSequence {
    e: Vec<usize>,
}

impl InversionSequence {
    pub fn new(e: Vec<usize>) -> Result<Self> {
        if e.is_empty() {
            return Err(Error::EmptySize);
        }
        if e.iter().enumerate().any(|(i, &v)| v > i) {
            return Err(Error::InvalidInversionSequence(e));
        }
        Ok(InversionSequence { e })
    }

    pub fn values(&self) -> &[usize] {
        &self.e
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }

    /// Avoids the pattern 10.
    pub fn is_weakly_increasing(&self) -> bool {
        self.e.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.e.iter().join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

/// A balanced word over `{U, D}` whose prefixes never have more `D` than `U`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord {
    steps: Vec<Step>,
}

impl DyckWord {
    pub fn new(steps: Vec<Step>) -> Option<Self> {
        let mut height: i64 = 0;
        for s in &steps {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return None;
            }
        }
        (height == 0).then_some(DyckWord { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::U { "U" } else { "D" })?;
        }
        Ok(())
    }
}

/// The bijection from gapless triangles with at most two values per column
/// to weakly increasing inversion sequences: `e_i` is one less than the
/// number of times `n+1−i` occurs in column `n+1−i`.
pub fn invseq_from_triangle(t: &MonotoneTriangle) -> Result<InversionSequence> {
    if !is_gapless(t) || !max_two_values_per_column(t) {
        return Err(Error::NotInBijectionDomain);
    }
    let n = t.order();
    let e = (1..=n)
        .map(|i| {
            let c = n + 1 - i;
            t.column(c).iter().filter(|&&v| v == c).count() - 1
        })
        .collect();
    InversionSequence::new(e)
}

/// Inverse of [`invseq_from_triangle`]: column `c` holds `c` in its bottom
/// `1 + e_{n+1−c}` rows and `c + 1` above.
pub fn triangle_from_invseq(e: &InversionSequence) -> Result<MonotoneTriangle> {
    if !e.is_weakly_increasing() {
        return Err(Error::Contains10(e.values().to_vec()));
    }
    let n = e.len();
    let rows = (1..=n)
        .map(|r| {
            (1..=r)
                .map(|c| {
                    let low_rows = 1 + e.values()[n - c];
                    if r + low_rows > n {
                        c
                    } else {
                        c + 1
                    }
                })
                .collect()
        })
        .collect();
    MonotoneTriangle::new(rows)
}

/// Word encoding of the staircase path: with `e_{n+1} = n`, emit for each
/// `i` one `U` followed by `e_{i+1} − e_i` copies of `D`.
pub fn dyck_from_invseq(e: &InversionSequence) -> Result<DyckWord> {
    if !e.is_weakly_increasing() {
        return Err(Error::Contains10(e.values().to_vec()));
    }
    let n = e.len();
    let v = e.values();
    let mut steps = Vec::with_capacity(2 * n);
    for i in 0..n {
        let next = if i + 1 < n { v[i + 1] } else { n };
        steps.push(Step::U);
        steps.extend(std::iter::repeat_n(Step::D, next - v[i]));
    }
    Ok(DyckWord::new(steps).expect("weakly increasing inversion sequences give Dyck words"))
}
