//! Alternating sign matrices and permutations.
//!
//! Matrices are addressed by 1-based `(row, column)` pairs with row 1 at the
//! top and column 1 at the left. The permutation matrix of `σ` has its 1 in
//! row `i`, column `σ(i)`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Line, Result};

/// A 1-based cell address.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

impl Position {
    pub const fn new(row: usize, col: usize) -> Self {
        Position { row, col }
    }

    /// True when `self` lies weakly southwest of `other`.
    pub fn weakly_southwest_of(&self, other: Position) -> bool {
        self.row >= other.row && self.col <= other.col
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for Position {
    fn from((row, col): (usize, usize)) -> Self {
        Position { row, col }
    }
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptySize);
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation { n, images });
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        Ok(Permutation {
            images: (1..=n).collect(),
        })
    }

    /// The permutation `2 3 … n 1`; `w(1) = 1`.
    pub fn w(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySize);
        }
        let mut images: Vec<usize> = (2..=n).collect();
        images.push(1);
        Ok(Permutation { images })
    }

    /// Every permutation of size `n`, in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .filter(|v| !v.is_empty())
            .map(Permutation::from_images_unchecked)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation {
            images: self.images.iter().rev().copied().collect(),
        }
    }

    /// `self` followed by `other` shifted up by `self.len()`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let k = self.len();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|v| v + k));
        Permutation { images }
    }

    /// `self` shifted up by `other.len()`, followed by `other`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let k = other.len();
        let mut images: Vec<usize> = self.images.iter().map(|v| v + k).collect();
        images.extend_from_slice(&other.images);
        Permutation { images }
    }

    /// 1 entries of the permutation matrix with no other 1 strictly to their
    /// southwest, ordered by increasing column.
    pub fn southwest_records(&self) -> Vec<Position> {
        let mut records = Vec::new();
        let mut min_below = usize::MAX;
        for (i, &v) in self.images.iter().enumerate().rev() {
            if v < min_below {
                records.push(Position::new(i + 1, v));
                min_below = v;
            }
        }
        records.sort_by_key(|p| p.col);
        records
    }

    /// Compact one-line notation: digits for `n ≤ 9` (`"34512"`), comma
    /// separated otherwise.
    pub fn compact(&self) -> String {
        if self.len() <= 9 {
            self.images.iter().map(|v| v.to_string()).collect()
        } else {
            self.images.iter().join(",")
        }
    }

    pub fn to_asm(&self) -> Asm {
        Asm::from_permutation(self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"312"`, `"3,1,2"` or `"3 1 2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || Error::UnknownPattern(s.to_string());
        let images: Vec<usize> = if s.contains(',') || s.contains(char::is_whitespace) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| unknown()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(unknown))
                .collect::<Result<_>>()?
        };
        Permutation::new(images).map_err(|_| unknown())
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.compact())
    }
}

/// An alternating sign matrix of side `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    /// Validates a square integer matrix against the ASM axioms.
    ///
    /// Checks, in order: shape, entry values, row and column sums, then the
    /// sign alternation of every row and column.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptySize);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare {
                    expected: n,
                    rows: n,
                    row: i + 1,
                    found: row.len(),
                });
            }
            for (j, &value) in row.iter().enumerate() {
                if !(-1..=1).contains(&value) {
                    return Err(Error::BadEntry {
                        at: Position::new(i + 1, j + 1),
                        value,
                    });
                }
                entries.push(value as i8);
            }
        }
        let asm = Asm { n, entries };
        asm.check_lines()?;
        Ok(asm)
    }

    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Asm { n, entries }
    }

    fn check_lines(&self) -> Result<()> {
        let n = self.n;
        for line in [Line::Row, Line::Column] {
            for k in 1..=n {
                let sum: i64 = (1..=n).map(|t| self.line_entry(line, k, t) as i64).sum();
                if sum != 1 {
                    return Err(Error::BadLineSum { line, index: k, sum });
                }
            }
        }
        for line in [Line::Row, Line::Column] {
            for k in 1..=n {
                let mut prefix = 0i64;
                for t in 1..=n {
                    prefix += self.line_entry(line, k, t) as i64;
                    if !(0..=1).contains(&prefix) {
                        let at = match line {
                            Line::Row => Position::new(k, t),
                            Line::Column => Position::new(t, k),
                        };
                        return Err(Error::BadAlternation { line, index: k, at });
                    }
                }
            }
        }
        Ok(())
    }

    fn line_entry(&self, line: Line, k: usize, t: usize) -> i8 {
        match line {
            Line::Row => self.get(k, t),
            Line::Column => self.get(t, k),
        }
    }

    /// Re-runs the line checks; used after in-place rewrites.
    pub fn is_valid(&self) -> bool {
        self.entries.iter().all(|e| (-1..=1).contains(e)) && self.check_lines().is_ok()
    }

    /// The permutation matrix of `p`.
    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.len();
        let mut entries = vec![0i8; n * n];
        for (i, &v) in p.images().iter().enumerate() {
            entries[i * n + (v - 1)] = 1;
        }
        Asm { n, entries }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Ok(Asm::from_permutation(&Permutation::identity(n)?))
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[(row - 1) * self.n + (col - 1)]
    }

    pub fn at(&self, p: Position) -> i8 {
        self.get(p.row, p.col)
    }

    pub(crate) fn set(&mut self, p: Position, value: i8) {
        self.entries[(p.row - 1) * self.n + (p.col - 1)] = value;
    }

    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[(row - 1) * self.n..row * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows().map(|r| r.iter().map(|&e| e as i64).collect()).collect()
    }

    fn positions_of(&self, value: i8) -> impl Iterator<Item = Position> + '_ {
        let n = self.n;
        self.entries
            .iter()
            .enumerate()
            .filter(move |(_, &e)| e == value)
            .map(move |(k, _)| Position::new(k / n + 1, k % n + 1))
    }

    /// Positions of the −1 entries in row-major order.
    pub fn minus_ones(&self) -> Vec<Position> {
        self.positions_of(-1).collect()
    }

    /// Positions of the +1 entries in row-major order.
    pub fn ones(&self) -> Vec<Position> {
        self.positions_of(1).collect()
    }

    pub fn count_minus_ones(&self) -> usize {
        self.entries.iter().filter(|&&e| e == -1).count()
    }

    pub fn is_permutation_matrix(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    /// The permutation this matrix represents, if it has no −1.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if !self.is_permutation_matrix() {
            return None;
        }
        let images = self
            .rows()
            .map(|r| r.iter().position(|&e| e == 1).map(|c| c + 1))
            .collect::<Option<Vec<_>>>()?;
        Some(Permutation::from_images_unchecked(images))
    }

    /// Reflection across the northeast–southwest diagonal:
    /// output `(i, j)` is input `(n+1−j, n+1−i)`.
    pub fn reflect_antidiagonal(&self) -> Asm {
        let n = self.n;
        let mut entries = vec![0i8; n * n];
        for i in 1..=n {
            for j in 1..=n {
                entries[(i - 1) * n + (j - 1)] = self.get(n + 1 - j, n + 1 - i);
            }
        }
        Asm { n, entries }
    }

    /// Block-diagonal matrix with `self` top-left and `other` bottom-right.
    pub fn direct_sum(&self, other: &Asm) -> Asm {
        let (a, b) = (self.n, other.n);
        let n = a + b;
        let mut entries = vec![0i8; n * n];
        for i in 0..a {
            entries[i * n..i * n + a].copy_from_slice(self.row(i + 1));
        }
        for i in 0..b {
            let r = a + i;
            entries[r * n + a..r * n + n].copy_from_slice(other.row(i + 1));
        }
        Asm { n, entries }
    }

    /// Block-antidiagonal matrix with `self` top-right and `other` bottom-left.
    pub fn skew_sum(&self, other: &Asm) -> Asm {
        let (a, b) = (self.n, other.n);
        let n = a + b;
        let mut entries = vec![0i8; n * n];
        for i in 0..a {
            entries[i * n + b..i * n + n].copy_from_slice(self.row(i + 1));
        }
        for i in 0..b {
            let r = a + i;
            entries[r * n..r * n + b].copy_from_slice(other.row(i + 1));
        }
        Asm { n, entries }
    }
}

impl From<&Permutation> for Asm {
    fn from(p: &Permutation) -> Self {
        Asm::from_permutation(p)
    }
}

/// One matrix row per line, cells right-aligned in width 2.
impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", row.iter().map(|e| format!("{e:>2}")).join(" "))?;
        }
        Ok(())
    }
}
