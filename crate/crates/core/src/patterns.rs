//! Permutation patterns: containment in permutations, classical containment
//! in ASMs, key-avoidance, and the antidiagonal conjugation of patterns.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::asm::{Asm, Permutation, Position};
use crate::error::{Error, Result};
use crate::key::sw_key;

/// A non-empty set of permutation patterns; avoiding the set means avoiding
/// every member.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternSet {
    patterns: BTreeSet<Permutation>,
}

impl PatternSet {
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Result<Self> {
        let patterns: BTreeSet<Permutation> = patterns.into_iter().collect();
        if patterns.is_empty() {
            return Err(Error::EmptyPatternSet);
        }
        Ok(PatternSet { patterns })
    }

    pub fn single(p: Permutation) -> Self {
        PatternSet {
            patterns: BTreeSet::from([p]),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter()
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// True when `sigma` avoids every pattern of the set.
    pub fn avoided_by(&self, sigma: &Permutation) -> bool {
        self.patterns.iter().all(|p| !perm_contains(sigma, p))
    }

    /// Image of the set under [`conjugate`].
    pub fn conjugate(&self) -> PatternSet {
        PatternSet {
            patterns: self.patterns.iter().map(conjugate).collect(),
        }
    }
}

/// Patterns joined by `&`, e.g. `312&321`.
impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.patterns.iter().map(Permutation::compact).join("&"))
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Accepts patterns separated by `&`, `+` or `/`.
    fn from_str(s: &str) -> Result<Self> {
        let patterns = s
            .split(['&', '+', '/'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Permutation>>>()?;
        PatternSet::new(patterns)
    }
}

/// Backtracking search for `pattern` among `points`, given as `(row, value)`
/// pairs sorted by row. Chosen points must have strictly increasing rows,
/// distinct values, and values order-isomorphic to `pattern`.
fn contains_among(points: &[(usize, usize)], pattern: &[usize]) -> bool {
    fn extend(
        points: &[(usize, usize)],
        pattern: &[usize],
        start: usize,
        last_row: usize,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let a = chosen.len();
        if a == pattern.len() {
            return true;
        }
        let remaining = pattern.len() - a;
        if points.len() < remaining {
            return false;
        }
        for idx in start..=points.len() - remaining {
            let (row, value) = points[idx];
            if a > 0 && row == last_row {
                continue;
            }
            let consistent = chosen.iter().enumerate().all(|(b, &v)| {
                v != value && ((v < value) == (pattern[b] < pattern[a]))
            });
            if !consistent {
                continue;
            }
            chosen.push(value);
            if extend(points, pattern, idx + 1, row, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    extend(points, pattern, 0, 0, &mut Vec::with_capacity(pattern.len()))
}

/// Whether a sequence of distinct values contains `pattern`.
pub fn sequence_contains(values: &[usize], pattern: &Permutation) -> bool {
    if pattern.len() > values.len() {
        return false;
    }
    let points: Vec<(usize, usize)> = values.iter().enumerate().map(|(i, &v)| (i, v)).collect();
    contains_among(&points, pattern.images())
}

/// Whether `sigma` contains `pi` as a pattern.
pub fn perm_contains(sigma: &Permutation, pi: &Permutation) -> bool {
    sequence_contains(sigma.images(), pi)
}

/// Classical containment: treat −1s as 0s and look for `pi`'s permutation
/// matrix as a submatrix.
pub fn classical_contains(a: &Asm, pi: &Permutation) -> bool {
    let points: Vec<(usize, usize)> = a
        .ones()
        .into_iter()
        .map(|Position { row, col }| (row, col))
        .collect();
    contains_among(&points, pi.images())
}

pub fn classically_avoids(a: &Asm, s: &PatternSet) -> bool {
    s.iter().all(|p| !classical_contains(a, p))
}

/// Whether the southwest key of `a` avoids every pattern in `s`.
pub fn key_avoids(a: &Asm, s: &PatternSet) -> bool {
    s.avoided_by(&sw_key(a))
}

/// `((π reversed)⁻¹) reversed`: the pattern seen through the antidiagonal
/// reflection of its permutation matrix.
pub fn conjugate(pi: &Permutation) -> Permutation {
    pi.reverse().inverse().reverse()
}
