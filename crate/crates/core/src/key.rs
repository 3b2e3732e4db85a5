//! The southwest key process.
//!
//! A −1 is removable when no other −1 lies weakly southwest of it. Its
//! neighboring 1s are the +1 entries weakly southwest of it that are not
//! dominated (weakly northeast and inside the same region) by another such
//! +1. They always form a staircase that starts with the nearest 1 west of
//! the −1 and ends with the nearest 1 south of it.
//!
//! In Ferrers-diagram terms the −1 is the northeast corner, the west 1 the
//! northwest corner, the south 1 the southeast corner and the inner
//! neighboring 1s the inner corners. Removing the −1 shifts every 1 of the
//! staircase down onto the row of the next one, which is the same rewrite
//! expressed in closed form: for staircase `s₀ … s_m` the 1s at `s_k` and
//! the −1 become 0 and new 1s appear at `(s_{k+1}.row, s_k.col)`.

use serde::Serialize;

use crate::asm::{Asm, Permutation, Position};
use crate::enumeration::{generate_asms, MAX_GENERATION_SIZE};
use crate::error::{Error, Result};

/// Record of a single −1 removal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemovalTrace {
    pub minus_one: Position,
    /// The neighboring 1s that were moved, top to bottom.
    pub staircase: Vec<Position>,
    /// The 1s created by the removal, top to bottom.
    pub created: Vec<Position>,
    /// Whether the staircase has exactly two entries (no inner corner).
    pub simple: bool,
}

/// One link in the chain of matrices produced by the key process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub asm: Asm,
    /// The removal that produced `asm`; `None` for the starting matrix.
    pub removal: Option<RemovalTrace>,
}

/// Removable −1 positions, ordered by `(row, col)`.
pub fn removable_positions(a: &Asm) -> Vec<Position> {
    let minus = a.minus_ones();
    minus
        .iter()
        .copied()
        .filter(|&p| !minus.iter().any(|&q| q != p && q.weakly_southwest_of(p)))
        .collect()
}

fn is_removable(a: &Asm, m: Position) -> bool {
    let n = a.size();
    if m.row == 0 || m.col == 0 || m.row > n || m.col > n || a.at(m) != -1 {
        return false;
    }
    !a.minus_ones()
        .into_iter()
        .any(|q| q != m && q.weakly_southwest_of(m))
}

/// The undominated 1s weakly southwest of the removable −1 at `m`,
/// ordered top to bottom.
pub fn neighboring_ones(a: &Asm, m: Position) -> Result<Vec<Position>> {
    if !is_removable(a, m) {
        return Err(Error::NotRemovable(m));
    }
    let region: Vec<Position> = a
        .ones()
        .into_iter()
        .filter(|p| p.weakly_southwest_of(m))
        .collect();
    let mut ones: Vec<Position> = region
        .iter()
        .copied()
        .filter(|&p| {
            !region
                .iter()
                .any(|&q| q != p && q.row <= p.row && q.col >= p.col)
        })
        .collect();
    ones.sort();
    Ok(ones)
}

/// Removes the removable −1 at `m`, returning the new matrix and the trace.
///
/// Fails with [`Error::BrokenRewrite`] if the neighboring 1s do not form a
/// staircase from `m`'s row to `m`'s column or the rewritten matrix is not
/// an ASM; neither is expected to happen.
pub fn remove_minus_one(a: &Asm, m: Position) -> Result<(Asm, RemovalTrace)> {
    let staircase = neighboring_ones(a, m)?;
    let well_formed = staircase.len() >= 2
        && staircase[0].row == m.row
        && staircase[staircase.len() - 1].col == m.col
        && staircase
            .windows(2)
            .all(|w| w[0].row < w[1].row && w[0].col < w[1].col);
    if !well_formed {
        return Err(Error::BrokenRewrite(m));
    }
    let created: Vec<Position> = staircase
        .windows(2)
        .map(|w| Position::new(w[1].row, w[0].col))
        .collect();

    let mut out = a.clone();
    out.set(m, 0);
    for &p in &staircase {
        out.set(p, 0);
    }
    for &p in &created {
        out.set(p, 1);
    }
    if !out.is_valid() {
        return Err(Error::BrokenRewrite(m));
    }
    let simple = staircase.len() == 2;
    Ok((
        out,
        RemovalTrace {
            minus_one: m,
            staircase,
            created,
            simple,
        },
    ))
}

/// The removable −1 the deterministic policy picks: largest row, then
/// smallest column.
pub fn next_removal(a: &Asm) -> Option<Position> {
    removable_positions(a)
        .into_iter()
        .min_by_key(|p| (std::cmp::Reverse(p.row), p.col))
}

/// The southwest key of `a`.
pub fn sw_key(a: &Asm) -> Permutation {
    let mut cur = a.clone();
    while let Some(m) = next_removal(&cur) {
        cur = remove_minus_one(&cur, m)
            .expect("removal of a removable -1 preserves the ASM axioms")
            .0;
    }
    cur.to_permutation()
        .expect("an ASM without -1 entries is a permutation matrix")
}

/// The full chain of matrices visited while computing the key. The first
/// step is `a` itself; the last is the key's permutation matrix.
pub fn key_trace(a: &Asm) -> Vec<TraceStep> {
    let mut chain = vec![TraceStep {
        asm: a.clone(),
        removal: None,
    }];
    loop {
        let cur = &chain[chain.len() - 1].asm;
        let Some(m) = next_removal(cur) else { break };
        let (asm, trace) = remove_minus_one(cur, m)
            .expect("removal of a removable -1 preserves the ASM axioms");
        chain.push(TraceStep {
            asm,
            removal: Some(trace),
        });
    }
    chain
}

/// Number of `n×n` ASMs whose key is `p`, by exhaustive filtering.
pub fn count_asms_with_key(n: usize, p: &Permutation) -> Result<u64> {
    if n > MAX_GENERATION_SIZE {
        return Err(Error::SizeTooLarge {
            n,
            max: MAX_GENERATION_SIZE,
        });
    }
    if p.len() != n {
        return Err(Error::InvalidPermutation {
            n,
            images: p.images().to_vec(),
        });
    }
    Ok(generate_asms(n)?.filter(|a| sw_key(a) == *p).count() as u64)
}
