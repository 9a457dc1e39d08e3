//! Isomorphism testing by brute-force canonical forms.
//!
//! The canonical form is the lexicographically least row-major table over all
//! `n!` relabellings. Each candidate table is generated entry by entry and
//! abandoned as soon as it compares greater than the best so far.

use crate::cayley::Semigroup;
use crate::error::{Error, Result};

pub const DEFAULT_CANON_BOUND: usize = 7;

pub fn canonical_form(s: &Semigroup) -> Result<Vec<usize>> {
    canonical_form_bounded(s, DEFAULT_CANON_BOUND)
}

pub fn canonical_form_bounded(s: &Semigroup, bound: usize) -> Result<Vec<usize>> {
    let n = s.order();
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "canonical form",
            order: n,
            bound,
        });
    }
    Ok(least_relabelling(s))
}

/// Canonical form without the bound check; census tables are always small.
pub(crate) fn least_relabelling(s: &Semigroup) -> Vec<usize> {
    let n = s.order();
    let table = s.table();
    // inv[new] = old, fwd[old] = new
    let mut inv: Vec<usize> = (0..n).collect();
    let mut fwd = vec![0; n];
    let mut best: Vec<usize> = table.to_vec();
    let mut candidate = vec![0; n * n];

    loop {
        for (new, &old) in inv.iter().enumerate() {
            fwd[old] = new;
        }
        let mut less = false;
        let mut abandoned = false;
        'fill: for a in 0..n {
            let row = inv[a] * n;
            for b in 0..n {
                let v = fwd[table[row + inv[b]]];
                let pos = a * n + b;
                candidate[pos] = v;
                if !less {
                    if v > best[pos] {
                        abandoned = true;
                        break 'fill;
                    }
                    if v < best[pos] {
                        less = true;
                    }
                }
            }
        }
        if !abandoned && less {
            best.copy_from_slice(&candidate);
        }
        if !next_permutation(&mut inv) {
            break;
        }
    }
    best
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn canonical_semigroup(s: &Semigroup) -> Result<Semigroup> {
    let form = canonical_form(s)?;
    Ok(Semigroup::from_flat_unchecked(s.order(), form))
}

pub fn are_isomorphic(s: &Semigroup, t: &Semigroup) -> Result<bool> {
    if s.order() != t.order() {
        return Ok(false);
    }
    Ok(canonical_form(s)? == canonical_form(t)?)
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}
