//! Enumeration of all semigroups of a small order up to isomorphism.
//!
//! Tables are filled row-major by backtracking. Each assignment re-checks
//! only the associativity triples that involve the new cell and are fully
//! defined. A completed table is kept iff it is its own canonical form, so
//! every isomorphism class is emitted exactly once. The search is split by
//! first row across rayon workers; results are sorted, which makes the output
//! independent of scheduling.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::act::is_uniform;
use crate::canon::least_relabelling;
use crate::cayley::Semigroup;
use crate::classify::{classify_regular_uniform, structural_profile, StructuralProfile, StructureTag};
use crate::error::{Error, Result};

pub const DEFAULT_CENSUS_BOUND: usize = 5;
pub const EXTENDED_CENSUS_BOUND: usize = 6;

/// Semigroups of order `n` up to isomorphism, `n = 1..=6`.
pub const PUBLISHED_COUNTS: [usize; 6] = [1, 5, 24, 188, 1915, 15973];

const UNSET: u8 = u8::MAX;

struct Search {
    n: usize,
    table: Vec<u8>,
}

impl Search {
    #[inline]
    fn get(&self, a: usize, b: usize) -> u8 {
        self.table[a * self.n + b]
    }

    /// All fully defined triples through cell `(i, j)` associate.
    fn consistent_at(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        let v = self.get(i, j) as usize;
        // (i j) c
        for c in 0..n {
            let (vc, jc) = (self.get(v, c), self.get(j, c));
            if vc != UNSET && jc != UNSET {
                let r = self.get(i, jc as usize);
                if r != UNSET && r != vc {
                    return false;
                }
            }
        }
        // a (i j): compare (a i) j with a v
        for a in 0..n {
            let ai = self.get(a, i);
            if ai != UNSET {
                let (l, r) = (self.get(ai as usize, j), self.get(a, v));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
        // (a b) j with ab = i: compare v with a (b j)
        for a in 0..n {
            for b in 0..n {
                if self.get(a, b) as usize == i {
                    let bj = self.get(b, j);
                    if bj != UNSET {
                        let r = self.get(a, bj as usize);
                        if r != UNSET && r as usize != v {
                            return false;
                        }
                    }
                }
            }
        }
        // i (b c) with bc = j: compare (i b) c with v
        for b in 0..n {
            for c in 0..n {
                if self.get(b, c) as usize == j {
                    let ib = self.get(i, b);
                    if ib != UNSET {
                        let l = self.get(ib as usize, c);
                        if l != UNSET && l as usize != v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, pos: usize, emit: &mut impl FnMut(&[u8])) {
        if pos == self.n * self.n {
            emit(&self.table);
            return;
        }
        let (i, j) = (pos / self.n, pos % self.n);
        for v in 0..self.n as u8 {
            self.table[pos] = v;
            if self.consistent_at(i, j) {
                self.fill(pos + 1, emit);
            }
        }
        self.table[pos] = UNSET;
    }
}

fn check_bound(n: usize, allow_extended: bool) -> Result<()> {
    let bound = if allow_extended {
        EXTENDED_CENSUS_BOUND
    } else {
        DEFAULT_CENSUS_BOUND
    };
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "census",
            order: n,
            bound,
        });
    }
    if n == 0 {
        return Err(Error::Shape("census order must be positive".into()));
    }
    Ok(())
}

/// Every consistent first row, as search roots.
fn roots(n: usize) -> Vec<Search> {
    let mut out = Vec::new();
    let mut s = Search {
        n,
        table: vec![UNSET; n * n],
    };
    fn go(s: &mut Search, j: usize, out: &mut Vec<Search>) {
        if j == s.n {
            out.push(Search {
                n: s.n,
                table: s.table.clone(),
            });
            return;
        }
        for v in 0..s.n as u8 {
            s.table[j] = v;
            if s.consistent_at(0, j) {
                go(s, j + 1, out);
            }
        }
        s.table[j] = UNSET;
    }
    go(&mut s, 0, &mut out);
    out
}

fn for_each_labelled<T: Send>(n: usize, per_table: impl Fn(&[u8]) -> Option<T> + Sync) -> Vec<T> {
    roots(n)
        .into_par_iter()
        .flat_map_iter(|mut root| {
            let mut found = Vec::new();
            root.fill(n, &mut |t| found.extend(per_table(t)));
            found
        })
        .collect()
}

/// Number of associative tables on `0..n` (no isomorphism reduction).
pub fn count_labelled(n: usize) -> Result<usize> {
    check_bound(n, true)?;
    Ok(for_each_labelled(n, |_| Some(())).len())
}

pub fn enumerate_semigroups(n: usize) -> Result<Vec<Semigroup>> {
    enumerate_semigroups_with(n, false)
}

/// Order 6 needs `allow_extended`; it takes minutes rather than seconds.
pub fn enumerate_semigroups_with(n: usize, allow_extended: bool) -> Result<Vec<Semigroup>> {
    check_bound(n, allow_extended)?;
    let mut canonical = for_each_labelled(n, |t| {
        let table: Vec<usize> = t.iter().map(|&x| x as usize).collect();
        let s = Semigroup::from_flat_unchecked(n, table);
        (least_relabelling(&s) == s.table()).then_some(s)
    });
    canonical.sort();
    debug_assert!(canonical.windows(2).all(|w| w[0] != w[1]));
    Ok(canonical)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub order: usize,
    pub table: Vec<usize>,
    pub profile: StructuralProfile,
    /// `None` for the one-element semigroup.
    pub uniform: Option<bool>,
    pub classification: StructureTag,
}

impl CensusRecord {
    pub fn new(s: &Semigroup) -> Self {
        let uniform = is_uniform(s).ok();
        let classification = classify_regular_uniform(s)
            .map(|c| c.tag)
            .unwrap_or(StructureTag::NotApplicable);
        CensusRecord {
            order: s.order(),
            table: s.table().to_vec(),
            profile: structural_profile(s),
            uniform,
            classification,
        }
    }

    pub fn semigroup(&self) -> Semigroup {
        Semigroup::from_flat_unchecked(self.order, self.table.clone())
    }

    pub fn cache_line(&self) -> String {
        cache_line(&self.semigroup())
    }
}

/// A census filter; `!flag` on the command line negates it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusFlag {
    pub kind: FlagKind,
    pub negated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlagKind {
    Uniform,
    Regular,
    Band,
    Commutative,
    Chain,
    ESemigroup,
    LeftSimple,
    RightSimple,
    Simple,
    Left0Simple,
    Group,
    RightGroup,
    ZeroGroup,
    RightZeroGroup,
    LeftNil,
    LeftCancellative,
    HasIdentity,
    HasLeftIdentity,
    HasZero,
    Inverse,
    LeftInverse,
    RightInverse,
    Clifford,
    Orthodox,
    CompletelyRegular,
}

const FLAG_NAMES: [(&str, FlagKind); 25] = [
    ("uniform", FlagKind::Uniform),
    ("regular", FlagKind::Regular),
    ("band", FlagKind::Band),
    ("commutative", FlagKind::Commutative),
    ("chain", FlagKind::Chain),
    ("e-semigroup", FlagKind::ESemigroup),
    ("left-simple", FlagKind::LeftSimple),
    ("right-simple", FlagKind::RightSimple),
    ("simple", FlagKind::Simple),
    ("left-0-simple", FlagKind::Left0Simple),
    ("group", FlagKind::Group),
    ("right-group", FlagKind::RightGroup),
    ("zero-group", FlagKind::ZeroGroup),
    ("right-zero-group", FlagKind::RightZeroGroup),
    ("left-nil", FlagKind::LeftNil),
    ("left-cancellative", FlagKind::LeftCancellative),
    ("has-identity", FlagKind::HasIdentity),
    ("has-left-identity", FlagKind::HasLeftIdentity),
    ("has-zero", FlagKind::HasZero),
    ("inverse", FlagKind::Inverse),
    ("left-inverse", FlagKind::LeftInverse),
    ("right-inverse", FlagKind::RightInverse),
    ("clifford", FlagKind::Clifford),
    ("orthodox", FlagKind::Orthodox),
    ("completely-regular", FlagKind::CompletelyRegular),
];

impl CensusFlag {
    pub fn names() -> impl Iterator<Item = &'static str> {
        FLAG_NAMES.iter().map(|(n, _)| *n)
    }

    pub fn holds(&self, r: &CensusRecord) -> bool {
        let p = &r.profile;
        let value = match self.kind {
            FlagKind::Uniform => r.uniform == Some(true),
            FlagKind::Regular => p.regular,
            FlagKind::Band => p.band,
            FlagKind::Commutative => p.commutative,
            FlagKind::Chain => p.chain,
            FlagKind::ESemigroup => p.e_semigroup,
            FlagKind::LeftSimple => p.left_simple,
            FlagKind::RightSimple => p.right_simple,
            FlagKind::Simple => p.simple,
            FlagKind::Left0Simple => p.left_0_simple,
            FlagKind::Group => p.group,
            FlagKind::RightGroup => p.right_group,
            FlagKind::ZeroGroup => p.zero_group,
            FlagKind::RightZeroGroup => p.right_zero_group,
            FlagKind::LeftNil => p.left_nil,
            FlagKind::LeftCancellative => p.left_cancellative,
            FlagKind::HasIdentity => p.has_identity,
            FlagKind::HasLeftIdentity => p.has_left_identity,
            FlagKind::HasZero => p.has_zero,
            FlagKind::Inverse => p.inverse,
            FlagKind::LeftInverse => p.left_inverse,
            FlagKind::RightInverse => p.right_inverse,
            FlagKind::Clifford => p.clifford,
            FlagKind::Orthodox => p.orthodox,
            FlagKind::CompletelyRegular => p.completely_regular,
        };
        value != self.negated
    }
}

impl FromStr for CensusFlag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (negated, name) = match s.strip_prefix('!') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let kind = FLAG_NAMES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, k)| *k)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown census flag `{s}`")))?;
        Ok(CensusFlag { kind, negated })
    }
}

pub fn records(semigroups: &[Semigroup]) -> Vec<CensusRecord> {
    semigroups.par_iter().map(CensusRecord::new).collect()
}

pub fn census_filter(n: usize, flags: &[CensusFlag]) -> Result<Vec<CensusRecord>> {
    let all = enumerate_semigroups(n)?;
    Ok(filter_records(&all, flags))
}

pub fn filter_records(semigroups: &[Semigroup], flags: &[CensusFlag]) -> Vec<CensusRecord> {
    records(semigroups)
        .into_iter()
        .filter(|r| flags.iter().all(|f| f.holds(r)))
        .collect()
}

// ---- cache file ---------------------------------------------------------

pub fn cache_line(s: &Semigroup) -> String {
    let mut line = format!("{};", s.order());
    for (k, v) in s.table().iter().enumerate() {
        if k > 0 {
            line.push(',');
        }
        write!(line, "{v}").expect("write to string");
    }
    line
}

pub fn parse_cache_line(line: &str, line_no: usize) -> Result<Semigroup> {
    let err = |column: usize, message: &str| Error::Parse {
        line: line_no,
        column,
        message: message.to_string(),
    };
    let (order, entries) = line.split_once(';').ok_or_else(|| err(1, "missing `;`"))?;
    let n: usize = order.trim().parse().map_err(|_| err(1, "bad order"))?;
    let table = entries
        .split(',')
        .map(|e| e.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| err(order.len() + 2, "bad table entry"))?;
    Semigroup::from_flat(n, table)
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("census-{n}.txt"))
}

pub fn write_cache(dir: &Path, n: usize, semigroups: &[Semigroup]) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut lines: Vec<String> = semigroups.iter().map(cache_line).collect();
    lines.sort();
    let mut body = lines.join("\n");
    body.push('\n');
    std::fs::write(cache_path(dir, n), body)?;
    Ok(())
}

/// Reads a cache file, accepting it only if every record is a canonical
/// semigroup of order `n`, lines are sorted without repeats, and the count
/// matches the published census.
pub fn read_cache(dir: &Path, n: usize) -> Result<Option<Vec<Semigroup>>> {
    let path = cache_path(dir, n);
    let Ok(text) = std::fs::read_to_string(&path) else {
        return Ok(None);
    };
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.windows(2).any(|w| w[0] >= w[1]) {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(lines.len());
    for (k, line) in lines.iter().enumerate() {
        let Ok(s) = parse_cache_line(line, k + 1) else {
            return Ok(None);
        };
        if s.order() != n || least_relabelling(&s) != s.table() {
            return Ok(None);
        }
        out.push(s);
    }
    if PUBLISHED_COUNTS.get(n - 1).is_some_and(|&c| c != out.len()) {
        return Ok(None);
    }
    out.sort();
    Ok(Some(out))
}

/// Cached census: reuses a valid cache file, otherwise enumerates and
/// rewrites it.
pub fn load_or_enumerate(dir: &Path, n: usize, allow_extended: bool) -> Result<Vec<Semigroup>> {
    check_bound(n, allow_extended)?;
    if let Some(found) = read_cache(dir, n)? {
        return Ok(found);
    }
    let all = enumerate_semigroups_with(n, allow_extended)?;
    write_cache(dir, n, &all)?;
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=3).map(|n| enumerate_semigroups(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 5, 24]);
    }

    #[test]
    fn labelled_counts() {
        assert_eq!(count_labelled(2).unwrap(), 8);
        assert_eq!(count_labelled(3).unwrap(), 113);
    }

    #[test]
    fn bounds() {
        assert!(matches!(
            enumerate_semigroups(6),
            Err(Error::BoundExceeded { bound: 5, .. })
        ));
        assert!(matches!(
            enumerate_semigroups_with(7, true),
            Err(Error::BoundExceeded { bound: 6, .. })
        ));
    }

    #[test]
    fn flags_parse() {
        let f: CensusFlag = "!band".parse().unwrap();
        assert_eq!(f.kind, FlagKind::Band);
        assert!(f.negated);
        assert!("nonsense".parse::<CensusFlag>().is_err());
        assert_eq!(CensusFlag::names().count(), FLAG_NAMES.len());
    }

    #[test]
    fn cache_line_format() {
        let s = Semigroup::new(2, vec![vec![0, 0], vec![1, 1]]).unwrap();
        assert_eq!(cache_line(&s), "2;0,0,1,1");
        assert_eq!(parse_cache_line("2;0,0,1,1", 1).unwrap(), s);
        assert!(matches!(
            parse_cache_line("2;0,x", 3),
            Err(Error::Parse { line: 3, .. })
        ));
    }
}
