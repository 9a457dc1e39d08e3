//! Right acts, right congruences and the uniformity decision.
//!
//! A subact `B` of `A` is large when every nondiagonal congruence on `A`
//! identifies two distinct elements of `B`. It is enough to look at the
//! principal congruences `ρ(a, b)`: any nondiagonal congruence contains one,
//! and congruences containing `ρ(a, b)` only merge more. The brute-force
//! [`is_large_oracle`] quantifies over all congruences instead so the two
//! forms can be checked against each other.

use serde::{Deserialize, Serialize};

use crate::cayley::Semigroup;
use crate::error::{Error, Result};

pub const DEFAULT_CONGRUENCE_BOUND: usize = 8;
pub const DEFAULT_SUBACT_BOUND: usize = 16;

/// A finite right act `A × S → A` with `a(st) = (as)t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightAct {
    base: Semigroup,
    carrier: usize,
    action: Vec<usize>,
}

impl RightAct {
    pub fn new(base: Semigroup, carrier: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = base.order();
        if carrier == 0 || rows.len() != carrier || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!(
                "action table must be {carrier}x{n} with a nonempty carrier"
            )));
        }
        let action: Vec<usize> = rows.into_iter().flatten().collect();
        if let Some(pos) = action.iter().position(|&v| v >= carrier) {
            return Err(Error::Range {
                row: pos / n,
                col: pos % n,
                value: action[pos],
                order: carrier,
            });
        }
        let act = RightAct { base, carrier, action };
        for a in 0..carrier {
            for s in 0..n {
                for t in 0..n {
                    if act.act(a, act.base.mul(s, t)) != act.act(act.act(a, s), t) {
                        return Err(Error::ActCompatibility { a, s, t });
                    }
                }
            }
        }
        Ok(act)
    }

    pub fn base(&self) -> &Semigroup {
        &self.base
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier
    }

    #[inline]
    pub fn act(&self, a: usize, s: usize) -> usize {
        self.action[a * self.base.order() + s]
    }

    /// `a` is fixed by every `s`.
    pub fn is_zero_element(&self, a: usize) -> bool {
        (0..self.base.order()).all(|s| self.act(a, s) == a)
    }
}

/// `S_S`: the semigroup acting on itself by right multiplication.
pub fn s_as_act(s: &Semigroup) -> RightAct {
    RightAct {
        base: s.clone(),
        carrier: s.order(),
        action: s.table().to_vec(),
    }
}

/// An equivalence on the carrier, stored as the least element of each block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RightCongruence {
    class_id: Vec<usize>,
}

impl RightCongruence {
    pub fn diagonal(n: usize) -> Self {
        RightCongruence {
            class_id: (0..n).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        RightCongruence { class_id: vec![0; n] }
    }

    /// From any block labelling; labels are renormalised to least members.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut least = std::collections::HashMap::new();
        let class_id = labels
            .iter()
            .enumerate()
            .map(|(i, l)| *least.entry(*l).or_insert(i))
            .collect();
        RightCongruence { class_id }
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_id
    }

    pub fn len(&self) -> usize {
        self.class_id.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_id.is_empty()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_id[a] == self.class_id[b]
    }

    pub fn is_diagonal(&self) -> bool {
        self.class_id.iter().enumerate().all(|(i, &c)| i == c)
    }

    pub fn is_universal(&self) -> bool {
        self.class_id.iter().all(|&c| c == 0)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &c) in self.class_id.iter().enumerate() {
            if c == i {
                blocks.push(vec![i]);
            } else {
                let k = blocks.iter().position(|b| b[0] == c).expect("rep precedes members");
                blocks[k].push(i);
            }
        }
        blocks
    }

    pub fn is_right_compatible(&self, act: &RightAct) -> bool {
        let n = act.base().order();
        (0..self.len()).all(|a| {
            let rep = self.class_id[a];
            rep == a || (0..n).all(|s| self.related(act.act(a, s), act.act(rep, s)))
        })
    }

    /// `self ⊆ other` as relations.
    pub fn is_contained_in(&self, other: &RightCongruence) -> bool {
        (0..self.len()).all(|a| other.related(a, self.class_id[a]))
    }

    /// Two distinct members of `subset` in the same block, if any; i.e. a
    /// witness that `ρ ∩ ρ_B ≠ Δ`.
    pub fn merged_pair_in(&self, subset: &[usize]) -> Option<(usize, usize)> {
        for (k, &a) in subset.iter().enumerate() {
            if let Some(&b) = subset[k + 1..].iter().find(|&&b| self.related(a, b)) {
                return Some((a, b));
            }
        }
        None
    }
}

impl std::fmt::Display for RightCongruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let blocks = self.blocks();
        let parts: Vec<String> = blocks
            .iter()
            .map(|b| {
                let xs: Vec<String> = b.iter().map(usize::to_string).collect();
                format!("{{{}}}", xs.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Links the larger root under the smaller so roots are block minima.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        self.parent[hi] = lo;
        true
    }
}

/// The least congruence on `act` containing `pairs`.
pub fn generated_congruence(act: &RightAct, pairs: &[(usize, usize)]) -> RightCongruence {
    let n = act.base().order();
    let mut uf = UnionFind::new(act.carrier_size());
    let mut work: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((x, y)) = work.pop() {
        if uf.union(x, y) {
            for s in 0..n {
                work.push((act.act(x, s), act.act(y, s)));
            }
        }
    }
    let class_id = (0..act.carrier_size()).map(|x| uf.find(x)).collect();
    let rho = RightCongruence { class_id };
    debug_assert!(rho.is_right_compatible(act));
    debug_assert!(pairs.iter().all(|&(a, b)| rho.related(a, b)));
    rho
}

pub fn principal_congruence(act: &RightAct, a: usize, b: usize) -> RightCongruence {
    generated_congruence(act, &[(a, b)])
}

/// `ρ(a, b)` for every pair `a < b`.
pub fn principal_congruences(act: &RightAct) -> Vec<((usize, usize), RightCongruence)> {
    let m = act.carrier_size();
    let mut out = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for a in 0..m {
        for b in a + 1..m {
            out.push(((a, b), principal_congruence(act, a, b)));
        }
    }
    out
}

/// A nonempty action-closed subset of the carrier, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subact {
    elements: Vec<usize>,
}

impl Subact {
    pub fn new(act: &RightAct, elements: &[usize]) -> Result<Self> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if elements.is_empty() || elements.iter().any(|&x| x >= act.carrier_size()) {
            return Err(Error::Subact(elements));
        }
        let n = act.base().order();
        let closed = elements
            .iter()
            .all(|&a| (0..n).all(|s| elements.binary_search(&act.act(a, s)).is_ok()));
        if !closed {
            return Err(Error::Subact(elements));
        }
        Ok(Subact { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `ρ_B = (B × B) ∪ Δ`.
pub fn rees_congruence(act: &RightAct, subact: &Subact) -> RightCongruence {
    let first = subact.elements[0];
    let class_id = (0..act.carrier_size())
        .map(|x| {
            if subact.elements.binary_search(&x).is_ok() {
                first
            } else {
                x
            }
        })
        .collect();
    RightCongruence { class_id }
}

pub fn zero_elements(act: &RightAct) -> Vec<usize> {
    (0..act.carrier_size()).filter(|&a| act.is_zero_element(a)).collect()
}

/// `{x} ∪ xS`.
pub fn generated_subact(act: &RightAct, x: usize) -> Subact {
    let n = act.base().order();
    let mut member = vec![false; act.carrier_size()];
    member[x] = true;
    for s in 0..n {
        member[act.act(x, s)] = true;
    }
    let elements = (0..act.carrier_size()).filter(|&a| member[a]).collect();
    Subact { elements }
}

pub fn all_subacts(act: &RightAct) -> Result<Vec<Subact>> {
    all_subacts_bounded(act, DEFAULT_SUBACT_BOUND)
}

/// Every subact, in increasing order of the subset bitmask.
pub fn all_subacts_bounded(act: &RightAct, bound: usize) -> Result<Vec<Subact>> {
    let m = act.carrier_size();
    if m > bound {
        return Err(Error::BoundExceeded {
            what: "subact enumeration",
            order: m,
            bound,
        });
    }
    let n = act.base().order();
    // image mask of each generated subact; a subset is closed iff it contains
    // the generated subact of each member
    let gen: Vec<u64> = (0..m)
        .map(|x| (0..n).fold(1u64 << x, |acc, s| acc | (1u64 << act.act(x, s))))
        .collect();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << m) {
        let closed = (0..m).all(|x| mask & (1 << x) == 0 || gen[x] & !mask == 0);
        if closed {
            let elements = (0..m).filter(|&x| mask & (1 << x) != 0).collect();
            out.push(Subact { elements });
        }
    }
    Ok(out)
}

pub fn all_right_congruences(act: &RightAct) -> Result<Vec<RightCongruence>> {
    all_right_congruences_bounded(act, DEFAULT_CONGRUENCE_BOUND)
}

/// Every right-compatible set partition, in restricted-growth-string order.
pub fn all_right_congruences_bounded(act: &RightAct, bound: usize) -> Result<Vec<RightCongruence>> {
    let m = act.carrier_size();
    if m > bound {
        return Err(Error::BoundExceeded {
            what: "congruence enumeration",
            order: m,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; m];
    loop {
        let rho = RightCongruence::from_labels(&rgs);
        if rho.is_right_compatible(act) {
            out.push(rho);
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    Ok(out)
}

fn next_rgs(rgs: &mut [usize]) -> bool {
    let m = rgs.len();
    for i in (1..m).rev() {
        let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
        if rgs[i] <= max_prefix {
            rgs[i] += 1;
            for r in &mut rgs[i + 1..] {
                *r = 0;
            }
            return true;
        }
    }
    false
}

/// Every nondiagonal principal congruence merges two elements of `subact`.
pub fn is_large(act: &RightAct, subact: &Subact) -> bool {
    is_large_given(&principal_congruences(act), subact)
}

/// [`is_large`] against precomputed principal congruences.
pub fn is_large_given(principals: &[((usize, usize), RightCongruence)], subact: &Subact) -> bool {
    large_failure(principals, subact).is_none()
}

fn large_failure<'a>(
    principals: &'a [((usize, usize), RightCongruence)],
    subact: &Subact,
) -> Option<&'a ((usize, usize), RightCongruence)> {
    principals
        .iter()
        .find(|(_, rho)| rho.merged_pair_in(subact.elements()).is_none())
}

/// Definition-level largeness: every congruence whose restriction to the
/// subact is diagonal is itself diagonal.
pub fn is_large_oracle(congruences: &[RightCongruence], subact: &Subact) -> bool {
    congruences
        .iter()
        .all(|rho| rho.is_diagonal() || rho.merged_pair_in(subact.elements()).is_some())
}

/// A subact with at least two elements that fails to be large, together
/// with the principal congruence meeting its Rees congruence in `Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonUniformWitness {
    pub subact: Vec<usize>,
    pub pair: (usize, usize),
    pub congruence: RightCongruence,
}

/// Subacts that must be large for the act to be uniform. Any subact with at
/// least two elements contains one of these, and largeness passes upward.
fn uniformity_candidates(act: &RightAct) -> Vec<Subact> {
    let zeros = zero_elements(act);
    let mut out: Vec<Subact> = (0..act.carrier_size())
        .filter(|&x| !act.is_zero_element(x))
        .map(|x| generated_subact(act, x))
        .collect();
    for (k, &a) in zeros.iter().enumerate() {
        for &b in &zeros[k + 1..] {
            out.push(Subact { elements: vec![a, b] });
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Uniformity of an arbitrary act: every subact with two or more elements is
/// large. Singleton subacts are zero subacts and are exempt.
pub fn act_uniformity_witness(act: &RightAct) -> Option<NonUniformWitness> {
    let principals = principal_congruences(act);
    uniformity_candidates(act).into_iter().find_map(|b| {
        large_failure(&principals, &b).map(|(pair, rho)| NonUniformWitness {
            subact: b.elements.clone(),
            pair: *pair,
            congruence: rho.clone(),
        })
    })
}

pub fn is_act_uniform(act: &RightAct) -> bool {
    act_uniformity_witness(act).is_none()
}

/// Right uniformity of `S`, i.e. uniformity of `S_S`.
pub fn is_uniform(s: &Semigroup) -> Result<bool> {
    Ok(uniformity_witness(s)?.is_none())
}

pub fn uniformity_witness(s: &Semigroup) -> Result<Option<NonUniformWitness>> {
    if s.order() < 2 {
        return Err(Error::DegenerateOrder);
    }
    Ok(act_uniformity_witness(&s_as_act(s)))
}

/// Brute force over every subact and every right congruence.
pub fn is_uniform_oracle(s: &Semigroup) -> Result<bool> {
    if s.order() < 2 {
        return Err(Error::DegenerateOrder);
    }
    let act = s_as_act(s);
    let congruences = all_right_congruences(&act)?;
    let subacts = all_subacts(&act)?;
    Ok(subacts
        .iter()
        .filter(|b| b.len() >= 2)
        .all(|b| is_large_oracle(&congruences, b)))
}
