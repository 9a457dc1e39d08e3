//! Semigroup-level predicates and the matcher for the four structures a
//! regular right uniform semigroup can have.

use serde::{Deserialize, Serialize};

use crate::act::is_uniform;
use crate::cayley::Semigroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralProfile {
    pub order: usize,
    pub commutative: bool,
    pub band: bool,
    pub regular: bool,
    pub e_semigroup: bool,
    pub left_simple: bool,
    pub right_simple: bool,
    pub simple: bool,
    pub left_0_simple: bool,
    pub zero_simple: bool,
    pub group: bool,
    pub right_group: bool,
    pub left_zero_sg: bool,
    pub right_zero_sg: bool,
    pub zero_group: bool,
    pub right_zero_group: bool,
    pub left_nil: bool,
    pub left_cancellative: bool,
    pub chain: bool,
    pub has_identity: bool,
    pub has_left_identity: bool,
    pub has_zero: bool,
    pub left_zero_count: usize,
    pub orthodox: bool,
    pub completely_regular: bool,
    pub inverse: bool,
    /// Regular, and `efe = ef` for all idempotents (each principal right
    /// ideal has a unique idempotent generator).
    pub left_inverse: bool,
    /// Regular, and `efe = fe` for all idempotents.
    pub right_inverse: bool,
    pub clifford: bool,
    pub completely_simple: bool,
    pub completely_0_simple: bool,
}

fn mask_of(n: usize, xs: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut m = vec![false; n];
    for x in xs {
        m[x] = true;
    }
    m
}

fn is_full(mask: &[bool]) -> bool {
    mask.iter().all(|&b| b)
}

/// `aS`
fn right_translates(s: &Semigroup, a: usize) -> Vec<bool> {
    mask_of(s.order(), s.elements().map(|x| s.mul(a, x)))
}

/// `Sa`
fn left_translates(s: &Semigroup, a: usize) -> Vec<bool> {
    mask_of(s.order(), s.elements().map(|x| s.mul(x, a)))
}

/// `S¹aS¹`
fn principal_ideal(s: &Semigroup, a: usize) -> Vec<bool> {
    let mut m = left_translates(s, a);
    m[a] = true;
    let left: Vec<usize> = s.elements().filter(|&x| m[x]).collect();
    for x in left {
        for y in s.elements() {
            m[s.mul(x, y)] = true;
        }
    }
    m
}

fn subset_of(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

/// The identity of `subset` if it forms a group under the ambient product.
fn group_identity(s: &Semigroup, subset: &[usize]) -> Option<usize> {
    if subset.is_empty() || !s.is_closed_subset(subset) {
        return None;
    }
    let e = *subset
        .iter()
        .find(|&&e| subset.iter().all(|&x| s.mul(e, x) == x && s.mul(x, e) == x))?;
    let invertible = subset
        .iter()
        .all(|&x| subset.iter().any(|&y| s.mul(x, y) == e && s.mul(y, x) == e));
    invertible.then_some(e)
}

fn is_right_group(s: &Semigroup) -> bool {
    s.elements().all(|a| is_full(&right_translates(s, a))) && s.elements().any(|x| s.is_idempotent(x))
}

fn without(s: &Semigroup, z: usize) -> Vec<usize> {
    s.elements().filter(|&x| x != z).collect()
}

pub fn structural_profile(s: &Semigroup) -> StructuralProfile {
    let n = s.order();
    let els = || s.elements();
    let idempotents = s.idempotents();
    let zero = s.zero();

    let commutative = els().all(|a| els().all(|b| s.mul(a, b) == s.mul(b, a)));
    let band = idempotents.len() == n;
    let regular = els().all(|a| s.is_regular_element(a));
    let e_semigroup = s.is_closed_subset(&idempotents);
    let left_simple = els().all(|a| is_full(&left_translates(s, a)));
    let right_simple = els().all(|a| is_full(&right_translates(s, a)));
    let ideals: Vec<Vec<bool>> = els().map(|a| principal_ideal(s, a)).collect();
    let simple = ideals.iter().all(|m| is_full(m));

    let square_nonzero = |z: usize| s.table().iter().any(|&v| v != z);
    let left_0_simple = zero.is_some_and(|z| {
        square_nonzero(z)
            && els().filter(|&a| a != z).all(|a| {
                let mut m = left_translates(s, a);
                m[a] = true;
                is_full(&m)
            })
    });
    let zero_simple = zero.is_some_and(|z| square_nonzero(z) && els().filter(|&a| a != z).all(|a| is_full(&ideals[a])));

    let all: Vec<usize> = els().collect();
    let group = group_identity(s, &all).is_some();
    let right_group = is_right_group(s);
    let left_zero_sg = els().all(|a| s.is_left_zero(a));
    let right_zero_sg = els().all(|a| s.is_right_zero(a));
    let zero_group = zero.is_some_and(|z| n >= 2 && group_identity(s, &without(s, z)).is_some());
    let right_zero_group = zero.is_some_and(|z| {
        let rest = without(s, z);
        n >= 2 && s.restrict(&rest).is_ok_and(|r| is_right_group(&r))
    });
    let left_nil = els().all(|a| s.left_nilpotent_index(a).is_some());
    let left_cancellative = els().all(|a| s.is_left_cancellable(a));
    let chain = ideals
        .iter()
        .enumerate()
        .all(|(i, a)| ideals[i + 1..].iter().all(|b| subset_of(a, b) || subset_of(b, a)));

    let left_zero_count = s.left_zeros().len();
    let pairs_hold =
        |f: &dyn Fn(usize, usize) -> bool| idempotents.iter().all(|&e| idempotents.iter().all(|&g| f(e, g)));
    let idempotents_commute = pairs_hold(&|e, f| s.mul(e, f) == s.mul(f, e));
    let idempotents_central = idempotents.iter().all(|&e| els().all(|x| s.mul(e, x) == s.mul(x, e)));
    let efe = |e: usize, f: usize| s.mul(s.mul(e, f), e);

    StructuralProfile {
        order: n,
        commutative,
        band,
        regular,
        e_semigroup,
        left_simple,
        right_simple,
        simple,
        left_0_simple,
        zero_simple,
        group,
        right_group,
        left_zero_sg,
        right_zero_sg,
        zero_group,
        right_zero_group,
        left_nil,
        left_cancellative,
        chain,
        has_identity: s.identity().is_some(),
        has_left_identity: els().any(|x| s.is_left_identity(x)),
        has_zero: zero.is_some(),
        left_zero_count,
        orthodox: regular && e_semigroup,
        completely_regular: els().all(|a| s.is_group_element(a)),
        inverse: regular && idempotents_commute,
        left_inverse: regular && pairs_hold(&|e, f| efe(e, f) == s.mul(e, f)),
        right_inverse: regular && pairs_hold(&|e, f| efe(e, f) == s.mul(f, e)),
        clifford: regular && idempotents_central,
        completely_simple: simple,
        completely_0_simple: zero_simple,
    }
}

/// `S = L ∪ C` with `L` the left nilpotent elements (a left ideal) and `C` a
/// subsemigroup of left cancellable elements; both parts nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeftSubelementary {
    pub left_nil_ideal: Vec<usize>,
    pub cancellable: Vec<usize>,
}

pub fn is_left_subelementary(s: &Semigroup) -> Option<LeftSubelementary> {
    let (nil, rest): (Vec<usize>, Vec<usize>) = s.elements().partition(|&x| s.left_nilpotent_index(x).is_some());
    if nil.is_empty() || rest.is_empty() {
        return None;
    }
    if !rest.iter().all(|&c| s.is_left_cancellable(c)) || !s.is_closed_subset(&rest) {
        return None;
    }
    let in_nil = mask_of(s.order(), nil.iter().copied());
    let left_ideal = nil.iter().all(|&l| s.elements().all(|x| in_nil[s.mul(x, l)]));
    left_ideal.then_some(LeftSubelementary {
        left_nil_ideal: nil,
        cancellable: rest,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StructureTag {
    Group,
    ZeroGroup,
    GroupWithTwoLeftZeros,
    TwoElementLeftZero,
    RightGroup,
    RightZeroGroup,
    NotApplicable,
}

impl std::fmt::Display for StructureTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularUniformClass {
    pub tag: StructureTag,
    /// Elements of the group (or right group) part.
    pub group_part: Vec<usize>,
    /// `θ1, θ2` for [`StructureTag::GroupWithTwoLeftZeros`].
    pub left_zeros: Vec<usize>,
    /// Group elements `g` with `gθ1 = θ2`; they also satisfy `gθ2 = θ1`.
    pub swapping: Vec<usize>,
    /// Whether exactly the non-identity group elements swap the left zeros.
    pub literal_swap_rule: Option<bool>,
}

impl RegularUniformClass {
    fn plain(tag: StructureTag, group_part: Vec<usize>) -> Self {
        RegularUniformClass {
            tag,
            group_part,
            left_zeros: Vec::new(),
            swapping: Vec::new(),
            literal_swap_rule: None,
        }
    }

    pub fn not_applicable() -> Self {
        Self::plain(StructureTag::NotApplicable, Vec::new())
    }
}

/// Matches `S` against the structures in a fixed order without checking
/// regularity or uniformity. The first match wins.
pub fn match_structure(s: &Semigroup) -> Option<RegularUniformClass> {
    use StructureTag::*;
    let n = s.order();
    let all: Vec<usize> = s.elements().collect();
    if n == 2 && all.iter().all(|&a| s.is_left_zero(a)) {
        return Some(RegularUniformClass::plain(TwoElementLeftZero, Vec::new()));
    }
    if group_identity(s, &all).is_some() {
        return Some(RegularUniformClass::plain(Group, all));
    }
    let zero = s.zero();
    if let Some(z) = zero {
        let rest = without(s, z);
        if n >= 2 && group_identity(s, &rest).is_some() {
            return Some(RegularUniformClass::plain(ZeroGroup, rest));
        }
    }
    if let Some(class) = match_group_with_two_left_zeros(s) {
        return Some(class);
    }
    if is_right_group(s) {
        return Some(RegularUniformClass::plain(RightGroup, all));
    }
    if let Some(z) = zero {
        let rest = without(s, z);
        if n >= 2 && s.restrict(&rest).is_ok_and(|r| is_right_group(&r)) {
            return Some(RegularUniformClass::plain(RightZeroGroup, rest));
        }
    }
    None
}

fn match_group_with_two_left_zeros(s: &Semigroup) -> Option<RegularUniformClass> {
    let zeros = s.left_zeros();
    if zeros.len() != 2 {
        return None;
    }
    let (t1, t2) = (zeros[0], zeros[1]);
    let group: Vec<usize> = s.elements().filter(|&x| x != t1 && x != t2).collect();
    let e = group_identity(s, &group)?;
    if !s.is_left_identity(e) {
        return None;
    }
    let swapping: Vec<usize> = group.iter().copied().filter(|&g| s.mul(g, t1) == t2).collect();
    let literal = swapping.iter().copied().eq(group.iter().copied().filter(|&g| g != e));
    Some(RegularUniformClass {
        tag: StructureTag::GroupWithTwoLeftZeros,
        group_part: group,
        left_zeros: vec![t1, t2],
        swapping,
        literal_swap_rule: Some(literal),
    })
}

/// Places a regular right uniform semigroup in one of the four structures.
/// Inputs that are not regular or not uniform get `NotApplicable`; a regular
/// uniform input matching nothing is a [`Error::ClassificationGap`].
pub fn classify_regular_uniform(s: &Semigroup) -> Result<RegularUniformClass> {
    let uniform = is_uniform(s)?;
    let regular = s.elements().all(|a| s.is_regular_element(a));
    if !(uniform && regular) {
        return Ok(RegularUniformClass::not_applicable());
    }
    match_structure(s).ok_or_else(|| Error::ClassificationGap(format!("{:?}", s.rows())))
}

/// For commutative chain semigroups: `xy = y` forces `x` to be the identity
/// or `y` to be the zero.
pub fn chain_uniform_criterion(s: &Semigroup) -> Result<bool> {
    let p = structural_profile(s);
    if !(p.commutative && p.chain) {
        return Err(Error::CriterionInapplicable(
            "semigroup must be commutative with a chain of ideals".into(),
        ));
    }
    Ok(s.elements().all(|x| {
        s.elements()
            .all(|y| s.mul(x, y) != y || s.is_identity(x) || s.is_zero(y))
    }))
}

/// Shape of the set of idempotents as a semigroup in its own right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IdempotentShape {
    /// `L`, a two-element left zero semigroup.
    LeftZeroPair,
    /// `L¹`
    LeftZeroPairWithIdentity,
    /// `R`, a right zero semigroup (possibly a single idempotent).
    RightZero,
    /// `R⁰`
    RightZeroWithZero,
    NotClosed,
    Other,
}

impl IdempotentShape {
    pub fn is_admissible(self) -> bool {
        !matches!(self, IdempotentShape::NotClosed | IdempotentShape::Other)
    }
}

pub fn idempotent_shape(s: &Semigroup) -> IdempotentShape {
    let e = s.idempotents();
    let Ok(t) = s.restrict(&e) else {
        return IdempotentShape::NotClosed;
    };
    let m = t.order();
    let right_zero_on = |xs: &[usize]| xs.iter().all(|&a| xs.iter().all(|&b| t.mul(a, b) == b));
    let all: Vec<usize> = t.elements().collect();
    if right_zero_on(&all) {
        return IdempotentShape::RightZero;
    }
    if m == 2 && t.left_zeros().len() == 2 {
        return IdempotentShape::LeftZeroPair;
    }
    if m == 3 {
        if let Some(u) = t.identity() {
            let rest: Vec<usize> = all.iter().copied().filter(|&x| x != u).collect();
            if rest.iter().all(|&a| rest.iter().all(|&b| t.mul(a, b) == a)) {
                return IdempotentShape::LeftZeroPairWithIdentity;
            }
        }
    }
    if let Some(z) = t.zero() {
        let rest: Vec<usize> = all.iter().copied().filter(|&x| x != z).collect();
        if right_zero_on(&rest) {
            return IdempotentShape::RightZeroWithZero;
        }
    }
    IdempotentShape::Other
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(rows: Vec<Vec<usize>>) -> Semigroup {
        Semigroup::new(rows.len(), rows).unwrap()
    }

    fn left_zero(n: usize) -> Semigroup {
        sg((0..n).map(|i| vec![i; n]).collect())
    }

    fn right_zero(n: usize) -> Semigroup {
        sg((0..n).map(|_| (0..n).collect()).collect())
    }

    fn z(n: usize) -> Semigroup {
        sg((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect())
    }

    fn null2() -> Semigroup {
        sg(vec![vec![0, 0], vec![0, 0]])
    }

    fn two_left_zeros(swap: bool) -> Semigroup {
        let (a, b) = if swap { (3, 2) } else { (2, 3) };
        sg(vec![
            vec![0, 1, 2, 3],
            vec![1, 0, a, b],
            vec![2, 2, 2, 2],
            vec![3, 3, 3, 3],
        ])
    }

    #[test]
    fn right_zero_profile() {
        let p = structural_profile(&right_zero(3));
        assert!(p.right_simple && p.right_group && p.band);
        assert!(!p.group && !p.left_simple);
    }

    #[test]
    fn zero_group_profile() {
        let p = structural_profile(&z(2).adjoin_zero());
        assert!(p.zero_group && p.left_0_simple && p.has_zero);
        assert!(p.right_zero_group && p.inverse && p.clifford);
    }

    #[test]
    fn left_zero_profile() {
        let p = structural_profile(&left_zero(2));
        assert!(p.left_simple && p.band && p.regular);
        assert!(!p.right_simple && !p.right_group);
        assert!(p.left_inverse && !p.right_inverse);
    }

    #[test]
    fn null_profile() {
        let p = structural_profile(&null2());
        assert!(p.commutative && p.chain && p.left_nil);
        assert!(!p.regular && !p.left_0_simple && !p.zero_simple);
    }

    #[test]
    fn profile_implications_on_small_cases() {
        for s in [z(3), right_zero(2), left_zero(3), z(2).adjoin_zero(), null2()] {
            let p = structural_profile(&s);
            assert!(!p.group || p.right_group);
            assert!(!p.right_group || p.right_simple);
            assert!(!p.left_zero_sg || p.band);
            assert!(!p.zero_group || p.has_zero);
        }
    }

    #[test]
    fn left_subelementary() {
        let s = left_zero(2).adjoin_identity();
        let d = is_left_subelementary(&s).unwrap();
        assert_eq!(d.left_nil_ideal, vec![0, 1]);
        assert_eq!(d.cancellable, vec![2]);
        assert!(is_left_subelementary(&z(3)).is_none());
        assert!(is_left_subelementary(&left_zero(2)).is_none());
    }

    #[test]
    fn theorem_tags() {
        use StructureTag::*;
        let tag = |s: &Semigroup| classify_regular_uniform(s).unwrap().tag;
        assert_eq!(tag(&right_zero(3)), RightGroup);
        assert_eq!(tag(&z(2).adjoin_zero()), ZeroGroup);
        assert_eq!(tag(&left_zero(2)), TwoElementLeftZero);
        assert_eq!(tag(&z(3)), Group);
        assert_eq!(tag(&right_zero(2).adjoin_zero()), RightZeroGroup);
        let c = classify_regular_uniform(&two_left_zeros(true)).unwrap();
        assert_eq!(c.tag, GroupWithTwoLeftZeros);
        assert_eq!(c.left_zeros, vec![2, 3]);
        assert_eq!(c.swapping, vec![1]);
        assert_eq!(c.literal_swap_rule, Some(true));
        // the trivial action is regular but not uniform
        assert_eq!(tag(&two_left_zeros(false)), NotApplicable);
        assert_eq!(tag(&null2()), NotApplicable);
        assert_eq!(tag(&left_zero(3)), NotApplicable);
    }

    #[test]
    fn chain_criterion() {
        assert!(chain_uniform_criterion(&null2()).unwrap());
        // monogenic nil {a, a², 0}: 0 = zero, 1 = a, 2 = a²
        let nil3 = sg(vec![vec![0, 0, 0], vec![0, 2, 0], vec![0, 0, 0]]);
        assert!(chain_uniform_criterion(&nil3).unwrap());
        assert!(is_uniform(&nil3).unwrap());
        assert!(chain_uniform_criterion(&z(2)).unwrap());
        assert!(matches!(
            chain_uniform_criterion(&right_zero(2)),
            Err(Error::CriterionInapplicable(_))
        ));
    }

    #[test]
    fn idempotent_shapes() {
        use IdempotentShape::*;
        assert_eq!(idempotent_shape(&left_zero(2)), LeftZeroPair);
        assert_eq!(
            idempotent_shape(&left_zero(2).adjoin_identity()),
            LeftZeroPairWithIdentity
        );
        assert_eq!(idempotent_shape(&right_zero(3)), RightZero);
        assert_eq!(idempotent_shape(&z(3)), RightZero);
        assert_eq!(idempotent_shape(&right_zero(2).adjoin_zero()), RightZeroWithZero);
        assert_eq!(idempotent_shape(&left_zero(3)), Other);
        // {e, f} left zero with a zero adjoined: still closed but not admissible
        assert_eq!(idempotent_shape(&left_zero(2).adjoin_zero()), Other);
    }
}
