//! Finite model checking of the structure results for right uniform
//! semigroups.
//!
//! Each check names a hypothesis and a conclusion, scans every census
//! semigroup of order `2..=max_order` satisfying the hypothesis, and records
//! each violation as a counterexample with a witness. Results that are
//! stated as equivalences are checked in both directions. Checks about named
//! families (C13's converse, C14) also sweep constructed instances.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::act::{is_uniform, uniformity_witness};
use crate::cayley::Semigroup;
use crate::census::{enumerate_semigroups_with, DEFAULT_CENSUS_BOUND, EXTENDED_CENSUS_BOUND};
use crate::classify::{
    chain_uniform_criterion, classify_regular_uniform, idempotent_shape, is_left_subelementary, match_structure,
    structural_profile, StructuralProfile, StructureTag,
};
use crate::error::{Error, Result};
use crate::families::{builtin_groups, construct, left_zero, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
    C15,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::C6,
        CheckId::C7,
        CheckId::C8,
        CheckId::C9,
        CheckId::C10,
        CheckId::C11,
        CheckId::C12,
        CheckId::C13,
        CheckId::C14,
        CheckId::C15,
    ];

    pub fn title(self) -> &'static str {
        match self {
            CheckId::C1 => "a uniform semigroup has at most two left zeros",
            CheckId::C2 => "in a uniform semigroup xy = y forces x to be a left identity or y a left zero",
            CheckId::C3 => "a commutative chain semigroup is uniform iff xy = y forces x = 1 or y = 0",
            CheckId::C4 => "uniformity of S^1 or S^0 passes down to S",
            CheckId::C5 => "without an identity, S^1 is uniform iff S is uniform with no left identity",
            CheckId::C6 => "without a zero, S^0 is uniform iff S is uniform with no left zero",
            CheckId::C7 => "idempotents of a uniform semigroup form L, L^1, R or R^0 (so an E-semigroup)",
            CheckId::C8 => "a left simple semigroup is uniform iff it is a two-element left zero semigroup or a group",
            CheckId::C9 => "a left 0-simple semigroup is uniform iff it is a 0-group",
            CheckId::C10 => "a finite uniform semigroup is a right group, left nil or left subelementary",
            CheckId::C11 => "a regular semigroup with no left identity is uniform iff it is two left zeros",
            CheckId::C12 => "a regular semigroup with a left identity but no identity is uniform iff it is a right group or right 0-group",
            CheckId::C13 => "a regular semigroup is uniform iff it is G, G^0, G with two left zeros, two left zeros, or a right (0-)group",
            CheckId::C14 => "a completely simple semigroup is uniform iff |I| = 1 or it is two left zeros; a completely 0-simple one iff |I| = 1",
            CheckId::C15 => "class-by-class summary table of uniform semigroups",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix(['C', 'c']).unwrap_or(s);
        digits
            .parse::<usize>()
            .ok()
            .and_then(|k| k.checked_sub(1))
            .and_then(|k| CheckId::ALL.get(k).copied())
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub order: usize,
    pub table: Vec<usize>,
    pub detail: String,
}

/// A disagreement between a literal construction and what can actually be
/// built or verified. Reported separately from pass/fail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub subject: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: CheckId,
    pub title: String,
    pub max_order: usize,
    pub instances_scanned: usize,
    pub hypotheses_met: usize,
    pub counterexamples: Vec<Counterexample>,
    pub discrepancies: Vec<Discrepancy>,
    /// How often each case of the conclusion occurred.
    pub tallies: BTreeMap<String, usize>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Flip every conclusion; a sound harness must then report witnesses.
    pub invert: bool,
    pub allow_extended: bool,
}

/// A census semigroup with the facts most checks need.
#[derive(Debug, Clone)]
pub struct Instance {
    pub semigroup: Semigroup,
    pub profile: StructuralProfile,
    pub uniform: bool,
}

impl Instance {
    pub fn new(s: Semigroup) -> Result<Self> {
        let uniform = is_uniform(&s)?;
        Ok(Instance {
            profile: structural_profile(&s),
            semigroup: s,
            uniform,
        })
    }
}

/// All census semigroups of order `2..=max_order`.
pub struct Universe {
    pub max_order: usize,
    pub instances: Vec<Instance>,
}

impl Universe {
    pub fn build(max_order: usize, allow_extended: bool) -> Result<Self> {
        if max_order < 2 {
            return Err(Error::DegenerateOrder);
        }
        let bound = if allow_extended {
            EXTENDED_CENSUS_BOUND
        } else {
            DEFAULT_CENSUS_BOUND
        };
        if max_order > bound {
            return Err(Error::BoundExceeded {
                what: "verification census",
                order: max_order,
                bound,
            });
        }
        let mut instances = Vec::new();
        for n in 2..=max_order {
            let all = enumerate_semigroups_with(n, allow_extended)?;
            let batch: Result<Vec<Instance>> = all.into_par_iter().map(Instance::new).collect();
            instances.extend(batch?);
        }
        Ok(Universe { max_order, instances })
    }
}

/// Result of one check on one instance.
enum Outcome {
    Skip,
    Holds(Option<String>),
    Violated(String),
}

fn holds(label: impl Into<String>) -> Outcome {
    Outcome::Holds(Some(label.into()))
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds(None)
    } else {
        Outcome::Violated(detail())
    }
}

fn iff(lhs_name: &str, lhs: bool, rhs_name: &str, rhs: bool) -> Outcome {
    verdict(lhs == rhs, || format!("{lhs_name} = {lhs} but {rhs_name} = {rhs}"))
}

fn uniform_of(s: &Semigroup) -> bool {
    // only called on semigroups of order >= 2
    is_uniform(s).expect("order >= 2")
}

fn is_two_left_zeros(p: &StructuralProfile) -> bool {
    p.order == 2 && p.left_zero_sg
}

/// The structures as literally stated: case ii only with the swap rule.
fn literal_structure(s: &Semigroup) -> Option<StructureTag> {
    let m = match_structure(s)?;
    match (m.tag, m.literal_swap_rule) {
        (StructureTag::GroupWithTwoLeftZeros, Some(false)) => None,
        (tag, _) => Some(tag),
    }
}

fn check_instance(check: CheckId, inst: &Instance) -> Outcome {
    let s = &inst.semigroup;
    let p = &inst.profile;
    let u = inst.uniform;
    match check {
        CheckId::C1 => {
            if !u {
                return Outcome::Skip;
            }
            verdict(p.left_zero_count <= 2, || {
                format!("{} left zeros: {:?}", p.left_zero_count, s.left_zeros())
            })
        }
        CheckId::C2 => {
            if !u {
                return Outcome::Skip;
            }
            for x in s.elements() {
                for y in s.elements() {
                    if s.mul(x, y) == y && !s.is_left_identity(x) && !s.is_left_zero(y) {
                        return Outcome::Violated(format!(
                            "x={x}, y={y}: xy = y, x is not a left identity, y is not a left zero"
                        ));
                    }
                }
            }
            Outcome::Holds(None)
        }
        CheckId::C3 => {
            if !(p.commutative && p.chain) {
                return Outcome::Skip;
            }
            let criterion = chain_uniform_criterion(s).expect("commutative chain");
            iff("criterion", criterion, "uniform", u)
        }
        CheckId::C4 => {
            let mut applicable = false;
            if !p.has_identity {
                applicable = true;
                if uniform_of(&s.adjoin_identity()) && !u {
                    return Outcome::Violated("S^1 is uniform but S is not".into());
                }
            }
            if !p.has_zero {
                applicable = true;
                if uniform_of(&s.adjoin_zero()) && !u {
                    return Outcome::Violated("S^0 is uniform but S is not".into());
                }
            }
            if applicable {
                Outcome::Holds(None)
            } else {
                Outcome::Skip
            }
        }
        CheckId::C5 => {
            if p.has_identity {
                return Outcome::Skip;
            }
            let rhs = u && !p.has_left_identity;
            iff(
                "uniform(S^1)",
                uniform_of(&s.adjoin_identity()),
                "uniform(S) and no left identity",
                rhs,
            )
        }
        CheckId::C6 => {
            if p.has_zero {
                return Outcome::Skip;
            }
            let rhs = u && p.left_zero_count == 0;
            iff(
                "uniform(S^0)",
                uniform_of(&s.adjoin_zero()),
                "uniform(S) and no left zero",
                rhs,
            )
        }
        CheckId::C7 => {
            if !u {
                return Outcome::Skip;
            }
            let shape = idempotent_shape(s);
            if shape.is_admissible() && p.e_semigroup {
                holds(format!("{shape:?}"))
            } else {
                Outcome::Violated(format!("idempotents {:?} have shape {shape:?}", s.idempotents()))
            }
        }
        CheckId::C8 => {
            if !p.left_simple {
                return Outcome::Skip;
            }
            iff("uniform", u, "two left zeros or group", is_two_left_zeros(p) || p.group)
        }
        CheckId::C9 => {
            if !p.left_0_simple {
                return Outcome::Skip;
            }
            iff("uniform", u, "0-group", p.zero_group)
        }
        CheckId::C10 => {
            if !u {
                return Outcome::Skip;
            }
            if p.right_group {
                holds("right group")
            } else if p.left_nil {
                holds("left nil")
            } else if is_left_subelementary(s).is_some() {
                holds("left subelementary")
            } else {
                Outcome::Violated("neither right group, left nil nor left subelementary".into())
            }
        }
        CheckId::C11 => {
            if !(p.regular && !p.has_left_identity) {
                return Outcome::Skip;
            }
            iff("uniform", u, "two left zeros", is_two_left_zeros(p))
        }
        CheckId::C12 => {
            if !(p.regular && p.has_left_identity && !p.has_identity) {
                return Outcome::Skip;
            }
            iff(
                "uniform",
                u,
                "right group or right 0-group",
                p.right_group || p.right_zero_group,
            )
        }
        CheckId::C13 => {
            if !p.regular {
                return Outcome::Skip;
            }
            if u {
                match classify_regular_uniform(s) {
                    Ok(c) if c.tag != StructureTag::NotApplicable => holds(c.tag.to_string()),
                    Ok(_) => Outcome::Violated("classifier returned NotApplicable".into()),
                    Err(e) => Outcome::Violated(e.to_string()),
                }
            } else {
                match literal_structure(s) {
                    Some(tag) => Outcome::Violated(format!("has structure {tag} but is not uniform")),
                    None => Outcome::Holds(None),
                }
            }
        }
        CheckId::C14 => {
            if p.completely_simple {
                let rhs = is_two_left_zeros(p) || p.right_group;
                iff("uniform", u, "two left zeros or right group", rhs)
            } else if p.completely_0_simple {
                iff("uniform", u, "right 0-group", p.right_zero_group)
            } else {
                Outcome::Skip
            }
        }
        CheckId::C15 => {
            if !u {
                return Outcome::Skip;
            }
            let failed: Vec<&str> = table_rows()
                .iter()
                .filter(|row| (row.class)(p) && !(row.structure)(s, p))
                .map(|row| row.name)
                .collect();
            if failed.is_empty() {
                Outcome::Holds(None)
            } else {
                Outcome::Violated(format!("row(s) {} fail", failed.join(", ")))
            }
        }
    }
}

/// One row of the summary table: for uniform `S` in `class`, `structure`
/// must hold.
pub struct TableRow {
    pub name: &'static str,
    pub class: fn(&StructuralProfile) -> bool,
    pub structure: fn(&Semigroup, &StructuralProfile) -> bool,
}

fn group_or_zero_group(p: &StructuralProfile) -> bool {
    p.group || p.zero_group
}

fn right_group_family(p: &StructuralProfile) -> bool {
    p.group || p.zero_group || p.right_group || p.right_zero_group
}

/// The two-element semilattice `{0, 1}`.
fn is_zero_one(s: &Semigroup, p: &StructuralProfile) -> bool {
    p.order == 2 && p.band && s.zero().is_some() && s.identity().is_some()
}

pub fn table_rows() -> Vec<TableRow> {
    vec![
        TableRow {
            name: "regular/orthodox/completely regular",
            class: |p| p.regular || p.orthodox || p.completely_regular,
            structure: |s, _| literal_structure(s).is_some(),
        },
        TableRow {
            name: "right inverse",
            class: |p| p.right_inverse,
            structure: |_, p| right_group_family(p),
        },
        TableRow {
            name: "left inverse",
            class: |p| p.left_inverse,
            structure: |s, _| {
                matches!(
                    literal_structure(s),
                    Some(StructureTag::Group | StructureTag::ZeroGroup | StructureTag::GroupWithTwoLeftZeros)
                )
            },
        },
        TableRow {
            name: "inverse",
            class: |p| p.inverse,
            structure: |_, p| group_or_zero_group(p),
        },
        TableRow {
            name: "Clifford",
            class: |p| p.clifford,
            structure: |_, p| group_or_zero_group(p),
        },
        TableRow {
            name: "completely simple",
            class: |p| p.completely_simple,
            structure: |_, p| is_two_left_zeros(p) || p.right_group,
        },
        TableRow {
            name: "completely 0-simple",
            class: |p| p.completely_0_simple,
            structure: |_, p| p.right_zero_group,
        },
        TableRow {
            name: "band",
            class: |p| p.band,
            structure: |s, p| is_zero_one(s, p) || p.right_zero_sg || is_two_left_zeros(p),
        },
        TableRow {
            name: "left simple",
            class: |p| p.left_simple,
            structure: |_, p| is_two_left_zeros(p) || p.group,
        },
        TableRow {
            name: "left 0-simple",
            class: |p| p.left_0_simple,
            structure: |_, p| p.zero_group,
        },
        TableRow {
            name: "strongly right noetherian",
            class: |_| true,
            structure: |s, p| p.left_cancellative || p.left_nil || is_left_subelementary(s).is_some(),
        },
        TableRow {
            name: "finite",
            class: |_| true,
            structure: |s, p| p.right_group || p.left_nil || is_left_subelementary(s).is_some(),
        },
    ]
}

fn counterexample(s: &Semigroup, detail: String) -> Counterexample {
    Counterexample {
        order: s.order(),
        table: s.table().to_vec(),
        detail,
    }
}

struct Scan {
    scanned: usize,
    met: usize,
    counterexamples: Vec<Counterexample>,
    tallies: BTreeMap<String, usize>,
}

impl Scan {
    fn new() -> Self {
        Scan {
            scanned: 0,
            met: 0,
            counterexamples: Vec::new(),
            tallies: BTreeMap::new(),
        }
    }

    fn record(&mut self, s: &Semigroup, outcome: Outcome, invert: bool) {
        self.scanned += 1;
        let outcome = match (outcome, invert) {
            (Outcome::Holds(_), true) => Outcome::Violated("inverted check: the stated property held".into()),
            (Outcome::Violated(_), true) => Outcome::Holds(None),
            (o, false) => o,
            (Outcome::Skip, true) => Outcome::Skip,
        };
        match outcome {
            Outcome::Skip => {}
            Outcome::Holds(label) => {
                self.met += 1;
                if let Some(l) = label {
                    *self.tallies.entry(l).or_default() += 1;
                }
            }
            Outcome::Violated(detail) => {
                self.met += 1;
                self.counterexamples.push(counterexample(s, detail));
            }
        }
    }
}

pub fn run_check(check: CheckId, max_order: usize) -> Result<VerificationReport> {
    run_check_with(check, max_order, CheckOptions::default())
}

pub fn run_check_with(check: CheckId, max_order: usize, options: CheckOptions) -> Result<VerificationReport> {
    let universe = Universe::build(max_order, options.allow_extended)?;
    run_check_on(check, &universe, options)
}

pub fn run_all(max_order: usize) -> Result<Vec<VerificationReport>> {
    run_all_with(max_order, CheckOptions::default())
}

pub fn run_all_with(max_order: usize, options: CheckOptions) -> Result<Vec<VerificationReport>> {
    let universe = Universe::build(max_order, options.allow_extended)?;
    CheckId::ALL
        .iter()
        .map(|&c| run_check_on(c, &universe, options))
        .collect()
}

pub fn run_check_on(check: CheckId, universe: &Universe, options: CheckOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let outcomes: Vec<Outcome> = universe
        .instances
        .par_iter()
        .map(|inst| check_instance(check, inst))
        .collect();
    let mut scan = Scan::new();
    for (inst, outcome) in universe.instances.iter().zip(outcomes) {
        scan.record(&inst.semigroup, outcome, options.invert);
    }
    let mut discrepancies = Vec::new();
    match check {
        CheckId::C13 => {
            for (s, outcome) in structure_family_outcomes()? {
                scan.record(&s, outcome, options.invert);
            }
            discrepancies = case_ii_discrepancies()?;
        }
        CheckId::C14 => {
            for (s, outcome) in rees_sweep()? {
                scan.record(&s, outcome, options.invert);
            }
        }
        _ => {}
    }
    Ok(VerificationReport {
        check,
        title: check.title().to_string(),
        max_order: universe.max_order,
        instances_scanned: scan.scanned,
        hypotheses_met: scan.met,
        counterexamples: scan.counterexamples,
        discrepancies,
        tallies: scan.tallies,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

// ---- family sweeps -------------------------------------------------------

const FAMILY_GROUP_ORDER: usize = 4;
const RIGHT_ZERO_SIZES: [usize; 3] = [1, 2, 3];

fn expect_structure(s: &Semigroup, expected: StructureTag, label: &str) -> Outcome {
    let regular = s.elements().all(|a| s.is_regular_element(a));
    let uniform = uniform_of(s);
    let tag = classify_regular_uniform(s).map(|c| c.tag);
    if regular && uniform && tag == Ok(expected) {
        holds(format!("constructed {expected}"))
    } else {
        Outcome::Violated(format!(
            "{label}: regular = {regular}, uniform = {uniform}, classified as {tag:?}, expected {expected}"
        ))
    }
}

fn all_groups_up_to(order: usize) -> Result<Vec<(String, Semigroup)>> {
    let mut out = Vec::new();
    for n in 1..=order {
        out.extend(builtin_groups(n)?.into_iter().map(|g| (g.name, g.group)));
    }
    Ok(out)
}

/// The four structures built from builtin groups must be regular, uniform
/// and classified as themselves.
fn structure_family_outcomes() -> Result<Vec<(Semigroup, Outcome)>> {
    use StructureTag::*;
    let mut out = Vec::new();
    let lz2 = left_zero(2)?;
    out.push((
        lz2.clone(),
        expect_structure(&lz2, TwoElementLeftZero, "two left zeros"),
    ));
    for (name, g) in all_groups_up_to(FAMILY_GROUP_ORDER)? {
        if g.order() >= 2 {
            out.push((g.clone(), expect_structure(&g, Group, &name)));
        }
        // the trivial group already has a zero, so its G^0 is built directly
        let g0 = if g.order() == 1 {
            Semigroup::new(2, vec![vec![0, 0], vec![0, 1]])?
        } else {
            g.adjoin_zero()
        };
        out.push((g0.clone(), expect_structure(&g0, ZeroGroup, &format!("{name}^0"))));
        if g.order() <= 2 {
            let s = construct(&FamilySpec::GroupTwoLeftZeros {
                group: g.clone(),
                swaps: None,
                strict_paper: true,
            })?;
            out.push((
                s.clone(),
                expect_structure(&s, GroupWithTwoLeftZeros, &format!("{name} with two left zeros")),
            ));
        }
        for k in RIGHT_ZERO_SIZES {
            let r = construct(&FamilySpec::RightGroupProduct {
                group: g.clone(),
                right_zero: k,
            })?;
            let (plain, zero) = if k == 1 {
                (Group, ZeroGroup)
            } else {
                (RightGroup, RightZeroGroup)
            };
            if r.order() < 2 {
                continue;
            }
            out.push((r.clone(), expect_structure(&r, plain, &format!("{name} x R{k}"))));
            let r0 = r.adjoin_zero();
            out.push((r0.clone(), expect_structure(&r0, zero, &format!("({name} x R{k})^0"))));
        }
    }
    Ok(out)
}

/// Homomorphisms `G → Z2`, as swap flags per element.
fn swap_homomorphisms(g: &Semigroup) -> Vec<Vec<bool>> {
    let n = g.order();
    (0u32..(1 << n))
        .map(|mask| (0..n).map(|x| mask & (1 << x) != 0).collect::<Vec<bool>>())
        .filter(|swaps| {
            g.elements()
                .all(|a| g.elements().all(|b| swaps[g.mul(a, b)] == (swaps[a] != swaps[b])))
        })
        .collect()
}

/// The swap rule for `G ⊔ {θ1, θ2}` read literally, and the repaired family
/// with an arbitrary homomorphism into `Sym{θ1, θ2}`.
pub fn case_ii_discrepancies() -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    for (name, g) in all_groups_up_to(FAMILY_GROUP_ORDER)? {
        let strict = construct(&FamilySpec::GroupTwoLeftZeros {
            group: g.clone(),
            swaps: None,
            strict_paper: true,
        });
        if let Err(e) = strict {
            out.push(Discrepancy {
                subject: format!("{name} with two left zeros, every g != 1 swapping"),
                detail: format!("construction fails: {e}"),
            });
        }
        for swaps in swap_homomorphisms(&g) {
            let s = construct(&FamilySpec::GroupTwoLeftZeros {
                group: g.clone(),
                swaps: Some(swaps.clone()),
                strict_paper: false,
            })?;
            let swapping: Vec<usize> = (0..g.order()).filter(|&x| swaps[x]).collect();
            let subject = format!("{name} with two left zeros, swapping elements {swapping:?}");
            match uniformity_witness(&s)? {
                Some(w) => out.push(Discrepancy {
                    subject,
                    detail: format!(
                        "associative and regular but not uniform: subact {:?} misses congruence {} generated by {:?}",
                        w.subact, w.congruence, w.pair
                    ),
                }),
                None if swaps.iter().filter(|&&b| !b).count() != 1 => out.push(Discrepancy {
                    subject,
                    detail: "uniform although the swap rule is not the literal one".into(),
                }),
                None => {}
            }
        }
    }
    Ok(out)
}

/// Rees matrix semigroups over groups of order at most 3 with `|I|, |Λ| ≤ 2`
/// and every regular sandwich matrix.
fn rees_sweep() -> Result<Vec<(Semigroup, Outcome)>> {
    let mut out = Vec::new();
    for (name, g) in all_groups_up_to(3)? {
        let go = g.order();
        for i_count in 1..=2 {
            for lambda_count in 1..=2 {
                let cells = i_count * lambda_count;
                for code in 0..go.pow(cells as u32) {
                    let sandwich = decode_matrix(code, go, lambda_count, i_count, |v| v);
                    let s = construct(&FamilySpec::ReesMatrix {
                        group: g.clone(),
                        i_count,
                        lambda_count,
                        sandwich: sandwich.clone(),
                    })?;
                    if s.order() < 2 {
                        continue;
                    }
                    let p = structural_profile(&s);
                    let expected = i_count == 1 || (i_count == 2 && lambda_count == 1 && go == 1);
                    let u = uniform_of(&s);
                    let outcome = if !(p.regular && p.simple) {
                        Outcome::Violated(format!(
                            "M[{name}; {i_count}, {lambda_count}; {sandwich:?}] is not completely simple"
                        ))
                    } else if u != expected {
                        Outcome::Violated(format!(
                            "M[{name}; {i_count}, {lambda_count}; {sandwich:?}]: uniform = {u}, expected {expected}"
                        ))
                    } else {
                        holds(format!("Rees |I|={i_count} uniform={u}"))
                    };
                    out.push((s, outcome));
                }
                for code in 0..(go + 1).pow(cells as u32) {
                    let sandwich = decode_matrix(code, go + 1, lambda_count, i_count, |v| v.checked_sub(1));
                    let spec = FamilySpec::ReesMatrix0 {
                        group: g.clone(),
                        i_count,
                        lambda_count,
                        sandwich: sandwich.clone(),
                    };
                    let s = match construct(&spec) {
                        Ok(s) => s,
                        Err(Error::Regularity(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    let p = structural_profile(&s);
                    let expected = i_count == 1;
                    let u = uniform_of(&s);
                    let outcome = if !(p.regular && p.zero_simple) {
                        Outcome::Violated(format!(
                            "M0[{name}; {i_count}, {lambda_count}; {sandwich:?}] is not completely 0-simple"
                        ))
                    } else if u != expected {
                        Outcome::Violated(format!(
                            "M0[{name}; {i_count}, {lambda_count}; {sandwich:?}]: uniform = {u}, expected {expected}"
                        ))
                    } else {
                        holds(format!("Rees0 |I|={i_count} uniform={u}"))
                    };
                    out.push((s, outcome));
                }
            }
        }
    }
    Ok(out)
}

/// Mixed-radix decoding of `code` into a `rows × cols` matrix.
fn decode_matrix<T>(mut code: usize, radix: usize, rows: usize, cols: usize, f: impl Fn(usize) -> T) -> Vec<Vec<T>> {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    let d = code % radix;
                    code /= radix;
                    f(d)
                })
                .collect()
        })
        .collect()
}
