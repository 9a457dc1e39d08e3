//! Constructors for the named families of semigroups.
//!
//! Every constructor goes through [`Semigroup::from_flat`], so a family whose
//! parameters do not yield an associative product reports the failing triple
//! instead of producing a table.

use crate::cayley::Semigroup;
use crate::error::{Error, Result};

pub const MAX_BUILTIN_GROUP_ORDER: usize = 8;
pub const MAX_NAMED_GROUP_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    LeftZero(usize),
    RightZero(usize),
    CyclicGroup(usize),
    /// `{a, a², …, a^{n-1}, 0}` with the zero at index 0 and `a^k` at index `k`.
    NullMonogenicNil(usize),
    DirectProduct(Semigroup, Semigroup),
    ZeroAdjoined(Semigroup),
    IdentityAdjoined(Semigroup),
    /// `G × R` with `R` the right zero semigroup of the given size.
    RightGroupProduct {
        group: Semigroup,
        right_zero: usize,
    },
    /// `M[G; I, Λ; P]`, `sandwich[λ][i] ∈ G`.
    ReesMatrix {
        group: Semigroup,
        i_count: usize,
        lambda_count: usize,
        sandwich: Vec<Vec<usize>>,
    },
    /// `M⁰[G; I, Λ; P]`, `None` entries are zero.
    ReesMatrix0 {
        group: Semigroup,
        i_count: usize,
        lambda_count: usize,
        sandwich: Vec<Vec<Option<usize>>>,
    },
    /// `G ⊔ {θ1, θ2}` with `θi x = θi` and `g θi = θ_{σ(g)(i)}`; `swaps[g]`
    /// says whether `σ(g)` is the transposition. With `strict_paper` the
    /// action is forced to swap for every `g ≠ 1`.
    GroupTwoLeftZeros {
        group: Semigroup,
        swaps: Option<Vec<bool>>,
        strict_paper: bool,
    },
}

pub fn left_zero(n: usize) -> Result<Semigroup> {
    positive(n, "left zero")?;
    Semigroup::from_flat(n, (0..n).flat_map(|i| std::iter::repeat_n(i, n)).collect())
}

pub fn right_zero(n: usize) -> Result<Semigroup> {
    positive(n, "right zero")?;
    Semigroup::from_flat(n, (0..n).flat_map(|_| 0..n).collect())
}

pub fn cyclic_group(n: usize) -> Result<Semigroup> {
    positive(n, "cyclic group")?;
    Semigroup::from_flat(n, (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect())
}

pub fn null_monogenic(n: usize) -> Result<Semigroup> {
    positive(n, "monogenic nil")?;
    let mul = |i: usize, j: usize| if i == 0 || j == 0 || i + j >= n { 0 } else { i + j };
    Semigroup::from_flat(n, (0..n).flat_map(|i| (0..n).map(move |j| mul(i, j))).collect())
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSpec(format!("{what} needs a positive size")));
    }
    Ok(())
}

fn require_group(g: &Semigroup) -> Result<usize> {
    let e = g
        .identity()
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for x in g.elements() {
        if !g.elements().any(|y| g.mul(x, y) == e && g.mul(y, x) == e) {
            return Err(Error::NotAGroup(format!("element {x} has no inverse")));
        }
    }
    Ok(e)
}

fn check_dims(i_count: usize, lambda_count: usize, rows: usize, cols: &[usize]) -> Result<()> {
    if i_count == 0 || lambda_count == 0 {
        return Err(Error::InvalidSpec("index sets must be nonempty".into()));
    }
    if rows != lambda_count || cols.iter().any(|&c| c != i_count) {
        return Err(Error::InvalidSpec(format!(
            "sandwich matrix must be {lambda_count}x{i_count} (rows indexed by Λ)"
        )));
    }
    Ok(())
}

pub fn construct(spec: &FamilySpec) -> Result<Semigroup> {
    match spec {
        FamilySpec::LeftZero(n) => left_zero(*n),
        FamilySpec::RightZero(n) => right_zero(*n),
        FamilySpec::CyclicGroup(n) => cyclic_group(*n),
        FamilySpec::NullMonogenicNil(n) => null_monogenic(*n),
        FamilySpec::DirectProduct(a, b) => {
            let p = a.direct_product(b);
            Semigroup::from_flat(p.order(), p.table().to_vec())
        }
        FamilySpec::ZeroAdjoined(s) => Ok(s.adjoin_zero()),
        FamilySpec::IdentityAdjoined(s) => Ok(s.adjoin_identity()),
        FamilySpec::RightGroupProduct { group, right_zero: k } => {
            require_group(group)?;
            let p = group.direct_product(&right_zero(*k)?);
            Semigroup::from_flat(p.order(), p.table().to_vec())
        }
        FamilySpec::ReesMatrix {
            group,
            i_count,
            lambda_count,
            sandwich,
        } => {
            require_group(group)?;
            let cols: Vec<usize> = sandwich.iter().map(Vec::len).collect();
            check_dims(*i_count, *lambda_count, sandwich.len(), &cols)?;
            let g = group.order();
            if sandwich.iter().flatten().any(|&p| p >= g) {
                return Err(Error::InvalidSpec("sandwich entry outside the group".into()));
            }
            let lam = *lambda_count;
            let size = i_count * g * lam;
            let mut table = Vec::with_capacity(size * size);
            for x in 0..size {
                let (i, gx, l) = (x / (g * lam), (x / lam) % g, x % lam);
                for y in 0..size {
                    let (j, hy, m) = (y / (g * lam), (y / lam) % g, y % lam);
                    let prod = group.mul(group.mul(gx, sandwich[l][j]), hy);
                    table.push((i * g + prod) * lam + m);
                }
            }
            Semigroup::from_flat(size, table)
        }
        FamilySpec::ReesMatrix0 {
            group,
            i_count,
            lambda_count,
            sandwich,
        } => {
            require_group(group)?;
            let cols: Vec<usize> = sandwich.iter().map(Vec::len).collect();
            check_dims(*i_count, *lambda_count, sandwich.len(), &cols)?;
            let g = group.order();
            if sandwich.iter().flatten().flatten().any(|&p| p >= g) {
                return Err(Error::InvalidSpec("sandwich entry outside the group".into()));
            }
            if let Some(l) = sandwich.iter().position(|row| row.iter().all(Option::is_none)) {
                return Err(Error::Regularity(format!("row {l} is entirely zero")));
            }
            if let Some(j) = (0..*i_count).find(|&j| sandwich.iter().all(|row| row[j].is_none())) {
                return Err(Error::Regularity(format!("column {j} is entirely zero")));
            }
            let lam = *lambda_count;
            let zero = i_count * g * lam;
            let size = zero + 1;
            let mut table = Vec::with_capacity(size * size);
            for x in 0..size {
                for y in 0..size {
                    if x == zero || y == zero {
                        table.push(zero);
                        continue;
                    }
                    let (i, gx, l) = (x / (g * lam), (x / lam) % g, x % lam);
                    let (j, hy, m) = (y / (g * lam), (y / lam) % g, y % lam);
                    table.push(match sandwich[l][j] {
                        Some(p) => (i * g + group.mul(group.mul(gx, p), hy)) * lam + m,
                        None => zero,
                    });
                }
            }
            Semigroup::from_flat(size, table)
        }
        FamilySpec::GroupTwoLeftZeros {
            group,
            swaps,
            strict_paper,
        } => {
            let e = require_group(group)?;
            let g = group.order();
            let literal: Vec<bool> = (0..g).map(|x| x != e).collect();
            let swaps = match (swaps, strict_paper) {
                (None, _) => literal,
                (Some(s), false) => s.clone(),
                (Some(s), true) if *s == literal => literal,
                (Some(_), true) => {
                    return Err(Error::InvalidSpec(
                        "strict action swaps exactly the non-identity elements".into(),
                    ))
                }
            };
            if swaps.len() != g {
                return Err(Error::InvalidSpec(format!("action needs {g} entries")));
            }
            let size = g + 2;
            let mut table = Vec::with_capacity(size * size);
            for x in 0..size {
                let swapping = swaps.get(x).copied().unwrap_or(false);
                for y in 0..size {
                    table.push(if x >= g {
                        x
                    } else if y >= g {
                        if swapping {
                            g + (1 - (y - g))
                        } else {
                            y
                        }
                    } else {
                        group.mul(x, y)
                    });
                }
            }
            Semigroup::from_flat(size, table)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGroup {
    pub name: String,
    pub group: Semigroup,
}

fn product_of_cyclics(factors: &[usize]) -> Semigroup {
    factors
        .iter()
        .map(|&k| cyclic_group(k).expect("positive factor"))
        .reduce(|a, b| a.direct_product(&b))
        .expect("at least one factor")
}

/// `D_k` of order `2k`: `r^i s^a` stored at `i + k·a`.
fn dihedral(k: usize) -> Semigroup {
    let size = 2 * k;
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (i, a) = (x % k, x / k);
        for y in 0..size {
            let (j, b) = (y % k, y / k);
            let rot = if a == 0 { (i + j) % k } else { (i + k - j) % k };
            table.push(rot + k * ((a + b) % 2));
        }
    }
    Semigroup::from_flat(size, table).expect("dihedral group")
}

/// Quaternions `±1, ±i, ±j, ±k`, stored as `sign·4 + unit`.
fn quaternion() -> Semigroup {
    // unit products: (sign, unit) for units 1, i, j, k
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (s, u) = UNITS[x % 4][y % 4];
            table.push(((s + x / 4 + y / 4) % 2) * 4 + u);
        }
    }
    Semigroup::from_flat(8, table).expect("quaternion group")
}

/// All groups of order `n ≤ 8` up to isomorphism.
pub fn builtin_groups(n: usize) -> Result<Vec<NamedGroup>> {
    if n > MAX_BUILTIN_GROUP_ORDER {
        return Err(Error::BoundExceeded {
            what: "builtin groups",
            order: n,
            bound: MAX_BUILTIN_GROUP_ORDER,
        });
    }
    positive(n, "group")?;
    let named = |name: &str, group: Semigroup| NamedGroup {
        name: name.to_string(),
        group,
    };
    let cyclic = named(&format!("Z{n}"), product_of_cyclics(&[n]));
    Ok(match n {
        4 => vec![cyclic, named("Z2xZ2", product_of_cyclics(&[2, 2]))],
        6 => vec![cyclic, named("S3", dihedral(3))],
        8 => vec![
            cyclic,
            named("Z4xZ2", product_of_cyclics(&[4, 2])),
            named("Z2xZ2xZ2", product_of_cyclics(&[2, 2, 2])),
            named("D4", dihedral(4)),
            named("Q8", quaternion()),
        ],
        _ => vec![cyclic],
    })
}

/// Resolves `Zn`, products such as `Z2xZ3`, `S3`, `D<k>` and `Q8`.
pub fn group_by_name(name: &str) -> Result<Semigroup> {
    let bad = || Error::InvalidSpec(format!("unknown group `{name}`"));
    match name {
        "S3" => return Ok(dihedral(3)),
        "Q8" => return Ok(quaternion()),
        _ => {}
    }
    if let Some(k) = name.strip_prefix('D') {
        let k: usize = k.parse().map_err(|_| bad())?;
        if k < 3 {
            return Err(bad());
        }
        check_named_order(2 * k)?;
        return Ok(dihedral(k));
    }
    let factors: Vec<usize> = name
        .split('x')
        .map(|f| f.strip_prefix('Z').and_then(|k| k.parse().ok()).filter(|&k| k > 0))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    let order = factors.iter().try_fold(1usize, |acc, &k| acc.checked_mul(k));
    check_named_order(order.unwrap_or(usize::MAX))?;
    Ok(product_of_cyclics(&factors))
}

fn check_named_order(order: usize) -> Result<()> {
    if order > MAX_NAMED_GROUP_ORDER {
        return Err(Error::BoundExceeded {
            what: "named group",
            order,
            bound: MAX_NAMED_GROUP_ORDER,
        });
    }
    Ok(())
}
