//! Finite semigroups as validated Cayley tables.
//!
//! Elements are the dense indices `0..n`. The table is stored row-major and
//! `mul(i, j)` is the product with `i` on the left, so row `a` of the table is
//! exactly the right action of `S` on the element `a` in `S_S`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Semigroup {
    order: usize,
    table: Vec<usize>,
}

impl std::fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Semigroup(n={}, {:?})", self.order, self.rows())
    }
}

impl Semigroup {
    /// Builds a semigroup from its rows, rejecting out-of-range entries and
    /// reporting the first non-associative triple in lexicographic order.
    pub fn new(order: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != order {
            return Err(Error::Shape(format!("expected {order} rows, found {}", rows.len())));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            flat.extend(row);
        }
        Self::from_flat(order, flat)
    }

    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Shape("order must be positive".into()));
        }
        if table.len() != order * order {
            return Err(Error::Shape(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(Error::Range {
                row: pos / order,
                col: pos % order,
                value: table[pos],
                order,
            });
        }
        let s = Semigroup { order, table };
        match s.first_associativity_violation() {
            Some((i, j, k)) => Err(Error::Associativity {
                i,
                j,
                k,
                left: s.mul(s.mul(i, j), k),
                right: s.mul(i, s.mul(j, k)),
            }),
            None => Ok(s),
        }
    }

    /// Caller guarantees range and associativity.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        Semigroup { order, table }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    /// Row-major flattened table.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    fn first_associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(i, j);
                for k in 0..n {
                    if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.order {
            return Err(Error::Range {
                row: x,
                col: 0,
                value: x,
                order: self.order,
            });
        }
        Ok(())
    }

    // ---- element predicates -------------------------------------------

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// `xs = x` for all `s`; these are the zero elements of `S_S`.
    pub fn is_left_zero(&self, x: usize) -> bool {
        self.elements().all(|s| self.mul(x, s) == x)
    }

    pub fn is_right_zero(&self, x: usize) -> bool {
        self.elements().all(|s| self.mul(s, x) == x)
    }

    pub fn is_zero(&self, x: usize) -> bool {
        self.is_left_zero(x) && self.is_right_zero(x)
    }

    pub fn is_left_identity(&self, x: usize) -> bool {
        self.elements().all(|s| self.mul(x, s) == s)
    }

    pub fn is_right_identity(&self, x: usize) -> bool {
        self.elements().all(|s| self.mul(s, x) == s)
    }

    pub fn is_identity(&self, x: usize) -> bool {
        self.is_left_identity(x) && self.is_right_identity(x)
    }

    pub fn is_regular_element(&self, a: usize) -> bool {
        self.elements().any(|x| self.mul(self.mul(a, x), a) == a)
    }

    /// Left translation by `c` is injective.
    pub fn is_left_cancellable(&self, c: usize) -> bool {
        let mut seen = vec![false; self.order];
        for x in self.elements() {
            let p = self.mul(c, x);
            if seen[p] {
                return false;
            }
            seen[p] = true;
        }
        true
    }

    /// `x^k` for `k >= 1`.
    pub fn power(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1, "powers start at 1");
        let mut p = x;
        for _ in 1..k {
            p = self.mul(p, x);
        }
        p
    }

    /// Smallest `k <= n` with `x^k` a left zero. Once a power is a left zero
    /// every later power equals it, so scanning the first `n` powers suffices.
    pub fn left_nilpotent_index(&self, x: usize) -> Option<usize> {
        let mut p = x;
        for k in 1..=self.order {
            if self.is_left_zero(p) {
                return Some(k);
            }
            p = self.mul(p, x);
        }
        None
    }

    /// Some power of `x` equals `x` again, i.e. `x` lies in a subgroup.
    pub fn is_group_element(&self, x: usize) -> bool {
        let mut p = self.mul(x, x);
        for _ in 0..self.order {
            if p == x {
                return true;
            }
            p = self.mul(p, x);
        }
        false
    }

    pub fn identity(&self) -> Option<usize> {
        self.elements().find(|&x| self.is_identity(x))
    }

    pub fn zero(&self) -> Option<usize> {
        self.elements().find(|&x| self.is_zero(x))
    }

    pub fn left_zeros(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_left_zero(x)).collect()
    }

    pub fn left_identities(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_left_identity(x)).collect()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn element_profile(&self, x: usize) -> Result<ElementProfile> {
        self.check_element(x)?;
        let left_zero = self.is_left_zero(x);
        let right_zero = self.is_right_zero(x);
        let left_identity = self.is_left_identity(x);
        let right_identity = self.is_right_identity(x);
        Ok(ElementProfile {
            element: x,
            idempotent: self.is_idempotent(x),
            left_zero,
            right_zero,
            zero: left_zero && right_zero,
            left_identity,
            right_identity,
            identity: left_identity && right_identity,
            regular: self.is_regular_element(x),
            left_cancellable: self.is_left_cancellable(x),
            left_nilpotent_index: self.left_nilpotent_index(x),
        })
    }

    // ---- subsets ------------------------------------------------------

    pub fn is_closed_subset(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in subset {
            member[x] = true;
        }
        subset.iter().all(|&a| subset.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// The subsemigroup on `subset` (which must be product-closed), relabelled
    /// to `0..subset.len()` in the order given.
    pub fn restrict(&self, subset: &[usize]) -> Result<Semigroup> {
        if subset.is_empty() || !self.is_closed_subset(subset) {
            return Err(Error::Shape(format!("{subset:?} is not a subsemigroup")));
        }
        let mut index = vec![usize::MAX; self.order];
        for (k, &x) in subset.iter().enumerate() {
            index[x] = k;
        }
        let m = subset.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in subset {
            for &b in subset {
                table.push(index[self.mul(a, b)]);
            }
        }
        Ok(Semigroup::from_flat_unchecked(m, table))
    }

    // ---- constructions ------------------------------------------------

    /// `S^1`: `S` itself when it already has an identity, otherwise a new
    /// element `n` acting as identity.
    pub fn adjoin_identity(&self) -> Semigroup {
        if self.identity().is_some() {
            return self.clone();
        }
        self.adjoin_with(|s, _| s, |s, _| s)
    }

    /// `S^0`: `S` itself when it already has a zero, otherwise a new element
    /// `n` acting as a two-sided zero.
    pub fn adjoin_zero(&self) -> Semigroup {
        if self.zero().is_some() {
            return self.clone();
        }
        self.adjoin_with(|_, a| a, |_, a| a)
    }

    /// Appends element `n`; `left(s, n)` is `n*s` and `right(s, n)` is `s*n`.
    fn adjoin_with(&self, left: impl Fn(usize, usize) -> usize, right: impl Fn(usize, usize) -> usize) -> Semigroup {
        let n = self.order;
        let m = n + 1;
        let mut table = vec![0; m * m];
        for a in 0..n {
            for b in 0..n {
                table[a * m + b] = self.mul(a, b);
            }
            table[n * m + a] = left(a, n);
            table[a * m + n] = right(a, n);
        }
        table[n * m + n] = n;
        Semigroup::from_flat_unchecked(m, table)
    }

    /// The transposed table: `x *op y = y * x`.
    pub fn opposite(&self) -> Semigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        Semigroup::from_flat_unchecked(n, table)
    }

    /// Relabels elements: `perm[old] = new`.
    pub fn permute(&self, perm: &[usize]) -> Result<Semigroup> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Shape(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Ok(Semigroup::from_flat_unchecked(n, table))
    }

    pub fn direct_product(&self, other: &Semigroup) -> Semigroup {
        let (n, m) = (self.order, other.order);
        let size = n * m;
        let mut table = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                let (a1, a2) = (a / m, a % m);
                let (b1, b2) = (b / m, b % m);
                table[a * size + b] = self.mul(a1, b1) * m + other.mul(a2, b2);
            }
        }
        Semigroup::from_flat_unchecked(size, table)
    }
}

/// Element-level predicates, each evaluated directly over the table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementProfile {
    pub element: usize,
    pub idempotent: bool,
    pub left_zero: bool,
    pub right_zero: bool,
    pub zero: bool,
    pub left_identity: bool,
    pub right_identity: bool,
    pub identity: bool,
    pub regular: bool,
    pub left_cancellable: bool,
    pub left_nilpotent_index: Option<usize>,
}
