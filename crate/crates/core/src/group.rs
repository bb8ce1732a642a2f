//! Finite groups given by an explicit multiplication table.
//!
//! Elements are the dense indices `0..order` and the identity is always `0`.
//! A [`FiniteGroup`] is an immutable, cheaply clonable handle; every other
//! object in the crate (homomorphisms, subgroups, extensions) holds these
//! handles rather than copies of the table.

use std::collections::VecDeque;
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

struct GroupData {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    name: Option<String>,
    generators: OnceLock<Vec<usize>>,
    element_orders: OnceLock<Vec<usize>>,
    subgroups: OnceLock<Vec<Vec<usize>>>,
}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    ///
    /// Checks, in order: shape and index range, identity at `0`, two-sided
    /// inverses, associativity.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::MalformedTable(format!("entry {bad} in row {i}")));
            }
        }
        let is_identity = |e: usize| (0..n).all(|x| table[e][x] == x && table[x][e] == x);
        if !is_identity(0) {
            return match (1..n).find(|&e| is_identity(e)) {
                Some(e) => Err(Error::IdentityNotZero(e)),
                None => Err(Error::NoIdentity),
            };
        }
        let mut inverses = Vec::with_capacity(n);
        for (x, row) in table.iter().enumerate() {
            match (0..n).find(|&y| row[y] == 0 && table[y][x] == 0) {
                Some(y) => inverses.push(y as u32),
                None => return Err(Error::NoInverse(x)),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let flat = table.into_iter().flatten().map(|v| v as u32).collect();
        Ok(Self::from_parts(n, flat, inverses, None))
    }

    /// Builds a group from a flat row-major table that is already known to be
    /// a group with identity `0`. Used by the internal constructions.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<u32>, name: Option<String>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverses = vec![0u32; order];
        for x in 0..order {
            let row = &table[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).expect("every element has an inverse");
            inverses[x] = y as u32;
        }
        Self::from_parts(order, table, inverses, name)
    }

    /// Builds a group from a closure `mul(a, b)` on `0..order`, trusted to be
    /// a group law with identity `0`.
    pub(crate) fn from_fn_unchecked(order: usize, name: Option<String>, mul: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b) as u32);
            }
        }
        Self::from_flat_unchecked(order, table, name)
    }

    fn from_parts(order: usize, table: Vec<u32>, inverses: Vec<u32>, name: Option<String>) -> Self {
        FiniteGroup(Arc::new(GroupData {
            order,
            table,
            inverses,
            name,
            generators: OnceLock::new(),
            element_orders: OnceLock::new(),
            subgroups: OnceLock::new(),
        }))
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::from_parts(1, vec![0], vec![0], Some("1".into()))
    }

    /// Returns a handle to the same table carrying a different label.
    pub fn with_name(&self, name: impl Into<String>) -> Self {
        Self::from_parts(self.order(), self.0.table.clone(), self.0.inverses.clone(), Some(name.into()))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverses[a] as usize
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    /// Name if present, otherwise `G<order>`.
    pub fn label(&self) -> String {
        match &self.0.name {
            Some(n) => n.clone(),
            None => format!("G{}", self.order()),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn row(&self, a: usize) -> Vec<usize> {
        let n = self.order();
        self.0.table[a * n..(a + 1) * n].iter().map(|&v| v as usize).collect()
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.row(a)).collect()
    }

    /// `g x g⁻¹`
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a b a⁻¹ b⁻¹`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    #[inline]
    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.commutes(a, b)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders()[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.0.element_orders.get_or_init(|| {
            self.elements()
                .map(|a| {
                    let mut k = 1;
                    let mut x = a;
                    while x != 0 {
                        x = self.mul(x, a);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// Elements reachable from `0` by right multiplication with `gens`, as a
    /// membership mask plus the discovery order.
    pub(crate) fn closure_mask(&self, gens: &[usize]) -> (FixedBitSet, Vec<usize>) {
        let mut mask = FixedBitSet::with_capacity(self.order());
        let mut found = vec![0];
        mask.insert(0);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask.contains(y) {
                    mask.insert(y);
                    found.push(y);
                    queue.push_back(y);
                }
            }
        }
        (mask, found)
    }

    /// An irredundant generating set, chosen greedily: each step adds the
    /// element whose inclusion enlarges the generated subgroup the most
    /// (least index on ties). Cached.
    pub fn generators(&self) -> &[usize] {
        self.0.generators.get_or_init(|| {
            let mut gens: Vec<usize> = Vec::new();
            let (mut mask, _) = self.closure_mask(&gens);
            while mask.count_ones(..) < self.order() {
                let mut best = (0, usize::MAX);
                for x in self.elements().filter(|&x| !mask.contains(x)) {
                    gens.push(x);
                    let size = self.closure_mask(&gens).0.count_ones(..);
                    gens.pop();
                    if size > best.0 {
                        best = (size, x);
                    }
                }
                gens.push(best.1);
                mask = self.closure_mask(&gens).0;
            }
            gens
        })
    }

    pub(crate) fn subgroup_cache(&self) -> &OnceLock<Vec<Vec<usize>>> {
        &self.0.subgroups
    }

    pub fn ptr_eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Exhaustive check of the group axioms. Meant for tests of constructed
    /// groups; cubic in the order.
    pub fn check_axioms(&self) -> Result<()> {
        FiniteGroup::new(self.table()).map(|_| ())
    }
}

/// Equality is equality of multiplication tables; labels are ignored.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || (self.order() == other.order() && self.0.table == other.0.table)
    }
}

impl Eq for FiniteGroup {}

impl std::hash::Hash for FiniteGroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.table.hash(state);
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label(), self.order())
    }
}
