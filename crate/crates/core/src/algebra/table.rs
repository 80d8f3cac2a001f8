//! Enumerated groups and bitset subgroups.
//!
//! Desk-scale algorithms (normal subgroups, lattices, automorphisms) work on
//! an [`ElementTable`]: every element of the group listed once, with a hash
//! index, inverses, element orders and, for small groups, a full Cayley table.
//! A [`Subgroup`] is a bitset over that table plus a short generator list.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{check_budget, Result};
use crate::perm::{Group, Permutation};

/// Groups up to this order get a precomputed Cayley table.
pub const CAYLEY_LIMIT: usize = 4096;

pub struct ElementTable {
    group: Group,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    identity: u32,
    generators: Vec<u32>,
    cayley: Option<Vec<u16>>,
}

impl ElementTable {
    /// Enumerates `group`, refusing when its order exceeds `budget`.
    pub fn new(group: &Group, budget: u128) -> Result<Arc<Self>> {
        check_budget("element table", group.order(), budget)?;
        let elements: Vec<Permutation> = group.chain().elements().collect();
        let n = elements.len();
        let index: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let identity = index[&Permutation::identity(group.degree())];
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order() as u32).collect();
        let generators = group.generators().iter().map(|g| index[g]).collect();
        let mut table = ElementTable {
            group: group.clone(),
            elements,
            index,
            inverse,
            orders,
            identity,
            generators,
            cayley: None,
        };
        if n <= CAYLEY_LIMIT {
            table.cayley = Some(table.build_cayley());
        }
        Ok(Arc::new(table))
    }

    fn build_cayley(&self) -> Vec<u16> {
        let n = self.elements.len();
        let gens: Vec<u32> = {
            let mut g = self.generators.clone();
            g.sort_unstable();
            g.dedup();
            g
        };
        let columns: Vec<Vec<u32>> = gens
            .iter()
            .map(|&g| (0..n).map(|x| self.mul_slow(x as u32, g)).collect())
            .collect();
        // spanning tree of the Cayley graph, rooted at the identity
        let mut parent = vec![(u32::MAX, 0usize); n];
        let mut order = vec![self.identity];
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(self.identity as usize);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (gi, col) in columns.iter().enumerate() {
                let y = col[x as usize];
                if !seen.contains(y as usize) {
                    seen.insert(y as usize);
                    parent[y as usize] = (x, gi);
                    order.push(y);
                }
            }
        }
        let mut cayley = vec![0u16; n * n];
        for a in 0..n {
            let row = &mut cayley[a * n..(a + 1) * n];
            row[self.identity as usize] = a as u16;
            for &x in &order[1..] {
                let (p, gi) = parent[x as usize];
                row[x as usize] = columns[gi][row[p as usize] as usize] as u16;
            }
        }
        cayley
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.elements[a as usize].then(&self.elements[b as usize]);
        self.index[&p]
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn element(&self, i: u32) -> &Permutation {
        &self.elements[i as usize]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u32> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.cayley {
            Some(t) => t[a as usize * self.elements.len() + b as usize] as u32,
            None => self.mul_slow(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    #[inline]
    pub fn element_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x⁻¹ y⁻¹ x y`.
    pub fn comm(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: u32, e: u64) -> u32 {
        let mut acc = self.identity;
        let mut base = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn whole(self: &Arc<Self>) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.len());
        bits.insert_range(..);
        let mut gens = self.generators.clone();
        gens.retain(|&g| g != self.identity);
        gens.dedup();
        Subgroup {
            table: Arc::clone(self),
            order: self.len(),
            bits,
            gens,
        }
    }

    pub fn trivial(self: &Arc<Self>) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(self.len());
        bits.insert(self.identity as usize);
        Subgroup {
            table: Arc::clone(self),
            bits,
            gens: Vec::new(),
            order: 1,
        }
    }

    /// Subgroup generated by the given element indices.
    pub fn closure(self: &Arc<Self>, gens: &[u32]) -> Subgroup {
        self.trivial().adjoin(gens)
    }

    /// Subgroup generated by permutations of the underlying group. Returns
    /// `None` if some permutation is not an element.
    pub fn closure_of_perms(self: &Arc<Self>, perms: &[Permutation]) -> Option<Subgroup> {
        let idx: Option<Vec<u32>> = perms.iter().map(|p| self.index_of(p)).collect();
        idx.map(|v| self.closure(&v))
    }

    /// Wraps a bitset that is known to be closed under multiplication,
    /// choosing a generating set greedily in index order.
    pub fn subgroup_from_bits(self: &Arc<Self>, bits: FixedBitSet) -> Subgroup {
        let mut h = self.trivial();
        let target = bits.count_ones(..);
        for x in bits.ones() {
            if h.order == target {
                break;
            }
            if !h.contains(x as u32) {
                h = h.adjoin(&[x as u32]);
            }
        }
        debug_assert_eq!(h.bits, bits, "bitset was not a subgroup");
        h
    }
}

impl fmt::Debug for ElementTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ElementTable")
            .field("group", &self.group.label())
            .field("order", &self.elements.len())
            .field("cayley", &self.cayley.is_some())
            .finish()
    }
}

/// A subgroup of an enumerated group.
#[derive(Clone)]
pub struct Subgroup {
    table: Arc<ElementTable>,
    bits: FixedBitSet,
    gens: Vec<u32>,
    order: usize,
}

impl Subgroup {
    pub fn table(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.bits.contains(x as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.ones().map(|x| x as u32)
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn generator_perms(&self) -> Vec<Permutation> {
        self.gens.iter().map(|&g| self.table.element(g).clone()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.table.len()
    }

    pub fn same_table(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.table, &other.table)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// The subgroup as a standalone permutation group.
    pub fn to_group(&self) -> Group {
        let degree = self.table.group().degree();
        let gens = if self.gens.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            self.generator_perms()
        };
        Group::new(degree, gens).expect("elements share the table degree")
    }

    /// Element permutations, sorted; used for deterministic tie-breaks.
    pub fn sorted_perms(&self) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = self.elements().map(|x| self.table.element(x).clone()).collect();
        v.sort();
        v
    }

    /// `⟨self, extra⟩`, built coset by coset (Dimino).
    pub fn adjoin(&self, extra: &[u32]) -> Subgroup {
        let table = &self.table;
        let mut h = self.clone();
        for &s in extra {
            if h.contains(s) {
                continue;
            }
            let base: Vec<u32> = h.elements().collect();
            let mut gens = h.gens.clone();
            gens.push(s);
            let mut bits = h.bits.clone();
            let mut reps = vec![table.identity()];
            let mut i = 0;
            while i < reps.len() {
                let r = reps[i];
                i += 1;
                for &t in &gens {
                    let y = table.mul(r, t);
                    if !bits.contains(y as usize) {
                        for &b in &base {
                            bits.insert(table.mul(b, y) as usize);
                        }
                        reps.push(y);
                    }
                }
            }
            h = Subgroup {
                table: Arc::clone(table),
                order: bits.count_ones(..),
                bits,
                gens,
            };
        }
        h
    }

    /// `g⁻¹ H g` for an element `g` of the table.
    pub fn conjugate(&self, g: u32) -> Subgroup {
        let t = &self.table;
        let mut bits = FixedBitSet::with_capacity(t.len());
        for x in self.elements() {
            bits.insert(t.conj(x, g) as usize);
        }
        Subgroup {
            table: Arc::clone(t),
            bits,
            gens: self.gens.iter().map(|&x| t.conj(x, g)).collect(),
            order: self.order,
        }
    }

    /// Whether every generator of `over` normalises `self`.
    pub fn is_normalized_by(&self, over: &Subgroup) -> bool {
        over.gens
            .iter()
            .all(|&g| self.gens.iter().all(|&x| self.contains(self.table.conj(x, g))))
    }

    /// Prime-power or general order summary for reports.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.generator_perms().iter().map(|p| p.to_string()).collect();
        format!("order {} = <{}>", self.order, gens.join(", "))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_table(other) && self.bits == other.bits
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({})", self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Group {
        let mut gens = vec![Permutation::parse_cycles(n, "(1 2)").unwrap()];
        let cyc: Vec<usize> = (1..=n).collect();
        gens.push(Permutation::from_cycles(n, &[&cyc]).unwrap());
        Group::new(n, gens).unwrap()
    }

    #[test]
    fn cayley_table_matches_permutation_products() {
        let t = ElementTable::new(&sym(4), 1000).unwrap();
        for a in 0..t.len() as u32 {
            for b in 0..t.len() as u32 {
                assert_eq!(t.mul(a, b), t.mul_slow(a, b));
            }
            assert_eq!(t.mul(a, t.inv(a)), t.identity());
        }
    }

    #[test]
    fn closure_and_bits_roundtrip() {
        let t = ElementTable::new(&sym(4), 1000).unwrap();
        let v = t
            .closure_of_perms(&[
                Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap(),
                Permutation::parse_cycles(4, "(1 3)(2 4)").unwrap(),
            ])
            .unwrap();
        assert_eq!(v.order(), 4);
        let again = t.subgroup_from_bits(v.bits().clone());
        assert_eq!(again, v);
        assert!(v.is_normalized_by(&t.whole()));
        assert_eq!(v.to_group().order(), 4);
    }

    #[test]
    fn table_respects_budget() {
        assert!(ElementTable::new(&sym(5), 100).is_err());
    }
}
