//! The full subgroup lattice by cyclic extension.
//!
//! Every subgroup is a join of cyclic subgroups, so closing the set of cyclic
//! subgroups under `H ↦ ⟨H, c⟩` reaches all of them. A subgroup is maximal
//! when every such extension is already the whole group.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::algebra::{bits_key, Subgroup};
use crate::error::{check_budget, Result};
use crate::par;

/// Limits for [`subgroup_lattice`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeBudget {
    pub max_subgroups: usize,
    pub max_order: usize,
}

impl Default for LatticeBudget {
    fn default() -> Self {
        LatticeBudget { max_subgroups: 20_000, max_order: 2_000 }
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    /// All subgroups, sorted by order and then by element indices.
    pub subgroups: Vec<Subgroup>,
    maximal: Vec<bool>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn maximal_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups
            .iter()
            .zip(&self.maximal)
            .filter_map(|(s, &m)| m.then_some(s))
    }

    /// Intersection of the maximal subgroups.
    pub fn frattini(&self) -> Subgroup {
        let top = self.subgroups.last().expect("lattice contains G");
        let mut bits = top.bits().clone();
        for m in self.maximal_subgroups() {
            bits.intersect_with(m.bits());
        }
        top.table().subgroup_from_bits(bits)
    }
}

pub fn subgroup_lattice(g: &Subgroup, budget: &LatticeBudget) -> Result<SubgroupLattice> {
    check_budget("subgroup lattice order", g.order() as u128, budget.max_order as u128)?;
    let t = g.table();
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut all: Vec<Subgroup> = Vec::new();
    let mut cyclic: Vec<Subgroup> = Vec::new();
    for x in g.elements() {
        let c = t.closure(&[x]);
        if !index.contains_key(c.bits()) {
            index.insert(c.bits().clone(), all.len());
            all.push(c.clone());
            cyclic.push(c);
        }
    }
    check_budget("subgroup lattice size", all.len() as u128, budget.max_subgroups as u128)?;
    let mut proper_cover = vec![false; all.len()];
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let items: Vec<Subgroup> = frontier.iter().map(|&i| all[i].clone()).collect();
        let joins: Vec<Vec<Subgroup>> = par::map(&items, |h| {
            cyclic
                .iter()
                .filter(|c| !c.generators().iter().all(|&x| h.contains(x)))
                .map(|c| h.adjoin(c.generators()))
                .collect()
        });
        let mut next = Vec::new();
        for (&i, js) in frontier.iter().zip(joins) {
            for j in js {
                if j.order() < g.order() {
                    proper_cover[i] = true;
                }
                if !index.contains_key(j.bits()) {
                    index.insert(j.bits().clone(), all.len());
                    all.push(j);
                    proper_cover.push(false);
                    next.push(all.len() - 1);
                    check_budget("subgroup lattice size", all.len() as u128, budget.max_subgroups as u128)?;
                }
            }
        }
        frontier = next;
    }
    let mut order: Vec<usize> = (0..all.len()).collect();
    order.sort_by_cached_key(|&i| (all[i].order(), bits_key(&all[i])));
    let maximal = order
        .iter()
        .map(|&i| all[i].order() < g.order() && !proper_cover[i])
        .collect();
    let subgroups = order.into_iter().map(|i| all[i].clone()).collect();
    Ok(SubgroupLattice { subgroups, maximal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ElementTable;
    use crate::perm::{Group, Permutation};

    fn whole(n: usize, gens: &[&str]) -> Subgroup {
        let g = Group::new(n, gens.iter().map(|s| Permutation::parse_cycles(n, s).unwrap()).collect()).unwrap();
        ElementTable::new(&g, 100_000).unwrap().whole()
    }

    /// Subgroups found by testing every subset for closure (tiny groups only).
    fn brute_force_count(g: &Subgroup) -> usize {
        let elems: Vec<u32> = g.elements().collect();
        let t = g.table();
        let n = elems.len();
        (0u64..1 << n)
            .filter(|mask| {
                let inside = |x: u32| elems.iter().position(|&e| e == x).is_some_and(|i| mask >> i & 1 == 1);
                let members: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| elems[i]).collect();
                !members.is_empty()
                    && members.iter().all(|&a| members.iter().all(|&b| inside(t.mul(a, b))))
            })
            .count()
    }

    #[test]
    fn small_lattices_match_subset_enumeration() {
        for g in [
            whole(3, &["(1 2)", "(1 2 3)"]),
            whole(4, &["(1 2)(3 4)", "(1 3)(2 4)"]),
            whole(4, &["(1 2 3 4)", "(1 3)"]),
            whole(8, &["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"]),
        ] {
            let lat = subgroup_lattice(&g, &LatticeBudget::default()).unwrap();
            assert_eq!(lat.len(), brute_force_count(&g));
        }
    }

    #[test]
    fn s4_lattice_and_frattini() {
        let s4 = whole(4, &["(1 2)", "(1 2 3 4)"]);
        let lat = subgroup_lattice(&s4, &LatticeBudget::default()).unwrap();
        assert_eq!(lat.len(), 30);
        let mut max_orders: Vec<usize> = lat.maximal_subgroups().map(|m| m.order()).collect();
        max_orders.sort();
        assert_eq!(max_orders, vec![6, 6, 6, 6, 8, 8, 8, 12]);
        assert!(lat.frattini().is_trivial());
        let q8 = whole(8, &["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"]);
        assert_eq!(subgroup_lattice(&q8, &LatticeBudget::default()).unwrap().frattini().order(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let s4 = whole(4, &["(1 2)", "(1 2 3 4)"]);
        let tight = LatticeBudget { max_subgroups: 10, max_order: 2000 };
        assert!(subgroup_lattice(&s4, &tight).unwrap_err().is_budget());
    }
}
