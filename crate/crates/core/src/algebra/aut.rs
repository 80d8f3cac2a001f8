//! Automorphism groups of desk-scale groups by backtracking.
//!
//! An automorphism is determined by the images of a fixed generating tuple
//! `(t₀, …, t_{k-1})`. Candidate images must match each generator's
//! fingerprint (element order, class size). The search walks the tuple
//! position by position, keeping generators of the stabilizer of the already
//! fixed positions and skipping candidates that lie in a known orbit, so the
//! group order is the product of the orbit lengths.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::algebra::{class_sizes, Subgroup};

/// An automorphism of a subgroup `G` of an element table, as a map on table
/// indices (`u32::MAX` outside `G`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<u32>,
}

impl Automorphism {
    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// Image of a subgroup.
    pub fn image(&self, h: &Subgroup) -> Subgroup {
        let gens: Vec<u32> = h.generators().iter().map(|&x| self.apply(x)).collect();
        h.table().closure(&gens)
    }

    /// Checks `α(xy) = α(x)α(y)` for all pairs from `sample`.
    pub fn preserves_products(&self, g: &Subgroup, sample: &[u32]) -> bool {
        let t = g.table();
        sample.iter().all(|&x| {
            sample
                .iter()
                .all(|&y| self.apply(t.mul(x, y)) == t.mul(self.apply(x), self.apply(y)))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutStatus {
    Complete,
    /// The search was refused; `order` and `automorphisms` are meaningless.
    Incomplete(String),
}

/// Generators of `Aut(G)` and its order.
#[derive(Clone, Debug)]
pub struct AutGenerators {
    pub automorphisms: Vec<Automorphism>,
    pub order: u128,
    pub status: AutStatus,
    /// The generating tuple whose images define each automorphism.
    pub tuple: Vec<u32>,
}

impl AutGenerators {
    pub fn is_complete(&self) -> bool {
        self.status == AutStatus::Complete
    }
}

pub(crate) struct Extender<'a> {
    g: &'a Subgroup,
    tuple: Vec<u32>,
    /// Elements of `G` in breadth-first order from the identity, with the
    /// parent and tuple position that reached them.
    order: Vec<(u32, u32, usize)>,
}

impl<'a> Extender<'a> {
    pub(crate) fn new(g: &'a Subgroup, tuple: Vec<u32>) -> Self {
        let t = g.table();
        let mut seen = FixedBitSet::with_capacity(t.len());
        seen.insert(t.identity() as usize);
        let mut order = vec![(t.identity(), u32::MAX, 0)];
        let mut head = 0;
        while head < order.len() {
            let x = order[head].0;
            head += 1;
            for (i, &s) in tuple.iter().enumerate() {
                let y = t.mul(x, s);
                if !seen.contains(y as usize) {
                    seen.insert(y as usize);
                    order.push((y, x, i));
                }
            }
        }
        Extender { g, tuple, order }
    }

    /// Extends `t_i ↦ images[i]` to an automorphism, if it is one.
    pub(crate) fn extend(&self, images: &[u32]) -> Option<Automorphism> {
        let t = self.g.table();
        let mut map = vec![u32::MAX; t.len()];
        map[t.identity() as usize] = t.identity();
        for &(x, parent, i) in &self.order[1..] {
            map[x as usize] = t.mul(map[parent as usize], images[i]);
        }
        let mut hit = FixedBitSet::with_capacity(t.len());
        for &(x, _, _) in &self.order {
            let y = map[x as usize];
            if !self.g.contains(y) || hit.contains(y as usize) {
                return None;
            }
            hit.insert(y as usize);
        }
        for &(x, _, _) in &self.order {
            for (i, &s) in self.tuple.iter().enumerate() {
                if map[t.mul(x, s) as usize] != t.mul(map[x as usize], images[i]) {
                    return None;
                }
            }
        }
        Some(Automorphism { images: map })
    }
}

/// Greedy generating tuple, preferring elements whose fingerprint class is
/// small.
fn generating_tuple(g: &Subgroup, fingerprint: &[(u32, usize)]) -> Vec<u32> {
    let mut counts: BTreeMap<(u32, usize), usize> = BTreeMap::new();
    for x in g.elements() {
        *counts.entry(fingerprint[x as usize]).or_default() += 1;
    }
    let mut elems: Vec<u32> = g.elements().collect();
    elems.sort_by_key(|&x| (counts[&fingerprint[x as usize]], std::cmp::Reverse(g.table().element_order(x)), x));
    let mut h = g.table().trivial();
    let mut tuple = Vec::new();
    for x in elems {
        if h.order() == g.order() {
            break;
        }
        if !h.contains(x) {
            h = h.adjoin(&[x]);
            tuple.push(x);
        }
    }
    tuple
}

struct Search<'a> {
    g: &'a Subgroup,
    ext: Extender<'a>,
    candidates: Vec<Vec<u32>>,
    class_size: Vec<usize>,
    found: Vec<Vec<Automorphism>>,
}

impl Search<'_> {
    fn tuple(&self) -> &[u32] {
        &self.ext.tuple
    }

    /// Necessary conditions on a partial image tuple, checked on the newest
    /// position against all earlier ones.
    fn consistent(&self, images: &[u32]) -> bool {
        let t = self.g.table();
        let j = images.len() - 1;
        let tj = self.tuple()[j];
        let aj = images[j];
        (0..j).all(|i| {
            let (ti, ai) = (self.tuple()[i], images[i]);
            let words = [
                (t.mul(ti, tj), t.mul(ai, aj)),
                (t.mul(ti, t.inv(tj)), t.mul(ai, t.inv(aj))),
                (t.comm(ti, tj), t.comm(ai, aj)),
            ];
            words.iter().all(|&(u, v)| {
                t.element_order(u) == t.element_order(v)
                    && self.class_size[u as usize] == self.class_size[v as usize]
            })
        })
    }

    fn orbit(&self, level: usize) -> FixedBitSet {
        let t = self.g.table();
        let gens: Vec<&Automorphism> = self.found[level..].iter().flatten().collect();
        let start = self.tuple()[level];
        let mut seen = FixedBitSet::with_capacity(t.len());
        seen.insert(start as usize);
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for a in &gens {
                let y = a.apply(x);
                if !seen.contains(y as usize) {
                    seen.insert(y as usize);
                    queue.push(y);
                }
            }
        }
        seen
    }

    fn find_any(&self, images: &mut Vec<u32>) -> Option<Automorphism> {
        let k = self.tuple().len();
        if images.len() == k {
            return self.ext.extend(images);
        }
        let level = images.len();
        for &c in &self.candidates[level] {
            images.push(c);
            if self.consistent(images) {
                if let Some(a) = self.find_any(images) {
                    images.pop();
                    return Some(a);
                }
            }
            images.pop();
        }
        None
    }

    fn search_level(&mut self, level: usize) {
        let k = self.tuple().len();
        if level == k {
            return;
        }
        self.search_level(level + 1);
        let mut orbit = self.orbit(level);
        let cands = self.candidates[level].clone();
        for c in cands {
            if orbit.contains(c as usize) {
                continue;
            }
            let mut images: Vec<u32> = self.tuple()[..level].to_vec();
            images.push(c);
            if !self.consistent(&images) {
                continue;
            }
            if let Some(a) = self.find_any(&mut images) {
                self.found[level].push(a);
                orbit = self.orbit(level);
            }
        }
    }
}

/// Generators and order of `Aut(G)`. Groups larger than `budget` are refused
/// with an incomplete status.
pub fn automorphism_generators(g: &Subgroup, budget: u128) -> AutGenerators {
    if g.order() as u128 > budget {
        return AutGenerators {
            automorphisms: Vec::new(),
            order: 0,
            status: AutStatus::Incomplete(format!(
                "group order {} exceeds automorphism budget {budget}",
                g.order()
            )),
            tuple: Vec::new(),
        };
    }
    let t = g.table();
    let class_size = class_sizes(g, u128::MAX).expect("no budget");
    let fingerprint: Vec<(u32, usize)> = (0..t.len() as u32)
        .map(|x| (t.element_order(x), class_size[x as usize]))
        .collect();
    let tuple = generating_tuple(g, &fingerprint);
    let candidates: Vec<Vec<u32>> = tuple
        .iter()
        .map(|&s| g.elements().filter(|&y| fingerprint[y as usize] == fingerprint[s as usize]).collect())
        .collect();
    let k = tuple.len();
    let mut search = Search {
        g,
        ext: Extender::new(g, tuple.clone()),
        candidates,
        class_size,
        found: vec![Vec::new(); k],
    };
    search.search_level(0);
    let order = (0..k)
        .map(|level| search.orbit(level).count_ones(..) as u128)
        .product();
    AutGenerators {
        automorphisms: search.found.into_iter().flatten().collect(),
        order,
        status: AutStatus::Complete,
        tuple,
    }
}

/// Outcome of a characteristic-subgroup test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Characteristic {
    Yes,
    No,
    /// The automorphisms are not available.
    Unknown(String),
}

/// Whether `n` (normal in `g`) is fixed by every automorphism in `auts`.
pub fn is_characteristic(g: &Subgroup, n: &Subgroup, auts: &AutGenerators) -> Characteristic {
    debug_assert!(n.is_subgroup_of(g));
    if let AutStatus::Incomplete(reason) = &auts.status {
        return Characteristic::Unknown(reason.clone());
    }
    let fixed = auts
        .automorphisms
        .iter()
        .all(|a| n.generators().iter().all(|&x| n.contains(a.apply(x))));
    if fixed {
        Characteristic::Yes
    } else {
        Characteristic::No
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{normal_subgroups, ElementTable};
    use crate::perm::{Group, Permutation};

    fn whole(n: usize, gens: &[&str]) -> Subgroup {
        let g = Group::new(n, gens.iter().map(|s| Permutation::parse_cycles(n, s).unwrap()).collect()).unwrap();
        ElementTable::new(&g, 100_000).unwrap().whole()
    }

    /// Counts automorphisms by trying every image tuple, with no pruning.
    fn exhaustive_aut_order(g: &Subgroup) -> u128 {
        let tuple: Vec<u32> = {
            let mut h = g.table().trivial();
            let mut v = Vec::new();
            for x in g.elements() {
                if !h.contains(x) {
                    h = h.adjoin(&[x]);
                    v.push(x);
                }
            }
            v
        };
        let ext = Extender::new(g, tuple.clone());
        let elems: Vec<u32> = g.elements().collect();
        let k = tuple.len();
        let mut count = 0u128;
        let mut idx = vec![0usize; k];
        'outer: loop {
            let images: Vec<u32> = idx.iter().map(|&i| elems[i]).collect();
            if ext.extend(&images).is_some() {
                count += 1;
            }
            let mut p = k;
            loop {
                if p == 0 {
                    break 'outer;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < elems.len() {
                    break;
                }
                idx[p] = 0;
            }
        }
        count.max(1)
    }

    #[test]
    fn small_automorphism_groups() {
        let klein = whole(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let c6 = whole(6, &["(1 2 3 4 5 6)"]);
        let s4 = whole(4, &["(1 2)", "(1 2 3 4)"]);
        for (g, expect) in [(&klein, 6u128), (&c6, 2), (&s4, 24)] {
            let auts = automorphism_generators(g, 500);
            assert!(auts.is_complete());
            assert_eq!(auts.order, expect);
            assert_eq!(exhaustive_aut_order(g), expect);
            let sample: Vec<u32> = g.elements().collect();
            for a in &auts.automorphisms {
                assert!(a.preserves_products(g, &sample));
            }
        }
    }

    #[test]
    fn pruned_search_agrees_with_exhaustive_search_up_to_order_48() {
        let groups = [
            whole(3, &["(1 2)", "(1 2 3)"]),
            whole(8, &["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"]),
            whole(4, &["(1 2 3 4)", "(1 3)"]),
            whole(6, &["(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)"]),
            whole(7, &["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]),
            whole(6, &["(1 2)", "(3 4)", "(5 6)"]),
        ];
        for g in &groups {
            assert!(g.order() <= 48);
            assert_eq!(automorphism_generators(g, 500).order, exhaustive_aut_order(g), "{:?}", g);
        }
    }

    #[test]
    fn characteristic_tests() {
        let s4 = whole(4, &["(1 2)", "(1 2 3 4)"]);
        let auts = automorphism_generators(&s4, 500);
        let ns = normal_subgroups(&s4, 1000).unwrap();
        for n in &ns.subgroups {
            assert_eq!(is_characteristic(&s4, n, &auts), Characteristic::Yes);
        }
        let klein = whole(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let kauts = automorphism_generators(&klein, 500);
        let c2 = klein
            .table()
            .closure_of_perms(&[Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap()])
            .unwrap();
        assert_eq!(is_characteristic(&klein, &c2, &kauts), Characteristic::No);
        let refused = automorphism_generators(&s4, 10);
        assert!(matches!(is_characteristic(&s4, &s4, &refused), Characteristic::Unknown(_)));
    }

    #[test]
    fn alternating_group_of_degree_five() {
        let a5 = whole(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let auts = automorphism_generators(&a5, 500);
        assert_eq!(auts.order, 120);
        assert!(auts.order < (a5.order() as u128).pow(2));
    }
}
