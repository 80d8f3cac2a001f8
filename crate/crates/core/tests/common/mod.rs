//! Brute-force group oracles that share no algorithms with the library:
//! groups are closed element sets of plain image vectors.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use frattini_lab::algebra::Subgroup;
use frattini_lab::perm::Group;

pub type Perm = Vec<u32>;

/// `a` then `b`.
pub fn compose(a: &[u32], b: &[u32]) -> Perm {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn inverse(a: &[u32]) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u32;
    }
    out
}

pub type Set = BTreeSet<usize>;

/// Advances `idx` to the next increasing index tuple below `n`.
pub fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every element of a group, with a multiplication table when small.
pub struct Brute {
    pub elems: Vec<Perm>,
    pub index: HashMap<Perm, usize>,
    table: Option<Vec<u32>>,
    pub identity: usize,
}

pub fn primes_of(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

impl Brute {
    pub fn new(degree: usize, gens: &[Perm]) -> Brute {
        let id: Perm = (0..degree as u32).collect();
        let mut elems = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let x = compose(&elems[i], g);
                if !index.contains_key(&x) {
                    index.insert(x.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(x);
                }
            }
        }
        let n = elems.len();
        let table = (n <= 1000).then(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = index[&compose(&elems[a], &elems[b])] as u32;
                }
            }
            t
        });
        Brute { elems, index, table, identity: 0 }
    }

    pub fn of(g: &Group) -> Brute {
        let gens: Vec<Perm> = g.generators().iter().map(|p| p.images().to_vec()).collect();
        Brute::new(g.degree(), &gens)
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn all(&self) -> Set {
        (0..self.order()).collect()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&compose(&self.elems[a], &self.elems[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index[&inverse(&self.elems[a])]
    }

    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn comm(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn elem_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Index of a library subgroup's elements in this enumeration.
    pub fn set_of(&self, s: &Subgroup) -> Set {
        s.elements().map(|i| self.index[s.table().element(i).images()]).collect()
    }

    pub fn closure(&self, gens: &[usize]) -> Set {
        let mut set: Set = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn classes(&self) -> Vec<Set> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            let class: Set = (0..self.order()).map(|g| self.conj(x, g)).collect();
            for &y in &class {
                seen[y] = true;
            }
            out.push(class);
        }
        out
    }

    /// Every subgroup of `within`, as joins of cyclic subgroups.
    pub fn subgroups_of(&self, within: &Set) -> Vec<Set> {
        let mut cyclic: Vec<(usize, Set)> = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for &x in within {
            let c = self.closure(&[x]);
            if seen.insert(c.iter().copied().collect()) {
                cyclic.push((x, c));
            }
        }
        let mut subs: Vec<(Vec<usize>, Set)> = cyclic.iter().map(|(x, c)| (vec![*x], c.clone())).collect();
        let mut i = 0;
        while i < subs.len() {
            for (x, c) in &cyclic {
                if c.is_subset(&subs[i].1) {
                    continue;
                }
                let mut gens = subs[i].0.clone();
                gens.push(*x);
                let j = self.closure(&gens);
                if seen.insert(j.iter().copied().collect()) {
                    subs.push((gens, j));
                }
            }
            i += 1;
        }
        subs.into_iter().map(|(_, s)| s).collect()
    }

    pub fn subgroups(&self) -> Vec<Set> {
        self.subgroups_of(&self.all())
    }

    pub fn is_normal(&self, n: &Set) -> bool {
        n.iter().all(|&x| (0..self.order()).all(|g| n.contains(&self.conj(x, g))))
    }

    /// Subgroups that are unions of conjugacy classes.
    pub fn normal_by_classes(&self) -> Vec<Set> {
        let classes = self.classes();
        self.subgroups()
            .into_iter()
            .filter(|s| classes.iter().all(|c| c.is_subset(s) || c.is_disjoint(s)))
            .collect()
    }

    /// A finite group is nilpotent iff, for each prime, its elements of
    /// prime-power order number exactly the prime part of its order.
    pub fn is_nilpotent(&self, s: &Set) -> bool {
        primes_of(s.len()).into_iter().all(|p| {
            let count = s.iter().filter(|&&x| p_part(self.elem_order(x), p) == self.elem_order(x)).count();
            count == p_part(s.len(), p)
        })
    }

    /// A Sylow subgroup grown one `p`-element at a time.
    pub fn sylow(&self, within: &Set, p: usize) -> Set {
        let target = p_part(within.len(), p);
        let p_elems: Vec<usize> =
            within.iter().copied().filter(|&x| p_part(self.elem_order(x), p) == self.elem_order(x)).collect();
        let mut gens: Vec<usize> = Vec::new();
        let mut s = self.closure(&[]);
        while s.len() < target {
            let before = s.len();
            for &x in &p_elems {
                if s.contains(&x) {
                    continue;
                }
                let mut g = gens.clone();
                g.push(x);
                let t = self.closure(&g);
                if p_part(t.len(), p) == t.len() {
                    gens = g;
                    s = t;
                }
            }
            assert!(s.len() > before, "Sylow growth stalled");
        }
        s
    }

    /// Smallest number of elements generating `s`.
    pub fn min_generators(&self, s: &Set) -> usize {
        self.generating_tuple(s).len()
    }

    /// A shortest generating tuple of `s`, first in combination order.
    pub fn generating_tuple(&self, s: &Set) -> Vec<usize> {
        if s.len() == 1 {
            return Vec::new();
        }
        let elems: Vec<usize> = s.iter().copied().collect();
        for k in 1..=elems.len() {
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let gens: Vec<usize> = idx.iter().map(|&i| elems[i]).collect();
                if self.closure(&gens).len() == s.len() {
                    return gens;
                }
                if !next_combination(&mut idx, elems.len()) {
                    break;
                }
            }
        }
        unreachable!("the whole set generates")
    }

    /// |Aut(G)| by trying every image tuple of a shortest generating tuple.
    pub fn automorphism_count(&self) -> usize {
        let gens = self.generating_tuple(&self.all());
        let n = self.order();
        let mut images = vec![0usize; gens.len()];
        let mut count = 0;
        loop {
            if self.extends_to_automorphism(&gens, &images) {
                count += 1;
            }
            let mut i = 0;
            while i < images.len() {
                images[i] += 1;
                if images[i] < n {
                    break;
                }
                images[i] = 0;
                i += 1;
            }
            if i == images.len() {
                return count;
            }
        }
    }

    fn extends_to_automorphism(&self, gens: &[usize], images: &[usize]) -> bool {
        let mut map = vec![usize::MAX; self.order()];
        map[self.identity] = self.identity;
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for (&g, &y) in gens.iter().zip(images) {
                let (xg, fxg) = (self.mul(x, g), self.mul(map[x], y));
                if map[xg] == usize::MAX {
                    map[xg] = fxg;
                    queue.push(xg);
                } else if map[xg] != fxg {
                    return false;
                }
            }
        }
        map.iter().collect::<BTreeSet<_>>().len() == self.order()
    }

    /// Intersection of the maximal subgroups of `s`.
    pub fn frattini(&self, s: &Set) -> Set {
        let subs = self.subgroups_of(s);
        let proper: Vec<&Set> = subs.iter().filter(|h| h.len() < s.len()).collect();
        let maximal: Vec<&Set> = proper
            .iter()
            .copied()
            .filter(|h| !proper.iter().any(|k| k.len() > h.len() && h.is_subset(k)))
            .collect();
        let mut phi = s.clone();
        for m in maximal {
            phi = phi.intersection(m).copied().collect();
        }
        phi
    }

    pub fn centralizer(&self, of: &[usize]) -> Set {
        (0..self.order()).filter(|&x| of.iter().all(|&y| self.mul(x, y) == self.mul(y, x))).collect()
    }

    /// Whether `G/N` is nilpotent, by the lower central series.
    pub fn quotient_is_nilpotent(&self, n: &Set) -> bool {
        let all: Vec<usize> = (0..self.order()).collect();
        let mut gamma = self.all();
        loop {
            let gens: Vec<usize> =
                gamma.iter().flat_map(|&x| all.iter().map(move |&y| (x, y))).map(|(x, y)| self.comm(x, y)).collect();
            let gens: Vec<usize> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
            let next = self.closure(&gens);
            if next == gamma {
                return gamma.is_subset(n);
            }
            gamma = next;
        }
    }
}
