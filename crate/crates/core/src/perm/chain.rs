//! Deterministic Schreier–Sims.
//!
//! Levels are indexed by domain point: level `k` describes the pointwise
//! stabilizer of `0..k` and its orbit on `k`. Only levels whose orbit is
//! non-trivial are materialised, so the base is the increasing sequence of
//! points moved by the successive stabilizers (smallest moved point first).
//! Coset representatives are stored explicitly together with their inverses.

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    /// `transversal[j]` maps the level's base point to `j`.
    transversal: Vec<Option<Permutation>>,
    inverses: Vec<Option<Permutation>>,
    /// Orbit points in discovery order; the base point comes first.
    orbit: Vec<u32>,
    /// Strong generators added at this level (all fix the earlier points).
    gens: Vec<Permutation>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut transversal = vec![None; degree];
        let mut inverses = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        inverses[base] = Some(Permutation::identity(degree));
        Level {
            transversal,
            inverses,
            orbit: vec![base as u32],
            gens: Vec::new(),
        }
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Option<Level>>,
}

enum Task {
    Insert(usize, Permutation),
    Extend(usize, Permutation),
}

impl StabilizerChain {
    pub fn build(gens: &[Permutation], degree: usize) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut chain = StabilizerChain {
            degree,
            levels: vec![None; degree],
        };
        for g in gens {
            chain.run(Task::Insert(0, g.clone()));
        }
        Ok(chain)
    }

    fn run(&mut self, first: Task) {
        let mut stack = vec![first];
        while let Some(task) = stack.pop() {
            match task {
                Task::Insert(k, g) => {
                    if k >= self.degree || self.contains_from(k, &g) {
                        continue;
                    }
                    let degree = self.degree;
                    let level = self.levels[k].get_or_insert_with(|| Level::new(degree, k));
                    for &j in &level.orbit {
                        let sigma = level.transversal[j as usize].as_ref().expect("orbit rep");
                        stack.push(Task::Extend(k, sigma.then(&g)));
                    }
                    level.gens.push(g);
                }
                Task::Extend(k, g) => {
                    let level = self.levels[k].as_mut().expect("level exists");
                    let j = g.image(k);
                    match &level.inverses[j] {
                        Some(inv) => {
                            let h = g.then(inv);
                            if !h.is_identity() {
                                stack.push(Task::Insert(k + 1, h));
                            }
                        }
                        None => {
                            for tau in &level.gens {
                                stack.push(Task::Extend(k, g.then(tau)));
                            }
                            level.inverses[j] = Some(g.inverse());
                            level.transversal[j] = Some(g);
                            level.orbit.push(j as u32);
                        }
                    }
                }
            }
        }
    }

    fn contains_from(&self, start: usize, g: &Permutation) -> bool {
        let mut h = g.clone();
        for t in start..self.degree {
            let j = h.image(t);
            if j == t {
                continue;
            }
            match self.levels[t].as_ref().and_then(|l| l.inverses[j].as_ref()) {
                Some(inv) => h = h.then(inv),
                None => return false,
            }
        }
        true
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.contains_from(0, g)
    }

    /// Sifts `g`; returns the residue and the base point at which sifting
    /// stopped (`None` when the residue is the identity).
    pub fn sift(&self, g: &Permutation) -> (Permutation, Option<usize>) {
        let mut h = g.clone();
        for t in 0..self.degree {
            let j = h.image(t);
            if j == t {
                continue;
            }
            match self.levels[t].as_ref().and_then(|l| l.inverses[j].as_ref()) {
                Some(inv) => h = h.then(inv),
                None => return (h, Some(t)),
            }
        }
        (h, None)
    }

    fn active(&self) -> impl Iterator<Item = (usize, &Level)> {
        self.levels
            .iter()
            .enumerate()
            .filter_map(|(k, l)| l.as_ref().filter(|l| l.orbit.len() > 1).map(|l| (k, l)))
    }

    pub fn base(&self) -> Vec<usize> {
        self.active().map(|(k, _)| k).collect()
    }

    /// Fundamental orbits, one per base point, each starting with the base point.
    pub fn basic_orbits(&self) -> Vec<Vec<usize>> {
        self.active()
            .map(|(_, l)| l.orbit.iter().map(|&x| x as usize).collect())
            .collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels
            .iter()
            .flatten()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    pub fn order(&self) -> u128 {
        self.active().map(|(_, l)| l.orbit.len() as u128).product()
    }

    /// Coset representative at the level whose base point is `base_point`.
    pub fn transversal_element(&self, base_point: usize, point: usize) -> Option<&Permutation> {
        self.levels
            .get(base_point)?
            .as_ref()?
            .transversal
            .get(point)?
            .as_ref()
    }

    /// Every element exactly once. Elements are products
    /// `u_m ⋯ u_1` of coset representatives (deepest level first), listed
    /// lexicographically with the top level most significant and orbit points
    /// in increasing order at each level.
    pub fn elements(&self) -> ChainElements<'_> {
        let reps: Vec<Vec<&Permutation>> = self
            .active()
            .map(|(_, l)| {
                let mut pts: Vec<u32> = l.orbit.clone();
                pts.sort_unstable();
                pts.iter()
                    .map(|&p| l.transversal[p as usize].as_ref().expect("orbit rep"))
                    .collect()
            })
            .collect();
        ChainElements {
            degree: self.degree,
            counters: vec![0; reps.len()],
            reps,
            done: false,
        }
    }
}

/// Iterator returned by [`StabilizerChain::elements`].
pub struct ChainElements<'a> {
    degree: usize,
    reps: Vec<Vec<&'a Permutation>>,
    counters: Vec<usize>,
    done: bool,
}

impl Iterator for ChainElements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut g = Permutation::identity(self.degree);
        for (level, &c) in self.reps.iter().zip(&self.counters).rev() {
            g = g.then(level[c]);
        }
        // odometer, last level least significant
        let mut i = self.counters.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.counters[i] += 1;
            if self.counters[i] < self.reps[i].len() {
                break;
            }
            self.counters[i] = 0;
        }
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn symmetric_group_of_degree_four() {
        let chain = StabilizerChain::build(&[p(4, "(1 2)"), p(4, "(1 2 3 4)")], 4).unwrap();
        assert_eq!(chain.order(), 24);
        assert_eq!(chain.base(), vec![0, 1, 2]);
        for g in chain.strong_generators() {
            assert!(chain.sift(&g).0.is_identity());
        }
    }

    #[test]
    fn trivial_group() {
        let chain = StabilizerChain::build(&[Permutation::identity(3)], 3).unwrap();
        assert_eq!(chain.order(), 1);
        assert_eq!(chain.elements().count(), 1);
    }

    #[test]
    fn transversals_fix_earlier_base_points() {
        let chain = StabilizerChain::build(&[p(6, "(1 2 3 4 5 6)"), p(6, "(1 2)")], 6).unwrap();
        let base = chain.base();
        for (i, orbit) in chain.basic_orbits().iter().enumerate() {
            for &pt in orbit {
                let u = chain.transversal_element(base[i], pt).unwrap();
                assert_eq!(u.image(base[i]), pt);
                for &b in &base[..i] {
                    assert_eq!(u.image(b), b);
                }
            }
        }
    }

    #[test]
    fn enumeration_is_exhaustive_and_duplicate_free() {
        let chain = StabilizerChain::build(&[p(5, "(1 2 3)"), p(5, "(3 4 5)")], 5).unwrap();
        let elems: Vec<_> = chain.elements().collect();
        assert_eq!(elems.len() as u128, chain.order());
        let set: HashSet<_> = elems.iter().cloned().collect();
        assert_eq!(set.len(), elems.len());
        assert!(elems.iter().all(|g| chain.contains(g)));
        assert!(!chain.contains(&p(5, "(1 2)")));
    }
}
