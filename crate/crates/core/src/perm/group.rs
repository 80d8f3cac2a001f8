use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{check_budget, Error, Result};
use crate::perm::{Permutation, StabilizerChain};

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and never changes afterwards.
#[derive(Clone)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    name: Option<String>,
    chain: OnceLock<StabilizerChain>,
}

impl Group {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        if generators.is_empty() {
            return Err(Error::domain("a group needs at least one generator"));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        Ok(Group {
            degree,
            generators,
            name: None,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Group::new(degree, vec![Permutation::identity(degree)]).expect("valid degree")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("group[{}]", self.degree))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain.get_or_init(|| {
            StabilizerChain::build(&self.generators, self.degree).expect("degrees validated")
        })
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: x.degree(),
            });
        }
        Ok(self.chain().contains(x))
    }

    /// Orbit of a 0-based point under the generators.
    pub fn orbit(&self, point: usize) -> Result<Orbit> {
        orbit(&self.generators, point)
    }

    /// All elements in chain order. Refuses outright when the order exceeds
    /// `budget`.
    pub fn enumerate_elements(&self, budget: u128) -> Result<impl Iterator<Item = Permutation> + '_> {
        check_budget("element enumeration", self.order(), budget)?;
        Ok(self.chain().elements())
    }

    /// Same element set (same degree, mutual containment of generators).
    pub fn same_elements(&self, other: &Group) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.generators.iter().all(|g| self.chain().contains(g))
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// An orbit with, for each orbit point, a group element carrying the start
/// point to it.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub points: Vec<usize>,
    witnesses: Vec<Option<Permutation>>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.witnesses.get(point).is_some_and(|w| w.is_some())
    }

    pub fn witness(&self, point: usize) -> Option<&Permutation> {
        self.witnesses.get(point)?.as_ref()
    }

    /// Orbit points in increasing order.
    pub fn sorted_points(&self) -> Vec<usize> {
        let mut v = self.points.clone();
        v.sort_unstable();
        v
    }
}

pub fn orbit(gens: &[Permutation], point: usize) -> Result<Orbit> {
    let degree = gens
        .first()
        .map(|g| g.degree())
        .ok_or_else(|| Error::domain("orbit needs at least one generator"))?;
    if point >= degree {
        return Err(Error::PointOutOfRange { point, degree });
    }
    let mut witnesses: Vec<Option<Permutation>> = vec![None; degree];
    witnesses[point] = Some(Permutation::identity(degree));
    let mut points = vec![point];
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.image(x);
            if witnesses[y].is_none() {
                let w = witnesses[x].as_ref().expect("visited").then(g);
                witnesses[y] = Some(w);
                points.push(y);
                queue.push_back(y);
            }
        }
    }
    Ok(Orbit { points, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn orbits_with_witnesses() {
        let g = Group::new(3, vec![p(3, "(1 2 3)")]).unwrap();
        let o = g.orbit(0).unwrap();
        assert_eq!(o.sorted_points(), vec![0, 1, 2]);
        for &x in &o.points {
            assert_eq!(o.witness(x).unwrap().image(0), x);
        }
        let h = Group::new(3, vec![p(3, "(1 2)")]).unwrap();
        assert_eq!(h.orbit(2).unwrap().sorted_points(), vec![2]);
        assert!(h.orbit(3).is_err());
    }

    #[test]
    fn membership() {
        let klein = Group::new(4, vec![p(4, "(1 2)(3 4)"), p(4, "(1 3)(2 4)")]).unwrap();
        assert!(klein.contains(&p(4, "(1 3)(2 4)")).unwrap());
        assert!(klein.contains(&Permutation::identity(4)).unwrap());
        let a4 = Group::new(4, vec![p(4, "(1 2 3)"), p(4, "(2 3 4)")]).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(!a4.contains(&p(4, "(1 2)")).unwrap());
        assert!(a4.contains(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn enumeration_respects_budget() {
        let s3 = Group::new(3, vec![p(3, "(1 2)"), p(3, "(1 2 3)")]).unwrap();
        assert_eq!(s3.enumerate_elements(6).unwrap().count(), 6);
        assert!(s3.enumerate_elements(5).is_err());
    }
}
