use std::collections::BTreeMap;

use crate::algebra::{derived_subgroup, join, verbal_subgroup, Subgroup, Verbal};
use crate::error::{check_budget, Error, Result};
use crate::invariants::arith::{exact_log, p_part, prime_divisors};
use crate::par;

/// A Sylow `p`-subgroup of `g`, grown one factor of `p` at a time: at each
/// step the first element `x ∉ P` (in table order) with `x^p ∈ P` that
/// normalizes `P` is adjoined.
pub fn sylow_subgroup(g: &Subgroup, p: u64) -> Subgroup {
    let t = g.table();
    let target = p_part(g.order() as u128, p) as usize;
    let mut s = t.trivial();
    while s.order() < target {
        let x = g
            .elements()
            .find(|&x| {
                !s.contains(x)
                    && s.contains(t.pow(x, p))
                    && s.generators().iter().all(|&y| s.contains(t.conj(y, x)))
            })
            .expect("a p-element normalizing a non-Sylow p-subgroup exists");
        s = s.adjoin(&[x]);
    }
    s
}

/// `Φ(S) = S'S^p` for a `p`-group `S`.
pub fn pgroup_frattini(s: &Subgroup, p: u64) -> Result<Subgroup> {
    let powers = verbal_subgroup(s, Verbal::PPower(p))?;
    Ok(join(&derived_subgroup(s), &powers))
}

/// Sylow subgroups, their Frattini subgroups and the generator-count
/// invariants derived from them.
#[derive(Clone, Debug)]
pub struct InvariantProfile {
    pub order: u128,
    pub d_p: BTreeMap<u64, u32>,
    pub d_sigma: u32,
    pub d_max: u32,
    pub p_max: u64,
    pub sylow: BTreeMap<u64, Subgroup>,
    pub frattini_of_sylow: BTreeMap<u64, Subgroup>,
}

impl InvariantProfile {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.d_p.keys().copied()
    }

    /// `d_p`, zero for primes not dividing the order.
    pub fn d(&self, p: u64) -> u32 {
        self.d_p.get(&p).copied().unwrap_or(0)
    }
}

pub fn invariant_profile(g: &Subgroup) -> InvariantProfile {
    let order = g.order() as u128;
    let primes = prime_divisors(order);
    let per_prime = par::map(&primes, |&p| {
        let s = sylow_subgroup(g, p);
        let phi = pgroup_frattini(&s, p).expect("Sylow subgroup is a p-group");
        let d = exact_log((s.order() / phi.order()) as u128, p).expect("index of Φ(S) is a power of p");
        (p, s, phi, d)
    });
    let mut profile = InvariantProfile {
        order,
        d_p: BTreeMap::new(),
        d_sigma: 0,
        d_max: 0,
        p_max: primes.last().copied().unwrap_or(2),
        sylow: BTreeMap::new(),
        frattini_of_sylow: BTreeMap::new(),
    };
    for (p, s, phi, d) in per_prime {
        profile.d_p.insert(p, d);
        profile.d_sigma += d;
        profile.d_max = profile.d_max.max(d);
        profile.sylow.insert(p, s);
        profile.frattini_of_sylow.insert(p, phi);
    }
    profile
}

/// Rank of the largest elementary abelian `p`-quotient, `log_p |G : G'G^p|`,
/// a lower bound for `d(G)`.
pub fn elementary_quotient_rank(g: &Subgroup, p: u64) -> u32 {
    let t = g.table();
    let mut h = derived_subgroup(g);
    for x in g.elements() {
        let y = t.pow(x, p);
        if !h.contains(y) {
            h = h.adjoin(&[y]);
        }
    }
    exact_log((g.order() / h.order()) as u128, p).expect("elementary abelian p-quotient")
}

/// `d(G)`, the least size of a generating set.
///
/// Tuples are searched with the first entry a conjugacy-class representative
/// and the remaining entries in increasing table order, which loses nothing
/// since generation is invariant under conjugation and reordering.
pub fn min_generators(g: &Subgroup, budget: u128) -> Result<u32> {
    check_budget("minimum generating set", g.order() as u128, budget)?;
    if g.is_trivial() {
        return Ok(0);
    }
    let t = g.table();
    let n = g.order();
    let lower = prime_divisors(n as u128)
        .into_iter()
        .map(|p| elementary_quotient_rank(g, p))
        .max()
        .unwrap_or(0)
        .max(1);
    let reps: Vec<u32> = crate::algebra::conjugacy_classes(g, budget)?
        .into_iter()
        .map(|c| c.representative)
        .filter(|&r| r != t.identity())
        .collect();
    let rest: Vec<u32> = g.elements().filter(|&x| x != t.identity()).collect();
    for k in lower..=g.generators().len().max(1) as u32 {
        if k == 1 {
            if reps.iter().any(|&x| t.element_order(x) as usize == n) {
                return Ok(1);
            }
            continue;
        }
        let found = par::find_map_first(&reps, |&first| {
            let start = t.closure(&[first]);
            extend_to_generating(g, &start, &rest, 0, k - 1).then_some(())
        });
        if found.is_some() {
            return Ok(k);
        }
    }
    Err(Error::domain("no generating tuple found up to the number of given generators"))
}

fn extend_to_generating(g: &Subgroup, h: &Subgroup, rest: &[u32], from: usize, left: u32) -> bool {
    if h.order() == g.order() {
        return true;
    }
    if left == 0 {
        return false;
    }
    for (i, &x) in rest.iter().enumerate().skip(from) {
        if h.contains(x) {
            continue;
        }
        let next = h.adjoin(&[x]);
        if extend_to_generating(g, &next, rest, i + 1, left - 1) {
            return true;
        }
    }
    false
}
