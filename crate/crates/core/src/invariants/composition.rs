use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;

use crate::algebra::{bits_key, conjugacy_classes, join, normal_closure_of, normal_subgroups, quotient, Subgroup};
use crate::error::Result;
use crate::invariants::arith::{exact_log, factorize};
use crate::invariants::structure::{is_simple, is_soluble};

/// One composition factor, with the evidence that it is simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionFactor {
    pub order: u128,
    pub abelian: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionData {
    /// Factors from the bottom of the series upwards.
    pub factors: Vec<CompositionFactor>,
}

impl CompositionData {
    pub fn factor_orders(&self) -> Vec<u128> {
        self.factors.iter().map(|f| f.order).collect()
    }

    pub fn sorted_orders(&self) -> Vec<u128> {
        let mut v = self.factor_orders();
        v.sort_unstable();
        v
    }

    pub fn nonabelian_count(&self) -> usize {
        self.factors.iter().filter(|f| !f.abelian).count()
    }

    pub fn count_divisible_by(&self, n: u128) -> usize {
        self.factors.iter().filter(|f| f.order % n == 0).count()
    }
}

/// Which minimal normal subgroup to refine by when there is a choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    First,
    Last,
}

/// Minimal normal subgroups: the minimal normal closures of single classes,
/// sorted by order and element set.
pub fn minimal_normal_subgroups(g: &Subgroup, budget: u128) -> Result<Vec<Subgroup>> {
    let id = g.table().identity();
    let mut atoms: BTreeMap<(usize, Vec<u32>), Subgroup> = BTreeMap::new();
    for c in conjugacy_classes(g, budget)? {
        if c.representative != id {
            let n = normal_closure_of(g, &[c.representative]);
            atoms.entry((n.order(), bits_key(&n))).or_insert(n);
        }
    }
    let atoms: Vec<Subgroup> = atoms.into_values().collect();
    Ok(atoms
        .iter()
        .filter(|n| !atoms.iter().any(|m| m.order() < n.order() && m.is_subgroup_of(n)))
        .cloned()
        .collect())
}

pub fn composition_factors(g: &Subgroup, budget: u128) -> Result<CompositionData> {
    composition_factors_with(g, TieBreak::First, budget)
}

/// Composition factors by repeatedly splitting off a minimal normal subgroup
/// `M`. Abelian `M` has order `p^k` and contributes `k` factors of order `p`;
/// otherwise `M ≅ T^k` for a simple minimal normal subgroup `T` of `M`.
pub fn composition_factors_with(g: &Subgroup, tie: TieBreak, budget: u128) -> Result<CompositionData> {
    let mut factors = Vec::new();
    let mut current = g.clone();
    while !current.is_trivial() {
        let mins = minimal_normal_subgroups(&current, budget)?;
        let m = match tie {
            TieBreak::First => mins.first(),
            TieBreak::Last => mins.last(),
        }
        .expect("non-trivial group has a minimal normal subgroup")
        .clone();
        if is_soluble(&m) {
            let (p, k) = factorize(m.order() as u128)[0];
            for _ in 0..k {
                factors.push(CompositionFactor {
                    order: p as u128,
                    abelian: true,
                    witness: format!("prime order {p}"),
                });
            }
        } else {
            let t = minimal_normal_subgroups(&m, budget)?.swap_remove(0);
            debug_assert!(is_simple(&t, budget)?);
            let k = exact_log(m.order() as u128, t.order() as u64).expect("minimal normal subgroup is T^k");
            let classes = conjugacy_classes(&t, budget)?.len();
            for _ in 0..k {
                factors.push(CompositionFactor {
                    order: t.order() as u128,
                    abelian: false,
                    witness: format!("each of {} non-identity classes normally generates the factor", classes - 1),
                });
            }
        }
        if m.order() == current.order() {
            break;
        }
        current = quotient(&current, &m, budget)?.whole();
    }
    Ok(CompositionData { factors })
}

/// The non-abelian simple subnormal subgroups of a group.
#[derive(Clone, Debug)]
pub struct SimpleSubnormals {
    /// Sorted by element set.
    pub members: Vec<Subgroup>,
}

impl SimpleSubnormals {
    /// Members whose order is divisible by every prime in `pi`.
    pub fn comp_pi(&self, pi: &[u64]) -> Vec<Subgroup> {
        self.members
            .iter()
            .filter(|q| pi.iter().all(|&p| (q.order() as u64).is_multiple_of(p)))
            .cloned()
            .collect()
    }

    /// `E_π`, the subgroup generated by [`Self::comp_pi`].
    pub fn e_pi(&self, g: &Subgroup, pi: &[u64]) -> Subgroup {
        self.comp_pi(pi)
            .iter()
            .fold(g.table().trivial(), |e, q| join(&e, q))
    }
}

/// Whether `parts` generate their internal direct product: pairwise trivial
/// intersections and join order equal to the product of orders.
pub fn is_internal_direct_product(g: &Subgroup, parts: &[Subgroup]) -> bool {
    let pairwise = parts.iter().enumerate().all(|(i, a)| {
        parts[i + 1..].iter().all(|b| {
            let mut bits = a.bits().clone();
            bits.intersect_with(b.bits());
            bits.count_ones(..) == 1
        })
    });
    let joined = parts.iter().fold(g.table().trivial(), |e, q| join(&e, q));
    let product: u128 = parts.iter().map(|q| q.order() as u128).product();
    pairwise && joined.order() as u128 == product
}

/// Every non-abelian simple subnormal subgroup of `g`. A subnormal subgroup
/// of `H` is subnormal in some maximal normal subgroup of `H`, so the search
/// recurses through maximal normal subgroups, memoized by element set.
pub fn simple_subnormals(g: &Subgroup, budget: u128) -> Result<SimpleSubnormals> {
    let mut memo: HashMap<FixedBitSet, Vec<Subgroup>> = HashMap::new();
    let mut found: BTreeMap<Vec<u32>, Subgroup> = BTreeMap::new();
    for q in simple_below(g, budget, &mut memo)? {
        found.entry(bits_key(&q)).or_insert(q);
    }
    Ok(SimpleSubnormals {
        members: found.into_values().collect(),
    })
}

fn simple_below(h: &Subgroup, budget: u128, memo: &mut HashMap<FixedBitSet, Vec<Subgroup>>) -> Result<Vec<Subgroup>> {
    if h.order() < 60 || is_soluble(h) {
        return Ok(Vec::new());
    }
    if let Some(v) = memo.get(h.bits()) {
        return Ok(v.clone());
    }
    let ns = normal_subgroups(h, budget)?;
    let out = if ns.len() == 2 {
        vec![h.clone()]
    } else {
        let proper = &ns.subgroups[..ns.len() - 1];
        let maximal: Vec<&Subgroup> = proper
            .iter()
            .filter(|n| !proper.iter().any(|m| m.order() > n.order() && n.is_subgroup_of(m)))
            .collect();
        let mut acc: BTreeMap<Vec<u32>, Subgroup> = BTreeMap::new();
        for n in maximal {
            for q in simple_below(n, budget, memo)? {
                acc.entry(bits_key(&q)).or_insert(q);
            }
        }
        acc.into_values().collect()
    };
    memo.insert(h.bits().clone(), out.clone());
    Ok(out)
}
