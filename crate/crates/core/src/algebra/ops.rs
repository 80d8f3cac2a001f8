use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::algebra::Subgroup;
use crate::error::{check_budget, Error, Result};
use crate::par;

/// A conjugacy class of a subgroup `G`, given by its first element in table
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: u32,
    pub size: usize,
    pub members: Vec<u32>,
}

/// Conjugacy classes of `g`, ordered by representative.
pub fn conjugacy_classes(g: &Subgroup, budget: u128) -> Result<Vec<ConjugacyClass>> {
    check_budget("conjugacy classes", g.order() as u128, budget)?;
    let t = g.table();
    let mut seen = FixedBitSet::with_capacity(t.len());
    let mut out = Vec::new();
    for x in g.elements() {
        if seen.contains(x as usize) {
            continue;
        }
        seen.insert(x as usize);
        let mut members = vec![x];
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            i += 1;
            for &s in g.generators() {
                let z = t.conj(y, s);
                if !seen.contains(z as usize) {
                    seen.insert(z as usize);
                    members.push(z);
                }
            }
        }
        members.sort_unstable();
        out.push(ConjugacyClass {
            representative: x,
            size: members.len(),
            members,
        });
    }
    Ok(out)
}

/// Class size of each element of `g` (indexed by table index; 0 outside `g`).
pub fn class_sizes(g: &Subgroup, budget: u128) -> Result<Vec<usize>> {
    let mut sizes = vec![0; g.table().len()];
    for c in conjugacy_classes(g, budget)? {
        for &m in &c.members {
            sizes[m as usize] = c.size;
        }
    }
    Ok(sizes)
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &Subgroup, s: &Subgroup) -> Subgroup {
    normal_closure_of(g, s.generators())
}

/// Normal closure in `g` of a set of elements.
pub fn normal_closure_of(g: &Subgroup, elems: &[u32]) -> Subgroup {
    let t = g.table();
    let mut h = t.trivial().adjoin(elems);
    let mut i = 0;
    while i < h.generators().len() {
        let x = h.generators()[i];
        i += 1;
        for &s in g.generators() {
            let c = t.conj(x, s);
            if !h.contains(c) {
                h = h.adjoin(&[c]);
            }
        }
    }
    h
}

pub fn is_normal(g: &Subgroup, n: &Subgroup) -> bool {
    n.is_subgroup_of(g) && n.is_normalized_by(g)
}

/// Derived subgroup `[G, G]`.
pub fn derived_subgroup(g: &Subgroup) -> Subgroup {
    let t = g.table();
    let gens = g.generators();
    let mut comms = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            comms.push(t.comm(a, b));
        }
    }
    normal_closure_of(g, &comms)
}

/// `[N, G]` for `N` normal in `G`.
pub fn commutator_with(n: &Subgroup, g: &Subgroup) -> Subgroup {
    let t = g.table();
    let mut comms = Vec::new();
    for &a in n.generators() {
        for &b in g.generators() {
            comms.push(t.comm(a, b));
        }
    }
    normal_closure_of(g, &comms)
}

/// Which verbal subgroup to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verbal {
    Derived,
    /// `⟨x^p : x ∈ G⟩` for a `p`-group `G`.
    PPower(u64),
}

pub fn verbal_subgroup(g: &Subgroup, kind: Verbal) -> Result<Subgroup> {
    match kind {
        Verbal::Derived => Ok(derived_subgroup(g)),
        Verbal::PPower(p) => {
            if !is_prime_power_of(g.order() as u64, p) {
                return Err(Error::domain(format!(
                    "p-power subgroup for p = {p} requested on a group of order {}",
                    g.order()
                )));
            }
            let t = g.table();
            let mut h = t.trivial();
            for x in g.elements() {
                let y = t.pow(x, p);
                if !h.contains(y) {
                    h = h.adjoin(&[y]);
                }
            }
            Ok(h)
        }
    }
}

/// Whether `n` is a power of `p` (including `p^0 = 1`).
pub fn is_prime_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 || p < 2 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Centralizer and normalizer of `h` in `g`, by scanning the elements of `g`.
pub fn subgroup_stabilizers(g: &Subgroup, h: &Subgroup, budget: u128) -> Result<(Subgroup, Subgroup)> {
    check_budget("centralizer/normalizer scan", g.order() as u128, budget)?;
    Ok((centralizer(g, h), normalizer(g, h)))
}

pub fn centralizer(g: &Subgroup, h: &Subgroup) -> Subgroup {
    let t = g.table();
    let mut bits = FixedBitSet::with_capacity(t.len());
    for x in g.elements() {
        if h.generators().iter().all(|&y| t.mul(x, y) == t.mul(y, x)) {
            bits.insert(x as usize);
        }
    }
    t.subgroup_from_bits(bits)
}

pub fn normalizer(g: &Subgroup, h: &Subgroup) -> Subgroup {
    let t = g.table();
    let mut bits = FixedBitSet::with_capacity(t.len());
    for x in g.elements() {
        if h.generators().iter().all(|&y| h.contains(t.conj(y, x))) {
            bits.insert(x as usize);
        }
    }
    t.subgroup_from_bits(bits)
}

pub fn center(g: &Subgroup) -> Subgroup {
    centralizer(g, g)
}

pub fn join(a: &Subgroup, b: &Subgroup) -> Subgroup {
    debug_assert!(a.same_table(b));
    if a.order() >= b.order() {
        a.adjoin(b.generators())
    } else {
        b.adjoin(a.generators())
    }
}

/// Exact intersection. Scans the smaller factor, so the budget applies to the
/// smaller order.
pub fn meet(a: &Subgroup, b: &Subgroup, budget: u128) -> Result<Subgroup> {
    debug_assert!(a.same_table(b));
    check_budget("intersection scan", a.order().min(b.order()) as u128, budget)?;
    let mut bits = a.bits().clone();
    bits.intersect_with(b.bits());
    Ok(a.table().subgroup_from_bits(bits))
}

pub fn lattice_ops(a: &Subgroup, b: &Subgroup, budget: u128) -> Result<(Subgroup, Subgroup)> {
    Ok((join(a, b), meet(a, b, budget)?))
}

/// The normal-subgroup lattice of a group.
#[derive(Clone, Debug)]
pub struct NormalSubgroups {
    /// Sorted by order, then by element set; the first entry is trivial and
    /// the last is the whole group.
    pub subgroups: Vec<Subgroup>,
    /// `minimal[i]` marks minimal non-trivial normal subgroups.
    pub minimal: Vec<bool>,
}

impl NormalSubgroups {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn minimal_normal(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups
            .iter()
            .zip(&self.minimal)
            .filter(|(_, &m)| m)
            .map(|(s, _)| s)
    }

    /// Whether no other normal subgroup in the list has the same order.
    pub fn unique_order(&self, n: &Subgroup) -> bool {
        self.subgroups.iter().filter(|s| s.order() == n.order()).count() == 1
    }

    pub fn orders(&self) -> Vec<usize> {
        self.subgroups.iter().map(|s| s.order()).collect()
    }
}

/// Every normal subgroup of `g`: joins of normal closures of conjugacy-class
/// representatives.
pub fn normal_subgroups(g: &Subgroup, budget: u128) -> Result<NormalSubgroups> {
    let classes = conjugacy_classes(g, budget)?;
    let reps: Vec<u32> = classes
        .iter()
        .map(|c| c.representative)
        .filter(|&r| r != g.table().identity())
        .collect();
    let atoms_all = par::map(&reps, |&r| normal_closure_of(g, &[r]));
    let mut atoms: Vec<Subgroup> = Vec::new();
    let mut seen_atoms = BTreeSet::new();
    for a in atoms_all {
        if seen_atoms.insert(bits_key(&a)) {
            atoms.push(a);
        }
    }
    let trivial = g.table().trivial();
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    seen.insert(bits_key(&trivial));
    let mut all = vec![trivial];
    let mut frontier: Vec<Subgroup> = Vec::new();
    for a in &atoms {
        if seen.insert(bits_key(a)) {
            all.push(a.clone());
            frontier.push(a.clone());
        }
    }
    while !frontier.is_empty() {
        let joined: Vec<Vec<Subgroup>> = par::map(&frontier, |h| {
            atoms
                .iter()
                .filter(|a| !a.is_subgroup_of(h))
                .map(|a| join(h, a))
                .collect()
        });
        let mut next = Vec::new();
        for j in joined.into_iter().flatten() {
            if seen.insert(bits_key(&j)) {
                all.push(j.clone());
                next.push(j);
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| bits_key(a).cmp(&bits_key(b))));
    let minimal = all
        .iter()
        .map(|n| {
            !n.is_trivial()
                && !all
                    .iter()
                    .any(|m| !m.is_trivial() && m.order() < n.order() && m.is_subgroup_of(n))
        })
        .collect();
    Ok(NormalSubgroups {
        subgroups: all,
        minimal,
    })
}

/// Sorted element indices; a canonical key for a subgroup within its table.
pub fn bits_key(s: &Subgroup) -> Vec<u32> {
    s.elements().collect()
}

/// Lower central series `G = γ₁ ≥ γ₂ ≥ …` until it stabilises.
pub fn lower_central_series(g: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("non-empty");
        let next = commutator_with(last, g);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// Last term of the lower central series: `G/N` is nilpotent iff `N`
/// contains it.
pub fn nilpotent_residual(g: &Subgroup) -> Subgroup {
    lower_central_series(g).pop().expect("non-empty")
}

pub fn derived_series(g: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("non-empty");
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// Core of `h` in `g`: the largest normal subgroup of `g` inside `h`.
pub fn core(g: &Subgroup, h: &Subgroup) -> Subgroup {
    let t = g.table();
    let mut c = h.clone();
    loop {
        let mut bits = c.bits().clone();
        for &s in g.generators() {
            let conj = c.conjugate(s);
            bits.intersect_with(conj.bits());
        }
        if bits.count_ones(..) == c.order() {
            return c;
        }
        c = t.subgroup_from_bits(bits);
    }
}
