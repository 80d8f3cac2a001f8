use crate::algebra::{
    conjugacy_classes, core, derived_series, join, nilpotent_residual, normal_closure, normal_closure_of,
    normal_subgroups, subgroup_lattice, LatticeBudget, Subgroup,
};
use crate::error::{check_budget, Result};
use crate::invariants::arith::{is_pi_number, prime_divisors};
use crate::invariants::sylow::{pgroup_frattini, sylow_subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructurePredicates {
    pub nilpotent: bool,
    pub soluble: bool,
    pub simple: bool,
}

/// Nilpotent when every Sylow subgroup is normal.
pub fn is_nilpotent(g: &Subgroup) -> bool {
    prime_divisors(g.order() as u128).into_iter().all(|p| {
        let s = sylow_subgroup(g, p);
        s.is_normalized_by(g)
    })
}

pub fn is_soluble(g: &Subgroup) -> bool {
    derived_series(g).last().expect("non-empty").is_trivial()
}

/// Simple when `|G| > 1` and every non-identity class has normal closure `G`.
pub fn is_simple(g: &Subgroup, budget: u128) -> Result<bool> {
    if g.is_trivial() {
        return Ok(false);
    }
    let id = g.table().identity();
    Ok(conjugacy_classes(g, budget)?
        .iter()
        .filter(|c| c.representative != id)
        .all(|c| normal_closure_of(g, &[c.representative]).order() == g.order()))
}

pub fn structure_predicates(g: &Subgroup, budget: u128) -> Result<StructurePredicates> {
    Ok(StructurePredicates {
        nilpotent: is_nilpotent(g),
        soluble: is_soluble(g),
        simple: is_simple(g, budget)?,
    })
}

/// `O^π(G)`: the normal closure of the Sylow `q`-subgroups for `q ∉ π`.
pub fn o_upper_pi(g: &Subgroup, pi: &[u64]) -> Subgroup {
    let mut n = g.table().trivial();
    for q in prime_divisors(g.order() as u128) {
        if !pi.contains(&q) {
            n = join(&n, &normal_closure(g, &sylow_subgroup(g, q)));
        }
    }
    debug_assert!(is_pi_number((g.order() / n.order()) as u128, pi));
    n
}

/// `O_p(G)`, the core of a Sylow `p`-subgroup.
pub fn o_p_core(g: &Subgroup, p: u64) -> Subgroup {
    core(g, &sylow_subgroup(g, p))
}

/// `O_π(G)`, the largest normal `π`-subgroup, found among all normal
/// subgroups.
pub fn o_pi_core(g: &Subgroup, pi: &[u64], budget: u128) -> Result<Subgroup> {
    let ns = normal_subgroups(g, budget)?;
    Ok(ns
        .subgroups
        .iter()
        .rev()
        .find(|n| is_pi_number(n.order() as u128, pi))
        .expect("trivial subgroup is a π-subgroup")
        .clone())
}

/// `F(G)`, the join of the `O_p(G)`.
pub fn fitting(g: &Subgroup) -> Subgroup {
    prime_divisors(g.order() as u128)
        .into_iter()
        .fold(g.table().trivial(), |f, p| join(&f, &o_p_core(g, p)))
}

/// `Φ(G)`. Nilpotent groups use the product of the Sylow Frattini
/// subgroups; otherwise the maximal subgroups come from the full lattice.
pub fn frattini(g: &Subgroup, budget: &LatticeBudget) -> Result<Subgroup> {
    if is_nilpotent(g) {
        let mut phi = g.table().trivial();
        for p in prime_divisors(g.order() as u128) {
            phi = join(&phi, &pgroup_frattini(&sylow_subgroup(g, p), p)?);
        }
        return Ok(phi);
    }
    check_budget("Frattini lattice order", g.order() as u128, budget.max_order as u128)?;
    Ok(subgroup_lattice(g, budget)?.frattini())
}

/// Whether `G/N` is nilpotent, for `N` normal in `G`.
pub fn quotient_is_nilpotent(g: &Subgroup, n: &Subgroup) -> bool {
    nilpotent_residual(g).is_subgroup_of(n)
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

    #[test]
    fn predicates() {
        let s4 = whole(4, &["(1 2)", "(1 2 3 4)"]);
        let a5 = whole(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let q8 = whole(8, &["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"]);
        let sp = |g| structure_predicates(g, 5000).unwrap();
        assert_eq!(sp(&s4), StructurePredicates { nilpotent: false, soluble: true, simple: false });
        assert_eq!(sp(&a5), StructurePredicates { nilpotent: false, soluble: false, simple: true });
        assert!(sp(&q8).nilpotent);
        for g in [&s4, &a5, &q8] {
            assert_eq!(is_nilpotent(g), nilpotent_residual(g).is_trivial());
            assert_eq!(is_nilpotent(g), fitting(g) == *g);
        }
    }

    #[test]
    fn pi_radicals() {
        let s4 = whole(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(o_upper_pi(&s4, &[2]).order(), 12);
        assert_eq!(o_upper_pi(&s4, &[3]).order(), 24);
        assert!(o_upper_pi(&s4, &[2, 3]).is_trivial());
        assert_eq!(o_p_core(&s4, 2).order(), 4);
        assert!(o_p_core(&s4, 3).is_trivial());
        assert_eq!(o_pi_core(&s4, &[2], 5000).unwrap().order(), 4);
        let q8 = whole(8, &["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"]);
        assert_eq!(o_p_core(&q8, 2).order(), 8);
    }

    #[test]
    fn fitting_and_frattini() {
        let s4 = whole(4, &["(1 2)", "(1 2 3 4)"]);
        let s3 = whole(3, &["(1 2)", "(1 2 3)"]);
        let q8 = whole(8, &["(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"]);
        let c4 = whole(4, &["(1 2 3 4)"]);
        let lb = LatticeBudget::default();
        assert_eq!(fitting(&s4).order(), 4);
        assert_eq!(fitting(&s3).order(), 3);
        assert!(frattini(&s4, &lb).unwrap().is_trivial());
        assert_eq!(frattini(&q8, &lb).unwrap().order(), 2);
        assert_eq!(frattini(&c4, &lb).unwrap().order(), 2);
        // the nilpotent shortcut agrees with the lattice
        for g in [&q8, &c4] {
            assert_eq!(frattini(g, &lb).unwrap(), subgroup_lattice(g, &lb).unwrap().frattini());
        }
        for g in [&s4, &s3, &q8, &c4] {
            assert!(frattini(g, &lb).unwrap().is_subgroup_of(&fitting(g)));
        }
    }

    #[test]
    fn nilpotent_quotients() {
        let s4 = whole(4, &["(1 2)", "(1 2 3 4)"]);
        let ns = normal_subgroups(&s4, 5000).unwrap();
        let orders: Vec<(usize, bool)> =
            ns.subgroups.iter().map(|n| (n.order(), quotient_is_nilpotent(&s4, n))).collect();
        assert_eq!(orders, vec![(1, false), (4, false), (12, true), (24, true)]);
    }
}
