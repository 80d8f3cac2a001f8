//! Brute-force oracles for the permutation-group and linear-group bounds.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use serde_json::json;

use crate::algebra::{centralizer, conjugacy_classes, normalizer, subgroup_lattice, ElementTable, LatticeBudget, Subgroup};
use crate::error::{check_budget, Result};
use crate::invariants::{is_nilpotent, p_part, sylow_subgroup};
use crate::perm::{Group, Permutation};
use crate::verify::bounds::{constants, wolf_max_order};
use crate::verify::record::CheckRecord;

/// Largest degree the nilpotent-subgroup oracle accepts.
pub const VDOVIN_MAX_DEGREE: usize = 8;

/// Largest degree for the exhaustive subgroup-lattice method.
pub const VDOVIN_EXHAUSTIVE_DEGREE: usize = 6;

pub fn symmetric_group(n: usize) -> Group {
    let gens = if n < 2 {
        vec![Permutation::identity(n.max(1))]
    } else {
        let mut cycle: Vec<u32> = (1..n as u32).collect();
        cycle.push(0);
        let mut swap: Vec<u32> = (0..n as u32).collect();
        swap.swap(0, 1);
        vec![
            Permutation::from_images(swap).expect("transposition"),
            Permutation::from_images(cycle).expect("n-cycle"),
        ]
    };
    Group::new(n.max(1), gens).expect("valid generators").with_name(format!("sym({n})"))
}

/// Order of the largest nilpotent subgroup of `Sym(n)` predicted by
/// Vdovin's description.
pub fn vdovin_prediction(n: usize) -> u128 {
    let two_part = |m: usize| p_part((1..=m as u128).product(), 2);
    if n >= 3 && n % 4 == 3 {
        two_part(n - 3) * 3
    } else {
        two_part(n)
    }
}

/// Largest nilpotent subgroup order over the full subgroup lattice.
pub fn max_nilpotent_exhaustive(g: &Subgroup) -> Result<(usize, Subgroup)> {
    let lat = subgroup_lattice(g, &LatticeBudget { max_subgroups: 20_000, max_order: 5_000 })?;
    let best = lat
        .subgroups
        .iter()
        .filter(|h| is_nilpotent(h))
        .max_by_key(|h| h.order())
        .expect("trivial subgroup is nilpotent")
        .clone();
    Ok((best.order(), best))
}

/// Largest nilpotent subgroup order as `max |Q| · |C(Q)|_2` over odd-order
/// nilpotent `Q`: a nilpotent group is its odd part times a 2-group that
/// centralizes it. Odd nilpotent subgroups are reached from a class
/// representative by repeatedly adjoining odd elements of the normalizer.
/// Every subgroup of a nilpotent group is subnormal, so this reaches every
/// odd nilpotent subgroup up to conjugacy.
pub fn max_nilpotent_by_odd_part(g: &Subgroup) -> Result<(usize, Subgroup, Subgroup)> {
    let t = g.table();
    let odd = |x: u32| t.element_order(x) % 2 == 1;
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut frontier: Vec<Subgroup> = vec![t.trivial()];
    for c in conjugacy_classes(g, u128::MAX)? {
        if c.representative != t.identity() && odd(c.representative) {
            frontier.push(t.closure(&[c.representative]));
        }
    }
    let mut best: Option<(usize, Subgroup, Subgroup)> = None;
    while let Some(q) = frontier.pop() {
        if !seen.insert(q.bits().clone()) {
            continue;
        }
        let two = sylow_subgroup(&centralizer(g, &q), 2);
        let value = q.order() * two.order();
        if best.as_ref().is_none_or(|b| value > b.0) {
            best = Some((value, q.clone(), two));
        }
        // the class representatives already cover the cyclic subgroups up
        // to conjugacy
        if q.is_trivial() {
            continue;
        }
        let n = normalizer(g, &q);
        for y in n.elements() {
            if odd(y) && !q.contains(y) {
                let next = q.adjoin(&[y]);
                if !seen.contains(next.bits()) && is_nilpotent(&next) {
                    frontier.push(next);
                }
            }
        }
    }
    Ok(best.expect("trivial subgroup visited"))
}

/// Largest nilpotent subgroup of `Sym(n)` compared with the structural
/// description and with `2^n`.
pub fn vdovin_check(n: usize) -> CheckRecord {
    let check = format!("vdovin({n})");
    if n > VDOVIN_MAX_DEGREE || n == 0 {
        return CheckRecord::skipped(
            "global",
            &check,
            format!("oracle budget: degree must be between 1 and {VDOVIN_MAX_DEGREE}"),
            json!({"n": n}),
        );
    }
    let result = (|| -> Result<CheckRecord> {
        let sym = symmetric_group(n);
        check_budget("symmetric group", sym.order(), 50_000)?;
        let table = ElementTable::new(&sym, 50_000)?;
        let g = table.whole();
        let (order, q, two) = max_nilpotent_by_odd_part(&g)?;
        let predicted = vdovin_prediction(n);
        let mut detail = json!({
            "n": n,
            "max_nilpotent_order": order,
            "predicted": predicted.to_string(),
            "odd_part": q.order(),
            "two_part": two.order(),
            "method": "odd part times centralizer 2-part",
        });
        let mut ok = order as u128 == predicted && (order as u128) <= 1u128 << n;
        // the odd part is trivial, or a single 3-cycle when n ≡ 3 mod 4
        let structure = if n >= 3 && n % 4 == 3 {
            q.order() == 3
                && q.generator_perms().iter().all(|x| x.cycles().len() == 1 && x.cycles()[0].len() == 3)
                && two.order() as u128 == p_part((1..=(n - 3) as u128).product(), 2)
        } else {
            q.is_trivial() && two.order() as u128 == p_part((1..=n as u128).product(), 2)
        };
        ok &= structure;
        detail["structure_matches"] = json!(structure);
        if n <= VDOVIN_EXHAUSTIVE_DEGREE {
            let (exhaustive, _) = max_nilpotent_exhaustive(&g)?;
            detail["exhaustive"] = json!(exhaustive);
            ok &= exhaustive == order;
        }
        Ok(CheckRecord::verdict("global", &check, ok, detail))
    })();
    result.unwrap_or_else(|e| CheckRecord::from_error("global", &check, &e))
}

/// Largest nilpotent `p′`-subgroup of a linear group given as a permutation
/// group, by scanning its subgroup lattice.
pub fn max_nilpotent_p_prime(g: &Group, p: u64, budget: &LatticeBudget) -> Result<usize> {
    let table = ElementTable::new(g, budget.max_order as u128)?;
    let lat = subgroup_lattice(&table.whole(), budget)?;
    Ok(lat
        .subgroups
        .iter()
        .filter(|h| !(h.order() as u64).is_multiple_of(p) && is_nilpotent(h))
        .map(Subgroup::order)
        .max()
        .unwrap_or(1))
}

/// The equality case of the nilpotent linear group bound in `GL(2,3)`, and
/// the trivial case `GL(1,2)`.
pub fn wolf_check(gl23: &Group, budget: &LatticeBudget) -> CheckRecord {
    let result = (|| -> Result<CheckRecord> {
        let best = max_nilpotent_p_prime(gl23, 3, budget)?;
        let slope = constants().wolf_slope;
        let lhs = ((2 * best) as f64).ln() / 3f64.ln();
        let rhs = 2.0 * slope;
        let equality = (lhs - rhs).abs() <= 1e-9;
        let admitted = wolf_max_order(2, 1, 3).expect("finite");
        let gl12 = wolf_max_order(1, 1, 2).expect("finite");
        let ok = equality && best as u128 <= admitted && (1..2).contains(&gl12);
        Ok(CheckRecord::verdict(
            "global",
            "wolf",
            ok,
            json!({
                "group_order": gl23.order().to_string(),
                "max_nilpotent_3prime_order": best,
                "log3_of_twice_order": lhs,
                "bound": rhs,
                "bound_max_order": admitted.to_string(),
                "gl12_bound_max_order": gl12.to_string(),
            }),
        ))
    })();
    result.unwrap_or_else(|e| CheckRecord::from_error("global", "wolf", &e))
}
