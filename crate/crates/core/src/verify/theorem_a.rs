use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use crate::algebra::{centralizer, derived_subgroup, nilpotent_residual, normalizer, quotient, Quotient, Subgroup};
use crate::error::{Error, Result};
use crate::invariants::{
    exact_log, factorize, is_internal_direct_product, is_nilpotent, is_simple, is_soluble, minimal_normal_subgroups,
    o_pi_core, pgroup_frattini, prime_divisors, quotient_is_nilpotent, sylow_subgroup,
};
use crate::verify::bounds::{case_i_bound, complement_bound, SatLog};
use crate::verify::context::{Budgets, CharTester, GroupContext};

/// A characteristic `N` of largest order with `G/N` non-nilpotent; ties go to
/// the smallest element set. Returns the kernel and how characteristic-ness
/// was established.
pub fn max_char_nonnilpotent_kernel(tester: &CharTester) -> Result<(Subgroup, &'static str)> {
    let g = tester.group();
    let residual = nilpotent_residual(g);
    if residual.is_trivial() {
        return Err(Error::domain("group is nilpotent"));
    }
    let subs = &tester.normals().subgroups;
    let mut order: Vec<usize> = (0..subs.len()).filter(|&i| !residual.is_subgroup_of(&subs[i])).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(subs[i].order()), i));
    for i in order {
        let (is_char, how) = tester.is_characteristic(&subs[i])?;
        if is_char {
            return Ok((subs[i].clone(), how));
        }
    }
    unreachable!("the trivial subgroup qualifies")
}

/// Orbits of `actors` acting by conjugation on `items`, which must be
/// permuted among themselves. Each orbit lists item indices in increasing
/// order; orbits are ordered by their first item.
pub fn conjugation_orbits(actors: &Subgroup, items: &[Subgroup]) -> Vec<Vec<usize>> {
    let index: HashMap<&FixedBitSet, usize> = items.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect();
    let mut orbit_of = vec![usize::MAX; items.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..items.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let i = orbit[head];
            head += 1;
            for &s in actors.generators() {
                let image = items[i].conjugate(s);
                let j = *index.get(image.bits()).expect("items are permuted by conjugation");
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    orbit.push(j);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

#[derive(Clone, Debug)]
pub struct PrimeOrbits {
    pub prime: u64,
    pub count: usize,
    pub size: usize,
    pub sizes_equal: bool,
}

#[derive(Clone, Debug)]
pub enum CaseReport {
    /// `G/N = S ⋊ H` with `S` elementary abelian.
    I {
        p: u64,
        s: Subgroup,
        h: Subgroup,
        faithful: bool,
        bound: SatLog,
        complement_bound: SatLog,
    },
    /// A characteristic product of `|Ω|` simple groups.
    II {
        components: Vec<Subgroup>,
        component_order: usize,
        orbits: Vec<PrimeOrbits>,
        r_index: usize,
        centralizer_trivial: bool,
    },
}

#[derive(Clone, Debug)]
pub struct TheoremAReport {
    pub kernel: Subgroup,
    pub kernel_method: &'static str,
    pub quotient: Quotient,
    pub minimal_char: Subgroup,
    pub d_max: u32,
    pub case: CaseReport,
    /// Named assertions and whether each held.
    pub checks: Vec<(&'static str, bool)>,
}

impl TheoremAReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn case_tag(&self) -> &'static str {
        match self.case {
            CaseReport::I { .. } => "i",
            CaseReport::II { .. } => "ii",
        }
    }

    pub fn detail(&self) -> Value {
        let checks: serde_json::Map<String, Value> =
            self.checks.iter().map(|&(k, v)| (k.to_string(), Value::Bool(v))).collect();
        let mut d = json!({
            "case": self.case_tag(),
            "kernel_order": self.kernel.order(),
            "kernel_method": self.kernel_method,
            "quotient_order": self.quotient.order(),
            "minimal_characteristic_order": self.minimal_char.order(),
            "d_max": self.d_max,
            "checks": checks,
        });
        match &self.case {
            CaseReport::I { p, s, h, faithful, bound, complement_bound } => {
                d["p"] = json!(p);
                d["s_order"] = json!(s.order());
                d["h_order"] = json!(h.order());
                d["faithful"] = json!(faithful);
                d["bound"] = json!(bound.describe());
                d["complement_bound"] = json!(complement_bound.describe());
            }
            CaseReport::II { components, component_order, orbits, r_index, centralizer_trivial } => {
                d["omega"] = json!(components.len());
                d["component_order"] = json!(component_order);
                d["orbits"] = orbits
                    .iter()
                    .map(|o| json!({"p": o.prime, "count": o.count, "size": o.size}))
                    .collect();
                d["r_index"] = json!(r_index);
                d["centralizer_trivial"] = json!(centralizer_trivial);
            }
        }
        d
    }
}

/// A nilpotent complement to the normal Sylow `p`-subgroup of a soluble
/// group: Sylow subgroups for the other primes, each taken inside the
/// centralizer of those already chosen.
fn nilpotent_complement(g: &Subgroup, p: u64) -> Option<Subgroup> {
    let mut h = g.table().trivial();
    for q in prime_divisors(g.order() as u128) {
        if q == p {
            continue;
        }
        let c = centralizer(g, &h);
        let sq = sylow_subgroup(&c, q);
        if sylow_subgroup(g, q).order() != sq.order() {
            return None;
        }
        h = h.adjoin(sq.generators());
    }
    Some(h)
}

/// Classifies the largest non-nilpotent characteristic image of `G` into
/// case (i) or case (ii) and checks the structure each case asserts.
pub fn theorem_a_classify(ctx: &GroupContext) -> Result<TheoremAReport> {
    let budgets: &Budgets = &ctx.budgets;
    let tester = ctx.chars()?;
    let (kernel, kernel_method) = max_char_nonnilpotent_kernel(tester)?;
    let q = quotient(&ctx.g, &kernel, budgets.max_order)?;
    let qg = q.whole();
    let own;
    let qtester = if kernel.is_trivial() && ctx.g.is_whole() {
        tester
    } else {
        own = CharTester::new(&qg, budgets)?;
        &own
    };
    let mut minimal_char = None;
    for n in qtester.normals().subgroups.iter().filter(|n| !n.is_trivial()) {
        if qtester.is_characteristic(n)?.0 {
            minimal_char = Some(n.clone());
            break;
        }
    }
    let m = minimal_char.expect("the whole quotient is characteristic");
    let d_max = ctx.profile().d_max;
    let order = qg.order() as u128;
    let mut checks = vec![
        ("quotient_non_nilpotent", !is_nilpotent(&qg)),
        ("quotient_mod_m_nilpotent", quotient_is_nilpotent(&qg, &m)),
    ];

    let case = if is_soluble(&m) {
        let primes = factorize(m.order() as u128);
        let p = primes[0].0;
        let exponent_p = m.elements().all(|x| m.table().pow(x, p) == m.table().identity());
        let abelian = derived_subgroup(&m).is_trivial();
        checks.push(("m_elementary_abelian", primes.len() == 1 && exponent_p && abelian));
        let s = sylow_subgroup(&qg, p);
        checks.push(("s_normal", s.is_normalized_by(&qg)));
        checks.push(("frattini_of_s_trivial", pgroup_frattini(&s, p)?.is_trivial()));
        let comp = nilpotent_complement(&qg, p);
        checks.push(("complement_found", comp.is_some()));
        let h = comp.unwrap_or_else(|| qg.table().trivial());
        checks.push(("h_complements_s", h.order() * s.order() == qg.order()));
        checks.push(("h_nilpotent", is_nilpotent(&h)));
        let faithful = centralizer(&h, &s).is_trivial();
        checks.push(("h_faithful_on_s", faithful));
        let other: Vec<u64> = prime_divisors(order).into_iter().filter(|&r| r != p).collect();
        checks.push(("o_p_prime_trivial", o_pi_core(&qg, &other, budgets.normal)?.is_trivial()));
        let bound = case_i_bound(p, d_max);
        let cbound = complement_bound(p, d_max);
        checks.push(("order_bound", bound.admits(order)));
        checks.push(("complement_bound", cbound.admits(h.order() as u128)));
        CaseReport::I { p, s, h, faithful, bound, complement_bound: cbound }
    } else {
        let components = minimal_normal_subgroups(&m, budgets.normal)?;
        let component_order = components[0].order();
        checks.push(("components_equal_order", components.iter().all(|c| c.order() == component_order)));
        let mut all_simple = true;
        for c in &components {
            all_simple &= is_simple(c, budgets.normal)? && !is_soluble(c);
        }
        checks.push(("components_simple", all_simple));
        let product: u128 = components.iter().map(|c| c.order() as u128).product();
        let direct = is_internal_direct_product(&m, &components) && product == m.order() as u128;
        checks.push(("m_direct_product", direct));
        let omega = components.len();
        checks.push(("omega_at_most_d_max_squared", omega as u64 <= (d_max as u64).pow(2)));
        let mut orbits = Vec::new();
        for r in prime_divisors(component_order as u128) {
            let sr = sylow_subgroup(&qg, r);
            let orb = conjugation_orbits(&sr, &components);
            let size = orb[0].len();
            let sizes_equal = orb.iter().all(|o| o.len() == size);
            let power = exact_log(size as u128, r).is_some();
            checks.push(("orbit_sizes_equal_prime_powers", sizes_equal && power));
            checks.push(("orbit_count_at_most_d_max", orb.len() as u32 <= d_max));
            orbits.push(PrimeOrbits { prime: r, count: orb.len(), size, sizes_equal });
        }
        let mut rbits = qg.bits().clone();
        for c in &components {
            rbits.intersect_with(normalizer(&qg, c).bits());
        }
        let r = qg.table().subgroup_from_bits(rbits);
        let r_index = qg.order() / r.order();
        checks.push(("image_on_components_nilpotent", quotient_is_nilpotent(&qg, &r)));
        checks.push(("image_on_components_bound", (r_index as u128) <= 1u128 << omega.min(127)));
        let centralizer_trivial = centralizer(&qg, &m).is_trivial();
        checks.push(("centralizer_of_m_trivial", centralizer_trivial));
        CaseReport::II { components, component_order, orbits, r_index, centralizer_trivial }
    };
    Ok(TheoremAReport {
        kernel,
        kernel_method,
        quotient: q,
        minimal_char: m,
        d_max,
        case,
        checks,
    })
}
