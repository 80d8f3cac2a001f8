use serde_json::{json, Value};

use crate::algebra::{automorphism_generators, nilpotent_residual, quotient, AutStatus, Subgroup};
use crate::invariants::{
    composition_factors_with, digit_sum, exact_log, fitting, is_internal_direct_product, is_nilpotent, is_simple,
    min_generators, o_upper_pi, p_part, prime_divisors, quotient_is_nilpotent, structure_predicates, TieBreak,
};
use crate::verify::bounds::{example_image_bound, SatLog};
use crate::verify::context::GroupContext;
use crate::verify::record::CheckRecord;
use crate::verify::theorem_a::{conjugation_orbits, max_char_nonnilpotent_kernel, theorem_a_classify};
use crate::verify::theorem_b::theorem_b_verify;

fn map_checks(checks: &[(&'static str, bool)]) -> Value {
    Value::Object(checks.iter().map(|&(k, v)| (k.to_string(), Value::Bool(v))).collect())
}

fn all_pass(checks: &[(&'static str, bool)]) -> bool {
    checks.iter().all(|&(_, ok)| ok)
}

fn intersection_inside(n: &Subgroup, s: &Subgroup, phi: &Subgroup) -> bool {
    n.elements().filter(|&x| s.contains(x)).all(|x| phi.contains(x))
}

/// Sylow orders, Frattini indices and the basis-theorem identity
/// `d(S_p) = d_p` for Sylow subgroups of order at most 256.
pub fn profile_check(ctx: &GroupContext) -> Vec<CheckRecord> {
    let profile = ctx.profile();
    let mut checks = Vec::new();
    let mut sylow_d = serde_json::Map::new();
    for (&p, s) in &profile.sylow {
        checks.push(("sylow_order_is_p_part", s.order() as u128 == p_part(ctx.order() as u128, p)));
        let phi = &profile.frattini_of_sylow[&p];
        checks.push(("frattini_index_power_of_p", exact_log((s.order() / phi.order()) as u128, p).is_some()));
        if s.order() <= 256 {
            if let Ok(d) = min_generators(s, ctx.budgets.min_generators) {
                checks.push(("burnside_basis", d == profile.d(p)));
                sylow_d.insert(p.to_string(), json!(d));
            }
        }
    }
    checks.push(("d_sigma_is_sum", profile.d_sigma == profile.d_p.values().sum::<u32>()));
    let d_p: serde_json::Map<String, Value> = profile.d_p.iter().map(|(p, d)| (p.to_string(), json!(d))).collect();
    vec![CheckRecord::verdict(
        &ctx.name,
        "profile",
        all_pass(&checks),
        json!({
            "order": ctx.order(),
            "d_p": d_p,
            "d_sigma": profile.d_sigma,
            "d_max": profile.d_max,
            "p_max": profile.p_max,
            "sylow_generator_counts": sylow_d,
            "checks": map_checks(&checks),
        }),
    )]
}

/// Structural predicates cross-checked against one another, `Φ(G) ≤ F(G)`,
/// and composition factors under two tie-breaking rules.
pub fn structure_check(ctx: &GroupContext) -> Vec<CheckRecord> {
    let name = &ctx.name;
    let pred = match structure_predicates(&ctx.g, ctx.budgets.normal) {
        Ok(p) => p,
        Err(e) => return vec![CheckRecord::from_error(name, "structure", &e)],
    };
    let f = fitting(&ctx.g);
    let mut checks = vec![
        ("nilpotent_iff_residual_trivial", pred.nilpotent == nilpotent_residual(&ctx.g).is_trivial()),
        ("nilpotent_iff_fitting_whole", pred.nilpotent == (f.order() == ctx.order())),
        ("fitting_normal_nilpotent", f.is_normalized_by(&ctx.g) && is_nilpotent(&f)),
    ];
    let mut detail = json!({
        "nilpotent": pred.nilpotent,
        "soluble": pred.soluble,
        "simple": pred.simple,
        "fitting_order": f.order(),
    });
    let mut skipped = Vec::new();
    match ctx.frattini() {
        Ok(phi) => {
            checks.push(("frattini_in_fitting", phi.is_subgroup_of(&f)));
            detail["frattini_order"] = json!(phi.order());
        }
        Err(e) => skipped.push(format!("Frattini subgroup: {e}")),
    }
    match (ctx.composition(), composition_factors_with(&ctx.g, TieBreak::Last, ctx.budgets.normal)) {
        (Ok(a), Ok(b)) => {
            checks.push(("composition_product", a.factor_orders().iter().product::<u128>() == ctx.order() as u128));
            checks.push(("jordan_holder", a.sorted_orders() == b.sorted_orders()));
            checks.push((
                "nonabelian_factors_divisible_by_6_or_10",
                a.factors.iter().filter(|f| !f.abelian).all(|f| f.order % 6 == 0 || f.order % 10 == 0),
            ));
            checks.push(("soluble_iff_no_nonabelian_factor", pred.soluble == (a.nonabelian_count() == 0)));
            detail["composition_factors"] = json!(a.factor_orders().iter().map(u128::to_string).collect::<Vec<_>>());
        }
        (Err(e), _) | (_, Err(e)) => skipped.push(format!("composition factors: {e}")),
    }
    match ctx.simple_subnormals() {
        Ok(ss) => {
            checks.push(("components_direct_product", is_internal_direct_product(&ctx.g, &ss.members)));
            detail["components"] = json!(ss.members.iter().map(Subgroup::order).collect::<Vec<_>>());
        }
        Err(e) => skipped.push(format!("simple subnormal subgroups: {e}")),
    }
    detail["checks"] = map_checks(&checks);
    detail["skipped_parts"] = json!(skipped);
    vec![CheckRecord::verdict(name, "structure", all_pass(&checks), detail)]
}

/// For each normal `N` and prime `p` with `N ∩ S_p ≤ Φ(S_p)`, `O^p(N)` is a
/// `p′`-group; when that holds for every `p`, `N` is nilpotent. Pairs where
/// the hypothesis fails are reported as skipped.
pub fn tate_check(ctx: &GroupContext) -> Vec<CheckRecord> {
    let name = &ctx.name;
    let normals = match ctx.normals() {
        Ok(n) => n,
        Err(e) => return vec![CheckRecord::from_error(name, "tate", &e)],
    };
    let profile = ctx.profile();
    let mut out = Vec::new();
    for (i, n) in normals.subgroups.iter().enumerate() {
        let mut all = true;
        for (&p, s) in &profile.sylow {
            let phi = &profile.frattini_of_sylow[&p];
            let base = json!({"normal": i, "normal_order": n.order(), "p": p});
            if !intersection_inside(n, s, phi) {
                all = false;
                out.push(CheckRecord::skipped(name, "tate", "hypothesis fails: N ∩ S_p is not inside Φ(S_p)", base));
                continue;
            }
            let op = o_upper_pi(n, &[p]);
            let mut d = base;
            d["o_p_upper_order"] = json!(op.order());
            out.push(CheckRecord::verdict(name, "tate", !(op.order() as u64).is_multiple_of(p), d));
        }
        if all {
            let d = json!({"normal": i, "normal_order": n.order(), "p": "all", "nilpotent": is_nilpotent(n)});
            out.push(CheckRecord::verdict(name, "tate", is_nilpotent(n), d));
        }
    }
    out
}

/// `F(G/N) = F(G)/N` for every normal `N` meeting each Sylow subgroup inside
/// its Frattini subgroup.
pub fn fitting_quotient_check(ctx: &GroupContext) -> Vec<CheckRecord> {
    let name = &ctx.name;
    let normals = match ctx.normals() {
        Ok(n) => n,
        Err(e) => return vec![CheckRecord::from_error(name, "cor23", &e)],
    };
    let profile = ctx.profile();
    let f = fitting(&ctx.g);
    let mut out = Vec::new();
    for (i, n) in normals.subgroups.iter().enumerate() {
        let base = json!({"normal": i, "normal_order": n.order()});
        let admissible = profile
            .sylow
            .iter()
            .all(|(p, s)| intersection_inside(n, s, &profile.frattini_of_sylow[p]));
        if !admissible {
            out.push(CheckRecord::skipped(name, "cor23", "hypothesis fails for some prime", base));
            continue;
        }
        match quotient(&ctx.g, n, ctx.budgets.max_order) {
            Ok(q) => {
                let fq = fitting(&q.whole());
                let image = q.image(&f);
                let mut d = base;
                d["fitting_of_quotient_order"] = json!(fq.order());
                d["image_of_fitting_order"] = json!(image.order());
                out.push(CheckRecord::verdict(name, "cor23", fq == image && n.is_subgroup_of(&f), d));
            }
            Err(e) => out.push(CheckRecord::from_error(name, "cor23", &e)),
        }
    }
    out
}

pub fn theorem_a_check(ctx: &GroupContext) -> Vec<CheckRecord> {
    let name = &ctx.name;
    if is_nilpotent(&ctx.g) {
        return vec![CheckRecord::skipped(name, "thmA", "hypothesis fails: group is nilpotent", json!({}))];
    }
    match theorem_a_classify(ctx) {
        Ok(rep) => vec![CheckRecord::verdict(name, "thmA", rep.passed(), rep.detail())],
        Err(e) => vec![CheckRecord::from_error(name, "thmA", &e)],
    }
}

pub fn theorem_b_check(ctx: &GroupContext) -> Vec<CheckRecord> {
    let name = &ctx.name;
    match theorem_b_verify(ctx) {
        Ok(rep) => vec![CheckRecord::verdict(name, "thmB", rep.passed(), rep.detail())],
        Err(e) => vec![CheckRecord::from_error(name, "thmB", &e)],
    }
}

/// Orbits of each `S_p` (`p ∈ π`) on `Comp_π(G)` number at most `d_p` and
/// have `p`-power length.
pub fn comporb_check(ctx: &GroupContext, pi: &[u64]) -> Vec<CheckRecord> {
    let check = format!("comporb({})", join_primes(pi));
    let name = &ctx.name;
    let order = ctx.order() as u64;
    if !pi.iter().any(|&p| order.is_multiple_of(p)) {
        return vec![CheckRecord::skipped(name, &check, "no prime of π divides |G|", json!({}))];
    }
    let ss = match ctx.simple_subnormals() {
        Ok(s) => s,
        Err(e) => return vec![CheckRecord::from_error(name, &check, &e)],
    };
    let comp = ss.comp_pi(pi);
    let profile = ctx.profile();
    pi.iter()
        .map(|&p| {
            let sp = profile.sylow.get(&p).cloned().unwrap_or_else(|| ctx.table.trivial());
            let orbits = conjugation_orbits(&sp, &comp);
            let sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
            let powers = sizes.iter().all(|&s| exact_log(s as u128, p).is_some());
            let count_ok = orbits.len() as u32 <= profile.d(p);
            CheckRecord::verdict(
                name,
                &check,
                powers && count_ok,
                json!({
                    "p": p,
                    "comp_pi": comp.len(),
                    "orbits": orbits.len(),
                    "orbit_sizes": sizes,
                    "d_p": profile.d(p),
                    "acting_set": "Comp_π(G)",
                }),
            )
        })
        .collect()
}

/// `s_p(x) ≤ d_p` and `s_q(x) ≤ d_q` for `x = |Comp_{p,q}(G)|`.
pub fn theorem_c_check(ctx: &GroupContext, p: u64, q: u64) -> Vec<CheckRecord> {
    let check = format!("thmC({p},{q})");
    let name = &ctx.name;
    let (ss, comp) = match (ctx.simple_subnormals(), ctx.composition()) {
        (Ok(s), Ok(c)) => (s, c),
        (Err(e), _) | (_, Err(e)) => return vec![CheckRecord::from_error(name, &check, &e)],
    };
    let x = ss.comp_pi(&[p, q]).len() as u128;
    let profile = ctx.profile();
    let (sp, sq) = (digit_sum(x, p), digit_sum(x, q));
    let factors = comp.count_divisible_by(p as u128 * q as u128);
    let checks = [
        ("digit_sum_p", sp <= profile.d(p) as u128),
        ("digit_sum_q", sq <= profile.d(q) as u128),
        ("factors_at_least_x", factors as u128 >= x),
    ];
    vec![CheckRecord::verdict(
        name,
        &check,
        all_pass(&checks),
        json!({
            "x": x.to_string(),
            "s_p": sp.to_string(),
            "s_q": sq.to_string(),
            "d_p": profile.d(p),
            "d_q": profile.d(q),
            "composition_factors_divisible_by_pq": factors,
            "checks": map_checks(&checks),
        }),
    )]
}

/// Order and automorphism bounds for each non-abelian simple subnormal
/// subgroup.
pub fn simple_group_checks(ctx: &GroupContext) -> Vec<CheckRecord> {
    let name = &ctx.name;
    let ss = match ctx.simple_subnormals() {
        Ok(s) => s,
        Err(e) => return vec![CheckRecord::from_error(name, "bgp", &e)],
    };
    if ss.members.is_empty() {
        return vec![CheckRecord::skipped(name, "bgp", "no non-abelian simple subnormal subgroups", json!({}))];
    }
    ss.members
        .iter()
        .map(|q| simple_group_record(name, q, ctx.budgets.aut, ctx.budgets.normal))
        .collect()
}

pub fn simple_group_record(group: &str, q: &Subgroup, aut_budget: u128, normal_budget: u128) -> CheckRecord {
    let order = q.order() as u128;
    let k = prime_divisors(order).last().copied().unwrap_or(2);
    let bgp = SatLog::power(k, (k * k) as f64);
    let mut checks = vec![
        ("simple", is_simple(q, normal_budget).unwrap_or(false)),
        ("order_below_k_pow_k_squared", bgp.strictly_exceeds(order)),
        ("divisible_by_6_or_10", order.is_multiple_of(6) || order.is_multiple_of(10)),
    ];
    let auts = automorphism_generators(q, aut_budget);
    let mut detail = json!({"order": order.to_string(), "k": k, "bound": bgp.describe()});
    match &auts.status {
        AutStatus::Complete => {
            checks.push(("aut_below_order_squared", auts.order < order * order));
            detail["aut_order"] = json!(auts.order.to_string());
        }
        AutStatus::Incomplete(reason) => detail["aut_skipped"] = json!(reason),
    }
    detail["checks"] = map_checks(&checks);
    CheckRecord::verdict(group, "bgp", all_pass(&checks), detail)
}

/// `d(G) ≤ d_max(G) + 1`.
pub fn gl_check(ctx: &GroupContext) -> Vec<CheckRecord> {
    let name = &ctx.name;
    let d_max = ctx.profile().d_max;
    match min_generators(&ctx.g, ctx.budgets.min_generators) {
        Ok(d) => vec![CheckRecord::verdict(name, "gl", d <= d_max + 1, json!({"d": d, "d_max": d_max}))],
        Err(e) => vec![CheckRecord::from_error(name, "gl", &e)],
    }
}

/// For the semilinear example family: the generator counts and the lower
/// bound on the order of non-nilpotent images.
pub fn example_check(ctx: &GroupContext) -> Vec<CheckRecord> {
    let name = &ctx.name;
    let Some((p, e)) = ctx.example else {
        return vec![CheckRecord::skipped(name, "example", "not an instance of the example family", json!({}))];
    };
    let profile = ctx.profile();
    let bound = example_image_bound(p, e);
    let tester = match ctx.chars() {
        Ok(t) => t,
        Err(err) => return vec![CheckRecord::from_error(name, "example", &err)],
    };
    let smallest_image = tester
        .normals()
        .subgroups
        .iter()
        .filter(|n| !quotient_is_nilpotent(&ctx.g, n))
        .map(|n| ctx.order() / n.order())
        .min();
    let kernel = match max_char_nonnilpotent_kernel(tester) {
        Ok((k, _)) => k,
        Err(err) => return vec![CheckRecord::from_error(name, "example", &err)],
    };
    let image = (ctx.order() / kernel.order()) as u128;
    let checks = [
        ("d_p_is_2", profile.d(p) == 2),
        ("other_d_r_are_1", profile.d_p.iter().all(|(&r, &d)| r == p || d == 1)),
        ("max_kernel_image_bound", image >= bound),
        ("every_non_nilpotent_image_bound", smallest_image.is_some_and(|m| m as u128 >= bound)),
    ];
    vec![CheckRecord::verdict(
        name,
        "example",
        all_pass(&checks),
        json!({
            "p": p,
            "e": e,
            "image_order": image.to_string(),
            "smallest_non_nilpotent_image": smallest_image,
            "bound": bound.to_string(),
            "checks": map_checks(&checks),
        }),
    )]
}

pub fn join_primes(pi: &[u64]) -> String {
    pi.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}
