use serde_json::{json, Value};

use crate::algebra::{join, meet, Subgroup};
use crate::error::Result;
use crate::invariants::{exact_log, frattini, invariant_profile, is_nilpotent, is_soluble, quotient_is_nilpotent};
use crate::verify::bounds::{frattini_index_bound, g_sequence, schreier_bound, SatLog};
use crate::verify::context::{CharTester, GroupContext};
use crate::verify::theorem_a::max_char_nonnilpotent_kernel;

#[derive(Clone, Debug)]
pub struct TheoremBReport {
    /// `G = G_0 > G_1 > … > G_t`.
    pub chain: Vec<Subgroup>,
    /// How each `G_{i+1}` was shown characteristic in `G_i`.
    pub chain_methods: Vec<&'static str>,
    pub t: usize,
    pub r: Vec<u32>,
    pub g_ledger: Vec<SatLog>,
    pub frattini_index: Option<u128>,
    pub bound: Option<SatLog>,
    pub soluble_case_applicable: bool,
    pub checks: Vec<(&'static str, bool)>,
    /// Parts that could not be evaluated within budget.
    pub skipped: Vec<String>,
}

impl TheoremBReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn detail(&self) -> Value {
        let checks: serde_json::Map<String, Value> =
            self.checks.iter().map(|&(k, v)| (k.to_string(), Value::Bool(v))).collect();
        json!({
            "chain_orders": self.chain.iter().map(Subgroup::order).collect::<Vec<_>>(),
            "chain_methods": self.chain_methods,
            "t": self.t,
            "r": self.r,
            "g": self.g_ledger.iter().map(|g| g.describe()).collect::<Vec<_>>(),
            "frattini_index": self.frattini_index.map(|i| i.to_string()),
            "bound": self.bound.map(|b| b.describe()),
            "bound_saturated": self.bound.is_some_and(SatLog::is_saturated),
            "soluble_case_applicable": self.soluble_case_applicable,
            "bound_base": "p_max (the statement's undefined λ read as p_max, as in the proof)",
            "checks": checks,
            "skipped_parts": self.skipped,
        })
    }
}

/// `Σ_p log_p |(H ∩ S_p)Φ(S_p) : Φ(S_p)|` against the fixed Sylow system of
/// the context.
fn r_value(ctx: &GroupContext, h: &Subgroup) -> Result<u32> {
    let profile = ctx.profile();
    let mut r = 0;
    for (&p, s) in &profile.sylow {
        let phi = &profile.frattini_of_sylow[&p];
        let image = join(&meet(h, s, ctx.budgets.max_order)?, phi);
        r += exact_log((image.order() / phi.order()) as u128, p).expect("index in a p-group");
    }
    Ok(r)
}

/// Builds the characteristic chain and checks the index bounds derived from
/// it.
pub fn theorem_b_verify(ctx: &GroupContext) -> Result<TheoremBReport> {
    let profile = ctx.profile();
    let (d_sigma, d_max, p_max) = (profile.d_sigma, profile.d_max, profile.p_max);
    let mut chain = vec![ctx.g.clone()];
    let mut methods = Vec::new();
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    loop {
        let current = chain.last().expect("non-empty").clone();
        if is_nilpotent(&current) {
            break;
        }
        let tester = if chain.len() == 1 { None } else { Some(CharTester::new(&current, &ctx.budgets)?) };
        let tester = match &tester {
            Some(t) => t,
            None => ctx.chars()?,
        };
        let (next, how) = max_char_nonnilpotent_kernel(tester)?;
        checks.push(("quotients_non_nilpotent", !quotient_is_nilpotent(&current, &next)));
        methods.push(how);
        chain.push(next);
    }
    let t = chain.len() - 1;
    let r: Vec<u32> = chain.iter().map(|h| r_value(ctx, h)).collect::<Result<_>>()?;
    let gt = chain.last().expect("non-empty").clone();
    checks.push(("r0_equals_d_sigma", r[0] == d_sigma));
    checks.push(("r_strictly_decreasing", r.windows(2).all(|w| w[0] > w[1])));
    checks.push(("t_at_most_d_sigma", t as u32 <= d_sigma));
    checks.push(("last_term_nilpotent", is_nilpotent(&gt)));

    let gt_profile = invariant_profile(&gt);
    let index_t = (ctx.order() / gt.order()) as u128;
    if d_sigma >= 1 {
        let sb = schreier_bound(d_sigma as u64, index_t as u64);
        checks.push(("schreier_d_sigma_of_last_term", gt_profile.d_sigma as i128 <= sb));
    }
    let phi_t = frattini(&gt, &ctx.budgets.lattice)?;
    let index_phi_t = (gt.order() / phi_t.order()) as u128;
    checks.push((
        "last_term_frattini_index",
        SatLog::power(p_max, gt_profile.d_sigma as f64).admits(index_phi_t),
    ));

    let soluble_case_applicable = !ctx.g.is_trivial() && is_soluble(&ctx.g);
    let g_ledger = g_sequence(d_max, p_max, d_sigma);
    let mut frattini_index = None;
    let mut bound = None;
    match ctx.frattini() {
        Ok(phi) => {
            let idx = (ctx.order() / phi.order()) as u128;
            frattini_index = Some(idx);
            checks.push(("frattini_of_last_term_in_frattini", phi_t.is_subgroup_of(phi)));
            checks.push(("frattini_index_via_last_term", idx <= index_t * index_phi_t));
            if soluble_case_applicable {
                let b = frattini_index_bound(d_max, p_max, d_sigma);
                checks.push(("soluble_frattini_index_bound", b.admits(idx)));
                checks.push(("soluble_chain_index_bound", g_ledger[t].admits(index_t)));
                bound = Some(b);
            }
        }
        Err(e) if e.is_budget() => skipped.push(format!("Frattini subgroup: {e}")),
        Err(e) => return Err(e),
    }
    Ok(TheoremBReport {
        chain,
        chain_methods: methods,
        t,
        r,
        g_ledger,
        frattini_index,
        bound,
        soluble_case_applicable,
        checks,
        skipped,
    })
}
