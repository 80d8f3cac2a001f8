use frattini_lab::algebra::{automorphism_generators, is_characteristic, Characteristic};
use frattini_lab::corpus::SuiteConfig;
use frattini_lab::invariants::is_nilpotent;
use frattini_lab::verify::{g_sequence, theorem_a_classify, theorem_b_verify, GroupContext, SatLog};
use proptest::prelude::*;

fn contexts(max_order: u128) -> Vec<GroupContext> {
    let config = SuiteConfig::default_corpus();
    config
        .groups
        .iter()
        .filter_map(|s| {
            let built = s.expr.build().unwrap();
            (built.group.order() <= max_order)
                .then(|| GroupContext::new(s.name(), built.group, s.overrides.apply(&config.budgets)).unwrap())
        })
        .collect()
}

proptest! {
    #[test]
    fn g_sequence_is_monotone(d_max in 1u32..6, p_max in 2u64..50, d_sigma in 0u32..8) {
        let g = g_sequence(d_max, p_max, d_sigma);
        prop_assert_eq!(g.len(), d_sigma as usize + 1);
        for w in g.windows(2) {
            prop_assert!(w[1] >= w[0]);
        }
    }

    #[test]
    fn g_sequence_without_sylow_rank_is_one(p_max in 2u64..50, d_sigma in 0u32..8) {
        prop_assert!(g_sequence(0, p_max, d_sigma).iter().all(|&x| x == SatLog::ONE));
    }

    #[test]
    fn satlog_preserves_integer_order(a in 0u128..(1 << 52), b in 0u128..(1 << 52)) {
        let (lo, hi) = (a.min(b), a.max(b));
        prop_assert!(SatLog::from_int(lo) <= SatLog::from_int(hi));
        prop_assert!(SatLog::from_int(hi).admits(lo));
        prop_assert!(SatLog::from_int(lo).admits(lo));
    }

    #[test]
    fn saturation_dominates(log in 0f64..2000.0, n in 1u128..u128::MAX) {
        let x = SatLog::from_log2(log);
        prop_assert!(SatLog::Saturated >= x);
        prop_assert!(SatLog::Saturated.admits(n));
    }
}

#[test]
fn case_analysis_holds_on_non_nilpotent_corpus_groups() {
    for ctx in contexts(10_000) {
        if is_nilpotent(&ctx.g) {
            continue;
        }
        let rep = theorem_a_classify(&ctx).unwrap();
        assert!(rep.passed(), "{}: {}", ctx.name, rep.detail());
    }
}

/// Each chain member is fixed by the automorphism generators of its
/// predecessor, searched directly rather than through the order shortcut.
#[test]
fn chain_members_are_characteristic() {
    for ctx in contexts(10_000) {
        let rep = theorem_b_verify(&ctx).unwrap();
        assert!(rep.passed(), "{}: {}", ctx.name, rep.detail());
        assert!(rep.r.windows(2).all(|w| w[0] > w[1]));
        assert!(rep.t as u32 <= ctx.profile().d_sigma);
        for w in rep.chain.windows(2) {
            let (outer, inner) = (&w[0], &w[1]);
            if outer.order() > 500 {
                continue;
            }
            let auts = automorphism_generators(outer, 500);
            assert_eq!(is_characteristic(outer, inner, &auts), Characteristic::Yes, "{}", ctx.name);
        }
    }
}
