mod common;

use common::{compose, Brute};
use frattini_lab::corpus::SuiteConfig;
use frattini_lab::perm::{Group, Permutation};
use proptest::prelude::*;

fn perm_strategy(degree: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((0..degree as u32).collect::<Vec<u32>>()).prop_shuffle()
}

/// Degree 1..=7 with one to three random generators.
fn group_strategy() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (1usize..=7).prop_flat_map(|n| (Just(n), prop::collection::vec(perm_strategy(n), 1..=3)))
}

fn build(degree: usize, gens: &[Vec<u32>]) -> Group {
    let perms = gens.iter().map(|g| Permutation::from_images(g.clone()).unwrap()).collect();
    Group::new(degree, perms).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn chain_order_matches_closure((degree, gens) in group_strategy()) {
        let g = build(degree, &gens);
        let brute = Brute::new(degree, &gens);
        prop_assert_eq!(g.order(), brute.order() as u128);
        let product: u128 = g.chain().basic_orbits().iter().map(|o| o.len() as u128).product();
        prop_assert_eq!(product, g.order());
        for x in &brute.elems {
            prop_assert!(g.contains(&Permutation::from_images(x.clone()).unwrap()).unwrap());
        }
    }

    #[test]
    fn membership_is_closed_under_products(
        (degree, gens, picks) in group_strategy().prop_flat_map(|(n, gens)| {
            (Just(n), Just(gens), prop::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 8))
        })
    ) {
        let g = build(degree, &gens);
        let brute = Brute::new(degree, &gens);
        for (a, b) in picks {
            let x = &brute.elems[a.index(brute.order())];
            let y = &brute.elems[b.index(brute.order())];
            let xy = Permutation::from_images(compose(x, y)).unwrap();
            prop_assert!(g.contains(&xy).unwrap());
        }
    }

    #[test]
    fn orbit_sizes_divide_order((degree, gens) in group_strategy()) {
        let g = build(degree, &gens);
        for point in 0..degree {
            let orbit = g.orbit(point).unwrap();
            prop_assert_eq!(g.order() % orbit.len() as u128, 0);
            for q in orbit.sorted_points() {
                let w = orbit.witness(q).unwrap();
                prop_assert_eq!(w.image(point), q);
            }
        }
    }

    #[test]
    fn non_members_are_rejected((degree, gens) in group_strategy(), other in (1usize..=7).prop_flat_map(perm_strategy)) {
        let g = build(degree, &gens);
        if other.len() == degree {
            let brute = Brute::new(degree, &gens);
            let x = Permutation::from_images(other.clone()).unwrap();
            prop_assert_eq!(g.contains(&x).unwrap(), brute.index.contains_key(&other));
        }
    }
}

#[test]
fn corpus_orbit_products_match_closure() {
    for spec in SuiteConfig::default_corpus().groups {
        let g = spec.expr.build().unwrap().group;
        if g.order() > 5000 {
            continue;
        }
        let product: u128 = g.chain().basic_orbits().iter().map(|o| o.len() as u128).product();
        let brute = Brute::of(&g);
        assert_eq!(product, brute.order() as u128, "{}", spec.name());
    }
}
