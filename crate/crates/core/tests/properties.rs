mod common;

use std::collections::HashSet;

use frobnum::corpus::Corpus;
use frobnum::counting::{count_sylow, Caps, GroupContext};
use frobnum::groups::GroupSpec;
use frobnum::hallpoly::{hall_count_order, Partition};
use frobnum::perm::{
    is_2_transitive, is_block_system, is_primitive, is_transitive, minimal_blocks, orbit,
    stabilizer_bruteforce, PermGroup, Permutation,
};
use frobnum::report::{to_json, CountJson};
use frobnum::verify::verify_sylow_multiplicativity;
use proptest::prelude::*;

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    proptest::collection::vec(any::<u32>(), degree).prop_map(|keys| {
        let mut idx: Vec<usize> = (0..keys.len()).collect();
        idx.sort_by_key(|&i| (keys[i], i));
        Permutation::from_images(idx).unwrap()
    })
}

/// A group generated by one to three random permutations of degree 2..=7.
fn random_group() -> impl Strategy<Value = PermGroup> {
    (2usize..=7).prop_flat_map(|d| {
        proptest::collection::vec(permutation(d), 1..=3).prop_map(|gens| PermGroup::new(gens).unwrap())
    })
}

fn images(g: &PermGroup) -> Vec<Vec<u16>> {
    g.generators().iter().map(|p| p.images().to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn stabilizer_chain_order_matches_enumeration(g in random_group()) {
        let table = g.enumerate_elements(usize::MAX).unwrap();
        let brute = common::closure_of(g.degree(), &images(&g));
        prop_assert_eq!(g.order(), brute.len().into());
        prop_assert_eq!(table.len(), brute.len());
    }

    #[test]
    fn orbit_stabilizer(g in random_group()) {
        let table = g.enumerate_elements(usize::MAX).unwrap();
        for point in 0..g.degree() {
            let orb = orbit(&g, point).unwrap();
            let stab = stabilizer_bruteforce(&table, point);
            prop_assert_eq!(orb.len() * stab.order(), table.len());
        }
    }

    #[test]
    fn transitivity_hierarchy(g in random_group()) {
        let table = g.enumerate_elements(usize::MAX).unwrap();
        let two = is_2_transitive(&g, &table).unwrap();
        let transitive = is_transitive(&g);
        let primitive = transitive && is_primitive(&g).unwrap();
        prop_assert!(!two || primitive);
        prop_assert!(!primitive || transitive);
    }

    #[test]
    fn block_images_are_blocks(g in random_group()) {
        prop_assume!(is_transitive(&g));
        for system in minimal_blocks(&g).unwrap() {
            prop_assert!(is_block_system(&g, &system));
            for gen in g.generators() {
                for block in system.blocks() {
                    let mut image: Vec<usize> = block.iter().map(|&x| gen.apply(x)).collect();
                    image.sort_unstable();
                    prop_assert_eq!(system.block_of(image[0]), image.as_slice());
                }
            }
        }
    }
}

fn membership_group(text: &str) -> (PermGroup, HashSet<Vec<u16>>) {
    let g = common::spec(text).build().unwrap();
    let all = common::closure_of(g.degree(), &images(&g)).into_iter().collect();
    (g, all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sifting_accepts_random_products(word in proptest::collection::vec(0usize..8, 1..40)) {
        for text in ["GL2(3)", "Alternating(5)", "Product(GL2(3),FrobeniusAffine(7,3))"] {
            let (g, _) = membership_group(text);
            let gens = g.generators();
            let x = word
                .iter()
                .fold(Permutation::identity(g.degree()), |acc, &i| acc.compose(&gens[i % gens.len()]).unwrap());
            prop_assert!(g.contains(&x).unwrap());
        }
    }

    #[test]
    fn sifting_rejects_non_members(x in permutation(8), y in permutation(5)) {
        let (gl23, all) = membership_group("GL2(3)");
        prop_assume!(!all.contains(x.images()));
        prop_assert!(!gl23.contains(&x).unwrap());
        let (a5, all) = membership_group("Alternating(5)");
        prop_assert_eq!(a5.contains(&y).unwrap(), all.contains(y.images()));
    }
}

#[test]
fn hall_formula_matches_engine_on_small_abelian_groups() {
    for p in [2u64, 3, 5] {
        let mut w = 1;
        while p.pow(w) <= 243 {
            for lambda in Partition::all_of(w) {
                let spec = GroupSpec::AbelianP { p, parts: lambda.clone() };
                let ctx = GroupContext::from_spec(&spec, Caps::default()).unwrap();
                for a in 0..=w {
                    let engine = ctx.count(p, a).unwrap().count;
                    assert_eq!(hall_count_order(&lambda, a, p).unwrap(), engine.into(), "{spec} a={a}");
                }
            }
            w += 1;
        }
    }
}

#[test]
fn fusion_consistency_over_corpus() {
    let corpus = Corpus::default_corpus();
    for entry in corpus.entries().iter().filter(|e| e.order() <= &20_000u32.into()) {
        let ctx = GroupContext::from_spec(entry.spec(), Caps::default()).unwrap();
        for p in ctx.primes() {
            let m = ctx.sylow_exponent(p);
            for a in 0..=m {
                let r = ctx.count(p, a).unwrap();
                let total: u64 = r.orbits.iter().map(|o| o.orbit_len).sum();
                assert_eq!(total, r.count, "{} p={p} a={a}", entry.text());
                assert!(r.orbits.iter().all(|o| ctx.order().is_multiple_of(o.orbit_len)));
                assert!(r.orbits.iter().all(|o| o.representative.order() as u64 == p.pow(a)));
            }
            assert_eq!(count_sylow(&ctx, p).unwrap(), ctx.count(p, m).unwrap().count);
        }
    }
}

fn small_corpus_specs() -> Vec<GroupSpec> {
    Corpus::default_corpus()
        .entries()
        .iter()
        .filter(|e| e.order() > &1u32.into() && e.order() <= &200u32.into())
        .map(|e| e.spec().clone())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn sylow_counts_multiply_over_products(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let specs = small_corpus_specs();
        let (left, right) = (&specs[i.index(specs.len())], &specs[j.index(specs.len())]);
        let product = GroupSpec::Product(vec![left.clone(), right.clone()]);
        let primes = GroupContext::from_spec(&product, Caps::default()).unwrap().primes();
        let p = primes[k.index(primes.len())];
        let m = verify_sylow_multiplicativity(left, right, p, Caps::default()).unwrap();
        prop_assert!(m.holds(), "{} x {} at p={}: {} * {} != {}", left, right, p, m.left, m.right, m.product);
    }

    #[test]
    fn count_reports_round_trip_through_json(i in any::<prop::sample::Index>(), k in any::<prop::sample::Index>()) {
        let specs = small_corpus_specs();
        let ctx = GroupContext::from_spec(&specs[i.index(specs.len())], Caps::default()).unwrap();
        let primes = ctx.primes();
        let p = primes[k.index(primes.len())];
        let a = k.index(ctx.sylow_exponent(p) as usize + 1) as u32;
        let json = to_json(&CountJson::from(&*ctx.count(p, a).unwrap()));
        let back: CountJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(to_json(&back), json);
    }
}
