//! Counts frozen from the brute-force oracle, and engine/oracle agreement
//! across the small groups of the shipped corpus.

mod common;

use common::{spec, Oracle};
use frobnum::corpus::Corpus;
use frobnum::counting::{Caps, GroupContext};
use frobnum::hallpoly::{gaussian_binomial, hall_count_type, Partition};
use frobnum::perm::normalizer_bruteforce;

fn engine_counts(text: &str, p: u64) -> Vec<u64> {
    let ctx = GroupContext::from_spec(&spec(text), Caps::default()).unwrap();
    (0..=ctx.sylow_exponent(p))
        .map(|a| ctx.count(p, a).unwrap().count)
        .collect()
}

/// (spec, p, number of subgroups of order p^a for a = 0..=m)
const FROZEN: &[(&str, u64, &[u64])] = &[
    ("Symmetric(4)", 2, &[1, 9, 7, 3]),
    ("Symmetric(4)", 3, &[1, 4]),
    ("Alternating(5)", 2, &[1, 15, 5]),
    ("Alternating(5)", 3, &[1, 10]),
    ("Alternating(5)", 5, &[1, 6]),
    ("Dihedral(8)", 2, &[1, 5, 3, 1]),
    ("AbelianP(3,[2,1,1])", 3, &[1, 13, 22, 13, 1]),
    ("ElemAbelian(2,3)", 2, &[1, 7, 7, 1]),
    ("ElemAbelian(3,3)", 3, &[1, 13, 13, 1]),
    ("ElemAbelian(5,3)", 5, &[1, 31, 31, 1]),
    ("GL2(3)", 2, &[1, 13, 9, 7, 3]),
    ("GL2(3)", 3, &[1, 4]),
    ("GL2(4)", 2, &[1, 15, 5]),
    ("GL2(4)", 3, &[1, 31, 10]),
    ("GL2(5)", 5, &[1, 6]),
    ("FrobeniusAffine(19,3)", 3, &[1, 19]),
    ("FrobeniusAffine(7,3)", 3, &[1, 7]),
    ("Product(GL2(3),FrobeniusAffine(7,3))", 3, &[1, 67, 28]),
    ("Cyclic(12)", 2, &[1, 1, 1]),
];

#[test]
fn frozen_counts_match_oracle_and_engine() {
    for &(text, p, expected) in FROZEN {
        assert_eq!(Oracle::new(text).p_subgroup_counts(p), expected, "oracle {text} p={p}");
        assert_eq!(engine_counts(text, p), expected, "engine {text} p={p}");
    }
}

#[test]
fn order_nine_subgroups_of_c9_c3_c3_by_type() {
    let oracle = Oracle::new("AbelianP(3,[2,1,1])");
    let nine = &oracle.p_subgroups(3)[2];
    let cyclic = nine.iter().filter(|s| oracle.is_cyclic(s)).count();
    assert_eq!((cyclic, nine.len() - cyclic), (9, 13));

    let lambda = Partition::new(vec![2, 1, 1]).unwrap();
    let ty = |parts: Vec<u32>| hall_count_type(&lambda, &Partition::new(parts).unwrap(), 3);
    assert_eq!(ty(vec![2]), 9u32.into());
    assert_eq!(ty(vec![1, 1]), 13u32.into());
    assert_eq!(gaussian_binomial(3, 2, 3), 13u32.into());
}

#[test]
fn normalizers_of_sylow_subgroups() {
    let s4 = Oracle::new("Symmetric(4)");
    let sylow2 = &s4.p_subgroups(2)[3];
    assert!(sylow2.iter().all(|s| s4.normalizer_order(s) == 8));
    let s3 = Oracle::new("Symmetric(3)");
    assert_eq!(s3.normalizer_order(&s3.p_subgroups(3)[1][0]), 6);

    // The same through the library's brute-force normalizer.
    let ctx = GroupContext::from_spec(&spec("Symmetric(4)"), Caps::default()).unwrap();
    let p = ctx.sylow(2).unwrap();
    assert_eq!(normalizer_bruteforce(ctx.table(), &p).order(), 8);
}

#[test]
fn orbit_lengths_times_normalizer_orders() {
    // Every conjugacy class of subgroups has length |G| / |N(H)|.
    for text in ["Symmetric(4)", "GL2(3)", "Alternating(5)"] {
        let ctx = GroupContext::from_spec(&spec(text), Caps::default()).unwrap();
        for p in ctx.primes() {
            for a in 0..=ctx.sylow_exponent(p) {
                let report = ctx.count(p, a).unwrap();
                let mut total = 0;
                for o in &report.orbits {
                    let n = normalizer_bruteforce(ctx.table(), &o.representative).order() as u64;
                    assert_eq!(o.orbit_len * n, ctx.order(), "{text} p={p} a={a}");
                    total += o.orbit_len;
                }
                assert_eq!(total, report.count);
            }
        }
    }
}

#[test]
fn engine_matches_oracle_on_small_corpus_groups() {
    let corpus = Corpus::default_corpus();
    let mut checked = 0;
    for entry in corpus.entries() {
        if entry.order() > &2000u32.into() {
            continue;
        }
        let text = entry.text();
        let oracle = Oracle::new(text);
        let ctx = GroupContext::from_spec(entry.spec(), Caps::default()).unwrap();
        for p in ctx.primes() {
            let engine: Vec<u64> = (0..=ctx.sylow_exponent(p))
                .map(|a| ctx.count(p, a).unwrap().count)
                .collect();
            assert_eq!(engine, oracle.p_subgroup_counts(p), "{text} p={p}");
        }
        checked += 1;
    }
    assert!(checked > 150, "only {checked} groups checked");
}
