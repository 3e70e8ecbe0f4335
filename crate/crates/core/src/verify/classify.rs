use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;

use super::facts::{facts_for, FactKind};
use crate::arith::is_prime;
use crate::corpus::Corpus;
use crate::counting::GroupContext;
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::hallpoly::hall_count_order;

/// Largest `n_max` accepted by [`scan_range`].
pub const MAX_SCAN: u64 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// `n ≢ 1 (mod p)`.
    NotFrobeniusByThm1,
    /// `n` fails the mod-`p²` filter, so only a Sylow count could realize it,
    /// and no corpus group has `n` Sylow p-subgroups. Not a proof.
    NotFrobeniusByThm2,
    WitnessFound,
    /// Bounded search found nothing. Not a claim that `n` is pseudo; only
    /// the facts attached in the notes assert that.
    NoWitnessInCorpus,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::NotFrobeniusByThm1 => "NOT_FROBENIUS_BY_THM1",
            Status::NotFrobeniusByThm2 => "NOT_FROBENIUS_BY_THM2",
            Status::WitnessFound => "WITNESS_FOUND",
            Status::NoWitnessInCorpus => "NO_WITNESS_IN_CORPUS",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A group with exactly `n` subgroups of order `p^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub spec: GroupSpec,
    pub a: u32,
    /// Whether `p^a` is the full p-part, i.e. `n` counts Sylow subgroups.
    pub sylow: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub p: u64,
    pub n: u64,
    pub status: Status,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

type Found = Option<(usize, u32)>;

/// First corpus entries realizing each count, for one prime.
struct WitnessIndex {
    any: BTreeMap<u64, (usize, u32)>,
    sylow: BTreeMap<u64, (usize, u32)>,
}

impl WitnessIndex {
    fn build(corpus: &Corpus, p: u64, max_a: Option<u32>) -> Result<Self> {
        let mut index = WitnessIndex {
            any: BTreeMap::new(),
            sylow: BTreeMap::new(),
        };
        for i in 0..corpus.len() {
            let ctx = corpus.context(i)?;
            let m = ctx.sylow_exponent(p);
            for a in 0..=limit(m, max_a) {
                let n = ctx.count(p, a)?.count;
                index.any.entry(n).or_insert((i, a));
                if a == m {
                    index.sylow.entry(n).or_insert((i, a));
                }
            }
        }
        Ok(index)
    }
}

fn limit(m: u32, max_a: Option<u32>) -> u32 {
    max_a.map_or(m, |cap| cap.min(m))
}

fn first_sylow(corpus: &Corpus, p: u64, n: u64, max_a: Option<u32>) -> Result<Found> {
    for i in 0..corpus.len() {
        let ctx = corpus.context(i)?;
        let m = ctx.sylow_exponent(p);
        if limit(m, max_a) == m && ctx.count(p, m)?.count == n {
            return Ok(Some((i, m)));
        }
    }
    Ok(None)
}

fn first_any(corpus: &Corpus, p: u64, n: u64, max_a: Option<u32>) -> Result<Found> {
    for i in 0..corpus.len() {
        let ctx = corpus.context(i)?;
        for a in 0..=limit(ctx.sylow_exponent(p), max_a) {
            if ctx.count(p, a)?.count == n {
                return Ok(Some((i, a)));
            }
        }
    }
    Ok(None)
}

fn check_inputs(p: u64, n: u64, corpus: &Corpus) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if corpus.is_empty() {
        return Err(Error::Precondition("the corpus is empty".into()));
    }
    Ok(())
}

/// Classifies `n` as a count of subgroups of order `p^a`, searching `corpus`
/// for witnesses with `a` up to `max_a` (default: the full p-part of each group).
pub fn classify_number(p: u64, n: u64, corpus: &Corpus, max_a: Option<u32>) -> Result<Verdict> {
    check_inputs(p, n, corpus)?;
    decide(
        p,
        n,
        corpus,
        || first_sylow(corpus, p, n, max_a),
        || first_any(corpus, p, n, max_a),
    )
}

/// Verdicts for every `n ≤ n_max` with `n ≡ 1` or `1 + p (mod p²)`.
pub fn scan_range(p: u64, n_max: u64, corpus: &Corpus, max_a: Option<u32>) -> Result<Vec<Verdict>> {
    check_inputs(p, 1, corpus)?;
    if n_max > MAX_SCAN {
        return Err(Error::Precondition(format!(
            "scan bound {n_max} exceeds {MAX_SCAN}"
        )));
    }
    let index = WitnessIndex::build(corpus, p, max_a)?;
    let p2 = p * p;
    (1..=n_max)
        .filter(|n| n % p2 == 1 % p2 || n % p2 == 1 + p)
        .map(|n| {
            decide(
                p,
                n,
                corpus,
                || Ok(index.sylow.get(&n).copied()),
                || Ok(index.any.get(&n).copied()),
            )
        })
        .collect()
}

fn decide(
    p: u64,
    n: u64,
    corpus: &Corpus,
    find_sylow: impl FnOnce() -> Result<Found>,
    find_any: impl FnOnce() -> Result<Found>,
) -> Result<Verdict> {
    let mut verdict = Verdict {
        p,
        n,
        status: Status::NoWitnessInCorpus,
        witness: None,
        notes: Vec::new(),
    };
    let facts = facts_for(p, n);
    if n % p != 1 % p {
        verdict.status = Status::NotFrobeniusByThm1;
        verdict.notes.push(format!(
            "{n} is not 1 mod {p}, but every count of subgroups of order {p}^a is"
        ));
        return Ok(verdict);
    }
    let p2 = p * p;
    let residue = n % p2;
    let found = if residue != 1 % p2 && residue != 1 + p {
        verdict.notes.push(format!(
            "{n} mod {p2} = {residue} is neither 1 nor {}: only a Sylow count can equal {n}",
            1 + p
        ));
        let found = find_sylow()?;
        if found.is_none() {
            verdict.status = Status::NotFrobeniusByThm2;
            verdict.notes.push(format!(
                "no corpus group has exactly {n} Sylow {p}-subgroups (bounded search, not a proof)"
            ));
        }
        found
    } else if residue == 1 % p2 && n > 1 {
        // Counts that are 1 mod p² are Sylow numbers whenever they are counts at all.
        verdict.notes.push(format!(
            "{n} is 1 mod {p2}: if it is a subgroup count it is also a Sylow {p}-number"
        ));
        match find_sylow()? {
            Some(w) => Some(w),
            None => find_any()?,
        }
    } else {
        find_any()?
    };

    for fact in &facts {
        verdict.notes.push(fact.note());
    }
    let pseudo = facts.iter().find(|f| f.kind == FactKind::PseudoFrobenius);
    match found {
        Some((i, a)) => {
            let entry = corpus.entry(i);
            if let Some(fact) = pseudo {
                return Err(Error::ContradictsKnownFact {
                    p,
                    n,
                    witness: format!("{} (a = {a})", entry.text()),
                    fact: fact.citation.to_string(),
                });
            }
            let ctx = corpus.context(i)?;
            let witness = Witness {
                spec: entry.spec().clone(),
                a,
                sylow: a == ctx.sylow_exponent(p),
            };
            revalidate(p, n, &witness, &ctx)?;
            verdict.status = Status::WitnessFound;
            verdict.witness = Some(witness);
        }
        None if verdict.status == Status::NotFrobeniusByThm2 => {}
        None => verdict.notes.push(
            "no witness in corpus (bounded search; this alone does not make n pseudo)".into(),
        ),
    }
    Ok(verdict)
}

/// Recounts a witness from scratch, and through the closed form for abelian p-groups.
fn revalidate(p: u64, n: u64, witness: &Witness, original: &GroupContext) -> Result<()> {
    let fresh = GroupContext::from_spec(&witness.spec, original.caps())?;
    let recount = crate::counting::count_subgroups_of_order(&fresh, p, witness.a)?.count;
    if recount != n {
        return Err(Error::Inconsistent(format!(
            "witness {} recounts to {recount}, expected {n}",
            witness.spec
        )));
    }
    if let Some((q, lambda)) = witness.spec.is_abelian_p_group() {
        if q == p && hall_count_order(&lambda, witness.a, p)?.to_u64() != Some(n) {
            return Err(Error::Inconsistent(format!(
                "witness {} disagrees with the closed form",
                witness.spec
            )));
        }
    }
    Ok(())
}
