//! Checkers for the congruences satisfied by p-subgroup counts, and the
//! classifier for candidate counts.

mod classify;
mod facts;

pub use classify::{classify_number, scan_range, Status, Verdict, Witness, MAX_SCAN};
pub use facts::{facts_for, Fact, FactKind, FACTS};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::counting::{count_sylow, Caps, GroupContext};
use crate::error::{Error, Result};
use crate::groups::GroupSpec;
use crate::hallpoly::hall_count_order;

/// One `(p, a)` entry of a congruence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceRow {
    pub p: u64,
    pub a: u32,
    pub count: u64,
    pub residue: u64,
    pub holds: bool,
}

/// Counts modulo `p` for every prime `p` dividing the order and every `a`
/// with `p^a` dividing it; each should be 1.
pub fn verify_frobenius(ctx: &GroupContext) -> Result<Vec<CongruenceRow>> {
    let mut rows = Vec::new();
    for p in ctx.primes() {
        for a in 0..=ctx.sylow_exponent(p) {
            let count = ctx.count(p, a)?.count;
            rows.push(frobenius_row(p, a, count));
        }
    }
    if ctx.order() == 1 {
        rows.push(frobenius_row(1, 0, 1));
    }
    Ok(rows)
}

/// The row for a given count, exposed so callers can check externally computed counts.
pub fn frobenius_row(p: u64, a: u32, count: u64) -> CongruenceRow {
    let residue = if p > 1 { count % p } else { 0 };
    CongruenceRow {
        p,
        a,
        count,
        residue,
        holds: p == 1 || residue == 1,
    }
}

/// Counts modulo `p²` for every `(p, a)` with `p^{a+1}` dividing the order;
/// each should be 1 or `1 + p`.
pub fn verify_kulakoff_hall(ctx: &GroupContext) -> Result<Vec<CongruenceRow>> {
    let mut rows = Vec::new();
    for p in ctx.primes() {
        let m = ctx.sylow_exponent(p);
        for a in 0..m {
            let count = ctx.count(p, a)?.count;
            rows.push(kulakoff_hall_row(p, a, count));
        }
    }
    Ok(rows)
}

pub fn kulakoff_hall_row(p: u64, a: u32, count: u64) -> CongruenceRow {
    let residue = count % (p * p);
    CongruenceRow {
        p,
        a,
        count,
        residue,
        holds: residue == 1 || residue == 1 + p,
    }
}

/// Outcome of the cyclic-Sylow criterion for one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCriterion {
    pub p: u64,
    pub sylow_order: u64,
    pub sylow_cyclic: bool,
    /// Rows for `1 < p^a < |P|`; `holds` is the biconditional
    /// `count ≡ 1 (mod p²) ⟺ P cyclic` at that `a`.
    pub rows: Vec<CongruenceRow>,
}

impl CyclicCriterion {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.holds)
    }
}

/// Evaluates the criterion without restricting `p`; for `p = 2` it can fail.
pub fn evaluate_cyclic_criterion(ctx: &GroupContext, p: u64) -> Result<CyclicCriterion> {
    let m = ctx.sylow_exponent(p);
    if m < 2 {
        return Err(Error::Precondition(format!(
            "the Sylow {p}-subgroup has order {}, below {p}^2",
            p.pow(m)
        )));
    }
    let sylow = ctx.sylow(p)?;
    let sylow_cyclic = sylow.is_cyclic(ctx.table());
    let mut rows = Vec::new();
    for a in 1..m {
        let count = ctx.count(p, a)?.count;
        let residue = count % (p * p);
        rows.push(CongruenceRow {
            p,
            a,
            count,
            residue,
            holds: (residue == 1) == sylow_cyclic,
        });
    }
    Ok(CyclicCriterion {
        p,
        sylow_order: p.pow(m),
        sylow_cyclic,
        rows,
    })
}

/// For odd `p` and a Sylow p-subgroup of order at least `p²`: whether, for every
/// `1 < p^a < |P|`, the count is `≡ 1 (mod p²)` exactly when `P` is cyclic.
pub fn verify_cyclic_criterion(ctx: &GroupContext, p: u64) -> Result<bool> {
    if p == 2 {
        return Err(Error::Precondition(
            "the cyclic criterion is stated for odd primes only".into(),
        ));
    }
    Ok(evaluate_cyclic_criterion(ctx, p)?.holds())
}

/// Sylow counts of two groups and of their direct product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplicativity {
    pub p: u64,
    pub left: u64,
    pub right: u64,
    pub product: u64,
}

impl Multiplicativity {
    pub fn holds(&self) -> bool {
        self.product == self.left * self.right
    }
}

/// `n_p(G₁ × G₂) = n_p(G₁) · n_p(G₂)`.
pub fn verify_sylow_multiplicativity(
    left: &GroupSpec,
    right: &GroupSpec,
    p: u64,
    caps: Caps,
) -> Result<Multiplicativity> {
    let product = GroupSpec::Product(vec![left.clone(), right.clone()]);
    let n = |spec: &GroupSpec| -> Result<u64> { count_sylow(&GroupContext::from_spec(spec, caps)?, p) };
    Ok(Multiplicativity {
        p,
        left: n(left)?,
        right: n(right)?,
        product: n(&product)?,
    })
}

/// Engine count against the closed form, for one `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallRow {
    pub a: u32,
    pub engine: u64,
    pub formula: BigUint,
}

impl HallRow {
    pub fn holds(&self) -> bool {
        self.formula.to_u64() == Some(self.engine)
    }
}

/// Compares engine counts with the closed form for an abelian p-group spec.
pub fn verify_hall_oracle(ctx: &GroupContext) -> Result<Vec<HallRow>> {
    let (p, lambda) = ctx
        .spec()
        .and_then(GroupSpec::is_abelian_p_group)
        .ok_or_else(|| Error::Precondition(format!("{} is not an abelian p-group spec", ctx.label())))?;
    (0..=lambda.weight())
        .map(|a| {
            Ok(HallRow {
                a,
                engine: ctx.count(p, a)?.count,
                formula: hall_count_order(&lambda, a, p)?,
            })
        })
        .collect()
}
