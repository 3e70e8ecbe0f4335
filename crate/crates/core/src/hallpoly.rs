//! Closed-form subgroup counts in finite abelian p-groups.
//!
//! The abelian p-group of type `λ` is `C_{p^λ₁} × C_{p^λ₂} × ...`. Its number
//! of subgroups of type `μ` is
//!
//! ```text
//! ∏_{i≥1} p^{μ'_{i+1} (λ'_i − μ'_i)} · [λ'_i − μ'_{i+1}, μ'_i − μ'_{i+1}]_p
//! ```
//!
//! where `'` is the conjugate partition and `[n, k]_p` the Gaussian binomial.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. May be empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ| = Σ λ_i`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ'_i = |{j : λ_j ≥ i}|`.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|i| self.0.iter().filter(|&&l| l >= i).count() as u32)
                .collect(),
        )
    }

    /// `i`-th part counting from 1; zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// All partitions of `n`, in reverse-lexicographic order (`[n]` first).
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for first in (1..=n.min(max)).rev() {
                prefix.push(first);
                rec(n - first, first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Every partition of weight at most `n`, excluding the empty one.
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (1..=n).flat_map(Partition::all_of).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// `[n, k]_p = ∏_{i=1..k} (p^{n−k+i} − 1) / (p^i − 1)`; zero when `k > n`.
pub fn gaussian_binomial(n: u32, k: u32, p: u64) -> BigUint {
    assert!(p >= 2, "gaussian_binomial needs p >= 2");
    if k > n {
        return BigUint::zero();
    }
    let p = BigUint::from(p);
    let one = BigUint::one();
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= p.pow(n - k + i) - &one;
        let (quot, rem) = acc.div_rem(&(p.pow(i) - &one));
        // Each partial product is itself a Gaussian binomial, hence integral.
        assert!(rem.is_zero(), "inexact division in gaussian_binomial");
        acc = quot;
    }
    acc
}

/// Number of subgroups of type `mu` in the abelian p-group of type `lambda`.
pub fn hall_count_type(lambda: &Partition, mu: &Partition, p: u64) -> BigUint {
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    if mc.len() > lc.len() || (1..=mc.len()).any(|i| mc.part(i) > lc.part(i)) {
        return BigUint::zero();
    }
    let base = BigUint::from(p);
    let mut acc = BigUint::one();
    for i in 1..=lc.len() {
        let (l_i, m_i, m_next) = (lc.part(i), mc.part(i), mc.part(i + 1));
        acc *= base.pow(m_next * (l_i - m_i));
        acc *= gaussian_binomial(l_i - m_next, m_i - m_next, p);
    }
    acc
}

/// Number of subgroups of order `p^a` in the abelian p-group of type `lambda`.
pub fn hall_count_order(lambda: &Partition, a: u32, p: u64) -> Result<BigUint> {
    if !crate::arith::is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not prime")));
    }
    if a > lambda.weight() {
        return Err(Error::Precondition(format!(
            "order p^{a} exceeds the group order p^{}",
            lambda.weight()
        )));
    }
    Ok(hall_breakdown(lambda, a, p).into_iter().map(|(_, c)| c).sum())
}

/// Per-type contributions to [`hall_count_order`], skipping types that do not occur.
pub fn hall_breakdown(lambda: &Partition, a: u32, p: u64) -> Vec<(Partition, BigUint)> {
    Partition::all_of(a)
        .into_iter()
        .map(|mu| {
            let c = hall_count_type(lambda, &mu, p);
            (mu, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}
