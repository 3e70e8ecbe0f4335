use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::bsgs::Bsgs;
use super::permutation::Permutation;
use super::table::ElementTable;
use crate::error::{Error, Result};

/// Default cap on the number of elements for exhaustive algorithms.
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

/// A permutation group given by generators, with a lazily built stabilizer chain.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: OnceLock<Bsgs>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let bsgs = OnceLock::new();
        if let Some(b) = self.bsgs.get() {
            let _ = bsgs.set(b.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            bsgs,
        }
    }
}

impl PermGroup {
    /// Group generated by `generators`; an empty list is rejected (pass the identity
    /// for the trivial group).
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::Precondition("a group needs at least one generator".into()))?;
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(PermGroup {
            degree,
            generators,
            bsgs: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(vec![Permutation::identity(degree)]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The stabilizer chain, computed on first use.
    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| Bsgs::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.bsgs().order()
    }

    /// Order as a `u64`, if it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.bsgs().contains(p))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    /// All elements, sorted lexicographically by image sequence.
    pub fn enumerate_elements(&self, cap: usize) -> Result<ElementTable> {
        let order = self.order();
        match order.to_usize() {
            Some(n) if n <= cap => Ok(ElementTable::from_bsgs(self.bsgs(), n)),
            _ => Err(Error::TooLarge { order, cap }),
        }
    }
}
