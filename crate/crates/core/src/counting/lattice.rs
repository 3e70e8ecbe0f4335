//! Subgroups of a p-group, level by level.
//!
//! Every subgroup `K` of order `p^{k+1}` has a normal subgroup `H` of index `p`,
//! and then `K = ⟨H, x⟩` for any `x ∈ K ∖ H`, with `x` normalizing `H` and
//! `x^p ∈ H`. Conversely every such `x` extends `H` to a subgroup of order
//! `p·|H|`. Extending each level by all admissible `x` therefore reaches every
//! subgroup of the next level.

use std::collections::HashMap;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::perm::{ElementTable, SubgroupHandle};

/// Largest p-group whose multiplication table is materialized.
pub const MAX_LOCAL_ORDER: usize = 4096;

/// A p-group with its own multiplication table, indexed like its member list.
struct LocalGroup {
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    to_parent: Vec<u32>,
}

impl LocalGroup {
    fn new(table: &ElementTable, group: &SubgroupHandle) -> Result<Self> {
        let n = group.order();
        if n > MAX_LOCAL_ORDER {
            return Err(Error::TooLarge {
                order: n.into(),
                cap: MAX_LOCAL_ORDER,
            });
        }
        // Parent indices are sorted, and so are the images: the local table
        // keeps the parent's order.
        let degree = table.degree();
        let local = ElementTable::from_elements(
            degree,
            &group
                .members()
                .iter()
                .map(|&m| table.permutation(m as usize))
                .collect::<Vec<_>>(),
        )?;
        let mut mul = vec![0u16; n * n];
        let mut buf = vec![0u16; degree];
        for i in 0..n {
            let a = local.element(i);
            for j in 0..n {
                for (o, &x) in buf.iter_mut().zip(local.element(j)) {
                    *o = a[x as usize];
                }
                mul[i * n + j] = local.index_of(&buf).expect("subgroup is not closed") as u16;
            }
        }
        let mut inv = vec![0u16; n];
        for i in 0..n {
            let j = (0..n).find(|&j| mul[i * n + j] == 0).unwrap();
            inv[i] = j as u16;
        }
        Ok(LocalGroup {
            n,
            mul,
            inv,
            to_parent: group.members().to_vec(),
        })
    }

    #[inline]
    fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.n + b as usize]
    }

    fn pow(&self, x: u16, e: u64) -> u16 {
        (0..e).fold(0, |acc, _| self.mul(acc, x))
    }

    fn to_handle(&self, bits: &Bits) -> SubgroupHandle {
        SubgroupHandle::from_sorted(bits.ones().map(|i| self.to_parent[i]).collect())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    #[inline]
    fn has(&self, i: u16) -> bool {
        self.0[i as usize / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: u16) {
        self.0[i as usize / 64] |= 1 << (i % 64);
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

struct Node {
    bits: Bits,
    members: Vec<u16>,
    gens: Vec<u16>,
}

/// Subgroups of the p-group `group` (a subgroup of `table`) of orders
/// `1, p, ..., p^max_level`, one list per level, each sorted by canonical key.
/// Fails with [`Error::SubgroupCap`] when any level has more than `subgroup_cap` members.
pub fn p_subgroup_lattice(
    table: &ElementTable,
    group: &SubgroupHandle,
    max_level: u32,
    subgroup_cap: usize,
) -> Result<Vec<Vec<SubgroupHandle>>> {
    let (levels, complete) = lattice_levels(table, group, max_level, subgroup_cap)?;
    if complete {
        Ok(levels)
    } else {
        Err(Error::SubgroupCap(subgroup_cap))
    }
}

/// Like [`p_subgroup_lattice`], but on hitting the cap returns the levels
/// finished so far together with `false`.
pub(crate) fn lattice_levels(
    table: &ElementTable,
    group: &SubgroupHandle,
    max_level: u32,
    subgroup_cap: usize,
) -> Result<(Vec<Vec<SubgroupHandle>>, bool)> {
    let order = group.order() as u64;
    if order == 1 {
        return Ok((vec![vec![table.trivial()]], true));
    }
    let (p, m) = prime_power(order)
        .ok_or_else(|| Error::Precondition(format!("subgroup of order {order} is not a p-group")))?;
    let top = max_level.min(m);
    let local = LocalGroup::new(table, group)?;
    let n = local.n;
    let pth: Vec<u16> = (0..n as u16).map(|x| local.pow(x, p)).collect();

    let mut trivial = Bits::new(n);
    trivial.set(0);
    let mut level = vec![Node {
        bits: trivial,
        members: vec![0],
        gens: Vec::new(),
    }];
    let mut out = vec![vec![table.trivial()]];
    for _ in 0..top {
        let mut next: Vec<Node> = Vec::new();
        let mut index: HashMap<Bits, usize> = HashMap::new();
        for h in &level {
            let mut covered = h.bits.clone();
            for x in 0..n as u16 {
                if covered.has(x) || !h.bits.has(pth[x as usize]) {
                    continue;
                }
                let xinv = local.inv[x as usize];
                if !h
                    .gens
                    .iter()
                    .all(|&g| h.bits.has(local.mul(local.mul(x, g), xinv)))
                {
                    continue;
                }
                let mut bits = h.bits.clone();
                let mut members = h.members.clone();
                let mut xi = x;
                for _ in 1..p {
                    for &hm in &h.members {
                        let y = local.mul(hm, xi);
                        bits.set(y);
                        members.push(y);
                    }
                    xi = local.mul(xi, x);
                }
                covered.union_with(&bits);
                if index.contains_key(&bits) {
                    continue;
                }
                if next.len() >= subgroup_cap {
                    return Ok((out, false));
                }
                let mut gens = h.gens.clone();
                gens.push(x);
                index.insert(bits.clone(), next.len());
                next.push(Node {
                    bits,
                    members,
                    gens,
                });
            }
        }
        let mut handles: Vec<SubgroupHandle> = next.iter().map(|s| local.to_handle(&s.bits)).collect();
        handles.sort_unstable();
        out.push(handles);
        level = next;
    }
    Ok((out, true))
}

/// All subgroups of order `p^a` of the p-group `group`, each exactly once.
pub fn p_subgroups_of_order(
    table: &ElementTable,
    group: &SubgroupHandle,
    a: u32,
    subgroup_cap: usize,
) -> Result<Vec<SubgroupHandle>> {
    let order = group.order() as u64;
    let m = match prime_power(order) {
        Some((_, m)) => m,
        None if order == 1 => 0,
        None => {
            return Err(Error::Precondition(format!(
                "subgroup of order {order} is not a p-group"
            )))
        }
    };
    if a > m {
        return Err(Error::Precondition(format!(
            "no subgroups of order p^{a} in a group of order p^{m}"
        )));
    }
    let mut levels = p_subgroup_lattice(table, group, a, subgroup_cap)?;
    Ok(levels.swap_remove(a as usize))
}
