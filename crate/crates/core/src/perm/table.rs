use std::cmp::Ordering;
use std::collections::HashSet;

use super::bsgs::Bsgs;
use super::permutation::{compose_into, invert_slice, Permutation};
use crate::error::{Error, Result};

/// Every element of a group, sorted lexicographically by image sequence.
///
/// Index 0 is always the identity, the lexicographically smallest permutation.
#[derive(Clone, Debug)]
pub struct ElementTable {
    degree: usize,
    len: usize,
    data: Vec<u16>,
}

impl ElementTable {
    pub(crate) fn from_bsgs(bsgs: &Bsgs, order: usize) -> Self {
        let degree = bsgs.degree();
        let mut current: Vec<u16> = (0..degree as u16).collect();
        for level in bsgs.levels() {
            let reps: Vec<&Permutation> = level
                .orbit()
                .iter()
                .map(|&u| level.representative(u).unwrap())
                .collect();
            let mut next = Vec::with_capacity(current.len() * reps.len());
            let mut buf = vec![0u16; degree];
            for e in current.chunks_exact(degree) {
                for t in &reps {
                    compose_into(e, t.images(), &mut buf);
                    next.extend_from_slice(&buf);
                }
            }
            current = next;
        }
        debug_assert_eq!(current.len(), order * degree);
        Self::from_unsorted(degree, current)
    }

    fn from_unsorted(degree: usize, raw: Vec<u16>) -> Self {
        let len = raw.len() / degree;
        let mut idx: Vec<usize> = (0..len).collect();
        idx.sort_unstable_by(|&a, &b| {
            raw[a * degree..(a + 1) * degree].cmp(&raw[b * degree..(b + 1) * degree])
        });
        let mut data = Vec::with_capacity(raw.len());
        for i in idx {
            data.extend_from_slice(&raw[i * degree..(i + 1) * degree]);
        }
        ElementTable { degree, len, data }
    }

    /// Table of an explicit list of distinct elements (e.g. a subgroup).
    pub fn from_elements(degree: usize, elements: &[Permutation]) -> Result<Self> {
        let mut raw = Vec::with_capacity(elements.len() * degree);
        for e in elements {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch(degree, e.degree()));
            }
            raw.extend_from_slice(e.images());
        }
        Ok(Self::from_unsorted(degree, raw))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn element(&self, i: usize) -> &[u16] {
        &self.data[i * self.degree..(i + 1) * self.degree]
    }

    pub fn permutation(&self, i: usize) -> Permutation {
        Permutation::from_raw(self.element(i).to_vec())
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u16]> + '_ {
        self.data.chunks_exact(self.degree)
    }

    /// Position of an element given by its images, if present.
    pub fn index_of(&self, images: &[u16]) -> Option<u32> {
        if images.len() != self.degree {
            return None;
        }
        let (mut lo, mut hi) = (0usize, self.len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.element(mid).cmp(images) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid as u32),
            }
        }
        None
    }

    pub fn index_of_perm(&self, p: &Permutation) -> Option<u32> {
        self.index_of(p.images())
    }

    fn lookup(&self, images: &[u16]) -> u32 {
        self.index_of(images)
            .expect("product of group elements left the element table")
    }

    /// Index of `element(i) ∘ element(j)`.
    pub fn mul(&self, i: u32, j: u32) -> u32 {
        let mut buf = vec![0u16; self.degree];
        compose_into(self.element(i as usize), self.element(j as usize), &mut buf);
        self.lookup(&buf)
    }

    pub fn inverse(&self, i: u32) -> u32 {
        self.lookup(&invert_slice(self.element(i as usize)))
    }

    pub fn power(&self, i: u32, e: u64) -> u32 {
        let p = self.permutation(i as usize).pow(e);
        self.lookup(p.images())
    }

    pub fn element_order(&self, i: u32) -> u64 {
        self.permutation(i as usize).order()
    }

    /// For each index `x`, the index of `g x g⁻¹`.
    pub fn conjugation_map(&self, g: &Permutation) -> Vec<u32> {
        let g_inv = g.inverse();
        let mut tmp = vec![0u16; self.degree];
        let mut out_buf = vec![0u16; self.degree];
        (0..self.len)
            .map(|x| {
                compose_into(self.element(x), g_inv.images(), &mut tmp);
                compose_into(g.images(), &tmp, &mut out_buf);
                self.lookup(&out_buf)
            })
            .collect()
    }

    /// Index of `g x g⁻¹`.
    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        let g_inv = invert_slice(self.element(g as usize));
        let mut tmp = vec![0u16; self.degree];
        let mut out = vec![0u16; self.degree];
        compose_into(self.element(x as usize), &g_inv, &mut tmp);
        compose_into(self.element(g as usize), &tmp, &mut out);
        self.lookup(&out)
    }

    /// The subgroup generated by the given elements.
    pub fn closure(&self, generators: &[u32]) -> SubgroupHandle {
        let gens: Vec<u32> = generators.iter().copied().filter(|&g| g != 0).collect();
        let mut seen: HashSet<u32> = HashSet::from([0]);
        let mut queue = vec![0u32];
        let mut buf = vec![0u16; self.degree];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                compose_into(self.element(x as usize), self.element(g as usize), &mut buf);
                let y = self.lookup(&buf);
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        let mut members: Vec<u32> = seen.into_iter().collect();
        members.sort_unstable();
        SubgroupHandle { members }
    }

    /// The whole group as a subgroup handle.
    pub fn whole(&self) -> SubgroupHandle {
        SubgroupHandle {
            members: (0..self.len as u32).collect(),
        }
    }

    pub fn trivial(&self) -> SubgroupHandle {
        SubgroupHandle { members: vec![0] }
    }
}

/// A subgroup of a tabulated group, stored as its sorted element indices.
///
/// The sorted index list is the canonical key: two handles into the same
/// table are equal exactly when the subgroups are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupHandle {
    members: Vec<u32>,
}

impl SubgroupHandle {
    /// Wraps a member list, checking that it is a subgroup of `table`.
    pub fn new(table: &ElementTable, mut members: Vec<u32>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(Error::Precondition("subgroup must contain the identity".into()));
        }
        if members.last().is_some_and(|&m| m as usize >= table.len()) {
            return Err(Error::Precondition("member index out of range".into()));
        }
        let handle = SubgroupHandle { members };
        for &a in handle.members() {
            for &b in handle.members() {
                if !handle.contains(table.mul(a, b)) {
                    return Err(Error::Precondition("member set is not closed".into()));
                }
            }
        }
        Ok(handle)
    }

    pub(crate) fn from_sorted(members: Vec<u32>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        SubgroupHandle { members }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self, table: &ElementTable) -> Vec<u32> {
        let mut gens = Vec::new();
        let mut span = table.trivial();
        for &x in &self.members {
            if span.order() == self.order() {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = table.closure(&gens);
            }
        }
        gens
    }

    /// `g H g⁻¹`, given the conjugation map of `g`.
    pub fn conjugate_by_map(&self, map: &[u32]) -> SubgroupHandle {
        let mut members: Vec<u32> = self.members.iter().map(|&x| map[x as usize]).collect();
        members.sort_unstable();
        SubgroupHandle { members }
    }

    /// Whether some element has order equal to the subgroup order.
    pub fn is_cyclic(&self, table: &ElementTable) -> bool {
        let n = self.order() as u64;
        self.members.iter().any(|&x| table.element_order(x) == n)
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        crate::arith::is_power_of(self.order() as u64, p)
    }
}
