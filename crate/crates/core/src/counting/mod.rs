//! Counting subgroups of order `p^a`.
//!
//! Every p-subgroup lies in some conjugate of a fixed Sylow p-subgroup `P`,
//! so the subgroups of order `p^a` of `G` are the union of the conjugation
//! orbits of the subgroups of order `p^a` of `P`.

mod lattice;

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use lattice::lattice_levels;
pub use lattice::{p_subgroup_lattice, p_subgroups_of_order, MAX_LOCAL_ORDER};

use crate::arith::{factorize, is_prime, valuation};
use crate::error::{Error, Result};
use crate::groups::{GroupSpec, DEFAULT_DEGREE_CAP};
use crate::perm::{ElementTable, PermGroup, SubgroupHandle, DEFAULT_ENUMERATION_CAP};

/// Default cap on distinct subgroups produced by one count.
pub const DEFAULT_SUBGROUP_CAP: usize = 200_000;

/// Resource limits for the exhaustive algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_elements: usize,
    pub max_subgroups: usize,
    pub max_degree: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_elements: DEFAULT_ENUMERATION_CAP,
            max_subgroups: DEFAULT_SUBGROUP_CAP,
            max_degree: DEFAULT_DEGREE_CAP,
        }
    }
}

/// One conjugacy class of subgroups found by a count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    /// First member of the class met inside the Sylow subgroup.
    pub representative: SubgroupHandle,
    pub orbit_len: u64,
}

/// Result of counting the subgroups of order `p^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub spec: String,
    pub p: u64,
    pub a: u32,
    pub count: u64,
    pub orbits: Vec<OrbitSummary>,
    /// `p^m`, the full p-part of the group order.
    pub sylow_order: u64,
}

impl CountReport {
    pub fn mod_p(&self) -> u64 {
        self.count % self.p
    }

    pub fn mod_p2(&self) -> u64 {
        self.count % (self.p * self.p)
    }
}

/// A group together with its element table and cached counting data.
///
/// Safe to share across threads; caches fill on first use.
pub struct GroupContext {
    label: String,
    spec: Option<GroupSpec>,
    group: PermGroup,
    table: ElementTable,
    order: u64,
    caps: Caps,
    conjugators: OnceLock<Vec<Vec<u32>>>,
    sylows: Mutex<BTreeMap<u64, SubgroupHandle>>,
    lattices: Mutex<BTreeMap<u64, LatticeCache>>,
    reports: Mutex<BTreeMap<(u64, u32), Arc<CountReport>>>,
}

type Levels = Arc<Vec<Vec<SubgroupHandle>>>;

/// Sylow lattice levels for one prime, as far as the subgroup cap allows.
struct LatticeCache {
    levels: Levels,
    /// False when the next level exceeded the cap; requests beyond
    /// `levels` then fail without recomputation.
    complete: bool,
}

impl fmt::Debug for GroupContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupContext")
            .field("label", &self.label)
            .field("order", &self.order)
            .field("degree", &self.group.degree())
            .finish()
    }
}

impl GroupContext {
    pub fn from_spec(spec: &GroupSpec, caps: Caps) -> Result<Self> {
        let group = spec.build_with_cap(caps.max_degree)?;
        Self::build(spec.to_string(), Some(spec.clone()), group, caps)
    }

    pub fn from_group(group: PermGroup, caps: Caps) -> Result<Self> {
        let label = group
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        Self::build(format!("<{label}>"), None, group, caps)
    }

    fn build(label: String, spec: Option<GroupSpec>, group: PermGroup, caps: Caps) -> Result<Self> {
        let table = group.enumerate_elements(caps.max_elements)?;
        let order = table.len() as u64;
        Ok(GroupContext {
            label,
            spec,
            group,
            table,
            order,
            caps,
            conjugators: OnceLock::new(),
            sylows: Mutex::default(),
            lattices: Mutex::default(),
            reports: Mutex::default(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn table(&self) -> &ElementTable {
        &self.table
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    /// Primes dividing the group order, increasing.
    pub fn primes(&self) -> Vec<u64> {
        factorize(self.order).into_iter().map(|(p, _)| p).collect()
    }

    /// Exponent `m` of the full p-part `p^m` of the order.
    pub fn sylow_exponent(&self, p: u64) -> u32 {
        valuation(self.order, p)
    }

    /// Conjugation maps `x ↦ s x s⁻¹` for each generator `s`.
    pub fn conjugators(&self) -> &[Vec<u32>] {
        self.conjugators.get_or_init(|| {
            self.group
                .generators()
                .iter()
                .filter(|g| !g.is_identity())
                .map(|g| self.table.conjugation_map(g))
                .collect()
        })
    }

    /// The Sylow p-subgroup built by [`sylow_subgroup`], cached.
    pub fn sylow(&self, p: u64) -> Result<SubgroupHandle> {
        check_prime(p)?;
        if let Some(s) = self.sylows.lock().unwrap().get(&p) {
            return Ok(s.clone());
        }
        let s = sylow_subgroup(&self.table, p);
        self.sylows.lock().unwrap().insert(p, s.clone());
        Ok(s)
    }

    /// Subgroups of the cached Sylow p-subgroup, level by level.
    pub fn sylow_lattice(&self, p: u64) -> Result<Levels> {
        self.lattice_through(p, self.sylow_exponent(p))
    }

    /// Lattice levels `0..=a` (possibly more).
    fn lattice_through(&self, p: u64, a: u32) -> Result<Levels> {
        let cached = self.lattices.lock().unwrap().get(&p).map(|c| (Arc::clone(&c.levels), c.complete));
        let (levels, complete) = match cached {
            Some(hit) => hit,
            None => {
                let sylow = self.sylow(p)?;
                let (levels, complete) =
                    lattice_levels(&self.table, &sylow, u32::MAX, self.caps.max_subgroups)?;
                let levels = Arc::new(levels);
                self.lattices.lock().unwrap().insert(
                    p,
                    LatticeCache {
                        levels: Arc::clone(&levels),
                        complete,
                    },
                );
                (levels, complete)
            }
        };
        if levels.len() > a as usize || complete {
            Ok(levels)
        } else {
            Err(Error::SubgroupCap(self.caps.max_subgroups))
        }
    }

    /// The conjugation orbit of `h` under the group, sorted by canonical key.
    pub fn conjugacy_orbit(&self, h: &SubgroupHandle) -> Result<Vec<SubgroupHandle>> {
        let mut seen = HashSet::new();
        self.expand_orbit(h, &mut seen)?;
        let mut out: Vec<SubgroupHandle> = seen.into_iter().collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Adds the orbit of `h` (assumed unseen) to `seen`; returns its length.
    fn expand_orbit(&self, h: &SubgroupHandle, seen: &mut HashSet<SubgroupHandle>) -> Result<u64> {
        let cap = self.caps.max_subgroups;
        let maps = self.conjugators();
        let mut len = 1;
        seen.insert(h.clone());
        let mut queue = VecDeque::from([h.clone()]);
        while let Some(k) = queue.pop_front() {
            for map in maps {
                let c = k.conjugate_by_map(map);
                if !seen.contains(&c) {
                    if seen.len() >= cap {
                        return Err(Error::SubgroupCap(cap));
                    }
                    seen.insert(c.clone());
                    queue.push_back(c);
                    len += 1;
                }
            }
        }
        Ok(len)
    }

    /// Count of subgroups of order `p^a`, cached per `(p, a)`.
    pub fn count(&self, p: u64, a: u32) -> Result<Arc<CountReport>> {
        if let Some(r) = self.reports.lock().unwrap().get(&(p, a)) {
            return Ok(Arc::clone(r));
        }
        let report = Arc::new(count_subgroups_of_order(self, p, a)?);
        self.reports
            .lock()
            .unwrap()
            .insert((p, a), Arc::clone(&report));
        Ok(report)
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{p} is not prime")))
    }
}

fn is_p_power_order(table: &ElementTable, x: u32, p: u64) -> bool {
    crate::arith::is_power_of(table.element_order(x), p)
}

/// A Sylow p-subgroup, grown greedily: starting from the trivial subgroup,
/// repeatedly adjoin the first element (in table order) of p-power order that
/// lies outside and normalizes the current subgroup. Such an element exists
/// until the full p-part is reached, since a p-subgroup `Q` properly inside a
/// Sylow subgroup `P` has `N_P(Q) > Q`.
///
/// Returns the trivial subgroup when `p` does not divide the order.
pub fn sylow_subgroup(table: &ElementTable, p: u64) -> SubgroupHandle {
    let target = p.pow(valuation(table.len() as u64, p)) as usize;
    let mut q = table.trivial();
    let mut gens: Vec<u32> = Vec::new();
    while q.order() < target {
        let x = (1..table.len() as u32)
            .find(|&x| {
                !q.contains(x)
                    && is_p_power_order(table, x, p)
                    && gens.iter().all(|&g| q.contains(table.conjugate(x, g)))
            })
            .expect("a proper p-subgroup has a normalizing p-element outside it");
        gens.push(x);
        q = table.closure(&gens);
        debug_assert!(q.is_p_group(p));
    }
    q
}

/// Counts the subgroups of order `p^a` of the context's group.
pub fn count_subgroups_of_order(ctx: &GroupContext, p: u64, a: u32) -> Result<CountReport> {
    check_prime(p)?;
    let m = ctx.sylow_exponent(p);
    let sylow_order = p.pow(m);
    if a == 0 {
        return Ok(CountReport {
            spec: ctx.label.clone(),
            p,
            a,
            count: 1,
            orbits: vec![OrbitSummary {
                representative: ctx.table.trivial(),
                orbit_len: 1,
            }],
            sylow_order,
        });
    }
    if a > m {
        return Err(Error::Precondition(format!(
            "{p}^{a} does not divide the group order {}",
            ctx.order
        )));
    }
    let lattice = ctx.lattice_through(p, a)?;
    let mut seen = HashSet::new();
    let mut orbits = Vec::new();
    for h in &lattice[a as usize] {
        if seen.contains(h) {
            continue;
        }
        let len = ctx.expand_orbit(h, &mut seen)?;
        orbits.push(OrbitSummary {
            representative: h.clone(),
            orbit_len: len,
        });
    }
    Ok(CountReport {
        spec: ctx.label.clone(),
        p,
        a,
        count: seen.len() as u64,
        orbits,
        sylow_order,
    })
}

/// Number of Sylow p-subgroups: the size of the conjugation orbit of one of them.
pub fn count_sylow(ctx: &GroupContext, p: u64) -> Result<u64> {
    let sylow = ctx.sylow(p)?;
    Ok(ctx.conjugacy_orbit(&sylow)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::normalizer_bruteforce;

    fn ctx(s: &str) -> GroupContext {
        GroupContext::from_spec(&s.parse().unwrap(), Caps::default()).unwrap()
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(ctx("Symmetric(4)").sylow(2).unwrap().order(), 8);
        assert_eq!(ctx("GL2(3)").sylow(3).unwrap().order(), 3);
        assert_eq!(ctx("AbelianP(3,[2,1,1])").sylow(3).unwrap().order(), 81);
        assert_eq!(ctx("Symmetric(4)").sylow(5).unwrap().order(), 1);
        assert!(ctx("Symmetric(4)").sylow(4).is_err());
    }

    #[test]
    fn lattice_of_small_p_groups() {
        let d8 = ctx("Dihedral(8)");
        let whole = d8.table().whole();
        let sizes: Vec<usize> = p_subgroup_lattice(d8.table(), &whole, 10, 1000)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, vec![1, 5, 3, 1]);

        let e = ctx("ElemAbelian(3,3)");
        let subs = p_subgroups_of_order(e.table(), &e.table().whole(), 1, 1000).unwrap();
        assert_eq!(subs.len(), 13);

        let c = ctx("Cyclic(27)");
        for a in 0..=3 {
            assert_eq!(p_subgroups_of_order(c.table(), &c.table().whole(), a, 10).unwrap().len(), 1);
        }
        assert!(p_subgroups_of_order(c.table(), &c.table().whole(), 4, 10).is_err());
        let s3 = ctx("Symmetric(3)");
        assert!(p_subgroups_of_order(s3.table(), &s3.table().whole(), 1, 10).is_err());
    }

    #[test]
    fn subgroup_cap_is_enforced() {
        let e = ctx("ElemAbelian(2,4)");
        let err = p_subgroups_of_order(e.table(), &e.table().whole(), 2, 20).unwrap_err();
        assert_eq!(err, Error::SubgroupCap(20));
    }

    #[test]
    fn counts_and_orbits() {
        let s4 = ctx("Symmetric(4)");
        let r = s4.count(2, 2).unwrap();
        assert_eq!(r.count, 7);
        assert_eq!(r.mod_p2(), 3);
        assert_eq!(r.orbits.iter().map(|o| o.orbit_len).sum::<u64>(), 7);
        for o in &r.orbits {
            let n = normalizer_bruteforce(s4.table(), &o.representative);
            assert_eq!(o.orbit_len * n.order() as u64, 24);
        }
        assert_eq!(s4.count(3, 0).unwrap().count, 1);
        assert!(s4.count(3, 2).is_err());
        assert!(s4.count(5, 1).is_err());
    }

    #[test]
    fn sylow_counts() {
        assert_eq!(count_sylow(&ctx("Symmetric(4)"), 2).unwrap(), 3);
        assert_eq!(count_sylow(&ctx("GL2(4)"), 2).unwrap(), 5);
        assert_eq!(count_sylow(&ctx("FrobeniusAffine(19,3)"), 3).unwrap(), 19);
        assert_eq!(count_sylow(&ctx("Cyclic(12)"), 3).unwrap(), 1);
    }

    #[test]
    fn contexts_from_raw_groups() {
        let g = PermGroup::trivial(3);
        let c = GroupContext::from_group(g, Caps::default()).unwrap();
        assert_eq!(c.order(), 1);
        assert_eq!(c.count(2, 0).unwrap().count, 1);
        assert!(c.label().starts_with('<'));
    }
}
