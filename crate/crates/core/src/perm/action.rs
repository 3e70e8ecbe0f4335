//! The natural action of a permutation group on its points.

use super::group::PermGroup;
use super::permutation::Permutation;
use super::table::{ElementTable, SubgroupHandle};
use crate::error::{Error, Result};

/// A partition of the points into blocks of equal size, each block sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    /// The block containing `point`.
    pub fn block_of(&self, point: usize) -> &[usize] {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&point).is_ok())
            .expect("block systems cover every point")
    }

    pub fn is_trivial(&self, degree: usize) -> bool {
        let size = self.block_size();
        size == 1 || size == degree
    }
}

fn check_point(g: &PermGroup, point: usize) -> Result<()> {
    if point >= g.degree() {
        return Err(Error::PointOutOfRange {
            point,
            degree: g.degree(),
        });
    }
    Ok(())
}

/// Orbit of `point`, sorted.
pub fn orbit(g: &PermGroup, point: usize) -> Result<Vec<usize>> {
    check_point(g, point)?;
    let mut seen = vec![false; g.degree()];
    seen[point] = true;
    let mut queue = vec![point];
    let mut out = vec![point];
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y = s.apply(x);
            if !std::mem::replace(&mut seen[y], true) {
                queue.push(y);
                out.push(y);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// All orbits, ordered by smallest point.
pub fn orbits(g: &PermGroup) -> Vec<Vec<usize>> {
    let mut covered = vec![false; g.degree()];
    let mut out = Vec::new();
    for x in 0..g.degree() {
        if !covered[x] {
            let o = orbit(g, x).unwrap();
            for &y in &o {
                covered[y] = true;
            }
            out.push(o);
        }
    }
    out
}

/// Point stabilizer, by scanning the element table.
pub fn stabilizer_bruteforce(table: &ElementTable, point: usize) -> SubgroupHandle {
    let members = (0..table.len())
        .filter(|&i| table.element(i)[point] as usize == point)
        .map(|i| i as u32)
        .collect();
    SubgroupHandle::from_sorted(members)
}

pub fn is_transitive(g: &PermGroup) -> bool {
    orbit(g, 0).map(|o| o.len() == g.degree()).unwrap_or(false)
}

/// 2-transitivity through the rank: a transitive group is 2-transitive
/// exactly when the mean of `fix(g)²` over the group equals 2.
pub fn is_2_transitive(g: &PermGroup, table: &ElementTable) -> Result<bool> {
    if g.degree() < 2 {
        return Err(Error::Precondition(
            "2-transitivity needs at least two points".into(),
        ));
    }
    if !is_transitive(g) {
        return Ok(false);
    }
    Ok(rank(table) == 2)
}

/// Number of orbits on ordered pairs, `(1/|G|) Σ fix(g)²`.
pub fn rank(table: &ElementTable) -> u64 {
    let sum: u64 = table
        .iter()
        .map(|e| {
            let f = e.iter().enumerate().filter(|&(i, &x)| i == x as usize).count() as u64;
            f * f
        })
        .sum();
    debug_assert_eq!(sum % table.len() as u64, 0);
    sum / table.len() as u64
}

/// Finest block system in which `a` and `b` share a block.
pub fn block_system_joining(g: &PermGroup, a: usize, b: usize) -> Result<BlockSystem> {
    check_point(g, a)?;
    check_point(g, b)?;
    let mut parent: Vec<usize> = (0..g.degree()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut pending = Vec::new();
    if a != b {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra.max(rb)] = ra.min(rb);
        pending.push((a, b));
    }
    while let Some((x, y)) = pending.pop() {
        for s in g.generators() {
            let (sx, sy) = (s.apply(x), s.apply(y));
            let (rx, ry) = (find(&mut parent, sx), find(&mut parent, sy));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
                pending.push((sx, sy));
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..g.degree() {
        let r = find(&mut parent, x);
        classes.entry(r).or_default().push(x);
    }
    Ok(BlockSystem {
        blocks: classes.into_values().collect(),
    })
}

/// The distinct non-trivial block systems obtained by joining point 0 with
/// each other point, keeping only those whose blocks are minimal.
pub fn minimal_blocks(g: &PermGroup) -> Result<Vec<BlockSystem>> {
    if !is_transitive(g) {
        return Err(Error::Intransitive);
    }
    let mut systems: Vec<BlockSystem> = Vec::new();
    for b in 1..g.degree() {
        let sys = block_system_joining(g, 0, b)?;
        if !sys.is_trivial(g.degree()) && !systems.contains(&sys) {
            systems.push(sys);
        }
    }
    let mut minimal = systems
        .iter()
        .filter(|s| {
            let mine = s.block_of(0);
            !systems.iter().any(|t| {
                let other = t.block_of(0);
                other.len() < mine.len() && other.iter().all(|x| mine.binary_search(x).is_ok())
            })
        })
        .cloned()
        .collect::<Vec<_>>();
    minimal.sort_by_key(|s| (s.block_size(), s.blocks.clone()));
    Ok(minimal)
}

pub fn is_primitive(g: &PermGroup) -> Result<bool> {
    Ok(minimal_blocks(g)?.is_empty())
}

/// Whether every generator maps each block of `system` onto a block.
pub fn is_block_system(g: &PermGroup, system: &BlockSystem) -> bool {
    g.generators().iter().all(|s| {
        system.blocks().iter().all(|block| {
            let mut image: Vec<usize> = block.iter().map(|&x| s.apply(x)).collect();
            image.sort_unstable();
            system.blocks().contains(&image)
        })
    })
}

/// `N_G(Q) = {g : g Q g⁻¹ = Q}` by scanning every element.
pub fn normalizer_bruteforce(table: &ElementTable, q: &SubgroupHandle) -> SubgroupHandle {
    let gens = q.generators(table);
    let members = (0..table.len() as u32)
        .filter(|&g| gens.iter().all(|&x| q.contains(table.conjugate(g, x))))
        .collect();
    SubgroupHandle::from_sorted(members)
}

pub fn fixed_point_count(p: &Permutation) -> usize {
    p.fixed_point_count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn cyclic(n: usize) -> PermGroup {
        let c: Vec<usize> = (0..n).collect();
        PermGroup::new(vec![cyc(n, &[&c])]).unwrap()
    }

    fn symmetric(n: usize) -> PermGroup {
        let c: Vec<usize> = (0..n).collect();
        PermGroup::new(vec![cyc(n, &[&[0, 1]]), cyc(n, &[&c])]).unwrap()
    }

    #[test]
    fn orbits_of_intransitive_group() {
        let g = PermGroup::new(vec![cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[3, 4]])]).unwrap();
        assert_eq!(orbit(&g, 1).unwrap(), vec![0, 1, 2]);
        assert_eq!(orbits(&g), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        assert!(!is_transitive(&g));
        assert_eq!(minimal_blocks(&g), Err(Error::Intransitive));
        assert!(orbit(&g, 6).is_err());
    }

    #[test]
    fn cyclic_four() {
        let g = cyclic(4);
        let t = g.enumerate_elements(100).unwrap();
        assert!(is_transitive(&g));
        assert!(!is_2_transitive(&g, &t).unwrap());
        let blocks = minimal_blocks(&g).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].blocks(), &[vec![0, 2], vec![1, 3]]);
        assert!(!is_primitive(&g).unwrap());
    }

    #[test]
    fn symmetric_five_is_primitive() {
        let g = symmetric(5);
        let t = g.enumerate_elements(1000).unwrap();
        assert!(is_2_transitive(&g, &t).unwrap());
        assert!(is_primitive(&g).unwrap());
    }

    #[test]
    fn stabilizer_brute_force() {
        let g = symmetric(4);
        let t = g.enumerate_elements(100).unwrap();
        assert_eq!(stabilizer_bruteforce(&t, 2).order(), 6);
    }

    #[test]
    fn normalizer_of_normal_subgroup() {
        let g = symmetric(3);
        let t = g.enumerate_elements(100).unwrap();
        let c = t.index_of_perm(&cyc(3, &[&[0, 1, 2]])).unwrap();
        let q = t.closure(&[c]);
        assert_eq!(normalizer_bruteforce(&t, &q).order(), 6);
    }
}
