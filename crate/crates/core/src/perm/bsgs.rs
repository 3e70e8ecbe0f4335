//! Deterministic Schreier–Sims.
//!
//! Base points are always the smallest point moved by the element that forces
//! a new level, so the same generators always produce the same chain.

use num_bigint::BigUint;

use super::permutation::Permutation;

/// One level of the stabilizer chain.
#[derive(Clone, Debug)]
pub struct Level {
    pub(crate) point: usize,
    pub(crate) generators: Vec<Permutation>,
    /// Fundamental orbit, in discovery order.
    pub(crate) orbit: Vec<usize>,
    /// `transversal[u]` maps `point` to `u`, for every `u` in the orbit.
    pub(crate) transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut level = Level {
            point,
            generators: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.point];
        let mut next = 0;
        while next < self.orbit.len() {
            let u = self.orbit[next];
            next += 1;
            for s in &self.generators {
                let v = s.apply(u);
                if self.transversal[v].is_none() {
                    let t = s.compose_unchecked(self.transversal[u].as_ref().unwrap());
                    self.transversal[v] = Some(t);
                    self.orbit.push(v);
                }
            }
        }
    }

    pub fn point(&self) -> usize {
        self.point
    }

    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub(crate) fn representative(&self, u: usize) -> Option<&Permutation> {
        self.transversal[u].as_ref()
    }
}

/// Base and strong generating set.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut bsgs = Bsgs {
            degree,
            levels: Vec::new(),
        };
        for g in generators.iter().filter(|g| !g.is_identity()) {
            if bsgs.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let point = g.first_moved_point().unwrap();
                bsgs.levels.push(Level::new(point, degree));
            }
            // A generator belongs to every level whose earlier base points it fixes.
            for level in bsgs.levels.iter_mut() {
                level.generators.push(g.clone());
                if g.apply(level.point) != level.point {
                    break;
                }
            }
        }
        for level in bsgs.levels.iter_mut() {
            level.rebuild_orbit(degree);
        }
        bsgs.complete();
        bsgs
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match self.find_missing(lvl) {
                Some((h, stuck)) => {
                    if stuck == self.levels.len() {
                        let point = h.first_moved_point().unwrap();
                        self.levels.push(Level::new(point, self.degree));
                    }
                    for l in lvl + 1..=stuck {
                        self.levels[l].generators.push(h.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    i = stuck as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// Sifts every Schreier generator of level `lvl` through the levels below;
    /// returns the first non-trivial residue and the level where it stopped.
    fn find_missing(&self, lvl: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[lvl];
        for &u in &level.orbit {
            let tu = level.transversal[u].as_ref().unwrap();
            for s in &level.generators {
                let v = s.apply(u);
                let tv_inv = level.transversal[v].as_ref().unwrap().inverse();
                let g = tv_inv.compose_unchecked(&s.compose_unchecked(tu));
                if g.is_identity() {
                    continue;
                }
                let (h, stuck) = self.strip_from(g, lvl + 1);
                if stuck < self.levels.len() || !h.is_identity() {
                    return Some((h, stuck));
                }
            }
        }
        None
    }

    fn strip_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let u = g.apply(level.point);
            match level.transversal[u].as_ref() {
                Some(t) => g = t.inverse().compose_unchecked(&g),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    /// Residue of `g` after sifting and the number of levels passed.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.strip_from(g.clone(), 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, reached) = self.sift(g);
        reached == self.levels.len() && h.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    /// Product of the fundamental orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Every strong generator, without repetition.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }
}
