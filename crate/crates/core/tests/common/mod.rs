//! Brute-force reference implementations used to pin down expected values.
//!
//! Nothing here touches the library's stabilizer chains, element tables or
//! lattice code: elements are found by breadth-first search over generator
//! products, and p-subgroups by closing `⟨S, x⟩` for every p-subgroup `S`
//! found so far and every element `x` of p-power order.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use frobnum::groups::GroupSpec;

pub fn spec(text: &str) -> GroupSpec {
    text.parse().unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn generator_images(spec: &GroupSpec) -> (usize, Vec<Vec<u16>>) {
    let g = spec.build().unwrap();
    let gens = g.generators().iter().map(|p| p.images().to_vec()).collect();
    (g.degree(), gens)
}

/// All elements of the group as image vectors, by breadth-first closure.
pub fn elements(spec: &GroupSpec) -> Vec<Vec<u16>> {
    let (degree, gens) = generator_images(spec);
    closure_of(degree, &gens)
}

/// Every product of the given permutations, identity first.
pub fn closure_of(degree: usize, gens: &[Vec<u16>]) -> Vec<Vec<u16>> {
    let identity: Vec<u16> = (0..degree as u16).collect();
    let mut seen = HashSet::from([identity.clone()]);
    let mut out = vec![identity];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let y: Vec<u16> = g.iter().map(|&x| out[i][x as usize]).collect();
            if seen.insert(y.clone()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

pub struct Oracle {
    pub n: usize,
    pub elements: Vec<Vec<u16>>,
    mul: Vec<u32>,
    order_of: Vec<u64>,
}

/// A subgroup given by a membership bitmap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sub {
    pub bits: Vec<u64>,
    pub size: usize,
}

impl Sub {
    pub fn has(&self, i: u32) -> bool {
        self.bits[i as usize / 64] >> (i % 64) & 1 == 1
    }

    pub fn members(&self) -> Vec<u32> {
        (0..self.bits.len() as u32 * 64).filter(|&i| self.has(i)).collect()
    }
}

impl Oracle {
    pub fn new(text: &str) -> Self {
        let elements = elements(&spec(text));
        let n = elements.len();
        assert!(n <= 4000, "{text}: order {n} is too large for the oracle");
        let index: HashMap<&[u16], u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.as_slice(), i as u32))
            .collect();
        let mut mul = vec![0u32; n * n];
        let mut buf = vec![0u16; elements[0].len()];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                for (o, &x) in buf.iter_mut().zip(b) {
                    *o = a[x as usize];
                }
                mul[i * n + j] = index[buf.as_slice()];
            }
        }
        let order_of = (0..n)
            .map(|x| {
                let (mut y, mut k) = (x, 1);
                while y != 0 {
                    y = mul[y * n + x] as usize;
                    k += 1;
                }
                // Invariant: y = x^k; the loop stops at the first k with x^k = 1.
                k
            })
            .collect();
        Oracle {
            n,
            elements,
            mul,
            order_of,
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn element_order(&self, x: u32) -> u64 {
        self.order_of[x as usize]
    }

    fn empty(&self) -> Vec<u64> {
        vec![0; self.n.div_ceil(64)]
    }

    /// Closure of `gens`, or `None` once it grows past `limit` elements.
    pub fn closure(&self, gens: &[u32], limit: usize) -> Option<Sub> {
        let mut bits = self.empty();
        bits[0] |= 1;
        let mut list = vec![0u32];
        let mut i = 0;
        while i < list.len() {
            for &g in gens {
                let y = self.mul(list[i], g);
                if bits[y as usize / 64] >> (y % 64) & 1 == 0 {
                    bits[y as usize / 64] |= 1 << (y % 64);
                    list.push(y);
                    if list.len() > limit {
                        return None;
                    }
                }
            }
            i += 1;
        }
        Some(Sub {
            bits,
            size: list.len(),
        })
    }

    /// Every p-subgroup, grouped by exponent `a` of its order `p^a`.
    pub fn p_subgroups(&self, p: u64) -> Vec<Vec<Sub>> {
        let mut sylow_order = 1usize;
        while (self.n / sylow_order).is_multiple_of(p as usize) {
            sylow_order *= p as usize;
        }
        let is_p_power = |mut k: usize| {
            while k.is_multiple_of(p as usize) {
                k /= p as usize;
            }
            k == 1
        };
        let p_elements: Vec<u32> = (0..self.n as u32)
            .filter(|&x| is_p_power(self.element_order(x) as usize))
            .collect();
        let trivial = self.closure(&[], 1).unwrap();
        let mut found: HashSet<Sub> = HashSet::from([trivial.clone()]);
        let mut queue = VecDeque::from([(trivial, Vec::<u32>::new())]);
        let mut levels: Vec<Vec<Sub>> = Vec::new();
        while let Some((s, gens)) = queue.pop_front() {
            let mut level = 0;
            let mut k = s.size;
            while k > 1 {
                k /= p as usize;
                level += 1;
            }
            if levels.len() <= level {
                levels.resize(level + 1, Vec::new());
            }
            levels[level].push(s.clone());
            // ⟨S, x⟩ depends only on the coset xS, so one x per coset suffices.
            let mut done = s.bits.clone();
            for &x in &p_elements {
                if done[x as usize / 64] >> (x % 64) & 1 == 1 {
                    continue;
                }
                for m in s.members() {
                    let y = self.mul(x, m);
                    done[y as usize / 64] |= 1 << (y % 64);
                }
                let mut next = gens.clone();
                next.push(x);
                let Some(k) = self.closure(&next, sylow_order) else {
                    continue;
                };
                if is_p_power(k.size) && !found.contains(&k) {
                    found.insert(k.clone());
                    queue.push_back((k, next));
                }
            }
        }
        levels
    }

    /// Number of subgroups of order `p^a` for `a = 0, 1, ..., m`.
    pub fn p_subgroup_counts(&self, p: u64) -> Vec<u64> {
        self.p_subgroups(p).iter().map(|l| l.len() as u64).collect()
    }

    pub fn is_cyclic(&self, s: &Sub) -> bool {
        s.members().iter().any(|&x| self.element_order(x) as usize == s.size)
    }

    /// Size of the normalizer of `s`.
    pub fn normalizer_order(&self, s: &Sub) -> usize {
        let members = s.members();
        (0..self.n as u32)
            .filter(|&g| {
                let ginv = (0..self.n as u32).find(|&h| self.mul(g, h) == 0).unwrap();
                members.iter().all(|&m| s.has(self.mul(self.mul(g, m), ginv)))
            })
            .count()
    }
}
