use std::fmt;

use crate::error::{Error, Result};

/// A permutation of the points `0..degree`, stored as its image sequence.
///
/// Composition is right-to-left: `a.compose(&b)` maps `i` to `a(b(i))`, so the
/// right factor acts first. The induced action `g . x = g(x)` is a left action.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// Largest supported degree; points must fit in a `u16`.
    pub const MAX_DEGREE: usize = u16::MAX as usize + 1;

    pub fn identity(degree: usize) -> Self {
        assert!(degree <= Self::MAX_DEGREE, "degree {degree} too large");
        Permutation {
            images: (0..degree).map(|i| i as u16).collect(),
        }
    }

    /// Builds a permutation from its image sequence, checking that it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 || degree > Self::MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!("unsupported degree {degree}")));
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{degree}"
                )));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    pub(crate) fn from_raw(images: Vec<u16>) -> Self {
        debug_assert!(Self::is_bijection(&images));
        Permutation { images }
    }

    fn is_bijection(images: &[u16]) -> bool {
        let mut seen = vec![false; images.len()];
        images
            .iter()
            .all(|&x| (x as usize) < images.len() && !std::mem::replace(&mut seen[x as usize], true))
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} appears in more than one cycle"
                    )));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `point`.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `self ∘ other`: maps `i` to `self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: compose_slices(&self.images, &other.images),
        }
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            images: invert_slice(&self.images),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x as usize)
            .count()
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    /// Order of the permutation as an element of the symmetric group.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut order = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// `self` acting on a shifted copy of its domain inside a larger one.
    pub(crate) fn embed(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = (offset + x as usize) as u16;
        }
        Permutation { images }
    }
}

#[inline]
pub(crate) fn compose_slices(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&x| a[x as usize]).collect()
}

#[inline]
pub(crate) fn compose_into(a: &[u16], b: &[u16], out: &mut [u16]) {
    for (o, &x) in out.iter_mut().zip(b) {
        *o = a[x as usize];
    }
}

pub(crate) fn invert_slice(a: &[u16]) -> Vec<u16> {
    let mut inv = vec![0u16; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u16;
    }
    inv
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
