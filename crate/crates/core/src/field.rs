//! Lookup-table arithmetic in GF(q) for small prime powers `q`.
//!
//! An element is stored as the index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` of
//! its coefficient vector with respect to the basis `1, x, ..., x^{k-1}`.

use crate::arith::prime_power;
use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 512;

#[derive(Clone, Debug)]
pub struct FieldTable {
    q: usize,
    p: usize,
    k: u32,
    /// Monic defining polynomial, low degree first (length `k + 1`).
    modulus: Vec<usize>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    primitive: u16,
}

impl FieldTable {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_FIELD_SIZE {
            return Err(Error::Precondition(format!(
                "field size {q} exceeds {MAX_FIELD_SIZE}"
            )));
        }
        let (q, p) = (q as usize, p as usize);
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, k as usize)
        };
        let digits = |x: usize| -> Vec<usize> {
            (0..k).scan(x, |r, _| {
                let d = *r % p;
                *r /= p;
                Some(d)
            })
            .collect()
        };
        let index = |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &d| acc * p + d) };

        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = index(&sum) as u16;
                let prod = poly_mulmod(&da, &db, &modulus, p);
                mul[a * q + b] = index(&prod) as u16;
            }
        }
        let mut neg = vec![0u16; q];
        let mut inv = vec![0u16; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as u16;
                }
                if mul[a * q + b] == 1 {
                    inv[a] = b as u16;
                }
            }
        }
        let mut field = FieldTable {
            q,
            p,
            k,
            modulus,
            add,
            mul,
            neg,
            inv,
            primitive: 0,
        };
        field.primitive = (1..q as u16)
            .find(|&g| field.multiplicative_order(g) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        Ok(field)
    }

    pub fn size(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Defining polynomial, coefficients low degree first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn primitive_element(&self) -> u16 {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u16) -> Option<u16> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: u16, e: usize) -> u16 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn multiplicative_order(&self, a: u16) -> usize {
        assert!(a != 0, "zero has no multiplicative order");
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }
}

fn poly_mulmod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let k = modulus.len() - 1;
    let mut prod = vec![0usize; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            for (i, &m) in modulus.iter().enumerate() {
                let t = &mut prod[d - k + i];
                *t = (*t + p * p - c * m % p) % p;
            }
        }
    }
    prod.truncate(k);
    prod
}

/// Remainder of `a` modulo the monic polynomial `m`, both low degree first.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let c = r.pop().unwrap();
        if c != 0 {
            let shift = r.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
            }
        }
    }
    r
}

fn monic(lower: usize, degree: usize, p: usize, low_first: bool) -> Vec<usize> {
    let mut coeffs: Vec<usize> = (0..degree)
        .scan(lower, |r, _| {
            let d = *r % p;
            *r /= p;
            Some(d)
        })
        .collect();
    if low_first {
        coeffs.reverse();
    }
    coeffs.push(1);
    coeffs
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        for lower in 0..p.pow(d as u32) {
            let g = monic(lower, d, p, false);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible polynomial of the given degree, comparing
/// coefficient vectors from the constant term upwards.
fn smallest_irreducible(p: usize, k: usize) -> Vec<usize> {
    (0..p.pow(k as u32))
        .map(|lower| monic(lower, k, p, true))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field(f: &FieldTable) {
        let q = f.size() as u16;
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..q {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in (0..q).step_by(3) {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
        assert_eq!(f.multiplicative_order(f.primitive_element()), f.size() - 1);
    }

    #[test]
    fn prime_field() {
        let f = FieldTable::new(5).unwrap();
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.add(3, 4), 2);
        check_field(&f);
    }

    #[test]
    fn four_elements() {
        let f = FieldTable::new(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        check_field(&f);
    }

    #[test]
    fn nine_elements_use_x2_plus_1() {
        let f = FieldTable::new(9).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        check_field(&f);
    }

    #[test]
    fn larger_fields() {
        for q in [8, 16, 25, 27, 32, 49, 64, 81, 128] {
            check_field(&FieldTable::new(q).unwrap());
        }
        let f = FieldTable::new(512).unwrap();
        assert_eq!(f.multiplicative_order(f.primitive_element()), 511);
    }

    #[test]
    fn not_prime_powers() {
        assert_eq!(FieldTable::new(6).unwrap_err(), Error::NotPrimePower(6));
        assert!(FieldTable::new(1).is_err());
        assert!(FieldTable::new(1024).is_err());
    }
}
