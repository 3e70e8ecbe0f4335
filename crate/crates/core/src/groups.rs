//! Declarative group descriptions and their permutation representations.
//!
//! Text form (whitespace between tokens is ignored):
//!
//! ```text
//! spec := "Cyclic(" n ")"
//!       | "AbelianP(" p "," "[" part ("," part)* "]" ")"
//!       | "ElemAbelian(" p "," k ")"
//!       | "Dihedral(" order ")"          order = 2m, m >= 3
//!       | "Symmetric(" n ")" | "Alternating(" n ")"
//!       | "GL2(" q ")"
//!       | "FrobeniusAffine(" q "," p ")"  q prime, p prime, p | q-1
//!       | "Product(" spec ("," spec)* ")"
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};
use crate::field::FieldTable;
use crate::hallpoly::Partition;
use crate::perm::{PermGroup, Permutation};

/// Default cap on the degree of constructed representations.
pub const DEFAULT_DEGREE_CAP: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u64),
    AbelianP { p: u64, parts: Partition },
    ElemAbelian { p: u64, k: u32 },
    /// Dihedral group of the given order `2m`, acting on `m` points.
    Dihedral(u64),
    Symmetric(u64),
    Alternating(u64),
    Gl2(u64),
    FrobeniusAffine { q: u64, p: u64 },
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            GroupSpec::Cyclic(n) if *n == 0 => bad("Cyclic needs n >= 1".into()),
            GroupSpec::AbelianP { p, parts } => {
                if !is_prime(*p) {
                    bad(format!("AbelianP: {p} is not prime"))
                } else if parts.is_empty() {
                    bad("AbelianP needs a nonempty partition".into())
                } else {
                    Ok(())
                }
            }
            GroupSpec::ElemAbelian { p, k } => {
                if !is_prime(*p) {
                    bad(format!("ElemAbelian: {p} is not prime"))
                } else if *k == 0 {
                    bad("ElemAbelian needs k >= 1".into())
                } else {
                    Ok(())
                }
            }
            GroupSpec::Dihedral(order) if order % 2 != 0 || *order < 6 => bad(format!(
                "Dihedral takes an even order 2m with m >= 3, got {order}"
            )),
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) if *n == 0 => {
                bad("degree must be at least 1".into())
            }
            GroupSpec::Gl2(q) if prime_power(*q).is_none() => {
                bad(format!("GL2: {q} is not a prime power"))
            }
            GroupSpec::FrobeniusAffine { q, p } => {
                if !is_prime(*q) || !is_prime(*p) {
                    bad(format!("FrobeniusAffine({q},{p}) needs q and p prime"))
                } else if (q - 1) % p != 0 {
                    bad(format!("FrobeniusAffine: {p} does not divide {q}-1"))
                } else {
                    Ok(())
                }
            }
            GroupSpec::Product(factors) => {
                if factors.is_empty() {
                    return bad("Product needs at least one factor".into());
                }
                factors.iter().try_for_each(GroupSpec::validate)
            }
            _ => Ok(()),
        }
    }

    /// Degree of the representation built by [`GroupSpec::build`], without building it.
    pub fn degree(&self) -> u64 {
        match self {
            GroupSpec::Cyclic(n) | GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => *n,
            GroupSpec::AbelianP { p, parts } => {
                parts.parts().iter().map(|&l| p.saturating_pow(l)).sum()
            }
            GroupSpec::ElemAbelian { p, k } => p * *k as u64,
            GroupSpec::Dihedral(order) => order / 2,
            GroupSpec::Gl2(q) => q * q - 1,
            GroupSpec::FrobeniusAffine { q, .. } => *q,
            GroupSpec::Product(factors) => factors.iter().map(GroupSpec::degree).sum(),
        }
    }

    /// Group order from its closed form.
    pub fn order(&self) -> BigUint {
        let big = BigUint::from;
        match self {
            GroupSpec::Cyclic(n) => big(*n),
            GroupSpec::AbelianP { p, parts } => big(*p).pow(parts.weight()),
            GroupSpec::ElemAbelian { p, k } => big(*p).pow(*k),
            GroupSpec::Dihedral(order) => big(*order),
            GroupSpec::Symmetric(n) => (1..=*n).map(big).product(),
            GroupSpec::Alternating(n) => {
                let full: BigUint = (1..=*n).map(big).product();
                if *n >= 2 {
                    full / 2u32
                } else {
                    full
                }
            }
            GroupSpec::Gl2(q) => big((q * q - 1) * (q * q - q)),
            GroupSpec::FrobeniusAffine { q, p } => big(q * p),
            GroupSpec::Product(factors) => factors.iter().map(GroupSpec::order).product(),
        }
    }

    pub fn is_abelian_p_group(&self) -> Option<(u64, Partition)> {
        match self {
            GroupSpec::AbelianP { p, parts } => Some((*p, parts.clone())),
            GroupSpec::ElemAbelian { p, k } => Some((*p, Partition::new(vec![1; *k as usize]).ok()?)),
            _ => None,
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        self.build_with_cap(DEFAULT_DEGREE_CAP)
    }

    pub fn build_with_cap(&self, degree_cap: usize) -> Result<PermGroup> {
        self.validate()?;
        let degree = self.degree();
        if degree > degree_cap as u64 {
            return Err(Error::DegreeCap {
                degree: degree as usize,
                cap: degree_cap,
            });
        }
        PermGroup::new(self.generators()?)
    }

    fn generators(&self) -> Result<Vec<Permutation>> {
        let gens = match self {
            GroupSpec::Cyclic(n) => vec![cycle_on(*n as usize, 0, *n as usize)],
            GroupSpec::AbelianP { p, parts } => abelian_generators(*p, parts.parts()),
            GroupSpec::ElemAbelian { p, k } => abelian_generators(*p, &vec![1; *k as usize]),
            GroupSpec::Dihedral(order) => {
                let m = (*order / 2) as usize;
                let rotation = cycle_on(m, 0, m);
                let reflection = Permutation::from_images((0..m).map(|i| (m - i) % m).collect())?;
                vec![rotation, reflection]
            }
            GroupSpec::Symmetric(n) => {
                let n = *n as usize;
                if n < 2 {
                    vec![Permutation::identity(n)]
                } else {
                    vec![cycle_on(n, 0, 2), cycle_on(n, 0, n)]
                }
            }
            GroupSpec::Alternating(n) => {
                let n = *n as usize;
                if n < 3 {
                    vec![Permutation::identity(n)]
                } else {
                    (2..n)
                        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
                        .collect::<Result<_>>()?
                }
            }
            GroupSpec::Gl2(q) => gl2_generators(&FieldTable::new(*q)?)?,
            GroupSpec::FrobeniusAffine { q, p } => {
                let field = FieldTable::new(*q)?;
                let n = *q as usize;
                let g = field.primitive_element();
                let a = field.pow(g, (n - 1) / *p as usize);
                let translate = Permutation::from_images(
                    (0..n as u16).map(|x| field.add(x, 1) as usize).collect(),
                )?;
                let scale = Permutation::from_images(
                    (0..n as u16).map(|x| field.mul(a, x) as usize).collect(),
                )?;
                vec![translate, scale]
            }
            GroupSpec::Product(factors) => {
                let degree = self.degree() as usize;
                let mut offset = 0;
                let mut gens = Vec::new();
                for f in factors {
                    for g in f.generators()? {
                        gens.push(g.embed(offset, degree));
                    }
                    offset += f.degree() as usize;
                }
                gens
            }
        };
        Ok(gens)
    }
}

/// The cycle `(start start+1 ... start+len-1)` on `degree` points.
fn cycle_on(degree: usize, start: usize, len: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in 0..len {
        images[start + i] = start + (i + 1) % len;
    }
    Permutation::from_images(images).unwrap()
}

/// One regular cycle of length `p^λ_i` per part, on disjoint point sets.
fn abelian_generators(p: u64, parts: &[u32]) -> Vec<Permutation> {
    let lens: Vec<usize> = parts.iter().map(|&l| p.pow(l) as usize).collect();
    let degree = lens.iter().sum();
    let mut offset = 0;
    lens.iter()
        .map(|&len| {
            let c = cycle_on(degree, offset, len);
            offset += len;
            c
        })
        .collect()
}

/// GL₂(q) acting on the `q² − 1` nonzero column vectors `(x, y)`,
/// vector `(x, y)` being point `x + q·y − 1`.
fn gl2_generators(field: &FieldTable) -> Result<Vec<Permutation>> {
    let q = field.size();
    let w = field.primitive_element();
    let act = |m: [[u16; 2]; 2]| -> Result<Permutation> {
        let images = (1..q * q)
            .map(|v| {
                let (x, y) = ((v % q) as u16, (v / q) as u16);
                let nx = field.add(field.mul(m[0][0], x), field.mul(m[0][1], y)) as usize;
                let ny = field.add(field.mul(m[1][0], x), field.mul(m[1][1], y)) as usize;
                nx + q * ny - 1
            })
            .collect();
        Permutation::from_images(images)
    };
    Ok(vec![
        act([[w, 0], [0, 1]])?,
        act([[1, 0], [0, w]])?,
        act([[1, 1], [0, 1]])?,
        act([[0, 1], [1, 0]])?,
    ])
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Cyclic({n})"),
            GroupSpec::AbelianP { p, parts } => write!(f, "AbelianP({p},{parts})"),
            GroupSpec::ElemAbelian { p, k } => write!(f, "ElemAbelian({p},{k})"),
            GroupSpec::Dihedral(order) => write!(f, "Dihedral({order})"),
            GroupSpec::Symmetric(n) => write!(f, "Symmetric({n})"),
            GroupSpec::Alternating(n) => write!(f, "Alternating({n})"),
            GroupSpec::Gl2(q) => write!(f, "GL2({q})"),
            GroupSpec::FrobeniusAffine { q, p } => write!(f, "FrobeniusAffine({q},{p})"),
            GroupSpec::Product(factors) => {
                write!(f, "Product(")?;
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { src: s, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos != s.len() {
            return Err(parser.error("trailing input"));
        }
        spec.validate()?;
        Ok(spec)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.error("expected a group name"));
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        self.pos += len;
        self.src[start..start + len]
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "number out of range".into(),
            })
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| Error::Parse {
            pos: start,
            msg: "number out of range".into(),
        })
    }

    fn args<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        let mut out = vec![item(self)?];
        while self.peek() == Some(',') {
            self.expect(',')?;
            out.push(item(self)?);
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let name_pos = self.pos;
        let name = self.ident()?.to_owned();
        self.expect('(')?;
        let spec = match name.as_str() {
            "Cyclic" => GroupSpec::Cyclic(self.number()?),
            "Dihedral" => GroupSpec::Dihedral(self.number()?),
            "Symmetric" => GroupSpec::Symmetric(self.number()?),
            "Alternating" => GroupSpec::Alternating(self.number()?),
            "GL2" => GroupSpec::Gl2(self.number()?),
            "ElemAbelian" => {
                let p = self.number()?;
                self.expect(',')?;
                GroupSpec::ElemAbelian { p, k: self.small()? }
            }
            "FrobeniusAffine" => {
                let q = self.number()?;
                self.expect(',')?;
                GroupSpec::FrobeniusAffine { q, p: self.number()? }
            }
            "AbelianP" => {
                let p = self.number()?;
                self.expect(',')?;
                self.expect('[')?;
                let at = self.pos;
                let parts = self.args(Self::small)?;
                self.expect(']')?;
                let parts = Partition::new(parts).map_err(|e| Error::Parse {
                    pos: at,
                    msg: e.to_string(),
                })?;
                GroupSpec::AbelianP { p, parts }
            }
            "Product" | "DirectProduct" => GroupSpec::Product(self.args(Self::spec)?),
            other => {
                return Err(Error::Parse {
                    pos: name_pos,
                    msg: format!("unknown group family '{other}'"),
                })
            }
        };
        self.expect(')')?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn text_form_round_trips() {
        for s in [
            "Cyclic(12)",
            "AbelianP(3,[2,1,1])",
            "ElemAbelian(3,3)",
            "Dihedral(8)",
            "GL2(9)",
            "FrobeniusAffine(19,3)",
            "Product(GL2(3),FrobeniusAffine(7,3))",
        ] {
            assert_eq!(parse(s).to_string(), s);
        }
        assert_eq!(
            parse(" Product( Symmetric(3) , Alternating( 4 ) ) ").to_string(),
            "Product(Symmetric(3),Alternating(4))"
        );
    }

    #[test]
    fn parse_errors() {
        for s in ["", "Cyclic", "Cyclic(", "Cyclic(3", "Cyclic(3))", "Foo(3)", "AbelianP(3,[1,2])"] {
            assert!(matches!(s.parse::<GroupSpec>(), Err(Error::Parse { .. })), "{s}");
        }
    }

    #[test]
    fn invariant_violations() {
        for s in [
            "GL2(6)",
            "FrobeniusAffine(19,5)",
            "FrobeniusAffine(15,7)",
            "Dihedral(4)",
            "Dihedral(9)",
            "Cyclic(0)",
            "AbelianP(4,[1])",
        ] {
            assert!(matches!(s.parse::<GroupSpec>(), Err(Error::InvalidSpec(_))), "{s}");
        }
    }

    #[test]
    fn degrees_and_orders() {
        let cases = [
            ("GL2(3)", 8, 48u64),
            ("GL2(9)", 80, 5760),
            ("AbelianP(3,[2,1,1])", 15, 81),
            ("FrobeniusAffine(19,3)", 19, 57),
            ("Product(GL2(3),FrobeniusAffine(7,3))", 15, 48 * 21),
            ("Symmetric(5)", 5, 120),
            ("Alternating(5)", 5, 60),
            ("Dihedral(12)", 6, 12),
            ("Cyclic(12)", 12, 12),
            ("ElemAbelian(2,3)", 6, 8),
        ];
        for (s, degree, order) in cases {
            let spec = parse(s);
            let g = spec.build().unwrap();
            assert_eq!(g.degree(), degree, "{s}");
            assert_eq!(g.order(), BigUint::from(order), "{s}");
            assert_eq!(spec.order(), BigUint::from(order), "{s}");
        }
    }

    #[test]
    fn degree_cap() {
        let err = parse("Cyclic(2000)").build().unwrap_err();
        assert_eq!(err, Error::DegreeCap { degree: 2000, cap: 1024 });
    }

    #[test]
    fn abelian_and_affine_shapes() {
        assert!(parse("AbelianP(3,[2,1,1])").build().unwrap().is_abelian());
        assert!(!parse("FrobeniusAffine(7,3)").build().unwrap().is_abelian());
    }

    #[test]
    fn trivial_small_cases() {
        for s in ["Cyclic(1)", "Symmetric(1)", "Alternating(2)"] {
            assert_eq!(parse(s).build().unwrap().order(), BigUint::from(1u32));
        }
    }
}
