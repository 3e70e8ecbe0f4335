//! Published classifications that no bounded search can establish.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactKind {
    /// `n` is the number of Sylow p-subgroups of some finite group.
    Sylow,
    /// `n` is a subgroup count of some finite group, but never a Sylow count.
    FrobeniusButPseudoSylow,
    /// No finite group has exactly `n` subgroups of order `p^a`, for any `a`.
    PseudoFrobenius,
}

impl fmt::Display for FactKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactKind::Sylow => "SYLOW",
            FactKind::FrobeniusButPseudoSylow => "FROBENIUS_BUT_PSEUDO_SYLOW",
            FactKind::PseudoFrobenius => "PSEUDO_FROBENIUS",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Numbers {
    Odd,
    Exactly(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fact {
    pub p: u64,
    pub numbers: Numbers,
    pub kind: FactKind,
    pub citation: &'static str,
}

impl Fact {
    pub fn applies_to(&self, p: u64, n: u64) -> bool {
        self.p == p
            && match self.numbers {
                Numbers::Odd => n % 2 == 1,
                Numbers::Exactly(m) => m == n,
            }
    }

    pub fn note(&self) -> String {
        format!("{}: {}", self.kind, self.citation)
    }
}

pub const FACTS: &[Fact] = &[
    Fact {
        p: 2,
        numbers: Numbers::Odd,
        kind: FactKind::Sylow,
        citation: "every odd number is the number of Sylow 2-subgroups of some finite group",
    },
    Fact {
        p: 3,
        numbers: Numbers::Exactly(22),
        kind: FactKind::FrobeniusButPseudoSylow,
        citation: "no finite group has exactly 22 Sylow 3-subgroups (M. Hall), \
                   while C9 x C3 x C3 has 22 subgroups of order 9",
    },
    Fact {
        p: 3,
        numbers: Numbers::Exactly(46),
        kind: FactKind::PseudoFrobenius,
        citation: "no finite group has exactly 46 subgroups of order 3^a for any a",
    },
    Fact {
        p: 5,
        numbers: Numbers::Exactly(51),
        kind: FactKind::PseudoFrobenius,
        citation: "no finite group has exactly 51 subgroups of order 5^a for any a \
                   (established through the primitive groups of small degree)",
    },
];

pub fn facts_for(p: u64, n: u64) -> Vec<&'static Fact> {
    FACTS.iter().filter(|f| f.applies_to(p, n)).collect()
}
