//! The abstract quantum superalgebra U_q(gl(2/1)).
//!
//! Generators are `K1, K2, K3` (with inverses), the even root vectors
//! `E12, E21` and the odd root vectors `E23, E32`. The composite root
//! vectors are
//!
//! ```text
//! E13 =  E12 E23 - q^-1 E23 E12
//! E31 = -E21 E32 + q^-1 E32 E21
//! ```
//!
//! This module holds words and linear combinations in these symbols, the
//! defining relation set, closed-form straightening of a generator past
//! `E12^N E13^M`, and an independent oracle that straightens by single
//! swaps only.

mod oracle;
mod relations;
mod straighten;

use std::collections::BTreeMap;
use std::fmt;

use crate::scalarfield::QScalar;
use crate::walgebra::Parity;

pub use oracle::{oracle_normalize, oracle_straighten, OracleMode};
pub use relations::{relation_set, Relation, RelationFamily};
pub use straighten::{
    lemma1_rhs, sorted_terms, straighten, verify_lemma1, Lemma1Check, Lemma1Identity, StraightenTerm,
};

/// Root vectors `E_jk`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    E12,
    E21,
    E23,
    E32,
    E13,
    E31,
}

impl Root {
    pub const ALL: [Root; 6] = [Root::E12, Root::E21, Root::E23, Root::E32, Root::E13, Root::E31];

    /// `(j, k)` for `E_jk`.
    pub fn indices(self) -> (u8, u8) {
        match self {
            Root::E12 => (1, 2),
            Root::E21 => (2, 1),
            Root::E23 => (2, 3),
            Root::E32 => (3, 2),
            Root::E13 => (1, 3),
            Root::E31 => (3, 1),
        }
    }

    pub fn parity(self) -> Parity {
        match self {
            Root::E12 | Root::E21 => Parity::Even,
            _ => Parity::Odd,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Root::E12 => "E12",
            Root::E21 => "E21",
            Root::E23 => "E23",
            Root::E32 => "E32",
            Root::E13 => "E13",
            Root::E31 => "E31",
        }
    }

    /// Exponent of `q` in `K_i E_jk = q^w E_jk K_i`, i.e. `δij - δik`.
    pub fn weight(self, i: u8) -> i32 {
        let (j, k) = self.indices();
        (i == j) as i32 - (i == k) as i32
    }

    /// True for roots in the parabolic subalgebra 𝒜₀.
    pub fn in_a0(self) -> bool {
        !matches!(self, Root::E12 | Root::E13)
    }
}

/// A letter of a word: a root vector or a power of a Cartan generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(Root),
    /// `K_index^power`, `index ∈ {1, 2, 3}`.
    K(u8, i32),
}

impl Generator {
    pub const E12: Generator = Generator::E(Root::E12);
    pub const E21: Generator = Generator::E(Root::E21);
    pub const E23: Generator = Generator::E(Root::E23);
    pub const E32: Generator = Generator::E(Root::E32);
    pub const E13: Generator = Generator::E(Root::E13);
    pub const E31: Generator = Generator::E(Root::E31);

    /// All single generators: the six root vectors and `K_i^±1`.
    pub fn all() -> Vec<Generator> {
        let mut out: Vec<Generator> = Root::ALL.iter().map(|&r| Generator::E(r)).collect();
        for i in 1..=3 {
            out.push(Generator::K(i, 1));
            out.push(Generator::K(i, -1));
        }
        out
    }

    pub fn parity(self) -> Parity {
        match self {
            Generator::E(r) => r.parity(),
            Generator::K(..) => Parity::Even,
        }
    }

    pub fn is_a0(self) -> bool {
        match self {
            Generator::E(r) => r.in_a0(),
            Generator::K(..) => true,
        }
    }

    /// ASCII name: `E12`, `K2`, `K2inv`, `K2^3`.
    pub fn name(self) -> String {
        match self {
            Generator::E(r) => r.name().to_string(),
            Generator::K(i, 1) => format!("K{i}"),
            Generator::K(i, -1) => format!("K{i}inv"),
            Generator::K(i, p) => format!("K{i}^{p}"),
        }
    }

    pub fn from_name(name: &str) -> Option<Generator> {
        let g = match name {
            "E12" => Generator::E12,
            "E21" => Generator::E21,
            "E23" => Generator::E23,
            "E32" => Generator::E32,
            "E13" => Generator::E13,
            "E31" => Generator::E31,
            "K1" => Generator::K(1, 1),
            "K2" => Generator::K(2, 1),
            "K3" => Generator::K(3, 1),
            "K1inv" => Generator::K(1, -1),
            "K2inv" => Generator::K(2, -1),
            "K3inv" => Generator::K(3, -1),
            _ => return None,
        };
        Some(g)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::K(i, p) if *p != 1 => write!(f, "K{i}^{p}"),
            _ => write!(f, "{}", self.name()),
        }
    }
}

/// A word in the generators; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UWord(pub Vec<Generator>);

impl UWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(letters: &[Generator]) -> Self {
        Self(letters.to_vec())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self) -> Parity {
        self.0.iter().fold(Parity::Even, |acc, g| acc + g.parity())
    }

    pub fn concat(&self, other: &UWord) -> UWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        UWord(v)
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        // Collapse runs of identical root vectors into powers.
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let g = self.0[i];
            let mut j = i + 1;
            while matches!(g, Generator::E(_)) && j < self.0.len() && self.0[j] == g {
                j += 1;
            }
            if j - i > 1 {
                parts.push(format!("{g}^{}", j - i));
            } else {
                parts.push(g.to_string());
            }
            i = j;
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A linear combination of words, with no reduction applied.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UElement {
    terms: BTreeMap<UWord, QScalar>,
}

impl UElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(QScalar::one(), UWord::empty())
    }

    pub fn word(c: QScalar, w: UWord) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn letters(letters: &[Generator]) -> Self {
        Self::word(QScalar::one(), UWord::new(letters))
    }

    pub fn generator(g: Generator) -> Self {
        Self::letters(&[g])
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::word(c, UWord::empty())
    }

    pub fn add_term(&mut self, w: UWord, c: QScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w.clone()).or_default();
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UWord, &QScalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.mul(c));
        }
        out
    }

    /// Concatenation product in the free algebra.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        out
    }

    /// Every letter that occurs.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out: Vec<Generator> = self.terms.keys().flat_map(|w| w.0.iter().copied()).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Rewrite `E13` and `E31` by their defining expressions.
    pub fn expand_composites(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::scalar(c.clone());
            for &g in &w.0 {
                acc = acc.mul(&match g {
                    Generator::E(Root::E13) => e13_definition(),
                    Generator::E(Root::E31) => e31_definition(),
                    _ => Self::generator(g),
                });
            }
            out = out.add(&acc);
        }
        out
    }

    /// Drop words containing `E23 E23` or `E32 E32` as adjacent letters.
    pub fn kill_odd_squares(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let square =
                w.0.windows(2)
                    .any(|p| p[0] == p[1] && matches!(p[0], Generator::E(Root::E23) | Generator::E(Root::E32)));
            if !square {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| if c.is_one() { w.to_string() } else { format!("{c}*{w}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `E12 E23 - q^-1 E23 E12`.
pub fn e13_definition() -> UElement {
    UElement::letters(&[Generator::E12, Generator::E23])
        .sub(&UElement::letters(&[Generator::E23, Generator::E12]).scale(&QScalar::q_pow(-1)))
}

/// `-E21 E32 + q^-1 E32 E21`.
pub fn e31_definition() -> UElement {
    UElement::letters(&[Generator::E32, Generator::E21])
        .scale(&QScalar::q_pow(-1))
        .sub(&UElement::letters(&[Generator::E21, Generator::E32]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_follow_kronecker_difference() {
        assert_eq!(Root::E12.weight(1), 1);
        assert_eq!(Root::E32.weight(2), -1);
        assert_eq!(Root::E13.weight(1), 1);
        assert_eq!(Root::E13.weight(2), 0);
        assert_eq!(Root::E13.weight(3), -1);
        assert_eq!(Root::E31.weight(1), -1);
    }

    #[test]
    fn parities() {
        assert_eq!(UWord::new(&[Generator::E23, Generator::E12]).parity(), Parity::Odd);
        assert_eq!(UWord::new(&[Generator::E13, Generator::E31]).parity(), Parity::Even);
    }

    #[test]
    fn names_round_trip() {
        for g in Generator::all() {
            assert_eq!(Generator::from_name(&g.name()), Some(g));
        }
    }

    #[test]
    fn word_display_collapses_powers() {
        let w = UWord::new(&[Generator::E12, Generator::E12, Generator::E13, Generator::K(2, -1)]);
        assert_eq!(w.to_string(), "E12^2*E13*K2^-1");
    }
}
