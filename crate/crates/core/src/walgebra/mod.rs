//! The realization algebra 𝒲: one q-boson mode `a⁺, a, t = q^x`, two
//! fermion modes `b_f⁺, b_f`, and an abstract U_q(gl(1/1)) factor
//! `e32, k2^±1, k3^±1, e23`, with ℤ₂-graded signs.
//!
//! Monomials are stored in the fixed order
//! `a⁺^m t^k a^l · b1⁺ b1 · b2⁺ b2 · e32 k2^α k3^β e23`.
//! Because `a⁺a = (t - t⁻¹)/(q - q⁻¹)`, a normal-ordered monomial never
//! contains both `a⁺` and `a`.

mod gl11;
mod normal_order;

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::scalarfield::{LaurentPoly, QScalar, NVARS};
use normal_order::{normalize_word, word_of};

pub use gl11::{lambda23_integer, Gl11Realization};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("operand has mixed parity")]
    MixedParity,
    #[error("fermion mode 2 is occupied; it is reserved for the gl(1/1) image")]
    OccupiedMode2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Generator symbols of 𝒲.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WSymbol {
    Create,
    Annihilate,
    T,
    TInv,
    B1Create,
    B1,
    B2Create,
    B2,
    E23,
    E32,
    K2,
    K2Inv,
    K3,
    K3Inv,
}

impl WSymbol {
    pub const ALL: [WSymbol; 14] = [
        WSymbol::Create,
        WSymbol::Annihilate,
        WSymbol::T,
        WSymbol::TInv,
        WSymbol::B1Create,
        WSymbol::B1,
        WSymbol::B2Create,
        WSymbol::B2,
        WSymbol::E23,
        WSymbol::E32,
        WSymbol::K2,
        WSymbol::K2Inv,
        WSymbol::K3,
        WSymbol::K3Inv,
    ];

    /// ASCII name used by the parser and renderer.
    pub fn name(self) -> &'static str {
        match self {
            WSymbol::Create => "a+",
            WSymbol::Annihilate => "a",
            WSymbol::T => "t",
            WSymbol::TInv => "tinv",
            WSymbol::B1Create => "b+",
            WSymbol::B1 => "b",
            WSymbol::B2Create => "b2+",
            WSymbol::B2 => "b2",
            WSymbol::E23 => "e23",
            WSymbol::E32 => "e32",
            WSymbol::K2 => "k2",
            WSymbol::K2Inv => "k2inv",
            WSymbol::K3 => "k3",
            WSymbol::K3Inv => "k3inv",
        }
    }

    pub fn from_name(name: &str) -> Result<Self, WError> {
        let s = match name {
            "a+" => WSymbol::Create,
            "a" => WSymbol::Annihilate,
            "t" => WSymbol::T,
            "tinv" => WSymbol::TInv,
            "b+" | "b1+" => WSymbol::B1Create,
            "b" | "b1" => WSymbol::B1,
            "b2+" => WSymbol::B2Create,
            "b2" => WSymbol::B2,
            "e23" => WSymbol::E23,
            "e32" => WSymbol::E32,
            "k2" => WSymbol::K2,
            "k2inv" => WSymbol::K2Inv,
            "k3" => WSymbol::K3,
            "k3inv" => WSymbol::K3Inv,
            _ => return Err(WError::UnknownSymbol(name.to_string())),
        };
        Ok(s)
    }

    fn monomial(self) -> WMonomial {
        let mut m = WMonomial::identity();
        match self {
            WSymbol::Create => m.create = 1,
            WSymbol::Annihilate => m.annihilate = 1,
            WSymbol::T => m.t = 1,
            WSymbol::TInv => m.t = -1,
            WSymbol::B1Create => m.fermions[0].0 = true,
            WSymbol::B1 => m.fermions[0].1 = true,
            WSymbol::B2Create => m.fermions[1].0 = true,
            WSymbol::B2 => m.fermions[1].1 = true,
            WSymbol::E23 => m.e23 = true,
            WSymbol::E32 => m.e32 = true,
            WSymbol::K2 => m.k2 = 1,
            WSymbol::K2Inv => m.k2 = -1,
            WSymbol::K3 => m.k3 = 1,
            WSymbol::K3Inv => m.k3 = -1,
        }
        m
    }
}

/// A normal-ordered monomial of 𝒲.
///
/// `fermions[f] = (b⁺ present, b present)` for mode `f + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WMonomial {
    pub create: u32,
    pub t: i32,
    pub annihilate: u32,
    pub fermions: [(bool, bool); 2],
    pub e32: bool,
    pub k2: i32,
    pub k3: i32,
    pub e23: bool,
}

impl WMonomial {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::default()
    }

    pub fn parity(&self) -> Parity {
        let odd =
            self.fermions.iter().map(|&(c, a)| c as u32 + a as u32).sum::<u32>() + self.e32 as u32 + self.e23 as u32;
        if odd % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// True if any of `e32, k2, k3, e23` occurs.
    pub fn has_gl11(&self) -> bool {
        self.e32 || self.e23 || self.k2 != 0 || self.k3 != 0
    }

    pub fn uses_mode(&self, mode: usize) -> bool {
        let (c, a) = self.fermions[mode];
        c || a
    }

    /// The same monomial with the gl(1/1) part removed.
    pub fn without_gl11(&self) -> Self {
        Self {
            e32: false,
            k2: 0,
            k3: 0,
            e23: false,
            ..*self
        }
    }
}

impl fmt::Display for WMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let pow = |name: &str, k: i64| -> String {
            if k == 1 {
                name.to_string()
            } else {
                format!("{name}^{k}")
            }
        };
        if self.create > 0 {
            parts.push(pow("a+", self.create as i64));
        }
        if self.t != 0 {
            parts.push(pow("t", self.t as i64));
        }
        if self.annihilate > 0 {
            parts.push(pow("a", self.annihilate as i64));
        }
        let names = [("b+", "b"), ("b2+", "b2")];
        for (mode, &(c, a)) in self.fermions.iter().enumerate() {
            if c {
                parts.push(names[mode].0.to_string());
            }
            if a {
                parts.push(names[mode].1.to_string());
            }
        }
        if self.e32 {
            parts.push("e32".into());
        }
        if self.k2 != 0 {
            parts.push(pow("k2", self.k2 as i64));
        }
        if self.k3 != 0 {
            parts.push(pow("k3", self.k3 as i64));
        }
        if self.e23 {
            parts.push("e23".into());
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Parity of an element: homogeneous or mixed. Zero counts as even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementParity {
    Homogeneous(Parity),
    Mixed,
}

/// A finite linear combination of normal-ordered monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WElement {
    terms: BTreeMap<WMonomial, QScalar>,
}

type Terms = Vec<(WMonomial, QScalar)>;

thread_local! {
    static PRODUCT_CACHE: RefCell<HashMap<(WMonomial, WMonomial), Terms>> =
        RefCell::new(HashMap::new());
}

fn monomial_product(x: &WMonomial, y: &WMonomial) -> Vec<(WMonomial, QScalar)> {
    if let Some(hit) = PRODUCT_CACHE.with(|c| c.borrow().get(&(*x, *y)).cloned()) {
        return hit;
    }
    let mut word = Vec::new();
    word_of(x, &mut word);
    word_of(y, &mut word);
    let mut acc: BTreeMap<WMonomial, QScalar> = BTreeMap::new();
    normalize_word(QScalar::one(), word, &mut |m, c| {
        let e = acc.entry(m).or_default();
        *e = e.add(&c);
    });
    let out: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    PRODUCT_CACHE.with(|c| c.borrow_mut().insert((*x, *y), out.clone()));
    out
}

impl WElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(QScalar::one())
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::term(c, WMonomial::identity())
    }

    pub fn term(c: QScalar, m: WMonomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    /// Unit-coefficient element for a generator symbol.
    pub fn generator(symbol: WSymbol) -> Self {
        Self::term(QScalar::one(), symbol.monomial())
    }

    pub fn generator_named(name: &str) -> Result<Self, WError> {
        Ok(Self::generator(WSymbol::from_name(name)?))
    }

    /// Build from an arbitrary list of letters by normal ordering their
    /// product.
    pub fn product_of(symbols: &[WSymbol]) -> Self {
        symbols.iter().fold(Self::one(), |acc, &s| acc.mul(&Self::generator(s)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WMonomial, &QScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &WMonomial) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: WMonomial, c: QScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect(),
        }
    }

    /// Normal-ordered product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (mx, cx) in &self.terms {
            for (my, cy) in &other.terms {
                let c = cx.mul(cy);
                for (m, k) in monomial_product(mx, my) {
                    out.add_term(m, c.mul(&k));
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn parity(&self) -> ElementParity {
        let mut it = self.terms.keys().map(|m| m.parity());
        let Some(first) = it.next() else {
            return ElementParity::Homogeneous(Parity::Even);
        };
        if it.all(|p| p == first) {
            ElementParity::Homogeneous(first)
        } else {
            ElementParity::Mixed
        }
    }

    pub fn homogeneous_parity(&self) -> Result<Parity, WError> {
        match self.parity() {
            ElementParity::Homogeneous(p) => Ok(p),
            ElementParity::Mixed => Err(WError::MixedParity),
        }
    }

    /// `xy - (-1)^{|x||y|} yx` for homogeneous `x`, `y`.
    pub fn supercommutator(&self, other: &Self) -> Result<Self, WError> {
        let px = self.homogeneous_parity()?;
        let py = other.homogeneous_parity()?;
        let xy = self.mul(other);
        let yx = other.mul(self);
        Ok(if px.is_odd() && py.is_odd() {
            xy.add(&yx)
        } else {
            xy.sub(&yx)
        })
    }

    /// `xy + yx`, with no parity requirement.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self))
    }

    pub fn has_gl11(&self) -> bool {
        self.terms.keys().any(|m| m.has_gl11())
    }

    /// Fermion modes (0-based) used by any monomial.
    pub fn modes_used(&self) -> [bool; 2] {
        let mut out = [false; 2];
        for m in self.terms.keys() {
            out[0] |= m.uses_mode(0);
            out[1] |= m.uses_mode(1);
        }
        out
    }

    /// Indeterminates occurring in any coefficient.
    pub fn variables(&self) -> [bool; NVARS] {
        let mut out = [false; NVARS];
        for c in self.terms.values() {
            let v = c.variables();
            for i in 0..NVARS {
                out[i] |= v[i];
            }
        }
        out
    }

    /// Largest a⁺ power over all monomials.
    pub fn max_create_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.create).max().unwrap_or(0)
    }

    /// Apply `f` to every coefficient.
    pub fn map_coefficients<E>(&self, mut f: impl FnMut(&QScalar) -> Result<QScalar, E>) -> Result<Self, E> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// Keep only the monomials satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&WMonomial) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Replace every gl(1/1) factor by its image under `r`.
    pub fn substitute_gl11(&self, r: Gl11Realization) -> Result<Self, WError> {
        gl11::substitute(self, r)
    }
}

fn render_term(num: &LaurentPoly, m: &WMonomial) -> (bool, String) {
    let mono = if m.is_identity() { String::new() } else { m.to_string() };
    if num.len() == 1 {
        let (e, c) = num.leading().expect("one term");
        let negative = c < &num::BigRational::from_integer(0.into());
        let abs = LaurentPoly::monomial(num::Signed::abs(c), *e);
        let s = abs.to_string();
        let body = if mono.is_empty() {
            s
        } else if abs.is_one() {
            mono
        } else {
            format!("{s}*{mono}")
        };
        (negative, body)
    } else {
        let s = format!("({num})");
        let body = if mono.is_empty() { s } else { format!("{s}*{mono}") };
        (false, body)
    }
}

fn join_terms(parts: &[(bool, String)]) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in parts.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

impl fmt::Display for WElement {
    /// Terms with denominator 1 are listed individually; terms sharing a
    /// denominator are grouped as `(...)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut groups: Vec<(LaurentPoly, Vec<(bool, String)>)> = Vec::new();
        for (m, c) in &self.terms {
            let rendered = render_term(c.numerator(), m);
            match groups.iter_mut().find(|(d, _)| d == c.denominator()) {
                Some((_, v)) => v.push(rendered),
                None => groups.push((c.denominator().clone(), vec![rendered])),
            }
        }
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (den, terms) in groups {
            if den.is_one() {
                parts.extend(terms);
            } else {
                parts.push((false, format!("({})/({den})", join_terms(&terms))));
            }
        }
        write!(f, "{}", join_terms(&parts))
    }
}

impl fmt::Debug for WElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WElement({self})")
    }
}
