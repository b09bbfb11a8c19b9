//! Sparse multivariate Laurent polynomials over ℚ in the fixed variables
//! `q, p1, p2, p3`, with exact division and a recursive primitive-PRS gcd.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, One, Signed, Zero};

/// Number of indeterminates: `q, p1, p2, p3`.
pub const NVARS: usize = 4;

/// Display names, indexed like the exponent vectors.
pub const VAR_NAMES: [&str; NVARS] = ["q", "p1", "p2", "p3"];

/// Exponent vector. Arrays compare lexicographically, which gives the
/// lex order on `(q, p1, p2, p3)` used everywhere for leading terms.
pub type Exponents = [i32; NVARS];

pub const ZERO_EXP: Exponents = [0; NVARS];

fn add_exp(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = *a;
    for (o, e) in out.iter_mut().zip(b) {
        *o += e;
    }
    out
}

fn sub_exp(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = *a;
    for (o, e) in out.iter_mut().zip(b) {
        *o -= e;
    }
    out
}

/// A finite sum of `c · q^i p1^j p2^k p3^l` with nonzero rational `c`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, ZERO_EXP)
    }

    pub fn monomial(c: BigRational, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    /// The single variable `var` raised to `power`.
    pub fn var_power(var: usize, power: i32) -> Self {
        let mut exps = ZERO_EXP;
        exps[var] = power;
        Self::monomial(BigRational::one(), exps)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ZERO_EXP).map(|c| c.is_one()).unwrap_or(false)
    }

    /// A constant polynomial (including zero).
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&ZERO_EXP).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Exponents, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, exps: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(add_exp(e1, e2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiply by the Laurent monomial `x^shift`.
    pub fn shift(&self, shift: &Exponents) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (add_exp(e, shift), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Componentwise minimum exponent over all terms (zero vector for the
    /// zero polynomial).
    pub fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return ZERO_EXP;
        };
        let mut m = *first;
        for e in it {
            for i in 0..NVARS {
                m[i] = m[i].min(e[i]);
            }
        }
        m
    }

    pub fn max_exponents(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return ZERO_EXP;
        };
        let mut m = *first;
        for e in it {
            for i in 0..NVARS {
                m[i] = m[i].max(e[i]);
            }
        }
        m
    }

    /// Variables that occur with a nonzero exponent in some term.
    pub fn variables(&self) -> [bool; NVARS] {
        let mut used = [false; NVARS];
        for e in self.terms.keys() {
            for i in 0..NVARS {
                used[i] |= e[i] != 0;
            }
        }
        used
    }

    fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    fn degree_in(&self, var: usize) -> i32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Group terms by their exponent in `var`; the map values have that
    /// exponent cleared.
    fn coefficients_in(&self, var: usize) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[var] = 0;
            out.entry(e[var]).or_default().add_term(rest, c.clone());
        }
        out
    }

    fn leading_coefficient_in(&self, var: usize) -> LaurentPoly {
        let d = self.degree_in(var);
        LaurentPoly::from_terms(self.terms.iter().filter(|(e, _)| e[var] == d).map(|(e, c)| {
            let mut rest = *e;
            rest[var] = 0;
            (rest, c.clone())
        }))
    }

    /// Substitute rational values for all four variables.
    ///
    /// Returns `None` when a variable assigned to zero occurs with a
    /// negative exponent.
    pub fn evaluate(&self, values: &[BigRational; NVARS]) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..NVARS {
                let k = e[i];
                if k == 0 {
                    continue;
                }
                if values[i].is_zero() {
                    if k < 0 {
                        return None;
                    }
                    term = BigRational::zero();
                    break;
                }
                term *= pow_rational(&values[i], k);
            }
            acc += term;
        }
        Some(acc)
    }

    /// Replace variable `var` by `value` (a Laurent polynomial).
    /// Negative powers require `value` to be a monomial.
    pub fn substitute(&self, var: usize, value: &LaurentPoly) -> Option<LaurentPoly> {
        let inverse = if value.len() == 1 {
            let (e, c) = value.leading().unwrap();
            let mut inv = ZERO_EXP;
            for i in 0..NVARS {
                inv[i] = -e[i];
            }
            Some(LaurentPoly::monomial(c.recip(), inv))
        } else {
            None
        };
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let k = e[var];
            let mut rest = *e;
            rest[var] = 0;
            let base = LaurentPoly::monomial(c.clone(), rest);
            let factor = if k >= 0 {
                value.pow(k as u32)
            } else {
                inverse.as_ref()?.pow((-k) as u32)
            };
            out = out.add(&base.mul(&factor));
        }
        Some(out)
    }

    /// Exact division by `divisor`. Both must be ordinary polynomials
    /// (nonnegative exponents). Returns `None` if the division is not exact.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (lead_e, lead_c) = divisor.leading().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((e, c)) = rem.leading().map(|(e, c)| (*e, c.clone())) {
            let shift = sub_exp(&e, &lead_e);
            if shift.iter().any(|&x| x < 0) {
                return None;
            }
            let factor = c / &lead_c;
            let t = LaurentPoly::monomial(factor, shift);
            rem = rem.sub(&divisor.mul(&t));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> LaurentPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }
}

pub(crate) fn pow_rational(x: &BigRational, k: i32) -> BigRational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    num::pow(base, k.unsigned_abs() as usize)
}

/// Monic gcd of two ordinary polynomials. `gcd(0, 0) = 0`.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    debug_assert!(a.is_polynomial() && b.is_polynomial());
    gcd_rec(a, b).monic()
}

fn gcd_rec(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one();
    }
    // Pull out the smallest common monomial first.
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let mut common = ZERO_EXP;
    for i in 0..NVARS {
        common[i] = ma[i].min(mb[i]);
    }
    if common != ZERO_EXP {
        let a1 = a.shift(&neg_exp(&common));
        let b1 = b.shift(&neg_exp(&common));
        return gcd_rec(&a1, &b1).shift(&common);
    }
    let va = a.variables();
    let vb = b.variables();
    // A variable present on only one side: the gcd lies in the content.
    for v in 0..NVARS {
        if va[v] != vb[v] {
            let (with, without) = if va[v] { (a, b) } else { (b, a) };
            return content_in(with, v, Some(without));
        }
    }
    let Some(v) = (0..NVARS).find(|&i| va[i]) else {
        return LaurentPoly::one();
    };
    let ca = content_in(a, v, None);
    let cb = content_in(b, v, None);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_rec(&ca, &cb);
    if coprime_in(&pa, &pb, v) {
        return c;
    }
    let g = primitive_prs(pa, pb, v);
    g.mul(&c)
}

/// Value of `p` with every variable except `var` set from `point`, as dense
/// coefficients in `var`.
fn specialize(p: &LaurentPoly, var: usize, point: &[BigRational; NVARS]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.degree_in(var) as usize + 1];
    for (e, c) in &p.terms {
        let mut term = c.clone();
        for i in (0..NVARS).filter(|&i| i != var) {
            term *= num::pow(point[i].clone(), e[i] as usize);
        }
        out[e[var] as usize] += term;
    }
    out
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Degree of the univariate gcd over ℚ.
fn dense_gcd_degree(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let lb = b.last().expect("nonempty").clone();
        while a.len() >= b.len() {
            let f = a.last().expect("nonempty").clone() / &lb;
            let off = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[off + i] -= &f * c;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when primitive `a, b` are certainly coprime: at a point where both
/// leading coefficients in `var` survive, the degree of the specialized gcd
/// bounds the degree of the true gcd.
fn coprime_in(a: &LaurentPoly, b: &LaurentPoly, var: usize) -> bool {
    let (la, lb) = (a.leading_coefficient_in(var), b.leading_coefficient_in(var));
    for attempt in 0..4i64 {
        let point: [BigRational; NVARS] =
            std::array::from_fn(|i| BigRational::from_integer((2 + 3 * i as i64 + 7 * attempt).into()));
        let nonvanishing = |l: &LaurentPoly| l.evaluate(&point).is_some_and(|x| !x.is_zero());
        if nonvanishing(&la) && nonvanishing(&lb) {
            return dense_gcd_degree(specialize(a, var, &point), specialize(b, var, &point)) == 0;
        }
    }
    false
}

fn neg_exp(e: &Exponents) -> Exponents {
    let mut out = *e;
    for x in out.iter_mut() {
        *x = -*x;
    }
    out
}

/// gcd of the coefficients of `p` viewed as a polynomial in `var`.
/// Stops early once the gcd with `stop_with` (if given) is known to be 1.
fn content_in(p: &LaurentPoly, var: usize, stop_with: Option<&LaurentPoly>) -> LaurentPoly {
    let mut acc: Option<LaurentPoly> = stop_with.cloned();
    for (_, coeff) in p.coefficients_in(var) {
        acc = Some(match acc {
            None => coeff,
            Some(g) => gcd_rec(&g, &coeff),
        });
        if acc.as_ref().map(|g| g.is_constant()).unwrap_or(false) {
            return LaurentPoly::one();
        }
    }
    acc.unwrap_or_else(LaurentPoly::one).monic()
}

fn primitive_part_in(p: &LaurentPoly, var: usize) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, var, None);
    p.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of `a` by `b` as polynomials in `var`.
fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly, var: usize) -> LaurentPoly {
    let db = b.degree_in(var);
    let lb = b.leading_coefficient_in(var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.leading_coefficient_in(var);
        let mut shift = ZERO_EXP;
        shift[var] = dr - db;
        r = r.mul(&lb).sub(&b.mul(&lr).shift(&shift));
    }
    r
}

fn primitive_prs(mut a: LaurentPoly, mut b: LaurentPoly, var: usize) -> LaurentPoly {
    if a.degree_in(var) < b.degree_in(var) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.degree_in(var) == 0 {
            // b is a nonzero element of the coefficient ring and primitive.
            return LaurentPoly::one();
        }
        let r = pseudo_remainder(&a, &b, var);
        a = b;
        b = primitive_part_in(&r, var);
    }
    primitive_part_in(&a, var)
}

fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_monomial(e: &Exponents) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(VAR_NAMES[i].to_string()),
            _ => parts.push(format!("{}^{}", VAR_NAMES[i], k)),
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending lex order, e.g. `q^2 + 1 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = fmt_monomial(e);
            if mono.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i32) -> LaurentPoly {
        LaurentPoly::var_power(0, k)
    }
    fn p(i: usize, k: i32) -> LaurentPoly {
        LaurentPoly::var_power(i, k)
    }
    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::constant(BigRational::from_integer(n.into()))
    }

    #[test]
    fn gcd_of_univariate_products() {
        // (q - 1)(q + 1) and (q - 1)(q^2 + 1)
        let a = q(1).sub(&c(1)).mul(&q(1).add(&c(1)));
        let b = q(1).sub(&c(1)).mul(&q(2).add(&c(1)));
        assert_eq!(gcd(&a, &b), q(1).sub(&c(1)));
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn gcd_of_coprime_sparse_pair_is_fast() {
        let a = LaurentPoly::from_terms([
            ([4, 1, 2, 1], r(1, 1)),
            ([3, 0, 6, 0], r(-3, 2)),
            ([0, 2, 1, 1], r(3, 2)),
        ]);
        let b = LaurentPoly::from_terms([
            ([2, 0, 2, 0], r(-4, 3)),
            ([1, 3, 2, 0], r(3, 2)),
            ([0, 0, 0, 1], r(2, 1)),
        ]);
        let t = std::time::Instant::now();
        assert_eq!(gcd(&a, &b), LaurentPoly::one());
        assert!(t.elapsed().as_secs() < 2);
        let f = b.add(&q(1));
        assert_eq!(gcd(&a.mul(&f), &b.mul(&f)), f.monic());
    }

    #[test]
    fn gcd_multivariate_common_factor() {
        let f = p(1, 1).mul(&q(1)).sub(&c(1)); // p1 q - 1
        let a = f.mul(&p(2, 1).add(&q(2)));
        let b = f.mul(&p(3, 2).sub(&p(1, 1)));
        assert_eq!(gcd(&a, &b), f.monic());
        assert_eq!(gcd(&a, &p(2, 1).add(&c(3))), LaurentPoly::one());
    }

    #[test]
    fn gcd_pulls_out_monomials() {
        let a = q(2).mul(&p(1, 1)).mul(&q(1).add(&c(1)));
        let b = q(1).mul(&p(1, 3));
        assert_eq!(gcd(&a, &b), q(1).mul(&p(1, 1)));
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = q(2).sub(&c(1));
        assert_eq!(a.div_exact(&q(1).sub(&c(1))), Some(q(1).add(&c(1))));
        assert_eq!(a.div_exact(&q(1).add(&c(2))), None);
    }

    #[test]
    fn display_descending() {
        let x = q(2).add(&c(1)).add(&q(-2));
        assert_eq!(x.to_string(), "q^2 + 1 + q^-2");
        let y = q(1).scale(&BigRational::new(3.into(), 2.into())).sub(&p(2, -1));
        assert_eq!(y.to_string(), "3/2*q - p2^-1");
    }
}
