//! Closed-form straightening of `g · E12^N · E13^M`.

use std::collections::BTreeMap;

use super::oracle::{oracle_normalize, OracleMode};
use super::{Generator, Root, UElement, UWord};
use crate::scalarfield::{q_delta, q_integer, QScalar};

/// One term `coeff · E12^n E13^m · a0word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StraightenTerm {
    pub n: u32,
    pub m: u8,
    pub a0word: UWord,
    pub coeff: QScalar,
}

impl StraightenTerm {
    pub(crate) fn key(&self) -> (u32, u8, UWord) {
        (self.n, self.m, self.a0word.clone())
    }

    /// The full word `E12^n E13^m a0word`.
    pub fn word(&self) -> UWord {
        let mut v = vec![Generator::E12; self.n as usize];
        v.extend(std::iter::repeat_n(Generator::E13, self.m as usize));
        v.extend_from_slice(self.a0word.letters());
        UWord(v)
    }
}

fn k(i: u8, p: i32) -> Generator {
    Generator::K(i, p)
}

fn sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Move every `K` to the right end of the word (in index order, merged),
/// collecting the q-powers from `K_i E = q^w E K_i`.
fn canonical_a0(word: &[Generator]) -> (i32, UWord) {
    let mut seen = [0i32; 4];
    let mut q_exp = 0;
    let mut out = Vec::new();
    for &g in word {
        match g {
            Generator::K(i, p) => seen[i as usize] += p,
            Generator::E(r) => {
                q_exp += (1..=3u8).map(|i| seen[i as usize] * r.weight(i)).sum::<i32>();
                out.push(g);
            }
        }
    }
    for i in 1..=3u8 {
        if seen[i as usize] != 0 {
            out.push(k(i, seen[i as usize]));
        }
    }
    (q_exp, UWord(out))
}

struct Builder {
    terms: BTreeMap<(u32, u8, UWord), QScalar>,
}

impl Builder {
    fn new() -> Self {
        Self { terms: BTreeMap::new() }
    }

    fn push(&mut self, coeff: QScalar, n: u32, m: u8, word: &[Generator]) {
        if coeff.is_zero() {
            return;
        }
        let (qe, a0word) = canonical_a0(word);
        let c = coeff.mul(&QScalar::q_pow(qe));
        let e = self.terms.entry((n, m, a0word)).or_default();
        *e = e.add(&c);
    }

    fn finish(self) -> Vec<StraightenTerm> {
        self.terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((n, m, a0word), coeff)| StraightenTerm { n, m, a0word, coeff })
            .collect()
    }
}

/// `g · E12^n · E13^m = Σ coeff · E12^n' E13^m' · a0word`, using the
/// closed-form passage of each generator through `E12^n` and then `E13^m`.
pub fn straighten(g: Generator, n: u32, m: u8) -> Vec<StraightenTerm> {
    assert!(m <= 1, "E13 powers above one vanish");
    let mut b = Builder::new();
    let one = QScalar::one();
    let ni = n as i32;
    let mi = m as i32;
    let odd_m = m == 1;
    let qn = q_integer(ni);
    let inv_delta = q_delta().invert().expect("nonzero");
    match g {
        Generator::K(i, p) => {
            let wt = ni * Root::E12.weight(i) + mi * Root::E13.weight(i);
            b.push(QScalar::q_pow(p * wt), n, m, &[g]);
        }
        Generator::E(Root::E12) => b.push(one, n + 1, m, &[]),
        Generator::E(Root::E13) => {
            if !odd_m {
                b.push(QScalar::q_pow(-ni), n, 1, &[]);
            }
        }
        Generator::E(Root::E23) => {
            // q^n (-q)^m E12^n E13^m E23 - q[n] E12^(n-1) E13^(m+1)
            let c = QScalar::q_pow(ni + mi).mul(&QScalar::from_int(sign(m as u32)));
            b.push(c, n, m, &[Generator::E23]);
            if n > 0 && !odd_m {
                b.push(QScalar::q().mul(&qn).neg(), n - 1, 1, &[]);
            }
        }
        Generator::E(Root::E32) => {
            b.push(QScalar::from_int(sign(m as u32)), n, m, &[Generator::E32]);
            if odd_m {
                b.push(QScalar::q_pow(-1), n + 1, 0, &[k(2, 1), k(3, 1)]);
            }
        }
        Generator::E(Root::E21) => {
            b.push(one.clone(), n, m, &[Generator::E21]);
            if odd_m {
                b.push(one, n, 0, &[Generator::E23, k(1, -1), k(2, 1)]);
            }
            if n > 0 {
                let c = qn.mul(&inv_delta);
                b.push(
                    c.mul(&QScalar::q_pow(ni - 1 + mi)).neg(),
                    n - 1,
                    m,
                    &[k(1, 1), k(2, -1)],
                );
                b.push(c.mul(&QScalar::q_pow(1 - ni - mi)), n - 1, m, &[k(1, -1), k(2, 1)]);
            }
        }
        Generator::E(Root::E31) => {
            let s = QScalar::from_int(sign(m as u32));
            b.push(s.clone(), n, m, &[Generator::E31]);
            if odd_m {
                let c = QScalar::q_pow(-1).mul(&inv_delta);
                b.push(c.clone(), n, 0, &[k(1, 1), k(3, 1)]);
                b.push(c.neg(), n, 0, &[k(1, -1), k(3, -1)]);
            }
            if n > 0 {
                let c = s.mul(&QScalar::q_pow(ni + mi - 2)).mul(&qn);
                b.push(c, n - 1, m, &[k(1, 1), k(2, -1), Generator::E32]);
                if odd_m {
                    b.push(QScalar::q_pow(ni - 1).mul(&qn), n, 0, &[k(1, 1), k(3, 1)]);
                }
            }
        }
    }
    b.finish()
}

/// The nine straightening identities `g · X^n = ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lemma1Identity {
    E13PastE12,
    E23PastE12,
    E23PastE13,
    E32PastE13,
    E21PastE12,
    E21PastE13,
    E31PastE12,
    E31PastE13,
    E32PastE23,
}

impl Lemma1Identity {
    pub const ALL: [Lemma1Identity; 9] = [
        Lemma1Identity::E13PastE12,
        Lemma1Identity::E23PastE12,
        Lemma1Identity::E23PastE13,
        Lemma1Identity::E32PastE13,
        Lemma1Identity::E21PastE12,
        Lemma1Identity::E21PastE13,
        Lemma1Identity::E31PastE12,
        Lemma1Identity::E31PastE13,
        Lemma1Identity::E32PastE23,
    ];

    /// `(g, X)` in `g · X^n`.
    pub fn letters(self) -> (Generator, Generator) {
        use Generator as G;
        match self {
            Lemma1Identity::E13PastE12 => (G::E13, G::E12),
            Lemma1Identity::E23PastE12 => (G::E23, G::E12),
            Lemma1Identity::E23PastE13 => (G::E23, G::E13),
            Lemma1Identity::E32PastE13 => (G::E32, G::E13),
            Lemma1Identity::E21PastE12 => (G::E21, G::E12),
            Lemma1Identity::E21PastE13 => (G::E21, G::E13),
            Lemma1Identity::E31PastE12 => (G::E31, G::E12),
            Lemma1Identity::E31PastE13 => (G::E31, G::E13),
            Lemma1Identity::E32PastE23 => (G::E32, G::E23),
        }
    }

    pub fn label(self) -> String {
        let (g, x) = self.letters();
        format!("{g} {x}^n")
    }

    fn mode(self) -> OracleMode {
        if self == Lemma1Identity::E32PastE23 {
            OracleMode::ThroughE23
        } else {
            OracleMode::Pbw
        }
    }
}

fn power(g: Generator, n: u32) -> Vec<Generator> {
    vec![g; n as usize]
}

fn word(parts: &[&[Generator]]) -> UElement {
    UElement::letters(&parts.concat())
}

/// Right-hand side of an identity at exponent `n`, as written in closed form.
pub fn lemma1_rhs(id: Lemma1Identity, n: u32) -> UElement {
    use Generator as G;
    let ni = n as i32;
    let qn = q_integer(ni);
    let odd = n % 2 == 1;
    let inv_delta = q_delta().invert().expect("nonzero");
    let sgn = QScalar::from_int(sign(n));
    let e12 = |k: u32| power(G::E12, k);
    let e13 = |k: u32| power(G::E13, k);
    let e23 = |k: u32| power(G::E23, k);
    match id {
        Lemma1Identity::E13PastE12 => word(&[&e12(n), &[G::E13]]).scale(&QScalar::q_pow(-ni)),
        Lemma1Identity::E23PastE12 => {
            let mut out = word(&[&e12(n), &[G::E23]]).scale(&QScalar::q_pow(ni));
            if n > 0 {
                out = out.sub(&word(&[&e12(n - 1), &[G::E13]]).scale(&QScalar::q().mul(&qn)));
            }
            out
        }
        Lemma1Identity::E23PastE13 => word(&[&e13(n), &[G::E23]]).scale(&QScalar::q_pow(ni).mul(&sgn)),
        Lemma1Identity::E32PastE13 => {
            let mut out = word(&[&e13(n), &[G::E32]]).scale(&sgn);
            if odd {
                out = out.add(&word(&[&[G::E12], &e13(n - 1), &[k(2, 1), k(3, 1)]]).scale(&QScalar::q_pow(-ni)));
            }
            out
        }
        Lemma1Identity::E21PastE12 => {
            let mut out = word(&[&e12(n), &[G::E21]]);
            if n > 0 {
                let c = qn.mul(&inv_delta);
                let bracket = word(&[&[k(1, 1), k(2, -1)]])
                    .scale(&QScalar::q_pow(ni - 1))
                    .sub(&word(&[&[k(1, -1), k(2, 1)]]).scale(&QScalar::q_pow(1 - ni)));
                out = out.sub(&UElement::letters(&e12(n - 1)).mul(&bracket).scale(&c));
            }
            out
        }
        Lemma1Identity::E21PastE13 => {
            let mut out = word(&[&e13(n), &[G::E21]]);
            if odd {
                out = out.add(&word(&[&e13(n - 1), &[G::E23, k(1, -1), k(2, 1)]]));
            }
            out
        }
        Lemma1Identity::E31PastE12 => {
            let mut out = word(&[&e12(n), &[G::E31]]);
            if n > 0 {
                out = out
                    .add(&word(&[&e12(n - 1), &[k(1, 1), k(2, -1), G::E32]]).scale(&QScalar::q_pow(ni - 2).mul(&qn)));
            }
            out
        }
        Lemma1Identity::E31PastE13 => {
            let mut out = word(&[&e13(n), &[G::E31]]).scale(&sgn);
            if odd {
                let frac = word(&[&[k(1, 1), k(3, 1)]])
                    .sub(&word(&[&[k(1, -1), k(3, -1)]]))
                    .scale(&inv_delta);
                out = out.add(&UElement::letters(&e13(n - 1)).mul(&frac).scale(&QScalar::q_pow(-1)));
            }
            out
        }
        Lemma1Identity::E32PastE23 => {
            let mut out = word(&[&e23(n), &[G::E32]]).scale(&sgn);
            if odd {
                let frac = word(&[&[k(2, 1), k(3, 1)]])
                    .sub(&word(&[&[k(2, -1), k(3, -1)]]))
                    .scale(&inv_delta);
                out = out.add(&UElement::letters(&e23(n - 1)).mul(&frac));
            }
            out
        }
    }
}

/// Result of comparing one identity at one exponent.
#[derive(Debug, Clone)]
pub struct Lemma1Check {
    pub identity: Lemma1Identity,
    pub n: u32,
    /// Closed form minus single-swap result, in normal form.
    pub residual: UElement,
}

impl Lemma1Check {
    pub fn passed(&self) -> bool {
        self.residual.is_zero()
    }
}

/// Compare every identity for `n = 0..=nmax` against the single-swap oracle.
pub fn verify_lemma1(nmax: u32) -> Vec<Lemma1Check> {
    let mut out = Vec::new();
    for id in Lemma1Identity::ALL {
        let (g, x) = id.letters();
        for n in 0..=nmax {
            let mut letters = vec![g];
            letters.extend(power(x, n));
            let lhs = oracle_normalize(&UElement::letters(&letters), id.mode());
            // The closed form is already ordered; canonicalize only its K
            // placement and the vanishing squares.
            let rhs = canonicalize_closed_form(&lemma1_rhs(id, n));
            out.push(Lemma1Check {
                identity: id,
                n,
                residual: rhs.sub(&lhs),
            });
        }
    }
    out
}

fn canonicalize_closed_form(x: &UElement) -> UElement {
    let mut out = UElement::zero();
    for (w, c) in x.terms() {
        let letters = w.letters();
        let square = letters
            .windows(2)
            .any(|p| p[0] == p[1] && matches!(p[0], Generator::E(Root::E13 | Root::E23 | Root::E32)));
        if square {
            continue;
        }
        let (qe, a0) = canonical_a0(letters);
        out.add_term(a0, c.mul(&QScalar::q_pow(qe)));
    }
    out
}

/// Sort terms for term-by-term comparison.
pub fn sorted_terms(terms: &[StraightenTerm]) -> Vec<StraightenTerm> {
    let mut v = terms.to_vec();
    v.sort_by_key(|a| a.key());
    v
}
