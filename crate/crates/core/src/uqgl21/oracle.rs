//! Straightening by single adjacent swaps.
//!
//! Only the one-step rules are used: each identity of the form
//! `X E12 = ...`, `X E13 = ...` at exponent one, `E32 E23 = ...`, the
//! vanishing squares, and `K_i` moves. No closed-form coefficient
//! (`q^n`, `[n]`, parity factors) appears here, so composing swaps gives an
//! independent check of the closed forms in `straighten`.

use super::{Generator, Root, StraightenTerm, UElement, UWord};
use crate::scalarfield::{q_delta, QScalar};

/// Which letters are moved to the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Sort into `E12^a E13^b · (𝒜₀ word) · K...`.
    Pbw,
    /// As `Pbw`, and additionally move `E23` left of `E32`.
    ThroughE23,
}

fn rank(g: Generator, mode: OracleMode) -> u8 {
    match g {
        Generator::E(Root::E12) => 0,
        Generator::E(Root::E13) => 1,
        Generator::E(Root::E23) if mode == OracleMode::ThroughE23 => 2,
        Generator::E(_) => 3,
        Generator::K(..) => 4,
    }
}

type Parts = Vec<(QScalar, Vec<Generator>)>;

fn k(i: u8, p: i32) -> Generator {
    Generator::K(i, p)
}

fn inv_delta() -> QScalar {
    q_delta().invert().expect("nonzero")
}

/// `x y` with `x` a root vector and `y ∈ {E12, E13, E23}` to its right.
fn base_rule(x: Root, y: Root) -> Parts {
    use Generator as G;
    let one = QScalar::one;
    let neg1 = || QScalar::from_int(-1);
    let qp = QScalar::q_pow;
    match (x, y) {
        (Root::E13, Root::E12) => vec![(qp(-1), vec![G::E12, G::E13])],
        (Root::E23, Root::E12) => vec![(qp(1), vec![G::E12, G::E23]), (qp(1).neg(), vec![G::E13])],
        (Root::E32, Root::E12) => vec![(one(), vec![G::E12, G::E32])],
        (Root::E21, Root::E12) => vec![
            (one(), vec![G::E12, G::E21]),
            (inv_delta().neg(), vec![k(1, 1), k(2, -1)]),
            (inv_delta(), vec![k(1, -1), k(2, 1)]),
        ],
        (Root::E31, Root::E12) => vec![(one(), vec![G::E12, G::E31]), (qp(-1), vec![k(1, 1), k(2, -1), G::E32])],
        (Root::E23, Root::E13) => vec![(qp(1).neg(), vec![G::E13, G::E23])],
        (Root::E32, Root::E13) => vec![(neg1(), vec![G::E13, G::E32]), (qp(-1), vec![G::E12, k(2, 1), k(3, 1)])],
        (Root::E21, Root::E13) => vec![(one(), vec![G::E13, G::E21]), (one(), vec![G::E23, k(1, -1), k(2, 1)])],
        (Root::E31, Root::E13) => {
            let c = qp(-1).mul(&inv_delta());
            vec![
                (neg1(), vec![G::E13, G::E31]),
                (c.clone(), vec![k(1, 1), k(3, 1)]),
                (c.neg(), vec![k(1, -1), k(3, -1)]),
            ]
        }
        (Root::E32, Root::E23) => vec![
            (neg1(), vec![G::E23, G::E32]),
            (inv_delta(), vec![k(2, 1), k(3, 1)]),
            (inv_delta().neg(), vec![k(2, -1), k(3, -1)]),
        ],
        _ => panic!("no single-step rule moves {x:?} past {y:?}"),
    }
}

enum Step {
    Replace(usize, Parts),
    Vanish,
}

fn next_step(word: &[Generator], mode: OracleMode) -> Option<Step> {
    for i in 0..word.len().saturating_sub(1) {
        let (x, y) = (word[i], word[i + 1]);
        let (rx, ry) = (rank(x, mode), rank(y, mode));
        match (x, y) {
            (Generator::E(a), Generator::E(b)) if a == b && matches!(a, Root::E13 | Root::E23 | Root::E32) => {
                return Some(Step::Vanish);
            }
            _ => {}
        }
        if rx > ry {
            let parts = match (x, y) {
                (Generator::K(i, p), Generator::E(r)) => {
                    vec![(QScalar::q_pow(p * r.weight(i)), vec![y, x])]
                }
                (Generator::E(a), Generator::E(b)) => base_rule(a, b),
                _ => unreachable!("K letters have the highest rank"),
            };
            return Some(Step::Replace(i, parts));
        }
        if let (Generator::K(ki, a), Generator::K(kj, b)) = (x, y) {
            if ki > kj {
                return Some(Step::Replace(i, vec![(QScalar::one(), vec![y, x])]));
            }
            if ki == kj {
                let merged = if a + b == 0 { vec![] } else { vec![k(ki, a + b)] };
                return Some(Step::Replace(i, vec![(QScalar::one(), merged)]));
            }
        }
    }
    None
}

/// Reduce every word of `x` to oracle normal form.
pub fn oracle_normalize(x: &UElement, mode: OracleMode) -> UElement {
    let mut out = UElement::zero();
    let mut stack: Vec<(QScalar, Vec<Generator>)> = x.terms().map(|(w, c)| (c.clone(), w.0.clone())).collect();
    while let Some((c, w)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        match next_step(&w, mode) {
            None => out.add_term(UWord(w), c),
            Some(Step::Vanish) => {}
            Some(Step::Replace(i, parts)) => {
                for (s, letters) in parts {
                    let mut nw = w[..i].to_vec();
                    nw.extend(letters);
                    nw.extend_from_slice(&w[i + 2..]);
                    stack.push((c.mul(&s), nw));
                }
            }
        }
    }
    out
}

/// Split a normal-form word into `(N, M, 𝒜₀ word)`.
pub(crate) fn split_pbw(w: &UWord) -> (u32, u8, UWord) {
    let letters = w.letters();
    let n = letters.iter().take_while(|&&g| g == Generator::E12).count();
    let m = letters[n..].iter().take_while(|&&g| g == Generator::E13).count();
    assert!(m <= 1, "E13 squares vanish in normal form");
    let rest = &letters[n + m..];
    assert!(rest.iter().all(|g| g.is_a0()), "non-𝒜₀ letter left of PBW prefix");
    (n as u32, m as u8, UWord(rest.to_vec()))
}

pub(crate) fn to_terms(x: &UElement) -> Vec<StraightenTerm> {
    let mut out: Vec<StraightenTerm> = x
        .terms()
        .map(|(w, c)| {
            let (n, m, a0word) = split_pbw(w);
            StraightenTerm {
                n,
                m,
                a0word,
                coeff: c.clone(),
            }
        })
        .collect();
    out.sort_by_key(|a| a.key());
    out
}

/// `g · E12^n · E13^m` straightened by single swaps.
pub fn oracle_straighten(g: Generator, n: u32, m: u8) -> Vec<StraightenTerm> {
    let mut letters = vec![g];
    letters.extend(std::iter::repeat_n(Generator::E12, n as usize));
    letters.extend(std::iter::repeat_n(Generator::E13, m as usize));
    to_terms(&oracle_normalize(&UElement::letters(&letters), OracleMode::Pbw))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_pass_through() {
        for g in Generator::all() {
            let terms = oracle_straighten(g, 0, 0);
            if g == Generator::E12 {
                assert_eq!((terms[0].n, terms[0].m), (1, 0));
            } else if g == Generator::E13 {
                assert_eq!((terms[0].n, terms[0].m), (0, 1));
            } else {
                assert_eq!(terms.len(), 1);
                assert_eq!(terms[0].a0word, UWord::new(&[g]));
                assert!(terms[0].coeff.is_one());
            }
        }
    }

    #[test]
    fn e13_three_swaps() {
        let terms = oracle_straighten(Generator::E13, 3, 0);
        assert_eq!(terms.len(), 1);
        assert_eq!((terms[0].n, terms[0].m), (3, 1));
        assert!(terms[0].a0word.is_empty());
        assert_eq!(terms[0].coeff, QScalar::q_pow(-3));
    }

    #[test]
    fn e21_single_swap() {
        let terms = oracle_straighten(Generator::E21, 1, 0);
        let inv = q_delta().invert().unwrap();
        let find = |w: &[Generator]| {
            terms
                .iter()
                .find(|t| t.a0word == UWord::new(w))
                .map(|t| (t.n, t.m, t.coeff.clone()))
        };
        assert_eq!(find(&[Generator::E21]), Some((1, 0, QScalar::one())));
        assert_eq!(find(&[k(1, 1), k(2, -1)]), Some((0, 0, inv.neg())));
        assert_eq!(find(&[k(1, -1), k(2, 1)]), Some((0, 0, inv)));
        assert_eq!(terms.len(), 3);
    }

    #[test]
    fn e13_square_vanishes() {
        assert!(oracle_straighten(Generator::E13, 2, 1).is_empty());
    }

    fn rule_element(x: Root, y: Root) -> UElement {
        let mut out = UElement::zero();
        for (c, w) in base_rule(x, y) {
            out.add_term(UWord(w), c);
        }
        out
    }

    fn lhs(x: Root, y: Root) -> UElement {
        UElement::letters(&[Generator::E(x), Generator::E(y)])
    }

    #[test]
    fn e23_e12_rule_is_definition_rearranged() {
        let diff = lhs(Root::E23, Root::E12).sub(&rule_element(Root::E23, Root::E12));
        assert!(diff.expand_composites().is_zero());
    }

    #[test]
    fn e13_e12_rule_is_serre_raising() {
        let diff = lhs(Root::E13, Root::E12).sub(&rule_element(Root::E13, Root::E12));
        let serre =
            UElement::letters(&[Generator::E12, Generator::E13]).sub(&lhs(Root::E13, Root::E12).scale(&QScalar::q()));
        let expected = serre.scale(&QScalar::q_pow(-1).neg());
        assert_eq!(diff.expand_composites(), expected.expand_composites());
    }

    #[test]
    fn e23_e13_rule_follows_from_odd_square() {
        let diff = lhs(Root::E23, Root::E13).sub(&rule_element(Root::E23, Root::E13));
        let expanded = diff.expand_composites();
        assert!(!expanded.is_zero());
        assert!(expanded.kill_odd_squares().is_zero());
    }
}
