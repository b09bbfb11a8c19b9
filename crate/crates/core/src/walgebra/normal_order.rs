//! Sort-to-normal-form rewriting of letter words in 𝒲.
//!
//! A product of monomials is flattened into a word of letters and sorted by
//! adjacent swaps. Each out-of-order pair is replaced by its reordered pair
//! times a scalar (a `-1` for every transposition of two odd letters, or a
//! power of `q`), plus the contraction terms of the defining relation.

use super::{Parity, WMonomial};
use crate::scalarfield::{q_delta, QScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Letter {
    /// a⁺
    Create,
    /// t = q^x raised to a power
    T(i32),
    /// a
    Annihilate,
    /// b_f⁺ for mode `f ∈ {0, 1}`
    FermionCreate(u8),
    /// b_f
    FermionAnnihilate(u8),
    E32,
    K2(i32),
    K3(i32),
    E23,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sector {
    Boson,
    Fermion(u8),
    Gl11,
}

impl Letter {
    fn rank(self) -> u8 {
        match self {
            Letter::Create => 0,
            Letter::T(_) => 1,
            Letter::Annihilate => 2,
            Letter::FermionCreate(f) => 3 + 2 * f,
            Letter::FermionAnnihilate(f) => 4 + 2 * f,
            Letter::E32 => 7,
            Letter::K2(_) => 8,
            Letter::K3(_) => 9,
            Letter::E23 => 10,
        }
    }

    fn sector(self) -> Sector {
        match self {
            Letter::Create | Letter::T(_) | Letter::Annihilate => Sector::Boson,
            Letter::FermionCreate(f) | Letter::FermionAnnihilate(f) => Sector::Fermion(f),
            _ => Sector::Gl11,
        }
    }

    fn parity(self) -> Parity {
        match self {
            Letter::FermionCreate(_) | Letter::FermionAnnihilate(_) | Letter::E32 | Letter::E23 => Parity::Odd,
            _ => Parity::Even,
        }
    }
}

pub(crate) fn word_of(m: &WMonomial, out: &mut Vec<Letter>) {
    out.extend(std::iter::repeat_n(Letter::Create, m.create as usize));
    if m.t != 0 {
        out.push(Letter::T(m.t));
    }
    out.extend(std::iter::repeat_n(Letter::Annihilate, m.annihilate as usize));
    for f in 0..2u8 {
        let (c, a) = m.fermions[f as usize];
        if c {
            out.push(Letter::FermionCreate(f));
        }
        if a {
            out.push(Letter::FermionAnnihilate(f));
        }
    }
    if m.e32 {
        out.push(Letter::E32);
    }
    if m.k2 != 0 {
        out.push(Letter::K2(m.k2));
    }
    if m.k3 != 0 {
        out.push(Letter::K3(m.k3));
    }
    if m.e23 {
        out.push(Letter::E23);
    }
}

/// Read a sorted, fully reduced word back into a monomial.
fn monomial_of(word: &[Letter]) -> WMonomial {
    let mut m = WMonomial::identity();
    for &l in word {
        match l {
            Letter::Create => m.create += 1,
            Letter::T(k) => m.t += k,
            Letter::Annihilate => m.annihilate += 1,
            Letter::FermionCreate(f) => m.fermions[f as usize].0 = true,
            Letter::FermionAnnihilate(f) => m.fermions[f as usize].1 = true,
            Letter::E32 => m.e32 = true,
            Letter::K2(k) => m.k2 += k,
            Letter::K3(k) => m.k3 += k,
            Letter::E23 => m.e23 = true,
        }
    }
    m
}

enum Step {
    /// Replace letters `i, i+1` by each listed (scalar, letters) pair.
    Replace(Vec<(QScalar, Vec<Letter>)>),
    /// The word vanishes.
    Vanish,
    /// Merge letters `i, i+1` into one (or none).
    Merge(Option<Letter>),
}

fn swap_rule(x: Letter, y: Letter) -> Step {
    use Letter::*;
    if x.sector() != y.sector() {
        let sign = if x.parity() == Parity::Odd && y.parity() == Parity::Odd {
            -1
        } else {
            1
        };
        return Step::Replace(vec![(QScalar::from_int(sign), vec![y, x])]);
    }
    match (x, y) {
        // t^k a⁺ = q^k a⁺ t^k
        (T(k), Create) => Step::Replace(vec![(QScalar::q_pow(k), vec![Create, T(k)])]),
        // a a⁺ = q⁻¹ a⁺ a + t
        (Annihilate, Create) => Step::Replace(vec![
            (QScalar::q_pow(-1), vec![Create, Annihilate]),
            (QScalar::one(), vec![T(1)]),
        ]),
        // a t^k = q^k t^k a
        (Annihilate, T(k)) => Step::Replace(vec![(QScalar::q_pow(k), vec![T(k), Annihilate])]),
        // b b⁺ = -b⁺ b + 1
        (FermionAnnihilate(f), FermionCreate(g)) if f == g => Step::Replace(vec![
            (QScalar::from_int(-1), vec![FermionCreate(f), FermionAnnihilate(f)]),
            (QScalar::one(), vec![]),
        ]),
        // k2^α e32 = q^-α e32 k2^α, k3^β e32 = q^β e32 k3^β
        (K2(a), E32) => Step::Replace(vec![(QScalar::q_pow(-a), vec![E32, K2(a)])]),
        (K3(b), E32) => Step::Replace(vec![(QScalar::q_pow(b), vec![E32, K3(b)])]),
        // e23 e32 = -e32 e23 + (k2 k3 - k2⁻¹ k3⁻¹)/(q - q⁻¹)
        (E23, E32) => {
            let c = q_delta().invert().expect("q - q^-1 is nonzero");
            Step::Replace(vec![
                (QScalar::from_int(-1), vec![E32, E23]),
                (c.clone(), vec![K2(1), K3(1)]),
                (c.neg(), vec![K2(-1), K3(-1)]),
            ])
        }
        (K3(b), K2(a)) => Step::Replace(vec![(QScalar::one(), vec![K2(a), K3(b)])]),
        // e23 k2^α = q^-α k2^α e23, e23 k3^β = q^β k3^β e23
        (E23, K2(a)) => Step::Replace(vec![(QScalar::q_pow(-a), vec![K2(a), E23])]),
        (E23, K3(b)) => Step::Replace(vec![(QScalar::q_pow(b), vec![K3(b), E23])]),
        _ => unreachable!("no swap rule for {x:?} {y:?}"),
    }
}

fn equal_rank_rule(x: Letter, y: Letter) -> Option<Step> {
    use Letter::*;
    match (x, y) {
        (T(a), T(b)) => Some(Step::Merge((a + b != 0).then_some(T(a + b)))),
        (K2(a), K2(b)) => Some(Step::Merge((a + b != 0).then_some(K2(a + b)))),
        (K3(a), K3(b)) => Some(Step::Merge((a + b != 0).then_some(K3(a + b)))),
        (FermionCreate(_), FermionCreate(_))
        | (FermionAnnihilate(_), FermionAnnihilate(_))
        | (E32, E32)
        | (E23, E23) => Some(Step::Vanish),
        _ => None,
    }
}

fn next_step(word: &[Letter]) -> Option<(usize, Step)> {
    for i in 0..word.len().saturating_sub(1) {
        let (x, y) = (word[i], word[i + 1]);
        if x.rank() > y.rank() {
            return Some((i, swap_rule(x, y)));
        }
        if x.rank() == y.rank() {
            if let Some(step) = equal_rank_rule(x, y) {
                return Some((i, step));
            }
        }
    }
    None
}

/// In a sorted word `a⁺^m t^k a^l` with `m, l ≥ 1`, contract the innermost
/// `a⁺ t^k a = q^-k (t - t⁻¹)/(q - q⁻¹) t^k`.
fn contract_boson(word: &[Letter]) -> Option<Vec<(QScalar, Vec<Letter>)>> {
    let last_create = word.iter().rposition(|&l| l == Letter::Create)?;
    let (k, span) = match word.get(last_create + 1) {
        Some(Letter::Annihilate) => (0, 2),
        Some(Letter::T(k)) if word.get(last_create + 2) == Some(&Letter::Annihilate) => (*k, 3),
        _ => return None,
    };
    let c = QScalar::q_pow(-k).mul(&q_delta().invert().expect("nonzero"));
    let splice = |t: i32| {
        let mut w = word[..last_create].to_vec();
        if t != 0 {
            w.push(Letter::T(t));
        }
        w.extend_from_slice(&word[last_create + span..]);
        w
    };
    Some(vec![(c.clone(), splice(k + 1)), (c.neg(), splice(k - 1))])
}

/// Normal-order `coeff · word`, accumulating into `sink`.
pub(crate) fn normalize_word(coeff: QScalar, word: Vec<Letter>, sink: &mut impl FnMut(WMonomial, QScalar)) {
    let mut stack = vec![(coeff, word)];
    while let Some((c, w)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        match next_step(&w) {
            Some((i, Step::Vanish)) => {
                let _ = i;
            }
            Some((i, Step::Merge(l))) => {
                let mut nw = w[..i].to_vec();
                nw.extend(l);
                nw.extend_from_slice(&w[i + 2..]);
                stack.push((c, nw));
            }
            Some((i, Step::Replace(parts))) => {
                for (s, letters) in parts {
                    let mut nw = w[..i].to_vec();
                    nw.extend(letters);
                    nw.extend_from_slice(&w[i + 2..]);
                    stack.push((c.mul(&s), nw));
                }
            }
            None => match contract_boson(&w) {
                Some(parts) => {
                    for (s, nw) in parts {
                        stack.push((c.mul(&s), nw));
                    }
                }
                None => sink(monomial_of(&w), c),
            },
        }
    }
}
