//! The induced module on `|N, M> ⊗ v`.

mod matrix;
mod rep;

use std::collections::BTreeMap;
use std::fmt;

pub use matrix::Matrix;
pub use rep::{highest_weight_a0rep, validate_a0rep, A0Rep, Gl11Rep, InducedError};

use crate::report::{Check, Report};
use crate::scalarfield::{q_delta, q_integer, QScalar};
use crate::uqgl21::{oracle_straighten, relation_set, Generator, Root, UElement};

/// Basis label `(N, M, v)`.
pub type State = (u32, u8, usize);

#[derive(Clone, Default, PartialEq, Eq)]
pub struct InducedVector {
    terms: BTreeMap<State, QScalar>,
}

impl InducedVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(n: u32, m: u8, v: usize) -> Self {
        let mut x = Self::zero();
        x.add_term((n, m, v), QScalar::one());
        x
    }

    pub fn add_term(&mut self, s: State, c: QScalar) {
        assert!(s.1 <= 1, "M is 0 or 1");
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&s) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(s, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&State, &QScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: State) -> QScalar {
        self.terms.get(&s).cloned().unwrap_or_default()
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

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = Self::zero();
        for (s, x) in self.terms() {
            out.add_term(*s, x.mul(c));
        }
        out
    }
}

impl fmt::Display for InducedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((n, m, v), c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}|{n},{m}>v{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for InducedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Adds `c · |n, m> ⊗ φ v_j` for the matrix `φ`.
fn push(out: &mut InducedVector, c: &QScalar, n: u32, m: u8, phi: &Matrix, j: usize) {
    if c.is_zero() {
        return;
    }
    for i in 0..phi.dim() {
        let e = phi.get(i, j);
        if !e.is_zero() {
            out.add_term((n, m, i), c.mul(e));
        }
    }
}

fn alternating(m: u8) -> QScalar {
    QScalar::from_int(if m == 1 { -1 } else { 1 })
}

fn act_basis(g: Generator, (n, m, v): State, rep: &A0Rep, out: &mut InducedVector, c: &QScalar) {
    use Generator as G;
    let d = rep.dim();
    let id = Matrix::identity(d);
    let ni = n as i32;
    let mi = m as i32;
    let qp = QScalar::q_pow;
    let bracket_n = q_integer(ni);
    let k = |i: u8, e: i32| G::K(i, e);
    match g {
        G::E(Root::E12) => push(out, c, n + 1, m, &id, v),
        G::E(Root::E13) => {
            if m == 0 {
                push(out, &c.mul(&qp(-ni)), n, 1, &id, v);
            }
        }
        G::E(Root::E23) => {
            let s = qp(ni + mi).mul(&alternating(m));
            push(out, &c.mul(&s), n, m, &rep.e23, v);
            if m == 0 && n > 0 {
                push(out, &c.mul(&QScalar::q().mul(&bracket_n)).neg(), n - 1, 1, &id, v);
            }
        }
        G::E(Root::E32) => {
            push(out, &c.mul(&alternating(m)), n, m, &rep.e32, v);
            if m == 1 {
                push(out, &c.mul(&qp(-1)), n + 1, 0, &rep.word_matrix(&[k(2, 1), k(3, 1)]), v);
            }
        }
        G::E(Root::E21) => {
            push(out, c, n, m, &rep.e21, v);
            if m == 1 {
                let phi = rep.word_matrix(&[G::E23, k(1, -1), k(2, 1)]);
                push(out, c, n, 0, &phi, v);
            }
            if n > 0 {
                let up = rep.word_matrix(&[k(1, 1), k(2, -1)]).scale(&qp(ni - 1 + mi));
                let down = rep.word_matrix(&[k(1, -1), k(2, 1)]).scale(&qp(1 - ni - mi));
                let coeff = bracket_n.div(&q_delta()).expect("nonzero").neg();
                push(out, &c.mul(&coeff), n - 1, m, &up.sub(&down), v);
            }
        }
        G::E(Root::E31) => {
            let sgn = alternating(m);
            let e31 = rep.matrix(G::E(Root::E31)).expect("parabolic");
            push(out, &c.mul(&sgn), n, m, &e31, v);
            if m == 1 {
                let frac = rep
                    .word_matrix(&[k(1, 1), k(3, 1)])
                    .sub(&rep.word_matrix(&[k(1, -1), k(3, -1)]));
                let coeff = qp(-1).div(&q_delta()).expect("nonzero");
                push(out, &c.mul(&coeff), n, 0, &frac, v);
            }
            if n > 0 {
                let phi = rep.word_matrix(&[k(1, 1), k(2, -1), G::E32]);
                let coeff = sgn.mul(&qp(ni + mi - 2)).mul(&bracket_n);
                push(out, &c.mul(&coeff), n - 1, m, &phi, v);
                if m == 1 {
                    let phi = rep.word_matrix(&[k(1, 1), k(3, 1)]);
                    push(out, &c.mul(&qp(ni - 1).mul(&bracket_n)), n, 0, &phi, v);
                }
            }
        }
        G::K(i, e) => {
            let wt = ni * Root::E12.weight(i) + mi * Root::E13.weight(i);
            let phi = rep.matrix(g).expect("parabolic");
            push(out, &c.mul(&qp(e * wt)), n, m, &phi, v);
        }
    }
}

/// `g · x` by the closed-form action.
pub fn act(g: Generator, x: &InducedVector, rep: &A0Rep) -> InducedVector {
    let mut out = InducedVector::zero();
    for (s, c) in x.terms() {
        act_basis(g, *s, rep, &mut out, c);
    }
    out
}

/// `g · x` by straightening `g E12^N E13^M` with single swaps and pushing
/// the parabolic part into `V`.
pub fn act_oracle(g: Generator, x: &InducedVector, rep: &A0Rep) -> InducedVector {
    let mut out = InducedVector::zero();
    for (&(n, m, v), c) in x.terms() {
        for t in oracle_straighten(g, n, m) {
            let phi = rep.word_matrix(t.a0word.letters());
            push(&mut out, &c.mul(&t.coeff), t.n, t.m, &phi, v);
        }
    }
    out
}

/// Apply a linear combination of words, rightmost letter first.
pub fn act_element(x: &UElement, v: &InducedVector, rep: &A0Rep) -> InducedVector {
    let mut out = InducedVector::zero();
    for (w, c) in x.terms() {
        let image = w.letters().iter().rev().fold(v.clone(), |acc, &g| act(g, &acc, rep));
        out = out.add(&image.scale(c));
    }
    out
}

fn states(rep: &A0Rep, nmax: u32) -> impl Iterator<Item = State> + '_ {
    (0..=nmax).flat_map(move |n| (0..=1u8).flat_map(move |m| (0..rep.dim()).map(move |v| (n, m, v))))
}

/// Every defining relation on all states with `N ≤ nmax - 2`.
pub fn check_relations_on_module(rep: &A0Rep, nmax: u32) -> Report {
    assert!(nmax >= 2, "nmax must be at least 2");
    let mut report = Report::new(format!("induced module relations, N <= {}", nmax - 2));
    for r in relation_set() {
        let mut residual = 0;
        let mut count = 0;
        for s in states(rep, nmax - 2) {
            let x = InducedVector::basis(s.0, s.1, s.2);
            let diff = act_element(&r.lhs, &x, rep).sub(&act_element(&r.rhs, &x, rep));
            residual += diff.len();
            count += 1;
        }
        report.push(Check::new(r.name, residual).with_detail(format!("{count} states")));
    }
    report
}

/// Closed-form action against the straightening oracle for `N ≤ nmax`.
pub fn check_act_against_oracle(rep: &A0Rep, nmax: u32) -> Report {
    let mut report = Report::new(format!("closed-form action vs oracle, N <= {nmax}"));
    for g in Generator::all() {
        let mut residual = 0;
        for s in states(rep, nmax) {
            let x = InducedVector::basis(s.0, s.1, s.2);
            residual += act(g, &x, rep).sub(&act_oracle(g, &x, rep)).len();
        }
        report.push(Check::new(format!("act {g}"), residual));
    }
    report
}

/// The two highest-weight plug-ins, labelled.
pub fn standard_reps() -> Vec<(&'static str, A0Rep)> {
    [("trivial", Gl11Rep::trivial()), ("fermionic", Gl11Rep::fermionic())]
        .into_iter()
        .map(|(name, gl)| (name, highest_weight_a0rep(&gl).expect("valid gl(1/1) representation")))
        .collect()
}

/// Validation, action-vs-oracle and relation checks for both plug-ins.
pub fn verify_induced(nmax: u32) -> Report {
    let mut report = Report::new(format!("induced module, nmax = {nmax}"));
    for (name, rep) in standard_reps() {
        for sub in [
            validate_a0rep(&rep),
            check_act_against_oracle(&rep, nmax.min(5)),
            check_relations_on_module(&rep, nmax),
        ] {
            report.extend_prefixed(name, sub);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fermionic() -> A0Rep {
        highest_weight_a0rep(&Gl11Rep::fermionic()).unwrap()
    }

    #[test]
    fn e12_raises() {
        let rep = fermionic();
        assert_eq!(
            act(Generator::E12, &InducedVector::basis(2, 1, 0), &rep),
            InducedVector::basis(3, 1, 0)
        );
    }

    #[test]
    fn k2_scales() {
        let rep = fermionic();
        let x = act(Generator::K(2, 1), &InducedVector::basis(3, 0, 1), &rep);
        let expected = InducedVector::basis(3, 0, 1).scale(&QScalar::q_pow(-3).mul(rep.k[1].get(1, 1)));
        assert_eq!(x, expected);
    }

    #[test]
    fn e23_at_origin() {
        let rep = fermionic();
        let x = act(Generator::E23, &InducedVector::basis(0, 0, 0), &rep);
        assert_eq!(x, InducedVector::basis(0, 0, 1));
    }

    #[test]
    fn e32_without_lowering_at_m0() {
        let rep = fermionic();
        let x = act(Generator::E32, &InducedVector::basis(4, 0, 1), &rep);
        let expected = InducedVector::basis(4, 0, 0).scale(rep.e32.get(0, 1));
        assert_eq!(x, expected);
    }

    #[test]
    fn e21_one_swap() {
        let rep = fermionic();
        let x = act_oracle(Generator::E21, &InducedVector::basis(1, 0, 0), &rep);
        let inv = q_delta().invert().unwrap();
        let k1k2 = rep.k[0].mul(&rep.kinv[1]).get(0, 0).clone();
        let k1k2inv = rep.kinv[0].mul(&rep.k[1]).get(0, 0).clone();
        let expected = InducedVector::basis(0, 0, 0).scale(&k1k2.sub(&k1k2inv).mul(&inv).neg());
        assert_eq!(x, expected);
    }

    #[test]
    fn closed_form_matches_oracle_small() {
        for (_, rep) in standard_reps() {
            let r = check_act_against_oracle(&rep, 3);
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn weight_cancels() {
        for (_, rep) in standard_reps() {
            let k123 = |x: &InducedVector| {
                let y = act(Generator::K(3, 1), x, &rep);
                let y = act(Generator::K(2, 1), &y, &rep);
                act(Generator::K(1, 1), &y, &rep)
            };
            let phi = rep.word_matrix(&[Generator::K(1, 1), Generator::K(2, 1), Generator::K(3, 1)]);
            for n in 0..5 {
                for m in 0..=1 {
                    for v in 0..rep.dim() {
                        let mut expected = InducedVector::zero();
                        push(&mut expected, &QScalar::one(), n, m, &phi, v);
                        assert_eq!(k123(&InducedVector::basis(n, m, v)), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn relations_small() {
        for (name, rep) in standard_reps() {
            let r = check_relations_on_module(&rep, 4);
            assert!(r.all_passed(), "{name}: {r}");
        }
    }
}
