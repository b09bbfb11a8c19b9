//! Finite-dimensional representations of the parabolic subalgebra.

use thiserror::Error;

use super::matrix::Matrix;
use crate::report::{Check, Report};
use crate::scalarfield::{QScalar, Var};
use crate::uqgl21::{relation_set, Generator, Relation, Root, UElement};
use crate::walgebra::Parity;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InducedError {
    #[error("gl(1/1) relations fail: {0}")]
    Gl11Relation(String),
}

/// Matrices of `e23, e32, k2^±1, k3^±1` on a graded space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gl11Rep {
    pub parity: Vec<Parity>,
    pub e23: Matrix,
    pub e32: Matrix,
    pub k2: Matrix,
    pub k2inv: Matrix,
    pub k3: Matrix,
    pub k3inv: Matrix,
}

fn p(var: Var, power: i32) -> QScalar {
    QScalar::var(var, power)
}

impl Gl11Rep {
    /// One-dimensional: `e's = 0`, `k2 = p2`, `k3 = p2^-1`.
    pub fn trivial() -> Self {
        Self {
            parity: vec![Parity::Even],
            e23: Matrix::zeros(1),
            e32: Matrix::zeros(1),
            k2: Matrix::scalar(1, p(Var::P2, 1)),
            k2inv: Matrix::scalar(1, p(Var::P2, -1)),
            k3: Matrix::scalar(1, p(Var::P2, -1)),
            k3inv: Matrix::scalar(1, p(Var::P2, 1)),
        }
    }

    /// Two-dimensional on `{|0>, |1>}` with `e23 = b+`,
    /// `e32 = [l2 + l3] b`, `k2 = p2 q^n`, `k3 = p3 q^-n`.
    pub fn fermionic() -> Self {
        let zero = QScalar::zero;
        let one = QScalar::one;
        let q = QScalar::q_pow;
        let bracket = crate::walgebra::lambda23_integer();
        Self {
            parity: vec![Parity::Even, Parity::Odd],
            e23: Matrix::from_rows(vec![vec![zero(), zero()], vec![one(), zero()]]),
            e32: Matrix::from_rows(vec![vec![zero(), bracket], vec![zero(), zero()]]),
            k2: Matrix::diagonal(vec![p(Var::P2, 1), p(Var::P2, 1).mul(&q(1))]),
            k2inv: Matrix::diagonal(vec![p(Var::P2, -1), p(Var::P2, -1).mul(&q(-1))]),
            k3: Matrix::diagonal(vec![p(Var::P3, 1), p(Var::P3, 1).mul(&q(-1))]),
            k3inv: Matrix::diagonal(vec![p(Var::P3, -1), p(Var::P3, -1).mul(&q(1))]),
        }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    fn matrix(&self, g: Generator) -> Option<Matrix> {
        match g {
            Generator::E(Root::E23) => Some(self.e23.clone()),
            Generator::E(Root::E32) => Some(self.e32.clone()),
            Generator::K(2, e) => Some(k_power(&self.k2, &self.k2inv, e, self.dim())),
            Generator::K(3, e) => Some(k_power(&self.k3, &self.k3inv, e, self.dim())),
            _ => None,
        }
    }

    /// `e32^e k2^a k3^b e23^f`.
    pub fn monomial_matrix(&self, e32: bool, k2: i32, k3: i32, e23: bool) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::identity(d);
        if e32 {
            m = m.mul(&self.e32);
        }
        m = m.mul(&k_power(&self.k2, &self.k2inv, k2, d));
        m = m.mul(&k_power(&self.k3, &self.k3inv, k3, d));
        if e23 {
            m = m.mul(&self.e23);
        }
        m
    }

    /// Every relation among `E23, E32, K2^±1, K3^±1`, plus parity.
    pub fn validate(&self) -> Report {
        let mut report = Report::new("gl(1/1) representation");
        for r in relation_set() {
            if let Some(check) = relation_check(&r, self.dim(), |g| self.matrix(g)) {
                report.push(check);
            }
        }
        for (name, m) in [("e23", &self.e23), ("e32", &self.e32)] {
            report.push(parity_check(name, m, &self.parity, Parity::Odd));
        }
        report
    }
}

fn k_power(k: &Matrix, kinv: &Matrix, e: i32, dim: usize) -> Matrix {
    let base = if e >= 0 { k } else { kinv };
    (0..e.unsigned_abs()).fold(Matrix::identity(dim), |acc, _| acc.mul(base))
}

/// Matrix of a linear combination of words, `None` if a letter has no image.
pub(crate) fn element_matrix(x: &UElement, dim: usize, image: &impl Fn(Generator) -> Option<Matrix>) -> Option<Matrix> {
    let mut out = Matrix::zeros(dim);
    for (w, c) in x.terms() {
        let mut m = Matrix::identity(dim);
        for &g in w.letters() {
            m = m.mul(&image(g)?);
        }
        out = out.add(&m.scale(c));
    }
    Some(out)
}

fn relation_check(r: &Relation, dim: usize, image: impl Fn(Generator) -> Option<Matrix>) -> Option<Check> {
    let lhs = element_matrix(&r.lhs, dim, &image)?;
    let rhs = element_matrix(&r.rhs, dim, &image)?;
    Some(Check::new(r.name.clone(), lhs.sub(&rhs).nonzero_count()))
}

fn parity_check(name: &str, m: &Matrix, parity: &[Parity], degree: Parity) -> Check {
    let mut bad = 0;
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            if !m.get(i, j).is_zero() && parity[i] != (parity[j] + degree) {
                bad += 1;
            }
        }
    }
    Check::new(format!("parity of {name}"), bad)
}

/// Matrices of every parabolic generator on a graded space `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A0Rep {
    pub parity: Vec<Parity>,
    pub e21: Matrix,
    pub e23: Matrix,
    pub e32: Matrix,
    /// `K1, K2, K3`.
    pub k: [Matrix; 3],
    /// `K1^-1, K2^-1, K3^-1`.
    pub kinv: [Matrix; 3],
}

impl A0Rep {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// Image of a parabolic generator; `E31` through its definition.
    /// `None` for `E12`, `E13`.
    pub fn matrix(&self, g: Generator) -> Option<Matrix> {
        let d = self.dim();
        match g {
            Generator::E(Root::E21) => Some(self.e21.clone()),
            Generator::E(Root::E23) => Some(self.e23.clone()),
            Generator::E(Root::E32) => Some(self.e32.clone()),
            Generator::E(Root::E31) => {
                let qinv = QScalar::q_pow(-1);
                Some(self.e32.mul(&self.e21).scale(&qinv).sub(&self.e21.mul(&self.e32)))
            }
            Generator::K(i, e) => {
                let i = (i - 1) as usize;
                Some(k_power(&self.k[i], &self.kinv[i], e, d))
            }
            Generator::E(Root::E12 | Root::E13) => None,
        }
    }

    /// Product `φ(g1) φ(g2) ...`.
    pub fn word_matrix(&self, letters: &[Generator]) -> Matrix {
        letters.iter().fold(Matrix::identity(self.dim()), |acc, &g| {
            acc.mul(&self.matrix(g).expect("parabolic generator"))
        })
    }
}

/// `E21 = 0`, `K1 = p1`, the rest from the gl(1/1) representation.
pub fn highest_weight_a0rep(gl11: &Gl11Rep) -> Result<A0Rep, InducedError> {
    let report = gl11.validate();
    if !report.all_passed() {
        let names: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        return Err(InducedError::Gl11Relation(names.join(", ")));
    }
    let d = gl11.dim();
    Ok(A0Rep {
        parity: gl11.parity.clone(),
        e21: Matrix::zeros(d),
        e23: gl11.e23.clone(),
        e32: gl11.e32.clone(),
        k: [Matrix::scalar(d, p(Var::P1, 1)), gl11.k2.clone(), gl11.k3.clone()],
        kinv: [
            Matrix::scalar(d, p(Var::P1, -1)),
            gl11.k2inv.clone(),
            gl11.k3inv.clone(),
        ],
    })
}

/// Every relation among parabolic generators as a matrix identity, plus
/// parity of the odd generators.
pub fn validate_a0rep(rep: &A0Rep) -> Report {
    let mut report = Report::new("parabolic representation");
    for r in relation_set().iter().filter(|r| r.within_a0()) {
        if let Some(check) = relation_check(r, rep.dim(), |g| rep.matrix(g)) {
            report.push(check);
        }
    }
    for (name, m, deg) in [
        ("E21", &rep.e21, Parity::Even),
        ("E23", &rep.e23, Parity::Odd),
        ("E32", &rep.e32, Parity::Odd),
    ] {
        report.push(parity_check(name, m, &rep.parity, deg));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::q_delta;

    fn cartan(a: &Matrix, b: &Matrix, ainv: &Matrix, binv: &Matrix) -> Matrix {
        a.mul(b)
            .sub(&ainv.mul(binv))
            .scale(&q_delta().invert().expect("nonzero"))
    }

    #[test]
    fn trivial_and_fermionic_valid() {
        for gl in [Gl11Rep::trivial(), Gl11Rep::fermionic()] {
            let r = gl.validate();
            assert!(r.all_passed(), "{r}");
            let a0 = highest_weight_a0rep(&gl).unwrap();
            assert!(a0.e21.is_zero());
            let r = validate_a0rep(&a0);
            assert!(r.all_passed(), "{r}");
            assert!(a0.matrix(Generator::E31).unwrap().is_zero());
        }
    }

    #[test]
    fn fermionic_anticommutator() {
        let gl = Gl11Rep::fermionic();
        let anti = gl.e23.mul(&gl.e32).add(&gl.e32.mul(&gl.e23));
        let expected = cartan(&gl.k2, &gl.k3, &gl.k2inv, &gl.k3inv);
        assert_eq!(anti, expected);
    }

    #[test]
    fn corrupted_k2_detected() {
        let mut gl = Gl11Rep::fermionic();
        gl.k2 = gl.k2.scale(&QScalar::q());
        let report = gl.validate();
        let failed: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"K2 K2inv = 1"));
        assert!(failed.contains(&"{E23, E32} = (K2 K3 - K2inv K3inv)/(q - q^-1)"));
        assert!(!failed.contains(&"K3 E23 = q^-1 E23 K3"));
        assert!(highest_weight_a0rep(&gl).is_err());

        let mut a0 = highest_weight_a0rep(&Gl11Rep::fermionic()).unwrap();
        a0.k[1] = a0.k[1].scale(&QScalar::q());
        let report = validate_a0rep(&a0);
        assert!(!report.all_passed());
        assert!(report.failures().all(|c| c.name.contains("K2")));
    }
}
