//! q-boson operators built from an ordinary boson.

use super::fock::{fock_matrix, FockMatrix, FockSpace};
use crate::report::{Check, Report};
use crate::scalarfield::{q_integer, QScalar};
use crate::walgebra::{WElement, WSymbol};

/// `A, A+, N = A+ A` on the truncated boson space.
pub struct OrdinaryBoson {
    pub space: FockSpace,
    pub a: FockMatrix,
    pub a_dagger: FockMatrix,
    pub number: FockMatrix,
}

impl OrdinaryBoson {
    pub fn new(cutoff: usize) -> Self {
        let space = FockSpace::boson(cutoff);
        let mut a = FockMatrix::zeros(space);
        let mut a_dagger = FockMatrix::zeros(space);
        for n in 1..cutoff {
            a.add_entry(n - 1, n, QScalar::from_int(n as i64));
            a_dagger.add_entry(n, n - 1, QScalar::one());
        }
        let number = a_dagger.mul(&a);
        Self {
            space,
            a,
            a_dagger,
            number,
        }
    }

    /// `f(N)` for a diagonal function of the number operator.
    fn function_of_number(&self, f: impl Fn(i64) -> QScalar) -> FockMatrix {
        let mut out = FockMatrix::zeros(self.space);
        for n in 0..self.space.cutoff {
            let eigen = self.number.get(n, n);
            let k = eigen.as_rational().expect("integer eigenvalue");
            out.add_entry(n, n, f(k.to_integer().try_into().expect("small")));
        }
        out
    }

    /// `a = ([N+1]/(N+1)) A`.
    pub fn q_annihilator(&self) -> FockMatrix {
        let f = self.function_of_number(|k| q_integer(k as i32 + 1).mul(&QScalar::ratio(1, k + 1)));
        f.mul(&self.a)
    }

    /// `q^(±N)`.
    pub fn q_power_of_number(&self, sign: i32) -> FockMatrix {
        self.function_of_number(|k| QScalar::q_pow(sign * k as i32))
    }
}

/// Substituted operators against the q-boson Fock matrices and the
/// oscillator relations on `n ≤ D - 2`.
pub fn dyson_check(cutoff: usize) -> Report {
    let mut report = Report::new(format!("ordinary-boson substitution, D = {cutoff}"));
    let b = OrdinaryBoson::new(cutoff);
    let space = b.space;
    let safe = cutoff - 2;
    let a = b.q_annihilator();
    let ap = b.a_dagger.clone();
    let t = b.q_power_of_number(1);
    let tinv = b.q_power_of_number(-1);
    let id = FockMatrix::identity(space);
    let q = QScalar::q();
    let qinv = QScalar::q_pow(-1);

    let render = |s: WSymbol| fock_matrix(&WElement::generator(s), space, None).expect("boson symbol");
    for (name, m, s) in [
        ("a", &a, WSymbol::Annihilate),
        ("a+", &ap, WSymbol::Create),
        ("t", &t, WSymbol::T),
        ("tinv", &tinv, WSymbol::TInv),
    ] {
        let diff = m.sub(&render(s));
        report.push(Check::new(
            format!("{name} equals q-boson matrix"),
            diff.entries().len(),
        ));
    }

    let relations: Vec<(&str, FockMatrix)> = vec![
        ("[A, A+] = 1", b.a.mul(&b.a_dagger).sub(&b.a_dagger.mul(&b.a)).sub(&id)),
        ("t tinv = 1", t.mul(&tinv).sub(&id)),
        ("tinv t = 1", tinv.mul(&t).sub(&id)),
        ("t a+ tinv = q a+", t.mul(&ap).mul(&tinv).sub(&ap.scale(&q))),
        ("t a tinv = q^-1 a", t.mul(&a).mul(&tinv).sub(&a.scale(&qinv))),
        ("a a+ - q^-1 a+ a = t", a.mul(&ap).sub(&ap.mul(&a).scale(&qinv)).sub(&t)),
        ("a a+ - q a+ a = tinv", a.mul(&ap).sub(&ap.mul(&a).scale(&q)).sub(&tinv)),
    ];
    for (name, diff) in relations {
        report.push(Check::new(name, diff.nonzero_on(safe)));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_annihilator_entries() {
        let b = OrdinaryBoson::new(5);
        let a = b.q_annihilator();
        for n in 1..5 {
            assert_eq!(a.get(n - 1, n), q_integer(n as i32));
        }
        assert_eq!(a.entries().len(), 4);
    }

    #[test]
    fn passes_at_six() {
        let r = dyson_check(6);
        assert!(r.all_passed(), "{r}");
    }
}
