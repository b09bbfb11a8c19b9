//! Realizations of the U_q(gl(1/1)) factor inside 𝒲.

use super::{WElement, WError, WMonomial};
use crate::scalarfield::{q_delta, QScalar, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gl11Realization {
    /// `e23, e32 ↦ 0`, `k2, k3⁻¹ ↦ p2`, `k2⁻¹, k3 ↦ p2⁻¹`.
    Trivial,
    /// `e23 ↦ b2⁺`, `e32 ↦ [λ2+λ3] b2`, `k2 ↦ p2 (b2 b2⁺ + q b2⁺ b2)`,
    /// `k3 ↦ p3 (b2 b2⁺ + q⁻¹ b2⁺ b2)`.
    Fermionic,
}

fn mode2_number() -> WElement {
    WElement::term(
        QScalar::one(),
        WMonomial {
            fermions: [(false, false), (true, true)],
            ..WMonomial::identity()
        },
    )
}

/// `p^power (1 + (q^shift - 1) n2)`, the image of a k power.
fn graded_k_power(param: Var, power: i32, shift: i32) -> WElement {
    let n2 = mode2_number();
    let c = QScalar::q_pow(shift).sub(&QScalar::one());
    WElement::one().add(&n2.scale(&c)).scale(&QScalar::var(param, power))
}

/// `[λ2 + λ3] = (p2 p3 - p2⁻¹ p3⁻¹)/(q - q⁻¹)`.
pub fn lambda23_integer() -> QScalar {
    let up = QScalar::var(Var::P2, 1).mul(&QScalar::var(Var::P3, 1));
    let down = QScalar::var(Var::P2, -1).mul(&QScalar::var(Var::P3, -1));
    up.sub(&down).div(&q_delta()).expect("nonzero")
}

fn image(m: &WMonomial, r: Gl11Realization) -> WElement {
    match r {
        Gl11Realization::Trivial => {
            if m.e23 || m.e32 {
                return WElement::zero();
            }
            WElement::scalar(QScalar::var(Var::P2, m.k2 - m.k3))
        }
        Gl11Realization::Fermionic => {
            let mut out = WElement::one();
            if m.e32 {
                let b2 = WElement::term(
                    lambda23_integer(),
                    WMonomial {
                        fermions: [(false, false), (false, true)],
                        ..WMonomial::identity()
                    },
                );
                out = out.mul(&b2);
            }
            if m.k2 != 0 {
                out = out.mul(&graded_k_power(Var::P2, m.k2, m.k2));
            }
            if m.k3 != 0 {
                out = out.mul(&graded_k_power(Var::P3, m.k3, -m.k3));
            }
            if m.e23 {
                let b2d = WElement::term(
                    QScalar::one(),
                    WMonomial {
                        fermions: [(false, false), (true, false)],
                        ..WMonomial::identity()
                    },
                );
                out = out.mul(&b2d);
            }
            out
        }
    }
}

pub(super) fn substitute(x: &WElement, r: Gl11Realization) -> Result<WElement, WError> {
    let mut out = WElement::zero();
    for (m, c) in x.terms() {
        if r == Gl11Realization::Fermionic && m.uses_mode(1) {
            return Err(WError::OccupiedMode2);
        }
        if !m.has_gl11() {
            out.add_term(*m, c.clone());
            continue;
        }
        let rest = WElement::term(c.clone(), m.without_gl11());
        out = out.add(&rest.mul(&image(m, r)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walgebra::WSymbol;

    fn g(s: WSymbol) -> WElement {
        WElement::generator(s)
    }

    #[test]
    fn trivial_kills_odd_generators() {
        assert!(g(WSymbol::E23)
            .substitute_gl11(Gl11Realization::Trivial)
            .unwrap()
            .is_zero());
        let k3 = g(WSymbol::K3).substitute_gl11(Gl11Realization::Trivial).unwrap();
        assert_eq!(k3, WElement::scalar(QScalar::var(Var::P2, -1)));
    }

    #[test]
    fn fermionic_k2_image() {
        let img = g(WSymbol::K2).substitute_gl11(Gl11Realization::Fermionic).unwrap();
        // p2 (b2 b2⁺ + q b2⁺ b2), expanded from the letters themselves.
        let b2 = g(WSymbol::B2);
        let b2d = g(WSymbol::B2Create);
        let expected = b2
            .mul(&b2d)
            .add(&b2d.mul(&b2).scale(&QScalar::q()))
            .scale(&QScalar::var(Var::P2, 1));
        assert_eq!(img, expected);
    }

    #[test]
    fn fermionic_anticommutator_image() {
        let x = g(WSymbol::E23).anticommutator(&g(WSymbol::E32));
        let img = x.substitute_gl11(Gl11Realization::Fermionic).unwrap();
        // Direct expansion: b2⁺ [λ2+λ3] b2 + [λ2+λ3] b2 b2⁺ = [λ2+λ3].
        let b2 = g(WSymbol::B2).scale(&lambda23_integer());
        let b2d = g(WSymbol::B2Create);
        let direct = b2d.anticommutator(&b2);
        assert_eq!(img, direct);
        assert_eq!(img, WElement::scalar(lambda23_integer()));
    }

    #[test]
    fn fermionic_rejects_occupied_mode2() {
        assert_eq!(
            g(WSymbol::B2).substitute_gl11(Gl11Realization::Fermionic),
            Err(WError::OccupiedMode2)
        );
        assert!(g(WSymbol::B2).substitute_gl11(Gl11Realization::Trivial).is_ok());
    }

    #[test]
    fn fermionic_inverse_images() {
        for (s, si) in [(WSymbol::K2, WSymbol::K2Inv), (WSymbol::K3, WSymbol::K3Inv)] {
            let a = g(s).substitute_gl11(Gl11Realization::Fermionic).unwrap();
            let b = g(si).substitute_gl11(Gl11Realization::Fermionic).unwrap();
            assert_eq!(a.mul(&b), WElement::one());
        }
    }
}
