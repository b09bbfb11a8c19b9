//! Shared proptest strategies.
#![allow(dead_code)]

use num::BigRational;
use proptest::prelude::*;

use qrealize::scalarfield::{Exponents, LaurentPoly, QScalar};
use qrealize::walgebra::{WElement, WMonomial, WSymbol};

pub fn exponents() -> impl Strategy<Value = Exponents> {
    prop::array::uniform4(-2i32..=2)
}

pub fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((exponents(), -4i64..=4, 1i64..=3), 1..=3).prop_map(|terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|(e, n, d)| (e, BigRational::new(n.into(), d.into()))),
        )
    })
}

pub fn scalar() -> impl Strategy<Value = QScalar> {
    (poly(), poly()).prop_map(|(n, d)| {
        if d.is_zero() {
            QScalar::from_poly(n)
        } else {
            QScalar::fraction(n, d).expect("nonzero denominator")
        }
    })
}

pub fn small_scalar() -> impl Strategy<Value = QScalar> {
    (-3i64..=3, 1i64..=2, prop::array::uniform4(-1i32..=1))
        .prop_map(|(n, d, e)| QScalar::monomial(BigRational::new(n.into(), d.into()), e))
}

pub fn monomial() -> impl Strategy<Value = WMonomial> {
    (
        (0u32..=2, 0u32..=2, any::<bool>()),
        -2i32..=2,
        prop::array::uniform2((any::<bool>(), any::<bool>())),
        (any::<bool>(), -1i32..=1, -1i32..=1, any::<bool>()),
    )
        .prop_map(|((c, a, pick), t, fermions, (e32, k2, k3, e23))| {
            // A normal-ordered monomial carries a⁺ or a, never both.
            let (create, annihilate) = if pick { (c, 0) } else { (0, a) };
            WMonomial {
                create,
                t,
                annihilate,
                fermions,
                e32,
                k2,
                k3,
                e23,
            }
        })
}

pub fn element() -> impl Strategy<Value = WElement> {
    prop::collection::vec((small_scalar(), monomial()), 0..=3).prop_map(|terms| {
        let mut x = WElement::zero();
        for (c, m) in terms {
            x.add_term(m, c);
        }
        x
    })
}

pub fn symbol_word() -> impl Strategy<Value = Vec<WSymbol>> {
    prop::collection::vec(prop::sample::select(WSymbol::ALL.to_vec()), 0..=5)
}

/// Words whose mode-2 content is compatible with the fermionic substitution.
pub fn gl11_word() -> impl Strategy<Value = Vec<WSymbol>> {
    use WSymbol::*;
    let letters = vec![
        Create, Annihilate, T, TInv, B1Create, B1, E23, E32, K2, K2Inv, K3, K3Inv,
    ];
    prop::collection::vec(prop::sample::select(letters), 0..=5)
}
