//! The defining relations, as explicit `lhs = rhs` instances.

use std::fmt;

use super::{e13_definition, e31_definition, Generator, Root, UElement};
use crate::scalarfield::{q_delta, QScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationFamily {
    /// `K_i^±1 K_j^±1 = K_j^±1 K_i^±1`, `K_i K_i⁻¹ = 1`.
    CartanCommutation,
    /// `K_i E_jk = q^{δij - δik} E_jk K_i`.
    CartanScaling,
    /// `[E12, E32] = [E21, E23] = 0`.
    VanishingCommutators,
    /// `[E12, E21] = (K1 K2⁻¹ - K1⁻¹ K2)/(q - q⁻¹)`.
    EvenCartan,
    /// `{E23, E32} = (K2 K3 - K2⁻¹ K3⁻¹)/(q - q⁻¹)`.
    OddCartan,
    /// `E23² = E32² = 0`.
    OddSquares,
    /// `E12 E13 - q E13 E12 = 0`.
    SerreRaising,
    /// `E21 E31 - q E31 E21 = 0`.
    SerreLowering,
    /// `E13 = E12 E23 - q⁻¹ E23 E12`.
    DefinitionE13,
    /// `E31 = -E21 E32 + q⁻¹ E32 E21`.
    DefinitionE31,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 10] = [
        RelationFamily::CartanCommutation,
        RelationFamily::CartanScaling,
        RelationFamily::VanishingCommutators,
        RelationFamily::EvenCartan,
        RelationFamily::OddCartan,
        RelationFamily::OddSquares,
        RelationFamily::SerreRaising,
        RelationFamily::SerreLowering,
        RelationFamily::DefinitionE13,
        RelationFamily::DefinitionE31,
    ];

    pub fn is_definition(self) -> bool {
        matches!(self, RelationFamily::DefinitionE13 | RelationFamily::DefinitionE31)
    }

    pub fn label(self) -> &'static str {
        match self {
            RelationFamily::CartanCommutation => "cartan-commutation",
            RelationFamily::CartanScaling => "cartan-scaling",
            RelationFamily::VanishingCommutators => "vanishing-commutators",
            RelationFamily::EvenCartan => "even-cartan",
            RelationFamily::OddCartan => "odd-cartan",
            RelationFamily::OddSquares => "odd-squares",
            RelationFamily::SerreRaising => "serre-raising",
            RelationFamily::SerreLowering => "serre-lowering",
            RelationFamily::DefinitionE13 => "definition-E13",
            RelationFamily::DefinitionE31 => "definition-E31",
        }
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// One relation instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub family: RelationFamily,
    pub name: String,
    pub lhs: UElement,
    pub rhs: UElement,
}

impl Relation {
    fn new(family: RelationFamily, name: impl Into<String>, lhs: UElement, rhs: UElement) -> Self {
        Self {
            family,
            name: name.into(),
            lhs,
            rhs,
        }
    }

    /// True if every letter lies in 𝒜₀.
    pub fn within_a0(&self) -> bool {
        self.lhs
            .generators()
            .into_iter()
            .chain(self.rhs.generators())
            .all(|g| g.is_a0())
    }
}

fn w(letters: &[Generator]) -> UElement {
    UElement::letters(letters)
}

fn k(i: u8, p: i32) -> Generator {
    Generator::K(i, p)
}

/// `(K_a K_b - K_a⁻¹ K_b⁻¹)/(q - q⁻¹)` with the given exponent signs on `b`.
fn cartan_fraction(a: u8, b: u8, b_sign: i32) -> UElement {
    let inv = q_delta().invert().expect("nonzero");
    w(&[k(a, 1), k(b, b_sign)])
        .sub(&w(&[k(a, -1), k(b, -b_sign)]))
        .scale(&inv)
}

/// The full relation set in a fixed order.
pub fn relation_set() -> Vec<Relation> {
    use RelationFamily as F;
    let mut out = Vec::new();

    for i in 1..=3u8 {
        out.push(Relation::new(
            F::CartanCommutation,
            format!("K{i} K{i}inv = 1"),
            w(&[k(i, 1), k(i, -1)]),
            UElement::one(),
        ));
        out.push(Relation::new(
            F::CartanCommutation,
            format!("K{i}inv K{i} = 1"),
            w(&[k(i, -1), k(i, 1)]),
            UElement::one(),
        ));
    }
    for i in 1..=3u8 {
        for j in (i + 1)..=3u8 {
            for si in [1, -1] {
                for sj in [1, -1] {
                    let a = k(i, si);
                    let b = k(j, sj);
                    out.push(Relation::new(
                        F::CartanCommutation,
                        format!("{} {} = {} {}", a.name(), b.name(), b.name(), a.name()),
                        w(&[a, b]),
                        w(&[b, a]),
                    ));
                }
            }
        }
    }

    for i in 1..=3u8 {
        for root in [Root::E12, Root::E21, Root::E23, Root::E32] {
            let e = Generator::E(root);
            let wt = root.weight(i);
            out.push(Relation::new(
                F::CartanScaling,
                format!("K{i} {} = q^{wt} {} K{i}", root.name(), root.name()),
                w(&[k(i, 1), e]),
                w(&[e, k(i, 1)]).scale(&QScalar::q_pow(wt)),
            ));
        }
    }

    out.push(Relation::new(
        F::VanishingCommutators,
        "[E12, E32] = 0",
        w(&[Generator::E12, Generator::E32]).sub(&w(&[Generator::E32, Generator::E12])),
        UElement::zero(),
    ));
    out.push(Relation::new(
        F::VanishingCommutators,
        "[E21, E23] = 0",
        w(&[Generator::E21, Generator::E23]).sub(&w(&[Generator::E23, Generator::E21])),
        UElement::zero(),
    ));

    out.push(Relation::new(
        F::EvenCartan,
        "[E12, E21] = (K1 K2inv - K1inv K2)/(q - q^-1)",
        w(&[Generator::E12, Generator::E21]).sub(&w(&[Generator::E21, Generator::E12])),
        cartan_fraction(1, 2, -1),
    ));
    out.push(Relation::new(
        F::OddCartan,
        "{E23, E32} = (K2 K3 - K2inv K3inv)/(q - q^-1)",
        w(&[Generator::E23, Generator::E32]).add(&w(&[Generator::E32, Generator::E23])),
        cartan_fraction(2, 3, 1),
    ));

    out.push(Relation::new(
        F::OddSquares,
        "E23^2 = 0",
        w(&[Generator::E23, Generator::E23]),
        UElement::zero(),
    ));
    out.push(Relation::new(
        F::OddSquares,
        "E32^2 = 0",
        w(&[Generator::E32, Generator::E32]),
        UElement::zero(),
    ));

    out.push(Relation::new(
        F::SerreRaising,
        "E12 E13 - q E13 E12 = 0",
        w(&[Generator::E12, Generator::E13]).sub(&w(&[Generator::E13, Generator::E12]).scale(&QScalar::q())),
        UElement::zero(),
    ));
    out.push(Relation::new(
        F::SerreLowering,
        "E21 E31 - q E31 E21 = 0",
        w(&[Generator::E21, Generator::E31]).sub(&w(&[Generator::E31, Generator::E21]).scale(&QScalar::q())),
        UElement::zero(),
    ));

    out.push(Relation::new(
        F::DefinitionE13,
        "E13 = E12 E23 - q^-1 E23 E12",
        w(&[Generator::E13]),
        e13_definition(),
    ));
    out.push(Relation::new(
        F::DefinitionE31,
        "E31 = -E21 E32 + q^-1 E32 E21",
        w(&[Generator::E31]),
        e31_definition(),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eight_families_plus_two_definitions() {
        let rels = relation_set();
        let mut families: Vec<_> = rels.iter().map(|r| r.family).collect();
        families.dedup();
        assert_eq!(families.len(), 10);
        assert_eq!(families.iter().filter(|f| f.is_definition()).count(), 2);
    }

    #[test]
    fn scaling_instances() {
        let rels = relation_set();
        let find = |name: &str| rels.iter().find(|r| r.name == name).unwrap().clone();
        let r = find("K1 E12 = q^1 E12 K1");
        assert_eq!(r.rhs, w(&[Generator::E12, k(1, 1)]).scale(&QScalar::q()));
        let r = find("K2 E32 = q^-1 E32 K2");
        assert_eq!(r.rhs, w(&[Generator::E32, k(2, 1)]).scale(&QScalar::q_pow(-1)));
        let count = rels
            .iter()
            .filter(|r| r.family == RelationFamily::CartanScaling)
            .count();
        assert_eq!(count, 12);
    }

    #[test]
    fn a0_membership() {
        let rels = relation_set();
        let a0: Vec<_> = rels.iter().filter(|r| r.within_a0()).map(|r| r.name.clone()).collect();
        assert!(a0.contains(&"{E23, E32} = (K2 K3 - K2inv K3inv)/(q - q^-1)".to_string()));
        assert!(a0.contains(&"E21 E31 - q E31 E21 = 0".to_string()));
        assert!(!a0.contains(&"[E12, E32] = 0".to_string()));
    }
}
