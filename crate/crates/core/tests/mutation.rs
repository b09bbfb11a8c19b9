use qrealize::realization::{check_relations_for, RealizationMap, SubalgebraMode};
use qrealize::scalarfield::QScalar;
use qrealize::uqgl21::Generator;
use qrealize::walgebra::{WElement, WSymbol};

fn failing(map: &RealizationMap) -> Vec<String> {
    check_relations_for(map).failures().map(|c| c.name.clone()).collect()
}

#[test]
fn unmodified_images_pass() {
    for mode in SubalgebraMode::ALL {
        let map = RealizationMap::new(mode).unwrap();
        assert!(failing(&map).is_empty(), "{mode}");
    }
}

#[test]
fn rescaled_raising_image_breaks_the_cartan_identity() {
    let map = RealizationMap::new(SubalgebraMode::Abstract).unwrap();
    let e12 = map.image(Generator::E12).scale(&QScalar::from_int(2));
    let bad = failing(&map.with_image(Generator::E12, e12));
    assert!(bad.iter().any(|n| n.starts_with("even-cartan")), "{bad:?}");
}

#[test]
fn deformation_parameter_matters() {
    let map = RealizationMap::new(SubalgebraMode::Trivial).unwrap();
    let e21 = map.image(Generator::E21).scale(&QScalar::q());
    assert!(!failing(&map.with_image(Generator::E21, e21)).is_empty());
}

#[test]
fn dropping_the_fermion_breaks_the_odd_relations() {
    let map = RealizationMap::new(SubalgebraMode::Fermionic).unwrap();
    let e23 = map.image(Generator::E23).filter(|m| !m.uses_mode(0));
    let bad = failing(&map.with_image(Generator::E23, e23));
    assert!(bad.iter().any(|n| n.starts_with("odd-cartan")), "{bad:?}");
}

#[test]
fn odd_image_made_even_breaks_the_square() {
    let map = RealizationMap::new(SubalgebraMode::Abstract).unwrap();
    let even = WElement::generator(WSymbol::Create);
    let bad = failing(&map.with_image(Generator::E32, even));
    assert!(bad.iter().any(|n| n.starts_with("odd-squares")), "{bad:?}");
}
