//! The boson-fermion images of the generators.

use std::collections::BTreeMap;
use std::fmt;

use crate::report::{Check, Report};
use crate::scalarfield::{q_delta, LaurentPoly, QScalar, Var, NVARS};
use crate::uqgl21::{relation_set, Generator, Root, UElement};
use crate::walgebra::{ElementParity, Gl11Realization, WElement, WError, WSymbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubalgebraMode {
    /// gl(1/1) factors kept as `e23, e32, k2, k3`.
    Abstract,
    Trivial,
    Fermionic,
}

impl SubalgebraMode {
    pub const ALL: [SubalgebraMode; 3] = [
        SubalgebraMode::Abstract,
        SubalgebraMode::Trivial,
        SubalgebraMode::Fermionic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubalgebraMode::Abstract => "abstract",
            SubalgebraMode::Trivial => "trivial",
            SubalgebraMode::Fermionic => "fermionic",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == s)
    }

    pub fn gl11(self) -> Option<Gl11Realization> {
        match self {
            SubalgebraMode::Abstract => None,
            SubalgebraMode::Trivial => Some(Gl11Realization::Trivial),
            SubalgebraMode::Fermionic => Some(Gl11Realization::Fermionic),
        }
    }

    /// Fermion modes the images may use.
    pub fn modes(self) -> [bool; 2] {
        [true, self == SubalgebraMode::Fermionic]
    }

    /// Parameters `p1, p2, p3` the images must use.
    pub fn parameters(self) -> [bool; 3] {
        match self {
            SubalgebraMode::Abstract => [true, false, false],
            SubalgebraMode::Trivial => [true, true, false],
            SubalgebraMode::Fermionic => [true, true, true],
        }
    }
}

impl fmt::Display for SubalgebraMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn g(s: WSymbol) -> WElement {
    WElement::generator(s)
}

fn prod(parts: &[WElement]) -> WElement {
    parts.iter().fold(WElement::one(), |acc, x| acc.mul(x))
}

fn c(x: QScalar) -> WElement {
    WElement::scalar(x)
}

fn p1(k: i32) -> WElement {
    c(QScalar::var(Var::P1, k))
}

fn qp(k: i32) -> WElement {
    c(QScalar::q_pow(k))
}

/// `b b+ + q^s b+ b`.
fn graded_unit(s: i32) -> WElement {
    let b = g(WSymbol::B1);
    let bp = g(WSymbol::B1Create);
    b.mul(&bp).add(&bp.mul(&b).scale(&QScalar::q_pow(s)))
}

/// Images in the abstract mode.
pub fn rho(gen: Generator) -> WElement {
    use WSymbol as S;
    let t = g(S::T);
    let tinv = g(S::TInv);
    let d = graded_unit(1);
    let dinv = graded_unit(-1);
    let inv_delta = c(q_delta().invert().expect("nonzero"));
    match gen {
        Generator::E(Root::E12) => g(S::Create),
        Generator::E(Root::E13) => prod(&[tinv, g(S::B1Create)]),
        Generator::E(Root::E23) => {
            prod(&[qp(1), g(S::Annihilate), g(S::B1Create)])
                .neg()
                .add(&prod(&[t, d, g(S::E23)]))
        }
        Generator::E(Root::E32) => prod(&[qp(-1), g(S::Create), g(S::B1), g(S::K2), g(S::K3)]).add(&g(S::E32)),
        Generator::E(Root::E21) => {
            let inner = prod(&[p1(1), qp(-1), t, d, g(S::K2Inv)]).sub(&prod(&[p1(-1), qp(1), tinv, dinv, g(S::K2)]));
            prod(&[g(S::Annihilate), inv_delta, inner])
                .neg()
                .sub(&prod(&[p1(-1), g(S::B1), g(S::E23), g(S::K2)]))
        }
        Generator::E(Root::E31) => {
            let first = prod(&[
                g(S::Create),
                g(S::Annihilate),
                g(S::B1),
                p1(1),
                t.clone(),
                qp(-1),
                g(S::K3),
            ]);
            let second = prod(&[g(S::Annihilate), p1(1), t, qp(-2), d, g(S::K2Inv), g(S::E32)]);
            let frac = prod(&[p1(1), g(S::K3)]).sub(&prod(&[p1(-1), g(S::K3Inv)]));
            let third = prod(&[qp(-1), g(S::B1), frac, inv_delta]);
            first.add(&second).add(&third)
        }
        Generator::K(1, 1) => prod(&[p1(1), t, d]),
        Generator::K(1, -1) => prod(&[p1(-1), tinv, dinv]),
        Generator::K(2, 1) => prod(&[tinv, g(S::K2)]),
        Generator::K(2, -1) => prod(&[t, g(S::K2Inv)]),
        Generator::K(3, 1) => prod(&[dinv, g(S::K3)]),
        Generator::K(3, -1) => prod(&[d, g(S::K3Inv)]),
        Generator::K(i, e) => {
            let base = rho(Generator::K(i, e.signum()));
            base.pow(e.unsigned_abs())
        }
    }
}

/// Images of every generator in one mode.
#[derive(Debug, Clone)]
pub struct RealizationMap {
    pub mode: SubalgebraMode,
    images: BTreeMap<Generator, WElement>,
}

impl RealizationMap {
    pub fn new(mode: SubalgebraMode) -> Result<Self, WError> {
        let mut images = BTreeMap::new();
        for gen in Generator::all() {
            let x = rho(gen);
            let x = match mode.gl11() {
                None => x,
                Some(r) => x.substitute_gl11(r)?,
            };
            images.insert(gen, x);
        }
        Ok(Self { mode, images })
    }

    pub fn image(&self, gen: Generator) -> WElement {
        match self.images.get(&gen) {
            Some(x) => x.clone(),
            None => match gen {
                Generator::K(i, e) => self.image(Generator::K(i, e.signum())).pow(e.unsigned_abs()),
                _ => unreachable!("every root vector has an image"),
            },
        }
    }

    /// The same map with one image replaced.
    pub fn with_image(mut self, gen: Generator, x: WElement) -> Self {
        self.images.insert(gen, x);
        self
    }

    pub fn images(&self) -> impl Iterator<Item = (&Generator, &WElement)> {
        self.images.iter()
    }

    /// `ρ` extended to linear combinations of words.
    pub fn apply(&self, x: &UElement) -> WElement {
        let mut out = WElement::zero();
        for (w, coeff) in x.terms() {
            let img = w
                .letters()
                .iter()
                .fold(WElement::one(), |acc, &gen| acc.mul(&self.image(gen)));
            out = out.add(&img.scale(coeff));
        }
        out
    }
}

/// Every defining relation under `ρ`, plus parity and structural checks.
pub fn verify_realization(mode: SubalgebraMode) -> Report {
    let mut report = Report::new(format!("realization relations, subalgebra {mode}"));
    let map = match RealizationMap::new(mode) {
        Ok(m) => m,
        Err(e) => {
            report.push(Check::failed("construct images", e.to_string()));
            return report;
        }
    };
    report.extend(check_relations_for(&map));
    report.extend(structural_checks(&map));
    if mode == SubalgebraMode::Fermionic {
        report.extend(check_trivial_projection());
    }
    report
}

/// Every defining relation under an arbitrary assignment of images.
pub fn check_relations_for(map: &RealizationMap) -> Report {
    let mut report = Report::new(format!("relations, subalgebra {}", map.mode));
    for r in relation_set() {
        let diff = map.apply(&r.lhs).sub(&map.apply(&r.rhs));
        let detail = if diff.is_zero() {
            String::new()
        } else {
            format!("residual {diff}")
        };
        report.push(Check::new(format!("{}: {}", r.family, r.name), diff.len()).with_detail(detail));
    }
    report
}

/// Fermionic images with mode-2 monomials dropped and `p3 = p2^-1`
/// against the trivial images.
pub fn check_trivial_projection() -> Report {
    let mut report = Report::new("fermionic to trivial projection");
    let (Ok(fermionic), Ok(trivial)) = (
        RealizationMap::new(SubalgebraMode::Fermionic),
        RealizationMap::new(SubalgebraMode::Trivial),
    ) else {
        report.push(Check::failed("construct images", "substitution failed"));
        return report;
    };
    let p2inv = LaurentPoly::var_power(Var::P2 as usize, -1);
    for (gen, x) in fermionic.images() {
        let projected = x
            .filter(|m| !m.uses_mode(1))
            .map_coefficients(|c| c.substitute(Var::P3, &p2inv));
        let check = match projected {
            Ok(p) => Check::new(
                format!("projection of {}", gen.name()),
                p.sub(&trivial.image(*gen)).len(),
            ),
            Err(e) => Check::failed(format!("projection of {}", gen.name()), e.to_string()),
        };
        report.push(check);
    }
    report
}

fn structural_checks(map: &RealizationMap) -> Report {
    let mode = map.mode;
    let mut report = Report::new("structure");
    let mut bad_parity = Vec::new();
    let mut vars = [false; NVARS];
    let mut modes = [false; 2];
    let mut gl11 = false;
    for (gen, x) in map.images() {
        if x.parity() != ElementParity::Homogeneous(gen.parity()) {
            bad_parity.push(gen.name());
        }
        for (acc, v) in vars.iter_mut().zip(x.variables()) {
            *acc |= v;
        }
        for (acc, v) in modes.iter_mut().zip(x.modes_used()) {
            *acc |= v;
        }
        gl11 |= x.has_gl11();
    }
    report.push(Check::new("parity of images", bad_parity.len()).with_detail(bad_parity.join(" ")));
    let used: Vec<_> = (1..NVARS).filter(|&i| vars[i]).map(|i| Var::ALL[i].name()).collect();
    let wanted = mode.parameters();
    let param_ok = (1..NVARS).all(|i| vars[i] == wanted[i - 1]);
    let param_check = Check::new("parameters", usize::from(!param_ok)).with_detail(format!("uses {}", used.join(", ")));
    report.push(param_check);
    let modes_ok = modes == mode.modes();
    let n_modes = modes.iter().filter(|&&m| m).count();
    report.push(
        Check::new("fermion pairs", usize::from(!modes_ok))
            .with_detail(format!("uses {n_modes} fermion pair(s) and one boson pair")),
    );
    let gl11_ok = gl11 == (mode == SubalgebraMode::Abstract);
    report.push(
        Check::new("gl(1/1) factors", usize::from(!gl11_ok)).with_detail(if gl11 { "present" } else { "absent" }),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_images() {
        assert_eq!(rho(Generator::E12), g(WSymbol::Create));
        assert_eq!(rho(Generator::K(2, 1)), prod(&[g(WSymbol::TInv), g(WSymbol::K2)]));
    }

    #[test]
    fn e13_from_definition() {
        let lhs = rho(Generator::E12)
            .mul(&rho(Generator::E23))
            .sub(&rho(Generator::E23).mul(&rho(Generator::E12)).scale(&QScalar::q_pow(-1)));
        assert_eq!(lhs, rho(Generator::E13));
    }

    #[test]
    fn cartan_inverses() {
        for i in 1..=3 {
            let x = rho(Generator::K(i, 1)).mul(&rho(Generator::K(i, -1)));
            assert_eq!(x, WElement::one(), "K{i}");
        }
    }

    #[test]
    fn abstract_relations() {
        let r = verify_realization(SubalgebraMode::Abstract);
        assert!(r.all_passed(), "{r}");
    }
}
