//! Truncated Fock-space matrices.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::map::{RealizationMap, SubalgebraMode};
use crate::induced::Gl11Rep;
use crate::report::{Check, Report};
use crate::scalarfield::{q_integer, Assignment, QScalar, ScalarError};
use crate::uqgl21::{relation_set, Generator, UElement};
use crate::walgebra::{WElement, WMonomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("gl(1/1) factors have no Fock matrix; substitute a realization first")]
    AbstractGl11,
    #[error("fermion mode {0} is not part of this space")]
    ModeNotActive(usize),
    #[error("entry is singular at the assignment: {0}")]
    Pole(#[from] ScalarError),
}

/// `{|n> : n < cutoff}` tensored with the active fermion modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockSpace {
    pub cutoff: usize,
    pub modes: [bool; 2],
}

/// Basis state: boson number and fermion occupations (`None` if inactive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockState {
    pub n: usize,
    pub occupations: [Option<bool>; 2],
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}", self.n)?;
        for o in self.occupations.iter().flatten() {
            write!(f, ",{}", *o as u8)?;
        }
        f.write_str(">")
    }
}

impl FockSpace {
    pub fn new(cutoff: usize, modes: [bool; 2]) -> Self {
        assert!(cutoff >= 1, "cutoff must be positive");
        Self { cutoff, modes }
    }

    pub fn boson(cutoff: usize) -> Self {
        Self::new(cutoff, [false, false])
    }

    pub fn for_mode(mode: SubalgebraMode, cutoff: usize) -> Self {
        Self::new(cutoff, mode.modes())
    }

    pub fn fermion_dim(&self) -> usize {
        1 << self.modes.iter().filter(|&&m| m).count()
    }

    pub fn dim(&self) -> usize {
        self.cutoff * self.fermion_dim()
    }

    pub fn index(&self, n: usize, occ: [bool; 2]) -> usize {
        let mut f = 0;
        for (active, o) in self.modes.iter().zip(occ) {
            if *active {
                f = 2 * f + o as usize;
            }
        }
        n * self.fermion_dim() + f
    }

    pub fn state(&self, index: usize) -> FockState {
        let fd = self.fermion_dim();
        let n = index / fd;
        let mut f = index % fd;
        let mut occupations = [None; 2];
        for mode in (0..2).rev() {
            if self.modes[mode] {
                occupations[mode] = Some(f % 2 == 1);
                f /= 2;
            }
        }
        FockState { n, occupations }
    }

    fn occupation(&self, index: usize) -> (usize, [bool; 2]) {
        let s = self.state(index);
        (
            s.n,
            [s.occupations[0].unwrap_or(false), s.occupations[1].unwrap_or(false)],
        )
    }
}

/// Sparse square matrix stored by columns.
#[derive(Clone, PartialEq, Eq)]
pub struct FockMatrix {
    space: FockSpace,
    cols: Vec<BTreeMap<usize, QScalar>>,
}

impl FockMatrix {
    pub fn zeros(space: FockSpace) -> Self {
        Self {
            space,
            cols: vec![BTreeMap::new(); space.dim()],
        }
    }

    pub fn identity(space: FockSpace) -> Self {
        let mut m = Self::zeros(space);
        for j in 0..space.dim() {
            m.add_entry(j, j, QScalar::one());
        }
        m
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> QScalar {
        self.cols[col].get(&row).cloned().unwrap_or_default()
    }

    pub fn add_entry(&mut self, row: usize, col: usize, c: QScalar) {
        if c.is_zero() {
            return;
        }
        let col = &mut self.cols[col];
        let sum = match col.remove(&row) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            col.insert(row, sum);
        }
    }

    /// Nonzero entries ordered by row, then column.
    pub fn entries(&self) -> Vec<(usize, usize, QScalar)> {
        let mut out: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(&i, c)| (i, j, c.clone())))
            .collect();
        out.sort_by_key(|e| (e.0, e.1));
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (j, col) in other.cols.iter().enumerate() {
            for (&i, c) in col {
                out.add_entry(i, j, c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = Self::zeros(self.space);
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, x) in col {
                out.add_entry(i, j, x.mul(c));
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&QScalar::from_int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        let mut out = Self::zeros(self.space);
        for (j, col) in other.cols.iter().enumerate() {
            for (&k, b) in col {
                for (&i, a) in &self.cols[k] {
                    out.add_entry(i, j, a.mul(b));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    /// Nonzero entries in columns whose input state has `n ≤ max_n`.
    pub fn nonzero_on(&self, max_n: usize) -> usize {
        self.cols
            .iter()
            .enumerate()
            .filter(|(j, _)| self.space.state(*j).n <= max_n)
            .map(|(_, c)| c.len())
            .sum()
    }

    pub fn evaluate(&self, a: &Assignment) -> Result<Self, ScalarError> {
        let mut out = Self::zeros(self.space);
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, c) in col {
                out.add_entry(i, j, QScalar::from_rational(c.evaluate(a)?));
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for FockMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, c) in self.entries() {
            writeln!(f, "[{i},{j}] {c}")?;
        }
        Ok(())
    }
}

struct QIntegers(Vec<QScalar>);

impl QIntegers {
    fn new(cutoff: usize) -> Self {
        Self((0..=cutoff as i32).map(q_integer).collect())
    }
}

/// `m |n, occ>` without the gl(1/1) part, or `None` if it vanishes.
fn apply_oscillators(
    m: &WMonomial,
    n: usize,
    mut occ: [bool; 2],
    cutoff: usize,
    brackets: &QIntegers,
) -> Option<(QScalar, usize, [bool; 2])> {
    let mut negative = false;
    for mode in [1, 0] {
        let (create, annihilate) = m.fermions[mode];
        let string_sign = mode == 1 && occ[0];
        if annihilate {
            if !occ[mode] {
                return None;
            }
            occ[mode] = false;
            negative ^= string_sign;
        }
        if create {
            if occ[mode] {
                return None;
            }
            occ[mode] = true;
            negative ^= string_sign;
        }
    }
    let mut amp = QScalar::one();
    let mut n = n;
    for _ in 0..m.annihilate {
        if n == 0 {
            return None;
        }
        amp = amp.mul(&brackets.0[n]);
        n -= 1;
    }
    amp = amp.mul(&QScalar::q_pow(m.t * n as i32));
    n += m.create as usize;
    if n >= cutoff {
        return None;
    }
    if negative {
        amp = amp.neg();
    }
    Some((amp, n, occ))
}

/// Matrix of `x` on `space`; entries evaluated when `assignment` is given.
pub fn fock_matrix(x: &WElement, space: FockSpace, assignment: Option<&Assignment>) -> Result<FockMatrix, FockError> {
    if x.has_gl11() {
        return Err(FockError::AbstractGl11);
    }
    for (mode, used) in x.modes_used().into_iter().enumerate() {
        if used && !space.modes[mode] {
            return Err(FockError::ModeNotActive(mode + 1));
        }
    }
    let brackets = QIntegers::new(space.cutoff);
    let mut out = FockMatrix::zeros(space);
    for j in 0..space.dim() {
        let (n, occ) = space.occupation(j);
        for (m, c) in x.terms() {
            if let Some((amp, n2, occ2)) = apply_oscillators(m, n, occ, space.cutoff, &brackets) {
                out.add_entry(space.index(n2, occ2), j, c.mul(&amp));
            }
        }
    }
    match assignment {
        Some(a) => Ok(out.evaluate(a)?),
        None => Ok(out),
    }
}

/// Matrix of `x` with its gl(1/1) factors acting through `rep` on a
/// second tensor factor, with the graded sign against mode-1 occupation.
pub fn fock_matrix_with_gl11(x: &WElement, cutoff: usize, rep: &Gl11Rep) -> Result<FockMatrix, FockError> {
    let d = rep.dim();
    assert!(d == 1 || d == 2, "gl(1/1) factor must be one- or two-dimensional");
    if x.modes_used()[1] {
        return Err(FockError::ModeNotActive(2));
    }
    let space = FockSpace::new(cutoff, [true, d == 2]);
    let brackets = QIntegers::new(cutoff);
    let mut out = FockMatrix::zeros(space);
    for j in 0..space.dim() {
        let (n, occ) = space.occupation(j);
        let v = occ[1] as usize;
        for (m, c) in x.terms() {
            let Some((amp, n2, occ2)) = apply_oscillators(&m.without_gl11(), n, [occ[0], false], cutoff, &brackets)
            else {
                continue;
            };
            let g = rep.monomial_matrix(m.e32, m.k2, m.k3, m.e23);
            let sign = if occ[0] && (m.e32 ^ m.e23) { -1 } else { 1 };
            for w in 0..d {
                let e = g.get(w, v);
                if !e.is_zero() {
                    let idx = space.index(n2, [occ2[0], w == 1]);
                    out.add_entry(idx, j, c.mul(&amp).mul(e).mul(&QScalar::from_int(sign)));
                }
            }
        }
    }
    Ok(out)
}

fn word_degree(map: &RealizationMap, letters: &[Generator]) -> u32 {
    letters.iter().map(|&g| map.image(g).max_create_degree()).sum()
}

/// Largest summed raising degree over the words of every relation.
pub fn shift_bound(map: &RealizationMap) -> u32 {
    relation_set()
        .iter()
        .flat_map(|r| {
            r.lhs
                .terms()
                .chain(r.rhs.terms())
                .map(|(w, _)| word_degree(map, w.letters()))
                .collect::<Vec<_>>()
        })
        .max()
        .unwrap_or(0)
}

struct Renderer<'a> {
    map: &'a RealizationMap,
    space: FockSpace,
    assignment: Option<&'a Assignment>,
    cache: BTreeMap<Generator, FockMatrix>,
}

impl Renderer<'_> {
    fn generator(&mut self, g: Generator) -> Result<FockMatrix, FockError> {
        if let Some(m) = self.cache.get(&g) {
            return Ok(m.clone());
        }
        let m = fock_matrix(&self.map.image(g), self.space, self.assignment)?;
        self.cache.insert(g, m.clone());
        Ok(m)
    }

    /// Sum of products of rendered generator matrices.
    fn element(&mut self, x: &UElement) -> Result<FockMatrix, FockError> {
        let mut out = FockMatrix::zeros(self.space);
        for (w, c) in x.terms() {
            let mut m = FockMatrix::identity(self.space);
            for &g in w.letters() {
                m = m.mul(&self.generator(g)?);
            }
            let c = match self.assignment {
                Some(a) => QScalar::from_rational(c.evaluate(a)?),
                None => c.clone(),
            };
            out = out.add(&m.scale(&c));
        }
        Ok(out)
    }
}

/// Every defining relation as a product of truncated generator matrices,
/// compared on input states at least the shift bound below the cutoff.
pub fn check_relations_on_fock(mode: SubalgebraMode, cutoff: usize, assignment: Option<&Assignment>) -> Report {
    let label = match assignment {
        Some(a) => format!("q={}, p1={}, p2={}, p3={}", a.q, a.p1, a.p2, a.p3),
        None => "symbolic".to_string(),
    };
    let mut report = Report::new(format!("Fock relations, subalgebra {mode}, D = {cutoff}, {label}"));
    if mode == SubalgebraMode::Abstract {
        report.push(Check::failed("render", FockError::AbstractGl11.to_string()));
        return report;
    }
    let map = match RealizationMap::new(mode) {
        Ok(m) => m,
        Err(e) => {
            report.push(Check::failed("construct images", e.to_string()));
            return report;
        }
    };
    let space = FockSpace::for_mode(mode, cutoff);
    let shift = shift_bound(&map) as usize;
    let mut r = Renderer {
        map: &map,
        space,
        assignment,
        cache: BTreeMap::new(),
    };
    let safe_max = cutoff.checked_sub(1 + shift);
    let safe_states = (0..space.dim())
        .filter(|&j| safe_max.is_some_and(|s| space.state(j).n <= s))
        .count();
    let excluded = space.dim() - safe_states;
    let boundary_ok = excluded == 2 * space.fermion_dim();
    report.push(
        Check::new("truncation boundary", usize::from(!boundary_ok)).with_detail(format!(
            "shift bound {shift}, {excluded} of {} states excluded",
            space.dim()
        )),
    );
    let Some(safe_max) = safe_max else {
        report.push(Check::failed("safe region", "cutoff below shift bound"));
        return report;
    };
    for rel in relation_set() {
        let check = r.element(&rel.lhs).and_then(|l| Ok(l.sub(&r.element(&rel.rhs)?)));
        match check {
            Ok(diff) => report.push(Check::new(
                format!("{}: {}", rel.family, rel.name),
                diff.nonzero_on(safe_max),
            )),
            Err(e) => report.push(Check::failed(rel.name, e.to_string())),
        }
    }
    report
}

/// Rendering each abstract image through a gl(1/1) representation against
/// rendering its substituted image, for both plug-ins.
pub fn check_consistency_square(cutoff: usize) -> Report {
    let mut report = Report::new(format!("rendering commutes with substitution, D = {cutoff}"));
    for (mode, rep) in [
        (SubalgebraMode::Trivial, Gl11Rep::trivial()),
        (SubalgebraMode::Fermionic, Gl11Rep::fermionic()),
    ] {
        let Some(r) = mode.gl11() else { continue };
        let space = FockSpace::for_mode(mode, cutoff);
        for g in Generator::all() {
            let x = super::map::rho(g);
            let name = format!("[{mode}] {}", g.name());
            let direct = fock_matrix_with_gl11(&x, cutoff, &rep);
            let substituted = x
                .substitute_gl11(r)
                .map_err(|e| e.to_string())
                .and_then(|y| fock_matrix(&y, space, None).map_err(|e| e.to_string()));
            match (direct, substituted) {
                (Ok(a), Ok(b)) => report.push(Check::new(name, a.sub(&b).entries().len())),
                (Err(e), _) => report.push(Check::failed(name, e.to_string())),
                (_, Err(e)) => report.push(Check::failed(name, e)),
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walgebra::WSymbol;

    fn g(s: WSymbol) -> WElement {
        WElement::generator(s)
    }

    #[test]
    fn annihilator_entries() {
        let m = fock_matrix(&g(WSymbol::Annihilate), FockSpace::boson(3), None).unwrap();
        assert_eq!(m.get(0, 1), QScalar::one());
        assert_eq!(m.get(1, 2), q_integer(2));
        assert_eq!(m.entries().len(), 2);
    }

    #[test]
    fn t_diagonal() {
        let m = fock_matrix(&g(WSymbol::T), FockSpace::boson(3), None).unwrap();
        for n in 0..3 {
            assert_eq!(m.get(n, n), QScalar::q_pow(n as i32));
        }
        assert_eq!(m.entries().len(), 3);
    }

    #[test]
    fn oscillator_relation_on_safe_rows() {
        let a = g(WSymbol::Annihilate);
        let ap = g(WSymbol::Create);
        let space = FockSpace::boson(5);
        let ma = fock_matrix(&a, space, None).unwrap();
        let map = fock_matrix(&ap, space, None).unwrap();
        let mt = fock_matrix(&g(WSymbol::T), space, None).unwrap();
        let diff = ma.mul(&map).sub(&map.mul(&ma).scale(&QScalar::q_pow(-1))).sub(&mt);
        assert_eq!(diff.nonzero_on(3), 0);
        assert!(!diff.is_zero());
        let symbolic = a
            .mul(&ap)
            .sub(&ap.mul(&a).scale(&QScalar::q_pow(-1)))
            .sub(&g(WSymbol::T));
        assert!(fock_matrix(&symbolic, space, None).unwrap().is_zero());
    }

    #[test]
    fn string_sign_on_mode_two() {
        let space = FockSpace::new(1, [true, true]);
        let m = fock_matrix(&g(WSymbol::B2), space, None).unwrap();
        assert_eq!(
            m.get(space.index(0, [true, false]), space.index(0, [true, true])),
            QScalar::from_int(-1)
        );
        assert_eq!(
            m.get(space.index(0, [false, false]), space.index(0, [false, true])),
            QScalar::one()
        );
    }

    #[test]
    fn errors() {
        assert_eq!(
            fock_matrix(&g(WSymbol::E23), FockSpace::boson(3), None),
            Err(FockError::AbstractGl11)
        );
        assert_eq!(
            fock_matrix(&g(WSymbol::B1), FockSpace::boson(3), None),
            Err(FockError::ModeNotActive(1))
        );
        let x = WElement::scalar(q_integer(2).div(&q_integer(2).sub(&QScalar::from_int(2))).unwrap());
        let a = Assignment::q_only(num::BigRational::from_integer(1.into()));
        assert!(matches!(
            fock_matrix(&x, FockSpace::boson(2), Some(&a)),
            Err(FockError::Pole(_))
        ));
    }

    #[test]
    fn basis_order() {
        let space = FockSpace::new(3, [true, true]);
        assert_eq!(space.dim(), 12);
        assert_eq!(space.index(1, [false, true]), 5);
        let s = space.state(5);
        assert_eq!(s.to_string(), "|1,0,1>");
        assert_eq!(FockSpace::new(3, [true, false]).state(3).to_string(), "|1,1>");
    }

    #[test]
    fn trivial_small() {
        let r = check_relations_on_fock(SubalgebraMode::Trivial, 5, None);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn consistency_square() {
        let r = check_consistency_square(4);
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn rendering_is_multiplicative_on_safe_states() {
        let map = RealizationMap::new(SubalgebraMode::Fermionic).unwrap();
        let cutoff = 5;
        let space = FockSpace::for_mode(SubalgebraMode::Fermionic, cutoff);
        let gens = Generator::all();
        for &x in &gens {
            for &y in &gens {
                let (ix, iy) = (map.image(x), map.image(y));
                let lhs = fock_matrix(&ix.mul(&iy), space, None).unwrap();
                let rhs = fock_matrix(&ix, space, None)
                    .unwrap()
                    .mul(&fock_matrix(&iy, space, None).unwrap());
                let safe = cutoff - 1 - iy.max_create_degree() as usize;
                assert_eq!(lhs.sub(&rhs).nonzero_on(safe), 0, "{x} {y}");
            }
        }
    }
}
