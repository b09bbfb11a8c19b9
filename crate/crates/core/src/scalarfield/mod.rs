//! Exact arithmetic in the rational function field ℚ(q, p1, p2, p3).
//!
//! The parameters `p1, p2, p3` stand for `q^λ1, q^λ2, q^λ3`, so every
//! expression with an integer shift of a λ exponent is a Laurent monomial.
//!
//! A [`QScalar`] is kept in canonical form: `num / den` where
//!
//! - `den` is an ordinary polynomial divisible by no variable, with leading
//!   coefficient 1 under lex order on `(q, p1, p2, p3)`;
//! - `num` is a Laurent polynomial with no common factor with `den`.
//!
//! Laurent monomials are the units of the ring, so this form is unique and
//! two scalars are equal iff their fields are equal.

mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

pub use poly::{gcd, Exponents, LaurentPoly, NVARS, VAR_NAMES, ZERO_EXP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at the given assignment")]
    Pole,
}

/// Index of each indeterminate in the exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q = 0,
    P1 = 1,
    P2 = 2,
    P3 = 3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::P1, Var::P2, Var::P3];

    pub fn name(self) -> &'static str {
        VAR_NAMES[self as usize]
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl QScalar {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    /// A Laurent polynomial is already canonical with denominator 1.
    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// `var^power`.
    pub fn var(var: Var, power: i32) -> Self {
        Self::from_poly(LaurentPoly::var_power(var as usize, power))
    }

    pub fn q() -> Self {
        Self::var(Var::Q, 1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::var(Var::Q, k)
    }

    /// `c · x^exps`.
    pub fn monomial(c: BigRational, exps: Exponents) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, exps))
    }

    /// Build and canonicalize `num / den`.
    pub fn fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        Self::canonical(num, den, true)
    }

    /// Canonical form of `num / den` for a pair already known to be coprime.
    fn from_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        Self::canonical(num, den, false)
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly, reduce: bool) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.as_constant() {
            return Self::from_poly(num.scale(&c.recip()));
        }
        // Move Laurent monomial factors of both sides into the numerator.
        let (n, mn) = split_monomial(&num);
        let (d, md) = split_monomial(&den);
        let mut unit = mn;
        for i in 0..NVARS {
            unit[i] -= md[i];
        }
        let (n, d) = if reduce && !d.is_constant() {
            let g = gcd(&n, &d);
            if g.is_one() {
                (n, d)
            } else {
                (
                    n.div_exact(&g).expect("gcd divides numerator"),
                    d.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        } else {
            (n, d)
        };
        let lead = d.leading().map(|(_, c)| c.clone()).expect("nonzero");
        let inv = lead.recip();
        Self {
            num: n.scale(&inv).shift(&unit),
            den: d.scale(&inv),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Indeterminates occurring in numerator or denominator.
    pub fn variables(&self) -> [bool; NVARS] {
        let a = self.num.variables();
        let b = self.den.variables();
        let mut out = [false; NVARS];
        for i in 0..NVARS {
            out[i] = a[i] || b[i];
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&other.num));
            }
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::from_coprime(num, self.den.mul(&other.den));
        }
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&b).add(&other.num.mul(&a));
        let (num, g) = cancel(&num, &g);
        Self::from_coprime(num, a.mul(&b).mul(&g))
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Self::from_coprime(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn invert(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.invert()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Replace `var` by a nonzero Laurent monomial expression `value`.
    pub fn substitute(&self, var: Var, value: &LaurentPoly) -> Result<Self, ScalarError> {
        let n = self.num.substitute(var as usize, value).ok_or(ScalarError::Pole)?;
        let d = self.den.substitute(var as usize, value).ok_or(ScalarError::Pole)?;
        Self::fraction(n, d).map_err(|_| ScalarError::Pole)
    }

    /// Exact value at `assignment`, computed from the canonical form.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<BigRational, ScalarError> {
        evaluate_fraction(&self.num, &self.den, assignment)
    }

    /// Approximate value as `f64`, for display only.
    pub fn to_f64(&self, assignment: &Assignment) -> Result<f64, ScalarError> {
        use num::ToPrimitive;
        let v = self.evaluate(assignment)?;
        Ok(v.to_f64().unwrap_or(f64::NAN))
    }
}

/// Evaluate an unreduced fraction `num / den` term by term.
///
/// This is the raw-fraction counterpart of [`QScalar::evaluate`]: it does
/// not cancel common factors first, so it reports a pole wherever `den`
/// vanishes even if the reduced form is regular there.
pub fn evaluate_fraction(
    num: &LaurentPoly,
    den: &LaurentPoly,
    assignment: &Assignment,
) -> Result<BigRational, ScalarError> {
    let values = assignment.values();
    let d = den.evaluate(&values).ok_or(ScalarError::Pole)?;
    if d.is_zero() {
        return Err(ScalarError::Pole);
    }
    let n = num.evaluate(&values).ok_or(ScalarError::Pole)?;
    Ok(n / d)
}

/// Rational values for `q, p1, p2, p3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub q: BigRational,
    pub p1: BigRational,
    pub p2: BigRational,
    pub p3: BigRational,
}

impl Assignment {
    pub fn new(q: BigRational, p1: BigRational, p2: BigRational, p3: BigRational) -> Self {
        Self { q, p1, p2, p3 }
    }

    /// Assign `q` only; the parameters are set to 1.
    pub fn q_only(q: BigRational) -> Self {
        Self::new(q, BigRational::one(), BigRational::one(), BigRational::one())
    }

    fn values(&self) -> [BigRational; NVARS] {
        [self.q.clone(), self.p1.clone(), self.p2.clone(), self.p3.clone()]
    }
}

impl Default for Assignment {
    /// q = 3/2, p1 = 2, p2 = 3, p3 = 5.
    fn default() -> Self {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        Self::new(r(3, 2), r(2, 1), r(3, 1), r(5, 1))
    }
}

/// `p = x^e · r` with `r` an ordinary polynomial free of monomial factors.
fn split_monomial(p: &LaurentPoly) -> (LaurentPoly, Exponents) {
    let e = p.min_exponents();
    let mut neg = e;
    neg.iter_mut().for_each(|x| *x = -*x);
    (p.shift(&neg), e)
}

/// Divide a Laurent numerator and a polynomial denominator by their gcd.
fn cancel(num: &LaurentPoly, den: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if num.is_zero() || den.is_constant() {
        return (num.clone(), den.clone());
    }
    let (p, e) = split_monomial(num);
    let g = gcd(&p, den);
    if g.is_one() {
        return (num.clone(), den.clone());
    }
    (
        p.div_exact(&g).expect("gcd divides").shift(&e),
        den.div_exact(&g).expect("gcd divides"),
    )
}

/// The q-integer `[n] = (q^n - q^-n) / (q - q^-1)` as a Laurent polynomial:
/// `q^(n-1) + q^(n-3) + ... + q^(1-n)` for `n > 0`, and `[-n] = -[n]`.
pub fn q_integer(n: i32) -> QScalar {
    let m = n.unsigned_abs() as i32;
    let mut p = LaurentPoly::zero();
    let mut k = m - 1;
    while k > -m {
        p.add_term(exp_q(k), BigRational::one());
        k -= 2;
    }
    let out = QScalar::from_poly(p);
    if n < 0 {
        out.neg()
    } else {
        out
    }
}

/// `q - q^-1`, the ubiquitous denominator.
pub fn q_delta() -> QScalar {
    QScalar::q().sub(&QScalar::q_pow(-1))
}

fn exp_q(k: i32) -> Exponents {
    let mut e = ZERO_EXP;
    e[0] = k;
    e
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for QScalar {
    /// Canonical text: `0`, a bare monomial like `-3*q^-2`, a parenthesised
    /// polynomial `(q^2 + 1 + q^-2)`, or `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.len() <= 1 {
                write!(f, "{}", self.num)
            } else {
                write!(f, "({})", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QScalar({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&QScalar> for &QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                QScalar::$inner(self, rhs)
            }
        }
        impl $tr<QScalar> for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: QScalar) -> QScalar {
                QScalar::$inner(&self, &rhs)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $method(self, rhs: &QScalar) -> QScalar {
                QScalar::$inner(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Div<&QScalar> for &QScalar {
    type Output = QScalar;
    /// Panics on division by zero; use [`QScalar::div`] to handle it.
    fn div(self, rhs: &QScalar) -> QScalar {
        QScalar::div(self, rhs).expect("division by zero")
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar::neg(&self)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar::neg(self)
    }
}

impl Zero for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }
    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
}

impl One for QScalar {
    fn one() -> Self {
        QScalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: i32) -> QScalar {
        QScalar::q_pow(k)
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let x = q(1).add(&q(-1));
        assert_eq!(&x + &QScalar::zero(), x);
        assert_eq!(&x + &q(-1).neg(), q(1));
    }

    #[test]
    fn like_fractions_add() {
        let inv = q_delta().invert().unwrap();
        let two = QScalar::from_int(2).mul(&inv);
        assert_eq!(&inv + &inv, two);
    }

    #[test]
    fn multiplication_examples() {
        let x = &q(1) + &q(-2);
        assert_eq!(&x * &QScalar::one(), x);
        let d = q_delta();
        assert_eq!(&d * &d.invert().unwrap(), QScalar::one());
        // Independent expansion: (q + q^-1)(q - q^-1) has four cross terms.
        let lhs = &(&q(1) + &q(-1)) * &d;
        let cross = q(2) - QScalar::one() + QScalar::one() - q(-2);
        assert_eq!(lhs, cross);
        assert_eq!(lhs, q(2) - q(-2));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(QScalar::one().invert().unwrap(), QScalar::one());
        assert_eq!(q(1).invert().unwrap(), q(-1));
        assert_eq!(QScalar::zero().invert(), Err(ScalarError::DivisionByZero));
        let x = (q(2) - q(-2)).div(&q_delta()).unwrap();
        let inv = x.invert().unwrap();
        assert_eq!(&x * &inv, QScalar::one());
        assert_eq!(inv, (q(1) + q(-1)).invert().unwrap());
    }

    #[test]
    fn q_integer_small_values() {
        assert_eq!(q_integer(0), QScalar::zero());
        assert_eq!(q_integer(1), QScalar::one());
        assert_eq!(q_integer(3), q(2) + QScalar::one() + q(-2));
        assert_eq!(q_integer(3).to_string(), "(q^2 + 1 + q^-2)");
        assert_eq!(q_integer(-2), (q(1) + q(-1)).neg());
    }

    #[test]
    fn canonical_denominator_is_monic_polynomial() {
        let x = QScalar::one().div(&q_delta()).unwrap();
        assert_eq!(x.numerator().to_string(), "q");
        assert_eq!(x.denominator().to_string(), "q^2 - 1");
        let y = QScalar::from_int(-3)
            .div(&(QScalar::from_int(2) * q(1) - QScalar::from_int(4)))
            .unwrap();
        assert_eq!(y.denominator().to_string(), "q - 2");
        assert_eq!(y.numerator().to_string(), "-3/2");
    }

    #[test]
    fn evaluation() {
        let a = Assignment::q_only(BigRational::from_integer(2.into()));
        assert_eq!(q_integer(2).evaluate(&a).unwrap(), BigRational::new(5.into(), 2.into()));
        assert_eq!(
            QScalar::one().evaluate(&Assignment::default()).unwrap(),
            BigRational::one()
        );
        let pole = QScalar::one().div(&q_delta()).unwrap();
        let at_one = Assignment::q_only(BigRational::one());
        assert_eq!(pole.evaluate(&at_one), Err(ScalarError::Pole));
        let at_zero = Assignment::q_only(BigRational::zero());
        assert_eq!(q(-1).evaluate(&at_zero), Err(ScalarError::Pole));
    }

    #[test]
    fn raw_fraction_has_pole_where_canonical_form_does_not() {
        // [4] = (q^4 - q^-4) / (q - q^-1)
        let num = LaurentPoly::var_power(0, 4).sub(&LaurentPoly::var_power(0, -4));
        let den = LaurentPoly::var_power(0, 1).sub(&LaurentPoly::var_power(0, -1));
        let at_one = Assignment::q_only(BigRational::one());
        assert_eq!(evaluate_fraction(&num, &den, &at_one), Err(ScalarError::Pole));
        let canonical = QScalar::fraction(num, den).unwrap();
        assert_eq!(canonical, q_integer(4));
        assert_eq!(
            canonical.evaluate(&at_one).unwrap(),
            BigRational::from_integer(4.into())
        );
    }

    #[test]
    fn substitute_parameter_by_inverse() {
        let p2 = QScalar::var(Var::P2, 1);
        let p3 = QScalar::var(Var::P3, 1);
        let x = (&p2 * &p3 - QScalar::one()).div(&q_delta()).unwrap();
        let y = x.substitute(Var::P3, &LaurentPoly::var_power(2, -1)).unwrap();
        assert!(y.is_zero());
    }

    #[test]
    fn normalizing_twice_is_idempotent() {
        let x = (q(3) - q(-1)).div(&(q(2) - QScalar::one())).unwrap();
        let again = QScalar::fraction(x.numerator().clone(), x.denominator().clone()).unwrap();
        assert_eq!(x, again);
    }
}
