//! Evaluation of parsed expressions.

use num::BigRational;
use thiserror::Error;

use super::parser::{parse, Expr, ParseError};
use crate::scalarfield::{QScalar, Var};
use crate::uqgl21::{Generator, UElement};
use crate::walgebra::{ElementParity, Parity, WElement, WMonomial, WSymbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("at column {column}: unknown symbol '{name}'")]
    UnknownSymbol { name: String, column: usize },
    #[error(
        "at column {column}: '{name}' is an abstract generator; use `verify lemma1` or `verify induced` for straightening"
    )]
    AbstractSymbol { name: String, column: usize },
    #[error("at column {column}: '{name}' is not an abstract generator")]
    NotAbstract { name: String, column: usize },
    #[error("at column {column}: divisor must be a nonzero scalar")]
    BadDivisor { column: usize },
    #[error("negative power of a non-invertible element")]
    NotInvertible,
    #[error("bracket operand has mixed parity")]
    MixedParity,
}

fn scalar_name(name: &str) -> Option<QScalar> {
    let var = match name {
        "q" => Var::Q,
        "p1" => Var::P1,
        "p2" => Var::P2,
        "p3" => Var::P3,
        _ => return None,
    };
    Some(QScalar::var(var, 1))
}

fn int(n: &num::BigInt) -> QScalar {
    QScalar::from_rational(BigRational::from_integer(n.clone()))
}

/// The sole coefficient of a scalar element.
fn w_scalar(x: &WElement) -> Option<QScalar> {
    match x.len() {
        0 => Some(QScalar::zero()),
        1 => {
            let (m, c) = x.terms().next().expect("one term");
            m.is_identity().then(|| c.clone())
        }
        _ => None,
    }
}

/// Inverse of `c · t^k k2^a k3^b`.
fn w_invert(x: &WElement) -> Option<WElement> {
    if x.len() != 1 {
        return None;
    }
    let (m, c) = x.terms().next().expect("one term");
    let unit = WMonomial {
        t: m.t,
        k2: m.k2,
        k3: m.k3,
        ..WMonomial::identity()
    };
    if *m != unit {
        return None;
    }
    let inv = WMonomial {
        t: -m.t,
        k2: -m.k2,
        k3: -m.k3,
        ..WMonomial::identity()
    };
    Some(WElement::term(c.invert().ok()?, inv))
}

fn w_bracket(a: &WElement, b: &WElement) -> Result<WElement, EvalError> {
    a.supercommutator(b).map_err(|_| EvalError::MixedParity)
}

pub fn eval_w(e: &Expr) -> Result<WElement, EvalError> {
    Ok(match e {
        Expr::Int(n) => WElement::scalar(int(n)),
        Expr::Name { name, column } => {
            if let Some(c) = scalar_name(name) {
                WElement::scalar(c)
            } else if let Ok(s) = WSymbol::from_name(name) {
                WElement::generator(s)
            } else if Generator::from_name(name).is_some() {
                return Err(EvalError::AbstractSymbol {
                    name: name.clone(),
                    column: *column,
                });
            } else {
                return Err(EvalError::UnknownSymbol {
                    name: name.clone(),
                    column: *column,
                });
            }
        }
        Expr::Neg(x) => eval_w(x)?.neg(),
        Expr::Add(a, b) => eval_w(a)?.add(&eval_w(b)?),
        Expr::Sub(a, b) => eval_w(a)?.sub(&eval_w(b)?),
        Expr::Mul(a, b) => eval_w(a)?.mul(&eval_w(b)?),
        Expr::Div { num, den, column } => {
            let d = eval_w(den)?;
            let inv = w_scalar(&d)
                .and_then(|c| c.invert().ok())
                .ok_or(EvalError::BadDivisor { column: *column })?;
            eval_w(num)?.scale(&inv)
        }
        Expr::Pow(x, k) => {
            let base = eval_w(x)?;
            if *k >= 0 {
                base.pow(*k as u32)
            } else {
                w_invert(&base)
                    .ok_or(EvalError::NotInvertible)?
                    .pow(k.unsigned_abs() as u32)
            }
        }
        Expr::Comm(a, b) => w_bracket(&eval_w(a)?, &eval_w(b)?)?,
        Expr::Acomm(a, b) => eval_w(a)?.anticommutator(&eval_w(b)?),
    })
}

/// Parse and evaluate an expression over 𝒲.
pub fn parse_w(input: &str) -> Result<WElement, EvalError> {
    eval_w(&parse(input)?)
}

fn u_scalar(x: &UElement) -> Option<QScalar> {
    let terms: Vec<_> = x.terms().collect();
    match terms.as_slice() {
        [] => Some(QScalar::zero()),
        [(w, c)] if w.is_empty() => Some((*c).clone()),
        _ => None,
    }
}

fn u_parity(x: &UElement) -> Result<Parity, EvalError> {
    let mut parities = x.terms().map(|(w, _)| w.parity());
    let first = parities.next().unwrap_or(Parity::Even);
    if parities.all(|p| p == first) {
        Ok(first)
    } else {
        Err(EvalError::MixedParity)
    }
}

/// Evaluation in the free algebra on the abstract generators; squares of
/// odd generators written as powers vanish.
pub fn eval_u(e: &Expr) -> Result<UElement, EvalError> {
    Ok(match e {
        Expr::Int(n) => UElement::scalar(int(n)),
        Expr::Name { name, column } => {
            if let Some(c) = scalar_name(name) {
                UElement::scalar(c)
            } else if let Some(g) = Generator::from_name(name) {
                UElement::generator(g)
            } else {
                return Err(EvalError::NotAbstract {
                    name: name.clone(),
                    column: *column,
                });
            }
        }
        Expr::Neg(x) => eval_u(x)?.scale(&QScalar::from_int(-1)),
        Expr::Add(a, b) => eval_u(a)?.add(&eval_u(b)?),
        Expr::Sub(a, b) => eval_u(a)?.sub(&eval_u(b)?),
        Expr::Mul(a, b) => eval_u(a)?.mul(&eval_u(b)?),
        Expr::Div { num, den, column } => {
            let inv = u_scalar(&eval_u(den)?)
                .and_then(|c| c.invert().ok())
                .ok_or(EvalError::BadDivisor { column: *column })?;
            eval_u(num)?.scale(&inv)
        }
        Expr::Pow(x, k) => {
            let base = eval_u(x)?;
            let single = base.terms().next().map(|(w, c)| (w.clone(), c.clone()));
            let generator = match (base.terms().count(), single) {
                (1, Some((w, c))) if c.is_one() && w.letters().len() == 1 => Some(w.letters()[0]),
                _ => None,
            };
            match generator {
                Some(Generator::K(i, p)) => UElement::generator(Generator::K(i, p * *k as i32)),
                Some(g) if g.parity() == Parity::Odd && *k >= 2 => UElement::zero(),
                _ if *k < 0 => match u_scalar(&base).and_then(|c| c.pow(*k as i32).ok()) {
                    Some(c) => UElement::scalar(c),
                    None => return Err(EvalError::NotInvertible),
                },
                _ => (0..*k).fold(UElement::one(), |acc, _| acc.mul(&base)),
            }
        }
        Expr::Comm(a, b) => {
            let (x, y) = (eval_u(a)?, eval_u(b)?);
            let odd = u_parity(&x)?.is_odd() && u_parity(&y)?.is_odd();
            let yx = y.mul(&x);
            if odd {
                x.mul(&y).add(&yx)
            } else {
                x.mul(&y).sub(&yx)
            }
        }
        Expr::Acomm(a, b) => {
            let (x, y) = (eval_u(a)?, eval_u(b)?);
            x.mul(&y).add(&y.mul(&x))
        }
    })
}

/// Parse and evaluate an expression in the abstract generators.
pub fn parse_u(input: &str) -> Result<UElement, EvalError> {
    eval_u(&parse(input)?)
}

/// Parity label for display.
pub fn parity_label(x: &WElement) -> &'static str {
    match x.parity() {
        ElementParity::Homogeneous(Parity::Even) => "even",
        ElementParity::Homogeneous(Parity::Odd) => "odd",
        ElementParity::Mixed => "mixed",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalarfield::q_delta;

    #[test]
    fn boson_product() {
        let x = parse_w("a * a+").unwrap();
        let t = WElement::generator(WSymbol::T);
        let tinv = WElement::generator(WSymbol::TInv);
        let expected = t
            .scale(&QScalar::q())
            .sub(&tinv.scale(&QScalar::q_pow(-1)))
            .scale(&q_delta().invert().unwrap());
        assert_eq!(x, expected);
    }

    #[test]
    fn fermion_rules() {
        assert_eq!(parse_w("b * b+").unwrap().to_string(), "1 - b+*b");
        assert_eq!(parse_w("e23 * b+").unwrap().to_string(), "-b+*e23");
        assert!(parse_w("b+^2").unwrap().is_zero());
    }

    #[test]
    fn inverses_and_division() {
        assert_eq!(parse_w("t^-1").unwrap(), WElement::generator(WSymbol::TInv));
        assert_eq!(parse_w("k2^-2 * k2^2").unwrap(), WElement::one());
        assert_eq!(
            parse_w("3/2*q").unwrap(),
            WElement::scalar(QScalar::ratio(3, 2).mul(&QScalar::q()))
        );
        assert!(matches!(parse_w("a / a"), Err(EvalError::BadDivisor { column: 3 })));
        assert!(matches!(parse_w("1 / (q - q)"), Err(EvalError::BadDivisor { .. })));
        assert_eq!(parse_w("a^-1"), Err(EvalError::NotInvertible));
    }

    #[test]
    fn abstract_rejected_with_hint() {
        let err = parse_w("E12 * a").unwrap_err();
        assert!(matches!(err, EvalError::AbstractSymbol { column: 1, .. }));
        assert!(err.to_string().contains("verify lemma1"));
        assert!(matches!(parse_w("zz"), Err(EvalError::UnknownSymbol { .. })));
    }

    #[test]
    fn brackets() {
        assert_eq!(parse_w("comm[b+, b]").unwrap(), WElement::one());
        assert!(parse_w("comm[a+, k2]").unwrap().is_zero());
        assert_eq!(parse_w("comm[b+ + a, b]"), Err(EvalError::MixedParity));
    }

    #[test]
    fn abstract_evaluation() {
        let x = parse_u("acomm{E23, E32}").unwrap();
        assert_eq!(x.terms().count(), 2);
        assert!(parse_u("E23^2").unwrap().is_zero());
        assert_eq!(parse_u("K1^-1").unwrap(), UElement::generator(Generator::K(1, -1)));
        let c = parse_u("comm[E12, E21]").unwrap();
        let expected = UElement::letters(&[Generator::E12, Generator::E21])
            .sub(&UElement::letters(&[Generator::E21, Generator::E12]));
        assert_eq!(c, expected);
        assert!(matches!(parse_u("a+"), Err(EvalError::NotAbstract { .. })));
    }
}
