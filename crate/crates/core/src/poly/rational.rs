//! Rational functions `num / den` with GCD-reduced, monic denominators.

use std::fmt;

use num_traits::One;

use super::gcd::gcd;
use super::multipoly::{unify, MultiPoly};
use super::GaussianRational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    /// Builds and normalizes `num / den`.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (num, den) = unify(&num, &den);
        if num.is_zero() {
            return Ok(Self::from_poly(num));
        }
        let g = gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        let lc = den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(Self { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.vars());
        Self { num: p, den }
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The polynomial value, if the denominator is constant.
    pub fn to_poly(&self) -> Option<MultiPoly> {
        self.den
            .constant_value()
            .map(|c| self.num.scale(&c.inv().expect("nonzero")))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    /// Partial derivative by the quotient rule.
    pub fn derivative(&self, v: &str) -> Result<Self> {
        let num =
            &(&self.num.derivative(v)? * &self.den) - &(&self.num * &self.den.derivative(v)?);
        Self::new(num, self.den.pow(2))
    }

    /// Composition with rational values for some variables.
    pub fn substitute(&self, bindings: &[(&str, RationalFunction)]) -> Result<Self> {
        let n = substitute(&self.num, bindings)?;
        let d = substitute(&self.den, bindings)?;
        n.div(&d)
    }
}

/// Exact composition of a polynomial with rational bindings.
///
/// Each bound variable `v := a/b` is expanded term by term over the common
/// denominator `b^deg_v(f)`, then the quotient is reduced.
pub fn substitute(
    f: &MultiPoly,
    bindings: &[(&str, RationalFunction)],
) -> Result<RationalFunction> {
    let mut acc = RationalFunction::from_poly(f.clone());
    for (name, value) in bindings {
        if f.var_index(name).is_none() {
            return Err(Error::UnknownVariable(name.to_string()));
        }
        acc = substitute_one(&acc, name, value)?;
    }
    Ok(acc)
}

fn substitute_one(
    r: &RationalFunction,
    name: &str,
    value: &RationalFunction,
) -> Result<RationalFunction> {
    let num = homogenized_sub(&r.num, name, value)?;
    let den = homogenized_sub(&r.den, name, value)?;
    // num = N(a/b) * b^dn, den = D(a/b) * b^dd
    let dn = r.num.degree_in(name);
    let dd = r.den.degree_in(name);
    let b = value.denom();
    let (num, den) = if dn >= dd {
        (num, &den * &b.pow(dn - dd))
    } else {
        (&num * &b.pow(dd - dn), den)
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    RationalFunction::new(num, den)
}

/// `f(a/b) * b^deg(f)` as a polynomial.
fn homogenized_sub(f: &MultiPoly, name: &str, value: &RationalFunction) -> Result<MultiPoly> {
    let f = f.with_var(name);
    let coeffs = f.coeffs_in(name)?;
    let d = coeffs.len() - 1;
    let (a, b) = (value.numer(), value.denom());
    let mut out = MultiPoly::zero(f.vars());
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out = &out + &(&(c * &a.pow(k as u32)) * &b.pow((d - k) as u32));
    }
    Ok(out)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() > 1 {
            write!(f, "({})/({})", self.num, self.den)
        } else {
            write!(f, "{}/({})", self.num, self.den)
        }
    }
}

impl MultiPoly {
    pub(crate) fn is_one_poly(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}
