//! Sparse multivariate polynomials over `Q(i)`.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so iteration order is deterministic and the leading
//! term is the last entry. Every polynomial carries its variable list;
//! binary operations between polynomials over different lists first merge
//! the lists (left operand's order, then the right operand's new names).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::GaussianRational;
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Vars = Arc<[String]>;

pub fn vars_of(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect()
}

#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        Self {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: GaussianRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, GaussianRational::one())
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let idx = index_of(vars, name)?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(e), GaussianRational::one());
        Ok(p)
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, summing
    /// repeated exponents.
    pub fn from_terms(
        vars: &Vars,
        terms: impl IntoIterator<Item = (GaussianRational, Vec<u32>)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), vars.len(), "exponent arity mismatch");
            p.add_term(Monomial(e), &c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Value of a constant polynomial.
    pub fn constant_value(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            Some(GaussianRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Leading term under graded lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> GaussianRational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Scales so the graded-lex leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) if !c.is_one() => {
                let inv = c.inv().expect("nonzero");
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_at(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    /// Degree in the named variable; 0 when the variable is absent.
    pub fn degree_in(&self, name: &str) -> u32 {
        self.var_index(name).map_or(0, |i| self.degree_at(i))
    }

    pub fn uses(&self, name: &str) -> bool {
        self.degree_in(name) > 0
    }

    /// Names of variables that actually occur.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.degree_at(i) > 0)
            .map(|i| self.vars[i].clone())
            .collect()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Re-expresses over `vars`, which must contain every used variable.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self> {
        if Arc::ptr_eq(&self.vars, vars) || self.vars[..] == vars[..] {
            return Ok(Self {
                vars: vars.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.iter().enumerate() {
            match vars.iter().position(|v| v == name) {
                Some(j) => map.push(Some(j)),
                None if self.degree_at(i) == 0 => map.push(None),
                None => return Err(Error::UnknownVariable(name.clone())),
            }
        }
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = k;
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Like [`with_vars`](Self::with_vars) but from plain names.
    pub fn in_vars(&self, names: &[&str]) -> Result<Self> {
        self.with_vars(&vars_of(names))
    }

    /// Extends the variable list with `name` if missing.
    pub fn with_var(&self, name: &str) -> Self {
        if self.var_index(name).is_some() {
            return self.clone();
        }
        let mut v: Vec<String> = self.vars.to_vec();
        v.push(name.to_string());
        self.with_vars(&v.into()).expect("superset")
    }

    pub fn derivative(&self, name: &str) -> Result<Self> {
        let idx = index_of(&self.vars, name)?;
        Ok(self.derivative_at(idx))
    }

    pub(crate) fn derivative_at(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let k = m.0[idx];
            if k == 0 {
                continue;
            }
            let mut e = m.clone();
            e.0[idx] -= 1;
            out.add_term(e, &(c * &GaussianRational::from(k as i64)));
        }
        out
    }

    /// Coefficients as a polynomial in the variable at `idx`:
    /// `result[k]` is the coefficient of `v^k`, over the same variable list.
    pub fn coeffs_at(&self, idx: usize) -> Vec<Self> {
        let deg = self.degree_at(idx) as usize;
        let mut out = vec![Self::zero(&self.vars); deg + 1];
        if self.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            let k = m.0[idx] as usize;
            let mut e = m.clone();
            e.0[idx] = 0;
            out[k].terms.insert(e, c.clone());
        }
        out
    }

    pub fn coeffs_in(&self, name: &str) -> Result<Vec<Self>> {
        Ok(self.coeffs_at(index_of(&self.vars, name)?))
    }

    /// Composition: replaces `name` by `value`.
    pub fn substitute(&self, name: &str, value: &MultiPoly) -> Result<Self> {
        let (a, b) = unify(self, value);
        let idx = match a.var_index(name) {
            Some(i) => i,
            None => return Err(Error::UnknownVariable(name.to_string())),
        };
        let coeffs = a.coeffs_at(idx);
        // Horner
        let mut acc = Self::zero(&a.vars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * &b) + c;
        }
        Ok(acc)
    }

    /// Substitutes constants for the named variables.
    pub fn evaluate(&self, values: &[(&str, GaussianRational)]) -> Result<Self> {
        let mut idx = Vec::new();
        for (name, v) in values {
            idx.push((index_of(&self.vars, name)?, v));
        }
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let mut coeff = c.clone();
            for &(i, v) in &idx {
                let k = e.0[i];
                if k > 0 {
                    coeff = &coeff * &v.pow(k);
                    e.0[i] = 0;
                }
            }
            out.add_term(e, &coeff);
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`, or `None` when `divisor` does not
    /// divide `self`.
    ///
    /// Multivariate division by a single divisor under a monomial order
    /// leaves remainder zero exactly on multiples, and any multiple has a
    /// leading monomial divisible by the divisor's, so the first
    /// non-divisible leading monomial proves non-divisibility.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (mut rem, g) = unify(self, divisor);
        let (lm, lc) = {
            let (m, c) = g.leading_term().expect("nonzero");
            (m.clone(), c.inv().expect("nonzero"))
        };
        let mut quot = Self::zero(&rem.vars);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let tm = m.div(&lm);
            let tc = c * &lc;
            for (gm, gc) in &g.terms {
                rem.add_term(gm.mul(&tm), &-(gc * &tc));
            }
            quot.terms.insert(tm, tc);
        }
        Some(quot)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one(self.vars.len());
        };
        let mut e = first.0.clone();
        for m in it {
            for (a, b) in e.iter_mut().zip(&m.0) {
                *a = (*a).min(*b);
            }
        }
        Monomial(e)
    }

    /// Monomial `v_idx^k` over this alphabet.
    pub fn monomial(vars: &Vars, exps: Vec<u32>) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(exps), GaussianRational::one());
        p
    }

    /// Complex conjugation of coefficients only.
    pub fn conj_coeffs(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> num_bigint::BigInt {
        self.terms
            .values()
            .fold(num_bigint::BigInt::one(), |acc, c| {
                num_integer::Integer::lcm(&acc, &c.denominator_lcm())
            })
    }
}

fn index_of(vars: &Vars, name: &str) -> Result<usize> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

/// Merges the variable lists of two polynomials.
pub fn unify(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if Arc::ptr_eq(&a.vars, &b.vars) || a.vars[..] == b.vars[..] {
        return (a.clone(), b.with_vars(&a.vars).expect("same"));
    }
    let mut merged: Vec<String> = a.vars.to_vec();
    for v in b.vars.iter() {
        if !merged.contains(v) {
            merged.push(v.clone());
        }
    }
    let merged: Vars = merged.into();
    (
        a.with_vars(&merged).expect("superset"),
        b.with_vars(&merged).expect("superset"),
    )
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = unify(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = unify(self, rhs);
        for (m, c) in b.terms {
            a.add_term(m, &c);
        }
        a
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = unify(self, rhs);
        for (m, c) in b.terms {
            a.add_term(m, &-c);
        }
        a
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = unify(self, rhs);
        let mut out = MultiPoly::zero(&a.vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

fn fmt_monomial(vars: &Vars, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, &k) in vars.iter().zip(&m.0) {
        match k {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

fn fmt_term(vars: &Vars, m: &Monomial, c: &GaussianRational) -> String {
    if m.degree() == 0 {
        return c.to_string();
    }
    let mono = fmt_monomial(vars, m);
    if c.is_one() {
        mono
    } else if (-c).is_one() {
        format!("-{mono}")
    } else if c.is_real() || c.re().is_zero() {
        format!("{c}*{mono}")
    } else {
        format!("({c})*{mono}")
    }
}

/// Canonical form: terms in descending graded-lex order, e.g.
/// `x*p^2 - y*p + 1`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let t = fmt_term(&self.vars, m, c);
            if k == 0 {
                write!(f, "{t}")?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}
