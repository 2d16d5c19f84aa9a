//! Exact residues of univariate rational functions.

use num_traits::Zero;

use super::multipoly::MultiPoly;
use super::rational::RationalFunction;
use super::GaussianRational;
use crate::error::{Error, Result};

/// Dense coefficients (ascending) of a univariate polynomial in `v`.
pub(crate) fn dense_coeffs(p: &MultiPoly, v: &str) -> Result<Vec<GaussianRational>> {
    let p = p.with_var(v);
    p.coeffs_in(v)?
        .into_iter()
        .map(|c| {
            c.constant_value().ok_or_else(|| {
                Error::Precondition(format!(
                    "expected a univariate polynomial in `{v}`, got {p}"
                ))
            })
        })
        .collect()
}

/// Taylor coefficients of `p(v + a)` (ascending), by repeated synthetic
/// division.
pub(crate) fn taylor_shift(
    coeffs: &[GaussianRational],
    a: &GaussianRational,
) -> Vec<GaussianRational> {
    let mut c = coeffs.to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * a;
            c[j] += &t;
        }
    }
    c
}

/// Residue of `r` (univariate in `v`) at `point`: the coefficient of
/// `(v - point)^(-1)` in its Laurent expansion.
///
/// Computed by shifting to `s = v - point`, splitting `den(s) = s^m d1(s)`
/// with `d1(0) != 0`, and reading the `s^(m-1)` coefficient of the power
/// series `num(s)/d1(s)`.
pub fn residue_at(
    r: &RationalFunction,
    v: &str,
    point: &GaussianRational,
) -> Result<GaussianRational> {
    if r.denom().is_zero() {
        return Err(Error::DivisionByZero);
    }
    let num = taylor_shift(&dense_coeffs(r.numer(), v)?, point);
    let den = taylor_shift(&dense_coeffs(r.denom(), v)?, point);
    let m = den
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero denominator");
    if m == 0 {
        return Ok(GaussianRational::zero());
    }
    let d1 = &den[m..];
    // series q = num / d1 up to s^(m-1)
    let inv0 = d1[0].inv().expect("d1(0) != 0");
    let mut q: Vec<GaussianRational> = Vec::with_capacity(m);
    for k in 0..m {
        let mut acc = num.get(k).cloned().unwrap_or_default();
        for j in 1..=k.min(d1.len() - 1) {
            acc -= &(&d1[j] * &q[k - j]);
        }
        q.push(&acc * &inv0);
    }
    Ok(q[m - 1].clone())
}
