//! Exact roots in `Q(i)` of low-degree univariate polynomials.
//!
//! Not a general root finder: it strips roots at zero, solves linear and
//! quadratic factors exactly, and deflates rational roots of real
//! polynomials found by the rational root test. Anything left over is
//! reported as not exactly representable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gcd::squarefree_part;
use super::multipoly::MultiPoly;
use super::residue::dense_coeffs;
use super::GaussianRational;
use crate::error::{Error, Result};

/// Largest |coefficient| for which rational-root candidates are enumerated.
const CANDIDATE_LIMIT: u64 = 1_000_000;

/// Distinct roots of `p` (univariate in `v`), or an error if some root is
/// not found exactly.
pub fn distinct_roots(p: &MultiPoly, v: &str) -> Result<Vec<GaussianRational>> {
    if p.is_zero() {
        return Err(Error::ZeroInput("every point is a root".into()));
    }
    let sf = squarefree_part(p, v);
    let mut c = dense_coeffs(&sf, v)?;
    let mut roots = Vec::new();
    if c.len() > 1 && c[0].is_zero() {
        roots.push(GaussianRational::zero());
        let k = c.iter().position(|x| !x.is_zero()).expect("nonzero");
        c.drain(..k);
    }
    loop {
        match c.len() {
            0 | 1 => break,
            2 => {
                roots.push(-(&c[0] / &c[1]));
                break;
            }
            3 => {
                let (a, b, cc) = (&c[2], &c[1], &c[0]);
                let disc = b * b - &(&GaussianRational::from(4) * &(a * cc));
                let s = disc.sqrt().ok_or_else(|| {
                    Error::NotRepresentable(format!("roots of {sf} need sqrt({disc})"))
                })?;
                let two_a = &GaussianRational::from(2) * a;
                roots.push(&(&-b + &s) / &two_a);
                roots.push(&(&-b - &s) / &two_a);
                break;
            }
            _ => match rational_root(&c) {
                Some(r) => {
                    c = deflate(&c, &r);
                    roots.push(r);
                }
                None => {
                    return Err(Error::NotRepresentable(format!(
                        "no exact root found for degree {} factor of {sf}",
                        c.len() - 1
                    )))
                }
            },
        }
    }
    Ok(roots)
}

fn deflate(c: &[GaussianRational], r: &GaussianRational) -> Vec<GaussianRational> {
    let n = c.len() - 1;
    let mut q = vec![GaussianRational::zero(); n];
    let mut carry = GaussianRational::zero();
    for k in (0..n).rev() {
        carry = &c[k + 1] + &(&carry * r);
        q[k] = carry.clone();
    }
    q
}

fn eval(c: &[GaussianRational], x: &GaussianRational) -> GaussianRational {
    c.iter()
        .rev()
        .fold(GaussianRational::zero(), |acc, k| &(&acc * x) + k)
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > CANDIDATE_LIMIT || n == 0 {
        return None;
    }
    Some((1..=n).filter(|d| n % d == 0).collect())
}

/// Rational root test on a real polynomial with nonzero constant term.
fn rational_root(c: &[GaussianRational]) -> Option<GaussianRational> {
    if c.iter().any(|x| !x.is_real()) {
        return None;
    }
    let lcm = c
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.re().denom()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|x| (x.re() * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let ps = small_divisors(&ints[0])?;
    let qs = small_divisors(ints.last()?)?;
    for &p in &ps {
        for &q in &qs {
            for sign in [1i64, -1] {
                let cand = GaussianRational::real(BigRational::new(
                    BigInt::from(p) * sign,
                    BigInt::from(q),
                ));
                if eval(c, &cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn roots(s: &str) -> Result<Vec<GaussianRational>> {
        distinct_roots(&parse_poly(s, &["p"]).unwrap(), "p")
    }

    #[test]
    fn zero_and_imaginary() {
        let r = roots("p^3 + p").unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.contains(&GaussianRational::zero()));
        assert!(r.contains(&GaussianRational::i()));
        assert!(r.contains(&-GaussianRational::i()));
    }

    #[test]
    fn repeated_roots_collapse() {
        assert_eq!(roots("(p-1)^3").unwrap(), vec![GaussianRational::from(1)]);
    }

    #[test]
    fn cubic_with_rational_roots() {
        let r = roots("(2*p - 1)*(p + 3)*(p - 5)").unwrap();
        assert_eq!(r.len(), 3);
        assert!(r.contains(&GaussianRational::from_ratio(1, 2)));
    }

    #[test]
    fn irrational_is_reported() {
        assert!(matches!(roots("p^2 - 2"), Err(Error::NotRepresentable(_))));
        assert!(matches!(roots("p^3 - 2"), Err(Error::NotRepresentable(_))));
        assert!(roots("5").unwrap().is_empty());
    }
}
