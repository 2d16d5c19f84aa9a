//! Sylvester resultants and discriminants.

use super::multipoly::{unify, MultiPoly};
use crate::error::{Error, Result};

/// Sylvester matrix of `f` and `g` in the variable at `idx`, leading
/// coefficients first: `deg g` shifted rows of `f`, then `deg f` of `g`.
pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, v: &str) -> Result<Vec<Vec<MultiPoly>>> {
    let (f, g) = unify(f, g);
    let idx = f
        .var_index(v)
        .ok_or_else(|| Error::UnknownVariable(v.to_string()))?;
    let m = f.degree_at(idx) as usize;
    let n = g.degree_at(idx) as usize;
    let fc = f.coeffs_at(idx);
    let gc = g.coeffs_at(idx);
    let size = m + n;
    let zero = MultiPoly::zero(f.vars());
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![zero.clone(); size];
        for k in 0..=m {
            row[r + k] = fc[m - k].clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![zero.clone(); size];
        for k in 0..=n {
            row[r + k] = gc[n - k].clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Fraction-free (Bareiss) determinant; every division is exact.
pub fn determinant(mut m: Vec<Vec<MultiPoly>>) -> Option<MultiPoly> {
    let n = m.len();
    let vars = m.first()?.first()?.vars().clone();
    let mut negate = false;
    let mut prev = MultiPoly::one(&vars);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Some(MultiPoly::zero(&vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero(&vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Some(if negate { -det } else { det })
}

/// `Res_v(f, g)`: determinant of the Sylvester matrix in `v`.
///
/// When one argument has degree 0 in `v` the result is that argument raised
/// to the other's degree.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, v: &str) -> Result<MultiPoly> {
    let (f, g) = unify(f, g);
    let f = f.with_var(v);
    let g = g.with_vars(f.vars()).expect("same alphabet");
    let m = f.degree_in(v);
    let n = g.degree_in(v);
    match (m, n) {
        (0, 0) => Err(Error::BothDegreeZero(v.to_string())),
        (_, 0) => Ok(g.pow(m)),
        (0, _) => Ok(f.pow(n)),
        _ => Ok(determinant(sylvester_matrix(&f, &g, v)?).expect("nonempty matrix")),
    }
}

/// Discriminant `(-1)^(d(d-1)/2) Res_v(f, df/dv) / lc_v(f)`; equals
/// `b^2 - 4ac` on quadratics.
pub fn discriminant(f: &MultiPoly, v: &str) -> Result<MultiPoly> {
    let d = f.degree_in(v);
    if d < 2 {
        return Err(Error::DegreeTooLow {
            var: v.to_string(),
            degree: d,
            needed: 2,
        });
    }
    let lc = f.coeffs_in(v)?.pop().expect("degree >= 2");
    let res = resultant(f, &f.derivative(v)?, v)?;
    let q = res
        .div_exact(&lc)
        .expect("leading coefficient divides Res(f, f')");
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}
