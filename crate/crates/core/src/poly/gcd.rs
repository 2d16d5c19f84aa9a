//! Multivariate GCD by dense evaluation and interpolation, and the
//! squarefree/divisibility routines built on it.

use num_traits::{One, Zero};

use super::multipoly::{unify, MultiPoly};
use super::GaussianRational;
use crate::error::{Error, Result};

/// Variable occurring in exactly one of `f`, `g`.
fn lonely_var(f: &MultiPoly, g: &MultiPoly) -> Option<(usize, bool)> {
    (0..f.vars().len()).find_map(|i| match (f.degree_at(i) > 0, g.degree_at(i) > 0) {
        (true, false) => Some((i, true)),
        (false, true) => Some((i, false)),
        _ => None,
    })
}

/// GCD of the coefficients of `f` viewed in the variable at `idx`.
pub(crate) fn content_at(f: &MultiPoly, idx: usize) -> MultiPoly {
    let mut coeffs = f.coeffs_at(idx).into_iter().filter(|c| !c.is_zero());
    let Some(first) = coeffs.next() else {
        return MultiPoly::zero(f.vars());
    };
    let mut acc = first.monic();
    for c in coeffs {
        if acc.is_constant() {
            break;
        }
        acc = gcd(&acc, &c);
    }
    acc
}

/// Greatest common divisor, normalized monic (leading graded-lex
/// coefficient 1). `gcd(0, 0) = 0`.
pub fn gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (f, g) = unify(f, g);
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return MultiPoly::one(f.vars());
    }
    // cheap shortcut: one divides the other
    if g.num_terms() <= f.num_terms() {
        if f.div_exact(&g).is_some() {
            return g.monic();
        }
    } else if g.div_exact(&f).is_some() {
        return f.monic();
    }
    // a variable missing from one side cannot occur in the gcd
    if let Some((idx, in_f)) = lonely_var(&f, &g) {
        return if in_f {
            gcd(&content_at(&f, idx), &g)
        } else {
            gcd(&f, &content_at(&g, idx))
        };
    }
    let mut vars: Vec<usize> = (0..f.vars().len())
        .filter(|&i| f.degree_at(i) > 0)
        .collect();
    // interpolate in the variable of highest degree last
    vars.sort_by_key(|&i| (f.degree_at(i).max(g.degree_at(i)), i));
    interpolated_gcd(&f, &g, &vars).monic()
}

/// GCD of a list; zero for an empty or all-zero list.
pub fn gcd_all<'a>(polys: impl IntoIterator<Item = &'a MultiPoly>) -> Option<MultiPoly> {
    let mut acc: Option<MultiPoly> = None;
    for p in polys {
        acc = Some(match acc {
            None => p.monic(),
            Some(a) => gcd(&a, p),
        });
    }
    acc
}

/// Squarefree part in `v`: `f / gcd(f, df/dv)`.
///
/// The quotient keeps exactly one copy of every irreducible factor that
/// involves `v`; factors free of `v` are removed. A polynomial not involving
/// `v` at all (including constants) is returned unchanged.
pub fn squarefree_part(f: &MultiPoly, v: &str) -> MultiPoly {
    if f.is_zero() || f.degree_in(v) == 0 {
        return f.clone();
    }
    let df = f.derivative(v).expect("variable present");
    let g = gcd(f, &df);
    f.div_exact(&g).expect("gcd divides").monic()
}

/// Radical (squarefree part over all variables): `f / gcd(f, f_x1, ..., f_xn)`.
pub fn radical(f: &MultiPoly) -> MultiPoly {
    if f.is_zero() || f.is_constant() {
        return f.monic();
    }
    let mut g = f.monic();
    for name in f.used_vars() {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, &f.derivative(&name).expect("present"));
    }
    f.div_exact(&g).expect("gcd divides").monic()
}

/// Whether `g = f * h` for a polynomial `h`; returns `h` when it does.
pub fn divides_upto_unit(f: &MultiPoly, g: &MultiPoly) -> Result<Option<MultiPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroInput("divisor must be nonzero".into()));
    }
    Ok(g.div_exact(f))
}

/// `f` divided by all repeated factors and content in `v`, as a pair
/// `(squarefree, removed)` with `f = squarefree * removed`.
pub fn squarefree_split(f: &MultiPoly, v: &str) -> (MultiPoly, MultiPoly) {
    let sf = squarefree_part(f, v);
    let removed = f.div_exact(&sf).expect("squarefree part divides");
    (sf, removed)
}

type Dense = Vec<GaussianRational>;

fn trim(mut c: Dense) -> Dense {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn dense_rem(a: &[GaussianRational], b: &[GaussianRational]) -> Dense {
    let mut r = a.to_vec();
    let inv = b.last().expect("nonzero").inv().expect("nonzero");
    while r.len() >= b.len() {
        let q = r.last().expect("nonempty") * &inv;
        let shift = r.len() - b.len();
        for (k, c) in b.iter().enumerate() {
            let t = &q * c;
            r[shift + k] -= &t;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Monic gcd of dense univariate polynomials; empty means zero.
fn dense_gcd(a: &[GaussianRational], b: &[GaussianRational]) -> Dense {
    let (mut a, mut b) = (make_monic(trim(a.to_vec())), make_monic(trim(b.to_vec())));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return b;
        }
        let r = make_monic(dense_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

fn make_monic(mut c: Dense) -> Dense {
    if let Some(lc) = c.last().cloned() {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero");
            c.iter_mut().for_each(|x| *x = &*x * &inv);
        }
    }
    c
}

fn dense_eval(c: &[GaussianRational], t: &GaussianRational) -> GaussianRational {
    c.iter()
        .rev()
        .fold(GaussianRational::zero(), |acc, k| &(&acc * t) + k)
}

fn dense_to_poly(c: &[GaussianRational], vars: &super::Vars, k: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    for (e, coeff) in c.iter().enumerate() {
        let mut exps = vec![0; vars.len()];
        exps[k] = e as u32;
        out = &out + &MultiPoly::monomial(vars, exps).scale(coeff);
    }
    out
}

/// Terms of `f` grouped by their exponents outside `k`, each group a dense
/// polynomial in the variable `k`.
fn groups(f: &MultiPoly, k: usize) -> std::collections::BTreeMap<Vec<u32>, Dense> {
    let mut out: std::collections::BTreeMap<Vec<u32>, Dense> = Default::default();
    for (m, c) in f.terms() {
        let mut key = m.0.clone();
        let e = key[k] as usize;
        key[k] = 0;
        let slot = out.entry(key).or_default();
        if slot.len() <= e {
            slot.resize(e + 1, GaussianRational::zero());
        }
        slot[e] = c.clone();
    }
    out
}

/// Lexicographic key of a monomial restricted to `rest`, in that order.
fn lex_key(exps: &[u32], rest: &[usize]) -> Vec<u32> {
    rest.iter().map(|&i| exps[i]).collect()
}

/// Leading coefficient (a polynomial in `k`) for lex order on `rest`, and
/// the content in `k` (gcd of all coefficients in `k`).
fn lead_and_content(f: &MultiPoly, k: usize, rest: &[usize]) -> (Dense, Dense) {
    let g = groups(f, k);
    let lead = g
        .iter()
        .max_by(|a, b| lex_key(a.0, rest).cmp(&lex_key(b.0, rest)))
        .map(|(_, c)| c.clone())
        .expect("nonzero");
    let mut content: Dense = Vec::new();
    for c in g.values() {
        content = dense_gcd(&content, c);
        if content.len() == 1 {
            break;
        }
    }
    (lead, content)
}

fn lex_leading(f: &MultiPoly, rest: &[usize]) -> (Vec<u32>, GaussianRational) {
    f.terms()
        .map(|(m, c)| (lex_key(&m.0, rest), c.clone()))
        .max_by(|a, b| a.0.cmp(&b.0))
        .expect("nonzero")
}

/// Brown's dense evaluation/interpolation gcd over `Q(i)`. `vars` lists the
/// variables that may occur; the last one is interpolated at this level.
fn interpolated_gcd(f: &MultiPoly, g: &MultiPoly, vars: &[usize]) -> MultiPoly {
    let all = f.vars().clone();
    let k = *vars.last().expect("at least one variable");
    if vars.len() == 1 {
        let d = dense_gcd(&dense_in(f, k), &dense_in(g, k));
        return dense_to_poly(&d, &all, k);
    }
    let rest = &vars[..vars.len() - 1];
    let (lf, cf) = lead_and_content(f, k, rest);
    let (lg, cg) = lead_and_content(g, k, rest);
    let content = dense_gcd(&cf, &cg);
    let a = f
        .div_exact(&dense_to_poly(&cf, &all, k))
        .expect("content divides");
    let b = g
        .div_exact(&dense_to_poly(&cg, &all, k))
        .expect("content divides");
    // leading coefficients of the primitive parts
    let la = dense_div(&lf, &cf);
    let lb = dense_div(&lg, &cg);
    let gamma = dense_gcd(&la, &lb);
    let bound = (gamma.len() - 1) + a.degree_at(k).min(b.degree_at(k)) as usize + 1;
    let name = all[k].clone();
    let mut points: Vec<GaussianRational> = Vec::new();
    let mut interp = MultiPoly::zero(&all);
    let mut current: Option<Vec<u32>> = None;
    let mut n: i64 = 0;
    loop {
        n += 1;
        let t = GaussianRational::from(if n % 2 == 1 { (n + 1) / 2 } else { -(n / 2) });
        let gt = dense_eval(&gamma, &t);
        if gt.is_zero() {
            continue;
        }
        let at = a.evaluate(&[(&name, t.clone())]).expect("alphabet");
        let bt = b.evaluate(&[(&name, t.clone())]).expect("alphabet");
        let ct = interpolated_gcd(&at, &bt, rest);
        if ct.is_constant() {
            return dense_to_poly(&content, &all, k);
        }
        let (lm, lc) = lex_leading(&ct, rest);
        let ct = ct.scale(&(&gt * &lc.inv().expect("nonzero")));
        match &current {
            Some(cur) if lm > *cur => continue,
            Some(cur) if lm == *cur => {
                // Newton step
                let q = points.iter().fold(MultiPoly::one(&all), |acc, s| {
                    &acc * &dense_to_poly(&[-s.clone(), GaussianRational::one()], &all, k)
                });
                let qt = points
                    .iter()
                    .fold(GaussianRational::one(), |acc, s| &acc * &(&t - s));
                let at_t = interp.evaluate(&[(&name, t.clone())]).expect("alphabet");
                let diff = (&ct - &at_t).scale(&qt.inv().expect("distinct points"));
                interp = &interp + &(&diff * &q);
                points.push(t);
            }
            _ => {
                current = Some(lm);
                interp = ct;
                points = vec![t];
            }
        }
        if points.len() >= bound {
            let (_, c) = lead_and_content(&interp, k, rest);
            let candidate = interp
                .div_exact(&dense_to_poly(&c, &all, k))
                .expect("content divides");
            if a.div_exact(&candidate).is_some() && b.div_exact(&candidate).is_some() {
                return &dense_to_poly(&content, &all, k) * &candidate;
            }
        }
    }
}

fn dense_in(f: &MultiPoly, k: usize) -> Dense {
    let mut out: Dense = Vec::new();
    for (m, c) in f.terms() {
        let e = m.0[k] as usize;
        if out.len() <= e {
            out.resize(e + 1, GaussianRational::zero());
        }
        out[e] = c.clone();
    }
    out
}

/// Exact quotient of dense polynomials.
fn dense_div(a: &[GaussianRational], b: &[GaussianRational]) -> Dense {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    if r.len() < b.len() {
        return Vec::new();
    }
    let inv = b.last().expect("nonzero").inv().expect("nonzero");
    let mut q = vec![GaussianRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let c = r.last().expect("nonempty") * &inv;
        let shift = r.len() - b.len();
        for (k, bc) in b.iter().enumerate() {
            let t = &c * bc;
            r[shift + k] -= &t;
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    q
}
