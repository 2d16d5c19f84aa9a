//! Random generators, independent oracles and the property suites shared by
//! the integration tests and the acceptance runner.
#![allow(dead_code)]

use holoweb::foliation::eliminate_t;
use holoweb::poly::{
    discriminant, parse_poly, radical, residue_at, resultant, vars_of, GaussianRational as Q, MultiPoly,
    RationalFunction,
};
use holoweb::projective::{
    chart_transition, dual_web, hom_family_resultant, restrict_chart, web_degree, Chart,
    PlaneCurve, DEFAULT_SEED,
};
use holoweb::segre::{eliminate_family, SegreFamily};
use holoweb::web::{contact_field, normalize_web, symmetric_coeffs, web_to_surface, SurfaceF};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a/b` with `|a| <= n`, `1 <= b <= 4`.
pub fn rat(rng: &mut ChaCha8Rng, n: i64) -> Q {
    Q::from_ratio(rng.gen_range(-n..=n), rng.gen_range(1..=4))
}

pub fn nonzero_rat(rng: &mut ChaCha8Rng, n: i64) -> Q {
    loop {
        let q = rat(rng, n);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Rational, occasionally with an imaginary part.
pub fn gauss(rng: &mut ChaCha8Rng, n: i64) -> Q {
    let re = rat(rng, n);
    if rng.gen_bool(0.25) {
        &re + &(&rat(rng, n) * &Q::i())
    } else {
        re
    }
}

/// Sum of `terms` random monomials with per-variable degree bounds.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    vars: &[&str],
    max_deg: &[u32],
    terms: usize,
) -> MultiPoly {
    let vs = vars_of(vars);
    let mut out = MultiPoly::zero(&vs);
    for _ in 0..terms {
        let exps = max_deg.iter().map(|&d| rng.gen_range(0..=d)).collect();
        out = &out + &MultiPoly::monomial(&vs, exps).scale(&gauss(rng, 5));
    }
    out
}

/// Random polynomial in the listed variables with total degree `<= deg`.
pub fn random_total(rng: &mut ChaCha8Rng, vars: &[&str], deg: u32, terms: usize) -> MultiPoly {
    let vs = vars_of(vars);
    let mut out = MultiPoly::zero(&vs);
    for _ in 0..terms {
        let mut left = deg;
        let mut exps = vec![0; vars.len()];
        for e in exps.iter_mut() {
            *e = rng.gen_range(0..=left);
            left -= *e;
        }
        out = &out + &MultiPoly::monomial(&vs, exps).scale(&rat(rng, 5));
    }
    out
}

pub fn p(s: &str, vars: &[&str]) -> MultiPoly {
    parse_poly(s, vars).unwrap()
}

// ---- numeric univariate oracles ----

pub fn dense(f: &MultiPoly, v: &str) -> Vec<Q> {
    let f = f.with_var(v);
    let mut c: Vec<Q> = f
        .coeffs_in(v)
        .unwrap()
        .iter()
        .map(|c| c.constant_value().expect("univariate"))
        .collect();
    while c.len() > 1 && c.last().unwrap().is_zero() {
        c.pop();
    }
    c
}

fn eval_dense(c: &[Q], x: &Q) -> Q {
    c.iter().rev().fold(Q::zero(), |acc, k| &(&acc * x) + k)
}

/// Sylvester matrix of dense `f`, `g` (ascending coefficients), leading
/// coefficients in the first column.
pub fn sylvester_num(f: &[Q], g: &[Q]) -> Vec<Vec<Q>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Q::zero(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Q::zero(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by expansion over all permutations.
pub fn leibniz_det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Q::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<Q>], total: &mut Q) {
    let n = perm.len();
    if k == n {
        let mut prod = Q::one();
        for (i, &j) in perm.iter().enumerate() {
            if m[i][j].is_zero() {
                return;
            }
            prod = &prod * &m[i][j];
        }
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        if inversions % 2 == 1 {
            *total -= &prod;
        } else {
            *total += &prod;
        }
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

fn trim(mut c: Vec<Q>) -> Vec<Q> {
    while c.len() > 1 && c.last().unwrap().is_zero() {
        c.pop();
    }
    c
}

/// Remainder of dense polynomial division.
pub fn rem_dense(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() / &lb;
        for (k, c) in b.iter().enumerate() {
            let t = &q * c;
            r[shift + k] -= &t;
        }
        r.pop();
        r = trim(r);
        if r.is_empty() {
            r.push(Q::zero());
        }
    }
    r
}

/// Degree of the gcd of two dense polynomials, by Euclid.
pub fn gcd_degree(a: &[Q], b: &[Q]) -> usize {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !(b.len() == 1 && b[0].is_zero()) {
        let r = rem_dense(&a, &b);
        a = b;
        b = r;
    }
    a.len() - 1
}

// ---- property suites ----

/// Outcome of one property suite.
pub struct Outcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random web surface: `deg_p <= 3`, coefficient degree `<= 2`.
pub fn random_surface(rng: &mut ChaCha8Rng) -> SurfaceF {
    loop {
        let d = rng.gen_range(1..=3);
        let f = random_poly(rng, &["x", "y", "p"], &[2, 2, d], 5);
        if f.degree_in("p") == 0 {
            continue;
        }
        if let Ok(s) = SurfaceF::new(f) {
            return s;
        }
    }
}

pub fn contact_identities(n: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("contact-field identities");
    let mut rng = rng(seed);
    for _ in 0..n {
        let s = random_surface(&mut rng);
        let v = contact_field(&s);
        let df = v.df_pairing(s.poly()).unwrap();
        let contact = v.contact_pairing();
        out.check(df.is_zero() && contact.is_zero(), || {
            format!(
                "F = {}: <dF,v> = {df}, <dy - p dx, v> = {contact}",
                s.poly()
            )
        });
    }
    out
}

/// `Res_p(f, g)` specializes, matches the permutation determinant of the
/// Sylvester matrix, and vanishes exactly when `f`, `g` share a root.
pub fn resultant_specialization(n: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("resultant specialization iff common root");
    let mut rng = rng(seed);
    let xp = ["x", "p"];
    for case in 0..n {
        let shared = case % 2 == 0;
        let gen = |d: u32, rng: &mut ChaCha8Rng| loop {
            let f = random_poly(rng, &xp, &[2, d], 4);
            if f.degree_in("p") == d {
                return f;
            }
        };
        let (m, k) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let mut f = gen(m, &mut rng);
        let mut g = gen(k, &mut rng);
        if shared {
            let h = &p("p", &xp) - &random_poly(&mut rng, &xp, &[1, 0], 2);
            f = &f * &h;
            g = &g * &h;
        }
        let x0 = loop {
            let x0 = rat(&mut rng, 6);
            let lf = f.coeffs_in("p").unwrap().pop().unwrap();
            let lg = g.coeffs_in("p").unwrap().pop().unwrap();
            let nz = |q: &MultiPoly| !q.evaluate(&[("x", x0.clone())]).unwrap().is_zero();
            if nz(&lf) && nz(&lg) {
                break x0;
            }
        };
        let at = |q: &MultiPoly| q.evaluate(&[("x", x0.clone())]).unwrap();
        let res = resultant(&f, &g, "p").unwrap();
        let specialized = at(&res).constant_value().unwrap_or_else(Q::zero);
        let (f0, g0) = (dense(&at(&f), "p"), dense(&at(&g), "p"));
        let oracle = leibniz_det(&sylvester_num(&f0, &g0));
        let common = gcd_degree(&f0, &g0) > 0;
        let ok = specialized == oracle && (oracle.is_zero() == common) && (!shared || common);
        out.check(ok, || {
            format!("f = {f}, g = {g}, x0 = {x0}: Res = {specialized}, oracle = {oracle}, common = {common}")
        });
    }
    out
}

pub fn discriminant_quadratic(n: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("discriminant equals b^2 - 4ac");
    let mut rng = rng(seed);
    let vars = ["x", "y", "p"];
    for _ in 0..n {
        let a = loop {
            let a = random_poly(&mut rng, &vars, &[2, 2, 0], 3);
            if !a.is_zero() {
                break a;
            }
        };
        let b = random_poly(&mut rng, &vars, &[2, 2, 0], 3);
        let c = random_poly(&mut rng, &vars, &[2, 2, 0], 3);
        let pv = p("p", &vars);
        let f = &(&(&a * &pv.pow(2)) + &(&b * &pv)) + &c;
        let got = discriminant(&f, "p").unwrap();
        let want = &(&b * &b) - &(&a * &c).scale(&Q::from(4));
        out.check(got == want, || {
            format!("F = {f}: disc = {got}, b^2 - 4ac = {want}")
        });
    }
    out
}

/// Finite residues of `N/D` sum to the coefficient of `1/x` at infinity;
/// each simple-pole residue equals `N(r)/D'(r)`.
pub fn residue_sum(n: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("residue sum equals c_{-1} at infinity");
    let mut rng = rng(seed);
    let xs = ["x"];
    let x = p("x", &xs);
    for _ in 0..n {
        let k = rng.gen_range(1..=3);
        let mut roots: Vec<Q> = Vec::new();
        while roots.len() < k {
            let r = gauss(&mut rng, 4);
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let lead = nonzero_rat(&mut rng, 3);
        let den = roots
            .iter()
            .fold(MultiPoly::constant(x.vars(), lead), |acc, r| {
                &acc * &(&x - &MultiPoly::constant(x.vars(), r.clone()))
            });
        let num = random_poly(&mut rng, &xs, &[k as u32 + 1], 3);
        if num.is_zero() {
            continue;
        }
        let rf = RationalFunction::new(num.clone(), den.clone()).unwrap();
        let total = roots
            .iter()
            .fold(Q::zero(), |acc, r| &acc + &residue_at(&rf, "x", r).unwrap());
        // c_{-1} at infinity from the proper part of num/den
        let (nd, dd) = (dense(&num, "x"), dense(&den, "x"));
        let r = rem_dense(&nd, &dd);
        let oracle = if r.len() == dd.len() - 1 && !r.last().unwrap().is_zero() {
            r.last().unwrap() / dd.last().unwrap()
        } else {
            Q::zero()
        };
        let dprime = dense(&den.derivative("x").unwrap(), "x");
        let simple_ok = roots.iter().all(|root| {
            let want = &eval_dense(&nd, root) / &eval_dense(&dprime, root);
            residue_at(&rf, "x", root).unwrap() == want
        });
        out.check(total == oracle && simple_ok, || {
            format!("{num} / ({den}): sum = {total}, oracle = {oracle}")
        });
    }
    out
}

/// Random normalized symmetric form of degree `<= 2`.
pub fn random_web(rng: &mut ChaCha8Rng) -> holoweb::web::WebForm {
    let vars = ["x", "y", "dx", "dy"];
    loop {
        let d = rng.gen_range(1..=2);
        let mut omega = MultiPoly::zero(&vars_of(&vars));
        for j in 0..=d {
            let a = random_total(rng, &["x", "y"], 2, 3);
            let mono = p(&format!("dx^{} * dy^{}", d - j, j), &vars);
            omega = &omega + &(&a * &mono);
        }
        if omega.is_zero() || symmetric_coeffs(&omega).is_err() {
            continue;
        }
        return normalize_web(&omega).unwrap().0;
    }
}

pub fn chart_roundtrip(n: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("chart-transition round trip");
    let mut rng = rng(seed);
    for case in 0..n {
        let w = random_web(&mut rng);
        let to = if case % 2 == 0 { Chart::X } else { Chart::Y };
        let there = chart_transition(&w, Chart::Z, to);
        let back = there
            .as_ref()
            .ok()
            .and_then(|(w1, _)| chart_transition(w1, to, Chart::Z).ok());
        out.check(back.as_ref().is_some_and(|(b, _)| b.same_web(&w)), || {
            format!("{w} via chart {to}: {:?}", back.map(|(b, _)| b.to_string()))
        });
    }
    out
}

/// Family resultant in the chart `Z = 1`, elimination of the affine family
/// and dual web of the traced conic agree, for `a X + b t Y + c t^2 Z` and
/// the pencil `X + t Y`.
pub fn three_paths(n: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("three-path pipeline equality");
    let mut rng = rng(seed);
    let hom_vars = ["X", "Y", "Z", "t"];
    let mut cases: Vec<(String, String, String)> = vec![
        (
            "X + t*Y + t^2*Z".into(),
            "x + t*y + t^2".into(),
            "q1^2 - q0*q2".into(),
        ),
        ("X + t*Y".into(), "x + t*y".into(), "q2".into()),
    ];
    for _ in 0..n {
        let (a, b, c) = (
            nonzero_rat(&mut rng, 5),
            nonzero_rat(&mut rng, 5),
            nonzero_rat(&mut rng, 5),
        );
        cases.push((
            format!("({a})*X + ({b})*t*Y + ({c})*t^2*Z"),
            format!("({a})*x + ({b})*t*y + ({c})*t^2"),
            format!("({a})*({c})*q1^2 - ({b})^2*q0*q2"),
        ));
    }
    for (g, fam, curve) in cases {
        let one = hom_family_resultant(&p(&g, &hom_vars))
            .and_then(|h| restrict_chart(&h, Chart::Z))
            .map(|(w, _)| web_to_surface(&w).monic());
        let two = SegreFamily::from_poly(p(&fam, &["x", "y", "t"]))
            .and_then(|f| eliminate_family(&f))
            .map(|(s, _)| s);
        let three = PlaneCurve::new(p(&curve, &["q0", "q1", "q2"])).and_then(|c| dual_web(&c));
        let ok = matches!((&one, &two, &three), (Ok(a), Ok(b), Ok(c)) if a == b && b == c);
        out.check(ok, || format!("{g}: {one:?} / {two:?} / {three:?}"));
    }
    out
}

/// Reduced homogeneous curve in `(q0, q1, q2)` of degree `deg`.
pub fn random_curve(rng: &mut ChaCha8Rng, deg: u32) -> MultiPoly {
    let q = ["q0", "q1", "q2"];
    loop {
        let mut g = MultiPoly::zero(&vars_of(&q));
        for _ in 0..4 {
            let a = rng.gen_range(0..=deg);
            let b = rng.gen_range(0..=deg - a);
            let mono = MultiPoly::monomial(g.vars(), vec![a, b, deg - a - b]);
            g = &g + &mono.scale(&nonzero_rat(rng, 5));
        }
        if !g.is_zero() && radical(&g).total_degree() == deg {
            return g;
        }
    }
}

/// Dual webs of random curves of degree 1 to 3 have web degree zero.
pub fn dual_degree_zero(n: usize, seed: u64) -> Outcome {
    let mut out = Outcome::new("dual webs have degree zero");
    let mut rng = rng(seed);
    while out.cases < n {
        let deg = 1 + (out.cases % 3) as u32;
        let g = random_curve(&mut rng, deg);
        let Ok(s) = PlaneCurve::new(g.clone()).and_then(|c| dual_web(&c)) else {
            continue;
        };
        let wd = web_degree(&s, 5, DEFAULT_SEED);
        let ok = wd.as_ref().is_ok_and(|w| w.degree == 0);
        out.check(ok, || format!("{g} gives {}: {wd:?}", s.poly()));
    }
    out
}

/// Runs the family elimination used by the web checks.
pub fn elimination_surface(fam: &str) -> MultiPoly {
    eliminate_t(&p(fam, &["x", "y", "t"])).unwrap().surface
}
