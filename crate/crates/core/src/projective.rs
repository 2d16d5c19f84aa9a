//! Webs on the projective plane: homogeneous symmetric forms in
//! `(X, Y, Z, dX, dY, dZ)`, their affine charts, webs defined by families
//! of lines, dual webs of plane curves and the web degree.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{
    gcd, gcd_all, radical, resultant, substitute, vars_of, GaussianRational, MultiPoly,
    RationalFunction,
};
use crate::web::{normalize_web, NormalizationReport, SurfaceF, WebForm};

pub const HOM_VARS: [&str; 6] = ["X", "Y", "Z", "dX", "dY", "dZ"];
pub const CURVE_VARS: [&str; 3] = ["q0", "q1", "q2"];

/// Seed used by [`web_degree`] when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// A symmetric form on the plane, homogeneous of degree `k` in the points
/// and `d` in the differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSymForm {
    poly: MultiPoly,
    d: u32,
    k: u32,
}

impl HomSymForm {
    pub fn new(poly: MultiPoly) -> Result<Self> {
        let poly = poly.in_vars(&HOM_VARS)?;
        if poly.is_zero() {
            return Err(Error::ZeroInput("homogeneous form is zero".into()));
        }
        let mut dk = None;
        for (m, _) in poly.terms() {
            let e = &m.0;
            let here = (e[3] + e[4] + e[5], e[0] + e[1] + e[2]);
            match dk {
                None => dk = Some(here),
                Some(prev) if prev != here => {
                    return Err(Error::NotBihomogeneous(format!(
                        "{poly} mixes bidegrees {prev:?} and {here:?}"
                    )))
                }
                _ => {}
            }
        }
        let (d, k) = dk.expect("nonzero");
        if d == 0 {
            return Err(Error::NotBihomogeneous(format!(
                "{poly} has no differentials"
            )));
        }
        Ok(Self { poly, d, k })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    /// Degree in the differentials.
    pub fn degree(&self) -> u32 {
        self.d
    }

    /// Degree in `(X, Y, Z)`.
    pub fn point_degree(&self) -> u32 {
        self.k
    }

    /// Same form up to a nonzero constant.
    pub fn same_form(&self, other: &HomSymForm) -> bool {
        self.poly.monic() == other.poly.monic()
    }
}

impl fmt::Display for HomSymForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// `sum_i X_i d(omega)/d(dX_i)`: contraction with the radial field.
pub fn euler_contraction(omega: &HomSymForm) -> MultiPoly {
    let p = &omega.poly;
    ["X", "Y", "Z"]
        .iter()
        .fold(MultiPoly::zero(p.vars()), |acc, v| {
            let coord = MultiPoly::var(p.vars(), v).expect("hom alphabet");
            let partial = p.derivative(&format!("d{v}")).expect("hom alphabet");
            &acc + &(&coord * &partial)
        })
}

pub fn descends(omega: &HomSymForm) -> bool {
    euler_contraction(omega).is_zero()
}

/// Standard affine charts of the plane.
///
/// - `Z`: `(x, y) = (X/Z, Y/Z)`
/// - `X`: `(x, y) = (Z/X, Y/X)`
/// - `Y`: `(x, y) = (X/Y, Z/Y)`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    Z,
    X,
    Y,
}

impl Chart {
    /// `(coordinate set to 1, homogeneous name of x, homogeneous name of y)`.
    fn names(self) -> (&'static str, &'static str, &'static str) {
        match self {
            Chart::Z => ("Z", "X", "Y"),
            Chart::X => ("X", "Z", "Y"),
            Chart::Y => ("Y", "X", "Z"),
        }
    }
}

impl FromStr for Chart {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "z" => Ok(Chart::Z),
            "x" => Ok(Chart::X),
            "y" => Ok(Chart::Y),
            _ => Err(Error::Precondition(format!(
                "chart must be z, x or y, got `{s}`"
            ))),
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chart::Z => "z",
            Chart::X => "x",
            Chart::Y => "y",
        })
    }
}

/// Restricts a descending form to an affine chart and normalizes it.
pub fn restrict_chart(omega: &HomSymForm, chart: Chart) -> Result<(WebForm, NormalizationReport)> {
    let contraction = euler_contraction(omega);
    if !contraction.is_zero() {
        return Err(Error::Precondition(format!(
            "form does not descend: Euler contraction {contraction}"
        )));
    }
    let (one, hx, hy) = chart.names();
    let vars = vars_of(&["x", "y", "dx", "dy"]);
    let var = |n: &str| MultiPoly::var(&vars, n).expect("form alphabet");
    let zero = GaussianRational::from(0);
    let restricted = omega
        .poly
        .evaluate(&[(one, GaussianRational::from(1)), (&format!("d{one}"), zero)])?
        .substitute(hx, &var("x"))?
        .substitute(hy, &var("y"))?
        .substitute(&format!("d{hx}"), &var("dx"))?
        .substitute(&format!("d{hy}"), &var("dy"))?
        .in_vars(&["x", "y", "dx", "dy"])?;
    if restricted.is_zero() {
        return Err(Error::ZeroInput(format!(
            "{omega} restricts to zero in chart {chart}"
        )));
    }
    normalize_web(&restricted)
}

/// Pulls an affine form back to a homogeneous one and clears denominators.
pub fn homogenize(w: &WebForm, chart: Chart) -> Result<HomSymForm> {
    let (one, hx, hy) = chart.names();
    let vars = vars_of(&HOM_VARS);
    let var = |n: &str| MultiPoly::var(&vars, n).expect("hom alphabet");
    let w1 = var(one);
    let frac = |num: MultiPoly, den: MultiPoly| RationalFunction::new(num, den);
    // x = hx/one, dx = (one d(hx) - hx d(one)) / one^2
    let diff = |h: &str| &(&w1 * &var(&format!("d{h}"))) - &(&var(h) * &var(&format!("d{one}")));
    let bindings = [
        ("x", frac(var(hx), w1.clone())?),
        ("y", frac(var(hy), w1.clone())?),
        ("dx", frac(diff(hx), w1.pow(2))?),
        ("dy", frac(diff(hy), w1.pow(2))?),
    ];
    let r = substitute(&w.to_poly(), &bindings)?;
    HomSymForm::new(r.numer().in_vars(&HOM_VARS)?)
}

/// Re-expresses an affine web in another chart.
pub fn chart_transition(
    w: &WebForm,
    from: Chart,
    to: Chart,
) -> Result<(WebForm, NormalizationReport)> {
    restrict_chart(&homogenize(w, from)?, to)
}

/// `Res_t(G, dG)` for a family of lines `G(X, Y, Z, t)`, with common content
/// and repeated factors removed.
pub fn hom_family_resultant(g: &MultiPoly) -> Result<HomSymForm> {
    let g = g.in_vars(&["X", "Y", "Z", "t", "dX", "dY", "dZ"])?;
    let d = g.degree_in("t");
    if d == 0 {
        return Err(Error::DegreeTooLow {
            var: "t".into(),
            degree: 0,
            needed: 1,
        });
    }
    let dg = ["X", "Y", "Z"]
        .iter()
        .fold(MultiPoly::zero(g.vars()), |acc, v| {
            let dv = MultiPoly::var(g.vars(), &format!("d{v}")).expect("alphabet");
            &acc + &(&g.derivative(v).expect("alphabet") * &dv)
        });
    let r = resultant(&g, &dg, "t")?;
    if r.is_zero() {
        return Err(Error::ZeroResultant(format!("Res_t({g}, dG)")));
    }
    let r = r.in_vars(&HOM_VARS)?;
    // content over the point coordinates
    let mut coeffs: std::collections::BTreeMap<Vec<u32>, MultiPoly> = Default::default();
    for (m, c) in r.terms() {
        let key = m.0[3..].to_vec();
        let mut base = m.0.clone();
        base[3..].iter_mut().for_each(|e| *e = 0);
        let term = MultiPoly::monomial(r.vars(), base).scale(c);
        let slot = coeffs
            .entry(key)
            .or_insert_with(|| MultiPoly::zero(r.vars()));
        *slot = &*slot + &term;
    }
    let content = gcd_all(coeffs.values()).expect("nonzero");
    let r = r.div_exact(&content).expect("content divides");
    let repeated = ["dX", "dY", "dZ"].iter().fold(r.clone(), |acc, v| {
        gcd(&acc, &r.derivative(v).expect("alphabet"))
    });
    let r = r.div_exact(&repeated).expect("gcd divides");
    HomSymForm::new(r)
}

/// A reduced plane curve `G(q0, q1, q2) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    g: MultiPoly,
}

impl PlaneCurve {
    pub fn new(g: MultiPoly) -> Result<Self> {
        let g = g.in_vars(&CURVE_VARS)?;
        if g.is_constant() {
            return Err(Error::ConstantInput(format!("curve {g}")));
        }
        let deg = g.total_degree();
        if g.terms().any(|(m, _)| m.degree() != deg) {
            return Err(Error::Precondition(format!("{g} is not homogeneous")));
        }
        if radical(&g) != g.monic() {
            return Err(Error::Precondition(format!("{g} is not reduced")));
        }
        Ok(Self { g })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.g
    }

    pub fn degree(&self) -> u32 {
        self.g.total_degree()
    }
}

/// Dual web: the point `(x, y)` and slope `p` span the line
/// `{q0 X + q1 Y + q2 Z = 0}` with `[q0 : q1 : q2] = [-p : 1 : x p - y]`,
/// a leaf direction whenever that line is a point of the curve. In the
/// chart `Z = 1`, `F(x, y, p) = G(-p, 1, x p - y)`, made monic.
pub fn dual_web(c: &PlaneCurve) -> Result<SurfaceF> {
    let vars = vars_of(&["x", "y", "p"]);
    let var = |n: &str| MultiPoly::var(&vars, n).expect("surface alphabet");
    let f =
        c.g.substitute("q0", &-var("p"))?
            .substitute("q1", &MultiPoly::one(&vars))?
            .substitute("q2", &(&(&var("x") * &var("p")) - &var("y")))?
            .in_vars(&["x", "y", "p"])?;
    if f.degree_in("p") == 0 {
        return Err(Error::Precondition(format!(
            "dual web of {} degenerates in this chart",
            c.g
        )));
    }
    let (s, _) = SurfaceF::normalized(&f)?;
    Ok(s.monic())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebDegree {
    pub degree: u32,
    /// Trials attaining `degree`.
    pub achieved: usize,
    pub trials: usize,
    /// Trials where `F` vanished on the whole line.
    pub degenerate: usize,
}

fn small_rational(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

/// Tangencies of the web with random lines `y = m x + c`: the degree in `s`
/// of `F(s, m s + c, m)`, maximized over the trials.
pub fn web_degree(s: &SurfaceF, trials: usize, seed: u64) -> Result<WebDegree> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vars = vars_of(&["s"]);
    let sv = MultiPoly::var(&vars, "s").expect("alphabet");
    let mut degs = Vec::new();
    let mut degenerate = 0;
    for _ in 0..trials {
        let m = small_rational(&mut rng);
        let c = small_rational(&mut rng);
        let line = &sv.scale(&m) + &MultiPoly::constant(&vars, c);
        let on_line = s
            .poly()
            .evaluate(&[("p", m)])?
            .substitute("y", &line)?
            .substitute("x", &sv)?;
        if on_line.is_zero() {
            degenerate += 1;
        } else {
            degs.push(on_line.degree_in("s"));
        }
    }
    let Some(&degree) = degs.iter().max() else {
        return Err(Error::Precondition(format!(
            "F vanishes on all {trials} sampled lines"
        )));
    };
    Ok(WebDegree {
        degree,
        achieved: degs.iter().filter(|&&d| d == degree).count(),
        trials,
        degenerate,
    })
}
