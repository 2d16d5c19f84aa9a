use std::fmt;

use super::criminant::{criminant, CurveSystem};
use super::form::SurfaceF;
use crate::error::{Error, Result};
use crate::poly::{
    distinct_roots, gcd, gcd_all, parse_poly, radical, resultant, substitute, vars_of,
    GaussianRational, MultiPoly, RationalFunction,
};

/// The 1-form `a dU + b dV` on the plane with coordinates `(U, V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarForm {
    u: String,
    v: String,
    a: MultiPoly,
    b: MultiPoly,
}

impl PlanarForm {
    pub fn new(u: &str, v: &str, a: MultiPoly, b: MultiPoly) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroInput("both coefficients vanish".into()));
        }
        let a = a.in_vars(&[u, v])?;
        let b = b.in_vars(&[u, v])?;
        Ok(Self {
            u: u.to_string(),
            v: v.to_string(),
            a,
            b,
        })
    }

    /// Parses `a*dU + b*dV` over `(U, V, dU, dV)`.
    pub fn parse(text: &str, u: &str, v: &str) -> Result<Self> {
        let (du, dv) = (format!("d{u}"), format!("d{v}"));
        let omega = parse_poly(text, &[u, v, &du, &dv])?;
        for (m, _) in omega.terms() {
            if m.0[2] + m.0[3] != 1 {
                return Err(Error::Precondition(format!(
                    "{omega} is not linear in {du}, {dv}"
                )));
            }
        }
        let a = omega
            .coeffs_in(&du)?
            .get(1)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(omega.vars()));
        let b = omega
            .coeffs_in(&dv)?
            .get(1)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(omega.vars()));
        Self::new(u, v, a, b)
    }

    /// Divides out `gcd(a, b)` and scales so the first nonzero coefficient
    /// is monic. Returns the removed factor as well.
    pub fn saturate(&self) -> (Self, MultiPoly) {
        let g = gcd(&self.a, &self.b);
        let a = self.a.div_exact(&g).expect("gcd divides");
        let b = self.b.div_exact(&g).expect("gcd divides");
        let lead = if a.is_zero() {
            b.leading_coeff()
        } else {
            a.leading_coeff()
        };
        let unit = lead.inv().expect("nonzero");
        let out = Self {
            u: self.u.clone(),
            v: self.v.clone(),
            a: a.scale(&unit)
                .in_vars(&[&self.u, &self.v])
                .expect("chart alphabet"),
            b: b.scale(&unit)
                .in_vars(&[&self.u, &self.v])
                .expect("chart alphabet"),
        };
        (out, g.in_vars(&[&self.u, &self.v]).expect("chart alphabet"))
    }

    pub fn is_saturated(&self) -> bool {
        gcd(&self.a, &self.b).is_constant()
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.u, &self.v)
    }

    pub fn a(&self) -> &MultiPoly {
        &self.a
    }

    pub fn b(&self) -> &MultiPoly {
        &self.b
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            a: self.a.scale(c),
            b: self.b.scale(c),
            ..self.clone()
        }
    }

    /// The form as a polynomial in `(U, V, dU, dV)`.
    pub fn to_poly(&self) -> MultiPoly {
        let (du, dv) = (format!("d{}", self.u), format!("d{}", self.v));
        let vars = vars_of(&[&self.u, &self.v, &du, &dv]);
        let diff = |name: &str| MultiPoly::var(&vars, name).expect("alphabet");
        &(&self.a * &diff(&du)) + &(&self.b * &diff(&dv))
    }

    /// Equal up to a nonzero constant.
    pub fn same_form(&self, other: &PlanarForm) -> bool {
        self.vars() == other.vars() && self.to_poly().monic() == other.to_poly().monic()
    }
}

impl fmt::Display for PlanarForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// A web component written as a graph `solved = value` over a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub component: MultiPoly,
    pub solved: String,
    pub value: RationalFunction,
    /// Saturated restriction of `dy - p dx`.
    pub form: PlanarForm,
    /// Factor divided out during saturation.
    pub removed: MultiPoly,
}

/// Restricts the contact form `dy - p dx` to the component `{G = 0}` of `W`,
/// solving `G` for `y`, else `x`, else `p`.
pub fn planar_restriction(s: &SurfaceF, component: &MultiPoly) -> Result<Restriction> {
    let g = component.in_vars(&["x", "y", "p"])?;
    if g.is_constant() {
        return Err(Error::ConstantInput(format!("component {g}")));
    }
    if s.poly().div_exact(&g).is_none() {
        return Err(Error::Precondition(format!(
            "{g} does not divide F = {}",
            s.poly()
        )));
    }
    let d = |q: &MultiPoly, v: &str| q.derivative(v).expect("surface alphabet");
    for solved in ["y", "x", "p"] {
        let coeffs = g.coeffs_in(solved)?;
        if coeffs.len() != 2 {
            continue;
        }
        let (b, a) = (&coeffs[0], &coeffs[1]);
        let value = RationalFunction::new(-b, a.clone())?;
        // w = B_w A - B A_w
        let w = |v: &str| &(&d(b, v) * a) - &(b * &d(a, v));
        let p = MultiPoly::var(g.vars(), "p")?;
        let raw = match solved {
            "y" => PlanarForm::new("x", "p", &-&w("x") - &(&p * &(a * a)), -&w("p"))?,
            "x" => PlanarForm::new("y", "p", &(a * a) + &(&p * &w("y")), &p * &w("p"))?,
            _ => PlanarForm::new("x", "y", b.clone(), a.clone())?,
        };
        let (form, removed) = raw.saturate();
        return Ok(Restriction {
            component: g,
            solved: solved.to_string(),
            value,
            form,
            removed,
        });
    }
    Err(Error::NotAGraph(g.to_string()))
}

/// Zeros of a saturated planar form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLocus {
    pub generators: CurveSystem,
    /// `Res_U(a, b)` and `Res_V(a, b)`; both nonzero certify finiteness.
    pub res_u: MultiPoly,
    pub res_v: MultiPoly,
    /// Points `(U, V)`, when every coordinate is exact in `Q(i)`.
    pub points: Option<Vec<[GaussianRational; 2]>>,
}

impl SingularLocus {
    pub fn is_empty(&self) -> bool {
        self.res_u.is_constant()
            || self.res_v.is_constant()
            || self.points.as_ref().is_some_and(Vec::is_empty)
    }
}

fn eliminate(a: &MultiPoly, b: &MultiPoly, w: &str) -> Result<MultiPoly> {
    match resultant(a, b, w) {
        Ok(r) => Ok(r),
        // both free of w: coprime polynomials in the other variable never
        // vanish together
        Err(Error::BothDegreeZero(_)) => Ok(MultiPoly::one(a.vars())),
        Err(e) => Err(e),
    }
}

pub fn foliation_singular_locus(phi: &PlanarForm) -> Result<SingularLocus> {
    let (u, v) = phi.vars();
    let (a, b) = (phi.a(), phi.b());
    let g = gcd(a, b);
    if !g.is_constant() {
        return Err(Error::NotSaturated(g.to_string()));
    }
    let generators = CurveSystem::new(
        [a, b]
            .into_iter()
            .filter(|q| !q.is_zero())
            .cloned()
            .collect(),
    )?;
    if a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() {
        let one = MultiPoly::one(a.vars());
        return Ok(SingularLocus {
            generators,
            res_u: one.clone(),
            res_v: one,
            points: Some(Vec::new()),
        });
    }
    let res_u = eliminate(a, b, u)?;
    let res_v = eliminate(a, b, v)?;
    let points = enumerate_points(a, b, u, v, &res_u).ok();
    Ok(SingularLocus {
        generators,
        res_u,
        res_v,
        points,
    })
}

fn enumerate_points(
    a: &MultiPoly,
    b: &MultiPoly,
    u: &str,
    v: &str,
    res_u: &MultiPoly,
) -> Result<Vec<[GaussianRational; 2]>> {
    let mut out = Vec::new();
    if res_u.is_constant() {
        return Ok(out);
    }
    for v0 in distinct_roots(res_u, v)? {
        let a0 = a.evaluate(&[(v, v0.clone())])?;
        let b0 = b.evaluate(&[(v, v0.clone())])?;
        let h = gcd(&a0, &b0);
        if h.is_constant() {
            continue;
        }
        for u0 in distinct_roots(&h, u)? {
            out.push([u0, v0.clone()]);
        }
    }
    Ok(out)
}

/// Chart-local dicriticality of `W` along one of its components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dicritical {
    pub dicritical: bool,
    pub restriction: Restriction,
    pub locus: SingularLocus,
}

pub fn dicritical_on_component(s: &SurfaceF, component: &MultiPoly) -> Result<Dicritical> {
    let restriction = planar_restriction(s, component)?;
    let locus = foliation_singular_locus(&restriction.form)?;
    let dicritical = if locus.res_u.is_constant() || locus.res_v.is_constant() {
        true
    } else {
        match &locus.points {
            Some(p) => p.is_empty(),
            None => {
                return Err(Error::NotRepresentable(format!(
                    "singular points of {} over Res = {}",
                    restriction.form, locus.res_u
                )))
            }
        }
    };
    Ok(Dicritical {
        dicritical,
        restriction,
        locus,
    })
}

/// Tangency data for `{g = 0}` against `a dU + b dV`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantVerdict {
    pub invariant: bool,
    /// `b g_U - a g_V`.
    pub tangency: MultiPoly,
    /// `tangency / g` when invariant.
    pub cofactor: Option<MultiPoly>,
}

/// Exact test of `b g_U - a g_V` in the ideal `(g)`.
pub fn invariant_curve_check(phi: &PlanarForm, g: &MultiPoly) -> Result<InvariantVerdict> {
    let (u, v) = phi.vars();
    let g = g.in_vars(&[u, v])?;
    if g.is_zero() {
        return Err(Error::ZeroInput("curve polynomial is zero".into()));
    }
    if g.is_constant() {
        return Err(Error::ConstantInput(format!("curve {g}")));
    }
    if radical(&g) != g.monic() {
        return Err(Error::Precondition(format!("{g} is not squarefree")));
    }
    let tangency = &(phi.b() * &g.derivative(u)?) - &(phi.a() * &g.derivative(v)?);
    let cofactor = tangency.div_exact(&g);
    Ok(InvariantVerdict {
        invariant: cofactor.is_some(),
        tangency,
        cofactor,
    })
}

/// One criminant component seen in the chart of one web component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInvariance {
    pub criminant_component: CurveSystem,
    pub web_component: MultiPoly,
    /// Reduced curve cut out in the chart; `None` when the component meets
    /// the chart in finitely many points.
    pub chart_curve: Option<MultiPoly>,
    pub verdict: Option<InvariantVerdict>,
}

/// Invariance of every criminant component under the foliation of every
/// web component. `components` is a factorization of `F`; empty means `F`
/// is taken as irreducible.
pub fn criminant_invariance(
    s: &SurfaceF,
    components: &[MultiPoly],
) -> Result<Vec<ComponentInvariance>> {
    let comps = if components.is_empty() {
        vec![s.poly().clone()]
    } else {
        s.check_factorization(components)?;
        components.to_vec()
    };
    let crim = criminant(s)?;
    let mut out = Vec::new();
    for web_component in &comps {
        let r = planar_restriction(s, web_component)?;
        let (cu, cv) = r.form.vars();
        for cc in &crim.components {
            let mut numerators = Vec::new();
            for gen in cc.generators() {
                let q = substitute(gen, &[(r.solved.as_str(), r.value.clone())])?;
                if !q.is_zero() {
                    numerators.push(q.numer().in_vars(&[cu, cv])?);
                }
            }
            let h = gcd_all(&numerators).map(|h| radical(&h));
            let (chart_curve, verdict) = match h {
                Some(h) if !h.is_constant() => {
                    let verdict = invariant_curve_check(&r.form, &h)?;
                    (Some(h), Some(verdict))
                }
                _ => (None, None),
            };
            out.push(ComponentInvariance {
                criminant_component: cc.clone(),
                web_component: web_component.clone(),
                chart_curve,
                verdict,
            });
        }
    }
    Ok(out)
}
