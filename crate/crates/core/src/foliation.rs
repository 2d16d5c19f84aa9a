//! Checks on foliations and webs: first integrals, Camacho-Sad indices by
//! residues, index sums along an invariant line, and multivalued first
//! integrals of webs.

use crate::error::{Error, Result};
use crate::poly::{
    distinct_roots, residue_at, resultant, squarefree_part, GaussianRational, MultiPoly,
    RationalFunction,
};
use crate::web::{PlanarForm, SurfaceF};

/// Outcome of `df ^ phi = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstIntegralVerdict {
    pub holds: bool,
    /// Numerator of `f_U b - f_V a`; zero exactly when `f` is a first integral.
    pub numerator: MultiPoly,
}

pub fn first_integral_check(
    f: &RationalFunction,
    phi: &PlanarForm,
) -> Result<FirstIntegralVerdict> {
    let (u, v) = phi.vars();
    let f = RationalFunction::new(f.numer().in_vars(&[u, v])?, f.denom().in_vars(&[u, v])?)?;
    if f.is_constant() {
        return Err(Error::ConstantInput(format!(
            "first integral candidate {f}"
        )));
    }
    let b = RationalFunction::from_poly(phi.b().clone());
    let a = RationalFunction::from_poly(phi.a().clone());
    let w = f.derivative(u)?.mul(&b).sub(&f.derivative(v)?.mul(&a));
    Ok(FirstIntegralVerdict {
        holds: w.is_zero(),
        numerator: w.numer().clone(),
    })
}

/// Camacho-Sad index of `{V = 0}` at `U = x0` for `a dU + b dV`:
/// `-res_{U = x0} (a/V)(U, 0) / b(U, 0)`.
pub fn cs_index(phi: &PlanarForm, x0: &GaussianRational) -> Result<GaussianRational> {
    let (u, v) = phi.vars();
    let vpoly = MultiPoly::var(phi.a().vars(), v)?;
    let k = phi
        .a()
        .div_exact(&vpoly)
        .ok_or_else(|| Error::NotInvariant(format!("{v} = 0 for {phi}")))?;
    let zero = GaussianRational::from(0);
    let k0 = k.evaluate(&[(v, zero.clone())])?;
    let b0 = phi.b().evaluate(&[(v, zero)])?;
    if b0.is_zero() {
        return Err(Error::Precondition(format!(
            "coefficient of d{v} vanishes on {v} = 0"
        )));
    }
    let r = RationalFunction::new(k0, b0)?;
    Ok(-residue_at(&r, u, x0)?)
}

/// Index of a singular point on `Y = 0`, tagged with its chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineIndex {
    /// Homogeneous coordinates `[X : 0 : Z]`.
    pub point: [GaussianRational; 2],
    pub index: GaussianRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineIndexSum {
    pub indices: Vec<LineIndex>,
    pub sum: GaussianRational,
}

/// Homogeneous 1-form `A dX + B dY + C dZ`: its three coefficients.
fn hom_coeffs(omega: &MultiPoly) -> Result<[MultiPoly; 3]> {
    let omega = omega.in_vars(&["X", "Y", "Z", "dX", "dY", "dZ"])?;
    let mut out: [MultiPoly; 3] = std::array::from_fn(|_| MultiPoly::zero(omega.vars()));
    for (m, c) in omega.terms() {
        let e = &m.0;
        if e[3] + e[4] + e[5] != 1 {
            return Err(Error::NotBihomogeneous(format!("{omega} is not a 1-form")));
        }
        let slot = (3..6).find(|&i| e[i] == 1).expect("one differential") - 3;
        let mut base = e.clone();
        base[slot + 3] = 0;
        let term = MultiPoly::monomial(omega.vars(), base).scale(c);
        out[slot] = &out[slot] + &term;
    }
    let degs: Vec<u32> = out
        .iter()
        .flat_map(|q| q.terms().map(|(m, _)| m.degree()))
        .collect();
    if degs.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::NotBihomogeneous(format!(
            "coefficients of {omega} have mixed degrees"
        )));
    }
    Ok(out.map(|q| q.in_vars(&["X", "Y", "Z"]).expect("differential-free")))
}

fn chart(q: &MultiPoly, one: &str, rename: &[(&str, &str)], u: &str, v: &str) -> Result<MultiPoly> {
    let mut out = q.evaluate(&[(one, GaussianRational::from(1))])?;
    for (from, to) in rename {
        let target = MultiPoly::var(&crate::poly::vars_of(&[u, v]), to)?;
        out = out.substitute(from, &target)?;
    }
    out.in_vars(&[u, v])
}

/// Sum of Camacho-Sad indices of `{Y = 0}` over its singular points, for a
/// foliation of the projective plane given by a homogeneous 1-form.
///
/// Points with `Z != 0` are read in the chart `(x, y) = (X/Z, Y/Z)`; the
/// remaining point `[1 : 0 : 0]` in the chart `(z, y) = (Z/X, Y/X)`.
pub fn cs_sum_line(omega: &MultiPoly) -> Result<LineIndexSum> {
    let [a, b, c] = hom_coeffs(omega)?;
    let x = MultiPoly::var(a.vars(), "X")?;
    let y = MultiPoly::var(a.vars(), "Y")?;
    let z = MultiPoly::var(a.vars(), "Z")?;
    let euler = &(&(&a * &x) + &(&b * &y)) + &(&c * &z);
    if !euler.is_zero() {
        return Err(Error::Precondition(format!(
            "form does not descend to the plane: contraction {euler}"
        )));
    }
    let affine = PlanarForm::new(
        "x",
        "y",
        chart(&a, "Z", &[("X", "x"), ("Y", "y")], "x", "y")?,
        chart(&b, "Z", &[("X", "x"), ("Y", "y")], "x", "y")?,
    )?
    .saturate()
    .0;
    let at_infinity = PlanarForm::new(
        "z",
        "y",
        chart(&c, "X", &[("Z", "z"), ("Y", "y")], "z", "y")?,
        chart(&b, "X", &[("Z", "z"), ("Y", "y")], "z", "y")?,
    )?
    .saturate()
    .0;
    let zero = GaussianRational::from(0);
    let one = GaussianRational::from(1);
    let mut indices = Vec::new();
    let line = affine.b().evaluate(&[("y", zero.clone())])?;
    if line.is_zero() {
        return Err(Error::Precondition("Y = 0 lies in the singular set".into()));
    }
    for x0 in distinct_roots(&line, "x")? {
        let index = cs_index(&affine, &x0)?;
        indices.push(LineIndex {
            point: [x0, one.clone()],
            index,
        });
    }
    // [1 : 0 : 0] is singular iff the dy coefficient vanishes there
    let corner = at_infinity
        .b()
        .evaluate(&[("y", zero.clone()), ("z", zero.clone())])?;
    if corner.is_zero() {
        let index = cs_index(&at_infinity, &zero)?;
        indices.push(LineIndex {
            point: [one, zero],
            index,
        });
    }
    let sum = indices
        .iter()
        .fold(GaussianRational::from(0), |acc, i| &acc + &i.index);
    Ok(LineIndexSum { indices, sum })
}

/// A family `P(x, y, t)` whose level sets `{P(., t0) = 0}` should be leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebIntegralCandidate {
    p: MultiPoly,
}

impl WebIntegralCandidate {
    pub fn new(p: MultiPoly) -> Result<Self> {
        let p = p.in_vars(&["x", "y", "t"])?;
        let d = p.degree_in("t");
        if d == 0 {
            return Err(Error::DegreeTooLow {
                var: "t".into(),
                degree: 0,
                needed: 1,
            });
        }
        let g = crate::poly::gcd(&p, &p.derivative("t")?);
        if g.degree_in("t") > 0 {
            return Err(Error::Precondition(format!(
                "{p} is not squarefree in t: repeated factor {g}"
            )));
        }
        Ok(Self { p })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.p
    }
}

/// Elimination of `t` from `P = 0, P_x + p P_y = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    /// `Res_t(P, P_x + p P_y)` in `(x, y, p)`.
    pub resultant: MultiPoly,
    /// Monic squarefree part in `p`.
    pub surface: MultiPoly,
    /// `resultant / surface`: multiplicities and `p`-free factors.
    pub removed: MultiPoly,
}

pub fn eliminate_t(p: &MultiPoly) -> Result<Elimination> {
    let p = p.in_vars(&["x", "y", "t", "p"])?;
    let slope = MultiPoly::var(p.vars(), "p")?;
    let tangent = &p.derivative("x")? + &(&slope * &p.derivative("y")?);
    let r = resultant(&p, &tangent, "t")?;
    if r.is_zero() {
        return Err(Error::ZeroResultant(format!("Res_t({p}, {tangent})")));
    }
    let r = r.in_vars(&["x", "y", "p"])?;
    let surface = squarefree_part(&r, "p").monic();
    let removed = r.div_exact(&surface).expect("squarefree part divides");
    Ok(Elimination {
        resultant: r,
        surface,
        removed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebIntegralVerdict {
    pub holds: bool,
    pub elimination: Elimination,
    /// `E / prod(components)` when every component divides `E`.
    pub extraneous: Option<MultiPoly>,
    /// Components of `F` not dividing `E`.
    pub missing: Vec<MultiPoly>,
}

/// Whether the leaves of `P` account for every component of the web `F`.
/// `components` is a factorization of `F`; empty means `F` itself.
pub fn web_first_integral_check(
    cand: &WebIntegralCandidate,
    s: &SurfaceF,
    components: &[MultiPoly],
) -> Result<WebIntegralVerdict> {
    let comps = if components.is_empty() {
        vec![s.poly().clone()]
    } else {
        s.check_factorization(components)?;
        components.to_vec()
    };
    let elimination = eliminate_t(cand.poly())?;
    let e = &elimination.surface;
    let missing: Vec<MultiPoly> = comps
        .iter()
        .filter(|g| e.div_exact(g).is_none())
        .cloned()
        .collect();
    let extraneous = if missing.is_empty() {
        comps.iter().try_fold(e.clone(), |acc, g| acc.div_exact(g))
    } else {
        None
    };
    Ok(WebIntegralVerdict {
        holds: missing.is_empty() && extraneous.is_some(),
        elimination,
        extraneous,
        missing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, parse_rational};

    fn form(s: &str, u: &str, v: &str) -> PlanarForm {
        PlanarForm::parse(s, u, v).unwrap()
    }

    fn hom(s: &str) -> MultiPoly {
        parse_poly(s, &["X", "Y", "Z", "dX", "dY", "dZ"]).unwrap()
    }

    #[test]
    fn first_integrals() {
        let alpha = form("p*(p^2+1)*dx - x*dp", "x", "p");
        let f = parse_rational("x^2*(p^2+1)/p^2", &["x", "p"]).unwrap();
        assert!(first_integral_check(&f, &alpha).unwrap().holds);
        let f = parse_rational("x/y", &["x", "y"]).unwrap();
        assert!(
            first_integral_check(&f, &form("-y*dx + x*dy", "x", "y"))
                .unwrap()
                .holds
        );
        let f = parse_rational("y", &["x", "y"]).unwrap();
        assert!(
            first_integral_check(&f, &form("dy", "x", "y"))
                .unwrap()
                .holds
        );
        let f = parse_rational("x", &["x", "y"]).unwrap();
        assert!(
            !first_integral_check(&f, &form("dy", "x", "y"))
                .unwrap()
                .holds
        );
        let c = parse_rational("3", &["x", "y"]).unwrap();
        assert!(first_integral_check(&c, &form("dy", "x", "y")).is_err());
    }

    #[test]
    fn cs_radial_and_linear() {
        let zero = GaussianRational::from(0);
        assert_eq!(
            cs_index(&form("-y*dx + x*dy", "x", "y"), &zero).unwrap(),
            1.into()
        );
        assert_eq!(
            cs_index(&form("3/7*y*dx - x*dy", "x", "y"), &zero).unwrap(),
            GaussianRational::from_ratio(3, 7)
        );
        assert_eq!(cs_index(&form("dy", "x", "y"), &zero).unwrap(), 0.into());
        assert!(matches!(
            cs_index(&form("x*dx + dy", "x", "y"), &zero),
            Err(Error::NotInvariant(_))
        ));
    }

    #[test]
    fn cs_sum_pencil_and_family() {
        let s = cs_sum_line(&hom("X*dY - Y*dX")).unwrap();
        assert_eq!(s.sum, 1.into());
        let s = cs_sum_line(&hom("2/5*Y*Z*dX - X*Z*dY + 3/5*X*Y*dZ")).unwrap();
        assert_eq!(s.sum, 1.into());
        assert_eq!(s.indices.len(), 2);
        assert!(cs_sum_line(&hom("Y*dX - X*dY + dZ")).is_err());
        // Y = 0 not invariant: X dZ - Z dX
        assert!(cs_sum_line(&hom("X*dZ - Z*dX")).is_err());
    }

    #[test]
    fn web_integral_second_order_example() {
        let p = WebIntegralCandidate::new(parse_poly("t^2 + t*y + x", &["x", "y", "t"]).unwrap())
            .unwrap();
        let s = SurfaceF::new(parse_poly("x*p^2 - y*p + 1", &["x", "y", "p"]).unwrap()).unwrap();
        let v = web_first_integral_check(&p, &s, &[]).unwrap();
        assert!(v.holds);
        assert_eq!(v.elimination.surface, *s.poly());
    }

    #[test]
    fn web_integral_superposition() {
        let xyp = |s: &str| parse_poly(s, &["x", "y", "p"]).unwrap();
        let p = WebIntegralCandidate::new(
            parse_poly("(x^2 + y^2 - t)*(y - t)", &["x", "y", "t"]).unwrap(),
        )
        .unwrap();
        let s = SurfaceF::new(xyp("p*(y*p + x)")).unwrap();
        let v = web_first_integral_check(&p, &s, &[xyp("p"), xyp("y*p + x")]).unwrap();
        assert!(v.holds);
        assert!(!v.elimination.removed.is_constant());
        assert_eq!(
            &v.elimination.surface * &v.elimination.removed,
            v.elimination.resultant
        );
    }

    #[test]
    fn web_integral_wrong_direction() {
        let p = WebIntegralCandidate::new(parse_poly("t - x", &["x", "y", "t"]).unwrap()).unwrap();
        let s = SurfaceF::new(parse_poly("p", &["x", "y", "p"]).unwrap()).unwrap();
        let v = web_first_integral_check(&p, &s, &[]).unwrap();
        assert!(!v.holds);
        assert_eq!(v.missing.len(), 1);
    }

    #[test]
    fn candidate_validation() {
        let xyt = |s: &str| parse_poly(s, &["x", "y", "t"]).unwrap();
        assert!(WebIntegralCandidate::new(xyt("x + y")).is_err());
        assert!(WebIntegralCandidate::new(xyt("(t - x)^2")).is_err());
    }
}
