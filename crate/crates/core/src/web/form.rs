use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{gcd, gcd_all, parse_poly, MultiPoly, Parsed};

pub const FORM_VARS: [&str; 4] = ["x", "y", "dx", "dy"];
pub const SURFACE_VARS: [&str; 3] = ["x", "y", "p"];

/// A `d`-symmetric 1-form `sum_j a_j(x, y) dx^(d-j) dy^j` satisfying the
/// germ conditions: no common factor among the `a_j`, and squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebForm {
    coeffs: Vec<MultiPoly>,
}

/// Implicit surface `F(x, y, p) = sum_j a_j p^j` of a web, `p = dy/dx`.
///
/// `degree` is the web degree `d`; `deg_p F` is smaller when `dx` divides
/// the form (some branch is vertical in this chart).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceF {
    f: MultiPoly,
    degree: u32,
}

/// What [`normalize_web`] removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationReport {
    pub content: MultiPoly,
    pub repeated: MultiPoly,
    pub degree_before: u32,
    pub degree_after: u32,
}

impl NormalizationReport {
    pub fn changed(&self) -> bool {
        !self.content.is_constant() || !self.repeated.is_constant()
    }
}

/// Splits a form homogeneous in `(dx, dy)` into `(d, [a_0, ..., a_d])`.
pub fn symmetric_coeffs(omega: &MultiPoly) -> Result<(u32, Vec<MultiPoly>)> {
    let omega = omega.in_vars(&FORM_VARS)?;
    if omega.is_zero() {
        return Err(Error::ZeroInput(
            "symmetric form is identically zero".into(),
        ));
    }
    let mut degree = None;
    for (m, _) in omega.terms() {
        let k = m.0[2] + m.0[3];
        match degree {
            None => degree = Some(k),
            Some(d) if d != k => {
                return Err(Error::Precondition(format!(
                    "form {omega} is not homogeneous in dx, dy"
                )))
            }
            _ => {}
        }
    }
    let d = degree.expect("nonzero");
    let mut coeffs = vec![MultiPoly::zero(omega.vars()); d as usize + 1];
    for (m, c) in omega.terms() {
        let j = m.0[3] as usize;
        let mono = MultiPoly::monomial(omega.vars(), vec![m.0[0], m.0[1], 0, 0]).scale(c);
        coeffs[j] = &coeffs[j] + &mono;
    }
    let coeffs = coeffs
        .into_iter()
        .map(|c| c.in_vars(&["x", "y"]).expect("differential-free"))
        .collect();
    Ok((d, coeffs))
}

fn form_from_coeffs(coeffs: &[MultiPoly]) -> MultiPoly {
    let d = coeffs.len() as u32 - 1;
    let dx = parse_poly("dx", &FORM_VARS).expect("static");
    let dy = parse_poly("dy", &FORM_VARS).expect("static");
    coeffs
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(dx.vars()), |acc, (j, a)| {
            &acc + &(&(a * &dx.pow(d - j as u32)) * &dy.pow(j as u32))
        })
}

/// `Omega / gcd(Omega, dOmega/ddx, dOmega/ddy)`: drops repeated factors
/// involving the differentials. Euler's identity rules out a factor
/// dividing both partials, so multiplicities drop by exactly one.
fn repeated_part(omega: &MultiPoly) -> MultiPoly {
    let a = omega.derivative("dx").expect("form alphabet");
    let b = omega.derivative("dy").expect("form alphabet");
    gcd(&gcd(omega, &a), &b)
}

/// Removes the common content of the coefficients, then repeated factors.
pub fn normalize_web(omega: &MultiPoly) -> Result<(WebForm, NormalizationReport)> {
    let (d, coeffs) = symmetric_coeffs(omega)?;
    let content = gcd_all(coeffs.iter().filter(|c| !c.is_zero())).expect("nonzero form");
    let coeffs: Vec<MultiPoly> = coeffs
        .iter()
        .map(|c| c.div_exact(&content).expect("content divides"))
        .collect();
    let reduced = form_from_coeffs(&coeffs);
    let repeated = repeated_part(&reduced);
    let reduced = reduced.div_exact(&repeated).expect("gcd divides");
    let (d_after, coeffs) = symmetric_coeffs(&reduced)?;
    let report = NormalizationReport {
        content: content.in_vars(&["x", "y"]).expect("coefficient alphabet"),
        repeated: repeated.in_vars(&FORM_VARS).expect("form alphabet"),
        degree_before: d,
        degree_after: d_after,
    };
    Ok((WebForm { coeffs }, report))
}

impl WebForm {
    /// Validates the germ conditions; the error names the offending factor.
    pub fn new(coeffs: Vec<MultiPoly>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().all(MultiPoly::is_zero) {
            return Err(Error::ZeroInput("all coefficients vanish".into()));
        }
        let coeffs: Vec<MultiPoly> = coeffs
            .iter()
            .map(|c| c.in_vars(&["x", "y"]))
            .collect::<Result<_>>()?;
        let content = gcd_all(coeffs.iter().filter(|c| !c.is_zero())).expect("nonzero");
        if !content.is_constant() {
            return Err(Error::InvalidWeb {
                reason: "coefficients share a common factor".into(),
                factor: content.to_string(),
            });
        }
        let omega = form_from_coeffs(&coeffs);
        let repeated = repeated_part(&omega);
        if !repeated.is_constant() {
            return Err(Error::InvalidWeb {
                reason: "form is not squarefree".into(),
                factor: repeated.to_string(),
            });
        }
        Ok(Self { coeffs })
    }

    /// Reads a symmetric form in `(x, y, dx, dy)` without normalizing it.
    pub fn from_form(omega: &MultiPoly) -> Result<Self> {
        let (_, coeffs) = symmetric_coeffs(omega)?;
        Self::new(coeffs)
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    /// `a_j`, the coefficient of `dx^(d-j) dy^j`.
    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// The form as a polynomial in `(x, y, dx, dy)`.
    pub fn to_poly(&self) -> MultiPoly {
        form_from_coeffs(&self.coeffs)
    }

    /// Same web: equal up to a nonzero constant.
    pub fn same_web(&self, other: &WebForm) -> bool {
        self.to_poly().monic() == other.to_poly().monic()
    }
}

impl fmt::Display for WebForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// `dx -> 1, dy -> p`.
pub fn web_to_surface(omega: &WebForm) -> SurfaceF {
    let p = MultiPoly::var(&crate::poly::vars_of(&SURFACE_VARS), "p").expect("static");
    let f = omega
        .coeffs
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(p.vars()), |acc, (j, a)| {
            &acc + &(a * &p.pow(j as u32))
        });
    SurfaceF {
        f: f.in_vars(&SURFACE_VARS).expect("surface alphabet"),
        degree: omega.degree(),
    }
}

/// Reads the coefficients of `p^j` back into a symmetric form of degree `d`.
pub fn surface_to_web(s: &SurfaceF) -> WebForm {
    let mut coeffs =
        s.f.coeffs_in("p")
            .expect("surface alphabet")
            .into_iter()
            .map(|c| c.in_vars(&["x", "y"]).expect("p-free coefficient"))
            .collect::<Vec<_>>();
    coeffs.resize(
        s.degree as usize + 1,
        MultiPoly::zero(&crate::poly::vars_of(&["x", "y"])),
    );
    WebForm { coeffs }
}

impl SurfaceF {
    /// Validates `F`: nonzero, no factor free of `p`, squarefree in `p`.
    pub fn new(f: MultiPoly) -> Result<Self> {
        let f = f.in_vars(&SURFACE_VARS)?;
        if f.is_zero() {
            return Err(Error::ZeroInput("surface polynomial is zero".into()));
        }
        let degree = f.degree_in("p");
        let coeffs = f.coeffs_in("p")?;
        let content = gcd_all(coeffs.iter().filter(|c| !c.is_zero())).expect("nonzero");
        if !content.is_constant() {
            return Err(Error::InvalidWeb {
                reason: "F has a factor independent of p".into(),
                factor: content.to_string(),
            });
        }
        if degree > 0 {
            let g = gcd(&f, &f.derivative("p")?);
            if !g.is_constant() {
                return Err(Error::InvalidWeb {
                    reason: "F is not squarefree in p".into(),
                    factor: g.to_string(),
                });
            }
        }
        Ok(Self { f, degree })
    }

    /// Normalizes arbitrary `F(x, y, p)` into a web surface.
    pub fn normalized(f: &MultiPoly) -> Result<(Self, NormalizationReport)> {
        let f = f.in_vars(&SURFACE_VARS)?;
        if f.is_zero() {
            return Err(Error::ZeroInput("surface polynomial is zero".into()));
        }
        let coeffs = f
            .coeffs_in("p")?
            .into_iter()
            .map(|c| c.in_vars(&["x", "y"]))
            .collect::<Result<Vec<_>>>()?;
        let (w, report) = normalize_web(&form_from_coeffs(&coeffs))?;
        Ok((web_to_surface(&w), report))
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `F` made monic in graded-lex order.
    pub fn monic(&self) -> Self {
        Self {
            f: self.f.monic(),
            degree: self.degree,
        }
    }

    /// Same surface up to a nonzero constant.
    pub fn same_surface(&self, other: &SurfaceF) -> bool {
        self.f.monic() == other.f.monic()
    }

    /// Checks a user-supplied factorization `F = c * prod(factors)`.
    pub fn check_factorization(&self, factors: &[MultiPoly]) -> Result<()> {
        let mut prod = MultiPoly::one(self.f.vars());
        for g in factors {
            if g.is_constant() {
                return Err(Error::Precondition(format!("factor {g} is constant")));
            }
            prod = &prod * g;
        }
        if prod.monic() != self.f.monic() {
            return Err(Error::Precondition(format!(
                "product of factors {prod} does not equal F = {}",
                self.f
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SurfaceF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f)
    }
}

/// Reads a web given either as a symmetric form in `(x, y, dx, dy)` or as
/// `F(x, y, p)`, and normalizes it.
pub fn parse_web(text: &str) -> Result<(SurfaceF, NormalizationReport)> {
    let parsed = crate::poly::parse_expr(text, &["x", "y", "dx", "dy", "p"])?;
    let poly = match parsed {
        Parsed::Poly(p) => p,
        Parsed::Rational(r) => return Err(Error::NotPolynomial(r.denom().to_string())),
    };
    let uses_diff = poly.uses("dx") || poly.uses("dy");
    if uses_diff && poly.uses("p") {
        return Err(Error::Precondition(
            "mixes differentials dx, dy with the slope p".into(),
        ));
    }
    if uses_diff {
        let (w, report) = normalize_web(&poly)?;
        Ok((web_to_surface(&w), report))
    } else {
        if poly.degree_in("p") == 0 {
            return Err(Error::ConstantInput(format!(
                "{poly} involves neither differentials nor p"
            )));
        }
        SurfaceF::normalized(&poly)
    }
}
