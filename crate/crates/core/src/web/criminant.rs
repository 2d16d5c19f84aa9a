use std::fmt;

use super::form::{SurfaceF, SURFACE_VARS};
use crate::error::{Error, Result};
use crate::poly::{discriminant, radical, resultant, MultiPoly};

/// A system of polynomial equations; its locus is the common zero set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSystem {
    generators: Vec<MultiPoly>,
}

impl CurveSystem {
    pub fn new(generators: Vec<MultiPoly>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Precondition("curve system needs a generator".into()));
        }
        if generators.iter().any(MultiPoly::is_zero) {
            return Err(Error::ZeroInput("generator is identically zero".into()));
        }
        Ok(Self { generators })
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    /// True when some generator is a nonzero constant.
    pub fn is_empty_locus(&self) -> bool {
        self.generators.iter().any(MultiPoly::is_constant)
    }

    /// Same generators up to order and nonzero constant multiples.
    pub fn same_generators(&self, other: &CurveSystem) -> bool {
        let key = |s: &CurveSystem| {
            let mut v: Vec<String> = s.generators.iter().map(|g| g.monic().to_string()).collect();
            v.sort();
            v
        };
        key(self) == key(other)
    }
}

impl fmt::Display for CurveSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `{g, s - value}` after solving `F_p = 0` for the variable `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangular {
    pub solved: String,
    pub value: MultiPoly,
    pub system: CurveSystem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criminant {
    /// `{F, F_p}`.
    pub system: CurveSystem,
    pub triangular: Option<Triangular>,
    /// Pieces split off the triangular form along coordinate hyperplanes;
    /// without a triangular form, the system itself.
    pub components: Vec<CurveSystem>,
}

impl Criminant {
    pub fn is_empty_locus(&self) -> bool {
        self.components.is_empty()
    }
}

/// Variable of `F_p` with a nonzero constant linear coefficient, tried in
/// the order `y, x, p`.
fn linear_solve(fp: &MultiPoly) -> Option<(String, MultiPoly)> {
    for s in ["y", "x", "p"] {
        let coeffs = fp.coeffs_in(s).ok()?;
        if coeffs.len() != 2 {
            continue;
        }
        if let Some(c) = coeffs[1].constant_value() {
            let inv = c.inv().expect("nonzero leading coefficient");
            return Some((s.to_string(), (-&coeffs[0]).scale(&inv)));
        }
    }
    None
}

/// The critical set `{F = F_p = 0}` on the surface.
pub fn criminant(s: &SurfaceF) -> Result<Criminant> {
    let f = s.poly();
    if f.degree_in("p") == 0 {
        return Err(Error::DegreeTooLow {
            var: "p".into(),
            degree: 0,
            needed: 1,
        });
    }
    let fp = f.derivative("p")?;
    let system = CurveSystem::new(vec![f.clone(), fp.clone()])?;
    if fp.is_constant() {
        return Ok(Criminant {
            system,
            triangular: None,
            components: Vec::new(),
        });
    }
    let Some((solved, value)) = linear_solve(&fp) else {
        return Ok(Criminant {
            components: vec![system.clone()],
            system,
            triangular: None,
        });
    };
    let var = MultiPoly::var(f.vars(), &solved)?;
    let eq = &var - &value;
    let g = f.substitute(&solved, &value)?;
    if g.is_zero() {
        let tri = CurveSystem::new(vec![eq.clone()])?;
        return Ok(Criminant {
            system,
            triangular: Some(Triangular {
                solved,
                value,
                system: tri.clone(),
            }),
            components: vec![tri],
        });
    }
    let g = g.monic();
    let triangular = Triangular {
        solved: solved.clone(),
        value: value.clone(),
        system: CurveSystem::new(vec![g.clone(), eq.clone()])?,
    };
    let mut components = Vec::new();
    if !g.is_constant() {
        let r = radical(&g);
        let content = r.monomial_content();
        let mut cofactor = r.clone();
        for (idx, &k) in content.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let name = r.vars()[idx].clone();
            let v = MultiPoly::var(r.vars(), &name)?;
            cofactor = cofactor.div_exact(&v).expect("monomial content divides");
            let on_plane = eq.substitute(&name, &MultiPoly::zero(r.vars()))?.monic();
            components.push(CurveSystem::new(vec![v, on_plane])?);
        }
        if !cofactor.is_constant() {
            components.push(CurveSystem::new(vec![cofactor.monic(), eq.clone()])?);
        }
    }
    Ok(Criminant {
        system,
        triangular: Some(triangular),
        components,
    })
}

/// Discriminant data of a web, all in `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discriminant {
    /// Radical of `disc_p F = Res_p(F, F_p) / lc_p F` up to sign: the caustic.
    pub caustic: MultiPoly,
    /// Radical of `Res_p(F, F_p)`.
    pub resultant: MultiPoly,
    /// Radical of the leading coefficient `lc_p F`, where branches escape
    /// to `p = infinity` (vertical directions).
    pub leading_factor: MultiPoly,
}

pub fn discriminant_curve(s: &SurfaceF) -> Result<Discriminant> {
    let f = s.poly();
    let d = f.degree_in("p");
    if d == 0 {
        return Err(Error::DegreeTooLow {
            var: "p".into(),
            degree: 0,
            needed: 1,
        });
    }
    let plane = |q: MultiPoly| q.in_vars(&["x", "y"]).expect("p eliminated");
    let fp = f.derivative("p")?;
    let res = resultant(f, &fp, "p")?;
    let lc = f.coeffs_in("p")?.pop().expect("degree >= 1");
    let caustic = if d == 1 {
        MultiPoly::one(f.vars())
    } else {
        radical(&discriminant(f, "p")?)
    };
    Ok(Discriminant {
        caustic: plane(caustic),
        resultant: plane(radical(&res)),
        leading_factor: plane(radical(&lc)),
    })
}

/// The vector field `(F_p, p F_p, -(F_x + p F_y))` on `(x, y, p)`, tangent
/// to `W` and to the contact planes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactField {
    pub components: [MultiPoly; 3],
}

impl ContactField {
    /// `<dF, v>`; vanishes identically for the field of `F`.
    pub fn df_pairing(&self, f: &MultiPoly) -> Result<MultiPoly> {
        let f = f.in_vars(&SURFACE_VARS)?;
        let [a, b, c] = &self.components;
        Ok(&(&(&f.derivative("x")? * a) + &(&f.derivative("y")? * b)) + &(&f.derivative("p")? * c))
    }

    /// `<dy - p dx, v>`.
    pub fn contact_pairing(&self) -> MultiPoly {
        let [a, b, _] = &self.components;
        let p = MultiPoly::var(a.vars(), "p").expect("surface alphabet");
        b - &(&p * a)
    }
}

pub fn contact_field(s: &SurfaceF) -> ContactField {
    let f = s.poly();
    let d = |v: &str| f.derivative(v).expect("surface alphabet");
    let p = MultiPoly::var(f.vars(), "p").expect("surface alphabet");
    let fp = d("p");
    let lift = &p * &fp;
    let vertical = -(&d("x") + &(&p * &d("y")));
    ContactField {
        components: [fp, lift, vertical],
    }
}
