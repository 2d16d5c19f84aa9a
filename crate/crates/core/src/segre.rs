//! Real algebraic hypersurfaces of `C^2` stored through their
//! complexification `F(x, y, cx, cy)`, where `cx, cy` stand for the
//! conjugate coordinates. Segre varieties, Segre families and tangency of
//! webs to Levi-flat pieces `Re h = 0`, `Im h = 0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::foliation::{eliminate_t, Elimination};
use crate::poly::{parse_poly, GaussianRational, Monomial, MultiPoly};
use crate::web::SurfaceF;

pub const HERMITIAN_VARS: [&str; 4] = ["x", "y", "cx", "cy"];

/// Polynomial in `(x, y, cx, cy)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianPoly {
    f: MultiPoly,
}

impl HermitianPoly {
    pub fn new(f: MultiPoly) -> Result<Self> {
        Ok(Self {
            f: f.in_vars(&HERMITIAN_VARS)?,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_poly(text, &HERMITIAN_VARS)?)
    }

    /// Like [`new`](Self::new) but rejects polynomials failing the reality
    /// condition.
    pub fn real(f: MultiPoly) -> Result<Self> {
        let h = Self::new(f)?;
        let v = reality_check(&h);
        match v.offending {
            None => Ok(h),
            Some(m) => Err(Error::Precondition(format!(
                "{} is not real: coefficient of {m} breaks the conjugation symmetry",
                h.f
            ))),
        }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.f
    }
}

impl fmt::Display for HermitianPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeviKind {
    Re,
    Im,
}

impl FromStr for LeviKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "re" => Ok(LeviKind::Re),
            "im" => Ok(LeviKind::Im),
            _ => Err(Error::Precondition(format!(
                "kind must be re or im, got `{s}`"
            ))),
        }
    }
}

impl fmt::Display for LeviKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LeviKind::Re => "Re",
            LeviKind::Im => "Im",
        })
    }
}

/// `h(cx, cy)` with conjugated coefficients: the complexified `conj(h)`.
fn conjugate_holomorphic(h: &MultiPoly) -> Result<MultiPoly> {
    let h = h.in_vars(&["x", "y"])?;
    let mut out = MultiPoly::zero(&crate::poly::vars_of(&HERMITIAN_VARS));
    for (m, c) in h.terms() {
        let mono = MultiPoly::monomial(out.vars(), vec![0, 0, m.0[0], m.0[1]]);
        out = &out + &mono.scale(&c.conj());
    }
    Ok(out)
}

/// `Re h = (h + conj h)/2` or `Im h = (h - conj h)/(2i)` for holomorphic `h`.
pub fn levi_piece(h: &MultiPoly, kind: LeviKind) -> Result<HermitianPoly> {
    let hc = conjugate_holomorphic(h)?;
    let h = h.in_vars(&HERMITIAN_VARS)?;
    let f = match kind {
        LeviKind::Re => (&h + &hc).scale(&GaussianRational::from_ratio(1, 2)),
        LeviKind::Im => {
            let two_i = GaussianRational::from(2) * GaussianRational::i();
            (&h - &hc).scale(&two_i.inv().expect("nonzero"))
        }
    };
    HermitianPoly::new(f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealityVerdict {
    pub real: bool,
    /// A monomial whose coefficient is not the conjugate of its partner's.
    pub offending: Option<String>,
}

/// The reality condition: the coefficient of `z^m cz^n` is the conjugate of
/// the coefficient of `z^n cz^m`.
pub fn reality_check(f: &HermitianPoly) -> RealityVerdict {
    let offending = f.f.terms().find_map(|(m, c)| {
        let e = &m.0;
        let partner = Monomial(vec![e[2], e[3], e[0], e[1]]);
        if f.f.coeff(&partner) != c.conj() {
            Some(MultiPoly::monomial(f.f.vars(), e.clone()).to_string())
        } else {
            None
        }
    });
    RealityVerdict {
        real: offending.is_none(),
        offending,
    }
}

/// `Q_p = {F(z, conj p) = 0}`, as a polynomial in `(x, y)`.
pub fn segre_variety(f: &HermitianPoly, point: &[GaussianRational; 2]) -> MultiPoly {
    f.f.evaluate(&[("cx", point[0].conj()), ("cy", point[1].conj())])
        .expect("hermitian alphabet")
        .in_vars(&["x", "y"])
        .expect("conjugates eliminated")
}

/// A point is Segre degenerate when its Segre variety is the whole plane.
pub fn is_segre_degenerate(f: &HermitianPoly, point: &[GaussianRational; 2]) -> bool {
    segre_variety(f, point).is_zero()
}

/// `P(z, t) = F(z, conj(w(conj t)))` along `w(s) = c s + c0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreFamily {
    p: MultiPoly,
}

impl SegreFamily {
    pub fn new(
        f: &HermitianPoly,
        c: &[GaussianRational; 2],
        c0: &[GaussianRational; 2],
    ) -> Result<Self> {
        let vars = crate::poly::vars_of(&["x", "y", "cx", "cy", "t"]);
        let t = MultiPoly::var(&vars, "t")?;
        let line = |k: usize| &t.scale(&c[k].conj()) + &MultiPoly::constant(&vars, c0[k].conj());
        let p =
            f.f.substitute("cx", &line(0))?
                .substitute("cy", &line(1))?
                .in_vars(&["x", "y", "t"])?;
        Self::from_poly(p)
    }

    pub fn from_poly(p: MultiPoly) -> Result<Self> {
        let p = p.in_vars(&["x", "y", "t"])?;
        let d = p.degree_in("t");
        if d == 0 {
            return Err(Error::DegreeTooLow {
                var: "t".into(),
                degree: d,
                needed: 1,
            });
        }
        Ok(Self { p })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.p
    }
}

/// The web whose leaves are the members of the family.
pub fn eliminate_family(fam: &SegreFamily) -> Result<(SurfaceF, Elimination)> {
    let e = eliminate_t(fam.poly())?;
    if e.surface.degree_in("p") == 0 {
        return Err(Error::Precondition(format!(
            "elimination of {} leaves no slope equation",
            fam.poly()
        )));
    }
    Ok((SurfaceF::new(e.surface.clone())?, e))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyVerdict {
    pub tangent: bool,
    /// `sum_j a_j (-h_x)^j h_y^(d-j)`: the web evaluated on the direction
    /// of `dh = 0`.
    pub numerator: MultiPoly,
    /// A point of the plane where the numerator does not vanish.
    pub witness: Option<([GaussianRational; 2], GaussianRational)>,
}

fn leaf_numerator(s: &SurfaceF, h: &MultiPoly) -> Result<MultiPoly> {
    let h = h.in_vars(&["x", "y"])?;
    if h.is_constant() {
        return Err(Error::ConstantInput(format!("{h}")));
    }
    let hx = -h.derivative("x")?;
    let hy = h.derivative("y")?;
    let d = s.degree();
    let coeffs = s.poly().coeffs_in("p")?;
    let mut out = MultiPoly::zero(h.vars());
    for (j, a) in coeffs.iter().enumerate() {
        let a = a.in_vars(&["x", "y"])?;
        out = &out + &(&(&a * &hx.pow(j as u32)) * &hy.pow(d - j as u32));
    }
    Ok(out)
}

/// Whether the leaves of `dh = 0` (the Levi foliation of `Re h = 0` or
/// `Im h = 0`) are solutions of the web, decided by the identical vanishing
/// of the homogenized slope substitution `F(x, y, -h_x/h_y)`.
pub fn tangency_check(s: &SurfaceF, h: &MultiPoly, _kind: LeviKind) -> Result<TangencyVerdict> {
    let numerator = leaf_numerator(s, h)?;
    let witness = if numerator.is_zero() {
        None
    } else {
        let mut found = None;
        'search: for a in 0..6i64 {
            for b in 0..6i64 {
                let pt = [GaussianRational::from(a), GaussianRational::from(b - 2)];
                let val = numerator
                    .evaluate(&[("x", pt[0].clone()), ("y", pt[1].clone())])?
                    .constant_value()
                    .expect("fully evaluated");
                if !num_traits::Zero::is_zero(&val) {
                    found = Some((pt, val));
                    break 'search;
                }
            }
        }
        found
    };
    Ok(TangencyVerdict {
        tangent: numerator.is_zero(),
        numerator,
        witness,
    })
}

/// Whether the web is tangent to `dh = 0` along `{h = 0}` itself, that is,
/// whether the curve `h = 0` is a leaf: the slope numerator lies in `(h)`.
pub fn is_leaf(s: &SurfaceF, h: &MultiPoly) -> Result<bool> {
    let numerator = leaf_numerator(s, h)?;
    Ok(numerator.div_exact(&h.in_vars(&["x", "y"])?).is_some())
}
