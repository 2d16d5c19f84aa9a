use std::fs;

use holoweb::foliation::{
    cs_index, cs_sum_line, first_integral_check, web_first_integral_check, WebIntegralCandidate,
};
use holoweb::poly::{
    parse_expr, parse_number, parse_poly, parse_rational, GaussianRational, MultiPoly, Parsed,
};
use holoweb::projective::{
    chart_transition, descends, dual_web, euler_contraction, hom_family_resultant,
    restrict_chart, web_degree, Chart, HomSymForm, PlaneCurve, CURVE_VARS, HOM_VARS,
};
use holoweb::segre::{
    eliminate_family, is_leaf, is_segre_degenerate, reality_check, segre_variety, tangency_check,
    HermitianPoly, LeviKind, SegreFamily,
};
use holoweb::web::{
    criminant, criminant_invariance, dicritical_on_component, discriminant_curve,
    foliation_singular_locus, normalize_web, parse_web, surface_to_web, web_to_surface,
    CurveSystem, NormalizationReport, PlanarForm, SurfaceF, FORM_VARS, SURFACE_VARS,
};
use serde_json::{json, Value};

use crate::cli::{Command, Input, PlanarArgs, WebArgs};
use crate::report::Report;
use crate::CliError;

const FAMILY_VARS: [&str; 3] = ["x", "y", "t"];
const HOM_FAMILY_VARS: [&str; 4] = ["X", "Y", "Z", "t"];
const WEB_VARS: [&str; 5] = ["x", "y", "dx", "dy", "p"];

type Out = Result<Report, CliError>;

fn read(input: &Input) -> Result<String, CliError> {
    match (&input.expr, &input.input) {
        (Some(e), _) => Ok(e.clone()),
        (None, Some(path)) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            }),
        (None, None) => Err(CliError::Usage("an input is required: -e <expr> or --input <path>".into())),
    }
}

fn poly(text: &str, alphabet: &[&str]) -> Result<MultiPoly, CliError> {
    Ok(parse_poly(text, alphabet)?)
}

fn polys(list: &[MultiPoly]) -> Value {
    list.iter().map(|p| Value::String(p.to_string())).collect()
}

fn system(s: &CurveSystem) -> Value {
    polys(s.generators())
}

fn point(p: &[GaussianRational; 2]) -> Value {
    json!([p[0].to_string(), p[1].to_string()])
}

fn parse_point(text: &str) -> Result<[GaussianRational; 2], CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    match parts.as_slice() {
        [a, b] => Ok([parse_number(a.trim())?, parse_number(b.trim())?]),
        _ => Err(CliError::Usage(format!(
            "expected a point `a, b`, got `{text}`"
        ))),
    }
}

fn split_vars(vars: &str) -> Result<(String, String), CliError> {
    match vars.split(',').map(str::trim).collect::<Vec<_>>().as_slice() {
        [u, v] if !u.is_empty() && !v.is_empty() => Ok((u.to_string(), v.to_string())),
        _ => Err(CliError::Usage(format!(
            "expected two chart variables `U,V`, got `{vars}`"
        ))),
    }
}

/// Canonical echo of a web input, and its normalized surface.
fn web(text: &str) -> Result<(String, SurfaceF, NormalizationReport), CliError> {
    let echo = match parse_expr(text, &WEB_VARS)? {
        Parsed::Poly(p) => p.to_string(),
        Parsed::Rational(r) => r.to_string(),
    };
    let (s, report) = parse_web(text)?;
    Ok((echo, s, report))
}

fn factors(list: &[String]) -> Result<Vec<MultiPoly>, CliError> {
    list.iter().map(|f| poly(f, &SURFACE_VARS)).collect()
}

fn planar(args: &PlanarArgs) -> Result<(String, PlanarForm), CliError> {
    let (u, v) = split_vars(&args.vars)?;
    let text = read(&args.input)?;
    let phi = PlanarForm::parse(&text, &u, &v)?;
    Ok((phi.to_string(), phi))
}

fn normalization(r: &mut Report, rep: &NormalizationReport) {
    r.result("content", rep.content.to_string())
        .result("repeated", rep.repeated.to_string())
        .result("degree_before", rep.degree_before)
        .result("degree_after", rep.degree_after)
        .result("changed", rep.changed());
    if rep.changed() {
        r.certify(
            "input = content * repeated * normalized, up to a constant",
            format!("content {}, repeated {}", rep.content, rep.repeated),
        );
    }
}

pub fn run(cmd: &Command) -> Out {
    let mut r = Report::new(cmd.name());
    match cmd {
        Command::Normalize(input) => {
            let (echo, s, rep) = web(&read(input)?)?;
            r.input("expr", echo);
            r.result("form", surface_to_web(&s).to_string())
                .result("surface", s.poly().to_string())
                .result("degree", s.degree());
            normalization(&mut r, &rep);
        }
        Command::Surface(WebArgs { input, factors: fs }) => {
            let (echo, s, rep) = web(&read(input)?)?;
            r.input("expr", echo);
            r.result("surface", s.poly().to_string())
                .result("degree", s.degree());
            normalization(&mut r, &rep);
            if !fs.is_empty() {
                let comps = factors(fs)?;
                for (k, f) in comps.iter().enumerate() {
                    r.input(&format!("factor{k}"), f);
                }
                s.check_factorization(&comps)?;
                let product = comps
                    .iter()
                    .fold(MultiPoly::one(s.poly().vars()), |acc, f| &acc * f);
                r.result("factorization", true);
                r.certify("product of the factors equals F up to a constant", product);
            }
        }
        Command::Discriminant(input) => {
            let (echo, s, _) = web(&read(input)?)?;
            r.input("expr", echo);
            let d = discriminant_curve(&s)?;
            r.result("surface", s.poly().to_string())
                .result("caustic", d.caustic.to_string())
                .result("resultant", d.resultant.to_string())
                .result("leading_factor", d.leading_factor.to_string());
            if !d.leading_factor.is_constant() {
                r.warn(format!(
                    "leading coefficient vanishes on {}: branches turn vertical there; reported apart from the caustic",
                    d.leading_factor
                ));
            }
        }
        Command::Criminant(input) => {
            let (echo, s, _) = web(&read(input)?)?;
            r.input("expr", echo);
            let c = criminant(&s)?;
            r.result("surface", s.poly().to_string())
                .result("system", system(&c.system))
                .result(
                    "triangular",
                    c.triangular.as_ref().map_or(Value::Null, |t| {
                        json!({
                            "solved": t.solved,
                            "value": t.value.to_string(),
                            "system": system(&t.system),
                        })
                    }),
                )
                .result(
                    "components",
                    c.components.iter().map(system).collect::<Vec<_>>(),
                )
                .result("empty", c.is_empty_locus());
            let witness = c
                .triangular
                .as_ref()
                .map_or_else(|| c.system.to_string(), |t| t.system.to_string());
            if c.is_empty_locus() {
                r.certify("criminant is empty", witness);
            } else {
                r.certify(
                    format!("criminant has {} component(s)", c.components.len()),
                    witness,
                );
            }
        }
        Command::Singlocus(args) => {
            let (echo, phi) = planar(args)?;
            r.input("form", echo);
            let loc = foliation_singular_locus(&phi)?;
            r.result("generators", system(&loc.generators))
                .result("res_u", loc.res_u.to_string())
                .result("res_v", loc.res_v.to_string())
                .result(
                    "points",
                    loc.points
                        .as_ref()
                        .map_or(Value::Null, |ps| ps.iter().map(point).collect()),
                )
                .result("empty", loc.is_empty());
            r.certify(
                if loc.is_empty() {
                    "singular set is empty"
                } else {
                    "singular set is finite"
                },
                format!("Res_U = {}, Res_V = {}", loc.res_u, loc.res_v),
            );
        }
        Command::Dicritical(WebArgs { input, factors: fs }) => {
            let (echo, s, _) = web(&read(input)?)?;
            r.input("expr", echo);
            let comps = if fs.is_empty() {
                vec![s.poly().clone()]
            } else {
                let comps = factors(fs)?;
                s.check_factorization(&comps)?;
                comps
            };
            let mut rows = Vec::new();
            for comp in &comps {
                let d = dicritical_on_component(&s, comp)?;
                let points = d
                    .locus
                    .points
                    .as_ref()
                    .map_or(Value::Null, |ps| ps.iter().map(point).collect());
                rows.push(json!({
                    "component": comp.to_string(),
                    "solved": d.restriction.solved,
                    "value": d.restriction.value.to_string(),
                    "form": d.restriction.form.to_string(),
                    "removed": d.restriction.removed.to_string(),
                    "dicritical": d.dicritical,
                    "singular_points": points,
                }));
                let claim = if d.dicritical {
                    format!("foliation on {comp} is regular in the chart")
                } else {
                    format!("foliation on {comp} has singular points")
                };
                let witness = match (&d.locus.points, d.dicritical) {
                    (Some(ps), false) => ps
                        .iter()
                        .map(|p| format!("({}, {})", p[0], p[1]))
                        .collect::<Vec<_>>()
                        .join(", "),
                    _ => format!("Res_U = {}, Res_V = {}", d.locus.res_u, d.locus.res_v),
                };
                r.certify(claim, witness);
                r.warn(format!(
                    "verdict for {comp} is chart-local: graph {} = {}",
                    d.restriction.solved, d.restriction.value
                ));
            }
            r.result("components", rows);
        }
        Command::CriminantInvariance(WebArgs { input, factors: fs }) => {
            let (echo, s, _) = web(&read(input)?)?;
            r.input("expr", echo);
            let comps = factors(fs)?;
            let rows = criminant_invariance(&s, &comps)?;
            let mut out = Vec::new();
            for row in &rows {
                let v = row.verdict.as_ref();
                out.push(json!({
                    "criminant_component": system(&row.criminant_component),
                    "web_component": row.web_component.to_string(),
                    "chart_curve": row.chart_curve.as_ref().map(|c| c.to_string()),
                    "invariant": v.map(|v| v.invariant),
                    "tangency": v.map(|v| v.tangency.to_string()),
                    "cofactor": v.and_then(|v| v.cofactor.as_ref().map(|c| c.to_string())),
                }));
                match (v, &row.chart_curve) {
                    (Some(v), Some(g)) if v.invariant => r.certify(
                        format!("{g} is invariant on {}", row.web_component),
                        format!(
                            "b g_U - a g_V = ({}) * g",
                            v.cofactor.as_ref().expect("invariant has cofactor")
                        ),
                    ),
                    (Some(v), Some(g)) => r.certify(
                        format!("{g} is not invariant on {}", row.web_component),
                        format!("b g_U - a g_V = {} not divisible by g", v.tangency),
                    ),
                    _ => r.warn(format!(
                        "criminant component {} meets the chart of {} in finitely many points",
                        row.criminant_component, row.web_component
                    )),
                };
            }
            r.result("rows", out).result(
                "all_invariant",
                rows.iter()
                    .all(|row| row.verdict.as_ref().is_none_or(|v| v.invariant)),
            );
        }
        Command::CsIndex { planar: args, point: x0 } => {
            let (echo, phi) = planar(args)?;
            let x0 = parse_number(x0)?;
            r.input("form", echo).input("point", &x0);
            let index = cs_index(&phi, &x0)?;
            let (u, v) = phi.vars();
            r.result("index", index.to_string());
            r.certify(
                format!("{{{v} = 0}} is invariant"),
                format!("{v} divides the coefficient of d{u}: {}", phi.a()),
            );
        }
        Command::CsSum(input) => {
            let text = read(input)?;
            let omega = poly(&text, &HOM_VARS)?;
            r.input("expr", &omega);
            let sum = cs_sum_line(&omega)?;
            let indices: Vec<Value> = sum
                .indices
                .iter()
                .map(|i| {
                    json!({
                        "point": format!("[{} : 0 : {}]", i.point[0], i.point[1]),
                        "index": i.index.to_string(),
                    })
                })
                .collect();
            let one = sum.sum == GaussianRational::from(1);
            r.result("indices", indices)
                .result("sum", sum.sum.to_string())
                .result("equals_self_intersection", one);
            r.certify(
                if one {
                    "index sum equals 1, the self-intersection of a line"
                } else {
                    "index sum differs from 1"
                },
                &sum.sum,
            );
        }
        Command::CheckIntegral { input, form, vars } => {
            let (u, v) = split_vars(vars)?;
            let f = parse_rational(&read(input)?, &[&u, &v])?;
            let phi = PlanarForm::parse(form, &u, &v)?;
            r.input("expr", &f).input("form", &phi);
            let verdict = first_integral_check(&f, &phi)?;
            r.result("holds", verdict.holds)
                .result("numerator", verdict.numerator.to_string());
            r.certify(
                if verdict.holds {
                    "numerator of f_U b - f_V a vanishes identically"
                } else {
                    "numerator of f_U b - f_V a is nonzero"
                },
                &verdict.numerator,
            );
        }
        Command::CheckWebIntegral { input, web: w, factors: fs } => {
            let fam = poly(&read(input)?, &FAMILY_VARS)?;
            let (echo, s, _) = web(w)?;
            r.input("expr", &fam).input("web", echo);
            let comps = factors(fs)?;
            let cand = WebIntegralCandidate::new(fam)?;
            let v = web_first_integral_check(&cand, &s, &comps)?;
            r.result("holds", v.holds)
                .result("surface", s.poly().to_string())
                .result("eliminated", v.elimination.surface.to_string())
                .result("resultant", v.elimination.resultant.to_string())
                .result("removed", v.elimination.removed.to_string())
                .result(
                    "extraneous",
                    v.extraneous.as_ref().map(|e| e.to_string()),
                )
                .result("missing", polys(&v.missing));
            if v.holds {
                r.certify(
                    "every component of F divides the eliminated polynomial E",
                    format!(
                        "E = F * ({})",
                        v.extraneous.as_ref().expect("holds has cofactor")
                    ),
                );
            } else {
                r.certify(
                    "some component of F does not divide E",
                    polys(&v.missing),
                );
            }
            if !v.elimination.removed.is_constant() {
                r.warn(format!(
                    "factor {} of the resultant removed (multiplicities or p-free)",
                    v.elimination.removed
                ));
            }
            if let Some(e) = v.extraneous.as_ref().filter(|e| !e.is_constant()) {
                r.warn(format!("E carries the extraneous factor {e}"));
            }
        }
        Command::Segre { input, point: pt } => {
            let h = HermitianPoly::parse(&read(input)?)?;
            r.input("expr", &h);
            let real = reality_check(&h);
            r.result("real", real.real)
                .result("offending", real.offending.clone());
            match &real.offending {
                None => r.certify("coefficient involution holds for every monomial", &h),
                Some(m) => r.certify("coefficient involution fails", m),
            };
            if let Some(pt) = pt {
                let pt = parse_point(pt)?;
                r.input("point", format!("{}, {}", pt[0], pt[1]));
                let q = segre_variety(&h, &pt);
                r.result("segre_variety", q.to_string())
                    .result("degenerate", q.is_zero());
            }
            r.warn("irreducibility of the hypersurface is assumed, not checked");
        }
        Command::SegreDegenerate { input, point: pt } => {
            let h = HermitianPoly::real(parse_poly(&read(input)?, &holoweb::segre::HERMITIAN_VARS)?)?;
            let pt = parse_point(pt)?;
            r.input("expr", &h)
                .input("point", format!("{}, {}", pt[0], pt[1]));
            let q = segre_variety(&h, &pt);
            let degenerate = is_segre_degenerate(&h, &pt);
            r.result("degenerate", degenerate)
                .result("segre_variety", q.to_string());
            r.certify(
                if degenerate {
                    "F_C(z, conj p) vanishes identically"
                } else {
                    "Segre variety is a proper curve"
                },
                &q,
            );
        }
        Command::Eliminate(input) => {
            let fam = SegreFamily::from_poly(poly(&read(input)?, &FAMILY_VARS)?)?;
            r.input("expr", fam.poly());
            let (s, e) = eliminate_family(&fam)?;
            r.result("surface", s.poly().to_string())
                .result("degree", s.degree())
                .result("resultant", e.resultant.to_string())
                .result("removed", e.removed.to_string());
            if !e.removed.is_constant() {
                r.warn(format!("factor {} of the resultant removed", e.removed));
            }
        }
        Command::Tangency { input, web: w, kind } => {
            let h = poly(&read(input)?, &["x", "y"])?;
            let kind: LeviKind = kind.parse()?;
            let (echo, s, _) = web(w)?;
            r.input("expr", &h).input("web", echo).input("kind", kind);
            let t = tangency_check(&s, &h, kind)?;
            let leaf = is_leaf(&s, &h)?;
            r.result("tangent", t.tangent)
                .result("numerator", t.numerator.to_string())
                .result("leaf", leaf);
            match &t.witness {
                None if t.tangent => r.certify(
                    format!("web is tangent to the leaves of d({h}) = 0"),
                    &t.numerator,
                ),
                Some((pt, val)) => r.certify(
                    "web is not tangent: numerator is nonzero at a point",
                    format!("({}, {}) -> {val}", pt[0], pt[1]),
                ),
                None => r.certify("web is not tangent", &t.numerator),
            };
        }
        Command::DualWeb(input) => {
            let c = PlaneCurve::new(poly(&read(input)?, &CURVE_VARS)?)?;
            r.input("expr", c.poly());
            let s = dual_web(&c)?;
            r.result("surface", s.poly().to_string())
                .result("degree", s.degree());
        }
        Command::HomResultant(input) => {
            let g = poly(&read(input)?, &HOM_FAMILY_VARS)?;
            r.input("expr", &g);
            let omega = hom_family_resultant(&g)?;
            let contraction = euler_contraction(&omega);
            r.result("form", omega.to_string())
                .result("degree", omega.degree())
                .result("point_degree", omega.point_degree())
                .result("descends", contraction.is_zero());
            r.certify(
                if contraction.is_zero() {
                    "Euler contraction vanishes, the form descends to the plane"
                } else {
                    "Euler contraction is nonzero"
                },
                &contraction,
            );
        }
        Command::Restrict { input, chart } => {
            let omega = HomSymForm::new(poly(&read(input)?, &HOM_VARS)?)?;
            let chart: Chart = chart.parse()?;
            r.input("expr", &omega).input("chart", chart);
            let (w, rep) = restrict_chart(&omega, chart)?;
            r.result("form", w.to_string())
                .result("surface", web_to_surface(&w).poly().to_string());
            normalization(&mut r, &rep);
        }
        Command::Transition { input, from, chart } => {
            let omega = poly(&read(input)?, &FORM_VARS)?;
            let (from, to): (Chart, Chart) = (from.parse()?, chart.parse()?);
            r.input("expr", &omega)
                .input("from", from)
                .input("chart", to);
            let (w, _) = normalize_web(&omega)?;
            let (moved, rep) = chart_transition(&w, from, to)?;
            r.result("form", moved.to_string())
                .result("surface", web_to_surface(&moved).poly().to_string());
            normalization(&mut r, &rep);
        }
        Command::DescendCheck(input) => {
            let omega = HomSymForm::new(poly(&read(input)?, &HOM_VARS)?)?;
            r.input("expr", &omega);
            let contraction = euler_contraction(&omega);
            let ok = descends(&omega);
            r.result("contraction", contraction.to_string())
                .result("descends", ok);
            r.certify(
                if ok {
                    "Euler contraction vanishes"
                } else {
                    "Euler contraction is nonzero"
                },
                &contraction,
            );
        }
        Command::Degree { input, trials, seed } => {
            let (echo, s, _) = web(&read(input)?)?;
            r.input("expr", echo)
                .input("trials", trials)
                .input("seed", seed);
            let wd = web_degree(&s, *trials, *seed)?;
            r.result("degree", wd.degree)
                .result("achieved", wd.achieved)
                .result("trials", wd.trials)
                .result("degenerate", wd.degenerate);
            r.warn(format!(
                "generic value over {} random lines y = m x + c",
                wd.trials
            ));
        }
        Command::Fixtures { .. } => unreachable!("handled by the fixture runner"),
    }
    Ok(r)
}
