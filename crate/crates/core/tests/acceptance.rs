//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::*;
use holoweb::foliation::{
    cs_index, cs_sum_line, first_integral_check, web_first_integral_check, WebIntegralCandidate,
};
use holoweb::poly::{parse_rational, GaussianRational as Q, MultiPoly};
use holoweb::projective::{
    dual_web, euler_contraction, hom_family_resultant, homogenize, restrict_chart, web_degree,
    Chart, HomSymForm, PlaneCurve, DEFAULT_SEED,
};
use holoweb::segre::{
    eliminate_family, is_segre_degenerate, reality_check, tangency_check, HermitianPoly, LeviKind,
    SegreFamily,
};
use holoweb::web::{
    criminant, dicritical_on_component, discriminant_curve, invariant_curve_check, parse_web,
    planar_restriction, PlanarForm, SurfaceF, WebForm,
};
use num_traits::{One, Zero};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, what: impl Into<String>) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn xyp(s: &str) -> MultiPoly {
    p(s, &["x", "y", "p"])
}

fn xy(s: &str) -> MultiPoly {
    p(s, &["x", "y"])
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn second_order_pipeline() -> Check {
    let (s, _) = parse_web("y*dy^2 + x*dy*dx").map_err(err)?;
    ensure(s.poly() == &xyp("y*p^2 + x*p"), format!("surface {}", s.poly()))?;

    let d = discriminant_curve(&s).map_err(err)?;
    ensure(d.caustic.monic() == xy("x"), format!("caustic {}", d.caustic))?;

    let branch = xyp("y*p + x");
    let r = planar_restriction(&s, &branch).map_err(err)?;
    let alpha = PlanarForm::parse("-x*dp + p*(p^2 + 1)*dx", "x", "p").map_err(err)?;
    ensure(r.form.same_form(&alpha), format!("restriction {}", r.form))?;

    let f = parse_rational("x^2*(p^2 + 1)/p^2", &["x", "p"]).map_err(err)?;
    let fi = first_integral_check(&f, &alpha).map_err(err)?;
    ensure(fi.holds, format!("first integral numerator {}", fi.numerator))?;

    let c = criminant(&s).map_err(err)?;
    let has = |gens: [&str; 2]| {
        c.components.iter().any(|k| {
            let want = holoweb::web::CurveSystem::new(gens.iter().map(|g| xyp(g)).collect())
                .expect("nonzero generators");
            k.same_generators(&want)
        })
    };
    ensure(
        has(["p", "x"]) && has(["x", "y"]),
        format!("criminant components {:?}", c.components),
    )?;

    let inv = invariant_curve_check(&alpha, &p("x", &["x", "p"])).map_err(err)?;
    ensure(inv.invariant, "{x = 0} not invariant")?;

    let dic = dicritical_on_component(&s, &branch).map_err(err)?;
    ensure(!dic.dicritical, "component y p + x reported dicritical")?;

    for h in ["x^2 + y^2", "y"] {
        let t = tangency_check(&s, &xy(h), LeviKind::Re).map_err(err)?;
        ensure(t.tangent, format!("not tangent to Re({h}) = 0"))?;
    }
    Ok(())
}

fn conic_family_pipeline() -> Check {
    let g = p("X + t*Y + t^2*Z", &["X", "Y", "Z", "t"]);
    let omega = hom_family_resultant(&g).map_err(err)?;
    let displayed = HomSymForm::new(p(
        "Z^2*dX^2 + X*Z*dY^2 + X^2*dZ^2 + (Y^2 - 2*X*Z)*dX*dZ - X*Y*dY*dZ - Y*Z*dX*dY",
        &["X", "Y", "Z", "dX", "dY", "dZ"],
    ))
    .map_err(err)?;
    ensure(omega.same_form(&displayed), format!("family resultant {omega}"))?;
    ensure(
        euler_contraction(&omega).is_zero(),
        "Euler contraction is nonzero",
    )?;

    let (w, _) = restrict_chart(&omega, Chart::Z).map_err(err)?;
    let chart_form =
        WebForm::from_form(&p("dx^2 - y*dx*dy + x*dy^2", &["x", "y", "dx", "dy"])).map_err(err)?;
    ensure(w.same_web(&chart_form), format!("chart Z = 1 gives {w}"))?;

    let s = SurfaceF::new(xyp("x*p^2 - y*p + 1")).map_err(err)?;
    let c = criminant(&s).map_err(err)?;
    let tri = c.triangular.ok_or("criminant not triangularized")?;
    ensure(
        tri.system.generators() == [xyp("x*p^2 - 1"), xyp("y - 2*x*p")],
        format!("triangular criminant {}", tri.system),
    )?;

    let r = planar_restriction(&s, s.poly()).map_err(err)?;
    let dp = PlanarForm::parse("dp", r.form.vars().0, "p").map_err(err)?;
    ensure(r.form.same_form(&dp), format!("restriction {}", r.form))?;
    let dic = dicritical_on_component(&s, s.poly()).map_err(err)?;
    ensure(dic.dicritical, "not dicritical")?;

    let cand = WebIntegralCandidate::new(p("t^2 + t*y + x", &["x", "y", "t"])).map_err(err)?;
    let v = web_first_integral_check(&cand, &s, &[]).map_err(err)?;
    ensure(v.holds, "t^2 + t y + x is not a first integral")?;
    ensure(
        v.elimination.surface == xyp("x*p^2 - y*p + 1"),
        format!("eliminated {}", v.elimination.surface),
    )?;

    let wd = web_degree(&s, 5, DEFAULT_SEED).map_err(err)?;
    ensure(
        wd.degree == 0 && wd.trials >= 5,
        format!("web degree {wd:?}"),
    )
}

fn dual_web_closed_form() -> Check {
    let conic = PlaneCurve::new(p("q1^2 - q0*q2", &["q0", "q1", "q2"])).map_err(err)?;
    let s = dual_web(&conic).map_err(err)?;
    ensure(
        s.poly() == &xyp("x*p^2 - y*p + 1"),
        format!("dual of the conic {}", s.poly()),
    )?;
    let out = dual_degree_zero(12, 61);
    ensure(out.passed(), format!("{:?}", out.failures))
}

fn camacho_sad() -> Check {
    let radial = PlanarForm::parse("-y*dx + x*dy", "x", "y").map_err(err)?;
    let index = cs_index(&radial, &Q::zero()).map_err(err)?;
    ensure(index.is_one(), format!("radial index {index}"))?;

    let mut rng = rng(62);
    let lambdas: Vec<Q> = (0..5).map(|_| nonzero_rat(&mut rng, 9)).collect();
    for l in &lambdas {
        let phi = PlanarForm::parse(&format!("({l})*y*dx - x*dy"), "x", "y").map_err(err)?;
        let index = cs_index(&phi, &Q::zero()).map_err(err)?;
        ensure(&index == l, format!("index {index} for lambda {l}"))?;
    }

    let pencil = p("X*dY - Y*dX", &["X", "Y", "Z", "dX", "dY", "dZ"]);
    let sum = cs_sum_line(&pencil).map_err(err)?;
    ensure(sum.sum.is_one(), format!("pencil sum {}", sum.sum))?;
    for l in lambdas.iter().take(3) {
        let w = WebForm::from_form(&p(
            &format!("({l})*y*dx - x*dy"),
            &["x", "y", "dx", "dy"],
        ))
        .map_err(err)?;
        let omega = homogenize(&w, Chart::Z).map_err(err)?;
        let sum = cs_sum_line(omega.poly()).map_err(err)?;
        ensure(sum.sum.is_one(), format!("lambda {l}: sum {}", sum.sum))?;
    }
    Ok(())
}

fn segre() -> Check {
    for (f, real) in [
        ("(x^2 + y^2 + cx^2 + cy^2)/2", true),
        ("(x*cy - y*cx)/(2*i)", true),
        ("x*cy", false),
    ] {
        let h = HermitianPoly::parse(f).map_err(err)?;
        ensure(reality_check(&h).real == real, format!("reality of {f}"))?;
    }
    let im = HermitianPoly::parse("(x*cy - y*cx)/(2*i)").map_err(err)?;
    let zero = [Q::zero(), Q::zero()];
    let one = [Q::one(), Q::one()];
    ensure(is_segre_degenerate(&im, &zero), "origin not Segre degenerate")?;
    ensure(!is_segre_degenerate(&im, &one), "(1, 1) Segre degenerate")?;
    let fam = SegreFamily::from_poly(p("x - t*y", &["x", "y", "t"])).map_err(err)?;
    let (s, _) = eliminate_family(&fam).map_err(err)?;
    ensure(
        s.poly() == &xyp("x*p - y"),
        format!("pencil eliminates to {}", s.poly()),
    )
}

fn property_suites() -> Check {
    let suites = [
        contact_identities(50, 71),
        resultant_specialization(100, 72),
        discriminant_quadratic(50, 73),
        residue_sum(30, 74),
        chart_roundtrip(30, 75),
        three_paths(10, 76),
    ];
    let mut bad = Vec::new();
    for s in &suites {
        println!(
            "    {:<45} {:>4} cases, {} failures",
            s.name,
            s.cases,
            s.failures.len()
        );
        if !s.passed() {
            bad.push(format!("{}: {:?}", s.name, s.failures));
        }
    }
    ensure(bad.is_empty(), bad.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 6] = [
        ("second-order web y p^2 + x p", second_order_pipeline),
        ("conic family and its 2-web", conic_family_pipeline),
        ("dual-web closed form", dual_web_closed_form),
        ("Camacho-Sad indices", camacho_sad),
        ("Segre varieties", segre),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
