mod common;

use common::*;
use holoweb::foliation::{cs_index, cs_sum_line, web_first_integral_check, WebIntegralCandidate};
use holoweb::poly::{GaussianRational as Q, MultiPoly};
use holoweb::web::{PlanarForm, SurfaceF};
use num_traits::{One, Zero};

const XY: [&str; 2] = ["x", "y"];
const HOM: [&str; 6] = ["X", "Y", "Z", "dX", "dY", "dZ"];

fn shift_x(f: &MultiPoly, s: &Q) -> MultiPoly {
    let moved = &p("x", &XY) + &MultiPoly::constant(f.vars(), s.clone());
    f.substitute("x", &moved).unwrap()
}

#[test]
fn cs_index_ignores_scaling_and_follows_translation() {
    let mut rng = rng(31);
    let mut done = 0;
    while done < 40 {
        let k = random_poly(&mut rng, &XY, &[2, 1], 3);
        let b = random_poly(&mut rng, &XY, &[2, 1], 3);
        let a = &k * &p("y", &XY);
        let Ok(phi) = PlanarForm::new("x", "y", a.clone(), b.clone()) else {
            continue;
        };
        let x0 = rat(&mut rng, 3);
        let Ok(index) = cs_index(&phi, &x0) else {
            continue;
        };
        let c = nonzero_rat(&mut rng, 5);
        assert_eq!(cs_index(&phi.scale(&c), &x0).unwrap(), index, "{phi}");
        let s = rat(&mut rng, 3);
        let moved = PlanarForm::new("x", "y", shift_x(&a, &s), shift_x(&b, &s)).unwrap();
        assert_eq!(cs_index(&moved, &(&x0 - &s)).unwrap(), index, "{phi} shifted by {s}");
        done += 1;
    }
}

#[test]
fn linear_family_index_is_lambda() {
    let mut rng = rng(32);
    for _ in 0..5 {
        let lambda = rat(&mut rng, 9);
        let phi = PlanarForm::parse(&format!("({lambda})*y*dx - x*dy"), "x", "y").unwrap();
        assert_eq!(cs_index(&phi, &Q::zero()).unwrap(), lambda);
    }
}

/// `det [[dX, dY, dZ], [X, Y, Z], [P, Q, R]]`.
fn foliation_of(field: [&MultiPoly; 3]) -> MultiPoly {
    let v = |s: &str| p(s, &HOM);
    let [pp, qq, rr] = field;
    let (x, y, z) = (v("X"), v("Y"), v("Z"));
    let c0 = &(&y * rr) - &(&z * qq);
    let c1 = &(&x * rr) - &(&z * pp);
    let c2 = &(&x * qq) - &(&y * pp);
    &(&(&v("dX") * &c0) - &(&v("dY") * &c1)) + &(&v("dZ") * &c2)
}

#[test]
fn pencils_through_points_of_the_line_sum_to_one() {
    let mut rng = rng(33);
    for _ in 0..10 {
        let r = rat(&mut rng, 6);
        let point = [
            MultiPoly::constant(&holoweb::poly::vars_of(&HOM), r.clone()),
            p("0", &HOM),
            p("1", &HOM),
        ];
        let omega = foliation_of([&point[0], &point[1], &point[2]]);
        let sum = cs_sum_line(&omega).unwrap();
        assert!(sum.sum.is_one(), "pencil through [{r}:0:1]: {:?}", sum);
    }
}

#[test]
fn degree_one_foliations_sum_to_one() {
    let mut rng = rng(34);
    let mut done = 0;
    while done < 20 {
        let (r1, r2) = (rat(&mut rng, 4), rat(&mut rng, 4));
        let k = nonzero_rat(&mut rng, 3);
        let (alpha, beta, c, eps) = (
            rat(&mut rng, 4),
            rat(&mut rng, 4),
            rat(&mut rng, 4),
            rat(&mut rng, 4),
        );
        let gamma = -(&(&k * &r1) * &r2);
        let zeta = &alpha - &(&k * &(&r1 + &r2));
        let field = [
            format!("({alpha})*X + ({beta})*Y + ({gamma})*Z"),
            format!("({c})*Y"),
            format!("({k})*X + ({eps})*Y + ({zeta})*Z"),
        ]
        .map(|s| p(&s, &HOM));
        let omega = foliation_of([&field[0], &field[1], &field[2]]);
        if omega.is_zero() {
            continue;
        }
        match cs_sum_line(&omega) {
            Ok(sum) => assert!(sum.sum.is_one(), "{omega}: {sum:?}"),
            Err(e) => panic!("{omega}: {e}"),
        }
        done += 1;
    }
}

fn affine_reparam(f: &MultiPoly, a: &Q, b: &Q) -> MultiPoly {
    let t = p("t", &["x", "y", "t"]);
    let new_t = &t.scale(a) + &MultiPoly::constant(t.vars(), b.clone());
    f.substitute("t", &new_t).unwrap()
}

#[test]
fn web_integral_verdict_survives_rescaling_and_reparametrization() {
    let xyt = ["x", "y", "t"];
    let xyp = ["x", "y", "p"];
    let mut cases: Vec<(MultiPoly, SurfaceF, Vec<MultiPoly>, bool)> = vec![
        (
            p("t^2 + t*y + x", &xyt),
            SurfaceF::new(p("x*p^2 - y*p + 1", &xyp)).unwrap(),
            vec![],
            true,
        ),
        (
            p("(x^2 + y^2 - t)*(y - t)", &xyt),
            SurfaceF::new(p("p*(y*p + x)", &xyp)).unwrap(),
            vec![p("p", &xyp), p("y*p + x", &xyp)],
            true,
        ),
        (p("t - x", &xyt), SurfaceF::new(p("p", &xyp)).unwrap(), vec![], false),
    ];
    let mut rng = rng(35);
    for _ in 0..6 {
        let fam = random_poly(&mut rng, &xyt, &[1, 1, 2], 4);
        let other = random_poly(&mut rng, &xyt, &[1, 1, 2], 4);
        let (Ok(c1), Ok(c2)) = (WebIntegralCandidate::new(fam.clone()), WebIntegralCandidate::new(other)) else {
            continue;
        };
        let surfaces = [c1.poly(), c2.poly()].map(|q| holoweb::foliation::eliminate_t(q).ok());
        if let [Some(e1), Some(e2)] = surfaces {
            let (Ok(s1), Ok(s2)) = (SurfaceF::new(e1.surface), SurfaceF::new(e2.surface)) else {
                continue;
            };
            if s1.degree() == 0 || s2.degree() == 0 {
                continue;
            }
            let same = s1.same_surface(&s2);
            cases.push((fam.clone(), s1, vec![], true));
            cases.push((fam, s2, vec![], same));
        }
    }
    assert!(cases.len() > 5);
    for (fam, s, comps, expected) in cases {
        let verdict = |q: &MultiPoly| {
            let cand = WebIntegralCandidate::new(q.clone()).unwrap();
            web_first_integral_check(&cand, &s, &comps).unwrap().holds
        };
        assert_eq!(verdict(&fam), expected, "{fam} against {}", s.poly());
        for _ in 0..3 {
            let c = gauss(&mut rng, 4);
            if c.is_zero() {
                continue;
            }
            let a = nonzero_rat(&mut rng, 3);
            let b = rat(&mut rng, 3);
            assert_eq!(verdict(&fam.scale(&c)), expected, "{c} * ({fam})");
            assert_eq!(
                verdict(&affine_reparam(&fam, &a, &b)),
                expected,
                "{fam} with t -> {a}*t + {b}"
            );
        }
    }
}
