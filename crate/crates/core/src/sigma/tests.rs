use super::*;
use crate::exactpoly::parse_poly;
use crate::exactpoly::rational::rat;
use crate::projdyn::rational_periodic_spectrum;

fn sys(coords: &[&str]) -> DynamicalSystem {
    DynamicalSystem::parse(coords, None).unwrap()
}

fn wt(s: &str) -> Poly {
    parse_poly(s, &wt_vars()).unwrap()
}

fn opts() -> SigmaOptions {
    SigmaOptions::default()
}

fn elim() -> SigmaOptions {
    SigmaOptions {
        engine: SigmaEngine::Elimination,
        ..SigmaOptions::default()
    }
}

#[test]
fn powering_p1() {
    let f = sys(&["x0^2", "x1^2"]);
    let s = sigma_poly(&f, 1, SigmaMode::Chow, &opts()).unwrap();
    assert_eq!(s.poly, wt("(w - t)^2 * (w - t + 2)"));
    let p = sigma_poly(&f, 1, SigmaMode::Plain, &opts()).unwrap();
    assert_eq!(p.poly, s.poly);
    let r = sigma_dim1_resultant(&f, 1).unwrap();
    assert_eq!(r.poly, s.poly);
}

#[test]
fn powering_p2_table() {
    let f = sys(&["x0^2", "x1^2", "x2^2"]);
    let s = sigma_poly(&f, 1, SigmaMode::Chow, &opts()).unwrap();
    assert_eq!(
        s.poly,
        wt("(w - t^2)^3 * (w - t^2 + 2*t)^3 * (w - (t - 2)^2)")
    );
    let spec = rational_periodic_spectrum(&f, 1, &GbLimits::default()).unwrap();
    assert_eq!(s.poly, sigma_from_spectrum(&spec));
    let tab = extract_sigmas(&s).unwrap();
    assert_eq!(tab.get(1, 0), rat(7));
    assert_eq!(tab.get(1, 2), rat(4));
    assert_eq!(tab.get(2, 2), rat(60));
    assert!(!tab.degree_deficient);
    let p = sigma_poly(&f, 1, SigmaMode::Plain, &opts()).unwrap();
    assert_eq!(p.poly, plain_sigma_from_spectrum(&spec));
}

#[test]
fn multiple_fixed_point() {
    // x^2 + xz has a double fixed point at 0 with multiplier 1
    let f = DynamicalSystem::parse(&["x^2 + x*z", "z^2"], Some(&["x".into(), "z".into()])).unwrap();
    let s = sigma_poly(&f, 1, SigmaMode::Chow, &opts()).unwrap();
    let spec = rational_periodic_spectrum(&f, 1, &GbLimits::default()).unwrap();
    assert_eq!(s.poly, sigma_from_spectrum(&spec));
    assert_eq!(sigma_dim1_resultant(&f, 1).unwrap().poly, s.poly);
    let p = sigma_poly(&f, 1, SigmaMode::Plain, &opts()).unwrap();
    // the elimination generator keeps the nilpotent at the double point
    assert_eq!(p.poly, s.poly);
    assert!(!extract_sigmas(&p).unwrap().degree_deficient);
}

#[test]
fn engines_agree() {
    let f = sys(&["x0^2 + x1*x2", "x1^2 + x0*x2", "x2^2"]);
    let q = sigma_poly(&f, 1, SigmaMode::Chow, &opts()).unwrap();
    let line = sigma_poly(&f, 1, SigmaMode::Chow, &elim()).unwrap();
    assert_eq!(line.poly, q.poly);
    let full = SigmaOptions {
        chow_form: ChowForm::Full,
        ..elim()
    };
    assert_eq!(
        sigma_poly(&f, 1, SigmaMode::Chow, &full).unwrap().poly,
        q.poly
    );
    let p = sigma_poly(&f, 1, SigmaMode::Plain, &opts()).unwrap();
    assert_eq!(
        sigma_poly(&f, 1, SigmaMode::Plain, &elim()).unwrap().poly,
        p.poly
    );
    for g in [
        sys(&["x0^2", "x1^2", "x2^2"]),
        sys(&["x0^2 + x0*x1", "x1^2"]),
    ] {
        for mode in [SigmaMode::Chow, SigmaMode::Plain] {
            assert_eq!(
                sigma_poly(&g, 1, mode, &opts()).unwrap(),
                sigma_poly(&g, 1, mode, &elim()).unwrap()
            );
        }
    }
}

#[test]
fn dim1_second_iterate() {
    let f =
        DynamicalSystem::parse(&["x^2 - 3/4*z^2", "z^2"], Some(&["x".into(), "z".into()])).unwrap();
    let r = sigma_dim1_resultant(&f, 2).unwrap();
    let s = sigma_poly(&f, 2, SigmaMode::Chow, &opts()).unwrap();
    assert_eq!(r.poly, s.poly);
    assert_eq!(r.degree_w(), 5);
}

#[test]
fn sigma_is_conjugation_invariant() {
    let f = sys(&["x0^2 + x1*x2", "x1^2 + x0*x2", "x2^2"]);
    let m = vec![
        vec![rat(1), rat(1), rat(0)],
        vec![rat(0), rat(1), rat(3)],
        vec![rat(2), rat(0), rat(1)],
    ];
    let g = f.conjugate(&m).unwrap();
    let a = sigma_poly(&f, 1, SigmaMode::Chow, &opts()).unwrap();
    let b = sigma_poly(&g, 1, SigmaMode::Chow, &opts()).unwrap();
    assert_eq!(a.poly, b.poly);
}

#[test]
fn scan_detects_non_isospectral_family() {
    let vars: Vec<String> = vec!["x".into(), "z".into()];
    let build = |a: &Rational| {
        let c = format!("x^2 + {a}*z^2");
        DynamicalSystem::parse(&[c.as_str(), "z^2"], Some(&vars))
    };
    let samples = [rat(0), rat(1), rat(-2)];
    let r = isospectral_scan(build, &samples, 1, SigmaMode::Chow, &opts());
    assert!(!r.all_equal);
    assert!(r.common.is_none());
    let r = isospectral_scan(build, &[rat(3), rat(3)], 1, SigmaMode::Chow, &opts());
    assert!(r.all_equal);
}

#[test]
fn modes_parse() {
    assert_eq!("plain".parse::<SigmaMode>().unwrap(), SigmaMode::Plain);
    assert!("fast".parse::<SigmaMode>().is_err());
}
