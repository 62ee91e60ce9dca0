mod common;

use common::{normal_triangular, opts, random_map, rng, small_rational};
use dynmult::exactpoly::{rat, Poly, Rational};
use dynmult::families::{
    cartesian_product, lattes_mordell, powering_map, segre_power_product, split_endomorphism,
    SegreOrder, SplitSpec,
};
use dynmult::groebner::GbLimits;
use dynmult::monic::{monic_map, MonicParams};
use dynmult::projdyn::{
    multiplier_charpoly, rational_periodic_spectrum, CharPoly, DynamicalSystem, ProjectivePoint,
};
use dynmult::relations::{
    check_corollary_relation, check_dependence, check_ueda, check_ueda_charpolys,
    corollary_residual, holomorphic_index_sum,
};
use dynmult::sigma::{extract_sigmas, sigma_poly, SigmaMode, SigmaTable};
use dynmult::Error;
use num_traits::{One, Zero};

fn chow_table(f: &DynamicalSystem) -> SigmaTable {
    extract_sigmas(&sigma_poly(f, 1, SigmaMode::Chow, &opts()).unwrap()).unwrap()
}

/// The corollary combination read straight off Σ(w, t): with D = D₁ it
/// equals (−1)^{D−1}·∂_wΣ(0, 1) − (−1)^D·Σ(0, 1), i.e. Πγ(1)·(Σ1/γ(1) − 1).
fn corollary_oracle(f: &DynamicalSystem) -> Rational {
    let s = sigma_poly(f, 1, SigmaMode::Chow, &opts()).unwrap();
    let d: usize = s.dn.clone().try_into().unwrap();
    let coeffs = s.poly.coefficients_in(0);
    let at = |p: &Poly| p.eval(&[rat(0), rat(1)]);
    let sign = |k: usize| if k.is_multiple_of(2) { rat(1) } else { rat(-1) };
    sign(d - 1) * at(&coeffs[1]) - sign(d) * at(&coeffs[0])
}

#[test]
fn corollary_relation_on_random_morphisms() {
    let mut r = rng(20);
    for dim in [1, 2] {
        for _ in 0..5 {
            let f = random_map(&mut r, dim, 2);
            let t = chow_table(&f);
            assert_eq!(corollary_residual(&t).unwrap(), corollary_oracle(&f));
            assert!(check_corollary_relation(&t).unwrap(), "{f}");
        }
    }
}

#[test]
fn milnor_relation_for_quadratic_rational_maps() {
    // e3 − e1 + 2 = 0 for the three fixed-point multipliers, read from Σ(w, 0) = ∏(w + λ)
    let mut r = rng(21);
    for _ in 0..6 {
        let f = random_map(&mut r, 1, 2);
        let s = sigma_poly(&f, 1, SigmaMode::Chow, &opts()).unwrap();
        let at0: Vec<Rational> = s
            .poly
            .coefficients_in(0)
            .iter()
            .map(|c| c.eval(&[rat(0), rat(0)]))
            .collect();
        let (e1, e3) = (&at0[2], &at0[0]);
        assert_eq!(e3 - e1 + rat(2), rat(0), "{f}");
        let t = extract_sigmas(&s).unwrap();
        assert!(check_corollary_relation(&t).unwrap());
    }
}

#[test]
fn ueda_on_rational_spectra() {
    for (n, d) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
        let spec =
            rational_periodic_spectrum(&powering_map(n, d).unwrap(), 1, &GbLimits::default())
                .unwrap();
        let rep = check_ueda(&spec).unwrap();
        assert!(rep.holds, "P^{n}, d = {d}: {} vs {}", rep.lhs, rep.rhs);
    }
    let mut r = rng(22);
    for _ in 0..5 {
        let (f, _) = normal_triangular(&mut r);
        let spec = rational_periodic_spectrum(&f, 1, &GbLimits::default()).unwrap();
        match check_ueda(&spec) {
            Ok(rep) => assert!(rep.holds, "{f}"),
            // a multiplier equal to 1 is outside the relation's hypothesis
            Err(Error::Domain(_)) => assert!(spec
                .entries
                .iter()
                .any(|e| e.charpoly.eval(&rat(1)).is_zero())),
            Err(e) => panic!("{e}"),
        }
    }
    let with_one = [
        (CharPoly::from_eigenvalues(&[rat(1)]), 1),
        (CharPoly::from_eigenvalues(&[rat(0)]), 2),
    ];
    assert!(matches!(
        check_ueda_charpolys(&with_one, 1, 2),
        Err(Error::Domain(_))
    ));
}

#[test]
fn holomorphic_index_sum_is_one() {
    // x² + c with c = s(1 − s): affine multipliers 2s and 2(1 − s), infinity 0
    let mut r = rng(23);
    for _ in 0..10 {
        let s = small_rational(&mut r);
        let (l1, l2) = (rat(2) * &s, rat(2) * (rat(1) - &s));
        if l1.is_one() || l2.is_one() {
            continue;
        }
        assert_eq!(holomorphic_index_sum(&[l1, l2, rat(0)]).unwrap(), rat(1));
    }
    assert!(holomorphic_index_sum(&[rat(1), rat(0)]).is_err());
}

#[test]
fn dependence_theorem_predictions() {
    for (n, d) in [(1, 2), (1, 3), (2, 2)] {
        let t = chow_table(&powering_map(n, d).unwrap());
        assert!(check_dependence(&t).unwrap().is_empty());
    }
    let mut r = rng(24);
    for _ in 0..3 {
        let p = MonicParams::new(
            small_rational(&mut r),
            small_rational(&mut r),
            small_rational(&mut r),
            small_rational(&mut r),
        );
        let t = chow_table(&monic_map(&p));
        let bad = check_dependence(&t).unwrap();
        assert!(bad.is_empty(), "{p}: {}", bad[0]);
    }
    // a corrupted entry is caught
    let mut t = chow_table(&powering_map(1, 2).unwrap());
    let e = t.entries.get_mut(&(3, 1)).unwrap();
    *e += rat(1);
    assert!(!check_dependence(&t).unwrap().is_empty());
}

/// [x² + c·z² : z²].
fn quadratic(c: &Rational) -> DynamicalSystem {
    split_endomorphism(&SplitSpec {
        components: vec![vec![c.clone(), rat(0), rat(1)]],
    })
    .unwrap()
}

#[test]
fn cartesian_product_fixed_point_types() {
    let mut r = rng(25);
    let s = small_rational(&mut r);
    let t = small_rational(&mut r);
    let f = quadratic(&(&s * (rat(1) - &s)));
    let g = quadratic(&(&t * (rat(1) - &t)));
    let h = cartesian_product(&f, &g).unwrap();
    let spec = rational_periodic_spectrum(&h, 1, &GbLimits::default()).unwrap();
    assert_eq!(spec.total_multiplicity(), 15);
    let mut mixed = 0;
    for e in &spec.entries {
        let (p, q) = e.point.coords().split_at(2);
        let eig = e.charpoly.rational_eigenvalues().unwrap();
        let p_zero = p.iter().all(Zero::is_zero);
        let q_zero = q.iter().all(Zero::is_zero);
        if !p_zero && !q_zero {
            // the mixed type: the multipliers of f at P, of g at Q, and d
            let lf =
                multiplier_charpoly(&f, &ProjectivePoint::new(p.to_vec()).unwrap(), 1).unwrap();
            let lg =
                multiplier_charpoly(&g, &ProjectivePoint::new(q.to_vec()).unwrap(), 1).unwrap();
            let mut want = lf.rational_eigenvalues().unwrap();
            want.extend(lg.rational_eigenvalues().unwrap());
            want.push(rat(2));
            want.sort();
            let mut got = eig.clone();
            got.sort();
            assert_eq!(got, want, "at {}", e.point);
            mixed += e.multiplicity;
        } else {
            // a point of one factor: its own multiplier plus zeros from the collapsed block
            let (own, other) = if q_zero { (&f, p) } else { (&g, q) };
            let lo = multiplier_charpoly(own, &ProjectivePoint::new(other.to_vec()).unwrap(), 1)
                .unwrap();
            let mut want = lo.rational_eigenvalues().unwrap();
            want.extend([rat(0), rat(0)]);
            want.sort();
            let mut got = eig.clone();
            got.sort();
            assert_eq!(got, want, "at {}", e.point);
        }
    }
    assert_eq!(mixed, 9);
}

#[test]
fn segre_power_product_is_a_permuted_cartesian_square() {
    let mut r = rng(26);
    let f = random_map(&mut r, 1, 2);
    let sq = cartesian_product(&f, &f.rename(&["y0".into(), "y1".into()]).unwrap()).unwrap();
    for order in [SegreOrder::RowMajor, SegreOrder::ColumnMajor] {
        let h = segre_power_product(&f, 1, order).unwrap();
        assert_eq!(h.dim(), 3);
        assert_eq!(
            sigma_poly(&h, 1, SigmaMode::Chow, &opts()).unwrap().poly,
            sigma_poly(&sq, 1, SigmaMode::Chow, &opts()).unwrap().poly
        );
    }
    // h(Segre(P, R)) = Segre(f(P), R^d) for arbitrary points
    let h = segre_power_product(&f, 1, SegreOrder::RowMajor).unwrap();
    for _ in 0..5 {
        let p = [small_rational(&mut r), small_rational(&mut r)];
        let q = [small_rational(&mut r), small_rational(&mut r)];
        let seg = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
            a.iter()
                .flat_map(|x| b.iter().map(move |y| x * y))
                .collect()
        };
        let fp = f.eval(&p);
        let qd: Vec<Rational> = q.iter().map(|x| x * x).collect();
        assert_eq!(h.eval(&seg(&p, &q)), seg(&fp, &qd));
    }
    // the Lattès example's first coordinate
    let m =
        segre_power_product(&lattes_mordell(&rat(1)).unwrap(), 1, SegreOrder::RowMajor).unwrap();
    assert!(
        m.coords()[0].to_string().starts_with("u0^4 - 8*u0*u2^3"),
        "{}",
        m.coords()[0]
    );
}

#[test]
fn split_maps_have_diagonal_multipliers() {
    let mut r = rng(27);
    for _ in 0..4 {
        let s = small_rational(&mut r);
        let u = small_rational(&mut r);
        let c = &s * (rat(1) - &s);
        let d = &u * (rat(1) - &u);
        let spec = SplitSpec {
            components: vec![
                vec![c.clone(), rat(0), rat(1)],
                vec![d.clone(), rat(0), rat(1)],
            ],
        };
        let f = split_endomorphism(&spec).unwrap();
        let swapped = SplitSpec {
            components: vec![spec.components[1].clone(), spec.components[0].clone()],
        };
        let g = split_endomorphism(&swapped).unwrap();
        assert_eq!(
            sigma_poly(&f, 1, SigmaMode::Chow, &opts()).unwrap().poly,
            sigma_poly(&g, 1, SigmaMode::Chow, &opts()).unwrap().poly
        );
        // affine fixed points (x, y, 1): charpoly (t − 2x)(t − 2y)
        let spec_list = rational_periodic_spectrum(&f, 1, &GbLimits::default()).unwrap();
        for e in spec_list
            .entries
            .iter()
            .filter(|e| !e.point.coords()[2].is_zero())
        {
            let [x, y, _] = e.point.coords() else {
                unreachable!()
            };
            let want = CharPoly::from_eigenvalues(&[rat(2) * x, rat(2) * y]);
            assert_eq!(e.charpoly.coeffs(), want.coeffs());
        }
    }
}
