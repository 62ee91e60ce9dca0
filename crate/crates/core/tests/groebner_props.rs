#![allow(clippy::needless_range_loop)]

mod common;

use dynmult::exactpoly::{Monomial, MonomialOrder, Poly, Rational, Vars};
use dynmult::groebner::{groebner_basis, normal_form, GbLimits, GroebnerBasis};
use dynmult::Error;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn xyz() -> Vars {
    Vars::new(&["x", "y", "z"]).unwrap()
}

fn limits() -> GbLimits {
    GbLimits {
        max_pairs: Some(5_000),
        max_coeff_bits: Some(4_000),
        time_limit_secs: None,
    }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn quadric() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..=2, 0u32..=2, 0u32..=1), rational()), 1..5).prop_map(|terms| {
        let v = xyz();
        terms.into_iter().fold(Poly::zero(&v), |p, ((a, b, c), q)| {
            &p + &Poly::monomial(&v, Monomial::from_exponents(&[a, b, c]), q)
        })
    })
}

fn order(lex: bool) -> MonomialOrder {
    if lex {
        MonomialOrder::lex_natural(3)
    } else {
        MonomialOrder::degrevlex_natural(3)
    }
}

/// The basis, or `None` when the random instance hits the desk-scale caps.
fn basis(gens: &[Poly], ord: &MonomialOrder) -> Option<GroebnerBasis> {
    match groebner_basis(gens, ord, &limits()) {
        Ok(gb) => Some(gb),
        Err(Error::ResourceLimit(_)) => None,
        Err(e) => panic!("{e}"),
    }
}

fn s_poly(f: &Poly, g: &Poly, ord: &MonomialOrder) -> Poly {
    let (mf, cf) = f.leading_term(ord).unwrap().clone();
    let (mg, cg) = g.leading_term(ord).unwrap().clone();
    let l = mf.lcm(&mg);
    &f.mul_term(&mf.quotient_of(&l), &cf.recip()) - &g.mul_term(&mg.quotient_of(&l), &cg.recip())
}

proptest! {
    #![proptest_config(common::proptest_config(40))]

    #[test]
    fn s_polynomials_reduce_to_zero(gens in prop::collection::vec(quadric(), 1..4), lex in any::<bool>()) {
        let ord = order(lex);
        let Some(gb) = basis(&gens, &ord) else { return Ok(()) };
        let b = gb.basis();
        for g in &gens {
            prop_assert!(normal_form(g, b, &ord).unwrap().is_zero());
        }
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                prop_assert!(normal_form(&s_poly(&b[i], &b[j], &ord), b, &ord).unwrap().is_zero());
            }
        }
        // reduced: monic, and no term divisible by another leading monomial
        let leads = gb.leading_monomials();
        for (k, p) in b.iter().enumerate() {
            prop_assert!(p.leading_term(&ord).unwrap().1.is_one());
            for (m, _) in p.terms() {
                for (l, lm) in leads.iter().enumerate() {
                    prop_assert!(l == k || !lm.divides(m));
                }
            }
        }
    }

    #[test]
    fn buchberger_is_idempotent(gens in prop::collection::vec(quadric(), 1..4), lex in any::<bool>()) {
        let ord = order(lex);
        let Some(gb) = basis(&gens, &ord) else { return Ok(()) };
        let again = basis(gb.basis(), &ord).unwrap();
        prop_assert_eq!(again.basis(), gb.basis());
    }

    #[test]
    fn normal_form_ignores_basis_order(gens in prop::collection::vec(quadric(), 1..4), p in quadric(), q in quadric(), lex in any::<bool>()) {
        let ord = order(lex);
        let Some(gb) = basis(&gens, &ord) else { return Ok(()) };
        let target = &p * &q;
        let mut shuffled = gb.basis().to_vec();
        shuffled.reverse();
        let a = normal_form(&target, gb.basis(), &ord).unwrap();
        prop_assert_eq!(&a, &normal_form(&target, &shuffled, &ord).unwrap());
        if !shuffled.is_empty() {
            shuffled.rotate_left(1);
        }
        prop_assert_eq!(&a, &normal_form(&target, &shuffled, &ord).unwrap());
    }

    #[test]
    fn elimination_drops_leading_variables(gens in prop::collection::vec(quadric(), 2..4)) {
        let ord = order(true);
        let Some(gb) = basis(&gens, &ord) else { return Ok(()) };
        for keep in [&["y", "z"][..], &["z"][..]] {
            let elim = gb.elimination_ideal(keep).unwrap();
            let allowed: Vec<usize> = keep.iter().map(|k| xyz().index_of(k).unwrap()).collect();
            for p in &elim {
                prop_assert!(p.support().iter().all(|i| allowed.contains(i)));
                prop_assert!(gb.contains(p).unwrap());
            }
        }
    }

    #[test]
    fn linear_ideals_match_row_echelon(rows in prop::collection::vec(prop::collection::vec(rational(), 5), 1..5)) {
        // rows are a0*x0 + ... + a3*x3 + c
        let v = Vars::indexed("x", 4);
        let gens: Vec<Poly> = rows
            .iter()
            .map(|r| {
                let lin = (0..4).fold(Poly::zero(&v), |p, i| &p + &Poly::var_index(&v, i).scale(&r[i]));
                &lin + &Poly::constant(&v, r[4].clone())
            })
            .collect();
        let want = rref(rows);
        let got = groebner_basis(&gens, &MonomialOrder::lex_natural(4), &GbLimits::default()).unwrap();
        let expected: Vec<Poly> = if want.iter().any(|r| r[..4].iter().all(Zero::is_zero)) {
            vec![Poly::one(&v)]
        } else {
            want.iter()
                .map(|r| {
                    let lin = (0..4).fold(Poly::zero(&v), |p, i| &p + &Poly::var_index(&v, i).scale(&r[i]));
                    &lin + &Poly::constant(&v, r[4].clone())
                })
                .collect()
        };
        let mut got_sorted = got.basis().to_vec();
        got_sorted.sort_by_key(|p| p.to_string());
        let mut expected = expected;
        expected.sort_by_key(|p| p.to_string());
        prop_assert_eq!(got_sorted, expected);
    }
}

/// Reduced row-echelon form by plain Gauss-Jordan, zero rows dropped.
fn rref(mut m: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let k = m[i][c].clone();
                for j in 0..cols {
                    let sub = &m[r][j] * &k;
                    m[i][j] -= sub;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m
}
