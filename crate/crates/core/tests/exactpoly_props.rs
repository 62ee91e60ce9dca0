mod common;

use dynmult::exactpoly::{rational_roots, univariate_resultant, Monomial, Poly, Rational, Vars};
use num_traits::Zero;
use proptest::prelude::*;

fn xyz() -> Vars {
    Vars::new(&["x", "y", "z"]).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly3() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u32..=2, 0u32..=2, 0u32..=2), rational()), 0..6).prop_map(|terms| {
        let v = xyz();
        let mut p = Poly::zero(&v);
        for ((a, b, c), q) in terms {
            p = &p + &Poly::monomial(&v, Monomial::from_exponents(&[a, b, c]), q);
        }
        p
    })
}

fn univariate(max_deg: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), 1..=max_deg + 1)
}

fn upoly(vars: &Vars, coeffs: &[Rational]) -> Poly {
    Poly::from_univariate(vars, 0, coeffs)
}

proptest! {
    #![proptest_config(common::proptest_config(64))]

    #[test]
    fn ring_axioms(p in poly3(), q in poly3(), r in poly3()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn product_rule(p in poly3(), q in poly3(), var in 0usize..3) {
        let lhs = (&p * &q).derivative_index(var);
        let rhs = &(&p * &q.derivative_index(var)) + &(&q * &p.derivative_index(var));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_antisymmetry(f in univariate(4), g in univariate(4)) {
        let v = Vars::new(&["s"]).unwrap();
        let (f, g) = (upoly(&v, &f), upoly(&v, &g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let df = f.total_degree().finite().unwrap();
        let dg = g.total_degree().finite().unwrap();
        let fg = univariate_resultant(&f, &g, "s").unwrap();
        let gf = univariate_resultant(&g, &f, "s").unwrap();
        if (df * dg) % 2 == 1 {
            prop_assert_eq!(fg, -&gf);
        } else {
            prop_assert_eq!(fg, gf);
        }
    }

    #[test]
    fn resultant_of_split_polynomial(roots in prop::collection::vec(rational(), 1..4), g in univariate(3)) {
        // Res(∏(s − r_i), G) = ∏ G(r_i) for monic F
        let v = Vars::new(&["s"]).unwrap();
        let s = Poly::var_index(&v, 0);
        let mut f = Poly::one(&v);
        for r in &roots {
            f = &f * &(&s - &Poly::constant(&v, r.clone()));
        }
        let g = upoly(&v, &g);
        prop_assume!(!g.is_zero());
        let want: Rational = roots.iter().map(|r| g.eval(std::slice::from_ref(r))).product();
        let got = univariate_resultant(&f, &g, "s").unwrap();
        prop_assert_eq!(got.constant_term(), want);
        prop_assert!(got.is_constant());
    }

    #[test]
    fn rational_roots_are_roots(roots in prop::collection::vec(rational(), 0..4), extra in univariate(2)) {
        let v = Vars::new(&["s"]).unwrap();
        let s = Poly::var_index(&v, 0);
        let mut f = upoly(&v, &extra);
        prop_assume!(!f.is_zero());
        for r in &roots {
            f = &f * &(&s - &Poly::constant(&v, r.clone()));
        }
        let found = rational_roots(&f, "s").unwrap();
        let mut deflated = f.clone();
        for (r, m) in &found {
            prop_assert!(f.eval(std::slice::from_ref(r)).is_zero());
            let lin = &s - &Poly::constant(&v, r.clone());
            for _ in 0..*m {
                deflated = divide_exact(&deflated, &lin);
            }
        }
        for r in &roots {
            prop_assert!(found.iter().any(|(q, _)| q == r));
        }
        prop_assert!(rational_roots(&deflated, "s").unwrap().is_empty());
    }
}

/// Synthetic division by a monic linear factor, asserting zero remainder.
fn divide_exact(p: &Poly, lin: &Poly) -> Poly {
    let c = p.univariate_coeffs(0).unwrap();
    let r = -lin.constant_term();
    let mut q = vec![Rational::zero(); c.len().saturating_sub(1)];
    let mut acc = Rational::zero();
    for k in (0..c.len()).rev() {
        acc = &acc * &r + &c[k];
        if k > 0 {
            q[k - 1] = acc.clone();
        }
    }
    assert!(acc.is_zero(), "nonzero remainder");
    Poly::from_univariate(p.vars(), 0, &q)
}
