//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use std::sync::Once;

use dynmult::exactpoly::{matrix::QMatrix, rat, Monomial, Poly, Rational, Vars};
use dynmult::projdyn::{DynamicalSystem, SpectrumList};
use dynmult::sigma::{wt_vars, SigmaOptions};
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Seed for every random choice in the tests: `DYNMULT_SEED` or a fixed default.
pub fn seed() -> u64 {
    static PRINT: Once = Once::new();
    let s = std::env::var("DYNMULT_SEED")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    PRINT.call_once(|| eprintln!("test seed: {s} (override with DYNMULT_SEED)"));
    s
}

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed().wrapping_add(stream.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

pub fn proptest_config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed()),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn opts() -> SigmaOptions {
    SigmaOptions::default()
}

/// Small rational: integer in [-4, 4] or, one time in three, a fraction with denominator ≤ 3.
pub fn small_rational(r: &mut impl Rng) -> Rational {
    let n = r.gen_range(-4i64..=4);
    if r.gen_ratio(1, 3) {
        Rational::new(n.into(), r.gen_range(1i64..=3).into())
    } else {
        rat(n)
    }
}

/// All exponent vectors of total degree d in k variables.
pub fn monomials(k: usize, d: u32) -> Vec<Monomial> {
    fn rec(k: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == k {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(k, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, d, &mut Vec::new(), &mut out);
    out
}

/// A random degree-d morphism of P^dim with small coefficients. Sparse
/// coefficient vectors keep the Groebner computations at desk scale.
pub fn random_map(r: &mut impl Rng, dim: usize, d: u32) -> DynamicalSystem {
    let vars = Vars::indexed("x", dim + 1);
    let mons = monomials(dim + 1, d);
    loop {
        let coords: Vec<Poly> = (0..=dim)
            .map(|i| {
                let pure = Monomial::var(dim + 1, i, d);
                let terms = mons.iter().filter_map(|m| {
                    if *m == pure {
                        Some((m.clone(), rat(r.gen_range(1i64..=3))))
                    } else if r.gen_ratio(1, 3) {
                        Some((m.clone(), small_rational(r)))
                    } else {
                        None
                    }
                });
                Poly::from_terms(&vars, terms)
            })
            .collect();
        if let Ok(f) = DynamicalSystem::new(coords) {
            return f;
        }
    }
}

/// Random integer matrix of determinant ±1: a product of elementary moves.
pub fn random_unimodular(r: &mut impl Rng, n: usize) -> QMatrix {
    let mut m: QMatrix = (0..n)
        .map(|i| (0..n).map(|j| rat((i == j) as i64)).collect())
        .collect();
    for _ in 0..2 * n + 2 {
        let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
        if i == j {
            m[i].iter_mut().for_each(|x| *x = -x.clone());
            continue;
        }
        let k = rat(r.gen_range(-2i64..=2));
        for c in 0..n {
            let add = &m[j][c] * &k;
            m[i][c] += add;
        }
    }
    m
}

/// ∏_P (w − γ_P(t))^{mult}, written out term by term from the spectrum.
pub fn spectrum_product(spec: &SpectrumList) -> Poly {
    let wt = wt_vars();
    let w = Poly::var_index(&wt, 0);
    let mut acc = Poly::one(&wt);
    for e in &spec.entries {
        let coeffs = e.charpoly.coeffs();
        let g = Poly::from_univariate(&wt, 1, coeffs);
        acc = &acc * &(&w - &g).pow_u(e.multiplicity);
    }
    acc
}

pub fn det(m: &QMatrix) -> Rational {
    dynmult::exactpoly::matrix::det(m)
}

/// Distinct small rationals.
pub fn distinct(r: &mut impl Rng, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < k {
        let q = small_rational(r);
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// Polynomial endomorphism [x² + c : y² + A x² + B x + C : 1] (homogenized in
/// z) with every fixed point rational: the roots of x² − x + c and of each
/// fiber equation are chosen first and the coefficients solved from them.
pub fn normal_triangular(r: &mut impl Rng) -> (DynamicalSystem, [Rational; 4]) {
    let half = Rational::new(1.into(), 2.into());
    let x = loop {
        let q = small_rational(r);
        if q != half {
            break q;
        }
    };
    let one = rat(1);
    let c = &x * (&one - &x);
    let x2 = &one - &x;
    let root_prod = |s: &Rational| s * (&one - s);
    let a = root_prod(&small_rational(r));
    // A x_i² + B x_i + C = s_i(1 − s_i) at both affine fibers
    let v1 = root_prod(&small_rational(r)) - &a * &x * &x;
    let v2 = root_prod(&small_rational(r)) - &a * &x2 * &x2;
    let b = (&v1 - &v2) / (&x - &x2);
    let cc = &v1 - &b * &x;
    let f = triangular_from(&c, &a, &b, &cc);
    (f, [c, a, b, cc])
}

pub fn triangular_from(c: &Rational, a: &Rational, b: &Rational, cc: &Rational) -> DynamicalSystem {
    let v = Vars::new(&["x", "y", "z"]).unwrap();
    let var = |i| Poly::var_index(&v, i);
    let (x, y, z) = (var(0), var(1), var(2));
    let zz = &z * &z;
    let f0 = &(&x * &x) + &zz.scale(c);
    let f1 = &(&(&(&y * &y) + &(&x * &x).scale(a)) + &(&x * &z).scale(b)) + &zz.scale(cc);
    DynamicalSystem::new(vec![f0, f1, zz]).unwrap()
}
