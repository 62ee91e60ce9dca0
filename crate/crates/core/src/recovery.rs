//! Inverse problems: recovering maps from multiplier data.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::matrix::{solve, LinearSolution};
use crate::exactpoly::rational::binomial;
use crate::exactpoly::univariate::rational_roots_coeffs;
use crate::exactpoly::{parse_poly, Monomial, Rational, Vars};
use crate::families::{triangular_endomorphism, TriangularSpec};
use crate::groebner::GbLimits;
use crate::projdyn::{
    period_count_usize, rational_periodic_spectrum, CharPoly, DynamicalSystem, SpectrumList,
};

/// Multiset of eigenvalue tuples, one tuple per fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenPairMultiset {
    /// Sorted tuples with multiplicities, sorted and merged.
    pub tuples: Vec<(Vec<Rational>, u32)>,
}

impl EigenPairMultiset {
    pub fn new(tuples: impl IntoIterator<Item = (Vec<Rational>, u32)>) -> Result<Self> {
        let mut merged: Vec<(Vec<Rational>, u32)> = Vec::new();
        let mut width = None;
        for (mut t, m) in tuples {
            if *width.get_or_insert(t.len()) != t.len() {
                return Err(Error::domain("eigenvalue tuples have different lengths"));
            }
            if m == 0 {
                continue;
            }
            t.sort();
            match merged.iter_mut().find(|(u, _)| *u == t) {
                Some(e) => e.1 += m,
                None => merged.push((t, m)),
            }
        }
        merged.sort();
        Ok(EigenPairMultiset { tuples: merged })
    }

    /// From a spectrum whose characteristic polynomials split over Q.
    pub fn from_spectrum(spec: &SpectrumList) -> Result<Self> {
        let tuples = spec
            .entries
            .iter()
            .map(|e| {
                let eig = e.charpoly.rational_eigenvalues().ok_or_else(|| {
                    Error::IrrationalSpectrum(format!("{} does not split over Q", e.charpoly))
                })?;
                Ok((eig, e.multiplicity))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(tuples)
    }

    pub fn width(&self) -> usize {
        self.tuples.first().map_or(0, |t| t.0.len())
    }

    pub fn total(&self) -> usize {
        self.tuples.iter().map(|t| t.1 as usize).sum()
    }

    /// One tuple per point, multiplicities expanded.
    pub fn expanded(&self) -> Vec<Vec<Rational>> {
        self.tuples
            .iter()
            .flat_map(|(t, m)| std::iter::repeat_n(t.clone(), *m as usize))
            .collect()
    }

    pub fn charpolys(&self) -> Vec<(CharPoly, u32)> {
        self.tuples
            .iter()
            .map(|(t, m)| (CharPoly::from_eigenvalues(t), *m))
            .collect()
    }
}

/// c with x² + c having affine fixed-point multipliers λ1, λ2, if any.
pub fn quadratic_from_multipliers(l1: &Rational, l2: &Rational) -> Option<Rational> {
    if l1 + l2 == Rational::from_integer(2.into()) {
        Some(l1 * l2 / Rational::from_integer(4.into()))
    } else {
        None
    }
}

/// (σ_{2,2}, σ_{2,3}) of [x² + c·z² : y² + d·z² : z²].
pub fn split_quadratic_invariants(c: &Rational, d: &Rational) -> (Rational, Rational) {
    let s = c + d;
    let k = |n: i64| Rational::from_integer(n.into());
    (k(8) * &s + k(60), k(16) * &s + k(24))
}

/// C(d+n, d) ≤ Σ_{i=0}^n d^i.
pub fn binomial_guard(d: u32, n: u32) -> bool {
    let rhs: BigInt = (0..=n)
        .map(|i| num_traits::pow(BigInt::from(d), i as usize))
        .sum();
    binomial(u64::from(d + n), u64::from(d)) <= rhs
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InterpolationOutcome {
    Unique(Vec<Rational>),
    Underdetermined { dim: usize },
    NoSolution,
}

/// Coefficients c with Σ_k c_k·basis_k(node_i) = values_i for every node.
pub fn interpolation_solve(
    nodes: &[Vec<Rational>],
    values: &[Rational],
    basis: &[Monomial],
) -> Result<InterpolationOutcome> {
    if nodes.len() != values.len() {
        return Err(Error::domain("one value per node is required"));
    }
    if let Some(m) = basis
        .iter()
        .find(|m| nodes.iter().any(|n| n.len() != m.len()))
    {
        return Err(Error::domain(format!(
            "monomial of {} variables does not fit the nodes",
            m.len()
        )));
    }
    let rows: Vec<Vec<Rational>> = nodes
        .iter()
        .map(|n| {
            basis
                .iter()
                .map(|m| {
                    n.iter()
                        .zip(m.exponents())
                        .fold(Rational::one(), |acc, (x, &e)| {
                            acc * num_traits::pow(x.clone(), e as usize)
                        })
                })
                .collect()
        })
        .collect();
    Ok(match solve(&rows, values) {
        LinearSolution::Unique(x) => InterpolationOutcome::Unique(x),
        LinearSolution::Underdetermined { dim, .. } => {
            InterpolationOutcome::Underdetermined { dim }
        }
        LinearSolution::NoSolution => InterpolationOutcome::NoSolution,
    })
}

/// Ways of taking two entries from `pool` (indices) whose other eigenvalue
/// (next to `lambda`) sums to 2, giving the fiber constant.
fn fiber_choices(
    pairs: &[Vec<Rational>],
    pool: &[usize],
    lambda: &Rational,
) -> Vec<(usize, usize, Rational)> {
    let other = |i: usize| -> Option<Rational> {
        let p = &pairs[i];
        if &p[0] == lambda {
            Some(p[1].clone())
        } else if &p[1] == lambda {
            Some(p[0].clone())
        } else {
            None
        }
    };
    let mut out = Vec::new();
    for (a, &i) in pool.iter().enumerate() {
        let Some(oi) = other(i) else { continue };
        for &j in &pool[a + 1..] {
            let Some(oj) = other(j) else { continue };
            if let Some(c) = quadratic_from_multipliers(&oi, &oj) {
                out.push((i, j, c));
            }
        }
    }
    out
}

/// Degree-2 triangular maps [x² + c₁z² : y² + ax² + bxz + cz² : z²] whose
/// fixed-point eigenvalue pairs are `spectrum`, sorted by text and free of
/// duplicates. Each returned map reproduces the spectrum exactly.
pub fn recover_triangular_2_2(
    spectrum: &EigenPairMultiset,
    limits: &GbLimits,
) -> Result<Vec<DynamicalSystem>> {
    if spectrum.width() != 2 {
        return Err(Error::domain(
            "recovery needs eigenvalue pairs (dimension 2)",
        ));
    }
    let expected = period_count_usize(2, 2, 1)?;
    if spectrum.total() != expected {
        return Err(Error::domain(format!(
            "spectrum has {} pairs, expected {expected}",
            spectrum.total()
        )));
    }
    let pairs = spectrum.expanded();
    let zero = Rational::zero();
    let two = Rational::from_integer(2.into());

    // values seen in at least two distinct points
    let values: BTreeSet<Rational> = pairs.iter().flatten().cloned().collect();
    let frequent: Vec<Rational> = values
        .into_iter()
        .filter(|v| pairs.iter().filter(|p| p.contains(v)).count() >= 2)
        .collect();

    // (c₁, fiber x-values with their vertical multipliers, the value at infinity)
    type Candidate = (Rational, Vec<(Rational, Rational)>, Rational);
    let mut equations: BTreeSet<Candidate> = BTreeSet::new();
    for (a, l1) in frequent.iter().enumerate() {
        for l2 in &frequent[a + 1..] {
            let Some(c1) = quadratic_from_multipliers(l1, l2) else {
                continue;
            };
            // fixed points of x² + c₁: x² − x + c₁ = 0, multiplier 2x
            let roots = rational_roots_coeffs(&[c1.clone(), -Rational::one(), Rational::one()])?;
            if roots.len() != 2 {
                continue;
            }
            let (x1, x2) = (roots[0].0.clone(), roots[1].0.clone());
            let all: Vec<usize> = (0..pairs.len()).collect();
            for (i1, j1, v1) in fiber_choices(&pairs, &all, &(&two * &x1)) {
                let rest: Vec<usize> = all
                    .iter()
                    .copied()
                    .filter(|&k| k != i1 && k != j1)
                    .collect();
                for (i2, j2, v2) in fiber_choices(&pairs, &rest, &(&two * &x2)) {
                    let inf: Vec<usize> = rest
                        .iter()
                        .copied()
                        .filter(|&k| k != i2 && k != j2)
                        .collect();
                    // every point at infinity has the transverse multiplier 0,
                    // and (0:1:0) is superattracting
                    if !inf.iter().all(|&k| pairs[k].contains(&zero)) {
                        continue;
                    }
                    for &sink in &inf {
                        if pairs[sink] != [zero.clone(), zero.clone()] {
                            continue;
                        }
                        let others: Vec<usize> =
                            inf.iter().copied().filter(|&k| k != sink).collect();
                        for (_, _, a_inf) in fiber_choices(&pairs, &others, &zero) {
                            let fib = vec![(x1.clone(), v1.clone()), (x2.clone(), v2.clone())];
                            equations.insert((c1.clone(), fib, a_inf));
                        }
                    }
                }
            }
        }
    }

    let vars = Vars::new(&["x", "z"])?;
    let basis: Vec<Monomial> = ["x^2", "x*z", "z^2"]
        .iter()
        .map(|s| Ok(parse_poly(s, &vars)?.terms()[0].0.clone()))
        .collect::<Result<_>>()?;
    let mut found: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::new();
    for (c1, fibers, a_inf) in equations {
        let mut nodes: Vec<Vec<Rational>> = fibers
            .iter()
            .map(|(x, _)| vec![x.clone(), Rational::one()])
            .collect();
        let mut vals: Vec<Rational> = fibers.iter().map(|(_, v)| v.clone()).collect();
        nodes.push(vec![Rational::one(), zero.clone()]);
        vals.push(a_inf);
        let InterpolationOutcome::Unique(abc) = interpolation_solve(&nodes, &vals, &basis)? else {
            continue;
        };
        let f2 = format!("y^2 + ({})*x^2 + ({})*x + ({})", abc[0], abc[1], abc[2]);
        let spec = TriangularSpec::parse(&[format!("x^2 + ({c1})"), f2])?;
        let map = triangular_endomorphism(&spec)?;
        let key = map.to_string();
        if found.contains(&key) {
            continue;
        }
        let got = match rational_periodic_spectrum(&map, 1, limits) {
            Ok(s) => EigenPairMultiset::from_spectrum(&s),
            Err(Error::IrrationalSpectrum(_)) => continue,
            Err(e) => return Err(e),
        };
        if matches!(&got, Ok(g) if g == spectrum) {
            found.insert(key);
            out.push(map);
        }
    }
    out.sort_by_key(|m| m.to_string());
    Ok(out)
}
