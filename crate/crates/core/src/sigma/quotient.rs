//! Chart factors from the finite-dimensional algebra Q[x]/X_j.
//!
//! The multiplication operator of h = g_num/g_den on the algebra has, by
//! Stickelberger's theorem, characteristic polynomial ∏ (w − γ_P(t))^{len P},
//! and its minimal polynomial generates the elimination ideal
//! (X_j, w·g_den − g_num) ∩ Q[w, t].

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{wt_vars, SigmaMode};
use crate::error::{Error, Result};
use crate::exactpoly::matrix::{charpoly, inverse, mat_mul, minpoly, nullspace, QMatrix};
use crate::exactpoly::univariate::interpolate;
use crate::exactpoly::{Monomial, MonomialOrder, Poly, Rational, Vars};
use crate::groebner::{groebner_basis, GbLimits, GroebnerBasis};
use crate::projdyn::DynamicalSystem;

pub(crate) struct Quotient {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Quotient {
    /// `None` for the unit ideal.
    pub fn new(gens: &[Poly], vars: &Vars, limits: &GbLimits) -> Result<Option<Quotient>> {
        let gb = groebner_basis(gens, &MonomialOrder::degrevlex_natural(vars.len()), limits)?;
        if gb.is_unit() {
            return Ok(None);
        }
        if gb.dimension() != 0 {
            return Err(Error::domain(
                "the fixed-point scheme of a chart is not zero-dimensional",
            ));
        }
        let basis = gb.standard_monomials();
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(Some(Quotient { gb, basis, index }))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of multiplication by `p`; column k holds the normal form of
    /// p·basis[k].
    pub fn matrix(&self, p: &Poly) -> Result<QMatrix> {
        let n = self.dim();
        let mut m = vec![vec![Rational::zero(); n]; n];
        for (k, b) in self.basis.iter().enumerate() {
            let nf = self.gb.normal_form(&p.mul_term(b, &Rational::one()))?;
            for (mono, c) in nf.terms() {
                m[self.index[mono]][k] = c.clone();
            }
        }
        Ok(m)
    }
}

/// Reduced chart charpoly: returns (g_num, g_den) in the ring `big`, whose
/// first `nn` variables are the chart variables and which contains `t`.
pub(crate) fn chart_charpoly(fj: &Poly, fi: &[Poly], big: &Vars) -> Result<(Poly, Poly)> {
    let nn = fi.len();
    let x = |k: usize| Poly::var_index(big, k);
    let t = Poly::var(big, "t")?;
    let dfj: Vec<Poly> = (0..nn).map(|k| fj.derivative_index(k)).collect();
    // t·F_j·I − A' with A'_{ik} = ∂_k F_i − x_i ∂_k F_j
    let tfj = &t * fj;
    let mut mat = vec![vec![Poly::zero(big); nn]; nn];
    for i in 0..nn {
        for k in 0..nn {
            let a = &fi[i].derivative_index(k) - &(&x(i) * &dfj[k]);
            mat[i][k] = if i == k { &tfj - &a } else { -a };
        }
    }
    Ok((
        crate::exactpoly::matrix::poly_det(mat, big),
        fj.pow_u(nn as u32),
    ))
}

/// Factor of Σ for the points of chart j whose later coordinates vanish.
pub(crate) fn quotient_factor(
    g: &DynamicalSystem,
    j: usize,
    mode: SigmaMode,
    limits: &GbLimits,
) -> Result<Poly> {
    let wt = wt_vars();
    let aff = g.dehomogenize(j)?;
    let nn = aff.vars.len();
    let q = match Quotient::new(&aff.fixed_generators(), &aff.vars, limits)? {
        None => return Ok(Poly::one(&wt)),
        Some(q) => q,
    };
    let big = aff.vars.extended(&["t"])?;
    let lift = |p: &Poly| p.with_vars(&big);
    let fi: Vec<Poly> = aff.numerators.iter().map(lift).collect::<Result<_>>()?;
    let (num, den) = chart_charpoly(&lift(&aff.denominator)?, &fi, &big)?;

    // points with x_{j+1} = … = x_N = 0: common generalized kernel of the
    // trailing coordinates (chart variables j..nn)
    let l = q.dim();
    let stratum = if j == nn {
        None
    } else {
        let mut stacked: QMatrix = Vec::new();
        for k in j..nn {
            let mx = q.matrix(&Poly::var_index(&aff.vars, k))?;
            let mut p = mx.clone();
            for _ in 1..l {
                p = mat_mul(&p, &mx);
            }
            stacked.extend(p);
        }
        let ker = nullspace(&stacked, l);
        if ker.is_empty() {
            return Ok(Poly::one(&wt));
        }
        Some(ker)
    };

    let den_inv =
        inverse(&q.matrix(&den.with_vars(&aff.vars)?)?).map_err(|_| Error::DegenerateChart {
            chart: j,
            reason: "g_den vanishes at a fixed point".into(),
        })?;
    let t_idx = big.require("t")?;
    let mut coeffs: Vec<QMatrix> = Vec::new();
    for c in num.coefficients_in(t_idx) {
        let c = c.with_vars(&aff.vars)?;
        let m = mat_mul(&den_inv, &q.matrix(&c)?);
        coeffs.push(match &stratum {
            None => m,
            Some(ker) => restrict(&m, ker)?,
        });
    }
    let r = coeffs[0].len();
    let at = |x: &Rational| -> QMatrix {
        let mut acc = vec![vec![Rational::zero(); r]; r];
        for c in coeffs.iter().rev() {
            for (arow, crow) in acc.iter_mut().zip(c) {
                for (a, v) in arow.iter_mut().zip(crow) {
                    *a = &*a * x + v;
                }
            }
        }
        acc
    };
    let tdeg = nn;
    match mode {
        SigmaMode::Chow => {
            let npts = tdeg * r + 1;
            let xs: Vec<Rational> = (0..npts as i64)
                .map(|x| Rational::from_integer(x.into()))
                .collect();
            let values: Vec<Vec<Rational>> = xs.iter().map(|x| charpoly(&at(x))).collect();
            Ok(assemble(&xs, &values, r, &wt))
        }
        SigmaMode::Plain => {
            let mut xs = Vec::new();
            let mut values: Vec<Vec<Rational>> = Vec::new();
            let mut m = 0;
            let mut x = 0i64;
            loop {
                let xv = Rational::from_integer(x.into());
                let mp = minpoly(&at(&xv));
                let d = mp.len() - 1;
                if d > m {
                    m = d;
                    xs.clear();
                    values.clear();
                }
                if d == m {
                    xs.push(xv);
                    values.push(mp);
                }
                x += 1;
                if xs.len() == tdeg * m + 1 {
                    let p = assemble(&xs, &values, m, &wt);
                    if within_bound(&p, m, tdeg) {
                        return Ok(p);
                    }
                    // too many special samples: keep sampling
                    xs.remove(0);
                    values.remove(0);
                }
                if x > 64 * (tdeg as i64 * l as i64 + 1) {
                    return Err(Error::DegenerateChart {
                        chart: j,
                        reason: "could not stabilize the minimal polynomial".into(),
                    });
                }
            }
        }
    }
}

/// Matrix of an operator restricted to an invariant subspace with the given
/// basis vectors.
fn restrict(m: &QMatrix, basis: &[Vec<Rational>]) -> Result<QMatrix> {
    let l = m.len();
    let r = basis.len();
    // pick r rows of the basis matrix forming an invertible block
    let mut rows: Vec<usize> = Vec::new();
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    for i in 0..l {
        let mut v: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
        for (pc, e) in &echelon {
            if !v[*pc].is_zero() {
                let f = &v[*pc] / &e[*pc];
                for (x, y) in v.iter_mut().zip(e) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((pc, v));
            rows.push(i);
            if rows.len() == r {
                break;
            }
        }
    }
    let block: QMatrix = rows
        .iter()
        .map(|&i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    let block_inv = inverse(&block)?;
    // image of each basis vector, read on the chosen rows
    let mut img = vec![vec![Rational::zero(); r]; r];
    for (c, b) in basis.iter().enumerate() {
        for (ri, &i) in rows.iter().enumerate() {
            img[ri][c] = m[i]
                .iter()
                .zip(b)
                .filter(|(x, _)| !x.is_zero())
                .map(|(x, y)| x * y)
                .sum();
        }
    }
    Ok(mat_mul(&block_inv, &img))
}

/// Monic polynomial in w of degree `deg` whose w-coefficients interpolate
/// the sampled values (each a low-first monic polynomial in w).
fn assemble(xs: &[Rational], values: &[Vec<Rational>], deg: usize, wt: &Vars) -> Poly {
    let mut terms = Vec::new();
    for k in 0..=deg {
        let ys: Vec<Rational> = values.iter().map(|v| v[k].clone()).collect();
        for (e, c) in interpolate(xs, &ys).into_iter().enumerate() {
            if !c.is_zero() {
                terms.push((Monomial::from_exponents(&[k as u32, e as u32]), c));
            }
        }
    }
    Poly::from_terms(wt, terms)
}

fn within_bound(p: &Poly, deg: usize, n: usize) -> bool {
    p.terms().iter().all(|(m, _)| {
        let e = m.exponents();
        (e[1] as usize) <= n * (deg - e[0] as usize)
    })
}
