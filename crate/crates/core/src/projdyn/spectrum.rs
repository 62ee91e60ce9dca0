//! Multiplier polynomials of rational periodic points.

use std::fmt;

use num_traits::{One, Zero};

use super::{period_count_usize, DynamicalSystem, ProjectivePoint};
use crate::error::{Error, Result};
use crate::exactpoly::matrix::{charpoly, det, QMatrix};
use crate::exactpoly::univariate::{rational_roots_coeffs, udegree};
use crate::exactpoly::{Monomial, MonomialOrder, Poly, Rational, Vars};
use crate::groebner::{groebner_basis, GbLimits};

/// Characteristic polynomial of the multiplier matrix at a periodic point,
/// monic of degree N in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    /// Lowest degree first; the last entry is 1.
    coeffs: Vec<Rational>,
    pub point: Option<ProjectivePoint>,
    pub period: u32,
}

impl CharPoly {
    pub fn from_coeffs(
        coeffs: Vec<Rational>,
        point: Option<ProjectivePoint>,
        period: u32,
    ) -> Result<Self> {
        if coeffs.last().is_none_or(|c| !c.is_one()) {
            return Err(Error::domain("characteristic polynomial must be monic"));
        }
        Ok(CharPoly {
            coeffs,
            point,
            period,
        })
    }

    /// Monic polynomial with the given roots.
    pub fn from_eigenvalues(eigs: &[Rational]) -> Self {
        let mut c = vec![Rational::one()];
        for e in eigs {
            let mut next = vec![Rational::zero(); c.len() + 1];
            for (k, ck) in c.iter().enumerate() {
                next[k + 1] += ck;
                next[k] -= ck * e;
            }
            c = next;
        }
        CharPoly {
            coeffs: c,
            point: None,
            period: 1,
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        crate::exactpoly::univariate::ueval(&self.coeffs, t)
    }

    /// As a polynomial in the variable `t` of `vars`.
    pub fn to_poly(&self, vars: &Vars, t: &str) -> Result<Poly> {
        let i = vars.require(t)?;
        Ok(Poly::from_univariate(vars, i, &self.coeffs))
    }

    /// Rational eigenvalues with multiplicity, when they are all rational.
    pub fn rational_eigenvalues(&self) -> Option<Vec<Rational>> {
        let roots = rational_roots_coeffs(&self.coeffs).ok()?;
        let mut out = Vec::new();
        for (r, m) in roots {
            for _ in 0..m {
                out.push(r.clone());
            }
        }
        (out.len() == self.degree()).then_some(out)
    }

    /// Same polynomial without the point annotation.
    pub fn bare(&self) -> CharPoly {
        CharPoly {
            coeffs: self.coeffs.clone(),
            point: None,
            period: self.period,
        }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = Vars::new(&["t"]).unwrap();
        write!(f, "{}", Poly::from_univariate(&v, 0, &self.coeffs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub point: ProjectivePoint,
    pub charpoly: CharPoly,
    pub multiplicity: u32,
}

/// All period-n points of a map with their multiplier polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumList {
    pub n: u32,
    pub dim: usize,
    pub degree: u32,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumList {
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity as usize).sum()
    }

    /// (charpoly, multiplicity) pairs.
    pub fn charpolys(&self) -> Vec<(CharPoly, u32)> {
        self.entries
            .iter()
            .map(|e| (e.charpoly.clone(), e.multiplicity))
            .collect()
    }
}

/// Checks `g(P) = P` projectively.
fn is_fixed(g: &DynamicalSystem, p: &[Rational]) -> bool {
    let img = g.eval(p);
    if img.iter().all(|c| c.is_zero()) {
        return false;
    }
    (0..p.len()).all(|i| (0..p.len()).all(|k| &img[i] * &p[k] == &img[k] * &p[i]))
}

/// Multiplier matrix of the fixed point `a` (homogeneous, `a[j] = 1`) of `g`
/// in chart `j`: entries (∂_k g_i − a_i ∂_k g_j)/g_j at `a`, i, k ≠ j.
pub(crate) fn multiplier_matrix(g: &DynamicalSystem, a: &[Rational], j: usize) -> QMatrix {
    let n = a.len();
    let gj = g.coords()[j].eval(a);
    let idx: Vec<usize> = (0..n).filter(|&i| i != j).collect();
    let dgj: Vec<Rational> = idx
        .iter()
        .map(|&k| g.coords()[j].derivative_index(k).eval(a))
        .collect();
    idx.iter()
        .map(|&i| {
            idx.iter()
                .enumerate()
                .map(|(kk, &k)| {
                    (g.coords()[i].derivative_index(k).eval(a) - &a[i] * &dgj[kk]) / &gj
                })
                .collect()
        })
        .collect()
}

/// γ_{f,P} computed in chart `j` (requires P_j ≠ 0).
pub fn multiplier_charpoly_in_chart(
    f: &DynamicalSystem,
    p: &ProjectivePoint,
    n: u32,
    j: usize,
) -> Result<CharPoly> {
    let g = f.iterate(n)?;
    charpoly_of_iterate(&g, p, n, j)
}

fn charpoly_of_iterate(
    g: &DynamicalSystem,
    p: &ProjectivePoint,
    n: u32,
    j: usize,
) -> Result<CharPoly> {
    if p.coords().len() != g.vars().len() {
        return Err(Error::domain("point dimension does not match the map"));
    }
    if j >= p.coords().len() || p.coords()[j].is_zero() {
        return Err(Error::domain(format!("point {p} has zero coordinate {j}")));
    }
    if !is_fixed(g, p.coords()) {
        return Err(Error::NotPeriodic(p.to_string(), n));
    }
    let s = p.coords()[j].recip();
    let a: Vec<Rational> = p.coords().iter().map(|c| c * &s).collect();
    let m = multiplier_matrix(g, &a, j);
    CharPoly::from_coeffs(charpoly(&m), Some(p.clone()), n)
}

/// γ_{f^n,P} using the chart of the last nonzero coordinate.
pub fn multiplier_charpoly(f: &DynamicalSystem, p: &ProjectivePoint, n: u32) -> Result<CharPoly> {
    multiplier_charpoly_in_chart(f, p, n, p.chart())
}

/// Rational solutions of a zero-dimensional system, by lex triangularization
/// and back substitution. Fails with `IrrationalSpectrum` if some solution
/// is not rational.
pub fn solve_rational_points(
    gens: &[Poly],
    vars: &Vars,
    limits: &GbLimits,
) -> Result<Vec<Vec<Rational>>> {
    let mut out = Vec::new();
    solve_rec(gens, vars, &mut Vec::new(), limits, &mut out, None)?;
    out.sort();
    Ok(out)
}

/// Like [`solve_rational_points`], but skips non-rational branches. The flag
/// is true when some solution was skipped.
pub fn rational_points_lenient(
    gens: &[Poly],
    vars: &Vars,
    limits: &GbLimits,
) -> Result<(Vec<Vec<Rational>>, bool)> {
    let mut out = Vec::new();
    let mut skipped = false;
    solve_rec(
        gens,
        vars,
        &mut Vec::new(),
        limits,
        &mut out,
        Some(&mut skipped),
    )?;
    out.sort();
    Ok((out, skipped))
}

/// `fixed` holds values for the last `fixed.len()` variables.
fn solve_rec(
    gens: &[Poly],
    vars: &Vars,
    fixed: &mut Vec<Rational>,
    limits: &GbLimits,
    out: &mut Vec<Vec<Rational>>,
    mut skipped: Option<&mut bool>,
) -> Result<()> {
    let n = vars.len();
    let k = fixed.len();
    let assign: Vec<(usize, Rational)> = fixed
        .iter()
        .enumerate()
        .map(|(i, v)| (n - k + i, v.clone()))
        .collect();
    let spec: Vec<Poly> = gens
        .iter()
        .map(|g| g.specialize(&assign))
        .filter(|g| !g.is_zero())
        .collect();
    if spec.iter().any(|g| g.is_constant()) {
        return Ok(());
    }
    if k == n {
        out.push(fixed.clone());
        return Ok(());
    }
    if spec.is_empty() {
        return Err(Error::domain("periodic locus is not zero-dimensional"));
    }
    let gb = groebner_basis(&spec, &MonomialOrder::lex_natural(n), limits)?;
    if gb.is_unit() {
        return Ok(());
    }
    let v = n - k - 1;
    let uni: Vec<&Poly> = gb
        .basis()
        .iter()
        .filter(|g| g.support().iter().all(|&i| i == v))
        .collect();
    let Some(p) = uni.first() else {
        return Err(Error::domain("periodic locus is not zero-dimensional"));
    };
    let coeffs = p.univariate_coeffs(v)?;
    let roots = rational_roots_coeffs(&coeffs)?;
    let rational_degree: u32 = roots.iter().map(|(_, m)| *m).sum();
    if udegree(&coeffs).finite() != Some(rational_degree) {
        if let Some(flag) = skipped.as_deref_mut() {
            *flag = true;
        } else {
            return Err(Error::IrrationalSpectrum(format!(
                "eliminant {} in {} has non-rational roots",
                p,
                vars.names()[v]
            )));
        }
    }
    let gens_next = gb.basis().to_vec();
    for (r, _) in roots {
        fixed.insert(0, r);
        solve_rec(&gens_next, vars, fixed, limits, out, skipped.as_deref_mut())?;
        fixed.remove(0);
    }
    Ok(())
}

/// Local multiplicity of the ideal (gens) at the rational point `a`.
pub(crate) fn local_multiplicity(gens: &[Poly], a: &[Rational], limits: &GbLimits) -> Result<u32> {
    let vars = gens[0].vars().clone();
    let n = vars.len();
    // nonsingular Jacobian means a simple point
    let jac: QMatrix = gens
        .iter()
        .map(|g| (0..n).map(|k| g.derivative_index(k).eval(a)).collect())
        .collect();
    if gens.len() == n && !det(&jac).is_zero() {
        return Ok(1);
    }
    let shift: Vec<Poly> = (0..n)
        .map(|k| &Poly::var_index(&vars, k) + &Poly::constant(&vars, a[k].clone()))
        .collect();
    let shifted: Vec<Poly> = gens.iter().map(|g| g.compose(&shift, &vars)).collect();
    let order = MonomialOrder::degrevlex_natural(n);
    let mut prev = 0usize;
    for k in 1u32.. {
        let mut all = shifted.clone();
        all.extend(
            monomials_of_degree(n, k)
                .into_iter()
                .map(|m| Poly::monomial(&vars, m, Rational::one())),
        );
        let gb = groebner_basis(&all, &order, limits)?;
        let dim = gb
            .standard_monomial_count()
            .expect("zero-dimensional by construction");
        if dim == prev {
            return Ok(dim as u32);
        }
        prev = dim;
    }
    unreachable!()
}

pub(crate) fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    if n == 0 {
        return if d == 0 {
            vec![Monomial::one(0)]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == exps.len() - 1 {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
    }
    rec(0, d, &mut exps, &mut out);
    out
}

/// Every period-n point with its multiplier polynomial and multiplicity.
/// Requires all such points to be rational.
pub fn rational_periodic_spectrum(
    f: &DynamicalSystem,
    n: u32,
    limits: &GbLimits,
) -> Result<SpectrumList> {
    let g = f.iterate(n)?;
    let dim = f.dim();
    let expected = period_count_usize(dim, f.degree(), n)?;
    let mut entries = Vec::new();
    for j in (0..=dim).rev() {
        let aff = g.dehomogenize(j)?;
        let full = aff.fixed_generators();
        let mut stratum = full.clone();
        // chart variable index of x_k is k-1 for k > j
        for k in j + 1..=dim {
            stratum.push(Poly::var_index(&aff.vars, k - 1));
        }
        for a in solve_rational_points(&stratum, &aff.vars, limits)? {
            let mut hom = a.clone();
            hom.insert(j, Rational::one());
            let point = ProjectivePoint::new(hom)?;
            let multiplicity = local_multiplicity(&full, &a, limits)?;
            let charpoly = charpoly_of_iterate(&g, &point, n, j)?;
            entries.push(SpectrumEntry {
                point,
                charpoly,
                multiplicity,
            });
        }
    }
    let total: usize = entries.iter().map(|e| e.multiplicity as usize).sum();
    if total != expected {
        return Err(Error::IrrationalSpectrum(format!(
            "found {total} rational periodic points with multiplicity, expected {expected}"
        )));
    }
    Ok(SpectrumList {
        n,
        dim,
        degree: f.degree(),
        entries,
    })
}
