//! Identities among multiplier invariants: Ueda's fixed-point relation, the
//! corollary relation on a σ-table, and the dependence of σ_{i,j} (i > j) on
//! σ_{1,j}..σ_{j,j}.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::rational::binomial;
use crate::exactpoly::{Poly, Rational, Vars};
use crate::projdyn::{period_count, CharPoly, SpectrumList};
use crate::sigma::{SigmaMode, SigmaTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UedaReport {
    /// Σ_P mult(P)·γ_P(t)/γ_P(1).
    pub lhs: Poly,
    /// Σ_{k=0}^N d^k t^{N−k}.
    pub rhs: Poly,
    pub holds: bool,
}

impl UedaReport {
    pub fn residual(&self) -> Poly {
        &self.lhs - &self.rhs
    }
}

fn t_ring() -> Vars {
    Vars::new(&["t"]).unwrap()
}

/// Σ_{k=0}^N d^k t^{N−k} = (t^{N+1} − d^{N+1})/(t − d).
pub fn ueda_rhs(dim: usize, degree: u32) -> Poly {
    let vars = t_ring();
    let t = Poly::var_index(&vars, 0);
    let d = Rational::from_integer(degree.into());
    (0..=dim).fold(Poly::zero(&vars), |acc, k| {
        &acc + &t
            .pow_u((dim - k) as u32)
            .scale(&num_traits::pow(d.clone(), k))
    })
}

pub fn check_ueda(spec: &SpectrumList) -> Result<UedaReport> {
    if spec.n != 1 {
        return Err(Error::domain(
            "Ueda's relation is about fixed points (period 1)",
        ));
    }
    check_ueda_charpolys(&spec.charpolys(), spec.dim, spec.degree)
}

/// Ueda's relation from bare characteristic polynomials with multiplicities.
pub fn check_ueda_charpolys(
    polys: &[(CharPoly, u32)],
    dim: usize,
    degree: u32,
) -> Result<UedaReport> {
    let total: u64 = polys.iter().map(|(_, m)| *m as u64).sum();
    let expected = period_count(dim, degree, 1);
    if BigInt::from(total) != expected {
        return Err(Error::domain(format!(
            "spectrum has {total} points with multiplicity, expected {expected}"
        )));
    }
    let vars = t_ring();
    let one = Rational::one();
    let mut lhs = Poly::zero(&vars);
    for (cp, m) in polys {
        if cp.degree() != dim {
            return Err(Error::domain(format!(
                "characteristic polynomial {cp} has degree {} ≠ {dim}",
                cp.degree()
            )));
        }
        let at1 = cp.eval(&one);
        if at1.is_zero() {
            return Err(Error::domain(format!(
                "multiplier 1 present ({cp} vanishes at t = 1)"
            )));
        }
        let scale = Rational::from_integer((*m).into()) / at1;
        lhs = &lhs + &cp.to_poly(&vars, "t")?.scale(&scale);
    }
    let rhs = ueda_rhs(dim, degree);
    let holds = lhs == rhs;
    Ok(UedaReport { lhs, rhs, holds })
}

/// Σ 1/(1 − λ) over a dimension-1 fixed-point spectrum.
pub fn holomorphic_index_sum(multipliers: &[Rational]) -> Result<Rational> {
    let one = Rational::one();
    multipliers.iter().try_fold(Rational::zero(), |acc, l| {
        let den = &one - l;
        if den.is_zero() {
            Err(Error::domain("multiplier 1 present"))
        } else {
            Ok(acc + den.recip())
        }
    })
}

/// (D₁ − 1) + Σ_{k=1}^{N·D₁} (−1)^{k+1}(σ_{D₁,k} − σ_{D₁−1,k}).
pub fn corollary_residual(table: &SigmaTable) -> Result<Rational> {
    if table.mode != SigmaMode::Chow || table.n != 1 {
        return Err(Error::domain(
            "the corollary relation needs a chow-mode table of period 1",
        ));
    }
    let d = table
        .dn
        .to_usize()
        .ok_or_else(|| Error::ResourceLimit("D_1 too large".into()))?;
    let mut acc = Rational::from_integer(BigInt::from(d) - 1);
    for k in 1..=table.dim * d {
        let term = table.get(d, k) - table.get(d - 1, k);
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

pub fn check_corollary_relation(table: &SigmaTable) -> Result<bool> {
    Ok(corollary_residual(table)?.is_zero())
}

/// Coefficients z_1..z_j with σ_{i,j} = Σ_{k ≤ min(i,j)} C(D−k, i−k)·z_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionPredictor {
    pub j: usize,
    pub dn: u64,
    pub z: Vec<Rational>,
}

fn coefficient(dn: u64, i: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(dn - k as u64, (i - k) as u64))
}

/// Fits the predictor to the row σ_{1,j}..σ_{j,j} by forward substitution.
pub fn fit_partition_predictor(row: &[Rational], j: usize, dn: u64) -> Result<PartitionPredictor> {
    if j == 0 || row.len() != j {
        return Err(Error::domain(format!(
            "need j ≥ 1 and exactly j = {j} values, got {}",
            row.len()
        )));
    }
    if dn < j as u64 {
        return Err(Error::domain(format!("D_n = {dn} is smaller than j = {j}")));
    }
    let mut z: Vec<Rational> = Vec::with_capacity(j);
    for i in 1..=j {
        let known: Rational = (1..i).map(|k| coefficient(dn, i, k) * &z[k - 1]).sum();
        z.push(&row[i - 1] - known);
    }
    Ok(PartitionPredictor { j, dn, z })
}

pub fn predict_sigma(pred: &PartitionPredictor, i: usize) -> Result<Rational> {
    if i <= pred.j || i as u64 > pred.dn {
        return Err(Error::OutOfRange(format!(
            "i = {i} must satisfy {} < i ≤ {}",
            pred.j, pred.dn
        )));
    }
    Ok((1..=pred.j)
        .map(|k| coefficient(pred.dn, i, k) * &pred.z[k - 1])
        .sum())
}

/// One σ_{i,j} with i > j whose prediction disagrees with the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceMismatch {
    pub i: usize,
    pub j: usize,
    pub predicted: Rational,
    pub actual: Rational,
}

impl fmt::Display for DependenceMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "σ_{{{},{}}}: predicted {} but the table has {}",
            self.i, self.j, self.predicted, self.actual
        )
    }
}

/// Fits every column j ≥ 1 of a table and compares all predictions for i > j.
pub fn check_dependence(table: &SigmaTable) -> Result<Vec<DependenceMismatch>> {
    let top = table.top();
    let dn = top as u64;
    let mut bad = Vec::new();
    for j in 1..=top.min(table.dim * top) {
        let row: Vec<Rational> = (1..=j).map(|i| table.get(i, j)).collect();
        let pred = fit_partition_predictor(&row, j, dn)?;
        for i in j + 1..=top {
            let p = predict_sigma(&pred, i)?;
            let a = table.get(i, j);
            if p != a {
                bad.push(DependenceMismatch {
                    i,
                    j,
                    predicted: p,
                    actual: a,
                });
            }
        }
    }
    Ok(bad)
}
