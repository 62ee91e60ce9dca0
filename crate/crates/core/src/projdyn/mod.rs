//! Endomorphisms of projective space: validation, iteration, conjugation
//! and affine charts.

mod spectrum;

pub use spectrum::{
    multiplier_charpoly, multiplier_charpoly_in_chart, rational_periodic_spectrum,
    rational_points_lenient, solve_rational_points, CharPoly, SpectrumEntry, SpectrumList,
};

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::matrix::{inverse, QMatrix};
use crate::exactpoly::rational::content_of;
use crate::exactpoly::{parse_poly, MonomialOrder, Poly, Rational, Vars};
use crate::groebner::{groebner_basis, GbLimits, Ideal};

/// A morphism of P^N given by N+1 homogeneous polynomials of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynamicalSystem {
    vars: Vars,
    coords: Vec<Poly>,
    degree: u32,
}

impl DynamicalSystem {
    /// Validates and normalizes `coords` (all in one ring of N+1 variables).
    pub fn new(coords: Vec<Poly>) -> Result<Self> {
        let sys = Self::from_coords_unchecked(coords)?;
        sys.check_morphism()?;
        Ok(sys)
    }

    /// Parses coordinates written in `vars` (default `x0..xN`).
    pub fn parse<S: AsRef<str>>(coords: &[S], vars: Option<&[String]>) -> Result<Self> {
        let vars = match vars {
            Some(v) => Vars::new(v)?,
            None => Vars::indexed("x", coords.len()),
        };
        let polys = coords
            .iter()
            .map(|c| parse_poly(c.as_ref(), &vars))
            .collect::<Result<Vec<_>>>()?;
        Self::new(polys)
    }

    /// Structural checks and normalization without the morphism test.
    pub(crate) fn from_coords_unchecked(coords: Vec<Poly>) -> Result<Self> {
        let first = coords
            .first()
            .ok_or_else(|| Error::invalid_map("no coordinates"))?;
        let vars = first.vars().clone();
        if coords.len() != vars.len() {
            return Err(Error::invalid_map(format!(
                "{} coordinates for {} variables",
                coords.len(),
                vars.len()
            )));
        }
        if coords.len() < 2 {
            return Err(Error::invalid_map(
                "projective dimension must be at least 1",
            ));
        }
        let mut degree = None;
        for (i, c) in coords.iter().enumerate() {
            if !c.vars().same(&vars) {
                return Err(Error::VariableMismatch {
                    left: vars.to_vec(),
                    right: c.vars().to_vec(),
                });
            }
            if c.is_zero() {
                // the zero coordinate shares every zero of the others
                continue;
            }
            let d = c
                .homogeneous_degree()
                .ok_or_else(|| Error::invalid_map(format!("coordinate {i} is not homogeneous")))?;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(Error::invalid_map(format!(
                        "coordinate {i} has degree {d}, expected {e}"
                    )))
                }
                _ => {}
            }
        }
        let degree = degree.ok_or_else(|| Error::invalid_map("all coordinates are zero"))?;
        if degree < 2 {
            return Err(Error::invalid_map(format!("degree {degree} is below 2")));
        }
        let mut sys = DynamicalSystem {
            vars,
            coords,
            degree,
        };
        sys.normalize();
        Ok(sys)
    }

    /// Joint content removal; the first nonzero coordinate gets a positive
    /// leading coefficient.
    fn normalize(&mut self) {
        let c = content_of(
            self.coords
                .iter()
                .flat_map(|p| p.terms().iter().map(|(_, c)| c)),
        );
        if c.is_zero() {
            return;
        }
        let lead_negative = self
            .coords
            .iter()
            .find(|p| !p.is_zero())
            .and_then(|p| p.lex_leading_coefficient())
            .is_some_and(|c| c.is_negative());
        let s = if lead_negative { -c.recip() } else { c.recip() };
        for p in self.coords.iter_mut() {
            *p = p.scale(&s);
        }
    }

    /// Every variable has a pure power among the leading monomials of a
    /// graded basis of (f_0, ..., f_N), i.e. the only common zero is 0.
    pub fn check_morphism(&self) -> Result<()> {
        if self.coords.iter().any(|c| c.is_zero()) {
            return Err(Error::NotMorphism);
        }
        let order = MonomialOrder::degrevlex_natural(self.vars.len());
        let gb = groebner_basis(&self.coords, &order, &GbLimits::default())?;
        let lms = gb.leading_monomials();
        for i in 0..self.vars.len() {
            if !lms.iter().any(|m| m.pure_power_of() == Some(i)) {
                return Err(Error::NotMorphism);
            }
        }
        Ok(())
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    /// Projective dimension N.
    pub fn dim(&self) -> usize {
        self.vars.len() - 1
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The same map written in other variable names.
    pub fn rename(&self, names: &[String]) -> Result<Self> {
        let target = Vars::new(names)?;
        if target.len() != self.vars.len() {
            return Err(Error::invalid_map(
                "renaming must keep the number of variables",
            ));
        }
        let images: Vec<Poly> = (0..target.len())
            .map(|i| Poly::var_index(&target, i))
            .collect();
        let coords = self
            .coords
            .iter()
            .map(|c| c.compose(&images, &target))
            .collect();
        Ok(DynamicalSystem {
            vars: target,
            coords,
            degree: self.degree,
        })
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &DynamicalSystem) -> Result<Self> {
        if !self.vars.same(&other.vars) {
            return Err(Error::VariableMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            });
        }
        let coords = self
            .coords
            .iter()
            .map(|c| c.compose(&other.coords, &self.vars))
            .collect();
        let mut sys = DynamicalSystem {
            vars: self.vars.clone(),
            coords,
            degree: self.degree * other.degree,
        };
        sys.normalize();
        Ok(sys)
    }

    /// f^n. The iterate of a morphism is a morphism, so no re-validation.
    pub fn iterate(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("iterate needs n >= 1"));
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = self.compose(&out)?;
        }
        Ok(out)
    }

    /// `m^{-1} ∘ f ∘ m` for an invertible matrix acting on column vectors.
    pub fn conjugate(&self, m: &QMatrix) -> Result<Self> {
        let n = self.vars.len();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::domain(format!("conjugating matrix must be {n}x{n}")));
        }
        let inv = inverse(m)?;
        let linear = |mat: &QMatrix, polys: &[Poly]| -> Vec<Poly> {
            mat.iter()
                .map(|row| {
                    row.iter()
                        .zip(polys)
                        .filter(|(c, _)| !c.is_zero())
                        .fold(Poly::zero(&self.vars), |acc, (c, p)| &acc + &p.scale(c))
                })
                .collect()
        };
        let xs: Vec<Poly> = (0..n).map(|i| Poly::var_index(&self.vars, i)).collect();
        let mx = linear(m, &xs);
        let fm: Vec<Poly> = self
            .coords
            .iter()
            .map(|c| c.compose(&mx, &self.vars))
            .collect();
        let coords = linear(&inv, &fm);
        let mut sys = DynamicalSystem {
            vars: self.vars.clone(),
            coords,
            degree: self.degree,
        };
        sys.normalize();
        Ok(sys)
    }

    /// Image of a point (not rescaled).
    pub fn eval(&self, point: &[Rational]) -> Vec<Rational> {
        self.coords.iter().map(|c| c.eval(point)).collect()
    }

    /// Variables of the affine chart `x_j = 1`.
    pub fn chart_vars(&self, j: usize) -> Vars {
        let names: Vec<String> = self
            .vars
            .names()
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != j)
            .map(|(_, s)| s.clone())
            .collect();
        Vars::new(&names).expect("subset of valid names")
    }

    /// Dehomogenization at chart `j`.
    pub fn dehomogenize(&self, j: usize) -> Result<AffineChart> {
        if j > self.dim() {
            return Err(Error::OutOfRange(format!("chart {j} for P^{}", self.dim())));
        }
        let chart = self.chart_vars(j);
        let mut sub = HashMap::new();
        sub.insert(self.vars.names()[j].clone(), Poly::one(&chart));
        let dh = |p: &Poly| p.substitute(&sub, &chart);
        let numerators = (0..=self.dim())
            .filter(|&i| i != j)
            .map(|i| dh(&self.coords[i]))
            .collect::<Result<_>>()?;
        let denominator = dh(&self.coords[j])?;
        Ok(AffineChart {
            chart: j,
            vars: chart,
            numerators,
            denominator,
        })
    }

    /// Generators `f^n_i|_{x_j=1} - x_i f^n_j|_{x_j=1}`, i != j, of the
    /// periodic-point ideal in chart `j`.
    pub fn fixed_ideal_chart(&self, n: u32, j: usize) -> Result<Ideal> {
        let g = self.iterate(n)?;
        let aff = g.dehomogenize(j)?;
        let gens = aff.fixed_generators();
        let order = MonomialOrder::lex_natural(aff.vars.len());
        Ideal::new(&aff.vars, gens, order)
    }
}

impl fmt::Display for DynamicalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

/// A dehomogenized map: `x_i -> numerators[i] / denominator` on the chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineChart {
    pub chart: usize,
    pub vars: Vars,
    pub numerators: Vec<Poly>,
    pub denominator: Poly,
}

impl AffineChart {
    pub fn fixed_generators(&self) -> Vec<Poly> {
        self.numerators
            .iter()
            .enumerate()
            .map(|(k, num)| num - &(&Poly::var_index(&self.vars, k) * &self.denominator))
            .collect()
    }
}

/// A rational point of P^N scaled so its last nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(Vec<Rational>);

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let last = coords
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or_else(|| Error::domain("the zero vector is not a projective point"))?;
        let s = coords[last].recip();
        Ok(ProjectivePoint(coords.iter().map(|c| c * &s).collect()))
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    /// Index of the last nonzero coordinate (the point's stratum chart).
    pub fn chart(&self) -> usize {
        self.0.iter().rposition(|c| !c.is_zero()).unwrap()
    }

    pub fn is_one_at(&self, j: usize) -> bool {
        self.0[j].is_one()
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// D_n = (d^{n(N+1)} - 1)/(d^n - 1), the number of period-n points with
/// multiplicity.
pub fn period_count(n_dim: usize, d: u32, n: u32) -> BigInt {
    // fixed points of f^n, a map of degree d^n
    let dn = num_traits::pow(BigInt::from(d), n as usize);
    (num_traits::pow(dn.clone(), n_dim + 1) - BigInt::one()) / (dn - BigInt::one())
}

/// `period_count` as a machine integer, for loops and degrees.
pub fn period_count_usize(n_dim: usize, d: u32, n: u32) -> Result<usize> {
    usize::try_from(period_count(n_dim, d, n))
        .map_err(|_| Error::ResourceLimit("D_n does not fit in memory".into()))
}
