//! Σ_n(f) = ∏_P (w − γ_{f^n,P}(t)) by per-chart elimination, and the
//! σ_{i,j} invariants read off its coefficients.

mod dim1;
mod quotient;
mod table;

pub use dim1::sigma_dim1_resultant;
pub use table::{extract_sigmas, SigmaTable};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::rational::binomial;
use crate::exactpoly::{Degree, Monomial, MonomialOrder, Poly, Rational, Vars};
use crate::groebner::{buchberger, groebner_basis, GbLimits, Ideal};
use crate::projdyn::{period_count, DynamicalSystem, SpectrumList};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigmaMode {
    /// Multiplicity-free per chart: the elimination generator of (X_j, w·den − num).
    Plain,
    /// Multiplicity-preserving, via an adjoined linear form (Chow form).
    Chow,
}

impl SigmaMode {
    pub fn name(self) -> &'static str {
        match self {
            SigmaMode::Plain => "plain",
            SigmaMode::Chow => "chow",
        }
    }
}

impl std::str::FromStr for SigmaMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(SigmaMode::Plain),
            "chow" => Ok(SigmaMode::Chow),
            other => Err(Error::Parse(format!(
                "unknown mode `{other}` (expected chow or plain)"
            ))),
        }
    }
}

/// How the Chow-mode linear form is adjoined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChowForm {
    /// One extra variable `s` with u_i = s·c_i for fixed integers c_i.
    Line,
    /// Independent variables u_1..u_k, as in the textbook construction.
    Full,
}

/// How a chart factor is obtained from the chart's fixed-point ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigmaEngine {
    /// Grevlex basis of the fixed-point ideal, then linear algebra on the
    /// quotient algebra (characteristic or minimal polynomial of g).
    Quotient,
    /// One Groebner basis per chart in an elimination order, keeping (w, t).
    Elimination,
}

impl std::str::FromStr for SigmaEngine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quotient" => Ok(SigmaEngine::Quotient),
            "elimination" => Ok(SigmaEngine::Elimination),
            other => Err(Error::Parse(format!(
                "unknown engine `{other}` (expected quotient or elimination)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaOptions {
    pub limits: GbLimits,
    pub engine: SigmaEngine,
    pub chow_form: ChowForm,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        SigmaOptions {
            limits: GbLimits::default(),
            engine: SigmaEngine::Quotient,
            chow_form: ChowForm::Line,
        }
    }
}

/// Σ_n(f) as a polynomial in (w, t) with its metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPolynomial {
    pub poly: Poly,
    pub n: u32,
    pub dim: usize,
    pub degree: u32,
    pub dn: BigInt,
    pub mode: SigmaMode,
}

/// The shared (w, t) ring.
pub fn wt_vars() -> Vars {
    Vars::new(&["w", "t"]).unwrap()
}

impl SigmaPolynomial {
    pub fn degree_w(&self) -> u32 {
        self.poly.degree_in(0).finite().unwrap_or(0)
    }

    /// Coefficient of w^k as a polynomial in the same ring (w-free).
    pub fn w_coefficient(&self, k: u32) -> Poly {
        let cs = self.poly.coefficients_in(0);
        cs.get(k as usize)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.poly.vars()))
    }

    /// The structural invariants every Σ must satisfy.
    pub fn check_invariants(&self) -> Result<()> {
        let dw = self.degree_w();
        let lead = self.w_coefficient(dw);
        if !lead.is_one() {
            return Err(Error::domain(format!(
                "Σ is not monic in w (leading coefficient {lead})"
            )));
        }
        for i in 0..=dw {
            let c = self.w_coefficient(dw - i);
            if let Degree::Finite(td) = c.degree_in(1) {
                if td as usize > self.dim * i as usize {
                    return Err(Error::domain(format!(
                        "coefficient of w^{} has t-degree {td} > {}",
                        dw - i,
                        self.dim * i as usize
                    )));
                }
            }
        }
        if self.mode == SigmaMode::Chow {
            if BigInt::from(dw) != self.dn {
                return Err(Error::domain(format!(
                    "chow Σ has w-degree {dw}, expected D_n = {}",
                    self.dn
                )));
            }
            let td = |i: u32| Monomial::from_exponents(&[dw - i, self.dim as u32 * i]);
            for i in 0..=dw {
                let c = self.poly.coefficient(&td(i));
                let sign = if i % 2 == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                let want = Rational::from_integer(binomial(dw as u64, i as u64)) * &sign;
                if c != want {
                    return Err(Error::domain(format!(
                        "σ_{{{i},0}} is {} but should be C({dw},{i})",
                        &c * &sign
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for SigmaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Σ_n(f) by elimination: loop over charts j = N..0, restrict to the
/// stratum where x_{j+1} = … = x_N = 0, eliminate, multiply.
pub fn sigma_poly(
    f: &DynamicalSystem,
    n: u32,
    mode: SigmaMode,
    opts: &SigmaOptions,
) -> Result<SigmaPolynomial> {
    let canonical = f.rename(&Vars::indexed("x", f.dim() + 1).to_vec())?;
    let g = canonical.iterate(n)?;
    let wt = wt_vars();
    let mut acc = Poly::one(&wt);
    for j in (0..=f.dim()).rev() {
        let factor = chart_factor(&g, j, mode, opts)?;
        acc = &acc * &factor;
    }
    let out = SigmaPolynomial {
        poly: acc,
        n,
        dim: f.dim(),
        degree: f.degree(),
        dn: period_count(f.dim(), f.degree(), n),
        mode,
    };
    out.check_invariants()?;
    Ok(out)
}

/// Data of chart j restricted to its stratum, in the ring
/// (x_0..x_{j-1}, extra..., w, t).
struct ChartData {
    ring: Vars,
    nfree: usize,
    fixed: Vec<Poly>,
    den: Poly,
    num: Poly,
}

fn chart_data(g: &DynamicalSystem, j: usize, extra: &[String]) -> Result<ChartData> {
    let aff = g.dehomogenize(j)?;
    let nn = aff.vars.len();
    let mut names: Vec<String> = aff.vars.to_vec();
    names.extend(extra.iter().cloned());
    names.push("w".into());
    names.push("t".into());
    let big = Vars::new(&names)?;
    let lift = |p: &Poly| p.with_vars(&big);
    let fj = lift(&aff.denominator)?;
    let fi: Vec<Poly> = aff.numerators.iter().map(lift).collect::<Result<_>>()?;
    let (num, den) = quotient::chart_charpoly(&fj, &fi, &big)?;
    let x = |k: usize| Poly::var_index(&big, k);
    let fixed: Vec<Poly> = (0..nn).map(|i| &fi[i] - &(&x(i) * &fj)).collect();

    // stratum: chart variables with index >= j are x_{j+1}..x_N
    let zeros: Vec<(usize, Rational)> = (j..nn).map(|k| (k, Rational::zero())).collect();
    let mut small_names: Vec<String> = names[..j].to_vec();
    small_names.extend(names[nn..].iter().cloned());
    let small = Vars::new(&small_names)?;
    let down = |p: &Poly| p.specialize(&zeros).with_vars(&small);
    Ok(ChartData {
        fixed: fixed
            .iter()
            .map(down)
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|p| !p.is_zero())
            .collect(),
        den: down(&den)?,
        num: down(&num)?,
        ring: small,
        nfree: j,
    })
}

/// Multiplicity of the stratum scheme: dim_Q Q[x]/(fixed generators).
fn stratum_length(data: &ChartData, limits: &GbLimits) -> Result<usize> {
    if data.fixed.iter().any(|p| p.is_constant()) {
        return Ok(0);
    }
    if data.nfree == 0 {
        return Ok(1);
    }
    let sub = Vars::new(&data.ring.names()[..data.nfree])?;
    let gens: Vec<Poly> = data
        .fixed
        .iter()
        .map(|p| p.with_vars(&sub))
        .collect::<Result<_>>()?;
    let not_finite = || Error::domain("periodic locus of a stratum is not zero-dimensional");
    if gens.is_empty() {
        return Err(not_finite());
    }
    let gb = groebner_basis(&gens, &MonomialOrder::degrevlex_natural(sub.len()), limits)?;
    gb.standard_monomial_count().ok_or_else(not_finite)
}

/// Deterministic integer weights for the Chow line, one list per attempt.
fn line_weights(k: usize, attempt: usize) -> Vec<i64> {
    const PRIMES: [i64; 12] = [1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
    (0..k)
        .map(|i| {
            PRIMES[(i * (attempt + 1) + attempt) % PRIMES.len()]
                * if (i + attempt).is_multiple_of(2) {
                    1
                } else {
                    -1
                }
        })
        .collect()
}

fn chart_factor(
    g: &DynamicalSystem,
    j: usize,
    mode: SigmaMode,
    opts: &SigmaOptions,
) -> Result<Poly> {
    if opts.engine == SigmaEngine::Quotient {
        return quotient::quotient_factor(g, j, mode, &opts.limits);
    }
    let wt = wt_vars();
    match mode {
        SigmaMode::Plain => {
            let data = chart_data(g, j, &[])?;
            if data.den.is_zero() {
                return Ok(Poly::one(&wt));
            }
            let h = &(&Poly::var(&data.ring, "w")? * &data.den) - &data.num;
            let mut gens = data.fixed.clone();
            gens.push(h);
            let keep = ["w", "t"];
            let e = eliminate(&data.ring, gens, &keep, &opts.limits, j)?;
            match e {
                None => Ok(Poly::one(&wt)),
                Some(p) => monic_in_w(&p.with_vars(&wt)?, j),
            }
        }
        SigmaMode::Chow => match opts.chow_form {
            ChowForm::Line => chow_line(g, j, opts),
            ChowForm::Full => chow_full(g, j, opts),
        },
    }
}

fn chow_line(g: &DynamicalSystem, j: usize, opts: &SigmaOptions) -> Result<Poly> {
    let wt = wt_vars();
    let data = chart_data(g, j, &["s".to_string()])?;
    if data.den.is_zero() {
        return Ok(Poly::one(&wt));
    }
    let length = stratum_length(&data, &opts.limits)?;
    if length == 0 {
        return Ok(Poly::one(&wt));
    }
    let s = Poly::var(&data.ring, "s")?;
    let h = &(&Poly::var(&data.ring, "w")? * &data.den) - &data.num;
    let attempts = if data.nfree == 0 { 1 } else { 6 };
    let mut last_degree = 0;
    for attempt in 0..attempts {
        let weights = line_weights(data.nfree, attempt);
        let ell = weights
            .iter()
            .enumerate()
            .fold(Poly::zero(&data.ring), |acc, (k, &c)| {
                &acc + &Poly::var_index(&data.ring, k).scale(&Rational::from_integer(c.into()))
            });
        let mut gens = data.fixed.clone();
        gens.push(&h + &(&(&s * &data.den) * &ell));
        let e = eliminate(&data.ring, gens, &["s", "w", "t"], &opts.limits, j)?;
        let Some(e) = e else {
            return Ok(Poly::one(&wt));
        };
        let s_idx = data.ring.require("s")?;
        let at0 = e.specialize(&[(s_idx, Rational::zero())]).with_vars(&wt)?;
        let p = monic_in_w(&at0, j)?;
        let deg = p.degree_in(0).finite().unwrap_or(0) as usize;
        if deg == length {
            return Ok(p);
        }
        last_degree = deg;
    }
    Err(Error::DegenerateChart {
        chart: j,
        reason: format!(
            "Chow factor has w-degree {last_degree} but the stratum has length {length}"
        ),
    })
}

fn chow_full(g: &DynamicalSystem, j: usize, opts: &SigmaOptions) -> Result<Poly> {
    let wt = wt_vars();
    let nfree = j;
    let us: Vec<String> = (1..=nfree).map(|k| format!("u{k}")).collect();
    let data = chart_data(g, j, &us)?;
    if data.den.is_zero() {
        return Ok(Poly::one(&wt));
    }
    let h = &(&Poly::var(&data.ring, "w")? * &data.den) - &data.num;
    let mut ell = Poly::zero(&data.ring);
    for (k, u) in us.iter().enumerate() {
        ell = &ell + &(&Poly::var(&data.ring, u)? * &Poly::var_index(&data.ring, k));
    }
    let mut gens = data.fixed.clone();
    gens.push(&h + &(&data.den * &ell));
    let mut keep: Vec<String> = us.clone();
    keep.push("w".into());
    keep.push("t".into());
    let e = eliminate(&data.ring, gens, &keep, &opts.limits, j)?;
    let Some(e) = e else {
        return Ok(Poly::one(&wt));
    };
    let zeros: Vec<(usize, Rational)> = us
        .iter()
        .map(|u| (data.ring.require(u).unwrap(), Rational::zero()))
        .collect();
    monic_in_w(&e.specialize(&zeros).with_vars(&wt)?, j)
}

/// The unique generator of the elimination ideal in `keep`, `None` for the
/// unit ideal.
fn eliminate<S: AsRef<str>>(
    ring: &Vars,
    gens: Vec<Poly>,
    keep: &[S],
    limits: &GbLimits,
    chart: usize,
) -> Result<Option<Poly>> {
    let order = MonomialOrder::block_natural(ring.len(), ring.len() - keep.len());
    let gb = buchberger(&Ideal::new(ring, gens, order)?, limits)?;
    if gb.is_unit() {
        return Ok(None);
    }
    let elim = gb.elimination_ideal(keep)?;
    match elim.len() {
        1 => Ok(Some(elim[0].clone())),
        0 => Err(Error::DegenerateChart {
            chart,
            reason: "elimination ideal is zero".into(),
        }),
        k => Err(Error::DegenerateChart {
            chart,
            reason: format!("elimination ideal has {k} generators, expected exactly one"),
        }),
    }
}

fn monic_in_w(p: &Poly, chart: usize) -> Result<Poly> {
    let coeffs = p.coefficients_in(0);
    let lead = coeffs.last().ok_or(Error::ZeroPolynomial)?;
    if !lead.is_constant() {
        return Err(Error::DegenerateChart {
            chart,
            reason: format!("leading coefficient in w is not constant: {lead}"),
        });
    }
    Ok(p.scale(&lead.constant_term().recip()))
}

/// ∏ (w − γ_P(t))^{mult(P)} straight from a spectrum.
pub fn sigma_from_spectrum(spec: &SpectrumList) -> Poly {
    let wt = wt_vars();
    let w = Poly::var_index(&wt, 0);
    let mut acc = Poly::one(&wt);
    for e in &spec.entries {
        let gamma = e.charpoly.to_poly(&wt, "t").unwrap();
        acc = &acc * &(&w - &gamma).pow_u(e.multiplicity);
    }
    acc
}

/// The plain-mode analogue: per chart of the point's last nonzero
/// coordinate, each distinct γ_P once.
pub fn plain_sigma_from_spectrum(spec: &SpectrumList) -> Poly {
    let wt = wt_vars();
    let w = Poly::var_index(&wt, 0);
    let mut acc = Poly::one(&wt);
    for j in 0..=spec.dim {
        let mut seen: Vec<Vec<Rational>> = Vec::new();
        for e in spec.entries.iter().filter(|e| e.point.chart() == j) {
            let c = e.charpoly.coeffs().to_vec();
            if !seen.contains(&c) {
                acc = &acc * &(&w - &e.charpoly.to_poly(&wt, "t").unwrap());
                seen.push(c);
            }
        }
    }
    acc
}

/// Outcome of evaluating Σ_n along a sampled family.
#[derive(Clone, Debug)]
pub struct ScanReport {
    pub samples: Vec<(Rational, Result<SigmaPolynomial>)>,
    pub all_equal: bool,
    pub common: Option<Poly>,
}

/// Computes Σ_n at every sample and compares the results exactly.
pub fn isospectral_scan<F>(
    builder: F,
    samples: &[Rational],
    n: u32,
    mode: SigmaMode,
    opts: &SigmaOptions,
) -> ScanReport
where
    F: Fn(&Rational) -> Result<DynamicalSystem>,
{
    let results: Vec<(Rational, Result<SigmaPolynomial>)> = samples
        .iter()
        .map(|a| {
            (
                a.clone(),
                builder(a).and_then(|f| sigma_poly(&f, n, mode, opts)),
            )
        })
        .collect();
    let polys: Vec<&Poly> = results
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok().map(|s| &s.poly))
        .collect();
    let complete = polys.len() == results.len() && !polys.is_empty();
    let all_equal = complete && polys.windows(2).all(|w| w[0] == w[1]);
    let common = if all_equal {
        Some(polys[0].clone())
    } else {
        None
    };
    ScanReport {
        samples: results,
        all_equal,
        common,
    }
}

#[cfg(test)]
mod tests;
