//! JSON file formats: maps, spectra and σ tables. Rationals are written as
//! strings ("-3/4"); integers are also accepted on input.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{parse_poly, parse_rational, Rational, Vars};
use crate::projdyn::{CharPoly, DynamicalSystem, SpectrumList};
use crate::recovery::EigenPairMultiset;
use crate::sigma::{SigmaMode, SigmaPolynomial, SigmaTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum RatText {
    Int(i64),
    Text(String),
}

impl RatText {
    fn value(&self) -> Result<Rational> {
        match self {
            RatText::Int(i) => Ok(Rational::from_integer((*i).into())),
            RatText::Text(s) => parse_rational(s.trim()),
        }
    }
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapFile {
    dim: usize,
    degree: u32,
    coords: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vars: Option<Vec<String>>,
}

pub fn parse_map(text: &str) -> Result<DynamicalSystem> {
    let m: MapFile = serde_json::from_str(text).map_err(json_err)?;
    if m.coords.len() != m.dim + 1 {
        return Err(Error::invalid_map(format!(
            "dim {} needs {} coordinates, got {}",
            m.dim,
            m.dim + 1,
            m.coords.len()
        )));
    }
    let f = DynamicalSystem::parse(&m.coords, m.vars.as_deref())?;
    if f.degree() != m.degree {
        return Err(Error::invalid_map(format!(
            "declared degree {} but the coordinates have degree {}",
            m.degree,
            f.degree()
        )));
    }
    Ok(f)
}

/// Canonical map file: variables renamed to x0..xN, no `vars` field.
pub fn map_to_json(f: &DynamicalSystem) -> String {
    let canonical = f
        .rename(&Vars::indexed("x", f.dim() + 1).to_vec())
        .expect("indexed names are valid");
    let m = MapFile {
        dim: f.dim(),
        degree: f.degree(),
        coords: canonical.coords().iter().map(|c| c.to_string()).collect(),
        vars: None,
    };
    serde_json::to_string_pretty(&m).expect("map serializes") + "\n"
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpectrumRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    eigenvalues: Option<Vec<RatText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    charpoly: Option<String>,
    multiplicity: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    point: Option<Vec<RatText>>,
}

fn parse_records(text: &str) -> Result<Vec<SpectrumRecord>> {
    serde_json::from_str(text).map_err(json_err)
}

/// Eigenvalue tuples; every record needs `eigenvalues`.
pub fn parse_eigen_spectrum(text: &str) -> Result<EigenPairMultiset> {
    let tuples = parse_records(text)?
        .into_iter()
        .map(|r| {
            let e = r
                .eigenvalues
                .ok_or_else(|| Error::Parse("record without eigenvalues".into()))?;
            Ok((
                e.iter().map(RatText::value).collect::<Result<Vec<_>>>()?,
                r.multiplicity,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    EigenPairMultiset::new(tuples)
}

/// Characteristic polynomials with multiplicities; a record may give either
/// `eigenvalues` or `charpoly` (a monic polynomial in t).
pub fn parse_charpoly_spectrum(text: &str) -> Result<Vec<(CharPoly, u32)>> {
    let t = Vars::new(&["t"])?;
    parse_records(text)?
        .into_iter()
        .map(|r| {
            let cp = match (r.eigenvalues, r.charpoly) {
                (Some(e), None) => CharPoly::from_eigenvalues(
                    &e.iter().map(RatText::value).collect::<Result<Vec<_>>>()?,
                ),
                (None, Some(s)) => {
                    CharPoly::from_coeffs(parse_poly(&s, &t)?.univariate_coeffs(0)?, None, 1)?
                }
                _ => {
                    return Err(Error::Parse(
                        "a record needs exactly one of eigenvalues and charpoly".into(),
                    ))
                }
            };
            Ok((cp, r.multiplicity))
        })
        .collect()
}

pub fn spectrum_to_json(spec: &SpectrumList) -> String {
    let recs: Vec<SpectrumRecord> = spec
        .entries
        .iter()
        .map(|e| {
            let eig = e.charpoly.rational_eigenvalues();
            SpectrumRecord {
                charpoly: eig.is_none().then(|| e.charpoly.to_string()),
                eigenvalues: eig.map(|v| v.iter().map(|x| RatText::Text(x.to_string())).collect()),
                multiplicity: e.multiplicity,
                point: Some(
                    e.point
                        .coords()
                        .iter()
                        .map(|x| RatText::Text(x.to_string()))
                        .collect(),
                ),
            }
        })
        .collect();
    serde_json::to_string_pretty(&recs).expect("spectrum serializes") + "\n"
}

pub fn eigen_spectrum_to_json(spec: &EigenPairMultiset) -> String {
    let recs: Vec<SpectrumRecord> = spec
        .tuples
        .iter()
        .map(|(t, m)| SpectrumRecord {
            eigenvalues: Some(t.iter().map(|x| RatText::Text(x.to_string())).collect()),
            charpoly: None,
            multiplicity: *m,
            point: None,
        })
        .collect();
    serde_json::to_string_pretty(&recs).expect("spectrum serializes") + "\n"
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SigmaFile {
    period: u32,
    dim: usize,
    degree: u32,
    dn: String,
    mode: String,
    degree_deficient: bool,
    sigma: String,
    /// "i,j" → σ_{i,j}.
    table: BTreeMap<String, String>,
}

pub fn sigma_to_json(s: &SigmaPolynomial, t: &SigmaTable) -> String {
    let f = SigmaFile {
        period: s.n,
        dim: s.dim,
        degree: s.degree,
        dn: s.dn.to_string(),
        mode: s.mode.name().into(),
        degree_deficient: t.degree_deficient,
        sigma: s.poly.to_string(),
        table: t
            .entries
            .iter()
            .map(|((i, j), v)| (format!("{i},{j}"), v.to_string()))
            .collect(),
    };
    serde_json::to_string_pretty(&f).expect("sigma serializes") + "\n"
}

/// Reads a σ file back, checking that the table and the polynomial agree.
pub fn parse_sigma(text: &str) -> Result<(SigmaPolynomial, SigmaTable)> {
    let f: SigmaFile = serde_json::from_str(text).map_err(json_err)?;
    let mode: SigmaMode = f.mode.parse()?;
    let dn: BigInt =
        f.dn.parse()
            .map_err(|_| Error::Parse(format!("bad D_n `{}`", f.dn)))?;
    let poly = parse_poly(&f.sigma, &crate::sigma::wt_vars())?;
    let s = SigmaPolynomial {
        poly,
        n: f.period,
        dim: f.dim,
        degree: f.degree,
        dn,
        mode,
    };
    let t = crate::sigma::extract_sigmas(&s)?;
    let mut entries = BTreeMap::new();
    for (k, v) in &f.table {
        let (i, j) = k
            .split_once(',')
            .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
            .ok_or_else(|| Error::Parse(format!("bad table key `{k}`")))?;
        entries.insert((i, j), parse_rational(v)?);
    }
    if entries != t.entries {
        return Err(Error::Parse(
            "table entries disagree with the polynomial".into(),
        ));
    }
    Ok((s, t))
}
