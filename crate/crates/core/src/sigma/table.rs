use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{SigmaMode, SigmaPolynomial};
use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, Rational};

/// σ_{i,j} for 0 ≤ i ≤ D, 0 ≤ j ≤ N·i, with
/// Σ = Σ_{i,j} (−1)^{i+j} σ_{i,j} w^{D−i} t^{N·i−j}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    pub entries: BTreeMap<(usize, usize), Rational>,
    pub n: u32,
    pub dim: usize,
    pub degree: u32,
    pub dn: BigInt,
    pub mode: SigmaMode,
    /// Plain-mode table whose w-degree is below D_n; indices then refer to
    /// the actual w-degree.
    pub degree_deficient: bool,
}

impl SigmaTable {
    /// σ_{i,j}; zero outside the stored range.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Number of rows minus one (the effective D).
    pub fn top(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }
}

pub fn extract_sigmas(s: &SigmaPolynomial) -> Result<SigmaTable> {
    let dw = s.degree_w() as usize;
    let dn_small = usize::try_from(&s.dn).ok();
    let degree_deficient = dn_small != Some(dw);
    if degree_deficient && s.mode == SigmaMode::Chow {
        return Err(Error::domain(format!(
            "chow Σ has w-degree {dw} but D_n = {}",
            s.dn
        )));
    }
    let nd = s.dim;
    for (m, _) in s.poly.terms() {
        let (a, b) = (m.exponents()[0] as usize, m.exponents()[1] as usize);
        let i = dw - a;
        if b > nd * i {
            return Err(Error::domain(format!(
                "term w^{a} t^{b} violates the t-degree bound {}",
                nd * i
            )));
        }
    }
    let mut entries = BTreeMap::new();
    for i in 0..=dw {
        for j in 0..=nd * i {
            let m = Monomial::from_exponents(&[(dw - i) as u32, (nd * i - j) as u32]);
            let c = s.poly.coefficient(&m);
            let v = if (i + j) % 2 == 0 { c } else { -c };
            entries.insert((i, j), v);
        }
    }
    if entries.get(&(0, 0)).is_none_or(|v| !v.is_one()) {
        return Err(Error::domain("σ_{0,0} must be 1"));
    }
    Ok(SigmaTable {
        entries,
        n: s.n,
        dim: s.dim,
        degree: s.degree,
        dn: s.dn.clone(),
        mode: s.mode,
        degree_deficient,
    })
}
