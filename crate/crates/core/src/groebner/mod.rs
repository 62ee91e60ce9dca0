//! Groebner bases over Q: Buchberger's algorithm, normal forms, elimination.

mod buchberger;
mod ipoly;

use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, MonomialOrder, OrderKind, Poly, Rational, Vars};
use ipoly::IPoly;

/// Caps that turn a runaway computation into `Error::ResourceLimit`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbLimits {
    pub max_pairs: Option<usize>,
    pub max_coeff_bits: Option<u64>,
    /// Wall-clock limit in seconds. Ignored on targets without a clock.
    pub time_limit_secs: Option<u64>,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits {
            max_pairs: Some(2_000_000),
            max_coeff_bits: Some(200_000),
            time_limit_secs: None,
        }
    }
}

impl GbLimits {
    pub fn unlimited() -> Self {
        GbLimits {
            max_pairs: None,
            max_coeff_bits: None,
            time_limit_secs: None,
        }
    }
}

#[cfg(not(target_arch = "wasm32"))]
pub(crate) struct Clock(Option<std::time::Instant>);

#[cfg(not(target_arch = "wasm32"))]
impl Clock {
    pub fn start(limits: &GbLimits) -> Self {
        Clock(
            limits
                .time_limit_secs
                .map(|s| std::time::Instant::now() + std::time::Duration::from_secs(s)),
        )
    }

    pub fn check(&self) -> Result<()> {
        match self.0 {
            Some(deadline) if std::time::Instant::now() > deadline => {
                Err(Error::ResourceLimit("time limit exceeded".to_string()))
            }
            _ => Ok(()),
        }
    }
}

#[cfg(target_arch = "wasm32")]
pub(crate) struct Clock;

#[cfg(target_arch = "wasm32")]
impl Clock {
    pub fn start(_: &GbLimits) -> Self {
        Clock
    }

    pub fn check(&self) -> Result<()> {
        Ok(())
    }
}

/// Generators in a common ring together with the order to compute under.
#[derive(Clone, Debug)]
pub struct Ideal {
    vars: Vars,
    generators: Vec<Poly>,
    order: MonomialOrder,
}

impl Ideal {
    /// Zero generators are dropped; the rest are stored in primitive form.
    pub fn new(vars: &Vars, generators: Vec<Poly>, order: MonomialOrder) -> Result<Self> {
        if order.nvars() != vars.len() {
            return Err(Error::InvalidOrder(format!(
                "order covers {} variables, ring has {}",
                order.nvars(),
                vars.len()
            )));
        }
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !g.vars().same(vars) {
                return Err(Error::VariableMismatch {
                    left: vars.to_vec(),
                    right: g.vars().to_vec(),
                });
            }
            if !g.is_zero() {
                gens.push(g.primitive_in(&order));
            }
        }
        Ok(Ideal {
            vars: vars.clone(),
            generators: gens,
            order,
        })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    vars: Vars,
    order: MonomialOrder,
    /// Monic, sorted by ascending leading monomial.
    basis: Vec<Poly>,
    reduced: bool,
    pairs_processed: usize,
}

/// Reduced Groebner basis of `ideal` under its order.
pub fn buchberger(ideal: &Ideal, limits: &GbLimits) -> Result<GroebnerBasis> {
    let order = &ideal.order;
    let gens: Vec<IPoly> = ideal
        .generators
        .iter()
        .map(|g| IPoly::from_poly(g, order))
        .collect();
    let engine = buchberger::Engine::new(order.kind(), limits);
    let (basis, pairs) = engine.run(gens)?;
    Ok(GroebnerBasis {
        vars: ideal.vars.clone(),
        order: order.clone(),
        basis: basis
            .iter()
            .map(|g| g.to_monic_poly(&ideal.vars, order))
            .collect(),
        reduced: true,
        pairs_processed: pairs,
    })
}

/// Convenience: basis of the ideal generated by `gens` under `order`.
pub fn groebner_basis(
    gens: &[Poly],
    order: &MonomialOrder,
    limits: &GbLimits,
) -> Result<GroebnerBasis> {
    let vars = match gens.first() {
        Some(g) => g.vars().clone(),
        None => return Err(Error::Domain("no generators".to_string())),
    };
    buchberger(&Ideal::new(&vars, gens.to_vec(), order.clone())?, limits)
}

impl GroebnerBasis {
    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn pairs_processed(&self) -> usize {
        self.pairs_processed
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_term(&self.order).unwrap().0.clone())
            .collect()
    }

    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        normal_form(p, &self.basis, &self.order)
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Krull dimension of the ideal (`-1` for the unit ideal), read off the
    /// leading monomials: the largest set of variables none of whose pure
    /// products is a leading monomial.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let n = self.vars.len();
        let lms = self.leading_monomials();
        let supports: Vec<u64> = lms
            .iter()
            .map(|m| {
                m.exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u64, |s, (i, _)| s | (1 << i))
            })
            .collect();
        let mut best = 0i64;
        for set in 0u64..(1u64 << n) {
            let size = set.count_ones() as i64;
            if size <= best {
                continue;
            }
            if supports.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        best
    }

    /// Number of standard monomials, i.e. dim_Q of the quotient ring, when
    /// the ideal is zero-dimensional.
    pub fn standard_monomial_count(&self) -> Option<usize> {
        if self.is_unit() {
            return Some(0);
        }
        if self.dimension() != 0 {
            return None;
        }
        Some(self.standard_monomials().len())
    }

    /// Standard monomials of a zero-dimensional ideal, ascending in the order.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        let n = self.vars.len();
        let lms = self.leading_monomials();
        let mut out = Vec::new();
        let mut stack = vec![Monomial::one(n)];
        let mut seen = std::collections::HashSet::new();
        while let Some(m) = stack.pop() {
            if !seen.insert(m.clone()) || lms.iter().any(|l| l.divides(&m)) {
                continue;
            }
            for i in 0..n {
                stack.push(m.mul(&Monomial::var(n, i, 1)));
            }
            out.push(m);
        }
        out.sort_by(|a, b| self.order.cmp(a, b));
        out
    }

    /// Basis elements involving only `keep`. The eliminated variables must
    /// be the largest ones of a lex order, or exactly the first block of a
    /// block order.
    pub fn elimination_ideal<S: AsRef<str>>(&self, keep: &[S]) -> Result<Vec<Poly>> {
        let keep_idx: Vec<usize> = keep
            .iter()
            .map(|k| self.vars.require(k.as_ref()))
            .collect::<Result<_>>()?;
        let prio = self.order.priority();
        let tail = &prio[prio.len() - keep_idx.len().min(prio.len())..];
        let mut sorted_keep = keep_idx.clone();
        sorted_keep.sort_unstable();
        let mut sorted_tail = tail.to_vec();
        sorted_tail.sort_unstable();
        if keep_idx.len() > prio.len() || sorted_keep != sorted_tail {
            return Err(Error::InvalidOrder(
                "kept variables must be the smallest in the order".to_string(),
            ));
        }
        let dropped = prio.len() - keep_idx.len();
        let ok = match self.order.kind() {
            OrderKind::Lex => true,
            OrderKind::DegRevLex => dropped == 0,
            OrderKind::Block(k) => dropped == 0 || dropped == k,
        };
        if !ok {
            return Err(Error::InvalidOrder(
                "the order does not eliminate these variables".to_string(),
            ));
        }
        Ok(self
            .basis
            .iter()
            .filter(|g| g.support().iter().all(|i| keep_idx.contains(i)))
            .cloned()
            .collect())
    }
}

/// Remainder of multivariate division of `p` by `basis` under `order`.
pub fn normal_form(p: &Poly, basis: &[Poly], order: &MonomialOrder) -> Result<Poly> {
    let vars = p.vars();
    if order.nvars() != vars.len() {
        return Err(Error::InvalidOrder(
            "order does not match the ring".to_string(),
        ));
    }
    for b in basis {
        if !b.vars().same(vars) {
            return Err(Error::VariableMismatch {
                left: vars.to_vec(),
                right: b.vars().to_vec(),
            });
        }
    }
    let leads: Vec<(Monomial, Rational)> = basis
        .iter()
        .filter(|b| !b.is_zero())
        .map(|b| b.leading_term(order).unwrap().clone())
        .collect();
    let divisors: Vec<&Poly> = basis.iter().filter(|b| !b.is_zero()).collect();
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    let mut cur = p.clone();
    while !cur.is_zero() {
        let (m, c) = cur.leading_term(order).unwrap().clone();
        match leads.iter().position(|(l, _)| l.divides(&m)) {
            Some(k) => {
                let q = leads[k].0.quotient_of(&m);
                let coef = &c / &leads[k].1;
                cur = &cur - &divisors[k].mul_term(&q, &coef);
            }
            None => {
                cur = &cur - &Poly::monomial(vars, m.clone(), c.clone());
                rem.push((m, c));
            }
        }
    }
    Ok(Poly::from_terms(vars, rem))
}

pub fn ideal_membership(p: &Poly, gb: &GroebnerBasis) -> Result<bool> {
    gb.contains(p)
}

pub fn elimination_ideal<S: AsRef<str>>(gb: &GroebnerBasis, keep: &[S]) -> Result<Vec<Poly>> {
    gb.elimination_ideal(keep)
}
