use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Degree, Monomial, MonomialOrder, Vars};
use super::rational::{content_of, Rational};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending lexicographic order of the variable
/// list (first variable largest) and never carry a zero coefficient.
#[derive(Clone, Debug)]
pub struct Poly {
    vars: Vars,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.vars.same(&other.vars) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(vars: &Vars) -> Self {
        Poly {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(vars);
        }
        Poly {
            vars: vars.clone(),
            terms: vec![(Monomial::one(vars.len()), c)],
        }
    }

    pub fn int(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars.require(name)?;
        Ok(Self::var_index(vars, i))
    }

    pub fn var_index(vars: &Vars, i: usize) -> Self {
        Poly {
            vars: vars.clone(),
            terms: vec![(Monomial::var(vars.len(), i, 1), Rational::one())],
        }
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.len(), vars.len(), "monomial arity");
        if c.is_zero() {
            return Self::zero(vars);
        }
        Poly {
            vars: vars.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial arity");
            if c.is_zero() {
                continue;
            }
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(vars, acc)
    }

    fn from_map(vars: &Vars, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(k, _)| m.cmp(k)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn degree_in(&self, var: usize) -> Degree {
        self.terms
            .iter()
            .map(|(m, _)| m.0[var])
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn degree_in_name(&self, name: &str) -> Result<Degree> {
        Ok(self.degree_in(self.vars.require(name)?))
    }

    /// Indexes of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.0[i] > 0))
            .collect()
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[i] > 0)
    }

    /// Homogeneous degree, or `None` when the polynomial is zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<&(Monomial, Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    /// Leading coefficient under the natural lex order of the variable list.
    pub fn lex_leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.vars.same(&other.vars) {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Less
            } else if j == b.len() {
                std::cmp::Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate {
                        -b[j].1.clone()
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.vars);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(&self.vars, acc)
    }

    /// Multiplication by `c * m`; keeps the term order.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect();
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: i64) -> Result<Poly> {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
        Ok(self.pow_u(e as u32))
    }

    pub fn pow_u(&self, mut e: u32) -> Poly {
        let mut result = Poly::one(&self.vars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    pub fn derivative(&self, var: &str) -> Result<Poly> {
        let i = self.vars.require(var)?;
        Ok(self.derivative_index(i))
    }

    pub fn derivative_index(&self, i: usize) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            terms.push((m2, c * Rational::from_integer(BigInt::from(e))));
        }
        // Lowering one fixed slot keeps distinct monomials distinct but can
        // reorder them relative to each other, so re-sort.
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Evaluates at a full assignment of rationals.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars(), "evaluation point arity");
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::one()]; self.nvars()];
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = &mut powers[i];
                while p.len() <= e as usize {
                    let next = p.last().unwrap() * &point[i];
                    p.push(next);
                }
                term *= &p[e as usize];
            }
            acc += term;
        }
        acc
    }

    /// Simultaneous substitution. Variables with an image are replaced by it;
    /// the others are carried over by name into `target`.
    pub fn substitute(&self, images: &HashMap<String, Poly>, target: &Vars) -> Result<Poly> {
        let mut maps: Vec<Poly> = Vec::with_capacity(self.nvars());
        for name in self.vars.names() {
            let img = match images.get(name) {
                Some(p) => {
                    p.check_vars(target)?;
                    p.clone()
                }
                None => Poly::var(target, name)?,
            };
            maps.push(img);
        }
        Ok(self.compose(&maps, target))
    }

    /// Replaces variable `i` by `images[i]` (all in `target`).
    pub fn compose(&self, images: &[Poly], target: &Vars) -> Poly {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(target), p.clone()])
            .collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = &mut powers[i];
                while p.len() <= e as usize {
                    let next = p.last().unwrap().mul_unchecked(&p[1]);
                    p.push(next);
                }
                term = term.mul_unchecked(&p[e as usize]);
                if term.is_zero() {
                    break;
                }
            }
            for (k, v) in term.terms {
                *acc.entry(k).or_insert_with(Rational::zero) += v;
            }
        }
        Poly::from_map(target, acc)
    }

    fn check_vars(&self, target: &Vars) -> Result<()> {
        if self.vars.same(target) {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_vec(),
                right: target.to_vec(),
            })
        }
    }

    /// Replaces variables by rational values, keeping the variable list.
    pub fn specialize(&self, values: &[(usize, Rational)]) -> Poly {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let mut c2 = c.clone();
            for (i, v) in values {
                let e = m2.0[*i];
                if e > 0 {
                    c2 *= num_traits::pow::pow(v.clone(), e as usize);
                    m2.0[*i] = 0;
                }
            }
            if !c2.is_zero() {
                *acc.entry(m2).or_insert_with(Rational::zero) += c2;
            }
        }
        Poly::from_map(&self.vars, acc)
    }

    /// Moves the polynomial into another ring by variable name.
    pub fn with_vars(&self, target: &Vars) -> Result<Poly> {
        if self.vars.same(target) {
            return Ok(self.clone());
        }
        let mut slot = Vec::with_capacity(self.nvars());
        for (i, name) in self.vars.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => slot.push(Some(j)),
                None if self.uses_var(i) => return Err(Error::UnknownVariable(name.clone())),
                None => slot.push(None),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut nm = Monomial::one(target.len());
            for (i, &e) in m.0.iter().enumerate() {
                if let Some(j) = slot[i] {
                    nm.0[j] = e;
                }
            }
            (nm, c.clone())
        });
        Ok(Poly::from_terms(target, terms))
    }

    /// Coefficients with respect to variable `i`, lowest power first. Each
    /// coefficient lives in the same ring with variable `i` absent.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let deg = match self.degree_in(i) {
            Degree::NegInfinity => return Vec::new(),
            Degree::Finite(d) => d as usize,
        };
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut m2 = m.clone();
            m2.0[i] = 0;
            buckets[e].push((m2, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Poly {
                    vars: self.vars.clone(),
                    terms: ts,
                }
            })
            .collect()
    }

    /// Rational coefficients when the polynomial only involves variable `i`.
    pub fn univariate_coeffs(&self, i: usize) -> Result<Vec<Rational>> {
        let deg = match self.degree_in(i) {
            Degree::NegInfinity => return Ok(Vec::new()),
            Degree::Finite(d) => d as usize,
        };
        let mut out = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(k, &e)| k != i && e > 0) {
                return Err(Error::NotUnivariate(self.vars.names()[i].clone()));
            }
            out[m.0[i] as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn from_univariate(vars: &Vars, i: usize, coeffs: &[Rational]) -> Poly {
        let terms = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Monomial::var(vars.len(), i, e as u32), c.clone()))
            .collect::<Vec<_>>();
        Poly::from_terms(vars, terms)
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients.
    pub fn content(&self) -> Rational {
        content_of(self.terms.iter().map(|(_, c)| c))
    }

    /// Canonical form: integral, primitive, positive lex-leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Canonical form with respect to `order`: primitive with positive leading
    /// coefficient under that order.
    pub fn primitive_in(&self, order: &MonomialOrder) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_term(order).unwrap().1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic_in(&self, order: &MonomialOrder) -> Poly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.denom().is_one())
    }

    /// Exact division, `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if divisor.terms.len() == 1 {
            let (dm, dc) = &divisor.terms[0];
            let inv = dc.recip();
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                out.push((dm.quotient_of(m), c * &inv));
            }
            return Some(Poly {
                vars: self.vars.clone(),
                terms: out,
            });
        }
        let (lm, lc) = &divisor.terms[0];
        let lc_inv = lc.recip();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c * &lc_inv;
            rem = rem.merge(&divisor.mul_term(&qm, &qc), true);
            quot.push((qm, qc));
        }
        Some(Poly {
            vars: self.vars.clone(),
            terms: quot,
        })
    }

    /// Integer coefficients, if all coefficients are integers.
    pub fn integer_coefficients(&self) -> Option<Vec<(Monomial, BigInt)>> {
        self.terms
            .iter()
            .map(|(m, c)| c.denom().is_one().then(|| (m.clone(), c.numer().clone())))
            .collect()
    }

    /// Largest bit size of any coefficient's numerator or denominator.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms
            .iter()
            .map(|(_, c)| super::rational::bit_size(c))
            .max()
            .unwrap_or(0)
    }

    /// Canonical text, terms in descending natural lex order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Text with terms sorted descending under `order`.
    pub fn display_in(&self, order: &MonomialOrder) -> String {
        let mut idx: Vec<usize> = (0..self.terms.len()).collect();
        idx.sort_by(|&a, &b| order.cmp(&self.terms[b].0, &self.terms[a].0));
        let terms: Vec<&(Monomial, Rational)> = idx.iter().map(|&i| &self.terms[i]).collect();
        format_terms(&self.vars, &terms)
    }

    pub fn gcd_of_integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c.numer());
        }
        g
    }
}

fn format_terms(vars: &Vars, terms: &[&(Monomial, Rational)]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = format_monomial(vars, m);
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn format_monomial(vars: &Vars, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.names()[i].clone()),
            _ => parts.push(format!("{}^{}", vars.names()[i], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<&(Monomial, Rational)> = self.terms.iter().collect();
        f.write_str(&format_terms(&self.vars, &terms))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs)
            .expect("polynomial addition across different rings")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs)
            .expect("polynomial subtraction across different rings")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs)
            .expect("polynomial multiplication across different rings")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Poly {
            vars: self.vars.clone(),
            terms,
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{rat, ratio};

    fn ring(names: &[&str]) -> Vars {
        Vars::new(names).unwrap()
    }

    fn p(s: &str, v: &Vars) -> Poly {
        crate::exactpoly::parse::parse_poly(s, v).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let v = ring(&["x", "y"]);
        let prod = &p("x+y", &v) * &p("x-y", &v);
        assert_eq!(prod, p("x^2-y^2", &v));
    }

    #[test]
    fn additive_identity() {
        let v = ring(&["x", "y"]);
        let a = p("3*x^2*y - 1/2", &v);
        assert_eq!(&a + &Poly::zero(&v), a);
    }

    #[test]
    fn cube_matches_repeated_multiplication() {
        let v = ring(&["x"]);
        let base = p("x+1", &v);
        let mut rep = Poly::one(&v);
        for _ in 0..3 {
            rep = &rep * &base;
        }
        assert_eq!(base.pow(3).unwrap(), rep);
        assert_eq!(rep, p("x^3+3*x^2+3*x+1", &v));
    }

    #[test]
    fn ring_mismatch_and_negative_power_are_errors() {
        let a = p("x", &ring(&["x"]));
        let b = p("x", &ring(&["x", "y"]));
        assert!(matches!(a.try_add(&b), Err(Error::VariableMismatch { .. })));
        assert!(matches!(a.pow(-1), Err(Error::NegativeExponent(-1))));
    }

    #[test]
    fn derivatives() {
        let v = ring(&["x", "y"]);
        assert_eq!(p("x^2*y", &v).derivative("x").unwrap(), p("2*x*y", &v));
        assert!(p("7", &v).derivative("x").unwrap().is_zero());
        // Mordell numerator at a = 1
        assert_eq!(
            p("x^4-8*x*y^3", &v).derivative("x").unwrap(),
            p("4*x^3-8*y^3", &v)
        );
        assert!(matches!(
            p("x", &v).derivative("z"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn substitution() {
        let v = ring(&["x", "y"]);
        let mut m = HashMap::new();
        m.insert("y".to_string(), Poly::zero(&v));
        assert_eq!(p("x^2+y^2", &v).substitute(&m, &v).unwrap(), p("x^2", &v));
        assert_eq!(
            p("x", &v).substitute(&HashMap::new(), &v).unwrap(),
            p("x", &v)
        );
    }

    #[test]
    fn degree_of_zero_is_sentinel() {
        let v = ring(&["x"]);
        assert_eq!(Poly::zero(&v).total_degree(), Degree::NegInfinity);
        assert_eq!(p("x^3+1", &v).total_degree(), Degree::Finite(3));
    }

    #[test]
    fn canonical_printing() {
        let v = ring(&["x", "y", "z"]);
        let f = p("-3/4*x^2 + y^2 - 21/2*x*z - 39/8*z^2", &v);
        assert_eq!(f.to_string(), "-3/4*x^2 - 21/2*x*z + y^2 - 39/8*z^2");
        assert_eq!(p("2*x - 1", &v).to_string(), "2*x - 1");
        assert_eq!(Poly::zero(&v).to_string(), "0");
    }

    #[test]
    fn primitive_form() {
        let v = ring(&["x", "y"]);
        let f = p("-2/3*x + 4/9*y", &v);
        assert_eq!(f.primitive(), p("3*x - 2*y", &v));
    }

    #[test]
    fn exact_division() {
        let v = ring(&["w", "t"]);
        let a = p("w^2 - t^2", &v);
        assert_eq!(a.div_exact(&p("w - t", &v)).unwrap(), p("w + t", &v));
        assert!(a.div_exact(&p("w - 2*t", &v)).is_none());
    }

    #[test]
    fn evaluation_and_specialization() {
        let v = ring(&["x", "y"]);
        let f = p("x^2*y + 1/2", &v);
        assert_eq!(f.eval(&[rat(2), ratio(1, 4)]), rat(1) + ratio(1, 2));
        assert_eq!(f.specialize(&[(1, rat(2))]), p("2*x^2 + 1/2", &v));
    }
}
