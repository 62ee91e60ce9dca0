//! Integer-coefficient polynomials in permuted monomial layout, used only
//! inside the Buchberger engine.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactpoly::{Monomial, MonomialOrder, OrderKind, Poly, Rational, Vars};

#[derive(Clone, Debug)]
pub(crate) struct IPoly {
    /// Descending under the engine's order; never holds zero coefficients.
    pub terms: Vec<(Monomial, BigInt)>,
}

#[inline]
pub(crate) fn cmp(kind: OrderKind, a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::cmp_permuted(kind, a, b)
}

impl IPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn from_poly(p: &Poly, order: &MonomialOrder) -> IPoly {
        let c = p.content();
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .iter()
            .map(|(m, q)| {
                let v = q / &c;
                debug_assert!(v.denom().is_one());
                (order.permute(m), v.numer().clone())
            })
            .collect();
        let kind = order.kind();
        terms.sort_unstable_by(|a, b| cmp(kind, &b.0, &a.0));
        let mut out = IPoly { terms };
        out.normalize_sign();
        out
    }

    /// Monic rational polynomial in the original variable layout.
    pub fn to_monic_poly(&self, vars: &Vars, order: &MonomialOrder) -> Poly {
        let lc = Rational::from_integer(self.lc().clone());
        Poly::from_terms(
            vars,
            self.terms
                .iter()
                .map(|(m, c)| (order.unpermute(m), Rational::from_integer(c.clone()) / &lc)),
        )
    }

    pub fn normalize_sign(&mut self) {
        if self.terms.first().is_some_and(|(_, c)| c.is_negative()) {
            for t in self.terms.iter_mut() {
                t.1 = -std::mem::take(&mut t.1);
            }
        }
    }

    /// Divides out the integer content and makes the leading coefficient positive.
    pub fn make_primitive(&mut self) {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for t in self.terms.iter_mut() {
                t.1 = &t.1 / &g;
            }
        }
        self.normalize_sign();
    }

    pub fn max_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }
}

/// `a*terms - b*mono*g`, merged in order.
pub(crate) fn scaled_sub_terms(
    terms: &[(Monomial, BigInt)],
    a: &BigInt,
    b: &BigInt,
    mono: &Monomial,
    g: &IPoly,
    kind: OrderKind,
) -> IPoly {
    let mut out = Vec::with_capacity(terms.len() + g.terms.len());
    let mut gi = g.terms.iter().map(|(m, c)| (m.mul(mono), c * b)).peekable();
    let mut si = terms.iter().peekable();
    let a_is_one = a.is_one();
    loop {
        let ord = match (si.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => cmp(kind, &x.0, &y.0),
        };
        match ord {
            Ordering::Greater => {
                let (m, c) = si.next().unwrap();
                out.push((m.clone(), if a_is_one { c.clone() } else { c * a }));
            }
            Ordering::Less => {
                let (m, c) = gi.next().unwrap();
                out.push((m, -c));
            }
            Ordering::Equal => {
                let (m, c) = si.next().unwrap();
                let (_, d) = gi.next().unwrap();
                let v = if a_is_one { c - d } else { c * a - d };
                if !v.is_zero() {
                    out.push((m.clone(), v));
                }
            }
        }
    }
    IPoly { terms: out }
}

/// Multipliers `(a, b)` with `a*x = b*y` minimal: `a = y/g`, `b = x/g`.
pub(crate) fn cofactors(x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
    let g = x.gcd(y);
    let (mut a, mut b) = (y / &g, x / &g);
    if a.is_negative() {
        a = -a;
        b = -b;
    }
    (a, b)
}
