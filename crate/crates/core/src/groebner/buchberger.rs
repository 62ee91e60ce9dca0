//! Buchberger's algorithm with the Gebauer–Möller pair update.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ipoly::{cmp, cofactors, scaled_sub_terms, IPoly};
use super::GbLimits;
use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, OrderKind};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

pub(crate) struct Engine<'a> {
    kind: OrderKind,
    polys: Vec<IPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    limits: &'a GbLimits,
    clock: super::Clock,
    pub pairs_processed: usize,
}

impl<'a> Engine<'a> {
    pub fn new(kind: OrderKind, limits: &'a GbLimits) -> Self {
        Engine {
            kind,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            limits,
            clock: super::Clock::start(limits),
            pairs_processed: 0,
        }
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        self.active
            .iter()
            .copied()
            .find(|&k| Some(k) != skip && self.polys[k].lm().divides(m))
    }

    fn check_bits(&self, p: &IPoly) -> Result<()> {
        if let Some(maxb) = self.limits.max_coeff_bits {
            let b = p.max_bits();
            if b > maxb {
                return Err(Error::ResourceLimit(format!(
                    "coefficient size {b} bits exceeds the cap of {maxb} bits"
                )));
            }
        }
        Ok(())
    }

    /// Full reduction of `p` by the active set, keeping integer coefficients.
    fn reduce(&self, p: IPoly, skip: Option<usize>) -> Result<IPoly> {
        let kind = self.kind;
        let mut done: Vec<(Monomial, BigInt)> = Vec::new();
        let mut rest = p.terms;
        let mut start = 0usize;
        let mut steps = 0usize;
        while start < rest.len() {
            let m = &rest[start].0;
            match self.find_reducer(m, skip) {
                None => {
                    done.push(std::mem::take(&mut rest[start]));
                    start += 1;
                }
                Some(k) => {
                    let g = &self.polys[k];
                    let (a, b) = cofactors(&rest[start].1, g.lc());
                    let mono = g.lm().quotient_of(m);
                    let next = scaled_sub_terms(&rest[start..], &a, &b, &mono, g, kind);
                    if !a.is_one() {
                        for t in done.iter_mut() {
                            t.1 *= &a;
                        }
                    }
                    rest = next.terms;
                    start = 0;
                    steps += 1;
                    joint_content(&mut done, &mut rest);
                    if steps.is_multiple_of(32) {
                        self.clock.check()?;
                        self.check_bits(&IPoly {
                            terms: rest.clone(),
                        })?;
                    }
                }
            }
        }
        let out = IPoly { terms: done };
        self.check_bits(&out)?;
        Ok(out)
    }

    fn spoly(&self, pr: &Pair) -> IPoly {
        let f = &self.polys[pr.i];
        let g = &self.polys[pr.j];
        let (a, b) = cofactors(f.lc(), g.lc());
        let mf = f.lm().quotient_of(&pr.lcm);
        let mg = g.lm().quotient_of(&pr.lcm);
        // a*lc(f) = b*lc(g); a*mf*f - b*mg*g
        let af = IPoly {
            terms: f.terms.iter().map(|(m, c)| (m.mul(&mf), c * &a)).collect(),
        };
        let mut s = scaled_sub_terms(&af.terms, &BigInt::one(), &b, &mg, g, self.kind);
        s.make_primitive();
        s
    }

    fn add(&mut self, h: IPoly) {
        let hi = self.polys.len();
        let hlm = h.lm().clone();
        self.polys.push(h);

        // pairs (h, g) for active g
        let cand: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair {
                i: g,
                j: hi,
                lcm: self.polys[g].lm().lcm(&hlm),
            })
            .collect();
        let coprime = |p: &Pair, polys: &Vec<IPoly>| polys[p.i].lm().coprime(&hlm);
        let mut d: Vec<Pair> = Vec::new();
        for (idx, p) in cand.iter().enumerate() {
            let keep = coprime(p, &self.polys)
                || (!cand[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                    && !d.iter().any(|q| q.lcm.divides(&p.lcm)));
            if keep {
                d.push(p.clone());
            }
        }
        let e: Vec<Pair> = d.into_iter().filter(|p| !coprime(p, &self.polys)).collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && polys[p.i].lm().lcm(&hlm) != p.lcm
                && polys[p.j].lm().lcm(&hlm) != p.lcm)
        });
        self.pairs.extend(e);
        self.active.retain(|&g| !hlm.divides(polys[g].lm()));
        self.active.push(hi);
    }

    fn select(&mut self) -> Pair {
        let kind = self.kind;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = a
                .lcm
                .degree()
                .cmp(&b.lcm.degree())
                .then_with(|| cmp(kind, &a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if ord.is_lt() {
                best = k;
            }
        }
        self.pairs.swap_remove(best)
    }

    /// Runs the algorithm; returns the reduced basis (primitive integer
    /// polynomials), sorted by ascending leading monomial.
    pub fn run(mut self, mut gens: Vec<IPoly>) -> Result<(Vec<IPoly>, usize)> {
        let kind = self.kind;
        gens.retain(|g| !g.is_zero());
        gens.sort_by(|a, b| cmp(kind, a.lm(), b.lm()));
        for g in gens {
            let mut h = self.reduce(g, None)?;
            if h.is_zero() {
                continue;
            }
            h.make_primitive();
            if h.lm().is_one() {
                return Ok((vec![h], self.pairs_processed));
            }
            self.add(h);
        }
        while !self.pairs.is_empty() {
            self.clock.check()?;
            if let Some(maxp) = self.limits.max_pairs {
                if self.pairs_processed >= maxp {
                    return Err(Error::ResourceLimit(format!(
                        "S-pair cap of {maxp} reached with {} pairs pending",
                        self.pairs.len()
                    )));
                }
            }
            let pr = self.select();
            self.pairs_processed += 1;
            let s = self.spoly(&pr);
            if s.is_zero() {
                continue;
            }
            let mut h = self.reduce(s, None)?;
            if h.is_zero() {
                continue;
            }
            h.make_primitive();
            if h.lm().is_one() {
                return Ok((vec![h], self.pairs_processed));
            }
            self.add(h);
        }
        // interreduce the (already minimal) active set
        let mut idx = self.active.clone();
        idx.sort_by(|&a, &b| cmp(kind, self.polys[a].lm(), self.polys[b].lm()));
        let mut out = Vec::with_capacity(idx.len());
        for &k in &idx {
            let g = self.polys[k].clone();
            let mut full = self.reduce(g, Some(k))?;
            full.make_primitive();
            out.push(full);
        }
        Ok((out, self.pairs_processed))
    }
}

/// Divides `done` and `rest` by the gcd of all their coefficients.
fn joint_content(done: &mut [(Monomial, BigInt)], rest: &mut [(Monomial, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in done.iter().chain(rest.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for t in done.iter_mut().chain(rest.iter_mut()) {
        t.1 = &t.1 / &g;
    }
}
