use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector with one slot per ambient variable.
///
/// The derived ordering is lexicographic with slot 0 most significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(pub(crate) SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, index: usize, power: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = power;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the only variable with a positive exponent, if exactly one.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Shared, ordered list of variable names.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for n in names {
            let n = n.as_ref();
            if !valid_identifier(n) {
                return Err(Error::Parse(format!("invalid variable name `{n}`")));
            }
            if !seen.insert(n.to_string()) {
                return Err(Error::Parse(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Vars(names.iter().map(|s| s.as_ref().to_string()).collect()))
    }

    /// `x0, x1, ..., x{n-1}`.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Vars((0..n).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn same(&self, other: &Vars) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    pub fn to_vec(&self) -> Vec<String> {
        self.0.to_vec()
    }

    /// A new list with `extra` appended (names must not collide).
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Vars> {
        let mut all: Vec<String> = self.0.to_vec();
        all.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Vars::new(&all)
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Vars {}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(","))
    }
}

pub fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Total degree with a distinguished marker for the zero polynomial.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_infinity(self) -> bool {
        matches!(self, Degree::NegInfinity)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// Elimination order: degrevlex on the `k` largest variables, ties
    /// broken by degrevlex on the rest.
    Block(usize),
}

/// A monomial order: lexicographic (or graded reverse lexicographic) with an
/// explicit variable priority. `priority[0]` is the index of the largest
/// variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    /// Lex with the given variables from largest to smallest. Every variable of
    /// `vars` must be named exactly once.
    pub fn lex<S: AsRef<str>>(vars: &Vars, largest_first: &[S]) -> Result<Self> {
        Self::with_kind(OrderKind::Lex, vars, largest_first)
    }

    pub fn degrevlex<S: AsRef<str>>(vars: &Vars, largest_first: &[S]) -> Result<Self> {
        Self::with_kind(OrderKind::DegRevLex, vars, largest_first)
    }

    fn with_kind<S: AsRef<str>>(kind: OrderKind, vars: &Vars, names: &[S]) -> Result<Self> {
        if names.len() != vars.len() {
            return Err(Error::InvalidOrder(format!(
                "priority names {} variables but the ring has {}",
                names.len(),
                vars.len()
            )));
        }
        let mut priority = Vec::with_capacity(names.len());
        for n in names {
            let i = vars.require(n.as_ref())?;
            if priority.contains(&i) {
                return Err(Error::InvalidOrder(format!(
                    "`{}` listed twice",
                    n.as_ref()
                )));
            }
            priority.push(i);
        }
        Ok(MonomialOrder { kind, priority })
    }

    /// Lex with the ring's own variable order (first variable largest).
    pub fn lex_natural(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn degrevlex_natural(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            priority: (0..nvars).collect(),
        }
    }

    /// Block order eliminating the first `k` variables of the ring.
    pub fn block_natural(nvars: usize, k: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Block(k.min(nvars)),
            priority: (0..nvars).collect(),
        }
    }

    /// Number of leading variables this order eliminates (all but the last
    /// for lex).
    pub fn eliminates(&self) -> usize {
        match self.kind {
            OrderKind::Lex => self.priority.len(),
            OrderKind::DegRevLex => 0,
            OrderKind::Block(k) => k,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn is_natural(&self) -> bool {
        self.priority.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Rewrites `m` so that slot `k` holds the exponent of the k-th largest
    /// variable.
    pub fn permute(&self, m: &Monomial) -> Monomial {
        Monomial(self.priority.iter().map(|&i| m.0[i]).collect())
    }

    pub fn unpermute(&self, m: &Monomial) -> Monomial {
        let mut out = Monomial::one(m.len());
        for (k, &i) in self.priority.iter().enumerate() {
            out.0[i] = m.0[k];
        }
        out
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        Self::cmp_permuted(self.kind, &self.permute(a), &self.permute(b))
    }

    /// Comparison of monomials already permuted into priority order.
    pub(crate) fn cmp_permuted(kind: OrderKind, a: &Monomial, b: &Monomial) -> Ordering {
        match kind {
            OrderKind::Lex => a.0.cmp(&b.0),
            OrderKind::DegRevLex => grevlex(&a.0, &b.0),
            OrderKind::Block(k) => {
                let k = k.min(a.0.len());
                grevlex(&a.0[..k], &b.0[..k]).then_with(|| grevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}
