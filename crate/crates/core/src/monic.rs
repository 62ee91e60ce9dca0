//! Monic quadratic polynomial endomorphisms of P²: the normal form
//! [x² + a₁xz + a₂yz − a₁z² : y² + b₁xz + b₂yz − b₁z² : z²], five σ
//! generators of its multiplier image and the quintic cutting out that image.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactpoly::MonomialOrder;
use crate::exactpoly::{parse_poly, parse_rational, Poly, Rational, Vars};
use crate::groebner::{groebner_basis, GbLimits};
use crate::projdyn::{rational_points_lenient, DynamicalSystem};
use crate::sigma::SigmaTable;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MonicParams {
    pub a1: Rational,
    pub a2: Rational,
    pub b1: Rational,
    pub b2: Rational,
}

impl MonicParams {
    pub fn new(a1: Rational, a2: Rational, b1: Rational, b2: Rational) -> Self {
        MonicParams { a1, a2, b1, b2 }
    }

    pub fn as_array(&self) -> [Rational; 4] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.b1.clone(),
            self.b2.clone(),
        ]
    }

    /// Parses `a1,a2,b1,b2`.
    pub fn parse(s: &str) -> Result<Self> {
        let v: Vec<Rational> = s
            .split(',')
            .map(|x| parse_rational(x.trim()))
            .collect::<Result<_>>()?;
        match <[Rational; 4]>::try_from(v) {
            Ok([a1, a2, b1, b2]) => Ok(MonicParams { a1, a2, b1, b2 }),
            Err(v) => Err(Error::Parse(format!(
                "expected 4 parameters, got {}",
                v.len()
            ))),
        }
    }
}

impl fmt::Display for MonicParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a1, self.a2, self.b1, self.b2)
    }
}

/// Indices (i, j) of the five generators, in order.
pub const SIGMA_INDICES: [(usize, usize); 5] = [(1, 2), (2, 2), (2, 3), (2, 4), (3, 3)];

/// (σ_{1,2}, σ_{2,2}, σ_{2,3}, σ_{2,4}, σ_{3,3}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicSigmaVector(pub [Rational; 5]);

impl MonicSigmaVector {
    pub fn from_table(t: &SigmaTable) -> Self {
        MonicSigmaVector(SIGMA_INDICES.map(|(i, j)| t.get(i, j)))
    }

    /// Entrywise product with ±1 signs.
    pub fn signed(&self, signs: [i8; 5]) -> Self {
        let mut v = self.0.clone();
        for (x, s) in v.iter_mut().zip(signs) {
            if s < 0 {
                *x = -x.clone();
            }
        }
        MonicSigmaVector(v)
    }
}

impl fmt::Display for MonicSigmaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

const GENERATORS: [&str; 5] = [
    "8*a2*b1 + 4",
    "-2*a1^2 - 4*a1*b1 + 36*a2*b1 - 4*a2*b2 - 2*b2^2 - 4*a1 + 4*a2 - 4*b1 + 4*b2 + 60",
    "8*a1^2*b1 + 16*a1*a2*b1 + 16*a2*b1*b2 + 8*a2*b2^2 - 4*a1^2 + 8*a1*b1 + 40*a2*b1 - 24*a2*b2 - 4*b2^2 - 8*a1 \
     + 16*a2 + 8*b2 + 24",
    "-4*a1^3*b1 + 18*a2^2*b1^2 - 8*a1*a2*b1*b2 - 2*a1^2*b2^2 - 4*a2*b2^3 - 4*a1^2*b1 + 24*a1*a2*b1 + 4*a1^2*b2 \
     + 8*a2*b1*b2 - 4*a1*b2^2 + 20*a2*b2^2 - 4*a1^2 + 20*a2*b1 + 8*a1*b2 - 32*a2*b2 - 4*b2^2 - 8*a1 + 16*a2 + 8*b2",
    "32*a1^2*b1 + 64*a1*a2*b1 - 8*a2^2*b1 - 8*a2*b1^2 + 64*a2*b1*b2 + 32*a2*b2^2 - 32*a1^2 + 128*a2*b1 \
     - 128*a2*b2 - 32*b2^2 - 64*a1 + 96*a2 - 32*b1 + 64*b2 + 176",
];

/// Sign relating each generator to the σ extracted with the (−1)^{i+j}
/// convention: extracted = sign · generator.
pub const GENERATOR_SIGNS: [i8; 5] = [1, 1, 1, 1, 1];

const QUINTIC: &str = include_str!("../data/monic_quintic.txt");

pub fn param_vars() -> Vars {
    Vars::new(&["a1", "a2", "b1", "b2"]).unwrap()
}

pub fn sigma_vars() -> Vars {
    Vars::new(&["s12", "s22", "s23", "s24", "s33"]).unwrap()
}

/// The five generators as polynomials in a1, a2, b1, b2.
pub fn generator_polys() -> &'static [Poly; 5] {
    static G: OnceLock<[Poly; 5]> = OnceLock::new();
    G.get_or_init(|| {
        let v = param_vars();
        GENERATORS.map(|s| parse_poly(s, &v).expect("generator text parses"))
    })
}

/// The quintic in s12, s22, s23, s24, s33.
pub fn quintic() -> &'static Poly {
    static Q: OnceLock<Poly> = OnceLock::new();
    Q.get_or_init(|| {
        let body: Vec<&str> = QUINTIC
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        parse_poly(&body.join(" "), &sigma_vars()).expect("quintic data parses")
    })
}

pub fn monic_map(p: &MonicParams) -> DynamicalSystem {
    let v = Vars::new(&["x", "y", "z"]).unwrap();
    let var = |i| Poly::var_index(&v, i);
    let (x, y, z) = (var(0), var(1), var(2));
    let xz = &x * &z;
    let yz = &y * &z;
    let zz = &z * &z;
    let f0 = &(&(&(&x * &x) + &xz.scale(&p.a1)) + &yz.scale(&p.a2)) - &zz.scale(&p.a1);
    let f1 = &(&(&(&y * &y) + &xz.scale(&p.b1)) + &yz.scale(&p.b2)) - &zz.scale(&p.b1);
    // the line z = 0 is totally invariant with restriction [x² : y²], so the
    // only common zero of the coordinates is the origin
    DynamicalSystem::new(vec![f0, f1, zz]).expect("monic normal form is a morphism")
}

pub fn monic_sigma_generators(p: &MonicParams) -> MonicSigmaVector {
    let at = p.as_array();
    MonicSigmaVector(generator_polys().clone().map(|g| g.eval(&at)))
}

pub fn hypersurface_eval(v: &MonicSigmaVector) -> Rational {
    quintic().eval(&v.0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport {
    /// Krull dimension of the fiber ideal; −1 when the fiber is empty.
    pub dimension: i64,
    /// Number of points with multiplicity, for a zero-dimensional fiber.
    pub degree: Option<usize>,
    pub rational_solutions: Vec<MonicParams>,
    /// Some points of a zero-dimensional fiber are not rational.
    pub non_rational_present: bool,
}

/// The parameter points sharing the generator values `v`.
pub fn monic_fiber_probe(v: &MonicSigmaVector, limits: &GbLimits) -> Result<FiberReport> {
    let vars = param_vars();
    let gens: Vec<Poly> = generator_polys()
        .iter()
        .zip(&v.0)
        .map(|(g, c)| g - &Poly::constant(&vars, c.clone()))
        .collect();
    let gb = groebner_basis(&gens, &MonomialOrder::degrevlex_natural(vars.len()), limits)?;
    let dimension = gb.dimension();
    let degree = if dimension == 0 {
        gb.standard_monomial_count()
    } else {
        None
    };
    let (rational_solutions, non_rational_present) = if dimension == 0 {
        let (pts, skipped) = rational_points_lenient(gb.basis(), &vars, limits)?;
        let sols = pts
            .into_iter()
            .map(|p| {
                let [a1, a2, b1, b2]: [Rational; 4] = p.try_into().expect("four coordinates");
                MonicParams { a1, a2, b1, b2 }
            })
            .collect();
        (sols, skipped)
    } else {
        (Vec::new(), false)
    };
    Ok(FiberReport {
        dimension,
        degree,
        rational_solutions,
        non_rational_present,
    })
}
