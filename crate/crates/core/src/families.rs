//! Constructors for the isospectral and polynomial families: cartesian and
//! Segre products, split and triangular polynomial maps, Lattès maps.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{parse_poly, Poly, Rational, Vars};
use crate::projdyn::DynamicalSystem;

/// Parses `coords` in the ring `names + ["a"]` and substitutes `a`.
fn instantiate(coords: &[&str], names: &[&str], a: &Rational) -> Result<DynamicalSystem> {
    let target = Vars::new(names)?;
    let ring = target.extended(&["a"])?;
    let ai = ring.require("a")?;
    let polys = coords
        .iter()
        .map(|c| {
            parse_poly(c, &ring)?
                .specialize(&[(ai, a.clone())])
                .with_vars(&target)
        })
        .collect::<Result<Vec<_>>>()?;
    DynamicalSystem::new(polys)
}

/// [x_0^d : … : x_N^d].
pub fn powering_map(n: usize, d: u32) -> Result<DynamicalSystem> {
    let vars = Vars::indexed("x", n + 1);
    DynamicalSystem::new(
        (0..=n)
            .map(|i| Poly::var_index(&vars, i).pow_u(d))
            .collect(),
    )
}

fn joined_vars(f: &Vars, g: &[String]) -> Vars {
    let mut names = f.to_vec();
    names.extend(g.iter().cloned());
    Vars::new(&names).unwrap_or_else(|_| Vars::indexed("x", names.len()))
}

/// f × g on P^{N+M+1}: f's coordinates in the first N+1 variables, g's in
/// the last M+1. Variable names are kept when they are disjoint.
pub fn cartesian_product(f: &DynamicalSystem, g: &DynamicalSystem) -> Result<DynamicalSystem> {
    if f.degree() != g.degree() {
        return Err(Error::invalid_map(format!(
            "degrees differ: {} and {}",
            f.degree(),
            g.degree()
        )));
    }
    let big = joined_vars(f.vars(), g.vars().names());
    let k = f.vars().len();
    let left: Vec<Poly> = (0..k).map(|i| Poly::var_index(&big, i)).collect();
    let right: Vec<Poly> = (k..big.len()).map(|i| Poly::var_index(&big, i)).collect();
    let mut coords: Vec<Poly> = f.coords().iter().map(|c| c.compose(&left, &big)).collect();
    coords.extend(g.coords().iter().map(|c| c.compose(&right, &big)));
    DynamicalSystem::new(coords)
}

/// f × (the degree-d power map on the new variables): appends `names` as
/// extra coordinates with coordinate functions name^d.
pub fn append_powers<S: AsRef<str>>(f: &DynamicalSystem, names: &[S]) -> Result<DynamicalSystem> {
    let extra: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    let big = joined_vars(f.vars(), &extra);
    let k = f.vars().len();
    let left: Vec<Poly> = (0..k).map(|i| Poly::var_index(&big, i)).collect();
    let mut coords: Vec<Poly> = f.coords().iter().map(|c| c.compose(&left, &big)).collect();
    coords.extend((k..big.len()).map(|i| Poly::var_index(&big, i).pow_u(f.degree())));
    DynamicalSystem::new(coords)
}

/// How the Segre coordinate u_{(i,j)} is numbered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SegreOrder {
    /// (i, j) → i·(M+1) + j.
    #[default]
    RowMajor,
    /// (i, j) → j·(N+1) + i.
    ColumnMajor,
}

impl SegreOrder {
    pub fn index(self, i: usize, j: usize, n: usize, m: usize) -> usize {
        match self {
            SegreOrder::RowMajor => i * (m + 1) + j,
            SegreOrder::ColumnMajor => j * (n + 1) + i,
        }
    }
}

/// The map on P^{(N+1)(M+1)−1} induced through the Segre embedding by f and
/// the power map on P^M: u_{(i,j)} ↦ f_i(u_{(0,j)}, …, u_{(N,j)}).
pub fn segre_power_product(
    f: &DynamicalSystem,
    m: usize,
    order: SegreOrder,
) -> Result<DynamicalSystem> {
    if m == 0 {
        return Err(Error::domain("the power map factor needs M ≥ 1"));
    }
    let n = f.dim();
    let vars = Vars::indexed("u", (n + 1) * (m + 1));
    let mut coords = vec![Poly::zero(&vars); vars.len()];
    for j in 0..=m {
        let column: Vec<Poly> = (0..=n)
            .map(|k| Poly::var_index(&vars, order.index(k, j, n, m)))
            .collect();
        for i in 0..=n {
            coords[order.index(i, j, n, m)] = f.coords()[i].compose(&column, &vars);
        }
    }
    DynamicalSystem::new(coords)
}

/// Affine components F_1(x_1), …, F_N(x_N), coefficients lowest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSpec {
    pub components: Vec<Vec<Rational>>,
}

impl SplitSpec {
    /// Each string is a polynomial in the single variable `x`.
    pub fn parse<S: AsRef<str>>(components: &[S]) -> Result<Self> {
        let vars = Vars::new(&["x"])?;
        let components = components
            .iter()
            .map(|c| parse_poly(c.as_ref(), &vars)?.univariate_coeffs(0))
            .collect::<Result<Vec<_>>>()?;
        Ok(SplitSpec { components })
    }
}

/// Affine variable names for N coordinates: x, y for N ≤ 2, x1..xN beyond.
pub fn affine_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

fn homogenize_last(p: &Poly, d: u32) -> Poly {
    let z = p.nvars() - 1;
    let terms = p.terms().iter().map(|(m, c)| {
        let mut e = m.exponents().to_vec();
        e[z] = d - m.degree();
        (crate::exactpoly::Monomial::from_exponents(&e), c.clone())
    });
    Poly::from_terms(p.vars(), terms)
}

fn homogenize_affine(affine: &[Poly], vars: &Vars) -> Result<DynamicalSystem> {
    let d = affine
        .iter()
        .map(|p| p.total_degree().finite().unwrap_or(0))
        .max()
        .unwrap_or(0);
    let ring = vars.extended(&["z"])?;
    let mut coords = Vec::with_capacity(affine.len() + 1);
    for p in affine {
        coords.push(homogenize_last(&p.with_vars(&ring)?, d));
    }
    coords.push(Poly::var(&ring, "z")?.pow_u(d));
    DynamicalSystem::new(coords)
}

/// z^d·F_i(x_i/z) for each i, then z^d.
pub fn split_endomorphism(spec: &SplitSpec) -> Result<DynamicalSystem> {
    let n = spec.components.len();
    if n == 0 {
        return Err(Error::invalid_map("no components"));
    }
    let degs: Vec<usize> = spec.components.iter().map(|c| trimmed_degree(c)).collect();
    if degs.iter().any(|&d| d != degs[0]) {
        return Err(Error::invalid_map(format!(
            "component degrees differ: {degs:?}"
        )));
    }
    if degs[0] < 2 {
        return Err(Error::invalid_map("components need degree at least 2"));
    }
    let vars = Vars::new(&affine_names(n))?;
    let affine: Vec<Poly> = spec
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| Poly::from_univariate(&vars, i, c))
        .collect();
    homogenize_affine(&affine, &vars)
}

fn trimmed_degree(c: &[Rational]) -> usize {
    c.iter().rposition(|x| !x.is_zero()).unwrap_or(0)
}

/// Affine components F_k(x_1, …, x_k) of one common total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularSpec {
    pub vars: Vars,
    pub components: Vec<Poly>,
}

impl TriangularSpec {
    pub fn new(components: Vec<Poly>) -> Result<Self> {
        let vars = components
            .first()
            .ok_or_else(|| Error::invalid_map("no components"))?
            .vars()
            .clone();
        if vars.len() != components.len() {
            return Err(Error::invalid_map(format!(
                "{} components for {} affine variables",
                components.len(),
                vars.len()
            )));
        }
        for (k, c) in components.iter().enumerate() {
            if let Some(v) = c.support().into_iter().find(|&v| v > k) {
                return Err(Error::invalid_map(format!(
                    "component {} uses {} outside x_1..x_{}",
                    k + 1,
                    vars.names()[v],
                    k + 1
                )));
            }
        }
        let d = components[0].total_degree();
        if components.iter().any(|c| c.total_degree() != d) {
            return Err(Error::invalid_map("components must share one total degree"));
        }
        Ok(TriangularSpec { vars, components })
    }

    /// Components as text in the default affine names.
    pub fn parse<S: AsRef<str>>(components: &[S]) -> Result<Self> {
        let vars = Vars::new(&affine_names(components.len()))?;
        Self::new(
            components
                .iter()
                .map(|c| parse_poly(c.as_ref(), &vars))
                .collect::<Result<_>>()?,
        )
    }
}

pub fn triangular_endomorphism(spec: &TriangularSpec) -> Result<DynamicalSystem> {
    homogenize_affine(&spec.components, &spec.vars)
}

/// Multiplication by 2 on y² = x³ + a: [u⁴ − 8a·uv³ : 4u³v + 4a·v⁴].
pub fn lattes_mordell(a: &Rational) -> Result<DynamicalSystem> {
    if a.is_zero() {
        return Err(Error::domain("a = 0 gives a singular curve"));
    }
    instantiate(&["u^4 - 8*a*u*v^3", "4*u^3*v + 4*a*v^4"], &["u", "v"], a)
}

/// [(u² − a·v²)² : 4uv(u − v)(u − a·v)].
pub fn lattes_quartic(a: &Rational) -> Result<DynamicalSystem> {
    if a.is_zero() || a.is_one() {
        return Err(Error::domain("a must avoid 0 and 1"));
    }
    instantiate(
        &["(u^2 - a*v^2)^2", "4*u*v*(u - v)*(u - a*v)"],
        &["u", "v"],
        a,
    )
}

/// The 2-symmetric product of the quartic Lattès family, stored verbatim.
pub fn symmetric_lattes_fixture(a: &Rational) -> Result<DynamicalSystem> {
    if a.is_zero() || a.is_one() {
        return Err(Error::domain("a must avoid 0 and 1"));
    }
    instantiate(
        &[
            "((x + a*z)^2 - a*y^2)^2",
            "4*((x + a*z)^3*y + 2*(a + 1)*(x + a*z)^2*x*z + a*(x + a*z)*y^3 - 8*a*x*y*z*(x + a*z) \
             - (a + 1)*(x^2*y^2 + a^2*y^2*z^2))",
            "16*x*z*(x - y + z)*(x - a*y + a^2*z)",
        ],
        &["x", "y", "z"],
        a,
    )
}

/// The one-parameter Lattès-derived families, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// [u⁴ − 8a·uv³ : 4u³v + 4a·v⁴] on P¹.
    Mordell,
    /// Mordell × z⁴ on P².
    MordellZ4,
    /// Segre product of Mordell with the quartic power map on P¹, on P³.
    MordellSegre,
    /// [(u² − a·v²)² : 4uv(u − v)(u − a·v)] on P¹.
    Quartic,
    /// Quartic × [z⁴ : w⁴] on P³.
    QuarticZ4W4,
    /// The stored 2-symmetric product on P².
    Symmetric,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Mordell,
        Family::MordellZ4,
        Family::MordellSegre,
        Family::Quartic,
        Family::QuarticZ4W4,
        Family::Symmetric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Mordell => "mordell",
            Family::MordellZ4 => "mordell-z4",
            Family::MordellSegre => "mordell-segre",
            Family::Quartic => "quartic",
            Family::QuarticZ4W4 => "quartic-z4-w4",
            Family::Symmetric => "symmetric",
        }
    }

    /// Families whose Σ₁ takes seconds to minutes rather than milliseconds.
    pub fn is_slow(self) -> bool {
        matches!(
            self,
            Family::MordellSegre | Family::QuarticZ4W4 | Family::Symmetric
        )
    }

    pub fn build(self, a: &Rational) -> Result<DynamicalSystem> {
        match self {
            Family::Mordell => lattes_mordell(a),
            Family::MordellZ4 => append_powers(&lattes_mordell(a)?, &["z"]),
            Family::MordellSegre => {
                segre_power_product(&lattes_mordell(a)?, 1, SegreOrder::RowMajor)
            }
            Family::Quartic => lattes_quartic(a),
            Family::QuarticZ4W4 => append_powers(&lattes_quartic(a)?, &["z", "w"]),
            Family::Symmetric => symmetric_lattes_fixture(a),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::Parse(format!(
                    "unknown family `{s}` (expected one of {})",
                    names.join(", ")
                ))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn texts(f: &DynamicalSystem) -> Vec<String> {
        f.coords().iter().map(|c| c.to_string()).collect()
    }

    fn parsed(coords: &[&str], names: &[&str]) -> DynamicalSystem {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        DynamicalSystem::parse(coords, Some(&names)).unwrap()
    }

    #[test]
    fn products() {
        let f = parsed(&["x^2", "y^2"], &["x", "y"]);
        let g = parsed(&["z^2", "w^2"], &["z", "w"]);
        let h = cartesian_product(&f, &g).unwrap();
        assert_eq!(
            h,
            parsed(&["x^2", "y^2", "z^2", "w^2"], &["x", "y", "z", "w"])
        );
        let cubic = parsed(&["z^3", "w^3"], &["z", "w"]);
        assert!(cartesian_product(&f, &cubic).is_err());
        assert_eq!(
            append_powers(&f, &["z"]).unwrap(),
            parsed(&["x^2", "y^2", "z^2"], &["x", "y", "z"])
        );
    }

    #[test]
    fn segre_of_mordell() {
        let f = lattes_mordell(&rat(1)).unwrap();
        let h = segre_power_product(&f, 1, SegreOrder::RowMajor).unwrap();
        let want = parsed(
            &[
                "u0^4 - 8*u0*u2^3",
                "u1^4 - 8*u1*u3^3",
                "4*u0^3*u2 + 4*u2^4",
                "4*u1^3*u3 + 4*u3^4",
            ],
            &["u0", "u1", "u2", "u3"],
        );
        assert_eq!(h, want);
        let c = segre_power_product(&f, 1, SegreOrder::ColumnMajor).unwrap();
        assert_eq!(texts(&c)[0], "u0^4 - 8*u0*u1^3");
    }

    #[test]
    fn split_and_triangular() {
        let s = split_endomorphism(&SplitSpec::parse(&["x^2 + 3", "x^2 - 1/2"]).unwrap()).unwrap();
        assert_eq!(
            s,
            parsed(&["x^2 + 3*z^2", "y^2 - 1/2*z^2", "z^2"], &["x", "y", "z"])
        );
        let t = triangular_endomorphism(&TriangularSpec::parse(&["x^2 + 3", "y^2 - 1/2"]).unwrap())
            .unwrap();
        assert_eq!(s, t);
        assert!(split_endomorphism(&SplitSpec::parse(&["x^2", "x^3"]).unwrap()).is_err());
        assert!(TriangularSpec::parse(&["x^2 + y", "y^2"]).is_err());
        assert!(TriangularSpec::parse(&["x^2", "y^2 + x^3"]).is_err());
        let one = split_endomorphism(&SplitSpec::parse(&["x^2 + 5"]).unwrap()).unwrap();
        assert_eq!(one, parsed(&["x^2 + 5*z^2", "z^2"], &["x", "z"]));
    }

    #[test]
    fn lattes_parameters() {
        assert!(lattes_mordell(&rat(0)).is_err());
        assert_eq!(
            texts(&lattes_mordell(&rat(2)).unwrap()),
            ["u^4 - 16*u*v^3", "4*u^3*v + 8*v^4"]
        );
        assert!(lattes_quartic(&rat(1)).is_err());
        assert!(symmetric_lattes_fixture(&rat(0)).is_err());
        let s = symmetric_lattes_fixture(&rat(2)).unwrap();
        assert_eq!(s.degree(), 4);
        assert_eq!(s.dim(), 2);
    }
}
