//! Univariate tools: resultants and rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::poly_det;
use super::monomial::Degree;
use super::poly::Poly;
use super::rational::{content_of, Rational};
use crate::error::{Error, Result};

/// Resultant of `f` and `g` with respect to variable `var`, computed as the
/// determinant of the Sylvester matrix (rows of `f` first).
pub fn univariate_resultant(f: &Poly, g: &Poly, var: &str) -> Result<Poly> {
    let i = f.vars().require(var)?;
    if !f.vars().same(g.vars()) {
        return Err(Error::VariableMismatch {
            left: f.vars().to_vec(),
            right: g.vars().to_vec(),
        });
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    resultant_index(f, g, i)
}

pub(crate) fn resultant_index(f: &Poly, g: &Poly, i: usize) -> Result<Poly> {
    let vars = f.vars();
    let m = f.degree_in(i).finite().ok_or(Error::ZeroPolynomial)? as usize;
    let n = g.degree_in(i).finite().ok_or(Error::ZeroPolynomial)? as usize;
    if m == 0 {
        return Ok(f.pow_u(n as u32));
    }
    if n == 0 {
        return Ok(g.pow_u(m as u32));
    }
    let fc = f.coefficients_in(i);
    let gc = g.coefficients_in(i);
    let size = m + n;
    let mut mat = vec![vec![Poly::zero(vars); size]; size];
    for r in 0..n {
        for k in 0..=m {
            mat[r][r + k] = fc[m - k].clone();
        }
    }
    for r in 0..m {
        for k in 0..=n {
            mat[n + r][r + k] = gc[n - k].clone();
        }
    }
    Ok(poly_det(mat, vars))
}

// Dense univariate helpers, coefficients lowest degree first.

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn ueval(p: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn uderiv(p: &[Rational]) -> Vec<Rational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
        .collect()
}

/// Quotient and remainder of `a / b` (b nonzero).
pub(crate) fn udivrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lb;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

fn ugcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = udivrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &l;
        }
    }
    x
}

fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(seq: &[Vec<Rational>], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let s = sign(&ueval(p, x));
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Rational roots of a univariate rational polynomial with multiplicities,
/// sorted ascending. Coefficients are given lowest degree first.
pub fn rational_roots_coeffs(coeffs: &[Rational]) -> Result<Vec<(Rational, u32)>> {
    let mut p = coeffs.to_vec();
    trim(&mut p);
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        out.push((Rational::zero(), zeros as u32));
        p.drain(..zeros);
    }
    if p.len() <= 1 {
        return Ok(out);
    }
    // primitive integer form
    let c = content_of(p.iter());
    for x in p.iter_mut() {
        *x /= &c;
    }
    let sqfree = {
        let g = ugcd(&p, &uderiv(&p));
        udivrem(&p, &g).0
    };
    let lc_int = {
        let c = content_of(sqfree.iter());
        let prim: Vec<Rational> = sqfree.iter().map(|x| x / &c).collect();
        prim.last().unwrap().numer().abs()
    };
    let lc = Rational::from_integer(lc_int.clone());
    let mut seq = vec![sqfree.clone(), uderiv(&sqfree)];
    loop {
        let n = seq.len();
        let (_, r) = udivrem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|x| -x).collect());
    }
    let top = sqfree.last().unwrap().abs();
    let bound = Rational::one()
        + sqfree[..sqfree.len() - 1]
            .iter()
            .map(|c| c.abs() / &top)
            .fold(Rational::zero(), |a, b| if b > a { b } else { a });

    let mut found: Vec<Rational> = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    let two = Rational::from_integer(BigInt::from(2));
    let width_limit = lc.recip();
    while let Some((lo, hi)) = stack.pop() {
        let count = variations(&seq, &lo) - variations(&seq, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            refine_single(&sqfree, lo, hi, &lc_int, &width_limit, &mut found);
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if ueval(&sqfree, &mid).is_zero() {
            push_unique(&mut found, mid.clone());
        }
        let split = nonroot_split(&sqfree, &lo, &hi);
        stack.push((lo, split.clone()));
        stack.push((split, hi));
    }
    for r in found {
        let mult = multiplicity(&p, &r);
        out.push((r, mult));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

fn push_unique(found: &mut Vec<Rational>, r: Rational) {
    if !found.contains(&r) {
        found.push(r);
    }
}

fn nonroot_split(p: &[Rational], lo: &Rational, hi: &Rational) -> Rational {
    let mut k = 2i64;
    loop {
        for j in 1..k {
            let s = lo + (hi - lo) * Rational::new(BigInt::from(j), BigInt::from(k));
            if !ueval(p, &s).is_zero() {
                return s;
            }
        }
        k += 1;
    }
}

fn refine_single(
    p: &[Rational],
    mut lo: Rational,
    mut hi: Rational,
    lc: &BigInt,
    width_limit: &Rational,
    found: &mut Vec<Rational>,
) {
    let two = Rational::from_integer(BigInt::from(2));
    let mut slo = sign(&ueval(p, &lo));
    while &(&hi - &lo) >= width_limit {
        let mid = (&lo + &hi) / &two;
        let sm = sign(&ueval(p, &mid));
        if sm == 0 {
            push_unique(found, mid);
            return;
        }
        if slo != 0 && sm != slo {
            hi = mid;
        } else {
            lo = mid;
            slo = sm;
        }
    }
    let lcq = Rational::from_integer(lc.clone());
    let k_lo = (&lo * &lcq).ceil().to_integer();
    let k_hi = (&hi * &lcq).floor().to_integer();
    let mut k = k_lo;
    while k <= k_hi {
        let cand = Rational::new(k.clone(), lc.clone());
        if ueval(p, &cand).is_zero() {
            push_unique(found, cand);
        }
        k += 1;
    }
}

fn multiplicity(p: &[Rational], r: &Rational) -> u32 {
    let lin = vec![-r.clone(), Rational::one()];
    let mut cur = p.to_vec();
    let mut m = 0;
    loop {
        let (q, rem) = udivrem(&cur, &lin);
        if !rem.is_empty() {
            return m;
        }
        m += 1;
        cur = q;
    }
}

/// Rational roots of a polynomial that only involves `var`.
pub fn rational_roots(f: &Poly, var: &str) -> Result<Vec<(Rational, u32)>> {
    let i = f.vars().require(var)?;
    rational_roots_coeffs(&f.univariate_coeffs(i)?)
}

/// Degree of a univariate coefficient list.
/// The polynomial of degree < len(xs) through the points (xs[i], ys[i]),
/// lowest degree first (Newton divided differences).
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - k]);
        }
    }
    let mut out = vec![Rational::zero(); n.max(1)];
    for k in (0..n).rev() {
        // out = out * (x - xs[k]) + dd[k]
        let mut next = vec![Rational::zero(); n.max(1)];
        for (i, c) in out.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i + 1 < next.len() {
                next[i + 1] += c;
            }
            next[i] -= c * &xs[k];
        }
        next[0] += &dd[k];
        out = next;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

pub fn udegree(p: &[Rational]) -> Degree {
    match p.iter().rposition(|c| !c.is_zero()) {
        Some(d) => Degree::Finite(d as u32),
        None => Degree::NegInfinity,
    }
}

/// Integer gcd of all numerators, handy for content checks in tests.
pub fn numerator_gcd(p: &[Rational]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c.numer()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::monomial::Vars;
    use crate::exactpoly::parse::parse_poly;
    use crate::exactpoly::rational::{rat, ratio};

    #[test]
    fn interpolation_recovers_cubic() {
        let f = [rat(3), ratio(-1, 2), rat(0), rat(2)];
        let xs: Vec<Rational> = (0..6).map(rat).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| ueval(&f, x)).collect();
        assert_eq!(interpolate(&xs, &ys), f.to_vec());
        assert_eq!(interpolate(&[rat(1)], &[rat(0)]), vec![rat(0)]);
    }

    #[test]
    fn resultant_of_linear_factors() {
        let v = Vars::new(&["x", "t"]).unwrap();
        let f = parse_poly("x^2 - 1", &v).unwrap();
        let g = parse_poly("x - t", &v).unwrap();
        // Res_x(x^2 - 1, x - t) = t^2 - 1 up to the sign convention
        let r = univariate_resultant(&f, &g, "x").unwrap();
        assert_eq!(r, parse_poly("t^2 - 1", &v).unwrap());
        let r2 = univariate_resultant(&g, &f, "x").unwrap();
        assert_eq!(r2, r);
    }

    #[test]
    fn resultant_vanishes_on_common_root() {
        let v = Vars::new(&["x"]).unwrap();
        let f = parse_poly("(x - 2)*(x + 1)", &v).unwrap();
        let g = parse_poly("(x - 2)*(x - 5)", &v).unwrap();
        assert!(univariate_resultant(&f, &g, "x").unwrap().is_zero());
    }

    #[test]
    fn resultant_rejects_zero() {
        let v = Vars::new(&["x"]).unwrap();
        let f = parse_poly("x", &v).unwrap();
        assert!(univariate_resultant(&Poly::zero(&v), &f, "x").is_err());
    }

    #[test]
    fn roots_with_multiplicity() {
        let v = Vars::new(&["x"]).unwrap();
        let f = parse_poly("(x - 3/2)^3*(x + 1/2)*(2*x - 1)*x^2*(x^2 + 1)", &v).unwrap();
        let roots = rational_roots(&f, "x").unwrap();
        assert_eq!(
            roots,
            vec![
                (ratio(-1, 2), 1),
                (rat(0), 2),
                (ratio(1, 2), 1),
                (ratio(3, 2), 3)
            ]
        );
    }

    #[test]
    fn irrational_roots_are_skipped() {
        let v = Vars::new(&["x"]).unwrap();
        let f = parse_poly("x^2 - 2", &v).unwrap();
        assert!(rational_roots(&f, "x").unwrap().is_empty());
    }

    #[test]
    fn close_roots_are_separated() {
        let v = Vars::new(&["x"]).unwrap();
        let f = parse_poly("(1000*x - 1)*(1001*x - 1)", &v).unwrap();
        let roots = rational_roots(&f, "x").unwrap();
        assert_eq!(roots, vec![(ratio(1, 1001), 1), (ratio(1, 1000), 1)]);
    }
}
