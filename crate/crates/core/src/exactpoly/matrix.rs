//! Exact dense linear algebra over Q and over polynomial rings.

#![allow(clippy::needless_range_loop)]

use num_traits::{One, Zero};

use super::monomial::Vars;
use super::poly::Poly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Determinant of a square matrix of polynomials by fraction-free
/// (Bareiss) elimination. Every division is exact.
pub fn poly_det(mut m: Vec<Vec<Poly>>, vars: &Vars) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one(vars);
    }
    let mut negate = false;
    let mut prev = Poly::one(vars);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            // prefer the sparsest usable pivot
            let pick = (k + 1..n)
                .filter(|&r| !m[r][k].is_zero())
                .min_by_key(|&r| m[r][k].len());
            match pick {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Poly::zero(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = if prev.is_one() {
                    a
                } else {
                    a.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
            m[i][k] = Poly::zero(vars);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

pub type QMatrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = a.len();
    let p = b[0].len();
    let mut out = vec![vec![Rational::zero(); p]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..p {
                out[i][j] += &a[i][k] * &bk[j];
            }
        }
    }
    out
}

pub fn det(a: &QMatrix) -> Rational {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            m.swap(p, k);
            d = -d;
        }
        d *= &m[k][k];
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    d
}

pub fn inverse(a: &QMatrix) -> Result<QMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for k in 0..n {
        let p = (k..n)
            .find(|&r| !m[r][k].is_zero())
            .ok_or(Error::SingularMatrix)?;
        m.swap(p, k);
        let inv = m[k][k].recip();
        for x in m[k].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone();
            for j in 0..2 * n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Characteristic polynomial det(t*I - A), coefficients lowest degree first,
/// by reduction to upper Hessenberg form.
pub fn charpoly(a: &QMatrix) -> Vec<Rational> {
    let n = a.len();
    let mut h = a.clone();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = h[m][m - 1].recip();
        for j in m + 1..n {
            if h[j][m - 1].is_zero() {
                continue;
            }
            let u = &h[j][m - 1] * &inv;
            for k in 0..n {
                let t = &u * &h[m][k];
                h[j][k] -= t;
            }
            for row in h.iter_mut() {
                let t = &u * &row[j];
                row[m] += t;
            }
        }
    }
    let mut p: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for m in 1..=n {
        let prev = &p[m - 1];
        let mut pm = vec![Rational::zero(); m + 1];
        for (k, c) in prev.iter().enumerate() {
            pm[k + 1] += c;
            pm[k] -= &h[m - 1][m - 1] * c;
        }
        let mut tprod = Rational::one();
        for i in (1..m).rev() {
            tprod *= &h[i][i - 1];
            if tprod.is_zero() {
                break;
            }
            let f = &h[i - 1][m - 1] * &tprod;
            if f.is_zero() {
                continue;
            }
            for (k, c) in p[i - 1].iter().enumerate() {
                pm[k] -= &f * c;
            }
        }
        p.push(pm);
    }
    p.pop().unwrap()
}

pub fn mat_vec(a: &QMatrix, v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, _)| !x.is_zero())
                .map(|(x, y)| x * y)
                .sum()
        })
        .collect()
}

/// Basis of the right kernel of `a` (a has `cols` columns).
pub fn nullspace(a: &QMatrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut m = a.clone();
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                let t = &f * &m[r][j];
                m[i][j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); cols];
            v[fc] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][fc].clone();
            }
            v
        })
        .collect()
}

/// Monic annihilator of `u` under `a` of least degree, lowest degree first.
fn krylov_annihilator(a: &QMatrix, u: Vec<Rational>) -> Vec<Rational> {
    let n = u.len();
    // echelon rows: (pivot column, reduced vector, combination of Krylov vectors)
    let mut rows: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut v = u;
    for k in 0..=n {
        let mut w = v.clone();
        let mut comb = vec![Rational::zero(); k + 1];
        comb[k] = Rational::one();
        for (pc, rv, rc) in &rows {
            if w[*pc].is_zero() {
                continue;
            }
            let f = w[*pc].clone();
            for (x, y) in w.iter_mut().zip(rv) {
                *x -= &f * y;
            }
            for (x, y) in comb.iter_mut().zip(rc) {
                *x -= &f * y;
            }
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => return comb,
            Some(pc) => {
                let inv = w[pc].recip();
                for x in w.iter_mut() {
                    *x *= &inv;
                }
                for x in comb.iter_mut() {
                    *x *= &inv;
                }
                rows.push((pc, w, comb));
            }
        }
        v = mat_vec(a, &v);
    }
    unreachable!("a Krylov sequence in dimension n is dependent after n steps")
}

fn poly_apply(a: &QMatrix, p: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); v.len()];
    for c in p.iter().rev() {
        acc = mat_vec(a, &acc);
        for (x, y) in acc.iter_mut().zip(v) {
            *x += c * y;
        }
    }
    acc
}

/// Minimal polynomial of `a`, monic, lowest degree first.
pub fn minpoly(a: &QMatrix) -> Vec<Rational> {
    let n = a.len();
    let mut mu = vec![Rational::one()];
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        let u = poly_apply(a, &mu, &e);
        if u.iter().all(|x| x.is_zero()) {
            continue;
        }
        let nu = krylov_annihilator(a, u);
        let mut prod = vec![Rational::zero(); mu.len() + nu.len() - 1];
        for (i, x) in mu.iter().enumerate() {
            for (j, y) in nu.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        mu = prod;
    }
    mu
}

/// Outcome of solving a linear system exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Rational>),
    Underdetermined {
        dim: usize,
        particular: Vec<Rational>,
    },
    NoSolution,
}

/// Solves `a * x = b` by Gauss–Jordan elimination.
pub fn solve(a: &QMatrix, b: &[Rational]) -> LinearSolution {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            row.iter()
                .cloned()
                .chain(std::iter::once(bi.clone()))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..=cols {
                let t = &f * &m[r][j];
                m[i][j] -= t;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return LinearSolution::NoSolution;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    if pivots.len() == cols {
        LinearSolution::Unique(x)
    } else {
        LinearSolution::Underdetermined {
            dim: cols - pivots.len(),
            particular: x,
        }
    }
}
