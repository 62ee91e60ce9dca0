//! N = 1: Σ_n by a single resultant, with no Groebner basis and no points.

use num_traits::Zero;

use super::{wt_vars, SigmaMode, SigmaPolynomial};
use crate::error::{Error, Result};
use crate::exactpoly::univariate::resultant_index;
use crate::exactpoly::{Poly, Rational, Vars};
use crate::projdyn::{period_count, DynamicalSystem};

/// Σ_n(f) for a map of P^1 as Res_z(Fix, G), normalized monic in w, times
/// the factor of a fixed point at infinity.
///
/// With g = f^n written [F0 : F1], on the chart x1 = 1 (z = x0):
/// Fix(z) = F0(z,1) − z·F1(z,1) and
/// G(z) = (w − t)·F1(z,1) + F0'(z,1) − z·F1'(z,1),
/// so G(z)/F1(z,1) = w − γ_z(t) at every affine fixed point.
pub fn sigma_dim1_resultant(f: &DynamicalSystem, n: u32) -> Result<SigmaPolynomial> {
    if f.dim() != 1 {
        return Err(Error::domain("the resultant path needs a map of P^1"));
    }
    let g = f.iterate(n)?;
    let dn = period_count(1, f.degree(), n);
    let big = Vars::new(&["z", "w", "t"])?;
    let to_z = |p: &Poly, at_infinity: bool| -> Poly {
        // x0 -> z, x1 -> 1 (or x0 -> 1, x1 -> z for the chart at infinity)
        let one = Poly::one(&big);
        let z = Poly::var_index(&big, 0);
        let images = if at_infinity {
            vec![one, z]
        } else {
            vec![z, one]
        };
        p.compose(&images, &big)
    };
    let f0 = to_z(&g.coords()[0], false);
    let f1 = to_z(&g.coords()[1], false);
    let z = Poly::var_index(&big, 0);
    let w = Poly::var_index(&big, 1);
    let t = Poly::var_index(&big, 2);
    let fix = &f0 - &(&z * &f1);
    let gg = &(&(&w - &t) * &f1) + &(&f0.derivative_index(0) - &(&z * &f1.derivative_index(0)));
    let wt = wt_vars();
    let mut acc = if fix.degree_in(0).finite().unwrap_or(0) == 0 {
        Poly::one(&wt)
    } else {
        let r = resultant_index(&fix, &gg, 0)?.with_vars(&wt)?;
        let lead = r.coefficients_in(0).pop().ok_or(Error::ZeroPolynomial)?;
        if !lead.is_constant() || lead.is_zero() {
            return Err(Error::domain(format!(
                "resultant has non-constant leading coefficient {lead}"
            )));
        }
        r.scale(&lead.constant_term().recip())
    };
    // fixed point (1:0) with multiplicity d^n + 1 − deg Fix
    let affine = fix.degree_in(0).finite().unwrap_or(0) as u64;
    let total = u64::try_from(&dn).map_err(|_| Error::ResourceLimit("D_n too large".into()))?;
    let m_inf = total - affine;
    if m_inf > 0 {
        let p0 = to_z(&g.coords()[0], true);
        let p1 = to_z(&g.coords()[1], true);
        let zero = [(0usize, Rational::zero())];
        let g0 = p0.specialize(&zero).constant_term();
        let lambda = p1.derivative_index(0).specialize(&zero).constant_term() / g0;
        let wv = Poly::var_index(&wt, 0);
        let tv = Poly::var_index(&wt, 1);
        let factor = &(&wv - &tv) + &Poly::constant(&wt, lambda);
        acc = &acc * &factor.pow_u(m_inf as u32);
    }
    let out = SigmaPolynomial {
        poly: acc,
        n,
        dim: 1,
        degree: f.degree(),
        dn,
        mode: SigmaMode::Chow,
    };
    out.check_invariants()?;
    Ok(out)
}
