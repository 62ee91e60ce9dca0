//! Exact multivariate polynomial arithmetic over Q.

pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod univariate;

pub use monomial::{Degree, Monomial, MonomialOrder, OrderKind, Vars};
pub use parse::parse_poly;
pub use poly::Poly;
pub use rational::{parse_rational, rat, ratio, Rational};
pub use univariate::{rational_roots, univariate_resultant};
