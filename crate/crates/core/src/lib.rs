//! Exact multiplier invariants of endomorphisms of projective space.
//!
//! Σ_n(f) = ∏_P (w − γ_{f^n,P}(t)) over the period-n points of f, computed
//! with exact rational arithmetic and Groebner bases, plus the relations,
//! families and recovery procedures built on it.

pub mod error;
pub mod exactpoly;
pub mod families;
pub mod groebner;
pub mod io;
pub mod monic;
pub mod projdyn;
pub mod recovery;
pub mod relations;
pub mod sigma;

pub use error::{Error, Result};
