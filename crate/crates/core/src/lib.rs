//! Exact arithmetic for palindromic polynomials.
//!
//! A nonzero polynomial `f(q) = a_r q^r + ... + a_s q^s` with `a_r, a_s != 0`
//! has *darga* `r + s`. It is palindromic when its coefficient sequence reads
//! the same in both directions. The palindromic polynomials of darga `n` form
//! a vector space `P_n` of dimension `n/2 + 1`, and this crate works with it
//! through three bases induced by the basic sequences
//!
//! * `S_j = 1 + q^j`,
//! * `A_j = 1 + q + ... + q^j`,
//! * `B_j = (1 + q)^j`,
//!
//! each giving basis elements `q^j f_{n-2j}(q)`. Coordinates in `A` decide
//! unimodality, coordinates in `B` are the gamma-vector.
//!
//! All scalars are exact rationals ([`Coefficient`]). Data-parallel loops use
//! rayon when the `parallel` feature is enabled (the default) and fall back to
//! plain iterators otherwise; see [`par`].

pub mod basis;
pub mod cli;
mod error;
pub mod families;
pub mod par;
pub mod poly;
pub mod positivity;
pub mod sturm;

pub use basis::{BasisId, CoordinateVector, TransitionMatrix};
pub use error::{Error, Result};
pub use poly::{Coefficient, FactorSpec, Polynomial};
