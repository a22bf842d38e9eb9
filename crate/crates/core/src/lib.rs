//! Exact compositae of ordinary generating functions.
//!
//! The composita of `g(x) = Σ_{n≥1} g(n) xⁿ` is the triangle
//! `G(n,k) = [xⁿ] g(x)^k`. This crate builds those triangles over exact
//! rationals, extracts their central coefficients `G(2n-1, n)`, and solves
//! both directions of the central-coefficient problem:
//!
//! * [`central::central_forward`]: from `H`, the generating function of the
//!   central coefficients of the triangle of `x·H(x)`;
//! * [`central::central_inverse`]: from those central coefficients, the
//!   unique `H` and its triangle.
//!
//! ```
//! use composita::{central_forward, Builtin};
//!
//! let h = Builtin::PascalH.series(4);
//! let f = central_forward(&h, 5).unwrap().central_gf;
//! let terms: Vec<String> = f.coeffs().iter().map(|c| c.to_string()).collect();
//! assert_eq!(terms, ["1", "2", "6", "20", "70"]);
//! ```

pub mod bfile;
pub mod builtins;
pub mod central;
pub mod commands;
pub mod composita;
pub mod error;
pub mod rational;
pub mod render;
pub mod series;
pub mod spec;

pub use builtins::{Builtin, Kind};
pub use central::{
    central_forward, central_inverse, central_inverse_with, solve_functional_equation,
    verify_functional_equation, ForwardResult, InverseOptions, InverseResult,
};
pub use composita::{
    composita_of, inverse_composita, inverse_composita_with, reciprocal_composita,
    reciprocal_composita_lemma, reciprocal_composita_series, Composita, ReciprocalRoute,
};
pub use error::{Error, Result};
pub use rational::Rational;
pub use series::Series;
pub use spec::SeriesSpec;
