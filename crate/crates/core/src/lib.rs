//! Exact intersection forms, dual graphs and allowed-subset polynomials for
//! cyclic words of singular blocks `s_k` and regular blocks `r_m`.
//!
//! The discriminant `det M(sigma)` is computed two ways that share no code:
//! by exact elimination on the matrix built from jump edges
//! ([`form`]), and as the square of `P_{A(sigma)}(k_0, ..., k_{N-1})`
//! built from allowed subsets ([`tiling`]). [`invariants`] compares them.
//!
//! ```
//! use gss_core::{form::build_form, invariants::lattice_index, parse_sigma};
//!
//! let w = parse_sigma("s1 r1 s2 s1").unwrap();
//! assert_eq!(build_form(&w).determinant(), 49.into());
//! assert_eq!(lattice_index(&w).unwrap(), 7.into());
//! ```

pub mod cli;
pub mod error;
pub mod form;
pub mod graph;
pub mod invariants;
pub mod sequence;
pub mod tiling;

pub use error::{Error, Result};
pub use sequence::{factor_aword, parse_sigma, AWord, ClassTag, PartKind, SequencePart, SigmaWord, SurfaceClass};
