//! Decompositions of topes with respect to symmetric cycles in tope graphs
//! of simple oriented matroids.
//!
//! The crate works on two kinds of input: realizable instances given as
//! central hyperplane arrangements with exact rational normals, and explicit
//! tope sets. For a symmetric `2t`-cycle `R` in the tope graph and a tope `T`
//! it computes the inclusion-minimal subset `Q(T, R)` of cycle vertices whose
//! sum is `T`, the simplicial complexes attached to that decomposition, their
//! long f-vectors, and checks the Dehn-Sommerville type relations they obey.
//!
//! Module map:
//!
//! - [`sign`]: sign vectors, element subsets, separation sets, tope sums.
//! - [`rational`]: exact rational vectors and the strict homogeneous
//!   feasibility test (Fourier-Motzkin).
//! - [`arrangements`]: simple central arrangements, chamber enumeration,
//!   instance generators.
//! - [`cycles`]: symmetric cycles in tope graphs.
//! - [`decomposition`]: `Q(T, R)` and its brute-force oracle.
//! - [`complexes`]: the complexes `Λ(T, R)` and `Δ`, long f-vectors.
//! - [`dehn_sommerville`]: relation checks on long f-vectors.
//! - [`oracles`]: feasible-subsystem counts, the half-plane condition and
//!   the hypercube census.
//! - [`io`]: JSON and TSV documents exchanged by the command-line tool.
//! - [`cli`]: the `tope-cycles` command.

pub mod arrangements;
pub mod cli;
pub mod complexes;
pub mod cycles;
pub mod decomposition;
pub mod dehn_sommerville;
mod error;
pub mod io;
pub mod oracles;
pub mod rational;
pub mod sign;

pub use error::{Error, Result};
