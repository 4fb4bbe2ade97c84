//! Strengthened Euler inequalities for triangles in constant-curvature
//! geometry.
//!
//! Euler's classical inequality says the circumradius and inradius of a
//! Euclidean triangle satisfy `R >= 2r`. This crate works with a family of
//! refinements of that bound — interpolating chains of symmetric expressions
//! squeezed between the Euler ratio and the constant 2 — and with their
//! analogues on the sphere (`tan R / tan r`) and in the hyperbolic plane
//! (`tanh R / tanh r`), built uniformly from the half-side transform
//!
//! ```text
//! s(x) = x/2        (euclidean)
//! s(x) = sin(x/2)   (spherical)
//! s(x) = sinh(x/2)  (hyperbolic)
//! ```
//!
//! The crate provides four layers:
//!
//! * [`geometry`] / [`chains`] — validated triangles, the core quantities
//!   (`B`, `Bbar`, the Euler ratio, both radii), and a catalog of inequality
//!   chains evaluated term by term with relative-tolerance verdicts.
//! * [`oracles`] — the structural identities and sign laws the chains rest
//!   on (the Euclidean-transfer map, `B` vs `Bbar`, product/sum
//!   factorizations, Ravi substitution), each exposed as a checkable
//!   residual.
//! * [`interval`] / [`certify`] — outward-rounded interval arithmetic and a
//!   branch-and-bound certifier that proves or refutes a chain gap over a
//!   box of side lengths, with algebraic positivity kernels for the
//!   Euclidean cases that interval arithmetic alone cannot close.
//! * [`search`] / [`sample`] / [`report`] — deterministic counterexample
//!   search, random sampling of valid triangles, and JSON/CSV/table output,
//!   including reproduction of reference values recorded in prior numerical
//!   experiments.
//!
//! Not every classical fact survives curvature: a hyperbolic triangle need
//! not have a circumscribed circle at all, and the tail of the original
//! interpolation chain genuinely fails for some thin hyperbolic triangles.
//! The API keeps those caveats explicit — radii are `Option`/`Result`
//! valued, and chain verdicts report exactly which adjacent comparison
//! breaks — rather than papering over them.

pub mod certify;
pub mod chains;
pub mod error;
pub mod geometry;
pub mod interval;
pub mod oracles;
pub mod report;
pub mod sample;
pub mod search;

pub use chains::{evaluate_chain, ChainId, ChainReport, TermKind, Verdict, DEFAULT_TOL_REL};
pub use error::{Result, TrigonError};
pub use geometry::{
    circumradius, core_quantities, euler_ratio, inradius, quantity_b, quantity_b_bar, s_value,
    validate_triangle, CoreQuantities, GeometryKind, Triangle, DEGENERACY_MARGIN,
};
