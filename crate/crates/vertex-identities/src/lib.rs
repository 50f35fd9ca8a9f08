//! Exact verification toolkit for determinant, Pfaffian, and lattice-model
//! identities tied to symmetry classes of alternating sign matrices and
//! plane partitions.
//!
//! The crate is organized as:
//! * [`exact`] — big-rational arithmetic, truncated multivariate series,
//!   division-free determinants and Pfaffians;
//! * [`partitions`] — integer partitions, interlacing, and the standard
//!   `t`-coefficients attached to them;
//! * [`symfunc`] — Schur, Hall–Littlewood, symplectic, and hyperoctahedral
//!   Hall–Littlewood evaluators and formal expanders;
//! * [`latticepf`] — six-vertex configuration enumerators for six boundary
//!   domains and their determinant/Pfaffian closed forms;
//! * [`planepart`] — plane partitions, symmetry restrictions, path
//!   statistics, and generating-function truncations;
//! * [`macdiff`] — Macdonald-type difference operators and eigenvalue
//!   checks;
//! * [`verify`] — the identity registry: every identity this crate can
//!   test, with a uniform report format.

pub mod exact;
pub mod latticepf;
pub mod macdiff;
pub mod partitions;
pub mod planepart;
pub mod symfunc;
pub mod verify;
