//! Exact computational models of plane-partition representations of the
//! quantum toroidal gl(1) algebra.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalars`] — exact rationals, monomials in the three deformation
//!   parameters, generic parameter generation, and factored scalars that
//!   support the q1 → 1 limit without expansion.
//! * [`partitions`] — integer partitions, 2D corners, interlacing.
//! * [`planepartitions`] — plane partitions with boundary conditions along
//!   the three axes, 3D corners, graded enumeration, shells, resonance
//!   combinatorics, and splits decompositions.
//! * [`psi`] — factored psi-eigenvalue functions and their mode expansions.
//! * [`fockrep`] — the vector and Fock representations.
//! * [`macmahonrep`] — MacMahon modules with boundaries, raising/lowering
//!   actions, mode matrices, quotient modules, and the q1 → 1 limit.
//! * [`glinf_gz`] — Gelfand-Zetlin bases for gl_N and the glued gl(infinity)
//!   modules on hook-shaped patterns.
//! * [`characters`] — truncated integer q-series and character identities.
//! * [`verify`] — exact relation checking on graded components.

pub mod characters;
pub mod fockrep;
pub mod glinf_gz;
pub mod macmahonrep;
pub mod par;
pub mod partitions;
pub mod planepartitions;
pub mod psi;
pub mod scalars;
pub mod verify;
