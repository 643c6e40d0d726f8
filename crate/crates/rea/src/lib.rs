//! Exact-arithmetic construction, validation and decomposition of
//! finite-dimensional representations of the reflection equation algebra
//! for Hecke-type R-matrices.
//!
//! The crate is organized around a pipeline:
//!
//! 1. [`scalar`] — the field of rational functions in `q` (exact, canonical).
//! 2. [`tensor`] — dense exact linear algebra on tensor-product spaces.
//! 3. [`rmatrix`] — R-matrix catalog and the validation pipeline producing
//!    an [`rmatrix::RMatrixProfile`].
//! 4. [`hecke`] — Young combinatorics, q-(anti)symmetrizers, Jucys-Murphy
//!    operators and Young projectors.
//! 5. [`rep`] — representation families of B and R type, their characters,
//!    sl-reduction and equivalence machinery.
//! 6. [`oracle`] — brute-force verification oracles: relation substitution,
//!    central spectra, intertwiners and the trace identities.
pub mod hecke;
pub mod oracle;
pub mod rep;
pub mod rmatrix;
pub mod scalar;
pub mod tensor;
