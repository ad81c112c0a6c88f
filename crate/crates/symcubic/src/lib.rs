//! Exact invariants of cubic fourfolds with diagonal cyclic symmetry.
//!
//! Starting from a symmetry type (a cyclic group acting diagonally on six
//! coordinates plus a character), the crate computes from first principles:
//!
//! * the eigenspace of invariant cubic forms and its canonical monomial basis,
//! * smoothness certificates for members via the Jacobian ring,
//! * character-decomposed Hodge numbers of primitive middle cohomology
//!   through residue calculus,
//! * the moduli dimension by infinitesimal orbit rank, cross-checked against
//!   the Hodge-side count,
//! * the period-domain type (complex ball, type IV domain, or a point),
//! * the Baily-Borel emptiness criterion by finite factorization search,
//! * and the appendix-level lattice operations (eigenlattices, isotropic
//!   vectors, boundary subspaces).
//!
//! All arithmetic is exact: rationals for structural linear algebra, prime
//! fields with certified lifts for the large graded ranks.

// Dense matrix kernels index rows and columns directly throughout.
#![allow(clippy::needless_range_loop)]

pub mod boundary;
pub mod error;
pub mod exact;
pub mod jacobian;
pub mod lattice;
pub mod moduli;
pub mod registry;
pub mod symmetry;

pub use boundary::{bb_verdict, chi_form, verify_veronese_singularity, BBVerdict};
pub use error::{Error, Result};
pub use exact::{Monomial, Polynomial, QMat, Subspace};
pub use jacobian::{
    hilbert_function, hodge_eigen, nprime, sample_smooth_member, smoothness_certificate,
    HodgeEigenData, JacobianProfile, RankConfig, SampleConfig, SmoothnessCertificate, Verdict,
};
pub use lattice::{IntegralLattice, Isometry};
pub use moduli::{
    analyze, classify_all, classify_domain, moduli_dimension, orbit_rank, ClassificationRow,
    DomainDescriptor, ModuliReport,
};
pub use symmetry::{
    centralizer_dimension, eigenspace_basis, quasismooth_screen, EigenspaceBasis,
    SymmetryDescriptor, SymmetryType, NVARS,
};
