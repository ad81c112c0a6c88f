//! Exact arithmetic substrate: monomial combinatorics, rational polynomials,
//! linear algebra over Q and over prime fields, and certified exact ranks.

pub mod certify;
pub mod matp;
pub mod matq;
pub mod monomial;
pub mod poly;

pub use certify::{certified_rank, RankCertificate, SparseIntMat};
pub use matp::{is_prime_u64, prime_pool, validate_modulus, FpMat};
pub use matq::{symmetric_signature, QMat, Subspace};
pub use monomial::{graded_dimension, monomials_of_degree, Monomial};
pub use poly::{format_rational, parse_rational, Polynomial, PolynomialJson, TermJson};
