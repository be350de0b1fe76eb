//! Exact closed-form powers of upper-triangular matrices.
//!
//! Any integer power of a k×k upper-triangular matrix can be written per
//! entry as a fixed linear combination of powers of the diagonal values.
//! When the diagonal entries are distinct, the combination is
//! `sum_s p[i,j,s] * m[s,s]^(n-1)` with power factors `p` computed by a
//! recursion on the column index. When diagonal values repeat, the matrix
//! is perturbed symbolically so its diagonal becomes distinct, the same
//! recursion runs over rational functions in the perturbation variable,
//! and exact limits at zero yield coefficients `c[i,j,r,s]` for the
//! generalized form `sum_r sum_s c * binom(n-1, s-1) * lambda_r^(n-s)`.
//! All arithmetic is exact; independent oracles (direct multiplication,
//! back-substituted inverses, confluent Vandermonde solves) cross-check
//! every path.
//!
//! The crate is `no_std` (alloc required); IO, file formats, and the CLI
//! live in the companion `tripow-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod closed_form;
pub mod diagonal;
pub mod error;
pub mod factors;
pub mod field;
pub mod matrix;
pub mod opcount;
pub mod polynomial;
pub mod rational;
pub mod rational_function;
pub mod verify;

pub use closed_form::{gen_binom, matrix_power, CellClosedForm, ClosedFormTable};
pub use diagonal::{group_diagonal, DiagonalGroup, DiagonalGrouping, PerturbationPlan};
pub use error::{Error, Result};
pub use factors::{adjusted_chain_sum, chain_count, PowerFactorTable};
pub use field::Field;
pub use matrix::TriMatrix;
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use rational_function::RationalFunction;
pub use verify::{
    confluent_coefficients, direct_power, equivalence_suite, tri_inverse, Mismatch,
    VerificationReport,
};
