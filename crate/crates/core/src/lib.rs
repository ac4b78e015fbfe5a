//! Toric ideals of phylogenetic invariants for the group Z2 on the claw tree
//! with `n` leaves, in Fourier coordinates.
//!
//! The crate builds the incidence matrix of the monomial parametrization, a
//! lattice basis of its kernel, the lattice basis ideal and an explicit
//! quadratic generating set, and checks the latter is a lexicographic
//! Gröbner basis. The [`oracle`] module provides independent brute-force
//! ground truth for all of these.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod lattice;
pub mod matrix;
pub mod oracle;

pub use algebra::{
    compare_monomials_lex, compare_words, in_kernel, lift, phi_monomial, phi_variable, project, Binomial, LeafWord,
    Monomial, ParamVariable, DEFAULT_CAP, MAX_LEAVES,
};
pub use error::{Error, Result};
pub use groebner::{ideal_membership, is_groebner, leading_monomial, reduce, s_polynomial, CheckMode};
pub use ideal::{base_generators, build_generators, lift_property_one, property_two_generators, GeneratorSet};
pub use lattice::{lattice_binomials, LatticeBasis};
pub use matrix::IncidenceMatrix;
