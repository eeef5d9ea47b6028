//! Exact cluster algebra: exchange matrices, seed mutation over Laurent
//! polynomials, denominator vectors and exchange-graph exploration.

mod explore;
mod laurent;
mod matrix;
mod monomial;
mod seed;

use thiserror::Error;

pub use explore::{explore, Exploration, ExploreMode, MutationEdge, DEFAULT_CLUSTER_CAP};
pub use laurent::{Exponent, LaurentPolynomial};
pub use matrix::{b_matrix_of, ideal_b_matrix, ExchangeMatrix};
pub use monomial::{enumerate_monomials, ClusterMonomial};
pub use seed::Seed;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("tagged triangulation is not admissible")]
    NotAdmissible,
    #[error("Laurent division left a remainder")]
    NonExactDivision,
    #[error("zero polynomial has no denominator vector")]
    ZeroPolynomial,
    #[error("more than {0} clusters")]
    CapExceeded(usize),
    #[error("mutation index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("cluster variable with a non-positive coefficient: {0}")]
    NotPositive(String),
}

/// `den(p)` of a non-zero Laurent polynomial.
pub fn denominator_vector(p: &LaurentPolynomial) -> Result<Vec<i64>, ClusterError> {
    p.denominator_vector()
}

/// `mutate(seed, k)`.
pub fn mutate(seed: &Seed, k: usize) -> Result<Seed, ClusterError> {
    seed.mutate(k)
}
