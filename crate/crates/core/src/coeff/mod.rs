//! Exact scalar arithmetic: the field Q(q) and the commutative Laurent
//! polynomial ring F[a^{±1}, b^{±1}, c^{±1}] over it.
//!
//! Working over the function field Q(q) makes the standing assumption
//! `q^4 != 1` hold identically, so every identity in the kernel is verified
//! without side conditions. All values are immutable and all operations are
//! pure; there is no floating point anywhere.

mod laurent;
mod poly;
mod ratq;

pub use laurent::{AbcMono, Bindings, LaurentABC};
pub use poly::IntPoly;
pub use ratq::{check_q_binding, RatQ};

use thiserror::Error;

/// Errors raised by scalar arithmetic and specialization.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("forbidden specialization: q must be nonzero with q^4 != 1")]
    ForbiddenSpecialization,
    #[error("a, b, c must be bound to nonzero values")]
    ZeroBinding,
    #[error("denominator vanishes at the chosen specialization point")]
    PoleAtSpecialization,
}
