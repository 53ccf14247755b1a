//! Exact sparse multivariate polynomials over the integers, ring
//! homomorphisms, and localization at designated denominators.

mod localized;
mod monomial;
mod polynomial;
mod text;

pub use localized::{Factor, LocalizedElement, LocalizedError};
pub use monomial::{Monomial, MonomialOrder, OrderKind, Ring, MAX_VARS};
pub use polynomial::{Polynomial, RingValue};
pub use text::ParseError;
