//! Machine-checked polynomial identities behind the Edwards curve group law,
//! and the resulting groups over small prime fields.
//!
//! - [`polyring`]: sparse integer polynomials and their localizations.
//! - [`reduce`]: multivariate division with checkable certificates, and Buchberger.
//! - [`identities`]: the symbolic catalog, run by [`identities::run_all`].
//! - [`field`], [`curve`]: prime fields and curve arithmetic.
//! - [`oracle`]: exhaustive checks of the group axioms on small curves.
//! - [`cli`]: the `edwards-proof` command.

pub mod cli;
pub mod curve;
pub mod field;
pub mod identities;
pub mod oracle;
pub mod polyring;
pub mod reduce;
