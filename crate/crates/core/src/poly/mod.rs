//! Exact sparse multivariate polynomials over the rationals.

mod format;
mod monomial;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use polynomial::{Coefficient, Polynomial};
pub use ring::{MonomialOrder, RingContext};
