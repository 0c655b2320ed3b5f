//! Exact multivariate polynomial arithmetic over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::{compare_monomials, MonomialOrdering, OrderKind, OrderSchedule, TermOrder};
pub use parse::{parse_polynomial, parse_polynomial_at};
pub use polynomial::{Coefficient, Polynomial, Term};
pub use ring::Ring;
