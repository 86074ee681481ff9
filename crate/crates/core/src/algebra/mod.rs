//! Terms, coefficients and sparse polynomials.

pub mod coeff;
pub mod monomial;
pub mod poly;
pub mod ring;

pub use coeff::{format_rational, parse_rational, rat, ratio, Coefficient, Rational};
pub use monomial::{monomials_of_degree, Monomial};
pub use poly::{FieldPoly, ParamPoly, Poly};
pub use ring::{Alphabet, Ring};
