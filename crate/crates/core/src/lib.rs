//! Exact computation of parameter schemes for liftings of projective schemes.
//!
//! Given a saturated homogeneous ideal `I'` in `K[x0..x_{n-1}]` and a Hilbert
//! polynomial `p`, the crate enumerates the quasi-stable monomial liftings of
//! `in(I')` and builds, for each of them, a parametric family of bases together
//! with the ideal of constraints whose solutions are the liftings of `I'`:
//! through Groebner strata ([`lifting::lifting_gs`]) or through marked bases
//! over quasi-stable truncations ([`lifting::lifting_ms`]).

pub mod algebra;
pub mod chart;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod lifting;
pub mod monomial_ideal;
pub mod par;
pub mod parametric;
pub mod parse;

pub use algebra::{FieldPoly, Monomial, ParamPoly, Rational, Ring};
pub use error::{Error, Result};
pub use hilbert::HilbertPoly;
pub use monomial_ideal::MonomialIdeal;
