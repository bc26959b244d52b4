//! Exact arithmetic on integer Laurent polynomials in one variable, the
//! cyclotomic polynomials, and square matrices over `Z[t, t^-1]`.

mod cyclotomic;
mod matrix;
mod poly;

pub use cyclotomic::{cyclotomic, cyclotomic_factorization, divisors, totient};
pub use matrix::{CharPoly, PolyMatrix};
pub use poly::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
}
