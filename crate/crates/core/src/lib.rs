//! Exact computations on braid words and the knots they close to: reduced
//! Burau matrices, Alexander polynomials, Garside normal forms, Goeritz
//! signatures of three-strand twisted torus knots, and a concordance
//! distinctness pipeline built from them.
//!
//! ```
//! use braidknot::{alexander, parse_braid};
//!
//! let trefoil = parse_braid("2: 1 1 1").unwrap();
//! assert_eq!(alexander(&trefoil).unwrap().to_string(), "1 - t + t^2");
//! ```

pub mod braid;
pub mod burau;
pub mod concordance;
pub mod goeritz;
pub mod laurent;
pub mod verify;

pub use braid::{
    garside_normal_form, is_twist_positive, parse_braid, BraidError, BraidWord, Letter,
    NormalForm, ParseError,
};
pub use burau::{alexander, reduced_burau, AlexanderPoly, BurauError, Certificate};
pub use concordance::{distinctness_report, ConcordanceError, DistinctnessReport, InvariantRecord};
pub use goeritz::{inertia, GoeritzError, Inertia, SymMatrix};
pub use laurent::{LaurentPoly, PolyError, PolyMatrix};
