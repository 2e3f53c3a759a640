//! Exact symbolic verification for q-deformed coordinate algebras.
//!
//! The crate reduces elements of finitely presented *-algebras over ℚ(t) to
//! normal form, synthesises and checks strong connections for group
//! gradings, and decides smoothness of degree-one generalized Weyl algebras
//! over a polynomial ring by a square-free test.

pub mod catalog;
pub mod error;
pub mod freealg;
pub mod grading;
pub mod gwa;
pub mod linalg;
pub mod scalars;

pub use error::{Error, Result};
pub use freealg::{Element, GenId, MorphismSpec, Presentation, Word};
pub use scalars::{ParamMode, Parameter, Scalar, UniPoly};
