//! Free *-algebras over ℚ(t), presentations by oriented rewrite rules,
//! normal forms, confluence checking and algebra morphisms.

mod confluence;
mod element;
mod morphism;
mod presentation;
mod text;

pub use confluence::{
    ambiguities, confluence_check, validate_presentation, CriticalPair, OrderViolation, ValidationReport,
};
pub use element::{Element, GenId, Word};
pub use morphism::{substitute, verify_automorphism, AutomorphismReport, MorphismReport, MorphismSpec};
pub use presentation::{Generator, Presentation, RewriteRule, Star, DEFAULT_FUEL};
pub use text::{ExprParser, TextError};
