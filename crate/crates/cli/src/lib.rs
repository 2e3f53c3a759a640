//! Presentation files, verification commands and certificates for `qsmooth`.

pub mod cert;
pub mod commands;
pub mod dsl;

pub use cert::{Certificate, CheckLine, Status, Witness};
pub use commands::{CliError, Options, Outcome};
pub use dsl::{emit_dsl, parse_dsl, DslDocument, DslError};
