//! Binary linear code analysis for Z_2-torus isotropy representations.
//!
//! The crate is organised bottom-up:
//!
//! * [`gf2`] exact arithmetic on words of `Z_2^n` and generator matrices,
//!   including Gray-code codeword enumeration.
//! * [`bounds`] exact (big integer) and analytic upper bounds on minimum distance.
//! * [`codelib`] named constructions and searches producing lower-bound witnesses.
//! * [`isotropy`] the representation analyzer (codimensions, characters).
//! * [`verifier`] the verification engine producing [`verifier::VerificationReport`]s.

pub mod bounds;
pub mod codelib;
pub mod error;
pub mod gf2;
pub mod isotropy;
pub mod verifier;

pub use error::{Error, Result};
pub use gf2::{CodeSummary, GenMatrix, Gf2Word};

/// Floating type used for the analytic bounds in reports.
pub type Real = f64;

/// Packed word used by the enumeration fast path when `n <= 64`.
pub type PackedWord = u64;

/// Packed word used by the `[11, 5]` scan kernel.
pub type ScanWord = u16;
