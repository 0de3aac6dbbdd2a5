//! Shuffle operads, operadic Gröbner bases and PBW tests for universal
//! enveloping algebras of operads.

pub mod dual;
pub mod format;
pub mod groebner;
pub mod linalg;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod pbw;
pub mod rational;
pub mod series;
pub mod symmetric;
pub mod trees;
pub mod uea;
