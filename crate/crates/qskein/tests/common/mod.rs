//! Shared diagram constructions for the integration tests (re-exported from
//! the library's cross-validation helpers).
#![allow(unused_imports)]

pub use qskein::diagrams::*;
