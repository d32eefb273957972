//! Exact skein-theoretic calculator for colored Jones polynomials of
//! 2-bridge links.
//!
//! The crate has two independent halves that check each other:
//!
//! - closed-form coefficient formulas ([`twist_formulas`], [`jones_2bridge`])
//!   built on exact Laurent arithmetic ([`laurent`]) and q-combinatorics
//!   ([`qcombinatorics`]);
//! - brute-force diagram-evaluation oracles: a Temperley–Lieb engine for the
//!   Kauffman bracket ([`a1_skein`]) and a trivalent-web engine for the
//!   Kuperberg sl3 bracket ([`a2_skein`]).
//!
//! Everything is computed over Laurent polynomials in `t` with `t^12 = q`,
//! so all fractional powers of `q` used by either theory are exact.

pub mod laurent;
pub mod qcombinatorics;

pub mod a1_skein;
pub mod a2_skein;
pub mod diagrams;
pub mod jones_2bridge;
pub mod twist_formulas;
