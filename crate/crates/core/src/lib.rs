//! De Bruijn sequences over primitive words, near-minimal words containing
//! every square of a given length, and exact brute-force oracles that verify
//! both constructions at desk scale.
//!
//! The crate is organized around small, pure building blocks:
//!
//! * [`words`] — alphabet/word machinery: primitivity, rotations, conjugacy
//!   classes, and the counting formulas.
//! * [`debruijn`] — the classic prefer-largest greedy De Bruijn generator
//!   over full `Σ_k^m`, plus circular factor checking against arbitrary
//!   dictionaries.
//! * [`primitive_db`] — greedy generation of a De Bruijn sequence over the
//!   primitive words of `Σ_k^n`, with a full accept/reject trace.
//! * [`squares`] — construction of a word containing every square of length
//!   `2n`, with the matching lower bound.
//! * [`oracle`] — independent coverage verification and exhaustive shortest
//!   cover search at tiny sizes.
//! * [`cli`] — the command-line surface used by the `dbwords` binary.
//!
//! All functions are pure: given the same inputs they return the same
//! outputs, and nothing is cached or shared, so values can be used freely
//! across threads.

pub mod cli;
pub mod debruijn;
pub mod error;
pub mod oracle;
pub mod primitive_db;
pub mod squares;
pub mod words;

pub use error::{Error, Result};
pub use words::{AlphabetParams, ConjugacyClass, Symbol, Word};
