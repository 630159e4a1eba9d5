//! Nearly perfect binary 1-covering codes (NP1CCs): construction,
//! verification, classification into Types A/B/C, weight and distance
//! spectra, balanced codes from self-dual sequences, and extended codes.
//!
//! Lengths are capped at 32 (one `u32` per codeword); anything that scans
//! the whole space F₂ⁿ is capped at n = 16.

pub mod balanced;
pub mod bounds;
pub mod census;
pub mod code;
pub mod construct;
pub mod error;
pub mod extend;
pub mod np1cc;
pub mod perfect;
pub mod spectra;
pub mod word;

pub use code::{translate, Code};
pub use error::{Error, Result};
pub use word::{ball, distance, sphere, weight, Word};
