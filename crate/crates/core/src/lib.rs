//! Exact arithmetic for single-deletion-correcting codes built from the
//! major index (descent moment) of binary words.
//!
//! The crate is organised bottom-up:
//!
//! - [`numtheory`]: divisors, gcd, Möbius and Euler totient.
//! - [`qpoly`]: integer polynomials in `q`, q-integers, q-factorials,
//!   Gaussian binomials, residues modulo `q^n - 1` and root-of-unity
//!   evaluation, plus a lattice-path weight oracle.
//! - [`words`]: binary words over `A < B`, descent vectors, runs, deletion
//!   spheres, enumeration of `C(α, β)` / `C(α, β, m)` and brute-force
//!   generating-polynomial oracles.
//! - [`codes`]: VT codes, the `C(α, β, m)` code family, closed-form
//!   cardinalities and run polynomials, and a single-deletion decoder.
//! - [`verify`]: sweeps that check every closed form against enumeration
//!   and emit [`verify::VerificationReport`]s.
//!
//! Heavy enumerations run on rayon when the `parallel` feature is enabled
//! (the default); see [`Exec`].
//!
//! ```
//! use descent_codes::{codes::CodeSpec, qpoly::q_binomial, words::Word};
//!
//! assert_eq!(q_binomial(4, 2).to_string(), "1 + q + 2q^2 + q^3 + q^4");
//!
//! let spec = CodeSpec::new(2, 2, 1).unwrap();
//! let received: Word = "AAB".parse().unwrap();
//! let decoded = descent_codes::codes::decode_single_deletion(&received, &spec).unwrap();
//! assert_eq!(decoded.unwrap().to_string(), "BAAB");
//! ```

pub mod codes;
mod error;
pub mod numtheory;
mod par;
pub mod qpoly;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use par::Exec;
