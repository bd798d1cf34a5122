//! Finite-dimensional truncations of the canonical commutation relations
//! `[a, a⁺] = 1` in an indefinite-metric (Krein) space, together with the
//! machinery to verify their defining algebra numerically and against an
//! exact rational oracle.
//!
//! Three representation classes are supported, distinguished by the spectrum
//! of the number operator `N = a⁺a`:
//!
//! * Fock — `Sp N = {0, 1, 2, …}`, positive metric;
//! * anti-Fock — `Sp N = {−1, −2, …}`, alternating signature;
//! * λ-case — `Sp N = λ0 + ℤ` with `−1 < λ0 < 0`, signature alternating
//!   below `λ0` and positive above.
//!
//! The crate is organised around small pure modules:
//!
//! * [`krein`] — signature sequences, the fundamental symmetry `J`,
//!   indefinite/positive inner products, Krein adjoints;
//! * [`oracle`] — arbitrary-precision rational ground truth for
//!   `⟨ψ_λ, ψ_λ⟩`, signatures and ladder coefficients;
//! * [`rep`] — dense truncated ladder matrices and their algebraic checks;
//! * [`weyl`] — `p̂`, `q̂`, the exponentials `U(t) = e^{itp̂}`,
//!   `V(s) = e^{isq̂}` and Weyl-relation residuals;
//! * [`naimark`] — the lower-bound / cross-term / resolvent-power checks
//!   behind the Naimark-theorem hypotheses;
//! * [`analytic`] — truncation-free sparse ladder action on finitely
//!   supported coefficient vectors and analytic-vector series bounds.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to use from multiple threads.

pub mod analytic;
pub mod error;
pub mod krein;
pub mod naimark;
pub mod oracle;
pub mod rep;
pub mod weyl;

pub use error::{Error, Result};
pub use krein::{ComplexMatrix, ComplexVector, KreinStructure, Sign};
pub use oracle::ExactScalar;
pub use rep::{Level, RepKind, Representation};
