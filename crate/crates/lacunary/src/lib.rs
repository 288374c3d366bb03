//! Exact verification of lacunary harmonic-sum congruences.
//!
//! This crate computes, in exact arithmetic, the class-restricted (lacunary)
//! harmonic sums
//!
//! ```text
//! H_{r,m}(n) = Σ_{1 <= k <= n, k ≡ r (mod m)} 1/k
//! ```
//!
//! together with their double-sum refinements, the signed and unsigned
//! binomial class sums `T*_{r,m}(n)` and `T_{r,m}(n)`, and the Fibonacci,
//! Lucas, Pell and Pell-Lucas sequences — and then verifies a battery of
//! congruences modulo `p` and `p^2` (and a few modulo `p^3`) relating them,
//! over ranges of odd primes.
//!
//! Modules:
//!
//! * [`padic`] — truncated arithmetic in `Z/p^e`, exact division by powers
//!   of `p`, batch inversion, Legendre symbols, prime sieving.
//! * [`sequences`] — Fibonacci/Lucas/Pell/Pell-Lucas, exact and modular.
//! * [`sums`] — lacunary harmonic, double, geometric-weighted and binomial
//!   class sums; exact rational reference values.
//! * [`closed_forms`] — exact closed forms for step 10, 8, 3 and 2 binomial
//!   class sums and diagonal values.
//! * [`checks`] — the registry of verifiable statements and the parallel,
//!   deterministic suite runner.
//! * [`error`] — the error type shared by all of the above.
//!
//! Every congruence is checked by computing both sides along structurally
//! independent paths: the summation side directly in `Z/p^e`, and the
//! closed side through quotient extraction from higher-precision values.
//! Divisibility claims are part of what is verified — a numerator that `p`
//! fails to divide surfaces as a `divisibility-failure` result, never a
//! panic.
//!
//! # Example
//!
//! ```
//! use lacunary::checks::{run_check, CheckParams, Status};
//!
//! // Class harmonic sum H_{5,3}(4) against its Fermat-quotient form at p = 5.
//! let rows = run_check("lehmer3", Some(5), &CheckParams::default()).unwrap();
//! assert_eq!(rows[0].status, Status::Pass);
//! assert_eq!(rows[0].lhs.as_deref(), Some("13"));
//! assert_eq!(rows[0].modulus, "25");
//! ```

pub mod checks;
pub mod closed_forms;
pub mod error;
pub mod padic;
pub mod sequences;
pub mod sums;

pub use error::{Error, Result};
