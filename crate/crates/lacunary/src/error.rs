//! Error type shared by every module of the crate.
//!
//! Two families of errors matter here:
//!
//! * *usage errors* (bad modulus, exponent out of range, cap exceeded) —
//!   ordinary precondition violations;
//! * *divisibility failures* ([`Error::NotDivisible`],
//!   [`Error::IndivisibleClosedForm`]) — these are mathematically meaningful
//!   outcomes: a congruence whose right-hand side is a quotient by `p^t`
//!   implicitly claims that the numerator is divisible by `p^t`, so a failed
//!   division falsifies the claim. They are surfaced as recoverable values
//!   (and turned into `divisibility-failure` check results by the suite
//!   runner), never panics.

/// Crate-wide error enumeration.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The modulus base is not an odd prime greater than 2.
    #[error("{0} is not an odd prime > 2")]
    NotOddPrime(u64),
    /// The exponent of the prime-power modulus lies outside `1..=6`.
    #[error("exponent {0} outside supported range 1..=6")]
    ExponentRange(u32),
    /// Arithmetic attempted between residues with different moduli.
    #[error("mismatched moduli {0}^{1} vs {2}^{3}")]
    MismatchedModulus(u64, u32, u64, u32),
    /// Inversion of a residue divisible by `p`.
    #[error("non-unit: value divisible by {0}")]
    NonUnit(u64),
    /// An exact division by `p^t` hit a numerator that `p^t` does not divide.
    #[error("not divisible: {p}^{t} does not divide {value}")]
    NotDivisible {
        /// Decimal rendering of the offending numerator (already reduced).
        value: String,
        /// The prime.
        p: u64,
        /// The required power.
        t: u32,
    },
    /// A quotient's unit divisor shares a factor with `p`.
    #[error("unit divisor {0} shares a factor with prime {1}")]
    UnitSharesFactor(u64, u64),
    /// A harmonic-style sum would hit a denominator divisible by `p`.
    #[error("non-unit denominator: bound {0} reaches a multiple of prime {1}")]
    NonUnitDenominator(u64, u64),
    /// A size cap was exceeded (sequence index, summation bound, sieve limit).
    #[error("argument {0} exceeds the cap {1}")]
    CapExceeded(u64, u64),
    /// An index violates a structural requirement (parity, minimum value).
    #[error("invalid index {0}: {1}")]
    BadIndex(u64, &'static str),
    /// A class-modulus below 2.
    #[error("class modulus {0} must be at least 2")]
    BadClassModulus(u64),
    /// A closed-form value failed its claimed integer divisibility.
    #[error("closed-form value {0} is not divisible by {1}")]
    IndivisibleClosedForm(String, u64),
    /// A closed-form class index outside its enumeration.
    #[error("class index {0} outside 0..={1}")]
    BadClassIndex(u8, u8),
    /// An empty prime range (`lo > hi`).
    #[error("empty range: lo {0} exceeds hi {1}")]
    EmptyRange(u64, u64),
    /// A check id not present in the registry.
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    /// A sequence-kind name that does not parse.
    #[error("unknown sequence kind `{0}` (expected fibonacci, lucas, pell, or pell-lucas)")]
    UnknownSequence(String),
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
