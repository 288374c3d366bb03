//! Lacunary harmonic sums, double harmonic sums, and lacunary binomial
//! sums — the left-hand sides of everything this crate verifies.
//!
//! A *class* is the set of indices `k ≡ r (mod m)` inside `1..=n` (or
//! `0..=n` for binomial sums), with `m >= 2`; [`ClassSpec`] bundles
//! `(r, m, n)`. Unrestricted prefix sums (plain harmonic numbers,
//! alternating sums, `2^k/k` sums and the like) go through [`sum_terms`],
//! which also accepts an optional class filter.
//!
//! * [`harmonic_lacunary`] — `Σ 1/k` (or `Σ (-1)^k/k`) over a class,
//!   modulo `p^e`.
//! * [`harmonic_double`] — `Σ_{j<k} 1/(jk)` with the outer index in a class.
//! * [`harmonic_lacunary_geometric`] / [`harmonic_double_geometric`] — the
//!   same shapes with a geometric weight `a^k` on the outer index, for an
//!   arbitrary residue `a` (used with non-integer bases such as `a^{-1}`).
//! * [`sum_terms`] — generic `Σ term(k)` for the [`SumKind`] term shapes.
//! * [`harmonic_exact`] — class sums as exact rationals, used to cross-check
//!   the modular evaluators against independent arithmetic.
//! * [`binomial_lacunary`] / [`binomial_lacunary_all`] — `Σ ±C(n,k)` over a
//!   class, as exact integers.
//! * [`delta`] — the boundary correction that appears whenever a class sum
//!   over `1..=p-1` is rewritten through a binomial row over `0..=p`: `+1`
//!   when the class contains `k = 0`, `-1` when it contains `k = p`.
//!
//! All modular evaluators require every denominator to be a unit (bounds
//! stay below `p`); inverses come from a batch table, so each call costs
//! `O(n)` multiplications and no gcds.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{inverses_upto, make_residue, modulus_value, Residue};

/// Cap on the bound accepted by [`harmonic_exact`]; exact rationals with
/// larger bounds have enormous denominators and are only needed for
/// cross-checking small cases.
pub const MAX_EXACT_HARMONIC_BOUND: u64 = 200;

/// Cap on the row length accepted by the binomial evaluators.
pub const MAX_BINOMIAL_BOUND: u64 = 20_000;

/// A residue class of summation indices: `k ≡ r (mod m)` with `k <= n`.
///
/// `r` may be any integer (it is reduced mod `m`), matching the way the
/// congruences freely use class labels like `p`, `2p - r`, or `-p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    /// Class label; only its residue mod `m` matters.
    pub r: i64,
    /// Class modulus, at least 2.
    pub m: u64,
    /// Inclusive upper bound of the summation index.
    pub n: u64,
}

impl ClassSpec {
    /// Builds a class, rejecting `m < 2`.
    pub fn new(r: i64, m: u64, n: u64) -> Result<ClassSpec> {
        if m < 2 {
            return Err(Error::BadClassModulus(m));
        }
        Ok(ClassSpec { r, m, n })
    }

    /// The canonical class label in `0..m`.
    pub fn reduced_r(&self) -> u64 {
        self.r.rem_euclid(self.m as i64) as u64
    }

    /// Smallest positive member of the class (`m` itself when `r ≡ 0`).
    fn first_positive(&self) -> u64 {
        let r0 = self.reduced_r();
        if r0 == 0 {
            self.m
        } else {
            r0
        }
    }
}

/// The term shape summed by [`sum_terms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumKind {
    /// `1/k`.
    Reciprocal,
    /// `(-1)^k / k`.
    Alternating,
    /// `a^k / k` for an integer parameter `a`.
    Geometric {
        /// The geometric base (reduced mod `p^e`; may be negative).
        a: i64,
    },
    /// `(-1)^k / (2k - 1)`.
    OddDenomAlternating,
    /// `2^k / k`.
    PowerOverK,
}

/// Boundary correction for class sums rewritten through binomial rows over
/// `0..=p`: `+1` if the class of `r` contains `0`, else `-1` if it contains
/// `p`, else `0`. The `r ≡ 0` case takes precedence.
pub fn delta(r: i64, m: u64, p: u64) -> i32 {
    let r0 = r.rem_euclid(m as i64) as u64;
    if r0 == 0 {
        1
    } else if r0 == p % m {
        -1
    } else {
        0
    }
}

fn harmonic_core(
    spec: &ClassSpec,
    p: u64,
    e: u32,
    signed: bool,
    base: Option<&BigUint>,
) -> Result<Residue> {
    make_residue(0, p, e)?; // validate (p, e) once
    let m_big = modulus_value(p, e);
    let inv = inverses_upto(spec.n, &m_big, p)?;
    let r0 = spec.reduced_r();
    let mut acc = BigUint::zero();
    match base {
        None => {
            let mut k = spec.first_positive();
            while k <= spec.n {
                let term = &inv[k as usize];
                if signed && k % 2 == 1 {
                    acc = sub_mod(&acc, term, &m_big);
                } else {
                    acc = (acc + term) % &m_big;
                }
                k += spec.m;
            }
        }
        Some(a) => {
            let mut pow = BigUint::one();
            for k in 1..=spec.n {
                pow = pow * a % &m_big;
                if k % spec.m == r0 {
                    acc = (acc + &pow * &inv[k as usize]) % &m_big;
                }
            }
        }
    }
    make_residue(BigInt::from(acc), p, e)
}

/// `Σ 1/k` (or, with `signed`, `Σ (-1)^k/k`) over the class, modulo `p^e`.
///
/// # Errors
///
/// [`Error::NonUnitDenominator`] if `spec.n >= p`; modulus validation errors
/// as in [`make_residue`].
///
/// # Examples
///
/// ```
/// # use lacunary::sums::{harmonic_lacunary, ClassSpec};
/// let h = harmonic_lacunary(&ClassSpec::new(5, 3, 4).unwrap(), 5, 2, false).unwrap();
/// assert_eq!(h.to_string(), "13");
/// ```
pub fn harmonic_lacunary(spec: &ClassSpec, p: u64, e: u32, signed: bool) -> Result<Residue> {
    harmonic_core(spec, p, e, signed, None)
}

/// `Σ a^k/k` over the class, where `a` is the given residue; evaluated at
/// the modulus of `base`.
///
/// # Errors
///
/// As [`harmonic_lacunary`].
pub fn harmonic_lacunary_geometric(spec: &ClassSpec, base: &Residue) -> Result<Residue> {
    harmonic_core(spec, base.p(), base.e(), false, Some(base.lift()))
}

fn double_core(spec: &ClassSpec, p: u64, e: u32, base: Option<&BigUint>) -> Result<Residue> {
    make_residue(0, p, e)?;
    let m_big = modulus_value(p, e);
    let inv = inverses_upto(spec.n, &m_big, p)?;
    let r0 = spec.reduced_r();
    let mut prefix = BigUint::zero(); // running Σ_{j<k} 1/j
    let mut pow = BigUint::one();
    let mut acc = BigUint::zero();
    for k in 1..=spec.n {
        if let Some(a) = base {
            pow = pow * a % &m_big;
        }
        if k >= 2 && k % spec.m == r0 {
            let mut term = &inv[k as usize] * &prefix % &m_big;
            if base.is_some() {
                term = term * &pow % &m_big;
            }
            acc = (acc + term) % &m_big;
        }
        prefix = (prefix + &inv[k as usize]) % &m_big;
    }
    make_residue(BigInt::from(acc), p, e)
}

/// `Σ_{1<=j<k<=n, k ≡ r (mod m)} 1/(jk)`, modulo `p^e`; only the outer
/// index is class-restricted.
///
/// # Errors
///
/// As [`harmonic_lacunary`].
///
/// # Examples
///
/// ```
/// # use lacunary::sums::{harmonic_double, ClassSpec};
/// let s = harmonic_double(&ClassSpec::new(0, 2, 4).unwrap(), 5, 1).unwrap();
/// assert_eq!(s.to_string(), "2");
/// ```
pub fn harmonic_double(spec: &ClassSpec, p: u64, e: u32) -> Result<Residue> {
    double_core(spec, p, e, None)
}

/// `Σ_{1<=j<k<=n, k ≡ r (mod m)} a^k/(jk)` at the modulus of `base`.
///
/// # Errors
///
/// As [`harmonic_lacunary`].
pub fn harmonic_double_geometric(spec: &ClassSpec, base: &Residue) -> Result<Residue> {
    double_core(spec, base.p(), base.e(), Some(base.lift()))
}

/// `Σ_{k=1}^{bound} term(k)` in `Z/p^e`, for the [`SumKind`] term shapes,
/// optionally restricted to `k ≡ r (mod m)` by `class_filter` (whose bound
/// field `n` is ignored — only `(r, m)` matter).
///
/// # Errors
///
/// [`Error::NonUnitDenominator`] if any denominator reaches a multiple of
/// `p` (i.e. `bound >= p`, or `2*bound - 1 >= p` for the odd-denominator
/// kind); modulus validation errors as in [`make_residue`].
///
/// # Examples
///
/// ```
/// # use lacunary::sums::{sum_terms, ClassSpec, SumKind};
/// // 1 + 1/2 ≡ 14 (mod 25).
/// let s = sum_terms(SumKind::Reciprocal, 2, None, 5, 2).unwrap();
/// assert_eq!(s.to_string(), "14");
/// // With a class filter, geometric base 1 is just the lacunary sum.
/// let filter = ClassSpec::new(2, 3, 0).unwrap();
/// let s = sum_terms(SumKind::Geometric { a: 1 }, 4, Some(&filter), 5, 2).unwrap();
/// assert_eq!(s.to_string(), "13");
/// ```
pub fn sum_terms(
    kind: SumKind,
    bound: u64,
    class_filter: Option<&ClassSpec>,
    p: u64,
    e: u32,
) -> Result<Residue> {
    make_residue(0, p, e)?;
    let m_big = modulus_value(p, e);
    let max_denom = match kind {
        SumKind::OddDenomAlternating => bound.saturating_mul(2).saturating_sub(1),
        _ => bound,
    };
    let inv = inverses_upto(max_denom, &m_big, p)?;
    let base = match kind {
        SumKind::Geometric { a } => Some(make_residue(a, p, e)?.lift().clone()),
        SumKind::PowerOverK => Some(BigUint::from(2u32)),
        _ => None,
    };
    let mut pow = BigUint::one();
    let mut acc = BigUint::zero();
    for k in 1..=bound {
        if let Some(b) = &base {
            pow = &pow * b % &m_big;
        }
        if let Some(f) = class_filter {
            if k % f.m != f.reduced_r() {
                continue;
            }
        }
        let (denom, negate) = match kind {
            SumKind::Reciprocal => (k, false),
            SumKind::Alternating => (k, k % 2 == 1),
            SumKind::Geometric { .. } | SumKind::PowerOverK => (k, false),
            SumKind::OddDenomAlternating => (2 * k - 1, k % 2 == 1),
        };
        let mut term = inv[denom as usize].clone();
        if base.is_some() {
            term = term * &pow % &m_big;
        }
        if negate {
            acc = sub_mod(&acc, &term, &m_big);
        } else {
            acc = (acc + term) % &m_big;
        }
    }
    make_residue(BigInt::from(acc), p, e)
}

/// The class harmonic sum as an exact rational (in lowest terms), signed or
/// unsigned to mirror [`harmonic_lacunary`].
///
/// # Errors
///
/// [`Error::CapExceeded`] if `spec.n` exceeds [`MAX_EXACT_HARMONIC_BOUND`].
///
/// # Examples
///
/// ```
/// # use lacunary::sums::{harmonic_exact, ClassSpec};
/// let h = harmonic_exact(&ClassSpec::new(1, 3, 4).unwrap(), false).unwrap();
/// assert_eq!(h.to_string(), "5/4");
/// ```
pub fn harmonic_exact(spec: &ClassSpec, signed: bool) -> Result<BigRational> {
    if spec.n > MAX_EXACT_HARMONIC_BOUND {
        return Err(Error::CapExceeded(spec.n, MAX_EXACT_HARMONIC_BOUND));
    }
    let mut acc = BigRational::zero();
    let mut k = spec.first_positive();
    while k <= spec.n {
        let mut term = BigRational::new(BigInt::one(), BigInt::from(k));
        if signed && k % 2 == 1 {
            term = -term;
        }
        acc += term;
        k += spec.m;
    }
    Ok(acc)
}

/// Reduces an exact rational into `Z/p^e`.
///
/// # Errors
///
/// [`Error::NonUnit`] if the (reduced) denominator is divisible by `p`;
/// modulus validation errors as in [`make_residue`].
///
/// # Examples
///
/// ```
/// # use lacunary::sums::rational_mod;
/// # use num_rational::BigRational;
/// # use num_bigint::BigInt;
/// let q = BigRational::new(BigInt::from(23), BigInt::from(15));
/// assert_eq!(rational_mod(&q, 7, 2).unwrap().to_string(), "44");
/// ```
pub fn rational_mod(q: &BigRational, p: u64, e: u32) -> Result<Residue> {
    let denom = make_residue(q.denom().clone(), p, e)?;
    let numer = make_residue(q.numer().clone(), p, e)?;
    Ok(&numer * &denom.inv()?)
}

fn binomial_core(m: u64, n: u64, signed: bool, wanted: Option<u64>) -> Result<Vec<BigInt>> {
    if m < 2 {
        return Err(Error::BadClassModulus(m));
    }
    if n > MAX_BINOMIAL_BOUND {
        return Err(Error::CapExceeded(n, MAX_BINOMIAL_BOUND));
    }
    let buckets = if wanted.is_some() { 1 } else { m as usize };
    let mut acc = vec![BigInt::zero(); buckets];
    let mut c = BigInt::one(); // C(n, 0)
    for k in 0..=n {
        if k > 0 {
            // C(n,k) = C(n,k-1) * (n-k+1) / k, exactly.
            c = c * (n + 1 - k) / k;
        }
        let r = k % m;
        let slot = match wanted {
            Some(w) => {
                if r == w {
                    Some(0)
                } else {
                    None
                }
            }
            None => Some(r as usize),
        };
        if let Some(slot) = slot {
            if signed && k % 2 == 1 {
                acc[slot] -= &c;
            } else {
                acc[slot] += &c;
            }
        }
    }
    Ok(acc)
}

/// `Σ C(n,k)` (or, with `signed`, `Σ (-1)^k C(n,k)`) over `k ≡ r (mod m)`,
/// `0 <= k <= n`, as an exact integer.
///
/// # Errors
///
/// [`Error::CapExceeded`] if `spec.n` exceeds [`MAX_BINOMIAL_BOUND`].
///
/// # Examples
///
/// ```
/// # use lacunary::sums::{binomial_lacunary, ClassSpec};
/// let t = binomial_lacunary(&ClassSpec::new(2, 10, 5).unwrap(), false).unwrap();
/// assert_eq!(t.to_string(), "10");
/// let t = binomial_lacunary(&ClassSpec::new(1, 3, 5).unwrap(), true).unwrap();
/// assert_eq!(t.to_string(), "0");
/// ```
pub fn binomial_lacunary(spec: &ClassSpec, signed: bool) -> Result<BigInt> {
    let mut v = binomial_core(spec.m, spec.n, signed, Some(spec.reduced_r()))?;
    Ok(v.pop().expect("single bucket requested"))
}

/// All `m` class sums of `±C(n,k)` in one row pass; index `r` of the result
/// holds the class `k ≡ r (mod m)`.
///
/// # Errors
///
/// As [`binomial_lacunary`].
pub fn binomial_lacunary_all(m: u64, n: u64, signed: bool) -> Result<Vec<BigInt>> {
    binomial_core(m, n, signed, None)
}

fn sub_mod(a: &BigUint, b: &BigUint, m: &BigUint) -> BigUint {
    let b = b % m;
    if *a >= b {
        a - b
    } else {
        a + (m - b)
    }
}
