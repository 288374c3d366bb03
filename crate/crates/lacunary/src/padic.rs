//! Truncated p-adic arithmetic in `Z/p^e`, plus the small amount of prime
//! machinery the rest of the crate needs.
//!
//! * [`Residue`] — an element of `Z/p^e` for an odd prime `p` and exponent
//!   `1 <= e <= 6`, stored as its canonical representative in `[0, p^e)`.
//! * [`make_residue`] / [`inv_unit`] / [`pow_residue`] — construction,
//!   inversion of units, square-and-multiply powering.
//! * [`exact_div_by_p`] / [`padic_quotient`] — exact division by `p^t`,
//!   lowering the exponent; the building block for every expression of the
//!   shape `(X + c) / (u * p^t)`. A numerator that `p^t` does not divide is
//!   reported as a recoverable [`Error::NotDivisible`], because such a
//!   failure falsifies a divisibility claim rather than indicating a bug.
//! * [`legendre`] — the Legendre symbol via Euler's criterion.
//! * [`PrimeRange`] / [`primes_in_range`] — sieve-backed prime enumeration.
//!
//! All functions are pure and all values immutable, so everything here can be
//! shared freely between threads.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest supported exponent for a prime-power modulus.
///
/// Raw quantities never need more than `p^3`, and a quotient by `p^t` costs a
/// further `t` digits of working precision (`t <= 2` in practice); 6 leaves
/// headroom while keeping representatives small.
pub const MAX_EXPONENT: u32 = 6;

/// Upper bound accepted by [`primes_in_range`] (plain sieve of Eratosthenes).
pub const MAX_SIEVE_LIMIT: u64 = 100_000_000;

/// An element of `Z/p^e`: an odd prime `p > 2`, an exponent `1 <= e <= 6`,
/// and the canonical representative in `[0, p^e)`.
///
/// Arithmetic (`+`, `-`, `*`, unary `-`) is defined between residues with
/// identical `(p, e)` only; mixing moduli is a programming error and panics
/// rather than coercing silently.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    p: u64,
    e: u32,
    value: BigUint,
}

impl Residue {
    /// The prime base of the modulus.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The exponent of the modulus.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// The modulus `p^e`.
    pub fn modulus(&self) -> BigUint {
        modulus_value(self.p, self.e)
    }

    /// The canonical representative in `[0, p^e)`.
    pub fn lift(&self) -> &BigUint {
        &self.value
    }

    /// True iff the representative is zero.
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// True iff the value is a unit, i.e. not divisible by `p`.
    pub fn is_unit(&self) -> bool {
        !(&self.value % self.p).is_zero()
    }

    /// Multiplicative inverse; see [`inv_unit`].
    pub fn inv(&self) -> Result<Residue> {
        inv_unit(self)
    }

    /// `self` raised to `exp`; see [`pow_residue`].
    pub fn pow(&self, exp: u64) -> Residue {
        pow_residue(self, exp)
    }

    fn assert_compatible(&self, other: &Residue) {
        if self.p != other.p || self.e != other.e {
            panic!(
                "{}",
                Error::MismatchedModulus(self.p, self.e, other.p, other.e)
            );
        }
    }

    fn wrap(&self, value: BigUint) -> Residue {
        Residue {
            p: self.p,
            e: self.e,
            value,
        }
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl std::fmt::Debug for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod {}^{})", self.value, self.p, self.e)
    }
}

impl std::ops::Add for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        self.assert_compatible(rhs);
        let mut v = &self.value + &rhs.value;
        let m = self.modulus();
        if v >= m {
            v -= m;
        }
        self.wrap(v)
    }
}

impl std::ops::Sub for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        self.assert_compatible(rhs);
        let v = if self.value >= rhs.value {
            &self.value - &rhs.value
        } else {
            self.modulus() - &rhs.value + &self.value
        };
        self.wrap(v)
    }
}

impl std::ops::Mul for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        self.assert_compatible(rhs);
        self.wrap(&self.value * &rhs.value % self.modulus())
    }
}

impl std::ops::Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        if self.value.is_zero() {
            self.clone()
        } else {
            self.wrap(self.modulus() - &self.value)
        }
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl std::ops::$trait for Residue {
            type Output = Residue;
            fn $method(self, rhs: Residue) -> Residue {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Residue> for Residue {
            type Output = Residue;
            fn $method(self, rhs: &Residue) -> Residue {
                std::ops::$trait::$method(&self, rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl std::ops::Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        -&self
    }
}

/// An inclusive range of candidate primes with an optional exclusion set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeRange {
    /// Lower bound (inclusive).
    pub lo: u64,
    /// Upper bound (inclusive); `lo <= hi` always holds.
    pub hi: u64,
    /// Primes to skip even though they fall inside `[lo, hi]`.
    pub excluded: Vec<u64>,
}

impl PrimeRange {
    /// Builds a range, rejecting `lo > hi`.
    pub fn new(lo: u64, hi: u64) -> Result<PrimeRange> {
        if lo > hi {
            return Err(Error::EmptyRange(lo, hi));
        }
        Ok(PrimeRange {
            lo,
            hi,
            excluded: Vec::new(),
        })
    }

    /// Same range with an exclusion set.
    pub fn with_excluded(mut self, excluded: impl IntoIterator<Item = u64>) -> PrimeRange {
        self.excluded = excluded.into_iter().collect();
        self
    }
}

/// `p^e` as a big integer.
pub(crate) fn modulus_value(p: u64, e: u32) -> BigUint {
    if let Some(m) = (p as u128).checked_pow(e) {
        BigUint::from(m)
    } else {
        BigUint::from(p).pow(e)
    }
}

/// Deterministic Miller–Rabin primality test for `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    // This witness set decides primality for every n < 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn validate_modulus(p: u64, e: u32) -> Result<()> {
    if p <= 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if e == 0 || e > MAX_EXPONENT {
        return Err(Error::ExponentRange(e));
    }
    Ok(())
}

/// Builds the residue of `v` in `Z/p^e`, wrapping negative inputs.
///
/// # Errors
///
/// [`Error::NotOddPrime`] unless `p` is an odd prime greater than 2;
/// [`Error::ExponentRange`] unless `1 <= e <= 6`.
///
/// # Examples
///
/// ```
/// # use lacunary::padic::make_residue;
/// assert_eq!(make_residue(-7, 5, 2).unwrap().to_string(), "18");
/// assert_eq!(make_residue(25, 5, 2).unwrap().to_string(), "0");
/// ```
pub fn make_residue(v: impl Into<BigInt>, p: u64, e: u32) -> Result<Residue> {
    validate_modulus(p, e)?;
    let m = modulus_value(p, e);
    let value = reduce_signed(&v.into(), &m);
    Ok(Residue { p, e, value })
}

/// Reduces a signed big integer into `[0, m)`.
pub(crate) fn reduce_signed(v: &BigInt, m: &BigUint) -> BigUint {
    let m_signed = BigInt::from_biguint(Sign::Plus, m.clone());
    let r = v.mod_floor(&m_signed);
    r.to_biguint().expect("mod_floor of positive modulus is non-negative")
}

/// Modular inverse of `value` (assumed reduced) modulo `m`, where `p` is the
/// prime base of `m`; used by both [`inv_unit`] and the sum evaluators.
pub(crate) fn inv_mod(value: &BigUint, m: &BigUint, p: u64) -> Result<BigUint> {
    if (value % p).is_zero() {
        return Err(Error::NonUnit(p));
    }
    let a = BigInt::from_biguint(Sign::Plus, value.clone());
    let md = BigInt::from_biguint(Sign::Plus, m.clone());
    let ext = a.extended_gcd(&md);
    debug_assert!(ext.gcd.is_one(), "unit check above guarantees gcd 1");
    Ok(reduce_signed(&ext.x, m))
}

/// Inverses of `1..=n` modulo `m = p^e`, index `k` holding the inverse of
/// `k` (index 0 unused). Requires `n < p` so every entry is a unit.
///
/// Uses the recurrence `inv(k) = -(m / k) * inv(m mod k)`, which stays valid
/// for prime-power moduli because `m mod k` is nonzero and below `p`; the
/// whole table costs `O(n)` multiplications and no gcd.
pub(crate) fn inverses_upto(n: u64, m: &BigUint, p: u64) -> Result<Vec<BigUint>> {
    if n >= p {
        return Err(Error::NonUnitDenominator(n, p));
    }
    let mut inv = Vec::with_capacity(n as usize + 1);
    inv.push(BigUint::zero());
    if n >= 1 {
        inv.push(BigUint::from(1u32));
    }
    for k in 2..=n {
        let quot = m / k;
        let rem = (m % k)
            .to_u64_digits()
            .first()
            .copied()
            .unwrap_or(0);
        let product = quot * &inv[rem as usize] % m;
        inv.push(if product.is_zero() {
            product
        } else {
            m - product
        });
    }
    Ok(inv)
}

/// Multiplicative inverse of a unit in `Z/p^e`.
///
/// # Errors
///
/// [`Error::NonUnit`] if `x` is divisible by `p`.
///
/// # Examples
///
/// ```
/// # use lacunary::padic::{inv_unit, make_residue};
/// let x = make_residue(3, 11, 2).unwrap();
/// assert_eq!(inv_unit(&x).unwrap().to_string(), "81");
/// ```
pub fn inv_unit(x: &Residue) -> Result<Residue> {
    let m = x.modulus();
    Ok(x.wrap(inv_mod(&x.value, &m, x.p)?))
}

/// `base^exp` by square-and-multiply; `exp == 0` yields 1.
pub fn pow_residue(base: &Residue, exp: u64) -> Residue {
    let m = base.modulus();
    base.wrap(base.value.modpow(&BigUint::from(exp), &m))
}

/// Divides by `p^t` exactly, lowering the exponent from `e` to `e - t`.
///
/// # Errors
///
/// [`Error::NotDivisible`] if `p^t` does not divide the representative — a
/// recoverable outcome, since it contradicts the divisibility claim implicit
/// in the quotient being evaluated. [`Error::ExponentRange`] unless
/// `1 <= t < e`.
///
/// # Examples
///
/// ```
/// # use lacunary::padic::{exact_div_by_p, make_residue};
/// let x = make_residue(10, 5, 3).unwrap();
/// let q = exact_div_by_p(&x, 1).unwrap();
/// assert_eq!((q.to_string(), q.e()), ("2".to_string(), 2));
/// assert!(exact_div_by_p(&make_residue(11, 5, 3).unwrap(), 1).is_err());
/// ```
pub fn exact_div_by_p(x: &Residue, t: u32) -> Result<Residue> {
    if t == 0 || t >= x.e {
        return Err(Error::ExponentRange(t));
    }
    let pt = modulus_value(x.p, t);
    let (q, r) = x.value.div_rem(&pt);
    if !r.is_zero() {
        return Err(Error::NotDivisible {
            value: x.value.to_string(),
            p: x.p,
            t,
        });
    }
    Ok(Residue {
        p: x.p,
        e: x.e - t,
        value: q,
    })
}

/// Evaluates `(numer / p^t) * unit_divisor^{-1}` in `Z/p^e`.
///
/// The numerator is reduced modulo `p^(e+t)` before the exact division, so
/// callers may pass either the full exact value or any representative of it
/// at that precision.
///
/// # Errors
///
/// [`Error::NotDivisible`] if `p^t` does not divide `numer`;
/// [`Error::UnitSharesFactor`] if `p | unit_divisor`; modulus validation
/// errors as in [`make_residue`] (with `e + t <= 6`).
///
/// # Examples
///
/// ```
/// # use lacunary::padic::padic_quotient;
/// # use num_bigint::BigInt;
/// // (2^9 - 2) / 5, divided by the unit 4, in Z/25.
/// let q = padic_quotient(&BigInt::from(510), 4, 5, 1, 2).unwrap();
/// assert_eq!(q.to_string(), "13");
/// ```
pub fn padic_quotient(numer: &BigInt, unit_divisor: u64, p: u64, t: u32, e: u32) -> Result<Residue> {
    validate_modulus(p, e)?;
    if e + t > MAX_EXPONENT {
        return Err(Error::ExponentRange(e + t));
    }
    if unit_divisor % p == 0 {
        return Err(Error::UnitSharesFactor(unit_divisor, p));
    }
    let wide = Residue {
        p,
        e: e + t,
        value: reduce_signed(numer, &modulus_value(p, e + t)),
    };
    let narrowed = if t == 0 {
        wide
    } else {
        exact_div_by_p(&wide, t)?
    };
    let unit = make_residue(BigInt::from(unit_divisor), p, e)?;
    Ok(&narrowed * &inv_unit(&unit)?)
}

/// Legendre symbol `(a/p)` for an odd prime `p`, via Euler's criterion.
///
/// # Errors
///
/// [`Error::NotOddPrime`] unless `p` is an odd prime.
///
/// # Examples
///
/// ```
/// # use lacunary::padic::legendre;
/// assert_eq!(legendre(5, 7).unwrap(), -1);
/// assert_eq!(legendre(10, 5).unwrap(), 0);
/// assert_eq!(legendre(2, 17).unwrap(), 1);
/// ```
pub fn legendre(a: i64, p: u64) -> Result<i32> {
    if p <= 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let m = BigUint::from(p);
    let a_red = reduce_signed(&BigInt::from(a), &m);
    if a_red.is_zero() {
        return Ok(0);
    }
    let euler = a_red.modpow(&BigUint::from((p - 1) / 2), &m);
    Ok(if euler.is_one() { 1 } else { -1 })
}

/// All primes in `[range.lo, range.hi]`, ascending, minus the exclusions.
///
/// # Errors
///
/// [`Error::CapExceeded`] if `range.hi` exceeds [`MAX_SIEVE_LIMIT`].
///
/// # Examples
///
/// ```
/// # use lacunary::padic::{primes_in_range, PrimeRange};
/// let r = PrimeRange::new(5, 20).unwrap();
/// assert_eq!(primes_in_range(&r).unwrap(), vec![5, 7, 11, 13, 17, 19]);
/// assert!(primes_in_range(&PrimeRange::new(24, 28).unwrap()).unwrap().is_empty());
/// ```
pub fn primes_in_range(range: &PrimeRange) -> Result<Vec<u64>> {
    if range.hi > MAX_SIEVE_LIMIT {
        return Err(Error::CapExceeded(range.hi, MAX_SIEVE_LIMIT));
    }
    let hi = range.hi as usize;
    let mut composite = vec![false; hi + 1];
    let mut primes = Vec::new();
    for n in 2..=hi {
        if !composite[n] {
            if (n as u64) >= range.lo && !range.excluded.contains(&(n as u64)) {
                primes.push(n as u64);
            }
            let mut multiple = n * n;
            while multiple <= hi {
                composite[multiple] = true;
                multiple += n;
            }
        }
    }
    Ok(primes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_residue_wraps_and_reduces() {
        assert_eq!(make_residue(-7, 5, 2).unwrap().to_string(), "18");
        assert_eq!(make_residue(25, 5, 2).unwrap().to_string(), "0");
        assert_eq!(
            make_residue(390_108_213_759i64, 11, 2).unwrap().to_string(),
            "55"
        );
    }

    #[test]
    fn make_residue_rejects_bad_moduli() {
        assert_eq!(make_residue(1, 4, 1), Err(Error::NotOddPrime(4)));
        assert_eq!(make_residue(1, 2, 1), Err(Error::NotOddPrime(2)));
        assert_eq!(make_residue(1, 5, 0), Err(Error::ExponentRange(0)));
        assert_eq!(make_residue(1, 5, 7), Err(Error::ExponentRange(7)));
    }

    #[test]
    fn inversion_matches_known_values() {
        let cases = [(3u64, 11u64, 2u32, "81"), (1, 7, 3, "1"), (4, 7, 2, "37")];
        for (v, p, e, expect) in cases {
            let x = make_residue(v as i64, p, e).unwrap();
            assert_eq!(inv_unit(&x).unwrap().to_string(), expect);
        }
        let zero_mod_p = make_residue(10, 5, 2).unwrap();
        assert_eq!(inv_unit(&zero_mod_p), Err(Error::NonUnit(5)));
    }

    #[test]
    fn powers_match_known_values() {
        let two = make_residue(2, 5, 2).unwrap();
        assert_eq!(pow_residue(&two, 5).to_string(), "7");
        assert_eq!(pow_residue(&two, 0).to_string(), "1");
        let five = make_residue(5, 7, 2).unwrap();
        assert_eq!(pow_residue(&five, 3).to_string(), "27");
    }

    #[test]
    fn exact_division_lowers_exponent() {
        let x = make_residue(10, 5, 3).unwrap();
        let q = exact_div_by_p(&x, 1).unwrap();
        assert_eq!((q.to_string().as_str(), q.e()), ("2", 2));
        let zero = make_residue(0, 5, 3).unwrap();
        assert_eq!(exact_div_by_p(&zero, 2).unwrap().to_string(), "0");
        assert!(matches!(
            exact_div_by_p(&make_residue(11, 5, 3).unwrap(), 1),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn quotients_match_known_values() {
        assert_eq!(
            padic_quotient(&BigInt::from(510), 4, 5, 1, 2).unwrap().to_string(),
            "13"
        );
        assert_eq!(
            padic_quotient(&BigInt::from(1624), 1, 7, 1, 2).unwrap().to_string(),
            "36"
        );
        assert_eq!(
            padic_quotient(&BigInt::from(0), 400, 7, 1, 2).unwrap().to_string(),
            "0"
        );
        assert_eq!(
            padic_quotient(&BigInt::from(5), 5, 5, 1, 1),
            Err(Error::UnitSharesFactor(5, 5))
        );
    }

    #[test]
    fn legendre_agrees_with_square_search() {
        for p in primes_in_range(&PrimeRange::new(3, 101).unwrap()).unwrap() {
            let squares: std::collections::HashSet<u64> =
                (1..p).map(|x| x * x % p).collect();
            for a in 0..p {
                let expect = if a == 0 {
                    0
                } else if squares.contains(&a) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a as i64, p).unwrap(), expect, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn batch_inverses_match_single_inversions() {
        for (p, e) in [(7u64, 2u32), (97, 3), (5, 1)] {
            let m = modulus_value(p, e);
            let table = inverses_upto(p - 1, &m, p).unwrap();
            for k in 1..p {
                assert_eq!(
                    table[k as usize],
                    inv_mod(&BigUint::from(k), &m, p).unwrap(),
                    "k={k} p={p} e={e}"
                );
            }
        }
        let m = modulus_value(5, 2);
        assert_eq!(
            inverses_upto(5, &m, 5),
            Err(Error::NonUnitDenominator(5, 5))
        );
    }

    #[test]
    fn prime_range_edges() {
        assert_eq!(
            primes_in_range(&PrimeRange::new(2, 2).unwrap()).unwrap(),
            vec![2]
        );
        let r = PrimeRange::new(2, 20).unwrap().with_excluded([3, 13]);
        assert_eq!(primes_in_range(&r).unwrap(), vec![2, 5, 7, 11, 17, 19]);
        assert_eq!(PrimeRange::new(10, 9), Err(Error::EmptyRange(10, 9)));
    }

    #[test]
    #[should_panic(expected = "mismatched moduli")]
    fn mixing_moduli_panics() {
        let a = make_residue(1, 5, 2).unwrap();
        let b = make_residue(1, 7, 2).unwrap();
        let _ = &a + &b;
    }

    #[test]
    fn subtraction_wraps() {
        let a = make_residue(3, 5, 2).unwrap();
        let b = make_residue(20, 5, 2).unwrap();
        assert_eq!((&a - &b).to_string(), "8");
        assert_eq!((-&b).to_string(), "5");
        assert_eq!((-&make_residue(0, 5, 2).unwrap()).to_string(), "0");
    }
}
