//! Closed-form expressions for lacunary binomial sums with step 10, 8, 3
//! and 2, and for the diagonal values `T*_{n,m}(2n)`.
//!
//! Each function returns an exact integer; the verification suite compares
//! these against direct row sums from [`crate::sums::binomial_lacunary`].
//!
//! Conventions, for odd `n` throughout:
//!
//! * [`closed_t_m10`] — the five step-10 expressions. Indices `j = 0..=3`
//!   equal `T_{r,10}(n)` for `r = (n-1)/2 + 2j`. Index `j = 4` evaluates
//!   `(2^n - 2 L_n)/10`; the suite pairs it with `r = (n+13)/2` and reports
//!   (rather than asserts) that comparison, which genuinely disagrees from
//!   `n = 5` on.
//! * [`closed_t_m8`] — the four step-8 expressions, equal to `T_{r,8}(n)`
//!   for `r = (n-1)/2, (n+3)/2, (n+11)/2, (n+7)/2` in index order. (Note the
//!   last two classes: the `-wB` expression belongs to `(n+11)/2` and the
//!   `-wA` expression to `(n+7)/2`.)
//! * [`closed_tstar_diag_m5`] / [`closed_tstar_diag_m8`] /
//!   [`closed_tstar_diag_m8_shift4`] / [`closed_tstar_diag_m3`] — diagonal
//!   values `T*_{n,5}(2n)`, `T*_{n,8}(2n)`, `T*_{n+4,8}(2n)`, `T*_{n,3}(2n)`.
//! * [`closed_tstar_m2`] — `T*_{r,2}(n) = (-1)^r 2^{n-1}`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::sequences::{seq_exact, LucasKind};

/// Cap on `n` for every closed form here (matches the binomial row cap).
pub const MAX_CLOSED_FORM_INDEX: u64 = 20_000;

fn require_odd(n: u64, min: u64) -> Result<()> {
    if n > MAX_CLOSED_FORM_INDEX {
        return Err(Error::CapExceeded(n, MAX_CLOSED_FORM_INDEX));
    }
    if n % 2 == 0 {
        return Err(Error::BadIndex(n, "row length must be odd"));
    }
    if n < min {
        return Err(Error::BadIndex(n, "row length below the formula's domain"));
    }
    Ok(())
}

fn pow2(exp: u64) -> BigInt {
    BigInt::from(1) << usize::try_from(exp).expect("capped exponent fits usize")
}

fn pow_int(base: u64, exp: u64) -> BigInt {
    BigInt::from(base).pow(u32::try_from(exp).expect("capped exponent fits u32"))
}

fn exact_div_small(value: BigInt, divisor: u64) -> Result<BigInt> {
    let d = BigInt::from(divisor);
    if (&value % &d) != BigInt::from(0) {
        return Err(Error::IndivisibleClosedForm(value.to_string(), divisor));
    }
    Ok(value / d)
}

/// Step-10 closed forms for odd `n >= 1`; see the module docs for which
/// class each index `j` describes.
///
/// # Errors
///
/// [`Error::BadClassIndex`] for `j > 4`; [`Error::BadIndex`] for even `n`;
/// [`Error::IndivisibleClosedForm`] if the claimed division by 10 fails.
///
/// # Examples
///
/// ```
/// # use lacunary::closed_forms::closed_t_m10;
/// assert_eq!(closed_t_m10(0, 5).unwrap().to_string(), "10");
/// assert_eq!(closed_t_m10(4, 5).unwrap().to_string(), "1");
/// ```
pub fn closed_t_m10(j: u8, n: u64) -> Result<BigInt> {
    if j > 4 {
        return Err(Error::BadClassIndex(j, 4));
    }
    require_odd(n, 1)?;
    let lucas = |i: u64| seq_exact(LucasKind::LUCAS, i).expect("index capped");
    let fib = |i: u64| seq_exact(LucasKind::FIBONACCI, i).expect("index capped");
    // Weight and sequence pair depend on n mod 4.
    let (w, a, b) = if n % 4 == 1 {
        (pow_int(5, (n + 3) / 4), fib((n + 1) / 2), fib((n - 1) / 2))
    } else {
        (pow_int(5, (n + 1) / 4), lucas((n + 1) / 2), lucas((n - 1) / 2))
    };
    let two_n = pow2(n);
    let value = match j {
        0 => two_n + lucas(n + 1) + w * a,
        1 => two_n - lucas(n - 1) + w * b,
        2 => two_n - lucas(n - 1) - w * b,
        3 => two_n + lucas(n + 1) - w * a,
        _ => two_n - 2 * lucas(n),
    };
    exact_div_small(value, 10)
}

/// Step-8 closed forms for odd `n >= 1`; index `j = 0..=3` corresponds to
/// the classes `(n-1)/2, (n+3)/2, (n+11)/2, (n+7)/2` of `T_{r,8}(n)`.
///
/// # Errors
///
/// As [`closed_t_m10`], with `j > 3` rejected and division by 8.
///
/// # Examples
///
/// ```
/// # use lacunary::closed_forms::closed_t_m8;
/// assert_eq!(closed_t_m8(0, 7).unwrap().to_string(), "35");
/// assert_eq!(closed_t_m8(3, 5).unwrap().to_string(), "0");
/// ```
pub fn closed_t_m8(j: u8, n: u64) -> Result<BigInt> {
    if j > 3 {
        return Err(Error::BadClassIndex(j, 3));
    }
    require_odd(n, 1)?;
    let pell = |i: u64| seq_exact(LucasKind::PELL, i).expect("index capped");
    let pell_lucas = |i: u64| seq_exact(LucasKind::PELL_LUCAS, i).expect("index capped");
    let (w, a, b) = if n % 4 == 1 {
        (pow2((n + 7) / 4), pell((n + 1) / 2), pell((n - 1) / 2))
    } else {
        (pow2((n + 1) / 4), pell_lucas((n + 1) / 2), pell_lucas((n - 1) / 2))
    };
    let two_n = pow2(n);
    let half_pow = pow2((n + 1) / 2);
    let value = match j {
        0 => two_n + half_pow + w * a,
        1 => two_n - half_pow + w * b,
        2 => two_n - half_pow - w * b,
        _ => two_n + half_pow - w * a,
    };
    exact_div_small(value, 8)
}

/// Diagonal value `T*_{n,5}(2n) = -2 * 5^{(n-1)/2} F_n` for odd `n >= 1`.
///
/// # Examples
///
/// ```
/// # use lacunary::closed_forms::closed_tstar_diag_m5;
/// assert_eq!(closed_tstar_diag_m5(3).unwrap().to_string(), "-20");
/// ```
pub fn closed_tstar_diag_m5(n: u64) -> Result<BigInt> {
    require_odd(n, 1)?;
    let f = seq_exact(LucasKind::FIBONACCI, n).expect("index capped");
    Ok(-2 * pow_int(5, (n - 1) / 2) * f)
}

/// Diagonal value `T*_{n,8}(2n) = -2^{2n-3} - 2^{n-2} - 2^{(n-1)/2} P_n`
/// for odd `n >= 3`.
pub fn closed_tstar_diag_m8(n: u64) -> Result<BigInt> {
    require_odd(n, 3)?;
    let p = seq_exact(LucasKind::PELL, n).expect("index capped");
    Ok(-pow2(2 * n - 3) - pow2(n - 2) - pow2((n - 1) / 2) * p)
}

/// Shifted diagonal `T*_{n+4,8}(2n) = -2^{2n-3} - 2^{n-2} + 2^{(n-1)/2} P_n`
/// for odd `n >= 3`.
pub fn closed_tstar_diag_m8_shift4(n: u64) -> Result<BigInt> {
    require_odd(n, 3)?;
    let p = seq_exact(LucasKind::PELL, n).expect("index capped");
    Ok(-pow2(2 * n - 3) - pow2(n - 2) + pow2((n - 1) / 2) * p)
}

/// Diagonal value `T*_{n,3}(2n) = -2 * 3^{n-1}` for odd `n >= 1`.
///
/// # Examples
///
/// ```
/// # use lacunary::closed_forms::closed_tstar_diag_m3;
/// assert_eq!(closed_tstar_diag_m3(5).unwrap().to_string(), "-162");
/// ```
pub fn closed_tstar_diag_m3(n: u64) -> Result<BigInt> {
    require_odd(n, 1)?;
    Ok(-2 * pow_int(3, n - 1))
}

/// `T*_{r,2}(n) = (-1)^r 2^{n-1}` for `n >= 1` (any parity) and `r` in
/// `{0, 1}`.
///
/// # Errors
///
/// [`Error::BadClassIndex`] for `r > 1`; [`Error::BadIndex`] for `n = 0`.
pub fn closed_tstar_m2(r: u64, n: u64) -> Result<BigInt> {
    if r > 1 {
        return Err(Error::BadClassIndex(r as u8, 1));
    }
    if n == 0 {
        return Err(Error::BadIndex(n, "row length must be positive"));
    }
    if n > MAX_CLOSED_FORM_INDEX {
        return Err(Error::CapExceeded(n, MAX_CLOSED_FORM_INDEX));
    }
    let v = pow2(n - 1);
    Ok(if r == 0 { v } else { -v })
}
