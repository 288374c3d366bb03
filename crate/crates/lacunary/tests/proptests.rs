//! Property-based invariants for the summation, sequence and residue
//! layers: row partitions and reflections of binomial class sums, the
//! signed/unsigned conversions, the Pascal-style recurrence, agreement of
//! modular harmonic sums with exact rationals, antisymmetry mod `p`, and
//! algebraic laws of the truncated p-adic arithmetic.

use num_bigint::BigInt;
use proptest::prelude::*;

use lacunary::padic::{is_prime, legendre, make_residue, padic_quotient, Residue};
use lacunary::sequences::{seq_exact, seq_mod, LucasKind};
use lacunary::sums::{
    binomial_lacunary, binomial_lacunary_all, harmonic_exact, harmonic_lacunary, rational_mod,
    sum_terms, ClassSpec, SumKind,
};

fn primes_between(lo: u64, hi: u64) -> impl Strategy<Value = u64> {
    let primes: Vec<u64> = (lo..=hi).filter(|&n| is_prime(n)).collect();
    proptest::sample::select(primes)
}

fn residue_of(v: i64, p: u64, e: u32) -> Residue {
    make_residue(v, p, e).unwrap()
}

proptest! {
    #[test]
    fn unsigned_classes_partition_the_row(m in 2u64..=12, n in 0u64..=60) {
        let rows = binomial_lacunary_all(m, n, false).unwrap();
        let total: BigInt = rows.iter().sum();
        prop_assert_eq!(total, BigInt::from(1) << n as usize);
    }

    #[test]
    fn signed_classes_cancel_across_the_row(m in 2u64..=12, n in 1u64..=60) {
        let rows = binomial_lacunary_all(m, n, true).unwrap();
        let total: BigInt = rows.iter().sum();
        prop_assert_eq!(total, BigInt::from(0));
    }

    #[test]
    fn unsigned_class_sums_reflect(m in 2u64..=12, n in 0u64..=60, r in -30i64..=30) {
        let here = binomial_lacunary(&ClassSpec::new(r, m, n).unwrap(), false).unwrap();
        let there =
            binomial_lacunary(&ClassSpec::new(n as i64 - r, m, n).unwrap(), false).unwrap();
        prop_assert_eq!(here, there);
    }

    #[test]
    fn signed_class_sums_reflect_with_row_parity(m in 2u64..=12, n in 0u64..=60, r in -30i64..=30) {
        let here = binomial_lacunary(&ClassSpec::new(r, m, n).unwrap(), true).unwrap();
        let there =
            binomial_lacunary(&ClassSpec::new(n as i64 - r, m, n).unwrap(), true).unwrap();
        prop_assert_eq!(if n % 2 == 0 { here } else { -here }, there);
    }

    #[test]
    fn signed_equals_weighted_unsigned_for_even_step(
        half_m in 1u64..=6,
        n in 0u64..=60,
        r in 0u64..=60,
    ) {
        let m = 2 * half_m;
        let r = r % m;
        let signed = binomial_lacunary(&ClassSpec::new(r as i64, m, n).unwrap(), true).unwrap();
        let unsigned =
            binomial_lacunary(&ClassSpec::new(r as i64, m, n).unwrap(), false).unwrap();
        prop_assert_eq!(signed, if r % 2 == 0 { unsigned } else { -unsigned });
    }

    #[test]
    fn signed_splits_through_doubled_step_for_odd_step(
        m_idx in 0usize..5,
        n in 0u64..=60,
        r in 0u64..=60,
    ) {
        let m = [3u64, 5, 7, 9, 11][m_idx];
        let r = r % m;
        let signed = binomial_lacunary(&ClassSpec::new(r as i64, m, n).unwrap(), true).unwrap();
        let low = binomial_lacunary(&ClassSpec::new(r as i64, 2 * m, n).unwrap(), false).unwrap();
        let high =
            binomial_lacunary(&ClassSpec::new((m + r) as i64, 2 * m, n).unwrap(), false).unwrap();
        let diff = low - high;
        prop_assert_eq!(signed, if r % 2 == 0 { diff } else { -diff });
    }

    #[test]
    fn signed_class_sums_satisfy_pascal(m in 2u64..=12, n in 1u64..=60, r in -30i64..=30) {
        let here = binomial_lacunary(&ClassSpec::new(r, m, n).unwrap(), true).unwrap();
        let up = binomial_lacunary(&ClassSpec::new(r, m, n - 1).unwrap(), true).unwrap();
        let up_left = binomial_lacunary(&ClassSpec::new(r - 1, m, n - 1).unwrap(), true).unwrap();
        prop_assert_eq!(here, up - up_left);
    }

    #[test]
    fn modular_harmonic_sums_match_exact_rationals(
        p in primes_between(3, 97),
        m in 2u64..=6,
        r in -12i64..=12,
        e in 1u32..=2,
        signed in proptest::bool::ANY,
    ) {
        let spec = ClassSpec::new(r, m, p - 1).unwrap();
        let modular = harmonic_lacunary(&spec, p, e, signed).unwrap();
        let exact = harmonic_exact(&spec, signed).unwrap();
        prop_assert_eq!(modular, rational_mod(&exact, p, e).unwrap());
    }

    #[test]
    fn harmonic_sums_are_antisymmetric_mod_p(
        p in primes_between(3, 199),
        m in 2u64..=12,
        r in -12i64..=24,
    ) {
        let here = harmonic_lacunary(&ClassSpec::new(r, m, p - 1).unwrap(), p, 1, false).unwrap();
        let mirrored =
            harmonic_lacunary(&ClassSpec::new(p as i64 - r, m, p - 1).unwrap(), p, 1, false)
                .unwrap();
        prop_assert_eq!(mirrored, -&here);
    }

    #[test]
    fn full_harmonic_sum_vanishes_mod_p_squared(p in primes_between(5, 499)) {
        let sum = sum_terms(SumKind::Reciprocal, p - 1, None, p, 2).unwrap();
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn modular_sequences_track_exact_values(
        kind_idx in 0usize..4,
        n in 0u64..=400,
        p in primes_between(3, 199),
        e in 1u32..=3,
    ) {
        let kind = [
            LucasKind::FIBONACCI,
            LucasKind::LUCAS,
            LucasKind::PELL,
            LucasKind::PELL_LUCAS,
        ][kind_idx];
        let exact = seq_exact(kind, n).unwrap();
        let modular = seq_mod(kind, n, p, e).unwrap();
        prop_assert_eq!(modular, make_residue(exact, p, e).unwrap());
    }

    #[test]
    fn prime_index_sequence_values_follow_quadratic_characters(p in primes_between(3, 499)) {
        let five = legendre(5, p).unwrap() as i64;
        let two = legendre(2, p).unwrap() as i64;
        prop_assert_eq!(seq_mod(LucasKind::FIBONACCI, p, p, 1).unwrap(), residue_of(five, p, 1));
        prop_assert_eq!(seq_mod(LucasKind::LUCAS, p, p, 1).unwrap(), residue_of(1, p, 1));
        prop_assert_eq!(seq_mod(LucasKind::PELL, p, p, 1).unwrap(), residue_of(two, p, 1));
        prop_assert_eq!(seq_mod(LucasKind::PELL_LUCAS, p, p, 1).unwrap(), residue_of(2, p, 1));
    }

    #[test]
    fn residue_ring_laws_hold(
        p in primes_between(3, 97),
        e in 1u32..=4,
        a in -1000i64..=1000,
        b in -1000i64..=1000,
        c in -1000i64..=1000,
    ) {
        let (x, y, z) = (residue_of(a, p, e), residue_of(b, p, e), residue_of(c, p, e));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&x + &(-&x), residue_of(0, p, e));
        if x.is_unit() {
            prop_assert_eq!(&x * &x.inv().unwrap(), residue_of(1, p, e));
        }
    }

    #[test]
    fn quotients_undo_scaling_by_prime_powers_and_units(
        p in primes_between(3, 97),
        e in 1u32..=2,
        t in 1u32..=2,
        v in -10_000i64..=10_000,
        unit in 1u64..=50,
    ) {
        prop_assume!(unit % p != 0);
        let scaled = BigInt::from(v) * BigInt::from(p).pow(t) * BigInt::from(unit);
        let q = padic_quotient(&scaled, unit, p, t, e).unwrap();
        prop_assert_eq!(q, residue_of(v, p, e));
    }
}
