//! Elementary number theory on machine-sized periods.
//!
//! Periods and moduli are `u64`. Anything that can grow past that (the lcm of
//! a period list) is returned as a [`BigUint`].

use std::fmt;
use std::num::NonZeroU64;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// A strictly positive integer, used for periods and moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveInt(NonZeroU64);

impl PositiveInt {
    pub const ONE: PositiveInt = PositiveInt(NonZeroU64::MIN);

    pub fn new(value: u64) -> Result<Self> {
        NonZeroU64::new(value)
            .map(PositiveInt)
            .ok_or_else(|| Error::NotPositive(value.to_string()))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0.get()
    }
}

impl TryFrom<u64> for PositiveInt {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        PositiveInt::new(value)
    }
}

impl TryFrom<i64> for PositiveInt {
    type Error = Error;

    fn try_from(value: i64) -> Result<Self> {
        u64::try_from(value)
            .map_err(|_| Error::NotPositive(value.to_string()))
            .and_then(PositiveInt::new)
    }
}

impl From<PositiveInt> for u64 {
    fn from(p: PositiveInt) -> u64 {
        p.get()
    }
}

impl FromStr for PositiveInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let value: u64 = trimmed
            .parse()
            .map_err(|_| Error::NotPositive(trimmed.to_string()))?;
        PositiveInt::new(value)
    }
}

impl fmt::Display for PositiveInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.get())
    }
}

/// Greatest common divisor; `gcd(a, 0) = a`.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Least common multiple of a nonempty list.
pub fn lcm_all(values: &[PositiveInt]) -> Result<BigUint> {
    let (first, rest) = values.split_first().ok_or(Error::EmptyPeriodList)?;
    Ok(rest.iter().fold(BigUint::from(first.get()), |acc, n| {
        acc.lcm(&BigUint::from(n.get()))
    }))
}

/// Euler's totient.
pub fn euler_phi(n: PositiveInt) -> u64 {
    let mut n = n.get();
    let mut phi = n;
    let mut p = 2u64;
    while p <= n / p {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: PositiveInt) -> Vec<PositiveInt> {
    let n = n.get();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small
        .into_iter()
        .chain(large.into_iter().rev())
        .map(|d| PositiveInt::new(d).expect("divisor of a positive integer"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> PositiveInt {
        PositiveInt::new(n).unwrap()
    }

    fn ps(ns: &[u64]) -> Vec<PositiveInt> {
        ns.iter().map(|&n| p(n)).collect()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(4, 6), 2);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 0), 0);
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_all(&ps(&[2, 3])).unwrap(), BigUint::from(6u32));
        assert_eq!(lcm_all(&ps(&[4, 6])).unwrap(), BigUint::from(12u32));
        assert_eq!(lcm_all(&ps(&[5])).unwrap(), BigUint::from(5u32));
        assert_eq!(lcm_all(&[]), Err(Error::EmptyPeriodList));
    }

    #[test]
    fn lcm_does_not_overflow() {
        let big = ps(&[u64::MAX, u64::MAX - 1]);
        let expected = BigUint::from(u64::MAX) * BigUint::from(u64::MAX - 1);
        assert_eq!(lcm_all(&big).unwrap(), expected);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(p(1)), 1);
        assert_eq!(euler_phi(p(6)), 2);
        assert_eq!(euler_phi(p(12)), 4);
        assert_eq!(euler_phi(p(97)), 96);
    }

    #[test]
    fn phi_matches_counting() {
        for n in 1..=200u64 {
            let count = (1..=n).filter(|&r| gcd(r, n) == 1).count() as u64;
            assert_eq!(euler_phi(p(n)), count, "n = {n}");
        }
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(p(1)), ps(&[1]));
        assert_eq!(divisors(p(6)), ps(&[1, 2, 3, 6]));
        assert_eq!(divisors(p(4)), ps(&[1, 2, 4]));
        assert_eq!(divisors(p(36)), ps(&[1, 2, 3, 4, 6, 9, 12, 18, 36]));
    }

    #[test]
    fn totient_sum_over_divisors() {
        for n in 1..=100u64 {
            let total: u64 = divisors(p(n)).into_iter().map(euler_phi).sum();
            assert_eq!(total, n);
        }
    }

    #[test]
    fn rejects_zero() {
        assert!(PositiveInt::new(0).is_err());
        assert!(PositiveInt::try_from(-3i64).is_err());
        assert!("0".parse::<PositiveInt>().is_err());
        assert_eq!("17".parse::<PositiveInt>().unwrap().get(), 17);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn gcd_times_lcm(a in 1u64..10_000, b in 1u64..10_000) {
                let l = lcm_all(&[p(a), p(b)]).unwrap();
                prop_assert_eq!(BigUint::from(gcd(a, b)) * l, BigUint::from(a) * BigUint::from(b));
            }

            #[test]
            fn divisors_contain_unit_and_self(n in 1u64..100_000) {
                let ds = divisors(p(n));
                prop_assert_eq!(ds.first().copied(), Some(p(1)));
                prop_assert_eq!(ds.last().copied(), Some(p(n)));
                prop_assert!(ds.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(ds.iter().all(|d| n % d.get() == 0));
            }
        }
    }
}
