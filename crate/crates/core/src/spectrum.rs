//! The set of reduced fractions `r / n_s` in `[0, 1)` generated by a list of
//! periods, together with its lcm and divisor closure.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numth::{divisors, euler_phi, gcd, lcm_all, PositiveInt};

/// Largest period count accepted by [`size_by_inclusion_exclusion`].
pub const MAX_SUBSET_PERIODS: usize = 25;

/// A nonempty list of positive periods. Duplicates are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodSystem {
    periods: Vec<PositiveInt>,
}

impl PeriodSystem {
    pub fn new(periods: Vec<PositiveInt>) -> Result<Self> {
        if periods.is_empty() {
            return Err(Error::EmptyPeriodList);
        }
        Ok(PeriodSystem { periods })
    }

    /// Convenience constructor from raw integers; zero is rejected.
    pub fn from_u64s(periods: &[u64]) -> Result<Self> {
        periods
            .iter()
            .map(|&n| PositiveInt::new(n))
            .collect::<Result<Vec<_>>>()
            .and_then(PeriodSystem::new)
    }

    pub fn periods(&self) -> &[PositiveInt] {
        &self.periods
    }

    pub fn len(&self) -> usize {
        self.periods.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n_1 + ... + n_k - k + 1`, an upper bound for the spectrum size.
    pub fn size_bound(&self) -> u128 {
        let sum: u128 = self.periods.iter().map(|n| n.get() as u128).sum();
        sum - self.periods.len() as u128 + 1
    }

    pub fn lcm(&self) -> BigUint {
        lcm_all(&self.periods).expect("period system is nonempty")
    }

    /// All `d` dividing at least one period, ascending.
    pub fn divisor_closure(&self) -> Vec<PositiveInt> {
        let set: BTreeSet<PositiveInt> = self
            .periods
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .flat_map(|&n| divisors(n))
            .collect();
        set.into_iter().collect()
    }
}

/// A fraction `num / den` in lowest terms with `0 <= num < den`. Zero is `0/1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReducedFraction {
    num: u64,
    den: PositiveInt,
}

impl ReducedFraction {
    /// Reduces `num / den` and takes the fractional part.
    pub fn new(num: u64, den: PositiveInt) -> Self {
        let num = num % den.get();
        let g = gcd(num, den.get());
        let den = PositiveInt::new(den.get() / g).expect("gcd divides den");
        ReducedFraction { num: num / g, den }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    /// The denominator, which is also the order of `exp(2 pi i * self)`.
    pub fn den(&self) -> PositiveInt {
        self.den
    }
}

impl Ord for ReducedFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den.get() as u128;
        let rhs = other.num as u128 * self.den.get() as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for ReducedFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for ReducedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 1,
            message: format!("invalid fraction {s:?}"),
        };
        let (num, den) = s.split_once('/').ok_or_else(bad)?;
        let num: u64 = num.trim().parse().map_err(|_| bad())?;
        let den: PositiveInt = den.parse().map_err(|_| bad())?;
        let frac = ReducedFraction::new(num, den);
        if frac.num != num || frac.den != den {
            return Err(bad());
        }
        Ok(frac)
    }
}

impl Serialize for ReducedFraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ReducedFraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The spectrum of a period system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    elements: Vec<ReducedFraction>,
    modulus: BigUint,
    divisor_closure: Vec<PositiveInt>,
}

impl Spectrum {
    /// Ascending fractions.
    pub fn elements(&self) -> &[ReducedFraction] {
        &self.elements
    }

    /// `N`, the lcm of the periods (equivalently of the denominators).
    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn divisor_closure(&self) -> &[PositiveInt] {
        &self.divisor_closure
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Enumerates `r / n_s` for every period and reduces.
pub fn build_spectrum(ps: &PeriodSystem) -> Spectrum {
    let mut set = BTreeSet::new();
    for &n in ps.periods().iter().collect::<BTreeSet<_>>() {
        for r in 0..n.get() {
            set.insert(ReducedFraction::new(r, n));
        }
    }
    let elements: Vec<ReducedFraction> = set.into_iter().collect();
    let dens: BTreeSet<PositiveInt> = elements.iter().map(|f| f.den).collect();
    Spectrum {
        elements,
        modulus: ps.lcm(),
        divisor_closure: dens.into_iter().collect(),
    }
}

/// `|S|` as the totient sum over the divisor closure.
pub fn size_by_phi(ps: &PeriodSystem) -> u128 {
    ps.divisor_closure()
        .into_iter()
        .map(|d| euler_phi(d) as u128)
        .sum()
}

/// `|S|` by inclusion-exclusion over gcds of nonempty subsets of periods.
pub fn size_by_inclusion_exclusion(ps: &PeriodSystem) -> Result<u128> {
    let k = ps.len();
    if k > MAX_SUBSET_PERIODS {
        return Err(Error::SubsetLimit {
            k,
            max: MAX_SUBSET_PERIODS,
        });
    }
    let periods = ps.periods();
    let mut total: i128 = 0;
    for mask in 1u32..(1u32 << k) {
        let g = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .fold(0u64, |acc, i| acc.gcd(&periods[i].get()));
        if mask.count_ones() % 2 == 1 {
            total += g as i128;
        } else {
            total -= g as i128;
        }
    }
    Ok(total as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(ns: &[u64]) -> PeriodSystem {
        PeriodSystem::from_u64s(ns).unwrap()
    }

    fn fracs(pairs: &[(u64, u64)]) -> Vec<ReducedFraction> {
        pairs.iter()
            .map(|&(a, b)| ReducedFraction::new(a, PositiveInt::new(b).unwrap()))
            .collect()
    }

    fn closure(sp: &Spectrum) -> Vec<u64> {
        sp.divisor_closure().iter().map(|d| d.get()).collect()
    }

    #[test]
    fn spectrum_of_two_three() {
        let sp = build_spectrum(&sys(&[2, 3]));
        assert_eq!(
            sp.elements(),
            fracs(&[(0, 1), (1, 3), (1, 2), (2, 3)]).as_slice()
        );
        assert_eq!(sp.modulus(), &BigUint::from(6u32));
        assert_eq!(closure(&sp), vec![1, 2, 3]);
    }

    #[test]
    fn spectrum_of_unit_period() {
        let sp = build_spectrum(&sys(&[1]));
        assert_eq!(sp.elements(), fracs(&[(0, 1)]).as_slice());
        assert_eq!(sp.modulus(), &BigUint::from(1u32));
        assert_eq!(closure(&sp), vec![1]);
    }

    #[test]
    fn spectrum_of_four_six() {
        let sp = build_spectrum(&sys(&[4, 6]));
        assert_eq!(sp.len(), 8);
        assert_eq!(sp.modulus(), &BigUint::from(12u32));
        assert_eq!(closure(&sp), vec![1, 2, 3, 4, 6]);
    }

    #[test]
    fn phi_sizes() {
        assert_eq!(size_by_phi(&sys(&[2, 3])), 4);
        assert_eq!(size_by_phi(&sys(&[1])), 1);
        assert_eq!(size_by_phi(&sys(&[4, 6])), 8);
    }

    #[test]
    fn inclusion_exclusion_sizes() {
        assert_eq!(size_by_inclusion_exclusion(&sys(&[2, 3])).unwrap(), 4);
        assert_eq!(size_by_inclusion_exclusion(&sys(&[4, 6])).unwrap(), 8);
        assert_eq!(size_by_inclusion_exclusion(&sys(&[2, 3, 4])).unwrap(), 6);
        assert_eq!(
            build_spectrum(&sys(&[2, 3, 4])).elements(),
            fracs(&[(0, 1), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4)]).as_slice()
        );
    }

    #[test]
    fn inclusion_exclusion_limit() {
        let ps = PeriodSystem::from_u64s(&[2; 26]).unwrap();
        assert!(matches!(
            size_by_inclusion_exclusion(&ps),
            Err(Error::SubsetLimit { k: 26, .. })
        ));
    }

    #[test]
    fn empty_system_rejected() {
        assert_eq!(PeriodSystem::new(vec![]), Err(Error::EmptyPeriodList));
        assert!(PeriodSystem::from_u64s(&[2, 0]).is_err());
    }

    #[test]
    fn fraction_text_form() {
        let f: ReducedFraction = "2/3".parse().unwrap();
        assert_eq!(f.to_string(), "2/3");
        assert_eq!("0/1".parse::<ReducedFraction>().unwrap().to_string(), "0/1");
        assert!("2/4".parse::<ReducedFraction>().is_err());
        assert!("3/3".parse::<ReducedFraction>().is_err());
        assert!("1/0".parse::<ReducedFraction>().is_err());
        let json = serde_json::to_string(build_spectrum(&sys(&[2, 3])).elements()).unwrap();
        assert_eq!(json, r#"["0/1","1/3","1/2","2/3"]"#);
    }

    #[test]
    fn duplicates_and_order_are_irrelevant() {
        let a = build_spectrum(&sys(&[2, 3]));
        assert_eq!(a, build_spectrum(&sys(&[3, 2])));
        assert_eq!(a, build_spectrum(&sys(&[2, 2, 3, 3])));
        // 1 and 2 already lie in the closure of 2
        assert_eq!(a, build_spectrum(&sys(&[1, 2, 3])));
        assert_ne!(a, build_spectrum(&sys(&[6])));
    }

    mod props {
        use super::*;
        use num_traits::Zero;
        use proptest::prelude::*;

        fn systems() -> impl Strategy<Value = PeriodSystem> {
            prop::collection::vec(1u64..=30, 1..=6).prop_map(|ns| sys(&ns))
        }

        proptest! {
            #[test]
            fn three_cardinalities_agree(ps in systems()) {
                let enumerated = build_spectrum(&ps).len() as u128;
                prop_assert_eq!(enumerated, size_by_phi(&ps));
                prop_assert_eq!(enumerated, size_by_inclusion_exclusion(&ps).unwrap());
                prop_assert!(enumerated <= ps.size_bound());
            }

            #[test]
            fn spectrum_invariants(ps in systems()) {
                let sp = build_spectrum(&ps);
                prop_assert!(sp.elements().windows(2).all(|w| w[0] < w[1]));
                let dens: BTreeSet<PositiveInt> = sp.elements().iter().map(|f| f.den()).collect();
                prop_assert_eq!(dens.into_iter().collect::<Vec<_>>(), ps.divisor_closure());
                let lcm_of_dens = lcm_all(sp.divisor_closure()).unwrap();
                prop_assert_eq!(&lcm_of_dens, sp.modulus());
                for d in sp.divisor_closure() {
                    prop_assert!((sp.modulus() % d.get()).is_zero());
                }
            }

            #[test]
            fn two_periods(m in 1u64..=60, n in 1u64..=60) {
                let ps = sys(&[m, n]);
                prop_assert_eq!(build_spectrum(&ps).len() as u64, m + n - gcd(m, n));
            }

            #[test]
            fn equal_iff_closures_equal(a in systems(), b in systems()) {
                let same_spectrum = build_spectrum(&a) == build_spectrum(&b);
                prop_assert_eq!(same_spectrum, a.divisor_closure() == b.divisor_closure());
            }
        }
    }
}
