//! Finite systems of residue classes and their covering function
//! `w_A(x) = #{ s : x = a_s (mod n_s) }`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::bigint_serde;
use crate::error::{Error, Result};
use crate::numth::PositiveInt;
use crate::reconstruction::{PeriodicMap, SumOfPeriodicMaps};
use crate::spectrum::{size_by_phi, PeriodSystem};

/// `a (mod n)` with `0 <= a < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ResidueClass {
    residue: u64,
    modulus: PositiveInt,
}

impl ResidueClass {
    /// Reduces `residue` into `[0, modulus)`.
    pub fn new(residue: &BigInt, modulus: PositiveInt) -> Self {
        let r = residue
            .mod_floor(&BigInt::from(modulus.get()))
            .to_u64()
            .expect("residue below modulus");
        ResidueClass {
            residue: r,
            modulus,
        }
    }

    pub fn from_i64(residue: i64, modulus: u64) -> Result<Self> {
        Ok(Self::new(&residue.into(), PositiveInt::new(modulus)?))
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> PositiveInt {
        self.modulus
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        x.mod_floor(&BigInt::from(self.modulus.get())) == BigInt::from(self.residue)
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// A nonempty list of residue classes; repeats allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSystem {
    classes: Vec<ResidueClass>,
}

impl ResidueSystem {
    pub fn new(classes: Vec<ResidueClass>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::EmptySystem);
        }
        Ok(ResidueSystem { classes })
    }

    /// Builds from `(a, n)` pairs.
    pub fn from_pairs(pairs: &[(i64, u64)]) -> Result<Self> {
        pairs
            .iter()
            .map(|&(a, n)| ResidueClass::from_i64(a, n))
            .collect::<Result<Vec<_>>>()
            .and_then(Self::new)
    }

    pub fn classes(&self) -> &[ResidueClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn moduli(&self) -> Vec<PositiveInt> {
        self.classes.iter().map(|c| c.modulus).collect()
    }

    pub fn period_system(&self) -> PeriodSystem {
        PeriodSystem::new(self.moduli()).expect("nonempty")
    }

    /// `|S(n_1, ..., n_k)|` for the moduli.
    pub fn window_len(&self) -> usize {
        usize::try_from(size_by_phi(&self.period_system())).expect("window fits in memory")
    }

    /// The class indicators as integer-valued periodic maps; their sum is `w_A`.
    pub fn indicator_maps(&self) -> SumOfPeriodicMaps<BigInt> {
        let maps = self
            .classes
            .iter()
            .map(|c| {
                let n = c.modulus.get();
                let values = (0..n)
                    .map(|r| BigInt::from(u8::from(r == c.residue)))
                    .collect();
                PeriodicMap::new(values).expect("positive modulus")
            })
            .collect();
        SumOfPeriodicMaps::new(maps).expect("nonempty")
    }

    /// Parses one `a mod n` per line. Blank lines and `#` comments are skipped.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut classes = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            classes.push(parse_class(content).map_err(|message| Error::Parse { line, message })?);
        }
        Self::new(classes)
    }

    /// Parses `[[a, n], ...]`; entries may be JSON integers or decimal strings.
    pub fn parse_json(json: &str) -> Result<Self> {
        #[derive(serde::Deserialize)]
        struct Pair(
            #[serde(with = "bigint_serde")] BigInt,
            #[serde(with = "bigint_serde")] BigInt,
        );

        let pairs: Vec<Pair> = serde_json::from_str(json)?;
        let classes = pairs
            .into_iter()
            .enumerate()
            .map(|(i, Pair(a, n))| {
                let modulus = n
                    .to_u64()
                    .and_then(|n| PositiveInt::new(n).ok())
                    .ok_or_else(|| Error::Parse {
                        line: i + 1,
                        message: format!("modulus must be a positive integer, got {n}"),
                    })?;
                Ok(ResidueClass::new(&a, modulus))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(classes)
    }

    /// JSON when the input starts with `[`, the line format otherwise.
    pub fn parse(input: &str) -> Result<Self> {
        if input.trim_start().starts_with('[') {
            Self::parse_json(input)
        } else {
            Self::parse_text(input)
        }
    }
}

impl fmt::Display for ResidueSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.classes {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn parse_class(content: &str) -> std::result::Result<ResidueClass, String> {
    let tokens: Vec<&str> = content.split_whitespace().collect();
    let [a, kw, n] = tokens.as_slice() else {
        return Err(format!("expected \"a mod n\", got {content:?}"));
    };
    if !kw.eq_ignore_ascii_case("mod") {
        return Err(format!("expected \"mod\", got {kw:?}"));
    }
    let a = bigint_serde::parse_decimal(a).ok_or_else(|| format!("invalid residue {a:?}"))?;
    let n: PositiveInt = n
        .parse()
        .map_err(|_| format!("modulus must be a positive integer, got {n:?}"))?;
    Ok(ResidueClass::new(&a, n))
}

/// `w_A(x)`.
pub fn multiplicity(sys: &ResidueSystem, x: &BigInt) -> usize {
    sys.classes.iter().filter(|c| c.contains(x)).count()
}

/// `w_A(start), ..., w_A(start + len - 1)`.
pub fn multiplicity_window(sys: &ResidueSystem, start: &BigInt, len: usize) -> Vec<usize> {
    (0..len).map(|r| multiplicity(sys, &(start + r))).collect()
}

/// Result of [`window_class_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCheck {
    /// All window values are `a (mod m)`; then every value of `w_A` is.
    pub holds: bool,
    /// `w_A` on the `|S|` integers starting at the requested start.
    pub window: Vec<usize>,
}

/// Checks whether `w_A` lies in `a (mod m)` on `|S|` consecutive integers
/// from `start`, which decides the same question for all integers.
pub fn window_class_check(
    sys: &ResidueSystem,
    m: PositiveInt,
    a: &BigInt,
    start: &BigInt,
) -> ClassCheck {
    let modulus = BigInt::from(m.get());
    let target = a.mod_floor(&modulus);
    let window = multiplicity_window(sys, start, sys.window_len());
    let holds = window
        .iter()
        .all(|&w| BigInt::from(w).mod_floor(&modulus) == target);
    ClassCheck { holds, window }
}

/// Whether every integer is covered an odd number of times.
pub fn odd_cover_check(sys: &ResidueSystem, start: &BigInt) -> bool {
    let two = PositiveInt::new(2).expect("2 > 0");
    window_class_check(sys, two, &BigInt::from(1), start).holds
}

/// True when no value repeats among the divisibility-maximal moduli.
///
/// A modulus is maximal when it divides no other modulus of the system
/// besides copies of itself.
pub fn maximal_moduli_distinct(sys: &ResidueSystem) -> bool {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for n in sys.moduli() {
        *counts.entry(n.get()).or_default() += 1;
    }
    counts.iter().all(|(&n, &count)| {
        let maximal = counts.keys().all(|&other| other == n || other % n != 0);
        !maximal || count == 1
    })
}

/// `gcd(w_A(a) + b, ..., w_A(a + |S| - 1) + b)`; zero only for an all-zero window.
pub fn gcd_window(sys: &ResidueSystem, a: &BigInt, b: &BigInt) -> BigUint {
    gcd_window_values(sys, a, b)
        .iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
        .magnitude()
        .clone()
}

/// The shifted window values `w_A(a + r) + b` for `0 <= r < |S|`.
pub fn gcd_window_values(sys: &ResidueSystem, a: &BigInt, b: &BigInt) -> Vec<BigInt> {
    multiplicity_window(sys, a, sys.window_len())
        .into_iter()
        .map(|w| BigInt::from(w) + b)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reconstruction::eval_sum;

    fn sys(pairs: &[(i64, u64)]) -> ResidueSystem {
        ResidueSystem::from_pairs(pairs).unwrap()
    }

    fn pi(n: u64) -> PositiveInt {
        PositiveInt::new(n).unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn normalizes_residues() {
        let c = ResidueClass::from_i64(-1, 4).unwrap();
        assert_eq!((c.residue(), c.modulus().get()), (3, 4));
        assert!(c.contains(&big(-5)));
        assert!(!c.contains(&big(-4)));
        assert!(ResidueClass::from_i64(0, 0).is_err());
        assert_eq!(ResidueSystem::new(vec![]), Err(Error::EmptySystem));
    }

    #[test]
    fn multiplicity_examples() {
        let a = sys(&[(0, 2), (0, 3)]);
        assert_eq!(multiplicity(&a, &big(0)), 2);
        assert_eq!(multiplicity(&a, &big(1)), 0);
        let full = sys(&[(0, 1)]);
        for x in -5..5 {
            assert_eq!(multiplicity(&full, &big(x)), 1);
        }
    }

    #[test]
    fn class_check_examples() {
        let exact = sys(&[(0, 2), (1, 2)]);
        let check = window_class_check(&exact, pi(2), &big(1), &big(0));
        assert_eq!(
            check,
            ClassCheck {
                holds: true,
                window: vec![1, 1]
            }
        );

        let a = sys(&[(0, 2), (0, 3)]);
        let check = window_class_check(&a, pi(2), &big(1), &big(0));
        assert_eq!(
            check,
            ClassCheck {
                holds: false,
                window: vec![2, 0, 1, 1]
            }
        );

        assert!(window_class_check(&sys(&[(0, 1)]), pi(5), &big(1), &big(7)).holds);
        // negative target residue is reduced
        assert!(window_class_check(&sys(&[(0, 1)]), pi(5), &big(-4), &big(0)).holds);
    }

    #[test]
    fn odd_cover_examples() {
        assert!(odd_cover_check(&sys(&[(0, 2), (1, 2)]), &big(0)));
        assert!(!odd_cover_check(&sys(&[(0, 2)]), &big(0)));
        assert!(!odd_cover_check(&sys(&[(0, 1), (0, 2), (1, 2)]), &big(3)));
    }

    #[test]
    fn maximal_moduli_examples() {
        assert!(maximal_moduli_distinct(&sys(&[(0, 2), (0, 3)])));
        assert!(!maximal_moduli_distinct(&sys(&[(0, 2), (1, 2)])));
        assert!(maximal_moduli_distinct(&sys(&[(0, 2), (0, 4), (0, 3)])));
        // repeated non-maximal modulus is fine
        assert!(maximal_moduli_distinct(&sys(&[(0, 2), (1, 2), (0, 4)])));
        assert!(!maximal_moduli_distinct(&sys(&[(0, 4), (1, 4), (0, 2)])));
        assert!(maximal_moduli_distinct(&sys(&[(0, 5)])));
    }

    #[test]
    fn gcd_window_examples() {
        let a = sys(&[(0, 2), (0, 3)]);
        assert_eq!(gcd_window(&a, &big(0), &big(0)), BigUint::from(1u32));
        assert_eq!(
            gcd_window_values(&a, &big(0), &big(2)),
            vec![big(4), big(2), big(3), big(3)]
        );
        assert_eq!(gcd_window(&a, &big(0), &big(2)), BigUint::from(1u32));
        let exact = sys(&[(0, 2), (1, 2)]);
        assert_eq!(gcd_window(&exact, &big(0), &big(1)), BigUint::from(2u32));
        assert_eq!(gcd_window(&exact, &big(0), &big(-1)), BigUint::zero());
    }

    #[test]
    fn text_format() {
        let text = "# an exact cover\n0 mod 2\n\n  1 MOD 2   # odd numbers\n-1 mod 3\n";
        let s = ResidueSystem::parse_text(text).unwrap();
        assert_eq!(s, sys(&[(0, 2), (1, 2), (2, 3)]));
        assert_eq!(ResidueSystem::parse(text).unwrap(), s);
        assert_eq!(s.to_string(), "0 mod 2\n1 mod 2\n2 mod 3\n");
    }

    #[test]
    fn text_format_errors_carry_line_numbers() {
        let cases = [
            ("0 mod 2\n1 mod 0\n", 2),
            ("# c\n\nx mod 2\n", 3),
            ("1 mud 2", 1),
            ("0 mod 2\n1 mod\n", 2),
            ("0 mod -3", 1),
        ];
        for (text, line) in cases {
            match ResidueSystem::parse_text(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert_eq!(ResidueSystem::parse_text(""), Err(Error::EmptySystem));
        assert_eq!(
            ResidueSystem::parse_text("# only\n\n"),
            Err(Error::EmptySystem)
        );
    }

    #[test]
    fn json_format() {
        let s = ResidueSystem::parse_json(r#"[[0, 2], ["1", "2"], [-1, 3]]"#).unwrap();
        assert_eq!(s, sys(&[(0, 2), (1, 2), (2, 3)]));
        assert_eq!(ResidueSystem::parse("  [[0,1]]").unwrap(), sys(&[(0, 1)]));
        assert_eq!(ResidueSystem::parse_json("[]"), Err(Error::EmptySystem));
        assert!(matches!(
            ResidueSystem::parse_json("[[0, 0]]"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(ResidueSystem::parse_json("[[0]]").is_err());
        assert!(ResidueSystem::parse_json("{}").is_err());
    }

    #[test]
    fn covering_function_is_a_sum_of_indicators() {
        let a = sys(&[(1, 4), (0, 6), (2, 3), (1, 4)]);
        let psi = a.indicator_maps();
        for x in -30..30 {
            assert_eq!(
                eval_sum(&psi, &big(x)),
                BigInt::from(multiplicity(&a, &big(x)))
            );
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn systems() -> impl Strategy<Value = ResidueSystem> {
            prop::collection::vec((1u64..=12).prop_flat_map(|n| (0..n as i64, Just(n))), 1..=5)
                .prop_map(|pairs| sys(&pairs))
        }

        proptest! {
            #[test]
            fn multiplicity_is_periodic(a in systems(), x in -200i64..200) {
                let n = a.period_system().lcm();
                let shifted = big(x) + BigInt::from(n);
                prop_assert_eq!(multiplicity(&a, &big(x)), multiplicity(&a, &shifted));
            }

            #[test]
            fn passing_window_holds_everywhere(
                a in systems(), m in 1u64..=6, target in 0i64..6, start in -30i64..30,
            ) {
                let check = window_class_check(&a, pi(m), &big(target), &big(start));
                if check.holds {
                    let n: i64 = a.period_system().lcm().try_into().unwrap();
                    for x in 0..n {
                        prop_assert_eq!((multiplicity(&a, &big(x)) as i64 - target).rem_euclid(m as i64), 0);
                    }
                }
            }
        }
    }
}
