//! Additive abelian groups used as value types for periodic maps.
//!
//! Three realizations ship with the crate: [`BigInt`], [`ModInt`] (the
//! cyclic group of integers mod `m`) and [`IntVector`] (`Z^d`). Elements
//! carry enough information to build their own zero, so `Z/m` for a runtime
//! `m` fits the same trait.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::numth::PositiveInt;

/// An additive abelian group. Implementations must satisfy the usual
/// axioms for all elements where [`same_group`](Self::same_group) holds:
///
/// - `a.plus(&b.plus(&c)) == a.plus(&b).plus(&c)`
/// - `a.plus(&b) == b.plus(&a)`
/// - `a.plus(&a.zero_like()) == a`
/// - `a.plus(&a.negate()) == a.zero_like()`
pub trait AbelianGroup: Clone + PartialEq + fmt::Debug + fmt::Display {
    /// The identity of the group `self` belongs to.
    fn zero_like(&self) -> Self;

    fn plus(&self, other: &Self) -> Self;

    fn negate(&self) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negate())
    }

    /// Whether both elements come from the same realization (same modulus,
    /// same dimension).
    fn same_group(&self, _other: &Self) -> bool {
        true
    }

    fn is_identity(&self) -> bool {
        *self == self.zero_like()
    }

    /// `n * self` by binary doubling.
    fn scale(&self, n: &BigInt) -> Self {
        let mut acc = self.zero_like();
        let mut base = if n.is_negative() {
            self.negate()
        } else {
            self.clone()
        };
        let mut k = n.abs();
        while !k.is_zero() {
            if k.is_odd() {
                acc = acc.plus(&base);
            }
            k >>= 1;
            if !k.is_zero() {
                base = base.plus(&base);
            }
        }
        acc
    }
}

impl AbelianGroup for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn negate(&self) -> Self {
        -self
    }

    fn minus(&self, other: &Self) -> Self {
        self - other
    }

    fn scale(&self, n: &BigInt) -> Self {
        self * n
    }
}

/// An element of `Z/mZ`, stored as its least nonnegative residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    modulus: PositiveInt,
}

impl ModInt {
    pub fn new(value: &BigInt, modulus: PositiveInt) -> Self {
        let m = BigInt::from(modulus.get());
        let value = value.mod_floor(&m).to_u64().expect("residue below modulus");
        ModInt { value, modulus }
    }

    pub fn from_i64(value: i64, modulus: PositiveInt) -> Self {
        Self::new(&BigInt::from(value), modulus)
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> PositiveInt {
        self.modulus
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl AbelianGroup for ModInt {
    fn zero_like(&self) -> Self {
        ModInt {
            value: 0,
            modulus: self.modulus,
        }
    }

    fn plus(&self, other: &Self) -> Self {
        debug_assert!(self.same_group(other));
        let m = self.modulus.get() as u128;
        ModInt {
            value: ((self.value as u128 + other.value as u128) % m) as u64,
            modulus: self.modulus,
        }
    }

    fn negate(&self) -> Self {
        let m = self.modulus.get();
        ModInt {
            value: if self.value == 0 { 0 } else { m - self.value },
            modulus: self.modulus,
        }
    }

    fn same_group(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }

    fn scale(&self, n: &BigInt) -> Self {
        let m = BigInt::from(self.modulus.get());
        ModInt::new(&(n.mod_floor(&m) * self.value), self.modulus)
    }
}

/// An element of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntVector(pub Vec<BigInt>);

impl IntVector {
    pub fn from_i64s(values: &[i64]) -> Self {
        IntVector(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for IntVector {
    /// Comma-separated components, the same form the CLI reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl AbelianGroup for IntVector {
    fn zero_like(&self) -> Self {
        IntVector(vec![BigInt::zero(); self.0.len()])
    }

    fn plus(&self, other: &Self) -> Self {
        debug_assert!(self.same_group(other));
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn negate(&self) -> Self {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    fn same_group(&self, other: &Self) -> bool {
        self.0.len() == other.0.len()
    }

    fn scale(&self, n: &BigInt) -> Self {
        IntVector(self.0.iter().map(|a| a * n).collect())
    }
}
