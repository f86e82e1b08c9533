//! Dense integer polynomials and cyclotomic polynomials.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bigint_serde;
use crate::error::{Error, Result};
use crate::numth::{divisors, PositiveInt};
use crate::spectrum::Spectrum;

/// A polynomial with integer coefficients stored constant term first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    /// Ascending-degree coefficients.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        poly_mul(self, other)
    }
}

/// Exact product.
pub fn poly_mul(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() || q.is_zero() {
        return IntPolynomial::zero();
    }
    let mut out = vec![BigInt::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    IntPolynomial::new(out)
}

/// Long division by a divisor whose leading coefficient is `±1`, so the
/// quotient and remainder stay integral. Returns `(quotient, remainder)`.
pub fn poly_divmod_exact(
    p: &IntPolynomial,
    q: &IntPolynomial,
) -> Result<(IntPolynomial, IntPolynomial)> {
    let lead = q
        .leading()
        .ok_or(Error::InexactDivision("division by the zero polynomial"))?;
    if !lead.abs().is_one() {
        return Err(Error::InexactDivision(
            "divisor leading coefficient is not a unit",
        ));
    }
    let dq = q.coeffs.len() - 1;
    let mut rem = p.coeffs.clone();
    if rem.len() <= dq {
        return Ok((IntPolynomial::zero(), p.clone()));
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dq];
    for shift in (0..quot.len()).rev() {
        let top = &rem[shift + dq];
        if top.is_zero() {
            continue;
        }
        // lead is ±1, so dividing by it is multiplying by it
        let factor = top * lead;
        for (j, c) in q.coeffs.iter().enumerate() {
            rem[shift + j] -= &factor * c;
        }
        quot[shift] = factor;
    }
    rem.truncate(dq);
    Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
}

/// `p mod q` for a divisor with unit leading coefficient.
pub fn poly_rem(p: &IntPolynomial, q: &IntPolynomial) -> Result<IntPolynomial> {
    poly_divmod_exact(p, q).map(|(_, rem)| rem)
}

/// `(x^n - 1) mod q` by square-and-multiply, without expanding `x^n - 1`.
pub fn x_pow_minus_one_rem(n: &BigUint, q: &IntPolynomial) -> Result<IntPolynomial> {
    let x = IntPolynomial::from_i64s(&[0, 1]);
    let mut acc = poly_rem(&IntPolynomial::one(), q)?;
    for i in (0..n.bits()).rev() {
        acc = poly_rem(&poly_mul(&acc, &acc), q)?;
        if n.bit(i) {
            acc = poly_rem(&poly_mul(&acc, &x), q)?;
        }
    }
    let mut coeffs = acc.into_coeffs();
    if coeffs.is_empty() {
        coeffs.push(BigInt::zero());
    }
    coeffs[0] -= 1;
    poly_rem(&IntPolynomial::new(coeffs), q)
}

fn cache() -> &'static Mutex<HashMap<u64, IntPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `d`-th cyclotomic polynomial, via `x^d - 1 = prod_{e | d} Phi_e`.
///
/// Results are memoized in a process-wide cache.
pub fn cyclotomic_poly(d: PositiveInt) -> IntPolynomial {
    if let Some(p) = cache()
        .lock()
        .expect("cyclotomic cache poisoned")
        .get(&d.get())
    {
        return p.clone();
    }
    let n = usize::try_from(d.get()).expect("cyclotomic index fits in memory");
    let proper = divisors(d)
        .into_iter()
        .filter(|&e| e != d)
        .fold(IntPolynomial::one(), |acc, e| {
            poly_mul(&acc, &cyclotomic_poly(e))
        });
    let (phi, rem) = poly_divmod_exact(&IntPolynomial::x_pow_minus_one(n), &proper)
        .expect("product of cyclotomic polynomials is monic");
    debug_assert!(rem.is_zero());
    cache()
        .lock()
        .expect("cyclotomic cache poisoned")
        .entry(d.get())
        .or_insert(phi)
        .clone()
}

/// `prod_{d in D} Phi_d`, whose roots are exactly `exp(2 pi i theta)` for `theta` in the spectrum.
pub fn characteristic_poly(sp: &Spectrum) -> IntPolynomial {
    sp.divisor_closure()
        .iter()
        .fold(IntPolynomial::one(), |acc, &d| {
            poly_mul(&acc, &cyclotomic_poly(d))
        })
}

impl fmt::Display for IntPolynomial {
    /// Descending degree, e.g. `x^4 + x^3 - x - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        bigint_serde::vec::serialize(&self.coeffs, serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = bigint_serde::vec::deserialize(deserializer)?;
        Ok(IntPolynomial::new(coeffs))
    }
}
