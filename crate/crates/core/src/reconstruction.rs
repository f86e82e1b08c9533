//! Universal coefficient tables and reconstruction of sums of periodic maps.
//!
//! For periods `n_1, ..., n_k` with spectrum size `l` and lcm `N`, every sum
//! `psi` of maps with those periods into any abelian group satisfies
//! `psi(x) = sum_r f_r(x) * psi(r)` for `0 <= r < l`, where the integer maps
//! `f_r` depend only on the spectrum. The table stores `f_r(n)` for
//! `0 <= n < N`; other arguments are reduced to their least nonnegative
//! residue mod `N`.
//!
//! The table is filled by the linear recurrence whose characteristic
//! polynomial is `prod_{d in D} Phi_d(z) = z^l - a_1 z^{l-1} - ... - a_l`:
//! the first `l` rows are the identity and row `n >= l` is
//! `sum_j a_j * row[n - j]`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bigint_serde;
use crate::cyclotomic::{characteristic_poly, IntPolynomial};
use crate::error::{Error, Result};
use crate::group::AbelianGroup;
use crate::numth::{gcd, PositiveInt};
use crate::spectrum::{build_spectrum, PeriodSystem, ReducedFraction, Spectrum};

/// Default row cap for [`coefficient_table`].
pub const DEFAULT_MAX_ROWS: usize = 1_000_000;

/// A map `Z -> G` given by its values on one period.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicMap<G> {
    values: Vec<G>,
}

impl<G: AbelianGroup> PeriodicMap<G> {
    /// The period is the number of values.
    pub fn new(values: Vec<G>) -> Result<Self> {
        let first = values.first().ok_or(Error::EmptyPeriodList)?;
        if !values.iter().all(|v| v.same_group(first)) {
            return Err(Error::MixedGroups);
        }
        Ok(PeriodicMap { values })
    }

    pub fn period(&self) -> PositiveInt {
        PositiveInt::new(self.values.len() as u64).expect("nonempty")
    }

    pub fn values(&self) -> &[G] {
        &self.values
    }

    pub fn eval(&self, x: &BigInt) -> &G {
        &self.values[residue(x, self.values.len())]
    }

    pub fn eval_i64(&self, x: i64) -> &G {
        &self.values[x.rem_euclid(self.values.len() as i64) as usize]
    }
}

/// `psi_1 + ... + psi_k` over a common group.
#[derive(Debug, Clone, PartialEq)]
pub struct SumOfPeriodicMaps<G> {
    components: Vec<PeriodicMap<G>>,
}

impl<G: AbelianGroup> SumOfPeriodicMaps<G> {
    pub fn new(components: Vec<PeriodicMap<G>>) -> Result<Self> {
        let first = components.first().ok_or(Error::EmptyPeriodList)?;
        let sample = &first.values[0];
        if !components
            .iter()
            .all(|c| c.values.iter().all(|v| v.same_group(sample)))
        {
            return Err(Error::MixedGroups);
        }
        Ok(SumOfPeriodicMaps { components })
    }

    pub fn components(&self) -> &[PeriodicMap<G>] {
        &self.components
    }

    pub fn period_system(&self) -> PeriodSystem {
        PeriodSystem::new(self.components.iter().map(|c| c.period()).collect()).expect("nonempty")
    }

    /// Direct evaluation; see [`eval_sum`].
    pub fn eval(&self, x: &BigInt) -> G {
        eval_sum(self, x)
    }

    /// `psi(start), ..., psi(start + len - 1)`.
    pub fn window(&self, start: &BigInt, len: usize) -> Vec<G> {
        (0..len).map(|r| eval_sum(self, &(start + r))).collect()
    }
}

/// Evaluates the sum term by term at `x`.
pub fn eval_sum<G: AbelianGroup>(sum: &SumOfPeriodicMaps<G>, x: &BigInt) -> G {
    let zero = sum.components[0].values[0].zero_like();
    sum.components
        .iter()
        .fold(zero, |acc, c| acc.plus(c.eval(x)))
}

/// Least nonnegative residue of `x` modulo `n`.
fn residue(x: &BigInt, n: usize) -> usize {
    x.mod_floor(&BigInt::from(n))
        .to_usize()
        .expect("residue below a usize modulus")
}

/// Reads `a_1, ..., a_l` off a monic `z^l - a_1 z^{l-1} - ... - a_l`.
pub fn recurrence_coeffs(p: &IntPolynomial) -> Result<Vec<BigInt>> {
    match p.degree() {
        Some(l) if l >= 1 && p.is_monic() => Ok((1..=l).map(|j| -p.coeff(l - j)).collect()),
        _ => Err(Error::NotMonic),
    }
}

/// The table `f_r(n)` for `0 <= n < N`, `0 <= r < l`.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    periods: PeriodSystem,
    spectrum: Spectrum,
    charpoly: IntPolynomial,
    recurrence: Vec<BigInt>,
    rows: Vec<Vec<BigInt>>,
}

/// Two tables are equal when their coefficients agree; the period lists
/// they were built from are not compared.
impl PartialEq for CoefficientTable {
    fn eq(&self, other: &Self) -> bool {
        self.spectrum == other.spectrum
            && self.charpoly == other.charpoly
            && self.recurrence == other.recurrence
            && self.rows == other.rows
    }
}

impl Eq for CoefficientTable {}

impl CoefficientTable {
    pub fn periods(&self) -> &PeriodSystem {
        &self.periods
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn charpoly(&self) -> &IntPolynomial {
        &self.charpoly
    }

    /// `a_1, ..., a_l`.
    pub fn recurrence(&self) -> &[BigInt] {
        &self.recurrence
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `l = |S|`.
    pub fn width(&self) -> usize {
        self.recurrence.len()
    }

    /// `N`, the number of rows.
    pub fn modulus(&self) -> usize {
        self.rows.len()
    }

    /// `(f_0(x), ..., f_{l-1}(x))`.
    pub fn row(&self, x: &BigInt) -> &[BigInt] {
        &self.rows[residue(x, self.rows.len())]
    }

    /// Checks the identity block and the recurrence rows.
    pub fn check_structure(&self) -> Result<()> {
        let l = self.width();
        let bad = |msg: String| Err(Error::InvalidTable(msg));
        if l == 0 || self.rows.len() < l {
            return bad(format!("{} rows for width {l}", self.rows.len()));
        }
        if let Some(n) = self.rows.iter().position(|r| r.len() != l) {
            return bad(format!("row {n} has length {}", self.rows[n].len()));
        }
        for (n, row) in self.rows.iter().enumerate().take(l) {
            for (r, v) in row.iter().enumerate() {
                let expected = if n == r { 1 } else { 0 };
                if *v != BigInt::from(expected) {
                    return bad(format!("identity block broken at row {n}"));
                }
            }
        }
        for n in l..self.rows.len() {
            if self.rows[n] != next_row(&self.rows[..n], &self.recurrence) {
                return bad(format!("row {n} does not follow the recurrence"));
            }
        }
        Ok(())
    }
}

/// `sum_j a_j * rows[n - j]` for `n = rows.len()`.
fn next_row(rows: &[Vec<BigInt>], recurrence: &[BigInt]) -> Vec<BigInt> {
    let n = rows.len();
    let l = recurrence.len();
    let mut out = vec![BigInt::zero(); l];
    for (j, a) in recurrence.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (acc, v) in out.iter_mut().zip(&rows[n - 1 - j]) {
            *acc += a * v;
        }
    }
    out
}

/// Builds the table with the default row cap.
pub fn coefficient_table(ps: &PeriodSystem) -> Result<CoefficientTable> {
    coefficient_table_with_cap(ps, DEFAULT_MAX_ROWS)
}

/// Builds the table, failing if `N` exceeds `max_rows`.
pub fn coefficient_table_with_cap(ps: &PeriodSystem, max_rows: usize) -> Result<CoefficientTable> {
    let modulus = ps.lcm();
    let n = modulus
        .to_usize()
        .filter(|&n| n <= max_rows)
        .ok_or_else(|| Error::TableTooLarge {
            rows: modulus.to_string(),
            cap: max_rows,
        })?;
    let spectrum = build_spectrum(ps);
    let charpoly = characteristic_poly(&spectrum);
    let recurrence = recurrence_coeffs(&charpoly)?;
    let l = recurrence.len();
    debug_assert_eq!(l, spectrum.len());
    debug_assert!(l <= n);

    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..l {
        let mut row = vec![BigInt::zero(); l];
        row[i] = 1.into();
        rows.push(row);
    }
    while rows.len() < n {
        let row = next_row(&rows, &recurrence);
        rows.push(row);
    }
    Ok(CoefficientTable {
        periods: ps.clone(),
        spectrum,
        charpoly,
        recurrence,
        rows,
    })
}

/// `sum_r f_r(x) * initial[r]`.
///
/// When `initial` holds `psi(0), ..., psi(l-1)` for a sum `psi` of maps with
/// the table's periods, the result is `psi(x)`.
pub fn extrapolate<G: AbelianGroup>(
    table: &CoefficientTable,
    initial: &[G],
    x: &BigInt,
) -> Result<G> {
    check_window(table, initial)?;
    Ok(combine(table.row(x), initial))
}

/// Extrapolates one full period `x = 0, ..., N-1`.
pub fn extrapolate_period<G: AbelianGroup>(
    table: &CoefficientTable,
    initial: &[G],
) -> Result<Vec<G>> {
    check_window(table, initial)?;
    Ok(table.rows.iter().map(|row| combine(row, initial)).collect())
}

fn check_window<G: AbelianGroup>(table: &CoefficientTable, values: &[G]) -> Result<()> {
    if values.len() != table.width() {
        return Err(Error::LengthMismatch {
            expected: table.width(),
            found: values.len(),
        });
    }
    if !values.iter().all(|v| v.same_group(&values[0])) {
        return Err(Error::MixedGroups);
    }
    Ok(())
}

fn combine<G: AbelianGroup>(row: &[BigInt], values: &[G]) -> G {
    row.iter()
        .zip(values)
        .filter(|(c, _)| !c.is_zero())
        .fold(values[0].zero_like(), |acc, (c, v)| acc.plus(&v.scale(c)))
}

/// Outcome of [`constancy_check`].
#[derive(Debug, Clone, PartialEq)]
pub enum Constancy<G> {
    /// Every window entry equals this value, so the whole map does.
    Constant(G),
    /// Entry `index` differs from entry 0.
    NotConstant { index: usize },
}

impl<G> Constancy<G> {
    pub fn is_constant(&self) -> bool {
        matches!(self, Constancy::Constant(_))
    }
}

/// Tests `|S|` consecutive values `psi(a), ..., psi(a + l - 1)` for equality.
///
/// A constant window forces a constant map when `psi` is a sum of maps with
/// the table's periods; the start `a` plays no role.
pub fn constancy_check<G: AbelianGroup>(
    table: &CoefficientTable,
    window: &[G],
) -> Result<Constancy<G>> {
    check_window(table, window)?;
    Ok(match window.iter().position(|v| *v != window[0]) {
        Some(index) => Constancy::NotConstant { index },
        None => Constancy::Constant(window[0].clone()),
    })
}

/// `m + n - gcd(m, n)`, the agreement window of two maps with periods `m`, `n`.
pub fn finewilf_window(m: PositiveInt, n: PositiveInt) -> u64 {
    m.get() + n.get() - gcd(m.get(), n.get())
}

/// The gcd of `g(r) - h(r)` over `0 <= r < m + n - gcd(m, n)`.
///
/// Every difference `g(x) - h(x)` is a multiple of the result; zero means
/// `g` and `h` coincide everywhere.
pub fn finewilf_difference_gcd(g: &PeriodicMap<BigInt>, h: &PeriodicMap<BigInt>) -> BigUint {
    let window = finewilf_window(g.period(), h.period());
    (0..window)
        .map(|r| {
            let x = BigInt::from(r);
            (g.eval(&x) - h.eval(&x)).abs()
        })
        .fold(BigInt::zero(), |acc, d| acc.gcd(&d))
        .magnitude()
        .clone()
}

/// The JSON layout of a [`CoefficientTable`]. Every number is a decimal string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub periods: Vec<String>,
    #[serde(rename = "N")]
    pub modulus: String,
    pub l: String,
    pub spectrum: Vec<ReducedFraction>,
    pub charpoly: IntPolynomial,
    #[serde(with = "bigint_serde::vec")]
    pub recurrence: Vec<BigInt>,
    #[serde(with = "bigint_serde::matrix")]
    pub rows: Vec<Vec<BigInt>>,
}

impl CoefficientTable {
    pub fn to_document(&self) -> TableDocument {
        TableDocument {
            periods: self
                .periods
                .periods()
                .iter()
                .map(|p| p.to_string())
                .collect(),
            modulus: self.modulus().to_string(),
            l: self.width().to_string(),
            spectrum: self.spectrum.elements().to_vec(),
            charpoly: self.charpoly.clone(),
            recurrence: self.recurrence.clone(),
            rows: self.rows.clone(),
        }
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("table serializes")
    }

    /// Rebuilds a table from its document, rejecting anything inconsistent
    /// with the declared periods.
    pub fn from_document(doc: TableDocument) -> Result<Self> {
        let invalid = |what: &str| Error::InvalidTable(what.to_string());
        let periods = doc
            .periods
            .iter()
            .map(|p| p.parse::<PositiveInt>())
            .collect::<Result<Vec<_>>>()
            .map_err(|_| invalid("bad period"))?;
        let periods = PeriodSystem::new(periods)?;
        let spectrum = build_spectrum(&periods);
        if doc.spectrum != spectrum.elements() {
            return Err(invalid("spectrum does not match periods"));
        }
        if doc.modulus != spectrum.modulus().to_string()
            || doc.modulus != doc.rows.len().to_string()
        {
            return Err(invalid("N does not match periods"));
        }
        if doc.l != spectrum.len().to_string() {
            return Err(invalid("l does not match spectrum"));
        }
        let charpoly = characteristic_poly(&spectrum);
        if doc.charpoly != charpoly {
            return Err(invalid("charpoly does not match spectrum"));
        }
        if doc.recurrence != recurrence_coeffs(&charpoly)? {
            return Err(invalid("recurrence does not match charpoly"));
        }
        let table = CoefficientTable {
            periods,
            spectrum,
            charpoly,
            recurrence: doc.recurrence,
            rows: doc.rows,
        };
        table.check_structure()?;
        Ok(table)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        Self::from_document(serde_json::from_str(json)?)
    }
}
