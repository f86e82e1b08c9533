//! Exact reconstruction of sums of periodic maps.
//!
//! A sum `psi = psi_1 + ... + psi_k` of maps `Z -> G` into an abelian group,
//! with `psi_s` of period `n_s`, is determined by its first `|S|` values,
//! where `S` is the set of reduced fractions `r / n_s` in `[0, 1)`. This crate
//! computes `S` ([`spectrum`]), the cyclotomic characteristic polynomial of
//! `S` ([`cyclotomic`]), the universal integer coefficient tables that
//! rebuild `psi` from those values ([`reconstruction`]), and the resulting
//! checks on covering systems of residue classes ([`covering`]).

pub mod bigint_serde;
pub mod covering;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod numth;
pub mod reconstruction;
pub mod spectrum;

pub use num_bigint::{BigInt, BigUint};

pub use covering::{
    gcd_window, maximal_moduli_distinct, multiplicity, odd_cover_check, window_class_check,
    ClassCheck, ResidueClass, ResidueSystem,
};
pub use cyclotomic::{
    characteristic_poly, cyclotomic_poly, poly_divmod_exact, poly_mul, poly_rem,
    x_pow_minus_one_rem, IntPolynomial,
};
pub use error::{Error, Result};
pub use group::{AbelianGroup, IntVector, ModInt};
pub use numth::{divisors, euler_phi, gcd, lcm_all, PositiveInt};
pub use reconstruction::{
    coefficient_table, coefficient_table_with_cap, constancy_check, eval_sum, extrapolate,
    finewilf_difference_gcd, finewilf_window, recurrence_coeffs, CoefficientTable, Constancy,
    PeriodicMap, SumOfPeriodicMaps, TableDocument, DEFAULT_MAX_ROWS,
};
pub use spectrum::{
    build_spectrum, size_by_inclusion_exclusion, size_by_phi, PeriodSystem, ReducedFraction,
    Spectrum,
};
