//! Counting inequivalent integer polygons and m-gons of a given perimeter.
//!
//! Two independent routes are provided for every dihedral and cyclic count:
//! the simplified closed forms (`count_*`) and a direct Burnside average of
//! the per-class fix counts (`count_*_via_burnside`). The second route is the
//! regression reference for the first.
//!
//! `p(n)` counts polygons with any number of sides, `p(m, n)` counts m-gons;
//! the `_cyclic` variants identify side lists up to rotation only.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::fixcount::{fix_mgons, fix_polygons, FixCountError};
use crate::model::{ElementClass, Symmetry};
use crate::numtheory::{
    binomial, divisors, nearest_integer, totient, Count, ExactRational, NumberTheoryError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("perimeter n = {n} is too small: n must be at least {min}")]
    PerimeterTooSmall { n: u64, min: u64 },
    #[error("m = {m} is too small: m must be at least 3")]
    SidesTooSmall { m: u64 },
    #[error("internal error: {what} = {value} is not divisible by {divisor}")]
    NotDivisible {
        what: &'static str,
        value: String,
        divisor: u64,
    },
    #[error("internal error: {0} produced a negative count")]
    Negative(&'static str),
    #[error(transparent)]
    FixCount(#[from] FixCountError),
    #[error(transparent)]
    NumberTheory(#[from] NumberTheoryError),
}

fn require_perimeter(n: u64) -> Result<(), CensusError> {
    if n < 3 {
        Err(CensusError::PerimeterTooSmall { n, min: 3 })
    } else {
        Ok(())
    }
}

fn exact_div(value: BigInt, divisor: u64, what: &'static str) -> Result<BigInt, CensusError> {
    let (q, r) = value.div_rem(&BigInt::from(divisor));
    if !r.is_zero() {
        return Err(CensusError::NotDivisible {
            what,
            value: value.to_string(),
            divisor,
        });
    }
    Ok(q)
}

fn to_count(value: BigInt, what: &'static str) -> Result<Count, CensusError> {
    Count::from_signed(value).ok_or(CensusError::Negative(what))
}

fn c(x: u64, k: u64) -> BigInt {
    binomial(x, k as i64).to_bigint()
}

fn c_half(x: u64, m: u64) -> BigInt {
    if m.is_multiple_of(2) {
        c(x, m / 2)
    } else {
        BigInt::zero()
    }
}

fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

fn divisor_totients(n: u64) -> Vec<(u64, u64)> {
    divisors(n)
        .expect("n >= 1")
        .into_iter()
        .map(|d| (d, totient(d).expect("d >= 1")))
        .collect()
}

/// `Σ_{d | gcd(m,n)} φ(d)·C(n/d, m/d)`, the rotation part shared by the
/// dihedral and cyclic m-gon counts.
fn rotation_binomial_sum(n: u64, m: u64) -> BigInt {
    divisor_totients(n.gcd(&m))
        .into_iter()
        .map(|(d, phi)| BigInt::from(phi) * c(n / d, m / d))
        .sum()
}

/// `Σ_{d | n} φ(d)·2^(n/d - 1)`. Always divisible by `n` for `n >= 3`.
pub fn totient_power_sum(n: u64) -> Count {
    assert!(n >= 1, "totient_power_sum needs n >= 1");
    let sum: BigUint = divisor_totients(n)
        .into_iter()
        .map(|(d, phi)| pow2(n / d - 1) * phi)
        .sum();
    Count::from(sum)
}

/// Inequivalent integer m-gons with perimeter `n`; zero unless `3 <= m <= n`.
pub fn count_mgons(n: u64, m: u64) -> Count {
    if m < 3 || m > n {
        return Count::zero();
    }
    let reflections =
        c(m / 2 + (n - m) / 2, m / 2) - c(n / 2, m - 1) - c(n / 4, m / 2) - c_half((n + 2) / 4, m);
    let numerator = rotation_binomial_sum(n, m) + BigInt::from(n) * reflections;
    let value = exact_div(numerator, 2 * n, "m-gon closed form numerator")
        .expect("closed form is integral for 3 <= m <= n");
    to_count(value, "m-gon closed form").expect("closed form is non-negative")
}

/// Inequivalent integer polygons (any number of sides) with perimeter `n`.
pub fn count_polygons(n: u64) -> Result<Count, CensusError> {
    require_perimeter(n)?;
    let sum = totient_power_sum(n).into_biguint();
    let (main, rem) = sum.div_rem(&BigUint::from(n));
    if !rem.is_zero() {
        return Err(CensusError::NotDivisible {
            what: "totient power sum",
            value: sum.to_string(),
            divisor: n,
        });
    }
    let tail = match n % 4 {
        0 | 1 => pow2((n - 4) / 4) * 3u32,
        _ => pow2((n + 2) / 4),
    };
    // n = 3 takes the second branch, so n - 4 never underflows.
    Ok(Count::from(main + pow2((n - 3) / 2) - tail))
}

/// Inequivalent m-gons up to rotation only; zero unless `3 <= m <= n`.
pub fn count_mgons_cyclic(n: u64, m: u64) -> Count {
    if m < 3 || m > n {
        return Count::zero();
    }
    let main = exact_div(rotation_binomial_sum(n, m), n, "cyclic m-gon rotation sum")
        .expect("rotation sum is divisible by n");
    to_count(main - c(n / 2, m - 1), "cyclic m-gon closed form")
        .expect("cyclic closed form is non-negative")
}

/// Inequivalent polygons up to rotation only.
pub fn count_polygons_cyclic(n: u64) -> Result<Count, CensusError> {
    require_perimeter(n)?;
    let doubled = totient_power_sum(n).into_biguint() << 1u32;
    let (main, rem) = doubled.div_rem(&BigUint::from(n));
    if !rem.is_zero() {
        return Err(CensusError::NotDivisible {
            what: "cyclic totient power sum",
            value: doubled.to_string(),
            divisor: n,
        });
    }
    Ok(Count::from(main - 1u32 - pow2(n / 2)))
}

/// Raw Burnside sum `Σ_σ fix(σ)` over the chosen group, for polygons
/// (`m = None`) or m-gons.
pub fn burnside_sum(n: u64, m: Option<u64>, symmetry: Symmetry) -> Result<Count, CensusError> {
    require_perimeter(n)?;
    if let Some(m) = m {
        if m < 3 {
            return Err(CensusError::SidesTooSmall { m });
        }
        if m > n {
            return Ok(Count::zero());
        }
    }
    let mut total = BigUint::zero();
    for (class, size) in ElementClass::census(n as usize) {
        let is_rotation = matches!(
            class,
            ElementClass::Identity | ElementClass::RotationOfOrder(_)
        );
        if symmetry == Symmetry::Cyclic && !is_rotation {
            continue;
        }
        let fix = match m {
            Some(m) => fix_mgons(n, m, class)?,
            None => fix_polygons(n, class)?,
        };
        total += fix.into_biguint() * size;
    }
    Ok(Count::from(total))
}

fn burnside_average(n: u64, m: Option<u64>, symmetry: Symmetry) -> Result<Count, CensusError> {
    let sum = burnside_sum(n, m, symmetry)?;
    let order = symmetry.group_order(n as usize) as u64;
    let value = exact_div(sum.to_bigint(), order, "Burnside fix-count sum")?;
    to_count(value, "Burnside average")
}

/// `p(n)` assembled from the per-class fix counts.
pub fn count_polygons_via_burnside(n: u64) -> Result<Count, CensusError> {
    burnside_average(n, None, Symmetry::Dihedral)
}

/// `p(m, n)` assembled from the per-class fix counts; zero for `m > n`.
pub fn count_mgons_via_burnside(n: u64, m: u64) -> Result<Count, CensusError> {
    burnside_average(n, Some(m), Symmetry::Dihedral)
}

pub fn count_polygons_cyclic_via_burnside(n: u64) -> Result<Count, CensusError> {
    burnside_average(n, None, Symmetry::Cyclic)
}

pub fn count_mgons_cyclic_via_burnside(n: u64, m: u64) -> Result<Count, CensusError> {
    burnside_average(n, Some(m), Symmetry::Cyclic)
}

fn rational(numer: BigInt, denom: u64) -> ExactRational {
    BigRational::new(numer, BigInt::from(denom))
}

/// The rational whose nearest integer counts triangles: `n²/48` for even
/// `n`, `(n+3)²/48` for odd `n`.
pub fn triangles_estimate(n: u64) -> ExactRational {
    let base = if n.is_multiple_of(2) { n } else { n + 3 };
    let base = BigInt::from(base);
    rational(&base * &base, 48)
}

/// Number of incongruent integer triangles with perimeter `n`, by rounding.
pub fn triangles_nearest(n: u64) -> Result<Count, CensusError> {
    if n < 1 {
        return Err(CensusError::PerimeterTooSmall { n, min: 1 });
    }
    to_count(
        nearest_integer(&triangles_estimate(n))?,
        "triangle rounding",
    )
}

/// `(n³ - 3n² + 20n)/96` for even `n`, `(n³ - 7n)/96` for odd `n`.
pub fn quadrilaterals_estimate(n: u64) -> ExactRational {
    let x = BigInt::from(n);
    let cube = &x * &x * &x;
    let numer = if n.is_multiple_of(2) {
        cube - 3 * &x * &x + 20 * &x
    } else {
        cube - 7 * &x
    };
    rational(numer, 96)
}

/// Number of inequivalent integer quadrilaterals with perimeter `n`, by
/// rounding.
pub fn quadrilaterals_nearest(n: u64) -> Result<Count, CensusError> {
    if n < 1 {
        return Err(CensusError::PerimeterTooSmall { n, min: 1 });
    }
    let rounded = nearest_integer(&quadrilaterals_estimate(n))?;
    to_count(rounded, "quadrilateral rounding")
}

/// Exact quadrilateral count split by `n mod 4`, with no rounding.
pub fn quadrilaterals_piecewise(n: u64) -> ExactRational {
    let x = BigInt::from(n);
    let cube = &x * &x * &x;
    let numer = match n % 4 {
        0 => cube - 3 * &x * &x + 20 * &x,
        1 => cube - 7 * &x + 6,
        2 => cube - 3 * &x * &x + 20 * &x - 36,
        _ => cube - 7 * &x - 6,
    };
    rational(numer, 96)
}

/// `2^(n-1) / n`, the leading-order size of `p(n)`.
pub fn asymptotic_polygons(n: u64) -> ExactRational {
    assert!(n >= 1, "asymptotic_polygons needs n >= 1");
    rational(BigInt::from(pow2(n - 1)), n)
}

/// `(2^(m-1) - m) / (2^m · m!)`, the leading coefficient of `p(m, n)` as a
/// polynomial in `n`.
pub fn asymptotic_mgon_coefficient(m: u64) -> ExactRational {
    assert!(m >= 1, "asymptotic_mgon_coefficient needs m >= 1");
    let factorial: BigInt = (1..=m).map(BigInt::from).product();
    let numer = BigInt::from(pow2(m - 1)) - m;
    BigRational::new(numer, BigInt::from(pow2(m)) * factorial)
}

/// Leading-order size of `p(m, n)`: coefficient times `n^(m-1)`.
pub fn asymptotic_mgons(m: u64, n: u64) -> ExactRational {
    asymptotic_mgon_coefficient(m) * BigRational::from_integer(BigInt::from(n).pow((m - 1) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> ExactRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn mgon_examples() {
        assert_eq!(count_mgons(12, 3), 3u32);
        assert_eq!(count_mgons(8, 4), 5u32);
        assert_eq!(count_mgons(20, 10), 4746u32);
        assert_eq!(count_mgons(7, 2), 0u32);
        assert_eq!(count_mgons(7, 8), 0u32);
        assert_eq!(count_mgons(0, 0), 0u32);
    }

    #[test]
    fn polygon_examples() {
        assert_eq!(count_polygons(3).unwrap(), 1u32);
        assert_eq!(count_polygons(10).unwrap(), 54u32);
        assert_eq!(count_polygons(20).unwrap(), 26452u32);
        assert!(matches!(
            count_polygons(2),
            Err(CensusError::PerimeterTooSmall { n: 2, min: 3 })
        ));
    }

    #[test]
    fn burnside_examples() {
        assert_eq!(count_mgons_via_burnside(12, 4).unwrap(), 16u32);
        assert_eq!(count_polygons_via_burnside(9).unwrap(), 32u32);
        assert_eq!(count_mgons_via_burnside(6, 6).unwrap(), 1u32);
        assert_eq!(count_mgons_via_burnside(6, 7).unwrap(), 0u32);
        assert!(count_mgons_via_burnside(6, 2).is_err());
        assert!(count_polygons_via_burnside(1).is_err());
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(count_mgons_cyclic(12, 3), 4u32);
        // {3,3,1,1} gives 2 rotation classes, {3,2,2,1} gives 3, {2,2,2,2} gives 1
        assert_eq!(count_mgons_cyclic(8, 4), 6u32);
        for n in 5..=10 {
            assert_eq!(count_mgons_cyclic(n, n), 1u32);
        }
        assert_eq!(count_polygons_cyclic(3).unwrap(), 1u32);
        assert!(count_polygons_cyclic(2).is_err());
    }

    #[test]
    fn cyclic_count_between_one_and_two_dihedral_orbits() {
        for n in 3..=300 {
            let p = count_polygons(n).unwrap();
            let pc = count_polygons_cyclic(n).unwrap();
            assert!(p <= pc && pc <= p.clone() + &p, "n = {n}");
        }
    }

    #[test]
    fn nearest_examples() {
        assert_eq!(triangles_nearest(12).unwrap(), 3u32);
        assert_eq!(triangles_nearest(15).unwrap(), 7u32);
        assert_eq!(triangles_nearest(3).unwrap(), 1u32);
        assert_eq!(quadrilaterals_nearest(6).unwrap(), 2u32);
        assert_eq!(quadrilaterals_nearest(13).unwrap(), 22u32);
        assert_eq!(quadrilaterals_nearest(20).unwrap(), 75u32);
        assert_eq!(quadrilaterals_piecewise(6), rat(2, 1));
        assert!(triangles_nearest(0).is_err());
    }

    #[test]
    fn nearest_forms_below_their_domain() {
        // n < m: the rounding formulas are defined and give 0 (no polygon)
        assert_eq!(triangles_nearest(1).unwrap(), 0u32);
        assert_eq!(triangles_nearest(2).unwrap(), 0u32);
        for n in 1..=3 {
            assert_eq!(quadrilaterals_nearest(n).unwrap(), 0u32);
            assert_eq!(quadrilaterals_piecewise(n), rat(0, 1));
        }
    }

    #[test]
    fn asymptotic_examples() {
        assert_eq!(asymptotic_mgon_coefficient(3), rat(1, 48));
        assert_eq!(asymptotic_mgon_coefficient(4), rat(1, 96));
        assert_eq!(asymptotic_mgon_coefficient(5), rat(11, 3840));
        assert_eq!(asymptotic_mgon_coefficient(6), rat(13, 23040));
        assert_eq!(asymptotic_mgon_coefficient(7), rat(19, 215040));
        assert_eq!(asymptotic_mgon_coefficient(8), rat(1, 86016));
        assert_eq!(asymptotic_mgon_coefficient(9), rat(247, 185794560));
        assert_eq!(asymptotic_mgon_coefficient(10), rat(251, 1857945600));
        assert_eq!(asymptotic_polygons(4), rat(2, 1));
        assert_eq!(asymptotic_mgons(5, 2), rat(11 * 16, 3840));
    }

    #[test]
    fn totient_power_sum_is_divisible_by_n() {
        for n in 3..=2_000u64 {
            let s = totient_power_sum(n).into_biguint();
            assert!((s % n).is_zero(), "n = {n}");
        }
    }

    #[test]
    fn closed_forms_match_burnside() {
        for n in 3..=200u64 {
            assert_eq!(
                count_polygons(n).unwrap(),
                count_polygons_via_burnside(n).unwrap(),
                "p({n})"
            );
            assert_eq!(
                count_polygons_cyclic(n).unwrap(),
                count_polygons_cyclic_via_burnside(n).unwrap(),
                "p'({n})"
            );
            for m in 3..=n {
                assert_eq!(
                    count_mgons(n, m),
                    count_mgons_via_burnside(n, m).unwrap(),
                    "p({m},{n})"
                );
                assert_eq!(
                    count_mgons_cyclic(n, m),
                    count_mgons_cyclic_via_burnside(n, m).unwrap(),
                    "p'({m},{n})"
                );
            }
        }
    }

    #[test]
    fn rows_sum_to_polygon_count() {
        for n in 3..=200u64 {
            let total: Count = (3..=n).map(|m| count_mgons(n, m)).sum();
            assert_eq!(total, count_polygons(n).unwrap(), "n = {n}");
            let cyclic: Count = (3..=n).map(|m| count_mgons_cyclic(n, m)).sum();
            assert_eq!(cyclic, count_polygons_cyclic(n).unwrap(), "n = {n}");
        }
    }
}
