//! Closed-form fix-set sizes for the good tuples under each class of `D_n`
//! element.
//!
//! Each formula is kept in its per-class, per-residue form. A binomial whose
//! lower argument would be `m/2` with `m` odd counts as zero.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::model::ElementClass;
use crate::numtheory::{binomial, Count};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixCountError {
    #[error("perimeter must be at least 3, got {0}")]
    PerimeterTooSmall(u64),
    #[error("{class} does not occur in D_{n}")]
    InconsistentClass { n: u64, class: ElementClass },
    #[error("number of sides m = {m} is outside 3..={n}")]
    SidesOutOfRange { n: u64, m: u64 },
}

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn c(x: u64, k: u64) -> BigInt {
    binomial(x, k as i64).to_bigint()
}

/// `C(x, m/2)`, zero for odd `m`.
fn c_half(x: u64, m: u64) -> BigInt {
    if m.is_multiple_of(2) {
        c(x, m / 2)
    } else {
        BigInt::default()
    }
}

fn check(n: u64, class: ElementClass) -> Result<(), FixCountError> {
    if n < 3 {
        return Err(FixCountError::PerimeterTooSmall(n));
    }
    if !class.is_valid_for(n as usize) {
        return Err(FixCountError::InconsistentClass { n, class });
    }
    Ok(())
}

fn into_count(value: BigInt, n: u64, class: ElementClass) -> Count {
    Count::from_signed(value).unwrap_or_else(|| panic!("negative fix count for {class} in D_{n}"))
}

/// Number of good `n`-tuples fixed by any element of the given class.
pub fn fix_polygons(n: u64, class: ElementClass) -> Result<Count, FixCountError> {
    check(n, class)?;
    let value = match class {
        ElementClass::Identity => {
            let base = pow2(n) - 1 - BigInt::from(n) * pow2(n / 2);
            if n.is_multiple_of(2) {
                base + n / 2
            } else {
                base
            }
        }
        ElementClass::RotationOfOrder(d) => {
            let d = d as u64;
            let base = pow2(n / d) - 1;
            if d == 2 {
                base - n / 2
            } else {
                base
            }
        }
        ElementClass::ReflectionOdd => match n % 4 {
            1 => pow2(n.div_ceil(2)) - 3 * pow2((n - 1) / 4) + 1,
            _ => pow2(n.div_ceil(2)) - pow2((n + 5) / 4) + 1,
        },
        ElementClass::ReflectionEvenNoFixedPoint => match n % 4 {
            0 => pow2(n / 2) - pow2((n + 4) / 4) + 1,
            _ => pow2(n / 2) - pow2((n + 6) / 4) + 2,
        },
        ElementClass::ReflectionEvenTwoFixedPoints => match n % 4 {
            0 => pow2((n + 2) / 2) - pow2((n + 8) / 4) + 1,
            _ => pow2((n + 2) / 2) - pow2((n + 6) / 4),
        },
    };
    Ok(into_count(value, n, class))
}

/// Number of good `n`-tuples of weight `m` fixed by any element of the given
/// class.
pub fn fix_mgons(n: u64, m: u64, class: ElementClass) -> Result<Count, FixCountError> {
    check(n, class)?;
    if m < 3 || m > n {
        return Err(FixCountError::SidesOutOfRange { n, m });
    }
    let value = match class {
        ElementClass::Identity => c(n, m) - BigInt::from(n) * c(n / 2, m - 1),
        ElementClass::RotationOfOrder(d) => {
            let d = d as u64;
            if m.is_multiple_of(d) {
                c(n / d, m / d)
            } else {
                BigInt::default()
            }
        }
        ElementClass::ReflectionOdd => c(n / 2, m / 2) - c(n / 4, m / 2) - c_half((n + 2) / 4, m),
        ElementClass::ReflectionEvenNoFixedPoint => c_half(n / 2, m) - 2 * c_half((n + 2) / 4, m),
        ElementClass::ReflectionEvenTwoFixedPoints => {
            if m.is_multiple_of(2) {
                c(n / 2, m / 2) - 2 * c(n / 4, m / 2)
            } else {
                2 * c(n / 2 - 1, m / 2) - 2 * c(n / 4, m / 2)
            }
        }
    };
    Ok(into_count(value, n, class))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_examples() {
        assert_eq!(fix_polygons(4, ElementClass::Identity).unwrap(), 1u32);
        assert_eq!(
            fix_polygons(6, ElementClass::RotationOfOrder(2)).unwrap(),
            4u32
        );
        assert_eq!(
            fix_polygons(13, ElementClass::ReflectionOdd).unwrap(),
            105u32
        );
    }

    #[test]
    fn mgon_examples() {
        assert_eq!(
            fix_mgons(6, 4, ElementClass::RotationOfOrder(2)).unwrap(),
            3u32
        );
        assert_eq!(
            fix_mgons(6, 3, ElementClass::RotationOfOrder(2)).unwrap(),
            0u32
        );
        assert_eq!(fix_mgons(12, 4, ElementClass::Identity).unwrap(), 255u32);
    }

    #[test]
    fn rejects_inconsistent_input() {
        assert!(matches!(
            fix_polygons(7, ElementClass::ReflectionEvenNoFixedPoint),
            Err(FixCountError::InconsistentClass { .. })
        ));
        assert!(matches!(
            fix_polygons(8, ElementClass::ReflectionOdd),
            Err(FixCountError::InconsistentClass { .. })
        ));
        assert!(matches!(
            fix_polygons(12, ElementClass::RotationOfOrder(5)),
            Err(FixCountError::InconsistentClass { .. })
        ));
        assert!(matches!(
            fix_polygons(12, ElementClass::RotationOfOrder(1)),
            Err(FixCountError::InconsistentClass { .. })
        ));
        assert!(matches!(
            fix_polygons(2, ElementClass::Identity),
            Err(FixCountError::PerimeterTooSmall(2))
        ));
        assert!(matches!(
            fix_mgons(10, 11, ElementClass::Identity),
            Err(FixCountError::SidesOutOfRange { .. })
        ));
        assert!(matches!(
            fix_mgons(10, 2, ElementClass::Identity),
            Err(FixCountError::SidesOutOfRange { .. })
        ));
    }

    #[test]
    fn columns_sum_to_polygon_counts() {
        for n in 3..=40u64 {
            for (class, _) in ElementClass::census(n as usize) {
                let total: Count = (3..=n).map(|m| fix_mgons(n, m, class).unwrap()).sum();
                assert_eq!(total, fix_polygons(n, class).unwrap(), "n={n} {class}");
            }
        }
    }
}
