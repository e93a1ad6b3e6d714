//! Exact integer and rational primitives: divisors, totient, binomials and
//! nearest-integer rounding.
//!
//! Nothing here touches floating point. Binomial coefficients follow the
//! convention that `C(x, k)` is zero whenever `k < 0` or `k > x`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, ParseBigIntError, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberTheoryError {
    #[error("{0} is not defined for 0")]
    ZeroArgument(&'static str),
    #[error("{0} is a half-integer, so it has no nearest integer")]
    HalfInteger(ExactRational),
}

/// Arbitrary-precision non-negative integer holding an enumeration result.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }

    /// Converts a signed value, returning `None` when it is negative.
    pub fn from_signed(value: BigInt) -> Option<Self> {
        value.to_biguint().map(Count)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    /// Number of decimal digits (1 for zero), found without a full decimal
    /// conversion.
    pub fn decimal_digits(&self) -> u64 {
        if self.0.is_zero() {
            return 1;
        }
        // 10^k <= x < 10^(k+1); start from a lower estimate of k and step up.
        let bits = self.0.bits();
        let mut k = ((bits - 1) as f64 * std::f64::consts::LOG10_2).floor() as u64;
        k = k.saturating_sub(1);
        let ten = BigUint::from(10u32);
        let mut power = ten.pow(k as u32);
        while power <= self.0 {
            power *= &ten;
            k += 1;
        }
        k
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Count {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigUint>().map(Count)
    }
}

impl From<BigUint> for Count {
    fn from(value: BigUint) -> Self {
        Count(value)
    }
}

macro_rules! count_from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for Count {
            fn from(value: $t) -> Self {
                Count(BigUint::from(value))
            }
        }

        impl PartialEq<$t> for Count {
            fn eq(&self, other: &$t) -> bool {
                self.0 == BigUint::from(*other)
            }
        }
    )*};
}

count_from_primitive!(u8, u16, u32, u64, usize);

impl Add for Count {
    type Output = Count;

    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for Count {
    type Output = Count;

    fn add(self, rhs: &'a Count) -> Count {
        Count(self.0 + &rhs.0)
    }
}

impl AddAssign<&Count> for Count {
    fn add_assign(&mut self, rhs: &Count) {
        self.0 += &rhs.0;
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), Add::add)
    }
}

impl<'a> Sum<&'a Count> for Count {
    fn sum<I: Iterator<Item = &'a Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), Add::add)
    }
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>, NumberTheoryError> {
    if n == 0 {
        return Err(NumberTheoryError::ZeroArgument("divisors"));
    }
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    Ok(low)
}

/// Euler's totient, by trial-division factorisation.
pub fn totient(n: u64) -> Result<u64, NumberTheoryError> {
    if n == 0 {
        return Err(NumberTheoryError::ZeroArgument("totient"));
    }
    let mut rest = n;
    let mut phi = n;
    let mut p = 2u64;
    while p <= rest / p {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    Ok(phi)
}

/// `C(x, k)`, zero when `k` lies outside `0..=x`.
pub fn binomial(x: u64, k: i64) -> Count {
    if k < 0 || k as u64 > x {
        return Count::zero();
    }
    let k = (k as u64).min(x - k as u64);
    let mut acc = BigUint::one();
    // acc = C(x - k + i, i) after step i, so every division is exact.
    for i in 1..=k {
        acc *= x - k + i;
        acc /= i;
    }
    Count(acc)
}

/// The unique integer closest to `x`; undefined (an error) for half-integers.
pub fn nearest_integer(x: &ExactRational) -> Result<BigInt, NumberTheoryError> {
    let two = BigInt::from(2);
    if *x.denom() == two {
        return Err(NumberTheoryError::HalfInteger(x.clone()));
    }
    // floor(x + 1/2) = floor((2p + q) / 2q)
    let numer = x.numer() * &two + x.denom();
    let denom = x.denom() * &two;
    Ok(numer.div_floor(&denom))
}
