//! Exact rational scalars and their `[numerator, denominator]` wire form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Least common multiple of the denominators of every entry.
pub fn common_denominator<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Decimal rendering with `digits` significant digits, used only by CSV emitters.
pub fn format_decimal(r: &Rational, digits: usize) -> String {
    let x = to_f64(r);
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `⌈r⌉` as a big integer.
pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// `⌊r⌋` as a big integer.
pub fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

/// Serialized form of a rational: a two-element integer array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalPair(pub i128, pub i128);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PairError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("rational {0} does not fit the [i128, i128] wire format")]
    TooLarge(String),
}

impl RationalPair {
    pub fn to_rational(self) -> Result<Rational, PairError> {
        if self.1 == 0 {
            return Err(PairError::ZeroDenominator);
        }
        Ok(Rational::new(BigInt::from(self.0), BigInt::from(self.1)))
    }

    pub fn from_rational(r: &Rational) -> Result<Self, PairError> {
        match (r.numer().to_i128(), r.denom().to_i128()) {
            (Some(n), Some(d)) => Ok(RationalPair(n, d)),
            _ => Err(PairError::TooLarge(r.to_string())),
        }
    }
}

pub fn pairs_to_vec(pairs: &[RationalPair]) -> Result<Vec<Rational>, PairError> {
    pairs.iter().map(|p| p.to_rational()).collect()
}

pub fn vec_to_pairs(values: &[Rational]) -> Result<Vec<RationalPair>, PairError> {
    values.iter().map(RationalPair::from_rational).collect()
}
