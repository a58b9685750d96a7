//! Exact arithmetic on Q ∪ {∞}.
//!
//! `ExtendedRational` is the universal coefficient type of the crate: tangle
//! fractions, surgery slopes and Seifert coefficients all live here. Values
//! are kept in lowest terms with a non-negative denominator; the single
//! (projective) infinity is represented as `1/0` and zero as `0/1`.
//!
//! The partial arithmetic table is deliberately small: `1/0 = ∞`,
//! `a + ∞ = ∞`, `1/∞ = 0`, while `∞ + ∞` and `0 · ∞` are errors. These are
//! exactly the cases continued-fraction evaluation and slope bookkeeping
//! need; anything outside the table flags a logic bug upstream.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of Q ∪ {∞} in lowest terms.
///
/// Invariants: `gcd(|num|, den) = 1`, `den >= 0`, and `(0, 0)` is forbidden.
/// ∞ is `(1, 0)`, zero is `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedRational {
    num: BigInt,
    den: BigInt,
}

impl ExtendedRational {
    /// Builds `num/den` in canonical form. Fails only on `0/0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (mut num, mut den) = (num.into(), den.into());
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::ZeroOverZero);
            }
            return Ok(Self { num: BigInt::one(), den });
        }
        if den.sign() == Sign::Minus {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num = &num / &g;
            den = &den / &g;
        }
        Ok(Self { num, den })
    }

    pub fn infinity() -> Self {
        Self { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Self { num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Total reciprocal: `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone()).expect("num and den are never both zero")
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.num.clone(), self.den.clone()).expect("negation keeps the value valid")
    }

    /// `self + rhs`; errors on `∞ + ∞`.
    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.is_infinite() && rhs.is_infinite() {
            return Err(Error::AddInfinities);
        }
        if self.is_infinite() || rhs.is_infinite() {
            return Ok(Self::infinity());
        }
        Self::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }

    /// `self - rhs`; errors on `∞ - ∞`.
    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.neg())
    }

    /// `self · rhs`; errors on `0 · ∞`.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if (self.is_infinite() && rhs.is_zero()) || (self.is_zero() && rhs.is_infinite()) {
            return Err(Error::MulZeroInfinity);
        }
        if self.is_infinite() || rhs.is_infinite() {
            return Ok(Self::infinity());
        }
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    /// Total integer shift: `∞ + k = ∞`.
    pub fn plus_int(&self, k: impl Into<BigInt>) -> Self {
        if self.is_infinite() {
            return Self::infinity();
        }
        let k = k.into();
        Self::new(&self.num + k * &self.den, self.den.clone()).expect("finite shift stays valid")
    }

    /// Splits a finite value as `b + f` with `b` integral and `f ∈ [0, 1)`.
    pub fn floor_split(&self) -> Result<(BigInt, Self)> {
        if self.is_infinite() {
            return Err(Error::DegenerateFiber);
        }
        let b = self.num.div_floor(&self.den);
        let frac = Self::new(&self.num - &b * &self.den, self.den.clone())?;
        Ok((b, frac))
    }
}

impl From<i64> for ExtendedRational {
    fn from(v: i64) -> Self {
        Self { num: BigInt::from(v), den: BigInt::one() }
    }
}

impl From<BigInt> for ExtendedRational {
    fn from(v: BigInt) -> Self {
        Self { num: v, den: BigInt::one() }
    }
}

impl From<&BigInt> for ExtendedRational {
    fn from(v: &BigInt) -> Self {
        Self { num: v.clone(), den: BigInt::one() }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for canonical sorting of coefficient multisets; ∞ sorts
/// above every finite value.
impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "1/0")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    /// Parses `"p/q"` or an integer literal; the sign may appear on `p` only
    /// and no whitespace is accepted.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let parse_int = |t: &str, allow_sign: bool| -> Result<BigInt> {
            if t.is_empty() {
                return Err(bad());
            }
            let digits = if allow_sign { t.trim_start_matches(['+', '-']) } else { t };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            BigInt::from_str(t).map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(parse_int(s, true)?.into()),
            Some((p, q)) => {
                let num = parse_int(p, true)?;
                let den = parse_int(q, false)?;
                Self::new(num, den).map_err(|_| bad())
            }
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Class of the lifted meridian `[μ_r] = -p[μ_∞] + q[λ]` for `r = p/q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyPair {
    pub mu_coeff: BigInt,
    pub lambda_coeff: BigInt,
}

/// Lift of a meridian of the rational tangle `R(r)` to the boundary of the
/// branched-cover solid torus: `r = p/q` maps to the pair `(-p, q)`.
pub fn meridian_lift(r: &ExtendedRational) -> HomologyPair {
    HomologyPair { mu_coeff: -r.numer().clone(), lambda_coeff: r.denom().clone() }
}

/// Covering slope of an `s`-untangle surgery in preferred framing: `-s`.
/// Replacing `R(∞)` by itself is not a surgery, so `s = ∞` is rejected.
pub fn covering_slope(s: &ExtendedRational) -> Result<ExtendedRational> {
    if s.is_infinite() {
        return Err(Error::CoveringSlopeInfinite);
    }
    Ok(s.neg())
}
