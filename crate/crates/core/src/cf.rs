//! Continued-fraction presentation of rational tangle parameters.
//!
//! A tangle word `[a_1, ..., a_n]` evaluates to
//! `r = a_n + 1/(a_{n-1} + 1/( ... + 1/a_1))` with `a_1` innermost; the last
//! term may be 0 and evaluation is total over Q ∪ {∞}.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::ExtendedRational;

/// Nonempty twist word `[a_1, ..., a_n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    terms: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<impl Into<BigInt>>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptyContinuedFraction);
        }
        Ok(Self { terms: terms.into_iter().map(Into::into).collect() })
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// Evaluates the nested fraction; `1/0 = ∞`, `a + ∞ = ∞` and `1/∞ = 0`
    /// make this total.
    pub fn eval(&self) -> ExtendedRational {
        let mut value = ExtendedRational::from(&self.terms[0]);
        for a in &self.terms[1..] {
            value = value.recip().plus_int(a.clone());
        }
        value
    }

    /// Canonical expansion of a finite rational, inverse to [`eval`]:
    /// integer parts are emitted from the outermost position by repeated
    /// floor division, so every intermediate value stays finite.
    ///
    /// [`eval`]: ContinuedFraction::eval
    pub fn expand(r: &ExtendedRational) -> Result<Self> {
        if r.is_infinite() {
            return Err(Error::ExpandInfinite);
        }
        let mut outer_first = Vec::new();
        let mut rest = r.clone();
        loop {
            let (b, frac) = rest.floor_split().expect("intermediate values are finite");
            outer_first.push(b);
            if frac.is_zero() {
                break;
            }
            rest = frac.recip();
        }
        outer_first.reverse();
        Ok(Self { terms: outer_first })
    }
}
