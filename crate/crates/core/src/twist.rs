//! Twist transformation rules: annular-pair twists, Hopf-pair coefficient
//! maps, the Euclidean decomposition of a unimodular surgery pair into
//! alternate twists, and seiferter slope bookkeeping.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::ExtendedRational;

/// The pair of surgeries realizing a `p`-twist along an annular pair with
/// linking number `l`: `(-1/p + l, 1/p + l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnularTwistSurgeries {
    pub c1_slope: ExtendedRational,
    pub c2_slope: ExtendedRational,
}

pub fn annular_twist(p: i64, l: i64) -> Result<AnnularTwistSurgeries> {
    if p == 0 {
        return Err(Error::ZeroAnnularTwist);
    }
    let (p, l) = (BigInt::from(p), BigInt::from(l));
    Ok(AnnularTwistSurgeries {
        c1_slope: ExtendedRational::new(&l * &p - 1, p.clone())?,
        c2_slope: ExtendedRational::new(&l * &p + 1, p)?,
    })
}

/// Surgery coefficients `(x/y, s/t)` remaining on a Hopf link `a ∪ b`.
/// Coefficients are kept as canonical extended rationals; the determinant
/// `x·s - y·t` is then well defined up to sign, and only `|det|` matters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfPairState {
    pub a_coeff: ExtendedRational,
    pub b_coeff: ExtendedRational,
}

impl HopfPairState {
    pub fn new(a_coeff: ExtendedRational, b_coeff: ExtendedRational) -> Self {
        Self { a_coeff, b_coeff }
    }

    pub fn determinant(&self) -> BigInt {
        self.a_coeff.numer() * self.b_coeff.numer()
            - self.a_coeff.denom() * self.b_coeff.denom()
    }

    pub fn is_trivial(&self) -> bool {
        self.a_coeff.is_infinite() && self.b_coeff.is_infinite()
    }
}

impl fmt::Display for HopfPairState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a_coeff, self.b_coeff)
    }
}

/// `m`-twist along `a`: `(x/y, s/t) -> (x/(y + mx), (s + mt)/t)`.
/// The determinant is preserved up to sign.
pub fn hopf_twist_a(state: &HopfPairState, m: impl Into<BigInt>) -> HopfPairState {
    let m = m.into();
    let (x, y) = (state.a_coeff.numer(), state.a_coeff.denom());
    let (s, t) = (state.b_coeff.numer(), state.b_coeff.denom());
    HopfPairState {
        a_coeff: ExtendedRational::new(x.clone(), y + &m * x).expect("x, y never both zero"),
        b_coeff: ExtendedRational::new(s + &m * t, t.clone()).expect("s, t never both zero"),
    }
}

/// `n`-twist along `b`: `(x/y, s/t) -> ((x + ny)/y, s/(t + ns))`.
pub fn hopf_twist_b(state: &HopfPairState, n: impl Into<BigInt>) -> HopfPairState {
    let n = n.into();
    let (x, y) = (state.a_coeff.numer(), state.a_coeff.denom());
    let (s, t) = (state.b_coeff.numer(), state.b_coeff.denom());
    HopfPairState {
        a_coeff: ExtendedRational::new(x + &n * y, y.clone()).expect("x, y never both zero"),
        b_coeff: ExtendedRational::new(s.clone(), t + &n * s).expect("s, t never both zero"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HopfComponent {
    A,
    B,
}

impl fmt::Display for HopfComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfComponent::A => write!(f, "A"),
            HopfComponent::B => write!(f, "B"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistStep {
    pub component: HopfComponent,
    pub count: BigInt,
}

/// Alternating twist word realizing a pair of surgeries; components strictly
/// alternate and only the final count may be 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwistSequence {
    steps: Vec<TwistStep>,
}

impl TwistSequence {
    pub fn steps(&self) -> &[TwistStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Alternation and nonzero-count contract.
    pub fn is_well_formed(&self) -> bool {
        for w in self.steps.windows(2) {
            if w[0].component == w[1].component {
                return false;
            }
        }
        self.steps
            .iter()
            .enumerate()
            .all(|(i, s)| !s.count.is_zero() || i + 1 == self.steps.len())
    }

    /// Applies the steps to a state in order.
    pub fn apply(&self, state: &HopfPairState) -> HopfPairState {
        let mut st = state.clone();
        for step in &self.steps {
            st = match step.component {
                HopfComponent::A => hopf_twist_a(&st, step.count.clone()),
                HopfComponent::B => hopf_twist_b(&st, step.count.clone()),
            };
        }
        st
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.steps
                .iter()
                .map(|s| {
                    let count = i64::try_from(&s.count)
                        .map(serde_json::Value::from)
                        .unwrap_or_else(|_| serde_json::Value::from(s.count.to_string()));
                    serde_json::json!({"component": s.component.to_string(), "count": count})
                })
                .collect(),
        )
    }
}

/// Nearest-integer quotient of `a/b` (ties toward zero), `b != 0`.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if 2u8 * r.abs() > b.abs() {
        if (r.sign() == num_bigint::Sign::Minus) == (b.sign() == num_bigint::Sign::Minus) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn sign_of(v: &BigInt) -> BigInt {
    if v.is_negative() {
        BigInt::from(-1)
    } else {
        BigInt::one()
    }
}

/// Euclidean decomposition of a unimodular surgery pair on a Hopf link into
/// alternate twists starting with component A; replaying the result through
/// [`hopf_twist_a`]/[`hopf_twist_b`] drives the state to `(∞, ∞)`.
///
/// The twist counts are the nearest-integer quotients of the Euclidean
/// algorithm on `(x, y)`, adjusted to unit steps where the raw quotient
/// would vanish so that every count except the last is nonzero.
pub fn decompose(state: &HopfPairState) -> Result<TwistSequence> {
    let det = state.determinant();
    if !det.abs().is_one() {
        return Err(Error::NonUnimodularPair(det.to_string()));
    }
    let mut steps: Vec<TwistStep> = Vec::new();
    let mut st = state.clone();
    if st.is_trivial() {
        return Ok(TwistSequence { steps });
    }

    let push_a = |st: &mut HopfPairState, steps: &mut Vec<TwistStep>, m: BigInt| {
        *st = hopf_twist_a(st, m.clone());
        steps.push(TwistStep { component: HopfComponent::A, count: m });
    };
    let push_b = |st: &mut HopfPairState, steps: &mut Vec<TwistStep>, n: BigInt| {
        *st = hopf_twist_b(st, n.clone());
        steps.push(TwistStep { component: HopfComponent::B, count: n });
    };

    if st.a_coeff.is_infinite() {
        // already at x/y = ∞ but b still needs work: a fixed 4-step detour
        // (A,1)(B,-2)(A,1) returns the first coefficient to ∞ with all
        // counts nonzero, leaving the final B step to clean up.
        push_a(&mut st, &mut steps, BigInt::one());
        push_b(&mut st, &mut steps, BigInt::from(-2));
        push_a(&mut st, &mut steps, BigInt::one());
    } else {
        let mut expect_a = true;
        while !st.a_coeff.is_infinite() {
            let x = st.a_coeff.numer().clone();
            let y = st.a_coeff.denom().clone();
            if expect_a {
                // choose m so that y + mx shrinks; a unit step when the
                // rounded quotient vanishes
                let m = if x.is_zero() {
                    BigInt::one()
                } else {
                    let q = round_div(&y, &x);
                    if q.is_zero() {
                        -sign_of(&x)
                    } else {
                        -q
                    }
                };
                push_a(&mut st, &mut steps, m);
            } else {
                // y >= 1 here; never let x + ny reach 0 (that would stall
                // the next A step), which can only happen when y = 1
                let n = if y.is_one() {
                    if x.is_one() {
                        BigInt::from(-2)
                    } else {
                        BigInt::one() - &x
                    }
                } else {
                    let q = round_div(&x, &y);
                    if q.is_zero() {
                        -sign_of(&x)
                    } else {
                        -q
                    }
                };
                push_b(&mut st, &mut steps, n);
            }
            expect_a = !expect_a;
        }
    }

    // the first coefficient is ∞ and |det| = 1 forces |s| = 1; one final B
    // twist (count possibly 0) sends s/t to ∞
    let s = st.b_coeff.numer().clone();
    let t = st.b_coeff.denom().clone();
    debug_assert!(s.abs().is_one(), "unimodularity must pin the residual coefficient");
    push_b(&mut st, &mut steps, -(&t * &s));
    debug_assert!(st.is_trivial());
    Ok(TwistSequence { steps })
}

/// Covering slope of an untangle parameter after an `n`-twist along the
/// seiferter: the parameter `s` shifts to `1/(1/s + n)` and the covering
/// slope is its negative. With `s = ∞` (no replacement) an `n`-twist gives
/// the slope `-1/n`.
pub fn seiferter_twist_slope(s: &ExtendedRational, n: i64) -> ExtendedRational {
    s.recip().plus_int(n).recip().neg()
}
