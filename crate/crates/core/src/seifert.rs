//! Seifert fibered spaces given by unnormalized invariants.
//!
//! A space is written `S²(q_1, ..., q_k)` or `RP²(q_1, ..., q_k)`; an entry
//! `q = p'/q'` describes a fiber of index `|q'|` and `∞` entries mark
//! degenerate (index-0) fibers. The module maps Montesinos(-m) parameter
//! lists to invariants, puts invariants into a canonical form, compares
//! spaces up to the unnormalized-invariant moves, and recognizes lens spaces
//! and connected sums of lens spaces.
//!
//! Conventions (fixed once, used consistently):
//! * `montesinos_to_sfs` sends tangle parameters `r_i` to coefficients
//!   `-1/r_i`; `r_i = 0` yields a degenerate `∞` coefficient.
//! * over S² with no `∞` entry and at most two non-integral fibers the space
//!   is the lens space `L(p, q)` with `p/q = -(Σ q_i)` reduced,
//! * one `∞` entry over S² splits the space along the degenerate fiber: a
//!   finite coefficient `c = cn/cd` contributes the summand `L(cd, -cn)`
//!   (index-1 summands are S³ and are dropped).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::ExtendedRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseSurface {
    #[serde(rename = "S2")]
    Sphere,
    #[serde(rename = "RP2")]
    ProjectivePlane,
}

impl fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSurface::Sphere => write!(f, "S2"),
            BaseSurface::ProjectivePlane => write!(f, "RP2"),
        }
    }
}

/// Unnormalized Seifert invariants: a base surface and a multiset of fiber
/// coefficients. The stored order is the construction order; equality is
/// multiset equality.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeifertInvariants {
    pub base: BaseSurface,
    coeffs: Vec<ExtendedRational>,
}

impl SeifertInvariants {
    pub fn new(base: BaseSurface, coeffs: Vec<ExtendedRational>) -> Self {
        Self { base, coeffs }
    }

    pub fn coeffs(&self) -> &[ExtendedRational] {
        &self.coeffs
    }

    /// True if some fiber is degenerate (an `∞` coefficient).
    pub fn has_degenerate_fiber(&self) -> bool {
        self.coeffs.iter().any(ExtendedRational::is_infinite)
    }

    /// Orientation reversal: negate every coefficient.
    pub fn negated(&self) -> Self {
        Self { base: self.base, coeffs: self.coeffs.iter().map(ExtendedRational::neg).collect() }
    }

    fn sorted_coeffs(&self) -> Vec<ExtendedRational> {
        let mut v = self.coeffs.clone();
        v.sort();
        v
    }
}

impl PartialEq for SeifertInvariants {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.sorted_coeffs() == other.sorted_coeffs()
    }
}

impl Eq for SeifertInvariants {}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.base)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Two-fold branched cover of a Montesinos(-m) link with tangle parameters
/// `r_1, ..., r_k`: the fiber over the i-th tangle has invariant `-1/r_i`.
pub fn montesinos_to_sfs(base: BaseSurface, ratios: &[ExtendedRational]) -> SeifertInvariants {
    let coeffs = ratios.iter().map(|r| r.recip().neg()).collect();
    SeifertInvariants::new(base, coeffs)
}

/// Canonical form under the unnormalized-invariant moves.
///
/// Over S² each coefficient splits as `q_i = b_i + f_i` with `f_i ∈ [0, 1)`;
/// the result carries one integer entry `b = Σ b_i` plus the nonzero
/// fractional parts. Over RP² only the parity of `Σ b_i` is retained next to
/// the fractional parts (the comparison there is deliberately conservative).
/// Degenerate invariants are rejected; route them through [`recognize`].
pub fn normalize(si: &SeifertInvariants) -> Result<SeifertInvariants> {
    if si.has_degenerate_fiber() {
        return Err(Error::DegenerateFiber);
    }
    let mut b_sum = BigInt::zero();
    let mut fracs = Vec::new();
    for c in si.coeffs() {
        let (b, f) = c.floor_split()?;
        b_sum += b;
        if !f.is_zero() {
            fracs.push(f);
        }
    }
    fracs.sort();
    let head = match si.base {
        BaseSurface::Sphere => ExtendedRational::from(b_sum),
        BaseSurface::ProjectivePlane => ExtendedRational::from(b_sum.mod_floor(&BigInt::from(2))),
    };
    let mut coeffs = vec![head];
    coeffs.extend(fracs);
    Ok(SeifertInvariants::new(si.base, coeffs))
}

/// Equality of the underlying spaces up to orientation: canonical forms must
/// agree for `y` or for `y` with all coefficients negated, over the same
/// base. Over RP² this comparison is conservative and may return false
/// negatives; it never claims a false positive.
pub fn is_homeomorphic(x: &SeifertInvariants, y: &SeifertInvariants) -> Result<bool> {
    if x.has_degenerate_fiber() || y.has_degenerate_fiber() {
        return Err(Error::DegenerateFiber);
    }
    if x.base != y.base {
        return Ok(false);
    }
    let nx = normalize(x)?;
    Ok(nx == normalize(y)? || nx == normalize(&y.negated())?)
}

/// Lens space parameters `(p, q)`, kept with `p >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LensParams {
    pub p: BigInt,
    pub q: BigInt,
}

impl LensParams {
    fn normalized(mut p: BigInt, mut q: BigInt) -> Self {
        if p.is_negative() {
            p = -p;
            q = -q;
        }
        if p.is_zero() {
            q = BigInt::one();
        } else if p.is_one() {
            q = BigInt::zero();
        }
        Self { p, q }
    }

    fn to_json(&self) -> Value {
        json!([bigint_json(&self.p), bigint_json(&self.q)])
    }
}

impl fmt::Display for LensParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

fn bigint_json(b: &BigInt) -> Value {
    match i64::try_from(b) {
        Ok(v) => json!(v),
        Err(_) => json!(b.to_string()),
    }
}

/// `L(p, q) ≅ L(p', q')` up to orientation: equal `p` and `q' ≡ ±q^(±1)
/// (mod p).
pub fn lens_equivalent(a: &LensParams, b: &LensParams) -> bool {
    if a.p != b.p {
        return false;
    }
    if a.p.is_zero() || a.p.is_one() {
        return true;
    }
    let p = &a.p;
    let qa = a.q.mod_floor(p);
    let qb = b.q.mod_floor(p);
    if qa == qb || qa == (p - &qb).mod_floor(p) {
        return true;
    }
    let e = qb.extended_gcd(p);
    if !e.gcd.is_one() {
        return false;
    }
    let inv = e.x.mod_floor(p);
    qa == inv || qa == (p - &inv).mod_floor(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SfsClassification {
    /// A single lens space (includes S³ = L(1,0) and S²×S¹ = L(0,1)).
    LensSpace(LensParams),
    /// Connected sum of two or more lens spaces.
    ConnectedSumOfLensSpaces(Vec<LensParams>),
    /// Seifert fibered over S², carrying a canonical (or, when degenerate,
    /// sorted raw) form.
    SeifertOverS2(SeifertInvariants),
    /// Seifert fibered over RP².
    SeifertOverRP2(SeifertInvariants),
}

impl SfsClassification {
    pub fn kind(&self) -> &'static str {
        match self {
            SfsClassification::LensSpace(_) => "LensSpace",
            SfsClassification::ConnectedSumOfLensSpaces(_) => "ConnectedSumOfLensSpaces",
            SfsClassification::SeifertOverS2(_) => "SeifertOverS2",
            SfsClassification::SeifertOverRP2(_) => "SeifertOverRP2",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            SfsClassification::LensSpace(l) => json!({"kind": self.kind(), "lens": [l.to_json()]}),
            SfsClassification::ConnectedSumOfLensSpaces(ls) => {
                json!({"kind": self.kind(), "lens": ls.iter().map(LensParams::to_json).collect::<Vec<_>>()})
            }
            SfsClassification::SeifertOverS2(si) | SfsClassification::SeifertOverRP2(si) => {
                json!({"kind": self.kind(), "canonical": serde_json::to_value(si).unwrap()})
            }
        }
    }
}

fn canonical_or_sorted(si: &SeifertInvariants) -> SeifertInvariants {
    normalize(si).unwrap_or_else(|_| SeifertInvariants::new(si.base, si.sorted_coeffs()))
}

/// Lens parameters of `S²(c_1, ..., c_k)` with every `c_i` finite and at
/// most two of them non-integral: `p/q = -(Σ c_i)`.
fn sphere_lens(coeffs: &[ExtendedRational]) -> LensParams {
    let mut s = ExtendedRational::zero();
    for c in coeffs {
        s = s.checked_add(c).expect("finite by construction");
    }
    LensParams::normalized(-s.numer().clone(), s.denom().clone())
}

/// Classifies a space given by unnormalized invariants.
///
/// Over S²: with no degenerate fiber and at most two non-integral
/// coefficients the space is a lens space; with exactly one degenerate fiber
/// it splits along that fiber into lens summands, one `L(cd, -cn)` per
/// remaining coefficient `cn/cd` of index >= 2. Anything else keeps its
/// generic Seifert tag.
pub fn recognize(si: &SeifertInvariants) -> SfsClassification {
    match si.base {
        BaseSurface::ProjectivePlane => SfsClassification::SeifertOverRP2(canonical_or_sorted(si)),
        BaseSurface::Sphere => {
            let infinite = si.coeffs().iter().filter(|c| c.is_infinite()).count();
            match infinite {
                0 => {
                    let non_integral =
                        si.coeffs().iter().filter(|c| !c.is_integer()).count();
                    if non_integral <= 2 {
                        SfsClassification::LensSpace(sphere_lens(si.coeffs()))
                    } else {
                        SfsClassification::SeifertOverS2(canonical_or_sorted(si))
                    }
                }
                1 => {
                    let summands: Vec<LensParams> = si
                        .coeffs()
                        .iter()
                        .filter(|c| !c.is_infinite() && !c.is_integer())
                        .map(|c| LensParams::normalized(c.denom().clone(), -c.numer().clone()))
                        .collect();
                    match summands.len() {
                        0 => SfsClassification::LensSpace(LensParams::normalized(
                            BigInt::one(),
                            BigInt::zero(),
                        )),
                        1 => SfsClassification::LensSpace(summands.into_iter().next().unwrap()),
                        _ => SfsClassification::ConnectedSumOfLensSpaces(summands),
                    }
                }
                _ => SfsClassification::SeifertOverS2(canonical_or_sorted(si)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> ExtendedRational {
        s.parse().unwrap()
    }

    fn sphere(cs: &[&str]) -> SeifertInvariants {
        SeifertInvariants::new(BaseSurface::Sphere, cs.iter().map(|s| q(s)).collect())
    }

    fn rp2(cs: &[&str]) -> SeifertInvariants {
        SeifertInvariants::new(BaseSurface::ProjectivePlane, cs.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn montesinos_examples() {
        // T(l,n,0)+R(1) parameters at (l,n) = (1,1); second coefficient
        // -1/r_2 with r_2 = 5/-4 reduces to 4/5.
        let ratios = [q("3"), q("-5/4"), q("-2")];
        let si = montesinos_to_sfs(BaseSurface::Sphere, &ratios);
        assert_eq!(si, sphere(&["-1/3", "4/5", "1/2"]));

        let single = montesinos_to_sfs(BaseSurface::Sphere, &[q("-7/3")]);
        assert_eq!(single, sphere(&["3/7"]));

        // T(l,0,p)+R(0) parameters at (l,p) = (1,1): r = (2, 1/2); the
        // direct -1/r values must agree with the displayed RP2 coefficients.
        let ratios = [q("2"), q("1/2")];
        let si = montesinos_to_sfs(BaseSurface::ProjectivePlane, &ratios);
        assert_eq!(si, rp2(&["-1/2", "-2"]));

        // degenerate: r = 0 becomes an ∞ coefficient, never dropped
        let si = montesinos_to_sfs(BaseSurface::Sphere, &[q("0")]);
        assert!(si.has_degenerate_fiber());
    }

    #[test]
    fn normalize_examples() {
        // 3/2 = 1 + 1/2 and -1/3 = -1 + 2/3, so b = 0
        assert_eq!(normalize(&sphere(&["3/2", "-1/3"])).unwrap(), sphere(&["0", "1/2", "2/3"]));
        assert_eq!(normalize(&sphere(&["1/2", "1/3"])).unwrap(), sphere(&["0", "1/2", "1/3"]));
        let x = sphere(&["7/3", "-9/4", "5"]);
        let once = normalize(&x).unwrap();
        assert_eq!(normalize(&once).unwrap(), once);
        assert!(normalize(&sphere(&["1/0"])).is_err());
    }

    #[test]
    fn homeomorphism_examples() {
        assert!(is_homeomorphic(&sphere(&["1/2", "1/3"]), &sphere(&["1/3", "1/2"])).unwrap());
        assert!(!is_homeomorphic(&sphere(&["1/2", "1/3"]), &sphere(&["1/3", "3/2"])).unwrap());
        // shifting +1/-1 between coefficients is a normal-form move
        assert!(is_homeomorphic(&sphere(&["1/2", "1/3"]), &sphere(&["3/2", "-2/3"])).unwrap());
        // orientation reversal is allowed
        assert!(is_homeomorphic(&sphere(&["1/2", "1/3"]), &sphere(&["-1/2", "-1/3"])).unwrap());
        // base mismatch
        assert!(!is_homeomorphic(&sphere(&["1/2"]), &rp2(&["1/2"])).unwrap());
        assert!(is_homeomorphic(&sphere(&["1/0"]), &sphere(&["1/0"])).is_err());
    }

    #[test]
    fn recognize_examples() {
        // single exceptional fiber over S2 is a lens space
        match recognize(&sphere(&["-1/3"])) {
            SfsClassification::LensSpace(l) => {
                assert_eq!((l.p, l.q), (1.into(), 0.into())); // -(Σ) = 1/3, p = 1: S³
            }
            other => panic!("expected lens space, got {other:?}"),
        }

        // one degenerate fiber splits into lens summands
        match recognize(&sphere(&["-1/2", "1/0", "1/3"])) {
            SfsClassification::ConnectedSumOfLensSpaces(ls) => {
                assert_eq!(ls.len(), 2);
                assert_eq!((ls[0].p.clone(), ls[0].q.clone()), (2.into(), 1.into()));
                assert_eq!((ls[1].p.clone(), ls[1].q.clone()), (3.into(), (-1).into()));
            }
            other => panic!("expected connected sum, got {other:?}"),
        }

        // three genuine exceptional fibers stay generic
        assert_eq!(recognize(&sphere(&["1/2", "1/3", "1/5"])).kind(), "SeifertOverS2");
        assert_eq!(recognize(&rp2(&["-1/2", "-2"])).kind(), "SeifertOverRP2");
        // two degenerate fibers are left unclassified
        assert_eq!(recognize(&sphere(&["1/0", "1/0"])).kind(), "SeifertOverS2");
    }

    #[test]
    fn recognize_commutes_with_normalize() {
        for si in [
            sphere(&["1/2", "1/3"]),
            sphere(&["7/3", "-9/4", "5"]),
            sphere(&["1/2", "1/3", "1/5", "-2"]),
            rp2(&["5/2", "-1/3"]),
        ] {
            assert_eq!(recognize(&si), recognize(&normalize(&si).unwrap()), "si = {si}");
        }
    }

    #[test]
    fn lens_equivalence_up_to_orientation() {
        let l = |p: i64, q: i64| LensParams::normalized(p.into(), q.into());
        assert!(lens_equivalent(&l(7, 2), &l(7, 2)));
        assert!(lens_equivalent(&l(7, 2), &l(7, -2))); // mirror
        assert!(lens_equivalent(&l(7, 2), &l(7, 4))); // 4 ≡ 2^{-1} (mod 7)
        assert!(lens_equivalent(&l(7, 2), &l(7, 3))); // 3 ≡ -2^{-1} (mod 7)
        assert!(!lens_equivalent(&l(7, 1), &l(7, 2)));
        assert!(!lens_equivalent(&l(7, 2), &l(5, 2)));
        assert!(lens_equivalent(&l(-2, 3), &l(2, 1))); // L(-2,3) -> L(2,-3) ~ L(2,1)
    }

    #[test]
    fn json_schema() {
        let si = sphere(&["-1/3", "4/5"]);
        let v = serde_json::to_value(&si).unwrap();
        assert_eq!(v, serde_json::json!({"base": "S2", "coeffs": ["-1/3", "4/5"]}));
        let back: SeifertInvariants = serde_json::from_value(v).unwrap();
        assert_eq!(back, si);
        let c = recognize(&sphere(&["-1/2", "1/0", "1/3"]));
        assert_eq!(
            c.to_json(),
            serde_json::json!({"kind": "ConnectedSumOfLensSpaces", "lens": [[2, 1], [3, -1]]})
        );
    }
}
