//! Closed-form constructors for the three surgery families EMI, EMII, EMIII
//! and for reducible torus-knot surgeries.
//!
//! Each constructor returns the surgery vertex (knot + slope) together with
//! the Seifert invariants of the surgered manifold, obtained by pushing the
//! Montesinos(-m) parameter list of the underlying tangle sum through
//! [`montesinos_to_sfs`]. Slopes are the integer covering-slope polynomials:
//!
//! * `γ(l,n,0)   = 12l² - 4l - 36l²n`
//! * `γ(l,0,p)   = 12l² - 4l - 4p(3l-1)`
//! * `γ(l,m,n,0) = l(2m-1)(1-lm) + n(2lm-1)²`
//! * `γ(l,m,0,p) = l(2m-1)(1-lm) + p(2lm-l-1)²`
//!
//! Degenerate parameter values that make a displayed denominator vanish are
//! accepted and produce `∞` coefficients, which [`recognize`] handles; they
//! are legitimate degenerate fibrations, not errors.
//!
//! [`montesinos_to_sfs`]: crate::seifert::montesinos_to_sfs
//! [`recognize`]: crate::seifert::recognize

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::ExtendedRational;
use crate::seifert::{montesinos_to_sfs, BaseSurface, SeifertInvariants};

/// Knot underlying a surgery vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotId {
    Em1 { l: i64, n: i64, p: i64 },
    Em2 { l: i64, m: i64, n: i64, p: i64 },
    Em3 { a1: ExtendedRational, a2: ExtendedRational, a3: ExtendedRational },
    Torus { p: BigInt, q: BigInt },
    Unknot,
    /// Interior vertex of a Hopf-pair twist sequence: the knot has no name,
    /// only the pair of surgeries still to be performed.
    HopfIntermediate { a: ExtendedRational, b: ExtendedRational },
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotId::Em1 { l, n, p } => write!(f, "EM1({l},{n},{p})"),
            KnotId::Em2 { l, m, n, p } => write!(f, "EM2({l},{m},{n},{p})"),
            KnotId::Em3 { a1, a2, a3 } => write!(f, "EM3({a1},{a2},{a3})"),
            KnotId::Torus { p, q } => write!(f, "Torus({p},{q})"),
            KnotId::Unknot => write!(f, "O"),
            KnotId::HopfIntermediate { a, b } => write!(f, "Hopf({a},{b})"),
        }
    }
}

impl KnotId {
    pub fn to_json(&self) -> Value {
        match self {
            KnotId::Em1 { l, n, p } => json!({"family": "EM1", "l": l, "n": n, "p": p}),
            KnotId::Em2 { l, m, n, p } => {
                json!({"family": "EM2", "l": l, "m": m, "n": n, "p": p})
            }
            KnotId::Em3 { a1, a2, a3 } => json!({
                "family": "EM3",
                "a1": a1.to_string(), "a2": a2.to_string(), "a3": a3.to_string()
            }),
            KnotId::Torus { p, q } => {
                json!({"family": "Torus", "p": p.to_string(), "q": q.to_string()})
            }
            KnotId::Unknot => json!({"family": "O"}),
            KnotId::HopfIntermediate { a, b } => json!({
                "family": "Hopf", "a": a.to_string(), "b": b.to_string()
            }),
        }
    }
}

/// Surgery slope of a vertex. Family slopes are integers; the EMIII slope is
/// carried symbolically (the covering slope of the (-1)-untangle surgery has
/// no closed form in preferred framing) and interior Hopf vertices carry no
/// slope claim at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slope {
    Rational(ExtendedRational),
    Gamma,
    Unlabeled,
}

impl Slope {
    pub fn as_rational(&self) -> Option<&ExtendedRational> {
        match self {
            Slope::Rational(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Rational(r) => write!(f, "{r}"),
            Slope::Gamma => write!(f, "gamma"),
            Slope::Unlabeled => write!(f, "unknown"),
        }
    }
}

/// A Seifert surgery `(K, m)`: a vertex of the network.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryVertex {
    pub knot: KnotId,
    pub slope: Slope,
}

impl SurgeryVertex {
    pub fn new(knot: KnotId, slope: Slope) -> Self {
        Self { knot, slope }
    }

    /// Canonical vertex string, e.g. `EM1(1,1,0)@-28` or `Torus(3,-2)@-6`.
    pub fn id(&self) -> String {
        format!("{}@{}", self.knot, self.slope)
    }

    pub fn to_json(&self) -> Value {
        json!({"id": self.id(), "knot": self.knot.to_json(), "slope": self.slope.to_string()})
    }
}

impl fmt::Display for SurgeryVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// A vertex together with the invariants of the surgered manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryResult {
    pub vertex: SurgeryVertex,
    pub space: SeifertInvariants,
}

impl SurgeryResult {
    pub fn to_json(&self) -> Value {
        let mut v = self.vertex.to_json();
        let obj = v.as_object_mut().unwrap();
        obj.insert("space".into(), serde_json::to_value(&self.space).unwrap());
        obj.insert("classification".into(), crate::seifert::recognize(&self.space).to_json());
        v
    }
}

fn b(v: i64) -> BigInt {
    BigInt::from(v)
}

fn frac(num: BigInt, den: BigInt) -> Result<ExtendedRational> {
    ExtendedRational::new(num, den)
}

/// `γ(l,n,p)` on the two trivializable branches; the branches agree at
/// `n = p = 0`.
fn em1_gamma(l: i64, n: i64, p: i64) -> BigInt {
    let (l, n, p) = (b(l), b(n), b(p));
    if p.is_zero() {
        12 * &l * &l - 4 * &l - 36 * &l * &l * &n
    } else {
        12 * &l * &l - 4 * &l - 4 * &p * (3 * &l - 1)
    }
}

fn em2_gamma(l: i64, m: i64, n: i64, p: i64) -> BigInt {
    let (l, m, n, p) = (b(l), b(m), b(n), b(p));
    let base = &l * (2 * &m - 1) * (1 - &l * &m);
    if p.is_zero() {
        let t = 2 * &l * &m - 1;
        base + &n * &t * &t
    } else {
        let t = 2 * &l * &m - &l - 1;
        base + &p * &t * &t
    }
}

/// EMI vertex `(K(l,n,p), γ)` or `(K(l,n,p), γ-1)`.
///
/// Requires `n`, `p` not both nonzero. The surgered manifold is the double
/// branched cover of the Montesinos(-m) link obtained by the 0- (resp. 1-)
/// untangle replacement, fibered over RP² (resp. over S² with a -1/3 fiber).
pub fn em1_vertex(l: i64, n: i64, p: i64, minus_one: bool) -> Result<SurgeryResult> {
    if n != 0 && p != 0 {
        return Err(Error::NotTrivializable);
    }
    let slope = em1_gamma(l, n, p) - if minus_one { BigInt::one() } else { BigInt::zero() };
    let (lb, nb, pb) = (b(l), b(n), b(p));
    let space = if p == 0 {
        if !minus_one {
            let r1 = frac(9 * &lb * &nb - 3 * &lb + 1, 6 * &lb * &nb - 2 * &lb - &nb + 1)?;
            let r2 = ExtendedRational::from(lb);
            montesinos_to_sfs(BaseSurface::ProjectivePlane, &[r1, r2])
        } else {
            let r2 = frac(9 * &lb * &nb - 3 * &lb - 3 * &nb + 2, -6 * &lb * &nb + 2 * &lb + &nb - 1)?;
            let r3 = frac(&lb + 1, -&lb)?;
            montesinos_to_sfs(BaseSurface::Sphere, &[ExtendedRational::from(3), r2, r3])
        }
    } else if !minus_one {
        let r1 = frac(3 * &lb - 1, 2 * &lb - 1)?;
        let r2 = frac(3 * &lb * &pb - &lb - &pb, 3 * &pb - 1)?;
        montesinos_to_sfs(BaseSurface::ProjectivePlane, &[r1, r2])
    } else {
        let r2 = frac(3 * &lb - 2, -2 * &lb + 1)?;
        let r3 = frac(3 * &lb * &pb - &lb + 2 * &pb - 1, -3 * &lb * &pb + &lb + &pb)?;
        montesinos_to_sfs(BaseSurface::Sphere, &[ExtendedRational::from(3), r2, r3])
    };
    let knot = if l == 0 && n == 0 && p == 0 { KnotId::Unknot } else { KnotId::Em1 { l, n, p } };
    Ok(SurgeryResult {
        vertex: SurgeryVertex::new(knot, Slope::Rational(slope.into())),
        space,
    })
}

/// EMII vertex `(K(l,m,n,p), γ)` or `(K(l,m,n,p), γ-1)`; `K(l,1,0,0)` is the
/// torus knot `T(l, 1-l)` and is tagged as such.
pub fn em2_vertex(l: i64, m: i64, n: i64, p: i64, minus_one: bool) -> Result<SurgeryResult> {
    if n != 0 && p != 0 {
        return Err(Error::NotTrivializable);
    }
    let slope = em2_gamma(l, m, n, p) - if minus_one { BigInt::one() } else { BigInt::zero() };
    let (lb, mb, nb, pb) = (b(l), b(m), b(n), b(p));
    let space = if p == 0 {
        if !minus_one {
            let r1 = ExtendedRational::from(&lb - 1);
            let r2 = frac(2 * &mb * &nb - &mb - &nb + 1, 4 * &mb * &nb - 2 * &mb + 1)?;
            let r3 = frac(&lb * &mb + &mb - 1, -&mb)?;
            montesinos_to_sfs(BaseSurface::Sphere, &[r1, r2, r3])
        } else {
            let r1 = ExtendedRational::from(&lb + 1);
            let r2 = frac(-2 * &mb * &nb + &mb - &nb, 4 * &mb * &nb - 2 * &mb + 1)?;
            let r3 = frac(-&lb * &mb + &mb + 1, mb.clone())?;
            montesinos_to_sfs(BaseSurface::Sphere, &[r1, r2, r3])
        }
    } else if !minus_one {
        let r1 = ExtendedRational::from(&lb - 1);
        let r2 = frac(
            2 * &lb * &mb * &pb - &lb * &mb - &lb * &pb + 2 * &mb * &pb - &mb - 3 * &pb + 1,
            -2 * &mb * &pb + &mb + &pb,
        )?;
        let r3 = frac(&mb - 1, 2 * &mb - 1)?;
        montesinos_to_sfs(BaseSurface::Sphere, &[r1, r2, r3])
    } else {
        let r1 = ExtendedRational::from(&lb + 1);
        let r2 = frac(
            2 * &lb * &mb * &pb - &lb * &mb - &lb * &pb - 2 * &mb * &pb + &mb - &pb + 1,
            -2 * &mb * &pb + &mb + &pb,
        )?;
        let r3 = frac(-&mb, 2 * &mb - 1)?;
        montesinos_to_sfs(BaseSurface::Sphere, &[r1, r2, r3])
    };
    let knot = if m == 1 && n == 0 && p == 0 {
        KnotId::Torus { p: b(l), q: b(1 - l) }
    } else {
        KnotId::Em2 { l, m, n, p }
    };
    Ok(SurgeryResult {
        vertex: SurgeryVertex::new(knot, Slope::Rational(slope.into())),
        space,
    })
}

/// Which trivializing condition a parameter triple satisfies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Em3Case {
    /// `a3 = 1/n` and `|n·α1·α2 + α1·β2 + β1·α2| = 1`.
    CaseI { n: BigInt },
    /// `a1 = 1/p` (or `a2`, when `swapped`) and
    /// `|p·α2·α3 + α2·β3 + β2·α3| = 1`.
    CaseII { p: BigInt, swapped: bool },
}

fn check_em3_exclusions(
    a1: &ExtendedRational,
    a2: &ExtendedRational,
    a3: &ExtendedRational,
) -> Result<()> {
    let inf = ExtendedRational::infinity();
    let zero = ExtendedRational::zero();
    let one = ExtendedRational::from(1);
    let two = ExtendedRational::from(2);
    for (name, v) in [("a1", a1), ("a2", a2)] {
        if *v == inf || *v == zero || *v == one || *v == two {
            return Err(Error::ExcludedParameter(name, v.to_string()));
        }
    }
    let minus_one = ExtendedRational::from(-1);
    let minus_half = ExtendedRational::new(-1, 2).unwrap();
    if *a3 == inf || *a3 == zero || *a3 == one || *a3 == minus_one || *a3 == minus_half || *a3 == two
    {
        return Err(Error::ExcludedParameter("a3", a3.to_string()));
    }
    Ok(())
}

/// `v = 1/k` for some integer `k`? Returns `k`.
fn as_unit_fraction(v: &ExtendedRational) -> Option<BigInt> {
    if !v.is_infinite() && v.numer().abs().is_one() {
        Some(v.numer() * v.denom())
    } else {
        None
    }
}

/// `|k·αx·αy + αx·βy + βx·αy|` for `x = αx/βx`, `y = αy/βy`.
fn em3_identity(k: &BigInt, x: &ExtendedRational, y: &ExtendedRational) -> BigInt {
    (k * x.numer() * y.numer() + x.numer() * y.denom() + x.denom() * y.numer()).abs()
}

/// Reports which trivializing condition holds (exclusions of the family
/// enforced first). Condition (ii) is tried with the given order, then with
/// `a1` and `a2` interchanged, then condition (i); `Ok(None)` means the
/// untangle replacement does not produce a trivial knot.
pub fn em3_trivializable(
    a1: &ExtendedRational,
    a2: &ExtendedRational,
    a3: &ExtendedRational,
) -> Result<Option<Em3Case>> {
    check_em3_exclusions(a1, a2, a3)?;
    if let Some(p) = as_unit_fraction(a1) {
        if em3_identity(&p, a2, a3).is_one() {
            return Ok(Some(Em3Case::CaseII { p, swapped: false }));
        }
    }
    if let Some(p) = as_unit_fraction(a2) {
        if em3_identity(&p, a1, a3).is_one() {
            return Ok(Some(Em3Case::CaseII { p, swapped: true }));
        }
    }
    if let Some(n) = as_unit_fraction(a3) {
        if em3_identity(&n, a1, a2).is_one() {
            return Ok(Some(Em3Case::CaseI { n }));
        }
    }
    Ok(None)
}

/// EMIII vertex `(K(a1,a2,a3), γ)`: the surgered manifold is the double
/// cover of the Montesinos link
/// `M((α1-2β1)/β1, (α2-2β2)/β2, (α3+β3)/β3)`; the slope stays symbolic.
pub fn em3_vertex(
    a1: &ExtendedRational,
    a2: &ExtendedRational,
    a3: &ExtendedRational,
) -> Result<SurgeryResult> {
    em3_trivializable(a1, a2, a3)?.ok_or(Error::NoTrivializingCase)?;
    let r1 = frac(a1.numer() - 2 * a1.denom(), a1.denom().clone())?;
    let r2 = frac(a2.numer() - 2 * a2.denom(), a2.denom().clone())?;
    let r3 = frac(a3.numer() + a3.denom(), a3.denom().clone())?;
    let space = montesinos_to_sfs(BaseSurface::Sphere, &[r1, r2, r3]);
    Ok(SurgeryResult {
        vertex: SurgeryVertex::new(
            KnotId::Em3 { a1: a1.clone(), a2: a2.clone(), a3: a3.clone() },
            Slope::Gamma,
        ),
        space,
    })
}

/// Surgery description of an EMIII vertex: coefficients on the four-component
/// link `a ∪ b ∪ c ∪ k`; the `k`-coefficient is always -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryDescription {
    pub a: ExtendedRational,
    pub b: ExtendedRational,
    pub c: ExtendedRational,
    pub k: ExtendedRational,
}

impl SurgeryDescription {
    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.to_string(), "b": self.b.to_string(),
            "c": self.c.to_string(), "k": self.k.to_string(),
        })
    }
}

impl fmt::Display for SurgeryDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a,b,c,k; {}, {}, {}, {})", self.a, self.b, self.c, self.k)
    }
}

/// Case (i): `(a, b, c; -a1, -a2, n)`; case (ii): `(a, b, c; -1/p, -a2,
/// β3/α3)` with `a1` and `a2` interchanged first when the swapped condition
/// matched.
pub fn em3_surgery_description(
    a1: &ExtendedRational,
    a2: &ExtendedRational,
    a3: &ExtendedRational,
) -> Result<SurgeryDescription> {
    let case = em3_trivializable(a1, a2, a3)?.ok_or(Error::NoTrivializingCase)?;
    let k = ExtendedRational::from(-1);
    Ok(match case {
        Em3Case::CaseI { n } => SurgeryDescription {
            a: a1.neg(),
            b: a2.neg(),
            c: ExtendedRational::from(n),
            k,
        },
        Em3Case::CaseII { swapped, .. } => {
            let (unit, other) = if swapped { (a2, a1) } else { (a1, a2) };
            SurgeryDescription { a: unit.neg(), b: other.neg(), c: a3.recip(), k }
        }
    })
}

/// The reducible surgery `(T(p,q), pq)`: the surgered manifold is
/// `L(p,q) # L(q,p)`, encoded as `S²(-q/p, -p/q, ∞)` with a degenerate fiber.
pub fn torus_reducible_surgery(p: i64, q: i64) -> Result<SurgeryResult> {
    if p.unsigned_abs() < 2 || q.unsigned_abs() < 2 || b(p).gcd(&b(q)) != BigInt::one() {
        return Err(Error::InvalidTorusParameters);
    }
    let space = SeifertInvariants::new(
        BaseSurface::Sphere,
        vec![frac(b(-q), b(p))?, frac(b(-p), b(q))?, ExtendedRational::infinity()],
    );
    Ok(SurgeryResult {
        vertex: SurgeryVertex::new(
            KnotId::Torus { p: b(p), q: b(q) },
            Slope::Rational((b(p) * b(q)).into()),
        ),
        space,
    })
}
