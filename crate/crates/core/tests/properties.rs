//! Property suites for the algebraic invariants of the calculus.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

use ssn_core::{
    annular_twist, decompose, hopf_twist_a, hopf_twist_b, is_homeomorphic, meridian_lift,
    montesinos_to_sfs, normalize, recognize, BaseSurface, ContinuedFraction, ExtendedRational,
    HopfPairState, SeifertInvariants,
};

fn rational() -> impl Strategy<Value = ExtendedRational> {
    (-1_000_000i64..=1_000_000, 1i64..=1_000_000)
        .prop_map(|(p, q)| ExtendedRational::new(p, q).unwrap())
}

fn small_rational() -> impl Strategy<Value = ExtendedRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| ExtendedRational::new(p, q).unwrap())
}

fn invariants() -> impl Strategy<Value = SeifertInvariants> {
    (prop::bool::ANY, prop::collection::vec(small_rational(), 0..5)).prop_map(|(rp2, cs)| {
        let base = if rp2 { BaseSurface::ProjectivePlane } else { BaseSurface::Sphere };
        SeifertInvariants::new(base, cs)
    })
}

proptest! {
    #[test]
    fn cf_roundtrip(r in rational()) {
        let e = ContinuedFraction::expand(&r).unwrap();
        prop_assert_eq!(e.eval(), r);
    }

    #[test]
    fn cf_local_recurrence(terms in prop::collection::vec(-9i64..=9, 2..8)) {
        let whole = ContinuedFraction::new(terms.clone()).unwrap().eval();
        let head = ContinuedFraction::new(terms[..terms.len() - 1].to_vec()).unwrap().eval();
        let last = terms[terms.len() - 1];
        prop_assert_eq!(whole, head.recip().plus_int(last));
    }

    #[test]
    fn addition_is_commutative_and_associative(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.checked_add(&b).unwrap(), b.checked_add(&a).unwrap());
        let left = a.checked_add(&b).unwrap().checked_add(&c).unwrap();
        let right = a.checked_add(&b.checked_add(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normalization_is_idempotent(p in -1_000_000i64..=1_000_000, q in 1i64..=1_000_000) {
        let r = ExtendedRational::new(p, q).unwrap();
        let again = ExtendedRational::new(r.numer().clone(), r.denom().clone()).unwrap();
        prop_assert_eq!(r, again);
    }

    #[test]
    fn meridian_lift_is_coprime(r in rational()) {
        let lift = meridian_lift(&r);
        use num_integer::Integer;
        prop_assert!(lift.mu_coeff.gcd(&lift.lambda_coeff).is_one());
    }

    #[test]
    fn montesinos_coefficients(ratios in prop::collection::vec(small_rational(), 1..5)) {
        let si = montesinos_to_sfs(BaseSurface::Sphere, &ratios);
        prop_assert_eq!(si.coeffs().len(), ratios.len());
        for (c, r) in si.coeffs().iter().zip(&ratios) {
            prop_assert_eq!(c.clone(), r.recip().neg());
        }
    }

    #[test]
    fn normalize_idempotent_and_recognize_stable(si in invariants()) {
        let n1 = normalize(&si).unwrap();
        prop_assert_eq!(normalize(&n1).unwrap(), n1.clone());
        prop_assert_eq!(recognize(&si), recognize(&n1));
    }

    #[test]
    fn homeomorphism_is_reflexive_symmetric_and_move_invariant(si in invariants()) {
        prop_assert!(is_homeomorphic(&si, &si).unwrap());

        // permutation invariance
        let mut rev = si.coeffs().to_vec();
        rev.reverse();
        let permuted = SeifertInvariants::new(si.base, rev);
        prop_assert!(is_homeomorphic(&si, &permuted).unwrap());
        prop_assert!(is_homeomorphic(&permuted, &si).unwrap());

        // moving +1/-1 between two coefficients (sphere base move)
        if si.base == BaseSurface::Sphere && si.coeffs().len() >= 2 {
            let mut shifted = si.coeffs().to_vec();
            shifted[0] = shifted[0].plus_int(1);
            shifted[1] = shifted[1].plus_int(-1);
            let moved = SeifertInvariants::new(si.base, shifted);
            prop_assert!(is_homeomorphic(&si, &moved).unwrap());
        }
    }

    #[test]
    fn hopf_twists_preserve_determinant(
        a in small_rational(),
        b in small_rational(),
        counts in prop::collection::vec((-50i64..=50, prop::bool::ANY), 1..12),
    ) {
        let mut st = HopfPairState::new(a, b);
        let d0 = st.determinant().abs();
        for (m, along_a) in counts {
            st = if along_a { hopf_twist_a(&st, m) } else { hopf_twist_b(&st, m) };
            prop_assert_eq!(st.determinant().abs(), d0.clone());
        }
    }

    #[test]
    fn decompose_replay_reaches_trivial(
        counts in prop::collection::vec(-9i64..=9, 0..10),
    ) {
        // generate a unimodular state by twisting (∞, ∞); |det| is preserved
        let mut st = HopfPairState::new(ExtendedRational::infinity(), ExtendedRational::infinity());
        for (i, m) in counts.iter().enumerate() {
            st = if i % 2 == 0 { hopf_twist_a(&st, *m) } else { hopf_twist_b(&st, *m) };
        }
        prop_assert!(st.determinant().abs().is_one());
        let seq = decompose(&st).unwrap();
        prop_assert!(seq.is_well_formed());
        prop_assert!(seq.apply(&st).is_trivial());
    }

    #[test]
    fn annular_twist_slopes_sum(p in prop::sample::select(vec![-9i64, -3, -1, 1, 2, 8]), l in -6i64..=6) {
        let s = annular_twist(p, l).unwrap();
        let sum = s.c1_slope.checked_add(&s.c2_slope).unwrap();
        prop_assert_eq!(sum, ExtendedRational::from(2 * l));
        let r = annular_twist(-p, l).unwrap();
        prop_assert_eq!((r.c1_slope, r.c2_slope), (s.c2_slope, s.c1_slope));
    }
}

#[test]
fn covering_slope_is_an_involution() {
    for p in -20i64..=20 {
        for q in 1i64..=20 {
            let s = ExtendedRational::new(p, q).unwrap();
            let c = ssn_core::covering_slope(&s).unwrap();
            assert_eq!(ssn_core::covering_slope(&c).unwrap(), s);
        }
    }
}

#[test]
fn meridian_lift_of_infinity() {
    let lift = meridian_lift(&ExtendedRational::infinity());
    assert_eq!(lift.mu_coeff, BigInt::from(-1));
    assert_eq!(lift.lambda_coeff, BigInt::from(0));
}
