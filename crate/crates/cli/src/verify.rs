//! Cross-consistency suite behind `ssn verify`.
//!
//! Every invariant of the invariant/twist/family/network modules is checked
//! over the default desk-scale ranges (l, m, n, p in [-10, 10] unless a
//! check names its own range, degenerate denominators skipped). Checks run
//! in a fixed order; each prints one PASS/FAIL line and failures list the
//! parameter values that broke the identity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ssn_core::{
    annular_twist, covering_slope, decompose, em1_path, em1_vertex, em2_path, em2_vertex,
    em3_anchor, em3_trivializable, export_graph, hopf_twist_a, hopf_twist_b, is_homeomorphic,
    lens_equivalent, meridian_lift, montesinos_to_sfs, normalize, recognize,
    torus_reducible_surgery, BaseSurface, ContinuedFraction, ExtendedRational, GraphFamily,
    GraphFormat, GraphSpec, HopfPairState, KnotId, LensParams, ParamRange, SeifertInvariants,
    SfsClassification, Slope,
};

fn rng_for(check: &str) -> ChaCha8Rng {
    let mut seed = 0xD1CE_5EEDu64;
    for b in check.bytes() {
        seed = seed.wrapping_mul(0x100_0000_01b3).wrapping_add(b as u64);
    }
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(p: i64, d: i64) -> ExtendedRational {
    ExtendedRational::new(p, d).unwrap()
}

fn random_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> ExtendedRational {
    q(rng.random_range(-num..=num), rng.random_range(1..=den))
}

fn slope_int(v: &ssn_core::SurgeryVertex) -> BigInt {
    match &v.slope {
        Slope::Rational(r) => r.numer().clone(),
        other => panic!("expected numeric slope, got {other:?}"),
    }
}

fn gamma1(l: i128, n: i128, p: i128) -> i128 {
    if p == 0 {
        12 * l * l - 4 * l - 36 * l * l * n
    } else {
        12 * l * l - 4 * l - 4 * p * (3 * l - 1)
    }
}

fn gamma2(l: i128, m: i128, n: i128, p: i128) -> i128 {
    let base = l * (2 * m - 1) * (1 - l * m);
    if p == 0 {
        base + n * (2 * l * m - 1) * (2 * l * m - 1)
    } else {
        base + p * (2 * l * m - l - 1) * (2 * l * m - l - 1)
    }
}

fn check_cf_roundtrip() -> Vec<String> {
    let mut rng = rng_for("cf");
    let mut fails = Vec::new();
    for _ in 0..10_000 {
        let r = random_rational(&mut rng, 1_000_000, 1_000_000);
        let e = ContinuedFraction::expand(&r).unwrap();
        if e.eval() != r {
            fails.push(format!("round trip broke at r = {r}"));
        }
    }
    fails
}

fn check_cf_recurrence() -> Vec<String> {
    let mut rng = rng_for("cf-rec");
    let mut fails = Vec::new();
    for _ in 0..2_000 {
        let len = rng.random_range(2..8usize);
        let terms: Vec<i64> = (0..len).map(|_| rng.random_range(-9..=9)).collect();
        let whole = ContinuedFraction::new(terms.clone()).unwrap().eval();
        let head = ContinuedFraction::new(terms[..len - 1].to_vec()).unwrap().eval();
        if whole != head.recip().plus_int(terms[len - 1]) {
            fails.push(format!("recurrence broke for terms {terms:?}"));
        }
    }
    fails
}

fn check_rational_arithmetic() -> Vec<String> {
    let mut rng = rng_for("rational");
    let mut fails = Vec::new();
    for _ in 0..5_000 {
        let (a, b, c) = (
            random_rational(&mut rng, 10_000, 10_000),
            random_rational(&mut rng, 10_000, 10_000),
            random_rational(&mut rng, 10_000, 10_000),
        );
        if a.checked_add(&b).unwrap() != b.checked_add(&a).unwrap() {
            fails.push(format!("commutativity broke at a = {a}, b = {b}"));
        }
        let left = a.checked_add(&b).unwrap().checked_add(&c).unwrap();
        let right = a.checked_add(&b.checked_add(&c).unwrap()).unwrap();
        if left != right {
            fails.push(format!("associativity broke at a = {a}, b = {b}, c = {c}"));
        }
        let again = ExtendedRational::new(a.numer().clone(), a.denom().clone()).unwrap();
        if again != a {
            fails.push(format!("normalization not idempotent at a = {a}"));
        }
    }
    fails
}

fn check_covering_and_meridian() -> Vec<String> {
    let mut rng = rng_for("cover");
    let mut fails = Vec::new();
    for _ in 0..2_000 {
        let s = random_rational(&mut rng, 1_000, 1_000);
        let c = covering_slope(&s).unwrap();
        if covering_slope(&c).unwrap() != s {
            fails.push(format!("covering slope involution broke at s = {s}"));
        }
        let lift = meridian_lift(&s);
        if !lift.mu_coeff.gcd(&lift.lambda_coeff).is_one() {
            fails.push(format!("meridian lift not coprime at r = {s}"));
        }
    }
    fails
}

fn check_montesinos_map() -> Vec<String> {
    let mut rng = rng_for("montesinos");
    let mut fails = Vec::new();
    for _ in 0..2_000 {
        let k = rng.random_range(1..=5usize);
        let ratios: Vec<ExtendedRational> =
            (0..k).map(|_| random_rational(&mut rng, 30, 10)).collect();
        let si = montesinos_to_sfs(BaseSurface::Sphere, &ratios);
        if si.coeffs().len() != k {
            fails.push(format!("coefficient count broke for {ratios:?}"));
            continue;
        }
        for (c, r) in si.coeffs().iter().zip(&ratios) {
            if *c != r.recip().neg() {
                fails.push(format!("coefficient is not -1/r for r = {r}"));
            }
        }
    }
    fails
}

fn random_invariants(rng: &mut ChaCha8Rng) -> SeifertInvariants {
    let base =
        if rng.random_bool(0.5) { BaseSurface::Sphere } else { BaseSurface::ProjectivePlane };
    let k = rng.random_range(0..5usize);
    SeifertInvariants::new(base, (0..k).map(|_| random_rational(rng, 40, 12)).collect())
}

fn check_normalize_idempotent() -> Vec<String> {
    let mut rng = rng_for("normalize");
    let mut fails = Vec::new();
    for _ in 0..5_000 {
        let si = random_invariants(&mut rng);
        let once = normalize(&si).unwrap();
        if normalize(&once).unwrap() != once {
            fails.push(format!("normalize not idempotent at {si}"));
        }
        if recognize(&si) != recognize(&once) {
            fails.push(format!("recognize changed under normalize at {si}"));
        }
    }
    fails
}

fn check_homeomorphism_properties() -> Vec<String> {
    let mut rng = rng_for("homeo");
    let mut fails = Vec::new();
    for _ in 0..2_000 {
        let si = random_invariants(&mut rng);
        if !is_homeomorphic(&si, &si).unwrap() {
            fails.push(format!("reflexivity broke at {si}"));
        }
        let mut rev = si.coeffs().to_vec();
        rev.reverse();
        let permuted = SeifertInvariants::new(si.base, rev);
        if !is_homeomorphic(&si, &permuted).unwrap() || !is_homeomorphic(&permuted, &si).unwrap() {
            fails.push(format!("permutation/symmetry broke at {si}"));
        }
        if si.base == BaseSurface::Sphere && si.coeffs().len() >= 2 {
            let mut shifted = si.coeffs().to_vec();
            shifted[0] = shifted[0].plus_int(1);
            shifted[1] = shifted[1].plus_int(-1);
            let moved = SeifertInvariants::new(si.base, shifted);
            if !is_homeomorphic(&si, &moved).unwrap() {
                fails.push(format!("+1/-1 move broke at {si}"));
            }
        }
    }
    fails
}

/// Formula-level cross-family identity: the EMI displayed invariants of the
/// n-branch at n = 0 and the p-branch at p = 0 are literally equal.
fn check_em1_cross_family() -> Vec<String> {
    let mut fails = Vec::new();
    for l in -6i64..=6 {
        for minus_one in [false, true] {
            let lb = BigInt::from(l);
            let n_branch = em1_vertex(l, 0, 0, minus_one).unwrap().space;
            let p_branch = if !minus_one {
                montesinos_to_sfs(
                    BaseSurface::ProjectivePlane,
                    &[
                        ExtendedRational::new(3 * &lb - 1, 2 * &lb - 1).unwrap(),
                        ExtendedRational::new(-&lb, BigInt::from(-1)).unwrap(),
                    ],
                )
            } else {
                montesinos_to_sfs(
                    BaseSurface::Sphere,
                    &[
                        ExtendedRational::from(3),
                        ExtendedRational::new(3 * &lb - 2, -2 * &lb + 1).unwrap(),
                        ExtendedRational::new(-&lb - 1, lb.clone()).unwrap(),
                    ],
                )
            };
            if n_branch != p_branch {
                fails.push(format!("l = {l}, minus_one = {minus_one}: {n_branch} vs {p_branch}"));
            }
        }
    }
    fails
}

fn check_em1_overlap() -> Vec<String> {
    let mut fails = Vec::new();
    for l in -20i64..=20 {
        let n_side = gamma1(l as i128, 0, 0);
        let p_side = 12 * (l as i128) * (l as i128) - 4 * (l as i128);
        if n_side != p_side {
            fails.push(format!("branch slopes differ at l = {l}"));
        }
        let got = slope_int(&em1_vertex(l, 0, 0, false).unwrap().vertex);
        if got != BigInt::from(n_side) {
            fails.push(format!("constructor slope differs at l = {l}: {got}"));
        }
    }
    for (l, m) in [(-3i64, 2i64), (4, 3), (2, -2)] {
        let a = gamma2(l as i128, m as i128, 0, 0);
        let b = slope_int(&em2_vertex(l, m, 0, 0, false).unwrap().vertex);
        if BigInt::from(a) != b {
            fails.push(format!("EMII overlap broke at l = {l}, m = {m}"));
        }
    }
    fails
}

fn check_em2_slope_identity() -> Vec<String> {
    let mut fails = Vec::new();
    for l in -10i64..=10 {
        for m in -10i64..=10 {
            let a = slope_int(&em2_vertex(l, m, 0, 1, false).unwrap().vertex);
            let b = slope_int(&em2_vertex(l, m - 1, 1, 0, false).unwrap().vertex);
            if a != b {
                fails.push(format!("γ(l,m,0,1) != γ(l,m-1,1,0) at l = {l}, m = {m}"));
            }
        }
    }
    fails
}

fn check_em2_homeomorphism() -> Vec<String> {
    let mut fails = Vec::new();
    for l in -5i64..=5 {
        for m in -5i64..=5 {
            let x = em2_vertex(l, m, 0, 1, false).unwrap().space;
            let y = em2_vertex(l, m - 1, 1, 0, false).unwrap().space;
            if x.has_degenerate_fiber() || y.has_degenerate_fiber() {
                continue;
            }
            if !is_homeomorphic(&x, &y).unwrap() {
                fails.push(format!("spaces differ at l = {l}, m = {m}"));
            }
        }
    }
    fails
}

fn check_em2_reducible() -> Vec<String> {
    let mut fails = Vec::new();
    for l in [-2i64, -3, -4, -5, -6, -7, -8, -9, -10, 3, 4, 5, 6, 7, 8, 9, 10] {
        let family = em2_vertex(l, 1, 0, 0, false).unwrap();
        let torus = torus_reducible_surgery(l, 1 - l).unwrap();
        let fam = match recognize(&family.space) {
            SfsClassification::ConnectedSumOfLensSpaces(s) => s,
            other => {
                fails.push(format!("family side not a connected sum at l = {l}: {other:?}"));
                continue;
            }
        };
        let tor = match recognize(&torus.space) {
            SfsClassification::ConnectedSumOfLensSpaces(s) => s,
            other => {
                fails.push(format!("torus side not a connected sum at l = {l}: {other:?}"));
                continue;
            }
        };
        let direct = lens_equivalent(&fam[0], &tor[0]) && lens_equivalent(&fam[1], &tor[1]);
        let crossed = lens_equivalent(&fam[0], &tor[1]) && lens_equivalent(&fam[1], &tor[0]);
        if !(direct || crossed) {
            fails.push(format!("summands differ at l = {l}: {fam:?} vs {tor:?}"));
        }
    }
    // boundary case: T(2,-1) is trivial, the family side is a single L(2,1)
    if torus_reducible_surgery(2, -1).is_ok() {
        fails.push("torus constructor accepted the trivial parameters (2,-1)".into());
    }
    match recognize(&em2_vertex(2, 1, 0, 0, false).unwrap().space) {
        SfsClassification::LensSpace(l) => {
            if !lens_equivalent(&l, &LensParams { p: 2.into(), q: 1.into() }) {
                fails.push(format!("l = 2 family space is {l}, expected L(2,1)"));
            }
        }
        other => fails.push(format!("l = 2 family space misclassified: {other:?}")),
    }
    fails
}

fn check_twist_determinant() -> Vec<String> {
    let mut rng = rng_for("twist-det");
    let mut fails = Vec::new();
    let mut st = HopfPairState::new(q(3, 4), q(-7, 2));
    let d0 = st.determinant().abs();
    for i in 0..100_000u32 {
        let m: i64 = rng.random_range(-4..=4);
        st = if i % 2 == 0 { hopf_twist_a(&st, m) } else { hopf_twist_b(&st, m) };
        if i % 811 == 0 && st.determinant().abs() != d0 {
            fails.push(format!("determinant drifted after {i} twists"));
            break;
        }
        if i % 60 == 59 {
            st = HopfPairState::new(q(3, 4), q(-7, 2)); // bound coefficient growth
        }
    }
    if st.determinant().abs() != d0 {
        fails.push("determinant drifted at the end".into());
    }
    fails
}

fn check_decompose_replay() -> Vec<String> {
    let mut rng = rng_for("twist-decompose");
    let mut fails = Vec::new();
    for _ in 0..1_000 {
        let mut state =
            HopfPairState::new(ExtendedRational::infinity(), ExtendedRational::infinity());
        let steps: usize = rng.random_range(0..12);
        for i in 0..steps {
            let m: i64 = rng.random_range(-6..=6);
            state = if i % 2 == 0 { hopf_twist_a(&state, m) } else { hopf_twist_b(&state, m) };
        }
        let seq = match decompose(&state) {
            Ok(s) => s,
            Err(e) => {
                fails.push(format!("decompose failed for {state}: {e}"));
                continue;
            }
        };
        if !seq.is_well_formed() {
            fails.push(format!("alternation violated for {state}"));
        }
        if !seq.apply(&state).is_trivial() {
            fails.push(format!("replay missed (∞, ∞) for {state}"));
        }
    }
    fails
}

/// Deterministic EMIII parameter search via the extended Euclidean algorithm
/// on the trivializing identity.
fn em3_triples(want: usize) -> Vec<(ExtendedRational, ExtendedRational, ExtendedRational)> {
    let mut found = Vec::new();
    'outer: for alpha1 in -5i64..=5 {
        for beta1 in 1i64..=5 {
            let a1 = match ExtendedRational::new(alpha1, beta1) {
                Ok(v) => v,
                Err(_) => continue,
            };
            for n in -5i64..=5 {
                if matches!(n, 0 | 1 | -1 | -2) {
                    continue;
                }
                let a3 = q(1, n);
                let u = BigInt::from(n) * a1.numer() + a1.denom();
                let v = a1.numer().clone();
                let e = u.extended_gcd(&v);
                if !e.gcd.is_one() {
                    continue;
                }
                for k in -4i64..=4 {
                    let alpha2 = &e.x + BigInt::from(k) * &v;
                    let beta2 = &e.y - BigInt::from(k) * &u;
                    if alpha2.is_zero() && beta2.is_zero() {
                        continue;
                    }
                    let a2 = match ExtendedRational::new(alpha2, beta2) {
                        Ok(v) => v,
                        Err(_) => continue,
                    };
                    if em3_trivializable(&a1, &a2, &a3).ok().flatten().is_some() {
                        found.push((a1.clone(), a2, a3.clone()));
                        if found.len() >= want {
                            break 'outer;
                        }
                        break;
                    }
                }
            }
        }
    }
    found
}

fn check_em3_pairs() -> Vec<String> {
    let mut fails = Vec::new();
    let triples = em3_triples(100);
    if triples.len() < 100 {
        fails.push(format!("parameter search found only {} triples", triples.len()));
    }
    for (a1, a2, a3) in &triples {
        let (_, pair) = match em3_anchor(a1, a2, a3) {
            Ok(v) => v,
            Err(e) => {
                fails.push(format!("anchor failed for ({a1},{a2},{a3}): {e}"));
                continue;
            }
        };
        if !pair.determinant().abs().is_one() {
            fails.push(format!("pair determinant not ±1 for ({a1},{a2},{a3})"));
            continue;
        }
        let seq = decompose(&pair).unwrap();
        if !seq.is_well_formed() || !seq.apply(&pair).is_trivial() {
            fails.push(format!("replay failed for ({a1},{a2},{a3})"));
        }
    }
    fails
}

fn check_annular_sums() -> Vec<String> {
    let mut fails = Vec::new();
    for p in -10i64..=10 {
        if p == 0 {
            continue;
        }
        for l in -10i64..=10 {
            let s = annular_twist(p, l).unwrap();
            if s.c1_slope.checked_add(&s.c2_slope).unwrap() != ExtendedRational::from(2 * l) {
                fails.push(format!("slope sum broke at p = {p}, l = {l}"));
            }
            let r = annular_twist(-p, l).unwrap();
            if (r.c1_slope, r.c2_slope) != (s.c2_slope, s.c1_slope) {
                fails.push(format!("p -> -p reflection broke at p = {p}, l = {l}"));
            }
        }
    }
    fails
}

fn check_path_soundness() -> Vec<String> {
    let mut rng = rng_for("paths");
    let mut fails = Vec::new();
    for case in 0..500u32 {
        let minus_one = rng.random_bool(0.5);
        let off = i128::from(minus_one);
        if case % 2 == 0 {
            let l: i64 = rng.random_range(-10..=10);
            let (n, p) = if rng.random_bool(0.5) {
                (rng.random_range(-10..=10), 0)
            } else {
                (0, rng.random_range(-10..=10))
            };
            let path = em1_path(l, n, p, minus_one).unwrap();
            if path.len() > 2 {
                fails.push(format!("EMI path too long at ({l},{n},{p})"));
            }
            let mut vertices = vec![&path.start];
            vertices.extend(path.steps.iter().map(|s| &s.vertex));
            for v in vertices {
                let want = match &v.knot {
                    KnotId::Em1 { l, n, p } => gamma1(*l as i128, *n as i128, *p as i128) - off,
                    KnotId::Unknot => -off,
                    other => {
                        fails.push(format!("unexpected knot {other:?} on EMI path"));
                        continue;
                    }
                };
                if slope_int(v) != BigInt::from(want) {
                    fails.push(format!("slope mismatch at {} for ({l},{n},{p})", v.id()));
                }
            }
            if path.end().knot != KnotId::Unknot {
                fails.push(format!("EMI path does not end at the unknot for ({l},{n},{p})"));
            }
        } else {
            let l: i64 = rng.random_range(-10..=10);
            let m: i64 = rng.random_range(1..=6);
            let (n, p) = if rng.random_bool(0.5) {
                (rng.random_range(-10..=10), 0)
            } else {
                (0, rng.random_range(-10..=10))
            };
            let path = em2_path(l, m, n, p, minus_one).unwrap();
            let first = usize::from(n != 0 || p != 0);
            if path.len() != first + 2 * (m as usize - 1) {
                fails.push(format!("EMII path length broke at ({l},{m},{n},{p})"));
            }
            let mut vertices = vec![&path.start];
            vertices.extend(path.steps.iter().map(|s| &s.vertex));
            for v in vertices {
                match &v.knot {
                    KnotId::Em2 { l, m, n, p } => {
                        let want = gamma2(*l as i128, *m as i128, *n as i128, *p as i128) - off;
                        if slope_int(v) != BigInt::from(want) {
                            fails.push(format!("slope mismatch at {}", v.id()));
                        }
                    }
                    KnotId::Torus { p: tp, q: tq } => {
                        if (tp.clone(), tq.clone()) != (BigInt::from(l), BigInt::from(1 - l)) {
                            fails.push(format!("wrong terminal torus at ({l},{m},{n},{p})"));
                        }
                        let want = l as i128 * (1 - l as i128) - off;
                        if slope_int(v) != BigInt::from(want) {
                            fails.push(format!("terminal slope broke at ({l},{m},{n},{p})"));
                        }
                    }
                    other => fails.push(format!("unexpected knot {other:?} on EMII path")),
                }
            }
            match &path.end().knot {
                KnotId::Torus { .. } => {}
                other => fails.push(format!("EMII path terminal is {other:?}")),
            }
        }
    }
    fails
}

fn check_em2_stairs() -> Vec<String> {
    let mut fails = Vec::new();
    for l in -10i64..=10 {
        for m in 1i64..=10 {
            let a = gamma2(l as i128, m as i128, 0, 1);
            let b = gamma2(l as i128, m as i128 - 1, 1, 0);
            if a != b {
                fails.push(format!("stair identity broke at l = {l}, m = {m}"));
            }
        }
    }
    fails
}

fn check_export_determinism() -> Vec<String> {
    let spec = GraphSpec {
        family: GraphFamily::Em1,
        l: ParamRange::new(-2, 2),
        m: ParamRange::single(0),
        n: ParamRange::new(-3, 3),
        p: ParamRange::new(-3, 3),
        minus_one: true,
    };
    let a = export_graph(&spec, GraphFormat::Dot).unwrap();
    let b = export_graph(&spec, GraphFormat::Dot).unwrap();
    let mut fails = Vec::new();
    if a != b {
        fails.push("DOT export is not byte-deterministic".into());
    }
    if !a.contains("\"O@0\"") {
        fails.push("expected the unknot vertex in the EMI lattice".into());
    }
    fails
}

pub fn run_all() -> bool {
    let checks: Vec<(&'static str, fn() -> Vec<String>)> = vec![
        ("cf.local_recurrence", check_cf_recurrence),
        ("cf.roundtrip", check_cf_roundtrip),
        ("families.em1_cross_family", check_em1_cross_family),
        ("families.em1_overlap", check_em1_overlap),
        ("families.em2_homeomorphism", check_em2_homeomorphism),
        ("families.em2_reducible", check_em2_reducible),
        ("families.em2_slope_identity", check_em2_slope_identity),
        ("network.em2_stairs", check_em2_stairs),
        ("network.em3_pairs", check_em3_pairs),
        ("network.export_determinism", check_export_determinism),
        ("network.path_soundness", check_path_soundness),
        ("rational.arithmetic", check_rational_arithmetic),
        ("rational.covering_meridian", check_covering_and_meridian),
        ("seifert.homeomorphism_properties", check_homeomorphism_properties),
        ("seifert.montesinos_map", check_montesinos_map),
        ("seifert.normalize_idempotent", check_normalize_idempotent),
        ("twist.annular_sums", check_annular_sums),
        ("twist.decompose_replay", check_decompose_replay),
        ("twist.determinant_invariance", check_twist_determinant),
    ];
    let color = std::env::var_os("NO_COLOR").is_none();
    let paint = |tag: &str, code: &str| {
        if color {
            format!("\x1b[{code}m{tag}\x1b[0m")
        } else {
            tag.to_string()
        }
    };
    let mut ok = true;
    for (name, check) in checks {
        let failures = check();
        if failures.is_empty() {
            println!("[{}] {name}", paint("PASS", "32"));
        } else {
            ok = false;
            println!("[{}] {name}", paint("FAIL", "31"));
            for f in failures.iter().take(8) {
                println!("       {f}");
            }
            if failures.len() > 8 {
                println!("       ... and {} more", failures.len() - 8);
            }
        }
    }
    ok
}
