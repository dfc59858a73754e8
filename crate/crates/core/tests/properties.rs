mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use recosc_core::exactnum::interval::Interval;
use recosc_core::exactnum::rational::{int, rat, to_f64, Rational};
use recosc_core::kronecker::{classify_pair, hits_square, AngleDescriptor, HitOutcome};
use recosc_core::oscillation::{
    classify_recurrence, classify_spectrum, simulate_main_term, simulate_spectrum, ClassifyOptions, Comparison, VerdictKind,
};
use recosc_core::powersum::{
    from_root_form, DominantSpectrum, Phase, Recurrence, RemainderModel, RootCoefficient, RootForm, RootSpec,
};

fn mirrored(k: VerdictKind) -> VerdictKind {
    match k {
        VerdictKind::EventuallyPositive => VerdictKind::EventuallyNegative,
        VerdictKind::EventuallyNegative => VerdictKind::EventuallyPositive,
        k => k,
    }
}

fn angle_strategy() -> impl Strategy<Value = AngleDescriptor> {
    prop_oneof![
        (3i64..=12).prop_flat_map(|n| (1..n, Just(n))).prop_map(|(k, n)| AngleDescriptor::rational(k, n).unwrap()),
        (0i64..8, 1i64..4, 2i64..6, prop::sample::select(vec![2i64, 3, 5, 7]))
            .prop_map(|(a, b, d, r)| AngleDescriptor::quadratic(rat(a, 8), rat(b, d), int(r)).unwrap()),
    ]
}

/// A pair term `w sin(2 pi (n k/m + p/8))`.
#[derive(Debug, Clone)]
struct PairSpec {
    k: i64,
    m: i64,
    w: i64,
    p: i64,
}

fn pair_strategy() -> impl Strategy<Value = PairSpec> {
    (3i64..=12)
        .prop_flat_map(|m| (1..m, Just(m), prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]), 0i64..8))
        .prop_map(|(k, m, w, p)| PairSpec { k, m, w, p })
}

fn distinct(ps: &[PairSpec]) -> bool {
    let key = |p: &PairSpec| {
        let g = num_integer::gcd(p.k, p.m);
        (p.k / g, p.m / g)
    };
    let ks: Vec<_> = ps.iter().map(key).collect();
    ks.iter().all(|&(_, m)| m > 2)
        && ks.iter().enumerate().all(|(i, a)| ks[..i].iter().all(|b| a != b && (a.1 != b.1 || (a.0 + b.0) % a.1 != 0)))
}

fn spectrum(c0: i64, ps: &[PairSpec]) -> DominantSpectrum {
    let mut roots = Vec::new();
    if c0 != 0 {
        roots.push(RootSpec { modulus: int(1), angle: AngleDescriptor::rational(0, 1).unwrap(), coeff: RootCoefficient::real(int(c0)) });
    }
    for p in ps {
        roots.push(RootSpec {
            modulus: int(1),
            angle: AngleDescriptor::rational(p.k, p.m).unwrap(),
            coeff: RootCoefficient::Trig { w: int(p.w), phase: Phase::Exact(rat(p.p, 8)) },
        });
    }
    from_root_form(&RootForm { degree: 0, roots, remainder: Some(RemainderModel::Vanishing) }).unwrap().unwrap()
}

fn float_value(c0: i64, ps: &[PairSpec], n: i64) -> f64 {
    c0 as f64
        + ps.iter()
            .map(|p| {
                let t = ((n * p.k) % p.m) as f64 / p.m as f64 + p.p as f64 / 8.0;
                p.w as f64 * (std::f64::consts::TAU * t).sin()
            })
            .sum::<f64>()
}

fn frac_dist(x: &Rational) -> Rational {
    let f = x - x.floor();
    if f > rat(1, 2) {
        int(1) - f
    } else {
        f
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn verdict_respects_scaling(
        coeffs in prop::collection::vec(-3i64..=3, 1..=3),
        initials in prop::collection::vec(-4i64..=4, 3),
        s in prop::sample::select(vec![-3i64, -1, 2, 5]),
    ) {
        prop_assume!(*coeffs.last().unwrap() != 0);
        let d = coeffs.len();
        let rec = Recurrence::from_i64(&coeffs, &initials[..d]).unwrap();
        let scaled = Recurrence::from_i64(&coeffs, &initials[..d].iter().map(|x| x * s).collect::<Vec<_>>()).unwrap();
        let opts = ClassifyOptions { terms: 60, ..Default::default() };
        let (a, b) = (classify_recurrence(&rec, &opts), classify_recurrence(&scaled, &opts));
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if let (Ok(a), Ok(b)) = (a, b) {
            let k = a.verdict.kind();
            prop_assert_eq!(b.verdict.kind(), if s > 0 { k } else { mirrored(k) });
        }
    }

    #[test]
    fn relation_is_symmetric(x1 in angle_strategy(), x2 in angle_strategy()) {
        let (a, b) = (classify_pair(&x1, &x2, 30), classify_pair(&x2, &x1, 30));
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(a.swapped(), b);
        }
    }

    #[test]
    fn finite_orbit_hits_match_enumeration(
        (a1, b1) in (2i64..=12).prop_flat_map(|b| (1..b, Just(b))),
        (a2, b2) in (2i64..=12).prop_flat_map(|b| (1..b, Just(b))),
        c1 in 0i64..16,
        c2 in 0i64..16,
    ) {
        let (x1, x2) = (AngleDescriptor::rational(a1, b1).unwrap(), AngleDescriptor::rational(a2, b2).unwrap());
        let (q1, q2) = (rat(a1, b1), rat(a2, b2));
        prop_assume!(*q1.denom() > 2.into() && *q2.denom() > 2.into() && q1 != q2 && &q1 + &q2 != int(1));
        let rel = classify_pair(&x1, &x2, 30).unwrap();
        let (c1, c2) = (rat(c1, 16), rat(c2, 16));
        let hit = hits_square(&x1, &x2, (&Interval::point(c1.clone()), &Interval::point(c2.clone())), &rel).unwrap();
        let l = num_integer::lcm(b1, b2);
        let brute = (0..l).any(|n| {
            frac_dist(&(rat(n * a1, b1) - &c1)) < rat(1, 4) && frac_dist(&(rat(n * a2, b2) - &c2)) < rat(1, 4)
        });
        let expected = if brute { HitOutcome::InfinitelyManyHits } else { HitOutcome::NoHits };
        prop_assert_eq!(hit.outcome, expected);
    }

    #[test]
    fn rational_spectra_match_period_scan(
        c0 in 0i64..=4,
        ps in prop::collection::vec(pair_strategy(), 1..=2),
    ) {
        prop_assume!(distinct(&ps));
        let s = spectrum(c0, &ps);
        let l = ps.iter().fold(8i64, |acc, p| num_integer::lcm(acc, p.m));
        let vals: Vec<f64> = (0..l).map(|n| float_value(c0, &ps, n)).collect();
        let pos = vals.iter().any(|&v| v > 1e-9);
        let neg = vals.iter().any(|&v| v < -1e-9);
        let zero = vals.iter().any(|v| v.abs() <= 1e-9);
        let kind = classify_spectrum(&s, &ClassifyOptions { terms: 80, ..Default::default() }).unwrap().verdict.kind();
        match (pos, neg, zero) {
            (true, true, _) => prop_assert_eq!(kind, VerdictKind::Oscillates),
            (true, false, false) => prop_assert_eq!(kind, VerdictKind::EventuallyPositive),
            (false, true, false) => prop_assert_eq!(kind, VerdictKind::EventuallyNegative),
            (false, false, _) => prop_assert_eq!(kind, VerdictKind::IdenticallyZero),
            _ => prop_assert_eq!(kind, VerdictKind::TouchingZeros),
        }
    }

    #[test]
    fn exact_zeros_match_evaluation(
        c0 in 0i64..=3,
        ps in prop::collection::vec(pair_strategy(), 1..=2),
    ) {
        prop_assume!(distinct(&ps));
        let s = spectrum(c0, &ps);
        let sim = simulate_main_term(&s, 48).unwrap();
        prop_assert_eq!(sim.unknown, 0);
        for (n, c) in sim.pattern.chars().enumerate() {
            let v = float_value(c0, &ps, n as i64);
            prop_assert_eq!(c == '0', v.abs() < 1e-9, "n = {}, value {}", n, v);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, ..ProptestConfig::default() })]

    #[test]
    fn small_amplitude_is_eventually_positive(seed in any::<u64>()) {
        let rf = common::random_spectrum(&mut ChaCha8Rng::seed_from_u64(seed));
        let s = from_root_form(&rf).unwrap().unwrap();
        let r = classify_spectrum(&s, &ClassifyOptions { terms: 100, ..Default::default() }).unwrap();
        prop_assert_eq!(r.verdict.kind(), VerdictKind::EventuallyPositive);
        let a = r.positive_real.as_ref().unwrap();
        prop_assert_eq!(a.w_vs_one, Some(Comparison::Less));
        let hi = recosc_core::exactnum::rational::parse_rational(&a.w_total.hi).unwrap();
        prop_assert!(to_f64(&hi) <= 0.99 + 1e-9);
        let sim = simulate_spectrum(&s, 300).unwrap();
        prop_assert_eq!(sim.negatives_from(51), 0);
    }
}
