//! Random dominating spectra with total pair amplitude at most 0.99 times
//! the positive root coefficient.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use recosc_core::exactnum::rational::{int, rat, Rational};
use recosc_core::kronecker::AngleDescriptor;
use recosc_core::powersum::{Phase, RemainderModel, RootCoefficient, RootForm, RootSpec};

pub fn random_spectrum(rng: &mut ChaCha8Rng) -> RootForm {
    let mut roots = vec![RootSpec {
        modulus: int(1),
        angle: AngleDescriptor::rational(0, 1).unwrap(),
        coeff: RootCoefficient::real(rat(rng.gen_range(1..=20), rng.gen_range(1..=5))),
    }];
    let c0 = match &roots[0].coeff {
        RootCoefficient::Complex { re, .. } => re.clone(),
        _ => unreachable!(),
    };
    let m = rng.gen_range(1..=3);
    let mut budget = rat(99, 100) * &c0;
    let mut used: Vec<(i64, i64)> = Vec::new();
    for _ in 0..m {
        let share = &budget * rat(rng.gen_range(1..=100), 100);
        budget -= &share;
        let angle = if rng.gen_bool(0.3) {
            AngleDescriptor::quadratic(rat(rng.gen_range(0..10), 10), rat(rng.gen_range(1..5), rng.gen_range(2..9)), int(rng.gen_range(2..4) * 2 + 1))
                .unwrap()
        } else {
            loop {
                let n = rng.gen_range(3..=24);
                let k = rng.gen_range(1..n);
                let a = AngleDescriptor::rational(k, n).unwrap();
                let (k, n) = a.as_rational().unwrap();
                if n > 2 && !used.contains(&(k, n)) && !used.contains(&((n - k) % n, n)) {
                    used.push((k, n));
                    break a;
                }
            }
        };
        let coeff = if rng.gen_bool(0.5) {
            let w = if rng.gen_bool(0.5) { share } else { -share };
            RootCoefficient::Trig { w, phase: Phase::Exact(rat(rng.gen_range(0..100), 100)) }
        } else {
            // 2 |c| <= 2 (|re| + |im|) <= share
            let t = rat(rng.gen_range(0..=10), 10);
            let re = &share * &t / int(2);
            let im = &share * (int(1) - &t) / int(2);
            let s = |q: Rational, rng: &mut ChaCha8Rng| if rng.gen_bool(0.5) { q } else { -q };
            RootCoefficient::Complex { re: s(re, rng), im: s(im, rng) }
        };
        roots.push(RootSpec { modulus: int(1), angle, coeff });
    }
    let remainder = match rng.gen_range(0..3) {
        0 => RemainderModel::Vanishing,
        _ => RemainderModel::Geometric {
            scale: rat(rng.gen_range(-10..=10), 10) * &c0,
            ratio: rat(rng.gen_range(-9..=9), 10),
        },
    };
    RootForm { degree: 0, roots, remainder: Some(remainder) }
}
