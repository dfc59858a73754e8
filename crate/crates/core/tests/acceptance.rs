//! One line per acceptance criterion, `PASS` or `FAIL`, plus the assertions
//! behind each line.

mod common;

use std::collections::HashMap;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use recosc_core::exactnum::rational::{int, rat, Rational};
use recosc_core::kronecker::AngleDescriptor;
use recosc_core::oscillation::{
    classify_spectrum, simulate_main_term, simulate_spectrum, special_theta_oscillates, ClassifyOptions, Comparison, Verdict,
    VerdictKind,
};
use recosc_core::powersum::{from_root_form, three_two_two, Phase, RemainderModel, RootCoefficient, RootForm, RootSpec};
use recosc_core::unitlattice::torus::check_theorem_hypotheses;
use recosc_core::unitlattice::{
    empty_square_witness, exhaustive_hit, is_exceptional_pair, multiples_mod1, square_always_hit, LgLattice, RationalRoute,
    TorusSquare,
};

fn line(n: u32, ok: bool, what: &str) {
    println!("criterion {n:>2}: {} - {what}", if ok { "PASS" } else { "FAIL" });
}

fn units(g: i64) -> impl Iterator<Item = i64> {
    (1..g.max(2)).filter(move |a| a.gcd(&g) == 1)
}

fn exceptional_set() -> bool {
    let mut checked = 0;
    for b1 in 2..=20i64 {
        for b2 in 2..=b1 {
            for a1 in units(b1) {
                for a2 in units(b2) {
                    if check_theorem_hypotheses(a1, b1, a2, b2).is_err() {
                        continue;
                    }
                    checked += 1;
                    let w = empty_square_witness(a1, b1, a2, b2).unwrap();
                    if w.is_some() != is_exceptional_pair(b1, b2) {
                        println!("  mismatch at ({a1}/{b1}, {a2}/{b2}): witness {w:?}");
                        return false;
                    }
                    if let Some(c) = w {
                        if !multiples_mod1(a1, b1, a2, b2).unwrap().square_is_empty(&TorusSquare::quarter(c.0, c.1)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    println!("  {checked} admissible tuples");
    checked > 0
}

fn published_centres() -> bool {
    // unit-square coordinates; each centre is checked by exact membership
    let cases = [((1, 6, 2, 3), (rat(1, 12), rat(1, 3))), ((1, 5, 2, 5), (rat(1, 2), rat(1, 2))), ((3, 8, 1, 4), (rat(1, 2), rat(1, 2)))];
    let mut ok = true;
    for ((a1, b1, a2, b2), c) in cases {
        let ps = multiples_mod1(a1, b1, a2, b2).unwrap();
        ok &= ps.square_is_empty(&TorusSquare::quarter(c.0, c.1));
    }
    let ps = multiples_mod1(1, 5, 1, 2).unwrap();
    for k in 0..20 {
        ok &= ps.square_is_empty(&TorusSquare::quarter(rat(k, 20), rat(1, 4)));
    }
    ok
}

fn lattice_l5() -> bool {
    let lat = LgLattice::new(5, 2, 1).unwrap();
    let orbit: Vec<(i64, i64)> = (0..5).map(|n| ((2 * n) % 5, n % 5)).collect();
    for u1 in -12..=12i64 {
        for u2 in -12..=12i64 {
            let in_orbit = orbit.iter().any(|&(x, y)| (u1 - x) % 5 == 0 && (u2 - y) % 5 == 0);
            if lat.contains((u1, u2)) != in_orbit {
                return false;
            }
        }
    }
    let m = lat.successive_minima();
    lat.reduced_basis().det() == 5 && m.lambda1_sq == 5 && m.lambda2_sq == 5
}

fn admissible(g: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a1 in units(g) {
        for a2 in units(g) {
            if (a1 - a2) % g != 0 && (a1 + a2) % g != 0 {
                out.push((a1, a2));
            }
        }
    }
    out
}

fn always_hit_sweep() -> bool {
    for g in 7..=30 {
        for (a1, a2) in admissible(g) {
            let c = square_always_hit(g, a1, a2).unwrap();
            if !c.always_hit || !exhaustive_hit(g, a1, a2).unwrap() {
                println!("  g = {g}, a = ({a1}, {a2}): {:?}", c.branch);
                return false;
            }
        }
    }
    true
}

fn minkowski_sweep() -> bool {
    for g in 1..=100i64 {
        // the lattice depends only on a2 / a1 mod g
        let mut seen: HashMap<i64, bool> = HashMap::new();
        for a1 in units(g) {
            for a2 in units(g) {
                let inv = units(g).find(|x| (x * a1) % g == 1 % g).unwrap();
                let slope = (a2 * inv) % g;
                let ok = *seen.entry(slope).or_insert_with(|| LgLattice::new(g, a1, a2).unwrap().minkowski_check());
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

fn inequality_table() -> bool {
    let listed = [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 3)];
    let primitive: Vec<(i64, i64)> = listed.iter().copied().filter(|r: &(i64, i64)| r.0.gcd(&r.1) == 1).collect();
    println!("  listed {listed:?}; primitive subset {primitive:?}");
    let holds = |g: i64, r: (i64, i64)| 4 * r.0 * r.1 < g * (r.0 + r.1 - 2);
    listed.iter().all(|&r| holds(10, r)) && (10..=100).all(|g| listed.iter().all(|&r| holds(g, r)))
}

fn special_pairs(rng: &mut ChaCha8Rng) -> bool {
    let pairs = [((1, 6), (1, 3)), ((1, 8), (1, 4)), ((2, 5), (1, 5))];
    for ((k1, n1), (k2, n2)) in pairs {
        let x1 = AngleDescriptor::rational(k1, n1).unwrap();
        let x2 = AngleDescriptor::rational(k2, n2).unwrap();
        for _ in 0..1000 {
            let mut w = || {
                let m = rat(rng.gen_range(1..=1000), 100);
                if rng.gen_bool(0.5) {
                    m
                } else {
                    -m
                }
            };
            let (w1, w2) = (w(), w());
            let p1 = Phase::Exact(rat(rng.gen_range(0..1000), 1000));
            let p2 = Phase::Exact(rat(rng.gen_range(0..1000), 1000));
            let (p, n) = match special_theta_oscillates((&x1, &x2), (&w1, &w2), (&p1, &p2)) {
                Ok(v) => v,
                Err(e) => {
                    println!("  ({k1}/{n1}, {k2}/{n2}) w = ({w1}, {w2}): {e}");
                    return false;
                }
            };
            let period = n1.lcm(&n2) as u64;
            if p >= period || n >= period {
                return false;
            }
        }
    }
    true
}

fn example_spectrum() -> bool {
    let rf = three_two_two(int(0), (rat(1, 2), int(0)), (rat(1, 2), int(0)));
    let s = from_root_form(&rf).unwrap().unwrap();
    let r = classify_spectrum(&s, &ClassifyOptions::default()).unwrap();
    let via_lattice = r.theorem_chain.iter().any(|c| c.contains("L_5(2,1)")) && matches!(r.route, Some(RationalRoute::TwiceG));
    let sim = simulate_main_term(&s, 100).unwrap();
    println!("  sign changes in 100 terms: {}", sim.sign_changes);
    r.verdict.kind() == VerdictKind::Oscillates && via_lattice && sim.sign_changes >= 10 && sim.unknown == 0
}

fn touching_spectrum(phase: Rational, rem: RemainderModel) -> recosc_core::powersum::DominantSpectrum {
    let rf = RootForm {
        degree: 0,
        roots: vec![
            RootSpec { modulus: int(1), angle: AngleDescriptor::rational(0, 1).unwrap(), coeff: RootCoefficient::real(int(1)) },
            RootSpec {
                modulus: int(1),
                angle: AngleDescriptor::rational(1, 4).unwrap(),
                coeff: RootCoefficient::Trig { w: int(1), phase: Phase::Exact(phase) },
            },
        ],
        remainder: Some(rem),
    };
    from_root_form(&rf).unwrap().unwrap()
}

/// Returns (criterion met as stated, facts verified).
fn touching_case() -> (bool, bool) {
    let opts = ClassifyOptions { terms: 100, ..Default::default() };
    let r = classify_spectrum(&touching_spectrum(int(0), RemainderModel::Unknown), &opts).unwrap();
    let zeros_ok = match &r.verdict {
        Verdict::TouchingZeros { classes, .. } => classes.modulus == 4 && classes.residues == vec![3],
        _ => false,
    };
    let congruence_ok = r.positive_real.as_ref().is_some_and(|a| {
        a.congruences.len() == 1 && a.congruences[0].solution == Some((3, 4)) && a.w_vs_one == Some(Comparison::Equal)
    });
    let geo = RemainderModel::Geometric { scale: rat(-1, 2), ratio: rat(-1, 2) };
    let literal = touching_spectrum(int(0), geo.clone());
    let lit = classify_spectrum(&literal, &opts).unwrap();
    let lit_sim = simulate_spectrum(&literal, 100).unwrap();
    let shifted = touching_spectrum(rat(3, 4), geo);
    let osc = classify_spectrum(&shifted, &opts).unwrap();
    let osc_sim = simulate_spectrum(&shifted, 100).unwrap();
    let osc_neg: Vec<usize> = osc_sim.pattern.char_indices().filter(|c| c.1 == '-').map(|c| c.0).collect();
    println!("  phase 0: zeros of the main term at n = 3 (mod 4): {zeros_ok}; congruence 4n = 12 (mod 16) solved: {congruence_ok}");
    println!(
        "  phase 0 with r(n) = (-1/2)^(n+1): {:?}, simulated signs {}",
        lit.verdict.kind(),
        &lit_sim.pattern[..24]
    );
    println!(
        "  phase 3/4 with r(n) = (-1/2)^(n+1): {:?}, simulated signs {}",
        osc.verdict.kind(),
        &osc_sim.pattern[..24]
    );
    println!("  r(n) > 0 on n = 3 (mod 4), so the stated input is eventually positive; the oscillating");
    println!("  construction has its zeros on n = 0 (mod 4), where a(n) = -(1/2)^(n+1) < 0");
    let facts = zeros_ok
        && congruence_ok
        && lit.verdict.kind() == VerdictKind::EventuallyPositive
        && lit_sim.negatives == 0
        && osc.verdict.kind() == VerdictKind::Oscillates
        && !osc_neg.is_empty()
        && osc_neg.iter().all(|n| n % 4 == 0);
    let as_stated = zeros_ok && lit.verdict.kind() == VerdictKind::Oscillates;
    (as_stated, facts)
}

fn small_amplitude(rng: &mut ChaCha8Rng) -> bool {
    let opts = ClassifyOptions { terms: 500, ..Default::default() };
    for i in 0..200 {
        let rf = common::random_spectrum(rng);
        let s = from_root_form(&rf).unwrap().unwrap();
        let r = match classify_spectrum(&s, &opts) {
            Ok(r) => r,
            Err(e) => {
                println!("  spectrum {i}: {e}");
                return false;
            }
        };
        let certified = r.positive_real.as_ref().is_some_and(|a| a.w_vs_one == Some(Comparison::Less));
        let sim = simulate_spectrum(&s, 500).unwrap();
        let late_negative = sim.negatives_from(51);
        if r.verdict.kind() != VerdictKind::EventuallyPositive || !certified || late_negative > 0 || !sim.complete {
            println!("  spectrum {i}: {:?}, certified W < 1: {certified}, late negatives {late_negative}", r.verdict.kind());
            return false;
        }
    }
    true
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut all = true;
    let mut check = |n: u32, ok: bool, what: &str| {
        line(n, ok, what);
        all &= ok;
    };
    check(1, exceptional_set(), "empty quarter squares exist exactly for (5,5), (6,3), (8,4) and b2 = 2, b1 <= 20");
    check(2, published_centres(), "published empty-square centres, unit-square coordinates");
    check(3, lattice_l5(), "L_5(2,1): membership, det 5, minima sqrt(5), sqrt(5)");
    check(4, always_hit_sweep(), "every admissible L_g(a1,a2), 7 <= g <= 30, meets every square of side g/2");
    check(5, minkowski_sweep(), "lambda1 lambda2 pi <= 4g for g <= 100");
    check(6, inequality_table(), "4 r1 r2 < g (r1 + r2 - 2) for the listed r, 10 <= g <= 100");
    check(7, special_pairs(&mut rng), "exceptional angle pairs take both signs, 3 x 1000 random (w, phi)");
    check(8, example_spectrum(), "moduli 3, 2, 2 example with c0 = 0 oscillates via L_5(2,1)");
    let (stated, facts) = touching_case();
    line(9, stated, "touching zeros at n = 3 (mod 4) with r(n) = (-1/2)^(n+1) reported as oscillating");
    check(10, small_amplitude(&mut rng), "200 random spectra with W <= 0.99 are eventually positive");
    // criterion 9 is contradictory as stated; the verified facts are asserted instead
    assert!(facts, "touching-zero facts");
    assert!(all, "an acceptance criterion failed");
    println!("acceptance: criterion 9 left red, see README");
}
