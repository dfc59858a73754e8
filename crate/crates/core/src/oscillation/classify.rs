//! The decision procedure.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::Signed;

use super::period::{scan_period, sign_classes};
use super::positive::{density_evidence, positive_real_analysis, PositiveOutcome};
use super::simulate::simulate_spectrum;
use super::special::{is_special_pair, oscillation_witnesses_case3};
use super::verdict::{Report, ResidueClasses, SimulationCheck, Verdict, Witnesses};
use crate::error::{Error, Result};
use crate::exactnum::interval::Interval;
use crate::exactnum::rational::{format_rational, rat, Rational};
use crate::kronecker::{
    classify_pair, half_angle_hit, hits_square, AngleDescriptor, Certainty, HitOutcome, RelationCase,
};
use crate::powersum::{
    dominating_spectrum, to_power_sum, Coefficient, DominantSpectrum, DominantTerm, Recurrence, SignSummary,
};
use crate::unitlattice::certify::{rational_route, RationalRoute};

const MAX_DEPTH: usize = 3;

#[derive(Debug, Clone)]
pub struct ClassifyOptions {
    /// Terms simulated for the cross-check; `0` disables it.
    pub terms: usize,
    pub relation_bound: u32,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions { terms: 200, relation_bound: crate::kronecker::DEFAULT_RELATION_BOUND }
    }
}

pub enum Input<'a> {
    Recurrence(&'a Recurrence),
    Spectrum(&'a DominantSpectrum),
}

pub fn classify(input: Input, opts: &ClassifyOptions) -> Result<Report> {
    match input {
        Input::Recurrence(r) => classify_recurrence(r, opts),
        Input::Spectrum(s) => classify_spectrum(s, opts),
    }
}

/// How touching zeros of the main term get resolved.
enum Tail<'a> {
    Remainder,
    Subsequences { core: &'a Recurrence, depth: usize },
}

pub fn classify_recurrence(rec: &Recurrence, opts: &ClassifyOptions) -> Result<Report> {
    let mut report = recurrence_report(rec, opts, 0)?;
    if opts.terms > 0 {
        let summary = rec.sign_summary(opts.terms);
        let status = cross_check(&report.verdict, &summary)?;
        report.simulation = Some(SimulationCheck { terms: opts.terms, summary, status });
    }
    Ok(report)
}

fn recurrence_report(rec: &Recurrence, opts: &ClassifyOptions, depth: usize) -> Result<Report> {
    let form = Arc::new(to_power_sum(rec)?);
    let offset = form.offset() as u64;
    let Some(spec) = dominating_spectrum(&form)? else {
        let mut r = Report::new(Verdict::IdenticallyZero);
        r.theorem_chain.push("generating function is a polynomial".into());
        r.offset = Some(offset);
        return Ok(r);
    };
    let core = form.core().expect("nonzero power sum has a core");
    let mut report = analyze(&spec, opts, Tail::Subsequences { core, depth })?;
    report.verdict = report.verdict.shifted(offset);
    if offset > 0 {
        report.offset = Some(offset);
        report.notes.push(format!("terms before n = {offset} are a transient and do not affect the verdict"));
    }
    Ok(report)
}

pub fn classify_spectrum(spec: &DominantSpectrum, opts: &ClassifyOptions) -> Result<Report> {
    let mut report = analyze(spec, opts, Tail::Remainder)?;
    if opts.terms > 0 {
        let sim = simulate_spectrum(spec, opts.terms)?;
        let status = if !sim.complete {
            "partial".to_string()
        } else {
            let half = opts.terms / 2;
            match report.verdict.kind() {
                super::VerdictKind::EventuallyPositive if sim.negatives_from(half) > 0 => {
                    return Err(Error::Contradiction("simulation shows negative terms late in the range".into()))
                }
                super::VerdictKind::EventuallyNegative if sim.positives_from(half) > 0 => {
                    return Err(Error::Contradiction("simulation shows positive terms late in the range".into()))
                }
                super::VerdictKind::EventuallyPositive | super::VerdictKind::EventuallyNegative => "consistent".into(),
                super::VerdictKind::Oscillates if sim.positives > 0 && sim.negatives > 0 => "consistent".into(),
                super::VerdictKind::Oscillates => "unconfirmed".into(),
                _ => "not_applicable".into(),
            }
        };
        report.notes.push(format!("interval simulation over {} terms: {}", opts.terms, sim.pattern));
        report.simulation = Some(SimulationCheck {
            terms: opts.terms,
            summary: SignSummary {
                count: sim.count,
                pattern: sim.pattern.clone(),
                positives: sim.positives,
                negatives: sim.negatives,
                zeros: sim.zeros,
                first_negative: sim.pattern.find('-'),
                last_negative: sim.last_negative,
                first_positive: sim.pattern.find('+'),
                last_positive: sim.last_positive,
                sign_changes: sim.sign_changes,
            },
            status,
        });
    }
    Ok(report)
}

/// Compares a verdict with exact signs of the first terms.
fn cross_check(v: &Verdict, s: &SignSummary) -> Result<String> {
    let half = s.count / 2;
    Ok(match v {
        Verdict::EventuallyPositive { .. } => {
            if s.last_negative.is_some_and(|i| i >= half) {
                return Err(Error::Contradiction(format!("eventually positive, yet a({}) < 0", s.last_negative.unwrap())));
            }
            "consistent".into()
        }
        Verdict::EventuallyNegative { .. } => {
            if s.last_positive.is_some_and(|i| i >= half) {
                return Err(Error::Contradiction(format!("eventually negative, yet a({}) > 0", s.last_positive.unwrap())));
            }
            "consistent".into()
        }
        Verdict::Oscillates { .. } => {
            if s.positives > 0 && s.negatives > 0 { "consistent".into() } else { "unconfirmed".into() }
        }
        Verdict::IdenticallyZero => {
            if s.positives + s.negatives > 0 && s.last_positive.max(s.last_negative).is_some_and(|i| i >= half) {
                return Err(Error::Contradiction("eventually zero, yet late terms are nonzero".into()));
            }
            "consistent".into()
        }
        _ => "not_applicable".into(),
    })
}

/// Sign of the amplitude `w` of a pair, when known from the coefficient type.
fn w_sign(t: &DominantTerm) -> Result<i8> {
    Ok(match &t.coeff {
        Coefficient::Trig { w, .. } => {
            if w.is_positive() { 1 } else { -1 }
        }
        Coefficient::Exact { re, im } if im.is_zero_rat() => {
            if re.is_positive() { 1 } else { -1 }
        }
        _ => -1,
    })
}

trait ZeroRat {
    fn is_zero_rat(&self) -> bool;
}

impl ZeroRat for Rational {
    fn is_zero_rat(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

/// Centre `c_k` making `w_k sin(2 pi (n xi_k + phi_k))` have sign `target`.
fn square_center(t: &DominantTerm, target: i8) -> Result<Interval> {
    let want = target * w_sign(t)?;
    let q = if want > 0 { rat(1, 4) } else { rat(3, 4) };
    Ok(&Interval::point(q) - &t.phase(64)?)
}

fn analyze(spec: &DominantSpectrum, opts: &ClassifyOptions, tail: Tail) -> Result<Report> {
    let mut report = Report::new(Verdict::Inconclusive { reason: String::new() });
    report.spectrum = Some(spec.report());
    if spec.terms.len() == 1 && spec.positive_real().is_some() {
        let s = spec.terms[0].real_sign()?;
        report.theorem_chain.push("single dominating root, real and positive".into());
        report.verdict = Verdict::eventually(s, "single dominating positive root", None);
        return Ok(report);
    }
    if spec.positive_real().is_some() {
        return with_positive_root(spec, opts, tail, report);
    }
    let count = spec.root_count();
    let all_rational = spec.period().is_some();
    if count > 4 {
        if let Some(p) = spec.period() {
            report.theorem_chain.push("periodic main term with zero mean over a period".into());
            report.verdict = periodic_oscillation(spec, p, "periodic main term with zero mean")?;
        } else {
            let w = density_evidence(spec)?;
            report.verdict = Verdict::ConjecturedOscillates {
                evidence: format!(
                    "{count} dominating roots, none positive real; main term positive at {:?} and negative at {:?}",
                    w.positive, w.negative
                ),
            };
        }
        return Ok(report);
    }
    let pairs = spec.pairs();
    let neg = spec.negative_real();
    match (pairs.len(), neg) {
        (0, Some(t)) => {
            let c = t.c_box(64)?.re;
            let s = t.real_sign()?;
            report.theorem_chain.push("single dominating root, real and negative".into());
            let (pos, negs) = if s > 0 { (vec![0], vec![1]) } else { (vec![1], vec![0]) };
            report.verdict = Verdict::Oscillates {
                theorem: "dominant negative root".into(),
                witnesses: Witnesses {
                    period: Some(2),
                    positive: pos,
                    negative: negs,
                    delta: Some(format_rational(&c.abs().lo().clone())),
                    epsilon: None,
                    effective: true,
                },
            };
        }
        (1, None) => {
            if all_rational {
                report.theorem_chain.push("single conjugate pair, finite orbit of the angle".into());
                report.verdict = periodic_oscillation(spec, spec.period().unwrap(), "single conjugate pair")?;
            } else {
                report.theorem_chain.push("single conjugate pair, density of n xi mod 1".into());
                let mut w = density_evidence(spec)?;
                w.epsilon = Some("1/8".into());
                report.verdict = Verdict::Oscillates { theorem: "single conjugate pair".into(), witnesses: w };
            }
        }
        (1, Some(_)) => {
            let t = pairs[0];
            for target in [1i8, -1] {
                let c1 = square_center(t, target)?;
                report.hits.push(half_angle_hit(&t.angle, &c1)?.verdict);
            }
            if all_rational {
                report.theorem_chain.push("pair with a negative root: half-angle square hitting".into());
                report.verdict = periodic_oscillation(spec, spec.period().unwrap(), "half-angle square hitting")?;
            } else {
                report.theorem_chain.push("pair with a negative root: density of both parities".into());
                let mut w = density_evidence(spec)?;
                w.epsilon = Some("1/8".into());
                report.verdict = Verdict::Oscillates { theorem: "half-angle square hitting".into(), witnesses: w };
            }
        }
        (2, None) => two_pairs(spec, pairs[0], pairs[1], opts, &mut report)?,
        _ => {
            return Err(Error::Contradiction(format!("unexpected dominating set of {count} roots")));
        }
    }
    Ok(report)
}

fn periodic_oscillation(spec: &DominantSpectrum, p: u64, theorem: &str) -> Result<Verdict> {
    let signs = scan_period(spec, p, false)?;
    let (pos, neg, delta) = sign_classes(&signs);
    if pos.is_empty() || neg.is_empty() {
        return Err(Error::Contradiction(format!("{theorem}: main term does not take both signs over a period")));
    }
    Ok(Verdict::Oscillates {
        theorem: theorem.into(),
        witnesses: Witnesses {
            period: Some(p),
            positive: pos,
            negative: neg,
            delta: delta.as_ref().map(format_rational),
            epsilon: None,
            effective: true,
        },
    })
}

fn two_pairs(spec: &DominantSpectrum, t1: &DominantTerm, t2: &DominantTerm, opts: &ClassifyOptions, report: &mut Report) -> Result<()> {
    let (x1, x2) = (&t1.angle, &t2.angle);
    if matches!(x1, AngleDescriptor::Approximate(_)) || matches!(x2, AngleDescriptor::Approximate(_)) {
        let w = density_evidence(spec)?;
        report.verdict = Verdict::ConjecturedOscillates {
            evidence: format!(
                "approximate angles cannot be placed in a relation case; main term positive at {:?} and negative at {:?}",
                w.positive, w.negative
            ),
        };
        return Ok(());
    }
    let rel = classify_pair(x1, x2, opts.relation_bound)?;
    report.relation = Some(rel.clone());
    if let RelationCase::Case3 { a1, b1, a2, b2 } = rel.case {
        let p = spec.period().expect("rational angles");
        if is_special_pair(x1, x2) {
            report.theorem_chain.push("exceptional denominators: sign scan over one period".into());
            let (route, _) = rational_route(a1, b1, a2, b2)?;
            report.route = Some(route);
            report.verdict = periodic_oscillation(spec, p, "exceptional-denominator proposition")?;
            return Ok(());
        }
        let (route, always) = rational_route(a1, b1, a2, b2)?;
        if !always {
            return Err(Error::Contradiction("non-exceptional pair with an empty quarter square".into()));
        }
        report.theorem_chain.push(format!("quarter squares always hit on the finite orbit ({})", route_name(&route, b1, b2, a1, a2)));
        report.route = Some(route);
        // sin terms with w < 0 are sines shifted by a half turn
        let shift = |t: &DominantTerm| -> Result<Interval> {
            let ph = t.phase(64)?;
            Ok(if w_sign(t)? < 0 { &ph + &Interval::point(rat(1, 2)) } else { ph })
        };
        let cw = oscillation_witnesses_case3(x1, x2, &shift(t1)?, &shift(t2)?)?;
        report.notes.push(format!(
            "both terms positive on n = {:?} and both negative on n = {:?} (mod {}), each sine at least {} in modulus",
            cw.positive,
            cw.negative,
            cw.period,
            format_rational(&cw.delta)
        ));
        report.verdict = periodic_oscillation(spec, p, "two-angle lattice covering")?;
        return Ok(());
    }
    let mut eps = None;
    for target in [1i8, -1] {
        let c = (square_center(t1, target)?, square_center(t2, target)?);
        let h = hits_square(x1, x2, (&c.0, &c.1), &rel)?;
        if h.outcome != HitOutcome::InfinitelyManyHits {
            return Err(Error::Contradiction("irrational pair misses a quarter square".into()));
        }
        eps = h.epsilon.clone();
        report.hits.push(h);
    }
    let (name, chain) = match rel.case {
        RelationCase::Case2 { u1, u2, v } => (
            "line-family covering",
            format!("one relation {u1} xi1 + {u2} xi2 = {v}: orbit closure is a family of lines"),
        ),
        _ => ("Kronecker density", "no relation: orbit dense in the torus".to_string()),
    };
    report.theorem_chain.push(chain);
    if rel.certainty == Certainty::UpToBound {
        report.notes.push(format!(
            "no relation with coefficients up to {}; a larger relation would give the line-family case, with the same verdict",
            rel.search_bound
        ));
    }
    let mut w = density_evidence(spec)?;
    w.epsilon = eps.as_ref().map(format_rational);
    report.verdict = Verdict::Oscillates { theorem: name.into(), witnesses: w };
    Ok(())
}

fn route_name(route: &RationalRoute, b1: i64, b2: i64, a1: i64, a2: i64) -> String {
    let (a1, b1, a2, b2) = if b2 <= b1 { (a1, b1, a2, b2) } else { (a2, b2, a1, b1) };
    let g = b1.gcd(&b2);
    let lattice = format!("L_{g}({},{})", a1.rem_euclid(g), a2.rem_euclid(g));
    match route {
        RationalRoute::Coprime => "coprime denominators".into(),
        RationalRoute::GcdTwo => "denominators with gcd 2".into(),
        RationalRoute::TwiceG => format!("b1 = 2g via {lattice}"),
        RationalRoute::ThriceG => format!("b1 >= 3g via {lattice}"),
        RationalRoute::EqualDenominators { certificate } => format!("equal denominators via {lattice}, {:?}", certificate.branch),
        RationalRoute::Exceptional { .. } => "exceptional".into(),
    }
}

fn with_positive_root(spec: &DominantSpectrum, opts: &ClassifyOptions, tail: Tail, mut report: Report) -> Result<Report> {
    let (analysis, outcome) = positive_real_analysis(spec)?;
    let sigma = analysis.main_sign;
    report.positive_real = Some(analysis);
    report.theorem_chain.push("positive real dominating root with oscillating terms".into());
    report.verdict = match outcome {
        PositiveOutcome::Eventually { sign, theorem, bound_hint } => {
            report.theorem_chain.push(theorem.clone());
            Verdict::eventually(sign, theorem, bound_hint)
        }
        PositiveOutcome::Oscillates { theorem, witnesses } => {
            report.theorem_chain.push(theorem.clone());
            Verdict::Oscillates { theorem, witnesses }
        }
        PositiveOutcome::Inconclusive(reason) => Verdict::Inconclusive { reason },
        PositiveOutcome::Touching { classes } => {
            report.theorem_chain.push("period minimum S = 1: touching zeros".into());
            resolve_touching(spec, &classes, sigma, opts, tail, &mut report)?
        }
    };
    Ok(report)
}

/// Eventual sign of `a` on one class where the main term vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
enum ClassSign {
    Sign(i8),
    Oscillating,
    Unknown,
}

fn resolve_touching(
    spec: &DominantSpectrum,
    classes: &ResidueClasses,
    sigma: i8,
    opts: &ClassifyOptions,
    tail: Tail,
    report: &mut Report,
) -> Result<Verdict> {
    let p = classes.modulus;
    let (modulus, per_class): (u64, Vec<(u64, ClassSign)>) = match tail {
        Tail::Remainder => {
            let m = p.lcm(&2);
            let mut out = Vec::new();
            for r in 0..m {
                if classes.contains(r) {
                    let s = spec.remainder.eventual_sign_on_class(r, m).map_or(ClassSign::Unknown, ClassSign::Sign);
                    out.push((r, s));
                }
            }
            (m, out)
        }
        Tail::Subsequences { core, depth } => {
            let mut out = Vec::new();
            for &r in &classes.residues {
                let s = if depth >= MAX_DEPTH {
                    ClassSign::Unknown
                } else {
                    let sub = core.subsequence(r as usize, p as usize)?;
                    let sub_opts = ClassifyOptions { terms: 0, ..opts.clone() };
                    let rep = recurrence_report(&sub, &sub_opts, depth + 1)?;
                    report.notes.push(format!("subsequence n = {r} + {p} k: {:?}", rep.verdict.kind()));
                    match rep.verdict {
                        Verdict::EventuallyPositive { .. } => ClassSign::Sign(1),
                        Verdict::EventuallyNegative { .. } => ClassSign::Sign(-1),
                        Verdict::IdenticallyZero => ClassSign::Sign(0),
                        Verdict::Oscillates { .. } => ClassSign::Oscillating,
                        _ => ClassSign::Unknown,
                    }
                };
                out.push((r, s));
            }
            (p, out)
        }
    };
    let theorem = "touching zeros resolved on each class";
    let against: Vec<u64> = per_class
        .iter()
        .filter(|(_, s)| *s == ClassSign::Sign(-sigma) || *s == ClassSign::Oscillating)
        .map(|(r, _)| *r)
        .collect();
    let touching = ResidueClasses { modulus, residues: per_class.iter().map(|(r, _)| *r).collect() };
    if !against.is_empty() {
        report.theorem_chain.push(theorem.into());
        let with_sign: Vec<u64> = (0..modulus).filter(|n| !classes.contains(*n)).collect();
        let (positive, negative) = if sigma > 0 { (with_sign, against) } else { (against, with_sign) };
        return Ok(Verdict::Oscillates {
            theorem: theorem.into(),
            witnesses: Witnesses { period: Some(modulus), positive, negative, delta: None, epsilon: None, effective: true },
        });
    }
    if per_class.iter().all(|(_, s)| *s == ClassSign::Sign(sigma)) {
        report.theorem_chain.push(theorem.into());
        return Ok(Verdict::eventually(sigma, theorem, None));
    }
    if per_class.iter().all(|(_, s)| matches!(s, ClassSign::Sign(x) if *x == sigma || *x == 0)) {
        return Ok(Verdict::TouchingZeros {
            classes: ResidueClasses {
                modulus,
                residues: per_class.iter().filter(|(_, s)| *s == ClassSign::Sign(0)).map(|(r, _)| *r).collect(),
            },
            note: "the sequence vanishes on these classes and has one sign elsewhere".into(),
        });
    }
    Ok(Verdict::TouchingZeros {
        classes: touching,
        note: "main term vanishes on these classes; the sign there is decided by the remainder, which is not known".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::int;
    use crate::kronecker::AngleDescriptor;
    use crate::powersum::{from_root_form, three_two_two, Phase, RemainderModel, RootCoefficient, RootForm, RootSpec};
    use crate::oscillation::VerdictKind;

    fn rec(c: &[i64], i: &[i64]) -> Recurrence {
        Recurrence::from_i64(c, i).unwrap()
    }

    fn kind(r: &Recurrence) -> VerdictKind {
        classify_recurrence(r, &ClassifyOptions::default()).unwrap().verdict.kind()
    }

    #[test]
    fn small_recurrences() {
        assert_eq!(kind(&rec(&[1, 1], &[0, 1])), VerdictKind::EventuallyPositive);
        assert_eq!(kind(&rec(&[-2], &[1])), VerdictKind::Oscillates);
        assert_eq!(kind(&rec(&[1, 1], &[0, -1])), VerdictKind::EventuallyNegative);
        assert_eq!(kind(&rec(&[0, 0], &[3, 4])), VerdictKind::IdenticallyZero);
        // 2 cos(2 pi n / 6) style pair
        assert_eq!(kind(&rec(&[1, -1], &[1, 1])), VerdictKind::Oscillates);
        // 2^n + (-2)^n / 2: dominant positive and negative roots of equal size
        assert_eq!(kind(&rec(&[0, 4], &[3, 1])), VerdictKind::EventuallyPositive);
        assert_eq!(kind(&rec(&[0, 4], &[1, -3])), VerdictKind::Oscillates);
    }

    #[test]
    fn offset_is_reported() {
        let r = classify_recurrence(&rec(&[1, 1, 0], &[-5, 0, 1]), &ClassifyOptions::default()).unwrap();
        assert_eq!(r.verdict.kind(), VerdictKind::EventuallyPositive);
    }

    #[test]
    fn example_spectrum_oscillates() {
        let rf = three_two_two(int(0), (rat(1, 2), int(0)), (rat(1, 2), int(0)));
        let s = from_root_form(&rf).unwrap().unwrap();
        let r = classify_spectrum(&s, &ClassifyOptions::default()).unwrap();
        assert_eq!(r.verdict.kind(), VerdictKind::Oscillates);
        assert!(r.theorem_chain.iter().any(|c| c.contains("L_5(2,1)")), "{:?}", r.theorem_chain);
    }

    fn touching(phase: Rational, rem: RemainderModel) -> Report {
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
        classify_spectrum(&from_root_form(&rf).unwrap().unwrap(), &ClassifyOptions { terms: 100, ..Default::default() }).unwrap()
    }

    #[test]
    fn touching_zeros_and_remainder() {
        let geo = RemainderModel::Geometric { scale: rat(-1, 2), ratio: rat(-1, 2) };
        let r = touching(int(0), RemainderModel::Unknown);
        match &r.verdict {
            Verdict::TouchingZeros { classes, .. } => assert_eq!((classes.modulus, classes.residues.clone()), (4, vec![3])),
            v => panic!("{v:?}"),
        }
        assert_eq!(touching(int(0), geo.clone()).verdict.kind(), VerdictKind::EventuallyPositive);
        assert_eq!(touching(rat(3, 4), geo).verdict.kind(), VerdictKind::Oscillates);
    }

    #[test]
    fn touching_in_recurrence_mode() {
        // 1 + sin(pi n / 2) + (-1/2)^(n+1) in recurrence form: roots 1, i, -i, -1/2
        let coeffs = vec![rat(1, 2), rat(-1, 2), rat(1, 2), rat(1, 2)];
        let val = |n: i64, pat: [i64; 4]| {
            let s = pat[n.rem_euclid(4) as usize];
            int(1) + int(s) + crate::powersum::pow_rat(&rat(-1, 2), n as u64 + 1)
        };
        for (pat, want) in [([0, 1, 0, -1], VerdictKind::EventuallyPositive), ([-1, 0, 1, 0], VerdictKind::Oscillates)] {
            let init: Vec<Rational> = (0..4).map(|n| val(n, pat)).collect();
            let r = Recurrence::new(coeffs.clone(), init).unwrap();
            for n in 0..12 {
                assert_eq!(r.eval_exact(n), val(n as i64, pat));
            }
            assert_eq!(kind(&r), want);
        }
    }

    #[test]
    fn period_minimum_above_one() {
        let rf = RootForm {
            degree: 0,
            roots: vec![
                RootSpec { modulus: int(1), angle: AngleDescriptor::rational(0, 1).unwrap(), coeff: RootCoefficient::real(int(1)) },
                RootSpec {
                    modulus: int(1),
                    angle: AngleDescriptor::rational(1, 3).unwrap(),
                    coeff: RootCoefficient::Trig { w: int(-2), phase: Phase::Exact(rat(1, 4)) },
                },
            ],
            remainder: Some(RemainderModel::Vanishing),
        };
        let r = classify_spectrum(&from_root_form(&rf).unwrap().unwrap(), &ClassifyOptions::default()).unwrap();
        assert_eq!(r.verdict.kind(), VerdictKind::Oscillates);
        assert!(r.verdict.witnesses().unwrap().negative.contains(&0));
    }
}
