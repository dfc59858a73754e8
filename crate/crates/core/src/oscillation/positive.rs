//! A positive real dominating root next to oscillating terms: compare
//! `W = sum |w_k|` and `S = -inf sum w_k sin(...)` with `1`.

use num_traits::{One, Signed};

use super::period::{scan_period, sign_classes, PointSign};
use super::exact::touching_congruences;
use super::verdict::{Comparison, PositiveRealAnalysis, ResidueClasses, Witnesses};
use crate::error::{Error, Result};
use crate::exactnum::interval::{Interval, IntervalReport};
use crate::exactnum::rational::{format_rational, int, Rational};
use crate::exactnum::roots::precision_budget;
use crate::powersum::{DominantSpectrum, DominantTerm, TermKind};

/// What the comparison establishes, before any remainder information.
#[derive(Debug, Clone, PartialEq)]
pub enum PositiveOutcome {
    Eventually { sign: i8, theorem: String, bound_hint: Option<u64> },
    Oscillates { theorem: String, witnesses: Witnesses },
    /// The main term has sign `main_sign` off these classes and vanishes on them.
    Touching { classes: ResidueClasses },
    Inconclusive(String),
}

fn amplitude(t: &DominantTerm, bits: u32) -> Result<Interval> {
    Ok(match t.kind {
        TermKind::NegativeReal => t.c_box(bits)?.re.abs(),
        _ => t.w(bits)?.abs(),
    })
}

fn amplitude_exact(t: &DominantTerm) -> Option<Rational> {
    match t.kind {
        TermKind::NegativeReal => t.w_exact().map(|w| w.abs() / int(2)),
        _ => t.w_exact().map(|w| w.abs()),
    }
}

/// `W` as an enclosure, and exactly when every amplitude is exact.
fn total_amplitude(spec: &DominantSpectrum, c0: &DominantTerm, bits: u32) -> Result<(Interval, Option<Rational>)> {
    let others: Vec<&DominantTerm> = spec.terms.iter().filter(|t| t.kind != TermKind::PositiveReal).collect();
    let exact_c0 = match &c0.coeff {
        crate::powersum::Coefficient::Exact { re, .. } => Some(re.abs()),
        _ => None,
    };
    let exact: Option<Rational> = exact_c0.and_then(|c| {
        let s: Option<Rational> = others.iter().map(|t| amplitude_exact(t)).sum();
        s.map(|s| s / c)
    });
    if let Some(w) = &exact {
        return Ok((Interval::point(w.clone()), exact));
    }
    let mut sum = Interval::zero();
    for t in &others {
        sum = &sum + &amplitude(t, bits)?;
    }
    let c = c0.c_box(bits)?.re.abs();
    let inv = c.recip().ok_or_else(|| Error::PrecisionExhausted("positive root coefficient".into()))?;
    Ok(((&sum * &inv).rounded(bits + 8), None))
}

fn compare_one(w: &Interval, exact: &Option<Rational>) -> Option<Comparison> {
    let one = Rational::one();
    if let Some(e) = exact {
        return Some(match e.cmp(&one) {
            std::cmp::Ordering::Less => Comparison::Less,
            std::cmp::Ordering::Equal => Comparison::Equal,
            std::cmp::Ordering::Greater => Comparison::Greater,
        });
    }
    if w.hi() < &one {
        Some(Comparison::Less)
    } else if w.lo() > &one {
        Some(Comparison::Greater)
    } else {
        None
    }
}

/// Runs the comparison for a spectrum whose positive real term is present.
pub fn positive_real_analysis(spec: &DominantSpectrum) -> Result<(PositiveRealAnalysis, PositiveOutcome)> {
    let c0 = spec.positive_real().ok_or_else(|| Error::Hypothesis("no positive real dominating root".into()))?;
    let sigma = c0.real_sign()?;
    let mut bits = 64;
    let (w, w_exact, cmp) = loop {
        let (w, exact) = total_amplitude(spec, c0, bits)?;
        let cmp = compare_one(&w, &exact);
        if cmp.is_some() || bits * 2 > precision_budget() || spec.period().is_some() {
            break (w, exact, cmp);
        }
        bits *= 2;
    };
    let mut analysis = PositiveRealAnalysis {
        w_total: IntervalReport::from(&w),
        w_exact: w_exact.as_ref().map(format_rational),
        w_vs_one: cmp,
        s_vs_one: None,
        period: spec.period(),
        touching: None,
        congruences: vec![],
        main_sign: sigma,
    };
    if let Some((cs, _)) = touching_congruences(spec, sigma) {
        analysis.congruences = cs;
    }

    if cmp == Some(Comparison::Less) {
        let hint = bound_hint(spec, &w, c0)?;
        analysis.s_vs_one = Some(Comparison::Less);
        let outcome = PositiveOutcome::Eventually { sign: sigma, theorem: "amplitude bound W < 1".into(), bound_hint: hint };
        return Ok((analysis, outcome));
    }

    if let Some(p) = spec.period() {
        let signs = scan_period(spec, p, false)?;
        let (pos, neg, delta) = sign_classes(&signs);
        let zeros: Vec<u64> =
            signs.iter().enumerate().filter(|(_, s)| matches!(s, Some(PointSign::Zero))).map(|(n, _)| n as u64).collect();
        let against = if sigma > 0 { &neg } else { &pos };
        if !against.is_empty() {
            analysis.s_vs_one = Some(Comparison::Greater);
            let witnesses = Witnesses {
                period: Some(p),
                positive: pos.clone(),
                negative: neg.clone(),
                delta: delta.as_ref().map(format_rational),
                epsilon: None,
                effective: true,
            };
            return Ok((analysis, PositiveOutcome::Oscillates { theorem: "period minimum S > 1".into(), witnesses }));
        }
        if zeros.is_empty() {
            analysis.s_vs_one = Some(Comparison::Less);
            let outcome = PositiveOutcome::Eventually { sign: sigma, theorem: "period minimum S < 1".into(), bound_hint: None };
            return Ok((analysis, outcome));
        }
        analysis.s_vs_one = Some(Comparison::Equal);
        let classes = ResidueClasses { modulus: p, residues: zeros };
        if cmp == Some(Comparison::Equal) {
            check_congruences(&analysis, &classes)?;
        }
        analysis.touching = Some(classes.clone());
        return Ok((analysis, PositiveOutcome::Touching { classes }));
    }

    let others: Vec<&DominantTerm> = spec.terms.iter().filter(|t| t.kind != TermKind::PositiveReal).collect();
    if cmp == Some(Comparison::Greater) && others.len() == 1 && others[0].angle.is_certified_irrational() {
        analysis.s_vs_one = Some(Comparison::Greater);
        let witnesses = density_evidence(spec)?;
        let outcome = PositiveOutcome::Oscillates { theorem: "single irrational angle, density with W > 1".into(), witnesses };
        return Ok((analysis, outcome));
    }
    let reason = match cmp {
        None => "W could not be separated from 1".to_string(),
        _ => "metric regime: an irrational angle with W >= 1".to_string(),
    };
    Ok((analysis, PositiveOutcome::Inconclusive(reason)))
}

/// Zeros found over the period must be exactly the solutions of the congruences.
fn check_congruences(analysis: &PositiveRealAnalysis, classes: &ResidueClasses) -> Result<()> {
    let cs = &analysis.congruences;
    if cs.is_empty() {
        return Ok(());
    }
    let mut rs = Vec::new();
    let mut ms = Vec::new();
    for c in cs {
        let Some((r, m)) = c.solution else {
            return Err(Error::Contradiction("zeros found although a congruence is unsolvable".into()));
        };
        rs.push(r);
        ms.push(m);
    }
    let predicted: Vec<u64> = (0..classes.modulus)
        .filter(|&n| rs.iter().zip(&ms).all(|(r, m)| (n as i64 - r).rem_euclid(*m) == 0))
        .collect();
    if predicted != classes.residues {
        return Err(Error::Contradiction(format!(
            "touching zeros {:?} disagree with congruence solutions {:?}",
            classes.residues, predicted
        )));
    }
    Ok(())
}

/// An index after which `|r(n)| < (1 - W) |c0|`, from an exact remainder model.
fn bound_hint(spec: &DominantSpectrum, w: &Interval, c0: &DominantTerm) -> Result<Option<u64>> {
    let gap = Rational::one() - w.hi();
    if !gap.is_positive() {
        return Ok(None);
    }
    let c = c0.c_box(64)?.re.abs();
    Ok(spec.remainder.tail_bound(&(gap * c.lo())))
}

/// Certified signs of the main term at indices below a scan limit.
pub fn density_evidence(spec: &DominantSpectrum) -> Result<Witnesses> {
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for n in 0..2048u64 {
        let v = spec.value(n, 64)?;
        if v.lo().is_positive() && positive.len() < 8 {
            positive.push(n);
        } else if v.hi().is_negative() && negative.len() < 8 {
            negative.push(n);
        }
        if positive.len() >= 8 && negative.len() >= 8 {
            break;
        }
    }
    Ok(Witnesses { period: None, positive, negative, delta: None, epsilon: None, effective: false })
}
