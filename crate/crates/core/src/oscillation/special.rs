//! Pairs of rational angles: the exceptional denominators, and sign-pattern
//! witnesses from the quarter-square argument otherwise.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::period::{scan_period, PointSign};
use crate::error::{Error, Result};
use crate::exactnum::interval::Interval;
use crate::exactnum::rational::{as_string, int, rat, Rational};
use crate::exactnum::trig::sin_cos_turns;
use crate::kronecker::{hits_square, classify_pair, AngleDescriptor, HitOutcome, DEFAULT_RELATION_BOUND};
use crate::powersum::{from_root_form, Phase, RootCoefficient, RootForm, RootSpec};
use crate::unitlattice::torus::{check_theorem_hypotheses, is_exceptional_pair};

fn ordered(x1: &AngleDescriptor, x2: &AngleDescriptor) -> Result<(i64, i64, i64, i64)> {
    let (Some((a1, b1)), Some((a2, b2))) = (x1.as_rational(), x2.as_rational()) else {
        return Err(Error::Hypothesis("both angles must be rational".into()));
    };
    Ok(if b2 <= b1 { (a1, b1, a2, b2) } else { (a2, b2, a1, b1) })
}

/// Whether the rational pair has denominators `(6, 3)`, `(8, 4)` or `(5, 5)`.
pub fn is_special_pair(x1: &AngleDescriptor, x2: &AngleDescriptor) -> bool {
    match ordered(x1, x2) {
        Ok((a1, b1, a2, b2)) => check_theorem_hypotheses(a1, b1, a2, b2).is_ok() && b2 > 2 && is_exceptional_pair(b1, b2),
        Err(_) => false,
    }
}

/// Indices within one period where `w1 sin(2 pi (n xi1 + phi1)) + w2 sin(2 pi (n xi2 + phi2))`
/// is certified positive and negative, for one of the exceptional pairs.
pub fn special_theta_oscillates(
    xi: (&AngleDescriptor, &AngleDescriptor),
    w: (&Rational, &Rational),
    phi: (&Phase, &Phase),
) -> Result<(u64, u64)> {
    if !is_special_pair(xi.0, xi.1) {
        return Err(Error::Hypothesis("angles are not one of the exceptional pairs".into()));
    }
    if w.0.is_zero() || w.1.is_zero() {
        return Err(Error::Hypothesis("amplitudes must be nonzero".into()));
    }
    let spec = |x: &AngleDescriptor, w: &Rational, p: &Phase| RootSpec {
        modulus: int(1),
        angle: x.clone(),
        coeff: RootCoefficient::Trig { w: w.clone(), phase: p.clone() },
    };
    let rf = RootForm { degree: 0, roots: vec![spec(xi.0, w.0, phi.0), spec(xi.1, w.1, phi.1)], remainder: None };
    let s = from_root_form(&rf)?.ok_or_else(|| Error::InvalidInput("empty spectrum".into()))?;
    let period = s.period().expect("rational angles");
    let signs = scan_period(&s, period, true)?;
    let pos = signs.iter().position(|v| matches!(v, Some(PointSign::Positive(_))));
    let neg = signs.iter().position(|v| matches!(v, Some(PointSign::Negative(_))));
    match (pos, neg) {
        (Some(p), Some(n)) => Ok((p as u64, n as u64)),
        _ => Err(Error::Contradiction("exceptional pair without both signs over a period".into())),
    }
}

/// Residue classes where both sines are positive, and where both are negative.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Case3Witnesses {
    pub period: u64,
    pub positive: Vec<u64>,
    pub negative: Vec<u64>,
    /// Every listed sine value has modulus at least `delta`.
    #[serde(with = "as_string")]
    pub delta: Rational,
}

/// Sign-pattern classes `(+, +)` and `(-, -)` for
/// `(sin(2 pi (n xi1 + phi1)), sin(2 pi (n xi2 + phi2)))` over the finite orbit.
pub fn oscillation_witnesses_case3(
    x1: &AngleDescriptor,
    x2: &AngleDescriptor,
    phi1: &Interval,
    phi2: &Interval,
) -> Result<Case3Witnesses> {
    let (a1, b1, a2, b2) = ordered(x1, x2)?;
    check_theorem_hypotheses(a1, b1, a2, b2)?;
    if is_exceptional_pair(b1, b2) {
        return Err(Error::Hypothesis(format!(
            "denominators ({b1}, {b2}) are exceptional: some quarter square is missed"
        )));
    }
    let rel = classify_pair(x1, x2, DEFAULT_RELATION_BOUND)?;
    let center = |q: Rational, phi: &Interval| &Interval::point(q) - phi;
    let mut classes = Vec::new();
    for q in [rat(1, 4), rat(3, 4)] {
        let c1 = center(q.clone(), phi1);
        let c2 = center(q, phi2);
        let v = hits_square(x1, x2, (&c1, &c2), &rel)?;
        match v.outcome {
            HitOutcome::InfinitelyManyHits => classes.push((v.period.expect("finite orbit"), v.residues)),
            HitOutcome::NoHits => {
                return Err(Error::Contradiction("a quarter square is missed by a non-exceptional pair".into()))
            }
            HitOutcome::UnknownAtBound => {
                return Err(Error::PrecisionExhausted("phase enclosures too wide to place the orbit".into()))
            }
        }
    }
    let period = classes[0].0;
    let bits = 64;
    let mut delta: Option<Rational> = None;
    for (residues, (xa, pa)) in classes.iter().map(|c| &c.1).flat_map(|r| [(r, (x1, phi1)), (r, (x2, phi2))]) {
        let (k, m) = xa.as_rational().expect("rational");
        for &n in residues {
            let t = &Interval::point(rat((n as i64 * k).rem_euclid(m), m)) + pa;
            let (s, _) = sin_cos_turns(&t, bits);
            let lo = s.abs().lo().clone();
            if delta.as_ref().is_none_or(|d| &lo < d) {
                delta = Some(lo);
            }
        }
    }
    let delta = delta.unwrap_or_else(Rational::zero);
    if !delta.is_positive() {
        return Err(Error::PrecisionExhausted("sine values not separated from zero".into()));
    }
    Ok(Case3Witnesses { period, positive: classes[0].1.clone(), negative: classes[1].1.clone(), delta })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ang(k: i64, n: i64) -> AngleDescriptor {
        AngleDescriptor::rational(k, n).unwrap()
    }

    fn pt(q: Rational) -> Interval {
        Interval::point(q)
    }

    #[test]
    fn exceptional_pairs_scan() {
        let z = Phase::Exact(int(0));
        let (p, n) = special_theta_oscillates((&ang(1, 8), &ang(1, 4)), (&int(1), &int(1)), (&z, &z)).unwrap();
        assert!(p < 8 && n < 8);
        let (p, n) = special_theta_oscillates((&ang(1, 6), &ang(1, 3)), (&int(1), &int(-1)), (&z, &z)).unwrap();
        assert!(p < 6 && n < 6);
        let q = Phase::Exact(rat(1, 4));
        assert!(special_theta_oscillates((&ang(2, 5), &ang(1, 5)), (&int(1), &int(1)), (&q, &q)).is_ok());
        assert!(special_theta_oscillates((&ang(1, 7), &ang(1, 3)), (&int(1), &int(1)), (&z, &z)).is_err());
    }

    #[test]
    fn case3_patterns() {
        for (x, y, p) in [((7, 10), (1, 5), 10), ((1, 3), (1, 7), 21)] {
            let w = oscillation_witnesses_case3(&ang(x.0, x.1), &ang(y.0, y.1), &pt(int(0)), &pt(int(0))).unwrap();
            assert_eq!(w.period, p);
            assert!(!w.positive.is_empty() && !w.negative.is_empty());
            assert!(w.delta.is_positive());
        }
        let e = oscillation_witnesses_case3(&ang(1, 5), &ang(2, 5), &pt(int(0)), &pt(int(0)));
        assert!(matches!(e, Err(Error::Hypothesis(_))));
    }
}
