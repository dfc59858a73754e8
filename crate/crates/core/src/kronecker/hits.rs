//! Does `n (xi1, xi2) mod 1` enter the open quarter square around `c`
//! infinitely often?

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::angle::AngleDescriptor;
use super::relation::{RelationCase, RelationReport};
use crate::error::{Error, Result};
use crate::exactnum::interval::Interval;
use crate::exactnum::rational::{int, opt_as_string, rat, Rational};

const PERIOD_CAP: i64 = 1 << 20;
const SCAN_LIMIT: u64 = 4096;
const MAX_LISTED: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HitOutcome {
    InfinitelyManyHits,
    NoHits,
    UnknownAtBound,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HitVerdict {
    pub outcome: HitOutcome,
    /// The shrunken square `S_{1/4 - epsilon}(c)` is still hit infinitely often.
    #[serde(with = "opt_as_string")]
    pub epsilon: Option<Rational>,
    /// For a finite orbit: residues `n mod period` landing in the square.
    pub period: Option<u64>,
    pub residues: Vec<u64>,
    /// Indices `n` whose point was certified to lie in the square.
    pub witnesses: Vec<u64>,
    pub route: String,
}

/// Whether the point with coordinate enclosure `x` lies within `1/4` of `c`
/// modulo 1, and by how much. `None` when the enclosures are too wide to say.
pub fn quarter_membership(x: &Interval, c: &Interval) -> Option<(bool, Rational)> {
    let d = x - c;
    let k = d.mid().round();
    let d = &d - &Interval::point(k);
    let half = rat(1, 2);
    if d.hi() > &half || d.lo() < &-half.clone() {
        return None;
    }
    let dist = d.abs();
    let q = rat(1, 4);
    if dist.hi() < &q {
        Some((true, q - dist.hi()))
    } else if dist.lo() >= &q {
        Some((false, dist.lo() - q))
    } else {
        None
    }
}

fn check_angle(x: &AngleDescriptor) -> Result<()> {
    if x.is_zero() || x.is_half() {
        return Err(Error::Hypothesis("angles must avoid 0 and 1/2".into()));
    }
    Ok(())
}

/// Certified hits among `n < limit` (multiples of `step`), from enclosures.
fn scan_witnesses(x1: &AngleDescriptor, x2: Option<&AngleDescriptor>, c1: &Interval, c2: &Interval, step: u64) -> Result<Vec<u64>> {
    let bits = 64;
    let t1 = x1.turns(bits)?;
    let t2 = match x2 {
        Some(x) => Some(x.turns(bits)?),
        None => None,
    };
    let mut out = Vec::new();
    let mut n = step;
    while n < SCAN_LIMIT && out.len() < 8 {
        let nn = int(n as i64);
        let p1 = t1.scale(&nn);
        let p2 = match &t2 {
            Some(t) => t.scale(&nn),
            None => Interval::point(rat(n as i64, 2)),
        };
        if let (Some((true, _)), Some((true, _))) = (quarter_membership(&p1, c1), quarter_membership(&p2, c2)) {
            out.push(n);
        }
        n += step;
    }
    Ok(out)
}

/// Decides whether the square `S_{1/4}(c)` is hit infinitely often, given the
/// relation between the two angles.
pub fn hits_square(x1: &AngleDescriptor, x2: &AngleDescriptor, c: (&Interval, &Interval), rel: &RelationReport) -> Result<HitVerdict> {
    check_angle(x1)?;
    check_angle(x2)?;
    match rel.case {
        RelationCase::Case3 { a1, b1, a2, b2 } => finite_orbit(a1, b1, a2, b2, c),
        RelationCase::Case2 { u1, u2, .. } => {
            let s = u1.abs() + u2.abs();
            if s < 3 {
                return Err(Error::Hypothesis(format!("relation ({u1}, {u2}) forces xi1 = +-xi2 or a degenerate angle")));
            }
            // the orbit closure is the line family u1 x1 + u2 x2 in Z, whose lines
            // are spaced closer than the side of the square
            let eps = (rat(1, 4) - rat(1, 2 * s)) / int(2);
            Ok(HitVerdict {
                outcome: HitOutcome::InfinitelyManyHits,
                epsilon: Some(eps),
                period: None,
                residues: vec![],
                witnesses: scan_witnesses(x1, Some(x2), c.0, c.1, 1)?,
                route: "line family".into(),
            })
        }
        RelationCase::Case1 => Ok(HitVerdict {
            outcome: HitOutcome::InfinitelyManyHits,
            epsilon: Some(rat(1, 8)),
            period: None,
            residues: vec![],
            witnesses: scan_witnesses(x1, Some(x2), c.0, c.1, 1)?,
            route: "density".into(),
        }),
    }
}

fn finite_orbit(a1: i64, b1: i64, a2: i64, b2: i64, c: (&Interval, &Interval)) -> Result<HitVerdict> {
    if rat(a1, b1) == rat(a2, b2) || (rat(a1, b1) + rat(a2, b2)).is_integer() {
        return Err(Error::Hypothesis(format!("{a1}/{b1} = +-{a2}/{b2} mod 1")));
    }
    let p = b1.lcm(&b2);
    if p > PERIOD_CAP {
        return Err(Error::InvalidInput(format!("period {p} exceeds the scan cap")));
    }
    let mut residues = Vec::new();
    let mut unknown = false;
    let mut margin: Option<Rational> = None;
    for n in 0..p {
        let x1 = Interval::point(rat((n * a1).rem_euclid(b1), b1));
        let x2 = Interval::point(rat((n * a2).rem_euclid(b2), b2));
        match (quarter_membership(&x1, c.0), quarter_membership(&x2, c.1)) {
            (Some((true, m1)), Some((true, m2))) => {
                let m = m1.min(m2);
                margin = Some(margin.map_or(m.clone(), |old: Rational| old.min(m)));
                residues.push(n as u64);
            }
            (Some((false, _)), _) | (_, Some((false, _))) => {}
            _ => unknown = true,
        }
    }
    let outcome = if !residues.is_empty() {
        HitOutcome::InfinitelyManyHits
    } else if unknown {
        HitOutcome::UnknownAtBound
    } else {
        HitOutcome::NoHits
    };
    let witnesses = residues.iter().take(8).copied().collect();
    residues.truncate(MAX_LISTED);
    Ok(HitVerdict { outcome, epsilon: margin, period: Some(p as u64), residues, witnesses, route: "finite orbit".into() })
}

/// For a single angle paired with `1/2`: a centre `c2` in `{0, 1/2}` and a
/// margin such that `S_{1/4 - epsilon}(c1, c2)` is hit infinitely often by
/// `n (xi1, 1/2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HalfAngleHit {
    #[serde(with = "crate::exactnum::rational::as_string")]
    pub c2: Rational,
    pub verdict: HitVerdict,
}

pub fn half_angle_hit(x1: &AngleDescriptor, c1: &Interval) -> Result<HalfAngleHit> {
    check_angle(x1)?;
    if let Some((a, b)) = x1.as_rational() {
        let p = b.lcm(&2);
        let mut hits: Vec<(i64, Rational)> = Vec::new();
        let mut unknown = false;
        for n in 0..p {
            let x = Interval::point(rat((n * a).rem_euclid(b), b));
            match quarter_membership(&x, c1) {
                Some((true, m)) => hits.push((n, m)),
                Some((false, _)) => {}
                None => unknown = true,
            }
        }
        let Some(&(n0, _)) = hits.first() else {
            let outcome = if unknown { HitOutcome::UnknownAtBound } else { HitOutcome::NoHits };
            return Ok(HalfAngleHit {
                c2: Rational::zero(),
                verdict: HitVerdict { outcome, epsilon: None, period: Some(p as u64), residues: vec![], witnesses: vec![], route: "finite orbit".into() },
            });
        };
        let parity = n0 % 2;
        let chosen: Vec<&(i64, Rational)> = hits.iter().filter(|(n, _)| n % 2 == parity).collect();
        let eps = chosen.iter().map(|(_, m)| m.clone()).min().map(|m| m / int(2));
        let residues: Vec<u64> = chosen.iter().map(|(n, _)| *n as u64).collect();
        return Ok(HalfAngleHit {
            c2: rat(parity, 2),
            verdict: HitVerdict {
                outcome: HitOutcome::InfinitelyManyHits,
                epsilon: eps,
                period: Some(p as u64),
                witnesses: residues.iter().take(8).copied().collect(),
                residues,
                route: "finite orbit".into(),
            },
        });
    }
    // even multiples 2m xi1 are dense when xi1 is irrational
    let c2 = Interval::zero();
    Ok(HalfAngleHit {
        c2: Rational::zero(),
        verdict: HitVerdict {
            outcome: HitOutcome::InfinitelyManyHits,
            epsilon: Some(rat(1, 8)),
            period: None,
            residues: vec![],
            witnesses: scan_witnesses(x1, None, c1, &c2, 2)?,
            route: "density".into(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kronecker::relation::classify_pair;

    fn pt(q: Rational) -> Interval {
        Interval::point(q)
    }

    #[test]
    fn finite_orbits() {
        let x1 = AngleDescriptor::rational(7, 10).unwrap();
        let x2 = AngleDescriptor::rational(1, 5).unwrap();
        let rel = classify_pair(&x1, &x2, 50).unwrap();
        // n = 1, 5, 9 land within 1/5 of (1/2, 0) in both coordinates
        let v = hits_square(&x1, &x2, (&pt(rat(1, 2)), &pt(int(0))), &rel).unwrap();
        assert_eq!(v.outcome, HitOutcome::InfinitelyManyHits);
        assert_eq!(v.residues, vec![1, 5, 9]);
        assert_eq!(v.period, Some(10));
        // an empty square of the exceptional pair (2/5, 1/5)
        let y1 = AngleDescriptor::rational(2, 5).unwrap();
        let y2 = AngleDescriptor::rational(1, 5).unwrap();
        let (e1, e2) = crate::unitlattice::torus::empty_square_witness(2, 5, 1, 5).unwrap().unwrap();
        let rel_y = classify_pair(&y1, &y2, 50).unwrap();
        let v = hits_square(&y1, &y2, (&pt(e1), &pt(e2)), &rel_y).unwrap();
        assert_eq!(v.outcome, HitOutcome::NoHits);
        let near = Interval::new(rat(1, 4) - rat(1, 1000), rat(1, 4) + rat(1, 1000));
        let v = hits_square(&x1, &x2, (&near, &pt(rat(7, 20))), &rel).unwrap();
        assert_ne!(v.outcome, HitOutcome::NoHits);
    }

    #[test]
    fn line_family_margin() {
        let s = AngleDescriptor::quadratic(int(0), int(2), int(2)).unwrap();
        let t = AngleDescriptor::quadratic(int(-1), int(1), int(2)).unwrap();
        let rel = classify_pair(&s, &t, 50).unwrap();
        let v = hits_square(&s, &t, (&pt(rat(1, 3)), &pt(rat(1, 5))), &rel).unwrap();
        assert_eq!(v.epsilon, Some(rat(1, 24)));
        assert!(!v.witnesses.is_empty());
        let same = classify_pair(&s, &s, 50).unwrap();
        assert!(hits_square(&s, &s, (&pt(int(0)), &pt(int(0))), &same).is_err());
    }

    #[test]
    fn half_angle() {
        let x = AngleDescriptor::rational(1, 4).unwrap();
        let h = half_angle_hit(&x, &pt(int(0))).unwrap();
        assert_eq!(h.c2, int(0));
        assert_eq!(h.verdict.residues, vec![0]);
        let h = half_angle_hit(&x, &pt(rat(3, 4))).unwrap();
        assert_eq!(h.c2, rat(1, 2));
        assert_eq!(h.verdict.residues, vec![3]);
        assert!(half_angle_hit(&AngleDescriptor::rational(1, 2).unwrap(), &pt(int(0))).is_err());
    }
}
