//! Integer relations `u1 xi1 + u2 xi2 = v` between two angles.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::angle::AngleDescriptor;
use crate::error::{Error, Result};
use crate::exactnum::interval::Interval;
use crate::exactnum::poly::RatPoly;
use crate::exactnum::rational::{int, sqrt_exact, Rational};
use crate::exactnum::roots::{isolate_squarefree_to, locate, same_number, AlgebraicRoot};

pub const DEFAULT_RELATION_BOUND: u32 = 50;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum RelationCase {
    /// No relation (independent over the rationals together with 1).
    Case1,
    /// Exactly one primitive relation `u1 xi1 + u2 xi2 = v`.
    Case2 { u1: i64, u2: i64, v: i64 },
    /// Both angles rational: `xi_k = a_k / b_k`.
    Case3 { a1: i64, b1: i64, a2: i64, b2: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    Proved,
    UpToBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    #[serde(flatten)]
    pub case: RelationCase,
    pub search_bound: u32,
    pub certainty: Certainty,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RelationReport {
    fn new(case: RelationCase, bound: u32, certainty: Certainty, note: Option<String>) -> Self {
        RelationReport { case, search_bound: bound, certainty, note }
    }

    /// The same relation with the roles of the two angles exchanged.
    pub fn swapped(&self) -> RelationReport {
        let case = match &self.case {
            RelationCase::Case1 => RelationCase::Case1,
            RelationCase::Case2 { u1, u2, v } => {
                let (u1, u2, v) = normalize(*u2, *u1, *v);
                RelationCase::Case2 { u1, u2, v }
            }
            RelationCase::Case3 { a1, b1, a2, b2 } => RelationCase::Case3 { a1: *a2, b1: *b2, a2: *a1, b2: *b1 },
        };
        RelationReport { case, ..self.clone() }
    }
}

/// Divides by the gcd and makes the first nonzero of `(u1, u2)` positive.
pub fn normalize(u1: i64, u2: i64, v: i64) -> (i64, i64, i64) {
    let g = u1.gcd(&u2).gcd(&v).max(1);
    let (mut u1, mut u2, mut v) = (u1 / g, u2 / g, v / g);
    if u1 < 0 || (u1 == 0 && u2 < 0) {
        u1 = -u1;
        u2 = -u2;
        v = -v;
    }
    (u1, u2, v)
}

fn to_i64(q: &Rational) -> Result<i64> {
    q.to_integer().try_into().map_err(|_| Error::InvalidInput("relation coefficient too large".into()))
}

/// Decides which of the three cases the pair falls into.
pub fn classify_pair(x1: &AngleDescriptor, x2: &AngleDescriptor, bound: u32) -> Result<RelationReport> {
    use AngleDescriptor as A;
    if bound < 1 {
        return Err(Error::InvalidInput("relation search bound must be at least 1".into()));
    }
    match (x1, x2) {
        (A::Rational { k: a1, n: b1 }, A::Rational { k: a2, n: b2 }) => Ok(RelationReport::new(
            RelationCase::Case3 { a1: *a1, b1: *b1, a2: *a2, b2: *b2 },
            bound,
            Certainty::Proved,
            None,
        )),
        (A::Rational { k, n }, other) | (other, A::Rational { k, n }) if other.is_certified_irrational() => {
            let (u1, u2, v) = if matches!(x1, A::Rational { .. }) { normalize(*n, 0, *k) } else { normalize(0, *n, *k) };
            Ok(RelationReport::new(RelationCase::Case2 { u1, u2, v }, bound, Certainty::Proved, None))
        }
        (A::QuadraticIrrational { a: a1, b: b1, r: r1 }, A::QuadraticIrrational { a: a2, b: b2, r: r2 }) => {
            match sqrt_exact(&(r2 / r1)) {
                None => Ok(RelationReport::new(
                    RelationCase::Case1,
                    bound,
                    Certainty::Proved,
                    Some("1, sqrt(r1), sqrt(r2) are linearly independent: radicands in distinct square classes".into()),
                )),
                Some(q) => {
                    // u1 b1 + u2 b2 q = 0, then v = u1 a1 + u2 a2 must be an integer
                    let p1 = b2 * &q;
                    let p2 = -b1.clone();
                    let den = p1.denom().lcm(p2.denom());
                    let n1 = &p1 * Rational::from_integer(den.clone());
                    let n2 = &p2 * Rational::from_integer(den);
                    let t = &n1 * a1 + &n2 * a2;
                    let scale = Rational::from_integer(t.denom().clone());
                    let (u1, u2, v) = normalize(to_i64(&(n1 * &scale))?, to_i64(&(n2 * &scale))?, to_i64(&(t * &scale))?);
                    Ok(RelationReport::new(RelationCase::Case2 { u1, u2, v }, bound, Certainty::Proved, None))
                }
            }
        }
        (A::Algebraic { .. }, A::QuadraticIrrational { .. }) | (A::QuadraticIrrational { .. }, A::Algebraic { .. }) => {
            Ok(RelationReport::new(
                RelationCase::Case1,
                bound,
                Certainty::Proved,
                Some("e^{2 pi i xi} is algebraic for one angle and transcendental for every nonzero multiple of the other".into()),
            ))
        }
        _ => sieve(x1, x2, bound),
    }
}

/// Searches `|u1|, |u2| <= bound` for `2 (u1 xi1 + u2 xi2)` close to an integer,
/// then verifies candidates exactly when both angles are algebraic.
fn sieve(x1: &AngleDescriptor, x2: &AngleDescriptor, bound: u32) -> Result<RelationReport> {
    let bits = 80;
    let t1 = x1.turns(bits)?;
    let t2 = x2.turns(bits)?;
    let both_algebraic = matches!((x1, x2), (AngleDescriptor::Algebraic { .. }, AngleDescriptor::Algebraic { .. }));
    let tol = Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 40));
    let b = bound as i64;
    let mut cands: Vec<(i64, i64, i64)> = Vec::new();
    for u1 in 0..=b {
        for u2 in -b..=b {
            if u1 == 0 && u2 <= 0 {
                continue;
            }
            let val = (&t1.scale(&int(2 * u1)) + &t2.scale(&int(2 * u2))).clone();
            let v = val.mid().round();
            let near = if both_algebraic {
                (&val - &Interval::point(v.clone())).abs().hi() < &tol
            } else {
                val.contains(&v)
            };
            if near {
                cands.push((u1, u2, to_i64(&v)?));
            }
        }
    }
    cands.sort_by_key(|&(u1, u2, _)| (u1.abs().max(u2.abs()), u1, u2));
    for (u1, u2, big_v) in cands {
        let (r1, r2, r3) = normalize(2 * u1, 2 * u2, big_v);
        let case = RelationCase::Case2 { u1: r1, u2: r2, v: r3 };
        if !both_algebraic {
            return Ok(RelationReport::new(case, bound, Certainty::UpToBound, Some("relation found numerically, not verified".into())));
        }
        if verify_unit_relation(x1, x2, u1, u2)? {
            return Ok(RelationReport::new(case, bound, Certainty::Proved, None));
        }
    }
    Ok(RelationReport::new(RelationCase::Case1, bound, Certainty::UpToBound, None))
}

/// `beta1^u1 beta2^u2 = 1` for the unit ratios `beta_k = e^{4 pi i xi_k}`.
fn verify_unit_relation(x1: &AngleDescriptor, x2: &AngleDescriptor, u1: i64, u2: i64) -> Result<bool> {
    let (AngleDescriptor::Algebraic { ratio: b1, .. }, AngleDescriptor::Algebraic { ratio: b2, .. }) = (x1, x2) else {
        return Ok(false);
    };
    if u1 == 0 || u2 == 0 {
        // a single power equal to 1 would make the ratio a root of unity
        return Ok(false);
    }
    let g1 = power_root(b1, u1)?;
    let g2 = power_root(b2, -u2)?;
    same_number(&g1, &g2)
}

/// `beta^e` as an algebraic number, `e != 0`.
pub fn power_root(beta: &AlgebraicRoot, e: i64) -> Result<AlgebraicRoot> {
    let f = beta.defining();
    let k = f.deg();
    let p = e.unsigned_abs() as usize;
    let pts: Vec<(Rational, Rational)> = (0..=k)
        .map(|j| {
            let z = int(j as i64);
            let mut g = vec![Rational::zero(); p + 1];
            g[0] = z.clone();
            g[p] = int(-1);
            (z, RatPoly::resultant(f, &RatPoly::new(g)))
        })
        .collect();
    let mut poly = RatPoly::interpolate(&pts);
    if e < 0 {
        poly = poly.reversed(poly.deg());
    }
    let sq = poly.squarefree_part();
    let roots = isolate_squarefree_to(&sq, 0)?;
    let mut b = beta.clone();
    let idx = locate(
        |bits| {
            let bx = b.enclosure_at(bits + 8 + 2 * (64 - (p as u64).leading_zeros()))?;
            let pw = bx.pow(p as u32, bits + 32);
            let v = if e < 0 { pw.recip().ok_or_else(|| Error::PrecisionExhausted("power of unit ratio".into()))? } else { pw };
            Ok(v)
        },
        &roots,
    )?;
    Ok(roots[idx].clone())
}

/// Sanity condition on a relation between two non-rational angles that are not
/// `+-` each other: `max(|u1|, |u2|) >= 2`.
pub fn relation_spacing_ok(u1: i64, u2: i64) -> bool {
    u1.abs().max(u2.abs()) >= 2
}

pub fn is_negligible(q: &Rational) -> bool {
    q.abs() < Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 40))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;
    use crate::exactnum::roots::isolate_roots;
    use crate::kronecker::angle::angle_of_root;

    fn upper(p: &[i64]) -> AngleDescriptor {
        let r = isolate_roots(&RatPoly::from_i64(p)).unwrap().into_iter().find(|r| r.enclosure().im.is_positive()).unwrap();
        angle_of_root(&r).unwrap()
    }

    #[test]
    fn rational_and_quadratic_cases() {
        let a = AngleDescriptor::rational(7, 10).unwrap();
        let b = AngleDescriptor::rational(1, 5).unwrap();
        assert!(matches!(classify_pair(&a, &b, 50).unwrap().case, RelationCase::Case3 { .. }));
        let s = AngleDescriptor::quadratic(int(0), int(2), int(2)).unwrap();
        let t = AngleDescriptor::quadratic(int(-1), int(1), int(2)).unwrap();
        let r = classify_pair(&s, &t, 50).unwrap();
        assert_eq!(r.case, RelationCase::Case2 { u1: 1, u2: -2, v: 2 });
        assert_eq!(r.certainty, Certainty::Proved);
        assert_eq!(classify_pair(&t, &s, 50).unwrap(), r.swapped());
        let u = AngleDescriptor::quadratic(rat(1, 3), int(1), int(3)).unwrap();
        assert_eq!(classify_pair(&s, &u, 50).unwrap().case, RelationCase::Case1);
    }

    #[test]
    fn algebraic_with_rational() {
        let x = upper(&[25, -6, 1]); // 3 + 4i
        let r = classify_pair(&x, &AngleDescriptor::rational(1, 3).unwrap(), 50).unwrap();
        assert_eq!(r.case, RelationCase::Case2 { u1: 0, u2: 3, v: 1 });
    }

    #[test]
    fn algebraic_relations_are_verified() {
        // alpha = 3 + 4i and its square -7 + 24i: 2 xi1 - xi2 = 0
        let x = upper(&[25, -6, 1]);
        let y = upper(&[625, 14, 1]);
        let r = classify_pair(&x, &y, 10).unwrap();
        assert_eq!(r.case, RelationCase::Case2 { u1: 2, u2: -1, v: 0 });
        assert_eq!(r.certainty, Certainty::Proved);
        // (3 + 4i)(1 + 2i)^2 = -25 gives xi1 + 2 xi2 = 1/2
        let z = upper(&[5, -2, 1]);
        assert_eq!(classify_pair(&x, &z, 6).unwrap().case, RelationCase::Case2 { u1: 2, u2: 4, v: 1 });
        // 3 + 4i against 1 + i sqrt 2: no small relation
        let z = upper(&[3, -2, 1]);
        let r = classify_pair(&x, &z, 6).unwrap();
        assert_eq!(r.case, RelationCase::Case1);
        assert_eq!(r.certainty, Certainty::UpToBound);
    }
}
