//! Certificates that every quarter square on the torus meets a finite orbit.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::lattice::{bender_guarantee, minkowski_holds, short_vector_bound, LatticeBasis2, LgLattice, SuccessiveMinima, Vec2};
use super::torus::{check_theorem_hypotheses, empty_square_center, empty_square_witness, is_exceptional_pair, multiples_mod1};
use crate::error::{Error, Result};
use crate::exactnum::rational::{format_rational, int, rat};
use crate::exactnum::trig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HitBranch {
    SmallTable,
    Bender,
    ShortVector,
    Exhaustive,
}

/// Outcome of [`square_always_hit`], with the data each branch relied on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HitCertificate {
    pub g: i64,
    pub a: Vec2,
    pub always_hit: bool,
    pub branch: HitBranch,
    pub basis: LatticeBasis2,
    pub minima: SuccessiveMinima,
    pub minkowski: bool,
    /// Representative lattice of the small-g table, after symmetry reduction.
    pub table_representative: Option<Vec2>,
    pub short_vector: Option<Vec2>,
    pub short_vector_inequality: Option<bool>,
    pub a_max: Option<String>,
    /// Lower-left corner, in lattice coordinates, of an empty square of side `g/2`.
    pub empty_corner: Option<(String, String)>,
    pub notes: Vec<String>,
}

const SMALL_TABLE: [(i64, i64, i64); 3] = [(7, 1, 3), (8, 3, 1), (9, 2, 1)];

/// Slopes `k` reachable from `k` by the reflections `s`, `tau` (and unit scaling):
/// `k, -k, 1/k, -1/k` modulo `g`.
fn slope_orbit(k: i64, g: i64) -> Vec<i64> {
    let inv = super::lattice::mod_inverse(k, g).expect("unit slope");
    let mut v = vec![k.rem_euclid(g), (-k).rem_euclid(g), inv, (-inv).rem_euclid(g)];
    v.sort();
    v.dedup();
    v
}

/// Decides whether every open square of side `g/2` meets `L_g(a1, a2)`,
/// following the chain: small-g table, Bender, one short vector, exhaustion.
pub fn square_always_hit(g: i64, a1: i64, a2: i64) -> Result<HitCertificate> {
    if g < 3 {
        return Err(Error::Hypothesis(format!("g = {g} must be at least 3")));
    }
    let lat = LgLattice::new(g, a1, a2)?;
    let (a1, a2) = lat.a();
    if (a1 - a2).rem_euclid(g) == 0 || (a1 + a2).rem_euclid(g) == 0 {
        return Err(Error::Hypothesis(format!("a1 = +-a2 mod {g}")));
    }
    let basis = lat.reduced_basis();
    let minima = lat.successive_minima();
    let mut cert = HitCertificate {
        g,
        a: (a1, a2),
        always_hit: false,
        branch: HitBranch::Exhaustive,
        basis,
        minkowski: minkowski_holds(minima.lambda1_sq, minima.lambda2_sq, g),
        minima: minima.clone(),
        table_representative: None,
        short_vector: None,
        short_vector_inequality: None,
        a_max: None,
        empty_corner: None,
        notes: vec![],
    };

    // (i) g = 7, 8, 9: reduce to one representative lattice by symmetry
    if let Some(&(_, r1, r2)) = SMALL_TABLE.iter().find(|t| t.0 == g) {
        let rep = LgLattice::new(g, r1, r2)?;
        if slope_orbit(lat.slope(), g).contains(&rep.slope()) {
            cert.table_representative = Some((r1, r2));
            if exhaustive_hit(g, r1, r2)? {
                cert.always_hit = true;
                cert.branch = HitBranch::SmallTable;
                return Ok(cert);
            }
            cert.notes.push("table representative failed exhaustive check".into());
        }
    }

    let side = rat(g, 2);
    // (ii) two short vectors: Bender with the longer basis vector first
    if 16 * minima.lambda2_sq < g * g {
        let longer_first = LatticeBasis2 { v1: basis.v2, v2: basis.v1 };
        if bender_guarantee(&longer_first, &side) {
            cert.always_hit = true;
            cert.branch = HitBranch::Bender;
            return Ok(cert);
        }
        cert.notes.push("lambda2 < g/4 but the Bender condition fails".into());
    }

    // (iii) one very short vector: lambda1 <= 16/pi
    let pi = trig::pi_fixed();
    let bound_sq = int(256) / pi.square().hi();
    if int(minima.lambda1_sq) <= bound_sq {
        let w = minima.witnesses.0;
        let (x, y) = (w.0.abs(), w.1.abs());
        let r = if x >= y { (x, y) } else { (y, x) };
        cert.short_vector = Some(r);
        if r.1 > 0 && r.0.gcd(&r.1) == 1 {
            let ineq = 4 * r.0 * r.1 < g * (r.0 + r.1 - 2);
            let amax = short_vector_bound(r, g)?;
            cert.short_vector_inequality = Some(ineq);
            cert.a_max = Some(format_rational(&amax));
            if ineq && side > amax {
                cert.always_hit = true;
                cert.branch = HitBranch::ShortVector;
                return Ok(cert);
            }
        } else {
            cert.notes.push(format!("short vector {r:?} is not primitive with 0 < r2 <= r1"));
        }
    }

    // (iv) exhaustive critical placements
    let ps = multiples_mod1(a1, g, a2, g)?;
    match empty_square_center(&ps) {
        None => cert.always_hit = true,
        Some(c) => {
            cert.empty_corner = Some((format_rational(&((&c.0 - rat(1, 4)) * int(g))), format_rational(&((&c.1 - rat(1, 4)) * int(g)))));
        }
    }
    cert.branch = HitBranch::Exhaustive;
    Ok(cert)
}

/// No empty quarter square for `(a1/g, a2/g)`, by exhaustion.
pub fn exhaustive_hit(g: i64, a1: i64, a2: i64) -> Result<bool> {
    let ps = multiples_mod1(a1.rem_euclid(g), g, a2.rem_euclid(g), g)?;
    Ok(empty_square_center(&ps).is_none())
}

/// Which argument settles the rational pair `(a1/b1, a2/b2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum RationalRoute {
    /// `(b1, b2)` is exceptional: an empty square exists.
    Exceptional { center: (String, String) },
    /// `gcd(b1, b2) = 1`: the lattice is all of `Z^2`.
    Coprime,
    /// `gcd(b1, b2) = 2`.
    GcdTwo,
    /// `b1 = 2g`, `b2 = g`, `g >= 5`.
    TwiceG,
    /// `b1 >= 3g`.
    ThriceG,
    /// `b1 = b2 = g`.
    EqualDenominators { certificate: Box<HitCertificate> },
}

/// Orders the pair so that `b2 <= b1`, checks the hypotheses, and names the
/// argument that decides whether every quarter square is hit.
pub fn rational_route(a1: i64, b1: i64, a2: i64, b2: i64) -> Result<(RationalRoute, bool)> {
    let (a1, b1, a2, b2) = if b2 <= b1 { (a1, b1, a2, b2) } else { (a2, b2, a1, b1) };
    check_theorem_hypotheses(a1, b1, a2, b2)?;
    if is_exceptional_pair(b1, b2) {
        let c = empty_square_witness(a1, b1, a2, b2)?
            .ok_or_else(|| Error::Contradiction(format!("no empty square for exceptional ({b1}, {b2})")))?;
        return Ok((RationalRoute::Exceptional { center: (format_rational(&c.0), format_rational(&c.1)) }, false));
    }
    let g = b1.gcd(&b2);
    let route = if g == 1 {
        RationalRoute::Coprime
    } else if g == 2 {
        RationalRoute::GcdTwo
    } else if b1 == b2 {
        let cert = square_always_hit(g, a1, a2)?;
        let hit = cert.always_hit;
        return Ok((RationalRoute::EqualDenominators { certificate: Box::new(cert) }, hit));
    } else if b1 == 2 * g {
        RationalRoute::TwiceG
    } else {
        RationalRoute::ThriceG
    };
    Ok((route, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_g_uses_table() {
        let c = square_always_hit(7, 1, 3).unwrap();
        assert!(c.always_hit);
        assert_eq!(c.branch, HitBranch::SmallTable);
        for a in [(2, 3), (3, 2), (4, 1)] {
            let c = square_always_hit(7, a.0, a.1).unwrap();
            assert_eq!(c.table_representative, Some((1, 3)));
        }
    }

    #[test]
    fn g5_is_not_always_hit() {
        let c = square_always_hit(5, 2, 1).unwrap();
        assert!(!c.always_hit);
        assert!(c.empty_corner.is_some());
    }

    #[test]
    fn g11_branch_agrees_with_exhaustion() {
        let c = square_always_hit(11, 2, 1).unwrap();
        assert!(c.always_hit);
        assert!(matches!(c.branch, HitBranch::Bender | HitBranch::ShortVector));
        assert!(exhaustive_hit(11, 2, 1).unwrap());
    }

    #[test]
    fn routes() {
        assert_eq!(rational_route(1, 5, 1, 3).unwrap(), (RationalRoute::Coprime, true));
        assert!(!rational_route(1, 5, 2, 5).unwrap().1);
        assert!(rational_route(1, 10, 2, 5).unwrap().1);
        assert!(rational_route(2, 5, 1, 5).is_ok());
    }
}
