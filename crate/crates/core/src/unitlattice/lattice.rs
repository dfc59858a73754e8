//! The lattices `L_g(a1, a2) = { u : a1 u2 = a2 u1 (mod g) }` and the
//! geometry-of-numbers bounds applied to them.

use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::interval::Interval;
use crate::exactnum::rational::{int, rat, Rational};
use crate::exactnum::trig;

pub type Vec2 = (i64, i64);

pub fn norm_sq(v: Vec2) -> i64 {
    v.0 * v.0 + v.1 * v.1
}

pub fn det(v: Vec2, w: Vec2) -> i64 {
    v.0 * w.1 - v.1 * w.0
}

fn dot(v: Vec2, w: Vec2) -> i64 {
    v.0 * w.0 + v.1 * w.1
}

/// Modular inverse of `a` modulo `m > 0`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.rem_euclid(m).extended_gcd(&m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LgLattice {
    g: i64,
    a1: i64,
    a2: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis2 {
    pub v1: Vec2,
    pub v2: Vec2,
}

impl LatticeBasis2 {
    pub fn det(&self) -> i64 {
        det(self.v1, self.v2).abs()
    }

    /// Integer coordinates of `u` in this basis, if `u` is in the span.
    pub fn coordinates(&self, u: Vec2) -> Option<(i64, i64)> {
        let d = det(self.v1, self.v2);
        let x = det(u, self.v2);
        let y = det(self.v1, u);
        (d != 0 && x % d == 0 && y % d == 0).then(|| (x / d, y / d))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuccessiveMinima {
    /// Squared minima, exact.
    pub lambda1_sq: i64,
    pub lambda2_sq: i64,
    #[serde(skip)]
    pub lambda1: Option<Interval>,
    #[serde(skip)]
    pub lambda2: Option<Interval>,
    pub witnesses: (Vec2, Vec2),
}

impl LgLattice {
    pub fn new(g: i64, a1: i64, a2: i64) -> Result<Self> {
        if g < 1 {
            return Err(Error::Hypothesis(format!("lattice modulus {g} must be positive")));
        }
        if a1.gcd(&g) != 1 || a2.gcd(&g) != 1 {
            return Err(Error::Hypothesis(format!("({a1}, {a2}) not coprime to {g}")));
        }
        Ok(LgLattice { g, a1: a1.rem_euclid(g), a2: a2.rem_euclid(g) })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn a(&self) -> Vec2 {
        (self.a1, self.a2)
    }

    /// `k` with `L = { u : u2 = k u1 (mod g) }`.
    pub fn slope(&self) -> i64 {
        if self.g == 1 {
            return 0;
        }
        (self.a2 * mod_inverse(self.a1, self.g).unwrap()).rem_euclid(self.g)
    }

    pub fn contains(&self, u: Vec2) -> bool {
        (self.a1 as i128 * u.1 as i128 - self.a2 as i128 * u.0 as i128).rem_euclid(self.g as i128) == 0
    }

    /// Lagrange-Gauss reduced basis: `v1` shortest, `v2` shortest completing it.
    pub fn reduced_basis(&self) -> LatticeBasis2 {
        gauss_reduce((1, self.slope()), (0, self.g))
    }

    /// Minima of the unit disk by enumeration of all lattice vectors up to the
    /// norm of the reduced basis.
    pub fn successive_minima(&self) -> SuccessiveMinima {
        let b = self.reduced_basis();
        let bound = norm_sq(b.v1).max(norm_sq(b.v2));
        let r = (bound as f64).sqrt().ceil() as i64 + 1;
        let mut vs: Vec<Vec2> = Vec::new();
        for u1 in 0..=r {
            for u2 in -r..=r {
                let v = (u1, u2);
                if (u1 == 0 && u2 <= 0) || norm_sq(v) > bound || !self.contains(v) {
                    continue;
                }
                vs.push(v);
            }
        }
        vs.sort_by_key(|&v| (norm_sq(v), std::cmp::Reverse(v.0), std::cmp::Reverse(v.1)));
        let w1 = vs[0];
        let w2 = *vs.iter().find(|&&v| det(w1, v) != 0).expect("two independent vectors");
        let (l1, l2) = (norm_sq(w1), norm_sq(w2));
        SuccessiveMinima {
            lambda1_sq: l1,
            lambda2_sq: l2,
            lambda1: Some(Interval::point(int(l1)).sqrt(64)),
            lambda2: Some(Interval::point(int(l2)).sqrt(64)),
            witnesses: (w1, w2),
        }
    }

    /// `lambda1 lambda2 pi <= 4 g`, compared on squares.
    pub fn minkowski_check(&self) -> bool {
        let m = self.successive_minima();
        minkowski_holds(m.lambda1_sq, m.lambda2_sq, self.g)
    }
}

pub(crate) fn minkowski_holds(l1_sq: i64, l2_sq: i64, g: i64) -> bool {
    let lhs = int(l1_sq) * int(l2_sq);
    let rhs = int(16) * int(g) * int(g);
    let mut pi = trig::pi_fixed();
    loop {
        let p2 = pi.square();
        if &lhs * p2.hi() <= rhs {
            return true;
        }
        if &lhs * p2.lo() > rhs {
            return false;
        }
        let bits = (pi.width().denom().bits() as u32).max(64) * 2;
        pi = trig::pi(bits);
    }
}

pub fn gauss_reduce(mut v1: Vec2, mut v2: Vec2) -> LatticeBasis2 {
    if norm_sq(v1) > norm_sq(v2) {
        std::mem::swap(&mut v1, &mut v2);
    }
    loop {
        let n1 = norm_sq(v1);
        // nearest integer to <v1, v2> / |v1|^2
        let m = Integer::div_floor(&(2 * dot(v1, v2) + n1), &(2 * n1));
        v2 = (v2.0 - m * v1.0, v2.1 - m * v1.1);
        if norm_sq(v2) >= n1 {
            break;
        }
        std::mem::swap(&mut v1, &mut v2);
    }
    LatticeBasis2 { v1: canonical_sign(v1), v2: canonical_sign(v2) }
}

/// `v` or `-v`, whichever has its first nonzero entry positive.
pub fn canonical_sign(v: Vec2) -> Vec2 {
    if v.0 < 0 || (v.0 == 0 && v.1 < 0) {
        (-v.0, -v.1)
    } else {
        v
    }
}

/// Bender's sufficient condition for a square of the given side: the ratio of
/// area to perimeter, `side/4`, exceeds `max(|v1|, |v2| sin t)/2` where `t` is
/// the angle between the basis vectors.
pub fn bender_guarantee(basis: &LatticeBasis2, side: &Rational) -> bool {
    if !side.is_positive() {
        return false;
    }
    let n1 = int(norm_sq(basis.v1));
    let d = int(basis.det());
    let s2 = side * side;
    // side/4 > |v1|/2 and side/4 > |det|/(2 |v1|), on squares
    s2 > &n1 * int(4) && &s2 * &n1 > &d * &d * int(4)
}

fn check_short_vector(r: Vec2, det: i64) -> Result<()> {
    if r.0.gcd(&r.1) != 1 || !(0 < r.1 && r.1 <= r.0) || det <= 0 {
        return Err(Error::Hypothesis(format!(
            "short vector {r:?} must satisfy gcd = 1 and 0 < r2 <= r1, determinant {det} positive"
        )));
    }
    Ok(())
}

/// `max(r1, (det + 2 r1 r2)/(r1 + r2))`: an open axis-parallel square with a
/// longer side contains a point of every lattice of this determinant through `r`.
pub fn short_vector_bound(r: Vec2, det: i64) -> Result<Rational> {
    check_short_vector(r, det)?;
    let (r1, r2) = r;
    Ok(int(r1).max(rat(det + 2 * r1 * r2, r1 + r2)))
}

/// Smallest possible longest horizontal chord cut from a square of side `A` by
/// a family of parallel lines of slope `s = r2/r1` with vertical spacing
/// `D = det/r1`.
pub fn minimax_horizontal_gap(r: Vec2, det: i64, a: &Rational) -> Result<Rational> {
    check_short_vector(r, det)?;
    if !a.is_positive() {
        return Err(Error::Hypothesis("square side must be positive".into()));
    }
    let s = rat(r.1, r.0);
    let d = rat(det, r.0);
    let one = int(1);
    let low = a * (&one - &s);
    let high = a * (&one + &s);
    Ok(if d <= low {
        a.clone()
    } else if d <= high {
        (high - d) / (s * int(2))
    } else {
        int(0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        let l = LgLattice::new(5, 2, 1).unwrap();
        assert!(l.contains((2, 1)));
        assert!(l.contains((1, 3)));
        assert!(!l.contains((1, 1)));
        assert!(LgLattice::new(6, 2, 1).is_err());
    }

    #[test]
    fn reduced_bases() {
        let b = LgLattice::new(5, 2, 1).unwrap().reduced_basis();
        assert_eq!(b.det(), 5);
        assert_eq!(norm_sq(b.v1), 5);
        assert_eq!(norm_sq(b.v2), 5);
        let b = LgLattice::new(7, 1, 3).unwrap().reduced_basis();
        assert_eq!(b.det(), 7);
        assert_eq!(norm_sq(b.v1), 5);
        let b = LgLattice::new(1, 0, 0).unwrap().reduced_basis();
        assert_eq!(b.det(), 1);
    }

    #[test]
    fn minima_examples() {
        let m = LgLattice::new(5, 2, 1).unwrap().successive_minima();
        assert_eq!((m.lambda1_sq, m.lambda2_sq), (5, 5));
        assert_eq!(m.witnesses, ((2, 1), (1, -2)));
        let m = LgLattice::new(1, 0, 0).unwrap().successive_minima();
        assert_eq!((m.lambda1_sq, m.lambda2_sq), (1, 1));
        let m = LgLattice::new(9, 2, 1).unwrap().successive_minima();
        assert_eq!(m.lambda1_sq, 5);
        assert_eq!(m.witnesses.0, (2, 1));
    }

    #[test]
    fn bender_and_bounds() {
        let z2 = LatticeBasis2 { v1: (1, 0), v2: (0, 1) };
        assert!(bender_guarantee(&z2, &int(5)));
        assert!(!bender_guarantee(&z2, &int(1)));
        assert_eq!(short_vector_bound((2, 1), 10).unwrap(), rat(14, 3));
        assert_eq!(short_vector_bound((1, 1), 2).unwrap(), int(2));
        assert_eq!(short_vector_bound((4, 3), 10).unwrap(), rat(34, 7));
        assert!(short_vector_bound((2, 2), 10).is_err());
        assert_eq!(minimax_horizontal_gap((2, 1), 1, &int(1)).unwrap(), int(1));
        assert_eq!(minimax_horizontal_gap((3, 1), 30, &int(2)).unwrap(), int(0));
    }
}
