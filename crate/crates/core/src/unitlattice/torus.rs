//! Finite sets of multiples on the unit torus and empty open squares among them.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::lattice::LgLattice;
use crate::error::{Error, Result};
use crate::exactnum::rational::{frac, int, rat, Rational};

/// Points `(u1/b1, u2/b2)` of the torus, stored by numerators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusPointSet {
    pub b1: i64,
    pub b2: i64,
    pub points: BTreeSet<(i64, i64)>,
}

/// The open square of half-side `half_side` around `center`, taken modulo 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSquare {
    pub center: (Rational, Rational),
    pub half_side: Rational,
}

impl TorusSquare {
    pub fn new(center: (Rational, Rational), half_side: Rational) -> Result<Self> {
        if !half_side.is_positive() {
            return Err(Error::InvalidInput("square half-side must be positive".into()));
        }
        Ok(TorusSquare { center, half_side })
    }

    /// Quarter squares `S_{1/4}(c)`.
    pub fn quarter(c1: Rational, c2: Rational) -> Self {
        TorusSquare { center: (c1, c2), half_side: rat(1, 4) }
    }

    /// Whether `x` (mod 1) lies in the open square.
    pub fn contains(&self, x: &(Rational, Rational)) -> bool {
        within(&x.0, &self.center.0, &self.half_side) && within(&x.1, &self.center.1, &self.half_side)
    }
}

/// Distance from `x` to `c` modulo 1 is below `h`.
fn within(x: &Rational, c: &Rational, h: &Rational) -> bool {
    if h * int(2) >= int(1) {
        // the open interval covers the circle except possibly one point
        let d = frac(&(x - c + h));
        return !(h * int(2) == int(1) && d.is_zero());
    }
    let d = frac(&(x - c));
    &d < h || d > int(1) - h
}

impl TorusPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn coords(&self, p: (i64, i64)) -> (Rational, Rational) {
        (rat(p.0, self.b1), rat(p.1, self.b2))
    }

    pub fn iter_coords(&self) -> impl Iterator<Item = (Rational, Rational)> + '_ {
        self.points.iter().map(|&p| self.coords(p))
    }

    /// Whether the open square contains none of the points.
    pub fn square_is_empty(&self, sq: &TorusSquare) -> bool {
        self.iter_coords().all(|x| !sq.contains(&x))
    }
}

fn check_fraction(a: i64, b: i64) -> Result<()> {
    if b < 1 || a.gcd(&b) != 1 {
        return Err(Error::Hypothesis(format!("{a}/{b} is not a reduced fraction")));
    }
    Ok(())
}

/// `{ n (a1/b1, a2/b2) mod 1 : n >= 0 }`, by iterating until the orbit closes.
pub fn multiples_mod1(a1: i64, b1: i64, a2: i64, b2: i64) -> Result<TorusPointSet> {
    check_fraction(a1, b1)?;
    check_fraction(a2, b2)?;
    let mut points = BTreeSet::new();
    let mut p = (0i64, 0i64);
    loop {
        if !points.insert(p) {
            break;
        }
        p = ((p.0 + a1).rem_euclid(b1), (p.1 + a2).rem_euclid(b2));
    }
    Ok(TorusPointSet { b1, b2, points })
}

/// The same set read off the lattice `L_g(a1, a2)` with `g = gcd(b1, b2)`.
pub fn multiples_via_lattice(a1: i64, b1: i64, a2: i64, b2: i64) -> Result<TorusPointSet> {
    check_fraction(a1, b1)?;
    check_fraction(a2, b2)?;
    let g = b1.gcd(&b2);
    let l = LgLattice::new(g, a1, a2)?;
    let mut points = BTreeSet::new();
    for u1 in 0..b1 {
        for u2 in 0..b2 {
            if l.contains((u1, u2)) {
                points.insert((u1, u2));
            }
        }
    }
    Ok(TorusPointSet { b1, b2, points })
}

/// The `u` with `0 <= u < lcm(moduli)` solving `u = r_i (mod m_i)` for all `i`,
/// or `None` when the congruences are incompatible.
pub fn crt_solve(residues: &[i64], moduli: &[i64]) -> Option<i64> {
    assert_eq!(residues.len(), moduli.len(), "residue and modulus lists differ in length");
    assert!(!moduli.is_empty() && moduli.iter().all(|&m| m > 0), "moduli must be positive");
    let mut x: i128 = 0;
    let mut m: i128 = 1;
    for (&r, &mi) in residues.iter().zip(moduli) {
        let (r, mi) = (r as i128, mi as i128);
        let e = m.extended_gcd(&mi);
        let g = e.gcd;
        if (r - x).rem_euclid(g) != 0 {
            return None;
        }
        let l = m / g * mi;
        // x + m * t with t = (r - x)/g * inv(m/g) mod mi/g
        let t = ((r - x) / g % (mi / g) * e.x).rem_euclid(mi / g);
        x = (x + m * t).rem_euclid(l);
        m = l;
    }
    i64::try_from(x).ok()
}

/// `s(x1, x2) = (1 - x1 mod 1, x2)`.
pub fn apply_s(ps: &TorusPointSet) -> TorusPointSet {
    TorusPointSet { b1: ps.b1, b2: ps.b2, points: ps.points.iter().map(|&(u1, u2)| ((-u1).rem_euclid(ps.b1), u2)).collect() }
}

/// `tau(x1, x2) = (x2, x1)`; the denominators swap with the coordinates.
pub fn apply_tau(ps: &TorusPointSet) -> TorusPointSet {
    TorusPointSet { b1: ps.b2, b2: ps.b1, points: ps.points.iter().map(|&(u1, u2)| (u2, u1)).collect() }
}

/// Counts `k` in the cyclic open window `(i, i + len/2)` modulo `len`.
fn window_counts(marks: &[bool]) -> Vec<bool> {
    let len = marks.len() as i64;
    // open window (i, i + len/2): indices i+1 ..= ceil(len/2) - 1 + i
    let top = (len + 1) / 2 - 1;
    (0..len)
        .map(|i| (1..=top).all(|d| !marks[((i + d) % len) as usize]))
        .collect()
}

/// All empty critical placements `(i, j)`: the open square with lower-left
/// corner `(i/b1, j/b2)` and side `1/2` misses every point.
fn empty_placements(ps: &TorusPointSet) -> Vec<(i64, i64)> {
    let (b1, b2) = (ps.b1, ps.b2);
    let mut rows = vec![vec![false; b1 as usize]; b2 as usize];
    for &(u1, u2) in &ps.points {
        rows[u2 as usize][u1 as usize] = true;
    }
    let top2 = (b2 + 1) / 2 - 1;
    let mut out = Vec::new();
    for j in 0..b2 {
        let mut xs = vec![false; b1 as usize];
        for d in 1..=top2 {
            for (x, &hit) in xs.iter_mut().zip(&rows[((j + d) % b2) as usize]) {
                *x |= hit;
            }
        }
        for (i, free) in window_counts(&xs).into_iter().enumerate() {
            if free {
                out.push((i as i64, j));
            }
        }
    }
    out
}

/// A centre `c` whose open quarter square avoids every multiple
/// `n (a1/b1, a2/b2) mod 1`, or `None` if every such square is hit.
///
/// An empty open square can be slid left and down until its left and bottom
/// edges rest on point coordinates, so only the placements with lower-left
/// corner `(i/b1, j/b2)` are examined. The returned centre is the
/// lexicographically smallest reduced centre among empty placements.
pub fn empty_square_witness(a1: i64, b1: i64, a2: i64, b2: i64) -> Result<Option<(Rational, Rational)>> {
    check_theorem_hypotheses(a1, b1, a2, b2)?;
    let ps = multiples_mod1(a1, b1, a2, b2)?;
    Ok(empty_square_center(&ps))
}

/// Critical-placement search on an arbitrary point set with denominators `b1, b2`.
pub fn empty_square_center(ps: &TorusPointSet) -> Option<(Rational, Rational)> {
    empty_placements(ps)
        .into_iter()
        .map(|(i, j)| (frac(&(rat(i, ps.b1) + rat(1, 4))), frac(&(rat(j, ps.b2) + rat(1, 4)))))
        .min()
}

pub fn check_theorem_hypotheses(a1: i64, b1: i64, a2: i64, b2: i64) -> Result<()> {
    if !(2 <= b2 && b2 <= b1) {
        return Err(Error::Hypothesis(format!("need 2 <= b2 <= b1, got ({b1}, {b2})")));
    }
    if !(1 <= a1 && a1 < b1 && 1 <= a2 && a2 < b2) {
        return Err(Error::Hypothesis("need 1 <= a_k < b_k".into()));
    }
    check_fraction(a1, b1)?;
    check_fraction(a2, b2)?;
    let x = rat(a1, b1);
    let y = rat(a2, b2);
    if frac(&(&x - &y)).is_zero() || frac(&(&x + &y)).is_zero() {
        return Err(Error::Hypothesis(format!("{a1}/{b1} = +-{a2}/{b2} mod 1")));
    }
    Ok(())
}

/// Denominator pairs admitting an empty quarter square.
pub fn is_exceptional_pair(b1: i64, b2: i64) -> bool {
    matches!((b1, b2), (5, 5) | (6, 3) | (8, 4)) || b2 == 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        assert_eq!(multiples_mod1(1, 5, 1, 2).unwrap().len(), 10);
        assert_eq!(multiples_mod1(7, 10, 1, 5).unwrap().len(), 10);
        let z = multiples_mod1(0, 1, 0, 1).unwrap();
        assert_eq!(z.points.into_iter().collect::<Vec<_>>(), vec![(0, 0)]);
        for (a1, b1, a2, b2) in [(1, 5, 1, 2), (7, 10, 1, 5), (3, 8, 1, 4), (5, 12, 7, 18)] {
            assert_eq!(multiples_mod1(a1, b1, a2, b2).unwrap(), multiples_via_lattice(a1, b1, a2, b2).unwrap());
        }
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt_solve(&[1, 3], &[6, 4]), Some(7));
        assert_eq!(crt_solve(&[0, 1], &[2, 4]), None);
        assert_eq!(crt_solve(&[5], &[7]), Some(5));
        assert_eq!(crt_solve(&[-1, 2], &[4, 3]), Some(11));
    }

    #[test]
    fn witnesses() {
        let c = empty_square_witness(1, 5, 1, 2).unwrap().unwrap();
        let ps = multiples_mod1(1, 5, 1, 2).unwrap();
        assert!(ps.square_is_empty(&TorusSquare::quarter(c.0, c.1)));
        assert!(ps.square_is_empty(&TorusSquare::quarter(int(0), rat(1, 4))));
        let ps = multiples_mod1(1, 6, 2, 3).unwrap();
        assert!(ps.square_is_empty(&TorusSquare::quarter(rat(1, 12), rat(1, 3))));
        assert_eq!(empty_square_witness(2, 7, 1, 7).unwrap(), None);
        assert!(empty_square_witness(1, 5, 4, 5).is_err());
    }

    #[test]
    fn symmetries() {
        let ps = multiples_mod1(1, 5, 2, 5).unwrap();
        assert_eq!(apply_s(&ps), multiples_mod1(4, 5, 2, 5).unwrap());
        assert_eq!(apply_s(&apply_s(&ps)), ps);
        let q = multiples_mod1(3, 8, 1, 4).unwrap();
        assert_eq!(apply_tau(&apply_tau(&q)), q);
    }
}
